#include "tpcells/subexpr.hpp"

#include <algorithm>

#include "tpcells/error.hpp"

namespace tpcells {

std::vector<int> PositiveSubexpression::complement() const {
  std::vector<int> out;
  for (int r = 1; r <= static_cast<int>(word.size()); ++r) {
    if (!contains(r)) out.push_back(r);
  }
  return out;
}

bool PositiveSubexpression::contains(int position) const {
  return std::binary_search(v_plus.begin(), v_plus.end(), position);
}

PositiveSubexpression positive_subexpression(const CartanPtr& cartan,
                                             const Word& word,
                                             const WeylElement& v) {
  const WeylElement w = WeylElement::from_word(cartan, word);
  if (w.length() != static_cast<int>(word.size())) {
    throw InputError("word " + format_word(word) + " is not reduced");
  }
  if (!bruhat_leq(v, w)) {
    throw InputError(v.to_string() + " is not below " + w.to_string());
  }
  std::vector<int> positions;
  WeylElement cur = v;
  for (int r = static_cast<int>(word.size()); r >= 1; --r) {
    WeylElement next = cur.right_mul(word[r - 1]);
    if (next.length() < cur.length()) {
      positions.push_back(r);
      cur = std::move(next);
    }
  }
  if (!cur.is_identity()) {
    throw CheckFailure("greedy scan did not exhaust " + v.to_string());
  }
  std::reverse(positions.begin(), positions.end());
  return {cartan, word, std::move(positions), v};
}

bool is_positive_subexpression(const PositiveSubexpression& c) {
  const int m = static_cast<int>(c.word.size());
  if (!std::is_sorted(c.v_plus.begin(), c.v_plus.end())) return false;
  if (std::adjacent_find(c.v_plus.begin(), c.v_plus.end()) != c.v_plus.end()) {
    return false;
  }
  for (int p : c.v_plus) {
    if (p < 1 || p > m) return false;
  }
  // prefix products u_l = s_{i_{j_1}} ... s_{i_{j_l}}, and for every
  // r in (j_l, j_{l+1}] the letter s_{i_r} must lengthen u_l
  WeylElement prefix = WeylElement::identity(c.cartan);
  const int k = static_cast<int>(c.v_plus.size());
  for (int l = 0; l <= k; ++l) {
    const int lo = l == 0 ? 0 : c.v_plus[l - 1];
    const int hi = l == k ? m : c.v_plus[l];
    for (int r = lo + 1; r <= hi; ++r) {
      if (prefix.right_mul(c.word[r - 1]).length() <= prefix.length()) {
        return false;
      }
    }
    if (l < k) prefix = prefix.right_mul(c.word[c.v_plus[l] - 1]);
  }
  return prefix.length() == k && prefix == c.v;
}

}  // namespace tpcells
