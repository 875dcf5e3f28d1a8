#include "tpcells/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "tpcells/error.hpp"

namespace tpcells {

namespace {

std::vector<std::vector<int>> standard_matrix(char type, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (type) {
    case 'A':
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      a[rank - 2][rank - 1] = -1;
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      a[rank - 1][rank - 2] = -1;
      break;
    case 'D':
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      link(rank - 2, rank);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < rank; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(3, 4);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw InputError(std::string("unknown Cartan type ") + type);
  }
  return a;
}

void check_rank(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) {
    throw InputError("invalid Cartan type/rank " + std::string(1, type) +
                     std::to_string(rank));
  }
}

using Key = std::vector<std::int64_t>;

// s_j(lambda) = lambda - lambda_j * alpha_j
void reflect(const CartanData& c, int j, Key& key) {
  const std::int64_t coeff = key[j - 1];
  if (coeff == 0) return;
  for (int i = 1; i <= c.rank(); ++i) key[i - 1] -= coeff * c.entry(i, j);
}

Key rho_key(const CartanData& c) { return Key(c.rank(), 1); }

Word normal_form(const CartanData& c, Key key) {
  Word word;
  for (;;) {
    auto neg = std::find_if(key.begin(), key.end(),
                            [](std::int64_t x) { return x < 0; });
    if (neg == key.end()) break;
    const int i = static_cast<int>(neg - key.begin()) + 1;
    word.push_back(i);
    reflect(c, i, key);
  }
  return word;
}

void require_same(const WeylElement& a, const WeylElement& b) {
  if (!a.cartan() || !b.cartan() || !(*a.cartan() == *b.cartan())) {
    throw InputError("Weyl elements have mismatched Cartan data");
  }
}

bool bruhat_leq_keys(const CartanData& c, Key v, Key w) {
  for (;;) {
    auto neg = std::find_if(w.begin(), w.end(),
                            [](std::int64_t x) { return x < 0; });
    if (neg == w.end()) {
      return std::none_of(v.begin(), v.end(),
                          [](std::int64_t x) { return x < 0; });
    }
    const int s = static_cast<int>(neg - w.begin()) + 1;
    if (v[s - 1] < 0) reflect(c, s, v);
    reflect(c, s, w);
  }
}

}  // namespace

CartanData::CartanData(char type, int rank,
                       std::vector<std::vector<int>> matrix)
    : type_(type), rank_(rank), matrix_(std::move(matrix)) {}

CartanPtr CartanData::make(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  check_rank(type, rank);
  return CartanPtr(new CartanData(type, rank, standard_matrix(type, rank)));
}

CartanPtr CartanData::parse(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0]))) {
    throw InputError("cannot parse Cartan type '" + label + "'");
  }
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw InputError("trailing characters");
  } catch (const std::exception&) {
    throw InputError("cannot parse Cartan type '" + label + "'");
  }
  return make(label[0], rank);
}

CartanPtr CartanData::from_matrix(std::vector<std::vector<int>> matrix,
                                  char type) {
  const int rank = static_cast<int>(matrix.size());
  if (rank == 0) throw InputError("empty Cartan matrix");
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[i].size()) != rank) {
      throw InputError("Cartan matrix must be square");
    }
    for (int j = 0; j < rank; ++j) {
      if (i == j && matrix[i][j] != 2) {
        throw InputError("Cartan matrix must have 2 on the diagonal");
      }
      if (i != j && matrix[i][j] > 0) {
        throw InputError("Cartan matrix off-diagonal entries must be <= 0");
      }
      if (i != j && (matrix[i][j] == 0) != (matrix[j][i] == 0)) {
        throw InputError("Cartan matrix zero pattern must be symmetric");
      }
    }
  }
  return CartanPtr(new CartanData(type, rank, std::move(matrix)));
}

NodeSet CartanData::nodes() const {
  NodeSet out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = i + 1;
  return out;
}

std::string CartanData::label() const {
  return std::string(1, type_) + std::to_string(rank_);
}

bool CartanData::simply_laced() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (i != j && matrix_[i][j] < -1) return false;
  return true;
}

WeylElement::WeylElement(CartanPtr cartan, Key key)
    : cartan_(std::move(cartan)), key_(std::move(key)) {
  word_ = normal_form(*cartan_, key_);
}

WeylElement WeylElement::identity(CartanPtr cartan) {
  Key k = rho_key(*cartan);
  return WeylElement(std::move(cartan), std::move(k));
}

WeylElement WeylElement::simple(CartanPtr cartan, int i) {
  return from_word(std::move(cartan), Word{i});
}

WeylElement WeylElement::from_word(CartanPtr cartan, const Word& word) {
  if (!cartan) throw InputError("null Cartan data");
  Key key = rho_key(*cartan);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > cartan->rank()) {
      throw InputError("node index " + std::to_string(*it) +
                       " out of range for " + cartan->label());
    }
    reflect(*cartan, *it, key);
  }
  return WeylElement(std::move(cartan), std::move(key));
}

WeylElement WeylElement::longest(CartanPtr cartan) {
  return longest(cartan, cartan->nodes());
}

WeylElement WeylElement::longest(CartanPtr cartan, const NodeSet& J) {
  Key key = rho_key(*cartan);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : J) {
      if (j < 1 || j > cartan->rank()) throw InputError("malformed J");
      if (key[j - 1] > 0) {
        reflect(*cartan, j, key);
        changed = true;
      }
    }
  }
  return WeylElement(std::move(cartan), std::move(key));
}

bool WeylElement::has_right_descent(int i) const {
  return right_mul(i).length() < length();
}

WeylElement WeylElement::inverse() const {
  return from_word(cartan_, Word(word_.rbegin(), word_.rend()));
}

WeylElement WeylElement::left_mul(int i) const {
  if (i < 1 || i > cartan_->rank()) throw InputError("node out of range");
  Key k = key_;
  reflect(*cartan_, i, k);
  return WeylElement(cartan_, std::move(k));
}

WeylElement WeylElement::right_mul(int i) const {
  Word w = word_;
  w.push_back(i);
  return from_word(cartan_, w);
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string out;
  for (int i : word_) out += "s" + std::to_string(i);
  return out;
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w.key()) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  require_same(a, b);
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return WeylElement::from_word(a.cartan(), w);
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  require_same(v, w);
  if (v.length() > w.length()) return false;
  return bruhat_leq_keys(*v.cartan(), v.key(), w.key());
}

bool is_reduced(const CartanPtr& cartan, const Word& word) {
  return WeylElement::from_word(cartan, word).length() ==
         static_cast<int>(word.size());
}

ParabolicDecomposition parabolic_decompose(const WeylElement& w,
                                           const NodeSet& J) {
  for (int j : J) {
    if (j < 1 || j > w.cartan()->rank()) throw InputError("malformed J");
  }
  WeylElement min_rep = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : J) {
      if (min_rep.has_right_descent(j)) {
        min_rep = min_rep.right_mul(j);
        changed = true;
      }
    }
  }
  WeylElement u = multiply(min_rep.inverse(), w);
  return {std::move(min_rep), std::move(u)};
}

std::vector<WeylElement> enumerate(const CartanPtr& cartan, Quotient which,
                                   const NodeSet& J, std::size_t limit) {
  for (int j : J) {
    if (j < 1 || j > cartan->rank()) throw InputError("malformed J");
  }
  const NodeSet gens = which == Quotient::Parabolic ? J : cartan->nodes();
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  auto e = WeylElement::identity(cartan);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.front());
    queue.pop_front();
    for (int i : gens) {
      WeylElement next = cur.left_mul(i);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw SizeGuardError("Weyl group enumeration exceeds " +
                               std::to_string(limit) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<WeylElement> out;
  const WeylElement wJ = WeylElement::longest(cartan, J);
  for (const auto& w : seen) {
    switch (which) {
      case Quotient::Full:
      case Quotient::Parabolic:
        out.push_back(w);
        break;
      case Quotient::MinReps:
      case Quotient::MaxReps: {
        bool minimal = std::none_of(J.begin(), J.end(), [&](int j) {
          return w.has_right_descent(j);
        });
        if (minimal) {
          out.push_back(which == Quotient::MinReps ? w : multiply(w, wJ));
        }
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> reduced_words(const WeylElement& w, std::size_t limit) {
  std::vector<Word> out;
  // depth-first over left descents
  std::vector<std::pair<WeylElement, Word>> stack{{w, {}}};
  while (!stack.empty()) {
    auto [cur, prefix] = std::move(stack.back());
    stack.pop_back();
    if (cur.is_identity()) {
      out.push_back(std::move(prefix));
      if (out.size() > limit) throw SizeGuardError("too many reduced words");
      continue;
    }
    for (int i = cur.cartan()->rank(); i >= 1; --i) {
      if (cur.has_left_descent(i)) {
        Word next = prefix;
        next.push_back(i);
        stack.emplace_back(cur.left_mul(i), std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> to_permutation(const WeylElement& w) {
  if (w.cartan()->type() != 'A') {
    throw InputError("permutation model only exists in type A");
  }
  const int n = w.cartan()->rank() + 1;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  // perm = s_{i1} o ... o s_{im}: apply letters right to left to each input
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
      if (y == *it) {
        y = *it + 1;
      } else if (y == *it + 1) {
        y = *it;
      }
    }
    perm[x - 1] = y;
  }
  return perm;
}

WeylElement from_permutation(const CartanPtr& cartan,
                             const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (cartan->type() != 'A' || cartan->rank() + 1 != n) {
    throw InputError("permutation size does not match type A rank");
  }
  std::vector<int> inv(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    const int b = perm[a - 1];
    if (b < 1 || b > n || inv[b] != 0) throw InputError("not a permutation");
    inv[b] = a;
  }
  // peel left descents: s_i w < w iff w^{-1}(i) > w^{-1}(i+1)
  Word word;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (inv[i] > inv[i + 1]) {
        word.push_back(i);
        std::swap(inv[i], inv[i + 1]);
        found = true;
        break;
      }
    }
  }
  return WeylElement::from_word(cartan, word);
}

NodeSet parse_node_set(const std::string& text) {
  NodeSet out = parse_word(text);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty() || text == "e" || text == "{}" || text == "[]") return out;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '{' || ch == '}' || ch == ' ') continue;
    cleaned.push_back(ch);
  }
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("bad token");
    } catch (const std::exception&) {
      throw InputError("cannot parse word '" + text + "'");
    }
  }
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(word[k]);
  }
  return out;
}

}  // namespace tpcells
