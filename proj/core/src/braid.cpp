#include "tpcells/braid.hpp"

#include <deque>
#include <map>

namespace tpcells {

FactoredWord factored_word(const PositiveSubexpression& pse) {
  const std::size_t arity = pse.complement().size();
  FactoredWord fw;
  std::size_t var = 0;
  for (int r = 1; r <= static_cast<int>(pse.word.size()); ++r) {
    Letter l;
    l.node = pse.word[r - 1];
    l.dot = pse.contains(r);
    if (!l.dot) l.coord = RationalFn(LaurentPoly::variable(arity, var++));
    fw.push_back(std::move(l));
  }
  return fw;
}

Word letters(const FactoredWord& fw) {
  Word out;
  for (const auto& l : fw) out.push_back(l.node);
  return out;
}

std::vector<int> dot_positions(const FactoredWord& fw) {
  std::vector<int> out;
  for (std::size_t r = 0; r < fw.size(); ++r)
    if (fw[r].dot) out.push_back(static_cast<int>(r) + 1);
  return out;
}

namespace {

void check_fit(const CartanPtr& cartan, const Word& word,
               const BraidMove& move) {
  const std::size_t span = move.kind == BraidMove::Kind::Braid ? 3 : 2;
  if (move.pos < 1 || move.pos + span - 1 > word.size()) {
    throw InputError("move position out of range");
  }
  const int i = word[move.pos - 1];
  const int j = word[move.pos];
  if (move.kind == BraidMove::Kind::Commutation) {
    if (i == j || cartan->entry(i, j) != 0) {
      throw InputError("letters at the move position do not commute");
    }
    return;
  }
  if (!cartan->simply_laced()) {
    throw InputError("braid moves are only implemented for simply-laced types");
  }
  if (word[move.pos + 1] != i || cartan->entry(i, j) != -1) {
    throw InputError("letters at the move position are not of the form iji");
  }
}

Letter y(int node, RationalFn c) { return Letter{node, false, std::move(c)}; }
Letter s(int node) { return Letter{node, true, RationalFn()}; }

}  // namespace

Word apply_move(const CartanPtr& cartan, const Word& word,
                const BraidMove& move) {
  check_fit(cartan, word, move);
  Word out = word;
  const std::size_t p = move.pos - 1;
  if (move.kind == BraidMove::Kind::Commutation) {
    std::swap(out[p], out[p + 1]);
  } else {
    const int i = word[p];
    const int j = word[p + 1];
    out[p] = j;
    out[p + 1] = i;
    out[p + 2] = j;
  }
  return out;
}

FactoredWord apply_move(const CartanPtr& cartan, const FactoredWord& fw,
                        const BraidMove& move) {
  check_fit(cartan, letters(fw), move);
  FactoredWord out = fw;
  const std::size_t p = move.pos - 1;
  if (move.kind == BraidMove::Kind::Commutation) {
    std::swap(out[p], out[p + 1]);
    return out;
  }
  const Letter& l1 = fw[p];
  const Letter& l2 = fw[p + 1];
  const Letter& l3 = fw[p + 2];
  const int i = l1.node;
  const int j = l2.node;
  std::vector<Letter> rep;
  if (!l1.dot && !l2.dot && !l3.dot) {
    const RationalFn& a = l1.coord;
    const RationalFn& b = l2.coord;
    const RationalFn& c = l3.coord;
    const RationalFn sum = a + c;
    rep = {y(j, b * c / sum), y(i, sum), y(j, a * b / sum)};
  } else if (!l1.dot && l2.dot && !l3.dot) {
    // y_i(a) s_j y_i(b) = y_j(b/a) y_i(a) s_j
    rep = {y(j, l3.coord / l1.coord), y(i, l1.coord), s(j)};
  } else if (!l1.dot && !l2.dot && l3.dot) {
    // y_i(c) y_j(a) s_i = y_j(a) s_i y_j(ac)
    rep = {y(j, l2.coord), s(i), y(j, l2.coord * l1.coord)};
  } else if (l1.dot && l2.dot && !l3.dot) {
    // s_i s_j y_i(a) = y_j(a) s_i s_j
    rep = {y(j, l3.coord), s(i), s(j)};
  } else if (!l1.dot && l2.dot && l3.dot) {
    // y_i(a) s_j s_i = s_j s_i y_j(a)
    rep = {s(j), s(i), y(j, l1.coord)};
  } else if (l1.dot && l2.dot && l3.dot) {
    rep = {s(j), s(i), s(j)};
  } else {
    throw InputError("no coordinate change for this s_dot/y pattern");
  }
  for (std::size_t k = 0; k < 3; ++k) out[p + k] = std::move(rep[k]);
  return out;
}

RationalFnMatrix factored_product(std::size_t n, const FactoredWord& fw) {
  RationalFnMatrix g = RationalFnMatrix::identity(n);
  for (const auto& l : fw) {
    g = l.dot ? g * s_dot<RationalFn>(n, l.node)
              : g * y_generator<RationalFn>(n, l.node, l.coord);
  }
  return g;
}

bool verify_move_identity(std::size_t n, const FactoredWord& before,
                          const FactoredWord& after, bool exact) {
  const RationalFnMatrix lhs = factored_product(n, before);
  if (exact) return lhs == factored_product(n, after);
  // after^{-1}: reversed factors, y_i(m)^{-1} = y_i(-m), s_i^{-1} = s_i^T
  RationalFnMatrix inv = RationalFnMatrix::identity(n);
  for (auto it = after.rbegin(); it != after.rend(); ++it) {
    inv = it->dot ? inv * s_dot<RationalFn>(n, it->node).transpose()
                  : inv * y_generator<RationalFn>(n, it->node, -it->coord);
  }
  const RationalFnMatrix u = inv * lhs;
  for (std::size_t r = 0; r < n; ++r) {
    if (!(u(r, r) == RationalFn(1))) return false;
    for (std::size_t c = 0; c < r; ++c)
      if (!u(r, c).is_zero()) return false;
  }
  return true;
}

std::vector<RationalFn> transported_segre(std::size_t n,
                                          const FactoredWord& fw) {
  return segre_coordinates(factored_product(n, fw));
}

std::vector<BraidMove> word_path(const CartanPtr& cartan, const Word& w1,
                                 const Word& w2) {
  if (!cartan->simply_laced()) {
    throw InputError("word_path: braid moves need a simply-laced type");
  }
  if (!is_reduced(cartan, w1) || !is_reduced(cartan, w2)) {
    throw InputError("word_path: words must be reduced");
  }
  if (!(WeylElement::from_word(cartan, w1) ==
        WeylElement::from_word(cartan, w2))) {
    throw InputError("word_path: words represent different elements");
  }
  std::map<Word, std::pair<Word, BraidMove>> parent;
  std::deque<Word> queue{w1};
  parent.emplace(w1, std::make_pair(Word{}, BraidMove{}));
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    if (cur == w2) break;
    for (std::size_t p = 1; p + 1 <= cur.size(); ++p) {
      for (auto kind : {BraidMove::Kind::Commutation, BraidMove::Kind::Braid}) {
        const BraidMove m{p, kind};
        Word next;
        try {
          next = apply_move(cartan, cur, m);
        } catch (const InputError&) {
          continue;
        }
        if (parent.emplace(next, std::make_pair(cur, m)).second) {
          queue.push_back(std::move(next));
        }
      }
    }
  }
  std::vector<BraidMove> path;
  for (Word cur = w2; cur != w1;) {
    const auto& [prev, move] = parent.at(cur);
    path.push_back(move);
    cur = prev;
  }
  return {path.rbegin(), path.rend()};
}

}  // namespace tpcells
