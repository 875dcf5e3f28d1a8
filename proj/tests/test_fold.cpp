#include <doctest.h>

#include <random>

#include "tpcells/error.hpp"
#include "tpcells/fold.hpp"

using namespace tpcells;

namespace {

RationalMatrix evaluate(const PolyMatrix& m, const std::vector<Rational>& t) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(t);
  return out;
}

void folded_agrees(const FoldingData& fd) {
  const auto W = enumerate(fd.folded);
  for (const auto& w : W)
    for (const auto& v : W) {
      if (!bruhat_leq(v, w)) continue;
      const auto ex = expand_subexpression(fd, positive_subexpression(fd.folded, w.word(), v));
      CHECK(ex.w() == expand_element(fd, w));
      CHECK(ex.w().length() == static_cast<int>(ex.word.size()));
      CHECK(is_positive_subexpression(ex));
      CHECK(positive_subexpression(fd.dot, ex.word, ex.v).v_plus == ex.v_plus);
    }
}

}  // namespace

TEST_CASE("shipped foldings") {
  const auto c2 = fold_a_to_c(2);
  CHECK(c2.dot->label() == "A3");
  CHECK(c2.folded->label() == "C2");
  CHECK(c2.sigma == std::vector<int>{3, 2, 1});
  CHECK(c2.orbits == std::vector<NodeSet>{{1, 3}, {2}});
  CHECK(c2.orbit_of(3) == 1);
  CHECK(fold_a_to_c(3).folded->label() == "C3");
  CHECK(fold_d_to_b(3).folded->label() == "B3");
  CHECK_THROWS_AS(fold_a_to_c(1), InputError);
  CHECK_THROWS_AS(fold_d_to_b(2), InputError);
}

TEST_CASE("FoldingData validation") {
  const auto a3 = CartanData::make('A', 3);
  CHECK_THROWS_AS(FoldingData::make(a3, {1, 1, 3}), InputError);
  CHECK_THROWS_AS(FoldingData::make(a3, {1, 2}), InputError);
  CHECK_THROWS_AS(FoldingData::make(a3, {2, 1, 3}), InputError);  // breaks the matrix
  CHECK_THROWS_AS(FoldingData::make(CartanData::make('A', 2), {2, 1}), InputError);  // adjacent
  CHECK_THROWS_AS(FoldingData::make(CartanData::make('B', 3), {1, 2, 3}), InputError);
  // triality of D4 folds to G2
  const auto g2 = FoldingData::make(CartanData::make('D', 4), {3, 2, 4, 1});
  CHECK(g2.orbits.size() == 2);
  CHECK(enumerate(g2.folded).size() == 12);
}

TEST_CASE("expand_word examples") {
  const auto fd = fold_a_to_c(2);
  CHECK(expand_word(fd, {1}) == Word{1, 3});
  const Word big = expand_word(fd, {1, 2, 1, 2});
  CHECK(big == Word{1, 3, 2, 1, 3, 2});
  CHECK(WeylElement::from_word(fd.dot, big) == WeylElement::longest(fd.dot));
  CHECK_THROWS_AS(expand_word(fd, {1, 1}), InputError);
  const auto trivial = FoldingData::make(CartanData::make('A', 2), {1, 2});
  CHECK(expand_word(trivial, {1, 2, 1}) == Word{1, 2, 1});
}

TEST_CASE("expand_subexpression examples") {
  const auto fd = fold_a_to_c(2);
  const auto c2 = fd.folded;
  const Word w{1, 2, 1, 2};
  CHECK(expand_subexpression(fd, positive_subexpression(c2, w, WeylElement::identity(c2)))
            .v_plus.empty());
  const auto ex = expand_subexpression(
      fd, positive_subexpression(c2, w, WeylElement::simple(c2, 1)));
  CHECK(ex.v_plus == positive_subexpression(fd.dot, ex.word, ex.v).v_plus);
  const auto full = expand_subexpression(
      fd, positive_subexpression(c2, w, WeylElement::longest(c2)));
  CHECK(full.v_plus == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("folded subexpressions agree with direct computation") {
  folded_agrees(fold_a_to_c(2));
  folded_agrees(fold_a_to_c(3));
  folded_agrees(fold_d_to_b(3));
}

TEST_CASE("folded_cell_representative") {
  {
    const auto fd = FoldingData::make(CartanData::make('A', 1), {1});
    const auto pse = positive_subexpression(fd.folded, {1}, WeylElement::identity(fd.folded));
    const auto direct = positive_subexpression(fd.dot, {1}, WeylElement::identity(fd.dot));
    CHECK(folded_cell_representative(fd, pse).matrix == cell_representative(direct).matrix);
  }
  const auto fd = fold_a_to_c(2);
  const auto c2 = fd.folded;
  {
    const auto pse = positive_subexpression(c2, {1, 2, 1, 2}, WeylElement::identity(c2));
    const auto p = folded_cell_representative(fd, pse);
    CHECK(p.names().size() == 4);
    CHECK(p.matrix.rows() == 4);
    std::mt19937_64 rng(1);
    CHECK(determinant(evaluate(p.matrix, random_positive(rng, 4))) == 1);
  }
  {
    const auto pse = positive_subexpression(c2, {1, 2, 1, 2}, WeylElement::longest(c2));
    const auto p = folded_cell_representative(fd, pse);
    CHECK(p.var_positions.empty());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(p.matrix(i, j).is_constant());
  }
  const auto b3 = fold_d_to_b(3);
  CHECK_THROWS_AS(folded_cell_representative(
                      b3, positive_subexpression(b3.folded, {1}, WeylElement::identity(b3.folded))),
                  InputError);
}

TEST_CASE("folded certificates and fixed points of the flip") {
  std::mt19937_64 rng(47);
  for (int n : {2, 3}) {
    const auto fd = fold_a_to_c(n);
    CHECK(flip_matches_sigma(fd));
    const auto W = enumerate(fd.folded);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto pse = positive_subexpression(fd.folded, w.word(), v);
        if (n == 2) CHECK(certify_folded(fd, pse).pass);
        const auto p = folded_cell_representative(fd, pse);
        const auto g = evaluate(p.matrix, random_positive(rng, p.var_positions.size()));
        CHECK(flip_automorphism(g) == g);
      }
  }
}
