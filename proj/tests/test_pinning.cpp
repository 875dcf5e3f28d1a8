#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tpcells/error.hpp"
#include "tpcells/embed.hpp"

using namespace tpcells;

namespace {

oracle::QMatrix to_q(const RationalMatrix& m) {
  oracle::QMatrix out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

WeylElement elt(const CartanPtr& c, const Word& w) { return WeylElement::from_word(c, w); }

}  // namespace

TEST_CASE("generators") {
  const std::vector<Rational> t{Rational(3, 2)};
  const auto y = generator(GeneratorKind::Y, 2, 1, t);
  CHECK(y(0, 0) == 1);
  CHECK(y(1, 0) == Rational(3, 2));
  CHECK(y(0, 1) == 0);
  const std::vector<Rational> one{1}, minus{-1};
  const auto sdot = generator(GeneratorKind::X, 2, 1, minus) *
                    generator(GeneratorKind::Y, 2, 1, one) *
                    generator(GeneratorKind::X, 2, 1, minus);
  CHECK(sdot == from_rows({{0, -1}, {1, 0}}));
  CHECK(generator(GeneratorKind::SDot, 2, 1) == sdot);
  CHECK(generator(GeneratorKind::Y, 3, 2, one) == from_rows({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));
  const std::vector<Rational> torus{2, Rational(1, 2)};
  CHECK(determinant(generator(GeneratorKind::Torus, 2, 1, torus)) == 1);
  CHECK_THROWS_AS(generator(GeneratorKind::Y, 3, 3, one), InputError);
  CHECK_THROWS_AS(generator(GeneratorKind::Y, 3, 0, one), InputError);
  const std::vector<Rational> bad{2, 1};
  CHECK_THROWS_AS(generator(GeneratorKind::Torus, 2, 1, bad), InputError);
}

TEST_CASE("cell_representative examples") {
  const auto a1 = CartanData::make('A', 1);
  {
    const auto p = cell_representative(positive_subexpression(a1, {1}, WeylElement::identity(a1)));
    CHECK(p.matrix(1, 0) == LaurentPoly::variable(1, 0));
    CHECK(p.matrix(0, 1).is_zero());
  }
  const auto a2 = CartanData::make('A', 2);
  {
    const auto p = cell_representative(positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2)));
    const auto t1 = LaurentPoly::variable(3, 0), t2 = LaurentPoly::variable(3, 1),
               t3 = LaurentPoly::variable(3, 2);
    CHECK(p.names() == std::vector<std::string>{"t1", "t2", "t3"});
    CHECK(p.matrix(1, 0) == t1 + t3);
    CHECK(p.matrix(2, 0) == t2 * t3);
    CHECK(p.matrix(2, 1) == t2);
    CHECK(p.matrix(0, 0) == LaurentPoly(1));
    CHECK(p.matrix(0, 1).is_zero());
    CHECK(p.matrix(0, 2).is_zero());
    CHECK(p.matrix(1, 2).is_zero());
  }
  {
    const auto p = cell_representative(positive_subexpression(a2, {1, 2, 1}, WeylElement::longest(a2)));
    CHECK(p.var_positions.empty());
    const auto s = generator(GeneratorKind::SDot, 3, 1) * generator(GeneratorKind::SDot, 3, 2) *
                   generator(GeneratorKind::SDot, 3, 1);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(p.matrix(i, j) == LaurentPoly(s(i, j).get_num()));
  }
  CHECK_THROWS_AS(cell_representative(positive_subexpression(
                      CartanData::make('B', 2), {1, 2}, WeylElement::identity(CartanData::make('B', 2)))),
                  InputError);
}

TEST_CASE("tnn_minor_check") {
  CHECK(tnn_minor_check(RationalMatrix::identity(3)));
  const std::vector<Rational> one{1}, minus{-1};
  const auto g = generator(GeneratorKind::Y, 3, 1, one) * generator(GeneratorKind::Y, 3, 2, one) *
                 generator(GeneratorKind::Y, 3, 1, one);
  CHECK(tnn_minor_check(g));
  CHECK(oracle::all_minors_nonnegative(to_q(g)));
  CHECK_FALSE(tnn_minor_check(generator(GeneratorKind::X, 2, 1, minus)));
}

TEST_CASE("random y-products are totally nonnegative; oracle agrees") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> node(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    RationalMatrix g = RationalMatrix::identity(4);
    for (int k = 0; k < 6; ++k) {
      g = g * generator(GeneratorKind::Y, 4, node(rng), random_positive(rng, 1));
    }
    CHECK(tnn_minor_check(g));
    CHECK(oracle::all_minors_nonnegative(to_q(g)));
    // a single negative parameter breaks it
    const std::vector<Rational> neg{Rational(-1, 3)};
    const auto h = g * generator(GeneratorKind::Y, 4, 2, neg);
    CHECK(tnn_minor_check(h) == oracle::all_minors_nonnegative(to_q(h)));
  }
}

TEST_CASE("bruhat_pair anchors") {
  const auto a1 = CartanData::make('A', 1);
  const std::vector<Rational> t{Rational(2, 3)};
  {
    const auto bp = bruhat_pair(Flag::full(generator(GeneratorKind::Y, 2, 1, t)), a1);
    CHECK(bp.v.is_identity());
    CHECK(bp.w == elt(a1, {1}));
  }
  {
    const auto bp = bruhat_pair(Flag::full(generator(GeneratorKind::SDot, 2, 1)), a1);
    CHECK(bp.v == elt(a1, {1}));
    CHECK(bp.w == elt(a1, {1}));
  }
  const auto a2 = CartanData::make('A', 2);
  const auto bp = bruhat_pair(Flag::standard(3), a2);
  CHECK(bp.v.is_identity());
  CHECK(bp.w.is_identity());
}

TEST_CASE("cell membership against the rank-number oracle") {
  std::mt19937_64 rng(23);
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const auto W = enumerate(c);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto pse = positive_subexpression(c, w.word(), v);
        for (int s = 0; s < 3; ++s) {
          const auto g = cell_sample(pse, random_positive(rng, pse.complement().size()));
          const auto bp = bruhat_pair(Flag::full(g), c);
          CHECK(bp.v == v);
          CHECK(bp.w == w);
          const auto [ov, ow] = oracle::bruhat_cells(to_q(g));
          CHECK(ov == oracle::perm_of_word(r + 1, v.word()));
          CHECK(ow == oracle::perm_of_word(r + 1, w.word()));
        }
      }
  }
}

TEST_CASE("relative_position") {
  const auto a2 = CartanData::make('A', 2);
  const Flag E = Flag::standard(3);
  std::mt19937_64 rng(2);
  const auto g = cell_sample(positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2)),
                             random_positive(rng, 3));
  CHECK(relative_position(Flag::full(g), Flag::full(g), a2).is_identity());
  CHECK(relative_position(E, Flag::opposite(3), a2) == WeylElement::longest(a2));
  CHECK(relative_position(E, Flag::full(generator(GeneratorKind::SDot, 3, 1)), a2) == elt(a2, {1}));
  CHECK_THROWS_AS(relative_position(E, Flag::standard(4), a2), InputError);
}

TEST_CASE("refine_toward examples") {
  const Flag E = Flag::standard(3);
  std::mt19937_64 rng(4);
  const auto a2 = CartanData::make('A', 2);
  const auto g = cell_sample(positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2)),
                             random_positive(rng, 3));
  const Flag f = Flag::full(g);
  CHECK(refine_toward(f, E) == f);
  const Flag empty = f.projected({});
  CHECK(refine_toward(empty, E) == E);
  // line span(0,1,1): the refinement adds span((0,1,1),(1,0,0))
  RationalMatrix b(3, 3);
  b(1, 0) = 1;
  b(2, 0) = 1;
  b(0, 1) = 1;
  b(2, 2) = 1;
  const Flag line = Flag::partial(b, {1});
  const Flag r = refine_toward(line, E);
  CHECK(r.projected({1}) == line);
  RationalMatrix expect(3, 3);
  expect(1, 0) = 1;
  expect(2, 0) = 1;
  expect(0, 1) = 1;
  expect(1, 2) = 1;
  CHECK(r == Flag::full(expect));
}

TEST_CASE("refine_toward is Bruhat-minimal among column-order refinements") {
  std::mt19937_64 rng(29);
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const int n = r + 1;
    const auto top = positive_subexpression(c, WeylElement::longest(c).word(),
                                            WeylElement::identity(c));
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> dims;
      for (int d = 1; d < n; ++d)
        if (mask >> (d - 1) & 1) dims.push_back(d);
      for (int s = 0; s < 3; ++s) {
        const auto g = cell_sample(top, random_positive(rng, top.complement().size()));
        const Flag p = Flag::full(g).projected(dims);
        for (const Flag& ref : {Flag::standard(n), Flag::opposite(n)}) {
          const Flag best = refine_toward(p, ref);
          CHECK(best.projected(dims) == p);
          const auto pos = relative_position(ref, best, c);
          // candidates: permute columns within each gap of p
          std::vector<int> cuts{0};
          cuts.insert(cuts.end(), dims.begin(), dims.end());
          cuts.push_back(n);
          std::vector<int> order(n);
          for (int k = 0; k < n; ++k) order[k] = k;
          std::vector<std::vector<int>> orders{order};
          for (std::size_t gap = 0; gap + 1 < cuts.size(); ++gap) {
            std::vector<std::vector<int>> next;
            for (auto o : orders) {
              std::sort(o.begin() + cuts[gap], o.begin() + cuts[gap + 1]);
              do {
                next.push_back(o);
              } while (std::next_permutation(o.begin() + cuts[gap], o.begin() + cuts[gap + 1]));
            }
            orders = next;
          }
          for (const auto& o : orders) {
            RationalMatrix m(n, n);
            for (int col = 0; col < n; ++col)
              for (int row = 0; row < n; ++row) m(row, col) = g(row, o[col]);
            const Flag cand = Flag::full(m);
            CHECK(bruhat_leq(pos, relative_position(ref, cand, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("flag errors") {
  RationalMatrix singular(2, 2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(Flag::full(singular), InputError);
  CHECK_THROWS_AS(Flag::standard(3).subspace(5), InputError);
  CHECK_THROWS_AS(Flag::standard(3).projected({1}).projected({2}), InputError);
  const auto a2 = CartanData::make('A', 2);
  CHECK_THROWS_AS(bruhat_pair(Flag::standard(3).projected({1}), a2), InputError);
}
