#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tpcells/error.hpp"
#include "tpcells/toric.hpp"

using namespace tpcells;

namespace {

using Vec = std::vector<Rational>;

bool proportional(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

PositiveSubexpression cell(const CartanPtr& c, const Word& w, const Word& v) {
  return positive_subexpression(c, w, WeylElement::from_word(c, v));
}

}  // namespace

TEST_CASE("hull examples") {
  const auto seg = LatticePolytope::hull({{0}, {1}});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.facets().size() == 2);
  const auto pt = LatticePolytope::hull({{2, 3}});
  CHECK(pt.dim() == 0);
  CHECK(pt.faces().size() == 1);
  CHECK_THROWS_AS(LatticePolytope::hull({}), InputError);
  CHECK_THROWS_AS(LatticePolytope::hull({{0}, {1, 2}}), InputError);
}

TEST_CASE("hull of a square with an interior point") {
  const auto sq = LatticePolytope::hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.contains({1, 1}));
  CHECK_FALSE(sq.contains({3, 1}));
  // faces: 4 vertices, 4 edges, the square
  CHECK(sq.faces().size() == 9);
  for (const auto& f : sq.facet_points()) {
    std::vector<Exponent> pts;
    for (auto i : f) pts.push_back(sq.points()[i]);
    CHECK(oracle::affine_dim(pts) == 1);
  }
}

TEST_CASE("lower-dimensional hull in higher ambient space") {
  const auto tri = LatticePolytope::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(tri.dim() == 2);
  CHECK(tri.equations().size() == 1);
  CHECK(tri.facets().size() == 3);
  CHECK_FALSE(tri.contains({0, 0, 0}));
  CHECK(tri.faces().size() == 7);
}

TEST_CASE("hull facets agree with a brute-force oracle on random point sets") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coord(-2, 2), count(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Exponent> pts;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) pts.push_back({coord(rng), coord(rng), coord(rng)});
    const auto P = LatticePolytope::hull(pts);
    CHECK(P.dim() == oracle::affine_dim(pts));
    for (const auto& p : pts) CHECK(P.contains(p));
    for (std::size_t f = 0; f < P.facets().size(); ++f) {
      std::vector<Exponent> on;
      for (auto i : P.facet_points()[f]) on.push_back(P.points()[i]);
      CHECK(oracle::affine_dim(on) == P.dim() - 1);
    }
    // a vertex is not in the hull of the other points: its removal changes it
    for (auto v : P.vertices()) {
      std::vector<Exponent> rest;
      for (std::size_t i = 0; i < P.points().size(); ++i)
        if (i != v && P.points()[i] != P.points()[v]) rest.push_back(P.points()[i]);
      if (rest.empty()) continue;
      CHECK_FALSE(LatticePolytope::hull(rest).contains(P.points()[v]));
    }
  }
}

TEST_CASE("build_exponent_set examples") {
  {
    const std::vector<LaurentPoly> ps{LaurentPoly::constant(1, 1), LaurentPoly::variable(1, 0)};
    const auto es = build_exponent_set(ps);
    CHECK(es.points == std::vector<Exponent>{{0}, {1}});
    CHECK(es.coeffs[0] == std::vector<Integer>{1, 0});
    CHECK(es.coeffs[1] == std::vector<Integer>{0, 1});
    CHECK(es.columns_nonzero());
  }
  {
    const auto a2 = CartanData::make('A', 2);
    const auto es = build_exponent_set(certify_positive(cell(a2, {1, 2, 1}, {})).coords);
    const std::set<Exponent> S(es.points.begin(), es.points.end());
    CHECK(S == std::set<Exponent>{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0},
                                  {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {0, 2, 1}, {1, 2, 1}});
    CHECK(es.hull().dim() == 3);
  }
  {
    const std::vector<LaurentPoly> ps{LaurentPoly::constant(2, 1)};
    const auto es = build_exponent_set(ps);
    CHECK(es.points == std::vector<Exponent>{{0, 0}});
  }
  const std::vector<LaurentPoly> zeros{LaurentPoly(std::size_t{1})};
  CHECK_THROWS_AS(build_exponent_set(zeros), InputError);
}

TEST_CASE("glue_eval examples") {
  const auto a1 = CartanData::make('A', 1);
  const auto pse = cell(a1, {1}, {});
  const auto es = build_exponent_set(certify_positive(pse).coords);
  const Rational t(5, 3);
  CHECK(glue_eval(es, Vec{1, t}) == Vec{1, t});
  {
    const auto img = glue_eval(es, Vec{0, 1});
    CHECK(img == Vec{0, 1});
    const auto bp = bruhat_pair(recover_flag(img, 2), a1);
    CHECK(bp.v == WeylElement::simple(a1, 1));
    CHECK(bp.w == WeylElement::simple(a1, 1));
  }
  {
    const auto bp = bruhat_pair(recover_flag(glue_eval(es, Vec{1, 0}), 2), a1);
    CHECK(bp.v.is_identity());
    CHECK(bp.w.is_identity());
  }
  CHECK_THROWS_AS(glue_eval(es, Vec{0, 0}), InputError);
  CHECK_THROWS_AS(glue_eval(es, Vec{-1, 1}), InputError);
  CHECK_THROWS_AS(glue_eval(es, Vec{1}), InputError);
}

TEST_CASE("interior consistency of the glueing map") {
  std::mt19937_64 rng(43);
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const auto W = enumerate(c);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto pse = positive_subexpression(c, w.word(), v);
        const auto es = build_exponent_set(certify_positive(pse).coords);
        std::vector<std::size_t> all(es.points.size());
        for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
        const auto t = random_positive(rng, es.arity);
        const auto img = glue_eval(es, face_point(es, all, t));
        CHECK(proportional(img, segre_coordinates(cell_sample(pse, t))));
      }
  }
}

TEST_CASE("toric dimension and column invariant on every A2 and A3 cell") {
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const auto W = enumerate(c);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto es = build_exponent_set(
            certify_positive(positive_subexpression(c, w.word(), v)).coords);
        CHECK(es.columns_nonzero());
        CHECK(es.hull().dim() == w.length() - v.length());
        CHECK(oracle::affine_dim(es.points) == w.length() - v.length());
      }
  }
}

TEST_CASE("boundary_scan examples") {
  const auto a1 = CartanData::make('A', 1);
  {
    const auto rep = boundary_scan(cell(a1, {1}, {}));
    CHECK(rep.pass);
    REQUIRE(rep.hits.size() == 2);
    std::set<std::pair<Word, Word>> cells;
    for (const auto& h : rep.hits) {
      CHECK(h.identified);
      cells.insert({h.v.word(), h.w.word()});
    }
    CHECK(cells == std::set<std::pair<Word, Word>>{{{}, {}}, {{1}, {1}}});
    CHECK(rep.cells_hit == 2);
    CHECK(rep.closure_cells == 2);
  }
  const auto a2 = CartanData::make('A', 2);
  {
    const auto rep = boundary_scan(cell(a2, {1, 2, 1}, {}));
    CHECK(rep.pass);
    CHECK(rep.polytope_dim == 3);
    for (const auto& h : rep.hits) {
      CHECK(h.identified);
      CHECK(h.sandwiched);
      CHECK(h.sample_independent);
      CHECK_FALSE((h.v.is_identity() && h.w == WeylElement::longest(a2)));
    }
  }
  {
    const auto rep = boundary_scan(cell(a2, {1, 2}, {1, 2}));
    CHECK(rep.hits.empty());
    CHECK(rep.pass);
  }
}
