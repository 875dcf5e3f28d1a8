#include <doctest.h>

#include <random>

#include "tpcells/error.hpp"
#include "tpcells/embed.hpp"

using namespace tpcells;

namespace {

using Vec = std::vector<Rational>;

bool proportional(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

PolyMatrix big_cell_a2() {
  const auto a2 = CartanData::make('A', 2);
  return cell_representative(positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2)))
      .matrix;
}

}  // namespace

TEST_CASE("flag_minors examples") {
  PolyMatrix g = PolyMatrix::identity(2);
  g(1, 0) = LaurentPoly::variable(1, 0);
  CHECK(flag_minors(g, 1) == std::vector<LaurentPoly>{LaurentPoly(1), LaurentPoly::variable(1, 0)});
  const auto t1 = LaurentPoly::variable(3, 0), t2 = LaurentPoly::variable(3, 1);
  CHECK(flag_minors(big_cell_a2(), 2) == std::vector<LaurentPoly>{LaurentPoly(1), t2, t1 * t2});
  const auto id = RationalMatrix::identity(4);
  const auto m2 = flag_minors(id, 2);
  for (std::size_t k = 0; k < m2.size(); ++k) CHECK(m2[k] == (k == 0 ? 1 : 0));
  CHECK_THROWS_AS(flag_minors(id, 4), InputError);
}

TEST_CASE("segre_coordinates examples") {
  PolyMatrix g = PolyMatrix::identity(2);
  g(1, 0) = LaurentPoly::variable(1, 0);
  CHECK(segre_coordinates(g) == std::vector<LaurentPoly>{LaurentPoly(1), LaurentPoly::variable(1, 0)});
  const auto big = big_cell_a2();
  const auto s = segre_coordinates(big);
  REQUIRE(s.size() == 9);
  const auto l1 = flag_minors(big, 1), l2 = flag_minors(big, 2);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(s[3 * a + b] == l1[a] * l2[b]);
  const auto shape = segre_shape(3);
  CHECK(shape.size() == 9);
  CHECK(shape.label(shape.encode({1, 2})) == "{2}|{2,3}");
  const auto a3 = CartanData::make('A', 3);
  const auto w0 = cell_representative(positive_subexpression(a3, WeylElement::longest(a3).word(),
                                                             WeylElement::longest(a3)));
  int nonzero = 0;
  for (const auto& p : segre_coordinates(w0.matrix)) {
    if (p.is_zero()) continue;
    ++nonzero;
    CHECK((p == LaurentPoly(1) || p == LaurentPoly(-1)));
  }
  CHECK(nonzero == 1);
}

TEST_CASE("certify_positive examples") {
  const auto a2 = CartanData::make('A', 2);
  const auto r = certify_positive(positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2)));
  CHECK(r.pass);
  CHECK(r.n_coords == 9);
  CHECK(r.zero_coords.empty());
  CHECK(certify_positive(positive_subexpression(a2, {1, 2, 1}, WeylElement::simple(a2, 1))).pass);
  for (const auto& w : enumerate(a2)) {
    const auto rep = certify_positive(positive_subexpression(a2, w.word(), w));
    CHECK(rep.pass);
    CHECK(rep.n_coords - rep.zero_coords.size() == 1);
  }
}

TEST_CASE("certificate negative control") {
  const auto t1 = LaurentPoly::variable(2, 0), t2 = LaurentPoly::variable(2, 1);
  const auto r = certify_coordinates({LaurentPoly::constant(2, 1), t1 - t2, LaurentPoly(std::size_t{2})});
  CHECK_FALSE(r.pass);
  CHECK(r.failing_coords == std::vector<std::size_t>{1});
  CHECK(r.zero_coords == std::vector<std::size_t>{2});
  const auto flipped = certify_coordinates({-t1, -t2});
  CHECK(flipped.pass);
  CHECK(flipped.sign == -1);
}

TEST_CASE("certified coordinates are strictly positive on the open cell") {
  std::mt19937_64 rng(31);
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const auto W = enumerate(c);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto pse = positive_subexpression(c, w.word(), v);
        const auto rep = certify_positive(pse);
        REQUIRE(rep.pass);
        const auto t = random_positive(rng, pse.complement().size());
        const auto numeric = segre_coordinates(cell_sample(pse, t));
        for (std::size_t j = 0; j < rep.coords.size(); ++j) {
          if (rep.coords[j].is_zero()) {
            CHECK(numeric[j] == 0);
          } else {
            CHECK(rep.coords[j].evaluate(t) > 0);
            CHECK(rep.coords[j].evaluate(t) == rep.sign * numeric[j]);
          }
        }
      }
  }
}

TEST_CASE("recover_flag") {
  {
    const Flag f = recover_flag({1, 1}, 2);
    RationalMatrix b(2, 2);
    b(0, 0) = 1;
    b(1, 0) = 1;
    b(1, 1) = 1;
    CHECK(f == Flag::full(b));
  }
  CHECK(recover_flag({0, 1}, 2) == Flag::full(generator(GeneratorKind::SDot, 2, 1)));
  {
    const auto a2 = CartanData::make('A', 2);
    const auto pse = positive_subexpression(a2, {1, 2, 1}, WeylElement::identity(a2));
    const Vec ones(3, Rational(1));
    const auto g = cell_sample(pse, ones);
    CHECK(recover_flag(segre_coordinates(g), 3) == Flag::full(g));
  }
  CHECK_THROWS_AS(recover_flag({0, 0}, 2), CheckFailure);
  CHECK_THROWS_AS(recover_flag({1, -1}, 2), CheckFailure);
  CHECK_THROWS_AS(recover_flag({1, 1, 1}, 2), InputError);
  // not a product of a level-1 and a level-2 vector
  CHECK_THROWS_AS(recover_flag({1, 0, 0, 0, 1, 0, 0, 0, 0}, 3), CheckFailure);
}

TEST_CASE("distinct parameters give distinct points") {
  std::mt19937_64 rng(37);
  for (int r : {2, 3}) {
    const auto c = CartanData::make('A', r);
    const auto W = enumerate(c);
    for (const auto& w : W)
      for (const auto& v : W) {
        if (!bruhat_leq(v, w) || v == w) continue;
        const auto pse = positive_subexpression(c, w.word(), v);
        const std::size_t k = pse.complement().size();
        auto t1 = random_positive(rng, k);
        auto t2 = t1;
        t2[rng() % k] += Rational(1, 7);
        CHECK_FALSE(proportional(segre_coordinates(cell_sample(pse, t1)),
                                 segre_coordinates(cell_sample(pse, t2))));
      }
  }
}
