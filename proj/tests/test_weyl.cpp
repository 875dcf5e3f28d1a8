#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tpcells/error.hpp"
#include "tpcells/weyl.hpp"

using namespace tpcells;

namespace {

WeylElement elt(const CartanPtr& c, const Word& w) {
  return WeylElement::from_word(c, w);
}

}  // namespace

TEST_CASE("Cartan data") {
  const auto a3 = CartanData::make('A', 3);
  CHECK(a3->entry(1, 2) == -1);
  CHECK(a3->entry(1, 3) == 0);
  CHECK(a3->entry(2, 2) == 2);
  const auto c2 = CartanData::make('C', 2);
  CHECK(c2->entry(1, 2) * c2->entry(2, 1) == 2);
  CHECK_FALSE(c2->simply_laced());
  CHECK(CartanData::parse("B3")->label() == "B3");
  CHECK_THROWS_AS(CartanData::make('Q', 2), InputError);
  CHECK_THROWS_AS(CartanData::parse("A"), InputError);
  CHECK_THROWS_AS(CartanData::parse("A2x"), InputError);
}

TEST_CASE("multiply") {
  const auto a2 = CartanData::make('A', 2);
  const auto e = WeylElement::identity(a2);
  const auto w = elt(a2, {1, 2});
  CHECK(e * w == w);
  CHECK((elt(a2, {1}) * elt(a2, {1})).is_identity());
  const auto w0 = elt(a2, {1, 2}) * elt(a2, {1});
  CHECK(w0 == elt(a2, {2, 1, 2}));
  CHECK(w0 == WeylElement::longest(a2));
  CHECK(w0.word() == Word{1, 2, 1});
  CHECK_THROWS_AS(elt(a2, {1}) * elt(CartanData::make('A', 3), {1}), InputError);
}

TEST_CASE("multiply matches the permutation model on A3") {
  const auto a3 = CartanData::make('A', 3);
  const auto W = enumerate(a3);
  REQUIRE(W.size() == 24);
  for (const auto& a : W)
    for (const auto& b : W) {
      const auto pa = oracle::perm_of_word(4, a.word());
      const auto pb = oracle::perm_of_word(4, b.word());
      CHECK(oracle::perm_of_word(4, (a * b).word()) == oracle::compose(pa, pb));
      CHECK((a * b).length() <= a.length() + b.length());
    }
}

TEST_CASE("bruhat_leq examples") {
  const auto a2 = CartanData::make('A', 2);
  for (const auto& w : enumerate(a2)) CHECK(bruhat_leq(WeylElement::identity(a2), w));
  CHECK_FALSE(bruhat_leq(elt(a2, {1}), elt(a2, {2})));
  CHECK(bruhat_leq(elt(a2, {1}), elt(a2, {1, 2})));
}

TEST_CASE("bruhat_leq agrees with the rank criterion on A3") {
  const auto a3 = CartanData::make('A', 3);
  const auto W = enumerate(a3);
  for (const auto& v : W)
    for (const auto& w : W) {
      CHECK(bruhat_leq(v, w) == oracle::bruhat_leq(oracle::perm_of_word(4, v.word()),
                                                   oracle::perm_of_word(4, w.word())));
    }
}

TEST_CASE("lengths, w0 and the permutation model") {
  for (auto [t, r] : {std::pair{'A', 3}, std::pair{'C', 2}, std::pair{'B', 3},
                      std::pair{'D', 4}, std::pair{'G', 2}}) {
    const auto c = CartanData::make(t, r);
    const auto W = enumerate(c);
    const auto w0 = WeylElement::longest(c);
    for (const auto& w : W) {
      CHECK(bruhat_leq(w, w0));
      CHECK((w0 * w).length() == w0.length() - w.length());
      CHECK(is_reduced(c, w.word()));
    }
  }
  const auto a3 = CartanData::make('A', 3);
  for (const auto& w : enumerate(a3)) {
    const auto p = oracle::perm_of_word(4, w.word());
    CHECK(oracle::inversions(p) == w.length());
    CHECK(to_permutation(w) == p);
    CHECK(from_permutation(a3, p) == w);
  }
}

TEST_CASE("group orders") {
  CHECK(enumerate(CartanData::make('A', 1)).size() == 2);
  CHECK(enumerate(CartanData::make('A', 2)).size() == 6);
  CHECK(enumerate(CartanData::make('B', 3)).size() == 48);
  CHECK(enumerate(CartanData::make('C', 3)).size() == 48);
  CHECK(enumerate(CartanData::make('D', 4)).size() == 192);
  CHECK(enumerate(CartanData::make('G', 2)).size() == 12);
  CHECK(enumerate(CartanData::make('F', 4)).size() == 1152);
  CHECK_THROWS_AS(enumerate(CartanData::make('A', 4), Quotient::Full, {}, 100),
                  SizeGuardError);
}

TEST_CASE("A1 enumeration") {
  const auto a1 = CartanData::make('A', 1);
  const auto W = enumerate(a1);
  REQUIRE(W.size() == 2);
  CHECK(W[0].is_identity());
  CHECK(W[1].word() == Word{1});
}

TEST_CASE("parabolic_decompose examples") {
  const auto a2 = CartanData::make('A', 2);
  const auto w0 = WeylElement::longest(a2);
  {
    const auto d = parabolic_decompose(w0, {});
    CHECK(d.min_rep == w0);
    CHECK(d.u.is_identity());
  }
  {
    const auto d = parabolic_decompose(w0, {2});
    CHECK(d.min_rep == elt(a2, {2, 1}));
    CHECK(d.u == elt(a2, {2}));
  }
  {
    const auto d = parabolic_decompose(WeylElement::identity(a2), {2});
    CHECK(d.min_rep.is_identity());
    CHECK(d.u.is_identity());
  }
  CHECK_THROWS_AS(parabolic_decompose(w0, {3}), InputError);
}

TEST_CASE("parabolic decomposition by exhaustive coset search") {
  for (auto [t, r] : {std::pair{'A', 2}, std::pair{'A', 3}, std::pair{'C', 2}}) {
    const auto c = CartanData::make(t, r);
    const auto W = enumerate(c);
    const auto nodes = c->nodes();
    for (unsigned mask = 0; mask < (1u << nodes.size()); ++mask) {
      NodeSet J;
      for (std::size_t k = 0; k < nodes.size(); ++k)
        if (mask >> k & 1) J.push_back(nodes[k]);
      const auto WJ = enumerate(c, Quotient::Parabolic, J);
      const auto mins = enumerate(c, Quotient::MinReps, J);
      CHECK(mins.size() * WJ.size() == W.size());
      for (const auto& w : W) {
        const auto d = parabolic_decompose(w, J);
        CHECK(d.min_rep * d.u == w);
        CHECK(w.length() == d.min_rep.length() + d.u.length());
        int found = 0;
        for (const auto& m : mins)
          for (const auto& u : WJ) found += (m * u == w);
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("quotient enumeration examples") {
  const auto a2 = CartanData::make('A', 2);
  std::set<Word> minreps, maxreps;
  for (const auto& w : enumerate(a2, Quotient::MinReps, {2})) minreps.insert(w.word());
  for (const auto& w : enumerate(a2, Quotient::MaxReps, {2})) maxreps.insert(w.word());
  CHECK(minreps == std::set<Word>{{}, {1}, {2, 1}});
  CHECK(maxreps == std::set<Word>{{2}, {1, 2}, {1, 2, 1}});
  const auto wJ = WeylElement::longest(a2, {2});
  for (const auto& x : enumerate(a2, Quotient::MinReps, {2})) {
    CHECK(maxreps.count((x * wJ).word()) == 1);
  }
}

TEST_CASE("reduced words") {
  const auto a3 = CartanData::make('A', 3);
  const auto w0 = WeylElement::longest(a3);
  const auto words = reduced_words(w0);
  CHECK(words.size() == 16);
  for (const auto& w : words) CHECK(elt(a3, w) == w0);
  CHECK(words.front() == w0.word());
  const auto a2 = CartanData::make('A', 2);
  CHECK(reduced_words(WeylElement::longest(a2)) ==
        std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
}

TEST_CASE("word parsing") {
  CHECK(parse_word("e").empty());
  CHECK(parse_word("1,2,1") == Word{1, 2, 1});
  CHECK(parse_word("[3, 1]") == Word{3, 1});
  CHECK(parse_node_set("3,1,3") == NodeSet{1, 3});
  CHECK_THROWS_AS(parse_word("1,x"), InputError);
  CHECK(format_word({1, 2}) == "1,2");
  const auto a2 = CartanData::make('A', 2);
  CHECK_THROWS_AS(elt(a2, {3}), InputError);
  CHECK_FALSE(is_reduced(a2, {1, 1}));
}
