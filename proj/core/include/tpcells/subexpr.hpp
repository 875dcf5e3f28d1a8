#pragma once

#include <vector>

#include "tpcells/weyl.hpp"

namespace tpcells {

/// The positive subexpression v_+ for v inside a reduced word for w.
/// Positions are 1-based and sorted.
struct PositiveSubexpression {
  CartanPtr cartan;
  Word word;
  std::vector<int> v_plus;
  WeylElement v;

  WeylElement w() const { return WeylElement::from_word(cartan, word); }
  /// Positions not in v_plus, ascending.
  std::vector<int> complement() const;
  bool contains(int position) const;
};

/// Right-to-left greedy scan; throws InputError when v is not <= w or the
/// word is not reduced.
PositiveSubexpression positive_subexpression(const CartanPtr& cartan,
                                             const Word& word,
                                             const WeylElement& v);

/// Checks product, reducedness and the ascent condition for every prefix.
bool is_positive_subexpression(const PositiveSubexpression& candidate);

}  // namespace tpcells
