#pragma once

#include <cstddef>
#include <vector>

#include "tpcells/embed.hpp"

namespace tpcells {

struct BraidMove {
  enum class Kind { Commutation, Braid };
  std::size_t pos = 1;  // 1-based start of the affected letters
  Kind kind = Kind::Braid;
};

/// One factor of a cell parameterisation: s_dot_node, or y_node(coord).
struct Letter {
  int node = 1;
  bool dot = false;
  RationalFn coord;
};
using FactoredWord = std::vector<Letter>;

/// Factors of the cell representative of pse, with the variables of
/// cell_representative as coordinates.
FactoredWord factored_word(const PositiveSubexpression& pse);
Word letters(const FactoredWord& fw);
/// Positions (1-based) of the s_dot letters.
std::vector<int> dot_positions(const FactoredWord& fw);

/// Word-level move; throws InputError when the letters do not fit.
Word apply_move(const CartanPtr& cartan, const Word& word,
                const BraidMove& move);

/// Moves the factors and transports coordinates by the generator
/// identities y_i(a) y_j(b) y_i(c) = y_j(bc/(a+c)) y_i(a+c) y_j(ab/(a+c)),
/// y_i(a) s_j y_i(b) = y_j(b/a) y_i(a) s_j and s_i s_j y_i(a) =
/// y_j(a) s_i s_j (and their reverses). Simply-laced only.
FactoredWord apply_move(const CartanPtr& cartan, const FactoredWord& fw,
                        const BraidMove& move);

/// Product of the factors in SL_n over the rational-function field.
RationalFnMatrix factored_product(std::size_t n, const FactoredWord& fw);

/// before = after * u with u upper unitriangular, so both define the same
/// flag; with `exact` the two products must be equal matrices.
bool verify_move_identity(std::size_t n, const FactoredWord& before,
                          const FactoredWord& after, bool exact = false);

/// Segre coordinates of the product. Right multiplication by an upper
/// unitriangular matrix does not change left-justified minors, so factor
/// strings related by apply_move give identical vectors.
std::vector<RationalFn> transported_segre(std::size_t n,
                                          const FactoredWord& fw);

/// Shortest move sequence from w1 to w2 (breadth-first search).
std::vector<BraidMove> word_path(const CartanPtr& cartan, const Word& w1,
                                 const Word& w2);

}  // namespace tpcells
