#pragma once

#include <nlohmann/json.hpp>

#include "tpcells/braid.hpp"
#include "tpcells/fold.hpp"
#include "tpcells/poset.hpp"
#include "tpcells/toric.hpp"

namespace tpcells {

using Json = nlohmann::ordered_json;

Json to_json(const CartanData& c);
CartanPtr cartan_from_json(const Json& j);

/// A reduced word.
Json to_json(const WeylElement& w);
WeylElement weyl_from_json(const CartanPtr& cartan, const Json& j);

Json to_json(const PositiveSubexpression& pse);
PositiveSubexpression subexpression_from_json(const CartanPtr& cartan,
                                              const Json& j);

/// "p/q" (or "p" for integers).
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
Json to_json(const RationalFn& f);

Json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);
Json to_json(const PolyMatrix& m);

Json to_json(const Flag& f);

Json to_json(const CertificateReport& r);
Json to_json(const ExponentSet& es);
Json to_json(const LatticePolytope& p);
Json to_json(const BoundaryScanReport& r);

Json to_json(const BraidMove& m);
BraidMove move_from_json(const Json& j);

Json to_json(const FoldingData& fd);
FoldingData folding_from_json(const Json& j);

Json to_json(const FullFlagPoset& p);
Json to_json(const std::vector<ParabolicCell>& cells, const CellPoset& poset);
Json to_json(const EulerianReport& r);

}  // namespace tpcells
