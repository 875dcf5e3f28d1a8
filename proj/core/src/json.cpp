#include "tpcells/json.hpp"

namespace tpcells {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json cell_json(const WeylElement& v, const WeylElement& w) {
  return Json{{"v", to_json(v)}, {"w", to_json(w)}};
}

Json covers_json(const CellPoset& p) {
  Json out = Json::array();
  for (const auto& [a, b] : p.covers()) out.push_back({a, b});
  return out;
}

}  // namespace

Json to_json(const CartanData& c) {
  return Json{{"type", std::string(1, c.type())}, {"rank", c.rank()}};
}

CartanPtr cartan_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type.size() != 1) throw InputError("Cartan type must be one letter");
  return CartanData::make(type[0], j.at("rank").get<int>());
}

Json to_json(const WeylElement& w) { return w.word(); }

WeylElement weyl_from_json(const CartanPtr& cartan, const Json& j) {
  return WeylElement::from_word(cartan, j.get<Word>());
}

Json to_json(const PositiveSubexpression& pse) {
  return Json{{"word", pse.word}, {"v_plus", pse.v_plus}, {"v", to_json(pse.v)}};
}

PositiveSubexpression subexpression_from_json(const CartanPtr& cartan,
                                              const Json& j) {
  PositiveSubexpression pse;
  pse.cartan = cartan;
  pse.word = j.at("word").get<Word>();
  pse.v_plus = j.at("v_plus").get<std::vector<int>>();
  pse.v = weyl_from_json(cartan, j.at("v"));
  return pse;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Exponent exp = e.empty() ? Exponent(p.arity(), 0) : e;
    terms.push_back(Json{{"exp", exp}, {"coeff", c.get_str()}});
  }
  return Json{{"arity", p.arity()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p(j.at("arity").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const Integer c(t.at("coeff").get<std::string>());
    p.add_term(t.at("exp").get<Exponent>(), c);
  }
  return p;
}

Json to_json(const RationalFn& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  const std::size_t r = j.size();
  const std::size_t c = r ? j[0].size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t a = 0; a < r; ++a) {
    if (j[a].size() != c) throw InputError("ragged matrix");
    for (std::size_t b = 0; b < c; ++b) {
      m(a, b) = parse_rational(j[a][b].get<std::string>());
    }
  }
  return m;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Flag& f) {
  return Json{{"dims", f.dims()}, {"basis", to_json(f.basis())}};
}

Json to_json(const CertificateReport& r) {
  Json j{{"cell", cell_json(r.v, r.w)},
         {"pass", r.pass},
         {"n_coords", r.n_coords},
         {"zero_coords", r.zero_coords},
         {"word", r.word},
         {"sign", r.sign},
         {"failing_coords", r.failing_coords}};
  return j;
}

Json to_json(const ExponentSet& es) {
  Json table = Json::array();
  for (const auto& row : es.coeffs) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(integer_json(c));
    table.push_back(std::move(r));
  }
  return Json{{"arity", es.arity},
              {"points", es.points},
              {"coeffs", table},
              {"zero_rows", es.zero_rows}};
}

Json to_json(const LatticePolytope& p) {
  auto facet_json = [](const std::vector<Facet>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) {
      Json normal = Json::array();
      for (const auto& x : f.normal) normal.push_back(integer_json(x));
      out.push_back(Json{{"normal", normal}, {"offset", integer_json(f.offset)}});
    }
    return out;
  };
  Json vertices = Json::array();
  for (auto v : p.vertices()) vertices.push_back(p.points()[v]);
  return Json{{"dim", p.dim()},
              {"vertices", vertices},
              {"facets", facet_json(p.facets())},
              {"equations", facet_json(p.equations())}};
}

Json to_json(const BoundaryScanReport& r) {
  Json faces = Json::array();
  for (const auto& h : r.hits) {
    Json f{{"points", h.face.points}, {"dim", h.face.dim}};
    if (h.identified) {
      f["cell"] = cell_json(h.v, h.w);
      f["sandwiched"] = h.sandwiched;
      f["sample_independent"] = h.sample_independent;
    } else {
      f["error"] = h.error;
    }
    faces.push_back(std::move(f));
  }
  return Json{{"cell", cell_json(r.v, r.w)},
              {"polytope_dim", r.polytope_dim},
              {"faces", faces},
              {"coverage",
               {{"cells_hit", r.cells_hit}, {"closure_cells", r.closure_cells}}},
              {"pass", r.pass}};
}

Json to_json(const BraidMove& m) {
  return Json{{"pos", m.pos},
              {"kind", m.kind == BraidMove::Kind::Braid ? "braid" : "comm"}};
}

BraidMove move_from_json(const Json& j) {
  BraidMove m;
  m.pos = j.at("pos").get<std::size_t>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "braid") {
    m.kind = BraidMove::Kind::Braid;
  } else if (kind == "comm") {
    m.kind = BraidMove::Kind::Commutation;
  } else {
    throw InputError("unknown move kind " + kind);
  }
  return m;
}

Json to_json(const FoldingData& fd) {
  return Json{{"dot_type", to_json(*fd.dot)},
              {"sigma", fd.sigma},
              {"orbits", fd.orbits}};
}

FoldingData folding_from_json(const Json& j) {
  return FoldingData::make(cartan_from_json(j.at("dot_type")),
                           j.at("sigma").get<std::vector<int>>());
}

Json to_json(const FullFlagPoset& p) {
  Json cells = Json::array();
  for (const auto& c : p.cells) {
    cells.push_back(Json{{"v", to_json(c.v)}, {"w", to_json(c.w)}, {"dim", c.dim}});
  }
  return Json{{"cells", cells}, {"covers", covers_json(p.poset)}};
}

Json to_json(const std::vector<ParabolicCell>& cells, const CellPoset& poset) {
  Json out = Json::array();
  for (const auto& c : cells) {
    out.push_back(Json{{"x", to_json(c.x)},
                       {"u", to_json(c.u)},
                       {"w", to_json(c.w)},
                       {"dim", c.dim}});
  }
  return Json{{"cells", out}, {"covers", covers_json(poset)}};
}

Json to_json(const EulerianReport& r) {
  Json j{{"eulerian", r.eulerian}, {"intervals", r.intervals}};
  if (r.violation) {
    j["violation"] = {{"from", r.violation->first},
                      {"to", r.violation->second},
                      {"mu", r.mu},
                      {"expected", r.expected}};
  }
  return j;
}

}  // namespace tpcells
