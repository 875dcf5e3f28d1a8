#include "tpcells/toric.hpp"

#include <set>

namespace tpcells {

bool ExponentSet::columns_nonzero() const {
  for (std::size_t m = 0; m < points.size(); ++m) {
    bool hit = false;
    for (const auto& row : coeffs) hit = hit || sgn(row[m]) != 0;
    if (!hit) return false;
  }
  return true;
}

ExponentSet build_exponent_set(std::span<const LaurentPoly> coords) {
  const ExponentTable t = exponent_vectors(coords);
  ExponentSet es;
  es.arity = t.arity;
  es.points = t.exponents;
  es.coeffs = t.table;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j].is_zero()) es.zero_rows.push_back(j);
  }
  return es;
}

std::vector<Rational> glue_eval(const ExponentSet& es,
                                std::span<const Rational> x) {
  if (x.size() != es.points.size()) {
    throw InputError("glue_eval: x must have one entry per point of S");
  }
  bool nonzero = false;
  for (const auto& v : x) {
    if (sgn(v) < 0) throw InputError("glue_eval: x must be nonnegative");
    nonzero = nonzero || sgn(v) != 0;
  }
  if (!nonzero) throw InputError("glue_eval: x is zero");
  std::vector<Rational> out(es.coeffs.size(), Rational(0));
  for (std::size_t j = 0; j < es.coeffs.size(); ++j) {
    for (std::size_t m = 0; m < x.size(); ++m) {
      if (sgn(es.coeffs[j][m]) != 0) out[j] += es.coeffs[j][m] * x[m];
    }
  }
  return out;
}

std::vector<Rational> face_point(const ExponentSet& es,
                                 const std::vector<std::size_t>& support,
                                 std::span<const Rational> t) {
  if (t.size() != es.arity) throw InputError("face_point: wrong arity");
  std::vector<Rational> x(es.points.size(), Rational(0));
  for (auto m : support) {
    Rational v = 1;
    for (std::size_t k = 0; k < es.arity; ++k) {
      const int e = es.points[m][k];
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), t[k].get_num_mpz_t(),
                 static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(p.get_den_mpz_t(), t[k].get_den_mpz_t(),
                 static_cast<unsigned long>(e < 0 ? -e : e));
      p.canonicalize();
      v *= e < 0 ? Rational(1 / p) : p;
    }
    x[m] = v;
  }
  return x;
}

BoundaryScanReport boundary_scan(const PositiveSubexpression& pse,
                                 std::uint64_t seed, int extra_samples) {
  const CertificateReport cert = certify_positive(pse);
  if (!cert.pass) throw CheckFailure("boundary_scan needs a certified cell");
  const ExponentSet es = build_exponent_set(cert.coords);
  const LatticePolytope P = es.hull();
  const int n = pse.cartan->rank() + 1;

  BoundaryScanReport rep;
  rep.v = pse.v;
  rep.w = pse.w();
  rep.polytope_dim = P.dim();

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> samples;
  samples.emplace_back(es.arity, Rational(1));
  for (int s = 0; s < extra_samples; ++s) {
    samples.push_back(random_positive(rng, es.arity));
  }

  std::set<std::pair<Word, Word>> hit;
  for (const Face& face : P.faces()) {
    if (face.dim == P.dim()) continue;  // the polytope itself
    BoundaryHit h;
    h.face = face;
    try {
      bool first = true;
      h.sample_independent = true;
      for (const auto& t : samples) {
        const auto coords = glue_eval(es, face_point(es, face.points, t));
        const BruhatPair bp = bruhat_pair(recover_flag(coords, n), pse.cartan);
        if (first) {
          h.v = bp.v;
          h.w = bp.w;
          first = false;
        } else if (!(bp.v == h.v && bp.w == h.w)) {
          h.sample_independent = false;
        }
      }
      h.identified = true;
      h.sandwiched = bruhat_leq(rep.v, h.v) && bruhat_leq(h.v, h.w) &&
                     bruhat_leq(h.w, rep.w) && !(h.v == rep.v && h.w == rep.w);
      hit.insert({h.v.word(), h.w.word()});
    } catch (const CheckFailure& e) {
      h.error = e.what();
    }
    rep.pass = rep.pass && h.identified && h.sandwiched && h.sample_independent;
    rep.hits.push_back(std::move(h));
  }
  rep.cells_hit = hit.size();
  const auto all = enumerate(pse.cartan);
  for (const auto& a : all) {
    if (!bruhat_leq(rep.v, a) || !bruhat_leq(a, rep.w)) continue;
    for (const auto& b : all) {
      if (bruhat_leq(a, b) && bruhat_leq(b, rep.w) &&
          !(a == rep.v && b == rep.w)) {
        ++rep.closure_cells;
      }
    }
  }
  return rep;
}

}  // namespace tpcells
