#include "tpcells/embed.hpp"

#include <algorithm>

namespace tpcells {

std::size_t SegreShape::size() const {
  std::size_t s = 1;
  for (auto l : level_sizes) s *= l;
  return s;
}

std::vector<std::size_t> SegreShape::decode(std::size_t flat) const {
  std::vector<std::size_t> out(level_sizes.size());
  for (std::size_t k = level_sizes.size(); k-- > 0;) {
    out[k] = flat % level_sizes[k];
    flat /= level_sizes[k];
  }
  return out;
}

std::size_t SegreShape::encode(const std::vector<std::size_t>& per_level) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < level_sizes.size(); ++k) {
    flat = flat * level_sizes[k] + per_level[k];
  }
  return flat;
}

std::string SegreShape::label(std::size_t flat) const {
  const auto idx = decode(flat);
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto subset = subsets(n, static_cast<int>(k) + 1)[idx[k]];
    out += k ? "|{" : "{";
    for (std::size_t a = 0; a < subset.size(); ++a) {
      out += (a ? "," : "") + std::to_string(subset[a] + 1);
    }
    out += "}";
  }
  return out;
}

SegreShape segre_shape(int n) {
  SegreShape s;
  s.n = n;
  for (int k = 1; k < n; ++k) s.level_sizes.push_back(subsets(n, k).size());
  return s;
}

CertificateReport certify_coordinates(std::vector<LaurentPoly> coords) {
  CertificateReport r;
  r.n_coords = coords.size();
  auto first = std::find_if(coords.begin(), coords.end(),
                            [](const LaurentPoly& p) { return !p.is_zero(); });
  if (first == coords.end()) {
    r.pass = false;
    for (std::size_t j = 0; j < coords.size(); ++j) r.zero_coords.push_back(j);
    r.coords = std::move(coords);
    return r;
  }
  r.sign = first->sign_of_leading();
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (r.sign < 0) coords[j] = -coords[j];
    if (coords[j].is_zero()) {
      r.zero_coords.push_back(j);
    } else if (!coords[j].has_nonnegative_coeffs()) {
      r.failing_coords.push_back(j);
    }
  }
  r.pass = r.failing_coords.empty();
  r.coords = std::move(coords);
  return r;
}

CertificateReport certify_positive(const PositiveSubexpression& pse) {
  const auto param = cell_representative(pse);
  CertificateReport r = certify_coordinates(segre_coordinates(param.matrix));
  r.v = pse.v;
  r.w = pse.w();
  r.word = pse.word;
  r.var_names = param.names();
  return r;
}

std::optional<RationalMatrix> plucker_to_basis(const std::vector<Rational>& p,
                                               int n, int k) {
  const auto sets = subsets(n, k);
  if (p.size() != sets.size()) throw InputError("Plucker vector has wrong size");
  std::size_t anchor = sets.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) {
      anchor = i;
      break;
    }
  }
  if (anchor == sets.size()) return std::nullopt;
  const auto& r0 = sets[anchor];
  const Rational& p0 = p[anchor];
  RationalMatrix m(n, k);
  for (int c = 0; c < k; ++c) m(r0[c], c) = 1;
  for (int row = 0; row < n; ++row) {
    if (std::find(r0.begin(), r0.end(), row) != r0.end()) continue;
    for (int c = 0; c < k; ++c) {
      std::vector<int> rows = r0;
      rows[c] = row;
      std::sort(rows.begin(), rows.end());
      const int pos = static_cast<int>(
          std::find(rows.begin(), rows.end(), row) - rows.begin());
      const Rational val = p[subset_index(n, rows)] / p0;
      m(row, c) = (c - pos) % 2 == 0 ? val : Rational(-val);
    }
  }
  const auto minors = left_justified_minors(m, k)[k];
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (minors[i] * p0 != p[i]) return std::nullopt;
  }
  return m;
}

Flag recover_flag(const std::vector<Rational>& segre, int n) {
  const SegreShape shape = segre_shape(n);
  if (segre.size() != shape.size()) {
    throw InputError("Segre vector has wrong size for n = " + std::to_string(n));
  }
  std::size_t anchor = segre.size();
  for (std::size_t i = 0; i < segre.size(); ++i) {
    if (sgn(segre[i]) < 0) throw CheckFailure("Segre vector has a negative entry");
    if (anchor == segre.size() && sgn(segre[i]) != 0) anchor = i;
  }
  if (anchor == segre.size()) throw CheckFailure("Segre vector is zero");
  const auto a = shape.decode(anchor);
  const int levels = n - 1;
  std::vector<std::vector<Rational>> plucker(levels);
  for (int k = 0; k < levels; ++k) {
    auto idx = a;
    for (std::size_t r = 0; r < shape.level_sizes[k]; ++r) {
      idx[k] = r;
      plucker[k].push_back(segre[shape.encode(idx)]);
    }
  }
  // decomposability: segre[i] * segre[a]^(levels-1) = prod_k plucker_k[i_k]
  Rational anchor_pow = 1;
  for (int k = 0; k + 1 < levels; ++k) anchor_pow *= segre[anchor];
  for (std::size_t i = 0; i < segre.size(); ++i) {
    const auto idx = shape.decode(i);
    Rational prod = 1;
    for (int k = 0; k < levels; ++k) prod *= plucker[k][idx[k]];
    if (segre[i] * anchor_pow != prod) {
      throw CheckFailure("Segre vector is not a product of level vectors");
    }
  }
  RationalMatrix cur(n, 0);
  for (int k = 1; k <= levels; ++k) {
    auto basis = plucker_to_basis(plucker[k - 1], n, k);
    if (!basis) throw CheckFailure("level " + std::to_string(k) +
                                   " vector is not decomposable");
    if (rank(hcat(*basis, cur)) != static_cast<std::size_t>(k)) {
      throw CheckFailure("flag levels are not nested");
    }
    for (int c = 0; c < k; ++c) {
      RationalMatrix col(n, 1);
      for (int i = 0; i < n; ++i) col(i, 0) = (*basis)(i, c);
      RationalMatrix trial = hcat(cur, col);
      if (rank(trial) > cur.cols()) {
        cur = std::move(trial);
        break;
      }
    }
  }
  for (int i = 0; i < n && static_cast<int>(cur.cols()) < n; ++i) {
    RationalMatrix col(n, 1);
    col(i, 0) = 1;
    RationalMatrix trial = hcat(cur, col);
    if (rank(trial) > cur.cols()) cur = std::move(trial);
  }
  return Flag::full(cur);
}

}  // namespace tpcells
