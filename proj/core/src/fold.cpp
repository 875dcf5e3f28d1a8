#include "tpcells/fold.hpp"

#include <algorithm>

namespace tpcells {

FoldingData FoldingData::make(CartanPtr dot, std::vector<int> sigma) {
  const int r = dot->rank();
  if (!dot->simply_laced()) throw InputError("folding needs a simply-laced type");
  if (static_cast<int>(sigma.size()) != r) {
    throw InputError("sigma must permute every node");
  }
  {
    auto sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i <= r; ++i)
      if (sorted[i - 1] != i) throw InputError("sigma is not a permutation");
  }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (dot->entry(sigma[i - 1], sigma[j - 1]) != dot->entry(i, j)) {
        throw InputError("sigma does not preserve the Cartan matrix");
      }
  FoldingData fd;
  fd.dot = dot;
  fd.sigma = std::move(sigma);
  std::vector<bool> seen(r + 1, false);
  for (int i = 1; i <= r; ++i) {
    if (seen[i]) continue;
    NodeSet orbit;
    for (int k = i; !seen[k]; k = fd.sigma[k - 1]) {
      seen[k] = true;
      orbit.push_back(k);
    }
    std::sort(orbit.begin(), orbit.end());
    for (int a : orbit)
      for (int b : orbit)
        if (a != b && dot->entry(a, b) != 0) {
          throw InputError("nodes of one orbit must not be adjacent");
        }
    fd.orbits.push_back(std::move(orbit));
  }
  const std::size_t m = fd.orbits.size();
  std::vector<std::vector<int>> q(m, std::vector<int>(m, 0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      for (int i : fd.orbits[k]) q[k][l] += dot->entry(i, fd.orbits[l][0]);
  fd.folded = CartanData::from_matrix(std::move(q));
  return fd;
}

int FoldingData::orbit_of(int node) const {
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (std::binary_search(orbits[k].begin(), orbits[k].end(), node)) {
      return static_cast<int>(k) + 1;
    }
  throw InputError("node out of range");
}

namespace {

FoldingData named(CartanPtr dot, std::vector<int> sigma, char type, int n) {
  FoldingData fd = FoldingData::make(std::move(dot), std::move(sigma));
  const CartanPtr target = CartanData::make(type, n);
  if (!(*fd.folded == *target)) {
    throw CheckFailure("quotient Cartan matrix does not match " +
                       target->label());
  }
  fd.folded = target;
  return fd;
}

}  // namespace

FoldingData fold_a_to_c(int n) {
  if (n < 2) throw InputError("A_{2n-1} -> C_n needs n >= 2");
  std::vector<int> sigma(2 * n - 1);
  for (int i = 1; i <= 2 * n - 1; ++i) sigma[i - 1] = 2 * n - i;
  return named(CartanData::make('A', 2 * n - 1), std::move(sigma), 'C', n);
}

FoldingData fold_d_to_b(int n) {
  if (n < 3) throw InputError("D_{n+1} -> B_n needs n >= 3");
  std::vector<int> sigma(n + 1);
  for (int i = 1; i <= n + 1; ++i) sigma[i - 1] = i;
  std::swap(sigma[n - 1], sigma[n]);
  return named(CartanData::make('D', n + 1), std::move(sigma), 'B', n);
}

Word expand_word(const FoldingData& fd, const Word& folded_word) {
  if (!is_reduced(fd.folded, folded_word)) {
    throw InputError("expand_word: input word is not reduced");
  }
  Word out;
  for (int k : folded_word) {
    const auto& orbit = fd.orbits.at(static_cast<std::size_t>(k) - 1);
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  return out;
}

WeylElement expand_element(const FoldingData& fd, const WeylElement& v) {
  return WeylElement::from_word(fd.dot, expand_word(fd, v.word()));
}

PositiveSubexpression expand_subexpression(const FoldingData& fd,
                                           const PositiveSubexpression& pse) {
  PositiveSubexpression out;
  out.cartan = fd.dot;
  out.word = expand_word(fd, pse.word);
  int offset = 0;
  for (int r = 1; r <= static_cast<int>(pse.word.size()); ++r) {
    const int size = static_cast<int>(fd.orbits[pse.word[r - 1] - 1].size());
    if (pse.contains(r))
      for (int k = 1; k <= size; ++k) out.v_plus.push_back(offset + k);
    offset += size;
  }
  out.v = expand_element(fd, pse.v);
  return out;
}

CellParameterization folded_cell_representative(
    const FoldingData& fd, const PositiveSubexpression& pse) {
  if (fd.dot->type() != 'A') {
    throw InputError("folded representatives need an unfolded type A datum");
  }
  const std::size_t n = static_cast<std::size_t>(fd.dot->rank()) + 1;
  CellParameterization out;
  out.var_positions = pse.complement();
  const std::size_t arity = out.var_positions.size();
  out.matrix = PolyMatrix::identity(n);
  std::size_t var = 0;
  for (int r = 1; r <= static_cast<int>(pse.word.size()); ++r) {
    const auto& orbit = fd.orbits[pse.word[r - 1] - 1];
    const bool dot = pse.contains(r);
    const LaurentPoly t = dot ? LaurentPoly(0) : LaurentPoly::variable(arity, var++);
    for (int i : orbit) {
      out.matrix = dot ? out.matrix * s_dot<LaurentPoly>(n, i)
                       : out.matrix * y_generator(n, i, t);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.matrix(a, b) = out.matrix(a, b) * LaurentPoly::constant(arity, 1);
  return out;
}

CertificateReport certify_folded(const FoldingData& fd,
                                 const PositiveSubexpression& pse) {
  const auto param = folded_cell_representative(fd, pse);
  CertificateReport r = certify_coordinates(segre_coordinates(param.matrix));
  r.v = pse.v;
  r.w = pse.w();
  r.word = pse.word;
  r.var_names = param.names();
  return r;
}

RationalMatrix flip_automorphism(const RationalMatrix& g) {
  const std::size_t n = g.rows();
  const RationalMatrix inv_t = inverse(g).transpose();
  // (J X J^{-1})_{ab} = j_a j_b X_{n-1-a, n-1-b} with j_a = (-1)^a
  RationalMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& x = inv_t(n - 1 - a, n - 1 - b);
      out(a, b) = (a + b) % 2 == 0 ? x : Rational(-x);
    }
  return out;
}

bool flip_matches_sigma(const FoldingData& fd) {
  if (fd.dot->type() != 'A') return false;
  const std::size_t n = static_cast<std::size_t>(fd.dot->rank()) + 1;
  const Rational m(3, 2);
  for (int i = 1; i < static_cast<int>(n); ++i) {
    const int j = fd.sigma[i - 1];
    if (!(flip_automorphism(y_generator<Rational>(n, i, m)) ==
          y_generator<Rational>(n, j, m)) ||
        !(flip_automorphism(x_generator<Rational>(n, i, m)) ==
          x_generator<Rational>(n, j, m)) ||
        !(flip_automorphism(s_dot<Rational>(n, i)) == s_dot<Rational>(n, j))) {
      return false;
    }
  }
  return true;
}

}  // namespace tpcells
