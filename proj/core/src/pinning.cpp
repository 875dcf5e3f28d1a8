#include "tpcells/pinning.hpp"

#include <algorithm>

namespace tpcells {

RationalMatrix generator(GeneratorKind kind, std::size_t n, int i,
                         std::span<const Rational> arg) {
  switch (kind) {
    case GeneratorKind::X:
    case GeneratorKind::Y: {
      if (arg.size() != 1) throw InputError("x/y generators take one argument");
      return kind == GeneratorKind::X ? x_generator<Rational>(n, i, arg[0])
                                      : y_generator<Rational>(n, i, arg[0]);
    }
    case GeneratorKind::SDot:
      return s_dot<Rational>(n, i);
    case GeneratorKind::Torus: {
      if (arg.size() != n) throw InputError("torus element needs n entries");
      Rational prod = 1;
      for (const auto& a : arg) {
        if (sgn(a) <= 0) throw InputError("torus entries must be positive");
        prod *= a;
      }
      if (prod != 1) throw InputError("torus element must have determinant 1");
      RationalMatrix g(n, n);
      for (std::size_t k = 0; k < n; ++k) g(k, k) = arg[k];
      return g;
    }
  }
  throw InputError("unknown generator kind");
}

CartanPtr type_a(std::size_t n) {
  return CartanData::make('A', static_cast<int>(n) - 1);
}

namespace {

std::size_t matrix_size(const PositiveSubexpression& pse) {
  if (pse.cartan->type() != 'A' && pse.cartan->type() != '?') {
    throw InputError("no matrix realisation for type " + pse.cartan->label());
  }
  if (!(*pse.cartan == *CartanData::make('A', pse.cartan->rank()))) {
    throw InputError("no matrix realisation for this Cartan matrix");
  }
  return static_cast<std::size_t>(pse.cartan->rank()) + 1;
}

}  // namespace

std::vector<std::string> CellParameterization::names() const {
  std::vector<std::string> out;
  for (int r : var_positions) out.push_back("t" + std::to_string(r));
  return out;
}

CellParameterization cell_representative(const PositiveSubexpression& pse) {
  const std::size_t n = matrix_size(pse);
  CellParameterization out;
  out.var_positions = pse.complement();
  const std::size_t arity = out.var_positions.size();
  out.matrix = PolyMatrix::identity(n);
  std::size_t var = 0;
  for (int r = 1; r <= static_cast<int>(pse.word.size()); ++r) {
    const int i = pse.word[r - 1];
    if (pse.contains(r)) {
      out.matrix = out.matrix * s_dot<LaurentPoly>(n, i);
    } else {
      out.matrix = out.matrix *
                   y_generator(n, i, LaurentPoly::variable(arity, var++));
    }
  }
  // promote constant entries so every entry carries the cell's arity
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.matrix(a, b) = out.matrix(a, b) * LaurentPoly::constant(arity, 1);
  return out;
}

RationalMatrix cell_sample(const PositiveSubexpression& pse,
                           std::span<const Rational> params) {
  const std::size_t n = matrix_size(pse);
  const auto comp = pse.complement();
  if (params.size() != comp.size()) {
    throw InputError("cell_sample: expected " + std::to_string(comp.size()) +
                     " parameters");
  }
  RationalMatrix g = RationalMatrix::identity(n);
  std::size_t var = 0;
  for (int r = 1; r <= static_cast<int>(pse.word.size()); ++r) {
    const int i = pse.word[r - 1];
    g = pse.contains(r) ? g * s_dot<Rational>(n, i)
                        : g * y_generator<Rational>(n, i, params[var++]);
  }
  return g;
}

std::vector<Rational> random_positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  std::vector<Rational> out(n);
  for (auto& x : out) {
    const int a = num(rng);
    const int b = den(rng);
    x = Rational(a, b);
    x.canonicalize();
  }
  return out;
}

bool tnn_minor_check(const RationalMatrix& g) {
  const int n = static_cast<int>(g.rows());
  const int m = static_cast<int>(g.cols());
  for (int k = 1; k <= std::min(n, m); ++k) {
    const auto row_sets = subsets(n, k);
    const auto col_sets = subsets(m, k);
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        RationalMatrix sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = g(rs[a], cs[b]);
        if (sgn(determinant(sub)) < 0) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// flags

Flag Flag::full(const RationalMatrix& g) {
  if (g.rows() != g.cols() || rank(g) != g.rows()) {
    throw InputError("full flag needs an invertible square matrix");
  }
  Flag f;
  f.basis_ = g;
  for (int d = 1; d < static_cast<int>(g.rows()); ++d) f.dims_.push_back(d);
  return f;
}

Flag Flag::partial(const RationalMatrix& basis, std::vector<int> dims) {
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  const int n = static_cast<int>(basis.rows());
  for (int d : dims) {
    if (d < 1 || d >= n) throw InputError("flag dimension out of range");
  }
  const std::size_t top = dims.empty() ? 0 : dims.back();
  if (basis.cols() < top || rank(basis.left_columns(top)) != top) {
    throw InputError("flag basis columns are not independent");
  }
  Flag f;
  f.basis_ = basis.left_columns(top);
  f.dims_ = std::move(dims);
  return f;
}

Flag Flag::standard(std::size_t n) {
  return full(RationalMatrix::identity(n));
}

Flag Flag::opposite(std::size_t n) {
  RationalMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) g(n - 1 - k, k) = 1;
  return full(g);
}

RationalMatrix Flag::subspace(int d) const {
  if (d == 0) return RationalMatrix(n(), 0);
  if (d == static_cast<int>(n())) return RationalMatrix::identity(n());
  if (!std::binary_search(dims_.begin(), dims_.end(), d)) {
    throw InputError("flag has no subspace of dimension " + std::to_string(d));
  }
  return basis_.left_columns(d);
}

Flag Flag::projected(const std::vector<int>& keep) const {
  std::vector<int> dims;
  for (int d : keep) {
    if (!std::binary_search(dims_.begin(), dims_.end(), d)) {
      throw InputError("cannot keep a dimension the flag does not have");
    }
    dims.push_back(d);
  }
  return partial(basis_, dims);
}

bool operator==(const Flag& a, const Flag& b) {
  if (a.n() != b.n() || a.dims_ != b.dims_) return false;
  for (int d : a.dims_) {
    if (rank(hcat(a.subspace(d), b.subspace(d))) != static_cast<std::size_t>(d)) {
      return false;
    }
  }
  return true;
}

std::size_t intersection_dim(const RationalMatrix& u, const RationalMatrix& v) {
  return rank(u) + rank(v) - rank(hcat(u, v));
}

RationalMatrix intersection_basis(const RationalMatrix& u,
                                  const RationalMatrix& v) {
  // x in U cap V iff x = U a = V b, i.e. [U | -V] (a; b) = 0
  RationalMatrix neg_v = v.map([](const Rational& x) { return Rational(-x); });
  const RationalMatrix ns = null_space(hcat(u, neg_v));
  RationalMatrix vecs(u.rows(), ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c)
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t k = 0; k < u.cols(); ++k) vecs(i, c) += u(i, k) * ns(k, c);
  // keep an independent subset
  RationalMatrix basis(u.rows(), 0);
  for (std::size_t c = 0; c < vecs.cols(); ++c) {
    RationalMatrix col(u.rows(), 1);
    for (std::size_t i = 0; i < u.rows(); ++i) col(i, 0) = vecs(i, c);
    RationalMatrix trial = hcat(basis, col);
    if (rank(trial) > basis.cols()) basis = std::move(trial);
  }
  return basis;
}

WeylElement relative_position(const Flag& f1, const Flag& f2,
                              const CartanPtr& cartan) {
  if (!f1.is_full() || !f2.is_full() || f1.n() != f2.n()) {
    throw InputError("relative_position needs two full flags in one space");
  }
  const int n = static_cast<int>(f1.n());
  // r[i][j] = dim(V_i cap V'_j)
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      r[i][j] = static_cast<int>(
          intersection_dim(f1.subspace(i), f2.subspace(j)));
    }
  }
  std::vector<int> perm(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int j = 1; j <= n; ++j) {
    int found = 0;
    for (int i = 1; i <= n; ++i) {
      if (r[i][j] - r[i][j - 1] == 1) {
        found = i;
        break;
      }
    }
    if (found == 0 || used[found]) {
      throw InputError("degenerate flag pair: rank data is not a permutation");
    }
    used[found] = true;
    perm[j - 1] = found;
  }
  return from_permutation(cartan, perm);
}

BruhatPair bruhat_pair(const Flag& f, const CartanPtr& cartan) {
  if (!f.is_full()) throw InputError("bruhat_pair needs a full flag");
  const std::size_t n = f.n();
  WeylElement w = relative_position(Flag::standard(n), f, cartan);
  WeylElement w0 = WeylElement::longest(cartan);
  WeylElement v = multiply(w0, relative_position(Flag::opposite(n), f, cartan));
  return {std::move(v), std::move(w)};
}

Flag refine_toward(const Flag& p, const Flag& reference) {
  if (!reference.is_full() || reference.n() != p.n()) {
    throw InputError("refine_toward needs a full reference flag");
  }
  const int n = static_cast<int>(p.n());
  std::vector<int> marks = p.dims();
  marks.push_back(n);
  RationalMatrix cur(n, 0);
  for (int upper : marks) {
    const RationalMatrix big = p.subspace(upper);
    // fill lower+1 .. upper-1 from big cap F_j, j increasing
    for (int j = 1; j <= n && static_cast<int>(cur.cols()) < upper; ++j) {
      const RationalMatrix piece = intersection_basis(big, reference.subspace(j));
      for (std::size_t c = 0; c < piece.cols(); ++c) {
        RationalMatrix col(n, 1);
        for (int i = 0; i < n; ++i) col(i, 0) = piece(i, c);
        RationalMatrix trial = hcat(cur, col);
        if (rank(trial) > cur.cols()) {
          cur = std::move(trial);
          break;
        }
      }
    }
    if (static_cast<int>(cur.cols()) != upper) {
      throw CheckFailure("refinement did not reach the next flag subspace");
    }
  }
  return Flag::full(cur);
}

}  // namespace tpcells
