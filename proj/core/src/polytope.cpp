#include "tpcells/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "tpcells/error.hpp"
#include "tpcells/matrix.hpp"

namespace tpcells {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & std::uint64_t{1};
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<Integer> y;
  Bits tight;
};

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Integer> to_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x * l));
  make_primitive(out);
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::vector<Exponent> pts) {
  if (pts.empty()) throw InputError("hull of an empty point set");
  {
    // drop repeats, keep first occurrences in input order
    std::set<Exponent> seen;
    std::vector<Exponent> distinct;
    for (auto& p : pts)
      if (seen.insert(p).second) distinct.push_back(std::move(p));
    pts = std::move(distinct);
  }
  const std::size_t n = pts[0].size();
  for (const auto& p : pts) {
    if (p.size() != n) throw InputError("hull: points of different dimension");
  }
  LatticePolytope P;
  P.ambient_ = n;
  P.points_ = pts;
  const std::size_t count = pts.size();

  // affine hull: pivot coordinates of the difference vectors
  RationalMatrix diffs(count > 1 ? count - 1 : 1, n);
  for (std::size_t s = 1; s < count; ++s)
    for (std::size_t i = 0; i < n; ++i) diffs(s - 1, i) = pts[s][i] - pts[0][i];
  std::vector<std::size_t> pivots;
  {
    // pivot coordinates: independent columns of diffs
    RationalMatrix acc(count > 1 ? count - 1 : 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      RationalMatrix col(acc.rows(), 1);
      for (std::size_t s = 0; s < acc.rows(); ++s) col(s, 0) = diffs(s, i);
      RationalMatrix trial = hcat(acc, col);
      if (rank(trial) > acc.cols()) {
        acc = std::move(trial);
        pivots.push_back(i);
      }
    }
  }
  const int d = static_cast<int>(pivots.size());
  P.dim_ = d;
  {
    const RationalMatrix eqs = null_space(diffs);
    for (std::size_t c = 0; c < eqs.cols(); ++c) {
      std::vector<Rational> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = eqs(i, c);
      Facet f;
      f.normal = to_integer(v);
      f.offset = 0;
      for (std::size_t i = 0; i < n; ++i) f.offset += f.normal[i] * pts[0][i];
      P.equations_.push_back(std::move(f));
    }
  }
  if (d == 0) {
    P.vertices_ = {0};
    return P;
  }

  // homogenised projected points (1, q)
  std::vector<std::vector<Integer>> h(count, std::vector<Integer>(d + 1));
  for (std::size_t s = 0; s < count; ++s) {
    h[s][0] = 1;
    for (int k = 0; k < d; ++k) h[s][k + 1] = pts[s][pivots[k]];
  }
  // initial simplex
  std::vector<std::size_t> simplex;
  {
    RationalMatrix acc(d + 1, 0);
    for (std::size_t s = 0; s < count && static_cast<int>(simplex.size()) < d + 1;
         ++s) {
      RationalMatrix col(d + 1, 1);
      for (int k = 0; k <= d; ++k) col(k, 0) = h[s][k];
      RationalMatrix trial = hcat(acc, col);
      if (rank(trial) > acc.cols()) {
        acc = std::move(trial);
        simplex.push_back(s);
      }
    }
  }
  std::vector<Ray> rays;
  {
    // rays = columns of H0^{-1}: solve H0 y = e_k
    RationalMatrix h0(d + 1, d + 1);
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b) h0(a, b) = h[simplex[a]][b];
    for (int k = 0; k <= d; ++k) {
      // null space of rows other than k gives the ray direction
      RationalMatrix others(d, d + 1);
      int r = 0;
      for (int a = 0; a <= d; ++a) {
        if (a == k) continue;
        for (int b = 0; b <= d; ++b) others(r, b) = h0(a, b);
        ++r;
      }
      const RationalMatrix ns = null_space(others);
      std::vector<Rational> y(d + 1);
      for (int b = 0; b <= d; ++b) y[b] = ns(b, 0);
      Rational val = 0;
      for (int b = 0; b <= d; ++b) val += h0(k, b) * y[b];
      if (sgn(val) < 0)
        for (auto& x : y) x = -x;
      Ray ray{to_integer(y), Bits(count)};
      for (int a = 0; a <= d; ++a)
        if (a != k) ray.tight.set(simplex[a]);
      rays.push_back(std::move(ray));
    }
  }
  std::vector<bool> in_simplex(count, false);
  for (auto s : simplex) in_simplex[s] = true;
  const std::size_t need = static_cast<std::size_t>(d - 1);
  for (std::size_t s = 0; s < count; ++s) {
    if (in_simplex[s]) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rays[k].y, h[s]);
      const int sg = sgn(val[k]);
      if (sg > 0) pos.push_back(k);
      if (sg < 0) neg.push_back(k);
      if (sg == 0) rays[k].tight.set(s);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sgn(val[k]) >= 0) next.push_back(rays[k]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<Integer> y(d + 1);
        for (int b = 0; b <= d; ++b) {
          y[b] = val[p] * rays[q].y[b] - val[q] * rays[p].y[b];
        }
        make_primitive(y);
        common.set(s);
        next.push_back(Ray{std::move(y), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    Facet f;
    f.normal.assign(n, Integer(0));
    for (int k = 0; k < d; ++k) f.normal[pivots[k]] = -ray.y[k + 1];
    f.offset = ray.y[0];
    std::vector<std::size_t> on;
    for (std::size_t s = 0; s < count; ++s) {
      Integer lhs = 0;
      for (std::size_t i = 0; i < n; ++i) lhs += f.normal[i] * pts[s][i];
      if (lhs == f.offset) on.push_back(s);
    }
    P.facets_.push_back(std::move(f));
    P.facet_points_.push_back(std::move(on));
  }
  // vertices: points whose tight facet normals span the projected space
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t f = 0; f < P.facets_.size(); ++f) {
      if (!std::binary_search(P.facet_points_[f].begin(),
                              P.facet_points_[f].end(), s)) {
        continue;
      }
      std::vector<Rational> row(d);
      for (int k = 0; k < d; ++k) row[k] = P.facets_[f].normal[pivots[k]];
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) < d) continue;
    RationalMatrix m(rows.size(), d);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (int b = 0; b < d; ++b) m(a, b) = rows[a][b];
    if (static_cast<int>(rank(m)) == d) P.vertices_.push_back(s);
  }
  return P;
}

bool LatticePolytope::contains(const Exponent& x) const {
  if (x.size() != ambient_) return false;
  auto eval = [&](const Facet& f) {
    Integer s = 0;
    for (std::size_t i = 0; i < ambient_; ++i) s += f.normal[i] * x[i];
    return s;
  };
  for (const auto& e : equations_)
    if (eval(e) != e.offset) return false;
  for (const auto& f : facets_)
    if (eval(f) > f.offset) return false;
  return true;
}

int LatticePolytope::affine_dim(const std::vector<std::size_t>& subset) const {
  if (subset.empty()) return -1;
  RationalMatrix m(subset.size(), ambient_);
  for (std::size_t a = 1; a < subset.size(); ++a)
    for (std::size_t i = 0; i < ambient_; ++i)
      m(a, i) = points_[subset[a]][i] - points_[subset[0]][i];
  return static_cast<int>(rank(m));
}

std::vector<Face> LatticePolytope::faces() const {
  std::vector<std::size_t> all(points_.size());
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto cur = queue[head];
    for (const auto& fp : facet_points_) {
      std::vector<std::size_t> inter;
      std::set_intersection(cur.begin(), cur.end(), fp.begin(), fp.end(),
                            std::back_inserter(inter));
      if (inter.empty() || inter == cur) continue;
      if (seen.insert(inter).second) queue.push_back(std::move(inter));
    }
  }
  std::vector<Face> out;
  for (auto& pts : queue) {
    Face f;
    f.dim = affine_dim(pts);
    f.points = std::move(pts);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });
  return out;
}

}  // namespace tpcells
