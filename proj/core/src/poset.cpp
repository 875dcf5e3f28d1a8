#include "tpcells/poset.hpp"

#include <algorithm>
#include <map>

namespace tpcells {

CellPoset::CellPoset(std::vector<int> ranks, std::vector<std::vector<bool>> leq)
    : rank_(std::move(ranks)), leq_(std::move(leq)) {
  const std::size_t n = rank_.size();
  if (leq_.size() != n) throw InputError("relation size does not match ranks");
  for (const auto& row : leq_)
    if (row.size() != n) throw InputError("relation must be square");
}

std::vector<std::pair<std::size_t, std::size_t>> CellPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> CellPoset::down_set(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (leq_[a][c]) out.push_back(a);
  return out;
}

std::vector<std::size_t> CellPoset::census() const {
  int top = -1;
  for (int r : rank_) top = std::max(top, r);
  std::vector<std::size_t> out(static_cast<std::size_t>(top + 1), 0);
  for (int r : rank_) ++out[r];
  return out;
}

CellPoset CellPoset::without_relation(std::size_t a, std::size_t b) const {
  CellPoset p = *this;
  p.leq_[a][b] = false;
  return p;
}

FullFlagPoset enumerate_full_flag_cells(const CartanPtr& cartan,
                                        std::size_t limit) {
  const auto W = enumerate(cartan);
  FullFlagPoset out;
  for (const auto& w : W) {
    for (const auto& v : W) {
      if (!bruhat_leq(v, w)) continue;
      if (out.cells.size() == limit) {
        throw SizeGuardError("more than " + std::to_string(limit) + " cells");
      }
      out.cells.push_back({v, w, w.length() - v.length()});
    }
  }
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const FullFlagCell& a, const FullFlagCell& b) {
                     return a.dim < b.dim;
                   });
  const std::size_t n = out.cells.size();
  // index elements so that Bruhat tests become table lookups
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t k = 0; k < W.size(); ++k) index[W[k].key()] = k;
  std::vector<std::vector<bool>> le(W.size(), std::vector<bool>(W.size()));
  for (std::size_t a = 0; a < W.size(); ++a)
    for (std::size_t b = 0; b < W.size(); ++b) le[a][b] = bruhat_leq(W[a], W[b]);
  std::vector<std::size_t> vi(n), wi(n);
  for (std::size_t c = 0; c < n; ++c) {
    vi[c] = index.at(out.cells[c].v.key());
    wi[c] = index.at(out.cells[c].w.key());
  }
  std::vector<int> ranks(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    ranks[a] = out.cells[a].dim;
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = le[vi[b]][vi[a]] && le[wi[a]][wi[b]];
    }
  }
  out.poset = CellPoset(std::move(ranks), std::move(leq));
  return out;
}

long euler_char_closure(const CellPoset& p, std::size_t c) {
  long chi = 0;
  for (auto a : p.down_set(c)) chi += p.rank(a) % 2 == 0 ? 1 : -1;
  return chi;
}

EulerianReport eulerian_check(const CellPoset& p) {
  const std::size_t n = p.size();
  const std::size_t m = n + 1;  // element n is the adjoined minimum
  auto rank = [&](std::size_t a) { return a == n ? -1 : p.rank(a); };
  auto leq = [&](std::size_t a, std::size_t b) {
    if (a == n) return true;
    if (b == n) return false;
    return p.leq(a, b);
  };
  std::vector<std::size_t> order(m);
  for (std::size_t a = 0; a < m; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rank(a) < rank(b);
  });
  EulerianReport rep;
  std::vector<long> mu(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::fill(mu.begin(), mu.end(), 0);
    for (std::size_t b : order) {
      if (!leq(a, b)) continue;
      long val = 0;
      if (b == a) {
        val = 1;
      } else {
        for (std::size_t c : order) {
          if (c != b && leq(a, c) && leq(c, b)) val -= mu[c];
        }
      }
      mu[b] = val;
      ++rep.intervals;
      const long expected = (rank(b) - rank(a)) % 2 == 0 ? 1 : -1;
      if (val != expected && rep.eulerian) {
        rep.eulerian = false;
        rep.violation = std::make_pair(a, b);
        rep.mu = val;
        rep.expected = expected;
      }
    }
  }
  return rep;
}

namespace {

bool is_max_rep(const WeylElement& x, const NodeSet& J) {
  for (int j : J)
    if (!x.has_right_descent(j)) return false;
  return true;
}

bool is_min_rep(const WeylElement& w, const NodeSet& J) {
  for (int j : J)
    if (w.has_right_descent(j)) return false;
  return true;
}

bool in_parabolic(const WeylElement& u, const NodeSet& J) {
  for (int i : u.word())
    if (!std::binary_search(J.begin(), J.end(), i)) return false;
  return true;
}

}  // namespace

bool in_QJ(const ParabolicCell& c, const NodeSet& J) {
  return is_max_rep(c.x, J) && in_parabolic(c.u, J) && is_min_rep(c.w, J) &&
         bruhat_leq(c.x, c.w * c.u);
}

std::vector<ParabolicCell> enumerate_QJ(const CartanPtr& cartan,
                                        const NodeSet& J) {
  const auto X = enumerate(cartan, Quotient::MaxReps, J);
  const auto U = enumerate(cartan, Quotient::Parabolic, J);
  const auto Wm = enumerate(cartan, Quotient::MinReps, J);
  std::vector<ParabolicCell> out;
  for (const auto& w : Wm) {
    for (const auto& u : U) {
      const WeylElement wu = w * u;
      for (const auto& x : X) {
        if (!bruhat_leq(x, wu)) continue;
        out.push_back({x, u, w, w.length() + u.length() - x.length()});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ParabolicCell& a, const ParabolicCell& b) {
                     return a.dim < b.dim;
                   });
  return out;
}

std::vector<int> partial_dims(const CartanPtr& cartan, const NodeSet& J) {
  if (cartan->type() != 'A') {
    throw InputError("partial flags are only realised in type A");
  }
  std::vector<int> dims;
  for (int k = 1; k <= cartan->rank(); ++k)
    if (!std::binary_search(J.begin(), J.end(), k)) dims.push_back(k);
  return dims;
}

ParabolicCell identify_partial_cell(const Flag& p, const CartanPtr& cartan,
                                    const NodeSet& J) {
  if (p.dims() != partial_dims(cartan, J)) {
    throw InputError("partial flag dimensions do not match I - J");
  }
  const std::size_t n = p.n();
  const Flag E = Flag::standard(n);
  const Flag Ebar = Flag::opposite(n);
  const Flag BL = refine_toward(p, E);
  const Flag BR = refine_toward(p, Ebar);
  ParabolicCell c;
  c.w = relative_position(E, BL, cartan);
  c.u = relative_position(BL, BR, cartan);
  c.x = WeylElement::longest(cartan) * relative_position(Ebar, BR, cartan);
  c.dim = c.w.length() + c.u.length() - c.x.length();
  if (!in_QJ(c, J)) {
    throw CheckFailure("identified triple (" + c.x.to_string() + ", " +
                       c.u.to_string() + ", " + c.w.to_string() +
                       ") is not in Q^J");
  }
  return c;
}

ParabolicPoset project_closures(const CartanPtr& cartan, const NodeSet& J,
                                std::uint64_t seed, int samples) {
  ParabolicPoset out;
  out.cells = enumerate_QJ(cartan, J);
  const auto dims = partial_dims(cartan, J);
  std::mt19937_64 rng(seed);

  // triple of each full-flag cell (v, w), memoised by keys
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>,
           std::size_t>
      memo;
  auto index_of = [&](const ParabolicCell& t) -> std::size_t {
    for (std::size_t k = 0; k < out.cells.size(); ++k)
      if (out.cells[k] == t) return k;
    throw CheckFailure("identified triple is not an element of Q^J");
  };
  auto identify = [&](const WeylElement& v, const WeylElement& w) {
    const auto key = std::make_pair(v.key(), w.key());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto pse = positive_subexpression(cartan, w.word(), v);
    std::optional<std::size_t> found;
    for (int s = 0; s < samples; ++s) {
      const auto t = random_positive(rng, pse.complement().size());
      const Flag f = Flag::full(cell_sample(pse, t)).projected(dims);
      const std::size_t k = index_of(identify_partial_cell(f, cartan, J));
      if (found && *found != k) {
        out.sample_independent = false;
        out.findings.push_back("samples of (" + v.to_string() + ", " +
                               w.to_string() + ") land in different strata");
      }
      if (!found) found = k;
    }
    memo.emplace(key, *found);
    return *found;
  };

  const auto W = enumerate(cartan);
  const std::size_t n = out.cells.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<int> ranks(n);
  for (std::size_t c = 0; c < n; ++c) {
    const ParabolicCell& T = out.cells[c];
    ranks[c] = T.dim;
    leq[c][c] = true;
    const WeylElement top = T.w * T.u;
    if (identify(T.x, top) != c) {
      out.round_trip = false;
      out.findings.push_back("R_{x,wu} of (" + T.x.to_string() + ", " +
                             T.u.to_string() + ", " + T.w.to_string() +
                             ") is not identified as itself");
    }
    for (const auto& a : W) {
      if (!bruhat_leq(T.x, a) || !bruhat_leq(a, top)) continue;
      for (const auto& b : W) {
        if (!bruhat_leq(a, b) || !bruhat_leq(b, top)) continue;
        const std::size_t k = identify(a, b);
        leq[k][c] = true;
        if (k != c && out.cells[k].dim >= T.dim) {
          out.dimensions_drop = false;
          out.findings.push_back("boundary stratum of (" + T.x.to_string() +
                                 ", " + T.u.to_string() + ", " +
                                 T.w.to_string() + ") does not drop dimension");
        }
      }
    }
  }
  out.poset = CellPoset(std::move(ranks), std::move(leq));
  return out;
}

}  // namespace tpcells
