#include "tpcells/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "tpcells/braid.hpp"
#include "tpcells/fold.hpp"
#include "tpcells/poset.hpp"
#include "tpcells/toric.hpp"

namespace tpcells {

namespace {

SuiteResult timed(const std::string& name,
                  const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "error: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

void fail(SuiteResult& r, const std::string& msg) {
  if (r.pass) r.detail = msg;
  r.pass = false;
}

void skip(SuiteResult& r, const std::string& why) {
  r.applicable = false;
  r.detail = "skipped: " + why;
}

std::string cell_name(const WeylElement& v, const WeylElement& w) {
  return "(" + v.to_string() + ", " + w.to_string() + ")";
}

std::string census_string(const std::vector<std::size_t>& c) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "," : "") << c[k];
  out << ")";
  return out.str();
}

std::size_t matrix_n(const CartanPtr& c) {
  return static_cast<std::size_t>(c->rank()) + 1;
}

// one coordinate-transport instance; empty string on success
std::string transport(const CartanPtr& cartan, const WeylElement& v,
                      const Word& from, const Word& to) {
  const std::size_t n = matrix_n(cartan);
  const auto pse = positive_subexpression(cartan, from, v);
  const auto poly = segre_coordinates(cell_representative(pse).matrix);
  const std::vector<RationalFn> ref(poly.begin(), poly.end());
  FactoredWord fw = factored_word(pse);
  const std::string where = "v=" + v.to_string() + " " + format_word(from) +
                            " -> " + format_word(to);
  for (const auto& m : word_path(cartan, from, to)) {
    fw = apply_move(cartan, fw, m);
    for (const auto& l : fw)
      if (!l.dot && !l.coord.subtraction_free()) {
        return "substitution with a minus sign, " + where;
      }
    if (!(transported_segre(n, fw) == ref)) {
      return "Segre coordinates changed under a move, " + where;
    }
  }
  if (letters(fw) != to) return "path does not reach the target, " + where;
  if (dot_positions(fw) != positive_subexpression(cartan, to, v).v_plus) {
    return "transported s_dot positions differ from v_+, " + where;
  }
  return {};
}

FactoredWord three(int i, int j, int mask, const RationalFn (&vals)[3]) {
  FactoredWord fw;
  const int nodes[3] = {i, j, i};
  for (int k = 0; k < 3; ++k) {
    const bool dot = (mask >> k) & 1;
    fw.push_back(Letter{nodes[k], dot, dot ? RationalFn() : vals[k]});
  }
  return fw;
}

}  // namespace

SuiteResult suite_euler(const CartanPtr& cartan,
                        const std::vector<NodeSet>& parabolics) {
  return timed("euler " + cartan->label(), [&](SuiteResult& r) {
    const auto full = enumerate_full_flag_cells(cartan);
    std::size_t checked = 0;
    for (std::size_t c = 0; c < full.poset.size(); ++c, ++checked) {
      const long chi = euler_char_closure(full.poset, c);
      if (chi != 1) {
        fail(r, "closure of " + cell_name(full.cells[c].v, full.cells[c].w) +
                    " has Euler characteristic " + std::to_string(chi));
      }
    }
    if (cartan->type() == 'A') {
      for (const auto& J : parabolics) {
        const auto pp = project_closures(cartan, J);
        for (const auto& f : pp.findings) fail(r, f);
        for (std::size_t c = 0; c < pp.poset.size(); ++c, ++checked) {
          const long chi = euler_char_closure(pp.poset, c);
          if (chi != 1) {
            const auto& T = pp.cells[c];
            fail(r, "J=" + format_word(J) + ": closure of (" + T.x.to_string() +
                        ", " + T.u.to_string() + ", " + T.w.to_string() +
                        ") has Euler characteristic " + std::to_string(chi));
          }
        }
      }
    }
    if (r.pass) r.detail = std::to_string(checked) + " closures, all chi = 1";
  });
}

SuiteResult suite_eulerian(const CartanPtr& cartan) {
  return timed("eulerian " + cartan->label(), [&](SuiteResult& r) {
    const auto full = enumerate_full_flag_cells(cartan);
    const auto rep = eulerian_check(full.poset);
    if (!rep.eulerian) {
      fail(r, "mu = " + std::to_string(rep.mu) + ", expected " +
                  std::to_string(rep.expected) + " on interval [" +
                  std::to_string(rep.violation->first) + ", " +
                  std::to_string(rep.violation->second) + "]");
    } else {
      r.detail = std::to_string(rep.intervals) + " intervals";
    }
  });
}

SuiteResult suite_certify(const CartanPtr& cartan) {
  return timed("certify " + cartan->label(), [&](SuiteResult& r) {
    std::optional<FoldingData> fd;
    if (cartan->type() == 'C') {
      fd = fold_a_to_c(cartan->rank());
    } else if (cartan->type() != 'A') {
      skip(r, "no matrix realisation for type " + cartan->label());
      return;
    }
    const auto W = enumerate(cartan);
    std::size_t cells = 0;
    for (const auto& w : W) {
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        ++cells;
        const auto pse = positive_subexpression(cartan, w.word(), v);
        const auto rep = fd ? certify_folded(*fd, pse) : certify_positive(pse);
        if (!rep.pass) fail(r, "certificate fails for " + cell_name(v, w));
      }
    }
    if (r.pass) r.detail = std::to_string(cells) + " cells certified";
  });
}

SuiteResult suite_braid(const CartanPtr& cartan, std::uint64_t seed,
                        std::size_t random_pairs) {
  return timed("braid " + cartan->label(), [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "coordinate changes are implemented for type A");
      return;
    }
    // generator identities in SL_3
    const auto a2 = CartanData::make('A', 2);
    const RationalFn vals[3] = {RationalFn(LaurentPoly::variable(3, 0)),
                                RationalFn(LaurentPoly::variable(3, 1)),
                                RationalFn(LaurentPoly::variable(3, 2))};
    std::size_t identities = 0;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
      // mask bit k set: letter k is s_dot. Rule (2) and its reverse (masks
      // 2 and 4) agree only up to a unipotent upper triangular factor.
      for (int mask : {0, 3, 6, 7, 2, 4}) {
        const FactoredWord before = three(i, j, mask, vals);
        const FactoredWord after =
            apply_move(a2, before, BraidMove{1, BraidMove::Kind::Braid});
        const bool exact = mask != 2 && mask != 4;
        ++identities;
        if (!verify_move_identity(3, before, after, exact)) {
          fail(r, "generator identity fails for pattern " + std::to_string(mask));
        }
        for (const auto& l : after)
          if (!l.dot && !l.coord.subtraction_free()) {
            fail(r, "substitution with a minus sign in pattern " +
                        std::to_string(mask));
          }
      }
    }
    {
      const FactoredWord yy{Letter{1, false, vals[0]}, Letter{3, false, vals[1]}};
      const FactoredWord ys{Letter{1, false, vals[0]}, Letter{3, true, {}}};
      const auto a3 = CartanData::make('A', 3);
      const BraidMove comm{1, BraidMove::Kind::Commutation};
      identities += 2;
      if (!verify_move_identity(4, yy, apply_move(a3, yy, comm), true) ||
          !verify_move_identity(4, ys, apply_move(a3, ys, comm), true)) {
        fail(r, "commutation identity fails");
      }
    }

    std::size_t paths = 0;
    if (random_pairs == 0) {
      const WeylElement w0 = WeylElement::longest(cartan);
      for (const auto& v : enumerate(cartan)) {
        for (const auto& target : reduced_words(w0)) {
          ++paths;
          const std::string err = transport(cartan, v, w0.word(), target);
          if (!err.empty()) fail(r, err);
        }
      }
    } else {
      std::mt19937_64 rng(seed);
      std::vector<WeylElement> W;
      for (const auto& w : enumerate(cartan))
        if (reduced_words(w).size() > 1) W.push_back(w);
      for (std::size_t k = 0; k < random_pairs; ++k) {
        const WeylElement& w =
            W[std::uniform_int_distribution<std::size_t>(0, W.size() - 1)(rng)];
        std::vector<WeylElement> below;
        for (const auto& v : enumerate(cartan))
          if (bruhat_leq(v, w)) below.push_back(v);
        const WeylElement& v = below[std::uniform_int_distribution<std::size_t>(
            0, below.size() - 1)(rng)];
        const auto words = reduced_words(w);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        const Word& from = words[pick(rng)];
        const Word& to = words[pick(rng)];
        ++paths;
        const std::string err = transport(cartan, v, from, to);
        if (!err.empty()) fail(r, err);
      }
    }
    if (r.pass) {
      r.detail = std::to_string(identities) + " generator identities (rule 2 "
                 "modulo U+), " + std::to_string(paths) + " word paths";
    }
  });
}

SuiteResult suite_membership(const CartanPtr& cartan, std::uint64_t seed,
                             int samples) {
  return timed("membership " + cartan->label(), [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "no matrix realisation for type " + cartan->label());
      return;
    }
    std::mt19937_64 rng(seed);
    const auto W = enumerate(cartan);
    std::size_t points = 0;
    for (const auto& w : W) {
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto pse = positive_subexpression(cartan, w.word(), v);
        for (int s = 0; s < samples; ++s) {
          const auto g = cell_sample(pse, random_positive(rng, pse.complement().size()));
          const BruhatPair bp = bruhat_pair(Flag::full(g), cartan);
          ++points;
          if (!(bp.v == v && bp.w == w)) {
            fail(r, "sample of " + cell_name(v, w) + " lies in " +
                        cell_name(bp.v, bp.w));
          }
          if (v.is_identity() && !tnn_minor_check(g)) {
            fail(r, "y-product for " + w.to_string() + " has a negative minor");
          }
        }
      }
    }
    if (r.pass) r.detail = std::to_string(points) + " sampled points";
  });
}

SuiteResult suite_toric(const CartanPtr& cartan) {
  return timed("toric " + cartan->label(), [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "no matrix realisation for type " + cartan->label());
      return;
    }
    const auto W = enumerate(cartan);
    std::size_t cells = 0;
    for (const auto& w : W) {
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        ++cells;
        const auto pse = positive_subexpression(cartan, w.word(), v);
        const ExponentSet es = build_exponent_set(certify_positive(pse).coords);
        const int dim = es.hull().dim();
        if (dim != w.length() - v.length()) {
          fail(r, "polytope of " + cell_name(v, w) + " has dimension " +
                      std::to_string(dim));
        }
        if (!es.columns_nonzero()) {
          fail(r, "unused monomial in S for " + cell_name(v, w));
        }
      }
    }
    if (r.pass) r.detail = std::to_string(cells) + " polytopes";
  });
}

SuiteResult suite_glue(const CartanPtr& cartan, std::uint64_t seed) {
  return timed("glue " + cartan->label(), [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "no matrix realisation for type " + cartan->label());
      return;
    }
    const auto W = enumerate(cartan);
    std::size_t faces = 0;
    std::size_t hit = 0;
    std::size_t closure = 0;
    for (const auto& w : W) {
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        const auto rep =
            boundary_scan(positive_subexpression(cartan, w.word(), v), seed);
        faces += rep.hits.size();
        hit += rep.cells_hit;
        closure += rep.closure_cells;
        for (const auto& h : rep.hits) {
          if (!h.identified) {
            fail(r, "face of " + cell_name(v, w) + ": " + h.error);
          } else if (!h.sandwiched) {
            fail(r, "face of " + cell_name(v, w) + " lands in " +
                        cell_name(h.v, h.w));
          } else if (!h.sample_independent) {
            fail(r, "face of " + cell_name(v, w) + " is sample dependent");
          }
        }
      }
    }
    const std::string coverage = std::to_string(faces) + " faces, boundary "
                                 "cells hit " + std::to_string(hit) + "/" +
                                 std::to_string(closure);
    r.detail = r.pass ? coverage : r.detail + " (" + coverage + ")";
  });
}

SuiteResult suite_fold(const CartanPtr& cartan) {
  return timed("fold " + cartan->label(), [&](SuiteResult& r) {
    FoldingData fd;
    if (cartan->type() == 'C') {
      fd = fold_a_to_c(cartan->rank());
    } else if (cartan->type() == 'B' && cartan->rank() >= 3) {
      fd = fold_d_to_b(cartan->rank());
    } else {
      skip(r, "no shipped folding onto " + cartan->label());
      return;
    }
    const auto W = enumerate(cartan);
    std::size_t cells = 0;
    for (const auto& w : W) {
      for (const auto& v : W) {
        if (!bruhat_leq(v, w)) continue;
        ++cells;
        const auto ex =
            expand_subexpression(fd, positive_subexpression(cartan, w.word(), v));
        const auto direct = positive_subexpression(fd.dot, ex.word, ex.v);
        if (direct.v_plus != ex.v_plus || !is_positive_subexpression(ex)) {
          fail(r, "expanded subexpression differs for " + cell_name(v, w));
        }
      }
    }
    if (r.pass) {
      r.detail = std::to_string(cells) + " cells via " + fd.dot->label();
    }
  });
}

SuiteResult suite_census(const CartanPtr& cartan, const NodeSet& J) {
  return timed("census " + cartan->label(), [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "the permutation oracle covers type A");
      return;
    }
    const int n = cartan->rank() + 1;
    const auto full = enumerate_full_flag_cells(cartan).poset.census();
    const auto full_oracle = oracle_full_census(n);
    std::vector<std::size_t> qj(1, 0);
    for (const auto& c : enumerate_QJ(cartan, J)) {
      if (static_cast<std::size_t>(c.dim) >= qj.size()) qj.resize(c.dim + 1, 0);
      ++qj[c.dim];
    }
    const auto qj_oracle = oracle_qj_census(n, J);
    if (full != full_oracle) {
      fail(r, "full-flag census " + census_string(full) + " vs oracle " +
                  census_string(full_oracle));
    }
    if (qj != qj_oracle) {
      fail(r, "Q^J census " + census_string(qj) + " vs oracle " +
                  census_string(qj_oracle));
    }
    if (r.pass) {
      r.detail = "full " + census_string(full) + ", J=" + format_word(J) + " " +
                 census_string(qj);
    }
  });
}

SuiteResult suite_partial(const CartanPtr& cartan, const NodeSet& J,
                          std::uint64_t seed, int samples) {
  return timed("partial " + cartan->label() + " J=" + format_word(J),
               [&](SuiteResult& r) {
    if (cartan->type() != 'A') {
      skip(r, "partial flags are only realised in type A");
      return;
    }
    std::mt19937_64 rng(seed);
    const auto dims = partial_dims(cartan, J);
    std::size_t points = 0;
    const auto cells = enumerate_QJ(cartan, J);
    for (const auto& T : cells) {
      const WeylElement top = T.w * T.u;
      const auto pse = positive_subexpression(cartan, top.word(), T.x);
      for (int s = 0; s < samples; ++s) {
        const auto g = cell_sample(pse, random_positive(rng, pse.complement().size()));
        const auto got =
            identify_partial_cell(Flag::full(g).projected(dims), cartan, J);
        ++points;
        if (!(got == T)) {
          fail(r, "sample of (" + T.x.to_string() + ", " + T.u.to_string() +
                      ", " + T.w.to_string() + ") identified as (" +
                      got.x.to_string() + ", " + got.u.to_string() + ", " +
                      got.w.to_string() + ")");
        }
      }
    }
    if (r.pass) {
      r.detail = std::to_string(cells.size()) + " triples, " +
                 std::to_string(points) + " samples";
    }
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "euler",   "eulerian", "certify", "braid",  "membership",
      "toric",   "glue",     "fold",    "census", "partial"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const CartanPtr& cartan,
                                    const std::vector<NodeSet>& parabolics,
                                    std::uint64_t seed) {
  const auto& names = suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
    throw InputError("unknown suite " + name);
  }
  auto want = [&](const char* s) { return name == "all" || name == s; };
  const std::size_t words = reduced_words(WeylElement::longest(cartan)).size();
  std::vector<SuiteResult> out;
  if (want("euler")) out.push_back(suite_euler(cartan, parabolics));
  if (want("eulerian")) out.push_back(suite_eulerian(cartan));
  if (want("certify")) out.push_back(suite_certify(cartan));
  if (want("braid")) out.push_back(suite_braid(cartan, seed, words <= 16 ? 0 : 10));
  if (want("membership")) out.push_back(suite_membership(cartan, seed, 5));
  if (want("toric")) out.push_back(suite_toric(cartan));
  if (want("glue")) out.push_back(suite_glue(cartan, seed));
  if (want("fold")) out.push_back(suite_fold(cartan));
  if (want("census")) {
    for (const auto& J : parabolics) out.push_back(suite_census(cartan, J));
  }
  if (want("partial")) {
    for (const auto& J : parabolics) out.push_back(suite_partial(cartan, J, seed, 5));
  }
  return out;
}

// ---------------------------------------------------------------------------
// permutation oracle

namespace {

using Perm = std::vector<int>;  // one-line notation, 0-based values

int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// v <= w iff #{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k} for all i, k
bool rank_leq(const Perm& v, const Perm& w) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int cv = 0;
      int cw = 0;
      for (int a = 0; a <= i; ++a) {
        cv += v[a] >= k;
        cw += w[a] >= k;
      }
      if (cv > cw) return false;
    }
  return true;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void bump(std::vector<std::size_t>& census, int dim) {
  if (static_cast<std::size_t>(dim) >= census.size()) census.resize(dim + 1, 0);
  ++census[dim];
}

}  // namespace

std::vector<std::size_t> oracle_full_census(int n) {
  const auto perms = all_perms(n);
  std::vector<std::size_t> census;
  for (const auto& w : perms)
    for (const auto& v : perms)
      if (rank_leq(v, w)) bump(census, inversions(w) - inversions(v));
  return census;
}

std::vector<std::size_t> oracle_qj_census(int n, const NodeSet& J) {
  const auto perms = all_perms(n);
  auto in_j = [&](int j) { return std::binary_search(J.begin(), J.end(), j); };
  // block of each position: positions j, j+1 (1-based) share a block if j in J
  std::vector<int> block(n, 0);
  for (int i = 1; i < n; ++i) block[i] = block[i - 1] + (in_j(i) ? 0 : 1);
  std::vector<Perm> xs, us, ws;
  for (const auto& p : perms) {
    bool all_desc = true;
    bool no_desc = true;
    for (int j : J) {
      const bool desc = p[j - 1] > p[j];
      all_desc = all_desc && desc;
      no_desc = no_desc && !desc;
    }
    bool blockwise = true;
    for (int i = 0; i < n; ++i) blockwise = blockwise && block[p[i]] == block[i];
    if (all_desc) xs.push_back(p);
    if (no_desc) ws.push_back(p);
    if (blockwise) us.push_back(p);
  }
  std::vector<std::size_t> census;
  for (const auto& w : ws)
    for (const auto& u : us) {
      Perm wu(n);
      for (int i = 0; i < n; ++i) wu[i] = w[u[i]];
      for (const auto& x : xs)
        if (rank_leq(x, wu)) {
          bump(census, inversions(w) + inversions(u) - inversions(x));
        }
    }
  return census;
}

}  // namespace tpcells
