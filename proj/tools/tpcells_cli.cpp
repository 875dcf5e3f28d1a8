#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tpcells/json.hpp"
#include "tpcells/suites.hpp"

using namespace tpcells;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type;
  int rank = 0;
  std::string J;
  std::string w_word;
  std::string v = "e";
  std::uint64_t seed = 1;
  std::string out;
  std::string suite = "all";
  std::string csv;
};

CartanPtr resolve_cartan(const Options& o) {
  if (o.type.empty()) throw InputError("--type is required");
  if (o.type.size() == 1) {
    if (o.rank <= 0) throw InputError("--rank is required with a bare type letter");
    return CartanData::make(o.type[0], o.rank);
  }
  const CartanPtr c = CartanData::parse(o.type);
  if (o.rank > 0 && o.rank != c->rank()) {
    throw InputError("--rank disagrees with --type " + o.type);
  }
  return c;
}

WeylElement resolve_w(const CartanPtr& c, const Options& o) {
  if (o.w_word.empty()) return WeylElement::longest(c);
  const Word word = parse_word(o.w_word);
  if (!is_reduced(c, word)) throw InputError("--w-word is not reduced");
  return WeylElement::from_word(c, word);
}

PositiveSubexpression resolve_cell(const CartanPtr& c, const Options& o) {
  const WeylElement w = resolve_w(c, o);
  const WeylElement v = WeylElement::from_word(c, parse_word(o.v));
  if (!bruhat_leq(v, w)) throw InputError("--v is not below w in Bruhat order");
  const Word word = o.w_word.empty() ? w.word() : parse_word(o.w_word);
  return positive_subexpression(c, word, v);
}

std::optional<FoldingData> folding_for(const CartanPtr& c) {
  if (c->type() == 'C') return fold_a_to_c(c->rank());
  if (c->type() == 'B' && c->rank() >= 3) return fold_d_to_b(c->rank());
  return std::nullopt;
}

std::vector<NodeSet> resolve_parabolics(const CartanPtr& c, const Options& o) {
  if (c->type() != 'A') return {};
  if (!o.J.empty()) return {parse_node_set(o.J)};
  std::vector<NodeSet> out;
  for (int j : c->nodes()) out.push_back({j});
  return out;
}

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot open " + o.out);
  f << j.dump(2) << "\n";
}

template <typename Fn>
void for_each_cell(const CartanPtr& c, Fn fn) {
  const auto W = enumerate(c);
  for (const auto& w : W)
    for (const auto& v : W)
      if (bruhat_leq(v, w)) fn(positive_subexpression(c, w.word(), v));
}

int cmd_cells(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  Json j{{"type", to_json(*c)}};
  if (o.J.empty()) {
    const auto full = enumerate_full_flag_cells(c);
    Json rows = Json::array();
    for (const auto& cell : full.cells) {
      rows.push_back(Json{{"v", to_json(cell.v)}, {"w", to_json(cell.w)},
                          {"dim", cell.dim}});
    }
    j["cells"] = rows;
    j["census"] = full.poset.census();
  } else {
    const NodeSet J = parse_node_set(o.J);
    Json rows = Json::array();
    for (const auto& t : enumerate_QJ(c, J)) {
      rows.push_back(Json{{"x", to_json(t.x)}, {"u", to_json(t.u)},
                          {"w", to_json(t.w)}, {"dim", t.dim}});
    }
    j["J"] = J;
    j["cells"] = rows;
  }
  emit(o, j);
  return kOk;
}

int cmd_param(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  const auto pse = resolve_cell(c, o);
  const auto fd = folding_for(c);
  CellParameterization p;
  if (fd) {
    p = folded_cell_representative(*fd, pse);
  } else {
    p = cell_representative(pse);
  }
  const auto names = p.names();
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < p.matrix.cols(); ++k) {
      row.push_back(p.matrix(i, k).to_string(names));
    }
    rows.push_back(std::move(row));
  }
  emit(o, Json{{"type", to_json(*c)},
               {"subexpression", to_json(pse)},
               {"variables", names},
               {"matrix", rows}});
  return kOk;
}

int cmd_certify(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  const auto fd = folding_for(c);
  auto one = [&](const PositiveSubexpression& pse) {
    return fd ? certify_folded(*fd, pse) : certify_positive(pse);
  };
  bool pass = true;
  Json reports = Json::array();
  auto record = [&](const PositiveSubexpression& pse) {
    const auto rep = one(pse);
    pass = pass && rep.pass;
    Json r = to_json(rep);
    reports.push_back(std::move(r));
  };
  if (o.w_word.empty() && o.v == "e") {
    for_each_cell(c, record);
  } else {
    record(resolve_cell(c, o));
  }
  emit(o, Json{{"type", to_json(*c)}, {"pass", pass}, {"reports", reports}});
  return pass ? kOk : kCheckFailed;
}

int cmd_polytope(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  const auto pse = resolve_cell(c, o);
  const auto es = build_exponent_set(certify_positive(pse).coords);
  const auto hull = es.hull();
  const int expected = pse.w().length() - pse.v.length();
  emit(o, Json{{"cell", {{"v", to_json(pse.v)}, {"w", to_json(pse.w())}}},
               {"S", to_json(es)},
               {"hull", to_json(hull)},
               {"expected_dim", expected}});
  return hull.dim() == expected ? kOk : kCheckFailed;
}

int cmd_glue_scan(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  bool pass = true;
  Json scans = Json::array();
  auto record = [&](const PositiveSubexpression& pse) {
    const auto rep = boundary_scan(pse, o.seed);
    pass = pass && rep.pass;
    scans.push_back(to_json(rep));
  };
  if (o.w_word.empty() && o.v == "e") {
    for_each_cell(c, record);
  } else {
    record(resolve_cell(c, o));
  }
  emit(o, Json{{"type", to_json(*c)}, {"pass", pass}, {"scans", scans}});
  return pass ? kOk : kCheckFailed;
}

std::string census_csv(const std::vector<std::size_t>& census) {
  std::string out = "dim,cells\n";
  for (std::size_t d = 0; d < census.size(); ++d) {
    out += std::to_string(d) + "," + std::to_string(census[d]) + "\n";
  }
  return out;
}

int cmd_poset(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  Json j{{"type", to_json(*c)}};
  const CellPoset* poset = nullptr;
  bool pass = true;
  FullFlagPoset full;
  ParabolicPoset partial;
  if (o.J.empty()) {
    full = enumerate_full_flag_cells(c);
    poset = &full.poset;
    j.update(to_json(full));
  } else {
    const NodeSet J = parse_node_set(o.J);
    partial = project_closures(c, J, o.seed);
    poset = &partial.poset;
    j["J"] = J;
    j.update(to_json(partial.cells, partial.poset));
    j["findings"] = partial.findings;
    pass = partial.findings.empty();
  }
  Json euler = Json::array();
  for (std::size_t k = 0; k < poset->size(); ++k) {
    const long chi = euler_char_closure(*poset, k);
    pass = pass && chi == 1;
    euler.push_back(chi);
  }
  const auto rep = eulerian_check(*poset);
  pass = pass && rep.eulerian;
  j["census"] = poset->census();
  j["euler"] = euler;
  j["eulerian"] = to_json(rep);
  j["pass"] = pass;
  emit(o, j);
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw InputError("cannot open " + o.csv);
    f << census_csv(poset->census());
  }
  return pass ? kOk : kCheckFailed;
}

Json suite_json(const SuiteResult& r) {
  return Json{{"name", r.name},
              {"status", !r.applicable ? "skipped" : r.pass ? "pass" : "fail"},
              {"detail", r.detail}};
}

int cmd_fold(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  const auto fd = folding_for(c);
  if (!fd) throw InputError("no folding onto " + c->label());
  const auto r = suite_fold(c);
  Json j{{"type", to_json(*c)},
         {"folding", to_json(*fd)},
         {"flip_matches_sigma", fd->dot->type() == 'A' ? Json(flip_matches_sigma(*fd))
                                                        : Json(nullptr)},
         {"suite", suite_json(r)}};
  if (!o.w_word.empty() || o.v != "e") {
    const auto pse = resolve_cell(c, o);
    j["expanded"] = to_json(expand_subexpression(*fd, pse));
  }
  emit(o, j);
  std::cerr << r.name << ": " << r.seconds << " s\n";
  return r.pass ? kOk : kCheckFailed;
}

int cmd_check(const Options& o) {
  const CartanPtr c = resolve_cartan(o);
  const auto results = run_suites(o.suite, c, resolve_parabolics(c, o), o.seed);
  bool pass = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    arr.push_back(suite_json(r));
    std::cerr << (r.applicable ? (r.pass ? "PASS " : "FAIL ") : "SKIP ") << r.name
              << " (" << r.seconds << " s) " << r.detail << "\n";
  }
  emit(o, Json{{"type", to_json(*c)}, {"pass", pass}, {"suites", arr}});
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cells of totally nonnegative flag varieties"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Cartan type, e.g. A2 (or A with --rank)")
        ->required();
    sub->add_option("--rank", o.rank, "rank when --type is a single letter");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  auto cell = [&](CLI::App* sub) {
    sub->add_option("--w-word", o.w_word, "reduced word of w, e.g. 1,2,1 (default w0)");
    sub->add_option("--v", o.v, "word of v (default e)");
  };

  auto* cells = app.add_subcommand("cells", "list cells (or Q^J triples with --J)");
  common(cells);
  cells->add_option("--J", o.J, "parabolic subset, e.g. 2 or 1,3");
  auto* param = app.add_subcommand("param", "symbolic cell representative");
  common(param);
  cell(param);
  auto* certify = app.add_subcommand("certify", "positivity certificates");
  common(certify);
  cell(certify);
  auto* polytope = app.add_subcommand("polytope", "exponent set and its hull");
  common(polytope);
  cell(polytope);
  auto* glue = app.add_subcommand("glue-scan", "boundary scan of the glueing map");
  common(glue);
  cell(glue);
  auto* poset = app.add_subcommand("poset", "closure poset with Euler checks");
  common(poset);
  poset->add_option("--J", o.J, "parabolic subset");
  poset->add_option("--csv", o.csv, "write the dimension census as CSV");
  auto* fold = app.add_subcommand("fold", "folding suite for types B and C");
  common(fold);
  cell(fold);
  auto* check = app.add_subcommand("check", "verification suites");
  common(check);
  check->add_option("--J", o.J, "parabolic subset (default: every single node)");
  check->add_option("--suite", o.suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cells) return cmd_cells(o);
    if (*param) return cmd_param(o);
    if (*certify) return cmd_certify(o);
    if (*polytope) return cmd_polytope(o);
    if (*glue) return cmd_glue_scan(o);
    if (*poset) return cmd_poset(o);
    if (*fold) return cmd_fold(o);
    if (*check) return cmd_check(o);
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
