// dycktile: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dycktile/closed_forms.hpp"
#include "dycktile/conjectures.hpp"
#include "dycktile/config.hpp"
#include "dycktile/double_dimer.hpp"
#include "dycktile/errors.hpp"
#include "dycktile/evenly_spaced.hpp"
#include "dycktile/grove.hpp"
#include "dycktile/io.hpp"
#include "dycktile/kernels.hpp"
#include "dycktile/matrix_m.hpp"
#include "dycktile/oracle.hpp"
#include "dycktile/tiling.hpp"
#include "dycktile/verify.hpp"

using namespace dycktile;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
  return code;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
}

json chord_json(const DyckPath& h) {
  json out = json::array();
  for (const Chord& c : chords_of(h)) out.push_back({{"up", c.up}, {"down", c.down}, {"height", c.height}});
  return out;
}

json path_record(const DyckPath& h) {
  json j = io::path_labels(h);
  j["heights"] = h.heights_str();
  j["chords"] = chord_json(h);
  return j;
}

struct Options {
  // shared
  std::string format = "json";
  unsigned digits = 64;
  // bijections
  int n = 3;
  std::string bpe, pairing, set, path;
  // matrix
  bool inverse = false;
  std::string method = "invert";
  // shapes
  std::string shape;
  // conjectures
  std::string which = "row";
  // qeuler
  int order = 6;
  // ddimer / grove / oracle
  std::string x_file, graph_file, mode = "limit", positions, sstar;
  int nodes = 0;
  int disk_n = 10000;
};

int cmd_bijections(const Options& o) {
  json out;
  if (!o.bpe.empty()) {
    out = path_record(bpe_to_dyck(BalancedWord::parse(o.bpe)));
  } else if (!o.pairing.empty()) {
    out = path_record(pairing_to_dyck(NoncrossingPairing::parse(o.pairing)));
  } else if (!o.set.empty()) {
    out = path_record(confining_to_dyck(ConfiningSet::parse(o.set, o.n)));
  } else {
    json rows = json::array();
    for (const DyckPath& h : enumerate_dyck_paths(o.n)) rows.push_back(path_record(h));
    out = {{"n", o.n}, {"paths", rows}};
  }
  emit(out);
  return kExitOk;
}

int cmd_matrix(const Options& o) {
  require_n_within_cap(o.n, "matrix");
  PathIndex paths(o.n);
  TriMatrix m = kernels::build_m_parallel(paths);
  if (o.inverse) {
    if (o.method == "invert")
      m = kernels::invert_parallel(m);
    else if (o.method == "tilings")
      m = kernels::minv_from_tilings_parallel(paths);
    else
      throw ValidationError("method must be invert or tilings");
  }
  std::cout << io::render_matrix(paths, m, o.inverse, io::parse_format(o.format));
  return kExitOk;
}

json closed_form_json(const SkewShape& s) {
  json out = json::object();
  if (auto v = closed_form_v_lower(s)) out["v_lower"] = io::qpoly(*v);
  if (auto p = lambda_shape_params(s)) {
    out["lambda_shape"] = {{"a", p->a}, {"b", p->b}, {"c", p->c}, {"d", p->d}, {"f", io::qpoly(closed_form_lambda_shape(*p))}};
  }
  if (s.lower() == DyckPath::zigzag(s.semilength())) {
    out["zigzag_row"] = {{"factors", zigzag_row_factors(s.upper())}, {"f", io::qpoly(closed_form_zigzag_row(s))}};
  }
  if (is_width_one_strip(s) && !s.empty()) {
    out["strip"] = {{"expression", strip_expression(s)}, {"abs_value", closed_form_strip(s).get_str()}};
  }
  return out;
}

SkewShape shape_arg(const Options& o) {
  SkewShape s = SkewShape::parse(o.shape);
  require_n_within_cap(s.semilength(), "shape");
  if (!s.valid()) throw ValidationError("upper path is not weakly above lower path");
  return s;
}

int cmd_tilings(const Options& o) {
  SkewShape s = shape_arg(o);
  auto tilings = enumerate_cover_inclusive(s);
  if (o.format == "ascii") {
    std::cout << "shape " << s.str() << "  area " << s.area() << "  tilings " << tilings.size() << "\n";
    for (std::size_t k = 0; k < tilings.size(); ++k) {
      std::cout << "\n#" << k + 1 << " (" << tilings[k].tiles.size() << " tiles)\n";
      for (const std::string& row : render_ascii(s, tilings[k])) std::cout << row << "\n";
    }
    return kExitOk;
  }
  json list = json::array();
  for (const DyckTiling& t : tilings) list.push_back(io::tiling_json(s, t));
  Integer count(static_cast<unsigned long>(tilings.size()));
  emit({{"shape", s.str()},
        {"area", s.area()},
        {"count", tilings.size()},
        {"minv", io::exact(s.area() % 2 ? Integer(-count) : count)},
        {"tilings", list}});
  return kExitOk;
}

int cmd_fpoly(const Options& o) {
  SkewShape s = shape_arg(o);
  QPoly f;
  if (o.method == "recursive")
    f = f_poly_recursive(s);
  else if (o.method == "enumerate" || o.method == "invert")
    f = f_poly(s);
  else
    throw ValidationError("method must be enumerate or recursive");
  emit({{"shape", s.str()},
        {"area", s.area()},
        {"f", io::qpoly(f)},
        {"f_at_minus_one", io::exact(f.at_minus_one())},
        {"minv", io::exact(minv_of_skew(s))},
        {"closed_forms", closed_form_json(s)}});
  return kExitOk;
}

int cmd_conjectures(const Options& o) {
  if (o.which != "row" && o.which != "col") throw ValidationError("--which must be row or col");
  std::vector<DyckPath> targets;
  if (!o.path.empty())
    targets.push_back(DyckPath::parse(o.path));
  else
    targets = enumerate_dyck_paths(o.n);
  json rows = json::array();
  bool all = true;
  for (const DyckPath& h : targets) {
    require_n_within_cap(h.semilength(), "conjectures");
    SumCheck c = o.which == "row" ? rowsum_check(h) : colsum_check(h);
    all = all && c.holds;
    rows.push_back({{"path", h.ud()},
                    {"bpe", h.bpe()},
                    {"observed", io::qpoly(c.observed)},
                    {"predicted", c.predicted ? io::qpoly(*c.predicted) : json(nullptr)},
                    {"holds", c.holds}});
  }
  emit({{"which", o.which}, {"results", rows}, {"all_hold", all}});
  return kExitOk;
}

int cmd_qeuler(const Options& o) {
  auto series = q_euler_series(o.order);
  json coeffs = json::array();
  for (int k = 0; k <= o.order; ++k) {
    const QPoly& c = series[static_cast<std::size_t>(k)];
    coeffs.push_back({{"power", k}, {"coefficient", io::qpoly(c)}, {"equals_q_factorial", c == q_fact(k)}});
  }
  emit({{"order", o.order}, {"coefficients", coeffs}});
  return kExitOk;
}

int cmd_ddimer_dist(const Options& o) {
  if (o.x_file.empty()) throw ValidationError("--x is required");
  XMatrix x = XMatrix::from_json(read_json_file(o.x_file));
  PairingDistribution d = pairing_distribution(x);
  json probs = json::array();
  for (const auto& [p, v] : d.probabilities) probs.push_back({{"pairing", p.str()}, {"probability", io::exact(v)}});
  emit({{"n", d.n}, {"probabilities", probs}, {"total", io::exact(d.total())}, {"has_negative", d.has_negative}});
  return kExitOk;
}

int cmd_ddimer_marginal(const Options& o) {
  PartialPairing sub = parse_partial_pairing(o.pairing);
  std::optional<XMatrix> x;
  if (!o.x_file.empty()) x = XMatrix::from_json(read_json_file(o.x_file));
  int total = o.nodes;
  if (x) {
    if (total != 0 && total != 2 * x->semilength()) throw ValidationError("--nodes disagrees with the X matrix");
    total = 2 * x->semilength();
  }
  if (total == 0) throw ValidationError("--nodes or --x is required");
  FormalSetCombo formula = local_marginal_formula(total, sub);
  json terms = json::array();
  for (const auto& [s, c] : formula.terms()) terms.push_back({{"set", format_set(s)}, {"coefficient", c.get_str()}});
  json out = {{"pairing", format_partial_pairing(sub)}, {"nodes", total}, {"formula", formula.str() + "  (each D over D_empty)"}, {"terms", terms}};
  if (x) out["probability"] = io::exact(formula.evaluate<Rational>(d_ratio(*x)));
  emit(out);
  return kExitOk;
}

int cmd_ddimer_evenly(const Options& o) {
  set_float_digits(o.digits);
  PartialPairing sub = parse_partial_pairing(o.pairing);
  EvenlySpaced g;
  if (o.mode == "limit") {
    g = EvenlySpaced::limit();
  } else if (o.mode == "disk") {
    g = EvenlySpaced::disk(o.disk_n);
  } else if (o.mode == "half-plane") {
    std::vector<HighFloat> xs;
    std::stringstream ss(o.positions);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        xs.emplace_back(item);
      } catch (const std::exception&) {
        throw ValidationError("bad position '" + item + "'");
      }
    }
    g = EvenlySpaced::half_plane(std::move(xs));
  } else {
    throw ValidationError("--mode must be limit, disk or half-plane");
  }
  HighFloat v = g.marginal(sub);
  emit({{"mode", o.mode}, {"pairing", format_partial_pairing(sub)}, {"probability", io::approx(v, o.digits)}});
  return kExitOk;
}

int cmd_grove_ratios(const Options& o) {
  if (o.graph_file.empty()) throw ValidationError("--graph is required");
  WeightedGraph g = WeightedGraph::from_json(read_json_file(o.graph_file));
  GroveRatios r = grove_ratios(response_matrix(g));
  json list = json::array();
  for (const auto& [p, v] : r.ratios)
    list.push_back({{"pairing", p.str()}, {"sign", pairing_sign(p)}, {"ratio", io::exact(v)}});
  emit({{"n", r.n}, {"ratios", list}});
  return kExitOk;
}

int cmd_grove_cim(const Options& o) {
  if (o.graph_file.empty()) throw ValidationError("--graph is required");
  WeightedGraph g = WeightedGraph::from_json(read_json_file(o.graph_file));
  ResponseMatrix l = response_matrix(g);
  NodeSet s_star = parse_set(o.sstar);
  json lm = json::array();
  for (int i = 1; i <= l.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= l.size(); ++j) row.push_back(to_string(l.at(i, j)));
    lm.push_back(row);
  }
  emit({{"s_star", format_set(s_star)},
        {"s", format_set(s_star_to_s(l.size() / 2, s_star))},
        {"determinant", io::exact(cim_determinant(l, s_star))},
        {"response_matrix", lm}});
  return kExitOk;
}

int cmd_oracle(const std::string& which, const Options& o) {
  if (o.graph_file.empty()) throw ValidationError("--graph is required");
  WeightedGraph g = WeightedGraph::from_json(read_json_file(o.graph_file));
  if (which == "matchings") {
    auto ms = oracle::enumerate_matchings(g);
    json list = json::array();
    for (const auto& m : ms) list.push_back({{"edges", m.edges}, {"weight", io::exact(m.weight)}});
    emit({{"count", ms.size()}, {"Z", io::exact(oracle::matching_sum(g))}, {"Z_nodes_removed", io::exact(oracle::matching_sum(g, g.nodes()))}, {"matchings", list}});
  } else if (which == "ddimer") {
    PairingDistribution d = oracle::double_dimer_distribution(g);
    json probs = json::array();
    for (const auto& [p, v] : d.probabilities) probs.push_back({{"pairing", p.str()}, {"probability", io::exact(v)}});
    emit({{"x", oracle::x_matrix(g).to_json()}, {"probabilities", probs}});
  } else {
    auto table = oracle::grove_table(g);
    json list = json::array();
    for (const auto& [part, w] : table) list.push_back({{"partition", part}, {"Z", io::exact(w)}});
    emit({{"partitions", list}});
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto results = verify::verify_all(o.n);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    list.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (o.format == "ascii") {
    for (const auto& r : results) std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  [" << r.detail << "]\n";
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    emit({{"n", o.n}, {"checks", list}, {"all_pass", all}});
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck tilings, M^-1, double-dimer and grove pairing computations"};
  app.require_subcommand(1);
  Options o;

  auto* bij = app.add_subcommand("bijections", "Catalan objects and their bijections");
  bij->add_option("-n,--n", o.n, "semilength when listing or decoding a set");
  bij->add_option("--bpe", o.bpe, "balanced word, () or UD");
  bij->add_option("--pairing", o.pairing, "noncrossing pairing, e.g. 1-6,3-2,5-4");
  bij->add_option("--set", o.set, "confining set, e.g. {1,6}");

  auto* mat = app.add_subcommand("matrix", "incidence matrix M or its inverse");
  mat->add_option("-n,--n", o.n, "semilength")->required();
  mat->add_flag("--inverse", o.inverse, "emit M^-1");
  mat->add_option("--method", o.method, "invert | tilings (for --inverse)");
  mat->add_option("--format", o.format, "json | csv | ascii");

  auto* til = app.add_subcommand("tilings", "cover-inclusive Dyck tilings of LOWER/UPPER");
  til->add_option("--shape", o.shape, "LOWER/UPPER in UD or () alphabet")->required();
  til->add_option("--format", o.format, "json | ascii");

  auto* fp = app.add_subcommand("fpoly", "tiling polynomial f(q) of a skew shape");
  fp->add_option("--shape", o.shape, "LOWER/UPPER")->required();
  fp->add_option("--method", o.method, "enumerate | recursive");

  auto* conj = app.add_subcommand("conjectures", "row-sum / column-sum checks");
  conj->add_option("-n,--n", o.n, "semilength (all rows or columns)");
  conj->add_option("--which", o.which, "row | col");
  conj->add_option("--path", o.path, "a single row/column path instead of all");

  auto* qe = app.add_subcommand("qeuler", "q-Euler continued fraction coefficients");
  qe->add_option("--order", o.order, "highest power of x")->required();

  auto* dd = app.add_subcommand("ddimer", "double-dimer pairing probabilities");
  dd->require_subcommand(1);
  auto* dd_dist = dd->add_subcommand("dist", "full pairing distribution from X");
  dd_dist->add_option("--x", o.x_file, "X matrix JSON")->required();
  auto* dd_marg = dd->add_subcommand("marginal", "local marginal formula (evaluated with --x)");
  dd_marg->add_option("--pairing", o.pairing, "sub-pairing, e.g. 1-2,3-6,5-4,11-16")->required();
  dd_marg->add_option("--nodes", o.nodes, "total node count 2n");
  dd_marg->add_option("--x", o.x_file, "X matrix JSON");
  auto* dd_even = dd->add_subcommand("evenly-spaced", "marginals for evenly spaced nodes");
  dd_even->add_option("--mode", o.mode, "limit | disk | half-plane");
  dd_even->add_option("--pairing", o.pairing, "sub-pairing")->required();
  dd_even->add_option("--n", o.disk_n, "disk: 2n nodes on the circle");
  dd_even->add_option("--positions", o.positions, "half-plane: comma-separated x_1..x_2n");
  dd_even->add_option("--digits", o.digits, "decimal digits of working precision");

  auto* gr = app.add_subcommand("grove", "grove pairing ratios from the response matrix");
  gr->require_subcommand(1);
  auto* gr_r = gr->add_subcommand("ratios", "Z_pi / Z_{1|...|2n} for every pairing");
  gr_r->add_option("--graph", o.graph_file, "graph JSON")->required();
  auto* gr_c = gr->add_subcommand("cim", "one CIM determinant");
  gr_c->add_option("--graph", o.graph_file, "graph JSON")->required();
  gr_c->add_option("--sstar", o.sstar, "row set S*, e.g. 1,2,3")->required();

  auto* orc = app.add_subcommand("oracle", "brute-force enumeration on a small graph");
  orc->require_subcommand(1);
  std::string oracle_which;
  for (const char* name : {"matchings", "ddimer", "groves"}) {
    auto* sub = orc->add_subcommand(name, std::string("brute-force ") + name);
    sub->add_option("--graph", o.graph_file, "graph JSON")->required();
    sub->callback([&oracle_which, name] { oracle_which = name; });
  }

  auto* ver = app.add_subcommand("verify-all", "run the cross-check suite");
  ver->add_option("-n,--n", o.n, "size bound")->required();
  ver->add_option("--format", o.format, "json | ascii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(kExitValidation, "usage", e.what());
  }

  try {
    if (*bij) return cmd_bijections(o);
    if (*mat) return cmd_matrix(o);
    if (*til) return cmd_tilings(o);
    if (*fp) return cmd_fpoly(o);
    if (*conj) return cmd_conjectures(o);
    if (*qe) return cmd_qeuler(o);
    if (*dd_dist) return cmd_ddimer_dist(o);
    if (*dd_marg) return cmd_ddimer_marginal(o);
    if (*dd_even) return cmd_ddimer_evenly(o);
    if (*gr_r) return cmd_grove_ratios(o);
    if (*gr_c) return cmd_grove_cim(o);
    if (*orc) return cmd_oracle(oracle_which, o);
    if (*ver) return cmd_verify(o);
  } catch (const CapExceeded& e) {
    return fail(kExitCap, "cap_exceeded", e.what());
  } catch (const ValidationError& e) {
    return fail(kExitValidation, "validation", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitValidation, "validation", e.what());
  }
  return fail(kExitValidation, "usage", "no subcommand");
}
