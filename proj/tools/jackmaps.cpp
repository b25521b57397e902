// Command-line front end: exact computations on bipartite maps, the
// orientability generating series, the Jack character oracle, equality
// comparisons, verification suites, and the discrepancy witness.
//
// Exit codes: 0 pass, 1 comparison/verification failure, 2 usage error,
// 3 resource refusal.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jackmaps/json_io.hpp"
#include "jackmaps/verify.hpp"

namespace jm = jackmaps;

namespace {

enum class OutputMode { Text, Json, Csv };

struct GlobalOpts {
  bool json = false;
  bool csv = false;
  bool decimal = false;
  bool extended = false;
  unsigned jobs = 1;
  std::string memo = "canonical";
  std::string kind = "mean";

  OutputMode mode() const {
    if (json && csv) throw std::invalid_argument("choose at most one of --json and --csv");
    return json ? OutputMode::Json : csv ? OutputMode::Csv : OutputMode::Text;
  }
  jm::SeriesOptions series() const {
    jm::SeriesOptions o;
    o.memo = jm::parse_memo_mode(memo);
    o.jobs = jobs;
    o.extended = extended;
    if (kind == "mean")
      o.kind = jm::WeightKind::Mean;
    else if (kind == "lacroix")
      o.kind = jm::WeightKind::Lacroix;
    else
      throw std::invalid_argument("weight kind must be mean|lacroix");
    return o;
  }
};

double quad_decimal(const jm::QuadExt& v) {
  double root = std::sqrt(v.alpha.convert_to<double>());
  return v.rat.convert_to<double>() + v.irr.convert_to<double>() * root;
}

std::string decimal_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Key/value emitter shared by the scalar subcommands. Text prints aligned
// rows, json one object, csv "key,value" lines.
struct KvReport {
  OutputMode mode;
  bool decimal;
  std::vector<std::pair<std::string, std::string>> rows;
  jm::Json obj = jm::Json::object();

  KvReport(OutputMode m, bool dec) : mode(m), decimal(dec) {}

  void add(const std::string& key, const std::string& value) {
    rows.emplace_back(key, value);
    obj[key] = value;
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, const jm::Json& value) {
    rows.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
    obj[key] = value;
  }
  void add_int(const std::string& key, uint64_t value) {
    rows.emplace_back(key, std::to_string(value));
    obj[key] = value;
  }
  void add_quad(const std::string& key, const jm::QuadExt& v) {
    add(key, jm::format_quad_ext(v));
    if (decimal) add(key + "_decimal", decimal_string(quad_decimal(v)));
  }
  void print() const {
    if (mode == OutputMode::Json) {
      std::cout << obj.dump(2) << "\n";
      return;
    }
    if (mode == OutputMode::Csv) {
      std::cout << "key,value\n";
      for (const auto& [k, v] : rows) std::cout << jm::csv_quote(k) << "," << jm::csv_quote(v) << "\n";
      return;
    }
    for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
};

void print_reports(const std::vector<jm::VerificationReport>& reports, const GlobalOpts& g) {
  OutputMode mode = g.mode();
  if (mode == OutputMode::Json) {
    jm::Json arr = jm::Json::array();
    for (const auto& r : reports) arr.push_back(jm::report_json(r));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  if (mode == OutputMode::Csv) {
    std::cout << "suite,case,status,left,right\n";
    for (const auto& r : reports) {
      std::string block = jm::report_csv(r);
      std::cout << block.substr(block.find('\n') + 1);
    }
    return;
  }
  bool first = true;
  for (const auto& r : reports) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << jm::report_text(r);
  }
}

// --- subcommands -------------------------------------------------------------

int cmd_weight(const std::string& map_text, const GlobalOpts& g) {
  jm::Map m = jm::parse_map(map_text);
  jm::SeriesOptions opts = g.series();
  KvReport out{g.mode(), g.decimal};
  out.add("map", jm::format_map(m));
  out.add("face_type", jm::format_partition(m.face_type()));
  out.add_int("edges", m.edge_count());
  out.add_int("vertices", m.vertex_count());
  out.add_int("faces", m.face_count());
  out.add_int("components", m.component_count());
  out.add("euler_characteristic", std::to_string(m.euler_characteristic()));
  out.add_int("defect", m.nonorientability_defect());
  out.add("kind", jm::weight_kind_name(opts.kind));
  jm::GammaPoly w = opts.kind == jm::WeightKind::Mean ? jm::mean_weight(m, opts.memo)
                                                      : jm::lacroix_weight(m).weight;
  out.add("weight", w.format("gamma"));
  out.add("weight_coeffs", jm::gamma_poly_json(w));
  out.print();
  return 0;
}

int cmd_maps(const jm::Partition& pi, bool list_classes, const GlobalOpts& g) {
  jm::SeriesOptions opts = g.series();
  jm::series_resource_guard(pi, opts);
  KvReport out{g.mode(), g.decimal};
  out.add("pi", jm::format_partition(pi));
  if (pi.size() > jm::kSeriesAggregateLimit) {
    // Too many maps to keep classes; count the pairings only.
    auto base = jm::canonical_base_pairings(pi);
    uint64_t total = jm::enumerate_pairings(base.first.support_mask(), [](const jm::Pairing&) {});
    out.add_int("maps", total);
    out.print();
    return 0;
  }
  jm::SeriesAggregate agg = jm::aggregate_maps(pi, opts);
  out.add_int("maps", agg.map_count);
  out.add_int("classes", agg.classes.size());
  if (list_classes) {
    jm::Json arr = jm::Json::array();
    for (const auto& cls : agg.classes) {
      arr.push_back(jm::Json{{"count", cls.count},
                             {"black_vertices", cls.v_black},
                             {"white_vertices", cls.v_white},
                             {"components", cls.components},
                             {"euler_characteristic", cls.euler},
                             {"weight_sum", jm::gamma_poly_json(cls.weight_sum)}});
    }
    out.add("class_table", arr);
  }
  out.print();
  return 0;
}

int cmd_embed(const std::string& map_text, const std::string& lambda_text,
              const std::string& blocks_text, const GlobalOpts& g) {
  jm::Map m = jm::parse_map(map_text);
  jm::MultirectCoords mc;
  if (!blocks_text.empty()) {
    if (!lambda_text.empty())
      throw std::invalid_argument("give either --lambda or --blocks, not both");
    mc = jm::parse_multirect(blocks_text);
  } else {
    if (lambda_text.empty()) throw std::invalid_argument("embed: need --lambda or --blocks");
    mc = jm::diagram_multirect(jm::parse_partition(lambda_text));
  }
  jm::BigInt n = jm::count_embeddings_multirect(jm::graph_of(m), mc);
  KvReport out{g.mode(), g.decimal};
  out.add("map", jm::format_map(m));
  out.add("lambda", jm::format_partition(jm::multirect_diagram(mc)));
  out.add_int("black_vertices", m.black_vertex_count());
  out.add_int("white_vertices", m.white_vertex_count());
  out.add("embeddings", n.str());
  out.print();
  return 0;
}

int cmd_series(const jm::Partition& pi, const std::string& lambda_text, const std::string& alpha_text,
               bool symbolic, unsigned ell, const GlobalOpts& g) {
  jm::SeriesOptions opts = g.series();
  KvReport out{g.mode(), g.decimal};
  out.add("pi", jm::format_partition(pi));
  out.add("kind", jm::weight_kind_name(opts.kind));
  if (symbolic) {
    jm::SeriesSymbolic sym = jm::genseries_symbolic(pi, ell, opts);
    out.add_int("blocks", ell);
    out.add("signed_series", jm::format_multivar(sym.poly));
    out.add("signed_series_terms", jm::multivar_poly_json(sym.poly));
    out.add("positivity", jm::series_positivity_ok(sym) ? "ok" : "violated");
    if (!alpha_text.empty()) {
      jm::Rational alpha = jm::parse_rational(alpha_text);
      jm::MultirectPoly mp = jm::substitute_symbolic(sym, alpha);
      out.add("alpha", jm::format_rational(alpha));
      out.add("rational_part", jm::format_multivar(mp.rat_part));
      out.add("sqrt_part", jm::format_multivar(mp.sqrt_part));
    }
    out.print();
    return 0;
  }
  if (lambda_text.empty()) throw std::invalid_argument("series: need --lambda (or --symbolic)");
  jm::YoungDiagram lambda = jm::parse_partition(lambda_text);
  jm::Rational alpha = alpha_text.empty() ? jm::Rational(1) : jm::parse_rational(alpha_text);
  uint64_t maps_seen = 0;
  jm::QuadExt v = jm::genseries_numeric(pi, lambda, alpha, opts, &maps_seen);
  out.add("lambda", jm::format_partition(lambda));
  out.add("alpha", jm::format_rational(alpha));
  out.add_int("maps", maps_seen);
  out.add_quad("series", v);
  out.print();
  return 0;
}

int cmd_jack(const jm::Partition& pi, bool pi_given, const std::string& lambda_text,
             const std::string& alpha_text, const GlobalOpts& g) {
  jm::YoungDiagram lambda = jm::parse_partition(lambda_text);
  KvReport out{g.mode(), g.decimal};
  out.add("lambda", jm::format_partition(lambda));
  if (pi_given) {
    jm::Rational alpha = alpha_text.empty() ? jm::Rational(1) : jm::parse_rational(alpha_text);
    out.add("pi", jm::format_partition(pi));
    out.add("alpha", jm::format_rational(alpha));
    out.add_quad("character", jm::jack_character_value(pi, lambda, alpha));
    out.print();
    return 0;
  }
  if (!alpha_text.empty()) {
    // theta table at a fixed alpha
    jm::Rational alpha = jm::parse_rational(alpha_text);
    out.add("alpha", jm::format_rational(alpha));
    jm::Json table = jm::Json::object();
    for (const auto& rho : jm::partitions_of(lambda.size())) {
      jm::Rational t = jm::theta_at(rho, lambda, alpha);
      table["(" + jm::format_partition(rho) + ")"] = jm::format_rational(t);
    }
    out.add("theta", table);
    out.print();
    return 0;
  }
  // full power-sum expansion, coefficients polynomial in alpha
  jm::Json table = jm::Json::object();
  for (const auto& [rho, coeff] : jm::jack_powersum(lambda))
    table["(" + jm::format_partition(rho) + ")"] = coeff.format("a");
  out.add("powersum_expansion", table);
  out.print();
  return 0;
}

int cmd_compare(const jm::Partition& pi, const std::string& lambda_text,
                const std::string& alpha_text, const GlobalOpts& g) {
  jm::YoungDiagram lambda = jm::parse_partition(lambda_text);
  jm::Rational alpha = alpha_text.empty() ? jm::Rational(1) : jm::parse_rational(alpha_text);
  jm::SeriesOptions opts = g.series();
  jm::VerificationReport r;
  r.suite = "compare";
  r.config.emplace_back("pi", jm::format_partition(pi));
  r.config.emplace_back("lambda", jm::format_partition(lambda));
  r.config.emplace_back("alpha", jm::format_rational(alpha));
  r.config.emplace_back("kind", jm::weight_kind_name(opts.kind));
  jm::QuadExt series = jm::genseries_numeric(pi, lambda, alpha, opts);
  jm::QuadExt oracle = jm::jack_character_value(pi, lambda, alpha);
  jm::report_case(r, "series vs oracle", series == oracle, jm::format_quad_ext(series),
                  jm::format_quad_ext(oracle));
  print_reports({r}, g);
  return r.pass() ? 0 : 1;
}

int cmd_verify(const std::string& suite, const GlobalOpts& g) {
  jm::SeriesOptions opts = g.series();
  std::vector<const jm::SuiteEntry*> picked;
  if (suite == "all") {
    for (const auto& e : jm::suite_registry())
      if (e.criterion < 14 || g.extended) picked.push_back(&e);
  } else {
    const jm::SuiteEntry* e = jm::find_suite(suite);
    if (!e) {
      std::string names;
      for (const auto& s : jm::suite_registry()) names += std::string(" ") + s.name;
      throw std::invalid_argument("unknown suite '" + suite + "'; have: all" + names);
    }
    picked.push_back(e);
  }
  for (const auto* e : picked)
    if (e->criterion == 14 && !g.extended)
      throw jm::ResourceError("suite 'counterexample' enumerates " +
                              jm::double_factorial_odd(9).str() +
                              " edge pairings; pass --extended to run it");
  std::vector<jm::VerificationReport> reports;
  bool ok = true;
  for (const auto* e : picked) {
    reports.push_back(e->run(opts));
    ok = ok && reports.back().pass();
  }
  print_reports(reports, g);
  return ok ? 0 : 1;
}

int cmd_counterexample(const std::string& q_text, const std::string& alpha_text,
                       const GlobalOpts& g) {
  if (!g.extended)
    throw jm::ResourceError("the face type (9) enumerates " + jm::double_factorial_odd(9).str() +
                            " edge pairings; pass --extended to run the counterexample");
  jm::Partition qp = jm::parse_partition(q_text);
  std::vector<unsigned> q = qp.parts();
  jm::Rational alpha = alpha_text.empty() ? jm::Rational(1) : jm::parse_rational(alpha_text);
  jm::CounterexampleResult res = jm::counterexample_report(q, alpha, g.series());
  jm::VerificationReport r;
  r.suite = "counterexample";
  r.config.emplace_back("pi", "9");
  r.config.emplace_back("P", "1,1,1");
  r.config.emplace_back("Q", jm::format_partition(qp));
  r.config.emplace_back("alpha", jm::format_rational(alpha));
  r.config.emplace_back("maps", std::to_string(res.maps_seen));
  jm::report_case(r, "series", true, jm::format_quad_ext(res.series), jm::format_quad_ext(res.series));
  jm::report_case(r, "oracle", true, jm::format_quad_ext(res.oracle), jm::format_quad_ext(res.oracle));
  jm::report_case(r, "difference matches prediction", res.match,
                  jm::format_quad_ext(res.difference), jm::format_quad_ext(res.predicted));
  print_reports({r}, g);
  return res.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bipartite-map series and Jack character toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON");
  app.add_flag("--csv", g.csv, "emit CSV");
  app.add_flag("--decimal", g.decimal, "add display-only decimal columns");
  app.add_flag("--extended", g.extended, "allow face types of size 8 and 9");
  app.add_option("--jobs", g.jobs, "worker count (results are independent of it)")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--memo", g.memo, "memoization mode: canonical|labeled|off");
  app.add_option("--kind", g.kind, "map weight: mean|lacroix");

  std::string map_text, lambda_text, alpha_text, blocks_text, pi_text, suite = "all";
  std::string q_text = "3,2,1";
  bool symbolic = false, list_classes = false;
  unsigned ell = 1;

  CLI::App* weight = app.add_subcommand("weight", "weight polynomial of one map");
  weight->add_option("--map", map_text, "map as B:..|W:..|E:..")->required();

  CLI::App* maps = app.add_subcommand("maps", "enumerate maps of a face type");
  maps->add_option("--pi", pi_text, "face type")->required();
  maps->add_flag("--classes", list_classes, "list isomorphism classes");

  CLI::App* embed = app.add_subcommand("embed", "count diagram embeddings of a map");
  embed->add_option("--map", map_text, "map as B:..|W:..|E:..")->required();
  embed->add_option("--lambda", lambda_text, "diagram rows");
  embed->add_option("--blocks", blocks_text, "block coordinates P=..;Q=..");

  CLI::App* series = app.add_subcommand("series", "orientability generating series");
  series->add_option("--pi", pi_text, "face type")->required();
  series->add_option("--lambda", lambda_text, "diagram rows");
  series->add_option("--alpha", alpha_text, "deformation parameter (rational)");
  series->add_flag("--symbolic", symbolic, "polynomial in u_i, v_i, gamma");
  series->add_option("--multirect", ell, "number of diagram blocks for --symbolic");

  CLI::App* jack = app.add_subcommand("jack", "Jack polynomial and character oracle");
  jack->add_option("--lambda", lambda_text, "diagram rows")->required();
  jack->add_option("--pi", pi_text, "character argument");
  jack->add_option("--alpha", alpha_text, "deformation parameter (rational)");

  CLI::App* compare = app.add_subcommand("compare", "series vs oracle at one point");
  compare->add_option("--pi", pi_text, "face type")->required();
  compare->add_option("--lambda", lambda_text, "diagram rows")->required();
  compare->add_option("--alpha", alpha_text, "deformation parameter (rational)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'");

  CLI::App* counter = app.add_subcommand("counterexample", "discrepancy witness at pi=(9)");
  counter->add_option("--q", q_text, "three block widths, weakly decreasing");
  counter->add_option("--alpha", alpha_text, "deformation parameter (rational)");

  for (CLI::App* sub : {weight, maps, embed, series, jack, compare, verify, counter})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (weight->parsed()) rc = cmd_weight(map_text, g);
    else if (maps->parsed()) rc = cmd_maps(jm::parse_partition(pi_text), list_classes, g);
    else if (embed->parsed()) rc = cmd_embed(map_text, lambda_text, blocks_text, g);
    else if (series->parsed())
      rc = cmd_series(jm::parse_partition(pi_text), lambda_text, alpha_text, symbolic, ell, g);
    else if (jack->parsed())
      rc = cmd_jack(jm::parse_partition(pi_text), jack->count("--pi") != 0, lambda_text,
                    alpha_text, g);
    else if (compare->parsed())
      rc = cmd_compare(jm::parse_partition(pi_text), lambda_text, alpha_text, g);
    else if (verify->parsed()) rc = cmd_verify(suite, g);
    else if (counter->parsed()) rc = cmd_counterexample(q_text, alpha_text, g);
  } catch (const jm::ResourceError& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::chrono::duration<double> dt = t1 - t0;
  std::fprintf(stderr, "elapsed %.3fs\n", dt.count());
  return rc;
}
