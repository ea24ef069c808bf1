#include "imbalance/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imbalance/balance.hpp"
#include "imbalance/domino.hpp"
#include "imbalance/identities.hpp"
#include "imbalance/poset.hpp"
#include "imbalance/promotion.hpp"
#include "imbalance/shapes.hpp"
#include "imbalance/verify.hpp"

namespace imbalance {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exact integers are emitted as JSON numbers while they fit, else as strings.
ordered_json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return ordered_json(static_cast<long long>(v));
  return ordered_json(v.str());
}

ordered_json json_poly(const QPolynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const Int& c : p.coeffs()) arr.push_back(json_int(c));
  return arr;
}

ordered_json json_parts(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts) arr.push_back(part);
  return arr;
}

ordered_json json_cells(const std::vector<Cell>& cells) {
  ordered_json arr = ordered_json::array();
  for (const Cell& c : cells) arr.push_back(ordered_json::array({c.i, c.j}));
  return arr;
}

std::string plain_poly(const QPolynomial& p) { return p.str(); }

void emit(const ordered_json& doc, bool plain, std::ostream& out) {
  if (!plain) {
    out << doc.dump(2) << "\n";
    return;
  }
  // Plain mode: one "key: value" line per top-level entry; arrays inline.
  for (const auto& [key, value] : doc.items()) {
    if (key == "records" || key == "suites") continue;  // rendered by caller
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

long long env_cap() {
  if (const char* s = std::getenv("IMBALANCE_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultExtensionCap;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline forms use ';' between lines so they fit in one shell argument.
std::string inline_to_lines(std::string text) {
  for (char& c : text)
    if (c == ';') c = '\n';
  return text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> vals;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    vals.push_back(v);
  }
  return vals;
}

PosetInput load_poset(const std::string& file, const std::string& inline_text) {
  if (!inline_text.empty()) return parse_poset_string(inline_to_lines(inline_text));
  return parse_poset_string(slurp(file));
}

int cmd_poset_stats(const std::string& file, const std::string& inline_text,
                    long long cap, bool plain, std::ostream& out) {
  PosetInput in = load_poset(file, inline_text);
  const Poset& P = in.poset;
  Labeling om = in.omega ? *in.omega : natural_labeling(P);

  ordered_json doc;
  doc["command"] = "poset-stats";
  doc["n"] = P.size();
  ordered_json covers = ordered_json::array();
  for (const auto& [s, t] : P.covers()) covers.push_back(ordered_json::array({s, t}));
  doc["covers"] = covers;
  doc["labeling"] = in.omega ? "given" : "natural";
  doc["extensions"] = static_cast<long long>(count_linear_extensions(P, cap));
  doc["gamma"] = gamma(P);
  doc["consistent"] = is_consistent(P);
  doc["promotion_class"] = to_string(promotion_parity_class(P));
  if (is_consistent(P)) doc["evac_class"] = to_string(evac_parity(P));
  QPolynomial iv = inv_poly(P, om, cap);
  QPolynomial mj = maj_poly(P, om, cap);
  doc["inv"] = json_poly(iv);
  doc["maj"] = json_poly(mj);
  doc["inv_at_minus_one"] = json_int(iv.at_minus_one());
  doc["maj_at_minus_one"] = json_int(mj.at_minus_one());
  doc["sign_balanced"] = is_sign_balanced(P, cap);
  doc["maj_balanced"] = is_maj_balanced(P, om, cap);
  if (P.size() >= 2) doc["broad_base"] = broad_base_hypothesis(P);
  emit(doc, plain, out);
  if (plain) out << "inv poly: " << plain_poly(iv) << "\nmaj poly: " << plain_poly(mj) << "\n";
  return 0;
}

int cmd_shape(const std::string& parts_text, bool plain, std::ostream& out) {
  Partition p = parse_partition(parts_text);
  ordered_json doc;
  doc["command"] = "shape";
  doc["partition"] = json_parts(p);
  doc["weight"] = p.weight();
  doc["conjugate"] = json_parts(conjugate(p));
  doc["two_core"] = json_parts(two_core(p));
  doc["corners"] = json_cells(corners(p));
  doc["v"] = v_stat(p);
  doc["d"] = d_stat(p);
  ordered_json hooks = ordered_json::array();
  for (int h : cell_hooks(p).values) hooks.push_back(h);
  doc["hooks"] = hooks;
  QPolynomial iv = inv_poly_shape(p);
  doc["inv"] = json_poly(iv);
  doc["imbalance"] = json_int(shape_imbalance(p));
  if (p.weight() % 2 == 0) {
    doc["domino_tableaux"] = json_int(Int(enumerate_sdt(p).size()));
    doc["domino_signed"] = json_int(imbalance_domino(p));
  }
  emit(doc, plain, out);
  if (plain) out << "inv poly: " << plain_poly(iv) << "\n";
  return 0;
}

int cmd_region(const std::string& file, const std::string& inline_text, long long cap,
               bool plain, std::ostream& out) {
  Region region = inline_text.empty() ? parse_region(slurp(file))
                                      : parse_region(inline_to_lines(inline_text));
  long long tilings = 0;
  for_each_region_tiling(region, [&](const std::vector<BorderDomino>&) { ++tilings; });
  auto [signed_w, chains] = schur_region_check(region, cap);
  ordered_json doc;
  doc["command"] = "region";
  doc["cells"] = json_cells(region.cells);
  doc["size"] = region.size();
  doc["tilings"] = tilings;
  doc["sign"] = tilings == 0 ? 0 : region_sign(region);
  doc["signed_w_at_minus_one"] = json_int(signed_w);
  doc["domino_chains"] = json_int(chains);
  doc["match"] = signed_w == chains;
  emit(doc, plain, out);
  return 0;
}

int cmd_walk(bool evac, const std::string& file, const std::string& inline_text,
             const std::string& order_text, bool plain, std::ostream& out) {
  PosetInput in = load_poset(file, inline_text);
  const Poset& P = in.poset;
  LinearExtension f = extension_from_order(parse_int_list(order_text));
  if (f.size() != P.size() || !is_linear_extension(P, f))
    throw std::invalid_argument("order is not a linear extension of the poset");
  LinearExtension g = evac ? evacuate(P, f) : promote(P, f);
  ordered_json doc;
  doc["command"] = evac ? "evacuate" : "promote";
  doc["n"] = P.size();
  ordered_json input = ordered_json::array(), output = ordered_json::array();
  for (int e : f.order()) input.push_back(e);
  for (int e : g.order()) output.push_back(e);
  doc["input"] = input;
  doc["output"] = output;
  emit(doc, plain, out);
  return 0;
}

int cmd_series(const std::string& kind_name, int n, bool plain, std::ostream& out) {
  SeriesKind kind;
  if (kind_name == "partitions")
    kind = SeriesKind::p_n;
  else if (kind_name == "small-core")
    kind = SeriesKind::core_le_1;
  else if (kind_name == "parity-signed")
    kind = SeriesKind::a_even_f;
  else if (kind_name == "parity-even")
    kind = SeriesKind::t_n;
  else if (kind_name == "evac-reversing")
    kind = SeriesKind::g_n;
  else
    throw CLI::ValidationError("series", "unknown series kind: " + kind_name);
  std::vector<Int> coeffs = count_series(kind, n);
  ordered_json doc;
  doc["command"] = "series";
  doc["kind"] = kind_name;
  doc["n"] = n;
  ordered_json arr = ordered_json::array();
  for (const Int& c : coeffs) arr.push_back(json_int(c));
  doc["coefficients"] = arr;
  emit(doc, plain, out);
  return 0;
}

ordered_json record_json(const SuiteResult& suite, const CheckRecord& r) {
  ordered_json doc;
  if (suite.kind == RecordKind::identity) {
    doc["identity"] = suite.suite;
    doc["parameter"] = r.instance;
  } else {
    doc["theorem"] = suite.suite;
    doc["instance"] = r.instance;
  }
  doc["expected"] = r.expected;
  doc["actual"] = r.actual;
  if (!r.detail.empty()) doc["detail"] = r.detail;
  doc["pass"] = r.pass;
  return doc;
}

int cmd_verify(std::vector<std::string> suites, const VerifyOptions& opt, bool plain,
               std::ostream& out) {
  if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
  std::vector<SuiteResult> results;
  for (const std::string& name : suites) results.push_back(run_suite(name, opt));

  bool all_pass = true;
  ordered_json doc;
  doc["command"] = "verify";
  doc["seed"] = static_cast<long long>(opt.seed);
  doc["cap"] = opt.cap;
  ordered_json arr = ordered_json::array();
  for (const SuiteResult& s : results) {
    ordered_json sj;
    sj["suite"] = s.suite;
    sj["kind"] = s.kind == RecordKind::identity ? "identity" : "theorem";
    if (!s.note.empty()) sj["note"] = s.note;
    ordered_json recs = ordered_json::array();
    long long fails = 0;
    for (const CheckRecord& r : s.records) {
      recs.push_back(record_json(s, r));
      if (!r.pass) ++fails;
    }
    sj["checks"] = static_cast<long long>(s.records.size());
    sj["failures"] = fails;
    sj["pass"] = s.passed();
    sj["records"] = recs;
    arr.push_back(sj);
    if (!s.passed()) all_pass = false;
  }
  doc["suites"] = arr;
  doc["pass"] = all_pass;

  if (!plain) {
    out << doc.dump(2) << "\n";
  } else {
    out << "seed: " << opt.seed << "\ncap: " << opt.cap << "\n";
    for (const SuiteResult& s : results) {
      long long fails = 0;
      for (const CheckRecord& r : s.records)
        if (!r.pass) ++fails;
      out << (s.passed() ? "pass  " : "FAIL  ") << s.suite << "  (" << s.records.size()
          << " checks, " << fails << " failures)\n";
      if (!s.note.empty()) out << "      " << s.note << "\n";
      for (const CheckRecord& r : s.records)
        if (!r.pass)
          out << "      " << r.instance << ": expected " << r.expected << ", got "
              << r.actual << "\n";
    }
    out << (all_pass ? "pass" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sign and maj imbalance toolkit for posets and shapes"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool plain = false;
  long long cap = env_cap();
  app.add_flag("--plain", plain, "plain text instead of JSON");
  app.add_option("--cap", cap, "linear extension enumeration cap");

  auto* stats = app.add_subcommand("poset-stats", "statistics of one labeled poset");
  std::string stats_file = "-", stats_inline;
  stats->add_option("file", stats_file, "poset file, - for stdin");
  stats->add_option("--poset", stats_inline, "inline poset text, ';' for newline");

  auto* shape = app.add_subcommand("shape", "statistics of one partition shape");
  std::string shape_arg;
  shape->add_option("partition", shape_arg, "comma-separated parts, e.g. 4,2,1")
      ->required();

  auto* region = app.add_subcommand("region", "domino tilings of a plane region");
  std::string region_file = "-", region_inline;
  region->add_option("file", region_file, "region file, - for stdin");
  region->add_option("--cells", region_inline, "inline cells, e.g. '1 1;1 2;2 1;2 2'");

  auto* promote_cmd = app.add_subcommand("promote", "apply promotion to an extension");
  auto* evac_cmd = app.add_subcommand("evacuate", "apply evacuation to an extension");
  std::string walk_file[2] = {"-", "-"}, walk_inline[2], walk_order[2];
  CLI::App* walks[2] = {promote_cmd, evac_cmd};
  for (int i = 0; i < 2; ++i) {
    walks[i]->add_option("file", walk_file[i], "poset file, - for stdin");
    walks[i]->add_option("--poset", walk_inline[i], "inline poset text");
    walks[i]
        ->add_option("--order", walk_order[i], "extension as element list, e.g. 0,2,1")
        ->required();
  }

  auto* series = app.add_subcommand("series", "counting series coefficients");
  std::string series_kind;
  int series_n = 12;
  series
      ->add_option("kind", series_kind,
                   "partitions | small-core | parity-signed | parity-even | evac-reversing")
      ->required();
  series->add_option("--n", series_n, "highest order")->check(CLI::Range(0, 64));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> verify_suites;
  verify->add_option("suite", verify_suites, "suite names, or 'all'")->required();
  long long seed = 12345;
  bool small = false;
  verify->add_option("--seed", seed, "random sampling seed");
  verify->add_flag("--small", small, "use the vetted desk-scale parameter preset");
  std::map<std::string, long long> overrides;
  for (const char* key : {"n", "weight", "max-m", "max-n", "area", "power", "samples",
                          "sample-n", "frame", "size"}) {
    overrides[key] = 0;
    verify->add_option("--" + std::string(key), overrides[key]);
  }

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());
  try {
    app.parse(argv_copy);  // CLI11 consumes the vector back to front
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (stats->parsed()) return cmd_poset_stats(stats_file, stats_inline, cap, plain, out);
    if (shape->parsed()) return cmd_shape(shape_arg, plain, out);
    if (region->parsed()) return cmd_region(region_file, region_inline, cap, plain, out);
    if (promote_cmd->parsed())
      return cmd_walk(false, walk_file[0], walk_inline[0], walk_order[0], plain, out);
    if (evac_cmd->parsed())
      return cmd_walk(true, walk_file[1], walk_inline[1], walk_order[1], plain, out);
    if (series->parsed()) return cmd_series(series_kind, series_n, plain, out);
    if (verify->parsed()) {
      VerifyOptions opt;
      opt.seed = static_cast<unsigned long long>(seed);
      opt.cap = cap;
      (void)small;  // the preset equals the defaults; explicit options refine it
      for (const auto& [key, value] : overrides)
        if (verify->count("--" + key) > 0) opt.params[key] = value;
      return cmd_verify(verify_suites, opt, plain, out);
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace imbalance
