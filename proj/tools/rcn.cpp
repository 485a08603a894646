#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rcn/label.hpp"
#include "rcn/lmfdb.hpp"
#include "rcn/lmfdb_http.hpp"
#include "rcn/lp_bounds.hpp"
#include "rcn/order_one.hpp"
#include "rcn/search.hpp"

using namespace rcn;

namespace {

// "1,0.7,0.2" -> exact rationals; each entry is a decimal or p/q fraction.
Rat rat_from_token(const std::string& tok) {
  if (tok.empty()) throw WeilError("empty weight");
  auto slash = tok.find('/');
  if (slash != std::string::npos)
    return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
  bool neg = tok[0] == '-';
  std::string body = neg || tok[0] == '+' ? tok.substr(1) : tok;
  auto dot = body.find('.');
  std::string ip = dot == std::string::npos ? body : body.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : body.substr(dot + 1);
  if (ip.empty()) ip = "0";
  Int den = 1;
  for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  Rat r = Rat(Int(ip)) + Rat(fp.empty() ? Int(0) : Int(fp), den);
  return neg ? -r : r;
}

std::vector<Rat> parse_weights(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_from_token(tok));
  return out;
}

// "2..7" or "2,3,5" or "3".
std::vector<int> parse_int_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::string quad_exact(const Quad& x) {
  std::ostringstream s;
  s << Rat(x.u).str();
  if (x.v != 0) s << " + " << Rat(x.v).str() << "*sqrt(" << x.m << ")";
  return s.str();
}

std::string quad_decimal(const Quad& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(x));
  return buf;
}

struct OrderOneRow {
  std::string label, n, t2, t4, t8, t16, sum, excess;
};

OrderOneRow row_of(const OrderOneClass& c) {
  return {c.label,
          Int(c.n).str(),
          c.traces[1].str(),
          c.traces[2].str(),
          c.traces[3].str(),
          c.traces[4].str(),
          c.trace_sum_24.str(),
          format_excess(c.excess)};
}

int cmd_order_one(int max_dim, const std::string& format) {
  auto catalog = order_one_catalog(max_dim);
  if (format == "json") {
    for (const auto& c : catalog) {
      OrderOneRow r = row_of(c);
      std::cout << "{\"label\":\"" << r.label << "\",\"n\":" << r.n << ",\"traces\":[" << r.t2
                << "," << r.t4 << "," << r.t8 << "," << r.t16 << "],\"trace_sum\":" << r.sum
                << ",\"excess\":\"" << r.excess << "\",\"ordinary\":" << (c.ordinary ? "true" : "false")
                << "}\n";
    }
    return 0;
  }
  const char* sep = format == "table" ? "  " : ",";
  std::cout << "label" << sep << "n" << sep << "t2" << sep << "t4" << sep << "t8" << sep << "t16"
            << sep << "t2_plus_t4" << sep << "excess\n";
  for (const auto& c : catalog) {
    OrderOneRow r = row_of(c);
    std::cout << r.label << sep << r.n << sep << r.t2 << sep << r.t4 << sep << r.t8 << sep
              << r.t16 << sep << r.sum << sep << r.excess << "\n";
  }
  return 0;
}

int cmd_bounds(long q, const std::string& weights, int dmax) {
  DoublyPositive dp = doubly_positive_from_weights(parse_weights(weights));
  RefinedBound rb = refined_weights(q, dp, dmax);
  std::cout << "q," << q << "\nweights," << weights << "\n";
  std::cout << "slope_exact," << quad_exact(rb.slope) << "\n";
  std::cout << "slope," << quad_decimal(rb.slope) << "\n";
  std::cout << "intercept_exact," << quad_exact(rb.intercept) << "\n";
  std::cout << "intercept," << quad_decimal(rb.intercept) << "\n";
  for (int d = 2; d <= dmax; ++d)
    std::cout << "degree_" << d << "_weight," << quad_decimal(rb.weights[static_cast<size_t>(d)])
              << "\n";
  return 0;
}

int cmd_enumerate(long q, int g, bool class_number_one, int threads) {
  std::cout << "label,real_coeffs\n";
  std::vector<IPoly> polys = class_number_one ? order_one_real_polys(q, g, threads)
                                              : enumerate_real_weil_polys(q, g);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const IPoly& h : polys) {
    std::ostringstream cs;
    for (int i = 0; i <= h.degree(); ++i) {
      if (i) cs << " ";
      cs << h.coeff(i).str();
    }
    rows.push_back({encode_label(real_to_weil(h, q), q), cs.str()});
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [label, coeffs] : rows) std::cout << label << "," << coeffs << "\n";
  return 0;
}

IsogenyStore load_store(const std::string& path) {
  IsogenyStore store;
  DataSource src = store.load_jsonl(path);
  std::cerr << "loaded " << src.records << " records from " << src.location << "\n";
  return store;
}

int cmd_search_constant(const std::string& qs, const std::string& ds, int g_max,
                        const std::string& curve_data, int threads) {
  SearchOptions opt;
  opt.threads = threads;
  IsogenyStore store;
  if (!curve_data.empty()) {
    store = load_store(curve_data);
    opt.store = &store;
  }
  std::vector<long> qlist;
  for (int v : parse_int_range(qs)) qlist.push_back(v);
  auto rows = run_constant_search(qlist, parse_int_range(ds), g_max, opt);
  write_constant_csv(rows, std::cout);
  return 0;
}

int cmd_search_geometric(long q, const std::string& ds, const std::string& filters,
                         const std::string& curve_data, const std::string& audit_path,
                         const std::string& scenario, bool allow_unproven, bool summary,
                         int threads) {
  SearchOptions opt;
  opt.threads = threads;
  opt.profile = filters == "baseline" ? FilterProfile::baseline() : FilterProfile::full();
  IsogenyStore store;
  if (!curve_data.empty()) {
    store = load_store(curve_data);
    opt.store = &store;
  }
  std::ofstream audit;
  if (!audit_path.empty()) {
    audit.open(audit_path);
    if (!audit) throw WeilError("cannot write " + audit_path);
    opt.audit = &audit;
  }
  auto catalog = order_one_catalog(6);

  std::vector<ScenarioReport> reports;
  if (!scenario.empty()) {
    auto parts = parse_int_range(scenario);
    if (parts.size() != 3) throw CLI::ValidationError("--scenario wants d,g,g_prime");
    ScenarioReport r = run_single_scenario(q, parts[0], parts[1], parts[2], catalog, opt);
    if (r.outside_proven_range) {
      if (!allow_unproven)
        throw CLI::ValidationError(
            "scenario lies outside the proven windows; pass --allow-unproven to run it anyway");
      std::cerr << "warning: scenario (" << parts[0] << "," << parts[1] << "," << parts[2]
                << ") is outside the proven windows; this search is not proven complete\n";
    }
    reports.push_back(std::move(r));
  } else {
    reports = run_geometric_search(q, parse_int_range(ds), catalog, opt);
  }

  if (summary)
    write_scenario_csv(reports, std::cout);
  else
    write_geometric_csv(reports, std::cout);
  return 0;
}

int cmd_ingest(const std::string& from, const std::string& fetch, const std::string& endpoint,
               const std::string& cache_dir, bool offline) {
  IsogenyStore store;
  std::string cache = cache_dir.empty() ? default_cache_dir() : cache_dir;
  std::string cache_file = cache.empty() ? "" : cache + "/isogeny_cache.jsonl";
  if (!cache_file.empty()) {
    std::ifstream probe(cache_file);
    if (probe.good()) store.load_jsonl(cache_file);
  }
  if (!from.empty()) {
    DataSource src = store.load_jsonl(from);
    std::cout << "loaded " << src.records << " records from " << src.location << "\n";
  }
  if (!fetch.empty()) {
    if (offline) throw CLI::ValidationError("--fetch needs the network and --offline is set");
    if (endpoint.empty()) throw CLI::ValidationError("--fetch needs --endpoint");
    HttpConfig cfg{endpoint};
    std::stringstream ss(fetch);
    std::string label;
    size_t fetched = 0;
    while (std::getline(ss, label, ',')) {
      if (store.find(label)) continue;
      store.add(fetch_remote(cfg, label));
      ++fetched;
    }
    std::cout << "fetched " << fetched << " records\n";
  }
  if (!cache_file.empty()) store.export_jsonl(cache_file);
  std::cout << "store holds " << store.size() << " records\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verification against the shipped tables

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WeilError("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) fields.push_back(tok);
    rows.push_back(std::move(fields));
  }
  return rows;
}

int report_diff(const std::string& what, const TableDiff& diff) {
  if (diff.clean()) {
    std::cout << what << ": ok\n";
    return 0;
  }
  for (const auto& k : diff.missing) std::cout << what << ": missing " << k << "\n";
  for (const auto& k : diff.extra) std::cout << what << ": extra   " << k << "\n";
  return 1;
}

int verify_order_one(const std::string& dir) {
  auto rows = read_csv(dir + "/order_one.csv");
  std::map<std::string, std::vector<std::string>> want;
  for (size_t i = 1; i < rows.size(); ++i) want[rows[i][0]] = rows[i];
  auto catalog = order_one_catalog(6);
  int bad = 0;
  for (const auto& c : catalog) {
    OrderOneRow r = row_of(c);
    std::vector<std::string> got = {r.label, r.n, r.t2, r.t4, r.t8, r.t16, r.sum, r.excess};
    auto it = want.find(c.label);
    if (it == want.end()) {
      std::cout << "order-one: extra   " << c.label << "\n";
      ++bad;
      continue;
    }
    if (it->second != got) {
      std::cout << "order-one: row " << c.label << " differs\n";
      std::cout << "  table:";
      for (const auto& f : it->second) std::cout << " " << f;
      std::cout << "\n  computed:";
      for (const auto& f : got) std::cout << " " << f;
      std::cout << "\n";
      ++bad;
    }
    want.erase(it);
  }
  for (const auto& [label, _] : want) {
    std::cout << "order-one: missing " << label << "\n";
    ++bad;
  }
  if (!bad) std::cout << "order-one: ok (" << catalog.size() << " rows)\n";
  return bad ? 1 : 0;
}

int verify_constant(const std::string& dir, int threads) {
  SearchOptions opt;
  opt.threads = threads;
  auto rows = run_constant_search({2, 3, 4}, {2, 3}, 6, opt);
  std::set<std::string> got;
  for (const auto& c : rows) {
    std::ostringstream s;
    s << c.q << "," << c.d << "," << c.g << "," << c.label;
    got.insert(s.str());
  }
  std::ifstream fixture(dir + "/constant_bounds.csv");
  if (!fixture) throw WeilError("cannot open " + dir + "/constant_bounds.csv");
  return report_diff("constant-bounds", diff_keys(got, fixture, 4));
}

int verify_geometric(const std::string& dir, int threads) {
  IsogenyStore store = load_store(dir + "/curve_existence.jsonl");
  SearchOptions opt;
  opt.threads = threads;
  opt.store = &store;
  auto reports = run_geometric_search(2, {2, 3, 4, 5, 6, 7}, order_one_catalog(6), opt);
  std::ifstream fixture(dir + "/geometric_bounds.csv");
  if (!fixture) throw WeilError("cannot open " + dir + "/geometric_bounds.csv");
  return report_diff("geometric-bounds", diff_keys(geometric_pair_keys(reports), fixture, 5));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil polynomial searches behind the relative class number one tables"};
  app.require_subcommand(1);
  bool offline = false;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_flag("--offline", offline, "never touch the network");
  app.add_option("--threads", threads, "worker threads for the searches");

  auto* one = app.add_subcommand("order-one", "catalog of simple order-one isogeny classes");
  int max_dim = 6;
  std::string one_format = "csv";
  one->add_option("--max-dim", max_dim, "largest dimension to list");
  one->add_option("--format", one_format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));

  auto* bounds = app.add_subcommand("bounds", "linear point bounds from trigonometric weights");
  long bq = 2;
  std::string weights = "1,0.7,0.2";
  int dmax = 4;
  bounds->add_option("--q", bq, "field size")->required();
  bounds->add_option("--weights", weights, "comma-separated cosine weights");
  bounds->add_option("--dmax", dmax, "largest place degree to report");

  auto* enu = app.add_subcommand("enumerate", "real Weil polynomials for a field and genus");
  long eq = 2;
  int eg = 2;
  bool class_one = false;
  enu->add_option("--q", eq, "field size")->required();
  enu->add_option("--g", eg, "genus")->required();
  enu->add_flag("--class-number-one", class_one, "restrict to h(q+1) = 1");

  auto* search = app.add_subcommand("search", "constant and purely geometric searches");
  search->require_subcommand(1);
  auto* sc = search->add_subcommand("constant", "constant extensions with relative order 1");
  std::string c_qs = "2,3,4", c_ds = "2..3", c_data;
  int c_gmax = 6;
  sc->add_option("--q", c_qs, "field sizes");
  sc->add_option("--d", c_ds, "extension degrees");
  sc->add_option("--g-max", c_gmax, "largest base genus");
  sc->add_option("--curve-data", c_data, "isogeny store for existence checks");

  auto* sg = search->add_subcommand("geometric", "cover scenarios with trivial Prym order");
  long g_q = 2;
  std::string g_ds = "2..7", g_filters = "all", g_data, g_audit, g_scenario;
  bool g_allow = false, g_summary = false;
  sg->add_option("--q", g_q, "base field size");
  sg->add_option("--d", g_ds, "cover degrees");
  sg->add_option("--filters", g_filters, "all or baseline")
      ->check(CLI::IsMember({"all", "baseline"}));
  sg->add_option("--curve-data", g_data, "isogeny store for existence checks");
  sg->add_option("--audit", g_audit, "JSON-lines audit trail path");
  sg->add_option("--scenario", g_scenario, "single d,g,g_prime scenario");
  sg->add_flag("--allow-unproven", g_allow, "run scenarios outside the proven windows");
  sg->add_flag("--summary", g_summary, "emit per-scenario outcomes instead of pairs");

  auto* ing = app.add_subcommand("ingest", "load or fetch isogeny-class records");
  std::string i_from, i_fetch, i_endpoint, i_cache;
  ing->add_option("--from", i_from, "JSON-lines file to load");
  ing->add_option("--fetch", i_fetch, "comma-separated labels to fetch");
  ing->add_option("--endpoint", i_endpoint, "URL template with a {label} placeholder");
  ing->add_option("--cache-dir", i_cache, "cache directory (default $RCN_CACHE_DIR)");

  auto* ver = app.add_subcommand("verify", "compare computed results to the shipped tables");
  ver->require_subcommand(1);
  auto* vt = ver->add_subcommand("tables", "recompute a table and diff it");
  std::string v_which, v_data = "fixtures";
  vt->add_option("--which", v_which, "order-one, constant-bounds or geometric-bounds")
      ->required()
      ->check(CLI::IsMember({"order-one", "constant-bounds", "geometric-bounds"}));
  vt->add_option("--data", v_data, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*one) return cmd_order_one(max_dim, one_format);
    if (*bounds) return cmd_bounds(bq, weights, dmax);
    if (*enu) return cmd_enumerate(eq, eg, class_one, threads);
    if (*sc) return cmd_search_constant(c_qs, c_ds, c_gmax, c_data, threads);
    if (*sg)
      return cmd_search_geometric(g_q, g_ds, g_filters, g_data, g_audit, g_scenario, g_allow,
                                  g_summary, threads);
    if (*ing) return cmd_ingest(i_from, i_fetch, i_endpoint, i_cache, offline);
    if (*vt) {
      if (v_which == "order-one") return verify_order_one(v_data);
      if (v_which == "constant-bounds") return verify_constant(v_data, threads);
      return verify_geometric(v_data, threads);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
