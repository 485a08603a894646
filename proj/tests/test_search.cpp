#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "rcn/search.hpp"

using namespace rcn;

namespace {

using Shape = std::pair<int, int>;
using ShapeMap = std::map<int, std::set<Shape>>;

// Shapes (g, g') that survive the filter battery, per degree.
const ShapeMap& surviving_shapes_q2() {
  static const ShapeMap m = {
      {2, {{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 7}, {4, 8}, {5, 9}, {6, 11}, {7, 13}}},
      {3, {{2, 4}, {2, 6}, {3, 7}, {4, 10}}},
      {4, {{2, 5}, {2, 6}, {3, 9}}},
      {5, {{2, 6}}},
      {6, {{2, 7}}},
      {7, {{2, 8}}},
  };
  return m;
}

// Shapes the battery empties out, per degree.
const ShapeMap& eliminated_shapes_q2() {
  static const ShapeMap m = {
      {2,
       {{2, 6},
        {2, 7},
        {3, 7},
        {3, 8},
        {3, 9},
        {4, 9},
        {4, 10},
        {4, 11},
        {5, 10},
        {5, 11},
        {6, 12},
        {6, 13},
        {7, 14},
        {8, 15},
        {9, 17}}},
      {3,
       {{2, 5},
        {2, 7},
        {2, 8},
        {3, 8},
        {3, 9},
        {3, 10},
        {4, 11},
        {4, 12},
        {5, 13},
        {5, 14},
        {6, 16}}},
      {4, {{2, 7}, {2, 8}, {3, 10}}},
      {5, {{2, 7}, {2, 8}}},
      {6, {{2, 8}}},
      {7, {}},
  };
  return m;
}

std::set<Shape> window_shapes(long q, int d) {
  std::set<Shape> out;
  for (const CoverScenario& sc : geometric_scenarios(q, d)) out.insert({sc.g, sc.gp});
  return out;
}

IsogenyStore store_with(const std::vector<std::pair<std::string, long>>& rows) {
  IsogenyStore store;
  for (const auto& [label, jc] : rows) {
    IsogenyRecord r = record_from_label(label);
    r.jacobian_count = jc;
    store.add(r);
  }
  return store;
}

std::set<std::string> base_labels(const ScenarioReport& r) {
  std::set<std::string> out;
  for (const auto& p : r.pairs) out.insert(p.base_label);
  return out;
}

}  // namespace

TEST_CASE("scenario windows over F_2 split into survivors and eliminated shapes") {
  for (int d = 2; d <= 7; ++d) {
    std::set<Shape> expected = surviving_shapes_q2().at(d);
    for (const Shape& s : eliminated_shapes_q2().at(d)) {
      REQUIRE(expected.count(s) == 0);
      expected.insert(s);
    }
    CAPTURE(d);
    REQUIRE(window_shapes(2, d) == expected);
  }
  REQUIRE(geometric_scenarios(2, 8).empty());

  for (const CoverScenario& sc : geometric_scenarios(2, 2)) {
    REQUIRE(sc.cyclic);
    REQUIRE(sc.delta == sc.gp - 2 * sc.g + 1);
  }
  for (const CoverScenario& sc : geometric_scenarios(2, 3)) REQUIRE_FALSE(sc.cyclic);
}

TEST_CASE("scenario windows over F_3 and F_4") {
  REQUIRE(window_shapes(3, 2) == std::set<Shape>{{2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 7}});
  REQUIRE(window_shapes(4, 2) == std::set<Shape>{{2, 3}, {2, 4}, {3, 5}});
  REQUIRE(window_shapes(3, 3) == std::set<Shape>{{2, 4}});
  REQUIRE(window_shapes(4, 3) == std::set<Shape>{{2, 4}});
  for (int d = 4; d <= 7; ++d) {
    REQUIRE(geometric_scenarios(3, d).empty());
    REQUIRE(geometric_scenarios(4, d).empty());
  }
  for (long q : {3L, 4L})
    for (const CoverScenario& sc : geometric_scenarios(q, 2)) REQUIRE(sc.cyclic);
  REQUIRE_THROWS_AS(geometric_scenarios(5, 2), WeilError);
}

TEST_CASE("order-one catalog traces and excess") {
  // The excess budget prunes multiset prefixes, which is only sound if every
  // factor's excess is nonnegative.  Traces over the prime field stay
  // nonnegative too (T over F_4 does not: 2.2.ad_f has T_2 = -1).
  REQUIRE(order_one_catalog(6).size() == 16);
  auto catalog = order_one_catalog(8);
  REQUIRE(catalog.size() == 20);  // dimension 7 is empty, dimension 8 is not
  for (const auto& cl : catalog) {
    CAPTURE(cl.label);
    REQUIRE(cl.traces[1] >= 0);
    REQUIRE(cl.excess >= 0);
  }
}

TEST_CASE("Prym candidates are admissible multisets of the right dimension") {
  auto catalog = order_one_catalog(8);

  CoverScenario sc23 = make_scenario(2, 2, 2, 3);
  auto single = prym_candidates(2, sc23, catalog);
  REQUIRE(single.size() == 1);
  REQUIRE(single[0].label == "1.2.ac");
  REQUIRE(single[0].dim == 1);
  REQUIRE(single[0].trace[1] == 2);
  REQUIRE(single[0].trace[2] == 0);

  CoverScenario sc25 = make_scenario(2, 2, 2, 5);
  auto dim3 = prym_candidates(2, sc25, catalog);
  std::set<std::string> labels;
  for (const auto& A : dim3) {
    REQUIRE(A.dim == 3);
    REQUIRE(labels.insert(A.label).second);  // labels unique and sorted
    REQUIRE(weil_genus(A.weil) == 3);
    REQUIRE(A.trace == frobenius_traces(A.weil, 14));
  }
  REQUIRE(std::is_sorted(dim3.begin(), dim3.end(),
                         [](const PrymCandidate& a, const PrymCandidate& b) {
                           return a.label < b.label;
                         }));
  // the cube of the elliptic class is always present
  REQUIRE(labels.count("3.2.ag_s_abg") == 1);

  CoverScenario big = make_scenario(2, 2, 9, 17);
  auto dim8 = prym_candidates(2, big, catalog);
  REQUIRE_FALSE(dim8.empty());
  for (const auto& A : dim8) REQUIRE(A.dim == 8);

  CoverScenario sc34 = make_scenario(3, 2, 2, 4, true);
  auto power = prym_candidates(3, sc34, catalog);
  REQUIRE(power.size() == 1);
  REQUIRE(power[0].weil == poly_pow(IPoly({Int(3), Int(-3), Int(1)}), 2));
}

TEST_CASE("prefix constraints are monotone and only prune") {
  auto catalog = order_one_catalog(8);
  CoverScenario sc = make_scenario(2, 2, 2, 3);
  auto pryms = prym_candidates(2, sc, catalog);
  REQUIRE(pryms.size() == 1);
  const PrymCandidate& A = pryms[0];

  FilterProfile pr = FilterProfile::full();
  ConstraintSet cs = pair_prefix_constraints(sc, A, pr);

  EnumerateOptions strict;
  strict.verify_monotone = true;
  std::set<IPoly> pruned;
  enumerate_real_weil(2, 2, cs, [&](const PrefixView& v) {
    pruned.insert(v.weil_poly());
    return true;
  }, strict);

  std::set<IPoly> all;
  enumerate_real_weil(2, 2, {}, [&](const PrefixView& v) {
    all.insert(v.weil_poly());
    return true;
  });
  for (const IPoly& P : pruned) REQUIRE(all.count(P) == 1);

  // The battery accepts the same pairs whether or not the prefix pruning ran.
  std::set<IPoly> accepted_pruned, accepted_all;
  for (const IPoly& P : pruned)
    if (pair_passes(make_pair_candidate(sc, P, A), pr)) accepted_pruned.insert(P);
  for (const IPoly& P : all)
    if (pair_passes(make_pair_candidate(sc, P, A), pr)) accepted_all.insert(P);
  REQUIRE(accepted_pruned == accepted_all);
  REQUIRE(accepted_all.size() == 2);
}

TEST_CASE("genus 2 to 3 double covers over F_2") {
  auto catalog = order_one_catalog(8);
  CoverScenario sc = make_scenario(2, 2, 2, 3);

  SECTION("polynomial level") {
    ScenarioReport r = run_geometric_scenario(sc, catalog, {});
    REQUIRE(r.outcome == ScenarioOutcome::survives);
    REQUIRE(r.pairs.size() == 2);
    REQUIRE(r.pairs[0].prym_label == "1.2.ac");
    REQUIRE(r.pairs[0].base_label == "2.2.ab_c");
    REQUIRE(r.pairs[1].base_label == "2.2.b_c");
    for (const auto& p : r.pairs) {
      REQUIRE(p.status == PairStatus::polynomial_level);
      REQUIRE(p.cover_weil == p.base_weil * p.prym_weil);
      REQUIRE(weil_genus(p.cover_weil) == 3);
      REQUIRE(order(p.prym_weil) == 1);
    }
    REQUIRE(r.enumerated > 0);
    REQUIRE(r.battery_passed == 2);
  }

  SECTION("existence data settles both candidates") {
    IsogenyStore store = store_with({{"2.2.ab_c", 1}, {"2.2.b_c", 3}});
    SearchOptions opt;
    opt.store = &store;
    ScenarioReport r = run_geometric_scenario(sc, catalog, opt);
    REQUIRE(r.pairs.size() == 2);
    for (const auto& p : r.pairs) REQUIRE(p.status == PairStatus::curve_verified);
  }

  SECTION("a missing curve drops its pair") {
    IsogenyStore store = store_with({{"2.2.ab_c", 1}, {"2.2.b_c", 0}});
    SearchOptions opt;
    opt.store = &store;
    ScenarioReport r = run_geometric_scenario(sc, catalog, opt);
    REQUIRE(r.pairs.size() == 1);
    REQUIRE(r.pairs[0].base_label == "2.2.ab_c");
    REQUIRE(r.kills.at("base-existence") == 1);
    REQUIRE(r.outcome == ScenarioOutcome::survives);
  }

  SECTION("covered level with no matching curves eliminates the scenario") {
    IsogenyStore store = store_with({{"2.2.a_a", 1}});  // covers q=2, g=2
    SearchOptions opt;
    opt.store = &store;
    ScenarioReport r = run_geometric_scenario(sc, catalog, opt);
    REQUIRE(r.pairs.empty());
    REQUIRE(r.outcome == ScenarioOutcome::eliminated_by_curve_data);
  }

  SECTION("uncovered store leaves candidates unverifiable") {
    IsogenyStore store = store_with({{"1.2.ac", 1}});  // covers only g = 1
    SearchOptions opt;
    opt.store = &store;
    ScenarioReport r = run_geometric_scenario(sc, catalog, opt);
    REQUIRE(r.pairs.size() == 2);
    for (const auto& p : r.pairs) REQUIRE(p.status == PairStatus::unverifiable);
  }
}

TEST_CASE("filter battery empties the small eliminated scenarios") {
  auto catalog = order_one_catalog(8);
  for (Shape s : {Shape{2, 6}, Shape{2, 7}}) {
    CoverScenario sc = make_scenario(2, 2, s.first, s.second);
    ScenarioReport r = run_geometric_scenario(sc, catalog, {});
    CAPTURE(s.first, s.second);
    REQUIRE(r.outcome == ScenarioOutcome::eliminated_by_filters);
    REQUIRE(r.pairs.empty());
    REQUIRE(r.battery_passed == 0);
  }
  // Degree-3 covers from genus 2 to genus 5 survive the battery at the
  // polynomial level; the case closes only against genus-5 curve data,
  // where neither residual cover class is realized.
  CoverScenario sc35 = make_scenario(2, 3, 2, 5);
  ScenarioReport open35 = run_geometric_scenario(sc35, catalog, {});
  REQUIRE(open35.outcome == ScenarioOutcome::survives);
  REQUIRE(open35.pairs.size() == 2);
  for (const auto& p : open35.pairs) REQUIRE(p.base_label == "2.2.c_c");

  std::vector<std::pair<std::string, long>> rows35 = {{"2.2.c_c", 1}};
  for (const auto& p : open35.pairs) rows35.push_back({encode_label(p.cover_weil, 2), 0});
  IsogenyStore store35 = store_with(rows35);
  SearchOptions opt35;
  opt35.store = &store35;
  ScenarioReport closed35 = run_geometric_scenario(sc35, catalog, opt35);
  REQUIRE(closed35.outcome == ScenarioOutcome::eliminated_by_curve_data);
  REQUIRE(closed35.kills.at("cover-existence") == 2);
}

TEST_CASE("degree 7 covers of genus 2 land on a single pair") {
  auto catalog = order_one_catalog(8);
  CoverScenario sc = make_scenario(2, 7, 2, 8);
  ScenarioReport r = run_geometric_scenario(sc, catalog, {});
  REQUIRE(r.outcome == ScenarioOutcome::survives);
  REQUIRE(r.pairs.size() == 1);
  REQUIRE(r.pairs[0].prym_label == "6.2.af_j_ah_d_ab_ab");
  REQUIRE(r.pairs[0].base_label == "2.2.c_d");
}

TEST_CASE("residual resultant lookups consult the degree-2 reference shapes") {
  auto catalog = order_one_catalog(8);
  CoverScenario sc = make_scenario(2, 4, 2, 5);

  ShapeSet alive = {{2, 5}};
  ScenarioReport with_ref = run_geometric_scenario(sc, catalog, {}, &alive);
  ShapeSet none;
  ScenarioReport without = run_geometric_scenario(sc, catalog, {}, &none);
  ScenarioReport open = run_geometric_scenario(sc, catalog, {});

  auto with_set = base_labels(with_ref);
  auto without_set = base_labels(without);
  auto open_set = base_labels(open);
  for (const auto& l : without_set) REQUIRE(with_set.count(l) == 1);
  for (const auto& l : with_set) REQUIRE(open_set.count(l) == 1);
  REQUIRE(with_ref.outcome == ScenarioOutcome::survives);
}

TEST_CASE("cyclic double covers over F_3 and F_4") {
  auto catalog = order_one_catalog(8);

  SECTION("genus 3 to 6 over F_3 dies in the battery") {
    ScenarioReport r = run_geometric_scenario(make_scenario(3, 2, 3, 6, true), catalog, {});
    REQUIRE(r.outcome == ScenarioOutcome::eliminated_by_filters);
  }

  SECTION("genus 2 to 4 over F_4 dies in the battery") {
    ScenarioReport r = run_geometric_scenario(make_scenario(4, 2, 2, 4, true), catalog, {});
    REQUIRE(r.outcome == ScenarioOutcome::eliminated_by_filters);
  }

  SECTION("genus 2 to 3 over F_3 survives at the polynomial level") {
    ScenarioReport r = run_geometric_scenario(make_scenario(3, 2, 2, 3, true), catalog, {});
    REQUIRE(r.outcome == ScenarioOutcome::survives);
    for (const auto& p : r.pairs) {
      REQUIRE(p.status == PairStatus::polynomial_level);
      REQUIRE(p.prym_label == "1.3.ad");
    }
  }

  SECTION("full F_3 sweep leaves the battery-only dropout in place") {
    auto reports = run_geometric_search(3, {2, 3, 4, 5, 6, 7}, catalog, {});
    REQUIRE(reports.size() == 6);
    std::map<std::string, ScenarioOutcome> outcomes;
    for (const auto& r : reports) outcomes[scenario_key(r.sc)] = r.outcome;
    REQUIRE(outcomes.at("3,2,3,6") == ScenarioOutcome::eliminated_by_filters);
    REQUIRE(outcomes.at("3,2,2,3") == ScenarioOutcome::survives);
    REQUIRE(outcomes.at("3,2,2,4") == ScenarioOutcome::survives);
    REQUIRE(outcomes.at("3,2,3,5") == ScenarioOutcome::survives);
    REQUIRE(outcomes.at("3,2,4,7") == ScenarioOutcome::survives);
    REQUIRE(outcomes.at("3,3,2,4") == ScenarioOutcome::survives);
  }

  SECTION("genus 4 to 7 over F_3 narrows to one isogeny class") {
    ScenarioReport r = run_geometric_scenario(make_scenario(3, 2, 4, 7, true), catalog, {});
    REQUIRE(r.outcome == ScenarioOutcome::survives);
    REQUIRE(r.pairs.size() == 1);
    REQUIRE(r.pairs[0].prym_label == "3.3.aj_bk_add");
    REQUIRE(r.pairs[0].base_label == "4.3.f_v_ca_eg");

    // The same shape with the class marked absent from the curve tables
    // must fall at the data stage, not in the battery.
    IsogenyStore store = store_with({{"4.3.f_v_ca_eg", 0}});
    SearchOptions opt;
    opt.store = &store;
    ScenarioReport closed = run_geometric_scenario(make_scenario(3, 2, 4, 7, true), catalog, opt);
    REQUIRE(closed.outcome == ScenarioOutcome::eliminated_by_curve_data);
    REQUIRE(closed.kills.at("base-existence") == 1);
  }
}

TEST_CASE("scenario runs are deterministic across thread counts") {
  auto catalog = order_one_catalog(8);
  CoverScenario sc = make_scenario(2, 2, 3, 5);
  SearchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  ScenarioReport a = run_geometric_scenario(sc, catalog, one);
  ScenarioReport b = run_geometric_scenario(sc, catalog, four);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (size_t i = 0; i < a.pairs.size(); ++i) {
    REQUIRE(a.pairs[i].base_label == b.pairs[i].base_label);
    REQUIRE(a.pairs[i].prym_label == b.pairs[i].prym_label);
    REQUIRE(a.pairs[i].base_weil == b.pairs[i].base_weil);
  }
  REQUIRE(a.enumerated == b.enumerated);
  REQUIRE(a.outcome == ScenarioOutcome::survives);
}

TEST_CASE("single scenario entry point flags out-of-window requests") {
  auto catalog = order_one_catalog(8);
  ScenarioReport inside = run_single_scenario(2, 2, 2, 3, catalog, {});
  REQUIRE_FALSE(inside.outside_proven_range);
  ScenarioReport outside = run_single_scenario(2, 2, 2, 8, catalog, {});
  REQUIRE(outside.outside_proven_range);
}

TEST_CASE("audit stream captures scenario summaries") {
  auto catalog = order_one_catalog(8);
  std::ostringstream audit;
  SearchOptions opt;
  opt.audit = &audit;
  run_geometric_scenario(make_scenario(2, 2, 2, 3), catalog, opt);
  std::istringstream in(audit.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  REQUIRE(line.find("\"scenario\":\"2,2,2,3\"") != std::string::npos);
  REQUIRE(line.find("\"outcome\":\"survives\"") != std::string::npos);
  int pair_lines = 0;
  while (std::getline(in, line))
    if (line.find("\"base\":") != std::string::npos) ++pair_lines;
  REQUIRE(pair_lines == 2);
}

TEST_CASE("constant extensions of relative class number one") {
  auto got = run_constant_search({2, 3, 4}, {2, 3, 4, 5, 6, 7}, 3);
  std::vector<std::tuple<long, int, int, std::string>> keys;
  for (const auto& c : got) keys.push_back({c.q, c.d, c.g, c.label});
  std::vector<std::tuple<long, int, int, std::string>> expected = {
      {2, 2, 1, "1.2.c"},     {2, 2, 2, "2.2.c_c"}, {2, 2, 2, "2.2.d_f"},
      {2, 2, 3, "3.2.e_j_p"}, {2, 3, 1, "1.2.b"},   {2, 3, 1, "1.2.c"},
      {3, 2, 1, "1.3.d"},     {4, 2, 1, "1.4.e"},
  };
  REQUIRE(keys == expected);
  for (const auto& c : got) {
    REQUIRE(order(constant_relative_poly(c.weil, c.d)) == 1);
    REQUIRE(c.status == PairStatus::polynomial_level);
  }
}

TEST_CASE("constant search tags candidates against curve data") {
  IsogenyStore store = store_with({{"1.2.c", 1}, {"1.2.b", 1}});
  SearchOptions opt;
  opt.store = &store;
  auto got = run_constant_search({2}, {2, 3}, 1, opt);
  REQUIRE(got.size() == 3);
  for (const auto& c : got) REQUIRE(c.status == PairStatus::curve_verified);

  IsogenyStore closed = store_with({{"1.2.ab", 1}});  // covers g = 1 without the candidates
  SearchOptions opt2;
  opt2.store = &closed;
  auto none = run_constant_search({2}, {2, 3}, 1, opt2);
  REQUIRE(none.empty());
}

TEST_CASE("order-one enumeration matches brute force") {
  for (int g = 1; g <= 4; ++g) {
    auto fast = order_one_real_polys(2, g);
    std::set<IPoly> brute;
    for (const IPoly& h : enumerate_real_weil_polys(2, g))
      if (eval(h, Int(3)) == 1) brute.insert(h);
    CAPTURE(g);
    REQUIRE(std::set<IPoly>(fast.begin(), fast.end()) == brute);
    REQUIRE(fast.size() == brute.size());
  }
  for (long q : {3L, 4L})
    for (int g = 1; g <= 3; ++g) {
      auto fast = order_one_real_polys(q, g);
      CAPTURE(q, g);
      REQUIRE(fast.size() == 1);
      REQUIRE(fast[0] == poly_pow(IPoly({Int(-q), Int(1)}), g));
    }
}

TEST_CASE("table writers and diffing") {
  auto catalog = order_one_catalog(8);
  std::vector<ScenarioReport> reports;
  reports.push_back(run_geometric_scenario(make_scenario(2, 2, 2, 3), catalog, {}));

  std::ostringstream csv;
  write_geometric_csv(reports, csv);
  std::string text = csv.str();
  REQUIRE(text.find("d,g,g_prime,prym,base,status\n") == 0);
  REQUIRE(text.find("2,2,3,1.2.ac,2.2.ab_c,polynomial-level\n") != std::string::npos);
  REQUIRE(text.find("2,2,3,1.2.ac,2.2.b_c,polynomial-level\n") != std::string::npos);

  std::istringstream same(text);
  TableDiff diff = diff_keys(geometric_pair_keys(reports), same);
  REQUIRE(diff.clean());

  std::istringstream other("d,g,g_prime,prym,base\n2,2,3,1.2.ac,2.2.ab_c\n2,2,3,1.2.ac,2.2.x_y\n");
  TableDiff bad = diff_keys(geometric_pair_keys(reports), other);
  REQUIRE(bad.missing == std::vector<std::string>{"2,2,3,1.2.ac,2.2.x_y"});
  REQUIRE(bad.extra == std::vector<std::string>{"2,2,3,1.2.ac,2.2.b_c"});

  std::ostringstream ccsv;
  write_constant_csv(run_constant_search({3}, {2}, 1), ccsv);
  REQUIRE(ccsv.str() == "q,d,g,label,status\n3,2,1,1.3.d,polynomial-level\n");

  std::ostringstream scsv;
  write_scenario_csv(reports, scsv);
  REQUIRE(scsv.str() == "q,d,g,g_prime,outcome,pairs\n2,2,2,3,survives,2\n");
}
