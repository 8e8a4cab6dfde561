#include <gtest/gtest.h>

#include <filesystem>

#include "hurwitz/reports.hpp"

using namespace hurwitz;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("hurwitz_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Components, HurD3B2) {
  RunConfig cfg;
  const Json all = count_components(ComponentQuery::hur(3, 2, false), cfg);
  EXPECT_EQ(all["total_components"], 2);
  std::uint64_t words = 0;
  for (const auto& r : all["rows"]) words += r["fiber_size"].get<std::uint64_t>();
  EXPECT_EQ(words, 5u);
  EXPECT_EQ(count_components(ComponentQuery::hur(3, 2, true), cfg)["total_components"], 1);
}

TEST(Components, GaloisPerType) {
  RunConfig cfg;
  const Json one = count_components(ComponentQuery::hur_galois(3, parse_type(3, "2,1:4")), cfg);
  EXPECT_EQ(one["total_components"], 1);
  EXPECT_EQ(one["query"]["conjugation_quotient"], false);

  // per-type counts sum to the count over all types with G_s = S_d
  ComponentQuery q = ComponentQuery::hur(3, 4);
  q.galois_full = true;
  q.transitive_only = false;
  q.conjugation_quotient = false;
  const Json by_type = count_components(q, cfg);
  std::uint64_t sum = 0;
  for (const auto& r : by_type["rows"]) {
    const auto t = parse_type(3, r["type"].get<std::string>());
    const Json single = count_components(ComponentQuery::hur_galois(3, t), cfg);
    EXPECT_EQ(single["total_components"], r["components"]);
    sum += r["components"].get<std::uint64_t>();
  }
  EXPECT_EQ(by_type["total_components"].get<std::uint64_t>(), sum);
  EXPECT_EQ(sum, 2u);
}

TEST(Components, DegreeTwoIsSingleton) {
  RunConfig cfg;
  for (int b = 2; b <= 8; b += 2) {
    const Json r = count_components(ComponentQuery::hur(2, b), cfg);
    EXPECT_EQ(r["total_components"], 1) << b;
    EXPECT_EQ(r["rows"][0]["fiber_size"], 1);
  }
}

TEST(Components, InvariantUnderRelabeling) {
  // conjugating the whole fiber by any g is a bijection between orbits
  FiberSpec s;
  s.d = 4;
  s.type = parse_type(4, "2,1,1:4");
  s.product = Perm::from_cycles(4, {{1, 2, 3}});
  const auto base = count_orbits_in_fiber(s);
  for (const auto& g : class_elements(4, parse_class(4, "2"))) {
    FiberSpec t = s;
    t.product = conj(g, s.product);
    EXPECT_EQ(count_orbits_in_fiber(t).orbit_count, base.orbit_count);
  }
}

TEST(Components, LimitsGiveUnknownRows) {
  RunConfig cfg;
  cfg.limits.max_fiber = 10;
  const Json r = count_components(ComponentQuery::hur(4, 6), cfg);
  EXPECT_TRUE(r["total_components"].is_null());
  bool saw_unknown = false;
  for (const auto& row : r["rows"]) saw_unknown |= row["status"] == "unknown";
  EXPECT_TRUE(saw_unknown);
}

TEST(Components, TypeMustMatchB) {
  ComponentQuery q = ComponentQuery::hur(3, 3);
  q.type = parse_type(3, "2,1:4");
  EXPECT_THROW(count_components(q, RunConfig{}), PreconditionError);
}

TEST(Theorem1, D4Transpositions) {
  const auto r = theorem1_report(4, parse_class(4, "2"), RunConfig{});
  EXPECT_FALSE(r.falsified);
  EXPECT_FALSE(r.all_unknown);
  EXPECT_EQ(r.report["bound_N_C"], 76);
  EXPECT_EQ(r.report["scan"]["rows"].size(), 7u);
  EXPECT_EQ(r.report["first_single_orbit_n"], 6);
  EXPECT_THROW(theorem1_report(4, parse_class(4, "4"), RunConfig{}), PreconditionError);
}

TEST(Theorem1, D5PartialUnderLimits) {
  RunConfig cfg;
  cfg.limits.max_fiber = 20000;
  const auto r = theorem1_report(5, parse_class(5, "2"), cfg, 2, 8);
  EXPECT_EQ(r.report["bound_N_C"], 345);
  EXPECT_FALSE(r.falsified);
  bool unknown = false;
  for (const auto& row : r.report["scan"]["rows"]) unknown |= row["status"] == "unknown";
  EXPECT_TRUE(unknown);
}

TEST(Emit, JsonCsvText) {
  const Json empty = new_report("none", RunConfig{});
  const std::string js = emit(empty, "json");
  EXPECT_EQ(js.rfind("{\n  \"schema_version\": 1", 0), 0u);
  EXPECT_TRUE(Json::accept(js));

  const auto r = theorem1_report(4, parse_class(4, "2"), RunConfig{}).report;
  const std::string csv = emit(r, "csv");
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(static_cast<std::size_t>(lines), r["scan"]["rows"].size() + 1);
  EXPECT_EQ(csv.rfind("n,fiber_size,orbits,status,falsification\n", 0), 0u);
  EXPECT_NE(emit(r, "text").find("bound_N_C: 76"), std::string::npos);
  EXPECT_THROW(emit(r, "xml"), PreconditionError);
}

TEST(Emit, CsvQuotesFields) {
  Json rep = new_report("x", RunConfig{});
  rep["rows"] = Json::array({{{"type", "2,1:4"}, {"n", 1}}});
  EXPECT_EQ(emit(rep, "csv"), "type,n\n\"2,1:4\",1\n");
}

TEST(Cache, RoundTripIsByteIdentical) {
  const auto dir = temp_dir("cache");
  ResultCache cache(dir);
  const Json q{{"command", "t"}, {"d", 4}};
  EXPECT_FALSE(cache.get(q).has_value());
  const std::string payload = theorem1_report(4, parse_class(4, "2"), RunConfig{}).report.dump();
  cache.put(q, payload);
  ASSERT_TRUE(cache.get(q).has_value());
  EXPECT_EQ(*cache.get(q), payload);
  EXPECT_FALSE(cache.get(Json{{"command", "t"}, {"d", 5}}).has_value());
  for (const auto& e : std::filesystem::directory_iterator(dir)) EXPECT_EQ(e.path().extension(), ".json");
  std::filesystem::remove_all(dir);
}

TEST(Cache, KeysAreStable) {
  EXPECT_EQ(cache_key(Json{{"a", 1}}), cache_key(Json{{"a", 1}}));
  EXPECT_NE(cache_key(Json{{"a", 1}}), cache_key(Json{{"a", 2}}));
  EXPECT_EQ(cache_key(Json{{"a", 1}}).size(), 16u);
}

TEST(Cache, CorruptFileIsAMiss) {
  const auto dir = temp_dir("corrupt");
  ResultCache cache(dir);
  const Json q{{"k", 1}};
  cache.put(q, "{}");
  {
    std::ofstream out(dir / (cache_key(q) + ".json"), std::ios::trunc);
    out << "{not json";
  }
  EXPECT_FALSE(cache.get(q).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Determinism, ReportsIndependentOfWorkers) {
  RunConfig one, four;
  four.limits.workers = 4;
  EXPECT_EQ(theorem1_report(4, parse_class(4, "2"), one).report.dump(),
            theorem1_report(4, parse_class(4, "2"), four).report.dump());
  EXPECT_EQ(count_components(ComponentQuery::hur(4, 4), one).dump(), count_components(ComponentQuery::hur(4, 4), four).dump());
}
