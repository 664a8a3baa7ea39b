#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "core/generators.hpp"
#include "core/report.hpp"
#include "core/verifier.hpp"
#include "helpers.hpp"

using namespace sclq;

namespace {

BoundSpec spec(BoundId id, std::optional<int> k = std::nullopt) { return BoundSpec{id, k}; }

const Precondition* find_condition(const std::vector<Precondition>& pre, const std::string& name) {
  for (const auto& p : pre)
    if (p.condition == name) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("bound values") {
  CHECK(bound_value(spec(BoundId::thm19, 3), 5) == 13);
  CHECK(bound_value(spec(BoundId::thm111, 3), 5) == 50);
  CHECK(bound_value(spec(BoundId::remark, 3), 5) == 35);
  CHECK(bound_value(spec(BoundId::remark, 3), 4) == 28);  // 85/3 floored
  CHECK(bound_value(spec(BoundId::thm16i), 4) == 9);
  CHECK(bound_value(spec(BoundId::thm16ii, 3), 2) == 90);
  CHECK(bound_value(spec(BoundId::thm16iii, 2), 3) == 8);
  CHECK(bound_value(spec(BoundId::thm18, 3), 2) == 12);
  CHECK(bound_value(spec(BoundId::thm18, 3), 5) == 15);
  CHECK(bound_value(spec(BoundId::thm23), 3) == 9);
  CHECK(bound_value(spec(BoundId::lem32), 3) == 9);
  CHECK(bound_value(spec(BoundId::conj15, 3), 6) == 20);
  CHECK(bound_value(spec(BoundId::conj17, 2), 4) == 7);
  CHECK(bound_value(spec(BoundId::conj14), 4) == 20);
  CHECK(bound_value(spec(BoundId::conj14), 3) == 10);
  // k is dropped for specs without one.
  CHECK(bound_value(spec(BoundId::thm23, 9), 3) == 9);
}

TEST_CASE("k domains") {
  CHECK_THROWS_AS(normalize(spec(BoundId::thm19, 1)), Error);
  CHECK_THROWS_AS(normalize(spec(BoundId::thm111, 2)), Error);
  CHECK_THROWS_AS(normalize(spec(BoundId::thm110i, 3)), Error);
  CHECK_THROWS_AS(normalize(spec(BoundId::thm110ii, 4)), Error);
  CHECK_THROWS_AS(normalize(spec(BoundId::remark, 2)), Error);
  CHECK_THROWS_WITH_AS(normalize(spec(BoundId::thm19)), doctest::Contains("needs k"), Error);
  CHECK_FALSE(normalize(spec(BoundId::thm16i, 5)).k.has_value());
}

TEST_CASE("names parse back") {
  for (BoundId id : all_bound_ids()) CHECK(parse_bound_id(bound_name(id)) == id);
  CHECK(parse_bound_id("thm1.10ii") == BoundId::thm110ii);
  CHECK_THROWS_AS(parse_bound_id("THM99"), Error);
}

TEST_CASE("bounds are nondecreasing in the maximum degree") {
  for (BoundId id : all_bound_ids()) {
    for (int k = 2; k <= 6; ++k) {
      BoundSpec s{id, k};
      try {
        s = normalize(s);
      } catch (const Error&) {
        continue;
      }
      for (std::int64_t d = 1; d < 40; ++d) CHECK(bound_value(s, d) <= bound_value(s, d + 1));
    }
  }
}

TEST_CASE("preconditions") {
  const auto c5 = preconditions(cycle_graph(5), spec(BoundId::thm19, 2));
  CHECK_FALSE(find_condition(c5, "bipartite")->pass);

  const auto ext = preconditions(bipartite_pendant_extremal(3, 2), spec(BoundId::thm19, 3));
  for (const auto& p : ext) CHECK(p.pass);

  const Graph k4 = complete_graph(4);
  const auto tri = preconditions(k4, spec(BoundId::thm110ii, 2));
  const Precondition* c3 = find_condition(tri, "C3-free");
  REQUIRE(c3 != nullptr);
  CHECK_FALSE(c3->pass);
  REQUIRE(c3->witness.has_value());
  CHECK(is_valid_cycle(k4, *c3->witness));
  CHECK(c3->witness->vertices.size() == 3);

  const auto small = preconditions(star_graph(3), spec(BoundId::thm16i));
  CHECK(small.front().condition == "max_degree >= 4");
  CHECK_FALSE(small.front().pass);
}

TEST_CASE("verify reports") {
  const auto r = verify(complete_plus_pendants(5, 2), spec(BoundId::conj15, 3));
  CHECK(r.max_degree == 6);
  CHECK(r.sc.size == 20);
  CHECK(*r.bound == 20);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.tight);

  const auto na = verify(cycle_graph(5), spec(BoundId::thm23));
  CHECK(na.verdict == Verdict::not_applicable);
  CHECK_FALSE(na.bound.has_value());
  CHECK(na.sc.size == 5);

  const auto blow = verify(c5_blowup(2), spec(BoundId::thm23));
  CHECK(blow.verdict == Verdict::not_applicable);
  CHECK(blow.sc.size == 20);

  const auto empty = verify(Graph::build(4, std::vector<std::pair<Vertex, Vertex>>{}), spec(BoundId::conj14));
  CHECK(empty.verdict == Verdict::not_applicable);

  const auto c5 = verify(cycle_graph(5), spec(BoundId::conj15, 2));
  CHECK(c5.verdict == Verdict::counterexample);
}

TEST_CASE("the degree floors exclude small graphs that break the literal formulas") {
  // K2 with k = 3: 10k^2 D - 10k^2 is 0 at D = 1 while SC = 1.
  const Graph k2 = complete_graph(2);
  CHECK(bound_value(spec(BoundId::thm16ii, 3), 1) == 0);
  CHECK(verify(k2, spec(BoundId::thm16ii, 3)).verdict == Verdict::not_applicable);
  // K4 is C6-free with SC = 6 while (2k-1)D - C(2k-1,2) = 5 at D = 3.
  const Graph k4 = complete_graph(4);
  CHECK(bound_value(spec(BoundId::conj15, 3), 3) == 5);
  CHECK(strong_clique_number(k4).size == 6);
  CHECK(verify(k4, spec(BoundId::conj15, 3)).verdict == Verdict::not_applicable);
}

TEST_CASE("sharpness of the extremal families") {
  for (int k = 2; k <= 4; ++k)
    for (int p = 1; p <= 3; ++p) {
      const auto r = verify(bipartite_pendant_extremal(k, p), spec(BoundId::thm19, k));
      CHECK(r.verdict == Verdict::holds);
      CHECK(r.tight);
    }
  for (int k = 2; k <= 3; ++k)
    for (int p = 1; p <= 3; ++p) {
      const auto r = verify(complete_plus_pendants(2 * k - 1, p), spec(BoundId::conj15, k));
      CHECK(r.verdict == Verdict::holds);
      CHECK(r.tight);
    }
}

TEST_CASE("eq audit examples") {
  const auto c5 = check_eq_last(cycle_graph(5));
  CHECK(c5.decomposition.m == 2);
  CHECK(c5.edges_h == 5);
  CHECK(c5.passed());

  const auto star = check_eq_last(star_graph(6));
  CHECK(star.decomposition.m == 1);
  CHECK(star.decomposition.z.size() == 5);
  CHECK(star.decomposition.y == std::vector<Vertex>{0});
  CHECK(star.passed());

  const auto kp = check_eq_last(complete_plus_pendants(5, 1));
  CHECK(kp.edges_h == 15);
  CHECK(kp.passed());

  CHECK_THROWS_AS(check_eq_last(Graph::build(3, std::vector<std::pair<Vertex, Vertex>>{})), Error);
}

TEST_CASE("eq audit holds on every graph with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    GraphEnumerator en(n, false);
    while (auto g = en.next()) {
      if (g->edge_count() == 0) continue;
      const auto audit = check_eq_last(*g);
      for (const auto& c : audit.checks) {
        INFO(to_graph6(*g) << " " << c.name << ": " << c.detail);
        REQUIRE(c.pass);
      }
    }
  }
}

TEST_CASE("batch verification is independent of the worker count") {
  BatchConfig config;
  config.source.kind = BatchSource::Kind::enumeration;
  config.source.n_min = 1;
  config.source.n_max = 5;
  config.specs = {spec(BoundId::thm19, 2), spec(BoundId::conj15, 2), spec(BoundId::thm23)};
  const auto one = batch_verify(config);
  config.workers = 4;
  const auto four = batch_verify(config);
  auto strip = [](Json doc) {
    doc.erase("config");
    return doc.dump();
  };
  CHECK(strip(batch_document(config, one)) == strip(batch_document(config, four)));
  CHECK(one.graph_count == 1 + 2 + 8 + 64 + 1024);
  CHECK(one.per_spec[0].counterexamples == 0);
  CHECK(one.per_spec[1].counterexamples > 0);
  CHECK(one.exit_code() == 2);
}

TEST_CASE("batch over generators, empty sources and evidence files") {
  BatchConfig config;
  config.source.kind = BatchSource::Kind::generators;
  for (int t = 1; t <= 3; ++t) config.source.generators.push_back({"c5_blowup", {{"t", t}}, std::nullopt, std::nullopt});
  config.specs = {spec(BoundId::conj14)};
  const auto r = batch_verify(config);
  CHECK(r.per_spec[0].applicable == 3);
  CHECK(r.per_spec[0].tight == 3);
  CHECK(r.exit_code() == 0);

  BatchConfig empty;
  empty.source.kind = BatchSource::Kind::graphs;
  empty.specs = {spec(BoundId::thm23)};
  const auto e = batch_verify(empty);
  CHECK(e.graph_count == 0);
  CHECK(e.exit_code() == 0);

  const auto dir = std::filesystem::temp_directory_path() / "sclq_evidence_test";
  std::filesystem::remove_all(dir);
  BatchConfig bad;
  bad.source.kind = BatchSource::Kind::graphs;
  bad.source.graphs = {cycle_graph(5), cycle_graph(6)};
  bad.specs = {spec(BoundId::conj15, 2)};
  bad.evidence_dir = dir.string();
  const auto b = batch_verify(bad);
  CHECK(b.total_counterexamples() == 1);
  REQUIRE(b.evidence_files.size() == 2);
  std::ifstream g6(b.evidence_files[0]);
  std::string line;
  std::getline(g6, line);
  CHECK(line == "Dhc");
  std::filesystem::remove_all(dir);

  BatchConfig missing;
  missing.source.kind = BatchSource::Kind::graph6_file;
  missing.source.path = "/nonexistent/graphs.g6";
  missing.specs = {spec(BoundId::thm23)};
  CHECK_THROWS_AS(batch_verify(missing), Error);
}

TEST_CASE("job documents") {
  const Json job = Json::parse(R"({
    "source": {"kind": "generators", "items": [{"family": "c5_blowup", "t": 1},
                                               {"family": "random", "params": {"n": 6}, "seed": 3, "probability": 0.5}]},
    "specs": [{"id": "THM19", "k": [2, 3]}, "THM23", {"id": "CONJ15", "k": 3}]
  })");
  const BatchConfig c = batch_config_from_json(job);
  CHECK(c.source.generators.size() == 2);
  CHECK(c.source.generators[1].seed == 3u);
  CHECK(c.specs.size() == 4);
  CHECK(c.specs[1].k == 3);
  const BatchConfig again = batch_config_from_json(config_echo(c));
  CHECK(config_echo(again).dump() == config_echo(c).dump());
  CHECK_THROWS_AS(batch_config_from_json(Json::parse(R"({"source": {"kind": "x"}})")), Error);
  CHECK_THROWS_AS(batch_config_from_json(Json::parse(R"({"source": {"kind": "graph6", "lines": ["Dhc"]},
                                                         "specs": [{"id": "THM19"}]})")),
                  Error);
}
