// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/cycles.hpp"
#include "core/generators.hpp"
#include "core/matching.hpp"
#include "core/strong_clique.hpp"
#include "core/verifier.hpp"
#include "core/witness.hpp"
#include "helpers.hpp"

using namespace sclq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; checks=" << checks_ << " failures=" << failures_;
    if (!first_failure_.empty()) out << "; first failure: " << first_failure_;
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

template <typename F>
void for_each_labeled(int n_max, F&& f) {
  for (int n = 1; n <= n_max; ++n) {
    GraphEnumerator en(n, false);
    while (auto g = en.next()) f(*g);
  }
}

bool cycle_free(const Graph& g, std::initializer_list<std::size_t> lengths) {
  for (std::size_t len : lengths) {
    if (find_cycle_of_length(g, len)) return false;
  }
  return true;
}

std::int64_t sc_of(const Graph& g) { return static_cast<std::int64_t>(strong_clique_number(g).size); }
std::int64_t delta(const Graph& g) { return static_cast<std::int64_t>(max_degree(g)); }

Outcome exact_values() {
  Tally t;
  t.expect(sc_of(cycle_graph(5)) == 5, "SC(C5) = 5");
  t.expect(sc_of(cycle_graph(6)) == 3, "SC(C6) = 3");
  const Graph k33 = complete_bipartite(3, 3);
  t.expect(sc_of(k33) == 9 && delta(k33) * delta(k33) == 9, "SC(K33) = 9 = D^2");
  for (int n = 1; n <= 10; ++n) t.expect(sc_of(star_graph(n)) == n, "SC(K1," + std::to_string(n) + ")");
  return t.finish("C5=5, C6=3, K33=9, stars 1..10");
}

Outcome oracle_equivalence() {
  Tally t;
  GraphEnumerator en(6, false);
  std::size_t labeled = 0;
  while (auto g = en.next()) {
    ++labeled;
    t.expect(strong_clique_number(*g).size == brute_force_sc(*g), "n=6 " + to_graph6(*g));
  }
  std::size_t sampled = 0;
  for (std::uint64_t i = 0; sampled < 200; ++i) {
    const int n = 5 + static_cast<int>(i % 5);
    const Graph g = random_graph(n, 0.35, 1000 + i);
    if (g.edge_count() > kBruteForceEdgeCap) continue;
    ++sampled;
    t.expect(strong_clique_number(g).size == brute_force_sc(g), "random " + to_graph6(g));
  }
  return t.finish(std::to_string(labeled) + " labeled n=6 graphs, " + std::to_string(sampled) + " random n<=9");
}

Outcome thm19_sweep() {
  Tally t;
  std::size_t applicable = 0;
  for_each_labeled(6, [&](const Graph& g) {
    if (g.edge_count() == 0 || !bipartition(g)) return;
    for (int k = 2; k <= 4; ++k) {
      if (!cycle_free(g, {static_cast<std::size_t>(2 * k)})) continue;
      ++applicable;
      t.expect(sc_of(g) <= k * delta(g) - (k - 1), "THM19 k=" + std::to_string(k) + " " + to_graph6(g));
    }
  });
  for (int k = 2; k <= 4; ++k) {
    for (int p = 1; p <= 3; ++p) {
      const Graph g = bipartite_pendant_extremal(k, p);
      const bool hyp = bipartition(g).has_value() && cycle_free(g, {static_cast<std::size_t>(2 * k)});
      t.expect(hyp && sc_of(g) == k * delta(g) - (k - 1),
               "extremal k=" + std::to_string(k) + " p=" + std::to_string(p));
    }
  }
  return t.finish(std::to_string(applicable) + " (graph, k) pairs; extremal family tight for 9 (k, p)");
}

Outcome thm110_sweep() {
  Tally t;
  std::size_t applicable = 0;
  for_each_labeled(6, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    for (int k = 2; k <= 4; ++k) {
      const auto c2k = static_cast<std::size_t>(2 * k);
      const bool hyp = k >= 4 ? cycle_free(g, {5, c2k}) : cycle_free(g, {3, 5, c2k});
      if (!hyp) continue;
      ++applicable;
      t.expect(sc_of(g) <= k * delta(g) - (k - 1), "THM110 k=" + std::to_string(k) + " " + to_graph6(g));
    }
  });
  return t.finish(std::to_string(applicable) + " (graph, k) pairs over all labeled n<=6");
}

Outcome thm111_sweep() {
  Tally t;
  std::size_t applicable = 0;
  std::size_t remark_smaller = 0;
  std::size_t audits = 0;
  const BoundSpec remark{BoundId::remark, 3};
  for_each_labeled(6, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    const std::string id = to_graph6(g);
    const EqAudit audit = check_eq_last(g);
    ++audits;
    for (const auto& c : audit.checks) t.expect(c.pass, "audit " + id + " " + c.name + ": " + c.detail);
    if (!cycle_free(g, {6})) return;
    ++applicable;
    const std::int64_t d = delta(g);
    const std::int64_t sc = sc_of(g);
    t.expect(sc <= 5 * d + 25, "THM111 " + id);
    const std::int64_t r = bound_value(remark, d);
    if (r < 5 * d + 25) {
      ++remark_smaller;
      t.expect(sc <= r, "REMARK " + id);
    }
  });
  return t.finish(std::to_string(applicable) + " C6-free graphs, " + std::to_string(audits) + " audits, remark smaller on " +
                  std::to_string(remark_smaller));
}

Outcome conj15() {
  Tally t;
  for (int k = 2; k <= 3; ++k) {
    for (int p = 1; p <= 3; ++p) {
      const Graph g = complete_plus_pendants(2 * k - 1, p);
      const std::int64_t d = delta(g);
      const std::int64_t bound = (2 * k - 1) * d - (2 * k - 1) * (2 * k - 2) / 2;
      t.expect(cycle_free(g, {static_cast<std::size_t>(2 * k)}), "C2k-free k=" + std::to_string(k));
      t.expect(sc_of(g) == bound, "sharp k=" + std::to_string(k) + " p=" + std::to_string(p));
    }
  }
  BatchConfig config;
  config.source.kind = BatchSource::Kind::enumeration;
  config.source.n_min = 1;
  config.source.n_max = 6;
  config.specs = {BoundSpec{BoundId::conj15, 3}};
  config.keep_reports = false;
  const BatchResult r = batch_verify(config);
  t.expect(r.per_spec[0].counterexamples == 0, "CONJ15 k=3 sweep counterexamples");
  return t.finish("sharp for k in {2,3}, p in {1,2,3}; sweep applicable=" + std::to_string(r.per_spec[0].applicable) +
                  " counterexamples=" + std::to_string(r.per_spec[0].counterexamples));
}

Outcome lemma21() {
  Tally t;
  std::size_t instances = 0;
  std::size_t cycles = 0;
  for (std::uint64_t seed = 0; instances < 500; ++seed) {
    const int a = 2 + static_cast<int>(seed % 5);
    const int b = 2 + static_cast<int>((seed / 5) % 5);
    const Graph g = random_bipartite(a, b, 0.5, 5000 + seed);
    if (g.edge_count() == 0) continue;
    ++instances;
    const Matching m = testing::clique_matching(g);
    const std::string id = to_graph6(g);
    const PathWitness p = lemma21_path(g, m);
    bool has_all = true;
    for (EdgeId e : m.edges()) has_all = has_all && std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end();
    t.expect(is_valid_path(g, p) && p.vertices.size() == 2 * m.size() && has_all, "path " + id);
    if (m.size() < 4) continue;
    ++cycles;
    const Lemma21Cycle c = lemma21_cycle(g, m);
    bool inside = true;
    for (Vertex v : c.cycle.vertices) inside = inside && m.covers(v);
    t.expect(is_valid_cycle(g, c.cycle) && c.cycle.vertices.size() == 2 * m.size() - 2 && inside &&
                 c.matching_edges_used + 2 >= m.size(),
             "cycle " + id);
  }
  // Complete bipartite instances guarantee large matchings.
  for (int a = 4; a <= 6; ++a) {
    for (int b = a; b <= 6; ++b) {
      const Graph g = complete_bipartite(a, b);
      const Matching m = testing::clique_matching(g);
      const Lemma21Cycle c = lemma21_cycle(g, m);
      ++cycles;
      t.expect(is_valid_cycle(g, c.cycle) && c.cycle.vertices.size() == 2 * m.size() - 2 &&
                   c.matching_edges_used + 2 >= m.size(),
               "cycle K" + std::to_string(a) + "," + std::to_string(b));
    }
  }
  return t.finish(std::to_string(instances) + " random instances, " + std::to_string(cycles) + " with m >= 4");
}

Matching prefix_matching(const Graph& g, int m) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 0);
  return Matching::from_edges(g, ids);
}

// Graph on 2m vertices whose first m edges are the matching {2i, 2i+1}; the
// other vertex pairs are kept independently with probability p.
Graph with_matching(int m, double p, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < m; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < 2 * m; ++a) {
    for (int b = a + 1; b < 2 * m; ++b) {
      if (b == a + 1 && a % 2 == 0) continue;
      if (u(rng) < p) pairs.emplace_back(a, b);
    }
  }
  return Graph::build(static_cast<std::size_t>(2 * m), pairs);
}

Outcome special_matchings() {
  Tally t;
  auto observation = [&](const Graph& g, const Matching& m, const std::string& id) {
    for (Vertex x : m.vertices()) {
      const bool special = is_x_special(g, m, x);
      t.expect(find_xm_path(g, m, x, 2).has_value() == !special, "no length-2 path iff special " + id + " x=" + std::to_string(x));
      if (!special) continue;
      for (std::size_t len = 1; len <= m.size(); ++len) {
        if (len == 2) continue;
        const auto p = find_xm_path(g, m, x, len);
        t.expect(p && is_valid_xm_path(g, m, x, *p), "special paths " + id + " len=" + std::to_string(len));
      }
    }
  };

  std::size_t constructed = 0;
  for (int m = 3; m <= 6; ++m) {
    const Graph g = special_matching_graph(m);
    observation(g, prefix_matching(g, m), "special m=" + std::to_string(m));
    ++constructed;
  }

  // Perturbations: toggle one to three non-matching pairs of a special graph.
  std::mt19937_64 rng(41);
  std::size_t perturbed = 0;
  while (perturbed < 200) {
    const int m = 3 + static_cast<int>(rng() % 4);
    const Graph base = special_matching_graph(m);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : base.edges()) pairs.emplace_back(e.u, e.v);
    const int flips = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < flips; ++f) {
      const Vertex a = static_cast<Vertex>(rng() % (2 * m));
      const Vertex b = static_cast<Vertex>(rng() % (2 * m));
      if (a == b || a / 2 == b / 2) continue;
      const Edge key{std::min(a, b), std::max(a, b)};
      auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) {
        return std::min(p.first, p.second) == key.u && std::max(p.first, p.second) == key.v;
      });
      if (it != pairs.end()) {
        pairs.erase(it);
      } else {
        pairs.emplace_back(key.u, key.v);
      }
    }
    const Graph g = Graph::build(static_cast<std::size_t>(2 * m), pairs);
    std::vector<EdgeId> ids;
    for (int i = 0; i < m; ++i) ids.push_back(*g.edge_between(2 * i, 2 * i + 1));
    const Matching mm = Matching::from_edges(g, ids);
    if (!is_strong_clique(g, mm.edges())) continue;
    ++perturbed;
    observation(g, mm, "perturbed " + to_graph6(g));
  }

  // Non-special x with a neighbor in V(M) - {x, x'}: every length 1..m-1.
  std::size_t nonspecial = 0;
  std::mt19937_64 rng42(42);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 2 + trial % 5;
    const Graph g = with_matching(m, 0.45, rng42);
    const Matching mm = prefix_matching(g, m);
    if (!is_strong_clique(g, mm.edges())) continue;
    for (Vertex x : mm.vertices()) {
      if (is_x_special(g, mm, x)) continue;
      bool has_neighbor = false;
      for (Vertex w : g.neighbors(x)) has_neighbor = has_neighbor || (w != *mm.partner(x) && mm.covers(w));
      if (!has_neighbor) continue;
      ++nonspecial;
      for (std::size_t len = 1; len + 1 <= static_cast<std::size_t>(m); ++len) {
        const auto p = find_xm_path(g, mm, x, len);
        t.expect(p && is_valid_xm_path(g, mm, x, *p), "non-special paths " + to_graph6(g) + " len=" + std::to_string(len));
      }
    }
  }

  // A strong-clique matching with an even sub-matching of size s >= 6
  // forces a C_s.
  std::size_t even = 0;
  std::mt19937_64 rng43(43);
  for (int trial = 0; trial < 300 && even < 60; ++trial) {
    const int m = 6 + trial % 3;
    const Graph g = with_matching(m, 0.5, rng43);
    const Matching mm = prefix_matching(g, m);
    if (!is_strong_clique(g, mm.edges())) continue;
    ++even;
    for (int size = 6; size <= m; size += 2) {
      const auto c = find_cycle_of_length(g, static_cast<std::size_t>(size));
      t.expect(c && is_valid_cycle(g, *c), "even matching cycle " + to_graph6(g) + " C" + std::to_string(size));
    }
  }
  return t.finish(std::to_string(constructed) + " constructed, " + std::to_string(perturbed) + " perturbed, " +
                  std::to_string(nonspecial) + " non-special (M, x), " + std::to_string(even) + " matchings of size 6..8");
}

Outcome konig() {
  Tally t;
  auto check = [&](const Graph& g, const std::string& id) {
    const Matching m = maximum_matching(g);
    const VertexCover c = konig_cover(g, m);
    bool inside = true;
    for (Vertex v : c.vertices) inside = inside && m.covers(v);
    const int tau = oracle::vertex_cover_number(testing::plain(g));
    t.expect(inside && is_vertex_cover(g, c.vertices) && c.vertices.size() == m.size() &&
                 static_cast<int>(m.size()) == tau,
             id);
  };
  std::size_t exhaustive = 0;
  for_each_labeled(6, [&](const Graph& g) {
    if (!bipartition(g)) return;
    ++exhaustive;
    check(g, "n<=6 " + to_graph6(g));
  });
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int a = 1 + static_cast<int>(seed % 4);
    const int b = 8 - a - static_cast<int>(seed / 4 % 3);
    check(random_bipartite(a, b, 0.3 + 0.2 * static_cast<double>(seed % 3), 9000 + seed),
          "seed " + std::to_string(seed));
  }
  return t.finish(std::to_string(exhaustive) + " bipartite labeled n<=6, 500 sampled n<=8");
}

Outcome blowups() {
  Tally t;
  for (int tt = 1; tt <= 3; ++tt) {
    const Graph g = c5_blowup(tt);
    const std::int64_t d = delta(g);
    const std::int64_t sc = sc_of(g);
    t.expect(sc == 5 * tt * tt && 4 * sc == 5 * d * d, "t=" + std::to_string(tt));
  }
  return t.finish("SC = 5t^2 = 1.25 D^2 for t = 1, 2, 3");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"exact values", exact_values, 1.0},
      {"oracle equivalence", oracle_equivalence, 300.0},
      {"bipartite C2k-free sweep", thm19_sweep, 600.0},
      {"{C5, C2k}-free sweep", thm110_sweep, 0.0},
      {"C6-free sweep with decomposition audit", thm111_sweep, 0.0},
      {"CONJ15 sharpness and sweep", conj15, 0.0},
      {"path and cycle witnesses", lemma21, 120.0},
      {"special matchings and (x,M)-paths", special_matchings, 0.0},
      {"Konig covers", konig, 0.0},
      {"C5 blowup tightness", blowups, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s [%zu] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
