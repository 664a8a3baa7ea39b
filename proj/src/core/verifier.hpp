#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/codec.hpp"
#include "core/cycles.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/matching.hpp"
#include "core/strong_clique.hpp"

namespace sclq {

enum class BoundId {
  thm16i,
  thm16ii,
  thm16iii,
  thm18,
  thm19,
  thm110i,
  thm110ii,
  thm111,
  thm23,
  lem32,
  remark,
  conj14,
  conj15,
  conj17,
};

std::vector<BoundId> all_bound_ids();
BoundId parse_bound_id(std::string_view name);
std::string bound_name(BoundId id);
bool is_conjecture(BoundId id);
bool uses_k(BoundId id);

/// Formula and hypotheses in one line, D standing for the maximum degree.
std::string bound_formula(BoundId id);

struct BoundSpec {
  BoundId id;
  std::optional<int> k;  // ignored (normalized to absent) for specs without k

  bool operator==(const BoundSpec&) const = default;
};

/// Checks k against the spec's domain and drops k for specs that take none.
BoundSpec normalize(BoundSpec spec);

/// Smallest maximum degree for which the spec applies.
std::int64_t minimum_max_degree(const BoundSpec& spec);

/// Exact integer bound. REMARK is floored; CONJ14 is the even/odd quadratic.
std::int64_t bound_value(const BoundSpec& spec, std::int64_t max_degree);

struct Precondition {
  std::string condition;
  bool pass = true;
  std::optional<CycleWitness> witness;
};

/// Lazily computed facts about one graph, shared across many specs.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Graph g);

  const Graph& graph() const { return graph_; }
  std::size_t max_degree() const { return max_degree_; }
  const StrongCliqueResult& strong_clique();
  bool is_bipartite();
  const std::optional<CycleWitness>& cycle(std::size_t length);
  /// Triangle inside H = G[witness], in G's vertex ids.
  const std::optional<CycleWitness>& witness_triangle();

 private:
  Graph graph_;
  std::size_t max_degree_;
  std::optional<StrongCliqueResult> sc_;
  std::optional<bool> bipartite_;
  std::map<std::size_t, std::optional<CycleWitness>> cycles_;
  std::optional<std::optional<CycleWitness>> triangle_;
};

std::vector<Precondition> preconditions(GraphAnalysis& analysis, const BoundSpec& spec);
std::vector<Precondition> preconditions(const Graph& g, const BoundSpec& spec);

enum class Verdict { not_applicable, holds, counterexample };
std::string verdict_name(Verdict v);

struct VerificationReport {
  std::string graph_id;
  std::string graph6;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  StrongCliqueResult sc;
  BoundSpec spec{BoundId::thm23, std::nullopt};
  std::vector<Precondition> preconditions;
  std::optional<std::int64_t> bound;  // absent when not applicable
  Verdict verdict = Verdict::not_applicable;
  bool tight = false;
  std::optional<double> elapsed_ms;
};

VerificationReport verify(const Graph& g, const BoundSpec& spec, std::string graph_id = "graph");
std::vector<VerificationReport> verify_all(GraphAnalysis& analysis, std::span<const BoundSpec> specs,
                                           const std::string& graph_id, bool timing = false);

/// Sets from the linear-bound argument for C_{2k}-free graphs, for
/// H = G[maximum strong clique] and a maximum matching M of H. Vertex ids
/// are G's.
struct Thm111Decomposition {
  std::vector<EdgeId> h_edges;
  std::vector<EdgeId> matching;  // M as G edge ids
  std::size_t m = 0;
  std::vector<Vertex> z;  // V(H) \ V(M)
  std::vector<Vertex> x;  // matched vertices with an H-neighbor in Z
  std::vector<Vertex> y;  // matched vertices with at least two H-neighbors in Z
  std::size_t d = 0;      // max deg_H over V(M) \ Y (0 if empty)
  std::size_t max_degree_h = 0;
};

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // both sides, numerically
};

struct EqAudit {
  Thm111Decomposition decomposition;
  std::size_t edges_h = 0;
  /// Right-hand sides doubled so the half-integer D/2 stays integral.
  std::int64_t eq1_rhs_times_two = 0;
  std::int64_t chained_rhs_times_two = 0;
  std::vector<AuditCheck> checks;

  bool passed() const;
};

/// Decomposes a maximum strong clique and audits each inequality of the
/// linear-bound argument. A failed check is a finding against this
/// implementation, reported rather than thrown. Requires max degree >= 1.
EqAudit check_eq_last(const Graph& g);

struct BatchSource {
  enum class Kind { generators, graph6_file, edge_list_file, enumeration, graphs };
  Kind kind = Kind::graphs;
  std::vector<GeneratorSpec> generators;
  std::string path;
  int n_min = 0;
  int n_max = 0;
  bool dedup = false;
  std::vector<Graph> graphs;
  std::vector<std::string> graph_ids;  // optional labels for in-memory graphs
};

struct BatchConfig {
  BatchSource source;
  std::vector<BoundSpec> specs;
  int workers = 1;
  std::optional<std::string> evidence_dir;
  bool keep_reports = true;
  bool timing = false;
};

struct SpecSummary {
  BoundSpec spec{BoundId::thm23, std::nullopt};
  std::size_t graphs = 0;
  std::size_t applicable = 0;
  std::size_t holds = 0;
  std::size_t tight = 0;
  std::size_t counterexamples = 0;
  /// Largest SC / bound over applicable graphs with a positive bound.
  std::optional<std::int64_t> max_ratio_sc;
  std::optional<std::int64_t> max_ratio_bound;
};

struct BatchResult {
  std::size_t graph_count = 0;
  std::vector<SpecSummary> per_spec;
  std::vector<VerificationReport> reports;          // when keep_reports
  std::vector<VerificationReport> counterexamples;  // always
  std::vector<std::string> evidence_files;

  std::size_t total_counterexamples() const { return counterexamples.size(); }
  int exit_code() const { return counterexamples.empty() ? 0 : 2; }
};

/// Loads every graph from the source up front; unreadable sources throw
/// before any verification starts.
std::vector<std::pair<std::string, Graph>> load_source(const BatchSource& source);

/// Verifies every graph against every spec on `workers` threads. Results
/// are merged in graph order, so output does not depend on the worker count.
BatchResult batch_verify(const BatchConfig& config);

}  // namespace sclq
