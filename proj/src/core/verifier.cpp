#include "core/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

namespace sclq {

namespace {

struct BoundInfo {
  BoundId id;
  const char* name;
  bool conjecture;
  bool k;
  const char* formula;
};

constexpr BoundInfo kBounds[] = {
    {BoundId::thm16i, "THM16i", false, false, "3D-3; C4-free, D>=4"},
    {BoundId::thm16ii, "THM16ii", false, true, "10k^2 D-10k^2; C2k-free, k>=3, D>=2"},
    {BoundId::thm16iii, "THM16iii", false, true, "(2k-1)D-(2k-3); {C2k,C2k+1,C2k+2}-free, k>=2"},
    {BoundId::thm18, "THM18", false, true, "max{kD, 2k(k-1)}; {C3,C5,C2k,C2k+2}-free, k>=2"},
    {BoundId::thm19, "THM19", false, true, "kD-(k-1); bipartite, C2k-free, k>=2"},
    {BoundId::thm110i, "THM110i", false, true, "kD-(k-1); {C5,C2k}-free, k>=4"},
    {BoundId::thm110ii, "THM110ii", false, true, "kD-(k-1); {C3,C5,C2k}-free, k in {2,3}"},
    {BoundId::thm111, "THM111", false, true, "(2k-1)D+(2k-1)^2; C2k-free, k>=3"},
    {BoundId::thm23, "THM23", false, false, "D^2; bipartite"},
    {BoundId::lem32, "LEM32", false, false, "4D-3; C5-free, H=G[witness] contains C3"},
    {BoundId::remark, "REMARK", false, true, "floor((2k-1)(4D+1)/3); C2k-free, k>=3"},
    {BoundId::conj14, "CONJ14", true, false, "5D^2/4 (D even), (5D^2-2D+1)/4 (D odd)"},
    {BoundId::conj15, "CONJ15", true, true, "(2k-1)D-C(2k-1,2); C2k-free, k>=2, D>=2k-2"},
    {BoundId::conj17, "CONJ17", true, true, "kD-(k-1); bipartite, C2k-free, k>=2"},
};

const BoundInfo& info(BoundId id) {
  for (const auto& b : kBounds) {
    if (b.id == id) return b;
  }
  throw Error(ErrorCode::invalid_argument, "unknown bound id");
}

std::string canonical_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '.' || c == '_' || c == '-' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

int min_k(BoundId id) {
  switch (id) {
    case BoundId::thm16ii:
    case BoundId::thm111:
    case BoundId::remark:
      return 3;
    case BoundId::thm110i:
      return 4;
    default:
      return 2;
  }
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<BoundId> all_bound_ids() {
  std::vector<BoundId> ids;
  for (const auto& b : kBounds) ids.push_back(b.id);
  return ids;
}

BoundId parse_bound_id(std::string_view name) {
  const std::string key = canonical_name(name);
  for (const auto& b : kBounds) {
    if (canonical_name(b.name) == key) return b.id;
  }
  throw Error(ErrorCode::invalid_argument, "unknown bound spec '" + std::string(name) + "'");
}

std::string bound_name(BoundId id) { return info(id).name; }
bool is_conjecture(BoundId id) { return info(id).conjecture; }
bool uses_k(BoundId id) { return info(id).k; }
std::string bound_formula(BoundId id) { return info(id).formula; }

BoundSpec normalize(BoundSpec spec) {
  if (!uses_k(spec.id)) {
    spec.k.reset();
    return spec;
  }
  if (!spec.k) {
    throw Error(ErrorCode::invalid_argument, bound_name(spec.id) + " needs k");
  }
  const int k = *spec.k;
  if (k < min_k(spec.id) || (spec.id == BoundId::thm110ii && k > 3)) {
    const std::string range =
        spec.id == BoundId::thm110ii ? "k in {2,3}" : "k >= " + std::to_string(min_k(spec.id));
    throw Error(ErrorCode::domain, bound_name(spec.id) + " requires " + range + ", got " + std::to_string(k));
  }
  if (k > 1000) throw Error(ErrorCode::domain, "k out of range: " + std::to_string(k));
  return spec;
}

std::int64_t minimum_max_degree(const BoundSpec& spec) {
  switch (spec.id) {
    case BoundId::thm16i:
      return 4;
    case BoundId::thm16ii:
      return 2;
    case BoundId::conj15:
      return 2 * static_cast<std::int64_t>(spec.k.value_or(2)) - 2;
    default:
      return 1;
  }
}

std::int64_t bound_value(const BoundSpec& raw, std::int64_t d) {
  const BoundSpec spec = normalize(raw);
  const std::int64_t k = spec.k.value_or(0);
  switch (spec.id) {
    case BoundId::thm16i:
      return 3 * d - 3;
    case BoundId::thm16ii:
      return 10 * k * k * d - 10 * k * k;
    case BoundId::thm16iii:
      return (2 * k - 1) * d - (2 * k - 3);
    case BoundId::thm18:
      return std::max(k * d, 2 * k * (k - 1));
    case BoundId::thm19:
    case BoundId::thm110i:
    case BoundId::thm110ii:
    case BoundId::conj17:
      return k * d - (k - 1);
    case BoundId::thm111:
      return (2 * k - 1) * d + (2 * k - 1) * (2 * k - 1);
    case BoundId::thm23:
      return d * d;
    case BoundId::lem32:
      return 4 * d - 3;
    case BoundId::remark: {
      const std::int64_t num = (2 * k - 1) * (4 * d + 1);
      return num >= 0 ? num / 3 : -((-num + 2) / 3);
    }
    case BoundId::conj14:
      return d % 2 == 0 ? 5 * d * d / 4 : (5 * d * d - 2 * d + 1) / 4;
    case BoundId::conj15:
      return (2 * k - 1) * d - binom2(2 * k - 1);
  }
  throw Error(ErrorCode::invalid_argument, "unknown bound id");
}

GraphAnalysis::GraphAnalysis(Graph g) : graph_(std::move(g)), max_degree_(sclq::max_degree(graph_)) {}

const StrongCliqueResult& GraphAnalysis::strong_clique() {
  if (!sc_) sc_ = strong_clique_number(graph_);
  return *sc_;
}

bool GraphAnalysis::is_bipartite() {
  if (!bipartite_) bipartite_ = bipartition(graph_).has_value();
  return *bipartite_;
}

const std::optional<CycleWitness>& GraphAnalysis::cycle(std::size_t length) {
  auto it = cycles_.find(length);
  if (it == cycles_.end()) it = cycles_.emplace(length, find_cycle_of_length(graph_, length)).first;
  return it->second;
}

const std::optional<CycleWitness>& GraphAnalysis::witness_triangle() {
  if (!triangle_) {
    const auto& sc = strong_clique();
    const Subgraph h = edge_induced_subgraph(graph_, sc.witness);
    std::optional<CycleWitness> found = find_cycle_of_length(h.graph, 3);
    if (found) {
      for (Vertex& v : found->vertices) v = h.vertex_to_old[v];
    }
    triangle_ = std::move(found);
  }
  return *triangle_;
}

namespace {

std::vector<std::size_t> forbidden_lengths(const BoundSpec& spec) {
  const std::size_t k = static_cast<std::size_t>(spec.k.value_or(0));
  switch (spec.id) {
    case BoundId::thm16i:
      return {4};
    case BoundId::thm16ii:
    case BoundId::thm19:
    case BoundId::thm111:
    case BoundId::remark:
    case BoundId::conj15:
    case BoundId::conj17:
      return {2 * k};
    case BoundId::thm16iii:
      return {2 * k, 2 * k + 1, 2 * k + 2};
    case BoundId::thm18:
      return {3, 5, 2 * k, 2 * k + 2};
    case BoundId::thm110i:
      return {5, 2 * k};
    case BoundId::thm110ii:
      return {3, 5, 2 * k};
    case BoundId::lem32:
      return {5};
    case BoundId::thm23:
    case BoundId::conj14:
      return {};
  }
  return {};
}

bool needs_bipartite(BoundId id) {
  return id == BoundId::thm19 || id == BoundId::thm23 || id == BoundId::conj17;
}

}  // namespace

std::vector<Precondition> preconditions(GraphAnalysis& analysis, const BoundSpec& raw) {
  const BoundSpec spec = normalize(raw);
  std::vector<Precondition> out;
  const auto min_degree = minimum_max_degree(spec);
  out.push_back({"max_degree >= " + std::to_string(min_degree),
                 static_cast<std::int64_t>(analysis.max_degree()) >= min_degree, std::nullopt});
  if (needs_bipartite(spec.id)) out.push_back({"bipartite", analysis.is_bipartite(), std::nullopt});
  std::vector<std::size_t> lengths = forbidden_lengths(spec);
  // C_{2k+1} and C_{2k+2} may coincide with C3 or C5 for small k.
  std::vector<std::size_t> seen;
  for (std::size_t len : lengths) {
    if (std::find(seen.begin(), seen.end(), len) != seen.end()) continue;
    seen.push_back(len);
    const auto& found = analysis.cycle(len);
    out.push_back({"C" + std::to_string(len) + "-free", !found.has_value(), found});
  }
  if (spec.id == BoundId::lem32) {
    const auto& tri = analysis.witness_triangle();
    out.push_back({"H contains C3", tri.has_value(), tri});
  }
  return out;
}

std::vector<Precondition> preconditions(const Graph& g, const BoundSpec& spec) {
  GraphAnalysis analysis(g);
  return preconditions(analysis, spec);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::not_applicable:
      return "not_applicable";
    case Verdict::holds:
      return "holds";
    case Verdict::counterexample:
      return "counterexample";
  }
  return "unknown";
}

std::vector<VerificationReport> verify_all(GraphAnalysis& analysis, std::span<const BoundSpec> specs,
                                           const std::string& graph_id, bool timing) {
  std::vector<BoundSpec> normalized;
  for (const auto& s : specs) normalized.push_back(normalize(s));

  using Clock = std::chrono::steady_clock;
  const auto sc_start = Clock::now();
  const StrongCliqueResult& sc = analysis.strong_clique();
  const double sc_ms = std::chrono::duration<double, std::milli>(Clock::now() - sc_start).count();
  const std::string g6 = to_graph6(analysis.graph());

  std::vector<VerificationReport> reports;
  for (const auto& spec : normalized) {
    const auto start = Clock::now();
    VerificationReport r;
    r.graph_id = graph_id;
    r.graph6 = g6;
    r.vertex_count = analysis.graph().vertex_count();
    r.edge_count = analysis.graph().edge_count();
    r.max_degree = analysis.max_degree();
    r.sc = sc;
    r.spec = spec;
    r.preconditions = preconditions(analysis, spec);
    const bool applicable = std::all_of(r.preconditions.begin(), r.preconditions.end(),
                                        [](const Precondition& p) { return p.pass; });
    if (applicable) {
      r.bound = bound_value(spec, static_cast<std::int64_t>(r.max_degree));
      const auto value = static_cast<std::int64_t>(sc.size);
      r.verdict = value > *r.bound ? Verdict::counterexample : Verdict::holds;
      r.tight = value == *r.bound;
    }
    if (timing) {
      r.elapsed_ms = sc_ms + std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport verify(const Graph& g, const BoundSpec& spec, std::string graph_id) {
  GraphAnalysis analysis(g);
  const BoundSpec one[] = {spec};
  return std::move(verify_all(analysis, one, graph_id).front());
}

bool EqAudit::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

namespace {

std::string le(std::int64_t lhs, std::int64_t rhs) {
  return std::to_string(lhs) + " <= " + std::to_string(rhs);
}

}  // namespace

EqAudit check_eq_last(const Graph& g) {
  if (max_degree(g) == 0) {
    throw Error(ErrorCode::precondition, "graph has no edges (max_degree >= 1 required)");
  }
  const StrongCliqueResult sc = strong_clique_number(g);
  const Subgraph sub = edge_induced_subgraph(g, sc.witness);
  const Graph& h = sub.graph;
  const Matching m = maximum_matching(h);

  const std::size_t nh = h.vertex_count();
  std::vector<std::size_t> z_neighbors(nh, 0);
  std::vector<bool> in_y(nh, false);
  for (Vertex v = 0; v < nh; ++v) {
    if (!m.covers(v)) continue;
    for (Vertex w : h.neighbors(v)) {
      if (!m.covers(w)) ++z_neighbors[v];
    }
  }

  EqAudit audit;
  Thm111Decomposition& dec = audit.decomposition;
  dec.h_edges = sc.witness;
  for (EdgeId e : m.edges()) dec.matching.push_back(sub.edge_to_old[e]);
  std::sort(dec.matching.begin(), dec.matching.end());
  dec.m = m.size();
  dec.max_degree_h = max_degree(h);
  for (Vertex v = 0; v < nh; ++v) {
    const Vertex old = sub.vertex_to_old[v];
    if (!m.covers(v)) {
      dec.z.push_back(old);
      continue;
    }
    if (z_neighbors[v] >= 1) dec.x.push_back(old);
    if (z_neighbors[v] >= 2) {
      dec.y.push_back(old);
      in_y[v] = true;
    } else {
      dec.d = std::max(dec.d, h.degree(v));
    }
  }
  audit.edges_h = h.edge_count();

  const auto e2 = static_cast<std::int64_t>(2 * audit.edges_h);
  const auto mm = static_cast<std::int64_t>(dec.m);
  const auto ys = static_cast<std::int64_t>(dec.y.size());
  const auto d = static_cast<std::int64_t>(dec.d);
  const auto dh = static_cast<std::int64_t>(dec.max_degree_h);
  audit.eq1_rhs_times_two = ys * (2 * dh - d - 2) + 2 * mm * (d + 1);
  audit.chained_rhs_times_two = 2 * mm * dh + mm * d;

  auto add = [&](std::string name, bool pass, std::string detail) {
    audit.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool y_in_x = std::includes(dec.x.begin(), dec.x.end(), dec.y.begin(), dec.y.end());
  add("Y subset of X subset of V(M)", y_in_x,
      "|Y|=" + std::to_string(dec.y.size()) + " |X|=" + std::to_string(dec.x.size()) +
          " |V(M)|=" + std::to_string(2 * dec.m));

  bool one_per_edge = true;
  for (EdgeId e : m.edges()) {
    const Edge& ed = h.edge(e);
    if (in_y[ed.u] && in_y[ed.v]) one_per_edge = false;
  }
  add("each M-edge has at most one endpoint in Y", one_per_edge && ys <= mm, "|Y| <= m: " + le(ys, mm));
  add("D <= min(2m, Delta(H))", d <= std::min(2 * mm, dh),
      le(d, std::min(2 * mm, dh)));

  // Edges of H split into those inside V(M) and those between V(M) and Z.
  std::int64_t degree_sum = 0;
  std::int64_t cross = 0;
  for (Vertex v = 0; v < nh; ++v) {
    if (!m.covers(v)) continue;
    degree_sum += static_cast<std::int64_t>(h.degree(v));
    cross += static_cast<std::int64_t>(z_neighbors[v]);
  }
  bool z_independent = true;
  for (const Edge& e : h.edges()) {
    if (!m.covers(e.u) && !m.covers(e.v)) z_independent = false;
  }
  add("Z is independent", z_independent, "|Z|=" + std::to_string(dec.z.size()));
  add("degree sum over V(M)", degree_sum <= ys * dh + (2 * mm - ys) * d,
      le(degree_sum, ys * dh + (2 * mm - ys) * d));
  add("edges between V(M) and Z", cross <= (dh - 1) * ys + (2 * mm - 2 * ys),
      le(cross, (dh - 1) * ys + (2 * mm - 2 * ys)));
  add("2|E(H)| = degree sum over V(M) + cross edges", e2 == degree_sum + cross,
      std::to_string(e2) + " = " + std::to_string(degree_sum + cross));
  add("inequality (1), doubled", e2 <= audit.eq1_rhs_times_two, le(e2, audit.eq1_rhs_times_two));
  add("2m Delta(H) + m D bound, doubled", e2 <= audit.chained_rhs_times_two,
      le(e2, audit.chained_rhs_times_two));

  std::vector<Vertex> cover;
  for (Vertex v = 0; v < nh; ++v) {
    if (!m.covers(v)) continue;
    const auto partner = m.partner(v);
    if (partner && in_y[*partner]) continue;
    cover.push_back(v);
  }
  add("V(M) minus partners of Y covers H", is_vertex_cover(h, cover),
      "cover size " + std::to_string(cover.size()));
  return audit;
}

namespace {

std::string describe(const GeneratorSpec& spec) {
  std::string out = spec.family + "(";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ",";
    first = false;
  };
  for (const auto& [key, value] : spec.params) {
    sep();
    out += key + "=" + std::to_string(value);
  }
  if (spec.probability) {
    sep();
    std::ostringstream p;
    p << *spec.probability;
    out += "p=" + p.str();
  }
  if (spec.seed) {
    sep();
    out += "seed=" + std::to_string(*spec.seed);
  }
  return out + ")";
}

std::vector<std::pair<std::string, Graph>> read_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::vector<Graph> graphs = read_graphs(in, format);
  std::vector<std::pair<std::string, Graph>> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.emplace_back(path + "#" + std::to_string(i + 1), std::move(graphs[i]));
  }
  return out;
}

void write_evidence(const std::string& dir, const std::vector<VerificationReport>& found,
                    std::vector<std::string>& files) {
  std::filesystem::create_directories(dir);
  const std::string g6_path = (std::filesystem::path(dir) / "counterexamples.g6").string();
  const std::string tsv_path = (std::filesystem::path(dir) / "counterexamples.tsv").string();
  std::ofstream g6(g6_path);
  std::ofstream tsv(tsv_path);
  if (!g6 || !tsv) throw Error(ErrorCode::io, "cannot write evidence to " + dir);
  tsv << "spec\tk\tgraph_id\tgraph6\tn\tm\tmax_degree\tsc\tbound\twitness\n";
  for (const auto& r : found) {
    g6 << r.graph6 << '\n';
    tsv << bound_name(r.spec.id) << '\t' << (r.spec.k ? std::to_string(*r.spec.k) : "-") << '\t'
        << r.graph_id << '\t' << r.graph6 << '\t' << r.vertex_count << '\t' << r.edge_count << '\t'
        << r.max_degree << '\t' << r.sc.size << '\t' << *r.bound << '\t';
    for (std::size_t i = 0; i < r.sc.witness.size(); ++i) tsv << (i ? "," : "") << r.sc.witness[i];
    tsv << '\n';
  }
  files.push_back(g6_path);
  files.push_back(tsv_path);
}

}  // namespace

std::vector<std::pair<std::string, Graph>> load_source(const BatchSource& source) {
  std::vector<std::pair<std::string, Graph>> out;
  switch (source.kind) {
    case BatchSource::Kind::generators:
      for (const auto& spec : source.generators) out.emplace_back(describe(spec), generate(spec));
      break;
    case BatchSource::Kind::graph6_file:
      return read_file(source.path, GraphFormat::graph6);
    case BatchSource::Kind::edge_list_file:
      return read_file(source.path, GraphFormat::edge_list);
    case BatchSource::Kind::enumeration: {
      if (source.n_min < 0 || source.n_max < source.n_min) {
        throw Error(ErrorCode::domain, "enumeration range needs 0 <= n_min <= n_max");
      }
      for (int n = source.n_min; n <= source.n_max; ++n) {
        GraphEnumerator en(n, source.dedup);
        while (auto g = en.next()) {
          out.emplace_back("n=" + std::to_string(n) + ",mask=" + std::to_string(en.position() - 1),
                           std::move(*g));
        }
      }
      break;
    }
    case BatchSource::Kind::graphs:
      for (std::size_t i = 0; i < source.graphs.size(); ++i) {
        std::string id = i < source.graph_ids.size() ? source.graph_ids[i] : "graph#" + std::to_string(i + 1);
        out.emplace_back(std::move(id), source.graphs[i]);
      }
      break;
  }
  return out;
}

BatchResult batch_verify(const BatchConfig& config) {
  if (config.specs.empty()) throw Error(ErrorCode::invalid_argument, "no bound specs given");
  if (config.workers < 1) throw Error(ErrorCode::invalid_argument, "workers must be >= 1");
  std::vector<BoundSpec> specs;
  for (const auto& s : config.specs) specs.push_back(normalize(s));
  const auto graphs = load_source(config.source);

  std::vector<std::vector<VerificationReport>> slots(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        GraphAnalysis analysis(graphs[i].second);
        slots[i] = verify_all(analysis, specs, graphs[i].first, config.timing);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(graphs.size());
        return;
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(config.workers),
                                                    std::max<std::size_t>(graphs.size(), 1));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  BatchResult result;
  result.graph_count = graphs.size();
  for (const auto& spec : specs) {
    SpecSummary sum;
    sum.spec = spec;
    result.per_spec.push_back(sum);
  }
  for (auto& reports : slots) {
    for (std::size_t s = 0; s < reports.size(); ++s) {
      VerificationReport& r = reports[s];
      SpecSummary& sum = result.per_spec[s];
      ++sum.graphs;
      if (r.verdict != Verdict::not_applicable) {
        ++sum.applicable;
        if (r.verdict == Verdict::holds) ++sum.holds;
        if (r.tight) ++sum.tight;
        const auto value = static_cast<std::int64_t>(r.sc.size);
        if (*r.bound > 0 && (!sum.max_ratio_sc || value * *sum.max_ratio_bound > *sum.max_ratio_sc * *r.bound)) {
          sum.max_ratio_sc = value;
          sum.max_ratio_bound = *r.bound;
        }
      }
      if (r.verdict == Verdict::counterexample) {
        ++sum.counterexamples;
        result.counterexamples.push_back(r);
      }
      if (config.keep_reports) result.reports.push_back(std::move(r));
    }
  }
  if (config.evidence_dir && !result.counterexamples.empty()) {
    write_evidence(*config.evidence_dir, result.counterexamples, result.evidence_files);
  }
  return result;
}

}  // namespace sclq
