#include "sclq/sclq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "core/report.hpp"

struct sclq_graph {
  sclq::Graph g;
};

struct sclq_graph_list {
  std::vector<sclq_graph> graphs;
};

struct sclq_enumerator {
  sclq::GraphEnumerator en;
};

namespace {

thread_local std::string last_error;

sclq_status status_of(sclq::ErrorCode code) {
  switch (code) {
    case sclq::ErrorCode::invalid_argument:
      return SCLQ_ERR_INVALID_ARGUMENT;
    case sclq::ErrorCode::parse:
      return SCLQ_ERR_PARSE;
    case sclq::ErrorCode::domain:
      return SCLQ_ERR_DOMAIN;
    case sclq::ErrorCode::too_large:
      return SCLQ_ERR_TOO_LARGE;
    case sclq::ErrorCode::precondition:
      return SCLQ_ERR_PRECONDITION;
    case sclq::ErrorCode::io:
      return SCLQ_ERR_IO;
  }
  return SCLQ_ERR_INTERNAL;
}

template <typename F>
sclq_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SCLQ_OK;
  } catch (const sclq::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return SCLQ_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SCLQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCLQ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SCLQ_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw sclq::Error(sclq::ErrorCode::invalid_argument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uint32_t* copy_u32(const std::vector<uint32_t>& v) {
  uint32_t* out = static_cast<uint32_t*>(std::malloc(std::max<std::size_t>(v.size(), 1) * sizeof(uint32_t)));
  if (!out) throw std::bad_alloc();
  if (!v.empty()) std::memcpy(out, v.data(), v.size() * sizeof(uint32_t));
  return out;
}

std::string dump(const sclq::Json& j) { return j.dump(2) + "\n"; }

sclq::Json parse_args(const char* args_json) {
  if (!args_json || !*args_json) return sclq::Json::object();
  sclq::Json j = sclq::Json::parse(args_json);
  require(j.is_object(), "witness arguments must be a JSON object");
  return j;
}

std::vector<sclq::EdgeId> id_list(const sclq::Json& j, const char* key) {
  require(j[key].is_array(), "edge id list expected");
  std::vector<sclq::EdgeId> out;
  for (const auto& v : j[key]) {
    require(v.is_number_unsigned(), "edge ids must be non-negative integers");
    out.push_back(v.get<sclq::EdgeId>());
  }
  return out;
}

sclq::Matching default_matching(const sclq::Graph& g) {
  const auto sc = sclq::strong_clique_number(g);
  const sclq::Subgraph h = sclq::edge_induced_subgraph(g, sc.witness);
  const sclq::Matching local = sclq::maximum_matching(h.graph);
  std::vector<sclq::EdgeId> edges;
  for (sclq::EdgeId e : local.edges()) edges.push_back(h.edge_to_old[e]);
  return sclq::Matching::from_edges(g, std::move(edges));
}

sclq::Matching matching_arg(const sclq::Graph& g, const sclq::Json& args) {
  if (args.contains("matching")) return sclq::Matching::from_edges(g, id_list(args, "matching"));
  return default_matching(g);
}

sclq::Json witness_op(const sclq::Graph& g, const std::string& op, const sclq::Json& args) {
  using sclq::Json;
  Json out = {{"op", op}, {"graph6", sclq::to_graph6(g)}};
  if (op == "eq-audit") {
    out["audit"] = sclq::to_json(sclq::check_eq_last(g));
    return out;
  }
  if (op == "s-minimal") {
    std::vector<sclq::EdgeId> s =
        args.contains("s") ? id_list(args, "s") : sclq::strong_clique_number(g).witness;
    const auto red = sclq::s_minimal_reduce(g, s);
    const bool maximum = sclq::strong_clique_number(red.reduced.graph).size == red.s_edges.size();
    out["s"] = s;
    out["reduced"] = {{"graph6", sclq::to_graph6(red.reduced.graph)},
                      {"n", red.reduced.graph.vertex_count()},
                      {"m", red.reduced.graph.edge_count()},
                      {"vertex_to_old", red.reduced.vertex_to_old},
                      {"edge_to_old", red.reduced.edge_to_old}};
    out["s_edges"] = red.s_edges;
    out["s_is_maximum"] = maximum;
    out["properties"] = sclq::to_json(sclq::check_minimal_properties(red.reduced.graph, red.s_edges, maximum));
    return out;
  }
  const sclq::Matching m = matching_arg(g, args);
  out["matching"] = m.edges();
  if (op == "lemma21-path") {
    out["path"] = sclq::to_json(sclq::lemma21_path(g, m));
  } else if (op == "lemma21-cycle") {
    const auto c = sclq::lemma21_cycle(g, m);
    out["cycle"] = sclq::to_json(c.cycle);
    out["matching_edges_used"] = c.matching_edges_used;
    out["digraph_strong"] = c.digraph_strong;
  } else if (op == "special") {
    Json xs = Json::array();
    for (sclq::Vertex v : m.vertices()) {
      if (sclq::is_x_special(g, m, v)) xs.push_back(v);
    }
    out["special"] = !xs.empty();
    out["x_special"] = xs;
  } else if (op == "xm-path") {
    require(args.contains("length") && args["length"].is_number_unsigned(), "xm-path needs a length");
    const auto vertices = m.vertices();
    require(!vertices.empty(), "matching is empty");
    sclq::Vertex x = vertices.front();
    if (args.contains("x")) {
      require(args["x"].is_number_unsigned(), "x must be a vertex");
      x = args["x"].get<sclq::Vertex>();
    }
    const auto length = args["length"].get<std::size_t>();
    const auto path = sclq::find_xm_path(g, m, x, length);
    out["x"] = x;
    out["length"] = length;
    out["found"] = path.has_value();
    out["path"] = path ? sclq::to_json(*path) : Json(nullptr);
  } else {
    throw sclq::Error(sclq::ErrorCode::invalid_argument, "unknown witness op '" + op + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* sclq_version(void) { return "1.0.0"; }

const char* sclq_status_name(sclq_status status) {
  switch (status) {
    case SCLQ_OK:
      return "ok";
    case SCLQ_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case SCLQ_ERR_PARSE:
      return "parse";
    case SCLQ_ERR_DOMAIN:
      return "domain";
    case SCLQ_ERR_TOO_LARGE:
      return "too_large";
    case SCLQ_ERR_PRECONDITION:
      return "precondition";
    case SCLQ_ERR_IO:
      return "io";
    case SCLQ_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* sclq_last_error(void) { return last_error.c_str(); }

void sclq_string_free(char* s) { std::free(s); }
void sclq_u32_free(uint32_t* values) { std::free(values); }

sclq_status sclq_graph_create(size_t vertex_count, const uint32_t* pairs, size_t edge_count, sclq_graph** out) {
  return guarded([&] {
    require(out && (pairs || edge_count == 0), "null argument");
    std::vector<std::pair<sclq::Vertex, sclq::Vertex>> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new sclq_graph{sclq::Graph::build(vertex_count, list)};
  });
}

sclq_status sclq_graph_from_graph6(const char* line, sclq_graph** out) {
  return guarded([&] {
    require(line && out, "null argument");
    *out = new sclq_graph{sclq::from_graph6(line)};
  });
}

sclq_status sclq_graph_clone(const sclq_graph* g, sclq_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new sclq_graph{g->g};
  });
}

void sclq_graph_free(sclq_graph* g) { delete g; }

size_t sclq_graph_vertex_count(const sclq_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t sclq_graph_edge_count(const sclq_graph* g) { return g ? g->g.edge_count() : 0; }
size_t sclq_graph_max_degree(const sclq_graph* g) { return g ? sclq::max_degree(g->g) : 0; }

sclq_status sclq_graph_edge(const sclq_graph* g, uint32_t edge, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(g && u && v, "null argument");
    require(g->g.valid_edge(edge), "edge id out of range");
    *u = g->g.edge(edge).u;
    *v = g->g.edge(edge).v;
  });
}

sclq_status sclq_graph_to_graph6(const sclq_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(sclq::to_graph6(g->g));
  });
}

sclq_status sclq_graph_to_edge_list(const sclq_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(sclq::to_edge_list(g->g));
  });
}

sclq_status sclq_read_graphs(const char* text, size_t length, sclq_format format, sclq_graph_list** out) {
  return guarded([&] {
    require((text || length == 0) && out, "null argument");
    const auto fmt = format == SCLQ_FORMAT_EDGE_LIST ? sclq::GraphFormat::edge_list : sclq::GraphFormat::graph6;
    auto list = std::make_unique<sclq_graph_list>();
    for (auto& g : sclq::read_graphs(std::string_view(text ? text : "", length), fmt)) {
      list->graphs.push_back(sclq_graph{std::move(g)});
    }
    *out = list.release();
  });
}

sclq_status sclq_read_graphs_file(const char* path, sclq_format format, sclq_graph_list** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path);
    if (!in) throw sclq::Error(sclq::ErrorCode::io, std::string("cannot open ") + path);
    const auto fmt = format == SCLQ_FORMAT_EDGE_LIST ? sclq::GraphFormat::edge_list : sclq::GraphFormat::graph6;
    auto list = std::make_unique<sclq_graph_list>();
    for (auto& g : sclq::read_graphs(in, fmt)) list->graphs.push_back(sclq_graph{std::move(g)});
    *out = list.release();
  });
}

size_t sclq_graph_list_size(const sclq_graph_list* list) { return list ? list->graphs.size() : 0; }

const sclq_graph* sclq_graph_list_get(const sclq_graph_list* list, size_t index) {
  if (!list || index >= list->graphs.size()) return nullptr;
  return &list->graphs[index];
}

void sclq_graph_list_free(sclq_graph_list* list) { delete list; }

sclq_status sclq_strong_clique(const sclq_graph* g, size_t* size, uint32_t** witness, size_t* witness_length) {
  return guarded([&] {
    require(g && size, "null argument");
    const auto sc = sclq::strong_clique_number(g->g);
    if (witness) *witness = copy_u32(sc.witness);
    if (witness_length) *witness_length = sc.witness.size();
    *size = sc.size;
  });
}

sclq_status sclq_is_strong_clique(const sclq_graph* g, const uint32_t* edges, size_t count, int* result) {
  return guarded([&] {
    require(g && result && (edges || count == 0), "null argument");
    for (size_t i = 0; i < count; ++i) require(g->g.valid_edge(edges[i]), "edge id out of range");
    *result = sclq::is_strong_clique(g->g, std::span<const uint32_t>(edges, count)) ? 1 : 0;
  });
}

sclq_status sclq_edge_distance(const sclq_graph* g, uint32_t e, uint32_t f, uint32_t* distance, int* infinite) {
  return guarded([&] {
    require(g && distance && infinite, "null argument");
    const sclq::Distance d = sclq::edge_distance(g->g, e, f);
    *infinite = d.is_infinite() ? 1 : 0;
    *distance = d.is_infinite() ? 0 : d.value();
  });
}

sclq_status sclq_find_cycle(const sclq_graph* g, size_t length, int* found, uint32_t** vertices,
                            size_t* vertex_count) {
  return guarded([&] {
    require(g && found, "null argument");
    const auto c = sclq::find_cycle_of_length(g->g, length);
    *found = c ? 1 : 0;
    if (vertices) *vertices = c ? copy_u32(c->vertices) : nullptr;
    if (vertex_count) *vertex_count = c ? c->vertices.size() : 0;
  });
}

sclq_status sclq_vertex_cover_number(const sclq_graph* g, size_t* tau) {
  return guarded([&] {
    require(g && tau, "null argument");
    *tau = sclq::vertex_cover_number(g->g);
  });
}

sclq_status sclq_matching_number(const sclq_graph* g, size_t* size) {
  return guarded([&] {
    require(g && size, "null argument");
    *size = sclq::maximum_matching(g->g).size();
  });
}

sclq_status sclq_generate(const char* spec_json, sclq_graph** out) {
  return guarded([&] {
    require(spec_json && out, "null argument");
    *out = new sclq_graph{sclq::generate(sclq::generator_from_json(sclq::Json::parse(spec_json)))};
  });
}

const char* sclq_generator_families(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& f : sclq::generator_families()) s += (s.empty() ? "" : ",") + f;
    return s;
  }();
  return joined.c_str();
}

sclq_status sclq_enumerator_create(int n, int dedup, sclq_enumerator** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new sclq_enumerator{sclq::GraphEnumerator(n, dedup != 0)};
  });
}

sclq_status sclq_enumerator_next(sclq_enumerator* en, sclq_graph** out) {
  return guarded([&] {
    require(en && out, "null argument");
    auto g = en->en.next();
    *out = g ? new sclq_graph{std::move(*g)} : nullptr;
  });
}

void sclq_enumerator_free(sclq_enumerator* en) { delete en; }

sclq_status sclq_sc_json(const sclq_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto sc = sclq::strong_clique_number(g->g);
    sclq::Json j = {{"graph6", sclq::to_graph6(g->g)},
                    {"n", g->g.vertex_count()},
                    {"m", g->g.edge_count()},
                    {"max_degree", sclq::max_degree(g->g)},
                    {"sc", sclq::to_json(sc, g->g)}};
    *out = copy_string(dump(j));
  });
}

sclq_status sclq_free_json(const sclq_graph* g, const size_t* lengths, size_t count, char** out) {
  return guarded([&] {
    require(g && out && (lengths || count == 0), "null argument");
    sclq::Json results = sclq::Json::array();
    bool all_free = true;
    for (size_t i = 0; i < count; ++i) {
      const auto c = sclq::find_cycle_of_length(g->g, lengths[i]);
      all_free = all_free && !c;
      results.push_back({{"length", lengths[i]},
                         {"found", c.has_value()},
                         {"witness", c ? sclq::to_json(*c) : sclq::Json(nullptr)}});
    }
    sclq::Json j = {{"graph6", sclq::to_graph6(g->g)}, {"free", all_free}, {"cycles", results}};
    *out = copy_string(dump(j));
  });
}

sclq_status sclq_verify_json(const sclq_graph* g, const char* spec, int k, char** out) {
  return guarded([&] {
    require(g && spec && out, "null argument");
    sclq::BoundSpec bs{sclq::parse_bound_id(spec), k < 0 ? std::nullopt : std::optional<int>(k)};
    const auto report = sclq::verify(g->g, bs);
    *out = copy_string(dump(sclq::to_json(report)));
  });
}

sclq_status sclq_batch_verify_json(const char* job_json, char** out, size_t* counterexamples) {
  return guarded([&] {
    require(job_json && out, "null argument");
    const sclq::BatchConfig config = sclq::batch_config_from_json(sclq::Json::parse(job_json));
    const sclq::BatchResult result = sclq::batch_verify(config);
    if (counterexamples) *counterexamples = result.total_counterexamples();
    *out = copy_string(dump(sclq::batch_document(config, result)));
  });
}

sclq_status sclq_witness_json(const sclq_graph* g, const char* op, const char* args_json, char** out) {
  return guarded([&] {
    require(g && op && out, "null argument");
    *out = copy_string(dump(witness_op(g->g, op, parse_args(args_json))));
  });
}

}  // extern "C"
