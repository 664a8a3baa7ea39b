#include "core/report.hpp"

namespace sclq {

namespace {

Error bad_job(const std::string& what) { return Error(ErrorCode::invalid_argument, "job: " + what); }

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json to_json(const StrongCliqueResult& sc, const Graph& g) {
  Json edges = Json::array();
  for (EdgeId e : sc.witness) edges.push_back({g.edge(e).u, g.edge(e).v});
  return {{"size", sc.size}, {"witness", sc.witness}, {"witness_edges", edges}};
}

Json to_json(const CycleWitness& cycle) { return Json(cycle.vertices); }

Json to_json(const PathWitness& path) { return {{"vertices", path.vertices}, {"edges", path.edges}}; }

Json to_json(const BoundSpec& spec) {
  return {{"id", bound_name(spec.id)}, {"k", optional_json(spec.k)}};
}

Json to_json(const VerificationReport& r) {
  const Graph g = from_graph6(r.graph6);
  Json pre = Json::array();
  for (const auto& p : r.preconditions) {
    pre.push_back({{"condition", p.condition},
                   {"pass", p.pass},
                   {"witness", p.witness ? to_json(*p.witness) : Json(nullptr)}});
  }
  Json out = {{"graph_id", r.graph_id},
              {"graph6", r.graph6},
              {"n", r.vertex_count},
              {"m", r.edge_count},
              {"max_degree", r.max_degree},
              {"sc", to_json(r.sc, g)},
              {"spec", to_json(r.spec)},
              {"formula", bound_formula(r.spec.id)},
              {"conjecture", is_conjecture(r.spec.id)},
              {"preconditions", pre},
              {"bound", optional_json(r.bound)},
              {"verdict", verdict_name(r.verdict)},
              {"holds", r.verdict == Verdict::not_applicable ? Json(nullptr)
                                                             : Json(r.verdict == Verdict::holds)},
              {"tight", r.tight}};
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

Json to_json(const SpecSummary& s) {
  Json ratio = nullptr;
  if (s.max_ratio_sc) {
    ratio = {{"sc", *s.max_ratio_sc},
             {"bound", *s.max_ratio_bound},
             {"value", static_cast<double>(*s.max_ratio_sc) / static_cast<double>(*s.max_ratio_bound)}};
  }
  return {{"spec", to_json(s.spec)},       {"graphs", s.graphs}, {"applicable", s.applicable},
          {"holds", s.holds},              {"tight", s.tight},   {"counterexamples", s.counterexamples},
          {"max_ratio", ratio}};
}

Json to_json(const EqAudit& a) {
  const auto& d = a.decomposition;
  Json checks = Json::array();
  for (const auto& c : a.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"h_edges", d.h_edges},
          {"edges_h", a.edges_h},
          {"matching", d.matching},
          {"m", d.m},
          {"z", d.z},
          {"x", d.x},
          {"y", d.y},
          {"d", d.d},
          {"max_degree_h", d.max_degree_h},
          {"eq1_rhs_times_two", a.eq1_rhs_times_two},
          {"chained_rhs_times_two", a.chained_rhs_times_two},
          {"checks", checks},
          {"passed", a.passed()}};
}

Json to_json(const PropertyOutcome& o) {
  return {{"evaluated", o.evaluated}, {"pass", o.pass}, {"counterexample", o.counterexample}, {"detail", o.detail}};
}

Json to_json(const MinimalPropertyReport& r) {
  return {{"covers_vertices", to_json(r.covers_vertices)},
          {"diameter_at_most_three", to_json(r.diameter_at_most_three)},
          {"unique_link", to_json(r.unique_link)},
          {"far_edge", to_json(r.far_edge)},
          {"all_pass", r.all_pass()}};
}

Json to_json(const GeneratorSpec& spec) {
  Json params = Json::object();
  for (const auto& [key, value] : spec.params) params[key] = value;
  Json out = {{"family", spec.family}, {"params", params}};
  if (spec.seed) out["seed"] = *spec.seed;
  if (spec.probability) out["probability"] = *spec.probability;
  return out;
}

GeneratorSpec generator_from_json(const Json& j) {
  if (!j.is_object()) throw bad_job("generator spec must be an object");
  if (!j.contains("family") || !j["family"].is_string()) throw bad_job("generator spec needs a family");
  GeneratorSpec spec;
  spec.family = j["family"].get<std::string>();
  auto take_param = [&](const std::string& key, const Json& value) {
    if (!value.is_number_integer()) throw bad_job("parameter '" + key + "' must be an integer");
    spec.params[key] = value.get<std::int64_t>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (key == "seed") {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw bad_job("seed must be a non-negative integer");
      }
      spec.seed = value.get<std::uint64_t>();
    } else if (key == "probability") {
      if (!value.is_number()) throw bad_job("probability must be a number");
      spec.probability = value.get<double>();
    } else if (key == "params") {
      if (!value.is_object()) throw bad_job("params must be an object");
      for (const auto& [pk, pv] : value.items()) take_param(pk, pv);
    } else {
      take_param(key, value);
    }
  }
  return spec;
}

namespace {

std::vector<BoundSpec> specs_from_json(const Json& j) {
  if (!j.is_array()) throw bad_job("specs must be an array");
  std::vector<BoundSpec> out;
  for (const auto& item : j) {
    Json entry = item.is_string() ? Json{{"id", item}} : item;
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
      throw bad_job("each spec needs an id");
    }
    const BoundId id = parse_bound_id(entry["id"].get<std::string>());
    std::vector<int> ks;
    if (entry.contains("k") && !entry["k"].is_null()) {
      const Json& k = entry["k"];
      if (k.is_number_integer()) {
        ks.push_back(k.get<int>());
      } else if (k.is_array()) {
        for (const auto& v : k) {
          if (!v.is_number_integer()) throw bad_job("k values must be integers");
          ks.push_back(v.get<int>());
        }
      } else {
        throw bad_job("k must be an integer or a list");
      }
    }
    if (!uses_k(id) || ks.empty()) {
      out.push_back(normalize({id, std::nullopt}));
      continue;
    }
    for (int k : ks) out.push_back(normalize({id, k}));
  }
  return out;
}

}  // namespace

BatchConfig batch_config_from_json(const Json& job) {
  if (!job.is_object()) throw bad_job("document must be an object");
  BatchConfig config;
  if (!job.contains("source") || !job["source"].is_object()) throw bad_job("missing source");
  const Json& src = job["source"];
  const std::string kind = src.value("kind", "");
  BatchSource& s = config.source;
  if (kind == "generators") {
    s.kind = BatchSource::Kind::generators;
    for (const auto& item : src.value("items", Json::array())) s.generators.push_back(generator_from_json(item));
  } else if (kind == "graph6_file" || kind == "edgelist_file") {
    s.kind = kind == "graph6_file" ? BatchSource::Kind::graph6_file : BatchSource::Kind::edge_list_file;
    if (!src.contains("path") || !src["path"].is_string()) throw bad_job("file source needs a path");
    s.path = src["path"].get<std::string>();
  } else if (kind == "enumeration") {
    s.kind = BatchSource::Kind::enumeration;
    s.n_min = src.value("n_min", 0);
    s.n_max = src.value("n_max", s.n_min);
    s.dedup = src.value("dedup", false);
  } else if (kind == "graph6") {
    s.kind = BatchSource::Kind::graphs;
    for (const auto& line : src.value("lines", Json::array())) {
      if (!line.is_string()) throw bad_job("graph6 lines must be strings");
      s.graphs.push_back(from_graph6(line.get<std::string>()));
    }
  } else {
    throw bad_job("unknown source kind '" + kind + "'");
  }
  config.specs = specs_from_json(job.value("specs", Json::array()));
  config.workers = job.value("workers", 1);
  if (job.contains("evidence_dir") && job["evidence_dir"].is_string()) {
    config.evidence_dir = job["evidence_dir"].get<std::string>();
  }
  config.keep_reports = job.value("keep_reports", true);
  config.timing = job.value("timing", false);
  return config;
}

Json config_echo(const BatchConfig& config) {
  const BatchSource& s = config.source;
  Json src;
  switch (s.kind) {
    case BatchSource::Kind::generators: {
      Json items = Json::array();
      for (const auto& g : s.generators) items.push_back(to_json(g));
      src = {{"kind", "generators"}, {"items", items}};
      break;
    }
    case BatchSource::Kind::graph6_file:
      src = {{"kind", "graph6_file"}, {"path", s.path}};
      break;
    case BatchSource::Kind::edge_list_file:
      src = {{"kind", "edgelist_file"}, {"path", s.path}};
      break;
    case BatchSource::Kind::enumeration:
      src = {{"kind", "enumeration"}, {"n_min", s.n_min}, {"n_max", s.n_max}, {"dedup", s.dedup}};
      break;
    case BatchSource::Kind::graphs: {
      Json lines = Json::array();
      for (const auto& g : s.graphs) lines.push_back(to_graph6(g));
      src = {{"kind", "graph6"}, {"lines", lines}};
      break;
    }
  }
  Json specs = Json::array();
  for (const auto& spec : config.specs) specs.push_back(to_json(spec));
  return {{"source", src},
          {"specs", specs},
          {"workers", config.workers},
          {"evidence_dir", optional_json(config.evidence_dir)},
          {"keep_reports", config.keep_reports},
          {"timing", config.timing}};
}

Json batch_document(const BatchConfig& config, const BatchResult& result) {
  Json summary = Json::array();
  for (const auto& s : result.per_spec) summary.push_back(to_json(s));
  Json found = Json::array();
  for (const auto& r : result.counterexamples) found.push_back(to_json(r));
  Json doc = {{"schema", kBatchSchema},
              {"config", config_echo(config)},
              {"graph_count", result.graph_count},
              {"summary", summary},
              {"counterexamples", found}};
  if (config.keep_reports) {
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r));
    doc["reports"] = reports;
  }
  doc["evidence_files"] = result.evidence_files;
  return doc;
}

}  // namespace sclq
