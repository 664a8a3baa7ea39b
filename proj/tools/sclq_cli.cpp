// sclq: strong clique computations and bound verification from the shell.
// Exit codes: 0 success (all applicable checks hold), 1 error, 2 counterexample.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sclq/sclq.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

struct Failure {
  std::string message;
};

void check(sclq_status status) {
  if (status != SCLQ_OK) throw Failure{std::string(sclq_status_name(status)) + ": " + sclq_last_error()};
}

struct GraphDeleter {
  void operator()(sclq_graph* g) const { sclq_graph_free(g); }
};
struct ListDeleter {
  void operator()(sclq_graph_list* l) const { sclq_graph_list_free(l); }
};
using GraphPtr = std::unique_ptr<sclq_graph, GraphDeleter>;
using ListPtr = std::unique_ptr<sclq_graph_list, ListDeleter>;

std::string take_string(char* s) {
  std::string out(s ? s : "");
  sclq_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take_string(s)); }

struct Options {
  std::string input = "-";
  std::string format = "graph6";
  bool json = false;
  bool no_header = false;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::vector<int> k;
  std::vector<std::string> specs;
  std::vector<std::size_t> lengths;
  std::optional<std::string> evidence_dir;
  std::vector<std::uint32_t> pair;
  // generator source
  std::string family;
  std::vector<std::string> params;
  std::optional<double> probability;
  // enumeration
  std::optional<int> n_min;
  std::optional<int> n_max;
  bool dedup = false;
  std::optional<std::string> job;
  bool timing = false;
  bool summary_only = false;
  // witness
  std::string op;
  std::vector<std::uint32_t> matching;
  std::vector<std::uint32_t> s;
  std::optional<std::uint32_t> x;
  std::optional<std::size_t> length;
};

sclq_format format_of(const Options& o) {
  if (o.format == "graph6" || o.format == "g6") return SCLQ_FORMAT_GRAPH6;
  if (o.format == "edgelist" || o.format == "edge-list") return SCLQ_FORMAT_EDGE_LIST;
  throw Failure{"unknown format '" + o.format + "'"};
}

ListPtr read_input(const Options& o) {
  const sclq_format fmt = format_of(o);
  sclq_graph_list* raw = nullptr;
  if (o.input == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(sclq_read_graphs(text.data(), text.size(), fmt, &raw));
  } else {
    check(sclq_read_graphs_file(o.input.c_str(), fmt, &raw));
  }
  return ListPtr(raw);
}

Json generator_json(const Options& o) {
  Json spec = {{"family", o.family}};
  Json params = Json::object();
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Failure{"--param expects name=value, got '" + p + "'"};
    try {
      std::size_t used = 0;
      const long long value = std::stoll(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      params[p.substr(0, eq)] = value;
    } catch (const std::exception&) {
      throw Failure{"--param value must be an integer: '" + p + "'"};
    }
  }
  spec["params"] = params;
  if (o.seed) spec["seed"] = *o.seed;
  if (o.probability) spec["probability"] = *o.probability;
  return spec;
}

Json config_echo(const std::string& command, const Options& o) {
  Json c = {{"command", command}, {"version", sclq_version()}};
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  if (command == "generate") {
    c["generator"] = generator_json(o);
  } else if (command == "enumerate") {
    c["n_min"] = opt(o.n_min);
    c["n_max"] = opt(o.n_max);
    c["dedup"] = o.dedup;
  } else {
    c["input"] = o.input;
    c["format"] = o.format;
  }
  c["seed"] = opt(o.seed);
  if (command == "distance") c["pair"] = o.pair;
  if (command == "free") c["lengths"] = o.lengths;
  if (command == "verify") {
    c["specs"] = o.specs;
    c["k"] = o.k;
    c["workers"] = o.workers;
    c["evidence_dir"] = opt(o.evidence_dir);
    if (!o.family.empty()) c["generator"] = generator_json(o);
    if (o.n_min) c["enumerate"] = {{"n_min", *o.n_min}, {"n_max", opt(o.n_max)}, {"dedup", o.dedup}};
    c["job"] = opt(o.job);
  }
  if (command == "witness") {
    c["op"] = o.op;
    c["matching"] = o.matching;
    c["s"] = o.s;
    c["x"] = opt(o.x);
    c["length"] = opt(o.length);
  }
  return c;
}

void print_header(const Json& config) {
  std::cout << "# sclq " << config.dump() << "\n";
}

std::string join(const Json& array, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) out += sep;
    out += array[i].dump();
  }
  return out;
}

void emit(const Options& o, const Json& config, const Json& results, const std::string& text) {
  if (o.json) {
    std::cout << Json{{"schema", "sclq.cli/1"}, {"config", config}, {"results", results}}.dump(2) << "\n";
  } else {
    print_header(config);
    std::cout << text;
  }
}

int run_sc(const Options& o) {
  const Json config = config_echo("sc", o);
  ListPtr list = read_input(o);
  Json results = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < sclq_graph_list_size(list.get()); ++i) {
    char* out = nullptr;
    check(sclq_sc_json(sclq_graph_list_get(list.get(), i), &out));
    Json r = take_json(out);
    text << "graph " << i + 1 << ": n=" << r["n"] << " m=" << r["m"] << " max_degree=" << r["max_degree"]
         << " sc=" << r["sc"]["size"] << " witness=[" << join(r["sc"]["witness"]) << "]\n";
    results.push_back(std::move(r));
  }
  emit(o, config, results, text.str());
  return kExitOk;
}

int run_distance(const Options& o) {
  if (o.pair.size() != 2) throw Failure{"--pair expects two edge ids e,f"};
  const Json config = config_echo("distance", o);
  ListPtr list = read_input(o);
  Json results = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < sclq_graph_list_size(list.get()); ++i) {
    std::uint32_t d = 0;
    int infinite = 0;
    check(sclq_edge_distance(sclq_graph_list_get(list.get(), i), o.pair[0], o.pair[1], &d, &infinite));
    const Json value = infinite ? Json("inf") : Json(d);
    results.push_back({{"e", o.pair[0]}, {"f", o.pair[1]}, {"distance", value}});
    text << "graph " << i + 1 << ": distance(" << o.pair[0] << "," << o.pair[1]
         << ")=" << (infinite ? std::string("inf") : std::to_string(d)) << "\n";
  }
  emit(o, config, results, text.str());
  return kExitOk;
}

int run_free(const Options& o) {
  if (o.lengths.empty()) throw Failure{"--lengths is required"};
  const Json config = config_echo("free", o);
  ListPtr list = read_input(o);
  Json results = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < sclq_graph_list_size(list.get()); ++i) {
    char* out = nullptr;
    check(sclq_free_json(sclq_graph_list_get(list.get(), i), o.lengths.data(), o.lengths.size(), &out));
    Json r = take_json(out);
    text << "graph " << i + 1 << ": free=" << r["free"];
    for (const auto& c : r["cycles"]) {
      text << " C" << c["length"] << ":" << (c["found"].get<bool>() ? "found=true [" + join(c["witness"]) + "]"
                                                                    : std::string("found=false"));
    }
    text << "\n";
    results.push_back(std::move(r));
  }
  emit(o, config, results, text.str());
  return kExitOk;
}

int run_generate(const Options& o) {
  if (o.family.empty()) throw Failure{"--family is required (one of " + std::string(sclq_generator_families()) + ")"};
  const Json config = config_echo("generate", o);
  sclq_graph* raw = nullptr;
  check(sclq_generate(generator_json(o).dump().c_str(), &raw));
  GraphPtr g(raw);
  char* out = nullptr;
  if (format_of(o) == SCLQ_FORMAT_EDGE_LIST) {
    check(sclq_graph_to_edge_list(g.get(), &out));
  } else {
    check(sclq_graph_to_graph6(g.get(), &out));
  }
  const std::string body = take_string(out);
  if (!o.no_header) print_header(config);
  std::cout << body;
  if (!body.empty() && body.back() != '\n') std::cout << "\n";
  return kExitOk;
}

int run_enumerate(const Options& o) {
  if (!o.n_min) throw Failure{"--n (or --n-min/--n-max) is required"};
  const int lo = *o.n_min;
  const int hi = o.n_max.value_or(lo);
  const Json config = config_echo("enumerate", o);
  std::vector<sclq_enumerator*> ens;
  // Validate the whole range before writing anything.
  for (int n = lo; n <= hi; ++n) {
    sclq_enumerator* en = nullptr;
    const sclq_status st = sclq_enumerator_create(n, o.dedup ? 1 : 0, &en);
    if (st != SCLQ_OK) {
      for (auto* e : ens) sclq_enumerator_free(e);
      check(st);
    }
    ens.push_back(en);
  }
  if (!o.no_header) print_header(config);
  for (auto* en : ens) {
    for (;;) {
      sclq_graph* raw = nullptr;
      check(sclq_enumerator_next(en, &raw));
      if (!raw) break;
      GraphPtr g(raw);
      char* out = nullptr;
      check(sclq_graph_to_graph6(g.get(), &out));
      std::cout << take_string(out) << "\n";
    }
    sclq_enumerator_free(en);
  }
  return kExitOk;
}

Json verify_job(const Options& o) {
  if (o.job) {
    std::ifstream in(*o.job);
    if (!in) throw Failure{"io: cannot open " + *o.job};
    Json job = Json::parse(in);
    if (o.workers != 1) job["workers"] = o.workers;
    if (o.evidence_dir) job["evidence_dir"] = *o.evidence_dir;
    return job;
  }
  if (o.specs.empty()) throw Failure{"--spec is required"};
  Json specs = Json::array();
  for (const auto& id : o.specs) {
    Json s = {{"id", id}};
    if (!o.k.empty()) s["k"] = o.k;
    specs.push_back(s);
  }
  Json source;
  if (!o.family.empty()) {
    source = {{"kind", "generators"}, {"items", Json::array({generator_json(o)})}};
  } else if (o.n_min) {
    source = {{"kind", "enumeration"}, {"n_min", *o.n_min}, {"n_max", o.n_max.value_or(*o.n_min)}, {"dedup", o.dedup}};
  } else {
    ListPtr list = read_input(o);
    Json lines = Json::array();
    for (std::size_t i = 0; i < sclq_graph_list_size(list.get()); ++i) {
      char* out = nullptr;
      check(sclq_graph_to_graph6(sclq_graph_list_get(list.get(), i), &out));
      lines.push_back(take_string(out));
    }
    source = {{"kind", "graph6"}, {"lines", lines}};
  }
  Json job = {{"source", source}, {"specs", specs}, {"workers", o.workers},
              {"keep_reports", !o.summary_only}, {"timing", o.timing}};
  if (o.evidence_dir) job["evidence_dir"] = *o.evidence_dir;
  return job;
}

std::string describe_spec(const Json& spec) {
  std::string s = spec["id"].get<std::string>();
  if (!spec["k"].is_null()) s += " k=" + spec["k"].dump();
  return s;
}

int run_verify(const Options& o) {
  const Json config = config_echo("verify", o);
  const Json job = verify_job(o);
  char* out = nullptr;
  std::size_t found = 0;
  check(sclq_batch_verify_json(job.dump().c_str(), &out, &found));
  const Json doc = take_json(out);
  if (o.json) {
    std::cout << Json{{"schema", "sclq.verification/1"}, {"config", config}, {"batch", doc}}.dump(2) << "\n";
  } else {
    print_header(config);
    std::ostringstream text;
    if (doc.contains("reports")) {
      for (const auto& r : doc["reports"]) {
        text << r["graph_id"].get<std::string>() << " " << describe_spec(r["spec"])
             << ": max_degree=" << r["max_degree"] << " sc=" << r["sc"]["size"]
             << " bound=" << r["bound"].dump() << " verdict=" << r["verdict"].get<std::string>();
        if (r["tight"].get<bool>()) text << " tight";
        for (const auto& p : r["preconditions"]) {
          if (!p["pass"].get<bool>()) {
            text << " [fails " << p["condition"].get<std::string>();
            if (!p["witness"].is_null()) text << " witness " << join(p["witness"]);
            text << "]";
          }
        }
        text << "\n";
      }
    }
    text << "graphs: " << doc["graph_count"] << "\n";
    for (const auto& s : doc["summary"]) {
      text << "summary " << describe_spec(s["spec"]) << ": applicable=" << s["applicable"]
           << " holds=" << s["holds"] << " tight=" << s["tight"] << " counterexamples=" << s["counterexamples"];
      if (!s["max_ratio"].is_null()) {
        text << " max_ratio=" << s["max_ratio"]["sc"] << "/" << s["max_ratio"]["bound"];
      }
      text << "\n";
    }
    for (const auto& f : doc["evidence_files"]) text << "evidence: " << f.get<std::string>() << "\n";
    std::cout << text.str();
  }
  return found == 0 ? kExitOk : kExitCounterexample;
}

int run_witness(const Options& o) {
  if (o.op.empty()) throw Failure{"--op is required"};
  const Json config = config_echo("witness", o);
  Json args = Json::object();
  if (!o.matching.empty()) args["matching"] = o.matching;
  if (!o.s.empty()) args["s"] = o.s;
  if (o.x) args["x"] = *o.x;
  if (o.length) args["length"] = *o.length;
  ListPtr list = read_input(o);
  Json results = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < sclq_graph_list_size(list.get()); ++i) {
    char* out = nullptr;
    check(sclq_witness_json(sclq_graph_list_get(list.get(), i), o.op.c_str(), args.dump().c_str(), &out));
    Json r = take_json(out);
    text << "graph " << i + 1 << ": " << r.dump() << "\n";
    results.push_back(std::move(r));
  }
  emit(o, config, results, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong clique number computations and bound verification", "sclq"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Input path, or - for stdin")->capture_default_str();
    sub->add_option("--format", o.format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "g6", "edgelist", "edge-list"}))
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
    sub->add_option("--seed", o.seed, "Seed for randomized families");
  };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Generator family");
    sub->add_option("--param", o.params, "Family parameter name=value (repeatable)");
    sub->add_option("--probability", o.probability, "Edge probability for random families");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n", o.n_min, "Vertex count");
    sub->add_option("--n-min", o.n_min, "Smallest vertex count");
    sub->add_option("--n-max", o.n_max, "Largest vertex count");
    sub->add_flag("--dedup", o.dedup, "One graph per isomorphism class");
  };

  auto* sc = app.add_subcommand("sc", "Strong clique number with a witness");
  add_input(sc);
  add_common(sc);

  auto* distance = app.add_subcommand("distance", "Distance between two edges in the line graph");
  add_input(distance);
  add_common(distance);
  distance->add_option("--pair", o.pair, "Edge ids e,f")->delimiter(',')->required();

  auto* free = app.add_subcommand("free", "Cycle-length freeness with witnesses");
  add_input(free);
  add_common(free);
  free->add_option("--lengths", o.lengths, "Cycle lengths, comma separated")->delimiter(',')->required();

  auto* generate = app.add_subcommand("generate", "Emit a family graph");
  add_common(generate);
  add_generator(generate);
  generate->add_option("--format", o.format, "graph6 | edgelist")
      ->check(CLI::IsMember({"graph6", "g6", "edgelist", "edge-list"}));
  generate->add_flag("--no-header", o.no_header, "Omit the configuration comment line");

  auto* verify = app.add_subcommand("verify", "Check bounds on input, generated or enumerated graphs");
  add_input(verify);
  add_common(verify);
  add_generator(verify);
  add_range(verify);
  verify->add_option("--spec", o.specs, "Bound spec id(s), comma separated")->delimiter(',');
  verify->add_option("--k", o.k, "k value(s), comma separated")->delimiter(',');
  verify->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--evidence-dir", o.evidence_dir, "Directory for counterexample graph6 files");
  verify->add_option("--job", o.job, "Batch job JSON file");
  verify->add_flag("--timing", o.timing, "Include per-report timings");
  verify->add_flag("--summary-only", o.summary_only, "Omit per-graph reports");

  auto* witness = app.add_subcommand("witness", "Constructive witnesses on a strong clique");
  add_input(witness);
  add_common(witness);
  witness->add_option("--op", o.op, "lemma21-path | lemma21-cycle | s-minimal | xm-path | special | eq-audit")
      ->check(CLI::IsMember({"lemma21-path", "lemma21-cycle", "s-minimal", "xm-path", "special", "eq-audit"}))
      ->required();
  witness->add_option("--matching", o.matching, "Matching edge ids")->delimiter(',');
  witness->add_option("--s", o.s, "Strong clique edge ids")->delimiter(',');
  witness->add_option("--x", o.x, "Start vertex for xm-path");
  witness->add_option("--length", o.length, "Path length for xm-path");

  auto* enumerate = app.add_subcommand("enumerate", "All labeled graphs on n vertices as graph6");
  add_range(enumerate);
  add_common(enumerate);
  enumerate->add_flag("--no-header", o.no_header, "Omit the configuration comment line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }
  if (o.n_max && !o.n_min) o.n_min = 1;

  try {
    if (*sc) return run_sc(o);
    if (*distance) return run_distance(o);
    if (*free) return run_free(o);
    if (*generate) return run_generate(o);
    if (*verify) return run_verify(o);
    if (*witness) return run_witness(o);
    if (*enumerate) return run_enumerate(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
