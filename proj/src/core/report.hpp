#pragma once

#include <json.hpp>

#include "core/verifier.hpp"
#include "core/witness.hpp"

namespace sclq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVerificationSchema = "sclq.verification/1";
inline constexpr const char* kBatchSchema = "sclq.batch/1";

Json to_json(const StrongCliqueResult& sc, const Graph& g);
Json to_json(const VerificationReport& report);
Json to_json(const SpecSummary& summary);
Json to_json(const EqAudit& audit);
Json to_json(const CycleWitness& cycle);
Json to_json(const PathWitness& path);
Json to_json(const PropertyOutcome& outcome);
Json to_json(const MinimalPropertyReport& report);
Json to_json(const GeneratorSpec& spec);
Json to_json(const BoundSpec& spec);

/// {"family": ..., "params": {...}, "seed": u64, "probability": p}. Integer
/// members outside those keys are accepted as parameters too.
GeneratorSpec generator_from_json(const Json& j);

/// Job document:
///   {"source": {"kind": "generators", "items": [GeneratorSpec...]}
///            | {"kind": "graph6_file" | "edgelist_file", "path": ...}
///            | {"kind": "enumeration", "n_min": a, "n_max": b, "dedup": bool}
///            | {"kind": "graph6", "lines": [...]},
///    "specs": [{"id": "THM19", "k": [2, 3]} | {"id": "THM23"}],
///    "workers": 1, "evidence_dir": path, "keep_reports": true, "timing": false}
/// A spec's k may be an integer or a list; each k gives one BoundSpec.
BatchConfig batch_config_from_json(const Json& job);

/// Canonical echo of the effective configuration.
Json config_echo(const BatchConfig& config);

/// {"schema": "sclq.batch/1", "config": ..., "graph_count": ..., "summary": [...],
///  "counterexamples": [...], "reports": [...], "evidence_files": [...]}
Json batch_document(const BatchConfig& config, const BatchResult& result);

}  // namespace sclq
