#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphpredict/embedding.hpp"
#include "graphpredict/ingest.hpp"
#include "graphpredict/predict.hpp"
#include "graphpredict/projection.hpp"
#include "graphpredict/reduce.hpp"
#include "graphpredict/similarity.hpp"

namespace graphpredict {

namespace fs = std::filesystem;

struct DatasetConfig {
  DatasetKind kind = DatasetKind::heart;
  fs::path path;     // heart and generic
  fs::path ratings;  // movielens
  std::optional<fs::path> movies;
};

enum class QueryKind { rating_prediction, disease_separation, quality };

struct QueryConfig {
  std::string name;
  QueryKind kind = QueryKind::rating_prediction;
  RatingQuery targets;          // rating_prediction, quality
  double threshold = 1.0;       // rating_prediction
  std::string embedding;        // disease_separation: embedding id
  std::string patient_label = "Person";
};

struct ProjectionConfig {
  std::string name;
  std::optional<ProjectionKind> kind;
  std::optional<ProjectionSpec> spec;  // explicit spec wins over kind
};

struct EmbeddingCell {
  std::string projection;
  EmbeddingConfig config;
  std::string id() const;  // {projection}_{method}_{dim}
};

struct ReductionConfig {
  std::string name;  // file suffix, defaults to the method
  ReduceParams params;
  std::vector<std::string> embeddings;  // ids; empty = every embedding
  std::optional<std::string> node_filter;
  std::string class_by = "label";  // label | target
};

struct KnnStageConfig {
  std::string embedding;  // id whose vectors are written to the graph
  KnnConfig knn;
};

struct PipelineConfig {
  fs::path base_dir;  // relative paths resolve against this
  DatasetConfig dataset;
  std::optional<SchemaMap> schema_map;
  std::vector<QueryConfig> queries;
  std::vector<ProjectionConfig> projections;
  std::vector<EmbeddingCell> embeddings;
  std::optional<KnnStageConfig> knn;
  std::vector<ReductionConfig> reductions;
  fs::path output;
  int threads = 1;
  bool deterministic = true;
  nlohmann::json source;  // config as read, for the manifest

  // ValidationError naming the offending field.
  void validate() const;
  const ProjectionConfig* find_projection(std::string_view name) const;
  const EmbeddingCell* find_embedding(std::string_view id) const;
};

PipelineConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir);
PipelineConfig load_config(const fs::path& path);
// Replaces every seed (embeddings, knn, t-SNE).
void override_seed(PipelineConfig& cfg, std::uint64_t seed);

// Stage names in execution order.
const std::vector<std::string>& stage_names();

struct StageRecord {
  std::string name;
  std::string status;  // ok | failed
  double seconds = 0.0;
  std::vector<std::string> artifacts;
  std::string error;
};

struct ArtifactRecord {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  std::vector<StageRecord> stages;
  std::vector<ArtifactRecord> artifacts;
  nlohmann::json config;
  bool ok = true;

  nlohmann::json to_json() const;
};

std::string sha256_file(const fs::path& path);
// Every file under `out` except manifest.json, sorted by path.
std::vector<ArtifactRecord> scan_artifacts(const fs::path& out);

// Conventional artifact locations.
namespace paths {
fs::path graph(const fs::path& out);
fs::path cleaning_report(const fs::path& out);
fs::path queries(const fs::path& out);
fs::path projection(const fs::path& out, std::string_view name);
fs::path embedding(const fs::path& out, std::string_view id);
fs::path knn_graph(const fs::path& out);
fs::path knn_stats(const fs::path& out);
fs::path reduction(const fs::path& out, std::string_view embedding_id, std::string_view name);
fs::path plot(const fs::path& out, std::string_view embedding_id, std::string_view name);
fs::path predictions(const fs::path& out, std::string_view query);
fs::path query_report(const fs::path& out, std::string_view query);
fs::path report(const fs::path& out);
fs::path manifest(const fs::path& out);
}  // namespace paths

// Individual stages. Each reads its inputs from the artifacts of earlier
// stages under `out` and returns the paths it wrote, so running them one by
// one (as the CLI subcommands do) gives the same files as run_pipeline.
std::vector<fs::path> stage_ingest(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_queries(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_project(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_embed(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_knn(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_reduce(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_plot(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_predict(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_quality(const PipelineConfig& cfg, const fs::path& out);
std::vector<fs::path> stage_report(const PipelineConfig& cfg, const fs::path& out);

std::vector<fs::path> run_stage(std::string_view name, const PipelineConfig& cfg, const fs::path& out);
// run_stage with timing; library errors become a failed record instead of a throw.
StageRecord execute_stage(std::string_view name, const PipelineConfig& cfg, const fs::path& out);

struct RunOptions {
  std::optional<std::string> until;  // last stage to run
};

// Runs the stages in order, halting at the first failure, then writes
// manifest.json. A failed stage is recorded in the manifest (ok = false)
// rather than thrown.
RunManifest run_pipeline(const PipelineConfig& cfg, const RunOptions& options = {});

// Appends a stage record to the manifest in `out` (creating it if needed)
// and refreshes the artifact list.
RunManifest update_manifest(const fs::path& out, const StageRecord& stage, const nlohmann::json& config);

}  // namespace graphpredict
