#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/graph.hpp"

namespace graphpredict {

enum class Metric { cosine, euclidean };
enum class KnnMode { exact, approximate };

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);
std::string_view to_string(KnnMode m);
KnnMode knn_mode_from_string(std::string_view s);

// Raw cosine in [-1, 1] or euclidean distance.
double similarity(std::span<const double> a, std::span<const double> b, Metric metric);
// Similarity mapped into [0, 1]: (c + 1) / 2 for cosine, 1 / (1 + d) for euclidean.
double similarity_score(std::span<const double> a, std::span<const double> b, Metric metric);

struct KnnConfig {
  int top_k = 5;
  std::string node_property = "graphsage_embedding";
  Metric metric = Metric::cosine;
  // Score cutoff for written edges; in approximate mode also the convergence
  // target (stop once fewer than 1 - delta of the list entries change).
  double delta_threshold = 0.7;
  std::uint64_t seed = 42;
  std::string write_type = "SIMILAR";
  std::string write_property = "score";
  KnnMode mode = KnnMode::exact;
  std::optional<std::string> label_filter;
  int max_rounds = 20;
  int threads = 1;

  void validate() const;
};

nlohmann::json knn_config_to_json(const KnnConfig& cfg);
KnnConfig knn_config_from_json(const nlohmann::json& j);

struct KnnStats {
  std::size_t nodes_compared = 0;
  std::size_t relationships_written = 0;
  double mean_similarity = 0.0;
  int rounds = 0;  // approximate mode only
};

nlohmann::json knn_stats_to_json(const KnnStats& s);

struct ScoredNode {
  NodeId id = 0;
  double score = 0.0;
  friend bool operator==(const ScoredNode&, const ScoredNode&) = default;
};

// Neighbor lists per in-scope node, best first (score descending, id ascending).
struct KnnResult {
  std::vector<NodeId> nodes;
  std::vector<std::vector<ScoredNode>> neighbors;
  int rounds = 0;
};

// Computes neighbor lists without touching the graph. The score cutoff is
// already applied.
KnnResult knn_search(const PropertyGraph& graph, const KnnConfig& cfg);

// knn_search, then replaces every edge of cfg.write_type with the new lists.
KnnStats knn_write(PropertyGraph& graph, const KnnConfig& cfg);

std::vector<ScoredNode> top_k_similar(const PropertyGraph& graph, NodeId anchor, int k, std::string_view property,
                                      const std::optional<std::string>& label_filter = std::nullopt,
                                      Metric metric = Metric::cosine);

}  // namespace graphpredict
