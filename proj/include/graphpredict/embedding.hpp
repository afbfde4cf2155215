#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/graph.hpp"
#include "graphpredict/linalg.hpp"
#include "graphpredict/projection.hpp"

namespace graphpredict {

enum class Method { node2vec, graphsage, fastrp };

std::string_view to_string(Method m);
Method method_from_string(std::string_view s);
// node2vec_embedding, graphsage_embedding, fastRP_embedding
std::string embedding_property_name(Method m);

struct Node2VecParams {
  double return_param = 1.0;  // p
  double in_out_param = 1.0;  // q
  int walk_length = 80;
  int walks_per_node = 10;
  int window = 10;
  int negatives = 5;
  int epochs = 5;
  double learning_rate = 0.025;
  double min_learning_rate = 0.025 * 1e-4;
};

struct FastRPParams {
  // Weight of iteration i; index 0 is the normalized random base vector.
  std::vector<double> iteration_weights{0.0, 1.0, 1.0};
  double normalization_strength = 0.0;
};

struct GraphSageParams {
  int layers = 2;
  int hidden_dimension = 0;  // 0: same as the output dimension
  int negatives = 5;
  int epochs = 10;
  double learning_rate = 0.01;
  int batch_size = 512;
  // Positive pairs come from short walks.
  int walk_length = 5;
  int walks_per_node = 2;
  int window = 2;
  // Per-layer neighbor sample caps; empty or zero means the full neighborhood.
  std::vector<int> sample_sizes;
  bool degree_fallback = true;
};

struct EmbeddingConfig {
  Method method = Method::fastrp;
  int dimension = 10;
  std::uint64_t seed = 42;
  Node2VecParams node2vec;
  FastRPParams fastrp;
  GraphSageParams graphsage;

  // ConfigError on any invariant violation.
  void validate() const;
};

nlohmann::json config_to_json(const EmbeddingConfig& cfg);
// Missing fields keep their defaults.
EmbeddingConfig config_from_json(const nlohmann::json& j);

struct EmbeddingProvenance {
  std::string projection;
  Method method = Method::fastrp;
  int dimension = 0;
  std::uint64_t seed = 0;
  bool deterministic = true;

  friend bool operator==(const EmbeddingProvenance&, const EmbeddingProvenance&) = default;
};

struct EmbeddingDiagnostics {
  std::vector<double> loss_trace;  // per epoch, where the method trains
  std::uint64_t training_pairs = 0;
  std::vector<std::string> warnings;
};

// One vector per node, rows of `vectors` ordered like `ids` (ascending).
struct EmbeddingSet {
  EmbeddingProvenance provenance;
  std::vector<NodeId> ids;
  std::vector<std::string> labels;
  Matrix vectors;
  EmbeddingDiagnostics diagnostics;

  std::size_t size() const { return ids.size(); }
  std::size_t dimension() const { return vectors.cols(); }
  std::optional<std::span<const double>> find(NodeId id) const;
  // Rows restricted to one label, in id order.
  EmbeddingSet filter_label(std::string_view label) const;
  // ValidationError if any entry is non-finite or sizes disagree.
  void validate() const;
};

// Rows for the view's nodes in local-index order; labels from the source graph.
EmbeddingSet make_embedding_set(const ProjectedGraph& view, const EmbeddingConfig& cfg, Matrix vectors);

EmbeddingSet embed(const ProjectedGraph& view, const EmbeddingConfig& cfg);
EmbeddingSet node2vec(const ProjectedGraph& view, const EmbeddingConfig& cfg);
EmbeddingSet fastrp(const ProjectedGraph& view, const EmbeddingConfig& cfg, int threads = 1);
EmbeddingSet graphsage(const ProjectedGraph& view, const EmbeddingConfig& cfg);

// Stores each vector under embedding_property_name(method). LookupError
// listing every id the graph does not have; nothing is written in that case.
void write_embeddings(PropertyGraph& graph, const EmbeddingSet& set);

// CSV: node_id,label,v0..v{d-1} with round-trip precision.
std::string embeddings_to_csv(const EmbeddingSet& set);
EmbeddingSet embeddings_from_csv(std::string_view text);
nlohmann::json provenance_to_json(const EmbeddingSet& set);
void apply_provenance(EmbeddingSet& set, const nlohmann::json& j);

// Writes path and path + ".json" (provenance sidecar).
void save_embeddings(const EmbeddingSet& set, const std::string& path);
EmbeddingSet load_embeddings(const std::string& path);

// Shortest text that parses back to the same double.
std::string format_real(double v);

}  // namespace graphpredict
