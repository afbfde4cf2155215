#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/embedding.hpp"
#include "graphpredict/linalg.hpp"

namespace graphpredict {

enum class ReductionMethod { tsne, isomap, mds, spectral };

std::string_view to_string(ReductionMethod m);
ReductionMethod reduction_from_string(std::string_view s);

// Pairwise euclidean distances between the rows of `points`.
Matrix euclidean_distances(const Matrix& points);
// ValidationError unless square, symmetric within 1e-9, zero diagonal and nonnegative.
void validate_distance_matrix(const Matrix& d);

struct Reduction2D {
  ReductionMethod method = ReductionMethod::mds;
  std::vector<NodeId> ids;  // empty when reduced from a bare matrix
  std::vector<std::string> labels;
  std::vector<std::string> classes;
  Matrix coords;  // n x 2
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;

  std::size_t size() const { return coords.rows(); }
  void validate() const;
};

// Classical MDS on a distance matrix. Diagnostics: eigenvalue_1/2 and
// positive_eigenmass (share of positive eigenvalue mass in the two axes).
Reduction2D mds_classical(const Matrix& distances);

// Symmetrized k-NN graph under euclidean distance, shortest paths, then MDS.
Reduction2D isomap(const Matrix& points, int k_neighbors = 10);
// All-pairs geodesic distances over the symmetrized k-NN graph.
Matrix geodesic_distances(const Matrix& points, int k_neighbors);

// Sizes of the connected components of a symmetric affinity matrix.
std::vector<std::size_t> component_sizes(const Matrix& affinity);
// ConnectivityError naming the component sizes when there is more than one.
void require_connected(const Matrix& affinity, std::string_view what);

// Binary symmetrized k-NN affinity.
Matrix knn_affinity(const Matrix& points, int k_neighbors);
// I - D^-1/2 A D^-1/2. ConnectivityError when a node has no edge.
Matrix normalized_laplacian(const Matrix& affinity);
Reduction2D spectral_embedding(const Matrix& points, int k_neighbors = 10);
Reduction2D spectral_embedding_from_affinity(const Matrix& affinity);

struct TsneParams {
  std::optional<double> perplexity;  // default min(30, (n - 1) / 3)
  int iterations = 1000;
  std::uint64_t seed = 42;
  double learning_rate = 200.0;
  double early_exaggeration = 12.0;
  int exaggeration_iterations = 250;
  int momentum_switch = 250;
  int threads = 1;
};

// Per-point Gaussian conditional probabilities matched to the perplexity.
struct Affinities {
  Matrix conditional;             // row i: p_{j|i}
  std::vector<double> entropy_error;  // |H_i - log(perplexity)|
  std::size_t capped = 0;         // rows that hit the 50-step bisection cap
};
Affinities tsne_affinities(const Matrix& squared_distances, double perplexity);

// Exact t-SNE. Diagnostics: kl_initial, kl_final, perplexity,
// max_entropy_error, bisection_capped.
Reduction2D tsne(const Matrix& points, const TsneParams& params = {});

struct ReduceParams {
  ReductionMethod method = ReductionMethod::tsne;
  int k_neighbors = 10;
  TsneParams tsne;
};

nlohmann::json reduce_params_to_json(const ReduceParams& p);
ReduceParams reduce_params_from_json(const nlohmann::json& j);

// Runs the method on the set's vectors and attaches ids and labels. Classes
// default to the labels.
Reduction2D reduce(const EmbeddingSet& set, const ReduceParams& params);

// node_id,label,class,x,y
std::string reduction_to_csv(const Reduction2D& r);
Reduction2D reduction_from_csv(std::string_view text);

}  // namespace graphpredict
