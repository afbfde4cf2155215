#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "graphpredict/linalg.hpp"
#include "graphpredict/projection.hpp"

namespace graphpredict::sage {

// Input features, one row per view node. Numeric properties from the view's
// feature schema are z-normalized per (label, property) and zero-padded to a
// common width. Labels without numeric properties get log(1 + degree) when
// `degree_fallback` is set; FeatureError otherwise.
Matrix build_features(const ProjectedGraph& view, bool degree_fallback);

struct Layer {
  Matrix weight;             // out x 2*in, acting on [self ; neighbor mean]
  std::vector<double> bias;  // out
  bool relu = true;
};

// Neighbors used by each layer for each node. Empty means the full adjacency.
using NeighborSample = std::vector<std::vector<std::uint32_t>>;

struct PairBatch {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> positives;
  std::vector<std::vector<std::uint32_t>> negatives;  // one list per positive
};

class Model {
 public:
  Model() = default;
  // Glorot-uniform weights, zero bias. Hidden layers use ReLU, the last is linear.
  Model(std::size_t in, std::size_t hidden, std::size_t out, int layers, std::mt19937_64& rng);

  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }

  // Sets every weight to [I | 0] and bias to zero. Requires square layers.
  void set_identity();

  // Output rows are L2-normalized (zero rows stay zero).
  Matrix forward(const Matrix& features, const Adjacency& adj, const std::vector<NeighborSample>* samples = nullptr) const;

  // Mean negative-sampling loss over the batch; fills `grads` (same shapes as
  // layers) with its gradient.
  double loss_and_gradient(const Matrix& features, const Adjacency& adj, const PairBatch& batch,
                           std::vector<Layer>& grads, const std::vector<NeighborSample>* samples = nullptr) const;

  static double loss(const Matrix& embedding, const PairBatch& batch);

 private:
  struct Cache;
  Matrix run(const Matrix& features, const Adjacency& adj, const std::vector<NeighborSample>* samples,
             Cache* cache) const;

  std::vector<Layer> layers_;
};

}  // namespace graphpredict::sage
