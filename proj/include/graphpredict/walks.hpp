#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "graphpredict/projection.hpp"

namespace graphpredict {

using Walk = std::vector<std::uint32_t>;

// `walks_per_node` rounds; each round starts one walk from every node that
// has an outgoing neighbor, in a freshly shuffled order. The first step is
// uniform; later steps weight a neighbor x of the current node v (arrived at
// from t) by 1/p when x == t, 1 when x is adjacent to t, and 1/q otherwise.
// Walks stop early at nodes without neighbors.
std::vector<Walk> biased_walks(const Adjacency& adj, int walks_per_node, int walk_length, double p, double q,
                               std::mt19937_64& rng);

// Number of (center, context) pairs a fixed window yields on one walk.
std::uint64_t window_pair_count(std::size_t walk_length, int window);

// Unigram^0.75 sampler over node occurrence counts (alias table, one draw per sample).
class NegativeSampler {
 public:
  explicit NegativeSampler(std::span<const std::uint64_t> counts, double power = 0.75);
  bool empty() const { return prob_.empty(); }
  std::uint32_t operator()(std::mt19937_64& rng) const {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * static_cast<double>(prob_.size());
    const auto i = std::min(static_cast<std::size_t>(x), prob_.size() - 1);
    return x - static_cast<double>(i) < prob_[i] ? static_cast<std::uint32_t>(i) : alias_[i];
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace graphpredict
