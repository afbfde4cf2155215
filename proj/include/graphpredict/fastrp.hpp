#pragma once

#include <cstdint>
#include <span>

#include "graphpredict/graph.hpp"

namespace graphpredict {

// Sparse random base vector for one node: each entry is +sqrt(3), 0 or
// -sqrt(3) with probabilities 1/6, 2/3, 1/6. A pure function of (seed, node),
// so the embedding does not depend on iteration order or thread count.
void fastrp_base_vector(std::uint64_t seed, NodeId node, std::span<double> out);

}  // namespace graphpredict
