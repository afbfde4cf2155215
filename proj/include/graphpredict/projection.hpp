#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/graph.hpp"
#include "graphpredict/ingest.hpp"

namespace graphpredict {

enum class Orientation { natural, reverse, undirected };

std::string_view to_string(Orientation o);
Orientation orientation_from_string(std::string_view s);

struct ProjectionSpec {
  std::string name;
  std::map<std::string, std::vector<std::string>> nodes;  // label -> declared properties
  std::map<std::string, Orientation> relationships;       // type -> orientation

  friend bool operator==(const ProjectionSpec&, const ProjectionSpec&) = default;
};

enum class ProjectionKind { full, strict, strict_extended };

std::string_view to_string(ProjectionKind k);
ProjectionKind projection_kind_from_string(std::string_view s);

// Built-in specs for the two known datasets. Throws ConfigError for generic.
ProjectionSpec builtin_projection(ProjectionKind kind, DatasetKind dataset);
// Every label (with all of its numeric properties) and every edge type.
ProjectionSpec full_projection(const PropertyGraph& g, std::string name = "full");

nlohmann::json spec_to_json(const ProjectionSpec& spec);
ProjectionSpec spec_from_json(const nlohmann::json& j);

// Compressed adjacency over local node indices [0, n).
struct Adjacency {
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<std::uint32_t> targets;

  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::size_t degree(std::size_t v) const { return offsets[v + 1] - offsets[v]; }
  const std::uint32_t* begin(std::size_t v) const { return targets.data() + offsets[v]; }
  const std::uint32_t* end(std::size_t v) const { return targets.data() + offsets[v + 1]; }
  // Binary search; lists are sorted.
  bool contains(std::size_t v, std::uint32_t u) const;
};

// Immutable subgraph view. Holds a pointer to the source graph, which must
// outlive the view and must not be mutated while the view exists.
class ProjectedGraph {
 public:
  ProjectedGraph(const PropertyGraph& source, ProjectionSpec spec, std::vector<NodeId> nodes,
                 std::vector<EdgeId> edges, std::map<std::string, std::vector<std::string>> feature_schema,
                 std::vector<std::string> warnings);

  const PropertyGraph& source() const { return *source_; }
  const ProjectionSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }

  // Retained node ids, ascending; local index i refers to nodes()[i].
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::map<std::string, std::vector<std::string>>& feature_schema() const { return feature_schema_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t node_count() const { return nodes_.size(); }
  bool contains(NodeId id) const;
  // Local index of a retained node; -1 otherwise.
  std::int64_t local_index(NodeId id) const;

  // Traversal structure honoring each relationship's orientation; neighbor
  // lists are sorted and de-duplicated.
  const Adjacency& adjacency() const { return adjacency_; }

  nlohmann::json to_json() const;

 private:
  const PropertyGraph* source_;
  ProjectionSpec spec_;
  std::vector<NodeId> nodes_;
  std::vector<EdgeId> edges_;
  std::map<std::string, std::vector<std::string>> feature_schema_;
  std::vector<std::string> warnings_;
  std::vector<std::int64_t> local_;  // indexed by source node id
  Adjacency adjacency_;
};

// Throws ProjectionError naming a label or type the graph does not have.
ProjectedGraph project(const PropertyGraph& graph, const ProjectionSpec& spec);
// Projects within an existing view (same source graph).
ProjectedGraph project(const ProjectedGraph& view, const ProjectionSpec& spec);

}  // namespace graphpredict
