#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace graphpredict {

using NodeId = std::int64_t;
using EdgeId = std::int64_t;

using RealVector = std::vector<double>;
using PropertyValue = std::variant<std::int64_t, double, std::string, RealVector>;
using Properties = std::map<std::string, PropertyValue, std::less<>>;

// Numeric view of a scalar property (integer or real); nullopt otherwise.
std::optional<double> as_number(const PropertyValue& v);
// Text view: text as-is, integers in decimal; nullopt for reals and vectors.
std::optional<std::string> as_key_text(const PropertyValue& v);
std::string to_display(const PropertyValue& v);

// Throws ValidationError for empty or non-finite vectors.
void validate_property(std::string_view name, const PropertyValue& v);

struct Node {
  NodeId id = 0;
  std::string label;
  Properties properties;
};

struct Edge {
  EdgeId id = 0;
  std::string type;
  NodeId source = 0;
  NodeId target = 0;
  Properties properties;
};

enum class Direction { out, in, undirected };

// In-memory labeled property graph. Node ids are dense and assigned in
// insertion order; edge ids are dense too and are renumbered when edges are
// removed. All indices are kept in step with the node and edge vectors.
//
// Mutation requires exclusive access; const operations are safe to call
// concurrently between mutations.
class PropertyGraph {
 public:
  NodeId add_node(std::string label, Properties props = {});
  EdgeId add_edge(std::string type, NodeId source, NodeId target, Properties props = {});

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_node(NodeId id) const { return id >= 0 && static_cast<std::size_t>(id) < nodes_.size(); }
  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Ids of nodes with the label, ascending. Empty for unknown labels.
  const std::vector<NodeId>& nodes_with_label(std::string_view label) const;
  const std::vector<EdgeId>& edges_of_type(std::string_view type) const;
  std::vector<std::string> labels() const;
  std::vector<std::string> edge_types() const;
  bool has_label(std::string_view label) const;
  bool has_edge_type(std::string_view type) const;

  // Distinct neighbors over edges of `type` in `direction`, ascending by id.
  std::vector<NodeId> neighbors(NodeId node, std::string_view type, Direction direction) const;
  // Incident edge ids of `type` (all types when empty), ascending.
  std::vector<EdgeId> incident_edges(NodeId node, std::string_view type, Direction direction) const;

  void set_node_property(NodeId node, const std::string& name, PropertyValue value);
  const PropertyValue* node_property(NodeId node, std::string_view name) const;
  void set_edge_property(EdgeId edge, const std::string& name, PropertyValue value);

  // First node with `label` whose property `name` renders as `key`.
  std::optional<NodeId> find_node(std::string_view label, std::string_view name, std::string_view key) const;

  // Removes every edge of the type and renumbers the remaining edges.
  std::size_t remove_edges_of_type(std::string_view type);

  // Recomputes every index from scratch and reports disagreements.
  std::vector<std::string> audit() const;

 private:
  void check_node(NodeId id) const;
  void rebuild_indices();

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<NodeId>, std::less<>> by_label_;
  std::map<std::string, std::vector<EdgeId>, std::less<>> by_type_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

}  // namespace graphpredict
