#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/csv.hpp"
#include "graphpredict/graph.hpp"

namespace graphpredict {

enum class DatasetKind { movielens, heart, generic };

std::string_view to_string(DatasetKind k);
DatasetKind dataset_kind_from_string(std::string_view s);

enum class ValueType { integer, real, text };

struct ColumnBinding {
  std::string column;
  std::string property;
  ValueType type = ValueType::text;
  bool required = true;
  std::optional<double> min;
  std::optional<double> max;
};

// One node (or, with a split delimiter, several) per row. Nodes are keyed by
// (label, key): the key column's text, or the row index when key_column is
// empty. A later row with the same key updates the existing node.
struct NodeRule {
  std::string label;
  std::string key_column;
  std::string key_property;  // property that stores the key; empty = none
  ValueType key_type = ValueType::text;
  std::string split;         // split the key column on this delimiter
  std::vector<std::string> skip_keys;  // split pieces that produce no node
  std::vector<ColumnBinding> properties;
};

// Links the nodes produced by two node rules within the same row.
struct EdgeRule {
  std::string source_label;
  std::string type;
  std::string target_label;
  std::vector<ColumnBinding> properties;
};

struct SchemaMap {
  DatasetKind kind = DatasetKind::generic;
  std::vector<NodeRule> nodes;
  std::vector<EdgeRule> edges;

  // SchemaError naming the first missing column or undeclared label.
  void validate(const std::vector<std::string>& header) const;
};

SchemaMap heart_schema();
SchemaMap movielens_ratings_schema();
SchemaMap movielens_movies_schema();

SchemaMap schema_from_json(const nlohmann::json& j);
nlohmann::json schema_to_json(const SchemaMap& map);

struct CleaningReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t rows_dropped = 0;
  std::map<std::string, std::size_t> drop_reasons;  // column -> rows dropped for it
  std::vector<std::string> warnings;

  void merge(const CleaningReport& other);
  std::string summary() const;
};

nlohmann::json to_json(const CleaningReport& r);

// Accumulates several tables into one graph, sharing the (label, key) index
// so that e.g. ratings.csv and movies.csv meet on Movie nodes.
class GraphBuilder {
 public:
  CleaningReport ingest(const csv::Table& table, const SchemaMap& map);
  const PropertyGraph& graph() const { return graph_; }
  PropertyGraph& graph() { return graph_; }
  PropertyGraph take() { return std::move(graph_); }

 private:
  PropertyGraph graph_;
  std::map<std::string, std::unordered_map<std::string, NodeId>, std::less<>> keys_;
  std::size_t row_base_ = 0;
};

struct IngestResult {
  PropertyGraph graph;
  CleaningReport report;
};

IngestResult ingest_csv(std::string_view csv_text, const SchemaMap& map);
IngestResult ingest_csv_file(const std::string& path, const SchemaMap& map);

// ratings.csv plus optional movies.csv; sets Movie.n_ratings afterwards.
IngestResult ingest_movielens(std::string_view ratings_csv, std::optional<std::string_view> movies_csv);

}  // namespace graphpredict
