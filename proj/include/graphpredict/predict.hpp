#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphpredict/embedding.hpp"
#include "graphpredict/graph.hpp"
#include "graphpredict/linalg.hpp"

namespace graphpredict {

// Where the rating-prediction queries find their data.
struct RatingSchema {
  std::string user_label = "User";
  std::string user_key = "userId";
  std::string item_label = "Movie";
  std::string item_key = "movieId";
  std::string title_property = "title";
  std::string similar_type = "SIMILAR";
  std::string rated_type = "RATED";
  std::string rating_property = "rating";
};

struct RatingQuery {
  std::vector<std::string> user_ids;
  std::vector<std::string> item_ids;
};

struct PredictionRow {
  std::string user_id;
  std::string item_id;
  std::string title;
  std::optional<double> prediction;  // absent when no similar user rated the item
  std::optional<double> real;
  std::optional<double> difference;  // real - prediction, unrounded
  std::size_t raters = 0;

  bool covered() const { return prediction.has_value(); }
};

// One row per (user, item) of the cross product, users outer. The prediction
// is the mean rating over distinct similar users that rated the item.
std::vector<PredictionRow> predict_ratings(const PropertyGraph& graph, const RatingQuery& query,
                                           const RatingSchema& schema = {});

struct PredictionReport {
  std::vector<PredictionRow> rows;
  double threshold = 1.0;
  std::size_t count_abs_diff_ge_threshold = 0;
  std::size_t exact_matches = 0;  // |difference| < 0.005
  std::size_t covered = 0;
  std::size_t uncovered = 0;
  std::optional<double> mean_abs_difference;  // over rows with a difference
};

PredictionReport prediction_report(std::vector<PredictionRow> rows, double threshold = 1.0);

// Half-up to two decimals: 4.125 -> "4.13", -0.001 -> "0.00".
std::string format_2dp(double v);

// userId,movie,title,prediction_rating,real_rating,difference,covered
std::string predictions_to_csv(const std::vector<PredictionRow>& rows);
nlohmann::json report_to_json(const PredictionReport& report);

// Mean silhouette of the labelled points under euclidean distance.
double silhouette(const Matrix& points, const std::vector<int>& classes);

// Silhouette over the rows of `embeddings` whose ids appear in `targets`.
// Every row must have a target.
double disease_separation(const EmbeddingSet& embeddings, const std::map<NodeId, int>& targets);

// Target per patient, read across the patient -> result relationship.
std::map<NodeId, int> disease_targets(const PropertyGraph& graph, const std::string& patient_label = "Person",
                                      const std::string& relationship = "hasDisease",
                                      const std::string& property = "target");

struct QualityResult {
  double quality = 0.0;
  std::size_t targets = 0;
  std::size_t covered = 0;
  std::vector<std::string> warnings;
};

// Fraction of (user, item) targets with at least one similar user who rated
// the item. Reads graph structure only.
QualityResult query_quality_report(const PropertyGraph& graph, const RatingQuery& query,
                                   const RatingSchema& schema = {});
double query_quality(const PropertyGraph& graph, const RatingQuery& query, const RatingSchema& schema = {});

nlohmann::json quality_to_json(const QualityResult& q);

}  // namespace graphpredict
