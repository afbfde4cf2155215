#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphpredict/reduce.hpp"

namespace graphpredict {

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  std::string cls;
  std::optional<std::string> tooltip;

  friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

const std::vector<std::string>& default_palette();

struct ScatterSpec {
  std::string title;
  std::vector<ScatterPoint> points;
  int width = 800;
  int height = 600;
  std::vector<std::string> palette = default_palette();
  bool legend = true;

  // ValidationError naming the first non-finite point, or on more than 12 classes.
  void validate() const;
};

struct ClassColor {
  std::string cls;
  std::string color;
};

// Classes in first-appearance order with their colors. Two classes that read
// as a healthy/sick pair (0/1, false/true, healthy/sick) get green and red.
std::vector<ClassColor> class_colors(const ScatterSpec& spec);

// One <circle> per point; legend entries are rects and text.
std::string scatter_svg(const ScatterSpec& spec);

// x,y,class,tooltip
std::string scatter_csv(const ScatterSpec& spec);
std::vector<ScatterPoint> scatter_from_csv(std::string_view text);

// Points from a reduction, class from r.classes, tooltip "label id".
ScatterSpec scatter_from_reduction(const Reduction2D& r, std::string title);

}  // namespace graphpredict
