#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdcov/measure.hpp"
#include "mdcov/metric.hpp"

namespace mdcov {

enum class MatrixFormat { auto_detect, csv, json };

// Square numeric CSV grid or the JSON schema {"n": int, "d": [[...]]}.
// auto_detect picks JSON for a ".json" suffix, CSV otherwise.
DistanceMatrix load_matrix(const std::string& path,
                           MatrixFormat format = MatrixFormat::auto_detect);
DistanceMatrix parse_matrix_csv(std::istream& in, const std::string& name);
DistanceMatrix parse_matrix_json(const std::string& text, const std::string& name);

// One observation per row; numeric columns are coordinates. A first row
// that fails to parse as numbers is treated as a header. With
// labels=true each row's first cell is taken verbatim as a point label.
std::vector<Point> load_points_csv(const std::string& path, bool labels = false);

// Edge list CSV: rows "u,v" (unit weight) or "u,v,weight".
std::vector<GraphEdge> load_edges_csv(const std::string& path);

// Measure JSON: {"support": <support>, "weights": [...]} where <support>
// is either {"n":..,"d":[[..]]} or {"points":[[..]],"metric":..,"p":..}.
// Joint: {"spaceX": <support>, "spaceY": <support>, "weights": [[...]]}.
FiniteSignedMeasure load_measure_json(const std::string& path);
FiniteJointMeasure load_joint_measure_json(const std::string& path);

}  // namespace mdcov
