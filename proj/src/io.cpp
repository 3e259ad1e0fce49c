#include "mdcov/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdcov/error.hpp"

namespace mdcov {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) cells.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool parse_number(const std::string& cell, double& out) {
  const char* b = cell.data();
  const char* e = b + cell.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e && !cell.empty();
}

double parse_cell(const std::string& cell, std::size_t line, std::size_t col,
                  const std::string& name) {
  double v;
  if (!parse_number(cell, v))
    input_error(name + ": line " + std::to_string(line) + ", column " +
                std::to_string(col) + ": '" + cell + "' is not a number");
  return v;
}

std::vector<std::string> non_blank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

json parse_json(const std::string& text, const std::string& name) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) input_error(name + ": malformed JSON");
  return j;
}

DistanceMatrix support_from_json(const json& j, const std::string& name);

}  // namespace

DistanceMatrix parse_matrix_csv(std::istream& in, const std::string& name) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto lines = non_blank_lines(text);
  if (lines.empty()) input_error(name + ": empty matrix file");
  const std::size_t n = lines.size();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto cells = split_csv_line(lines[i]);
    if (cells.size() != n)
      input_error(name + ": line " + std::to_string(i + 1) + ": expected " +
                  std::to_string(n) + " columns, got " +
                  std::to_string(cells.size()) + " (matrix must be square)");
    for (std::size_t j = 0; j < n; ++j)
      d(i, j) = parse_cell(cells[j], i + 1, j + 1, name);
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix parse_matrix_json(const std::string& text,
                                 const std::string& name) {
  json j = parse_json(text, name);
  if (!j.is_object() || !j.contains("n") || !j.contains("d"))
    input_error(name + ": expected {\"n\": int, \"d\": [[...]]}");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    input_error(name + ": \"n\" must be a positive integer");
  const std::size_t n = j["n"].get<std::size_t>();
  const json& rows = j["d"];
  if (!rows.is_array() || rows.size() != n)
    input_error(name + ": \"d\" must have " + std::to_string(n) + " rows");
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      input_error(name + ": row " + std::to_string(i) + " must have " +
                  std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      if (!rows[i][k].is_number())
        input_error(name + ": non-numeric entry at (" + std::to_string(i) +
                    ", " + std::to_string(k) + ")");
      d(i, k) = rows[i][k].get<double>();
    }
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix load_matrix(const std::string& path, MatrixFormat format) {
  if (format == MatrixFormat::auto_detect)
    format = path.size() > 5 && path.substr(path.size() - 5) == ".json"
                 ? MatrixFormat::json
                 : MatrixFormat::csv;
  if (format == MatrixFormat::json)
    return parse_matrix_json(read_file(path), path);
  std::ifstream in(path);
  if (!in) input_error("cannot open '" + path + "'");
  return parse_matrix_csv(in, path);
}

std::vector<Point> load_points_csv(const std::string& path, bool labels) {
  auto lines = non_blank_lines(read_file(path));
  if (lines.empty()) input_error(path + ": empty points file");

  std::vector<Point> points;
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    Point p;
    if (labels) {
      if (cells.empty() || cells[0].empty())
        input_error(path + ": line " + std::to_string(i + 1) +
                    ": empty label");
      p.label = cells[0];
    } else {
      bool numeric = true;
      for (const auto& c : cells) {
        double v;
        if (!parse_number(c, v)) {
          numeric = false;
          break;
        }
        p.coords.push_back(v);
      }
      if (!numeric) {
        if (i == 0) continue;  // header row
        double v;
        std::size_t col = 0;
        for (std::size_t k = 0; k < cells.size(); ++k)
          if (!parse_number(cells[k], v)) {
            col = k + 1;
            break;
          }
        input_error(path + ": line " + std::to_string(i + 1) + ", column " +
                    std::to_string(col) + ": not a number");
      }
      if (points.empty())
        ncols = p.coords.size();
      else if (p.coords.size() != ncols)
        input_error(path + ": line " + std::to_string(i + 1) + ": expected " +
                    std::to_string(ncols) + " columns, got " +
                    std::to_string(p.coords.size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) input_error(path + ": no data rows");
  return points;
}

std::vector<GraphEdge> load_edges_csv(const std::string& path) {
  auto lines = non_blank_lines(read_file(path));
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    if (cells.size() != 2 && cells.size() != 3)
      input_error(path + ": line " + std::to_string(i + 1) +
                  ": expected 'u,v' or 'u,v,weight'");
    GraphEdge e{cells[0], cells[1], 1.0};
    if (cells.size() == 3) e.weight = parse_cell(cells[2], i + 1, 3, path);
    edges.push_back(std::move(e));
  }
  if (edges.empty()) input_error(path + ": no edges");
  return edges;
}

namespace {

DistanceMatrix support_from_json(const json& j, const std::string& name) {
  if (j.is_object() && j.contains("d"))
    return parse_matrix_json(j.dump(), name);
  if (j.is_object() && j.contains("points")) {
    std::vector<Point> pts;
    for (const auto& row : j["points"]) {
      Point p;
      if (row.is_array())
        for (const auto& c : row) p.coords.push_back(c.get<double>());
      else
        p.coords.push_back(row.get<double>());
      pts.push_back(std::move(p));
    }
    MetricSpec spec;
    std::string metric = j.value("metric", std::string("euclidean"));
    if (metric == "euclidean")
      spec = MetricSpec::euclidean();
    else if (metric == "manhattan")
      spec = MetricSpec::manhattan();
    else if (metric == "chebyshev")
      spec = MetricSpec::chebyshev();
    else if (metric == "minkowski")
      spec = MetricSpec::minkowski(j.value("p", 2.0));
    else if (metric == "discrete")
      spec = MetricSpec::discrete();
    else
      input_error(name + ": unsupported support metric '" + metric + "'");
    return build_distance_matrix(pts, spec);
  }
  input_error(name + ": support must be a matrix or a point list");
}

std::vector<double> weights_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) input_error(name + ": \"weights\" must be an array");
  std::vector<double> w;
  for (const auto& v : j) {
    if (!v.is_number()) input_error(name + ": non-numeric weight");
    w.push_back(v.get<double>());
  }
  return w;
}

}  // namespace

FiniteSignedMeasure load_measure_json(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("support") || !j.contains("weights"))
    input_error(path + ": expected {\"support\":..., \"weights\":[...]}");
  FiniteSignedMeasure m{support_from_json(j["support"], path),
                        weights_from_json(j["weights"], path)};
  validate_measure(m);
  return m;
}

FiniteJointMeasure load_joint_measure_json(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("spaceX") || !j.contains("spaceY") ||
      !j.contains("weights"))
    input_error(path +
                ": expected {\"spaceX\":..., \"spaceY\":..., \"weights\":[[...]]}");
  FiniteJointMeasure t{support_from_json(j["spaceX"], path),
                       support_from_json(j["spaceY"], path), Matrix()};
  const json& rows = j["weights"];
  if (!rows.is_array() || rows.size() != t.space_x.n)
    input_error(path + ": weights must have " + std::to_string(t.space_x.n) +
                " rows");
  t.w = Matrix(t.space_x.n, t.space_y.n);
  for (std::size_t i = 0; i < t.space_x.n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != t.space_y.n)
      input_error(path + ": weights row " + std::to_string(i) +
                  " must have " + std::to_string(t.space_y.n) + " entries");
    for (std::size_t k = 0; k < t.space_y.n; ++k)
      t.w(i, k) = rows[i][k].get<double>();
  }
  return t;
}

}  // namespace mdcov
