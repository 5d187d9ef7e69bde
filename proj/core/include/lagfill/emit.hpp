#pragma once

#include <string>
#include <vector>

namespace lagfill {

/// Deterministic CSV writer: comma separators, "." decimal separator,
/// 17 significant digits, no trailing whitespace.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void add_row(const std::vector<double>& values);
  std::string str() const;
  std::size_t rows() const { return rows_; }

 private:
  std::string out_;
  std::size_t n_cols_;
  std::size_t rows_ = 0;
};

std::string format_double(double v);  // %.17g

struct SvgMarker {
  double x = 0.0, y = 0.0;
  std::string color = "#d62728";
  std::string label;
};

/// Minimal deterministic SVG line plot: one polyline per series plus circle
/// markers, fixed canvas, no timestamps or environment-dependent content.
class SvgPlot {
 public:
  SvgPlot(double width = 640.0, double height = 480.0);
  void add_polyline(const std::vector<double>& x, const std::vector<double>& y,
                    const std::string& color = "#1f77b4");
  void add_marker(const SvgMarker& m);
  std::string str() const;

 private:
  struct Series {
    std::vector<double> x, y;
    std::string color;
  };
  double width_, height_;
  std::vector<Series> series_;
  std::vector<SvgMarker> markers_;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace lagfill
