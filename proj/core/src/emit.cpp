#include "lagfill/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace lagfill {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_svg(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : n_cols_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CsvWriter: no columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ += ',';
    out_ += columns[i];
  }
  out_ += '\n';
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != n_cols_)
    throw std::invalid_argument("CsvWriter: wrong column count");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ',';
    out_ += format_double(values[i]);
  }
  out_ += '\n';
  ++rows_;
}

std::string CsvWriter::str() const { return out_; }

SvgPlot::SvgPlot(double width, double height) : width_(width), height_(height) {}

void SvgPlot::add_polyline(const std::vector<double>& x,
                           const std::vector<double>& y,
                           const std::string& color) {
  if (x.size() != y.size())
    throw std::invalid_argument("SvgPlot: x/y size mismatch");
  series_.push_back({x, y, color});
}

void SvgPlot::add_marker(const SvgMarker& m) { markers_.push_back(m); }

std::string SvgPlot::str() const {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto stretch = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Series& s : series_)
    for (std::size_t i = 0; i < s.x.size(); ++i) stretch(s.x[i], s.y[i]);
  for (const SvgMarker& m : markers_) stretch(m.x, m.y);
  if (!(xmin < xmax)) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (!(ymin < ymax)) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double margin = 40.0;
  const double sx = (width_ - 2.0 * margin) / (xmax - xmin);
  const double sy = (height_ - 2.0 * margin) / (ymax - ymin);
  auto px = [&](double x) { return margin + (x - xmin) * sx; };
  auto py = [&](double y) { return height_ - margin - (y - ymin) * sy; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_svg(width_) + "\" height=\"" + format_svg(height_) +
         "\" viewBox=\"0 0 " + format_svg(width_) + " " + format_svg(height_) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes through the origin when visible
  if (xmin < 0.0 && xmax > 0.0)
    svg += "<line x1=\"" + format_svg(px(0.0)) + "\" y1=\"" +
           format_svg(py(ymin)) + "\" x2=\"" + format_svg(px(0.0)) +
           "\" y2=\"" + format_svg(py(ymax)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  if (ymin < 0.0 && ymax > 0.0)
    svg += "<line x1=\"" + format_svg(px(xmin)) + "\" y1=\"" +
           format_svg(py(0.0)) + "\" x2=\"" + format_svg(px(xmax)) +
           "\" y2=\"" + format_svg(py(0.0)) +
           "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (const Series& s : series_) {
    svg += "<polyline fill=\"none\" stroke=\"" + s.color +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg += ' ';
      svg += format_svg(px(s.x[i])) + "," + format_svg(py(s.y[i]));
    }
    svg += "\"/>\n";
  }
  for (const SvgMarker& m : markers_) {
    svg += "<circle cx=\"" + format_svg(px(m.x)) + "\" cy=\"" +
           format_svg(py(m.y)) + "\" r=\"4\" fill=\"" + m.color + "\"/>\n";
    if (!m.label.empty())
      svg += "<text x=\"" + format_svg(px(m.x) + 6.0) + "\" y=\"" +
             format_svg(py(m.y) - 6.0) + "\" font-size=\"12\" font-family=\"monospace\">" +
             m.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("write failed for " + path);
}

}  // namespace lagfill
