// Copyright 2026 The isingbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isingbench/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <sstream>

namespace isingbench::report {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_preamble(const Provenance& p) {
  std::ostringstream os;
  os << "# tool: isingbench " << p.tool_version << "\n"
     << "# command: " << p.command << "\n"
     << "# seed: " << p.seed << "\n";
  return os.str();
}

nlohmann::json provenance_json(const Provenance& p) {
  return {{"tool_version", p.tool_version}, {"command", p.command}, {"seed", p.seed}};
}

std::string utc_timestamp() {
  std::time_t t;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env && *env) {
    t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json manifest(const Provenance& p, const std::vector<std::string>& argv,
                        const std::vector<std::string>& files) {
  auto doc = provenance_json(p);
  doc["argv"] = argv;
  doc["timestamp"] = utc_timestamp();
  doc["files"] = files;
  return doc;
}

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 30, kTop = 50, kBottom = 70;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const char* colour(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

std::string tick_label(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

struct Axis {
  double lo, hi;
  void pad() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

class Canvas {
 public:
  Canvas(Axis x, Axis y, const PlotLabels& labels, const Provenance& p) : x_(x), y_(y) {
    x_.pad();
    y_.pad();
    os_ << R"(<?xml version="1.0" encoding="UTF-8"?>)" << "\n"
        << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth << R"(" height=")"
        << kHeight << R"(" font-family="sans-serif" font-size="12">)" << "\n"
        << "<metadata><tool>isingbench " << xml_escape(p.tool_version) << "</tool><seed>"
        << p.seed << "</seed><command>" << xml_escape(p.command) << "</command></metadata>\n"
        << R"(<rect width="100%" height="100%" fill="white"/>)" << "\n"
        << R"(<text x=")" << kWidth / 2 << R"(" y="28" text-anchor="middle" font-size="15">)"
        << xml_escape(labels.title) << "</text>\n"
        << R"(<text x=")" << kLeft + (kWidth - kLeft - kRight) / 2 << R"(" y=")"
        << kHeight - 20 << R"(" text-anchor="middle">)" << xml_escape(labels.x_label)
        << "</text>\n"
        << R"(<text x="20" y=")" << kTop + (kHeight - kTop - kBottom) / 2
        << R"(" text-anchor="middle" transform="rotate(-90 20 )"
        << kTop + (kHeight - kTop - kBottom) / 2 << R"lit()">)lit" << xml_escape(labels.y_label)
        << "</text>\n";
  }

  double px(double x) const {
    return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom);
  }

  void frame(bool numeric_x) {
    os_ << R"(<rect x=")" << kLeft << R"(" y=")" << kTop << R"(" width=")"
        << kWidth - kLeft - kRight << R"(" height=")" << kHeight - kTop - kBottom
        << R"(" fill="none" stroke="black"/>)" << "\n";
    for (double t : nice_ticks(y_.lo, y_.hi)) {
      os_ << R"(<line x1=")" << kLeft - 5 << R"(" x2=")" << kLeft << R"(" y1=")" << num(py(t))
          << R"(" y2=")" << num(py(t)) << R"(" stroke="black"/>)"
          << R"(<text x=")" << kLeft - 8 << R"(" y=")" << num(py(t) + 4)
          << R"(" text-anchor="end">)" << tick_label(t) << "</text>\n";
    }
    if (!numeric_x) return;
    for (double t : nice_ticks(x_.lo, x_.hi)) {
      os_ << R"(<line x1=")" << num(px(t)) << R"(" x2=")" << num(px(t)) << R"(" y1=")"
          << kHeight - kBottom << R"(" y2=")" << kHeight - kBottom + 5 << R"(" stroke="black"/>)"
          << R"(<text x=")" << num(px(t)) << R"(" y=")" << kHeight - kBottom + 18
          << R"(" text-anchor="middle">)" << tick_label(t) << "</text>\n";
    }
  }

  void legend(const std::vector<std::string>& names) {
    double y = kTop + 14;
    for (std::size_t i = 0; i < names.size(); ++i, y += 16) {
      os_ << R"(<rect x=")" << kWidth - kRight - 150 << R"(" y=")" << y - 9
          << R"(" width="10" height="10" fill=")" << colour(i) << R"("/>)"
          << R"(<text x=")" << kWidth - kRight - 135 << R"(" y=")" << y << R"(">)"
          << xml_escape(names[i]) << "</text>\n";
    }
  }

  std::ostringstream& out() { return os_; }
  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  Axis x_, y_;
  std::ostringstream os_;
};

std::string polyline(const Canvas& c, const std::vector<double>& x, const std::vector<double>& y) {
  std::string pts;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    if (!pts.empty()) pts += ' ';
    pts += num(c.px(x[i])) + "," + num(c.py(y[i]));
  }
  return pts;
}

Axis extent(std::initializer_list<const std::vector<double>*> sets) {
  Axis a{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto* s : sets) {
    for (double v : *s) {
      if (!std::isfinite(v)) continue;
      a.lo = std::min(a.lo, v);
      a.hi = std::max(a.hi, v);
    }
  }
  if (!std::isfinite(a.lo)) a = {0.0, 1.0};
  return a;
}

}  // namespace

std::string svg_boxplot(const std::vector<BoxSeries>& boxes, const PlotLabels& labels,
                        const Provenance& p) {
  Axis y{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& b : boxes) {
    y.lo = std::min(y.lo, b.stats.min);
    y.hi = std::max(y.hi, b.stats.max);
  }
  if (boxes.empty()) y = {0.0, 1.0};
  const double margin = 0.05 * (y.hi - y.lo);
  y.lo -= margin;
  y.hi += margin;
  const double count = std::max<double>(1.0, static_cast<double>(boxes.size()));
  Canvas c({0.0, count}, y, labels, p);
  c.frame(false);
  auto& os = c.out();
  const double slot = c.px(1.0) - c.px(0.0);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& s = boxes[i].stats;
    const double mid = c.px(i + 0.5), half = 0.3 * slot;
    os << R"(<line x1=")" << num(mid) << R"(" x2=")" << num(mid) << R"(" y1=")" << num(c.py(s.min))
       << R"(" y2=")" << num(c.py(s.max)) << R"(" stroke="black"/>)" << "\n"
       << R"(<rect x=")" << num(mid - half) << R"(" y=")" << num(c.py(s.q3)) << R"(" width=")"
       << num(2 * half) << R"(" height=")" << num(c.py(s.q1) - c.py(s.q3)) << R"(" fill=")"
       << colour(i) << R"(" fill-opacity="0.5" stroke="black"/>)" << "\n"
       << R"(<line x1=")" << num(mid - half) << R"(" x2=")" << num(mid + half) << R"(" y1=")"
       << num(c.py(s.median)) << R"(" y2=")" << num(c.py(s.median))
       << R"(" stroke="black" stroke-width="2"/>)" << "\n";
    for (double v : {s.min, s.max}) {
      os << R"(<line x1=")" << num(mid - half / 2) << R"(" x2=")" << num(mid + half / 2)
         << R"(" y1=")" << num(c.py(v)) << R"(" y2=")" << num(c.py(v)) << R"(" stroke="black"/>)"
         << "\n";
    }
    os << R"(<text x=")" << num(mid) << R"(" y=")" << kHeight - kBottom + 18
       << R"(" text-anchor="middle">)" << xml_escape(boxes[i].label) << "</text>\n";
  }
  return c.finish();
}

std::string svg_histogram(const Histogram& hist, const PlotLabels& labels, const Provenance& p) {
  std::int64_t peak = 1;
  for (auto n : hist.counts) peak = std::max(peak, n);
  Axis x = hist.edges.size() >= 2 ? Axis{hist.edges.front(), hist.edges.back()} : Axis{0.0, 1.0};
  Canvas c(x, {0.0, static_cast<double>(peak) * 1.05}, labels, p);
  c.frame(true);
  auto& os = c.out();
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double x0 = c.px(hist.edges[i]), x1 = c.px(hist.edges[i + 1]);
    const double top = c.py(static_cast<double>(hist.counts[i]));
    os << R"(<rect x=")" << num(x0) << R"(" y=")" << num(top) << R"(" width=")"
       << num(std::max(0.0, x1 - x0)) << R"(" height=")" << num(c.py(0.0) - top)
       << R"(" fill=")" << colour(0) << R"(" stroke="white" stroke-width="0.5"/>)" << "\n";
  }
  return c.finish();
}

std::string svg_band(const std::vector<BandSeries>& series, const PlotLabels& labels,
                     const Provenance& p) {
  Axis x{0.0, 1.0}, y{0.0, 1.0};
  bool first = true;
  for (const auto& s : series) {
    const Axis sx = extent({&s.x});
    const Axis sy = extent({&s.center, &s.lower, &s.upper});
    if (first) {
      x = sx;
      y = sy;
      first = false;
    } else {
      x = {std::min(x.lo, sx.lo), std::max(x.hi, sx.hi)};
      y = {std::min(y.lo, sy.lo), std::max(y.hi, sy.hi)};
    }
  }
  Canvas c(x, y, labels, p);
  c.frame(true);
  auto& os = c.out();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    std::vector<double> bx(s.x), by(s.upper);
    bx.insert(bx.end(), s.x.rbegin(), s.x.rend());
    by.insert(by.end(), s.lower.rbegin(), s.lower.rend());
    os << R"(<polygon points=")" << polyline(c, bx, by) << R"(" fill=")" << colour(i)
       << R"(" fill-opacity="0.2" stroke="none"/>)" << "\n"
       << R"(<polyline points=")" << polyline(c, s.x, s.center) << R"(" fill="none" stroke=")"
       << colour(i) << R"(" stroke-width="2"/>)" << "\n";
    names.push_back(s.label);
  }
  c.legend(names);
  return c.finish();
}

std::string svg_lines(const std::vector<LineSeries>& series, const PlotLabels& labels,
                      const Provenance& p) {
  Axis x{0.0, 1.0}, y{0.0, 1.0};
  bool first = true;
  for (const auto& s : series) {
    const Axis sx = extent({&s.x}), sy = extent({&s.y});
    if (first) {
      x = sx;
      y = sy;
      first = false;
    } else {
      x = {std::min(x.lo, sx.lo), std::max(x.hi, sx.hi)};
      y = {std::min(y.lo, sy.lo), std::max(y.hi, sy.hi)};
    }
  }
  Canvas c(x, y, labels, p);
  c.frame(true);
  auto& os = c.out();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    os << R"(<polyline points=")" << polyline(c, series[i].x, series[i].y)
       << R"(" fill="none" stroke=")" << colour(i) << R"(" stroke-width="2"/>)" << "\n";
    names.push_back(series[i].label);
  }
  c.legend(names);
  return c.finish();
}

}  // namespace isingbench::report
