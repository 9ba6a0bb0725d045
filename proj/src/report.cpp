// Copyright 2026 The scenforge Authors
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

#include "scenforge/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace scenforge {

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string scenario_record(const Scenario& scenario, const Score& score) {
  nlohmann::ordered_json rec;
  rec["features"] = scenario.members();
  rec["log10_p"] = score.log10_p;
  rec["crit_sum"] = score.crit_sum;
  rec["p_g"] = score.p_g();
  rec["c_g"] = score.c_g();
  return rec.dump();
}

std::string front_jsonl(const FrontResult& front) {
  std::string out;
  for (const auto& point : front.points) {
    for (const auto& s : point.scenarios) {
      out += scenario_record(s, point.score);
      out += '\n';
    }
  }
  return out;
}

std::string front_csv(const FrontResult& front) {
  std::string out = "log10_p,crit_sum,scenario_count,representative_features\n";
  for (const auto& point : front.points) {
    out += format_number(point.score.log10_p);
    out += ',';
    out += std::to_string(point.score.crit_sum);
    out += ',';
    out += std::to_string(point.scenarios.size());
    out += ',';
    if (!point.scenarios.empty()) {
      const auto& ids = point.scenarios.front().members();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ';';
        out += ids[i];
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 24;
constexpr double kTop = 48;
constexpr double kBottom = 64;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Smallest 1/2/5 x 10^k step giving at most ten intervals.
double tick_step(double span) {
  double step = 1;
  while (span / step > 10) {
    if (span / (step * 2) <= 10) return step * 2;
    if (span / (step * 5) <= 10) return step * 5;
    step *= 10;
  }
  return step;
}

}  // namespace

std::string render_scatter(const FrontResult& front) {
  double x_lo = -1, x_hi = 0, y_lo = 0, y_hi = 1;
  if (!front.points.empty()) {
    double pmin = front.points.front().score.log10_p, pmax = pmin;
    std::int64_t cmax = 0;
    for (const auto& pt : front.points) {
      pmin = std::min(pmin, pt.score.log10_p);
      pmax = std::max(pmax, pt.score.log10_p);
      cmax = std::max(cmax, pt.score.crit_sum);
    }
    x_lo = std::floor(pmin);
    x_hi = std::ceil(pmax);
    if (x_lo == x_hi) {
      x_lo -= 1;
      x_hi += 1;
    }
    y_hi = std::max<double>(1, static_cast<double>(cmax) + 1);
  }
  const double x_step = tick_step(x_hi - x_lo);
  const double y_step = tick_step(y_hi - y_lo);
  x_lo = std::floor(x_lo / x_step) * x_step;
  x_hi = std::ceil(x_hi / x_step) * x_step;
  y_hi = std::ceil(y_hi / y_step) * y_step;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth) + "\" height=\"" +
         fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"24.00\" text-anchor=\"middle\" font-size=\"14\">"
         "Pareto front: criticality over probability of occurrence</text>\n";

  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" +
         fixed(kLeft + plot_w) + "\" y2=\"" + fixed(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) +
         "\" y2=\"" + fixed(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g class=\"x-ticks\" text-anchor=\"middle\">\n";
  const auto x_ticks = static_cast<long>(std::llround((x_hi - x_lo) / x_step));
  for (long i = 0; i <= x_ticks; ++i) {
    const double x = x_lo + static_cast<double>(i) * x_step;
    const double px = sx(x);
    svg += "<line x1=\"" + fixed(px) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(px) +
           "\" y2=\"" + fixed(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fixed(px) + "\" y=\"" + fixed(kTop + plot_h + 20) + "\">10<tspan dy=\"-6\" font-size=\"9\">" +
           format_number(x) + "</tspan></text>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"y-ticks\" text-anchor=\"end\">\n";
  const auto y_ticks = static_cast<long>(std::llround((y_hi - y_lo) / y_step));
  for (long i = 0; i <= y_ticks; ++i) {
    const double y = y_lo + static_cast<double>(i) * y_step;
    const double py = sy(y);
    svg += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(py) + "\" x2=\"" + fixed(kLeft) +
           "\" y2=\"" + fixed(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py + 4) + "\">2<tspan dy=\"-6\" font-size=\"9\">" +
           format_number(y) + "</tspan></text>\n";
  }
  svg += "</g>\n";

  svg += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 16) +
         "\" text-anchor=\"middle\">probability of occurrence P_g (log10 scale)</text>\n";
  svg += "<text x=\"20.00\" y=\"" + fixed(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20.00 " +
         fixed(kTop + plot_h / 2) + ")\">criticality C_g (log2 scale)</text>\n";

  if (front.points.size() >= 2) {
    std::string d = "M " + fixed(sx(front.points[0].score.log10_p)) + " " +
                    fixed(sy(static_cast<double>(front.points[0].score.crit_sum)));
    for (std::size_t i = 1; i < front.points.size(); ++i) {
      d += " V " + fixed(sy(static_cast<double>(front.points[i].score.crit_sum)));
      d += " H " + fixed(sx(front.points[i].score.log10_p));
    }
    svg += "<path class=\"staircase\" d=\"" + d + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  }

  svg += "<g class=\"points\" fill=\"#d62728\">\n";
  for (const auto& pt : front.points) {
    svg += "<circle cx=\"" + fixed(sx(pt.score.log10_p)) + "\" cy=\"" +
           fixed(sy(static_cast<double>(pt.score.crit_sum))) + "\" r=\"3.50\"><title>log10_p=" +
           format_number(pt.score.log10_p) + " crit_sum=" + std::to_string(pt.score.crit_sum) +
           " scenarios=" + std::to_string(pt.scenarios.size()) + "</title></circle>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace scenforge
