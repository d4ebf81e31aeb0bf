#include "ainfty/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace ainfty {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string barcode_svg(const Barcode& bars, const std::string& title) {
  const double left = 60, right = 620, top = 40, row = 16;
  double lo = 0, hi = 1;
  bool any = false;
  for (auto& b : bars) {
    double bb = b.birth.to_double();
    if (!any || bb < lo) lo = bb;
    double dd = b.death_inf ? bb : b.death.to_double();
    if (!any || dd > hi) hi = dd;
    any = true;
  }
  if (!any) {
    lo = 0;
    hi = 1;
  }
  if (hi <= lo) hi = lo + 1;
  double span = hi - lo;
  hi += span * 0.15;  // headroom for essential-class arrows
  auto sx = [&](double v) { return left + (v - lo) / (hi - lo) * (right - left); };

  double height = top + row * static_cast<double>(bars.size()) + 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 660 " << fmt(height) << "\">\n";
  out << "<style>text{font-family:sans-serif;font-size:11px}</style>\n";
  out << "<text x=\"" << fmt(left) << "\" y=\"20\" font-size=\"14\">" << escape(title)
      << "</text>\n";

  double y = top;
  for (auto& b : bars) {
    double x0 = sx(b.birth.to_double());
    double x1 = b.death_inf ? right : sx(b.death.to_double());
    out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x1) << "\" y2=\""
        << fmt(y) << "\" stroke=\"#1f77b4\" stroke-width=\"5\"/>\n";
    if (b.death_inf)
      out << "<path d=\"M " << fmt(x1) << " " << fmt(y - 5) << " L " << fmt(x1 + 9) << " " << fmt(y)
          << " L " << fmt(x1) << " " << fmt(y + 5) << " Z\" fill=\"#1f77b4\"/>\n";
    y += row;
  }

  double axis_y = y + 12;
  out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(right)
      << "\" y2=\"" << fmt(axis_y) << "\" stroke=\"#333\"/>\n";
  std::set<std::string> seen;
  std::vector<std::pair<double, std::string>> ticks;
  for (auto& b : bars) {
    ticks.emplace_back(b.birth.to_double(), b.birth.to_string());
    if (!b.death_inf) ticks.emplace_back(b.death.to_double(), b.death.to_string());
  }
  std::sort(ticks.begin(), ticks.end());
  double last_x = -1e18;
  for (auto& [v, label] : ticks) {
    if (!seen.insert(label).second) continue;
    double x = sx(v);
    if (x - last_x < 30) continue;  // avoid label pileup
    last_x = x;
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(axis_y - 4) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(axis_y + 4) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(axis_y + 18) << "\" text-anchor=\"middle\">"
        << escape(label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ainfty
