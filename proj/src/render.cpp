#include "otpart/render.hpp"

#include <algorithm>
#include <map>

namespace otpart {

std::string render_ferrer(const Partition& p) {
  // Origin bottom-left: row y printed from the top down.
  std::string out;
  for (long long y = p.parts().front(); y >= 1; --y) {
    std::string line;
    for (int i = 1; i <= p.length(); ++i) {
      if (p.part(i) >= y)
        line += "● ";
      else
        break;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_support(const DiscreteMeasure& mu) {
  if (mu.dim() != 2) return "(rendering is available for 2-dimensional supports)\n";
  long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  std::map<std::pair<long long, long long>, bool> at;
  for (const Atom& a : mu.atoms()) {
    const long long x = a.point.coords2[0], y = a.point.coords2[1];
    at[{x, y}] = true;
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  // Doubled coordinates of one parity per measure family; step by 2.
  std::string out;
  for (long long y = max_y; y >= min_y; y -= 2) {
    std::string line;
    for (long long x = min_x; x <= max_x; x += 2)
      line += at.count({x, y}) ? "● " : ". ";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_matching(const TransportPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.matching.size(); ++i) {
    out += format_point(plan.source.atoms()[i].point);
    out += " -> ";
    out += format_point(
        plan.target.atoms()[static_cast<std::size_t>(plan.matching[i])].point);
    out += '\n';
  }
  return out;
}

}  // namespace otpart
