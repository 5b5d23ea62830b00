#pragma once

#include "geoposet/poset.hpp"

#include <map>
#include <sstream>
#include <string>

namespace geoposet {

/// Deterministic DOT rendering of a poset: one node per class labeled
/// "id (cr)", cover edges bottom-up, same-rank groups by crossing count.
inline std::string to_dot(const GeoPoset& poset) {
  std::ostringstream os;
  os << "digraph geoposet {\n";
  os << "  rankdir=\"BT\";\n";
  os << "  node [shape=box];\n";
  for (const auto& cls : poset.classes)
    os << "  \"" << cls.id << "\" [label=\"" << cls.id << " (" << cls.profile.cr_total << ")\"];\n";
  std::map<long, std::vector<std::string>> by_cr;
  for (const auto& cls : poset.classes) by_cr[cls.profile.cr_total].push_back(cls.id);
  for (const auto& [cr, ids] : by_cr) {
    if (ids.size() < 2) continue;
    os << "  { rank=same;";
    for (const auto& id : ids) os << " \"" << id << "\";";
    os << " }\n";
  }
  auto edges = poset.hasse;
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges)
    os << "  \"" << poset.classes[static_cast<size_t>(a)].id << "\" -> \""
       << poset.classes[static_cast<size_t>(b)].id << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace geoposet
