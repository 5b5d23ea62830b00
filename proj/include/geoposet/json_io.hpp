#pragma once

#include "geoposet/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace geoposet {

using json = nlohmann::json;

inline json point_to_json(const Point2& p) {
  return json{{"x", p.x.str()}, {"y", p.y.str()}};
}

inline Point2 point_from_json(const json& j) {
  return Point2{Rational::parse(j.at("x").get<std::string>()),
                Rational::parse(j.at("y").get<std::string>())};
}

inline GraphFamily family_from_json(const json& j) {
  std::string kind = j.at("family").get<std::string>();
  int n = j.at("n").get<int>();
  if (kind == "path") return GraphFamily::path(n);
  if (kind == "cycle") return GraphFamily::cycle(n);
  if (kind == "clique") return GraphFamily::clique(n);
  throw parse_error("unknown family: " + kind);
}

inline int edge_from_label(const GraphFamily& fam, const std::string& label) {
  if (label.size() < 2 || label[0] != 'e') throw parse_error("bad edge label: " + label);
  auto dash = label.find('-');
  if (fam.kind == Kind::Clique) {
    if (dash == std::string::npos) throw parse_error("clique edge label needs two vertices: " + label);
    int u = std::stoi(label.substr(1, dash - 1));
    int v = std::stoi(label.substr(dash + 1));
    int idx = fam.edge_index(u, v);
    if (idx < 0) throw parse_error("not an edge: " + label);
    return idx;
  }
  int i = std::stoi(label.substr(1));
  if (i < 1 || i > fam.edge_count()) throw parse_error("edge index out of range: " + label);
  return i - 1;
}

inline json crossings_to_json(const GraphFamily& fam, const CrossingSet& x) {
  json arr = json::array();
  for (const auto& p : x.pairs())
    arr.push_back(json::array({fam.edge_label(p.a), fam.edge_label(p.b)}));
  return arr;
}

inline CrossingSet crossings_from_json(const GraphFamily& fam, const json& arr) {
  std::vector<EdgePair> pairs;
  for (const auto& item : arr)
    pairs.emplace_back(edge_from_label(fam, item.at(0).get<std::string>()),
                       edge_from_label(fam, item.at(1).get<std::string>()));
  return make_crossing_set(fam, std::move(pairs));
}

inline json witness_to_json(const Drawing& d) {
  json positions = json::object();
  for (int v = 1; v <= d.family.n; ++v)
    positions[std::to_string(v)] = point_to_json(d.at(v));
  return json{{"family", kind_name(d.family.kind)},
              {"n", d.family.n},
              {"positions", positions},
              {"crossings", crossings_to_json(d.family, crossing_set(d))}};
}

inline Drawing witness_from_json(const json& j) {
  GraphFamily fam = family_from_json(j);
  std::vector<Point2> pos(static_cast<size_t>(fam.n), Point2{});
  for (auto& [key, val] : j.at("positions").items()) {
    int v = std::stoi(key);
    if (v < 1 || v > fam.n) throw parse_error("vertex id out of range: " + key);
    pos[static_cast<size_t>(v - 1)] = point_from_json(val);
  }
  return Drawing(fam, std::move(pos));
}

struct ClassesFile {
  GraphFamily family;
  std::vector<RealizationClass> classes;
  std::vector<CrossingSet> unresolved;  // filter survivors without witnesses

  explicit ClassesFile(GraphFamily fam) : family(fam) {}
};

inline json classes_to_json(const ClassesFile& f) {
  json arr = json::array();
  for (const auto& cls : f.classes) {
    json entry{{"id", cls.id}, {"crossings", crossings_to_json(f.family, cls.crossings)}};
    if (cls.witness) entry["witness"] = witness_to_json(*cls.witness);
    arr.push_back(std::move(entry));
  }
  json out{{"family", kind_name(f.family.kind)}, {"n", f.family.n}, {"classes", arr}};
  if (!f.unresolved.empty()) {
    json un = json::array();
    for (const auto& x : f.unresolved) un.push_back(crossings_to_json(f.family, x));
    out["unresolved"] = un;
  }
  return out;
}

inline ClassesFile classes_from_json(const json& j) {
  ClassesFile f(family_from_json(j));
  for (const auto& entry : j.at("classes")) {
    std::optional<Drawing> wit;
    if (entry.contains("witness")) wit = witness_from_json(entry.at("witness"));
    f.classes.emplace_back(entry.at("id").get<std::string>(), f.family,
                           crossings_from_json(f.family, entry.at("crossings")), std::move(wit));
  }
  if (j.contains("unresolved"))
    for (const auto& item : j.at("unresolved"))
      f.unresolved.push_back(crossings_from_json(f.family, item));
  return f;
}

inline json poset_to_json(const GeoPoset& poset) {
  json ids = json::array();
  for (const auto& c : poset.classes) ids.push_back(c.id);
  json leq = json::array();
  for (const auto& row : poset.leq) {
    json r = json::array();
    for (char c : row) r.push_back(static_cast<int>(c));
    leq.push_back(std::move(r));
  }
  json hasse = json::array();
  for (auto [a, b] : poset.hasse)
    hasse.push_back(json::array({poset.classes[static_cast<size_t>(a)].id,
                                 poset.classes[static_cast<size_t>(b)].id}));
  json maps = json::object();
  for (const auto& [key, perm] : poset.witness_maps) {
    if (key.first == key.second) continue;
    std::string name = poset.classes[static_cast<size_t>(key.first)].id + "->" +
                       poset.classes[static_cast<size_t>(key.second)].id;
    maps[name] = perm.images;
  }
  auto [mins, maxs] = minimal_maximal(poset);
  auto id_list = [&](const std::vector<int>& v) {
    json arr = json::array();
    for (int i : v) arr.push_back(poset.classes[static_cast<size_t>(i)].id);
    return arr;
  };
  auto graded = is_graded(poset);
  auto lattice = is_lattice(poset);
  json analyses{{"graded", graded.graded},
                {"lattice", lattice.lattice},
                {"minimal", id_list(mins)},
                {"maximal", id_list(maxs)}};
  json classes = json::array();
  for (const auto& cls : poset.classes) {
    json entry{{"id", cls.id}, {"crossings", crossings_to_json(poset.family, cls.crossings)}};
    if (cls.witness) entry["witness"] = witness_to_json(*cls.witness);
    classes.push_back(std::move(entry));
  }
  return json{{"family", kind_name(poset.family.kind)}, {"n", poset.family.n},
              {"class_details", classes},
              {"classes", ids},   {"leq", leq},
              {"hasse", hasse},   {"witness_maps", maps},
              {"analyses", analyses}};
}

inline GeoPoset poset_from_json(const json& j) {
  GraphFamily fam = family_from_json(j);
  GeoPoset poset(fam);
  for (const auto& entry : j.at("class_details")) {
    std::optional<Drawing> wit;
    if (entry.contains("witness")) wit = witness_from_json(entry.at("witness"));
    poset.classes.emplace_back(entry.at("id").get<std::string>(), fam,
                               crossings_from_json(fam, entry.at("crossings")), std::move(wit));
  }
  const auto& leq = j.at("leq");
  poset.leq.assign(poset.classes.size(), std::vector<char>(poset.classes.size(), 0));
  for (size_t a = 0; a < poset.classes.size(); ++a)
    for (size_t b = 0; b < poset.classes.size(); ++b)
      poset.leq[a][b] = leq.at(a).at(b).get<int>() ? 1 : 0;
  for (const auto& e : j.at("hasse")) {
    int a = poset.index_of(e.at(0).get<std::string>());
    int b = poset.index_of(e.at(1).get<std::string>());
    if (a < 0 || b < 0) throw parse_error("hasse edge references unknown class");
    poset.hasse.emplace_back(a, b);
  }
  return poset;
}

}  // namespace geoposet
