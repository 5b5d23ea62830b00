#pragma once

// Reference classification data for the small families: class catalogs with
// their published ids, cover-edge lists, the K6 parameter table, the known
// non-identity homomorphism witnesses, and the K6 nonprecedence table.

#include "geoposet/family.hpp"
#include "geoposet/poset.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geoposet::catalog {

/// Catalog class for paths/cycles: crossing pairs as 1-based edge numbers.
struct CatalogClass {
  const char* id;
  std::vector<std::array<int, 2>> pairs;
};

/// Catalog class for cliques: each crossing pair as vertex pairs u1v1 x u2v2.
struct CatalogCliqueClass {
  const char* id;
  std::vector<std::array<int, 4>> pairs;
};

struct CatalogProfile {
  const char* id;
  int cr;
  int e0;
  int omega;
  std::array<int, 6> d0;
  std::array<int, 6> m;
};

struct CatalogWitnessMap {
  const char* src;
  const char* dst;
  std::array<int, 6> map;
};

/// How an ordered pair of K6 classes relates: a cover edge, related via a
/// composition of covers, or unrelated with the recorded obstruction kind.
/// NeedsSearch marks the pair whose nonprecedence no parameter certifies.
enum class Rel { Cover, Composed, E0Count, G0Subgraph, ConvexCliqueNumber, D0Vector, MVector, NeedsSearch };

struct CatalogRelation {
  const char* src;
  const char* dst;
  Rel rel;
};

inline CrossingSet to_crossing_set(const GraphFamily& fam, const CatalogClass& c) {
  std::vector<EdgePair> pairs;
  for (const auto& p : c.pairs) pairs.emplace_back(p[0] - 1, p[1] - 1);
  return make_crossing_set(fam, std::move(pairs));
}

inline CrossingSet to_crossing_set(const GraphFamily& fam, const CatalogCliqueClass& c) {
  std::vector<EdgePair> pairs;
  for (const auto& p : c.pairs)
    pairs.emplace_back(fam.edge_index(p[0], p[1]), fam.edge_index(p[2], p[3]));
  return make_crossing_set(fam, std::move(pairs));
}

inline const std::vector<CatalogClass>& p5_classes() {
  static const std::vector<CatalogClass> v = {
      {"0.1", {}},
      {"1.1", {{1, 3}}},
      {"1.2", {{1, 4}}},
      {"2.1", {{1, 3}, {1, 4}}},
      {"3.1", {{1, 3}, {1, 4}, {2, 4}}},
  };
  return v;
}

inline const std::vector<CatalogClass>& p6_classes() {
  static const std::vector<CatalogClass> v = {
      {"0.1", {}},
      {"1.1", {{1, 3}}},
      {"1.2", {{1, 4}}},
      {"1.3", {{1, 5}}},
      {"1.4", {{2, 4}}},
      {"2.1", {{1, 3}, {1, 4}}},
      {"2.2", {{1, 3}, {1, 5}}},
      {"2.3", {{1, 3}, {2, 5}}},
      {"2.4", {{1, 3}, {3, 5}}},
      {"2.5", {{1, 4}, {1, 5}}},
      {"2.6", {{1, 4}, {2, 4}}},
      {"2.7", {{1, 4}, {2, 5}}},
      {"2.8", {{1, 5}, {2, 4}}},
      {"3.1", {{1, 3}, {1, 4}, {1, 5}}},
      {"3.2", {{1, 3}, {1, 4}, {2, 4}}},
      {"3.3", {{1, 3}, {1, 4}, {2, 5}}},
      {"3.4", {{1, 3}, {1, 4}, {3, 5}}},
      {"3.5", {{1, 3}, {1, 5}, {2, 5}}},
      {"3.6", {{1, 3}, {1, 5}, {3, 5}}},
      {"3.7", {{1, 4}, {1, 5}, {2, 4}}},
      {"3.8", {{1, 4}, {1, 5}, {2, 5}}},
      {"3.9", {{1, 4}, {2, 4}, {2, 5}}},
      {"4.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}}},
      {"4.2", {{1, 3}, {1, 4}, {1, 5}, {2, 5}}},
      {"4.3", {{1, 3}, {1, 4}, {1, 5}, {3, 5}}},
      {"4.4", {{1, 3}, {1, 4}, {2, 4}, {2, 5}}},
      {"4.5", {{1, 3}, {1, 4}, {2, 5}, {3, 5}}},
      {"4.6", {{1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"5.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"5.2", {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}},
      {"6.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}},
  };
  return v;
}

inline const std::vector<CatalogClass>& c5_classes() {
  static const std::vector<CatalogClass> v = {
      {"0.1", {}},
      {"1.1", {{1, 3}}},
      {"2.1", {{1, 3}, {1, 4}}},
      {"3.1", {{1, 3}, {1, 4}, {2, 4}}},
      {"5.1", {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}},
  };
  return v;
}

inline const std::vector<CatalogClass>& c6_classes() {
  static const std::vector<CatalogClass> v = {
      {"0.1", {}},
      {"1.1", {{1, 3}}},
      {"1.2", {{1, 4}}},
      {"2.1", {{1, 3}, {1, 4}}},
      {"2.2", {{1, 3}, {1, 5}}},
      {"2.3", {{1, 3}, {4, 6}}},
      {"3.1", {{1, 3}, {1, 4}, {1, 5}}},
      {"3.2", {{1, 3}, {1, 4}, {2, 4}}},
      {"3.3", {{1, 3}, {1, 4}, {2, 5}}},
      {"3.4", {{1, 3}, {1, 4}, {3, 5}}},
      {"3.5", {{1, 3}, {1, 4}, {3, 6}}},
      {"3.6", {{1, 3}, {1, 4}, {4, 6}}},
      {"3.7", {{1, 3}, {1, 5}, {3, 5}}},
      {"3.8", {{1, 4}, {2, 5}, {3, 6}}},
      {"4.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}}},
      {"4.2", {{1, 3}, {1, 4}, {1, 5}, {2, 5}}},
      {"4.3", {{1, 3}, {1, 4}, {1, 5}, {3, 5}}},
      {"4.4", {{1, 3}, {1, 4}, {2, 5}, {3, 5}}},
      {"4.5", {{1, 3}, {1, 4}, {3, 6}, {4, 6}}},
      {"5.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"5.2", {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}}},
      {"5.3", {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}}},
      {"5.4", {{1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}}},
      {"6.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}},
      {"6.2", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 6}}},
      {"7.1", {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 6}}},
  };
  return v;
}

inline const std::vector<CatalogCliqueClass>& k5_classes() {
  static const std::vector<CatalogCliqueClass> v = {
      {"1.1", {{2, 4, 3, 5}}},
      {"3.1", {{1, 4, 2, 5}, {1, 4, 3, 5}, {2, 4, 3, 5}}},
      {"5.1", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 4, 2, 5}, {1, 4, 3, 5}, {2, 4, 3, 5}}},
  };
  return v;
}

inline const std::vector<CatalogCliqueClass>& k6_classes() {
  static const std::vector<CatalogCliqueClass> v = {
      {"3.1", {{1, 3, 2, 6}, {1, 4, 2, 5}, {3, 5, 4, 6}}},
      {"4.1", {{1, 3, 2, 6}, {1, 4, 3, 5}, {1, 4, 5, 6}, {3, 5, 4, 6}}},
      {"5.1", {{1, 3, 2, 4}, {1, 3, 2, 6}, {1, 4, 2, 6}, {1, 4, 3, 6}, {2, 4, 3, 6}}},
      {"5.2", {{1, 3, 2, 6}, {1, 4, 2, 6}, {1, 4, 3, 5}, {1, 4, 3, 6}, {3, 5, 4, 6}}},
      {"6.1", {{1, 4, 2, 5}, {1, 4, 2, 6}, {1, 4, 3, 6}, {2, 4, 3, 6}, {2, 5, 3, 6}, {2, 5, 4, 6}}},
      {"7.1", {{1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 3, 5}, {1, 4, 5, 6}, {1, 6, 2, 5}, {3, 5, 4, 6}}},
      {"7.2", {{1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 3, 5}, {1, 5, 4, 6}, {2, 4, 3, 5}, {2, 5, 4, 6}, {3, 5, 4, 6}}},
      {"8.1", {{1, 3, 2, 4}, {1, 3, 2, 6}, {1, 4, 3, 5}, {1, 4, 5, 6}, {1, 6, 2, 4}, {2, 4, 3, 5}, {2, 4, 5, 6}, {3, 5, 4, 6}}},
      {"8.2", {{1, 3, 2, 4}, {1, 3, 2, 6}, {1, 4, 2, 6}, {1, 4, 3, 6}, {1, 5, 2, 6}, {1, 5, 3, 6}, {1, 5, 4, 6}, {2, 4, 3, 6}}},
      {"9.1", {{1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 2, 6}, {1, 4, 3, 5}, {1, 4, 3, 6}, {2, 5, 3, 6}, {2, 5, 4, 6}, {3, 5, 4, 6}}},
      {"9.2", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 2, 6}, {1, 4, 3, 6}, {2, 4, 3, 6}, {2, 5, 3, 6}, {2, 5, 4, 6}}},
      {"10.1", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 3, 5}, {1, 4, 5, 6}, {1, 6, 2, 5}, {2, 4, 3, 5}, {2, 4, 3, 6}, {3, 5, 4, 6}}},
      {"11.1", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 3, 5}, {1, 4, 5, 6}, {1, 6, 2, 4}, {1, 6, 2, 5}, {2, 4, 3, 5}, {2, 4, 5, 6}, {3, 5, 4, 6}}},
      {"12.1", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 2, 6}, {1, 4, 3, 5}, {1, 4, 3, 6}, {2, 4, 3, 5}, {2, 4, 3, 6}, {2, 5, 3, 6}, {2, 5, 4, 6}, {3, 5, 4, 6}}},
      {"15.1", {{1, 3, 2, 4}, {1, 3, 2, 5}, {1, 3, 2, 6}, {1, 4, 2, 5}, {1, 4, 2, 6}, {1, 4, 3, 5}, {1, 4, 3, 6}, {1, 5, 2, 6}, {1, 5, 3, 6}, {1, 5, 4, 6}, {2, 4, 3, 5}, {2, 4, 3, 6}, {2, 5, 3, 6}, {2, 5, 4, 6}, {3, 5, 4, 6}}},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& p5_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"0.1", "1.1"}, {"0.1", "1.2"}, {"1.1", "2.1"}, {"1.2", "2.1"},
      {"2.1", "3.1"},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& p6_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"0.1", "1.1"}, {"0.1", "1.2"}, {"0.1", "1.3"}, {"0.1", "1.4"},
      {"1.1", "2.1"}, {"1.1", "2.2"}, {"1.1", "2.3"}, {"1.1", "2.4"},
      {"1.2", "2.1"}, {"1.2", "2.3"}, {"1.2", "2.5"}, {"1.2", "2.6"},
      {"1.2", "2.7"}, {"1.3", "2.2"}, {"1.3", "2.5"}, {"1.3", "2.8"},
      {"1.4", "2.6"}, {"1.4", "2.8"}, {"2.1", "3.1"}, {"2.1", "3.2"},
      {"2.1", "3.3"}, {"2.1", "3.4"}, {"2.2", "3.1"}, {"2.2", "3.5"},
      {"2.2", "3.6"}, {"2.3", "3.3"}, {"2.3", "3.4"}, {"2.3", "3.5"},
      {"2.4", "3.4"}, {"2.4", "3.6"}, {"2.5", "3.1"}, {"2.5", "3.5"},
      {"2.5", "3.7"}, {"2.5", "3.8"}, {"2.6", "3.2"}, {"2.6", "3.7"},
      {"2.6", "3.9"}, {"2.7", "3.3"}, {"2.7", "3.8"}, {"2.7", "3.9"},
      {"2.8", "3.7"}, {"3.1", "4.1"}, {"3.1", "4.2"}, {"3.1", "4.3"},
      {"3.2", "4.1"}, {"3.2", "4.4"}, {"3.3", "4.2"}, {"3.3", "4.4"},
      {"3.3", "4.5"}, {"3.4", "4.3"}, {"3.4", "4.5"}, {"3.5", "4.2"},
      {"3.5", "4.3"}, {"3.6", "4.3"}, {"3.7", "4.1"}, {"3.7", "4.6"},
      {"3.8", "4.2"}, {"3.8", "4.6"}, {"3.9", "4.4"}, {"3.9", "4.6"},
      {"4.1", "5.1"}, {"4.2", "5.1"}, {"4.3", "6.1"}, {"4.4", "5.1"},
      {"4.4", "5.2"}, {"4.5", "5.2"}, {"4.6", "5.1"}, {"5.1", "6.1"},
      {"5.2", "6.1"},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& c5_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"0.1", "1.1"}, {"1.1", "2.1"}, {"2.1", "3.1"}, {"3.1", "5.1"},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& c6_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"0.1", "1.1"}, {"0.1", "1.2"}, {"1.1", "2.1"}, {"1.1", "2.2"},
      {"1.1", "2.3"}, {"1.2", "2.1"}, {"1.2", "3.8"}, {"2.1", "3.1"},
      {"2.1", "3.2"}, {"2.1", "3.3"}, {"2.1", "3.4"}, {"2.1", "3.5"},
      {"2.1", "3.6"}, {"2.2", "3.1"}, {"2.2", "3.4"}, {"2.2", "3.7"},
      {"2.3", "3.6"}, {"3.1", "4.1"}, {"3.1", "4.2"}, {"3.1", "4.3"},
      {"3.2", "4.1"}, {"3.2", "5.2"}, {"3.2", "5.3"}, {"3.3", "4.2"},
      {"3.3", "4.4"}, {"3.3", "5.3"}, {"3.3", "5.4"}, {"3.4", "4.2"},
      {"3.4", "4.3"}, {"3.4", "4.4"}, {"3.5", "4.2"}, {"3.5", "4.5"},
      {"3.5", "5.2"}, {"3.5", "5.3"}, {"3.6", "4.1"}, {"3.6", "4.5"},
      {"3.7", "4.3"}, {"3.8", "5.3"}, {"3.8", "5.4"}, {"4.1", "5.1"},
      {"4.2", "5.1"}, {"4.3", "6.1"}, {"4.4", "5.2"}, {"4.4", "6.2"},
      {"4.5", "5.1"}, {"4.5", "5.4"}, {"5.1", "6.1"}, {"5.1", "6.2"},
      {"5.2", "6.1"}, {"5.3", "6.2"}, {"5.4", "6.2"}, {"6.2", "7.1"},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& k5_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"1.1", "3.1"}, {"3.1", "5.1"},
  };
  return v;
}

inline const std::vector<std::pair<const char*, const char*>>& k6_hasse() {
  static const std::vector<std::pair<const char*, const char*>> v = {
      {"3.1", "7.1"}, {"3.1", "7.2"}, {"3.1", "8.1"}, {"3.1", "9.1"},
      {"4.1", "7.1"}, {"4.1", "7.2"}, {"4.1", "8.1"}, {"4.1", "8.2"},
      {"4.1", "9.2"}, {"5.1", "8.2"}, {"5.1", "9.2"}, {"5.1", "10.1"},
      {"5.2", "8.1"}, {"5.2", "8.2"}, {"5.2", "9.1"}, {"6.1", "9.2"},
      {"7.1", "10.1"}, {"7.1", "11.1"}, {"7.2", "15.1"}, {"8.1", "11.1"},
      {"8.2", "11.1"}, {"8.2", "12.1"}, {"9.1", "12.1"}, {"9.2", "12.1"},
      {"12.1", "15.1"},
  };
  return v;
}

inline const std::vector<CatalogProfile>& k6_profiles() {
  static const std::vector<CatalogProfile> v = {
      {"3.1", 3, 9, 4, {3, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 1}},
      {"4.1", 4, 9, 4, {4, 3, 3, 3, 3, 2}, {2, 2, 2, 2, 1, 1}},
      {"5.1", 5, 10, 5, {5, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 0}},
      {"5.2", 5, 9, 4, {4, 4, 3, 3, 2, 2}, {3, 3, 2, 2, 2, 2}},
      {"6.1", 6, 9, 4, {4, 4, 4, 2, 2, 2}, {3, 3, 3, 3, 3, 3}},
      {"7.1", 7, 7, 4, {3, 3, 3, 2, 2, 1}, {3, 3, 3, 3, 2, 1}},
      {"7.2", 7, 7, 4, {3, 3, 2, 2, 2, 2}, {3, 3, 3, 3, 2, 2}},
      {"8.1", 8, 7, 4, {3, 3, 3, 2, 2, 1}, {4, 4, 3, 3, 2, 2}},
      {"8.2", 8, 8, 5, {4, 3, 3, 2, 2, 2}, {3, 3, 3, 3, 3, 2}},
      {"9.1", 9, 8, 4, {3, 3, 3, 3, 2, 2}, {4, 4, 4, 4, 2, 2}},
      {"9.2", 9, 8, 5, {4, 3, 3, 2, 2, 2}, {4, 4, 3, 3, 3, 3}},
      {"10.1", 10, 5, 5, {2, 2, 2, 2, 2, 0}, {3, 3, 3, 3, 3, 1}},
      {"11.1", 11, 6, 5, {3, 2, 2, 2, 2, 1}, {4, 4, 3, 3, 3, 2}},
      {"12.1", 12, 7, 5, {3, 3, 2, 2, 2, 2}, {4, 4, 4, 4, 3, 3}},
      {"15.1", 15, 6, 6, {2, 2, 2, 2, 2, 2}, {4, 4, 4, 4, 4, 4}},
  };
  return v;
}

inline const std::vector<CatalogWitnessMap>& k6_witness_maps() {
  static const std::vector<CatalogWitnessMap> v = {
      {"3.1", "8.1", {1, 6, 3, 4, 5, 2}},
      {"4.1", "7.2", {3, 6, 1, 5, 4, 2}},
      {"4.1", "8.2", {6, 5, 2, 3, 4, 1}},
      {"4.1", "9.2", {1, 5, 3, 4, 6, 2}},
      {"5.1", "10.1", {1, 2, 3, 4, 6, 5}},
      {"5.2", "8.1", {2, 3, 6, 4, 5, 1}},
      {"5.2", "8.2", {6, 5, 4, 3, 2, 1}},
      {"8.2", "11.1", {1, 5, 4, 6, 3, 2}},
      {"8.2", "12.1", {3, 2, 1, 6, 5, 4}},
  };
  return v;
}

inline const std::vector<CatalogRelation>& k6_relation_table() {
  static const std::vector<CatalogRelation> v = {
      {"3.1", "4.1", Rel::D0Vector},
      {"3.1", "5.1", Rel::E0Count},
      {"3.1", "5.2", Rel::D0Vector},
      {"3.1", "6.1", Rel::D0Vector},
      {"3.1", "7.1", Rel::Cover},
      {"3.1", "7.2", Rel::Cover},
      {"3.1", "8.1", Rel::Cover},
      {"3.1", "8.2", Rel::D0Vector},
      {"3.1", "9.1", Rel::Cover},
      {"3.1", "9.2", Rel::D0Vector},
      {"3.1", "10.1", Rel::Composed},
      {"3.1", "11.1", Rel::Composed},
      {"3.1", "12.1", Rel::Composed},
      {"3.1", "15.1", Rel::Composed},
      {"4.1", "5.1", Rel::E0Count},
      {"4.1", "5.2", Rel::D0Vector},
      {"4.1", "6.1", Rel::D0Vector},
      {"4.1", "7.1", Rel::Cover},
      {"4.1", "7.2", Rel::Cover},
      {"4.1", "8.1", Rel::Cover},
      {"4.1", "8.2", Rel::Cover},
      {"4.1", "9.1", Rel::G0Subgraph},
      {"4.1", "9.2", Rel::Cover},
      {"4.1", "10.1", Rel::Composed},
      {"4.1", "11.1", Rel::Composed},
      {"4.1", "12.1", Rel::Composed},
      {"4.1", "15.1", Rel::Composed},
      {"5.1", "5.2", Rel::ConvexCliqueNumber},
      {"5.1", "6.1", Rel::ConvexCliqueNumber},
      {"5.1", "7.1", Rel::ConvexCliqueNumber},
      {"5.1", "7.2", Rel::ConvexCliqueNumber},
      {"5.1", "8.1", Rel::ConvexCliqueNumber},
      {"5.1", "8.2", Rel::Cover},
      {"5.1", "9.1", Rel::ConvexCliqueNumber},
      {"5.1", "9.2", Rel::Cover},
      {"5.1", "10.1", Rel::Cover},
      {"5.1", "11.1", Rel::Composed},
      {"5.1", "12.1", Rel::Composed},
      {"5.1", "15.1", Rel::Composed},
      {"5.2", "5.1", Rel::E0Count},
      {"5.2", "6.1", Rel::D0Vector},
      {"5.2", "7.1", Rel::MVector},
      {"5.2", "7.2", Rel::NeedsSearch},
      {"5.2", "8.1", Rel::Cover},
      {"5.2", "8.2", Rel::Cover},
      {"5.2", "9.1", Rel::Cover},
      {"5.2", "9.2", Rel::G0Subgraph},
      {"5.2", "10.1", Rel::MVector},
      {"5.2", "11.1", Rel::Composed},
      {"5.2", "12.1", Rel::Composed},
      {"5.2", "15.1", Rel::Composed},
      {"6.1", "7.1", Rel::MVector},
      {"6.1", "7.2", Rel::MVector},
      {"6.1", "8.1", Rel::MVector},
      {"6.1", "8.2", Rel::MVector},
      {"6.1", "9.1", Rel::D0Vector},
      {"6.1", "9.2", Rel::Cover},
      {"6.1", "10.1", Rel::MVector},
      {"6.1", "11.1", Rel::MVector},
      {"6.1", "12.1", Rel::Composed},
      {"6.1", "15.1", Rel::Composed},
      {"7.1", "7.2", Rel::D0Vector},
      {"7.1", "8.1", Rel::G0Subgraph},
      {"7.1", "8.2", Rel::E0Count},
      {"7.1", "9.1", Rel::E0Count},
      {"7.1", "9.2", Rel::E0Count},
      {"7.1", "10.1", Rel::Cover},
      {"7.1", "11.1", Rel::Cover},
      {"7.1", "12.1", Rel::D0Vector},
      {"7.1", "15.1", Rel::D0Vector},
      {"7.2", "7.1", Rel::MVector},
      {"7.2", "8.1", Rel::D0Vector},
      {"7.2", "8.2", Rel::E0Count},
      {"7.2", "9.1", Rel::E0Count},
      {"7.2", "9.2", Rel::E0Count},
      {"7.2", "10.1", Rel::MVector},
      {"7.2", "11.1", Rel::G0Subgraph},
      {"7.2", "12.1", Rel::G0Subgraph},
      {"7.2", "15.1", Rel::Cover},
      {"8.1", "8.2", Rel::E0Count},
      {"8.1", "9.1", Rel::E0Count},
      {"8.1", "9.2", Rel::E0Count},
      {"8.1", "10.1", Rel::MVector},
      {"8.1", "11.1", Rel::Cover},
      {"8.1", "12.1", Rel::G0Subgraph},
      {"8.1", "15.1", Rel::G0Subgraph},
      {"8.2", "8.1", Rel::MVector},
      {"8.2", "9.1", Rel::ConvexCliqueNumber},
      {"8.2", "9.2", Rel::G0Subgraph},
      {"8.2", "10.1", Rel::MVector},
      {"8.2", "11.1", Rel::Cover},
      {"8.2", "12.1", Rel::Cover},
      {"8.2", "15.1", Rel::Composed},
      {"9.1", "9.2", Rel::MVector},
      {"9.1", "10.1", Rel::MVector},
      {"9.1", "11.1", Rel::MVector},
      {"9.1", "12.1", Rel::Cover},
      {"9.1", "15.1", Rel::Composed},
      {"9.2", "9.1", Rel::ConvexCliqueNumber},
      {"9.2", "10.1", Rel::MVector},
      {"9.2", "11.1", Rel::MVector},
      {"9.2", "12.1", Rel::Cover},
      {"9.2", "15.1", Rel::Composed},
      {"10.1", "11.1", Rel::E0Count},
      {"10.1", "12.1", Rel::E0Count},
      {"10.1", "15.1", Rel::E0Count},
      {"11.1", "12.1", Rel::E0Count},
      {"11.1", "15.1", Rel::G0Subgraph},
      {"12.1", "15.1", Rel::Cover},
  };
  return v;
}

/// Published ids for a family, as (id, canonical set) pairs, or empty when
/// the family has no catalog.
inline std::vector<std::pair<std::string, CrossingSet>> id_map(const GraphFamily& fam) {
  std::vector<std::pair<std::string, CrossingSet>> out;
  auto add_pc = [&](const std::vector<CatalogClass>& cat) {
    for (const auto& c : cat)
      out.emplace_back(c.id, canonical_form(fam, to_crossing_set(fam, c)));
  };
  auto add_kq = [&](const std::vector<CatalogCliqueClass>& cat) {
    for (const auto& c : cat)
      out.emplace_back(c.id, canonical_form(fam, to_crossing_set(fam, c)));
  };
  if (fam.kind == Kind::Path && fam.n == 5) add_pc(p5_classes());
  if (fam.kind == Kind::Path && fam.n == 6) add_pc(p6_classes());
  if (fam.kind == Kind::Cycle && fam.n == 5) add_pc(c5_classes());
  if (fam.kind == Kind::Cycle && fam.n == 6) add_pc(c6_classes());
  if (fam.kind == Kind::Clique && fam.n == 5) add_kq(k5_classes());
  if (fam.kind == Kind::Clique && fam.n == 6) add_kq(k6_classes());
  // families whose catalogs are trivial chains
  if (fam.kind == Kind::Path && fam.n >= 2 && fam.n <= 4) {
    out.emplace_back("0.1", CrossingSet{});
    if (fam.n == 4) out.emplace_back("1.1", make_crossing_set(fam, {EdgePair(0, 2)}));
  }
  if (fam.kind == Kind::Cycle && (fam.n == 3 || fam.n == 4)) {
    out.emplace_back("0.1", CrossingSet{});
    if (fam.n == 4) out.emplace_back("1.1", make_crossing_set(fam, {EdgePair(0, 2)}));
  }
  if (fam.kind == Kind::Clique && fam.n == 3) out.emplace_back("0.1", CrossingSet{});
  if (fam.kind == Kind::Clique && fam.n == 4) {
    out.emplace_back("0.1", CrossingSet{});
    GraphFamily k4 = GraphFamily::clique(4);
    out.emplace_back("1.1", make_crossing_set(
        k4, {EdgePair(k4.edge_index(1, 3), k4.edge_index(2, 4))}));
  }
  return out;
}

/// Id for a canonical set under the published naming, falling back to
/// "cr.k" assigned in sorted order within each crossing count.
inline std::string class_id(const GraphFamily& fam, const CrossingSet& canon,
                            const std::vector<CrossingSet>& all_sorted) {
  for (const auto& [id, set] : id_map(fam))
    if (set == canon) return id;
  int k = 0;
  for (const auto& s : all_sorted) {
    if (s.size() == canon.size()) ++k;
    if (s == canon) break;
  }
  return std::to_string(canon.size()) + "." + std::to_string(k);
}

}  // namespace geoposet::catalog
