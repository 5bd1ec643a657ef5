#pragma once

// Mutation helpers for the axiom-violation tests: rebuild groupoids with one
// deliberate defect.

#include "compomat/groupoid.hpp"

#include <algorithm>

namespace mutate {

using namespace compomat;

// tabular: drop one arrow, restricting the tables (entries touching the
// victim disappear; indices above it shift down)
inline FiniteGroupoid remove_arrow(const FiniteGroupoid& g, const Arrow& victim) {
  int v = g.arrow_index(victim);
  if (v < 0) throw std::runtime_error("victim arrow not present");
  auto remap = [&](int idx) { return idx == v ? -1 : idx > v ? idx - 1 : idx; };
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<int>(i) != v) arrows.push_back(g.arrows()[i]);
  Tables t;
  for (int ii : g.tables().identity) t.identity.push_back(remap(ii));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (static_cast<int>(i) == v) continue;
    t.inverse.push_back(remap(g.tables().inverse[i]));
  }
  for (const auto& [key, val] : g.tables().compose) {
    int gi = remap(key.first), hi = remap(key.second), r = remap(val);
    if (gi < 0 || hi < 0 || r < 0) continue;
    t.compose[{gi, hi}] = r;
  }
  return FiniteGroupoid::tabular(g.body(), std::move(arrows), std::move(t));
}

inline FiniteGroupoid corrupt_compose(const FiniteGroupoid& g, const Arrow& ga, const Arrow& ha,
                                      const Arrow& result) {
  Tables t = g.tables();
  t.compose[{g.arrow_index(ga), g.arrow_index(ha)}] = g.arrow_index(result);
  return FiniteGroupoid::tabular(g.body(), g.arrows(), std::move(t));
}

inline FiniteGroupoid corrupt_identity(const FiniteGroupoid& g, int object, int new_index) {
  Tables t = g.tables();
  t.identity[static_cast<std::size_t>(object)] = new_index;
  return FiniteGroupoid::tabular(g.body(), g.arrows(), std::move(t));
}

inline FiniteGroupoid corrupt_inverse(const FiniteGroupoid& g, const Arrow& a, int new_index) {
  Tables t = g.tables();
  t.inverse[static_cast<std::size_t>(g.arrow_index(a))] = new_index;
  return FiniteGroupoid::tabular(g.body(), g.arrows(), std::move(t));
}

// matrix mode: drop one non-identity arrow (the constructor re-adds identities)
inline FiniteGroupoid remove_matrix_arrow(const FiniteGroupoid& g, const Arrow& victim) {
  std::vector<Arrow> arrows;
  for (const Arrow& a : g.arrows())
    if (!(a == victim)) arrows.push_back(a);
  return FiniteGroupoid::matrix_derived(g.body(), std::move(arrows));
}

inline bool has_violation(const AxiomReport& rep, const std::string& axiom) {
  for (const AxiomViolation& v : rep.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace mutate
