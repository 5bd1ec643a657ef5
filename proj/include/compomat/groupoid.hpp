#pragma once

#include "compomat/arrow.hpp"

#include <map>
#include <string>
#include <vector>

namespace compomat {

// The finite body: object ids are dense indices into the name list.
struct Body {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
  const std::string& name(int id) const { return names[static_cast<std::size_t>(id)]; }
};

bool operator==(const Body& a, const Body& b);

enum class Mode { Tabular, MatrixDerived };

// Explicit structure tables for tabular groupoids, on indices into the
// canonically sorted arrow vector.
struct Tables {
  std::vector<int> identity;                  // object id -> arrow index
  std::vector<int> inverse;                   // arrow index -> arrow index
  std::map<std::pair<int, int>, int> compose; // (g, h) with alpha(g) = beta(h) -> g.h
};

class FiniteGroupoid {
public:
  FiniteGroupoid() = default;

  // Arrows are sorted and deduplicated; identity arrows (X -> X, I) are added
  // when missing. Matrix payloads must be invertible.
  static FiniteGroupoid matrix_derived(Body body, std::vector<Arrow> arrows);

  // Arrow list and tables are taken as given (sorted/deduplicated first, with
  // the table indices remapped accordingly). check_axioms decides validity.
  static FiniteGroupoid tabular(Body body, std::vector<Arrow> arrows, Tables tables);

  Mode mode() const { return mode_; }
  const Body& body() const { return body_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return arrows_.size(); }
  const Tables& tables() const { return tables_; }

  int arrow_index(const Arrow& a) const;  // -1 when absent
  bool contains(const Arrow& a) const { return arrow_index(a) >= 0; }

  // g.h applies h first, then g; requires alpha(g) = beta(h).
  Arrow compose(const Arrow& g, const Arrow& h) const;
  Arrow inverse(const Arrow& g) const;
  Arrow identity(int object) const;

  std::vector<Arrow> hom_set(int x, int y) const;
  const std::vector<int>& hom_indices(int x, int y) const;  // indices into arrows()
  const std::vector<int>& alpha_fibre(int x) const;
  const std::vector<int>& beta_fibre(int y) const;

private:
  void build_index();

  Mode mode_ = Mode::MatrixDerived;
  Body body_;
  std::vector<Arrow> arrows_;  // canonically sorted
  Tables tables_;              // tabular mode only
  std::map<std::pair<int, int>, std::vector<int>> hom_;
  std::vector<std::vector<int>> alpha_fibres_, beta_fibres_;
};

struct AxiomViolation {
  std::string axiom;     // "closure", "axiom1-endpoints", "axiom2-associativity",
                         // "axiom3-unit", "axiom4-inverse", "identity-missing"
  std::string offender;  // offending arrow tuple
  std::string explanation;
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
};

// Exhaustive check of closure, the endpoint laws, associativity over all
// composable triples, the unit laws and the inverse laws. Violations are data.
AxiomReport check_axioms(const FiniteGroupoid& g);

enum class OrbitKind { Transitive, TotallyIntransitive, Intermediate };

struct OrbitPartition {
  std::vector<std::vector<int>> classes;  // sorted object ids, classes sorted by first member
  OrbitKind kind = OrbitKind::Intermediate;
};

OrbitPartition orbit_partition(const FiniteGroupoid& g);

// Arrows common to both groupoids over the same body. Tabular inputs must
// agree on their structure tables where they overlap (else ModeMismatch).
FiniteGroupoid intersect(const FiniteGroupoid& g1, const FiniteGroupoid& g2);

// Smallest matrix-derived groupoid containing the seeds, all identities, and
// closed under composition and inversion. Throws Err::ClosureExceedsCap when
// the closure would exceed `cap` arrows (e.g. an infinite generated group).
FiniteGroupoid generate_closure(const Body& body, const std::vector<Arrow>& seeds,
                                std::size_t cap = 10000);

bool is_subgroupoid(const FiniteGroupoid& h, const FiniteGroupoid& g);

std::string arrow_str(const FiniteGroupoid& g, const Arrow& a);

}  // namespace compomat
