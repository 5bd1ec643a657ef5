#pragma once

#include "compomat/material.hpp"

#include <array>
#include <cstdint>

namespace compomat {

// One arrow per ordered pair of points, composing as (c,b).(a,c) = (a,b).
FiniteGroupoid pair_groupoid(int n);

struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> product;  // product[i][j] = index of e_i * e_j
};

// A group as a groupoid over a single point. Throws Err::NotAGroup when the
// table is not a group.
FiniteGroupoid group_as_groupoid(const GroupTable& t);

GroupTable cyclic_group_table(int n);

// Two crystalline solids over one body: isotropy <g> resp. <h> (both of order
// exactly 3 so each point carries three material symmetries), hom-sets
// transport(X,Y).{I,g,g^2} resp. .{I,h,h^2} with one shared transport system.
struct CrystallineParams {
  int n_points = 3;
  Mat3 g, h;
  std::map<std::pair<int, int>, Mat3> transports;  // absent entries default to I
};

CrystallineParams crystalline_default();  // g = 3-cycle A, h = signed 3-cycle S, 3 points
Composite crystalline_composite(const CrystallineParams& p);

// Triclinic crystals: trivial isotropy, hom-sets are the singletons
// P_i(Y)^-1 . P_i(X).
struct TriclinicParams {
  std::vector<Mat3> p1, p2;  // implants, one matrix per point

  int n_points() const { return static_cast<int>(p1.size()); }
};

TriclinicParams triclinic_default();  // P1 = (I,I,I), P2 = (I, A, A^2)
Composite triclinic_composite(const TriclinicParams& p);

struct CommutingCheck {
  bool holds = true;
  std::array<int, 3> failing_triple{-1, -1, -1};
};

// The displayed commuting identity for all triples (X,Y,Z), optionally only
// pairwise-distinct ones.
CommutingCheck check_commuting_condition(const TriclinicParams& p, bool distinct_only);

struct TriclinicFinding {
  std::vector<int> profile;  // P2(X) ids into signed_permutations(), P1 = I
  bool commuting_distinct = false;
  bool commuting_all = false;
  bool uniform = false;
  bool completely_non_uniform = false;  // no shared arrows between distinct points
  bool weak_corners = false;
  bool weak_midpoint = false;
  bool realizes_paper_claim = false;    // completely non uniform && weak corners
};

struct TriclinicSearchReport {
  int n_points = 0;
  std::uint64_t instances_scanned = 0;
  std::uint64_t distinct_condition_holders = 0;  // including constant (Omega1 = Omega2) profiles
  std::vector<TriclinicFinding> findings;        // the nonconstant holders, canonically ordered
  bool any_realizes_paper_claim = false;
};

// Exhaustive scan over signed-permutation implant profiles with P1 = I and
// P2(first) = I (every implant pair is gauge-equivalent to such a profile
// without changing any reported flag).
TriclinicSearchReport triclinic_search(int n_points);

struct MatrixGroup {
  std::string name;
  std::vector<Mat3> elements;  // closed, sorted, containing I
};

// Finite subgroups of the signed permutations used by the random generator.
const std::vector<MatrixGroup>& default_group_pool();

// Deterministic-in-seed composite: per-material isotropy group drawn from the
// pool, conjugated along shared or independent transports. Both marginals are
// transitive by construction.
Composite random_composite(std::uint64_t seed);
Composite random_composite(std::uint64_t seed, int n_points, const std::vector<MatrixGroup>& pool);

}  // namespace compomat
