#pragma once

#include "compomat/square.hpp"

namespace compomat {

struct FlagResult {
  bool value = false;
  std::string witness;  // counterexample when false, summary when true
};

struct IsotropyInclusion {
  int point = 0;
  bool omega2_in_omega1 = false;
  bool omega1_in_omega2 = false;
};

struct CrossCheck {
  std::string id;
  bool lhs = false;         // left side / antecedent, computed independently
  bool rhs = false;         // right side / consequent, computed independently
  bool hypothesis = true;   // standing hypothesis of the proposition
  bool agree = false;       // vacuously true when the hypothesis fails
  std::string note;
};

struct UniformityReport {
  bool standing_hypothesis = false;  // both marginals transitive
  FlagResult uniform;
  FlagResult horizontally_transitive, vertically_transitive;
  FlagResult weak_horizontally_transitive, weak_vertically_transitive;
  FlagResult strongly_uniform;
  FlagResult weakly_uniform_corners, weakly_uniform_midpoint;
  bool identity_filling = false;
  std::vector<IsotropyInclusion> isotropy_inclusions;
  std::vector<CrossCheck> proposition_crosschecks;
};

// All commutative squares of the composite extending the partial one, in
// canonical order. Throws Err::InvalidPartial when the present sides are
// inconsistent or foreign.
std::vector<Square> complete_square(const Composite& c, const PartialSquare& p);

// Horizontal: every (g2, g1, h2) with alpha(g1) = alpha(g2), beta(g1) =
// alpha(h2) satisfies h2.g1.g2^-1 in Omega1. Vertical is the mirror image.
FlagResult is_directionally_transitive(const Composite& c, Direction dir);

// Horizontal: every pair (g2, h2) in Omega2 x Omega2 bounds a commutative
// square with right = g2, left = h2. Vertical is the mirror image.
FlagResult is_weak_directionally_transitive(const Composite& c, Direction dir);

// Every (X, loop g1 in Omega1 at X, g2 in Omega2 from X) completes to a
// commutative square whose top ends at X (so the left side is a loop).
FlagResult is_strongly_uniform(const Composite& c);

enum class WeakVariant { Corners, Midpoint };

// Corners: every (A,B,C,D) in B^4 is the corner tuple of some commutative
// square. Midpoint restricts to B = C.
FlagResult is_weakly_uniform(const Composite& c, WeakVariant variant, int threads = 1);

// Identity-filling containment: for every X, Y there is a commutative square
// with identity bottom and right at X whose left side ends at Y.
bool filling_uniformity_check(const Composite& c);

// Horizontal: h2 . Omega1(X -> Y) . g2 = Omega1(X' -> Y') for every pair
// (g2, h2) of Omega2 arrows (X' = alpha(g2), X = beta(g2), Y = alpha(h2),
// Y' = beta(h2)). Vertical swaps the two materials.
FlagResult isotropy_conjugation_check(const Composite& c, Direction dir);

// Every flag by its own definition-level brute force, plus the proposition
// cross-checks with both sides computed by unrelated code paths.
UniformityReport classify_composite(const Composite& c, int threads = 1);

}  // namespace compomat
