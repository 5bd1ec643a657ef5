#pragma once

#include "compomat/material.hpp"

#include <array>

namespace compomat {

// A consistent square of the coarse double groupoid over (Omega1, Omega2):
// bottom/top from Omega1, right/left from Omega2, with corners
//   A = alpha(bottom) = alpha(right)    B = beta(bottom) = alpha(left)
//   C = beta(right)   = alpha(top)      D = beta(top)    = beta(left)
struct Square {
  Arrow bottom, top, right, left;
};

int square_cmp(const Square& a, const Square& b);
inline bool operator==(const Square& a, const Square& b) { return square_cmp(a, b) == 0; }
inline bool operator<(const Square& a, const Square& b) { return square_cmp(a, b) < 0; }

struct PartialSquare {
  std::optional<Arrow> bottom, top, right, left;
};

struct SquareSet {
  std::vector<Square> squares;  // canonically ordered
  bool commutative_only = false;
};

enum class Direction { Horizontal, Vertical };

// Validates membership of the sides and the four corner conditions.
// Throws Err::WrongGroupoid / Err::CornerMismatch.
Square make_square(const Composite& c, const Arrow& bottom, const Arrow& top, const Arrow& right,
                   const Arrow& left);

// left.bottom = top.right in the ambient.
bool is_commutative(const Composite& c, const Square& sq);

// The four equivalent phrasings of commutativity, evaluated independently
// (they must always agree; the test suites check that they do).
std::array<bool, 4> equivalent_conditions(const Composite& c, const Square& sq);

// Gluing along the shared vertical side right(sq) = left(sq2); the horizontal
// sides compose. Throws Err::NotComposableVertically.
Square vertical_product(const Composite& c, const Square& sq, const Square& sq2);

// Gluing along the shared horizontal side bottom(sq) = top(sq2); the vertical
// sides compose. Throws Err::NotComposableHorizontally.
Square horizontal_product(const Composite& c, const Square& sq, const Square& sq2);

// Horizontal: top = bottom = arrow (from Omega1), identity verticals.
// Vertical: left = right = arrow (from Omega2), identity horizontals.
Square unit_square(const Composite& c, Direction dir, const Arrow& arrow);

// Horizontal: swaps the horizontal sides and inverts the vertical ones (the
// inverse for the horizontal product). Vertical: the mirror image.
Square invert_square(const Composite& c, const Square& sq, Direction dir);

// (gq v hq) h (aq v bq) == (gq h aq) v (hq h bq) for a 2x2 block
//     gq hq
//     aq bq
// with matching inner edges. Throws Err::NotComposableBlock.
bool interchange_check(const Composite& c, const Square& gq, const Square& hq, const Square& aq,
                       const Square& bq);

// All consistent squares (all commutative ones when flagged), canonically
// ordered. Throws Err::SizeCap past `cap` squares.
SquareSet enumerate_squares(const Composite& c, bool commutative_only,
                            std::size_t cap = 1000000, int threads = 1);

// The core of the commutative-square double groupoid: squares with identity
// bottom and right, i.e. pairs (top, left) over common endpoints, composed by
// (K1 v unit_h(top(K2))) h K2. Returned as a tabular groupoid.
FiniteGroupoid core_groupoid(const Composite& c);

std::string square_str(const Composite& c, const Square& sq);

}  // namespace compomat
