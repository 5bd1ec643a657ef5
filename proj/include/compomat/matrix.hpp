#pragma once

#include "compomat/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace compomat {

// Exact 3x3 rational matrix, row-major. Arrow payloads additionally require a
// nonzero determinant (elements of GL(3,Q)), enforced where arrows are built.
struct Mat3 {
  std::array<Rational, 9> m{};

  static Mat3 identity();
  static Mat3 diag(const Rational& a, const Rational& b, const Rational& c);

  Rational& at(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  const Rational& at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

  bool operator==(const Mat3& o) const { return m == o.m; }
  bool operator!=(const Mat3& o) const { return m != o.m; }
};

// Lexicographic on the nine exact entries; the canonical payload order.
int mat_cmp(const Mat3& a, const Mat3& b);
inline bool operator<(const Mat3& a, const Mat3& b) { return mat_cmp(a, b) < 0; }

Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 mat_transpose(const Mat3& a);
Rational mat_det(const Mat3& a);

// Exact inverse via adjugate over determinant. Throws Err::Singular.
Mat3 mat_inverse(const Mat3& a);

struct MatrixClass {
  bool invertible = false;
  bool orthogonal = false;
  Rational determinant;
  std::optional<int> finite_order;  // least k <= bound with M^k = I
};

// Orthogonality is the exact test Mt*M == I. The default order bound 48 is the
// size of the largest crystallographic point group.
MatrixClass classify_matrix(const Mat3& m, int order_bound = 48);

// "[[a,b,c],[d,e,f],[g,h,i]]" with rat_str entries.
std::string mat_str(const Mat3& m);

}  // namespace compomat
