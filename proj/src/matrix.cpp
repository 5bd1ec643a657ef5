#include "compomat/matrix.hpp"

#include "compomat/error.hpp"

namespace compomat {

Mat3 Mat3::identity() {
  Mat3 r;
  r.at(0, 0) = 1;
  r.at(1, 1) = 1;
  r.at(2, 2) = 1;
  return r;
}

Mat3 Mat3::diag(const Rational& a, const Rational& b, const Rational& c) {
  Mat3 r;
  r.at(0, 0) = a;
  r.at(1, 1) = b;
  r.at(2, 2) = c;
  return r;
}

int mat_cmp(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 9; ++i) {
    const auto& x = a.m[static_cast<std::size_t>(i)];
    const auto& y = b.m[static_cast<std::size_t>(i)];
    if (x < y) return -1;
    if (y < x) return 1;
  }
  return 0;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = a.at(i, 0) * b.at(0, j);
      s += a.at(i, 1) * b.at(1, j);
      s += a.at(i, 2) * b.at(2, j);
      r.at(i, j) = s;
    }
  return r;
}

Mat3 mat_transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = a.at(j, i);
  return r;
}

Rational mat_det(const Mat3& a) {
  return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
         a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
         a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

Mat3 mat_inverse(const Mat3& a) {
  Rational d = mat_det(a);
  if (d == 0) fail(Err::Singular, "matrix has zero determinant: " + mat_str(a));
  Mat3 r;  // adjugate transposed over det
  r.at(0, 0) = (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) / d;
  r.at(0, 1) = (a.at(0, 2) * a.at(2, 1) - a.at(0, 1) * a.at(2, 2)) / d;
  r.at(0, 2) = (a.at(0, 1) * a.at(1, 2) - a.at(0, 2) * a.at(1, 1)) / d;
  r.at(1, 0) = (a.at(1, 2) * a.at(2, 0) - a.at(1, 0) * a.at(2, 2)) / d;
  r.at(1, 1) = (a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0)) / d;
  r.at(1, 2) = (a.at(0, 2) * a.at(1, 0) - a.at(0, 0) * a.at(1, 2)) / d;
  r.at(2, 0) = (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0)) / d;
  r.at(2, 1) = (a.at(0, 1) * a.at(2, 0) - a.at(0, 0) * a.at(2, 1)) / d;
  r.at(2, 2) = (a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0)) / d;
  return r;
}

MatrixClass classify_matrix(const Mat3& m, int order_bound) {
  MatrixClass c;
  c.determinant = mat_det(m);
  c.invertible = c.determinant != 0;
  c.orthogonal = mat_mul(mat_transpose(m), m) == Mat3::identity();
  if (c.invertible) {
    Mat3 p = m;
    const Mat3 id = Mat3::identity();
    for (int k = 1; k <= order_bound; ++k) {
      if (p == id) {
        c.finite_order = k;
        break;
      }
      p = mat_mul(p, m);
    }
  }
  return c;
}

std::string mat_str(const Mat3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) {
      if (j) s += ',';
      s += rat_str(m.at(i, j));
    }
    s += ']';
  }
  s += ']';
  return s;
}

}  // namespace compomat
