#pragma once

#include "compomat/matrix.hpp"

#include <string>
#include <variant>

namespace compomat {

// Arrow payload: a label for table-defined groupoids, or an invertible exact
// matrix for jet-realized ones. Labels order before matrices.
struct Payload {
  std::variant<std::string, Mat3> v;

  Payload() : v(std::string()) {}
  explicit Payload(std::string label) : v(std::move(label)) {}
  explicit Payload(Mat3 m) : v(std::move(m)) {}

  bool is_label() const { return v.index() == 0; }
  bool is_matrix() const { return v.index() == 1; }
  const std::string& label() const { return std::get<0>(v); }
  const Mat3& matrix() const { return std::get<1>(v); }

  std::string str() const { return is_label() ? label() : mat_str(matrix()); }
};

int payload_cmp(const Payload& a, const Payload& b);

inline bool operator==(const Payload& a, const Payload& b) { return payload_cmp(a, b) == 0; }
inline bool operator<(const Payload& a, const Payload& b) { return payload_cmp(a, b) < 0; }

// A morphism: alpha(g) = src, beta(g) = dst. Equality is structural with exact
// payload comparison; the (src, dst, payload) order makes every set-valued
// result reproducible.
struct Arrow {
  int src = 0;
  int dst = 0;
  Payload payload;

  Arrow() = default;
  Arrow(int s, int d, Payload p) : src(s), dst(d), payload(std::move(p)) {}
};

int arrow_cmp(const Arrow& a, const Arrow& b);

inline bool operator==(const Arrow& a, const Arrow& b) { return arrow_cmp(a, b) == 0; }
inline bool operator!=(const Arrow& a, const Arrow& b) { return arrow_cmp(a, b) != 0; }
inline bool operator<(const Arrow& a, const Arrow& b) { return arrow_cmp(a, b) < 0; }

}  // namespace compomat
