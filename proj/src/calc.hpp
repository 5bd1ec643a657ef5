#pragma once

// Internal helper: interns arrows of a composite as integer handles so the
// exhaustive sweeps run on table lookups instead of repeated exact matrix
// products. Results are values (arrows), so handle numbering never leaks.

#include "compomat/error.hpp"
#include "compomat/material.hpp"

#include <mutex>
#include <optional>
#include <unordered_map>

namespace compomat::detail {

// limb-level hash; collisions fall back to exact equality
struct Mat3Hash {
  std::size_t operator()(const Mat3& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Rational& r : m.m) {
      h = h * 1099511628211ull + hash_value(numerator(r));
      h = h * 1099511628211ull + hash_value(denominator(r));
    }
    return h;
  }
};

class Calc {
public:
  explicit Calc(const Composite& c) {
    matrix_ = c.g1().mode() == Mode::MatrixDerived;
    body_size_ = c.body.size();
    const int n = body_size_;
    hom1_.assign(static_cast<std::size_t>(n * n), {});
    hom2_.assign(static_cast<std::size_t>(n * n), {});
    id1_.assign(static_cast<std::size_t>(n), -1);
    id2_.assign(static_cast<std::size_t>(n), -1);
    if (!matrix_) {
      if (!c.ambient) fail(Err::ModeMismatch, "tabular composite without ambient");
      ambient_ = *c.ambient;  // owned copy: the cache may outlive the composite
      arrows_ = ambient_->arrows();
    }
    for (const Arrow& a : c.g1().arrows()) {
      int h = intern(a);
      mark(h, in1_);
      all1_.push_back(h);
      hom1_[key(a.src, a.dst)].push_back(h);
    }
    for (const Arrow& a : c.g2().arrows()) {
      int h = intern(a);
      mark(h, in2_);
      all2_.push_back(h);
      hom2_[key(a.src, a.dst)].push_back(h);
    }
    for (int x = 0; x < n; ++x) {
      id1_[static_cast<std::size_t>(x)] = intern(c.g1().identity(x));
      id2_[static_cast<std::size_t>(x)] = intern(c.g2().identity(x));
    }
  }

  const Arrow& arrow(int h) const { return arrows_[static_cast<std::size_t>(h)]; }
  int src(int h) const { return arrow(h).src; }
  int dst(int h) const { return arrow(h).dst; }

  int intern(const Arrow& a) {
    if (!matrix_) {
      int i = ambient_->arrow_index(a);
      if (i < 0) fail(Err::NotInGroupoid, "arrow not in the ambient groupoid");
      return i;
    }
    int pid = intern_mat(a.payload.matrix());
    std::uint64_t k = triple_key(a.src, a.dst, pid);
    auto it = handle_ids_.find(k);
    if (it != handle_ids_.end()) return it->second;
    int h = static_cast<int>(arrows_.size());
    arrows_.push_back(a);
    pids_.push_back(pid);
    handle_ids_.emplace(k, h);
    return h;
  }

  // g.h with alpha(g) = beta(h)
  int compose(int g, int h) {
    std::uint64_t k = (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint32_t>(h);
    auto it = prod_.find(k);
    if (it != prod_.end()) return it->second;
    int r;
    if (matrix_) {
      int pid = pid_product(pids_[static_cast<std::size_t>(g)], pids_[static_cast<std::size_t>(h)]);
      r = intern_triple(src(h), dst(g), pid);
    } else {
      r = intern(ambient_->compose(arrow(g), arrow(h)));
    }
    prod_.emplace(k, r);
    return r;
  }

  int invert(int g) {
    if (inv_.size() < arrows_.size()) inv_.resize(arrows_.size(), -1);
    int& slot = inv_[static_cast<std::size_t>(g)];
    if (slot >= 0) return slot;
    int r;
    if (matrix_) {
      int pid = intern_mat(mat_inverse(mats_[static_cast<std::size_t>(pids_[static_cast<std::size_t>(g)])]));
      r = intern_triple(dst(g), src(g), pid);
    } else {
      r = intern(ambient_->inverse(arrow(g)));
    }
    slot = r;
    return r;
  }

  bool in1(int h) const { return h >= 0 && static_cast<std::size_t>(h) < in1_.size() && in1_[static_cast<std::size_t>(h)]; }
  bool in2(int h) const { return h >= 0 && static_cast<std::size_t>(h) < in2_.size() && in2_[static_cast<std::size_t>(h)]; }

  const std::vector<int>& hom1(int x, int y) const { return hom1_[key(x, y)]; }
  const std::vector<int>& hom2(int x, int y) const { return hom2_[key(x, y)]; }
  int id1(int x) const { return id1_[static_cast<std::size_t>(x)]; }
  int id2(int x) const { return id2_[static_cast<std::size_t>(x)]; }

  // handles in the canonical arrow order of the owning groupoid
  const std::vector<int>& all1() const { return all1_; }
  const std::vector<int>& all2() const { return all2_; }

private:
  std::size_t key(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(body_size_) +
           static_cast<std::size_t>(y);
  }
  static std::uint64_t triple_key(int s, int d, int pid) {
    return (static_cast<std::uint64_t>(s) << 44) | (static_cast<std::uint64_t>(d) << 24) |
           static_cast<std::uint64_t>(pid);
  }
  int intern_mat(const Mat3& m) {
    auto it = mat_ids_.find(m);
    if (it != mat_ids_.end()) return it->second;
    int id = static_cast<int>(mats_.size());
    mats_.push_back(m);
    mat_ids_.emplace(m, id);
    return id;
  }
  int intern_triple(int s, int d, int pid) {
    std::uint64_t k = triple_key(s, d, pid);
    auto it = handle_ids_.find(k);
    if (it != handle_ids_.end()) return it->second;
    int h = static_cast<int>(arrows_.size());
    arrows_.emplace_back(s, d, Payload(mats_[static_cast<std::size_t>(pid)]));
    pids_.push_back(pid);
    handle_ids_.emplace(k, h);
    return h;
  }
  int pid_product(int a, int b) {
    std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = pidprod_.find(k);
    if (it != pidprod_.end()) return it->second;
    int r = intern_mat(mat_mul(mats_[static_cast<std::size_t>(a)], mats_[static_cast<std::size_t>(b)]));
    pidprod_.emplace(k, r);
    return r;
  }
  void mark(int h, std::vector<char>& set) {
    if (set.size() <= static_cast<std::size_t>(h)) set.resize(static_cast<std::size_t>(h) + 1, 0);
    set[static_cast<std::size_t>(h)] = 1;
  }

  bool matrix_ = true;
  int body_size_ = 0;
  std::optional<FiniteGroupoid> ambient_;
  std::vector<Arrow> arrows_;
  std::vector<int> pids_;
  std::vector<Mat3> mats_;
  std::unordered_map<Mat3, int, Mat3Hash> mat_ids_;
  std::unordered_map<std::uint64_t, int> handle_ids_, prod_, pidprod_;
  std::vector<int> inv_;
  std::vector<char> in1_, in2_;
  std::vector<int> all1_, all2_;
  std::vector<std::vector<int>> hom1_, hom2_;
  std::vector<int> id1_, id2_;
};

// Lazily built, mutex-guarded arithmetic cache shared by all copies of one
// composite. Results are plain values, so caching never shows up in outputs.
class AmbientCache {
public:
  Arrow compose(const Composite& c, const Arrow& g, const Arrow& h) {
    std::lock_guard<std::mutex> lock(mutex_);
    Calc& k = get(c);
    return k.arrow(k.compose(k.intern(g), k.intern(h)));
  }
  Arrow inverse(const Composite& c, const Arrow& g) {
    std::lock_guard<std::mutex> lock(mutex_);
    Calc& k = get(c);
    return k.arrow(k.invert(k.intern(g)));
  }

private:
  Calc& get(const Composite& c) {
    if (!calc_) calc_.emplace(c);
    return *calc_;
  }
  std::mutex mutex_;
  std::optional<Calc> calc_;
};

}  // namespace compomat::detail
