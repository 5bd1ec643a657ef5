#include "compomat/uniformity.hpp"

#include "compomat/error.hpp"
#include "calc.hpp"

#include <algorithm>
#include <thread>

namespace compomat {

using detail::Calc;

namespace {

std::string astr(const Composite& c, const Arrow& a) { return arrow_str(c.g1(), a); }

std::string point(const Composite& c, int x) { return c.body.name(x); }

}  // namespace

std::vector<Square> complete_square(const Composite& c, const PartialSquare& p) {
  int present = (p.bottom ? 1 : 0) + (p.top ? 1 : 0) + (p.right ? 1 : 0) + (p.left ? 1 : 0);
  if (present == 0) fail(Err::InvalidPartial, "no sides given");
  if (p.bottom && !c.g1().contains(*p.bottom)) fail(Err::InvalidPartial, "bottom not in Omega1");
  if (p.top && !c.g1().contains(*p.top)) fail(Err::InvalidPartial, "top not in Omega1");
  if (p.right && !c.g2().contains(*p.right)) fail(Err::InvalidPartial, "right not in Omega2");
  if (p.left && !c.g2().contains(*p.left)) fail(Err::InvalidPartial, "left not in Omega2");
  if (p.bottom && p.right && p.bottom->src != p.right->src)
    fail(Err::InvalidPartial, "alpha(bottom) != alpha(right)");
  if (p.top && p.right && p.top->src != p.right->dst)
    fail(Err::InvalidPartial, "alpha(top) != beta(right)");
  if (p.bottom && p.left && p.bottom->dst != p.left->src)
    fail(Err::InvalidPartial, "beta(bottom) != alpha(left)");
  if (p.top && p.left && p.top->dst != p.left->dst)
    fail(Err::InvalidPartial, "beta(top) != beta(left)");

  Calc calc(c);
  const int n = c.body.size();
  std::vector<Square> out;
  for (const Arrow& bottom : p.bottom ? std::vector<Arrow>{*p.bottom} : c.g1().arrows()) {
    if (p.right && p.right->src != bottom.src) continue;
    if (p.left && p.left->src != bottom.dst) continue;
    int hb = calc.intern(bottom);
    for (int cc = 0; cc < n; ++cc) {
      if (p.right && p.right->dst != cc) continue;
      if (p.top && p.top->src != cc) continue;
      for (int hr : calc.hom2(bottom.src, cc)) {
        if (p.right && !(calc.arrow(hr) == *p.right)) continue;
        for (int d = 0; d < n; ++d) {
          if (p.left && p.left->dst != d) continue;
          if (p.top && p.top->dst != d) continue;
          for (int hl : calc.hom2(bottom.dst, d)) {
            if (p.left && !(calc.arrow(hl) == *p.left)) continue;
            int lhs = calc.compose(hl, hb);
            for (int ht : calc.hom1(cc, d)) {
              if (p.top && !(calc.arrow(ht) == *p.top)) continue;
              if (calc.compose(ht, hr) != lhs) continue;
              out.push_back(Square{bottom, calc.arrow(ht), calc.arrow(hr), calc.arrow(hl)});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlagResult is_directionally_transitive(const Composite& c, Direction dir) {
  Calc calc(c);
  if (dir == Direction::Horizontal) {
    for (int g2 : calc.all2()) {
      int g2i = calc.invert(g2);
      for (int g1 : calc.all1()) {
        if (calc.src(g1) != calc.src(g2)) continue;
        int mid = calc.compose(g1, g2i);
        for (int h2 : calc.all2()) {
          if (calc.src(h2) != calc.dst(g1)) continue;
          int prod = calc.compose(h2, mid);
          if (!calc.in1(prod))
            return {false, "h2.g1.g2^-1 = " + astr(c, calc.arrow(prod)) + " escapes Omega1 for g2 = " +
                               astr(c, calc.arrow(g2)) + ", g1 = " + astr(c, calc.arrow(g1)) +
                               ", h2 = " + astr(c, calc.arrow(h2))};
        }
      }
    }
    return {true, "h2.g1.g2^-1 lands in Omega1 for every admissible triple"};
  }
  for (int g1 : calc.all1()) {
    int g1i = calc.invert(g1);
    for (int g2 : calc.all2()) {
      if (calc.src(g2) != calc.src(g1)) continue;
      int mid = calc.compose(g2, g1i);
      for (int h1 : calc.all1()) {
        if (calc.src(h1) != calc.dst(g2)) continue;
        int prod = calc.compose(h1, mid);
        if (!calc.in2(prod))
          return {false, "h1.g2.g1^-1 = " + astr(c, calc.arrow(prod)) + " escapes Omega2 for g1 = " +
                             astr(c, calc.arrow(g1)) + ", g2 = " + astr(c, calc.arrow(g2)) +
                             ", h1 = " + astr(c, calc.arrow(h1))};
      }
    }
  }
  return {true, "h1.g2.g1^-1 lands in Omega2 for every admissible triple"};
}

FlagResult is_weak_directionally_transitive(const Composite& c, Direction dir) {
  Calc calc(c);
  if (dir == Direction::Horizontal) {
    for (int g2 : calc.all2()) {
      int g2i = calc.invert(g2);
      for (int h2 : calc.all2()) {
        bool found = false;
        for (int g1 : calc.hom1(calc.src(g2), calc.src(h2))) {
          if (calc.in1(calc.compose(h2, calc.compose(g1, g2i)))) {
            found = true;
            break;
          }
        }
        if (!found)
          return {false, "no commutative square with right = " + astr(c, calc.arrow(g2)) +
                             " and left = " + astr(c, calc.arrow(h2))};
      }
    }
    return {true, "every (right, left) pair of Omega2 arrows bounds a commutative square"};
  }
  for (int g1 : calc.all1()) {
    int g1i = calc.invert(g1);
    for (int h1 : calc.all1()) {
      bool found = false;
      for (int g2 : calc.hom2(calc.src(g1), calc.src(h1))) {
        if (calc.in2(calc.compose(h1, calc.compose(g2, g1i)))) {
          found = true;
          break;
        }
      }
      if (!found)
        return {false, "no commutative square with bottom = " + astr(c, calc.arrow(g1)) +
                           " and top = " + astr(c, calc.arrow(h1))};
    }
  }
  return {true, "every (bottom, top) pair of Omega1 arrows bounds a commutative square"};
}

FlagResult is_strongly_uniform(const Composite& c) {
  Calc calc(c);
  const int n = c.body.size();
  for (int x = 0; x < n; ++x) {
    for (int g1 : calc.hom1(x, x)) {
      for (int g2 : calc.all2()) {
        if (calc.src(g2) != x) continue;
        bool found = false;
        for (int h2 : calc.hom2(x, x)) {
          int target = calc.compose(h2, g1);
          for (int h1 : calc.hom1(calc.dst(g2), x)) {
            if (calc.compose(h1, g2) == target) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found)
          return {false, "no commutative square over (X = " + point(c, x) + ", loop g1 = " +
                             astr(c, calc.arrow(g1)) + ", g2 = " + astr(c, calc.arrow(g2)) + ")"};
      }
    }
  }
  return {true, "every (point, Omega1 loop, Omega2 arrow) tuple completes commutatively"};
}

namespace {

// scans corner tuples with first corner in [from, to); returns the first
// failing tuple in canonical order, if any
std::optional<std::array<int, 4>> weak_scan(const Composite& c, WeakVariant variant, int from,
                                            int to) {
  Calc calc(c);
  const int n = c.body.size();
  for (int a = from; a < to; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        if (variant == WeakVariant::Midpoint && cc != b) continue;
        for (int d = 0; d < n; ++d) {
          bool found = false;
          for (int g1 : calc.hom1(a, b)) {
            for (int g2 : calc.hom2(a, cc)) {
              int rhs_right = g2;
              for (int h2 : calc.hom2(b, d)) {
                int lhs = calc.compose(h2, g1);
                for (int h1 : calc.hom1(cc, d)) {
                  if (calc.compose(h1, rhs_right) == lhs) {
                    found = true;
                    break;
                  }
                }
                if (found) break;
              }
              if (found) break;
            }
            if (found) break;
          }
          if (!found) return std::array<int, 4>{a, b, cc, d};
        }
      }
  return std::nullopt;
}

}  // namespace

FlagResult is_weakly_uniform(const Composite& c, WeakVariant variant, int threads) {
  const int n = c.body.size();
  std::optional<std::array<int, 4>> firstfail;
  if (threads <= 1 || n < 2) {
    firstfail = weak_scan(c, variant, 0, n);
  } else {
    int nt = std::min(threads, n);
    std::vector<std::optional<std::array<int, 4>>> hits(static_cast<std::size_t>(nt));
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      int from = n * t / nt, to = n * (t + 1) / nt;
      pool.emplace_back([&, t, from, to] { hits[static_cast<std::size_t>(t)] = weak_scan(c, variant, from, to); });
    }
    for (auto& th : pool) th.join();
    for (const auto& h : hits)
      if (h && !firstfail) firstfail = h;  // partitions are in canonical order
  }
  if (firstfail) {
    const auto& t = *firstfail;
    return {false, "no commutative square with corners (" + point(c, t[0]) + ", " + point(c, t[1]) +
                       ", " + point(c, t[2]) + ", " + point(c, t[3]) + ")"};
  }
  return {true, variant == WeakVariant::Corners
                    ? "every corner quadruple bounds a commutative square"
                    : "every midpoint quadruple bounds a commutative square"};
}

bool filling_uniformity_check(const Composite& c) {
  Calc calc(c);
  const int n = c.body.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for (int h2 : calc.hom2(x, y)) {
        int lhs = calc.compose(h2, calc.id1(x));
        for (int h1 : calc.hom1(x, y)) {
          if (calc.compose(h1, calc.id2(x)) == lhs) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

FlagResult isotropy_conjugation_check(const Composite& c, Direction dir) {
  Calc calc(c);
  auto run = [&](const std::vector<int>& conjugators, bool horizontal) -> FlagResult {
    for (int g : conjugators) {
      for (int h : conjugators) {
        int xp = calc.src(g), x = calc.dst(g), y = calc.src(h), yp = calc.dst(h);
        const std::vector<int>& inner = horizontal ? calc.hom1(x, y) : calc.hom2(x, y);
        const std::vector<int>& outer = horizontal ? calc.hom1(xp, yp) : calc.hom2(xp, yp);
        std::vector<int> image;
        image.reserve(inner.size());
        for (int p : inner) image.push_back(calc.compose(h, calc.compose(p, g)));
        std::sort(image.begin(), image.end());
        std::vector<int> target = outer;
        std::sort(target.begin(), target.end());
        if (image != target)
          return {false, std::string(horizontal ? "h2.Omega1(X->Y).g2 != Omega1(X'->Y')"
                                                : "h1.Omega2(X->Y).g1 != Omega2(X'->Y')") +
                             " for g = " + astr(c, calc.arrow(g)) + ", h = " + astr(c, calc.arrow(h))};
      }
    }
    return {true, horizontal ? "hom-sets of Omega1 are conjugated by every Omega2 pair"
                             : "hom-sets of Omega2 are conjugated by every Omega1 pair"};
  };
  if (dir == Direction::Horizontal) return run(calc.all2(), true);
  return run(calc.all1(), false);
}

namespace {

bool omega_subset(const Composite& c, bool two_in_one) {
  Calc calc(c);
  if (two_in_one) {
    for (int h : calc.all2())
      if (!calc.in1(h)) return false;
    return true;
  }
  for (int h : calc.all1())
    if (!calc.in2(h)) return false;
  return true;
}

FlagResult uniform_flag(const Composite& c) {
  FiniteGroupoid inter = composite_groupoid(c);
  OrbitPartition orbits = orbit_partition(inter);
  if (orbits.kind == OrbitKind::Transitive)
    return {true, "the intersection groupoid is transitive (" + std::to_string(inter.size()) +
                      " shared arrows)"};
  for (int x = 0; x < c.body.size(); ++x)
    for (int y = 0; y < c.body.size(); ++y)
      if (inter.hom_indices(x, y).empty())
        return {false, "no shared material isomorphism from " + point(c, x) + " to " + point(c, y)};
  return {false, "intersection not transitive"};
}

// conjugation of the isotropy groups alone, by single arrows
// of the other material. A strictly weaker statement than the full hom-set
// conjugation, used as the consequent of the implication check.
bool isotropy_groups_conjugated(const Composite& c, Direction dir) {
  Calc calc(c);
  const std::vector<int> conj = dir == Direction::Horizontal ? calc.all2() : calc.all1();
  for (int g : conj) {
    int x = calc.src(g), xp = calc.dst(g);
    const std::vector<int>& inner = dir == Direction::Horizontal ? calc.hom1(x, x) : calc.hom2(x, x);
    const std::vector<int>& outer = dir == Direction::Horizontal ? calc.hom1(xp, xp) : calc.hom2(xp, xp);
    std::vector<int> image;
    int gi = calc.invert(g);
    for (int p : inner) image.push_back(calc.compose(g, calc.compose(p, gi)));
    std::sort(image.begin(), image.end());
    std::vector<int> target = outer;
    std::sort(target.begin(), target.end());
    if (image != target) return false;
  }
  return true;
}

}  // namespace

UniformityReport classify_composite(const Composite& c, int threads) {
  UniformityReport r;
  const bool t1 = orbit_partition(c.g1()).kind == OrbitKind::Transitive;
  const bool t2 = orbit_partition(c.g2()).kind == OrbitKind::Transitive;
  r.standing_hypothesis = t1 && t2;

  r.uniform = uniform_flag(c);
  r.horizontally_transitive = is_directionally_transitive(c, Direction::Horizontal);
  r.vertically_transitive = is_directionally_transitive(c, Direction::Vertical);
  r.weak_horizontally_transitive = is_weak_directionally_transitive(c, Direction::Horizontal);
  r.weak_vertically_transitive = is_weak_directionally_transitive(c, Direction::Vertical);
  r.strongly_uniform = is_strongly_uniform(c);
  r.weakly_uniform_corners = is_weakly_uniform(c, WeakVariant::Corners, threads);
  r.weakly_uniform_midpoint = is_weakly_uniform(c, WeakVariant::Midpoint, threads);
  r.identity_filling = filling_uniformity_check(c);

  Calc calc(c);
  bool iso21_all = true, iso12_all = true;
  for (int x = 0; x < c.body.size(); ++x) {
    IsotropyInclusion inc;
    inc.point = x;
    inc.omega2_in_omega1 = true;
    for (int h : calc.hom2(x, x))
      if (!calc.in1(h)) inc.omega2_in_omega1 = false;
    inc.omega1_in_omega2 = true;
    for (int h : calc.hom1(x, x))
      if (!calc.in2(h)) inc.omega1_in_omega2 = false;
    iso21_all = iso21_all && inc.omega2_in_omega1;
    iso12_all = iso12_all && inc.omega1_in_omega2;
    r.isotropy_inclusions.push_back(inc);
  }

  const bool sub21 = omega_subset(c, true);   // Omega2 subset of Omega1
  const bool sub12 = omega_subset(c, false);  // Omega1 subset of Omega2
  const bool equal_sets = sub21 && sub12;
  FlagResult conj_h = isotropy_conjugation_check(c, Direction::Horizontal);
  FlagResult conj_v = isotropy_conjugation_check(c, Direction::Vertical);

  auto iff = [](const std::string& id, bool lhs, bool rhs, bool hyp, const std::string& note) {
    return CrossCheck{id, lhs, rhs, hyp, !hyp || lhs == rhs, note};
  };
  auto implies = [](const std::string& id, bool lhs, bool rhs, bool hyp, const std::string& note) {
    return CrossCheck{id, lhs, rhs, hyp, !hyp || !lhs || rhs, note};
  };

  r.proposition_crosschecks.push_back(
      iff("h_transitivity_characterization", r.horizontally_transitive.value, r.uniform.value && iso21_all, r.standing_hypothesis,
          "horizontally transitive iff uniform with Omega2 isotropy inside Omega1 isotropy"));
  r.proposition_crosschecks.push_back(
      iff("v_transitivity_characterization", r.vertically_transitive.value, r.uniform.value && iso12_all, r.standing_hypothesis,
          "vertically transitive iff uniform with Omega1 isotropy inside Omega2 isotropy"));
  r.proposition_crosschecks.push_back(
      iff("both_transitivities_force_equality", r.horizontally_transitive.value && r.vertically_transitive.value,
          r.uniform.value && equal_sets, r.standing_hypothesis,
          "both transitivities iff uniform with Omega1 = Omega2"));
  r.proposition_crosschecks.push_back(
      iff("weak_h_iff_h", r.weak_horizontally_transitive.value, r.horizontally_transitive.value, t1,
          "weak horizontal transitivity iff horizontal transitivity"));
  r.proposition_crosschecks.push_back(
      iff("weak_v_iff_v", r.weak_vertically_transitive.value, r.vertically_transitive.value, t2,
          "weak vertical transitivity iff vertical transitivity"));
  r.proposition_crosschecks.push_back(
      iff("weak_h_iff_omega2_subset", r.weak_horizontally_transitive.value, sub21, t1,
          "weak horizontal transitivity iff Omega2 is a subset of Omega1"));
  r.proposition_crosschecks.push_back(
      iff("weak_v_iff_omega1_subset", r.weak_vertically_transitive.value, sub12, t2,
          "weak vertical transitivity iff Omega1 is a subset of Omega2"));
  r.proposition_crosschecks.push_back(
      iff("conjugation_iff_h", conj_h.value, r.horizontally_transitive.value, true,
          "hom-set conjugation identity iff horizontal transitivity"));
  r.proposition_crosschecks.push_back(
      iff("conjugation_iff_v", conj_v.value, r.vertically_transitive.value, true,
          "hom-set conjugation identity iff vertical transitivity"));
  r.proposition_crosschecks.push_back(implies(
      "h_conjugates_isotropy", r.horizontally_transitive.value,
      isotropy_groups_conjugated(c, Direction::Horizontal), true,
      "horizontal transitivity conjugates the Omega1 symmetry groups by Omega2 arrows"));
  r.proposition_crosschecks.push_back(implies(
      "v_conjugates_isotropy", r.vertically_transitive.value, isotropy_groups_conjugated(c, Direction::Vertical),
      true, "vertical transitivity conjugates the Omega2 symmetry groups by Omega1 arrows"));
  r.proposition_crosschecks.push_back(iff("filling_iff_uniform", r.identity_filling,
                                          r.uniform.value, true,
                                          "the filling containment holds iff the composite is uniform"));
  r.proposition_crosschecks.push_back(implies("strong_implies_uniform", r.strongly_uniform.value,
                                              r.uniform.value, t2,
                                              "strong uniformity implies uniformity"));
  r.proposition_crosschecks.push_back(implies("uniform_implies_weak_corners", r.uniform.value,
                                              r.weakly_uniform_corners.value, true,
                                              "uniformity implies corner weak uniformity"));
  return r;
}

}  // namespace compomat
