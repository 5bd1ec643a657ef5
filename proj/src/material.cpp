#include "compomat/material.hpp"

#include "compomat/error.hpp"
#include "calc.hpp"

#include <algorithm>

namespace compomat {

MechanicalResponse::MechanicalResponse(Body body, int dim_v, Fn fn, std::vector<Mat3> samples,
                                       std::string kind)
    : body_(std::move(body)), dim_v_(dim_v), fn_(std::move(fn)), samples_(std::move(samples)),
      kind_(std::move(kind)) {
  if (dim_v_ <= 0) fail(Err::InvalidParams, "dim_v must be positive");
  std::sort(samples_.begin(), samples_.end());
  samples_.erase(std::unique(samples_.begin(), samples_.end()), samples_.end());
}

std::vector<Rational> MechanicalResponse::value(int x, const Mat3& f) const {
  if (x < 0 || x >= body_.size()) fail(Err::UnknownObject, "response evaluated off the body");
  std::vector<Rational> v = fn_(x, f);
  if (static_cast<int>(v.size()) != dim_v_)
    fail(Err::InvalidParams, "response value has wrong dimension");
  return v;
}

const std::vector<Mat3>& signed_permutations() {
  static const std::vector<Mat3> all = [] {
    std::vector<Mat3> out;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms)
      for (int s = 0; s < 8; ++s) {
        Mat3 m;
        for (int col = 0; col < 3; ++col) m.at(p[col], col) = (s >> col) & 1 ? -1 : 1;
        out.push_back(m);
      }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

std::vector<Mat3> default_sample_set() {
  std::vector<Mat3> s = signed_permutations();
  for (int i = 0; i < 3; ++i) {
    Mat3 d = Mat3::identity();
    d.at(i, i) = 2;
    s.push_back(d);
    d.at(i, i) = Rational(1, 2);
    s.push_back(d);
  }
  std::sort(s.begin(), s.end());
  return s;
}

MechanicalResponse response_det(Body body, std::vector<Mat3> samples) {
  return MechanicalResponse(std::move(body), 1,
                            [](int, const Mat3& f) { return std::vector<Rational>{mat_det(f)}; },
                            std::move(samples), "det");
}

MechanicalResponse response_trace_ctc(Body body, std::vector<Mat3> samples) {
  return MechanicalResponse(
      std::move(body), 1,
      [](int, const Mat3& f) {
        Rational t = 0;
        for (const auto& e : f.m) t += e * e;  // trace(Ft.F) = sum of squares
        return std::vector<Rational>{t};
      },
      std::move(samples), "trace_CtC");
}

MechanicalResponse response_pointwise_table(Body body, int dim_v,
                                            std::map<std::pair<int, Mat3>, std::vector<Rational>> table,
                                            std::vector<Mat3> samples) {
  auto shared = std::make_shared<std::map<std::pair<int, Mat3>, std::vector<Rational>>>(std::move(table));
  return MechanicalResponse(
      std::move(body), dim_v,
      [shared](int x, const Mat3& f) {
        auto it = shared->find({x, f});
        if (it == shared->end())
          fail(Err::ResolutionError, "pointwise response has no entry at requested (X, F)");
        return it->second;
      },
      std::move(samples), "pointwise_table");
}

bool is_material_isomorphism(const MechanicalResponse& w, const Arrow& p, const Rational& tol) {
  if (!p.payload.is_matrix()) fail(Err::ModeMismatch, "material isomorphisms are matrix arrows");
  if (p.src < 0 || p.src >= w.body().size() || p.dst < 0 || p.dst >= w.body().size())
    fail(Err::UnknownObject, "arrow endpoints outside the response body");
  if (mat_det(p.payload.matrix()) == 0) fail(Err::Singular, "candidate not invertible");
  if (w.sample_set().empty()) fail(Err::EmptySampleSet, "predicate needs a nonempty sample set");
  if (tol < 0) fail(Err::InvalidParams, "tolerance must be nonnegative");
  for (const Mat3& f : w.sample_set()) {
    std::vector<Rational> lhs = w.value(p.src, mat_mul(f, p.payload.matrix()));
    std::vector<Rational> rhs = w.value(p.dst, f);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      Rational d = lhs[i] - rhs[i];
      if (d < 0) d = -d;
      if (d > tol) return false;
    }
  }
  return true;
}

MechanicalResponse change_reference(const MechanicalResponse& w, const Mat3& c01) {
  if (mat_det(c01) == 0) fail(Err::Singular, "change of reference must be invertible");
  MechanicalResponse copy = w;
  return MechanicalResponse(
      w.body(), w.dim_v(),
      [copy, c01](int x, const Mat3& f) { return copy.value(x, mat_mul(f, c01)); },
      w.sample_set(), w.kind());
}

MaterialGroupoid declared_material_groupoid(FiniteGroupoid g) {
  return MaterialGroupoid{std::move(g), Provenance::Declared, {}};
}

MaterialGroupoid build_material_groupoid(const MechanicalResponse& w,
                                         const std::vector<Arrow>& candidates, const Rational& tol,
                                         std::string response_name) {
  std::vector<Arrow> accepted;
  for (const Arrow& p : candidates)
    if (is_material_isomorphism(w, p, tol)) accepted.push_back(p);
  FiniteGroupoid g = FiniteGroupoid::matrix_derived(w.body(), std::move(accepted));
  AxiomReport rep = check_axioms(g);
  if (!rep.passed) {
    const AxiomViolation& v = rep.violations.front();
    fail(Err::NotClosed, "accepted set is not a groupoid (" + v.axiom + " at " + v.offender +
                             "); enlarge the candidate pool or lower tol");
  }
  return MaterialGroupoid{std::move(g), Provenance::ExtractedFromW,
                          response_name.empty() ? w.kind() : std::move(response_name)};
}

Composite make_composite(MaterialGroupoid omega1, MaterialGroupoid omega2,
                         std::optional<FiniteGroupoid> ambient, bool hypothesis_override) {
  if (!(omega1.groupoid.body() == omega2.groupoid.body()))
    fail(Err::ObjectMismatch, "composite requires one shared body");
  if (omega1.groupoid.mode() != omega2.groupoid.mode())
    fail(Err::ModeMismatch, "composite requires one shared mode");
  if (omega1.groupoid.mode() == Mode::Tabular) {
    if (!ambient) fail(Err::ModeMismatch, "tabular composite needs an explicit ambient groupoid");
    if (!is_subgroupoid(omega1.groupoid, *ambient) || !is_subgroupoid(omega2.groupoid, *ambient))
      fail(Err::ModeMismatch, "tabular composite parts must be subgroupoids of the ambient");
  }
  Composite c{omega1.groupoid.body(), std::move(omega1), std::move(omega2), std::move(ambient),
              hypothesis_override, std::make_shared<detail::AmbientCache>()};
  if (!hypothesis_override && !standing_hypothesis(c))
    fail(Err::InvalidParams,
         "material groupoids must be transitive (pass hypothesis_override to study this case)");
  return c;
}

FiniteGroupoid composite_groupoid(const Composite& c) { return intersect(c.g1(), c.g2()); }

bool composite_uniform(const Composite& c) {
  return orbit_partition(composite_groupoid(c)).kind == OrbitKind::Transitive;
}

bool standing_hypothesis(const Composite& c) {
  return orbit_partition(c.g1()).kind == OrbitKind::Transitive &&
         orbit_partition(c.g2()).kind == OrbitKind::Transitive;
}

Arrow ambient_compose(const Composite& c, const Arrow& g, const Arrow& h) {
  if (g.src != h.dst) fail(Err::NotComposable, "alpha(g) != beta(h) in ambient composition");
  if (c.arithmetic_cache) return c.arithmetic_cache->compose(c, g, h);
  if (g.payload.is_matrix() && h.payload.is_matrix())
    return Arrow(h.src, g.dst, Payload(mat_mul(g.payload.matrix(), h.payload.matrix())));
  if (!c.ambient) fail(Err::ModeMismatch, "label arrows need an ambient groupoid to compose");
  return c.ambient->compose(g, h);
}

Arrow ambient_inverse(const Composite& c, const Arrow& g) {
  if (c.arithmetic_cache) return c.arithmetic_cache->inverse(c, g);
  if (g.payload.is_matrix()) return Arrow(g.dst, g.src, Payload(mat_inverse(g.payload.matrix())));
  if (!c.ambient) fail(Err::ModeMismatch, "label arrows need an ambient groupoid to invert");
  return c.ambient->inverse(g);
}

}  // namespace compomat
