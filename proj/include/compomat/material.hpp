#pragma once

#include "compomat/groupoid.hpp"

#include <functional>
#include <optional>

namespace compomat {

namespace detail {
class AmbientCache;
}

// Mechanical response W : body x GL(3,Q) -> V with V an abstract rational
// vector of fixed dimension. The finite sample set is what the
// material-isomorphism predicate quantifies over (a falsifier, not a proof
// over all of GL(3,Q)).
class MechanicalResponse {
public:
  using Fn = std::function<std::vector<Rational>(int, const Mat3&)>;

  MechanicalResponse(Body body, int dim_v, Fn fn, std::vector<Mat3> samples, std::string kind);

  const Body& body() const { return body_; }
  int dim_v() const { return dim_v_; }
  const std::vector<Mat3>& sample_set() const { return samples_; }
  const std::string& kind() const { return kind_; }

  std::vector<Rational> value(int x, const Mat3& f) const;

private:
  Body body_;
  int dim_v_ = 1;
  Fn fn_;
  std::vector<Mat3> samples_;
  std::string kind_;
};

// All 48 signed permutation matrices, canonically sorted.
const std::vector<Mat3>& signed_permutations();

// Signed permutations plus diag(2,1,1), diag(1,2,1), diag(1,1,2) and their
// inverses: spans determinant, anisotropy and orientation behaviour cheaply.
std::vector<Mat3> default_sample_set();

// Registry of closed-form responses addressable from input files.
MechanicalResponse response_det(Body body, std::vector<Mat3> samples = default_sample_set());
MechanicalResponse response_trace_ctc(Body body, std::vector<Mat3> samples = default_sample_set());
MechanicalResponse response_pointwise_table(Body body, int dim_v,
                                            std::map<std::pair<int, Mat3>, std::vector<Rational>> table,
                                            std::vector<Mat3> samples);

// Pointwise predicate: W(X, F.P) agrees with W(Y, F) on every sample F within
// tol in the max norm (exact equality for tol = 0).
bool is_material_isomorphism(const MechanicalResponse& w, const Arrow& p, const Rational& tol = Rational(0));

// W1(X, F) = W(X, F.C01); throws Err::Singular.
MechanicalResponse change_reference(const MechanicalResponse& w, const Mat3& c01);

enum class Provenance { Declared, ExtractedFromW };

struct MaterialGroupoid {
  FiniteGroupoid groupoid;
  Provenance provenance = Provenance::Declared;
  std::string response;  // name of W when extracted
};

MaterialGroupoid declared_material_groupoid(FiniteGroupoid g);

// Filters the candidates through the predicate, adds identities, and verifies
// that the accepted set is a groupoid. Throws Err::NotClosed (with a witness)
// when the candidate pool was too small or tol admitted a non-closed set.
MaterialGroupoid build_material_groupoid(const MechanicalResponse& w,
                                         const std::vector<Arrow>& candidates,
                                         const Rational& tol = Rational(0),
                                         std::string response_name = {});

// Two material groupoids over one body. Tabular composites carry the shared
// ambient groupoid explicitly; matrix composites compose in GL(3,Q).
struct Composite {
  Body body;
  MaterialGroupoid omega1, omega2;
  std::optional<FiniteGroupoid> ambient;
  bool hypothesis_override = false;
  std::shared_ptr<detail::AmbientCache> arithmetic_cache;  // set by make_composite

  const FiniteGroupoid& g1() const { return omega1.groupoid; }
  const FiniteGroupoid& g2() const { return omega2.groupoid; }
};

// Validates shared body, mode agreement, ambient (tabular mode), and - unless
// overridden for counterexample studies - the standing hypothesis that both
// marginals are transitive.
Composite make_composite(MaterialGroupoid omega1, MaterialGroupoid omega2,
                         std::optional<FiniteGroupoid> ambient = std::nullopt,
                         bool hypothesis_override = false);

FiniteGroupoid composite_groupoid(const Composite& c);  // the intersection
bool composite_uniform(const Composite& c);

bool standing_hypothesis(const Composite& c);  // both marginals transitive

Arrow ambient_compose(const Composite& c, const Arrow& g, const Arrow& h);
Arrow ambient_inverse(const Composite& c, const Arrow& g);

}  // namespace compomat
