#include "compomat/groupoid.hpp"

#include "compomat/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <functional>
#include <sstream>

namespace compomat {

int payload_cmp(const Payload& a, const Payload& b) {
  if (a.v.index() != b.v.index()) return a.v.index() < b.v.index() ? -1 : 1;
  if (a.is_label()) {
    int c = a.label().compare(b.label());
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  return mat_cmp(a.matrix(), b.matrix());
}

int arrow_cmp(const Arrow& a, const Arrow& b) {
  if (a.src != b.src) return a.src < b.src ? -1 : 1;
  if (a.dst != b.dst) return a.dst < b.dst ? -1 : 1;
  return payload_cmp(a.payload, b.payload);
}

int Body::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool operator==(const Body& a, const Body& b) { return a.names == b.names; }

namespace {

void validate_body(const Body& body) {
  std::set<std::string> seen;
  for (const auto& n : body.names)
    if (!seen.insert(n).second) fail(Err::InvalidParams, "duplicate object name '" + n + "'");
}

void validate_endpoints(const Body& body, const Arrow& a) {
  if (a.src < 0 || a.src >= body.size() || a.dst < 0 || a.dst >= body.size())
    fail(Err::UnknownObject, "arrow endpoint outside body");
}

}  // namespace

std::string arrow_str(const FiniteGroupoid& g, const Arrow& a) {
  return "(" + g.body().name(a.src) + "->" + g.body().name(a.dst) + ", " + a.payload.str() + ")";
}

void FiniteGroupoid::build_index() {
  hom_.clear();
  alpha_fibres_.assign(static_cast<std::size_t>(body_.size()), {});
  beta_fibres_.assign(static_cast<std::size_t>(body_.size()), {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    hom_[{a.src, a.dst}].push_back(static_cast<int>(i));
    alpha_fibres_[static_cast<std::size_t>(a.src)].push_back(static_cast<int>(i));
    beta_fibres_[static_cast<std::size_t>(a.dst)].push_back(static_cast<int>(i));
  }
}

FiniteGroupoid FiniteGroupoid::matrix_derived(Body body, std::vector<Arrow> arrows) {
  validate_body(body);
  for (const auto& a : arrows) {
    validate_endpoints(body, a);
    if (!a.payload.is_matrix()) fail(Err::ModeMismatch, "matrix groupoid with label payload");
    if (mat_det(a.payload.matrix()) == 0)
      fail(Err::Singular, "arrow payload not invertible: " + a.payload.str());
  }
  for (int x = 0; x < body.size(); ++x) arrows.emplace_back(x, x, Payload(Mat3::identity()));
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());

  FiniteGroupoid g;
  g.mode_ = Mode::MatrixDerived;
  g.body_ = std::move(body);
  g.arrows_ = std::move(arrows);
  g.build_index();
  return g;
}

FiniteGroupoid FiniteGroupoid::tabular(Body body, std::vector<Arrow> arrows, Tables tables) {
  validate_body(body);
  for (const auto& a : arrows) {
    validate_endpoints(body, a);
    if (!a.payload.is_label()) fail(Err::ModeMismatch, "tabular groupoid with matrix payload");
  }
  const int n = static_cast<int>(arrows.size());
  std::vector<int> order(arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return arrows[static_cast<std::size_t>(i)] < arrows[static_cast<std::size_t>(j)]; });
  std::vector<int> old_to_new(arrows.size());
  std::vector<Arrow> sorted;
  sorted.reserve(arrows.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    old_to_new[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    sorted.push_back(arrows[static_cast<std::size_t>(order[pos])]);
  }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) fail(Err::InvalidParams, "duplicate arrow in tabular groupoid");

  auto remap = [&](int idx) -> int {
    if (idx < 0 || idx >= n) return -1;
    return old_to_new[static_cast<std::size_t>(idx)];
  };
  Tables t;
  t.identity.assign(static_cast<std::size_t>(body.size()), -1);
  for (std::size_t x = 0; x < tables.identity.size() && x < t.identity.size(); ++x)
    t.identity[x] = remap(tables.identity[x]);
  t.inverse.assign(sorted.size(), -1);
  for (std::size_t i = 0; i < tables.inverse.size() && i < static_cast<std::size_t>(n); ++i)
    t.inverse[static_cast<std::size_t>(remap(static_cast<int>(i)))] = remap(tables.inverse[i]);
  for (const auto& [key, val] : tables.compose) {
    int gi = remap(key.first), hi = remap(key.second), ri = remap(val);
    if (gi < 0 || hi < 0) continue;
    t.compose[{gi, hi}] = ri;
  }

  FiniteGroupoid g;
  g.mode_ = Mode::Tabular;
  g.body_ = std::move(body);
  g.arrows_ = std::move(sorted);
  g.tables_ = std::move(t);
  g.build_index();
  return g;
}

int FiniteGroupoid::arrow_index(const Arrow& a) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a);
  if (it != arrows_.end() && *it == a) return static_cast<int>(it - arrows_.begin());
  return -1;
}

Arrow FiniteGroupoid::compose(const Arrow& g, const Arrow& h) const {
  int gi = arrow_index(g), hi = arrow_index(h);
  if (gi < 0 || hi < 0) fail(Err::NotInGroupoid, "compose argument not in groupoid");
  if (g.src != h.dst)
    fail(Err::NotComposable, "alpha(g) != beta(h): " + arrow_str(*this, g) + " . " + arrow_str(*this, h));
  if (mode_ == Mode::MatrixDerived)
    return Arrow(h.src, g.dst, Payload(mat_mul(g.payload.matrix(), h.payload.matrix())));
  auto it = tables_.compose.find({gi, hi});
  if (it == tables_.compose.end() || it->second < 0 || it->second >= static_cast<int>(arrows_.size()))
    fail(Err::NotClosed, "composition table has no entry for composable pair");
  return arrows_[static_cast<std::size_t>(it->second)];
}

Arrow FiniteGroupoid::inverse(const Arrow& g) const {
  int gi = arrow_index(g);
  if (gi < 0) fail(Err::NotInGroupoid, "inverse argument not in groupoid");
  if (mode_ == Mode::MatrixDerived)
    return Arrow(g.dst, g.src, Payload(mat_inverse(g.payload.matrix())));
  int ii = tables_.inverse[static_cast<std::size_t>(gi)];
  if (ii < 0 || ii >= static_cast<int>(arrows_.size()))
    fail(Err::NotClosed, "inverse table has no entry for " + arrow_str(*this, g));
  return arrows_[static_cast<std::size_t>(ii)];
}

Arrow FiniteGroupoid::identity(int object) const {
  if (object < 0 || object >= body_.size()) fail(Err::UnknownObject, "object id out of range");
  if (mode_ == Mode::MatrixDerived) return Arrow(object, object, Payload(Mat3::identity()));
  int ii = tables_.identity[static_cast<std::size_t>(object)];
  if (ii < 0 || ii >= static_cast<int>(arrows_.size()))
    fail(Err::NotInGroupoid, "no identity arrow at " + body_.name(object));
  return arrows_[static_cast<std::size_t>(ii)];
}

static const std::vector<int> kEmptyIndices;

const std::vector<int>& FiniteGroupoid::hom_indices(int x, int y) const {
  if (x < 0 || x >= body_.size() || y < 0 || y >= body_.size())
    fail(Err::UnknownObject, "object id out of range");
  auto it = hom_.find({x, y});
  return it == hom_.end() ? kEmptyIndices : it->second;
}

std::vector<Arrow> FiniteGroupoid::hom_set(int x, int y) const {
  std::vector<Arrow> out;
  for (int i : hom_indices(x, y)) out.push_back(arrows_[static_cast<std::size_t>(i)]);
  return out;
}

const std::vector<int>& FiniteGroupoid::alpha_fibre(int x) const {
  if (x < 0 || x >= body_.size()) fail(Err::UnknownObject, "object id out of range");
  return alpha_fibres_[static_cast<std::size_t>(x)];
}

const std::vector<int>& FiniteGroupoid::beta_fibre(int y) const {
  if (y < 0 || y >= body_.size()) fail(Err::UnknownObject, "object id out of range");
  return beta_fibres_[static_cast<std::size_t>(y)];
}

// ---------------------------------------------------------------------------
// axiom checking

namespace {

// Interns matrix payloads so the exhaustive triple loop works on small ints.
// The hash is lossy but deterministic; collisions fall back to exact equality.
struct MatHash {
  std::size_t operator()(const Mat3& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const Rational& r : m.m) {
      h = h * 1099511628211ull + hash_value(numerator(r));
      h = h * 1099511628211ull + hash_value(denominator(r));
    }
    return h;
  }
};

class MatPool {
public:
  int id_of(const Mat3& m) {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(mats_.size());
    mats_.push_back(m);
    ids_.emplace(m, id);
    return id;
  }
  const Mat3& mat(int id) const { return mats_[static_cast<std::size_t>(id)]; }
  int product(int a, int b) {
    auto it = prod_.find({a, b});
    if (it != prod_.end()) return it->second;
    int r = id_of(mat_mul(mat(a), mat(b)));
    prod_.emplace(std::make_pair(a, b), r);
    return r;
  }

private:
  std::vector<Mat3> mats_;
  std::unordered_map<Mat3, int, MatHash> ids_;
  std::map<std::pair<int, int>, int> prod_;
};

struct Checker {
  static constexpr std::size_t kMaxViolations = 10000;

  const FiniteGroupoid& g;
  AxiomReport rep;
  bool truncated = false;
  MatPool pool;
  std::vector<int> pay;                                 // arrow index -> payload id
  std::unordered_map<std::uint64_t, int> mat_arrow;     // (src,dst,pid) -> index
  std::unordered_map<std::uint64_t, int> comp_map;      // (gi,hi) -> result index

  explicit Checker(const FiniteGroupoid& gg) : g(gg) {
    if (g.mode() == Mode::MatrixDerived) {
      pay.reserve(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Arrow& a = g.arrows()[i];
        int pid = pool.id_of(a.payload.matrix());
        pay.push_back(pid);
        mat_arrow[triple_key(a.src, a.dst, pid)] = static_cast<int>(i);
      }
    }
  }

  static std::uint64_t triple_key(int s, int d, int pid) {
    return (static_cast<std::uint64_t>(s) << 44) | (static_cast<std::uint64_t>(d) << 24) |
           static_cast<std::uint64_t>(pid);
  }
  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  void violate(const std::string& axiom, const std::string& offender, const std::string& why) {
    if (rep.violations.size() >= kMaxViolations) {
      truncated = true;
      return;
    }
    rep.violations.push_back({axiom, offender, why});
  }

  // composition as arrow index; -2 = composable but escapes the arrow set,
  // -1 = table has no entry.
  int comp(int gi, int hi) {
    const Arrow& a = g.arrows()[static_cast<std::size_t>(gi)];
    const Arrow& b = g.arrows()[static_cast<std::size_t>(hi)];
    if (g.mode() == Mode::MatrixDerived) {
      int pid = pool.product(pay[static_cast<std::size_t>(gi)], pay[static_cast<std::size_t>(hi)]);
      auto it = mat_arrow.find(triple_key(b.src, a.dst, pid));
      return it == mat_arrow.end() ? -2 : it->second;
    }
    auto it = g.tables().compose.find({gi, hi});
    if (it == g.tables().compose.end()) return -1;
    if (it->second < 0 || it->second >= static_cast<int>(g.size())) return -1;
    return it->second;
  }

  int lookup(int gi, int hi) const {
    auto it = comp_map.find(pair_key(gi, hi));
    return it == comp_map.end() ? -1 : it->second;
  }

  std::string astr(int i) { return arrow_str(g, g.arrows()[static_cast<std::size_t>(i)]); }

  void run() {
    const auto& arrows = g.arrows();
    const int n = static_cast<int>(arrows.size());

    // identities present at every object
    std::vector<int> ident(static_cast<std::size_t>(g.body().size()), -1);
    for (int x = 0; x < g.body().size(); ++x) {
      if (g.mode() == Mode::MatrixDerived) {
        Arrow e(x, x, Payload(Mat3::identity()));
        ident[static_cast<std::size_t>(x)] = g.arrow_index(e);
      } else {
        int ii = g.tables().identity[static_cast<std::size_t>(x)];
        if (ii >= 0 && ii < n) {
          const Arrow& e = arrows[static_cast<std::size_t>(ii)];
          if (e.src != x || e.dst != x) {
            violate("identity-missing", astr(ii), "identity table entry is not a loop at " + g.body().name(x));
            ii = -1;
          }
        } else {
          ii = -1;
        }
        ident[static_cast<std::size_t>(x)] = ii;
      }
      if (ident[static_cast<std::size_t>(x)] < 0)
        violate("identity-missing", "epsilon(" + g.body().name(x) + ")",
                "no identity arrow at object " + g.body().name(x));
    }

    // composable pairs: closure and the axiom (1) endpoint laws
    std::vector<std::vector<std::pair<int, int>>> comp_row(static_cast<std::size_t>(n));
    for (int gi = 0; gi < n; ++gi) {
      const Arrow& a = arrows[static_cast<std::size_t>(gi)];
      for (int hi : g.beta_fibre(a.src)) {
        int r = comp(gi, hi);
        if (r == -2) {
          violate("closure", astr(gi) + " . " + astr(hi), "composite escapes the arrow set");
          continue;
        }
        if (r == -1) {
          violate("closure", astr(gi) + " . " + astr(hi), "composition table has no entry");
          continue;
        }
        const Arrow& b = arrows[static_cast<std::size_t>(hi)];
        const Arrow& c = arrows[static_cast<std::size_t>(r)];
        if (c.src != b.src || c.dst != a.dst)
          violate("axiom1-endpoints", astr(gi) + " . " + astr(hi) + " = " + astr(r),
                  "alpha/beta of the composite disagree with alpha(h), beta(g)");
        comp_row[static_cast<std::size_t>(gi)].push_back({hi, r});
        comp_map.emplace(pair_key(gi, hi), r);
      }
    }

    // associativity over composable triples
    for (int gi = 0; gi < n; ++gi) {
      for (auto [hi, gh] : comp_row[static_cast<std::size_t>(gi)]) {
        for (auto [ki, hk] : comp_row[static_cast<std::size_t>(hi)]) {
          int l = lookup(gh, ki);
          int r = lookup(gi, hk);
          if (l < 0 || r < 0) continue;  // already reported as a closure failure
          if (l != r)
            violate("axiom2-associativity", astr(gi) + " . " + astr(hi) + " . " + astr(ki),
                    "(g.h).k = " + astr(l) + " but g.(h.k) = " + astr(r));
        }
      }
    }

    // unit laws
    for (int gi = 0; gi < n; ++gi) {
      const Arrow& a = arrows[static_cast<std::size_t>(gi)];
      int ea = ident[static_cast<std::size_t>(a.src)];
      int eb = ident[static_cast<std::size_t>(a.dst)];
      if (ea >= 0) {
        int r = lookup(gi, ea);
        if (r >= 0 && r != gi)
          violate("axiom3-unit", astr(gi), "g . epsilon(alpha(g)) = " + astr(r) + " != g");
      }
      if (eb >= 0) {
        int r = lookup(eb, gi);
        if (r >= 0 && r != gi)
          violate("axiom3-unit", astr(gi), "epsilon(beta(g)) . g = " + astr(r) + " != g");
      }
    }

    // inverse laws
    for (int gi = 0; gi < n; ++gi) {
      const Arrow& a = arrows[static_cast<std::size_t>(gi)];
      int ii = -1;
      if (g.mode() == Mode::MatrixDerived) {
        Arrow inv(a.dst, a.src, Payload(mat_inverse(a.payload.matrix())));
        ii = g.arrow_index(inv);
        if (ii < 0) {
          violate("axiom4-inverse", astr(gi), "inverse arrow missing from the set");
          continue;
        }
      } else {
        ii = g.tables().inverse[static_cast<std::size_t>(gi)];
        if (ii < 0 || ii >= n) {
          violate("axiom4-inverse", astr(gi), "inverse table has no entry");
          continue;
        }
      }
      const Arrow& inv = arrows[static_cast<std::size_t>(ii)];
      if (inv.src != a.dst || inv.dst != a.src) {
        violate("axiom4-inverse", astr(gi), "inverse " + astr(ii) + " has wrong endpoints");
        continue;
      }
      int li = lookup(ii, gi);
      if (li >= 0 && li != ident[static_cast<std::size_t>(a.src)])
        violate("axiom4-inverse", astr(gi), "i(g) . g != epsilon(alpha(g))");
      int ri = lookup(gi, ii);
      if (ri >= 0 && ri != ident[static_cast<std::size_t>(a.dst)])
        violate("axiom4-inverse", astr(gi), "g . i(g) != epsilon(beta(g))");
    }

    if (truncated)
      rep.violations.push_back(
          {"truncated", "-", "violation list capped at " + std::to_string(kMaxViolations)});
    rep.passed = rep.violations.empty();
  }
};

}  // namespace

AxiomReport check_axioms(const FiniteGroupoid& g) {
  Checker c(g);
  c.run();
  return std::move(c.rep);
}

OrbitPartition orbit_partition(const FiniteGroupoid& g) {
  const int n = g.body().size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Arrow& a : g.arrows()) {
    int rs = find(a.src), rd = find(a.dst);
    if (rs != rd) parent[static_cast<std::size_t>(std::max(rs, rd))] = std::min(rs, rd);
  }
  std::map<int, std::vector<int>> classes;
  for (int x = 0; x < n; ++x) classes[find(x)].push_back(x);

  OrbitPartition p;
  for (auto& [root, members] : classes) p.classes.push_back(std::move(members));
  if (p.classes.size() == 1)
    p.kind = OrbitKind::Transitive;
  else if (p.classes.size() == static_cast<std::size_t>(n))
    p.kind = OrbitKind::TotallyIntransitive;
  else
    p.kind = OrbitKind::Intermediate;
  return p;
}

FiniteGroupoid intersect(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  if (!(g1.body() == g2.body())) fail(Err::ObjectMismatch, "intersect requires one shared body");
  if (g1.mode() != g2.mode()) fail(Err::ModeMismatch, "intersect requires a common mode");

  std::vector<Arrow> common;
  std::set_intersection(g1.arrows().begin(), g1.arrows().end(), g2.arrows().begin(),
                        g2.arrows().end(), std::back_inserter(common));
  if (g1.mode() == Mode::MatrixDerived) return FiniteGroupoid::matrix_derived(g1.body(), common);

  // tabular: the two structure tables must agree wherever both are defined,
  // otherwise the inputs do not live in one ambient groupoid.
  Tables t;
  t.identity.assign(static_cast<std::size_t>(g1.body().size()), -1);
  t.inverse.assign(common.size(), -1);
  auto index_in = [&](const Arrow& a) {
    auto it = std::lower_bound(common.begin(), common.end(), a);
    return it != common.end() && *it == a ? static_cast<int>(it - common.begin()) : -1;
  };
  for (int x = 0; x < g1.body().size(); ++x) {
    Arrow e1 = g1.identity(x), e2 = g2.identity(x);
    if (!(e1 == e2)) fail(Err::ModeMismatch, "identity arrows disagree at " + g1.body().name(x));
    t.identity[static_cast<std::size_t>(x)] = index_in(e1);
  }
  for (std::size_t i = 0; i < common.size(); ++i) {
    Arrow i1 = g1.inverse(common[i]), i2 = g2.inverse(common[i]);
    if (!(i1 == i2)) fail(Err::ModeMismatch, "inverse tables disagree on a common arrow");
    t.inverse[i] = index_in(i1);
  }
  for (std::size_t gi = 0; gi < common.size(); ++gi)
    for (std::size_t hi = 0; hi < common.size(); ++hi) {
      if (common[gi].src != common[hi].dst) continue;
      Arrow r1 = g1.compose(common[gi], common[hi]);
      Arrow r2 = g2.compose(common[gi], common[hi]);
      if (!(r1 == r2)) fail(Err::ModeMismatch, "composition tables disagree on a common pair");
      int r = index_in(r1);
      if (r >= 0) t.compose[{static_cast<int>(gi), static_cast<int>(hi)}] = r;
    }
  return FiniteGroupoid::tabular(g1.body(), common, t);
}

FiniteGroupoid generate_closure(const Body& body, const std::vector<Arrow>& seeds,
                                std::size_t cap) {
  validate_body(body);
  std::set<Arrow> have;
  std::vector<Arrow> work;
  auto push = [&](const Arrow& a) {
    if (have.insert(a).second) {
      work.push_back(a);
      if (have.size() > cap)
        fail(Err::ClosureExceedsCap, "closure exceeds cap of " + std::to_string(cap) + " arrows");
    }
  };
  for (int x = 0; x < body.size(); ++x) push(Arrow(x, x, Payload(Mat3::identity())));
  for (const Arrow& s : seeds) {
    validate_endpoints(body, s);
    if (!s.payload.is_matrix() || mat_det(s.payload.matrix()) == 0)
      fail(Err::InvalidParams, "closure seeds must be invertible matrix arrows");
    push(s);
    push(Arrow(s.dst, s.src, Payload(mat_inverse(s.payload.matrix()))));
  }
  std::size_t next = 0;
  while (next < work.size()) {
    Arrow a = work[next++];
    std::vector<Arrow> snapshot(have.begin(), have.end());
    for (const Arrow& b : snapshot) {
      if (a.src == b.dst) push(Arrow(b.src, a.dst, Payload(mat_mul(a.payload.matrix(), b.payload.matrix()))));
      if (b.src == a.dst) push(Arrow(a.src, b.dst, Payload(mat_mul(b.payload.matrix(), a.payload.matrix()))));
    }
  }
  return FiniteGroupoid::matrix_derived(body, std::vector<Arrow>(have.begin(), have.end()));
}

bool is_subgroupoid(const FiniteGroupoid& h, const FiniteGroupoid& g) {
  std::set<std::string> g_names(g.body().names.begin(), g.body().names.end());
  for (const auto& n : h.body().names)
    if (!g_names.count(n)) return false;
  // arrow inclusion is up to object renaming between the two bodies
  std::vector<int> to_g(static_cast<std::size_t>(h.body().size()));
  for (int x = 0; x < h.body().size(); ++x) to_g[static_cast<std::size_t>(x)] = g.body().index_of(h.body().name(x));
  for (const Arrow& a : h.arrows()) {
    Arrow b(to_g[static_cast<std::size_t>(a.src)], to_g[static_cast<std::size_t>(a.dst)], a.payload);
    if (!g.contains(b)) return false;
  }
  return check_axioms(h).passed;
}

}  // namespace compomat
