#include "compomat/fixtures.hpp"

#include "compomat/error.hpp"
#include "compomat/uniformity.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace compomat {

namespace {

Body numbered_body(int n, const std::string& prefix) {
  Body b;
  for (int i = 1; i <= n; ++i) b.names.push_back(prefix + std::to_string(i));
  return b;
}

Body xyz_body(int n) {
  if (n == 3) return Body{{"X", "Y", "Z"}};
  return numbered_body(n, "X");
}

Mat3 cycle3() {  // e1 -> e2 -> e3 -> e1
  Mat3 a;
  a.at(1, 0) = 1;
  a.at(2, 1) = 1;
  a.at(0, 2) = 1;
  return a;
}

Mat3 signed_cycle3() {  // e1 -> e2, e2 -> -e3, e3 -> -e1
  Mat3 s;
  s.at(1, 0) = 1;
  s.at(2, 1) = -1;
  s.at(0, 2) = -1;
  return s;
}

}  // namespace

FiniteGroupoid pair_groupoid(int n) {
  if (n < 1) fail(Err::InvalidParams, "pair groupoid needs at least one point");
  Body body = numbered_body(n, "");
  std::vector<Arrow> arrows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      arrows.emplace_back(a, b, Payload("(" + body.name(a) + "," + body.name(b) + ")"));
  std::sort(arrows.begin(), arrows.end());
  auto index = [&](int a, int b) {
    Arrow probe(a, b, Payload("(" + body.name(a) + "," + body.name(b) + ")"));
    auto it = std::lower_bound(arrows.begin(), arrows.end(), probe);
    return static_cast<int>(it - arrows.begin());
  };
  Tables t;
  t.identity.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) t.identity[static_cast<std::size_t>(a)] = index(a, a);
  t.inverse.resize(arrows.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.inverse[static_cast<std::size_t>(index(a, b))] = index(b, a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)  // (c,b) . (a,c) = (a,b)
        t.compose[{index(cc, b), index(a, cc)}] = index(a, b);
  return FiniteGroupoid::tabular(std::move(body), std::move(arrows), std::move(t));
}

FiniteGroupoid group_as_groupoid(const GroupTable& t) {
  const int n = static_cast<int>(t.elements.size());
  if (n == 0) fail(Err::NotAGroup, "empty element set");
  if (t.product.size() != static_cast<std::size_t>(n))
    fail(Err::NotAGroup, "product table is not square");
  for (const auto& row : t.product) {
    if (row.size() != static_cast<std::size_t>(n)) fail(Err::NotAGroup, "product table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(Err::NotAGroup, "product table entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool ident = true;
    for (int j = 0; j < n; ++j)
      if (t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != j ||
          t.product[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != j)
        ident = false;
    if (ident) {
      e = i;
      break;
    }
  }
  if (e < 0) fail(Err::NotAGroup, "no identity element");
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n; ++j)
      if (t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == e &&
          t.product[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == e)
        has_inverse = true;
    if (!has_inverse) fail(Err::NotAGroup, "element '" + t.elements[static_cast<std::size_t>(i)] + "' has no inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int ij = t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int jk = t.product[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (t.product[static_cast<std::size_t>(ij)][static_cast<std::size_t>(k)] !=
            t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(jk)])
          fail(Err::NotAGroup, "product table is not associative");
      }

  Body body{{"pt"}};
  std::set<std::string> seen;
  for (const auto& name : t.elements)
    if (!seen.insert(name).second) fail(Err::NotAGroup, "duplicate element name '" + name + "'");
  std::vector<Arrow> sorted;
  for (const auto& name : t.elements) sorted.emplace_back(0, 0, Payload(name));
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> to_sorted(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Arrow probe(0, 0, Payload(t.elements[static_cast<std::size_t>(i)]));
    to_sorted[static_cast<std::size_t>(i)] =
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), probe) - sorted.begin());
  }
  Tables tab;
  tab.identity = {to_sorted[static_cast<std::size_t>(e)]};
  tab.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == e &&
          t.product[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == e)
        tab.inverse[static_cast<std::size_t>(to_sorted[static_cast<std::size_t>(i)])] =
            to_sorted[static_cast<std::size_t>(j)];
      tab.compose[{to_sorted[static_cast<std::size_t>(i)], to_sorted[static_cast<std::size_t>(j)]}] =
          to_sorted[static_cast<std::size_t>(t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
    }
  return FiniteGroupoid::tabular(std::move(body), std::move(sorted), std::move(tab));
}

GroupTable cyclic_group_table(int n) {
  if (n < 1) fail(Err::InvalidParams, "cyclic group needs n >= 1");
  GroupTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back("g" + std::to_string(i));
  t.product.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return t;
}

CrystallineParams crystalline_default() {
  CrystallineParams p;
  p.n_points = 3;
  p.g = cycle3();
  p.h = signed_cycle3();
  return p;
}

Composite crystalline_composite(const CrystallineParams& p) {
  if (p.n_points < 2) fail(Err::InvalidParams, "crystalline fixture needs at least two points");
  MatrixClass cg = classify_matrix(p.g);
  MatrixClass ch = classify_matrix(p.h);
  if (!cg.orthogonal || !ch.orthogonal)
    fail(Err::InvalidParams, "crystalline symmetries must be orthogonal");
  // exactly three material symmetries per point: <g> = {I, g, g^-1} with g
  // of order exactly 3 (order 2 collapses the set, higher orders overflow it)
  if (!cg.finite_order || *cg.finite_order != 3)
    fail(Err::InvalidParams, "g must have order exactly 3 for three material symmetries");
  if (!ch.finite_order || *ch.finite_order != 3)
    fail(Err::InvalidParams, "h must have order exactly 3 for three material symmetries");
  const Mat3 g2 = mat_mul(p.g, p.g);
  if (p.h == p.g || p.h == g2) fail(Err::InvalidParams, "h must differ from g and g^-1");

  Body body = xyz_body(p.n_points);
  auto transport = [&](int x, int y) -> Mat3 {
    auto it = p.transports.find({x, y});
    return it == p.transports.end() ? Mat3::identity() : it->second;
  };
  for (int x = 0; x < p.n_points; ++x)
    if (!(transport(x, x) == Mat3::identity()))
      fail(Err::InvalidParams, "transports must be the identity on the diagonal");

  auto build = [&](const Mat3& sym) {
    std::vector<Arrow> arrows;
    const Mat3 sym2 = mat_mul(sym, sym);
    for (int x = 0; x < p.n_points; ++x)
      for (int y = 0; y < p.n_points; ++y) {
        Mat3 t = transport(x, y);
        arrows.emplace_back(x, y, Payload(t));
        arrows.emplace_back(x, y, Payload(mat_mul(t, sym)));
        arrows.emplace_back(x, y, Payload(mat_mul(t, sym2)));
      }
    return FiniteGroupoid::matrix_derived(body, std::move(arrows));
  };
  FiniteGroupoid o1 = build(p.g);
  FiniteGroupoid o2 = build(p.h);
  for (const FiniteGroupoid* g : {&o1, &o2}) {
    AxiomReport rep = check_axioms(*g);
    if (!rep.passed)
      fail(Err::InvalidParams, "crystalline transports break closure: " +
                                   rep.violations.front().axiom + " at " +
                                   rep.violations.front().offender);
    for (int x = 0; x < p.n_points; ++x)
      for (int y = 0; y < p.n_points; ++y)
        if (g->hom_indices(x, y).size() != 3)
          fail(Err::InvalidParams, "hom-sets must have exactly three material isomorphisms");
  }
  return make_composite(declared_material_groupoid(std::move(o1)),
                        declared_material_groupoid(std::move(o2)));
}

TriclinicParams triclinic_default() {
  TriclinicParams p;
  const Mat3 a = cycle3();
  p.p1 = {Mat3::identity(), Mat3::identity(), Mat3::identity()};
  p.p2 = {Mat3::identity(), a, mat_mul(a, a)};
  return p;
}

Composite triclinic_composite(const TriclinicParams& p) {
  const int n = p.n_points();
  if (n < 1 || p.p2.size() != p.p1.size())
    fail(Err::InvalidParams, "triclinic implants must cover the same nonempty body");
  for (const auto& impl : {p.p1, p.p2})
    for (const Mat3& m : impl)
      if (mat_det(m) == 0) fail(Err::InvalidParams, "implants must be invertible");

  Body body = xyz_body(n);
  auto build = [&](const std::vector<Mat3>& impl) {
    std::vector<Arrow> arrows;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        arrows.emplace_back(x, y, Payload(mat_mul(mat_inverse(impl[static_cast<std::size_t>(y)]),
                                                  impl[static_cast<std::size_t>(x)])));
    }
    return FiniteGroupoid::matrix_derived(body, std::move(arrows));
  };
  return make_composite(declared_material_groupoid(build(p.p1)),
                        declared_material_groupoid(build(p.p2)));
}

CommutingCheck check_commuting_condition(const TriclinicParams& p, bool distinct_only) {
  const int n = p.n_points();
  auto t = [&](const std::vector<Mat3>& impl, int x, int y) {
    return mat_mul(mat_inverse(impl[static_cast<std::size_t>(y)]), impl[static_cast<std::size_t>(x)]);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (distinct_only && (x == y || y == z || x == z)) continue;
        Mat3 lhs = mat_mul(t(p.p2, y, z), t(p.p1, x, y));
        Mat3 rhs = mat_mul(t(p.p1, y, z), t(p.p2, x, y));
        if (!(lhs == rhs)) return {false, {x, y, z}};
      }
  return {true, {-1, -1, -1}};
}

TriclinicSearchReport triclinic_search(int n_points) {
  if (n_points < 2) fail(Err::InvalidParams, "triclinic search needs at least two points");
  const std::vector<Mat3>& sp = signed_permutations();
  const int m = static_cast<int>(sp.size());
  std::map<Mat3, int> idx;
  for (int i = 0; i < m; ++i) idx[sp[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<int> inv(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          idx.at(mat_mul(sp[static_cast<std::size_t>(i)], sp[static_cast<std::size_t>(j)]));
    inv[static_cast<std::size_t>(i)] = idx.at(mat_transpose(sp[static_cast<std::size_t>(i)]));
  }
  const int e = idx.at(Mat3::identity());

  TriclinicSearchReport rep;
  rep.n_points = n_points;
  std::vector<int> profile(static_cast<std::size_t>(n_points), 0);
  profile[0] = e;  // gauge: P2 at the first point is the identity

  // distinct-only displayed condition on the profile: U(y).U(z)^-1.U(y) = U(x)
  auto distinct_ok = [&]() {
    for (int x = 0; x < n_points; ++x)
      for (int y = 0; y < n_points; ++y) {
        if (y == x) continue;
        for (int z = 0; z < n_points; ++z) {
          if (z == x || z == y) continue;
          int uy = profile[static_cast<std::size_t>(y)];
          int lhs = mul[static_cast<std::size_t>(mul[static_cast<std::size_t>(uy)][static_cast<std::size_t>(
              inv[static_cast<std::size_t>(profile[static_cast<std::size_t>(z)])])])]
                       [static_cast<std::size_t>(uy)];
          if (lhs != profile[static_cast<std::size_t>(x)]) return false;
        }
      }
    return true;
  };

  // odometer over profile[1..n-1]; profile[0] stays at the identity
  while (true) {
    ++rep.instances_scanned;
    if (distinct_ok()) {
      ++rep.distinct_condition_holders;
      bool constant = true;
      for (int x = 1; x < n_points; ++x)
        if (profile[static_cast<std::size_t>(x)] != profile[0]) constant = false;
      if (!constant) {
        TriclinicFinding f;
        f.profile.assign(profile.begin(), profile.end());
        f.commuting_distinct = true;
        TriclinicParams params;
        params.p1.assign(static_cast<std::size_t>(n_points), Mat3::identity());
        for (int x = 0; x < n_points; ++x)
          params.p2.push_back(sp[static_cast<std::size_t>(profile[static_cast<std::size_t>(x)])]);
        f.commuting_all = check_commuting_condition(params, false).holds;
        Composite comp = triclinic_composite(params);
        f.uniform = composite_uniform(comp);
        FiniteGroupoid inter = composite_groupoid(comp);
        f.completely_non_uniform = true;
        for (int x = 0; x < n_points && f.completely_non_uniform; ++x)
          for (int y = 0; y < n_points; ++y)
            if (x != y && !inter.hom_indices(x, y).empty()) {
              f.completely_non_uniform = false;
              break;
            }
        f.weak_corners = is_weakly_uniform(comp, WeakVariant::Corners).value;
        f.weak_midpoint = is_weakly_uniform(comp, WeakVariant::Midpoint).value;
        f.realizes_paper_claim = f.completely_non_uniform && f.weak_corners;
        rep.any_realizes_paper_claim = rep.any_realizes_paper_claim || f.realizes_paper_claim;
        rep.findings.push_back(std::move(f));
      }
    }
    int pos = n_points - 1;
    while (pos >= 1) {
      if (++profile[static_cast<std::size_t>(pos)] < m) break;
      profile[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
  return rep;
}

const std::vector<MatrixGroup>& default_group_pool() {
  static const std::vector<MatrixGroup> pool = [] {
    Body pt{{"pt"}};
    auto close = [&](const std::string& name, std::vector<Mat3> gens) {
      std::vector<Arrow> seeds;
      for (Mat3& m : gens) seeds.emplace_back(0, 0, Payload(std::move(m)));
      FiniteGroupoid g = generate_closure(pt, seeds, 100);
      MatrixGroup grp;
      grp.name = name;
      for (const Arrow& a : g.arrows()) grp.elements.push_back(a.payload.matrix());
      return grp;
    };
    Mat3 a = cycle3();
    Mat3 s = signed_cycle3();
    Mat3 swap01;
    swap01.at(1, 0) = 1;
    swap01.at(0, 1) = 1;
    swap01.at(2, 2) = 1;
    Mat3 rz;  // quarter turn about e3
    rz.at(0, 1) = -1;
    rz.at(1, 0) = 1;
    rz.at(2, 2) = 1;
    std::vector<MatrixGroup> out;
    out.push_back(close("trivial", {}));
    out.push_back(close("c2_diag", {Mat3::diag(-1, -1, 1)}));
    out.push_back(close("c2_swap", {swap01}));
    out.push_back(close("c3_cycle", {a}));
    out.push_back(close("c3_signed", {s}));
    out.push_back(close("c4_rot", {rz}));
    out.push_back(close("v4_diag", {Mat3::diag(-1, -1, 1), Mat3::diag(1, -1, -1)}));
    out.push_back(close("s3", {a, swap01}));
    out.push_back(close("c6", {mat_mul(Mat3::diag(-1, -1, -1), a)}));
    out.push_back(close("d4", {rz, Mat3::diag(1, -1, 1)}));
    return out;
  }();
  return pool;
}

namespace {

Composite random_composite_impl(std::mt19937_64& rng, int n_points,
                                const std::vector<MatrixGroup>& pool) {
  if (n_points < 2) fail(Err::InvalidParams, "random composite needs at least two points");
  std::vector<const MatrixGroup*> usable;
  for (const MatrixGroup& g : pool)
    if (static_cast<std::size_t>(n_points) * static_cast<std::size_t>(n_points) * g.elements.size() <= 400)
      usable.push_back(&g);
  if (usable.empty()) fail(Err::InvalidParams, "no pool group fits the 400-arrow budget");

  const std::vector<Mat3>& sp = signed_permutations();
  const MatrixGroup& h1 = *usable[rng() % usable.size()];
  const MatrixGroup& h2 = *usable[rng() % usable.size()];
  const bool shared = rng() % 2 == 0;

  auto draw_transports = [&]() {
    std::vector<Mat3> t(static_cast<std::size_t>(n_points), Mat3::identity());
    if (rng() % 2 == 0)
      for (int x = 1; x < n_points; ++x) t[static_cast<std::size_t>(x)] = sp[rng() % sp.size()];
    return t;
  };
  std::vector<Mat3> tau1 = draw_transports();
  std::vector<Mat3> tau2 = shared ? tau1 : draw_transports();

  Body body = numbered_body(n_points, "P");
  auto build = [&](const MatrixGroup& grp, const std::vector<Mat3>& tau) {
    std::vector<Arrow> arrows;
    for (int x = 0; x < n_points; ++x) {
      Mat3 tx_inv = mat_inverse(tau[static_cast<std::size_t>(x)]);
      for (int y = 0; y < n_points; ++y)
        for (const Mat3& hh : grp.elements)
          arrows.emplace_back(x, y, Payload(mat_mul(tau[static_cast<std::size_t>(y)], mat_mul(hh, tx_inv))));
    }
    return FiniteGroupoid::matrix_derived(body, std::move(arrows));
  };
  return make_composite(declared_material_groupoid(build(h1, tau1)),
                        declared_material_groupoid(build(h2, tau2)));
}

}  // namespace

Composite random_composite(std::uint64_t seed, int n_points, const std::vector<MatrixGroup>& pool) {
  std::mt19937_64 rng(seed);
  return random_composite_impl(rng, n_points, pool);
}

Composite random_composite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 2 + static_cast<int>(rng() % 7);
  return random_composite_impl(rng, n, default_group_pool());
}

}  // namespace compomat
