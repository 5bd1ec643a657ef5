#include "compomat/square.hpp"

#include "compomat/error.hpp"

#include <algorithm>
#include <thread>

namespace compomat {

int square_cmp(const Square& a, const Square& b) {
  if (int c = arrow_cmp(a.bottom, b.bottom)) return c;
  if (int c = arrow_cmp(a.top, b.top)) return c;
  if (int c = arrow_cmp(a.right, b.right)) return c;
  return arrow_cmp(a.left, b.left);
}

std::string square_str(const Composite& c, const Square& sq) {
  const FiniteGroupoid& g1 = c.g1();
  return "{bottom " + arrow_str(g1, sq.bottom) + ", top " + arrow_str(g1, sq.top) + ", right " +
         arrow_str(g1, sq.right) + ", left " + arrow_str(g1, sq.left) + "}";
}

Square make_square(const Composite& c, const Arrow& bottom, const Arrow& top, const Arrow& right,
                   const Arrow& left) {
  if (!c.g1().contains(bottom)) fail(Err::WrongGroupoid, "bottom side must belong to Omega1");
  if (!c.g1().contains(top)) fail(Err::WrongGroupoid, "top side must belong to Omega1");
  if (!c.g2().contains(right)) fail(Err::WrongGroupoid, "right side must belong to Omega2");
  if (!c.g2().contains(left)) fail(Err::WrongGroupoid, "left side must belong to Omega2");
  if (bottom.src != right.src)
    fail(Err::CornerMismatch, "alpha(g1) != alpha(g2) at the bottom-right corner");
  if (top.src != right.dst)
    fail(Err::CornerMismatch, "alpha(h1) != beta(g2) at the top-right corner");
  if (bottom.dst != left.src)
    fail(Err::CornerMismatch, "beta(g1) != alpha(h2) at the bottom-left corner");
  if (top.dst != left.dst)
    fail(Err::CornerMismatch, "beta(h1) != beta(h2) at the top-left corner");
  return Square{bottom, top, right, left};
}

bool is_commutative(const Composite& c, const Square& sq) {
  return ambient_compose(c, sq.left, sq.bottom) == ambient_compose(c, sq.top, sq.right);
}

std::array<bool, 4> equivalent_conditions(const Composite& c, const Square& sq) {
  const Arrow bi = ambient_inverse(c, sq.bottom);
  const Arrow ti = ambient_inverse(c, sq.top);
  const Arrow ri = ambient_inverse(c, sq.right);
  const Arrow li = ambient_inverse(c, sq.left);
  std::array<bool, 4> r{};
  // i)   left . bottom        == top . right
  r[0] = ambient_compose(c, sq.left, sq.bottom) == ambient_compose(c, sq.top, sq.right);
  // ii)  bottom . right^-1    == left^-1 . top
  r[1] = ambient_compose(c, sq.bottom, ri) == ambient_compose(c, li, sq.top);
  // iii) top^-1 . left        == right . bottom^-1
  r[2] = ambient_compose(c, ti, sq.left) == ambient_compose(c, sq.right, bi);
  // iv)  right^-1 . top^-1    == bottom^-1 . left^-1
  r[3] = ambient_compose(c, ri, ti) == ambient_compose(c, bi, li);
  return r;
}

Square vertical_product(const Composite& c, const Square& sq, const Square& sq2) {
  if (!(sq.right == sq2.left))
    fail(Err::NotComposableVertically, "right(sq) must equal left(sq2)");
  return Square{ambient_compose(c, sq.bottom, sq2.bottom), ambient_compose(c, sq.top, sq2.top),
                sq2.right, sq.left};
}

Square horizontal_product(const Composite& c, const Square& sq, const Square& sq2) {
  if (!(sq.bottom == sq2.top))
    fail(Err::NotComposableHorizontally, "bottom(sq) must equal top(sq2)");
  return Square{sq2.bottom, sq.top, ambient_compose(c, sq.right, sq2.right),
                ambient_compose(c, sq.left, sq2.left)};
}

Square unit_square(const Composite& c, Direction dir, const Arrow& arrow) {
  if (dir == Direction::Horizontal) {
    if (!c.g1().contains(arrow)) fail(Err::WrongGroupoid, "horizontal unit takes an Omega1 arrow");
    return Square{arrow, arrow, c.g2().identity(arrow.src), c.g2().identity(arrow.dst)};
  }
  if (!c.g2().contains(arrow)) fail(Err::WrongGroupoid, "vertical unit takes an Omega2 arrow");
  return Square{c.g1().identity(arrow.src), c.g1().identity(arrow.dst), arrow, arrow};
}

Square invert_square(const Composite& c, const Square& sq, Direction dir) {
  if (dir == Direction::Horizontal)
    return Square{sq.top, sq.bottom, ambient_inverse(c, sq.right), ambient_inverse(c, sq.left)};
  return Square{ambient_inverse(c, sq.bottom), ambient_inverse(c, sq.top), sq.left, sq.right};
}

bool interchange_check(const Composite& c, const Square& gq, const Square& hq, const Square& aq,
                       const Square& bq) {
  if (!(gq.right == hq.left) || !(aq.right == bq.left) || !(gq.bottom == aq.top) ||
      !(hq.bottom == bq.top))
    fail(Err::NotComposableBlock, "2x2 block has mismatched inner edges");
  Square lhs = horizontal_product(c, vertical_product(c, gq, hq), vertical_product(c, aq, bq));
  Square rhs = vertical_product(c, horizontal_product(c, gq, aq), horizontal_product(c, hq, bq));
  return lhs == rhs;
}

namespace {

// sides as indices into the (already canonically sorted) arrow vectors, so
// ordering and sorting stay on plain integers
struct SquareIdx {
  int b, t, r, l;
  bool operator<(const SquareIdx& o) const {
    if (b != o.b) return b < o.b;
    if (t != o.t) return t < o.t;
    if (r != o.r) return r < o.r;
    return l < o.l;
  }
};

// squares with bottom arrow drawn from [from, to); callers merge in order
void enumerate_block(const Composite& c, bool commutative_only, std::size_t from, std::size_t to,
                     std::vector<SquareIdx>& out) {
  const FiniteGroupoid& g1 = c.g1();
  const FiniteGroupoid& g2 = c.g2();
  const int n = c.body.size();
  for (std::size_t bi = from; bi < to; ++bi) {
    const Arrow& bottom = g1.arrows()[bi];
    for (int ci = 0; ci < n; ++ci) {
      for (int ri : g2.hom_indices(bottom.src, ci)) {
        const Arrow& right = g2.arrows()[static_cast<std::size_t>(ri)];
        for (int di = 0; di < n; ++di) {
          for (int li : g2.hom_indices(bottom.dst, di)) {
            const Arrow& left = g2.arrows()[static_cast<std::size_t>(li)];
            for (int ti : g1.hom_indices(ci, di)) {
              const Arrow& top = g1.arrows()[static_cast<std::size_t>(ti)];
              if (commutative_only && !is_commutative(c, Square{bottom, top, right, left}))
                continue;
              out.push_back({static_cast<int>(bi), ti, ri, li});
            }
          }
        }
      }
    }
  }
}

}  // namespace

SquareSet enumerate_squares(const Composite& c, bool commutative_only, std::size_t cap,
                            int threads) {
  const std::size_t nb = c.g1().size();
  std::vector<SquareIdx> all;
  if (threads <= 1 || nb < 2) {
    enumerate_block(c, commutative_only, 0, nb, all);
  } else {
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), nb);
    std::vector<std::vector<SquareIdx>> buckets(nt);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t from = nb * t / nt, to = nb * (t + 1) / nt;
      pool.emplace_back([&, t, from, to] { enumerate_block(c, commutative_only, from, to, buckets[t]); });
    }
    for (auto& th : pool) th.join();
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
  }
  if (all.size() > cap)
    fail(Err::SizeCap, "square enumeration exceeds cap of " + std::to_string(cap));
  std::sort(all.begin(), all.end());
  SquareSet out;
  out.commutative_only = commutative_only;
  out.squares.reserve(all.size());
  for (const SquareIdx& s : all)
    out.squares.push_back(Square{c.g1().arrows()[static_cast<std::size_t>(s.b)],
                                 c.g1().arrows()[static_cast<std::size_t>(s.t)],
                                 c.g2().arrows()[static_cast<std::size_t>(s.r)],
                                 c.g2().arrows()[static_cast<std::size_t>(s.l)]});
  return out;
}

FiniteGroupoid core_groupoid(const Composite& c) {
  const FiniteGroupoid& g1 = c.g1();
  const FiniteGroupoid& g2 = c.g2();
  const int n = c.body.size();

  // core squares: identity bottom and right, commutative
  std::vector<Square> members;
  for (int x = 0; x < n; ++x) {
    const Arrow e1 = g1.identity(x);
    const Arrow e2 = g2.identity(x);
    for (int y = 0; y < n; ++y)
      for (int ti : g1.hom_indices(x, y)) {
        const Arrow& top = g1.arrows()[static_cast<std::size_t>(ti)];
        for (int li : g2.hom_indices(x, y)) {
          const Arrow& left = g2.arrows()[static_cast<std::size_t>(li)];
          Square sq{e1, top, e2, left};
          if (is_commutative(c, sq)) members.push_back(std::move(sq));
        }
      }
  }
  auto label_of = [&](const Square& sq) {
    return "(" + sq.top.payload.str() + "|" + sq.left.payload.str() + ")";
  };
  // reorder by arrow order: label strings need not sort like exact payloads
  std::vector<std::pair<Arrow, Square>> items;
  items.reserve(members.size());
  for (const Square& sq : members)
    items.emplace_back(Arrow(sq.top.src, sq.top.dst, Payload(label_of(sq))), sq);
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Arrow> arrows;
  arrows.reserve(items.size());
  for (const auto& [a, sq] : items) arrows.push_back(a);

  auto core_index = [&](const Square& sq) -> int {
    Arrow probe(sq.top.src, sq.top.dst, Payload(label_of(sq)));
    auto it = std::lower_bound(arrows.begin(), arrows.end(), probe);
    return it != arrows.end() && *it == probe ? static_cast<int>(it - arrows.begin()) : -1;
  };

  Tables t;
  t.identity.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    Square unit{g1.identity(x), g1.identity(x), g2.identity(x), g2.identity(x)};
    t.identity[static_cast<std::size_t>(x)] = core_index(unit);
  }
  t.inverse.assign(items.size(), -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Square& sq = items[i].second;
    Square inv{g1.identity(sq.top.dst), ambient_inverse(c, sq.top), g2.identity(sq.top.dst),
               ambient_inverse(c, sq.left)};
    t.inverse[i] = core_index(inv);
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) {
      const Square& k1 = items[i].second;
      const Square& k2 = items[j].second;
      if (k1.top.src != k2.top.dst) continue;
      // K1 .K K2 = (K1 v unit_h(top(K2))) h K2
      Square mixed = horizontal_product(
          c, vertical_product(c, k1, unit_square(c, Direction::Horizontal, k2.top)), k2);
      int r = core_index(mixed);
      if (r < 0) fail(Err::NotClosed, "core composition escapes the core");
      t.compose[{static_cast<int>(i), static_cast<int>(j)}] = r;
    }

  return FiniteGroupoid::tabular(c.body, arrows, t);
}

}  // namespace compomat
