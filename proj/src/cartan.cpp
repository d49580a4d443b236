#include "xns/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "xns/errors.hpp"

namespace xns {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

int CartanContext::inverse(int x) const {
  long base = mod(x), result = 1;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

namespace {

long powmod(long b, long e, long p) {
  long r = 1;
  b %= p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CartanContext build_context(int p, int d, const std::optional<std::vector<int>>& H_choice) {
  if (p < 7 || !is_prime(p)) throw BadLevel("level must be a prime >= 7, got " + std::to_string(p));
  if (d < 3 || ((p - 1) / 2) % d != 0)
    throw BadIndex("index must be a divisor >= 3 of (p-1)/2 = " + std::to_string((p - 1) / 2) +
                   ", got " + std::to_string(d));
  CartanContext ctx;
  ctx.p = p;
  ctx.d = d;
  if (p % 4 == 3) {
    ctx.xi = p - 1;
  } else {
    for (int x = 2; x < p; ++x) {
      if (powmod(x, (p - 1) / 2, p) == p - 1) {
        ctx.xi = x;
        break;
      }
    }
  }
  ctx.xi_inv = ctx.inverse(ctx.xi);

  std::vector<int> unique_H;
  for (int x = 1; x < p; ++x)
    if (powmod(x, (p - 1) / d, p) == 1) unique_H.push_back(x);

  if (H_choice) {
    std::vector<int> given = *H_choice;
    for (int& h : given) h = ctx.mod(h);
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    std::set<int> as_set(given.begin(), given.end());
    bool closed = !as_set.count(0) && as_set.count(1) && as_set.count(p - 1);
    for (int a : given)
      for (int b : given)
        if (closed && !as_set.count(static_cast<int>(1L * a * b % p))) closed = false;
    if (!closed || static_cast<int>(given.size()) * d != p - 1)
      throw BadSubgroup("explicit H is not a subgroup of index " + std::to_string(d) + " containing -1");
    if (given != unique_H) throw InternalInconsistency("subgroup of given index is not unique");
  }
  ctx.H = unique_H;

  ctx.coset_of.assign(p, -1);
  for (int x = 1; x < p; ++x) {
    if (ctx.coset_of[x] != -1) continue;
    int idx = static_cast<int>(ctx.coset_reps.size());
    ctx.coset_reps.push_back(x);
    for (int h : ctx.H) ctx.coset_of[1L * x * h % p] = idx;
  }
  return ctx;
}

int det(const CartanContext& ctx, const Mat2& g) {
  return ctx.mod(1L * g.m[0] * g.m[3] - 1L * g.m[1] * g.m[2]);
}

std::vector<Mat2> enumerate_G(const CartanContext& ctx) {
  const int p = ctx.p;
  std::set<Mat2> out;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      int xb = ctx.mod(1L * ctx.xi * b);
      out.insert(Mat2{{a, xb, b, a}});
      out.insert(Mat2{{a, xb, ctx.mod(-b), ctx.mod(-a)}});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Mat2> enumerate_G_H(const CartanContext& ctx) {
  std::vector<Mat2> out;
  for (const Mat2& g : enumerate_G(ctx))
    if (std::binary_search(ctx.H.begin(), ctx.H.end(), det(ctx, g))) out.push_back(g);
  return out;
}

bool in_G(const CartanContext& ctx, const Mat2& g) {
  const auto& m = g.m;
  if (det(ctx, g) == 0) return false;
  if (m[1] != ctx.mod(1L * ctx.xi * m[2]) && m[1] != ctx.mod(-1L * ctx.xi * m[2])) return false;
  bool first = m[3] == m[0] && m[1] == ctx.mod(1L * ctx.xi * m[2]);
  bool second = m[3] == ctx.mod(-m[0]) && m[1] == ctx.mod(-1L * ctx.xi * m[2]);
  return first || second;
}

std::pair<long, long> group_order(const CartanContext& ctx) {
  auto G = enumerate_G(ctx);
  long gh = 0;
  for (const Mat2& g : G)
    if (std::binary_search(ctx.H.begin(), ctx.H.end(), det(ctx, g))) ++gh;
  return {static_cast<long>(G.size()), gh};
}

APoint right_act(const CartanContext& ctx, const APoint& a, const Mat2& g) {
  return {ctx.mod(1L * a.x * g.m[0] + 1L * a.y * g.m[2]), ctx.mod(1L * a.x * g.m[1] + 1L * a.y * g.m[3])};
}

std::vector<APoint> translate(const CartanContext& ctx, const std::vector<APoint>& pts, const Mat2& g) {
  std::vector<APoint> out;
  out.reserve(pts.size());
  for (const APoint& a : pts) out.push_back(right_act(ctx, a, g));
  std::sort(out.begin(), out.end());
  return out;
}

int orbit_index_of(const CartanContext& ctx, const APoint& a) {
  int q = ctx.orbit_form(a.x, a.y);
  if (q == 0) throw InternalInconsistency("orbit form vanished on a nonzero point");
  return ctx.coset_of[q];
}

std::vector<Orbit> orbit_decomposition(const CartanContext& ctx) {
  const int p = ctx.p;
  auto id = [p](const APoint& a) { return static_cast<std::size_t>(a.x) * p + a.y; };

  std::vector<Orbit> by_form(ctx.num_cosets());
  for (int i = 0; i < ctx.num_cosets(); ++i) {
    by_form[i].index = i;
    by_form[i].label = ctx.coset_reps[i];
  }
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      if (x || y) by_form[orbit_index_of(ctx, {x, y})].members.push_back({x, y});

  UnionFind uf(static_cast<std::size_t>(p) * p);
  for (const Mat2& g : enumerate_G_H(ctx))
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        if (x || y) uf.unite(id({x, y}), id(right_act(ctx, {x, y}, g)));

  for (const Orbit& orb : by_form) {
    std::size_t root = uf.find(id(orb.members.front()));
    for (const APoint& a : orb.members)
      if (uf.find(id(a)) != root)
        throw InternalInconsistency("form level set splits under the group action");
  }
  std::set<std::size_t> roots;
  for (const Orbit& orb : by_form) roots.insert(uf.find(id(orb.members.front())));
  if (static_cast<int>(roots.size()) != ctx.num_cosets())
    throw InternalInconsistency("group action merges distinct form level sets");
  return by_form;
}

std::vector<Cusp> cusp_classes(const CartanContext& ctx) {
  const int p = ctx.p;
  std::vector<Cusp> cusps((p - 1) / 2);
  for (int a = 1; a <= (p - 1) / 2; ++a) cusps[a - 1].label = a;
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      if (!x && !y) continue;
      int n = ctx.cusp_form(x, y);
      if (n == 0) throw InternalInconsistency("norm form vanished on a nonzero vector");
      cusps[std::min(n, p - n) - 1].vectors.emplace_back(x, y);
    }
  }
  for (Cusp& c : cusps) {
    if (c.label == 1) continue;  // the cusp at infinity keeps the identity
    bool found = false;
    for (int m0 = 0; m0 < p && !found; ++m0)
      for (int m1 = 0; m1 < p && !found; ++m1)
        for (int m2 = 0; m2 < p && !found; ++m2)
          for (int m3 = 0; m3 < p && !found; ++m3) {
            if (ctx.mod(1L * m0 * m3 - 1L * m1 * m2) != 1) continue;
            int n = ctx.cusp_form(m0, m2);
            if (n == c.label || n == p - c.label) {
              c.sigma = Mat2{{m0, m1, m2, m3}};
              found = true;
            }
          }
    if (!found) throw InternalInconsistency("no SL2 representative for cusp " + std::to_string(c.label));
  }
  return cusps;
}

Orbit galois_orbit_action(const CartanContext& ctx, const std::vector<Orbit>& orbits, int s,
                          const Orbit& orb) {
  const int target = ctx.coset_reps.at(s);
  std::optional<Mat2> g;
  for (const Mat2& cand : enumerate_G(ctx)) {
    if (cand.m[3] == cand.m[0] && det(ctx, cand) == target) {
      g = cand;
      break;
    }
  }
  if (!g) throw InternalInconsistency("determinant map is not surjective");
  std::vector<APoint> image = translate(ctx, orb.members, *g);
  int idx = orbit_index_of(ctx, image.front());
  if (image != orbits.at(idx).members) throw InternalInconsistency("Galois image is not a full orbit");
  int expected = ctx.coset_of[1L * orb.label * target % ctx.p];
  if (idx != expected) throw InternalInconsistency("Galois action disagrees with label product");
  return orbits[idx];
}

}  // namespace xns
