#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xns/rational.hpp"

namespace xns {

// A point a = (x/p, y/p) of (p^-1 Z / Z)^2 minus the origin, stored by its
// residues 0 <= x, y < p.
struct APoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const APoint&, const APoint&) = default;
  friend auto operator<=>(const APoint&, const APoint&) = default;
};

// 2x2 matrix mod p, row-major: (m[0] m[1]; m[2] m[3]).
struct Mat2 {
  std::array<int, 4> m{1, 0, 0, 1};
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

struct Orbit {
  int index = 0;  // position of the label's coset in CartanContext::coset_reps
  int label = 1;  // the coset representative a
  std::vector<APoint> members;  // sorted
};

struct Cusp {
  int label = 1;  // a in 1..(p-1)/2
  std::vector<std::pair<int, int>> vectors;  // column vectors with x^2 - Xi y^2 = +-a, sorted
  Mat2 sigma;  // SL2 representative taking (1,0)^T into this class
};

struct CartanContext {
  int p = 0;
  int d = 0;
  int xi = 0;      // quadratic non-residue
  int xi_inv = 0;  // its inverse mod p
  std::vector<int> H;           // sorted subgroup of index d, contains -1
  std::vector<int> coset_reps;  // smallest positive representative per coset, identity first
  std::vector<int> coset_of;    // coset_of[x] = index into coset_reps, for 1 <= x < p

  int mod(long v) const {
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }
  int inverse(int x) const;
  int num_cosets() const { return static_cast<int>(coset_reps.size()); }
  // x^2 - Xi^{-1} y^2, the form whose level sets are the orbits.
  int orbit_form(int x, int y) const { return mod(1L * x * x - 1L * xi_inv * y % p * y); }
  // x^2 - Xi y^2, the form whose level sets (up to sign) are the cusp classes.
  int cusp_form(int x, int y) const { return mod(1L * x * x - 1L * xi * y % p * y); }
};

bool is_prime(long n);

// Throws BadLevel, BadIndex or BadSubgroup.
CartanContext build_context(int p, int d, const std::optional<std::vector<int>>& H_choice = std::nullopt);

// Matrices of the normalizer G, enumerated from its two shapes.
std::vector<Mat2> enumerate_G(const CartanContext& ctx);
std::vector<Mat2> enumerate_G_H(const CartanContext& ctx);
int det(const CartanContext& ctx, const Mat2& g);
bool in_G(const CartanContext& ctx, const Mat2& g);

// (|G|, |G_H|), counted by enumeration.
std::pair<long, long> group_order(const CartanContext& ctx);

// Row-vector action (x, y) -> (x, y) g.
APoint right_act(const CartanContext& ctx, const APoint& a, const Mat2& g);
std::vector<APoint> translate(const CartanContext& ctx, const std::vector<APoint>& pts, const Mat2& g);

// d orbits of G_H on the nonzero points, ordered like coset_reps. Computed
// both by union-find under G_H and from the quadratic form; throws
// InternalInconsistency when the two disagree.
std::vector<Orbit> orbit_decomposition(const CartanContext& ctx);

// The orbit index containing a point, read off from the form.
int orbit_index_of(const CartanContext& ctx, const APoint& a);

std::vector<Cusp> cusp_classes(const CartanContext& ctx);

// Image of `orb` under the Galois coset with index s, realized by acting with
// an element of G whose determinant lies in that coset.
Orbit galois_orbit_action(const CartanContext& ctx, const std::vector<Orbit>& orbits, int s,
                          const Orbit& orb);

}  // namespace xns
