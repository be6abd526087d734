#pragma once

// Exact geometry of the rank-2 lattice Z^2: checked integer kernels,
// pointed cones, Hilbert bases, continued fractions and GL(2,Z) normal forms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "toricres/error.hpp"

namespace toricres {

using Int = std::int64_t;

Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);
Int checked_neg(Int x);

/// Floor and ceiling of x / y for y != 0, rounding toward -inf / +inf.
Int floor_div(Int x, Int y);
Int ceil_div(Int x, Int y);

/// Nonnegative remainder of x modulo m > 0.
Int mod_floor(Int x, Int m);

Int gcd(Int x, Int y);

struct LatticeVec {
  Int a = 0;
  Int b = 0;

  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

  bool is_zero() const { return a == 0 && b == 0; }
};

LatticeVec operator+(LatticeVec v, LatticeVec w);
LatticeVec operator-(LatticeVec v, LatticeVec w);
LatticeVec operator-(LatticeVec v);
LatticeVec operator*(Int k, LatticeVec v);

std::string to_string(LatticeVec v);

/// a*d - b*c for v = (a, b), w = (c, d).
Int det(LatticeVec v, LatticeVec w);
Int dot(LatticeVec v, LatticeVec w);

LatticeVec primitive(LatticeVec v);
bool is_primitive(LatticeVec v);

struct LatticeVecHash {
  std::size_t operator()(const LatticeVec& v) const noexcept {
    auto h = std::hash<Int>{}(v.a);
    return h ^ (std::hash<Int>{}(v.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

/// Orders vectors within an open half-plane counterclockwise: v before w iff
/// det(v, w) > 0. Collinear same-direction vectors are ordered by length.
struct CounterClockwise {
  bool operator()(LatticeVec v, LatticeVec w) const;
};

/// Pointed two-dimensional cone spanned by primitive rays with det(r1, r2) > 0.
class Cone2 {
 public:
  /// Accepts any two nonzero, non-collinear vectors; rays are made primitive
  /// and ordered counterclockwise.
  Cone2(LatticeVec u, LatticeVec v);

  LatticeVec r1() const { return r1_; }
  LatticeVec r2() const { return r2_; }

  /// |det(r1, r2)|, the index of the sublattice spanned by the rays.
  Int index() const { return det(r1_, r2_); }

  friend bool operator==(const Cone2&, const Cone2&) = default;

 private:
  LatticeVec r1_;
  LatticeVec r2_;
};

/// One-dimensional cone: a single primitive ray.
struct RayCone {
  LatticeVec ray;
  friend bool operator==(const RayCone&, const RayCone&) = default;
};

using ConeHull = std::variant<Cone2, RayCone>;

/// Extreme rays of the cone generated by vs. Collinear input in one direction
/// yields a RayCone; a cone containing a line raises NotPointed.
ConeHull cone_hull(std::span<const LatticeVec> vs);

bool cone_contains(const Cone2& c, LatticeVec v);
bool cone_contains(const RayCone& c, LatticeVec v);
bool cone_contains(const ConeHull& c, LatticeVec v);

/// Strict interior test.
bool cone_interior_contains(const Cone2& c, LatticeVec v);

/// Dual cone {u : <u, v> >= 0 for all v in c}.
Cone2 dual_cone(const Cone2& c);

/// Minimal generating set of c ∩ Z^2, counterclockwise from r1 to r2.
std::vector<LatticeVec> hilbert_basis(const Cone2& c);

/// n/q = b1 - 1/(b2 - 1/(...)) with every b_i >= 2. Requires 0 < q < n, gcd = 1.
std::vector<Int> hj_fractions(Int n, Int q);

struct QuotientType {
  Int n = 1;
  Int q = 0;

  friend auto operator<=>(const QuotientType&, const QuotientType&) = default;

  bool is_smooth() const { return n == 1; }
};

/// Integer 2x2 matrix acting on column vectors.
struct Mat2 {
  Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;

  LatticeVec operator()(LatticeVec v) const;
  Int determinant() const;
  /// Inverse of a unimodular matrix; throws InvalidArgument otherwise.
  Mat2 inverse() const;
  Mat2 transpose() const { return {m11, m21, m12, m22}; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Canonical form of a cone under GL(2,Z): the transform carries c onto
/// Cone2((n, -q), (0, 1)), where q is the smaller of the two values reachable
/// by the two choices of which ray goes to (0, 1).
struct ConeNormalForm {
  QuotientType type;
  Mat2 transform;
};

ConeNormalForm cone_normal_form(const Cone2& c);

/// Type 1/n(1,q) of the affine toric surface whose semigroup cone is c. The
/// normal form is taken on the dual cone (the fan side), so the A_k cone
/// classifies as (k+1, k).
QuotientType gl2z_classify(const Cone2& c);

/// Unimodular map carrying cone a onto cone b as sets, if one exists.
std::optional<Mat2> cone_isomorphism(const Cone2& a, const Cone2& b);

}  // namespace toricres
