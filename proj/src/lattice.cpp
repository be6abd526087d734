#include "toricres/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace toricres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDim: return "NotFullDim";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::InvalidColumns: return "InvalidColumns";
    case ErrorKind::InvalidSplitting: return "InvalidSplitting";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::SelectorInapplicable: return "SelectorInapplicable";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::NotResolved: return "NotResolved";
    case ErrorKind::NonSmoothFan: return "NonSmoothFan";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::Overflow, std::string("integer overflow in ") + op);
}

// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> gcdx(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    old_r = checked_sub(old_r, checked_mul(quot, r));
    old_s = checked_sub(old_s, checked_mul(quot, s));
    old_t = checked_sub(old_t, checked_mul(quot, t));
    std::swap(r, old_r);
    std::swap(s, old_s);
    std::swap(t, old_t);
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

// Some e with det(v, e) = 1, for primitive v.
LatticeVec unimodular_partner(LatticeVec v) {
  auto [g, x, y] = gcdx(v.a, v.b);
  if (g != 1) throw Error(ErrorKind::InvalidArgument, "vector is not primitive: " + to_string(v));
  return {checked_neg(y), x};
}

// Maps r2 to (0, 1) and r1 to (n, -q) with 0 <= q < n, determinant +1.
std::pair<Int, Mat2> normal_form_keeping_orientation(LatticeVec r1, LatticeVec r2) {
  const Int n = det(r1, r2);
  auto [g, x, y] = gcdx(r2.a, r2.b);
  if (g != 1) throw Error(ErrorKind::InvalidArgument, "ray is not primitive: " + to_string(r2));
  Mat2 u{r2.b, checked_neg(r2.a), x, y};
  const LatticeVec image = u(r1);
  const Int q = mod_floor(checked_neg(image.b), n);
  const Int shear = (checked_sub(checked_neg(q), image.b)) / n;
  const Mat2 s{1, 0, shear, 1};
  return {q, s * u};
}

}  // namespace

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) overflow("addition");
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("subtraction");
  return r;
}

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("multiplication");
  return r;
}

Int checked_neg(Int x) { return checked_sub(0, x); }

Int floor_div(Int x, Int y) {
  if (y == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (y == -1) return checked_neg(x);
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Int ceil_div(Int x, Int y) {
  if (y == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (y == -1) return checked_neg(x);
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) == (y < 0))) ++q;
  return q;
}

Int mod_floor(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int x, Int y) {
  if (x == INT64_MIN || y == INT64_MIN) overflow("gcd");
  x = std::abs(x);
  y = std::abs(y);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

LatticeVec operator+(LatticeVec v, LatticeVec w) {
  return {checked_add(v.a, w.a), checked_add(v.b, w.b)};
}

LatticeVec operator-(LatticeVec v, LatticeVec w) {
  return {checked_sub(v.a, w.a), checked_sub(v.b, w.b)};
}

LatticeVec operator-(LatticeVec v) { return {checked_neg(v.a), checked_neg(v.b)}; }

LatticeVec operator*(Int k, LatticeVec v) { return {checked_mul(k, v.a), checked_mul(k, v.b)}; }

std::string to_string(LatticeVec v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

Int det(LatticeVec v, LatticeVec w) {
  return checked_sub(checked_mul(v.a, w.b), checked_mul(v.b, w.a));
}

Int dot(LatticeVec v, LatticeVec w) {
  return checked_add(checked_mul(v.a, w.a), checked_mul(v.b, w.b));
}

LatticeVec primitive(LatticeVec v) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
  const Int g = gcd(v.a, v.b);
  return {v.a / g, v.b / g};
}

bool is_primitive(LatticeVec v) { return !v.is_zero() && gcd(v.a, v.b) == 1; }

bool CounterClockwise::operator()(LatticeVec v, LatticeVec w) const {
  const Int d = det(v, w);
  if (d != 0) return d > 0;
  return dot(v, v) < dot(w, w);
}

Cone2::Cone2(LatticeVec u, LatticeVec v) {
  if (u.is_zero() || v.is_zero()) throw Error(ErrorKind::ZeroVector, "cone ray is zero");
  u = primitive(u);
  v = primitive(v);
  const Int d = det(u, v);
  if (d == 0) {
    if (u == v) throw Error(ErrorKind::NotFullDim, "cone rays are collinear: " + to_string(u));
    throw Error(ErrorKind::NotPointed, "cone rays are opposite: " + to_string(u) + " " + to_string(v));
  }
  if (d > 0) {
    r1_ = u;
    r2_ = v;
  } else {
    r1_ = v;
    r2_ = u;
  }
}

ConeHull cone_hull(std::span<const LatticeVec> vs) {
  if (vs.empty()) throw Error(ErrorKind::InvalidArgument, "cone_hull of an empty set");
  std::vector<LatticeVec> dirs;
  dirs.reserve(vs.size());
  for (auto v : vs) {
    if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "cone_hull input contains the zero vector");
    dirs.push_back(primitive(v));
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  // The clockwise-most ray sees every other direction strictly counterclockwise
  // within an open half-plane.
  const LatticeVec* first = nullptr;
  for (const auto& c : dirs) {
    bool ok = std::all_of(dirs.begin(), dirs.end(), [&](LatticeVec v) {
      return v == c || det(c, v) > 0;
    });
    if (ok) {
      first = &c;
      break;
    }
  }
  if (first == nullptr) throw Error(ErrorKind::NotPointed, "generated cone contains a line");
  const LatticeVec last = *std::max_element(dirs.begin(), dirs.end(), CounterClockwise{});
  if (last == *first) return RayCone{*first};
  return Cone2(*first, last);
}

bool cone_contains(const Cone2& c, LatticeVec v) {
  return det(c.r1(), v) >= 0 && det(v, c.r2()) >= 0;
}

bool cone_contains(const RayCone& c, LatticeVec v) {
  return det(c.ray, v) == 0 && dot(c.ray, v) >= 0;
}

bool cone_contains(const ConeHull& c, LatticeVec v) {
  return std::visit([&](const auto& cone) { return cone_contains(cone, v); }, c);
}

bool cone_interior_contains(const Cone2& c, LatticeVec v) {
  return det(c.r1(), v) > 0 && det(v, c.r2()) > 0;
}

Cone2 dual_cone(const Cone2& c) {
  const LatticeVec n1{checked_neg(c.r1().b), c.r1().a};
  const LatticeVec n2{c.r2().b, checked_neg(c.r2().a)};
  return Cone2(n1, n2);
}

std::vector<LatticeVec> hilbert_basis(const Cone2& c) {
  // Walk the compact boundary of conv(c ∩ Z^2 \ {0}). Each step takes the
  // point on the line det(prev, .) = 1 closest to the r2 boundary, which
  // shrinks det(., r2) strictly.
  std::vector<LatticeVec> basis{c.r1()};
  LatticeVec prev = c.r1();
  while (true) {
    const Int d = det(prev, c.r2());
    if (d == 1) break;
    const LatticeVec e = unimodular_partner(prev);
    const Int t = ceil_div(checked_neg(det(e, c.r2())), d);
    prev = e + t * prev;
    basis.push_back(prev);
  }
  basis.push_back(c.r2());
  return basis;
}

std::vector<Int> hj_fractions(Int n, Int q) {
  if (n <= 0 || q <= 0 || q >= n || gcd(n, q) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "hj_fractions requires 0 < q < n, gcd(n,q) = 1; got n=" + std::to_string(n) +
                    " q=" + std::to_string(q));
  }
  std::vector<Int> bs;
  while (q != 0) {
    const Int b = ceil_div(n, q);
    bs.push_back(b);
    const Int next = checked_sub(checked_mul(b, q), n);
    n = q;
    q = next;
  }
  return bs;
}

LatticeVec Mat2::operator()(LatticeVec v) const {
  return {checked_add(checked_mul(m11, v.a), checked_mul(m12, v.b)),
          checked_add(checked_mul(m21, v.a), checked_mul(m22, v.b))};
}

Int Mat2::determinant() const {
  return checked_sub(checked_mul(m11, m22), checked_mul(m12, m21));
}

Mat2 Mat2::inverse() const {
  const Int d = determinant();
  if (d == 1) return {m22, checked_neg(m12), checked_neg(m21), m11};
  if (d == -1) return {checked_neg(m22), m12, m21, checked_neg(m11)};
  throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {checked_add(checked_mul(x.m11, y.m11), checked_mul(x.m12, y.m21)),
          checked_add(checked_mul(x.m11, y.m12), checked_mul(x.m12, y.m22)),
          checked_add(checked_mul(x.m21, y.m11), checked_mul(x.m22, y.m21)),
          checked_add(checked_mul(x.m21, y.m12), checked_mul(x.m22, y.m22))};
}

ConeNormalForm cone_normal_form(const Cone2& c) {
  const Int n = c.index();
  auto [qa, ua] = normal_form_keeping_orientation(c.r1(), c.r2());
  const Mat2 flip{0, 1, 1, 0};
  auto [qb, ub] = normal_form_keeping_orientation(flip(c.r2()), flip(c.r1()));
  if (qb < qa) return {{n, qb}, ub * flip};
  return {{n, qa}, ua};
}

QuotientType gl2z_classify(const Cone2& c) { return cone_normal_form(dual_cone(c)).type; }

std::optional<Mat2> cone_isomorphism(const Cone2& a, const Cone2& b) {
  const auto fa = cone_normal_form(a);
  const auto fb = cone_normal_form(b);
  if (fa.type != fb.type) return std::nullopt;
  return fb.transform.inverse() * fa.transform;
}

}  // namespace toricres
