#pragma once

// Brute-force references for the lattice kernels. These deliberately avoid
// the library's algorithms: plain enumeration, coefficient search,
// functional sampling and exhaustive point-triple membership.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "toricres/lattice.hpp"

namespace toricres::oracle {

struct Frac {
  Int num;
  Int den;
};

inline bool in_cone_by_coords(LatticeVec r1, LatticeVec r2, LatticeVec v) {
  // v = λ r1 + μ r2 by Cramer's rule; λ, μ >= 0.
  const Int d = r1.a * r2.b - r1.b * r2.a;
  const Int lam = v.a * r2.b - v.b * r2.a;
  const Int mu = r1.a * v.b - r1.b * v.a;
  if (d > 0) return lam >= 0 && mu >= 0;
  return lam <= 0 && mu <= 0;
}

/// Indecomposable lattice points of cone(r1, r2), found by enumerating the
/// bounding box of the parallelogram spanned by the rays.
inline std::vector<LatticeVec> hilbert_basis(LatticeVec r1, LatticeVec r2) {
  const Int d = r1.a * r2.b - r1.b * r2.a;
  const Int sign = d > 0 ? 1 : -1;
  const Int lo_a = std::min({Int{0}, r1.a, r2.a, r1.a + r2.a});
  const Int hi_a = std::max({Int{0}, r1.a, r2.a, r1.a + r2.a});
  const Int lo_b = std::min({Int{0}, r1.b, r2.b, r1.b + r2.b});
  const Int hi_b = std::max({Int{0}, r1.b, r2.b, r1.b + r2.b});
  std::vector<LatticeVec> pts;
  for (Int a = lo_a; a <= hi_a; ++a) {
    for (Int b = lo_b; b <= hi_b; ++b) {
      if (a == 0 && b == 0) continue;
      const Int lam = sign * (a * r2.b - b * r2.a);
      const Int mu = sign * (r1.a * b - r1.b * a);
      if (lam >= 0 && mu >= 0 && lam <= sign * d && mu <= sign * d) pts.push_back({a, b});
    }
  }
  std::vector<LatticeVec> basis;
  for (auto p : pts) {
    bool decomposable = false;
    for (auto q : pts) {
      if (q == p) continue;
      const LatticeVec rest{p.a - q.a, p.b - q.b};
      if (!(rest.a == 0 && rest.b == 0) && in_cone_by_coords(r1, r2, rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/// Exhaustive search for nonnegative coefficients, each at most `bound`.
inline bool member_by_enumeration(const std::vector<LatticeVec>& gens, LatticeVec v, Int bound) {
  std::vector<Int> coef(gens.size(), 0);
  while (true) {
    Int a = 0, b = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      a += coef[i] * gens[i].a;
      b += coef[i] * gens[i].b;
    }
    if (a == v.a && b == v.b) return true;
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == bound) coef[i++] = 0;
    if (i == coef.size()) return false;
    ++coef[i];
  }
}

/// Vertex test by sampling every lattice functional u with |u| <= bound that
/// is strictly positive on both rays of the base cone: m_i is a vertex iff
/// some u has m_i as its unique minimizer.
inline std::vector<std::size_t> newton_vertices_by_sampling(const std::vector<LatticeVec>& exps, LatticeVec r1,
                                                            LatticeVec r2, Int bound) {
  std::set<std::size_t> found;
  for (Int ua = -bound; ua <= bound; ++ua) {
    for (Int ub = -bound; ub <= bound; ++ub) {
      if (ua * r1.a + ub * r1.b <= 0 || ua * r2.a + ub * r2.b <= 0) continue;
      Int best = 0;
      std::size_t arg = 0;
      int count = 0;
      for (std::size_t j = 0; j < exps.size(); ++j) {
        const Int val = ua * exps[j].a + ub * exps[j].b;
        if (count == 0 || val < best) {
          best = val;
          arg = j;
          count = 1;
        } else if (val == best) {
          ++count;
        }
      }
      if (count == 1) found.insert(arg);
    }
  }
  return {found.begin(), found.end()};
}

namespace detail {

inline Int cross(LatticeVec v, LatticeVec w) { return v.a * w.b - v.b * w.a; }

inline bool in_triangle(LatticeVec p, LatticeVec a, LatticeVec b, LatticeVec c) {
  const Int d1 = cross(b - a, p - a), d2 = cross(c - b, p - b), d3 = cross(a - c, p - c);
  if (cross(b - a, c - a) == 0) {
    // Degenerate: p must lie on one of the segments.
    for (auto [u, w] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
      if (cross(w - u, p - u) == 0 && std::min(u.a, w.a) <= p.a && p.a <= std::max(u.a, w.a) &&
          std::min(u.b, w.b) <= p.b && p.b <= std::max(u.b, w.b)) {
        return true;
      }
    }
    return false;
  }
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

inline bool on_ray(LatticeVec p, LatticeVec a, LatticeVec r) {
  const LatticeVec d = p - a;
  return cross(d, r) == 0 && d.a * r.a + d.b * r.b >= 0;
}

/// p in conv(a, b) + R>=0 r.
inline bool in_strip(LatticeVec p, LatticeVec a, LatticeVec b, LatticeVec r) {
  const LatticeVec d = b - a;
  const Int dr = cross(d, r);
  if (dr == 0) return on_ray(p, a, r) || on_ray(p, b, r);
  const Int t_num = cross(p - a, r);
  // t = t_num / dr must lie in [0, 1].
  if (dr > 0 ? (t_num < 0 || t_num > dr) : (t_num > 0 || t_num < dr)) return false;
  const LatticeVec w{dr * (p.a - a.a) - t_num * d.a, dr * (p.b - a.b) - t_num * d.b};
  const Int s = w.a * r.a + w.b * r.b;
  return dr > 0 ? s >= 0 : s <= 0;
}

}  // namespace detail

/// Vertex test by direct membership: m_i is a vertex of conv(M) + cone(r1, r2)
/// iff it is not in conv(M \ {m_i}) + cone(r1, r2). Homogenizing, any point of
/// that polyhedron lies in a piece spanned by three generators with at least
/// one point, so every such triple is tried.
inline std::vector<std::size_t> newton_vertices_by_membership(const std::vector<LatticeVec>& exps, LatticeVec r1,
                                                              LatticeVec r2) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const LatticeVec p = exps[i];
    std::vector<LatticeVec> rest;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] != p) rest.push_back(exps[j]);
    }
    bool covered = false;
    for (std::size_t a = 0; a < rest.size() && !covered; ++a) {
      if (in_cone_by_coords(r1, r2, p - rest[a])) covered = true;
      for (std::size_t b = a + 1; b < rest.size() && !covered; ++b) {
        if (detail::in_strip(p, rest[a], rest[b], r1) || detail::in_strip(p, rest[a], rest[b], r2)) covered = true;
        for (std::size_t c = b + 1; c < rest.size() && !covered; ++c) {
          if (detail::in_triangle(p, rest[a], rest[b], rest[c])) covered = true;
        }
      }
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

/// Folds b_1 - 1/(b_2 - ...) back into a reduced fraction.
inline Frac fold_continued_fraction(const std::vector<Int>& bs) {
  Frac acc{bs.back(), 1};
  for (std::size_t i = bs.size() - 1; i-- > 0;) {
    // b_i - 1/acc = (b_i * acc.num - acc.den) / acc.num
    acc = {bs[i] * acc.num - acc.den, acc.num};
  }
  const Int g = std::gcd(acc.num, acc.den);
  return {acc.num / g, acc.den / g};
}

/// Random unimodular matrix with entries in [-5, 5].
inline Mat2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> entry(-5, 5);
  while (true) {
    Mat2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
    const Int d = m.m11 * m.m22 - m.m12 * m.m21;
    if (d == 1 || d == -1) return m;
  }
}

}  // namespace toricres::oracle
