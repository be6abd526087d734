#include "toricres/blowup.hpp"

#include <algorithm>

namespace toricres {

namespace {

// num / den with den > 0.
struct Fraction {
  Int num;
  Int den;
};

bool less_equal(Fraction x, Fraction y) {
  return static_cast<__int128>(x.num) * y.den <= static_cast<__int128>(y.num) * x.den;
}

// Is p in segment[a, b] + c? Exact interval feasibility in the segment
// parameter λ, with p - b - λ(a - b) required to lie in c.
bool segment_plus_cone_contains(LatticeVec p, LatticeVec a, LatticeVec b, const Cone2& c) {
  const LatticeVec q = p - b;
  const LatticeVec e = a - b;
  Fraction lo{0, 1};
  Fraction hi{1, 1};
  // Constraint alpha - λ beta >= 0.
  auto restrict = [&](Int alpha, Int beta) {
    if (beta == 0) return alpha >= 0;
    if (beta > 0) {
      const Fraction bound{alpha, beta};
      if (less_equal(bound, hi)) hi = bound;
    } else {
      const Fraction bound{checked_neg(alpha), checked_neg(beta)};
      if (less_equal(lo, bound)) lo = bound;
    }
    return true;
  };
  if (!restrict(det(c.r1(), q), det(c.r1(), e))) return false;
  if (!restrict(det(q, c.r2()), det(e, c.r2()))) return false;
  return less_equal(lo, hi);
}

}  // namespace

MonomialIdeal::MonomialIdeal(AffineSemigroup base, std::vector<LatticeVec> exps)
    : base_(std::move(base)) {
  (void)base_.cone();
  if (exps.empty()) throw Error(ErrorKind::InvalidArgument, "monomial ideal needs at least one generator");
  for (auto m : exps) {
    if (std::find(exps_.begin(), exps_.end(), m) != exps_.end()) continue;
    if (!member(base_, m)) {
      throw Error(ErrorKind::NotMember, "I ⊄ Γ: exponent " + to_string(m) + " is not in the base semigroup");
    }
    exps_.push_back(m);
  }
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  const auto& exps = ideal.exps();
  std::vector<LatticeVec> kept;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < exps.size() && !dominated; ++j) {
      if (j != i) dominated = member(ideal.base(), exps[i] - exps[j]);
    }
    if (!dominated) kept.push_back(exps[i]);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(ideal.base(), std::move(kept));
}

std::vector<std::size_t> newton_vertices(const MonomialIdeal& ideal) {
  const Cone2& c = ideal.base().cone();
  const auto& m = ideal.exps();
  const std::size_t k = m.size();
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < k; ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < k && !covered; ++j) {
      if (j == i) continue;
      for (std::size_t l = j; l < k && !covered; ++l) {
        if (l == i) continue;
        covered = segment_plus_cone_contains(m[i], m[j], m[l], c);
      }
    }
    if (!covered) vertices.push_back(i);
  }
  return vertices;
}

AffineSemigroup chart_semigroup(const MonomialIdeal& ideal, std::size_t i) {
  const auto& m = ideal.exps();
  if (i >= m.size()) throw Error(ErrorKind::InvalidArgument, "chart index out of range");
  std::vector<LatticeVec> gens = ideal.base().gens();
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j != i) gens.push_back(m[j] - m[i]);
  }
  std::erase_if(gens, [](LatticeVec v) { return v.is_zero(); });
  return minimal_generators(AffineSemigroup(std::move(gens)));
}

AffineSemigroup dual_semigroup(const Cone2& tau) { return AffineSemigroup(hilbert_basis(dual_cone(tau))); }

NormalFan normalized_blowup_fan(const MonomialIdeal& ideal) {
  if (!is_saturated(ideal.base())) {
    throw Error(ErrorKind::NotSaturated, "normalized blow-up fan requires a saturated base");
  }
  const Cone2& c = ideal.base().cone();
  const Cone2 sigma = dual_cone(c);
  const auto& m = ideal.exps();

  std::vector<std::size_t> order = newton_vertices(ideal);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const Int fx = dot(sigma.r1(), m[x]);
    const Int fy = dot(sigma.r1(), m[y]);
    if (fx != fy) return fx < fy;
    return dot(sigma.r2(), m[x]) < dot(sigma.r2(), m[y]);
  });

  NormalFan result{Fan2{sigma, {sigma.r1()}}, order};
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    const LatticeVec e = m[order[t + 1]] - m[order[t]];
    LatticeVec u = primitive(LatticeVec{checked_neg(e.b), e.a});
    if (dot(u, c.r1()) < 0 || dot(u, c.r2()) < 0) u = -u;
    if (!cone_interior_contains(sigma, u)) {
      throw Error(ErrorKind::InternalMismatch, "edge normal " + to_string(u) + " is not interior to σ");
    }
    result.fan.rays.push_back(u);
  }
  result.fan.rays.push_back(sigma.r2());
  for (std::size_t t = 0; t + 1 < result.fan.rays.size(); ++t) {
    if (det(result.fan.rays[t], result.fan.rays[t + 1]) <= 0) {
      throw Error(ErrorKind::InternalMismatch, "normal fan rays are not strictly counterclockwise");
    }
  }
  return result;
}

BlowupResult blowup(const MonomialIdeal& ideal) {
  BlowupResult result;
  result.vertex_indices = newton_vertices(ideal);
  for (auto i : result.vertex_indices) {
    AffineSemigroup chart = chart_semigroup(ideal, i);
    ChartClass cls = classify(chart);
    result.charts.push_back({i, std::move(chart), cls});
  }
  for (auto i : result.vertex_indices) {
    for (auto j : result.vertex_indices) {
      if (i != j) result.gluings.push_back({i, j, ideal.exps()[j] - ideal.exps()[i]});
    }
  }
  if (is_saturated(ideal.base())) result.fan = normalized_blowup_fan(ideal);
  return result;
}

}  // namespace toricres
