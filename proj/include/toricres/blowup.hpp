#pragma once

// Blow-up of an affine toric surface along a monomial ideal: Newton polyhedron
// vertices, the chart semigroups Γ_i = Γ + <m_j - m_i : j != i>, gluing data,
// and the normalized blow-up as a refinement of the dual cone.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricres/semigroup.hpp"

namespace toricres {

/// Monomial ideal given by exponents m_1..m_k inside a full-dimensional
/// base semigroup. Indices are 0-based; duplicates are dropped keeping the
/// first occurrence so that indices stay stable.
class MonomialIdeal {
 public:
  /// Throws NotMember if some exponent is outside the base semigroup.
  MonomialIdeal(AffineSemigroup base, std::vector<LatticeVec> exps);

  const AffineSemigroup& base() const { return base_; }
  const std::vector<LatticeVec>& exps() const { return exps_; }
  std::size_t size() const { return exps_.size(); }

 private:
  AffineSemigroup base_;
  std::vector<LatticeVec> exps_;
};

/// Drops every m with m - m' in the base for another generator m'; the
/// survivors are the minimal generators, sorted lexicographically.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// Sublist of indices i such that m_i is a vertex of the Newton polyhedron.
std::vector<std::size_t> newton_vertices(const MonomialIdeal& ideal);

/// Γ_i after minimal_generators. Throws NotPointed if the chart cone
/// contains a line, which happens exactly when m_i is not a vertex.
AffineSemigroup chart_semigroup(const MonomialIdeal& ideal, std::size_t i);

/// Ordered list of rays in N from the ambient cone's first ray to its last.
struct Fan2 {
  Cone2 ambient;
  std::vector<LatticeVec> rays;

  std::size_t cone_count() const { return rays.size() - 1; }
  Cone2 subcone(std::size_t k) const { return Cone2(rays[k], rays[k + 1]); }
  std::size_t interior_ray_count() const { return rays.size() - 2; }
};

/// Newton-polyhedron normal fan inside the dual cone σ of the base.
/// cone_vertex[k] is the ideal index whose normal cone is fan.subcone(k).
struct NormalFan {
  Fan2 fan;
  std::vector<std::size_t> cone_vertex;
};

/// Requires a saturated base (NotSaturated otherwise).
NormalFan normalized_blowup_fan(const MonomialIdeal& ideal);

/// Semigroup τ^∨ ∩ Z^2 for a cone τ in N.
AffineSemigroup dual_semigroup(const Cone2& tau);

struct BlowupChart {
  std::size_t vertex;
  AffineSemigroup semigroup;
  ChartClass cls;
};

struct Gluing {
  std::size_t from;
  std::size_t to;
  /// m_to - m_from, the monomial inverted on the overlap inside chart `from`.
  LatticeVec localizer;
};

struct BlowupResult {
  std::vector<std::size_t> vertex_indices;
  std::vector<BlowupChart> charts;
  std::vector<Gluing> gluings;
  /// Present when the base is saturated.
  std::optional<NormalFan> fan;
};

BlowupResult blowup(const MonomialIdeal& ideal);

}  // namespace toricres
