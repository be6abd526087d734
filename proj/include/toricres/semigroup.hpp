#pragma once

#include <string>
#include <vector>

#include "toricres/lattice.hpp"

namespace toricres {

/// Finitely generated subsemigroup of Z^2 with a pointed cone. Generators are
/// deduplicated and stored counterclockwise; the cone hull is computed at
/// construction, so instances are immutable and safe to share across threads.
class AffineSemigroup {
 public:
  explicit AffineSemigroup(std::vector<LatticeVec> gens);

  const std::vector<LatticeVec>& gens() const { return gens_; }
  const ConeHull& hull() const { return hull_; }

  bool is_full_dimensional() const { return std::holds_alternative<Cone2>(hull_); }

  /// The two-dimensional cone; throws NotFullDim for a ray semigroup.
  const Cone2& cone() const;

  /// Strictly positive integral functional on the cone: every nonzero
  /// element has value >= 1.
  LatticeVec grading() const { return grading_; }

  friend bool operator==(const AffineSemigroup& x, const AffineSemigroup& y) {
    return x.gens_ == y.gens_;
  }

 private:
  std::vector<LatticeVec> gens_;
  ConeHull hull_;
  LatticeVec grading_;
};

/// v is a nonnegative integer combination of the generators.
bool member(const AffineSemigroup& s, LatticeVec v);

/// Both semigroups are generated by the same set (mutual membership).
bool same_semigroup(const AffineSemigroup& x, const AffineSemigroup& y);

AffineSemigroup minimal_generators(const AffineSemigroup& s);

/// Semigroup generated by the Hilbert basis of the cone.
AffineSemigroup saturation(const AffineSemigroup& s);
bool is_saturated(const AffineSemigroup& s);

struct ChartClass {
  enum class Kind { Smooth, CyclicQuotient, NonNormal };

  Kind kind = Kind::Smooth;
  /// For NonNormal, the type of the saturation.
  QuotientType type;

  friend bool operator==(const ChartClass&, const ChartClass&) = default;

  static ChartClass smooth() { return {Kind::Smooth, {1, 0}}; }
  static ChartClass cyclic(Int n, Int q) { return {Kind::CyclicQuotient, {n, q}}; }
  static ChartClass non_normal(Int n, Int q) { return {Kind::NonNormal, {n, q}}; }

  bool is_smooth() const { return kind == Kind::Smooth; }

  /// "smooth", "cyclic:n,q" or "nonnormal:n,q".
  std::string tag() const;
  static ChartClass from_tag(const std::string& tag);
};

ChartClass classify(const AffineSemigroup& s);

/// Image of s under a unimodular map.
AffineSemigroup transform(const AffineSemigroup& s, const Mat2& m);

}  // namespace toricres
