#pragma once

// Iterated blow-ups: every still-singular chart is blown up at each level,
// new fan rays are merged into one global fan in the root's lattice, and
// the exceptional chain is read off once every leaf chart is smooth.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricres/blowup.hpp"

namespace toricres {

enum class SelectorKind { AnDerivation, MaximalMonomial, Explicit };

/// Chooses the blow-up center for each chart.
///  - AnDerivation: the derivation-module ideal, transported from Γ_k to the
///    chart through a lattice isomorphism. Only A_k and smooth charts.
///  - MaximalMonomial: the minimal generators of the chart semigroup.
///  - Explicit: the given ideal on the root chart, then MaximalMonomial.
struct IdealSelector {
  SelectorKind kind = SelectorKind::AnDerivation;
  std::optional<MonomialIdeal> ideal;

  static IdealSelector an_derivation() { return {SelectorKind::AnDerivation, std::nullopt}; }
  static IdealSelector maximal_monomial() { return {SelectorKind::MaximalMonomial, std::nullopt}; }
  static IdealSelector explicit_ideal(MonomialIdeal i) { return {SelectorKind::Explicit, std::move(i)}; }

  std::string name() const;
};

/// Ideal the selector picks for a chart; `at_root` is true for the first
/// blow-up. Throws SelectorInapplicable.
MonomialIdeal select_ideal(const IdealSelector& sel, const AffineSemigroup& chart, const ChartClass& cls,
                           bool at_root);

struct ResolveOptions {
  /// Maximum number of blow-up levels.
  std::size_t max_steps = 64;
  /// Replace non-normal charts by their saturation before recursing.
  bool normalize = true;
  /// Worker threads for sibling charts; output does not depend on it.
  unsigned threads = 1;
};

struct ChartRecord {
  std::size_t vertex;
  AffineSemigroup semigroup;
  ChartClass cls;
  /// The chart was non-normal and replaced by its saturation.
  bool normalized = false;
  /// Index into ResolutionTrace::steps of the blow-up of this chart.
  std::optional<std::size_t> child;
};

struct StepRecord {
  std::size_t level;
  AffineSemigroup chart;
  ChartClass cls;
  MonomialIdeal ideal;
  BlowupResult blowup;
  std::vector<ChartRecord> charts;
  std::vector<LatticeVec> new_rays;
};

struct ResolutionTrace {
  AffineSemigroup root;
  ChartClass root_class;
  /// The semigroup the first blow-up used (the root, or its saturation).
  AffineSemigroup root_chart;
  bool root_normalized = false;
  std::string selector;
  bool normalize = true;
  /// Breadth-first; steps[0] is the blow-up of the root when present.
  std::vector<StepRecord> steps;
  std::size_t depth = 0;
  bool terminated = false;
  Fan2 global_fan;
  std::vector<std::size_t> new_rays_per_level;
};

ResolutionTrace resolve_generic(const AffineSemigroup& s, const IdealSelector& sel,
                                const ResolveOptions& options = {});

/// Resolution of A_n by iterated derivation blow-ups starting from Γ_n.
/// Throws InternalMismatch if a chart leaves the A_k family or the process
/// does not terminate.
ResolutionTrace resolve_an(unsigned n, const ResolveOptions& options = {});

/// Weighted chain of exceptional curves.
struct DualGraph {
  std::vector<Int> self_intersections;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

  std::size_t size() const { return self_intersections.size(); }
  std::string to_dot() const;
  std::string to_text() const;
};

/// Reads b_i from v_{i-1} + v_{i+1} = b_i v_i on the global fan.
/// Throws NotResolved or NonSmoothFan.
DualGraph dual_graph(const ResolutionTrace& t);

/// Minimal resolution chain of 1/n(1,q) from the continued fraction.
DualGraph hj_oracle(Int n, Int q);

std::size_t divisor_count(const ResolutionTrace& t);

}  // namespace toricres
