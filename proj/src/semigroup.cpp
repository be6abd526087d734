#include "toricres/semigroup.hpp"

#include <algorithm>
#include <unordered_map>

namespace toricres {

namespace {

LatticeVec grading_of(const ConeHull& hull) {
  if (const auto* c = std::get_if<Cone2>(&hull)) {
    const LatticeVec u1{checked_neg(c->r1().b), c->r1().a};
    const LatticeVec u2{c->r2().b, checked_neg(c->r2().a)};
    return u1 + u2;
  }
  return std::get<RayCone>(hull).ray;
}

// Memoized search over the finite set of cone points below v in the grading.
class MembershipSearch {
 public:
  explicit MembershipSearch(const AffineSemigroup& s) : s_(s) {
    for (auto g : s.gens()) weights_.push_back(dot(s.grading(), g));
  }

  bool reachable(LatticeVec v) {
    if (v.is_zero()) return true;
    if (!cone_contains(s_.hull(), v)) return false;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    const Int w = dot(s_.grading(), v);
    bool found = false;
    for (std::size_t i = 0; i < s_.gens().size() && !found; ++i) {
      if (weights_[i] <= w) found = reachable(v - s_.gens()[i]);
    }
    memo_.emplace(v, found);
    return found;
  }

 private:
  const AffineSemigroup& s_;
  std::vector<Int> weights_;
  std::unordered_map<LatticeVec, bool, LatticeVecHash> memo_;
};

}  // namespace

AffineSemigroup::AffineSemigroup(std::vector<LatticeVec> gens)
    : gens_(std::move(gens)), hull_(cone_hull(gens_)), grading_(grading_of(hull_)) {
  std::sort(gens_.begin(), gens_.end(), CounterClockwise{});
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const Cone2& AffineSemigroup::cone() const {
  if (const auto* c = std::get_if<Cone2>(&hull_)) return *c;
  throw Error(ErrorKind::NotFullDim, "semigroup cone is one-dimensional");
}

bool member(const AffineSemigroup& s, LatticeVec v) {
  MembershipSearch search(s);
  return search.reachable(v);
}

bool same_semigroup(const AffineSemigroup& x, const AffineSemigroup& y) {
  MembershipSearch in_x(x);
  MembershipSearch in_y(y);
  return std::all_of(y.gens().begin(), y.gens().end(), [&](LatticeVec g) { return in_x.reachable(g); }) &&
         std::all_of(x.gens().begin(), x.gens().end(), [&](LatticeVec g) { return in_y.reachable(g); });
}

AffineSemigroup minimal_generators(const AffineSemigroup& s) {
  std::vector<LatticeVec> gens = s.gens();
  bool changed = true;
  while (changed && gens.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<LatticeVec> rest;
      rest.reserve(gens.size() - 1);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j != i) rest.push_back(gens[j]);
      }
      if (member(AffineSemigroup(rest), gens[i])) {
        gens = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return AffineSemigroup(std::move(gens));
}

AffineSemigroup saturation(const AffineSemigroup& s) { return AffineSemigroup(hilbert_basis(s.cone())); }

bool is_saturated(const AffineSemigroup& s) {
  const auto basis = hilbert_basis(s.cone());
  MembershipSearch search(s);
  return std::all_of(basis.begin(), basis.end(), [&](LatticeVec h) { return search.reachable(h); });
}

std::string ChartClass::tag() const {
  const auto nq = std::to_string(type.n) + "," + std::to_string(type.q);
  switch (kind) {
    case Kind::Smooth: return "smooth";
    case Kind::CyclicQuotient: return "cyclic:" + nq;
    case Kind::NonNormal: return "nonnormal:" + nq;
  }
  return "unknown";
}

ChartClass ChartClass::from_tag(const std::string& tag) {
  if (tag == "smooth") return smooth();
  auto parse_nq = [&](std::size_t offset) -> QuotientType {
    const auto comma = tag.find(',', offset);
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "bad chart class tag: " + tag);
    try {
      return {std::stoll(tag.substr(offset, comma - offset)), std::stoll(tag.substr(comma + 1))};
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad chart class tag: " + tag);
    }
  };
  if (tag.rfind("cyclic:", 0) == 0) return {Kind::CyclicQuotient, parse_nq(7)};
  if (tag.rfind("nonnormal:", 0) == 0) return {Kind::NonNormal, parse_nq(10)};
  throw Error(ErrorKind::Parse, "bad chart class tag: " + tag);
}

ChartClass classify(const AffineSemigroup& s) {
  const QuotientType type = gl2z_classify(s.cone());
  if (!is_saturated(s)) return {ChartClass::Kind::NonNormal, type};
  if (type.is_smooth()) return ChartClass::smooth();
  return {ChartClass::Kind::CyclicQuotient, type};
}

AffineSemigroup transform(const AffineSemigroup& s, const Mat2& m) {
  if (m.determinant() != 1 && m.determinant() != -1) {
    throw Error(ErrorKind::InvalidArgument, "transform must be unimodular");
  }
  std::vector<LatticeVec> gens;
  gens.reserve(s.gens().size());
  for (auto g : s.gens()) gens.push_back(m(g));
  return AffineSemigroup(std::move(gens));
}

}  // namespace toricres
