#include "toricres/matfact.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toricres {

Splitting::Splitting(PolyQ f, PolyQ fx, PolyQ fy, PolyQ fz)
    : f_(std::move(f)), fx_(std::move(fx)), fy_(std::move(fy)), fz_(std::move(fz)) {
  const PolyQ recombined = PolyQ::x() * fx_ + PolyQ::y() * fy_ + PolyQ::z() * fz_;
  if (recombined != f_) {
    throw Error(ErrorKind::InvalidSplitting,
                "x*fx + y*fy + z*fz = " + recombined.to_string() + " differs from f = " + f_.to_string());
  }
}

Splitting Splitting::an(unsigned n) {
  const PolyQ y_n = PolyQ::y().pow(n);
  return Splitting(PolyQ::x() * PolyQ::z() - PolyQ::y().pow(n + 1), PolyQ(0), -y_n, PolyQ::x());
}

MatP::MatP(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

MatP::MatP(std::size_t rows, std::size_t cols, std::vector<PolyQ> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(ErrorKind::InvalidArgument, "matrix entry count mismatch");
}

MatP MatP::identity(std::size_t n) {
  MatP m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PolyQ(1);
  return m;
}

MatP operator*(const MatP& a, const MatP& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  MatP r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      PolyQ sum;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        sum += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(sum);
    }
  }
  return r;
}

MatP operator*(const MatP& a, const PolyQ& s) {
  MatP r = a;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

bool MatP::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const PolyQ& p) { return p.is_zero(); });
}

bool MatP::divisible_by(const PolyQ& f) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const PolyQ& p) { return divisible(p, f); });
}

std::string MatP::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out << ", ";
      out << (*this)(i, j).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

ResolutionMatrices build_bcd(const Splitting& s) {
  const PolyQ x = PolyQ::x(), y = PolyQ::y(), z = PolyQ::z();
  const PolyQ &fx = s.fx(), &fy = s.fy(), &fz = s.fz();
  const PolyQ zero;
  MatP a(3, 1, {x, y, z});
  MatP b(4, 3, {zero, -z, y,
                z, zero, -x,
                -y, x, zero,
                fx, fy, fz});
  MatP c(4, 4, {zero, fz, -fy, x,
                -fz, zero, fx, y,
                fy, -fx, zero, z,
                -x, -y, -z, zero});
  MatP d(4, 4, {zero, -z, y, -fx,
                z, zero, -x, -fy,
                -y, x, zero, -fz,
                fx, fy, fz, zero});
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

bool check_matrix_factorization(const MatP& c, const MatP& d, const PolyQ& f) {
  if (c.rows() != 4 || c.cols() != 4 || d.rows() != 4 || d.cols() != 4) return false;
  const MatP target = MatP::identity(4) * f;
  return c * d == target && d * c == target;
}

bool check_complex(const ResolutionMatrices& m, const PolyQ& f) {
  return (m.b * m.a).divisible_by(f) && (m.c * m.b).divisible_by(f) && (m.d * m.c).divisible_by(f);
}

std::vector<PolyQ> minors_ideal(const MatP& d, std::pair<std::size_t, std::size_t> cols) {
  const auto [c1, c2] = cols;
  if (c1 == c2 || c1 < 1 || c2 < 1 || c1 > d.cols() || c2 > d.cols()) {
    throw Error(ErrorKind::InvalidColumns,
                "invalid column pair (" + std::to_string(c1) + "," + std::to_string(c2) + ")");
  }
  std::vector<PolyQ> minors;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t s = r + 1; s < d.rows(); ++s) {
      PolyQ minor = d(r, c1 - 1) * d(s, c2 - 1) - d(r, c2 - 1) * d(s, c1 - 1);
      if (minor.is_zero()) continue;
      if (minor.leading_coefficient() < 0) minor = -minor;
      if (std::find(minors.begin(), minors.end(), minor) == minors.end()) minors.push_back(std::move(minor));
    }
  }
  if (minors.empty()) throw Error(ErrorKind::AllZero, "every 2x2 minor vanishes on the chosen columns");
  return minors;
}

std::vector<PolyQ> minimalize_monomials(const std::vector<PolyQ>& gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens) {
    if (g.term_count() != 1) throw Error(ErrorKind::NotMonomial, "not a monomial: " + g.to_string());
    monos.push_back(g.leading_monomial());
  }
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    const bool dominated = std::any_of(monos.begin(), monos.end(),
                                       [&](const Monomial& o) { return o != m && divides(o, m); });
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a > b;
  });
  std::vector<PolyQ> out;
  for (const auto& m : kept) out.push_back(PolyQ::monomial(m));
  return out;
}

ToricParam ToricParam::an(Int n) { return {{1, 0}, {1, 1}, {n, checked_add(n, 1)}}; }

LatticeVec monomial_image(const Monomial& m, const ToricParam& p) {
  return static_cast<Int>(m[0]) * p.img_x + static_cast<Int>(m[1]) * p.img_y + static_cast<Int>(m[2]) * p.img_z;
}

MonomialIdeal monomialize(const std::vector<PolyQ>& gens, const ToricParam& p, const AffineSemigroup& s) {
  for (auto img : {p.img_x, p.img_y, p.img_z}) {
    if (!member(s, img)) {
      throw Error(ErrorKind::NotMember, "parametrization image " + to_string(img) + " is not in the semigroup");
    }
  }
  std::vector<LatticeVec> exps;
  for (const auto& g : gens) {
    std::map<LatticeVec, Rational> image;
    for (const auto& [m, c] : g.terms()) {
      auto& coef = image[monomial_image(m, p)];
      coef += c;
    }
    std::erase_if(image, [](const auto& entry) { return entry.second == 0; });
    if (image.size() != 1) {
      throw Error(ErrorKind::NotMonomial,
                  "image of " + g.to_string() + " has " + std::to_string(image.size()) + " terms");
    }
    exps.push_back(image.begin()->first);
  }
  return minimalize(MonomialIdeal(s, std::move(exps)));
}

AffineSemigroup gamma_n(Int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "gamma_n requires n >= 0");
  return AffineSemigroup({{1, 0}, {1, 1}, {n, checked_add(n, 1)}});
}

MonomialIdeal derivation_ideal_an(unsigned n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "derivation_ideal_an requires n >= 1");
  const auto matrices = build_bcd(Splitting::an(n));
  const auto minors = minors_ideal(matrices.d, {3, 4});
  return monomialize(minors, ToricParam::an(n), gamma_n(n));
}

}  // namespace toricres
