#pragma once

// Matrix factorizations of a hypersurface f = x*fx + y*fy + z*fz built from
// the Koszul-type resolution of the residue field, and the pipeline that
// turns the 2x2 minors of D into a monomial ideal on the toric chart.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toricres/blowup.hpp"
#include "toricres/poly.hpp"

namespace toricres {

/// f together with a decomposition f = x*fx + y*fy + z*fz, verified at
/// construction (InvalidSplitting otherwise).
class Splitting {
 public:
  Splitting(PolyQ f, PolyQ fx, PolyQ fy, PolyQ fz);

  /// f = xz - y^(n+1) with (fx, fy, fz) = (0, -y^n, x).
  static Splitting an(unsigned n);

  const PolyQ& f() const { return f_; }
  const PolyQ& fx() const { return fx_; }
  const PolyQ& fy() const { return fy_; }
  const PolyQ& fz() const { return fz_; }

 private:
  PolyQ f_, fx_, fy_, fz_;
};

/// Dense matrix of polynomials, row-major.
class MatP {
 public:
  MatP(std::size_t rows, std::size_t cols);
  MatP(std::size_t rows, std::size_t cols, std::vector<PolyQ> entries);

  static MatP identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const PolyQ& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  PolyQ& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  friend MatP operator*(const MatP& a, const MatP& b);
  friend MatP operator*(const MatP& a, const PolyQ& s);
  friend bool operator==(const MatP&, const MatP&) = default;

  bool is_zero() const;
  /// Every entry divisible by f.
  bool divisible_by(const PolyQ& f) const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PolyQ> entries_;
};

struct ResolutionMatrices {
  MatP a;  // 3x1: (x, y, z)^t
  MatP b;  // 4x3
  MatP c;  // 4x4
  MatP d;  // 4x4
};

ResolutionMatrices build_bcd(const Splitting& s);

/// C*D = D*C = f*Id_4, exactly.
bool check_matrix_factorization(const MatP& c, const MatP& d, const PolyQ& f);

/// B*A, C*B and D*C vanish modulo f.
bool check_complex(const ResolutionMatrices& m, const PolyQ& f);

/// The nonzero 2x2 minors of the 4x2 submatrix on the given 1-based columns,
/// each with positive leading coefficient, duplicates dropped in row-pair
/// order (12, 13, 14, 23, 24, 34).
std::vector<PolyQ> minors_ideal(const MatP& d, std::pair<std::size_t, std::size_t> cols);

/// Drops monomial generators divisible by another one. Requires monomials.
/// Result sorted by degree, then lexicographically descending.
std::vector<PolyQ> minimalize_monomials(const std::vector<PolyQ>& gens);

/// Images of x, y, z as exponent vectors of the torus coordinates (u, v).
struct ToricParam {
  LatticeVec img_x;
  LatticeVec img_y;
  LatticeVec img_z;

  /// x -> (1,0), y -> (1,1), z -> (n, n+1): the parametrization of A_n.
  static ToricParam an(Int n);
};

/// Exponent vector of a monomial under the parametrization.
LatticeVec monomial_image(const Monomial& m, const ToricParam& p);

/// Pushes each generator through the parametrization. Every image must be a
/// single monomial (NotMonomial otherwise); the exponents are minimalized
/// over s.
MonomialIdeal monomialize(const std::vector<PolyQ>& gens, const ToricParam& p, const AffineSemigroup& s);

/// The semigroup Γ_n = <(1,0), (1,1), (n,n+1)>.
AffineSemigroup gamma_n(Int n);

/// Blow-up center for A_n via splitting, D, minors on columns (3,4) and
/// monomialization over Γ_n.
MonomialIdeal derivation_ideal_an(unsigned n);

}  // namespace toricres
