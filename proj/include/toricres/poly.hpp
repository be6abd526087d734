#pragma once

// Sparse polynomials in Q[x, y, z] with exact rational coefficients.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricres {

using Rational = boost::multiprecision::cpp_rational;

/// Exponents (e_x, e_y, e_z).
using Monomial = std::array<std::uint32_t, 3>;

std::uint64_t degree(const Monomial& m);

/// Graded lexicographic order with x > y > z; true iff a is larger than b.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool divides(const Monomial& a, const Monomial& b);

class PolyQ {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  PolyQ() = default;
  PolyQ(Rational c);  // NOLINT: constants convert implicitly
  PolyQ(int c) : PolyQ(Rational(c)) {}  // NOLINT

  static PolyQ monomial(Monomial m, Rational c = 1);
  static PolyQ x() { return monomial({1, 0, 0}); }
  static PolyQ y() { return monomial({0, 1, 0}); }
  static PolyQ z() { return monomial({0, 0, 1}); }

  /// Parses e.g. "x*z - y^4", "3/2*x^2 + (x - y)^2".
  static PolyQ parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest monomial in grlex order and its coefficient. Requires nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  PolyQ& operator+=(const PolyQ& other);
  PolyQ& operator-=(const PolyQ& other);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ p, const PolyQ& q) { return p += q; }
  friend PolyQ operator-(PolyQ p, const PolyQ& q) { return p -= q; }
  friend PolyQ operator-(PolyQ p) { return p *= Rational(-1); }
  friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator*(PolyQ p, const Rational& c) { return p *= c; }

  friend bool operator==(const PolyQ& p, const PolyQ& q) { return p.terms_ == q.terms_; }

  PolyQ pow(unsigned e) const;

  /// Canonical text form, terms in descending grlex order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Remainder of p on division by f (nonzero); zero iff f divides p.
PolyQ remainder(const PolyQ& p, const PolyQ& f);
bool divisible(const PolyQ& p, const PolyQ& f);

}  // namespace toricres
