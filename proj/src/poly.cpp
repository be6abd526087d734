#include "toricres/poly.hpp"

#include <cctype>
#include <sstream>

#include "toricres/error.hpp"

namespace toricres {

std::uint64_t degree(const Monomial& m) {
  return std::uint64_t{m[0]} + m[1] + m[2];
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

bool divides(const Monomial& a, const Monomial& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < 3; ++i) {
    if (a[i] > UINT32_MAX - b[i]) throw Error(ErrorKind::Overflow, "monomial exponent overflow");
    r[i] = a[i] + b[i];
  }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyQ parse_all() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    PolyQ p = expr();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Parse, message + " at position " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyQ expr() {
    PolyQ result;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    PolyQ t = term();
    result = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  PolyQ term() {
    PolyQ result = factor();
    while (true) {
      if (accept('*')) {
        result = result * factor();
      } else if (accept('/')) {
        const PolyQ d = factor();
        if (d.is_zero() || d.term_count() != 1 || degree(d.leading_monomial()) != 0) {
          fail("division only by nonzero constants");
        }
        result *= Rational(1) / d.leading_coefficient();
      } else {
        return result;
      }
    }
  }

  PolyQ factor() {
    PolyQ base = primary();
    if (accept('^')) {
      skip_space();
      base = base.pow(static_cast<unsigned>(integer()));
    }
    return base;
  }

  unsigned long long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    const auto digits = std::string(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large");
    return std::stoull(digits);
  }

  PolyQ primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyQ inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return c == 'x' ? PolyQ::x() : (c == 'y' ? PolyQ::y() : PolyQ::z());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return PolyQ(Rational(boost::multiprecision::cpp_int(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  static constexpr char names[3] = {'x', 'y', 'z'};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

PolyQ::PolyQ(Rational c) {
  if (c != 0) terms_.emplace(Monomial{0, 0, 0}, std::move(c));
}

PolyQ PolyQ::monomial(Monomial m, Rational c) {
  PolyQ p;
  p.add_term(m, c);
  return p;
}

PolyQ PolyQ::parse(std::string_view text) { return Parser(text).parse_all(); }

void PolyQ::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyQ& PolyQ::operator+=(const PolyQ& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
  PolyQ r;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) r.add_term(mono_mul(mp, mq), cp * cq);
  }
  return r;
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result(1);
  PolyQ base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string PolyQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out << magnitude.str();
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << magnitude.str() << '*' << mono;
    }
  }
  return out.str();
}

PolyQ remainder(const PolyQ& p, const PolyQ& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const Monomial& lead = f.leading_monomial();
  const Rational& lead_coef = f.leading_coefficient();
  PolyQ rest = p;
  PolyQ rem;
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    if (divides(lead, m)) {
      const Monomial shift{m[0] - lead[0], m[1] - lead[1], m[2] - lead[2]};
      rest -= PolyQ::monomial(shift, c / lead_coef) * f;
    } else {
      const PolyQ t = PolyQ::monomial(m, c);
      rem += t;
      rest -= t;
    }
  }
  return rem;
}

bool divisible(const PolyQ& p, const PolyQ& f) { return remainder(p, f).is_zero(); }

}  // namespace toricres
