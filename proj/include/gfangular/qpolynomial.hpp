#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfangular {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exponent tuple (e0,...,e4) of a monomial Q0^e0 ... Q4^e4.
using Monomial = std::array<std::uint8_t, 5>;

// Graded-lex order on monomials: total degree first, then lex.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int i = 0; i < 5; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse polynomial in the five symbols Q0..Q4 with exact rational
// coefficients.  Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(const BigRational& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }
  QPolynomial(long num, long den) : QPolynomial(BigRational(num, den)) {}

  // The single symbol Q_i.
  static QPolynomial symbol(int i);
  // c * Q0^e0 ... Q4^e4
  static QPolynomial monomial(const BigRational& c, const Monomial& e);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, BigRational, MonomialOrder>& terms() const {
    return terms_;
  }

  void add_term(const Monomial& e, const BigRational& c);

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const BigRational& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) {
    a -= b;
    return a;
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const BigRational& c) {
    a *= c;
    return a;
  }
  friend QPolynomial operator-(const QPolynomial& a) {
    return a * BigRational(-1);
  }

  bool operator==(const QPolynomial& o) const { return terms_ == o.terms_; }

  // Numeric specialization at q = (q0,...,q4).
  double evaluate(const std::array<double, 5>& q) const;

  // e.g. "1/3 - 1/24 Q0"
  std::string to_string() const;

 private:
  std::map<Monomial, BigRational, MonomialOrder> terms_;
};

}  // namespace gfangular
