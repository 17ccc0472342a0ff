#include "gfangular/qpolynomial.hpp"

#include <cmath>
#include <sstream>

namespace gfangular {

QPolynomial QPolynomial::symbol(int i) {
  Monomial e{};
  e[i] = 1;
  return monomial(BigRational(1), e);
}

QPolynomial QPolynomial::monomial(const BigRational& c, const Monomial& e) {
  QPolynomial p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

void QPolynomial::add_term(const Monomial& e, const BigRational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Monomial e;
      for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

double QPolynomial::evaluate(const std::array<double, 5>& q) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.convert_to<double>();
    for (int i = 0; i < 5; ++i)
      for (int p = 0; p < e[i]; ++p) t *= q[i];
    sum += t;
  }
  return sum;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational ac = c < 0 ? BigRational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_sym = false;
    for (int i = 0; i < 5; ++i) has_sym |= (e[i] != 0);
    if (!has_sym || ac != 1) {
      os << ac;
      if (has_sym) os << " ";
    }
    bool sep = false;
    for (int i = 0; i < 5; ++i) {
      if (!e[i]) continue;
      if (sep) os << "*";
      sep = true;
      os << "Q" << i;
      if (e[i] > 1) os << "^" << int(e[i]);
    }
  }
  return os.str();
}

}  // namespace gfangular
