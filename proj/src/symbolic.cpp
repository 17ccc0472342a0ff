#include "gfangular/symbolic.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>

namespace gfangular {

BigRational symbolic_A(int j) {
  if (j < 2) return 0;
  return (j % 2 == 0) ? BigRational(-2) : BigRational(0);
}

QPolynomial symbolic_B(int j) {
  auto Q = [](int i) { return QPolynomial::symbol(i); };
  const BigRational quarter(1, 4);
  if (j < 2) return QPolynomial();
  if (j == 2) return Q(0) * quarter;
  if (j == 3) return Q(1) * quarter;
  // j >= 4 is already covered by the closed piecewise form:
  // even: (j/2 Q0 + (j-2)/2 Q2 + (j-4)/2 Q4)/4, odd: ((j-1)/2 Q1 + (j-3)/2 Q3)/4
  if (j % 2 == 0) {
    QPolynomial b = Q(0) * BigRational(j / 2) + Q(2) * BigRational((j - 2) / 2);
    if (j >= 6) b += Q(4) * BigRational((j - 4) / 2);
    return b * quarter;
  }
  QPolynomial b = Q(1) * BigRational((j - 1) / 2);
  if (j >= 5) b += Q(3) * BigRational((j - 3) / 2);
  return b * quarter;
}

QPolynomial symbolic_C(int j, int beta) {
  if (beta != 0 && beta != 1)
    throw std::invalid_argument("symbolic_C: beta must be 0 or 1");
  if (j < 0) throw std::invalid_argument("symbolic_C: j < 0");

  static std::mutex mu;
  static std::vector<QPolynomial> cache[2];
  std::lock_guard<std::mutex> lock(mu);

  auto& cs = cache[beta];
  if (cs.empty()) cs.push_back(QPolynomial(BigRational(1)));  // C_0 = 1
  for (int n = int(cs.size()); n <= j; ++n) {
    if (beta == 0 && n == 1) {
      // (beta+n)(beta+n-1) vanishes, but so does the numerator
      // (A_1 = B_1 = 0): the limit is 0, matching D_1.
      cs.push_back(QPolynomial());
      continue;
    }
    QPolynomial sum;
    for (int k = 0; k < n; ++k) {
      QPolynomial term = symbolic_B(n - k);
      term += QPolynomial(BigRational(beta + k) * symbolic_A(n - k));
      sum += term * cs[k];
    }
    BigRational denom = BigRational(beta + n) * BigRational(beta + n - 1);
    cs.push_back(sum * (BigRational(-1) / denom));
  }
  return cs[j];
}

BigRational log_coefficient_d0() {
  // beta*C_1(beta) = -(beta*A_1 + B_1)/(beta + 1); the numerator is the
  // zero polynomial, so the beta -> 0 limit is exactly 0.
  QPolynomial numerator = symbolic_B(1);
  assert(symbolic_A(1) == 0);
  if (!numerator.is_zero())
    throw std::logic_error("log_coefficient_d0: B_1 != 0");
  return BigRational(0);
}

namespace {

QPolynomial mono(long num, long den, int e0, int e1, int e2, int e3, int e4) {
  return QPolynomial::monomial(
      BigRational(num, den),
      Monomial{std::uint8_t(e0), std::uint8_t(e1), std::uint8_t(e2),
               std::uint8_t(e3), std::uint8_t(e4)});
}

}  // namespace

const std::vector<QPolynomial>& table_C1() {
  static const std::vector<QPolynomial> t = [] {
    std::vector<QPolynomial> rows(9);
    rows[0] = mono(1, 1, 0, 0, 0, 0, 0);
    rows[1] = QPolynomial();
    rows[2] = mono(1, 3, 0, 0, 0, 0, 0) + mono(-1, 24, 1, 0, 0, 0, 0);
    rows[3] = mono(-1, 48, 0, 1, 0, 0, 0);
    rows[4] = mono(1, 5, 0, 0, 0, 0, 0) + mono(-1, 24, 1, 0, 0, 0, 0) +
              mono(1, 1920, 2, 0, 0, 0, 0) + mono(-1, 80, 0, 0, 1, 0, 0);
    rows[5] = mono(-1, 40, 0, 1, 0, 0, 0) + mono(1, 1920, 1, 1, 0, 0, 0) +
              mono(-1, 120, 0, 0, 0, 1, 0);
    rows[6] = mono(1, 7, 0, 0, 0, 0, 0) + mono(-7, 180, 1, 0, 0, 0, 0) +
              mono(1, 1152, 2, 0, 0, 0, 0) + mono(-1, 322560, 3, 0, 0, 0, 0) +
              mono(1, 8064, 0, 2, 0, 0, 0) + mono(-17, 1008, 0, 0, 1, 0, 0) +
              mono(13, 40320, 1, 0, 1, 0, 0) + mono(-1, 168, 0, 0, 0, 0, 1);
    rows[7] = mono(-43, 1680, 0, 1, 0, 0, 0) + mono(13, 13440, 1, 1, 0, 0, 0) +
              mono(-1, 215040, 2, 1, 0, 0, 0) + mono(1, 6720, 0, 1, 1, 0, 0) +
              mono(-41, 3360, 0, 0, 0, 1, 0) + mono(1, 4480, 1, 0, 0, 1, 0);
    rows[8] = mono(1, 9, 0, 0, 0, 0, 0) + mono(-409, 11340, 1, 0, 0, 0, 0) +
              mono(19, 17280, 2, 0, 0, 0, 0) + mono(-1, 138240, 3, 0, 0, 0, 0) +
              mono(1, 92897280, 4, 0, 0, 0, 0) + mono(53, 207360, 0, 2, 0, 0, 0) +
              mono(-13, 5806080, 1, 2, 0, 0, 0) + mono(-239, 12960, 0, 0, 1, 0, 0) +
              mono(233, 362880, 1, 0, 1, 0, 0) + mono(-17, 5806080, 2, 0, 1, 0, 0) +
              mono(1, 23040, 0, 0, 2, 0, 0) + mono(7, 69120, 0, 1, 0, 1, 0) +
              mono(-1, 108, 0, 0, 0, 0, 1) + mono(1, 6048, 1, 0, 0, 0, 1);
    return rows;
  }();
  return t;
}

const std::vector<QPolynomial>& table_D() {
  static const std::vector<QPolynomial> t = [] {
    std::vector<QPolynomial> rows(9);
    rows[0] = mono(1, 1, 0, 0, 0, 0, 0);
    rows[1] = QPolynomial();
    rows[2] = mono(-1, 8, 1, 0, 0, 0, 0);
    rows[3] = mono(-1, 24, 0, 1, 0, 0, 0);
    rows[4] = mono(-1, 12, 1, 0, 0, 0, 0) + mono(1, 384, 2, 0, 0, 0, 0) +
              mono(-1, 48, 0, 0, 1, 0, 0);
    rows[5] = mono(-3, 80, 0, 1, 0, 0, 0) + mono(1, 480, 1, 1, 0, 0, 0) +
              mono(-1, 80, 0, 0, 0, 1, 0);
    rows[6] = mono(-23, 360, 1, 0, 0, 0, 0) + mono(1, 288, 2, 0, 0, 0, 0) +
              mono(-1, 46080, 3, 0, 0, 0, 0) + mono(1, 2880, 0, 2, 0, 0, 0) +
              mono(-1, 45, 0, 0, 1, 0, 0) + mono(7, 5760, 1, 0, 1, 0, 0) +
              mono(-1, 120, 0, 0, 0, 0, 1);
    rows[7] = mono(-11, 336, 0, 1, 0, 0, 0) + mono(43, 13440, 1, 1, 0, 0, 0) +
              mono(-1, 35840, 2, 1, 0, 0, 0) + mono(1, 2688, 0, 1, 1, 0, 0) +
              mono(-5, 336, 0, 0, 0, 1, 0) + mono(11, 13440, 1, 0, 0, 1, 0);
    rows[8] = mono(-11, 210, 1, 0, 0, 0, 0) + mono(11, 2880, 2, 0, 0, 0, 0) +
              mono(-1, 23040, 3, 0, 0, 0, 0) + mono(1, 10321920, 4, 0, 0, 0, 0) +
              mono(11, 17920, 0, 2, 0, 0, 0) + mono(-1, 92160, 1, 2, 0, 0, 0) +
              mono(-71, 3360, 0, 0, 1, 0, 0) + mono(41, 20160, 1, 0, 1, 0, 0) +
              mono(-11, 645120, 2, 0, 1, 0, 0) + mono(1, 10752, 0, 0, 2, 0, 0) +
              mono(13, 53760, 0, 1, 0, 1, 0) + mono(-3, 280, 0, 0, 0, 0, 1) +
              mono(1, 1680, 1, 0, 0, 0, 1);
    return rows;
  }();
  return t;
}

TableReport verify_tables() {
  TableReport report;
  auto compare = [&](const std::string& name, int beta,
                     const std::vector<QPolynomial>& expected) {
    for (int j = 0; j < int(expected.size()); ++j) {
      TableRowResult row;
      row.table = name;
      row.j = j;
      QPolynomial computed = symbolic_C(j, beta);
      row.computed = computed.to_string();
      row.expected = expected[j].to_string();
      row.pass = (computed == expected[j]);
      if (!row.pass) {
        row.difference = (computed - expected[j]).to_string();
        report.all_pass = false;
      }
      report.rows.push_back(std::move(row));
    }
  };
  compare("C", 1, table_C1());
  compare("D", 0, table_D());
  return report;
}

}  // namespace gfangular
