#include "doctest.h"

#include <random>

#include "gfangular/symbolic.hpp"

using namespace gfangular;

namespace {

QPolynomial Q(int i) { return QPolynomial::symbol(i); }

// Brute-force series oracle: z P(z) = -2 z^2 / (1 - z^2) and
// z^2 Q(z) = (Q0 + Q1 z + ... + Q4 z^4)/4 * sum_{t>=0} (t+1) z^{2t+2},
// both by direct power-series multiplication.
std::vector<BigRational> oracle_A(int jmax) {
  std::vector<BigRational> a(jmax + 1, 0);
  // -2 z^2 (1 + z^2 + z^4 + ...)
  for (int j = 2; j <= jmax; j += 2) a[j] = -2;
  return a;
}

std::vector<QPolynomial> oracle_B(int jmax) {
  std::vector<QPolynomial> b(jmax + 1);
  for (int d = 0; d <= 4; ++d)
    for (int t = 0; 2 * t + 2 + d <= jmax; ++t)
      b[2 * t + 2 + d] +=
          QPolynomial::symbol(d) * BigRational(t + 1, 4);
  return b;
}

}  // namespace

TEST_CASE("ring operations") {
  QPolynomial zero;
  CHECK((Q(0) + (-Q(0))).is_zero());
  CHECK(QPolynomial(1, 3) - Q(0) * BigRational(1, 24) + Q(0) * BigRational(1, 24) ==
        QPolynomial(1, 3));
  CHECK(Q(0) * Q(1) * BigRational(1, 1920) + Q(0) * Q(1) * BigRational(1, 1920) ==
        Q(0) * Q(1) * BigRational(1, 960));
  CHECK((Q(0) * Q(0)).to_string() == "Q0^2");
  CHECK((Q(0) * BigRational(1, 4) * (Q(1) * BigRational(1, 4))) ==
        Q(0) * Q(1) * BigRational(1, 16));
  CHECK((zero * Q(3)).is_zero());
}

TEST_CASE("ring axioms under randomized testing") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> expo(0, 2);
  auto random_poly = [&] {
    QPolynomial p;
    for (int t = 0; t < 4; ++t) {
      Monomial e{std::uint8_t(expo(rng)), std::uint8_t(expo(rng)),
                 std::uint8_t(expo(rng)), 0, 0};
      p += QPolynomial::monomial(BigRational(coef(rng), 1 + expo(rng)), e);
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    QPolynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("symbolic_AB closed forms") {
  CHECK(symbolic_A(2) == -2);
  CHECK(symbolic_A(7) == 0);
  CHECK(symbolic_B(2) == Q(0) * BigRational(1, 4));
  CHECK(symbolic_B(6) ==
        (Q(0) * BigRational(3) + Q(2) * BigRational(2) + Q(4)) *
            BigRational(1, 4));
  CHECK(symbolic_B(7) ==
        (Q(1) * BigRational(3) + Q(3) * BigRational(2)) * BigRational(1, 4));
}

TEST_CASE("symbolic_AB against power-series oracle, j <= 30") {
  auto a = oracle_A(30);
  auto b = oracle_B(30);
  for (int j = 0; j <= 30; ++j) {
    CHECK(symbolic_A(j) == a[j]);
    CHECK(symbolic_B(j) == b[j]);
  }
}

TEST_CASE("symbolic_C table rows") {
  CHECK(symbolic_C(2, 1) ==
        QPolynomial(1, 3) - Q(0) * BigRational(1, 24));
  CHECK(symbolic_C(2, 0) == -(Q(0) * BigRational(1, 8)));
  CHECK(symbolic_C(5, 1) == -(Q(1) * BigRational(1, 40)) +
                                Q(0) * Q(1) * BigRational(1, 1920) -
                                Q(3) * BigRational(1, 120));
  CHECK(symbolic_C(3, 0) == -(Q(1) * BigRational(1, 24)));
}

TEST_CASE("symbolic_C with Q=0 gives the atanh series") {
  for (int j = 0; j <= 12; ++j) {
    QPolynomial cj = symbolic_C(j, 1);
    // constant term only
    BigRational constant = 0;
    for (const auto& [e, c] : cj.terms()) {
      bool is_const = true;
      for (int i = 0; i < 5; ++i) is_const &= (e[i] == 0);
      if (is_const) constant = c;
    }
    if (j % 2 == 0)
      CHECK(constant == BigRational(1, j + 1));
    else
      CHECK(constant == 0);
  }
}

TEST_CASE("verify_tables passes on all 18 rows") {
  TableReport rep = verify_tables();
  CHECK(rep.rows.size() == 18);
  for (const auto& row : rep.rows) {
    INFO(row.table, row.j, " diff: ", row.difference);
    CHECK(row.pass);
  }
  CHECK(rep.all_pass);
}

TEST_CASE("d0 vanishes") {
  CHECK(log_coefficient_d0() == 0);
}
