#pragma once

#include <string>
#include <vector>

#include "gfangular/qpolynomial.hpp"

namespace gfangular {

// Exact series coefficients of the Bocher-form equation at z0 = 0:
// z P(z) = sum A_j z^j, z^2 Q(z) = sum B_j z^j, with the Q_j kept
// symbolic.  A_j is a pure rational (0 or -2), B_j linear in Q0..Q4.
BigRational symbolic_A(int j);
QPolynomial symbolic_B(int j);

// Frobenius coefficient C_j(beta) as an exact polynomial in Q0..Q4,
// for the indicial roots beta = 0 or 1 and C_0 = 1.  The beta = 0,
// j = 1 step is the 0/0 limit and resolves to C_1(0) = 0.
QPolynomial symbolic_C(int j, int beta);

// d0 = lim_{beta->0} beta * C_1(beta); identically 0, which is what
// makes the second Frobenius solution log-free.
BigRational log_coefficient_d0();

// Reference coefficient tables, rows j = 0..8.
const std::vector<QPolynomial>& table_C1();  // C_j(1)
const std::vector<QPolynomial>& table_D();   // D_j = C_j(0)

struct TableRowResult {
  std::string table;  // "C" or "D"
  int j = 0;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::string difference;  // empty when pass
};

struct TableReport {
  std::vector<TableRowResult> rows;
  bool all_pass = true;
};

// Regenerates both tables from the recurrence and compares entry by
// entry in exact arithmetic.
TableReport verify_tables();

}  // namespace gfangular
