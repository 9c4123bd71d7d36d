#pragma once

#include <vector>

#include <gmpxx.h>

namespace singlink {

using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix identity_matrix(std::size_t n);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
/// Determinant by fraction-free elimination (Bareiss).
mpz_class determinant(BigMatrix m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , all d >= 0.
struct SmithForm {
  BigMatrix U, D, V;
  /// The diagonal of D, length min(rows, cols).
  std::vector<mpz_class> diagonal() const;
};

/// `cols` is the width (needed when M has no rows). U is only accumulated
/// when track_u is set (it is rows x rows, which can be large).
SmithForm smith_normal_form(const BigMatrix& m, std::size_t cols, bool track_u = true);

}  // namespace singlink
