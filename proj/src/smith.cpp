#include "singlink/smith.hpp"

#include <utility>

#include "singlink/error.hpp"

namespace singlink {

BigMatrix identity_matrix(std::size_t n) {
  BigMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (inner != b.size()) throw Error(ErrorKind::DimensionMismatch, "matrix shapes do not compose");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  BigMatrix c(a.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

mpz_class determinant(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

namespace {

class Reducer {
 public:
  Reducer(const BigMatrix& m, std::size_t cols, bool track_u)
      : d_(m), rows_(m.size()), cols_(cols), track_u_(track_u), v_(identity_matrix(cols)) {
    for (const auto& r : d_) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    }
    if (track_u_) u_ = identity_matrix(rows_);
  }

  SmithForm run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_min_to(t)) break;
      while (true) {
        if (!clear_column(t) || !clear_row(t)) {
          bring_min_to(t);
          continue;
        }
        // Pivot now divides nothing else in its row and column; enforce divisibility.
        std::size_t bad_row = rows_;
        for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i) {
          for (std::size_t j = t + 1; j < cols_; ++j) {
            if (!mpz_divisible_p(d_[i][j].get_mpz_t(), d_[t][t].get_mpz_t())) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == rows_) break;
        add_row(t, bad_row, 1);
      }
      if (d_[t][t] < 0) negate_row(t);
    }
    SmithForm out;
    out.D = std::move(d_);
    out.V = std::move(v_);
    if (track_u_) out.U = std::move(u_);
    return out;
  }

 private:
  // Moves the nonzero entry of least absolute value in the trailing block to (t, t).
  bool bring_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (d_[i][j] == 0) continue;
        if (bi == rows_ || mpz_cmpabs(d_[i][j].get_mpz_t(), d_[bi][bj].get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Reduces column t below the pivot; false if a nonzero remainder appeared.
  bool clear_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (d_[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_[i][t].get_mpz_t(), d_[t][t].get_mpz_t());
      add_row(i, t, -q);
      if (d_[i][t] != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (d_[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_[t][j].get_mpz_t(), d_[t][t].get_mpz_t());
      add_col(j, t, -q);
      if (d_[t][j] != 0) clean = false;
    }
    return clean;
  }

  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (d_[src][j] != 0) d_[dst][j] += k * d_[src][j];
    }
    if (track_u_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        if (u_[src][j] != 0) u_[dst][j] += k * u_[src][j];
      }
    }
  }

  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (d_[i][src] != 0) d_[i][dst] += k * d_[i][src];
    }
    for (std::size_t i = 0; i < cols_; ++i) {
      if (v_[i][src] != 0) v_[i][dst] += k * v_[i][src];
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    if (track_u_) std::swap(u_[a], u_[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : d_) std::swap(r[a], r[b]);
    for (auto& r : v_) std::swap(r[a], r[b]);
  }

  void negate_row(std::size_t t) {
    for (auto& x : d_[t]) x = -x;
    if (track_u_) {
      for (auto& x : u_[t]) x = -x;
    }
  }

  BigMatrix d_;
  std::size_t rows_, cols_;
  bool track_u_;
  BigMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m, std::size_t cols, bool track_u) {
  return Reducer(m, cols, track_u).run();
}

}  // namespace singlink
