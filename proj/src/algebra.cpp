#include "singlink/algebra.hpp"

#include <numeric>
#include <string>

#include "singlink/error.hpp"

namespace singlink {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::SlotReuse: return "SlotReuse";
    case ErrorKind::BadBasepoint: return "BadBasepoint";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
  }
  return "Error";
}

PairTable::PairTable(int n, std::vector<std::uint8_t> t1, std::vector<std::uint8_t> t2)
    : n_(n), t1_(std::move(t1)), t2_(std::move(t2)) {
  if (n <= 0 || n > 255) throw Error(ErrorKind::InvalidArgument, "table size must be in 1..255");
  const auto cells = static_cast<std::size_t>(n * n);
  if (t1_.size() != cells || t2_.size() != cells)
    throw Error(ErrorKind::DimensionMismatch, "table has wrong number of cells for n=" + std::to_string(n));
  for (std::size_t i = 0; i < cells; ++i) {
    if (t1_[i] >= n || t2_[i] >= n) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
  }
}

PairTable PairTable::identity(int n) {
  return from_function(n, [](int x, int y) { return std::pair{x, y}; });
}

PairTable PairTable::flip(int n) {
  return from_function(n, [](int x, int y) { return std::pair{y, x}; });
}

bool PairTable::left_invertible() const {
  std::vector<char> seen(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) {
      if (seen[first(x, y)]++) return false;
    }
  }
  return true;
}

bool PairTable::right_invertible() const {
  std::vector<char> seen(n_);
  for (int y = 0; y < n_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n_; ++x) {
      if (seen[second(x, y)]++) return false;
    }
  }
  return true;
}

bool PairTable::bijective() const {
  std::vector<char> seen(static_cast<std::size_t>(n_ * n_));
  for (int c = 0; c < n_ * n_; ++c) {
    if (seen[t1_[c] * n_ + t2_[c]]++) return false;
  }
  return true;
}

bool PairTable::involutive() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if ((*this)((*this)(x, y)) != std::pair{x, y}) return false;
    }
  }
  return true;
}

PairTable PairTable::inverse() const {
  if (!bijective()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-bijective table");
  std::vector<std::uint8_t> i1(t1_.size()), i2(t2_.size());
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int c = first(x, y) * n_ + second(x, y);
      i1[c] = static_cast<std::uint8_t>(x);
      i2[c] = static_cast<std::uint8_t>(y);
    }
  }
  return PairTable(n_, std::move(i1), std::move(i2));
}

PairTable PairTable::then(const PairTable& after) const {
  if (after.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "composing tables of different sizes");
  return from_function(n_, [&](int x, int y) { return after((*this)(x, y)); });
}

PairTable PairTable::relabel(std::span<const int> phi) const {
  if (static_cast<int>(phi.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "relabeling has wrong size");
  std::vector<std::uint8_t> r1(t1_.size()), r2(t2_.size());
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const int c = phi[x] * n_ + phi[y];
      r1[c] = static_cast<std::uint8_t>(phi[first(x, y)]);
      r2[c] = static_cast<std::uint8_t>(phi[second(x, y)]);
    }
  }
  return PairTable(n_, std::move(r1), std::move(r2));
}

Biquandle::Biquandle(PairTable table) : table_(std::move(table)) {
  auto s = check_biquandle(table_);
  if (!s) throw Error(ErrorKind::InvalidArgument, "table is not a biquandle");
  s_map_ = std::move(*s);
  inverse_ = table_.inverse();
}

Quandle::Quandle(int n, std::vector<int> op) : n_(n), op_(std::move(op)) {
  if (n <= 0 || n > 255) throw Error(ErrorKind::InvalidArgument, "quandle size must be in 1..255");
  if (op_.size() != static_cast<std::size_t>(n * n)) throw Error(ErrorKind::DimensionMismatch, "operation table has wrong size");
  for (int v : op_) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidArgument, "operation entry out of range");
  }
}

bool Quandle::is_rack() const {
  std::vector<char> seen(n_);
  for (int y = 0; y < n_; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n_; ++x) {
      if (seen[(*this)(x, y)]++) return false;
    }
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      for (int z = 0; z < n_; ++z) {
        if ((*this)((*this)(x, y), z) != (*this)((*this)(x, z), (*this)(y, z))) return false;
      }
    }
  }
  return true;
}

bool Quandle::is_quandle() const {
  for (int x = 0; x < n_; ++x) {
    if ((*this)(x, x) != x) return false;
  }
  return is_rack();
}

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::optional<int> inverse_mod(int a, int m) {
  if (m == 1) return 0;
  long long old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, m);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool check_yang_baxter(const PairTable& t) {
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // (Id x S)(S x Id)(Id x S), rightmost factor first.
        auto [b1, c1] = t(y, z);
        auto [a2, b2] = t(x, b1);
        auto [b3, c3] = t(b2, c1);
        // (S x Id)(Id x S)(S x Id).
        auto [p1, q1] = t(x, y);
        auto [q2, r2] = t(q1, z);
        auto [p3, q3] = t(p1, q2);
        if (a2 != p3 || b3 != q3 || c3 != r2) return false;
      }
    }
  }
  return true;
}

std::optional<Perm> check_biquandle(const PairTable& t) {
  if (!t.left_invertible() || !t.right_invertible() || !t.bijective()) return std::nullopt;
  if (!check_yang_baxter(t)) return std::nullopt;
  const int n = t.size();
  Perm s(n, -1);
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (t(x, y) != std::pair{x, y}) continue;
      if (s[x] != -1 || hit[y]) return std::nullopt;
      s[x] = y;
      hit[y] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (s[x] == -1) return std::nullopt;
  }
  return s;
}

Biquandle make_bialexander(int m, int s, int t) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (!inverse_mod(s, m)) throw Error(ErrorKind::NonUnit, "s=" + std::to_string(s) + " is not a unit mod " + std::to_string(m));
  if (!inverse_mod(t, m)) throw Error(ErrorKind::NonUnit, "t=" + std::to_string(t) + " is not a unit mod " + std::to_string(m));
  const long long st = static_cast<long long>(s) * t;
  return Biquandle(PairTable::from_function(m, [&](int x, int y) {
    return std::pair{mod(static_cast<long long>(s) * y, m), mod(static_cast<long long>(t) * x + (1 - st) * y, m)};
  }));
}

Biquandle make_dihedral(int n) { return make_bialexander(n, 1, -1); }

PairTable rack_switch(const Quandle& q) {
  return PairTable::from_function(q.size(), [&](int x, int y) { return std::pair{y, q(x, y)}; });
}

Biquandle make_quandle_switch(const Quandle& q) {
  if (!q.is_quandle()) throw Error(ErrorKind::InvalidArgument, "operation is not a quandle");
  return Biquandle(rack_switch(q));
}

Biquandle make_flip(int n) { return Biquandle(PairTable::flip(n)); }

Biquandle make_twisted_flip(const Perm& s) {
  const int n = static_cast<int>(s.size());
  return Biquandle(PairTable::from_function(n, [&](int x, int y) { return std::pair{s.at(y), s.at(x)}; }));
}

Biquandle make_i2() { return make_twisted_flip({1, 0}); }

namespace {

std::vector<std::uint8_t> read_square(const nlohmann::json& rows, int n, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must have n rows");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " rows must have n entries");
    for (const auto& v : row) {
      const int e = v.get<int>();
      if (e < 0 || e >= n) throw Error(ErrorKind::InvalidArgument, std::string(what) + " entry out of range");
      out.push_back(static_cast<std::uint8_t>(e));
    }
  }
  return out;
}

nlohmann::json write_square(std::span<const std::uint8_t> cells, int n) {
  auto rows = nlohmann::json::array();
  for (int x = 0; x < n; ++x) {
    auto row = nlohmann::json::array();
    for (int y = 0; y < n; ++y) row.push_back(static_cast<int>(cells[x * n + y]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void to_json(nlohmann::json& j, const PairTable& t) {
  j = nlohmann::json{{"n", t.size()}, {"t1", write_square(t.t1(), t.size())}, {"t2", write_square(t.t2(), t.size())}};
}

void from_json(const nlohmann::json& j, PairTable& t) {
  const int n = j.at("n").get<int>();
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  t = PairTable(n, read_square(j.at("t1"), n, "t1"), read_square(j.at("t2"), n, "t2"));
}

nlohmann::json quandle_to_json(const Quandle& q) {
  auto rows = nlohmann::json::array();
  for (int x = 0; x < q.size(); ++x) {
    auto row = nlohmann::json::array();
    for (int y = 0; y < q.size(); ++y) row.push_back(q(x, y));
    rows.push_back(std::move(row));
  }
  return {{"n", q.size()}, {"op", rows}};
}

Quandle quandle_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  auto cells = read_square(j.at("op"), n, "op");
  return Quandle(n, std::vector<int>(cells.begin(), cells.end()));
}

}  // namespace singlink
