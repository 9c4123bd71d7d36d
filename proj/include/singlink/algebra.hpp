#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace singlink {

/// A permutation (or any self-map) of {0..n-1}, stored as images.
using Perm = std::vector<int>;

/// A map X x X -> X x X on X = {0..n-1}, stored as two dense row-major tables.
///
/// Switches S, their inverses and singular maps tau are all PairTables. The
/// defaulted ordering compares n, then t1, then t2 lexicographically; that is the
/// order used for deterministic output and for canonical forms.
class PairTable {
 public:
  PairTable() = default;
  PairTable(int n, std::vector<std::uint8_t> t1, std::vector<std::uint8_t> t2);

  template <class F>
  static PairTable from_function(int n, F&& f) {
    std::vector<std::uint8_t> t1(static_cast<std::size_t>(n * n));
    std::vector<std::uint8_t> t2(t1.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        auto [a, b] = f(x, y);
        t1[x * n + y] = static_cast<std::uint8_t>(a);
        t2[x * n + y] = static_cast<std::uint8_t>(b);
      }
    }
    return PairTable(n, std::move(t1), std::move(t2));
  }

  static PairTable identity(int n);
  static PairTable flip(int n);

  int size() const noexcept { return n_; }
  int first(int x, int y) const noexcept { return t1_[x * n_ + y]; }
  int second(int x, int y) const noexcept { return t2_[x * n_ + y]; }
  std::pair<int, int> operator()(int x, int y) const noexcept { return {first(x, y), second(x, y)}; }
  std::pair<int, int> operator()(std::pair<int, int> xy) const noexcept { return (*this)(xy.first, xy.second); }

  std::span<const std::uint8_t> t1() const noexcept { return t1_; }
  std::span<const std::uint8_t> t2() const noexcept { return t2_; }

  /// For each x, y -> t1(x, y) is a permutation.
  bool left_invertible() const;
  /// For each y, x -> t2(x, y) is a permutation.
  bool right_invertible() const;
  /// (x, y) -> (t1, t2) is a permutation of X x X.
  bool bijective() const;
  bool involutive() const;

  /// Throws InvalidArgument unless bijective.
  PairTable inverse() const;
  /// The composite `after o *this`.
  PairTable then(const PairTable& after) const;
  /// (phi x phi) o T o (phi x phi)^-1 for a permutation phi.
  PairTable relabel(std::span<const int> phi) const;

  auto operator<=>(const PairTable&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> t1_;
  std::vector<std::uint8_t> t2_;
};

/// A validated biquandle: Yang-Baxter, left/right invertible, bijective, and the
/// fixed points of S are exactly {(x, s(x))} for a bijection s.
class Biquandle {
 public:
  /// Throws InvalidArgument when the table is not a biquandle.
  explicit Biquandle(PairTable table);

  int size() const noexcept { return table_.size(); }
  const PairTable& table() const noexcept { return table_; }
  const PairTable& inverse_table() const noexcept { return inverse_; }
  const Perm& s_map() const noexcept { return s_map_; }

  bool operator==(const Biquandle& o) const { return table_ == o.table_; }

 private:
  PairTable table_;
  PairTable inverse_;
  Perm s_map_;
};

/// A finite set with a binary operation, used for racks and quandles.
/// Construction only checks the shape; use is_rack / is_quandle for the axioms.
class Quandle {
 public:
  Quandle(int n, std::vector<int> op);
  int size() const noexcept { return n_; }
  int operator()(int x, int y) const noexcept { return op_[x * n_ + y]; }
  const std::vector<int>& op() const noexcept { return op_; }

  bool is_rack() const;
  bool is_quandle() const;

 private:
  int n_;
  std::vector<int> op_;
};

// Modular arithmetic on Z/m, always returning representatives in [0, m).
int mod(long long a, int m);
std::optional<int> inverse_mod(int a, int m);
bool is_prime(int p);

bool check_yang_baxter(const PairTable& t);
/// The fix-point permutation s when t is a biquandle, absent otherwise.
std::optional<Perm> check_biquandle(const PairTable& t);

/// S(x, y) = (s y, t x + (1 - s t) y) on Z/m. Throws NonUnit unless s and t are units.
Biquandle make_bialexander(int m, int s, int t);
/// D_n: the Alexander switch with s = 1, t = -1.
Biquandle make_dihedral(int n);
/// S(x, y) = (y, x <| y). Throws InvalidArgument unless q is a quandle.
Biquandle make_quandle_switch(const Quandle& q);
/// The birack of a rack, without the quandle requirement.
PairTable rack_switch(const Quandle& q);
Biquandle make_flip(int n);
/// S(x, y) = (s y, s x).
Biquandle make_twisted_flip(const Perm& s);
/// The involutive size-2 biquandle i2(x, y) = (y + 1, x + 1) mod 2.
Biquandle make_i2();

void to_json(nlohmann::json& j, const PairTable& t);
void from_json(const nlohmann::json& j, PairTable& t);
nlohmann::json quandle_to_json(const Quandle& q);
Quandle quandle_from_json(const nlohmann::json& j);

}  // namespace singlink
