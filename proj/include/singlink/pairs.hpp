#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singlink/algebra.hpp"

namespace singlink {

/// One failed axiom instance. Unused coordinates are -1.
struct Violation {
  std::string axiom;
  int x = -1, y = -1, z = -1;
};

struct PairCheck {
  bool ok = true;
  /// The first failing instance per axiom, in axiom order.
  std::vector<Violation> violations;
  explicit operator bool() const noexcept { return ok; }
};

/// Axiom ids reported: "left-invertible", "right-invertible", "bijective",
/// "rv-1", "rv-2" (tau commutes with S), "riva-1".."riva-3", "rivb-1".."rivb-3".
/// Throws DimensionMismatch when sizes differ.
PairCheck check_singular_pair(const Biquandle& s, const PairTable& tau);

/// A biquandle together with a validated singular map.
class SingularPair {
 public:
  /// Throws InvalidArgument with the first violation when (s, tau) is not a singular pair.
  SingularPair(Biquandle s, PairTable tau);

  int size() const noexcept { return s_.size(); }
  const Biquandle& biquandle() const noexcept { return s_; }
  const PairTable& S() const noexcept { return s_.table(); }
  const PairTable& tau() const noexcept { return tau_; }

  bool operator==(const SingularPair& o) const { return s_ == o.s_ && tau_ == o.tau_; }

 private:
  Biquandle s_;
  PairTable tau_;
};

void to_json(nlohmann::json& j, const SingularPair& p);
/// {"S": PairTable, "tau": PairTable}; validates the pair.
SingularPair pair_from_json(const nlohmann::json& j);

/// tau^1(y, x) == tau^2(x, y) for all x, y.
bool check_flip_tau_condition(const PairTable& tau);
/// The five identities on S that make (X, S, flip) a singular pair.
bool check_flip_S_condition(const PairTable& s);

struct EnumerateOptions {
  bool require_bijective = true;
  /// Largest n accepted; beyond it SearchBoundExceeded is raised. Never above 8.
  int max_n = 5;
  /// 0 means: read SINGLINK_THREADS, default 1.
  int threads = 0;
};

/// Every tau making (s, tau) a singular pair (or, with require_bijective off,
/// every left/right invertible tau satisfying the three equations), sorted.
std::vector<PairTable> enumerate_taus(const Biquandle& s, const EnumerateOptions& opt = {});

struct IsoClass {
  SingularPair canonical;
  std::size_t size = 0;
  /// Relabelings taking each member onto the canonical pair, in input order.
  std::vector<Perm> witness_maps;
};

/// The concatenation S.t1 S.t2 tau.t1 tau.t2 minimized over all relabelings.
std::pair<PairTable, PairTable> canonical_form(const PairTable& s, const PairTable& tau);

/// Partition by simultaneous relabeling of S and tau. Classes sorted by canonical form.
/// Throws SearchBoundExceeded for n > 8 and DimensionMismatch for mixed sizes.
std::vector<IsoClass> classify_isomorphism(std::span<const SingularPair> pairs, bool with_witnesses = false);

/// All automorphisms of a pair map (phi x phi) T = T (phi x phi), sorted.
std::vector<Perm> automorphisms(const PairTable& t);

struct LrCounts {
  std::uint64_t total = 0;
  std::uint64_t iso = 0;
  std::uint64_t bijective = 0;
  std::uint64_t bijective_iso = 0;
  bool operator==(const LrCounts&) const = default;
};

/// Counts over left and right invertible tau, isomorphism being relabeling.
/// With flip_symmetry, only tau with tau^2(x, y) = tau^1(y, x) are counted ((n!)^n
/// maps, n <= 4); without, all ((n!)^n)^2 maps (n <= 3).
LrCounts enumerate_left_right_invertible(int n, bool flip_symmetry = true);

/// Every left and right invertible tau on n points, no further condition (n <= 3).
std::vector<PairTable> all_left_right_invertible(int n);

struct BialexanderParams {
  int m = 0, s = 0, t = 0;
};

/// tau_phi(x, y) = (x + phi(sy - x), y - t phi(sy - x)); absent if not bijective.
/// Throws HomogeneityViolation unless phi(l x) = l phi(x) for l in {s, t, -1}.
std::optional<PairTable> make_tau_phi(const BialexanderParams& b, const Perm& phi);

/// tau_a(x, y) = (a y + (1 - a/s) x, (a t/s) x + (1 - a t) y) over F_p.
/// Absent when (st + 1) a = s. Throws InvalidArgument unless p is prime, NonUnit
/// unless s, t, a are nonzero.
std::optional<PairTable> make_tau_a(int p, int s, int t, int a);

/// The homogeneity, translation and t tau^1(0, x) = s tau^2(x, 0) conditions,
/// together with bijectivity and left/right invertibility.
/// Throws NonUnit unless 1 - st is a unit.
bool check_bialexander_characterization(const BialexanderParams& b, const PairTable& tau);

/// All bijections phi commuting with s, t, -1 for which tau_phi is a valid map, sorted.
std::vector<Perm> enumerate_phis(const BialexanderParams& b);

/// Number of isomorphism classes of the pairs (S_{s,t}, tau_phi), counted as
/// orbits of Aut(S) acting on the tau_phi by conjugation.
std::size_t count_tau_phi_classes(const BialexanderParams& b);

/// Orbits of a bijective T on X x X, each starting at its least element, ordered by it.
/// Throws InvalidArgument unless T is bijective.
std::vector<std::vector<std::pair<int, int>>> cycle_decomposition(const PairTable& t);

/// Thread count from SINGLINK_THREADS (at least 1).
int default_threads();

}  // namespace singlink
