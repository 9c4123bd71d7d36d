#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "singlink/pairs.hpp"

namespace singlink {

/// A word over generators: +(g + 1) for generator g, -(g + 1) for its inverse.
using Word = std::vector<int>;

/// Generators f_xy (index x n + y) followed by h_xy (index n^2 + x n + y).
struct Presentation {
  int n = 0;
  std::vector<Word> relations;

  int generator_count() const noexcept { return 2 * n * n; }
  int f(int x, int y) const noexcept { return x * n + y; }
  int h(int x, int y) const noexcept { return n * n + x * n + y; }
  /// 1-based display name such as "f12" or "h21" (with commas when n > 9).
  std::string generator_name(int g) const;
};

/// Free reduction; cancels adjacent inverse letters.
Word reduce_word(const Word& w);
/// The relator l r^-1.
Word relator(const Word& lhs, const Word& rhs);

/// The seven relation families of the universal non-commutative group, over X^3.
Presentation build_unc_presentation(const SingularPair& p);
/// The relations of the universal abelian cocycle group.
Presentation build_ab_presentation(const SingularPair& p);

/// Elements of an abelian group T + Z^r stored as [torsion coordinates..., free...].
using AbElem = std::vector<long long>;

/// Z^rank + Z/d1 + ... with d1 | d2 | ..., each d > 1, and the image of every generator.
struct AbelianizedGroup {
  int rank = 0;
  std::vector<long long> torsion;
  std::vector<AbElem> coord_map;
  /// One label per coordinate: torsion first (u1, u2, ...), then free (z1, z2, ...).
  std::vector<std::string> labels;

  std::size_t dimension() const noexcept { return torsion.size() + static_cast<std::size_t>(rank); }
  AbElem identity() const { return AbElem(dimension(), 0); }
  AbElem multiply(const AbElem& a, const AbElem& b) const;
  AbElem inverse(const AbElem& a) const;
  AbElem power(const AbElem& a, long long k) const;
  bool is_identity(const AbElem& a) const;
  /// Brings torsion coordinates into [0, d).
  AbElem reduce(AbElem a) const;
  /// Monomial text such as "a*b^2*c" or "u1*z2^-1"; "1" for the identity.
  std::string render(const AbElem& a) const;
  /// Free generators renamed a, b, c, ... in order.
  void use_letter_labels();
};

/// Z^generators modulo the relator exponent sums, through Smith normal form. The
/// coordinates are normalized so that generators that can be basis elements are
/// (h generators first), which makes the output stable.
AbelianizedGroup abelianize(const Presentation& pres);
/// Image of a word under the coordinate map.
AbElem normal_form(const AbelianizedGroup& g, const Word& w);

/// Classes of X x X under (y, z) ~ (S^1(x, y), S^1(S^2(x, y), z)) for all x, each
/// sorted, classes ordered by their first element. Throws NotInvolutive.
std::vector<std::vector<std::pair<int, int>>> equivalence_classes_involutive(const PairTable& s);

nlohmann::json abelianized_to_json(const AbelianizedGroup& g, const Presentation* names = nullptr);
/// {"rank": r, "torsion": [...]} with optional "labels"; coord_map is left empty.
AbelianizedGroup abelian_group_from_json(const nlohmann::json& j);

}  // namespace singlink
