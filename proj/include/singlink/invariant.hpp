#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "singlink/coloring.hpp"
#include "singlink/diagram.hpp"
#include "singlink/groups.hpp"
#include "singlink/pairs.hpp"
#include "singlink/presentation.hpp"

namespace singlink {

using Target = std::variant<AbelianizedGroup, FiniteGroup>;

/// Uniform arithmetic over either kind of target. Finite group elements are {index}.
class TargetOps {
 public:
  explicit TargetOps(const Target& t) : t_(t) {}
  AbElem identity() const;
  AbElem multiply(const AbElem& a, const AbElem& b) const;
  AbElem inverse(const AbElem& a) const;
  bool equal(const AbElem& a, const AbElem& b) const;
  bool is_abelian() const;
  bool is_element(const AbElem& a) const;
  AbElem conjugacy_representative(const AbElem& a) const;
  /// "1", "a*b^2", or "g3" for finite group element 3.
  std::string render(const AbElem& a) const;

 private:
  const Target& t_;
};

enum class CocycleKind { NonCommutative, Abelian };

/// f and h are n x n tables stored row-major: f[x * n + y].
struct CocyclePair {
  Target target;
  std::vector<AbElem> f, h;
  CocycleKind kind = CocycleKind::NonCommutative;

  int size() const;
  const AbElem& F(int x, int y) const { return f[x * size() + y]; }
  const AbElem& H(int x, int y) const { return h[x * size() + y]; }
};

/// Conditions f1..f4, h1, c1..c4. Violation axiom names are those ids.
PairCheck check_nc_cocycle(const SingularPair& p, const CocyclePair& c);
/// Conditions f1', f2', c1', c2', c3' (reported as "f1'" and so on).
/// Throws InvalidArgument for a non-abelian target.
PairCheck check_ab_cocycle(const SingularPair& p, const CocyclePair& c);

struct IdentityCheck {
  std::string name;
  bool ok = true;
};

/// Consequences of the non-commutative conditions: "f3-from-c3", "f2-from-c3-h1",
/// "f-from-h", "h-trivial-forces-f-trivial" and, for abelian targets, "f-tau-inverse".
std::vector<IdentityCheck> derived_cocycle_identities(const SingularPair& p, const CocyclePair& c);

/// f_xy and h_xy sent to their classes in the abelianized universal group.
/// With letters, free generators are named a, b, c, ...
CocyclePair universal_nc_cocycle(const SingularPair& p, bool letters = false);
/// The universal abelian pair into Ab^{fh}.
CocyclePair universal_ab_cocycle(const SingularPair& p, bool letters = false);

/// True when every relator of `pres` maps to the identity under f_xy -> f(x, y), h_xy -> h(x, y).
bool kills_relations(const Presentation& pres, const CocyclePair& c);

/// Component values for one coloring, ordered by component index.
using ComponentValues = std::vector<AbElem>;

struct NcInvariantValue {
  std::vector<Coloring> colorings;
  /// per_coloring[k] belongs to colorings[k].
  std::vector<ComponentValues> per_coloring;
  std::map<ComponentValues, std::size_t> multiset;
};

/// Weight product along each component from its basepoint, up to conjugacy.
/// Throws CocycleInvalid when c fails check_nc_cocycle.
NcInvariantValue nc_invariant(const SingularDiagram& d, const SingularPair& p, const CocyclePair& c);
/// Product of component values for a single coloring, before conjugacy reduction.
ComponentValues component_products(const SingularDiagram& d, const CocyclePair& c, const Coloring& col);

/// Sum over colorings of the product of all crossing weights.
/// Throws CocycleInvalid when c fails check_ab_cocycle.
GroupRingElement state_sum(const SingularDiagram& d, const SingularPair& p, const CocyclePair& c);

/// Terms in descending coordinate order, e.g. "2*a^2*c^2 + 2*b^4" or "2*u1 + 2"; "0" if empty.
std::string render_laurent(const GroupRingElement& v, const Target& target);
/// "{b^2} x2, {a*c, 1}" style listing of a multiset, in map order.
std::string render_nc_value(const NcInvariantValue& v, const Target& target);

struct NotionComparison {
  /// Universal non-commutative pair into the abelianized U_nc, checked against the abelian conditions.
  bool universal_passes_ab = false;
  std::vector<std::string> universal_failures;
  /// Homomorphisms from the abelianized U_nc to Z/k, k = 2..bound.
  std::size_t examined = 0;
  std::size_t also_abelian = 0;
  /// Up to five (k, assignment) pairs that pass the non-commutative but not the abelian conditions.
  std::vector<std::pair<int, CocyclePair>> counterexamples;
  /// Whether homomorphism enumeration was cut short by the per-k cap.
  bool truncated = false;
  /// Invariant factors (torsion then zeros for the rank) of both universal groups.
  std::vector<long long> unc_factors, ab_factors;
};

/// Explores whether non-commutative pairs with abelian values are abelian pairs.
NotionComparison compare_cocycle_notions(const SingularPair& p, int bound);

/// All non-commutative pairs into g with f(x, y) = h(x, y) h(S(x, y))^-1, found by
/// searching h over g^(n^2). Throws SearchBoundExceeded above `max_candidates`.
std::vector<CocyclePair> find_nc_cocycles(const SingularPair& p, const FiniteGroup& g,
                                          std::size_t max_candidates = 1000000);

/// Named pairs: trivial, flip-i2 (alias flip-s2), flip-flip, i2-i2, d3-d3, d3-d3inv. Throws UnknownName.
SingularPair builtin_pair(std::string_view name);
const std::vector<std::string>& builtin_pair_names();

nlohmann::json cocycle_to_json(const CocyclePair& c);
/// {"kind": "nc"|"ab", "f": [[...]], "h": [[...]]}; entries are element indices for a
/// finite target and coordinate vectors for an abelian one. Validated against p.
CocyclePair cocycle_from_json(const nlohmann::json& j, const Target& target, const SingularPair& p);

}  // namespace singlink
