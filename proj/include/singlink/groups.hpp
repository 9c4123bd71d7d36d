#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "singlink/presentation.hpp"

namespace singlink {

/// A finite group given by its multiplication table on {0..order-1}.
class FiniteGroup {
 public:
  /// table[a * order + b] = a b. Throws InvalidArgument unless the table is a group.
  FiniteGroup(int order, std::vector<int> table);

  static FiniteGroup cyclic(int k);
  /// Permutations of {0..k-1} (k <= 5) in lexicographic order; a b means "apply b, then a".
  static FiniteGroup symmetric(int k);

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int multiply(int a, int b) const noexcept { return table_[a * order_ + b]; }
  int inverse(int a) const noexcept { return inverse_[a]; }
  bool is_abelian() const;
  /// The smallest element of the conjugacy class of a.
  int conjugacy_representative(int a) const;
  const std::vector<int>& table() const noexcept { return table_; }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

nlohmann::json finite_group_to_json(const FiniteGroup& g);
/// {"order": k, "table": [[...], ...]} with rows indexed by the left factor.
FiniteGroup finite_group_from_json(const nlohmann::json& j);

/// Formal integer combination of group elements, without zero coefficients.
/// Elements are abelian coordinate vectors or, for a finite group, {index}.
struct GroupRingElement {
  std::map<AbElem, long long> terms;

  void add(const AbElem& e, long long coefficient = 1);
  long long coefficient_sum() const;
  bool operator==(const GroupRingElement&) const = default;
};

}  // namespace singlink
