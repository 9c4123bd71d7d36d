#pragma once

#include <cstdint>
#include <vector>

#include "singlink/diagram.hpp"
#include "singlink/pairs.hpp"

namespace singlink {

/// Color of every edge, indexed like the diagram's edges.
using Coloring = std::vector<std::uint8_t>;

/// The three maps a coloring must respect; they need not form a singular pair.
struct ColoringRule {
  PairTable pos;  // S
  PairTable neg;  // S^-1
  PairTable sing; // tau

  explicit ColoringRule(const SingularPair& p);
  ColoringRule(PairTable s, PairTable s_inverse, PairTable tau);
  int size() const noexcept { return pos.size(); }
  const PairTable& at(CrossingKind k) const noexcept {
    return k == CrossingKind::Pos ? pos : k == CrossingKind::Neg ? neg : sing;
  }
};

/// All colorings, sorted lexicographically by edge index order.
std::vector<Coloring> enumerate_colorings(const SingularDiagram& d, const ColoringRule& rule);
std::vector<Coloring> enumerate_colorings(const SingularDiagram& d, const SingularPair& p);
std::size_t count_colorings(const SingularDiagram& d, const SingularPair& p);

/// Filters all |X|^edges assignments. Used as an oracle on small inputs.
std::vector<Coloring> brute_force_colorings(const SingularDiagram& d, const ColoringRule& rule);

}  // namespace singlink
