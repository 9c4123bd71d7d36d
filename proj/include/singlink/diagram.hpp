#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace singlink {

enum class CrossingKind { Pos, Neg, Sing };

/// Slots are [in1, in2, out1, out2], holding edge indices. The strand entering at
/// in1 leaves at out2 and the strand entering at in2 leaves at out1. At a Pos
/// crossing the under-strand enters at in1, at a Neg crossing at in2.
struct Crossing {
  CrossingKind kind;
  std::array<int, 4> slots;
  bool operator==(const Crossing&) const = default;
};

/// One pass of a component through a crossing, entering at in-slot 0 or 1.
struct Passage {
  int crossing;
  int slot;
  bool operator==(const Passage&) const = default;
};

/// An oriented singular link diagram. Every edge is either produced by exactly one
/// out-slot and consumed by exactly one in-slot, or is a crossingless loop.
class SingularDiagram {
 public:
  SingularDiagram() = default;
  /// `bases` pairs a component index with an edge of that component; components
  /// without one take the remaining indices ordered by their smallest edge.
  /// Throws SlotReuse, DanglingEdge or BadBasepoint.
  SingularDiagram(std::vector<Crossing> crossings, std::vector<std::string> edge_names,
                  const std::vector<std::pair<int, int>>& bases = {});

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& edge_name(int e) const { return names_.at(e); }
  const std::vector<std::string>& edge_names() const noexcept { return names_; }
  std::optional<int> find_edge(std::string_view name) const;

  bool is_loop(int e) const { return head_.at(e).crossing < 0; }
  /// Crossing and in-slot consuming edge e (crossing -1 for loops).
  Passage head(int e) const { return head_.at(e); }
  /// Crossing and out-slot (0 for out1, 1 for out2) producing edge e.
  Passage tail(int e) const { return tail_.at(e); }
  /// The next edge along the strand, and the previous one.
  int next_edge(int e) const;
  int prev_edge(int e) const;

  int component_count() const noexcept { return static_cast<int>(basepoints_.size()); }
  int component_of(int e) const { return comp_.at(e); }
  const std::vector<int>& basepoints() const noexcept { return basepoints_; }
  /// Edges of component i in strand order starting at its basepoint.
  std::vector<int> component_edges(int i) const;
  /// Crossing passages of component i in strand order starting at its basepoint.
  std::vector<Passage> traverse(int i) const;

  /// Same diagram with the basepoint of component i moved to edge e of that component.
  SingularDiagram with_basepoint(int i, int e) const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::string> names_;
  std::vector<Passage> head_, tail_;
  std::vector<int> comp_;
  std::vector<int> basepoints_;
};

/// Text format: `X+|X-|Xs in1 in2 out1 out2`, `loop <edge>`, `base <i> <edge>`,
/// `#` comments. Edge indices follow first appearance. Throws SyntaxError with
/// line:column, plus the structural errors of the constructor.
SingularDiagram parse_diagram(std::string_view text);
std::string render_diagram(const SingularDiagram& d);

nlohmann::json diagram_to_json(const SingularDiagram& d);
SingularDiagram diagram_from_json(const nlohmann::json& j);

/// Bijection of crossings and edges preserving kinds, slots and component indices.
bool is_isomorphic(const SingularDiagram& a, const SingularDiagram& b);

struct BraidLetter {
  CrossingKind kind;
  /// 1-based: the crossing joins strand positions i and i + 1.
  int position;
};

/// Closure of a braid word on `strands` strands.
SingularDiagram closed_braid(int strands, const std::vector<BraidLetter>& word);

/// Named diagrams: sing_trefoil, sing_trefoil_mirror, sing_hopf, sing_trefoil_fig8,
/// four_sing_left, four_sing_right, trefoil, unknot. Throws UnknownName.
SingularDiagram builtin_diagram(std::string_view name);
const std::vector<std::string>& builtin_diagram_names();

enum class MoveKind { RI_insert, RI_remove, RII_remove, RIII, RIVa, RIVb, RV };

std::string_view to_string(MoveKind m);
/// Throws UnknownName.
MoveKind parse_move_kind(std::string_view s);

/// For RI_insert `location` is {edge} and `variant` is 0..3: bit 1 selects the
/// shared slot (in1/out1 or in2/out2), bit 0 selects Neg over Pos. For RI_remove
/// it is {crossing} with variant 1 or 2 naming the shared slot. RII_remove is
/// {c1, c2} with variant 0 (c1 feeds c2 on both strands) or 1/2 (anti-parallel,
/// sharing in/out slot 1 or 2). The three-crossing moves take {A, B, C} with
/// variant 0 for the 1-2-1 arrangement and 1 for 2-1-2. RV is {c1, c2}.
struct MoveSite {
  MoveKind move;
  std::vector<int> location;
  int variant = 0;
  bool operator==(const MoveSite&) const = default;
};

/// All matches of the move's left-hand side, in deterministic order. For
/// RI_insert, one site per edge with variant 0.
std::vector<MoveSite> find_move_sites(const SingularDiagram& d, MoveKind move);
/// Throws PatternMismatch if the site does not match.
SingularDiagram apply_move(const SingularDiagram& d, const MoveSite& site);

}  // namespace singlink
