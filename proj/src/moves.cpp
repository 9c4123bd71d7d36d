#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "singlink/diagram.hpp"
#include "singlink/error.hpp"

namespace singlink {

namespace {

int in(const Crossing& c, int k) { return c.slots[k - 1]; }
int out(const Crossing& c, int k) { return c.slots[k + 1]; }
bool classical(CrossingKind k) { return k != CrossingKind::Sing; }

constexpr CrossingKind P = CrossingKind::Pos;
constexpr CrossingKind N = CrossingKind::Neg;
constexpr CrossingKind Sg = CrossingKind::Sing;

// Mutable copy of a diagram used by every rewrite. Boundary edges keep their
// names, internal edges of a replaced pattern get fresh names, and replaced
// crossings keep the positions of the removed ones.
class Rewrite {
 public:
  explicit Rewrite(const SingularDiagram& d) : old_(d), names_(d.edge_names()), dead_(d.edge_count(), 0) {
    for (const auto& c : d.crossings()) crossings_.emplace_back(c);
    used_.insert(names_.begin(), names_.end());
  }

  std::optional<Crossing>& crossing(int c) { return crossings_.at(c); }
  void remove(int c) { crossings_.at(c).reset(); }
  void add(const Crossing& c) { crossings_.emplace_back(c); }
  void kill(int e) { dead_.at(e) = 1; }
  /// The strand arriving on p continues on q once the crossings between them are gone.
  void merge(int p, int q) { merges_.emplace_back(p, q); }

  int fresh() {
    std::string name;
    do name = "m" + std::to_string(++counter_);
    while (used_.count(name));
    used_.insert(name);
    names_.push_back(name);
    dead_.push_back(0);
    return static_cast<int>(names_.size()) - 1;
  }

  void replace_in_slot(int from, int to) {
    for (auto& c : crossings_) {
      if (!c) continue;
      for (int k = 0; k < 2; ++k) {
        if (c->slots[k] == from) {
          c->slots[k] = to;
          return;
        }
      }
    }
  }

  SingularDiagram finish() {
    resolve_merges();
    const int m = static_cast<int>(names_.size());
    std::vector<int> compact(m, -1);
    std::vector<std::string> names;
    for (int e = 0; e < m; ++e) {
      if (dead_[e]) continue;
      compact[e] = static_cast<int>(names.size());
      names.push_back(names_[e]);
    }
    std::vector<Crossing> crossings;
    for (const auto& c : crossings_) {
      if (!c) continue;
      Crossing x = *c;
      for (int& s : x.slots) {
        if (compact[s] < 0) throw Error(ErrorKind::PatternMismatch, "rewrite left a slot on a removed edge");
        s = compact[s];
      }
      crossings.push_back(x);
    }
    std::vector<std::pair<int, int>> bases;
    for (int i = 0; i < old_.component_count(); ++i) {
      int b = old_.basepoints()[i];
      for (int steps = 0; dead_[b]; ++steps) {
        if (steps > old_.edge_count()) throw Error(ErrorKind::PatternMismatch, "rewrite removed a whole component");
        b = old_.prev_edge(b);
      }
      bases.emplace_back(i, compact[b]);
    }
    return SingularDiagram(std::move(crossings), std::move(names), bases);
  }

 private:
  void resolve_merges() {
    std::map<int, int> next;
    std::set<int> targets;
    for (auto [p, q] : merges_) {
      next[p] = q;
      targets.insert(q);
    }
    std::set<int> done;
    for (auto [p, q] : merges_) {
      if (targets.count(p) || done.count(p)) continue;
      int cur = p;
      done.insert(p);
      while (next.count(cur)) {
        cur = next[cur];
        done.insert(cur);
        kill(cur);
      }
      replace_in_slot(cur, p);
    }
    // What is left are closed chains: the strand became a crossingless loop.
    for (auto [p, q] : merges_) {
      if (done.count(p)) continue;
      int cur = p;
      done.insert(p);
      while (!done.count(next[cur])) {
        cur = next[cur];
        done.insert(cur);
        kill(cur);
      }
    }
  }

  const SingularDiagram& old_;
  std::vector<std::optional<Crossing>> crossings_;
  std::vector<std::string> names_;
  std::vector<char> dead_;
  std::vector<std::pair<int, int>> merges_;
  std::set<std::string> used_;
  int counter_ = 0;
};

bool match121(const SingularDiagram& d, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  const auto& A = d.crossings()[a];
  const auto& B = d.crossings()[b];
  const auto& C = d.crossings()[c];
  return out(A, 2) == in(B, 1) && out(A, 1) == in(C, 1) && out(B, 1) == in(C, 2);
}

bool match212(const SingularDiagram& d, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  const auto& A = d.crossings()[a];
  const auto& B = d.crossings()[b];
  const auto& C = d.crossings()[c];
  return out(A, 1) == in(B, 2) && out(B, 2) == in(C, 1) && out(A, 2) == in(C, 2);
}

using Kinds = std::array<CrossingKind, 3>;

// Allowed (source kinds, target kinds) for a three-crossing move in the given direction.
std::vector<std::pair<Kinds, Kinds>> three_rules(MoveKind m, int variant) {
  switch (m) {
    case MoveKind::RIII:
      return {{{P, P, P}, {P, P, P}}, {{N, N, N}, {N, N, N}}};
    case MoveKind::RIVa:
      return variant == 0 ? std::vector<std::pair<Kinds, Kinds>>{{{P, P, Sg}, {Sg, P, P}}}
                          : std::vector<std::pair<Kinds, Kinds>>{{{Sg, P, P}, {P, P, Sg}}};
    case MoveKind::RIVb:
      return variant == 0 ? std::vector<std::pair<Kinds, Kinds>>{{{Sg, P, P}, {P, P, Sg}}}
                          : std::vector<std::pair<Kinds, Kinds>>{{{P, P, Sg}, {Sg, P, P}}};
    default:
      return {};
  }
}

std::optional<Kinds> three_target(const SingularDiagram& d, MoveKind m, const std::vector<int>& loc, int variant) {
  if (loc.size() != 3 || (variant != 0 && variant != 1)) return std::nullopt;
  for (int c : loc) {
    if (c < 0 || c >= d.crossing_count()) return std::nullopt;
  }
  const bool shape = variant == 0 ? match121(d, loc[0], loc[1], loc[2]) : match212(d, loc[0], loc[1], loc[2]);
  if (!shape) return std::nullopt;
  const Kinds have{d.crossings()[loc[0]].kind, d.crossings()[loc[1]].kind, d.crossings()[loc[2]].kind};
  for (const auto& [from, to] : three_rules(m, variant)) {
    if (from == have) return to;
  }
  return std::nullopt;
}

bool feeds_both(const Crossing& a, const Crossing& b) { return out(a, 1) == in(b, 1) && out(a, 2) == in(b, 2); }

bool rii_match(const SingularDiagram& d, const std::vector<int>& loc, int variant) {
  if (loc.size() != 2 || loc[0] == loc[1]) return false;
  for (int c : loc) {
    if (c < 0 || c >= d.crossing_count()) return false;
  }
  const auto& a = d.crossings()[loc[0]];
  const auto& b = d.crossings()[loc[1]];
  if (!classical(a.kind) || !classical(b.kind) || a.kind == b.kind) return false;
  if (variant == 0) return feeds_both(a, b);
  if (variant == 1 || variant == 2) return out(a, variant) == in(b, variant) && out(b, variant) == in(a, variant);
  return false;
}

bool rv_match(const SingularDiagram& d, const std::vector<int>& loc) {
  if (loc.size() != 2 || loc[0] == loc[1]) return false;
  for (int c : loc) {
    if (c < 0 || c >= d.crossing_count()) return false;
  }
  const auto& a = d.crossings()[loc[0]];
  const auto& b = d.crossings()[loc[1]];
  if ((a.kind == Sg) == (b.kind == Sg)) return false;
  return feeds_both(a, b);
}

[[noreturn]] void mismatch(const MoveSite& site) {
  std::string loc;
  for (int c : site.location) loc += (loc.empty() ? "" : ",") + std::to_string(c);
  throw Error(ErrorKind::PatternMismatch, std::string(to_string(site.move)) + " does not match at [" + loc +
                                              "] variant " + std::to_string(site.variant));
}

}  // namespace

std::string_view to_string(MoveKind m) {
  switch (m) {
    case MoveKind::RI_insert: return "RI_insert";
    case MoveKind::RI_remove: return "RI_remove";
    case MoveKind::RII_remove: return "RII_remove";
    case MoveKind::RIII: return "RIII";
    case MoveKind::RIVa: return "RIVa";
    case MoveKind::RIVb: return "RIVb";
    case MoveKind::RV: return "RV";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view s) {
  for (auto m : {MoveKind::RI_insert, MoveKind::RI_remove, MoveKind::RII_remove, MoveKind::RIII, MoveKind::RIVa,
                 MoveKind::RIVb, MoveKind::RV}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorKind::UnknownName, "unknown move '" + std::string(s) + "'");
}

std::vector<MoveSite> find_move_sites(const SingularDiagram& d, MoveKind move) {
  std::vector<MoveSite> sites;
  const int n = d.crossing_count();
  switch (move) {
    case MoveKind::RI_insert:
      for (int e = 0; e < d.edge_count(); ++e) sites.push_back({move, {e}, 0});
      break;
    case MoveKind::RI_remove:
      for (int c = 0; c < n; ++c) {
        const auto& x = d.crossings()[c];
        if (!classical(x.kind)) continue;
        for (int k = 1; k <= 2; ++k) {
          if (in(x, k) == out(x, k)) sites.push_back({move, {c}, k});
        }
      }
      break;
    case MoveKind::RII_remove:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (rii_match(d, {a, b}, 0)) sites.push_back({move, {a, b}, 0});
          for (int k = 1; k <= 2; ++k) {
            if (a < b && rii_match(d, {a, b}, k)) sites.push_back({move, {a, b}, k});
          }
        }
      }
      break;
    case MoveKind::RIII:
    case MoveKind::RIVa:
    case MoveKind::RIVb:
      for (int variant = 0; variant < 2; ++variant) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
              if (three_target(d, move, {a, b, c}, variant)) sites.push_back({move, {a, b, c}, variant});
            }
          }
        }
      }
      break;
    case MoveKind::RV:
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (rv_match(d, {a, b})) sites.push_back({move, {a, b}, 0});
        }
      }
      break;
  }
  return sites;
}

SingularDiagram apply_move(const SingularDiagram& d, const MoveSite& site) {
  Rewrite w(d);
  const auto& loc = site.location;
  switch (site.move) {
    case MoveKind::RI_insert: {
      if (loc.size() != 1 || loc[0] < 0 || loc[0] >= d.edge_count() || site.variant < 0 || site.variant > 3)
        mismatch(site);
      const int e = loc[0];
      const int k = (site.variant >> 1) + 1;
      const CrossingKind kind = site.variant & 1 ? N : P;
      const int l = w.fresh();
      int e2 = e;
      if (!d.is_loop(e)) {
        e2 = w.fresh();
        w.replace_in_slot(e, e2);
      }
      w.add(k == 1 ? Crossing{kind, {l, e, l, e2}} : Crossing{kind, {e, l, e2, l}});
      break;
    }
    case MoveKind::RI_remove: {
      if (loc.size() != 1 || loc[0] < 0 || loc[0] >= d.crossing_count()) mismatch(site);
      const auto& x = d.crossings()[loc[0]];
      const int k = site.variant;
      if (!classical(x.kind) || (k != 1 && k != 2) || in(x, k) != out(x, k)) mismatch(site);
      const int j = 3 - k;
      w.remove(loc[0]);
      w.kill(in(x, k));
      w.merge(in(x, j), out(x, j));
      break;
    }
    case MoveKind::RII_remove: {
      if (!rii_match(d, loc, site.variant)) mismatch(site);
      const auto& a = d.crossings()[loc[0]];
      const auto& b = d.crossings()[loc[1]];
      w.remove(loc[0]);
      w.remove(loc[1]);
      if (site.variant == 0) {
        w.kill(out(a, 1));
        w.kill(out(a, 2));
        w.merge(in(a, 1), out(b, 1));
        w.merge(in(a, 2), out(b, 2));
      } else {
        const int k = site.variant, j = 3 - k;
        w.kill(out(a, k));
        w.kill(out(b, k));
        w.merge(in(a, j), out(b, j));
        w.merge(in(b, j), out(a, j));
      }
      break;
    }
    case MoveKind::RIII:
    case MoveKind::RIVa:
    case MoveKind::RIVb: {
      auto to = three_target(d, site.move, loc, site.variant);
      if (!to) mismatch(site);
      const auto& A = d.crossings()[loc[0]];
      const auto& B = d.crossings()[loc[1]];
      const auto& C = d.crossings()[loc[2]];
      const int u = w.fresh(), v = w.fresh(), x = w.fresh();
      if (site.variant == 0) {
        // 1-2-1 into 2-1-2
        const int i1 = in(A, 1), i2 = in(A, 2), i3 = in(B, 2);
        const int o1 = out(C, 1), o2 = out(C, 2), o3 = out(B, 2);
        w.kill(out(A, 2));
        w.kill(out(A, 1));
        w.kill(out(B, 1));
        *w.crossing(loc[0]) = Crossing{(*to)[0], {i2, i3, u, v}};
        *w.crossing(loc[1]) = Crossing{(*to)[1], {i1, u, o1, x}};
        *w.crossing(loc[2]) = Crossing{(*to)[2], {x, v, o2, o3}};
      } else {
        // 2-1-2 into 1-2-1
        const int i1 = in(B, 1), i2 = in(A, 1), i3 = in(A, 2);
        const int o1 = out(B, 1), o2 = out(C, 1), o3 = out(C, 2);
        w.kill(out(A, 1));
        w.kill(out(B, 2));
        w.kill(out(A, 2));
        *w.crossing(loc[0]) = Crossing{(*to)[0], {i1, i2, u, v}};
        *w.crossing(loc[1]) = Crossing{(*to)[1], {v, i3, x, o3}};
        *w.crossing(loc[2]) = Crossing{(*to)[2], {u, x, o1, o2}};
      }
      break;
    }
    case MoveKind::RV: {
      if (!rv_match(d, loc)) mismatch(site);
      const auto a = d.crossings()[loc[0]];
      const auto b = d.crossings()[loc[1]];
      const int u = w.fresh(), v = w.fresh();
      w.kill(out(a, 1));
      w.kill(out(a, 2));
      *w.crossing(loc[0]) = Crossing{b.kind, {in(a, 1), in(a, 2), u, v}};
      *w.crossing(loc[1]) = Crossing{a.kind, {u, v, out(b, 1), out(b, 2)}};
      break;
    }
  }
  return w.finish();
}

}  // namespace singlink
