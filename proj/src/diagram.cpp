#include "singlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "singlink/error.hpp"

namespace singlink {

SingularDiagram::SingularDiagram(std::vector<Crossing> crossings, std::vector<std::string> edge_names,
                                 const std::vector<std::pair<int, int>>& bases)
    : crossings_(std::move(crossings)), names_(std::move(edge_names)) {
  const int m = edge_count();
  head_.assign(m, Passage{-1, -1});
  tail_.assign(m, Passage{-1, -1});
  for (int c = 0; c < crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      const int e = crossings_[c].slots[k];
      if (e < 0 || e >= m) throw Error(ErrorKind::DanglingEdge, "slot refers to an unknown edge");
      Passage& p = k < 2 ? head_[e] : tail_[e];
      if (p.crossing >= 0)
        throw Error(ErrorKind::SlotReuse,
                    "edge '" + names_[e] + "' used twice as an " + (k < 2 ? "in" : "out") + "-slot");
      p = Passage{c, k % 2};
    }
  }
  for (int e = 0; e < m; ++e) {
    if ((head_[e].crossing < 0) != (tail_[e].crossing < 0))
      throw Error(ErrorKind::DanglingEdge,
                  "edge '" + names_[e] + "' has no " + (head_[e].crossing < 0 ? "in" : "out") + "-slot");
  }

  // Components, numbered provisionally by smallest edge.
  comp_.assign(m, -1);
  std::vector<int> first_edge;
  for (int e = 0; e < m; ++e) {
    if (comp_[e] >= 0) continue;
    const int id = static_cast<int>(first_edge.size());
    first_edge.push_back(e);
    for (int f = e; comp_[f] < 0; f = next_edge(f)) comp_[f] = id;
  }
  const int r = static_cast<int>(first_edge.size());
  std::vector<int> index_of(r, -1), base_of(r, -1);
  std::vector<char> taken(r, 0);
  for (auto [i, e] : bases) {
    if (e < 0 || e >= m) throw Error(ErrorKind::BadBasepoint, "basepoint edge out of range");
    if (i < 0 || i >= r)
      throw Error(ErrorKind::BadBasepoint, "component index " + std::to_string(i) + " out of range (" +
                                               std::to_string(r) + " components)");
    const int c = comp_[e];
    if (index_of[c] >= 0 || taken[i])
      throw Error(ErrorKind::BadBasepoint, "component " + std::to_string(i) + " given two basepoints");
    index_of[c] = i;
    base_of[c] = e;
    taken[i] = 1;
  }
  int free_index = 0;
  for (int c = 0; c < r; ++c) {
    if (index_of[c] >= 0) continue;
    while (taken[free_index]) ++free_index;
    index_of[c] = free_index;
    taken[free_index] = 1;
    base_of[c] = first_edge[c];
  }
  basepoints_.assign(r, -1);
  for (int c = 0; c < r; ++c) basepoints_[index_of[c]] = base_of[c];
  for (int e = 0; e < m; ++e) comp_[e] = index_of[comp_[e]];
}

std::optional<int> SingularDiagram::find_edge(std::string_view name) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (names_[e] == name) return e;
  }
  return std::nullopt;
}

int SingularDiagram::next_edge(int e) const {
  const Passage h = head_.at(e);
  if (h.crossing < 0) return e;
  return crossings_[h.crossing].slots[h.slot == 0 ? 3 : 2];
}

int SingularDiagram::prev_edge(int e) const {
  const Passage t = tail_.at(e);
  if (t.crossing < 0) return e;
  return crossings_[t.crossing].slots[t.slot == 0 ? 1 : 0];
}

std::vector<int> SingularDiagram::component_edges(int i) const {
  std::vector<int> out;
  const int b = basepoints_.at(i);
  int e = b;
  do {
    out.push_back(e);
    e = next_edge(e);
  } while (e != b);
  return out;
}

std::vector<Passage> SingularDiagram::traverse(int i) const {
  std::vector<Passage> out;
  for (int e : component_edges(i)) {
    if (!is_loop(e)) out.push_back(head_[e]);
  }
  return out;
}

SingularDiagram SingularDiagram::with_basepoint(int i, int e) const {
  if (i < 0 || i >= component_count() || e < 0 || e >= edge_count() || comp_[e] != i)
    throw Error(ErrorKind::BadBasepoint, "edge is not on component " + std::to_string(i));
  std::vector<std::pair<int, int>> bases;
  for (int k = 0; k < component_count(); ++k) bases.emplace_back(k, k == i ? e : basepoints_[k]);
  return SingularDiagram(crossings_, names_, bases);
}

namespace {

struct Token {
  std::string text;
  int column;
};

std::string where(int line, int column) { return "line " + std::to_string(line) + ", column " + std::to_string(column); }

}  // namespace

SingularDiagram parse_diagram(std::string_view text) {
  std::vector<Crossing> crossings;
  std::vector<std::string> names;
  std::map<std::string, int, std::less<>> index;
  struct BaseLine {
    int index, line, column;
    std::string edge;
  };
  std::vector<BaseLine> base_lines;
  std::vector<int> loops;
  auto edge = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;
    auto expect = [&](std::size_t count, const char* form) {
      if (tokens.size() != count) {
        const int col = tokens.size() > count ? tokens[count].column : static_cast<int>(line.size()) + 1;
        throw Error(ErrorKind::SyntaxError, where(line_no, col) + ": expected '" + form + "'");
      }
    };
    if (head == "X+" || head == "X-" || head == "Xs") {
      expect(5, "X? in1 in2 out1 out2");
      Crossing c{head == "X+" ? CrossingKind::Pos : head == "X-" ? CrossingKind::Neg : CrossingKind::Sing, {}};
      for (int k = 0; k < 4; ++k) c.slots[k] = edge(tokens[k + 1].text);
      crossings.push_back(c);
    } else if (head == "loop") {
      expect(2, "loop <edge>");
      loops.push_back(edge(tokens[1].text));
    } else if (head == "base") {
      expect(3, "base <component> <edge>");
      int i = 0;
      const auto& t = tokens[1].text;
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error(ErrorKind::SyntaxError, where(line_no, tokens[1].column) + ": component index must be a number");
      if (t.size() > 6) throw Error(ErrorKind::BadBasepoint, where(line_no, tokens[1].column) + ": component index too large");
      i = std::stoi(t);
      base_lines.push_back({i, line_no, tokens[2].column, tokens[2].text});
    } else {
      throw Error(ErrorKind::SyntaxError, where(line_no, tokens[0].column) + ": unknown directive '" + head + "'");
    }
  }
  // A loop edge must not also sit in a crossing or be declared twice.
  std::vector<char> seen_loop(names.size(), 0);
  for (int e : loops) {
    if (seen_loop[e]++) throw Error(ErrorKind::SlotReuse, "loop edge '" + names[e] + "' declared twice");
    for (const auto& c : crossings) {
      if (std::find(c.slots.begin(), c.slots.end(), e) != c.slots.end())
        throw Error(ErrorKind::SlotReuse, "loop edge '" + names[e] + "' also used by a crossing");
    }
  }
  std::vector<std::pair<int, int>> bases;
  for (const auto& b : base_lines) {
    auto it = index.find(b.edge);
    if (it == index.end())
      throw Error(ErrorKind::BadBasepoint, where(b.line, b.column) + ": unknown edge '" + b.edge + "'");
    bases.emplace_back(b.index, it->second);
  }
  return SingularDiagram(std::move(crossings), std::move(names), bases);
}

namespace {

char kind_char(CrossingKind k) { return k == CrossingKind::Pos ? '+' : k == CrossingKind::Neg ? '-' : 's'; }

CrossingKind kind_from(std::string_view s) {
  if (s == "+") return CrossingKind::Pos;
  if (s == "-") return CrossingKind::Neg;
  if (s == "s") return CrossingKind::Sing;
  throw Error(ErrorKind::SyntaxError, "crossing kind must be '+', '-' or 's'");
}

}  // namespace

std::string render_diagram(const SingularDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.crossings()) {
    out << 'X' << kind_char(c.kind);
    for (int e : c.slots) out << ' ' << d.edge_name(e);
    out << '\n';
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_loop(e)) out << "loop " << d.edge_name(e) << '\n';
  }
  for (int i = 0; i < d.component_count(); ++i) out << "base " << i << ' ' << d.edge_name(d.basepoints()[i]) << '\n';
  return out.str();
}

nlohmann::json diagram_to_json(const SingularDiagram& d) {
  auto crossings = nlohmann::json::array();
  for (const auto& c : d.crossings()) {
    auto slots = nlohmann::json::array();
    for (int e : c.slots) slots.push_back(d.edge_name(e));
    crossings.push_back({{"kind", std::string(1, kind_char(c.kind))}, {"slots", slots}});
  }
  auto loops = nlohmann::json::array();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_loop(e)) loops.push_back(d.edge_name(e));
  }
  auto base = nlohmann::json::array();
  for (int b : d.basepoints()) base.push_back(d.edge_name(b));
  return {{"crossings", crossings}, {"loops", loops}, {"base", base}};
}

SingularDiagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Crossing> crossings;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  auto edge = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  for (const auto& c : j.at("crossings")) {
    const auto& slots = c.at("slots");
    if (!slots.is_array() || slots.size() != 4) throw Error(ErrorKind::SyntaxError, "a crossing needs four slots");
    Crossing x{kind_from(c.at("kind").get<std::string>()), {}};
    for (int k = 0; k < 4; ++k) x.slots[k] = edge(slots[k].get<std::string>());
    crossings.push_back(x);
  }
  if (j.contains("loops")) {
    for (const auto& l : j.at("loops")) {
      const auto name = l.get<std::string>();
      if (index.count(name)) throw Error(ErrorKind::SlotReuse, "loop edge '" + name + "' also used by a crossing");
      edge(name);
    }
  }
  std::vector<std::pair<int, int>> bases;
  if (j.contains("base")) {
    int i = 0;
    for (const auto& b : j.at("base")) {
      auto it = index.find(b.get<std::string>());
      if (it == index.end()) throw Error(ErrorKind::BadBasepoint, "unknown basepoint edge '" + b.get<std::string>() + "'");
      bases.emplace_back(i++, it->second);
    }
  }
  return SingularDiagram(std::move(crossings), std::move(names), bases);
}

bool is_isomorphic(const SingularDiagram& a, const SingularDiagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.edge_count() != b.edge_count() ||
      a.component_count() != b.component_count())
    return false;
  // Crossingless loops only need matching component indices.
  auto loop_comps = [](const SingularDiagram& d) {
    std::vector<int> v;
    for (int e = 0; e < d.edge_count(); ++e) {
      if (d.is_loop(e)) v.push_back(d.component_of(e));
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  if (loop_comps(a) != loop_comps(b)) return false;

  const int n = a.crossing_count();
  std::vector<int> cmap(n, -1), cused(n, 0);
  std::vector<int> emap(a.edge_count(), -1);
  std::vector<char> eused(b.edge_count(), 0);

  // Maps crossing ca onto cb and everything reachable from it; records the
  // assignments for undo. Returns false on any inconsistency.
  auto extend = [&](int ca, int cb, std::vector<int>& cs, std::vector<int>& es) {
    std::vector<std::pair<int, int>> stack{{ca, cb}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (cmap[x] >= 0) {
        if (cmap[x] != y) return false;
        continue;
      }
      if (cused[y]) return false;
      if (a.crossings()[x].kind != b.crossings()[y].kind) return false;
      cmap[x] = y;
      cused[y] = 1;
      cs.push_back(x);
      for (int k = 0; k < 4; ++k) {
        const int ea = a.crossings()[x].slots[k], eb = b.crossings()[y].slots[k];
        if (emap[ea] >= 0) {
          if (emap[ea] != eb) return false;
        } else {
          if (eused[eb] || a.component_of(ea) != b.component_of(eb)) return false;
          emap[ea] = eb;
          eused[eb] = 1;
          es.push_back(ea);
        }
        // follow the edge to the crossing at its other end
        const Passage pa = k < 2 ? a.tail(ea) : a.head(ea);
        const Passage pb = k < 2 ? b.tail(eb) : b.head(eb);
        if (pa.slot != pb.slot) return false;
        stack.push_back({pa.crossing, pb.crossing});
      }
    }
    return true;
  };

  auto rec = [&](auto&& self) -> bool {
    int x = 0;
    while (x < n && cmap[x] >= 0) ++x;
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (cused[y]) continue;
      std::vector<int> cs, es;
      if (extend(x, y, cs, es) && self(self)) return true;
      for (int c : cs) {
        cused[cmap[c]] = 0;
        cmap[c] = -1;
      }
      for (int e : es) {
        eused[emap[e]] = 0;
        emap[e] = -1;
      }
    }
    return false;
  };
  return rec(rec);
}

SingularDiagram closed_braid(int strands, const std::vector<BraidLetter>& word) {
  if (strands < 1) throw Error(ErrorKind::InvalidArgument, "a braid needs at least one strand");
  std::vector<int> cur(strands);
  for (int i = 0; i < strands; ++i) cur[i] = i;
  int next = strands;
  std::vector<Crossing> crossings;
  for (const auto& l : word) {
    if (l.position < 1 || l.position >= strands) throw Error(ErrorKind::InvalidArgument, "braid letter out of range");
    const int i = l.position - 1;
    Crossing c{l.kind, {cur[i], cur[i + 1], next, next + 1}};
    cur[i] = next;
    cur[i + 1] = next + 1;
    next += 2;
    crossings.push_back(c);
  }
  // Close up: the final edge at position i is identified with the initial one.
  std::vector<int> rename(next);
  for (int e = 0; e < next; ++e) rename[e] = e;
  for (int i = 0; i < strands; ++i) {
    if (cur[i] != i) rename[cur[i]] = i;
  }
  std::vector<int> compact(next, -1);
  std::vector<std::string> names;
  auto id = [&](int e) {
    e = rename[e];
    if (compact[e] < 0) {
      compact[e] = static_cast<int>(names.size());
      names.push_back("e" + std::to_string(names.size()));
    }
    return compact[e];
  };
  for (auto& c : crossings) {
    for (int& s : c.slots) s = id(s);
  }
  for (int i = 0; i < strands; ++i) id(i);
  return SingularDiagram(std::move(crossings), std::move(names));
}

}  // namespace singlink
