#include "singlink/coloring.hpp"

#include <algorithm>

#include "singlink/error.hpp"

namespace singlink {

ColoringRule::ColoringRule(const SingularPair& p)
    : pos(p.S()), neg(p.biquandle().inverse_table()), sing(p.tau()) {}

ColoringRule::ColoringRule(PairTable s, PairTable s_inverse, PairTable tau)
    : pos(std::move(s)), neg(std::move(s_inverse)), sing(std::move(tau)) {
  if (neg.size() != pos.size() || sing.size() != pos.size())
    throw Error(ErrorKind::DimensionMismatch, "coloring maps of different sizes");
}

namespace {

// Depth-first search over edge colors. After each choice every crossing with both
// inputs known fixes its outputs and every crossing with both outputs known fixes
// its inputs (through the inverse table, when it is bijective).
class ColorSearch {
 public:
  ColorSearch(const SingularDiagram& d, const ColoringRule& r) : d_(d), r_(r), n_(r.size()) {
    for (auto k : {CrossingKind::Pos, CrossingKind::Neg, CrossingKind::Sing}) {
      const PairTable& t = r_.at(k);
      inverse_[static_cast<int>(k)] = t.bijective() ? std::optional<PairTable>(t.inverse()) : std::nullopt;
    }
  }

  std::vector<Coloring> run() {
    std::vector<int> c(d_.edge_count(), -1);
    std::vector<Coloring> out;
    search(c, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool propagate(std::vector<int>& c) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& x : d_.crossings()) {
        const auto& s = x.slots;
        auto set = [&](int e, int v) {
          if (c[e] < 0) {
            c[e] = v;
            changed = true;
            return true;
          }
          return c[e] == v;
        };
        if (c[s[0]] >= 0 && c[s[1]] >= 0) {
          auto [a, b] = r_.at(x.kind)(c[s[0]], c[s[1]]);
          if (!set(s[2], a) || !set(s[3], b)) return false;
        } else if (c[s[2]] >= 0 && c[s[3]] >= 0) {
          const auto& inv = inverse_[static_cast<int>(x.kind)];
          if (!inv) continue;
          auto [a, b] = (*inv)(c[s[2]], c[s[3]]);
          if (!set(s[0], a) || !set(s[1], b)) return false;
        }
      }
    }
    return true;
  }

  int choose(const std::vector<int>& c) const {
    // Prefer an unknown input next to a known one, so the next choice completes a crossing.
    for (const auto& x : d_.crossings()) {
      const auto& s = x.slots;
      if ((c[s[0]] >= 0) != (c[s[1]] >= 0)) return c[s[0]] < 0 ? s[0] : s[1];
    }
    for (int e = 0; e < d_.edge_count(); ++e) {
      if (c[e] < 0) return e;
    }
    return -1;
  }

  void search(std::vector<int>& c, std::vector<Coloring>& out) const {
    const int e = choose(c);
    if (e < 0) {
      out.emplace_back(c.begin(), c.end());
      return;
    }
    for (int v = 0; v < n_; ++v) {
      std::vector<int> next = c;
      next[e] = v;
      if (propagate(next)) search(next, out);
    }
  }

  const SingularDiagram& d_;
  const ColoringRule& r_;
  int n_;
  std::optional<PairTable> inverse_[3];
};

bool respects(const SingularDiagram& d, const ColoringRule& rule, const std::vector<int>& c) {
  for (const auto& x : d.crossings()) {
    const auto& s = x.slots;
    if (rule.at(x.kind)(c[s[0]], c[s[1]]) != std::pair{c[s[2]], c[s[3]]}) return false;
  }
  return true;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const SingularDiagram& d, const ColoringRule& rule) {
  return ColorSearch(d, rule).run();
}

std::vector<Coloring> enumerate_colorings(const SingularDiagram& d, const SingularPair& p) {
  return enumerate_colorings(d, ColoringRule(p));
}

std::size_t count_colorings(const SingularDiagram& d, const SingularPair& p) { return enumerate_colorings(d, p).size(); }

std::vector<Coloring> brute_force_colorings(const SingularDiagram& d, const ColoringRule& rule) {
  const int m = d.edge_count(), n = rule.size();
  std::vector<Coloring> out;
  std::vector<int> c(m, 0);
  while (true) {
    if (respects(d, rule, c)) out.emplace_back(c.begin(), c.end());
    int k = m - 1;
    while (k >= 0 && ++c[k] == n) c[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace singlink
