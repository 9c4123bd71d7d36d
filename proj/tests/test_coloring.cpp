#include <doctest.h>

#include <algorithm>

#include "singlink/coloring.hpp"
#include "singlink/error.hpp"

using namespace singlink;

namespace {

SingularPair flip_i2() { return SingularPair(make_flip(2), make_i2().table()); }
SingularPair ss(const Biquandle& b) { return SingularPair(b, b.table()); }

SingularDiagram replace_kind(const SingularDiagram& d, CrossingKind from, CrossingKind to) {
  auto cs = d.crossings();
  for (auto& c : cs)
    if (c.kind == from) c.kind = to;
  return SingularDiagram(cs, d.edge_names());
}

std::vector<SingularPair> test_pairs() {
  return {SingularPair(make_flip(1), PairTable::flip(1)),
          flip_i2(),
          SingularPair(make_flip(2), PairTable::flip(2)),
          ss(make_i2()),
          ss(make_dihedral(3)),
          SingularPair(make_dihedral(3), make_dihedral(3).inverse_table())};
}

constexpr MoveKind all_moves[] = {MoveKind::RI_insert, MoveKind::RI_remove, MoveKind::RII_remove, MoveKind::RIII,
                                  MoveKind::RIVa,      MoveKind::RIVb,      MoveKind::RV};

}  // namespace

TEST_CASE("worked coloring counts") {
  CHECK(count_colorings(builtin_diagram("sing_hopf"), flip_i2()) == 0);
  CHECK(count_colorings(builtin_diagram("four_sing_left"), flip_i2()) == 4);

  for (const auto& b : {make_dihedral(3), make_i2(), make_flip(3)})
    CHECK(count_colorings(builtin_diagram("sing_trefoil_mirror"), ss(b)) == static_cast<std::size_t>(b.size()));

  // fixed points of S^3 on D3 x D3
  auto d3 = ss(make_dihedral(3));
  CHECK(count_colorings(builtin_diagram("sing_trefoil"), d3) == 9);
  auto rule = ColoringRule(d3);
  CHECK(enumerate_colorings(builtin_diagram("sing_trefoil"), d3) ==
        brute_force_colorings(builtin_diagram("sing_trefoil"), rule));
}

TEST_CASE("trivial pair and unknot") {
  SingularPair one(make_flip(1), PairTable::flip(1));
  for (const auto& name : builtin_diagram_names()) CHECK(count_colorings(builtin_diagram(name), one) == 1);

  auto u = builtin_diagram("unknot");
  for (const auto& p : test_pairs()) {
    CHECK(count_colorings(u, p) == static_cast<std::size_t>(p.size()));
    auto kink = apply_move(u, find_move_sites(u, MoveKind::RI_insert).front());
    CHECK(count_colorings(kink, p) == static_cast<std::size_t>(p.size()));
  }
}

TEST_CASE("colorings respect the crossing maps and are sorted") {
  auto d = builtin_diagram("four_sing_right");
  auto p = flip_i2();
  ColoringRule rule(p);
  auto cols = enumerate_colorings(d, p);
  CHECK(std::is_sorted(cols.begin(), cols.end()));
  for (const auto& c : cols) {
    for (const auto& x : d.crossings()) {
      auto [a, b] = rule.at(x.kind)(c[x.slots[0]], c[x.slots[1]]);
      CHECK(a == c[x.slots[2]]);
      CHECK(b == c[x.slots[3]]);
    }
  }
}

TEST_CASE("propagation agrees with brute force") {
  for (const auto& p : test_pairs()) {
    ColoringRule rule(p);
    for (const auto& name : builtin_diagram_names()) {
      auto d = builtin_diagram(name);
      if (d.edge_count() > 8) continue;
      CAPTURE(name);
      CHECK(enumerate_colorings(d, rule) == brute_force_colorings(d, rule));
    }
  }
  // a rule that is not a singular pair still enumerates consistently
  ColoringRule odd(PairTable::flip(2), PairTable::flip(2), PairTable::identity(2));
  auto d = builtin_diagram("sing_trefoil");
  CHECK(enumerate_colorings(d, odd) == brute_force_colorings(d, odd));
}

TEST_CASE("coloring counts are move invariant") {
  for (const auto& p : test_pairs()) {
    for (const auto& name : builtin_diagram_names()) {
      auto d = builtin_diagram(name);
      auto base = count_colorings(d, p);
      for (MoveKind m : all_moves) {
        for (auto site : find_move_sites(d, m)) {
          CAPTURE(name);
          CAPTURE(to_string(m));
          int variants = m == MoveKind::RI_insert ? 4 : 1;
          for (int v = 0; v < variants; ++v) {
            if (m == MoveKind::RI_insert) site.variant = v;
            CHECK(count_colorings(apply_move(d, site), p) == base);
          }
        }
      }
    }
  }
}

TEST_CASE("(S, S) pairs see singular crossings as positive ones") {
  for (const auto& b : {make_dihedral(3), make_i2(), make_flip(2), make_bialexander(5, 2, 3)}) {
    for (const auto& name : builtin_diagram_names()) {
      auto d = builtin_diagram(name);
      auto classical = replace_kind(d, CrossingKind::Sing, CrossingKind::Pos);
      CHECK(count_colorings(d, ss(b)) == count_colorings(classical, ss(b)));
    }
  }
}
