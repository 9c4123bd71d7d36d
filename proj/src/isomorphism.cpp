#include <algorithm>
#include <map>
#include <numeric>

#include "singlink/error.hpp"
#include "singlink/pairs.hpp"

namespace singlink {

namespace {

constexpr int kMaxRelabelN = 8;

struct SwitchCoset {
  PairTable min_s;
  std::vector<Perm> perms;  // every phi with s.relabel(phi) == min_s
};

SwitchCoset min_coset(const PairTable& s) {
  const int n = s.size();
  if (n > kMaxRelabelN)
    throw Error(ErrorKind::SearchBoundExceeded, "relabeling search limited to n <= " + std::to_string(kMaxRelabelN));
  SwitchCoset out;
  Perm phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  bool first = true;
  do {
    PairTable r = s.relabel(phi);
    if (first || r < out.min_s) {
      out.min_s = std::move(r);
      out.perms.clear();
      out.perms.push_back(phi);
      first = false;
    } else if (r == out.min_s) {
      out.perms.push_back(phi);
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

std::pair<PairTable, Perm> min_over(const SwitchCoset& coset, const PairTable& tau) {
  PairTable best;
  Perm arg;
  for (const auto& phi : coset.perms) {
    PairTable r = tau.relabel(phi);
    if (arg.empty() || r < best) {
      best = std::move(r);
      arg = phi;
    }
  }
  return {std::move(best), std::move(arg)};
}

}  // namespace

std::pair<PairTable, PairTable> canonical_form(const PairTable& s, const PairTable& tau) {
  if (s.size() != tau.size()) throw Error(ErrorKind::DimensionMismatch, "S and tau have different sizes");
  auto coset = min_coset(s);
  auto [t, phi] = min_over(coset, tau);
  return {coset.min_s, t};
}

std::vector<IsoClass> classify_isomorphism(std::span<const SingularPair> pairs, bool with_witnesses) {
  if (pairs.empty()) return {};
  const int n = pairs.front().size();
  std::map<PairTable, SwitchCoset> cosets;
  struct Slot {
    std::size_t size = 0;
    std::vector<Perm> witnesses;
  };
  std::map<std::pair<PairTable, PairTable>, Slot> classes;
  for (const auto& p : pairs) {
    if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "pairs of different sizes cannot be classified together");
    auto it = cosets.find(p.S());
    if (it == cosets.end()) it = cosets.emplace(p.S(), min_coset(p.S())).first;
    auto [t, phi] = min_over(it->second, p.tau());
    auto& slot = classes[{it->second.min_s, std::move(t)}];
    ++slot.size;
    if (with_witnesses) slot.witnesses.push_back(std::move(phi));
  }
  std::vector<IsoClass> out;
  out.reserve(classes.size());
  for (auto& [key, slot] : classes) {
    out.push_back(IsoClass{SingularPair(Biquandle(key.first), key.second), slot.size, std::move(slot.witnesses)});
  }
  return out;
}

std::vector<Perm> automorphisms(const PairTable& t) {
  const int n = t.size();
  std::vector<Perm> out;
  Perm phi(n, -1);
  std::vector<char> used(n, 0);

  // Extends phi by closure under t; returns false on conflict. Records the
  // assigned elements so the caller can undo them.
  auto close = [&](std::vector<int>& assigned) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (phi[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (phi[b] < 0) continue;
          auto [c, d] = t(a, b);
          auto [ic, id] = t(phi[a], phi[b]);
          for (auto [src, img] : {std::pair{c, ic}, std::pair{d, id}}) {
            if (phi[src] >= 0) {
              if (phi[src] != img) return false;
            } else {
              if (used[img]) return false;
              phi[src] = img;
              used[img] = 1;
              assigned.push_back(src);
              changed = true;
            }
          }
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    int e = 0;
    while (e < n && phi[e] >= 0) ++e;
    if (e == n) {
      out.push_back(phi);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<int> assigned{e};
      phi[e] = v;
      used[v] = 1;
      if (close(assigned)) self(self);
      for (int a : assigned) {
        used[phi[a]] = 0;
        phi[a] = -1;
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace singlink
