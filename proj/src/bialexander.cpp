#include <algorithm>
#include <set>

#include "singlink/error.hpp"
#include "singlink/pairs.hpp"

namespace singlink {

namespace {

void require_units(const BialexanderParams& b) {
  if (b.m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (!inverse_mod(b.s, b.m)) throw Error(ErrorKind::NonUnit, "s is not a unit");
  if (!inverse_mod(b.t, b.m)) throw Error(ErrorKind::NonUnit, "t is not a unit");
}

PairTable tau_phi_table(const BialexanderParams& b, const Perm& phi) {
  const int m = b.m;
  return PairTable::from_function(m, [&](int x, int y) {
    const int d = phi[mod(static_cast<long long>(b.s) * y - x, m)];
    return std::pair{mod(x + d, m), mod(y - static_cast<long long>(b.t) * d, m)};
  });
}

}  // namespace

std::optional<PairTable> make_tau_phi(const BialexanderParams& b, const Perm& phi) {
  require_units(b);
  const int m = b.m;
  if (static_cast<int>(phi.size()) != m) throw Error(ErrorKind::DimensionMismatch, "phi must have m entries");
  std::vector<char> hit(m, 0);
  for (int v : phi) {
    if (v < 0 || v >= m || hit[v]++) throw Error(ErrorKind::InvalidArgument, "phi is not a permutation");
  }
  for (int lambda : {b.s, b.t, -1}) {
    for (int x = 0; x < m; ++x) {
      if (phi[mod(static_cast<long long>(lambda) * x, m)] != mod(static_cast<long long>(lambda) * phi[x], m))
        throw Error(ErrorKind::HomogeneityViolation,
                    "phi does not commute with multiplication by " + std::to_string(lambda) + " at x=" + std::to_string(x));
    }
  }
  PairTable t = tau_phi_table(b, phi);
  if (!t.bijective()) return std::nullopt;
  return t;
}

std::optional<PairTable> make_tau_a(int p, int s, int t, int a) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  for (auto [v, name] : {std::pair{s, "s"}, std::pair{t, "t"}, std::pair{a, "a"}}) {
    if (mod(v, p) == 0) throw Error(ErrorKind::NonUnit, std::string(name) + " is zero mod " + std::to_string(p));
  }
  const long long si = *inverse_mod(s, p);
  if (mod((static_cast<long long>(s) * t + 1) % p * mod(a, p), p) == mod(s, p)) return std::nullopt;
  const long long c11 = mod(1 - static_cast<long long>(a) * si % p, p);
  const long long c21 = mod(static_cast<long long>(a) * t % p * si, p);
  const long long c22 = mod(1 - static_cast<long long>(a) * t, p);
  return PairTable::from_function(p, [&](int x, int y) {
    return std::pair{mod(static_cast<long long>(a) * y + c11 * x, p), mod(c21 * x + c22 * y, p)};
  });
}

bool check_bialexander_characterization(const BialexanderParams& b, const PairTable& tau) {
  require_units(b);
  const int m = b.m;
  if (!inverse_mod(1 - b.s * b.t, m)) throw Error(ErrorKind::NonUnit, "1 - st is not a unit");
  if (tau.size() != m) throw Error(ErrorKind::DimensionMismatch, "tau has the wrong size");
  if (!tau.bijective() || !tau.left_invertible() || !tau.right_invertible()) return false;
  const long long s = b.s, t = b.t, si = *inverse_mod(b.s, m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      auto [u, v] = tau(x, y);
      for (long long lambda : {s, t, -1LL}) {
        auto [p, q] = tau(mod(lambda * x, m), mod(lambda * y, m));
        if (p != mod(lambda * u, m) || q != mod(lambda * v, m)) return false;
      }
      const int xs = mod(x * si, m);
      auto [p1, q1] = tau(0, mod(y - xs, m));
      if (mod(p1 + x, m) != u || mod(q1 + xs, m) != v) return false;
      auto [p2, q2] = tau(mod(x - s * y, m), 0);
      if (mod(p2 + s * y, m) != u || mod(q2 + y, m) != v) return false;
    }
    if (mod(t * tau.first(0, x), m) != mod(s * tau.second(x, 0), m)) return false;
  }
  return true;
}

std::vector<Perm> enumerate_phis(const BialexanderParams& b) {
  require_units(b);
  const int m = b.m;
  const std::vector<long long> lambdas{b.s, b.t, -1};
  Perm phi(m, -1);
  std::vector<char> used(m, 0);
  std::vector<Perm> out;

  // Assigning phi(x) = v forces phi(l x) = l v along the orbit of x.
  auto assign = [&](int x, int v, std::vector<int>& assigned) {
    std::vector<std::pair<int, int>> stack{{x, v}};
    while (!stack.empty()) {
      auto [a, w] = stack.back();
      stack.pop_back();
      if (phi[a] >= 0) {
        if (phi[a] != w) return false;
        continue;
      }
      if (used[w]) return false;
      phi[a] = w;
      used[w] = 1;
      assigned.push_back(a);
      for (long long l : lambdas) stack.push_back({mod(l * a, m), mod(l * w, m)});
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    int x = 0;
    while (x < m && phi[x] >= 0) ++x;
    if (x == m) {
      if (tau_phi_table(b, phi).bijective()) out.push_back(phi);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[v]) continue;
      std::vector<int> assigned;
      if (assign(x, v, assigned)) self(self);
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

std::size_t count_tau_phi_classes(const BialexanderParams& b) {
  const PairTable s = make_bialexander(b.m, b.s, b.t).table();
  const auto auts = automorphisms(s);
  std::set<PairTable> canon;
  for (const auto& phi : enumerate_phis(b)) {
    const PairTable t = tau_phi_table(b, phi);
    PairTable best = t;
    for (const auto& a : auts) best = std::min(best, t.relabel(a));
    canon.insert(std::move(best));
  }
  return canon.size();
}

}  // namespace singlink
