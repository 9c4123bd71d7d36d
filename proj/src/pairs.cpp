#include "singlink/pairs.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "singlink/error.hpp"

namespace singlink {

namespace {

using Triple = std::array<int, 3>;

Triple apply_left(const PairTable& t, Triple v) {
  auto [a, b] = t(v[0], v[1]);
  return {a, b, v[2]};
}

Triple apply_right(const PairTable& t, Triple v) {
  auto [b, c] = t(v[1], v[2]);
  return {v[0], b, c};
}

}  // namespace

PairCheck check_singular_pair(const Biquandle& bq, const PairTable& tau) {
  const PairTable& s = bq.table();
  if (s.size() != tau.size()) throw Error(ErrorKind::DimensionMismatch, "S and tau have different sizes");
  const int n = s.size();
  PairCheck out;
  auto fail = [&](const char* id, int x, int y, int z) {
    for (const auto& v : out.violations) {
      if (v.axiom == id) return;
    }
    out.ok = false;
    out.violations.push_back({id, x, y, z});
  };

  if (!tau.left_invertible()) fail("left-invertible", -1, -1, -1);
  if (!tau.right_invertible()) fail("right-invertible", -1, -1, -1);
  if (!tau.bijective()) fail("bijective", -1, -1, -1);

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto l = tau(s(x, y));
      auto r = s(tau(x, y));
      if (l.first != r.first) fail("rv-1", x, y, -1);
      if (l.second != r.second) fail("rv-2", x, y, -1);
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const Triple v{x, y, z};
        // (1 x S)(S x 1)(1 x tau) = (tau x 1)(1 x S)(S x 1)
        Triple a = apply_right(s, apply_left(s, apply_right(tau, v)));
        Triple b = apply_left(tau, apply_right(s, apply_left(s, v)));
        for (int k = 0; k < 3; ++k) {
          if (a[k] != b[k]) fail(k == 0 ? "riva-1" : k == 1 ? "riva-2" : "riva-3", x, y, z);
        }
        // (S x 1)(1 x S)(tau x 1) = (1 x tau)(S x 1)(1 x S)
        Triple c = apply_left(s, apply_right(s, apply_left(tau, v)));
        Triple d = apply_right(tau, apply_left(s, apply_right(s, v)));
        for (int k = 0; k < 3; ++k) {
          if (c[k] != d[k]) fail(k == 0 ? "rivb-1" : k == 1 ? "rivb-2" : "rivb-3", x, y, z);
        }
      }
    }
  }
  return out;
}

SingularPair::SingularPair(Biquandle s, PairTable tau) : s_(std::move(s)), tau_(std::move(tau)) {
  auto check = check_singular_pair(s_, tau_);
  if (!check) {
    const auto& v = check.violations.front();
    std::string where;
    if (v.x >= 0) {
      where = " at (" + std::to_string(v.x) + "," + std::to_string(v.y);
      if (v.z >= 0) where += "," + std::to_string(v.z);
      where += ")";
    }
    throw Error(ErrorKind::InvalidArgument, "not a singular pair: " + v.axiom + where);
  }
}

void to_json(nlohmann::json& j, const SingularPair& p) { j = nlohmann::json{{"S", p.S()}, {"tau", p.tau()}}; }

SingularPair pair_from_json(const nlohmann::json& j) {
  return SingularPair(Biquandle(j.at("S").get<PairTable>()), j.at("tau").get<PairTable>());
}

bool check_flip_tau_condition(const PairTable& tau) {
  const int n = tau.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (tau.first(y, x) != tau.second(x, y)) return false;
    }
  }
  return true;
}

bool check_flip_S_condition(const PairTable& s) {
  const int n = s.size();
  auto s1 = [&](int a, int b) { return s.first(a, b); };
  auto s2 = [&](int a, int b) { return s.second(a, b); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s1(x, y) != s2(y, x)) return false;
      for (int z = 0; z < n; ++z) {
        if (s1(s2(x, y), z) != s1(x, z)) return false;
        if (s2(s2(x, y), z) != s2(s2(x, z), y)) return false;
        if (s1(x, s1(y, z)) != s1(y, s1(x, z))) return false;
        if (s2(y, z) != s2(y, s1(x, z))) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<std::pair<int, int>>> cycle_decomposition(const PairTable& t) {
  if (!t.bijective()) throw Error(ErrorKind::InvalidArgument, "cycle decomposition needs a bijection");
  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int k = 0; k < n * n; ++k) {
    if (seen[k]) continue;
    auto& cyc = out.emplace_back();
    std::pair<int, int> xy{k / n, k % n};
    while (!seen[xy.first * n + xy.second]) {
      seen[xy.first * n + xy.second] = true;
      cyc.push_back(xy);
      xy = t(xy);
    }
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("SINGLINK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace singlink
