#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "singlink/error.hpp"
#include "singlink/pairs.hpp"

using namespace singlink;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::vector<Biquandle> small_biquandles() {
  return {make_flip(1), make_flip(2), make_i2(), make_flip(3), make_dihedral(3), make_twisted_flip({2, 1, 0}),
          make_bialexander(3, 2, 1)};
}

PairTable random_lr_invertible(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> t1(n * n), t2(n * n);
  std::vector<int> p(n);
  for (int x = 0; x < n; ++x) {
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (int y = 0; y < n; ++y) t1[x * n + y] = p[y];
  }
  for (int y = 0; y < n; ++y) {
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (int x = 0; x < n; ++x) t2[x * n + y] = p[x];
  }
  return PairTable(n, t1, t2);
}

}  // namespace

TEST_CASE("basic singular pairs") {
  for (const auto& b : small_biquandles()) {
    CHECK(check_singular_pair(b, b.table()).ok);
    CHECK(check_singular_pair(b, b.inverse_table()).ok);
  }
  CHECK(check_singular_pair(make_flip(2), make_i2().table()).ok);

  auto r = check_singular_pair(make_dihedral(3), PairTable::flip(3));
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().axiom.rfind("rv", 0) == 0);
  CHECK(r.violations.front().x >= 0);

  CHECK(kind_of([] { check_singular_pair(make_flip(2), PairTable::flip(3)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { SingularPair(make_dihedral(3), PairTable::flip(3)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("flip conditions") {
  CHECK(check_flip_tau_condition(PairTable::flip(3)));
  CHECK(check_flip_tau_condition(make_i2().table()));
  auto bad = PairTable::from_function(2, [](int x, int y) { return std::pair{x, 1 - y}; });
  CHECK(bad.first(0, 1) == 0);
  CHECK(bad.second(1, 0) == 1);
  CHECK_FALSE(check_flip_tau_condition(bad));

  CHECK(check_flip_S_condition(make_twisted_flip({1, 0, 2}).table()));
  CHECK(check_flip_S_condition(make_i2().table()));
  CHECK_FALSE(check_flip_S_condition(make_dihedral(3).table()));
  CHECK(check_flip_S_condition(PairTable::flip(4)));

  // the flip-specific conditions agree with the general axioms
  for (const auto& tau : all_left_right_invertible(3)) {
    if (!tau.bijective()) continue;
    CHECK(check_flip_tau_condition(tau) == check_singular_pair(make_flip(3), tau).ok);
  }
  for (const auto& b : small_biquandles())
    if (b.size() == 3) CHECK(check_flip_S_condition(b.table()) == check_singular_pair(b, PairTable::flip(3)).ok);
}

TEST_CASE("flip enumeration counts") {
  auto t2 = enumerate_taus(make_flip(2));
  CHECK(t2.size() == 2);
  auto t3 = enumerate_taus(make_flip(3));
  CHECK(t3.size() == 24);
  CHECK(std::is_sorted(t3.begin(), t3.end()));

  std::vector<SingularPair> ps;
  for (const auto& t : t3) ps.emplace_back(make_flip(3), t);
  auto classes = classify_isomorphism(ps, true);
  CHECK(classes.size() == 7);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size;
    CHECK(c.witness_maps.size() == c.size);
  }
  CHECK(total == 24);
  int non_yb = 0;
  for (const auto& c : classes) non_yb += !check_yang_baxter(c.canonical.tau());
  CHECK(non_yb == 2);

  CHECK(enumerate_taus(make_flip(1)).size() == 1);
}

TEST_CASE("enumeration is sound and complete for n <= 3") {
  for (const auto& b : small_biquandles()) {
    CAPTURE(b.size());
    auto taus = enumerate_taus(b);
    for (const auto& t : taus) CHECK(check_singular_pair(b, t).ok);
    if (b.size() < 2) continue;
    std::vector<PairTable> brute;
    for (const auto& t : all_left_right_invertible(b.size()))
      if (check_singular_pair(b, t).ok) brute.push_back(t);
    std::sort(brute.begin(), brute.end());
    CHECK(taus == brute);
  }
}

TEST_CASE("enumeration bound") {
  EnumerateOptions opt;
  opt.max_n = 3;
  CHECK(kind_of([&] { enumerate_taus(make_flip(4), opt); }) == ErrorKind::SearchBoundExceeded);
}

TEST_CASE("left/right invertible counts") {
  CHECK(enumerate_left_right_invertible(2) == LrCounts{4, 3, 2, 2});
  CHECK(enumerate_left_right_invertible(3) == LrCounts{216, 44, 24, 7});
}

TEST_CASE("tau_phi") {
  // phi(x) = tau^1(0, x) / s, so tau_a is tau_phi for phi = multiplication by a / s
  BialexanderParams b{7, 2, 3};
  auto S = make_bialexander(7, 2, 3);
  for (int a = 1; a < 7; ++a) {
    Perm phi(7);
    for (int x = 0; x < 7; ++x) phi[x] = mod(1LL * a * *inverse_mod(2, 7) * x, 7);
    CHECK(make_tau_phi(b, phi) == make_tau_a(7, 2, 3, a));
  }
  Perm id{0, 1, 2, 3, 4, 5, 6}, by_inv_st(7);
  for (int x = 0; x < 7; ++x) by_inv_st[x] = mod(1LL * *inverse_mod(6, 7) * x, 7);
  CHECK(make_tau_phi(b, id) == std::optional{S.table()});
  CHECK(make_tau_phi(b, by_inv_st) == std::optional{S.inverse_table()});

  BialexanderParams d5{5, 1, -1};
  auto D5 = make_dihedral(5);
  Perm twice(5);
  for (int x = 0; x < 5; ++x) twice[x] = mod(2LL * x, 5);
  auto t = make_tau_phi(d5, twice);
  if (t) CHECK(check_singular_pair(D5, *t).ok);

  CHECK(kind_of([&] { make_tau_phi(d5, Perm{0, 2, 1, 3, 4}); }) == ErrorKind::HomogeneityViolation);

  for (const auto& phi : enumerate_phis(d5)) {
    auto tp = make_tau_phi(d5, phi);
    REQUIRE(tp);
    CHECK(check_singular_pair(D5, *tp).ok);
    CHECK(check_bialexander_characterization(d5, *tp));
  }
}

TEST_CASE("tau_a") {
  auto S = make_bialexander(3, 1, -1);
  std::set<PairTable> got;
  for (int a = 1; a < 3; ++a)
    if (auto t = make_tau_a(3, 1, -1, a)) got.insert(*t);
  CHECK(got == std::set<PairTable>{S.table(), S.inverse_table()});

  // (st + 1) a = s
  CHECK_FALSE(make_tau_a(5, 2, 1, 4));
  auto t = make_tau_a(5, 2, 1, 1);
  REQUIRE(t);
  CHECK(t->size() == 5);
  CHECK(check_singular_pair(make_bialexander(5, 2, 1), *t).ok);

  CHECK(kind_of([] { make_tau_a(5, 2, 1, 0); }) == ErrorKind::NonUnit);
  CHECK(kind_of([] { make_tau_a(4, 1, 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("taus over prime fields are exactly the tau_a") {
  for (auto [p, s, t] : {std::tuple{3, 1, 2}, {5, 2, 1}, {5, 2, 2}, {5, 3, 4}}) {
    CAPTURE(p);
    CAPTURE(s);
    CAPTURE(t);
    std::set<PairTable> expected;
    for (int a = 1; a < p; ++a)
      if (auto tau = make_tau_a(p, s, t, a)) expected.insert(*tau);
    auto taus = enumerate_taus(make_bialexander(p, s, t));
    CHECK(std::set<PairTable>(taus.begin(), taus.end()) == expected);
  }
}

TEST_CASE("bialexander characterization agrees with the axioms") {
  BialexanderParams d3{3, 1, -1};
  auto D3 = make_dihedral(3);
  CHECK(check_bialexander_characterization(d3, D3.table()));
  CHECK_FALSE(check_bialexander_characterization(d3, PairTable::flip(3)));
  CHECK(kind_of([] { check_bialexander_characterization({3, 1, 1}, PairTable::flip(3)); }) == ErrorKind::NonUnit);

  for (auto [s, t] : {std::pair{1, 2}, {2, 1}}) {
    BialexanderParams b{3, s, t};
    auto S = make_bialexander(3, s, t);
    for (const auto& tau : all_left_right_invertible(3))
      REQUIRE(check_bialexander_characterization(b, tau) == check_singular_pair(S, tau).ok);
  }

  std::mt19937 rng(7);
  for (auto [m, s, t] : {std::tuple{5, 2, 1}, {5, 1, 4}, {7, 3, 2}, {7, 1, 6}}) {
    BialexanderParams b{m, s, t};
    auto S = make_bialexander(m, s, t);
    std::vector<PairTable> sample;
    for (int a = 1; a < m; ++a)
      if (auto tau = make_tau_a(m, s, t, a)) sample.push_back(*tau);
    for (int i = 0; i < 300; ++i) sample.push_back(random_lr_invertible(m, rng));
    for (const auto& tau : sample) CHECK(check_bialexander_characterization(b, tau) == check_singular_pair(S, tau).ok);
  }
}

TEST_CASE("isomorphism classification") {
  auto D3 = make_dihedral(3);
  SingularPair one(D3, D3.table());
  auto cls = classify_isomorphism(std::span<const SingularPair>(&one, 1));
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].size == 1);

  std::mt19937 rng(11);
  for (const auto& t : enumerate_taus(make_flip(3))) {
    auto c = canonical_form(PairTable::flip(3), t);
    CHECK(canonical_form(c.first, c.second) == c);
    Perm phi{0, 1, 2};
    std::shuffle(phi.begin(), phi.end(), rng);
    CHECK(canonical_form(PairTable::flip(3).relabel(phi), t.relabel(phi)) == c);
  }

  for (int n = 3; n <= 7; ++n) {
    BialexanderParams b{n, 1, -1};
    auto Dn = make_dihedral(n);
    std::vector<SingularPair> ps;
    for (const auto& phi : enumerate_phis(b)) ps.emplace_back(Dn, *make_tau_phi(b, phi));
    CHECK(classify_isomorphism(ps).size() == count_tau_phi_classes(b));
  }
}

TEST_CASE("tau_phi class counts") {
  const std::size_t expected[] = {2, 4, 6, 16, 20, 56, 136};
  for (int n = 3; n <= 9; ++n) CHECK(count_tau_phi_classes({n, 1, -1}) == expected[n - 3]);

  BialexanderParams d8{8, 1, -1};
  std::vector<SingularPair> ps;
  for (const auto& phi : enumerate_phis(d8)) ps.emplace_back(make_dihedral(8), *make_tau_phi(d8, phi));
  CHECK(classify_isomorphism(ps).size() == 56);
}

TEST_CASE("all singular pairs on D4") {
  auto D4 = make_dihedral(4);
  std::vector<SingularPair> ps;
  for (const auto& t : enumerate_taus(D4)) ps.emplace_back(D4, t);
  CHECK(classify_isomorphism(ps).size() == 10);
  CHECK(count_tau_phi_classes({4, 1, -1}) == 4);
}

TEST_CASE("cycle decomposition") {
  auto c = cycle_decomposition(PairTable::flip(2));
  using P = std::pair<int, int>;
  CHECK(c == std::vector<std::vector<P>>{{P{0, 0}}, {P{0, 1}, P{1, 0}}, {P{1, 1}}});
  auto notbij = PairTable::from_function(2, [](int, int) { return std::pair{0, 0}; });
  CHECK(kind_of([&] { cycle_decomposition(notbij); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("singular pair json round trip") {
  SingularPair p(make_flip(2), make_i2().table());
  nlohmann::json j = p;
  CHECK(pair_from_json(j) == p);
  j["tau"] = PairTable::flip(3);
  CHECK_THROWS_AS(pair_from_json(j), Error);
}
