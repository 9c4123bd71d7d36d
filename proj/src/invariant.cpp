#include "singlink/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "singlink/error.hpp"

namespace singlink {

AbElem TargetOps::identity() const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return {g->identity()};
  return std::get<AbelianizedGroup>(t_).identity();
}

AbElem TargetOps::multiply(const AbElem& a, const AbElem& b) const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return {g->multiply(static_cast<int>(a[0]), static_cast<int>(b[0]))};
  return std::get<AbelianizedGroup>(t_).multiply(a, b);
}

AbElem TargetOps::inverse(const AbElem& a) const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return {g->inverse(static_cast<int>(a[0]))};
  return std::get<AbelianizedGroup>(t_).inverse(a);
}

bool TargetOps::equal(const AbElem& a, const AbElem& b) const {
  if (std::holds_alternative<FiniteGroup>(t_)) return a == b;
  const auto& g = std::get<AbelianizedGroup>(t_);
  return g.reduce(a) == g.reduce(b);
}

bool TargetOps::is_abelian() const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return g->is_abelian();
  return true;
}

bool TargetOps::is_element(const AbElem& a) const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return a.size() == 1 && a[0] >= 0 && a[0] < g->order();
  return a.size() == std::get<AbelianizedGroup>(t_).dimension();
}

AbElem TargetOps::conjugacy_representative(const AbElem& a) const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return {g->conjugacy_representative(static_cast<int>(a[0]))};
  return std::get<AbelianizedGroup>(t_).reduce(a);
}

std::string TargetOps::render(const AbElem& a) const {
  if (auto g = std::get_if<FiniteGroup>(&t_)) return a[0] == g->identity() ? "1" : "g" + std::to_string(a[0]);
  return std::get<AbelianizedGroup>(t_).render(a);
}

int CocyclePair::size() const {
  int n = 0;
  while (static_cast<std::size_t>(n) * n < f.size()) ++n;
  return n;
}

namespace {

void check_shape(const SingularPair& p, const CocyclePair& c) {
  const std::size_t nn = static_cast<std::size_t>(p.size()) * p.size();
  if (c.f.size() != nn || c.h.size() != nn) throw Error(ErrorKind::DimensionMismatch, "cocycle tables must be n x n");
  TargetOps ops(c.target);
  for (const auto* t : {&c.f, &c.h}) {
    for (const auto& e : *t) {
      if (!ops.is_element(e)) throw Error(ErrorKind::DimensionMismatch, "cocycle entry is not a target element");
    }
  }
}

// Evaluates products of table entries and records the first failure per condition.
class ConditionRunner {
 public:
  ConditionRunner(const SingularPair& p, const CocyclePair& c) : p_(p), c_(c), ops_(c.target) {}

  AbElem prod(std::initializer_list<AbElem> xs) const {
    AbElem r = ops_.identity();
    for (const auto& x : xs) r = ops_.multiply(r, x);
    return r;
  }

  void require(const std::string& axiom, bool holds, int x, int y = -1, int z = -1) {
    if (holds) return;
    out_.ok = false;
    for (const auto& v : out_.violations) {
      if (v.axiom == axiom) return;
    }
    out_.violations.push_back({axiom, x, y, z});
  }

  bool eq(const AbElem& a, const AbElem& b) const { return ops_.equal(a, b); }
  const AbElem& f(int x, int y) const { return c_.F(x, y); }
  const AbElem& h(int x, int y) const { return c_.H(x, y); }
  const AbElem& f(std::pair<int, int> xy) const { return c_.F(xy.first, xy.second); }
  const AbElem& h(std::pair<int, int> xy) const { return c_.H(xy.first, xy.second); }
  AbElem one() const { return ops_.identity(); }
  AbElem inv(const AbElem& a) const { return ops_.inverse(a); }
  const TargetOps& ops() const { return ops_; }

  // Sorts violations into the order the conditions are listed in.
  PairCheck finish(const std::vector<std::string>& order) {
    std::stable_sort(out_.violations.begin(), out_.violations.end(), [&](const Violation& a, const Violation& b) {
      return std::find(order.begin(), order.end(), a.axiom) < std::find(order.begin(), order.end(), b.axiom);
    });
    return out_;
  }

 private:
  const SingularPair& p_;
  const CocyclePair& c_;
  TargetOps ops_;
  PairCheck out_;
};

}  // namespace

PairCheck check_nc_cocycle(const SingularPair& p, const CocyclePair& c) {
  check_shape(p, c);
  ConditionRunner r(p, c);
  const auto& S = p.S();
  const auto& T = p.tau();
  const auto& s = p.biquandle().s_map();
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    r.require("f3", r.eq(r.f(x, s[x]), r.one()), x);
    for (int y = 0; y < n; ++y) {
      r.require("c3", r.eq(r.h(x, y), r.prod({r.f(x, y), r.h(S(x, y))})), x, y);
      r.require("c4", r.eq(r.h(S(x, y)), r.prod({r.h(x, y), r.f(T(x, y))})), x, y);
      for (int z = 0; z < n; ++z) {
        const int a = S.first(y, z), b = S.second(y, z);
        const int m = S.second(x, y);
        r.require("f1", r.eq(r.prod({r.f(x, y), r.f(m, z)}), r.prod({r.f(x, a), r.f(S.second(x, a), b)})), x, y, z);
        r.require("f2", r.eq(r.f(S.first(x, y), S.first(m, z)), r.f(y, z)), x, y, z);
        const int u = T.first(y, z), v = T.second(y, z);
        r.require("f4", r.eq(r.prod({r.f(x, y), r.f(m, z)}), r.prod({r.f(x, u), r.f(S.second(x, u), v)})), x, y, z);
        r.require("h1", r.eq(r.h(S.first(x, y), S.first(m, z)), r.h(y, z)), x, y, z);
        r.require("c1", r.eq(r.prod({r.f(x, a), r.h(S.second(x, a), b)}), r.prod({r.h(x, y), r.f(T.second(x, y), z)})),
                  x, y, z);
        r.require("c2",
                  r.eq(r.prod({r.f(y, z), r.h(S.second(x, a), b)}),
                       r.prod({r.h(x, y), r.f(T.first(x, y), S.first(T.second(x, y), z))})),
                  x, y, z);
      }
    }
  }
  return r.finish({"f1", "f2", "f3", "f4", "h1", "c1", "c2", "c3", "c4"});
}

PairCheck check_ab_cocycle(const SingularPair& p, const CocyclePair& c) {
  check_shape(p, c);
  if (!TargetOps(c.target).is_abelian()) throw Error(ErrorKind::InvalidArgument, "abelian conditions need an abelian target");
  ConditionRunner r(p, c);
  const auto& S = p.S();
  const auto& T = p.tau();
  const auto& s = p.biquandle().s_map();
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    r.require("f2'", r.eq(r.f(x, s[x]), r.one()), x);
    for (int y = 0; y < n; ++y) {
      r.require("c3'", r.eq(r.prod({r.f(x, y), r.h(S(x, y))}), r.prod({r.h(x, y), r.f(T(x, y))})), x, y);
      for (int z = 0; z < n; ++z) {
        const int a = S.first(y, z), b = S.second(y, z);
        const int m = S.second(x, y);
        const int u = T.first(y, z), v = T.second(y, z);
        r.require("f1'",
                  r.eq(r.prod({r.f(x, y), r.f(m, z), r.f(S.first(x, y), S.first(m, z))}),
                       r.prod({r.f(x, a), r.f(S.second(x, a), b), r.f(y, z)})),
                  x, y, z);
        r.require("c1'",
                  r.eq(r.prod({r.h(y, z), r.f(x, u), r.f(S.second(x, u), v)}),
                       r.prod({r.f(x, y), r.f(m, z), r.h(S.first(x, y), S.first(m, z))})),
                  x, y, z);
        r.require("c2'",
                  r.eq(r.prod({r.f(y, z), r.f(x, a), r.h(S.second(x, a), b)}),
                       r.prod({r.h(x, y), r.f(T.second(x, y), z), r.f(T.first(x, y), S.first(T.second(x, y), z))})),
                  x, y, z);
      }
    }
  }
  return r.finish({"f1'", "f2'", "c1'", "c2'", "c3'"});
}

std::vector<IdentityCheck> derived_cocycle_identities(const SingularPair& p, const CocyclePair& c) {
  check_shape(p, c);
  ConditionRunner r(p, c);
  const auto& S = p.S();
  const auto& T = p.tau();
  const auto& s = p.biquandle().s_map();
  const int n = p.size();
  bool f3 = true, f2 = true, from_h = true, f_trivial = true, h_trivial = true, tau_inv = true;
  for (int x = 0; x < n; ++x) {
    f3 = f3 && r.eq(r.f(x, s[x]), r.one());
    for (int y = 0; y < n; ++y) {
      from_h = from_h && r.eq(r.f(x, y), r.prod({r.h(x, y), r.inv(r.h(S(x, y)))}));
      f_trivial = f_trivial && r.eq(r.f(x, y), r.one());
      h_trivial = h_trivial && r.eq(r.h(x, y), r.one());
      tau_inv = tau_inv && r.eq(r.prod({r.f(T(x, y)), r.f(x, y)}), r.one());
      for (int z = 0; z < n; ++z) {
        const int m = S.second(x, y);
        f2 = f2 && r.eq(r.f(S.first(x, y), S.first(m, z)), r.f(y, z));
      }
    }
  }
  std::vector<IdentityCheck> out{
      {"f3-from-c3", f3},
      {"f2-from-c3-h1", f2},
      {"f-from-h", from_h},
      {"h-trivial-forces-f-trivial", !h_trivial || f_trivial},
  };
  if (r.ops().is_abelian()) out.push_back({"f-tau-inverse", tau_inv});
  return out;
}

namespace {

CocyclePair universal_into(const Presentation& pres, CocycleKind kind, bool letters) {
  AbelianizedGroup g = abelianize(pres);
  if (letters) g.use_letter_labels();
  CocyclePair c;
  const int nn = pres.n * pres.n;
  c.f.assign(g.coord_map.begin(), g.coord_map.begin() + nn);
  c.h.assign(g.coord_map.begin() + nn, g.coord_map.end());
  c.kind = kind;
  c.target = std::move(g);
  return c;
}

AbElem evaluate(const CocyclePair& c, const Word& w) {
  TargetOps ops(c.target);
  const int nn = static_cast<int>(c.f.size());
  AbElem r = ops.identity();
  for (int a : w) {
    const int g = std::abs(a) - 1;
    const AbElem& e = g < nn ? c.f[g] : c.h[g - nn];
    r = ops.multiply(r, a > 0 ? e : ops.inverse(e));
  }
  return r;
}

std::string describe(const PairCheck& chk) {
  const auto& v = chk.violations.front();
  std::string s = v.axiom + " fails at (" + std::to_string(v.x + 1);
  if (v.y >= 0) s += ", " + std::to_string(v.y + 1);
  if (v.z >= 0) s += ", " + std::to_string(v.z + 1);
  return s + ")";
}

// Runs body(k) for k in [0, count) on worker threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(default_threads()), count / 32 + 1);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

CocyclePair universal_nc_cocycle(const SingularPair& p, bool letters) {
  return universal_into(build_unc_presentation(p), CocycleKind::NonCommutative, letters);
}

CocyclePair universal_ab_cocycle(const SingularPair& p, bool letters) {
  return universal_into(build_ab_presentation(p), CocycleKind::Abelian, letters);
}

bool kills_relations(const Presentation& pres, const CocyclePair& c) {
  if (c.f.size() != static_cast<std::size_t>(pres.n) * pres.n)
    throw Error(ErrorKind::DimensionMismatch, "cocycle and presentation sizes differ");
  TargetOps ops(c.target);
  for (const auto& w : pres.relations) {
    if (!ops.equal(evaluate(c, w), ops.identity())) return false;
  }
  return true;
}

ComponentValues component_products(const SingularDiagram& d, const CocyclePair& c, const Coloring& col) {
  TargetOps ops(c.target);
  ComponentValues out;
  for (int i = 0; i < d.component_count(); ++i) {
    AbElem v = ops.identity();
    for (const auto& pass : d.traverse(i)) {
      const auto& x = d.crossings()[pass.crossing];
      const auto& s = x.slots;
      switch (x.kind) {
        case CrossingKind::Pos:
          if (pass.slot == 0) v = ops.multiply(v, c.F(col[s[0]], col[s[1]]));
          break;
        case CrossingKind::Neg:
          if (pass.slot == 1) v = ops.multiply(v, ops.inverse(c.F(col[s[2]], col[s[3]])));
          break;
        case CrossingKind::Sing:
          v = ops.multiply(v, c.H(col[s[0]], col[s[1]]));
          break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

NcInvariantValue nc_invariant(const SingularDiagram& d, const SingularPair& p, const CocyclePair& c) {
  const PairCheck chk = check_nc_cocycle(p, c);
  if (!chk) throw Error(ErrorKind::CocycleInvalid, describe(chk));
  TargetOps ops(c.target);
  NcInvariantValue out;
  out.colorings = enumerate_colorings(d, p);
  out.per_coloring.resize(out.colorings.size());
  parallel_for(out.colorings.size(), [&](std::size_t k) {
    ComponentValues v = component_products(d, c, out.colorings[k]);
    for (auto& e : v) e = ops.conjugacy_representative(e);
    out.per_coloring[k] = std::move(v);
  });
  for (const auto& v : out.per_coloring) ++out.multiset[v];
  return out;
}

GroupRingElement state_sum(const SingularDiagram& d, const SingularPair& p, const CocyclePair& c) {
  const PairCheck chk = check_ab_cocycle(p, c);
  if (!chk) throw Error(ErrorKind::CocycleInvalid, describe(chk));
  TargetOps ops(c.target);
  const auto colorings = enumerate_colorings(d, p);
  std::vector<AbElem> weights(colorings.size());
  parallel_for(colorings.size(), [&](std::size_t k) {
    const auto& col = colorings[k];
    AbElem v = ops.identity();
    for (const auto& x : d.crossings()) {
      const auto& s = x.slots;
      switch (x.kind) {
        case CrossingKind::Pos:
          v = ops.multiply(v, c.F(col[s[0]], col[s[1]]));
          break;
        case CrossingKind::Neg:
          v = ops.multiply(v, ops.inverse(c.F(col[s[2]], col[s[3]])));
          break;
        case CrossingKind::Sing:
          v = ops.multiply(v, c.H(col[s[0]], col[s[1]]));
          break;
      }
    }
    weights[k] = ops.conjugacy_representative(v);
  });
  GroupRingElement out;
  for (const auto& w : weights) out.add(w);
  return out;
}

std::string render_laurent(const GroupRingElement& v, const Target& target) {
  TargetOps ops(target);
  std::string out;
  for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
    const long long c = it->second;
    const long long mag = c < 0 ? -c : c;
    const std::string mono = ops.render(it->first);
    std::string term = mono == "1" ? std::to_string(mag) : mag == 1 ? mono : std::to_string(mag) + "*" + mono;
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_nc_value(const NcInvariantValue& v, const Target& target) {
  TargetOps ops(target);
  std::string out;
  for (const auto& [tuple, count] : v.multiset) {
    if (!out.empty()) out += ", ";
    out += "{";
    for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? ", " : "") + ops.render(tuple[i]);
    out += "}";
    if (count > 1) out += " x" + std::to_string(count);
  }
  return out.empty() ? "{}" : out;
}

namespace {

std::vector<long long> factors(const AbelianizedGroup& g) {
  std::vector<long long> out = g.torsion;
  out.insert(out.end(), static_cast<std::size_t>(g.rank), 0);
  return out;
}

}  // namespace

NotionComparison compare_cocycle_notions(const SingularPair& p, int bound) {
  constexpr std::size_t kCap = 200000;
  NotionComparison out;
  CocyclePair u = universal_nc_cocycle(p);
  CocyclePair as_ab = u;
  as_ab.kind = CocycleKind::Abelian;
  const PairCheck chk = check_ab_cocycle(p, as_ab);
  out.universal_passes_ab = chk.ok;
  for (const auto& v : chk.violations) out.universal_failures.push_back(v.axiom);
  const auto& g = std::get<AbelianizedGroup>(u.target);
  out.unc_factors = factors(g);
  out.ab_factors = factors(std::get<AbelianizedGroup>(universal_ab_cocycle(p).target));

  const std::size_t dim = g.dimension();
  for (int k = 2; k <= bound; ++k) {
    // Admissible images of each coordinate generator in Z/k.
    std::vector<std::vector<long long>> choices(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const long long step = i < g.torsion.size() ? k / std::gcd(static_cast<long long>(k), g.torsion[i]) : 1;
      for (long long v = 0; v < k; v += step) choices[i].push_back(v);
    }
    const Target zk = FiniteGroup::cyclic(k);
    std::vector<std::size_t> idx(dim, 0);
    std::size_t done = 0;
    while (true) {
      if (done == kCap) {
        out.truncated = true;
        break;
      }
      CocyclePair c;
      c.target = zk;
      c.kind = CocycleKind::NonCommutative;
      auto image = [&](const AbElem& e) {
        long long s = 0;
        for (std::size_t i = 0; i < dim; ++i) s += e[i] * choices[i][idx[i]];
        return AbElem{((s % k) + k) % k};
      };
      for (const auto& e : u.f) c.f.push_back(image(e));
      for (const auto& e : u.h) c.h.push_back(image(e));
      if (check_nc_cocycle(p, c)) {
        ++out.examined;
        if (check_ab_cocycle(p, c)) {
          ++out.also_abelian;
        } else if (out.counterexamples.size() < 5) {
          out.counterexamples.emplace_back(k, c);
        }
      }
      ++done;
      std::size_t i = 0;
      while (i < dim && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == dim) break;
    }
  }
  return out;
}

std::vector<CocyclePair> find_nc_cocycles(const SingularPair& p, const FiniteGroup& g, std::size_t max_candidates) {
  const int n = p.size(), nn = n * n, k = g.order();
  double total = 1;
  for (int i = 0; i < nn; ++i) total *= k;
  if (total > static_cast<double>(max_candidates))
    throw Error(ErrorKind::SearchBoundExceeded, "too many candidate h tables");
  std::vector<CocyclePair> out;
  std::vector<int> h(nn, 0);
  while (true) {
    CocyclePair c;
    c.target = g;
    c.kind = CocycleKind::NonCommutative;
    for (int v : h) c.h.push_back({v});
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const auto [a, b] = p.S()(x, y);
        c.f.push_back({g.multiply(h[x * n + y], g.inverse(h[a * n + b]))});
      }
    }
    if (check_nc_cocycle(p, c)) out.push_back(std::move(c));
    int i = nn - 1;
    while (i >= 0 && ++h[i] == k) h[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

const std::vector<std::string>& builtin_pair_names() {
  static const std::vector<std::string> names{"trivial", "flip-i2", "flip-s2", "flip-flip", "i2-i2", "d3-d3", "d3-d3inv"};
  return names;
}

SingularPair builtin_pair(std::string_view name) {
  if (name == "trivial") return SingularPair(make_flip(1), PairTable::flip(1));
  if (name == "flip-i2" || name == "flip-s2") return SingularPair(make_flip(2), make_i2().table());
  if (name == "flip-flip") return SingularPair(make_flip(2), PairTable::flip(2));
  if (name == "i2-i2") return SingularPair(make_i2(), make_i2().table());
  if (name == "d3-d3") return SingularPair(make_dihedral(3), make_dihedral(3).table());
  if (name == "d3-d3inv") return SingularPair(make_dihedral(3), make_dihedral(3).inverse_table());
  throw Error(ErrorKind::UnknownName, "no built-in pair named '" + std::string(name) + "'");
}

nlohmann::json cocycle_to_json(const CocyclePair& c) {
  const int n = c.size();
  const bool finite = std::holds_alternative<FiniteGroup>(c.target);
  auto table = [&](const std::vector<AbElem>& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < n; ++x) {
      nlohmann::json row = nlohmann::json::array();
      for (int y = 0; y < n; ++y) {
        const auto& e = t[x * n + y];
        if (finite) {
          row.push_back(e[0]);
        } else {
          row.push_back(e);
        }
      }
      rows.push_back(row);
    }
    return rows;
  };
  return {{"kind", c.kind == CocycleKind::NonCommutative ? "nc" : "ab"}, {"f", table(c.f)}, {"h", table(c.h)}};
}

CocyclePair cocycle_from_json(const nlohmann::json& j, const Target& target, const SingularPair& p) {
  CocyclePair c;
  c.target = target;
  const bool finite = std::holds_alternative<FiniteGroup>(target);
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "nc") {
      c.kind = CocycleKind::NonCommutative;
    } else if (kind == "ab") {
      c.kind = CocycleKind::Abelian;
    } else {
      throw Error(ErrorKind::SyntaxError, "cocycle kind must be nc or ab");
    }
    for (auto [key, dst] : {std::pair{"f", &c.f}, std::pair{"h", &c.h}}) {
      const auto& rows = j.at(key);
      if (!rows.is_array() || static_cast<int>(rows.size()) != p.size())
        throw Error(ErrorKind::DimensionMismatch, std::string(key) + " must have n rows");
      for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != p.size())
          throw Error(ErrorKind::DimensionMismatch, std::string(key) + " rows must have n entries");
        for (const auto& e : row) dst->push_back(finite ? AbElem{e.get<long long>()} : e.get<AbElem>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("cocycle: ") + e.what());
  }
  const PairCheck chk = c.kind == CocycleKind::NonCommutative ? check_nc_cocycle(p, c) : check_ab_cocycle(p, c);
  if (!chk) throw Error(ErrorKind::CocycleInvalid, describe(chk));
  return c;
}

}  // namespace singlink
