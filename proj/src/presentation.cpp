#include "singlink/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "singlink/error.hpp"
#include "singlink/smith.hpp"

namespace singlink {

std::string Presentation::generator_name(int g) const {
  const bool is_h = g >= n * n;
  const int k = is_h ? g - n * n : g;
  const int x = k / n + 1, y = k % n + 1;
  std::string sep = n > 9 ? "," : "";
  return std::string(is_h ? "h" : "f") + std::to_string(x) + sep + std::to_string(y);
}

Word reduce_word(const Word& w) {
  Word out;
  for (int a : w) {
    if (!out.empty() && out.back() == -a) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

Word relator(const Word& lhs, const Word& rhs) {
  Word w = lhs;
  for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) w.push_back(-*it);
  return reduce_word(w);
}

namespace {

class Builder {
 public:
  explicit Builder(const SingularPair& p) : S_(p.S()), T_(p.tau()), s_(p.biquandle().s_map()) {
    pres_.n = p.size();
  }

  int F(int x, int y) const { return pres_.f(x, y) + 1; }
  int H(int x, int y) const { return pres_.h(x, y) + 1; }
  int S1(int x, int y) const { return S_.first(x, y); }
  int S2(int x, int y) const { return S_.second(x, y); }
  int T1(int x, int y) const { return T_.first(x, y); }
  int T2(int x, int y) const { return T_.second(x, y); }
  int s(int x) const { return s_[x]; }
  int n() const { return pres_.n; }

  void add(const Word& lhs, const Word& rhs) {
    Word w = relator(lhs, rhs);
    if (!w.empty()) pres_.relations.push_back(std::move(w));
  }

  Presentation finish() {
    auto& r = pres_.relations;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return std::move(pres_);
  }

 private:
  const PairTable& S_;
  const PairTable& T_;
  const Perm& s_;
  Presentation pres_;
};

}  // namespace

Presentation build_unc_presentation(const SingularPair& p) {
  Builder b(p);
  const int n = b.n();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto [sx, sy] = p.S()(x, y);
      const auto [tx, ty] = p.tau()(x, y);
      b.add({b.H(x, y)}, {b.F(x, y), b.H(sx, sy)});
      b.add({b.H(sx, sy)}, {b.H(x, y), b.F(tx, ty)});
      for (int z = 0; z < n; ++z) {
        const int a = b.S1(y, z), c = b.S2(y, z);
        const int u = b.T1(y, z), v = b.T2(y, z);
        b.add({b.F(x, y), b.F(b.S2(x, y), z)}, {b.F(x, a), b.F(b.S2(x, a), c)});
        b.add({b.F(x, y), b.F(b.S2(x, y), z)}, {b.F(x, u), b.F(b.S2(x, u), v)});
        b.add({b.H(b.S1(x, y), b.S1(b.S2(x, y), z))}, {b.H(y, z)});
        b.add({b.F(x, a), b.H(b.S2(x, a), c)}, {b.H(x, y), b.F(b.T2(x, y), z)});
        b.add({b.F(y, z), b.H(b.S2(x, a), c)}, {b.H(x, y), b.F(b.T1(x, y), b.S1(b.T2(x, y), z))});
      }
    }
  }
  return b.finish();
}

Presentation build_ab_presentation(const SingularPair& p) {
  Builder b(p);
  const int n = b.n();
  for (int x = 0; x < n; ++x) {
    b.add({b.F(x, b.s(x))}, {});
    for (int y = 0; y < n; ++y) {
      const auto [sx, sy] = p.S()(x, y);
      const auto [tx, ty] = p.tau()(x, y);
      b.add({b.F(x, y), b.H(sx, sy)}, {b.H(x, y), b.F(tx, ty)});
      for (int z = 0; z < n; ++z) {
        const int a = b.S1(y, z), c = b.S2(y, z);
        const int u = b.T1(y, z), v = b.T2(y, z);
        const int m = b.S2(x, y);
        b.add({b.F(x, y), b.F(m, z), b.F(b.S1(x, y), b.S1(m, z))}, {b.F(x, a), b.F(b.S2(x, a), c), b.F(y, z)});
        b.add({b.H(y, z), b.F(x, u), b.F(b.S2(x, u), v)}, {b.F(x, y), b.F(m, z), b.H(b.S1(x, y), b.S1(m, z))});
        b.add({b.F(y, z), b.F(x, a), b.H(b.S2(x, a), c)},
              {b.H(x, y), b.F(b.T2(x, y), z), b.F(b.T1(x, y), b.S1(b.T2(x, y), z))});
      }
    }
  }
  return b.finish();
}

AbElem AbelianizedGroup::reduce(AbElem a) const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    a[i] %= torsion[i];
    if (a[i] < 0) a[i] += torsion[i];
  }
  return a;
}

AbElem AbelianizedGroup::multiply(const AbElem& a, const AbElem& b) const {
  if (a.size() != dimension() || b.size() != dimension())
    throw Error(ErrorKind::DimensionMismatch, "element has the wrong number of coordinates");
  AbElem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return reduce(std::move(c));
}

AbElem AbelianizedGroup::inverse(const AbElem& a) const { return power(a, -1); }

AbElem AbelianizedGroup::power(const AbElem& a, long long k) const {
  if (a.size() != dimension()) throw Error(ErrorKind::DimensionMismatch, "element has the wrong number of coordinates");
  AbElem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return reduce(std::move(c));
}

bool AbelianizedGroup::is_identity(const AbElem& a) const {
  const AbElem r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

std::string AbelianizedGroup::render(const AbElem& a) const {
  const AbElem r = reduce(a);
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < labels.size() ? labels[i] : "g" + std::to_string(i + 1);
    if (r[i] != 1) out += "^" + std::to_string(r[i]);
  }
  return out.empty() ? "1" : out;
}

void AbelianizedGroup::use_letter_labels() {
  labels.resize(dimension());
  for (int k = 0; k < rank; ++k) {
    labels[torsion.size() + k] = k < 26 ? std::string(1, static_cast<char>('a' + k)) : "z" + std::to_string(k + 1);
  }
}

namespace {

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::SearchBoundExceeded, "coordinate does not fit in 64 bits");
  return v.get_si();
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row Hermite normal form of A (rows x cols) in place, by unimodular row operations.
void row_hnf(BigMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][j] != 0 && (best == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[best][j].get_mpz_t()) < 0)) best = i;
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        const mpz_class q = fdiv(a[i][j], a[r][j]);
        for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
        if (a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows || a[r][j] == 0) continue;
    if (a[r][j] < 0) {
      for (auto& v : a[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const mpz_class q = fdiv(a[i][j], a[r][j]);
      if (q != 0) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[r][k];
      }
    }
    ++r;
  }
}

// Echelon form of the k x cols matrix over Z/d using only unit pivots.
void unit_echelon_mod(std::vector<std::vector<long long>>& a, std::size_t cols, long long d) {
  const std::size_t k = a.size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < k; ++j) {
    std::size_t p = k;
    long long inv = 0;
    for (std::size_t i = r; i < k && p == k; ++i) {
      if (auto iv = inverse_mod(static_cast<int>(a[i][j]), static_cast<int>(d))) {
        p = i;
        inv = *iv;
      }
    }
    if (p == k) continue;
    std::swap(a[r], a[p]);
    for (auto& v : a[r]) v = mod(static_cast<long long>(v) * inv, static_cast<int>(d));
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const long long q = a[i][j];
      for (std::size_t c = 0; c < cols; ++c) a[i][c] = mod(a[i][c] - q * a[r][c], static_cast<int>(d));
    }
    ++r;
  }
}

}  // namespace

AbelianizedGroup abelianize(const Presentation& pres) {
  const std::size_t G = static_cast<std::size_t>(pres.generator_count());
  BigMatrix rel;
  rel.reserve(pres.relations.size());
  for (const auto& w : pres.relations) {
    std::vector<mpz_class> row(G, 0);
    for (int a : w) {
      const int g = std::abs(a) - 1;
      if (g < 0 || static_cast<std::size_t>(g) >= G)
        throw Error(ErrorKind::InvalidArgument, "relation references generator " + std::to_string(a));
      row[g] += a > 0 ? 1 : -1;
    }
    if (std::any_of(row.begin(), row.end(), [](const mpz_class& v) { return v != 0; })) rel.push_back(std::move(row));
  }
  const SmithForm snf = smith_normal_form(rel, G, false);
  const auto diag = snf.diagonal();

  std::vector<std::size_t> tor_idx, free_idx;
  std::vector<mpz_class> tor_d;
  for (std::size_t i = 0; i < G; ++i) {
    const mpz_class d = i < diag.size() ? diag[i] : mpz_class(0);
    if (d == 1) continue;
    if (d == 0) {
      free_idx.push_back(i);
    } else {
      tor_idx.push_back(i);
      tor_d.push_back(d);
    }
  }
  const std::size_t r = free_idx.size(), t = tor_idx.size();

  // Generator processing order for normalization: h generators, then f.
  const int nn = pres.n * pres.n;
  std::vector<std::size_t> order;
  for (int g = nn; g < 2 * nn; ++g) order.push_back(static_cast<std::size_t>(g));
  for (int g = 0; g < nn; ++g) order.push_back(static_cast<std::size_t>(g));

  // Free part: A is r x G (columns in processing order); its row HNF is canonical.
  BigMatrix A(r, std::vector<mpz_class>(G, 0));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t c = 0; c < G; ++c) A[k][c] = snf.V[order[c]][free_idx[k]];
  }
  row_hnf(A, G);

  // Torsion part, reduced.
  BigMatrix Tm(t, std::vector<mpz_class>(G, 0));
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t c = 0; c < G; ++c) {
      mpz_class v = snf.V[order[c]][tor_idx[k]];
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), tor_d[k].get_mpz_t());
      Tm[k][c] = v;
    }
  }
  // Shear the splitting so generators that are free basis vectors carry no torsion.
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t pc = G;
    for (std::size_t c = 0; c < G; ++c) {
      if (A[k][c] != 0) {
        pc = c;
        break;
      }
    }
    if (pc == G || A[k][pc] != 1) continue;
    bool unit = true;
    for (std::size_t k2 = 0; k2 < r; ++k2) {
      if (k2 != k && A[k2][pc] != 0) unit = false;
    }
    if (!unit) continue;
    for (std::size_t q = 0; q < t; ++q) {
      const mpz_class shift = Tm[q][pc];
      if (shift == 0) continue;
      for (std::size_t c = 0; c < G; ++c) {
        Tm[q][c] -= shift * A[k][c];
        mpz_fdiv_r(Tm[q][c].get_mpz_t(), Tm[q][c].get_mpz_t(), tor_d[q].get_mpz_t());
      }
    }
  }

  AbelianizedGroup out;
  out.rank = static_cast<int>(r);
  for (const auto& d : tor_d) out.torsion.push_back(to_ll(d));
  std::vector<std::vector<long long>> tl(t, std::vector<long long>(G));
  for (std::size_t q = 0; q < t; ++q) {
    for (std::size_t c = 0; c < G; ++c) tl[q][c] = to_ll(Tm[q][c]);
  }
  if (t > 0 && std::all_of(out.torsion.begin(), out.torsion.end(), [&](long long d) { return d == out.torsion[0]; })) {
    unit_echelon_mod(tl, G, out.torsion[0]);
  }

  out.coord_map.assign(G, AbElem(t + r, 0));
  for (std::size_t c = 0; c < G; ++c) {
    auto& e = out.coord_map[order[c]];
    for (std::size_t q = 0; q < t; ++q) e[q] = tl[q][c];
    for (std::size_t k = 0; k < r; ++k) e[t + k] = to_ll(A[k][c]);
  }
  for (std::size_t q = 0; q < t; ++q) out.labels.push_back("u" + std::to_string(q + 1));
  for (std::size_t k = 0; k < r; ++k) out.labels.push_back("z" + std::to_string(k + 1));
  return out;
}

AbElem normal_form(const AbelianizedGroup& g, const Word& w) {
  AbElem e = g.identity();
  for (int a : w) {
    const int idx = std::abs(a) - 1;
    if (idx < 0 || static_cast<std::size_t>(idx) >= g.coord_map.size())
      throw Error(ErrorKind::InvalidArgument, "word references generator " + std::to_string(a));
    const auto& c = g.coord_map[idx];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += a > 0 ? c[i] : -c[i];
  }
  return g.reduce(std::move(e));
}

std::vector<std::vector<std::pair<int, int>>> equivalence_classes_involutive(const PairTable& s) {
  if (!s.involutive()) throw Error(ErrorKind::NotInvolutive, "S composed with itself is not the identity");
  const int n = s.size();
  std::vector<int> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int a = s.first(x, y), b = s.first(s.second(x, y), z);
        const int u = find(y * n + z), v = find(a * n + b);
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
    }
  }
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::vector<int> slot(n * n, -1);
  for (int k = 0; k < n * n; ++k) {
    const int root = find(k);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].emplace_back(k / n, k % n);
  }
  return classes;
}

nlohmann::json abelianized_to_json(const AbelianizedGroup& g, const Presentation* names) {
  nlohmann::json j;
  j["rank"] = g.rank;
  j["torsion"] = g.torsion;
  j["labels"] = g.labels;
  if (names) {
    nlohmann::json cm = nlohmann::json::object();
    for (std::size_t i = 0; i < g.coord_map.size(); ++i) cm[names->generator_name(static_cast<int>(i))] = g.coord_map[i];
    j["coord_map"] = cm;
  } else {
    j["coord_map"] = g.coord_map;
  }
  return j;
}

AbelianizedGroup abelian_group_from_json(const nlohmann::json& j) {
  AbelianizedGroup g;
  try {
    g.rank = j.at("rank").get<int>();
    g.torsion = j.at("torsion").get<std::vector<long long>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("abelian group: ") + e.what());
  }
  if (g.rank < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (g.torsion[i] < 2 || (i > 0 && g.torsion[i] % g.torsion[i - 1] != 0))
      throw Error(ErrorKind::InvalidArgument, "torsion factors must exceed 1 and divide each other");
  }
  if (j.contains("labels")) {
    g.labels = j.at("labels").get<std::vector<std::string>>();
    if (g.labels.size() != g.dimension()) throw Error(ErrorKind::DimensionMismatch, "one label per coordinate");
  } else {
    for (std::size_t q = 0; q < g.torsion.size(); ++q) g.labels.push_back("u" + std::to_string(q + 1));
    for (int k = 0; k < g.rank; ++k) g.labels.push_back("z" + std::to_string(k + 1));
  }
  if (j.contains("coord_map") && j.at("coord_map").is_array()) {
    g.coord_map = j.at("coord_map").get<std::vector<AbElem>>();
  }
  return g;
}

}  // namespace singlink
