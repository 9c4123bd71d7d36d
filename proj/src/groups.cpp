#include "singlink/groups.hpp"

#include <algorithm>
#include <numeric>

#include "singlink/error.hpp"

namespace singlink {

FiniteGroup::FiniteGroup(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {
  if (order_ < 1) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error(ErrorKind::DimensionMismatch, "multiplication table must be order x order");
  for (int v : table_) {
    if (v < 0 || v >= order_) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = multiply(e, a) == a && multiply(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorKind::InvalidArgument, "no identity element");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw Error(ErrorKind::InvalidArgument, "multiplication is not associative");
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
  }
  return FiniteGroup(k, std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) throw Error(ErrorKind::SearchBoundExceeded, "symmetric groups only up to degree 5");
  std::vector<Perm> perms;
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Perm c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a * m + b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(m, std::move(t));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

int FiniteGroup::conjugacy_representative(int a) const {
  int best = a;
  for (int g = 0; g < order_; ++g) best = std::min(best, multiply(multiply(g, a), inverse(g)));
  return best;
}

nlohmann::json finite_group_to_json(const FiniteGroup& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> r(g.order());
    for (int b = 0; b < g.order(); ++b) r[b] = g.multiply(a, b);
    rows.push_back(r);
  }
  return {{"order", g.order()}, {"table", rows}};
}

FiniteGroup finite_group_from_json(const nlohmann::json& j) {
  int order = 0;
  std::vector<std::vector<int>> rows;
  try {
    order = j.at("order").get<int>();
    rows = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("finite group: ") + e.what());
  }
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != order) throw Error(ErrorKind::DimensionMismatch, "table row of wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteGroup(order, std::move(flat));
}

void GroupRingElement::add(const AbElem& e, long long coefficient) {
  if (coefficient == 0) return;
  auto& c = terms[e];
  c += coefficient;
  if (c == 0) terms.erase(e);
}

long long GroupRingElement::coefficient_sum() const {
  long long s = 0;
  for (const auto& [e, c] : terms) s += c;
  return s;
}

}  // namespace singlink
