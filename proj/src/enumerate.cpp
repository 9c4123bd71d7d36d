#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "singlink/error.hpp"
#include "singlink/pairs.hpp"

namespace singlink {

namespace {

// Each cell (x, y) of tau is a variable whose value is the pair tau(x, y), both
// encoded as a * n + b. Every compatibility equation says that tau commutes with
// a fixed permutation P of X x X, i.e. value(P(c)) = P(value(c)); the remaining
// two equations restrict single cells.
class TauSearch {
 public:
  using Domains = std::array<std::uint64_t, 64>;

  TauSearch(const PairTable& s, bool bijective) : n_(s.size()), cells_(n_ * n_), bijective_(bijective) {
    auto cell = [this](int a, int b) { return a * n_ + b; };
    auto add = [&](auto&& f) {
      std::vector<int> p(cells_);
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
          auto [c, d] = f(a, b);
          p[cell(a, b)] = cell(c, d);
        }
      }
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::InvalidArgument, "switch is not invertible enough for the search");
      for (int c = 0; c < cells_; ++c) {
        if (p[c] != c) {
          if (std::find(perms_.begin(), perms_.end(), p) == perms_.end()) {
            std::vector<int> inv(cells_);
            for (int k = 0; k < cells_; ++k) inv[p[k]] = k;
            perms_.push_back(std::move(p));
            invs_.push_back(std::move(inv));
          }
          return;
        }
      }
    };
    add([&](int a, int b) { return s(a, b); });
    for (int x = 0; x < n_; ++x) {
      add([&](int a, int b) { return std::pair{s.first(x, a), s.first(s.second(x, a), b)}; });
    }
    for (int z = 0; z < n_; ++z) {
      add([&](int a, int b) { return std::pair{s.second(a, s.first(b, z)), s.second(b, z)}; });
    }

    const std::uint64_t all = cells_ == 64 ? ~0ULL : (1ULL << cells_) - 1;
    row_mask_.assign(n_, 0);
    col_mask_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        row_mask_[a] |= 1ULL << cell(a, b);
        col_mask_[b] |= 1ULL << cell(a, b);
      }
    }
    initial_.fill(0);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        std::uint64_t dom = all;
        for (int a = 0; a < n_; ++a) {
          for (int b = 0; b < n_; ++b) {
            bool ok = true;
            for (int w = 0; w < n_ && ok; ++w) {
              // cell (x, y) as (y, z) of the first restriction, as (x, y) of the second
              ok = s.second(s.second(w, a), b) == s.second(s.second(w, x), y) &&
                   s.first(a, s.first(b, w)) == s.first(x, s.first(y, w));
            }
            if (!ok) dom &= ~(1ULL << cell(a, b));
          }
        }
        initial_[cell(x, y)] = dom;
      }
    }
  }

  std::vector<PairTable> run(int threads) {
    std::vector<PairTable> out;
    Domains root = initial_;
    std::vector<int> all(cells_);
    std::iota(all.begin(), all.end(), 0);
    if (!propagate(root, all)) return out;
    const int c = choose(root);
    if (c < 0) {
      out.push_back(to_table(root));
      return out;
    }
    std::vector<int> values;
    for (std::uint64_t m = root[c]; m; m &= m - 1) values.push_back(std::countr_zero(m));

    std::atomic<std::size_t> next{0};
    std::mutex lock;
    auto worker = [&] {
      std::vector<PairTable> local;
      for (std::size_t i = next++; i < values.size(); i = next++) {
        Domains d = root;
        d[c] = 1ULL << values[i];
        if (propagate(d, {c})) search(d, local);
      }
      std::lock_guard guard(lock);
      out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    };
    const int k = std::max(1, std::min<int>(threads, static_cast<int>(values.size())));
    if (k == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < k; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::uint64_t map_mask(std::uint64_t m, const std::vector<int>& p) {
    std::uint64_t r = 0;
    for (; m; m &= m - 1) r |= 1ULL << p[std::countr_zero(m)];
    return r;
  }

  bool narrow(Domains& d, int c, std::uint64_t keep, std::vector<int>& queue, std::uint64_t& queued) const {
    const std::uint64_t nm = d[c] & keep;
    if (nm == d[c]) return true;
    d[c] = nm;
    if (!nm) return false;
    if (!(queued >> c & 1)) {
      queued |= 1ULL << c;
      queue.push_back(c);
    }
    return true;
  }

  bool propagate(Domains& d, std::vector<int> queue) const {
    std::uint64_t queued = 0;
    for (int c : queue) queued |= 1ULL << c;
    while (!queue.empty()) {
      const int c = queue.back();
      queue.pop_back();
      queued &= ~(1ULL << c);
      if (!d[c]) return false;
      for (std::size_t g = 0; g < perms_.size(); ++g) {
        if (!narrow(d, perms_[g][c], map_mask(d[c], perms_[g]), queue, queued)) return false;
        if (!narrow(d, invs_[g][c], map_mask(d[c], invs_[g]), queue, queued)) return false;
      }
      if (std::popcount(d[c]) == 1) {
        const int v = std::countr_zero(d[c]);
        const int a = v / n_, b = v % n_;
        const int x = c / n_, y = c % n_;
        for (int k = 0; k < n_; ++k) {
          if (k != y && !narrow(d, x * n_ + k, ~row_mask_[a], queue, queued)) return false;
          if (k != x && !narrow(d, k * n_ + y, ~col_mask_[b], queue, queued)) return false;
        }
        if (bijective_) {
          for (int o = 0; o < cells_; ++o) {
            if (o != c && !narrow(d, o, ~(1ULL << v), queue, queued)) return false;
          }
        }
      }
    }
    return true;
  }

  int choose(const Domains& d) const {
    int best = -1, best_count = 65;
    for (int c = 0; c < cells_; ++c) {
      const int k = std::popcount(d[c]);
      if (k > 1 && k < best_count) {
        best = c;
        best_count = k;
      }
    }
    return best;
  }

  void search(const Domains& d, std::vector<PairTable>& out) const {
    const int c = choose(d);
    if (c < 0) {
      out.push_back(to_table(d));
      return;
    }
    for (std::uint64_t m = d[c]; m; m &= m - 1) {
      Domains e = d;
      e[c] = m & -m;
      if (propagate(e, {c})) search(e, out);
    }
  }

  PairTable to_table(const Domains& d) const {
    return PairTable::from_function(n_, [&](int x, int y) {
      const int v = std::countr_zero(d[x * n_ + y]);
      return std::pair{v / n_, v % n_};
    });
  }

  int n_;
  int cells_;
  bool bijective_;
  std::vector<std::vector<int>> perms_, invs_;
  std::vector<std::uint64_t> row_mask_, col_mask_;
  Domains initial_{};
};

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Tables with entries below 4 packed two bits per cell; the packing is only used
// for counting distinct classes, so its order is irrelevant.
std::uint64_t pack(const std::vector<std::uint8_t>& cells) {
  std::uint64_t k = 0;
  for (auto v : cells) k = k << 2 | v;
  return k;
}

std::uint64_t relabeled_key(const std::vector<std::uint8_t>& t1, const std::vector<std::uint8_t>& t2, int n,
                            const Perm& phi, std::vector<std::uint8_t>& scratch) {
  const int cells = n * n;
  scratch.assign(2 * cells, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int c = phi[x] * n + phi[y];
      scratch[c] = static_cast<std::uint8_t>(phi[t1[x * n + y]]);
      if (!t2.empty()) scratch[cells + c] = static_cast<std::uint8_t>(phi[t2[x * n + y]]);
    }
  }
  if (t2.empty()) scratch.resize(cells);
  return pack(scratch);
}

// Iterates over all lists of n permutations of {0..n-1}, i.e. all left invertible t1.
template <class F>
void for_each_row_list(int n, const std::vector<Perm>& perms, F&& f) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n * n));
  while (true) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) t[x * n + y] = static_cast<std::uint8_t>(perms[idx[x]][y]);
    }
    f(t);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == perms.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

bool pairs_bijective(int n, const std::vector<std::uint8_t>& t1, const std::vector<std::uint8_t>& t2) {
  std::uint64_t seen = 0;
  for (int c = 0; c < n * n; ++c) {
    const std::uint64_t bit = 1ULL << (t1[c] * n + t2[c]);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

}  // namespace

std::vector<PairTable> enumerate_taus(const Biquandle& s, const EnumerateOptions& opt) {
  const int n = s.size();
  if (n > std::min(opt.max_n, 8))
    throw Error(ErrorKind::SearchBoundExceeded,
                "n=" + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(std::min(opt.max_n, 8)));
  TauSearch search(s.table(), opt.require_bijective);
  return search.run(opt.threads > 0 ? opt.threads : default_threads());
}

LrCounts enumerate_left_right_invertible(int n, bool flip_symmetry) {
  if (n < 1 || n > (flip_symmetry ? 4 : 3))
    throw Error(ErrorKind::SearchBoundExceeded, "left/right invertible census limited to n <= " +
                                                    std::to_string(flip_symmetry ? 4 : 3));
  const auto perms = all_perms(n);
  LrCounts counts;
  std::vector<std::uint64_t> all_keys, bij_keys;
  std::vector<std::uint8_t> scratch;
  std::vector<std::uint8_t> t2(static_cast<std::size_t>(n * n));
  auto record = [&](const std::vector<std::uint8_t>& t1, const std::vector<std::uint8_t>& t2_used,
                    const std::vector<std::uint8_t>& t2_full) {
    std::uint64_t best = ~0ULL;
    for (const auto& phi : perms) best = std::min(best, relabeled_key(t1, t2_used, n, phi, scratch));
    ++counts.total;
    all_keys.push_back(best);
    if (pairs_bijective(n, t1, t2_full)) {
      ++counts.bijective;
      bij_keys.push_back(best);
    }
  };
  if (flip_symmetry) {
    const std::vector<std::uint8_t> none;
    for_each_row_list(n, perms, [&](const std::vector<std::uint8_t>& t1) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) t2[x * n + y] = t1[y * n + x];
      }
      record(t1, none, t2);
    });
  } else {
    for_each_row_list(n, perms, [&](const std::vector<std::uint8_t>& t1) {
      for_each_row_list(n, perms, [&](const std::vector<std::uint8_t>& cols) {
        // cols[y * n + x] = t2(x, y): each column of t2 is a permutation
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) t2[x * n + y] = cols[y * n + x];
        }
        record(t1, t2, t2);
      });
    });
  }
  auto distinct = [](std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::uint64_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  counts.iso = distinct(all_keys);
  counts.bijective_iso = distinct(bij_keys);
  return counts;
}

std::vector<PairTable> all_left_right_invertible(int n) {
  if (n < 1 || n > 3) throw Error(ErrorKind::SearchBoundExceeded, "full left/right invertible listing limited to n <= 3");
  const auto perms = all_perms(n);
  std::vector<PairTable> out;
  std::vector<std::uint8_t> t2(static_cast<std::size_t>(n * n));
  for_each_row_list(n, perms, [&](const std::vector<std::uint8_t>& t1) {
    for_each_row_list(n, perms, [&](const std::vector<std::uint8_t>& cols) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) t2[x * n + y] = cols[y * n + x];
      }
      out.emplace_back(n, t1, t2);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace singlink
