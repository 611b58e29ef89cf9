#include "ktc/search.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ktc {

Code greedy_gv(int n, long long d) {
  if (n < 2) throw std::invalid_argument("greedy_gv requires n >= 2");
  if (d < 1 || d > choose2(n)) throw std::invalid_argument("greedy_gv: d out of range");
  std::vector<Permutation> picked;
  for_each_permutation(n, [&](const Permutation& p) {
    for (const auto& q : picked)
      if (distance(p, q) < d) return;
    picked.push_back(p);
  });
  return Code(n, std::move(picked));
}

namespace {

// Flat bitset over the vertex universe, 64 bits per word.
struct Bitset {
  std::vector<std::uint64_t> w;
  explicit Bitset(size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(size_t i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  size_t count() const {
    size_t c = 0;
    for (auto x : w) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
  }
  void and_with(const Bitset& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  // Index of the lowest set bit at or after `from`; npos when none.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t next(size_t from) const {
    size_t word = from >> 6;
    if (word >= w.size()) return npos;
    std::uint64_t cur = w[word] & (~0ULL << (from & 63));
    while (true) {
      if (cur) return (word << 6) + static_cast<size_t>(__builtin_ctzll(cur));
      if (++word >= w.size()) return npos;
      cur = w[word];
    }
  }
};

// Branch-and-bound maximum clique over an adjacency-matrix graph, with
// a greedy coloring bound (Tomita-style ordering).
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adj, const SearchBudget& budget)
      : adj_(adj), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Returns false when the budget ran out before the search completed.
  bool run(const Bitset& initial) {
    stack_.clear();
    complete_ = true;
    expand(initial);
    return complete_;
  }

  const std::vector<size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 0x3ff) == 0) {
      const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
      if (elapsed.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  void expand(const Bitset& cand) {
    ++nodes_;
    if (out_of_budget()) {
      complete_ = false;
      return;
    }
    if (stack_.size() > best_.size()) best_ = stack_;
    if (!cand.any()) return;

    // Greedy coloring of the candidates in index order; color numbers
    // bound the clique size extendable from each vertex.
    std::vector<size_t> verts;
    for (size_t v = cand.next(0); v != Bitset::npos; v = cand.next(v + 1)) verts.push_back(v);
    std::vector<int> color(verts.size());
    std::vector<Bitset> classes;
    for (size_t k = 0; k < verts.size(); ++k) {
      const size_t v = verts[k];
      size_t c = 0;
      while (c < classes.size()) {
        // v conflicts with a class iff adjacent to one of its members
        bool clash = false;
        for (size_t u = classes[c].next(0); u != Bitset::npos; u = classes[c].next(u + 1))
          if (adj_[v].test(u)) {
            clash = true;
            break;
          }
        if (!clash) break;
        ++c;
      }
      if (c == classes.size()) classes.emplace_back(adj_.size());
      classes[c].set(v);
      color[k] = static_cast<int>(c) + 1;
    }

    // Process in decreasing color; prune when even the color bound
    // cannot beat the incumbent.
    std::vector<size_t> order(verts.size());
    for (size_t k = 0; k < verts.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return color[x] < color[y]; });

    Bitset remaining = cand;
    for (size_t idx = order.size(); idx-- > 0;) {
      const size_t k = order[idx];
      const size_t v = verts[k];
      if (stack_.size() + static_cast<size_t>(color[k]) <= best_.size()) return;
      Bitset next_cand = remaining;
      next_cand.and_with(adj_[v]);
      stack_.push_back(v);
      expand(next_cand);
      stack_.pop_back();
      remaining.reset(v);
      if (!complete_) return;
    }
  }

  const std::vector<Bitset>& adj_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<size_t> stack_;
  std::vector<size_t> best_;
  std::uint64_t nodes_ = 0;
  bool complete_ = true;
};

// Compatibility graph: vertices are S_n in lexicographic order, edges
// between permutations at distance >= d.
std::vector<Bitset> build_compat(const std::vector<Permutation>& verts, long long d) {
  const size_t m = verts.size();
  std::vector<Bitset> adj(m, Bitset(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (distance(verts[i], verts[j]) >= d) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return adj;
}

}  // namespace

SearchOutcome max_code(int n, long long d, const SearchBudget& budget) {
  if (n < 2 || n > 6) throw std::invalid_argument("max_code supports 2 <= n <= 6");
  if (d < 1 || d > choose2(n) + 1) throw std::invalid_argument("max_code: d out of range");
  SearchOutcome out;
  const auto verts = all_permutations(n);
  if (d == 1) {
    // No conflicts at all.
    out.best_code = verts;
    out.nodes = 1;
    return out;
  }
  const auto adj = build_compat(verts, d);
  // Vertex 0 is the identity; fix it and search its compatibility set.
  Bitset initial = adj[0];
  CliqueSearch search(adj, budget);
  const bool complete = search.run(initial);
  out.status = complete ? SearchStatus::exact : SearchStatus::budget_exhausted;
  out.nodes = search.nodes();
  out.best_code.push_back(verts[0]);
  for (size_t v : search.best()) out.best_code.push_back(verts[v]);
  std::sort(out.best_code.begin(), out.best_code.end());
  return out;
}

std::vector<Code> classify_2_balanced(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("classify_2_balanced supports n in {3, 4}");
  const auto verts = all_permutations(n);
  const size_t m = verts.size();
  const size_t target = m / 2;
  const auto adj = build_compat(verts, 2);

  std::vector<Code> found;
  std::vector<size_t> chosen;
  // Enumerate all cliques of size `target` in the compatibility graph,
  // scanning vertices in lexicographic order.
  auto rec = [&](auto&& self, size_t start, const Bitset& allowed) -> void {
    if (chosen.size() == target) {
      std::vector<Permutation> words;
      for (size_t v : chosen) words.push_back(verts[v]);
      found.emplace_back(n, std::move(words));
      return;
    }
    for (size_t v = allowed.next(start); v != Bitset::npos; v = allowed.next(v + 1)) {
      // Not enough vertices left to reach the target size.
      Bitset tail = allowed;
      size_t avail = 0;
      for (size_t u = v; u != Bitset::npos; u = tail.next(u + 1)) ++avail;
      if (chosen.size() + avail < target) return;
      Bitset next_allowed = allowed;
      next_allowed.and_with(adj[v]);
      chosen.push_back(v);
      self(self, v + 1, next_allowed);
      chosen.pop_back();
    }
  };
  Bitset all(m);
  for (size_t v = 0; v < m; ++v) all.set(v);
  rec(rec, 0, all);
  return found;
}

SearchOutcome refute_t_balanced(int n, int t, const SearchBudget& budget) {
  if (t < 3 || t > n) throw std::invalid_argument("refute_t_balanced requires 3 <= t <= n");
  if (n > 6) throw std::invalid_argument("refute_t_balanced guarded at n <= 6");
  const long long target = factorial_ll(n) / factorial_ll(t);
  const long long d = choose2(t) + 1;
  SearchOutcome out = max_code(n, d, budget);
  if (out.status != SearchStatus::exact) return out;
  std::ostringstream cert;
  if (static_cast<long long>(out.best_code.size()) < std::max<long long>(target, 2)) {
    cert << "no code of size " << std::max<long long>(target, 2) << " with d >= " << d
         << " exists in S_" << n << " (max found: " << out.best_code.size()
         << ", nodes explored: " << out.nodes << ")";
    if (target < 2) cert << "; target size n!/t! = " << target << " is below the code minimum of 2";
  } else {
    cert << "search found a code of size " << out.best_code.size() << " with d >= " << d
         << " in S_" << n;
  }
  out.certificate = cert.str();
  return out;
}

WeightBoundReport verify_weight_bound(int n) {
  if (n < 3 || n > 8) throw std::invalid_argument("verify_weight_bound supports 3 <= n <= 8");
  WeightBoundReport r;
  const long long cap = choose2(n - 1) + 1;
  bool ok = true;
  std::string failure;
  for_each_permutation(n, [&](const Permutation& p) {
    const int s = p(1) - 1;
    if (s < 1 || s > n - 1) return;
    if (p(n) < s) return;
    ++r.checked;
    const long long w = weight(p);
    // Equality requires the run at positions 2..n-1 to be strictly
    // decreasing (the last entry itself is pinned to s separately).
    bool middle_decreasing = true;
    for (int i = 2; i < n - 1; ++i)
      if (p(i) <= p(i + 1)) {
        middle_decreasing = false;
        break;
      }
    const bool extremal = p(n) == s && middle_decreasing;
    if (w > cap || (w == cap) != extremal) {
      ok = false;
      if (failure.empty()) failure = "violated by [" + p.str() + "], weight " + std::to_string(w);
    }
    if (w == cap) ++r.equality_cases;
  });
  r.pass = ok;
  std::ostringstream out;
  out << "checked " << r.checked << " permutations, cap " << cap << ", " << r.equality_cases
      << " equality cases";
  if (!failure.empty()) out << "; " << failure;
  r.detail = out.str();
  return r;
}

Permutation forced_codeword(int t, int s) {
  if (t < 3 || s < 1 || s > t) throw std::invalid_argument("forced_codeword: bad parameters");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(t) + 1);
  v.push_back(s + 1);
  for (int x = t + 1; x >= 1; --x)
    if (x != s && x != s + 1) v.push_back(x);
  v.push_back(s);
  return Permutation(std::move(v));
}

ForcedPairReport verify_forced_pair(int t_max) {
  if (t_max < 3 || t_max > 50) throw std::invalid_argument("verify_forced_pair: t_max out of range");
  ForcedPairReport r;
  r.t_max = t_max;
  for (int t = 3; t <= t_max; ++t) {
    const Permutation a = forced_codeword(t, t);
    const Permutation b = forced_codeword(t, t - 2);
    const long long d = distance(a, b);
    const long long cap = 2LL * t - 4;
    if (!(d <= cap && cap < choose2(t) + 1)) {
      r.detail = "failed at t=" + std::to_string(t) + ": distance " + std::to_string(d) +
                 " vs cap " + std::to_string(cap);
      return r;
    }
  }
  r.pass = true;
  r.detail = "forced pairs stay below the distance floor for 3 <= t <= " + std::to_string(t_max);
  return r;
}

}  // namespace ktc
