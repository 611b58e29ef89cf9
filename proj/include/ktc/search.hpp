#ifndef KTC_SEARCH_HPP
#define KTC_SEARCH_HPP

#include "ktc/code.hpp"
#include "ktc/perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ktc {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 0.0;  // 0 means no time limit
  std::uint64_t deterministic_seed = 0;
};

enum class SearchStatus { exact, budget_exhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::exact;
  std::vector<Permutation> best_code;  // may have size 1 when d exceeds the diameter
  std::uint64_t nodes = 0;
  std::string certificate;  // set for completed nonexistence searches
};

// Greedy sweep in lexicographic order keeping every permutation at
// distance >= d from all previously kept ones. The result has minimum
// distance >= d and size >= floor(n!/|B_K(n, d-1)|).
Code greedy_gv(int n, long long d);

// Exact maximum code with minimum distance >= d, via branch-and-bound
// over the compatibility graph (edges between permutations at distance
// >= d). Fixes the identity as a member, which is lossless by
// right-invariance. Guarded at n <= 6.
SearchOutcome max_code(int n, long long d, const SearchBudget& budget = {});

// Enumerates every code of size n!/2 with minimum distance >= 2, i.e.
// all maximum independent sets of the adjacent-transposition graph.
// Supported for n in {3, 4}.
std::vector<Code> classify_2_balanced(int n);

// Exhaustive search for a t-balanced code (size n!/t!, distance
// C(t,2)+1). When the search completes without reaching the target
// size, the outcome carries a nonexistence certificate.
SearchOutcome refute_t_balanced(int n, int t, const SearchBudget& budget = {});

// Checks over all sigma with sigma(1) = s+1 and sigma(n) >= s that the
// weight is at most C(n-1,2)+1, with equality exactly when
// sigma(n) = s and the run sigma(2..n-1) is strictly decreasing.
struct WeightBoundReport {
  bool pass = false;
  long long checked = 0;
  long long equality_cases = 0;
  std::string detail;
};

WeightBoundReport verify_weight_bound(int n);

// The two forced codewords a hypothetical t-balanced code would have to
// contain (first entry fixed, strictly decreasing tail, prescribed last
// entry) are closer than the required minimum distance once t >= 3.
struct ForcedPairReport {
  bool pass = false;
  int t_max = 0;
  std::string detail;
};

ForcedPairReport verify_forced_pair(int t_max);

// The word [s+1, descending rest, s] in S_{t+1}: first entry s+1, last
// entry s, remaining values in decreasing order in between.
Permutation forced_codeword(int t, int s);

}  // namespace ktc

#endif
