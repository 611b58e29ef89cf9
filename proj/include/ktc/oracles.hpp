#ifndef KTC_ORACLES_HPP
#define KTC_ORACLES_HPP

#include "ktc/perm.hpp"

#include <algorithm>

// Slow reference routes for the distance computation. These deliberately
// avoid the merge-count fast path so they can check it.

namespace ktc::oracle {

// Counts pairs (i, j) with a^-1(i) < a^-1(j) and b^-1(i) > b^-1(j), over
// all i != j. O(n^2).
inline long long distance_pairwise(const Permutation& a, const Permutation& b) {
  const int n = a.degree();
  const Permutation ai = inverse(a);
  const Permutation bi = inverse(b);
  long long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (ai(i) < ai(j) && bi(i) > bi(j)) ++count;
    }
  return count;
}

// |I_a ∪ I_b| - |I_a ∩ I_b|, built from the explicit inversion sets.
inline long long distance_inversion_symdiff(const Permutation& a, const Permutation& b) {
  const InversionSet ia = inversion_set(a);
  const InversionSet ib = inversion_set(b);
  long long common = 0;
  for (const auto& p : ia.pairs)
    if (ib.pairs.count(p)) ++common;
  const long long united =
      static_cast<long long>(ia.pairs.size()) + static_cast<long long>(ib.pairs.size()) - common;
  return united - common;
}

// Direct double loop over positions, no merge sort.
inline long long weight_bruteforce(const Permutation& a) {
  const auto& im = a.images();
  long long count = 0;
  for (size_t p = 0; p < im.size(); ++p)
    for (size_t q = p + 1; q < im.size(); ++q)
      if (im[p] > im[q]) ++count;
  return count;
}

}  // namespace ktc::oracle

#endif
