#ifndef KTC_PUNCTURE_HPP
#define KTC_PUNCTURE_HPP

#include "ktc/perm.hpp"

#include <string>
#include <vector>

namespace ktc {

// A set S of kept positions inside [n], sorted ascending.
struct PunctureSet {
  int degree = 0;
  std::vector<int> kept;

  PunctureSet(int degree, std::vector<int> kept);

  // Parses comma-separated 1-based positions, e.g. "3,5,6".
  static PunctureSet parse(int degree, const std::string& text);
  static PunctureSet full(int degree);
  // S_i = [n] \ {i}.
  static PunctureSet complement_of(int degree, int i);

  int size() const { return static_cast<int>(kept.size()); }
};

// The permutation of degree |S| whose values have the same relative order
// as sigma's values at the kept positions (rank-normalization).
Permutation puncture(const Permutation& a, const PunctureSet& s);

// Index-shift bijection [n]\{i} -> [n-1]: j if j < i, else j-1.
int psi(int i, int j);

// Partition of the inversion set by incidence with a fixed value i:
// below holds pairs (i, j), above holds pairs (j, i), at their union,
// rest the complement of at.
struct FilteredInversions {
  InversionSet below;
  InversionSet above;
  InversionSet at;
  InversionSet rest;
};

FilteredInversions filtered_inversions(const Permutation& a, int i);

}  // namespace ktc

#endif
