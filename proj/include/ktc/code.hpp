#ifndef KTC_CODE_HPP
#define KTC_CODE_HPP

#include "ktc/perm.hpp"
#include "ktc/puncture.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

// A set of >= 2 distinct permutations of common degree, kept sorted
// lexicographically. Append-only; the minimum distance is cached on
// first query.
class Code {
 public:
  Code(int degree, std::vector<Permutation> words);

  int degree() const { return degree_; }
  size_t size() const { return words_.size(); }
  const std::vector<Permutation>& words() const { return words_; }
  bool contains(const Permutation& p) const;

  // Exact minimum pairwise distance; early exit at 1.
  long long min_distance() const;

  // File format: header "n=<degree>", one permutation per line, lines
  // starting with '#' are comments.
  static Code parse(std::istream& in);
  void serialize(std::ostream& out) const;

  bool operator==(const Code& other) const {
    return degree_ == other.degree_ && words_ == other.words_;
  }

 private:
  int degree_;
  std::vector<Permutation> words_;
  mutable std::optional<long long> cached_min_distance_;
};

// All even-weight permutations of S_n; requires 3 <= n <= guard.
Code alternating_group(int n, bool allow_large = false);

// {sigma|_S : sigma in C}; duplicates collapse (set semantics).
// pre_size/post_size record cardinality before and after.
struct PuncturedCode {
  std::vector<Permutation> words;  // may have size < 2
  size_t pre_size = 0;
  size_t post_size = 0;
};

PuncturedCode puncture_code(const Code& c, const PunctureSet& s);

// C^{i,j} = codewords with sigma(i) = j. May be empty.
std::vector<Permutation> fiber(const Code& c, int i, int j);

// Verdict of the t-balance test: minimum distance > C(t,2) and
// cardinality exactly n!/t!. A balanced code must additionally have
// minimum distance exactly C(t,2)+1; mds_ok records that consistency.
struct BalanceVerdict {
  int t = 0;
  bool is_balanced = false;
  bool cardinality_ok = false;
  bool distance_ok = false;
  bool mds_ok = true;
  std::optional<std::pair<Permutation, Permutation>> distance_witness;
  std::string detail;
};

BalanceVerdict check_balanced(const Code& c, int t);

struct StructureReport {
  bool pass = false;
  std::string detail;
};

// For a t-balanced code: every first- and last-position fiber has size
// |C|/n, puncturing a fiber at that position preserves its cardinality,
// and the punctured fibers are recursively t-balanced.
StructureReport check_fiber_balance(const Code& c, int t);

// For every window X_{s,t} of n-t positions ({1..s} ∪ {t+s+1..n}) the
// restriction of codewords to those positions is a bijection onto the
// injective value-assignments. Guarded at n <= 8.
StructureReport check_unique_codeword_structure(const Code& c, int t);

// If c is a left translate sigma ∘ A_n, returns a witness sigma
// (identity when c = A_n); otherwise empty. Requires |c| = n!/2.
// Uses the parity shortcut: translates of A_n are exactly the
// constant-parity halves of S_n.
std::optional<Permutation> is_coset_of_alternating(const Code& c);

// C(k, 2) as a long long.
inline long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace ktc

#endif
