#ifndef KTC_PERM_HPP
#define KTC_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

// Permutations of [n] in one-line notation. Values are 1-based, matching
// the text form "6 1 3 5 2 4"; storage is a plain vector indexed from 0.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation reversal(int n);

  // Parses space-separated 1-based values. Rejects duplicates, gaps,
  // zeros and values > n.
  static Permutation parse(const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  // sigma(i) for 1 <= i <= degree.
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Product convention: compose(a, b)(i) = b(a(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// The set of pairs (i, j) with i > j whose values appear out of order,
// i.e. i precedes j in the one-line notation.
struct InversionSet {
  int degree = 0;
  std::set<std::pair<int, int>> pairs;

  bool operator==(const InversionSet&) const = default;
};

InversionSet inversion_set(const Permutation& a);

// Number of inversions, computed by merge-count in O(n log n).
long long weight(const Permutation& a);

// Kendall-tau distance. Fast path: relabel a through b and count the
// inversions of the relative permutation.
long long distance(const Permutation& a, const Permutation& b);

enum class Parity { even, odd };

Parity parity(const Permutation& a);

inline constexpr int kEnumerationGuard = 12;

// Visits all of S_n in lexicographic order of one-line notation.
// Refuses n > kEnumerationGuard unless allow_large is set.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          bool allow_large = false);

std::vector<Permutation> all_permutations(int n, bool allow_large = false);

long long factorial_ll(int n);  // valid for n <= 20

// Uniformly random permutation from the given engine (Fisher-Yates).
Permutation random_permutation(int n, std::uint64_t& state);

}  // namespace ktc

#endif
