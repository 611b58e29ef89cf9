#ifndef KTC_BOUNDS_HPP
#define KTC_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial_big(int n);

// Triangle T(n, k) = number of permutations of n with exactly k
// inversions, 0 <= k <= n(n-1)/2. Rows extend incrementally via the
// standard recurrence T(n, k) = sum_{j=0..min(k, n-1)} T(n-1, k-j).
class MahonianTable {
 public:
  explicit MahonianTable(int n_max);
  void extend(int n_max);
  int max_degree() const { return static_cast<int>(rows_.size()); }
  const std::vector<BigInt>& row(int n) const;
  // T(n, k); zero outside the triangle.
  BigInt count(int n, long long k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;  // rows_[n-1] = row n
};

// |B_K(n, r)| = number of permutations of weight <= r. Backed by a
// process-wide memoized MahonianTable.
BigInt ball_size(int n, long long r);

// n! / |B_K(n, floor((d-1)/2))|, floored.
BigInt sphere_packing_bound(int n, long long d);

// n! / |B_K(n, d-1)|, floored: a cardinality guaranteed achievable.
BigInt gv_guarantee(int n, long long d);

// Distance caps implied by a code's cardinality. Case 1 applies to the
// smallest t with |C| > n!/t! and caps d at C(t,2); case 2 applies when
// |C| = n!/t! exactly and caps d at C(t,2)+1.
struct SingletonReport {
  std::optional<std::pair<int, long long>> case1;  // {t, cap}
  std::optional<std::pair<int, long long>> case2;  // {t, cap}
  std::string describe() const;
};

SingletonReport singleton_bounds(int n, const BigInt& cardinality);

// Cap n!/t! on the size of any code with minimum distance > C(t,2).
BigInt averaging_bound(int n, int t);

// Cardinality comparison between the cube anticode of length t (size t!,
// diameter C(t,2)) and the ball of radius C(t,2)/2. The radius is a
// half-integer for some t; we report the floored radius used plus the
// ball at the adjacent radius, without asserting either direction.
struct CubeBallComparison {
  int n = 0;
  int t = 0;
  BigInt cube;
  long long radius_floor = 0;
  bool radius_is_integer = true;
  BigInt ball_at_floor;
  BigInt ball_at_ceil;
  int verdict = 0;  // +1 cube larger, 0 equal, -1 ball larger (at floored radius)
};

CubeBallComparison cube_vs_ball(int n, int t);

}  // namespace ktc

#endif
