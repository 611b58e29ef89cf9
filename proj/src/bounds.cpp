#include "ktc/bounds.hpp"

#include "ktc/code.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ktc {

BigInt factorial_big(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

MahonianTable::MahonianTable(int n_max) {
  if (n_max < 1) throw std::invalid_argument("MahonianTable requires n_max >= 1");
  rows_.push_back({BigInt(1)});  // row n=1: single permutation, 0 inversions
  extend(n_max);
}

void MahonianTable::extend(int n_max) {
  while (static_cast<int>(rows_.size()) < n_max) {
    const auto& prev = rows_.back();
    const long long n = static_cast<long long>(rows_.size()) + 1;
    const long long top = n * (n - 1) / 2;
    std::vector<BigInt> row(static_cast<size_t>(top) + 1);
    // Sliding-window sum of the previous row over the last n entries.
    BigInt window = 0;
    for (long long k = 0; k <= top; ++k) {
      if (k < static_cast<long long>(prev.size())) window += prev[static_cast<size_t>(k)];
      if (k - n >= 0 && k - n < static_cast<long long>(prev.size()))
        window -= prev[static_cast<size_t>(k - n)];
      row[static_cast<size_t>(k)] = window;
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<BigInt>& MahonianTable::row(int n) const {
  if (n < 1 || n > max_degree()) throw std::invalid_argument("MahonianTable row out of range");
  return rows_[static_cast<size_t>(n) - 1];
}

BigInt MahonianTable::count(int n, long long k) const {
  const auto& r = row(n);
  if (k < 0 || k >= static_cast<long long>(r.size())) return 0;
  return r[static_cast<size_t>(k)];
}

namespace {

std::mutex g_table_mutex;

BigInt ball_size_locked(int n, long long r) {
  static MahonianTable table(1);
  table.extend(n);
  const long long top = std::min<long long>(r, choose2(n));
  BigInt total = 0;
  for (long long k = 0; k <= top; ++k) total += table.count(n, k);
  return total;
}

}  // namespace

BigInt ball_size(int n, long long r) {
  if (n < 1) throw std::invalid_argument("ball_size requires n >= 1");
  if (r < 0) throw std::invalid_argument("ball_size requires r >= 0");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return ball_size_locked(n, r);
}

BigInt sphere_packing_bound(int n, long long d) {
  if (n < 2) throw std::invalid_argument("sphere_packing_bound requires n >= 2");
  if (d < 1 || d > choose2(n)) throw std::invalid_argument("sphere_packing_bound: d out of range");
  return factorial_big(n) / ball_size(n, (d - 1) / 2);
}

BigInt gv_guarantee(int n, long long d) {
  if (n < 2) throw std::invalid_argument("gv_guarantee requires n >= 2");
  if (d < 1 || d > choose2(n)) throw std::invalid_argument("gv_guarantee: d out of range");
  return factorial_big(n) / ball_size(n, d - 1);
}

SingletonReport singleton_bounds(int n, const BigInt& cardinality) {
  const BigInt nfact = factorial_big(n);
  if (cardinality < 2 || cardinality > nfact)
    throw std::invalid_argument("singleton_bounds: cardinality out of range");
  SingletonReport r;
  for (int t = 1; t <= n; ++t) {
    const BigInt cap_card = nfact / factorial_big(t);
    if (!r.case2 && cardinality == cap_card) r.case2 = {t, choose2(t) + 1};
    if (!r.case1 && cardinality > cap_card) {
      r.case1 = {t, choose2(t)};
      break;  // t increases only shrink the threshold further
    }
  }
  return r;
}

std::string SingletonReport::describe() const {
  std::ostringstream out;
  if (case2) out << "d <= " << case2->second << " (exact cardinality n!/" << case2->first << "!)";
  if (case1) {
    if (case2) out << "; ";
    out << "d <= " << case1->second << " (t=" << case1->first << ")";
  }
  if (!case1 && !case2) out << "no case applies";
  return out.str();
}

BigInt averaging_bound(int n, int t) {
  if (t < 1 || t > n) throw std::invalid_argument("averaging_bound: t out of range");
  return factorial_big(n) / factorial_big(t);
}

CubeBallComparison cube_vs_ball(int n, int t) {
  if (t < 2 || t > n) throw std::invalid_argument("cube_vs_ball: t out of range");
  CubeBallComparison c;
  c.n = n;
  c.t = t;
  c.cube = factorial_big(t);
  const long long diam = choose2(t);
  c.radius_floor = diam / 2;
  c.radius_is_integer = diam % 2 == 0;
  c.ball_at_floor = ball_size(n, c.radius_floor);
  c.ball_at_ceil = c.radius_is_integer ? c.ball_at_floor : ball_size(n, c.radius_floor + 1);
  if (c.cube > c.ball_at_floor)
    c.verdict = 1;
  else if (c.cube < c.ball_at_floor)
    c.verdict = -1;
  return c;
}

}  // namespace ktc
