#include "ktc/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ktc {

namespace {

void validate(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation must have degree >= 1");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation value out of range");
    if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("duplicate value in permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

// Counts inversions of seq by merge sort; seq is consumed as scratch.
long long merge_count(std::vector<int>& seq) {
  const size_t n = seq.size();
  std::vector<int> buf(n);
  long long count = 0;
  for (size_t width = 1; width < n; width *= 2) {
    for (size_t lo = 0; lo + width < n; lo += 2 * width) {
      const size_t mid = lo + width;
      const size_t hi = std::min(lo + 2 * width, n);
      size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
          buf[k++] = seq[i++];
        } else {
          count += static_cast<long long>(mid - i);
          buf[k++] = seq[j++];
        }
      }
      while (i < mid) buf[k++] = seq[i++];
      while (j < hi) buf[k++] = seq[j++];
      std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi),
                seq.begin() + static_cast<long>(lo));
    }
  }
  return count;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  validate(images_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw std::invalid_argument("invalid permutation text: " + text);
  if (v.empty()) throw std::invalid_argument("empty permutation text");
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  const int n = a.degree();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = b(a(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& a) {
  const int n = a.degree();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(a(i)) - 1] = i;
  return Permutation(std::move(v));
}

InversionSet inversion_set(const Permutation& a) {
  InversionSet s;
  s.degree = a.degree();
  const auto& im = a.images();
  // (im[p], im[q]) with p < q and im[p] > im[q] is exactly an inversion.
  for (size_t p = 0; p < im.size(); ++p)
    for (size_t q = p + 1; q < im.size(); ++q)
      if (im[p] > im[q]) s.pairs.emplace(im[p], im[q]);
  return s;
}

long long weight(const Permutation& a) {
  std::vector<int> seq = a.images();
  return merge_count(seq);
}

long long distance(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("distance: degree mismatch");
  const int n = a.degree();
  // pos_b[v] = position of value v in b; the relative word lists a's
  // symbols in b's coordinates, so its inversions are the discordant pairs.
  std::vector<int> pos_b(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos_b[static_cast<size_t>(b(i))] = i;
  std::vector<int> rel(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) rel[static_cast<size_t>(i) - 1] = pos_b[static_cast<size_t>(a(i))];
  return merge_count(rel);
}

Parity parity(const Permutation& a) {
  return weight(a) % 2 == 0 ? Parity::even : Parity::odd;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          bool allow_large) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  if (n > kEnumerationGuard && !allow_large)
    throw std::invalid_argument("enumeration refused for n > 12 without override");
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n, bool allow_large) {
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(n <= 12 ? factorial_ll(n) : 0));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, allow_large);
  return out;
}

long long factorial_ll(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_ll: n out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation random_permutation(int n, std::uint64_t& state) {
  // splitmix64 steps; good enough for test-case generation and seedable.
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<size_t>(next() % static_cast<std::uint64_t>(i + 1));
    std::swap(v[static_cast<size_t>(i)], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace ktc
