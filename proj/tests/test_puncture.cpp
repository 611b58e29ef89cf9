#include "ktc/code.hpp"
#include "ktc/puncture.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace ktc;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }

// Random subset of [n] of size k, positions drawn without replacement.
PunctureSet random_subset(int n, int k, std::uint64_t& state) {
  const Permutation shuffle = random_permutation(n, state);
  std::vector<int> kept(shuffle.images().begin(), shuffle.images().begin() + k);
  return PunctureSet(n, std::move(kept));
}
}  // namespace

TEST_CASE("puncturing keeps relative order") {
  CHECK(puncture(P("6 1 3 5 2 4"), PunctureSet::parse(6, "3,5,6")) == P("2 1 3"));
  CHECK(puncture(P("2 3 1"), PunctureSet::parse(3, "2,3")) == P("2 1"));
  std::uint64_t state = 10;
  for (int i = 0; i < 30; ++i) {
    const Permutation p = random_permutation(7, state);
    CHECK(puncture(p, PunctureSet::full(7)) == p);
  }
  CHECK_THROWS_AS(puncture(P("1 2 3"), PunctureSet::parse(4, "1,2")), std::invalid_argument);
}

TEST_CASE("puncture set validation") {
  CHECK_THROWS_AS(PunctureSet(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(PunctureSet(3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PunctureSet(3, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(PunctureSet(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PunctureSet::parse(6, "3;5"), std::invalid_argument);
  CHECK(PunctureSet::parse(6, "5,3,6").kept == std::vector<int>{3, 5, 6});
}

TEST_CASE("index shift map") {
  CHECK(psi(3, 2) == 2);
  CHECK(psi(3, 5) == 4);
  for (int j = 2; j <= 9; ++j) CHECK(psi(1, j) == j - 1);
  CHECK_THROWS_AS(psi(3, 3), std::invalid_argument);
  // bijective onto [n-1]
  const int n = 8, i = 4;
  std::set<int> image;
  for (int j = 1; j <= n; ++j)
    if (j != i) image.insert(psi(i, j));
  CHECK(image.size() == n - 1);
  CHECK(*image.begin() == 1);
  CHECK(*image.rbegin() == n - 1);
}

TEST_CASE("filtered inversions partition the inversion set") {
  const auto f1 = filtered_inversions(P("2 3 1"), 1);
  CHECK(f1.at.pairs == std::set<std::pair<int, int>>{{2, 1}, {3, 1}});
  CHECK(f1.rest.pairs.empty());

  const auto fe = filtered_inversions(Permutation::identity(5), 3);
  CHECK(fe.below.pairs.empty());
  CHECK(fe.above.pairs.empty());
  CHECK(fe.at.pairs.empty());
  CHECK(fe.rest.pairs.empty());

  const auto f6 = filtered_inversions(P("6 1 3 5 2 4"), 6);
  CHECK(f6.at.pairs.size() == 5);  // 6 sits first and precedes all smaller values
  CHECK(f6.rest.pairs.size() == 3);

  CHECK_THROWS_AS(filtered_inversions(P("1 2 3"), 4), std::invalid_argument);

  std::uint64_t state = 11;
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation p = random_permutation(8, state);
    const int v = 1 + static_cast<int>(state % 8);
    const auto f = filtered_inversions(p, v);
    CHECK(f.at.pairs.size() + f.rest.pairs.size() == inversion_set(p).pairs.size());
    CHECK(f.below.pairs.size() + f.above.pairs.size() == f.at.pairs.size());
  }
}

TEST_CASE("code puncturing collapses duplicates") {
  const Code c(3, {Permutation::identity(3), P("2 1 3")});
  const auto punct = puncture_code(c, PunctureSet::parse(3, "1,2"));
  CHECK(punct.words == std::vector<Permutation>{P("1 2"), P("2 1")});
  CHECK(punct.pre_size == 2);
  CHECK(punct.post_size == 2);

  const Code a3 = alternating_group(3);
  const auto full = puncture_code(a3, PunctureSet::full(3));
  CHECK(full.words == a3.words());

  const auto collapsed = puncture_code(a3, PunctureSet::parse(3, "2,3"));
  CHECK(collapsed.pre_size == 3);
  CHECK(collapsed.post_size == 2);
  CHECK(collapsed.words == std::vector<Permutation>{P("1 2"), P("2 1")});
}

TEST_CASE("fibers partition the code") {
  const Code a4 = alternating_group(4);
  const auto f11 = fiber(a4, 1, 1);
  CHECK(f11 == std::vector<Permutation>{P("1 2 3 4"), P("1 3 4 2"), P("1 4 2 3")});
  CHECK(fiber(a4, 1, 2).size() == 3);
  size_t total = 0;
  for (int j = 1; j <= 4; ++j) total += fiber(a4, 1, j).size();
  CHECK(total == a4.size());
  CHECK_THROWS_AS(fiber(a4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(fiber(a4, 1, 5), std::invalid_argument);
}

TEST_CASE("puncturing by stages equals puncturing once") {
  std::uint64_t state = 12;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(state % 6);
    const Permutation p = random_permutation(n, state);
    const int k1 = 2 + static_cast<int>(state % static_cast<std::uint64_t>(n - 2));
    const PunctureSet s1 = random_subset(n, k1, state);
    const int k2 = 1 + static_cast<int>(state % static_cast<std::uint64_t>(k1));
    const PunctureSet s2 = random_subset(k1, k2, state);
    // the composite set re-indexes s2 through s1's labels
    std::vector<int> composite;
    for (int pos : s2.kept) composite.push_back(s1.kept[static_cast<size_t>(pos) - 1]);
    CHECK(puncture(puncture(p, s1), s2) == puncture(p, PunctureSet(n, composite)));
  }
}

// Puncturing can increase the distance in general: rank-normalization on a
// position subset may create discordances that the dropped values masked.
// Contraction does hold whenever the two words agree on every dropped
// position (verified exhaustively through n = 5 offline; spot-checked here).
TEST_CASE("puncturing contracts distance when the dropped entries agree") {
  // smallest counterexample to unconditional contraction
  const PunctureSet s134(4, {1, 3, 4});
  CHECK(distance(P("1 3 4 2"), P("3 1 4 2")) == 1);
  CHECK(distance(puncture(P("1 3 4 2"), s134), puncture(P("3 1 4 2"), s134)) == 3);

  std::uint64_t state = 13;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(state % 8);
    const Permutation a = random_permutation(n, state);
    const int k = 1 + static_cast<int>(state % static_cast<std::uint64_t>(n));
    const PunctureSet s = random_subset(n, k, state);
    // scramble a on the kept positions only, so the dropped entries agree
    const Permutation shuffle = random_permutation(k, state);
    std::vector<int> images(a.images().begin(), a.images().end());
    for (int j = 1; j <= k; ++j) images[static_cast<size_t>(s.kept[static_cast<size_t>(j) - 1]) - 1] =
        a(s.kept[static_cast<size_t>(shuffle(j)) - 1]);
    const Permutation b(images);
    CHECK(distance(puncture(a, s), puncture(b, s)) <= distance(a, b));
  }
}
