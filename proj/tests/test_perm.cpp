#include "ktc/perm.hpp"
#include "ktc/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace ktc;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("compose follows the left-to-right convention") {
  CHECK(compose(P("2 1 3"), P("1 3 2")) == P("3 1 2"));
  const Permutation e = Permutation::identity(5);
  std::uint64_t state = 1;
  for (int i = 0; i < 50; ++i) {
    const Permutation s = random_permutation(5, state);
    CHECK(compose(e, s) == s);
    CHECK(compose(s, e) == s);
    CHECK(compose(s, inverse(s)) == e);
    CHECK(compose(inverse(s), s) == e);
  }
  CHECK_THROWS_AS(compose(P("1 2"), P("1 2 3")), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(P("2 3 1")) == P("3 1 2"));
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  std::uint64_t state = 2;
  for (int i = 0; i < 50; ++i) {
    const Permutation s = random_permutation(8, state);
    CHECK(inverse(inverse(s)) == s);
  }
}

TEST_CASE("inversion sets") {
  const auto s = inversion_set(P("2 3 1"));
  CHECK(s.pairs == std::set<std::pair<int, int>>{{2, 1}, {3, 1}});
  CHECK(inversion_set(Permutation::identity(6)).pairs.empty());
  CHECK(inversion_set(Permutation::reversal(5)).pairs.size() == 10);
}

TEST_CASE("weight matches the inversion set size") {
  CHECK(weight(P("2 3 1")) == 2);
  CHECK(weight(Permutation::identity(7)) == 0);
  CHECK(weight(P("6 1 3 5 2 4")) == oracle::weight_bruteforce(P("6 1 3 5 2 4")));
  CHECK(weight(P("6 1 3 5 2 4")) == 8);
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      REQUIRE(weight(p) == static_cast<long long>(inversion_set(p).pairs.size()));
    });
  std::uint64_t state = 3;
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_permutation(64, state);
    REQUIRE(weight(p) == oracle::weight_bruteforce(p));
  }
}

TEST_CASE("distance examples and oracle agreement") {
  CHECK(distance(P("2 3 1"), Permutation::identity(3)) == 2);
  CHECK(distance(P("2 3 1"), P("2 3 1")) == 0);
  CHECK(oracle::distance_pairwise(P("1 2 3 4"), P("2 1 4 3")) == 2);
  CHECK(distance(P("1 2 3 4"), P("2 1 4 3")) == 2);
  CHECK_THROWS_AS(distance(P("1 2"), P("1 2 3")), std::invalid_argument);
}

TEST_CASE("distance is a right-invariant metric") {
  std::uint64_t state = 4;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(state % 15);
    const Permutation s = random_permutation(n, state);
    const Permutation t = random_permutation(n, state);
    const Permutation u = random_permutation(n, state);
    CHECK(distance(s, t) == distance(t, s));
    CHECK((distance(s, t) == 0) == (s == t));
    CHECK(distance(s, u) <= distance(s, t) + distance(t, u));
    CHECK(distance(s, t) == distance(compose(s, u), compose(t, u)));
    // weight difference bounds the distance, distance bounds the sum
    const long long ws = weight(s), wt = weight(t);
    CHECK(std::abs(ws - wt) <= distance(s, t));
    CHECK(distance(s, t) <= ws + wt);
  }
}

TEST_CASE("parity") {
  CHECK(parity(Permutation::identity(5)) == Parity::even);
  CHECK(parity(P("2 1 3 4")) == Parity::odd);
  CHECK(parity(P("6 1 3 5 2 4")) == Parity::even);  // weight 8
  std::uint64_t state = 5;
  for (int i = 0; i < 200; ++i) {
    const Permutation s = random_permutation(9, state);
    const Permutation t = random_permutation(9, state);
    const bool odd_product = (parity(s) == Parity::odd) != (parity(t) == Parity::odd);
    CHECK((parity(compose(s, t)) == Parity::odd) == odd_product);
  }
}

TEST_CASE("lexicographic enumeration") {
  std::vector<Permutation> s3;
  for_each_permutation(3, [&](const Permutation& p) { s3.push_back(p); });
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == P("1 2 3"));
  CHECK(s3.back() == P("3 2 1"));
  CHECK(std::is_sorted(s3.begin(), s3.end()));

  int even = 0, odd = 0;
  for_each_permutation(4, [&](const Permutation& p) {
    (parity(p) == Parity::even ? even : odd)++;
  });
  CHECK(even == 12);
  CHECK(odd == 12);

  std::vector<Permutation> s1;
  for_each_permutation(1, [&](const Permutation& p) { s1.push_back(p); });
  CHECK(s1 == std::vector<Permutation>{Permutation::identity(1)});

  CHECK_THROWS_AS(for_each_permutation(13, [](const Permutation&) {}), std::invalid_argument);
  CHECK_THROWS_AS(for_each_permutation(0, [](const Permutation&) {}), std::invalid_argument);
}

TEST_CASE("text form parsing") {
  CHECK(P("6 1 3 5 2 4").str() == "6 1 3 5 2 4");
  CHECK_THROWS_AS(Permutation::parse("1 2 2"), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(Permutation::parse("1 3 4"), std::invalid_argument);   // gap
  CHECK_THROWS_AS(Permutation::parse("0 1 2"), std::invalid_argument);   // zero
  CHECK_THROWS_AS(Permutation::parse("1 2 5"), std::invalid_argument);   // value > n
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 2 x"), std::invalid_argument);
}
