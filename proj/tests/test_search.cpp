#include "ktc/bounds.hpp"
#include "ktc/reproduce.hpp"
#include "ktc/search.hpp"

#include <doctest.h>

using namespace ktc;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }

// Naive exact maximum code oracle: plain include/exclude recursion over
// the vertex list, no coloring, no identity normalization.
size_t max_code_naive(int n, long long d) {
  const auto verts = all_permutations(n);
  size_t best = 0;
  std::vector<size_t> chosen;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (chosen.size() > best) best = chosen.size();
    if (idx == verts.size() || chosen.size() + (verts.size() - idx) <= best) return;
    bool ok = true;
    for (size_t v : chosen)
      if (distance(verts[idx], verts[v]) < d) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(idx);
      self(self, idx + 1);
      chosen.pop_back();
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return best;
}
}  // namespace

TEST_CASE("greedy sweep") {
  const Code c1 = greedy_gv(3, 2);
  CHECK(c1.words() == std::vector<Permutation>{P("1 2 3"), P("2 3 1"), P("3 1 2")});
  const Code c2 = greedy_gv(4, 1);
  CHECK(c2.size() == 24);
  const Code c3 = greedy_gv(4, 2);
  CHECK(c3.size() >= 6);
  CHECK(c3.min_distance() >= 2);
  CHECK_THROWS_AS(greedy_gv(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_gv(4, 7), std::invalid_argument);
}

TEST_CASE("exact maximum codes") {
  CHECK(max_code(3, 2).best_code.size() == 3);
  CHECK(max_code(3, 3).best_code.size() == 2);
  CHECK(max_code(4, 1).best_code.size() == 24);
  for (int n = 3; n <= 4; ++n)
    for (long long d = 2; d <= choose2(n); ++d) {
      const auto outcome = max_code(n, d);
      REQUIRE(outcome.status == SearchStatus::exact);
      CHECK(outcome.best_code.size() == max_code_naive(n, d));
      if (outcome.best_code.size() >= 2) {
        const Code c(n, outcome.best_code);
        CHECK(c.min_distance() >= d);
      }
    }
  CHECK_THROWS_AS(max_code(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(max_code(4, 8), std::invalid_argument);
}

TEST_CASE("search determinism and budgets") {
  const auto a = max_code(5, 4);
  const auto b = max_code(5, 4);
  CHECK(a.status == SearchStatus::exact);
  CHECK(a.nodes == b.nodes);
  CHECK(a.best_code == b.best_code);

  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto starved = max_code(5, 2, tiny);
  CHECK(starved.status == SearchStatus::budget_exhausted);
}

TEST_CASE("classification of 2-balanced codes") {
  for (int n : {3, 4}) {
    const auto codes = classify_2_balanced(n);
    REQUIRE(codes.size() == 2);
    for (const auto& c : codes) {
      CHECK(static_cast<long long>(c.size()) == factorial_ll(n) / 2);
      CHECK(c.min_distance() >= 2);
      CHECK(is_coset_of_alternating(c).has_value());
    }
    CHECK(codes[0].contains(Permutation::identity(n)));
  }
  CHECK_THROWS_AS(classify_2_balanced(5), std::invalid_argument);
}

TEST_CASE("nonexistence searches") {
  const auto r1 = refute_t_balanced(4, 3);
  CHECK(r1.status == SearchStatus::exact);
  CHECK(r1.best_code.size() < 4);
  CHECK(!r1.certificate.empty());

  const auto r2 = refute_t_balanced(4, 4);  // target n!/t! = 1, below the code minimum
  CHECK(r2.status == SearchStatus::exact);
  CHECK(r2.certificate.find("below the code minimum") != std::string::npos);

  const auto r3 = refute_t_balanced(5, 3);
  CHECK(r3.status == SearchStatus::exact);
  CHECK(r3.best_code.size() < 20);

  CHECK_THROWS_AS(refute_t_balanced(5, 2), std::invalid_argument);

  SearchBudget tiny;
  tiny.max_nodes = 2;
  const auto starved = refute_t_balanced(5, 3, tiny);
  CHECK(starved.status == SearchStatus::budget_exhausted);
  CHECK(starved.certificate.empty());
}

TEST_CASE("weight bound with constrained endpoints") {
  const auto r3 = verify_weight_bound(3);
  CHECK(r3.pass);
  CHECK(r3.equality_cases == 2);
  const auto r5 = verify_weight_bound(5);
  CHECK(r5.pass);
  CHECK(r5.equality_cases == 4);
  CHECK_THROWS_AS(verify_weight_bound(9), std::invalid_argument);
}

TEST_CASE("forced codeword pair") {
  CHECK(forced_codeword(3, 3) == P("4 2 1 3"));
  CHECK(forced_codeword(3, 1) == P("2 4 3 1"));
  CHECK(distance(forced_codeword(3, 3), forced_codeword(3, 1)) <= 2);
  CHECK(forced_codeword(4, 2) == P("3 5 4 1 2"));
  const auto r = verify_forced_pair(50);
  CHECK(r.pass);
  CHECK_THROWS_AS(verify_forced_pair(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_forced_pair(51), std::invalid_argument);
}

TEST_CASE("claim registry") {
  const auto ids = claim_ids();
  CHECK(ids.size() == 16);
  CHECK_THROWS_AS(run_claim("no-such-claim"), std::invalid_argument);
  const auto r = run_claim("puncture-example");
  CHECK(r.status == ClaimStatus::pass);
  // a starved budget must skip, never pass
  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto skipped = run_claim("averaging-consistency", tiny);
  CHECK(skipped.status == ClaimStatus::skipped);
}
