#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "imbalance/poset.hpp"
#include "oracles.hpp"

using namespace imbalance;

namespace {

std::vector<std::pair<int, int>> random_relations(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<std::pair<int, int>> rels;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (keep(rng)) rels.emplace_back(s, t);
  return rels;
}

}  // namespace

TEST_CASE("transitive closure and reduction match the matrix oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto rels = random_relations(n, 0.4, rng);
    Poset P = make_poset(n, rels);
    auto le = oracle::closure(n, rels);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) CHECK(P.leq(s, t) == le[s][t]);
    CHECK(P.covers() == oracle::covers_by_closure(n, rels));
  }
}

TEST_CASE("make_poset rejects cycles and bad indices") {
  CHECK_THROWS_AS(make_poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_poset(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_poset(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_poset(65, {}), std::invalid_argument);
}

TEST_CASE("linear extensions match the permutation filter oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto rels = random_relations(n, 0.35, rng);
    Poset P = make_poset(n, rels);
    std::vector<std::vector<int>> got;
    for (const LinearExtension& f : linear_extensions(P)) got.push_back(f.order());
    std::sort(got.begin(), got.end());
    auto want = oracle::extensions_by_filter(n, rels);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("extension round trips and validity") {
  Poset P = make_poset(4, {{0, 1}, {0, 2}, {1, 3}});
  for (const LinearExtension& f : linear_extensions(P)) {
    CHECK(is_linear_extension(P, f));
    CHECK(extension_from_order(f.order()) == f);
  }
  CHECK_FALSE(is_linear_extension(P, extension_from_order({1, 0, 2, 3})));
}

TEST_CASE("permutation statistics on explicit words") {
  Permutation pi{{3, 1, 2}};
  CHECK(inv(pi) == 2);
  CHECK(sign(pi) == 1);
  CHECK(descent_set(pi) == std::vector<int>{1});
  CHECK(maj(pi) == 1);
  Permutation rev{{4, 3, 2, 1}};
  CHECK(inv(rev) == 6);
  CHECK(maj(rev) == 6);
}

TEST_CASE("inv and maj are equidistributed over the antichain") {
  Poset A = make_poset(4, {});
  Labeling id = identity_labeling(4);
  QPolynomial factorial = q_factorial(4);
  CHECK(inv_poly(A, id) == factorial);
  CHECK(maj_poly(A, id) == factorial);
}

TEST_CASE("coefficients of inv_poly sum to the extension count") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Poset P = random_poset(6, 0.3, rng);
    Labeling om = random_labeling(6, rng);
    CHECK(inv_poly(P, om).at_one() == count_linear_extensions(P));
  }
}

TEST_CASE("maj_poly does not depend on the choice of natural labeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Poset P = random_poset(6, 0.35, rng);
    Labeling a = random_natural_labeling(P, rng);
    Labeling b = random_natural_labeling(P, rng);
    CHECK(is_natural_labeling(P, a));
    CHECK(maj_poly(P, a) == maj_poly(P, b));
  }
}

TEST_CASE("natural poset sweep visits each representative once") {
  static const long long expected[] = {1, 1, 2, 7, 40, 357};
  for (int n = 0; n <= 5; ++n) {
    long long count = 0;
    std::set<std::vector<std::pair<int, int>>> seen;
    for_each_natural_poset(n, [&](const Poset& P) {
      ++count;
      CHECK(is_natural_labeling(P, identity_labeling(n)));
      CHECK(seen.insert(P.covers()).second);
    });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("sign balance agrees with the inversion polynomial at -1") {
  for_each_natural_poset(5, [&](const Poset& P) {
    bool zero = inv_poly(P, natural_labeling(P)).at_minus_one() == 0;
    CHECK(is_sign_balanced(P) == zero);
  });
}

TEST_CASE("broad base condition forces sign balance") {
  for (int n = 2; n <= 6; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      if (broad_base_hypothesis(P)) CHECK(is_sign_balanced(P));
    });
}

TEST_CASE("dual reverses covers and keeps the extension count") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Poset P = random_poset(6, 0.3, rng);
    Poset D = P.dual();
    CHECK(D.dual() == P);
    for (auto [s, t] : P.covers()) CHECK(D.less(t, s));
    CHECK(count_linear_extensions(D) == count_linear_extensions(P));
  }
}

TEST_CASE("enumeration stops at the cap") {
  Poset A = make_poset(6, {});  // 720 extensions
  CHECK_THROWS_AS(count_linear_extensions(A, 100), CapExceeded);
  CHECK(count_linear_extensions(A, 720) == 720);
}

TEST_CASE("poset text format round trips") {
  Poset P = make_poset(4, {{0, 2}, {1, 2}, {2, 3}});
  Labeling om = make_labeling({2, 1, 3, 4});
  std::string text = format_poset(P, &om);
  PosetInput back = parse_poset_string(text);
  CHECK(back.poset == P);
  REQUIRE(back.omega.has_value());
  CHECK(back.omega->omega == om.omega);
  CHECK_THROWS_AS(parse_poset_string("garbage"), std::invalid_argument);
}
