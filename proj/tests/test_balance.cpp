#include <doctest.h>

#include <random>
#include <set>

#include "imbalance/balance.hpp"
#include "imbalance/poset.hpp"
#include "imbalance/promotion.hpp"
#include "imbalance/shapes.hpp"

using namespace imbalance;

TEST_CASE("maj value at -1 counts poset domino tableaux") {
  for (int n = 1; n <= 4; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      auto [w, tableaux] = maj_domino_check(P);
      CHECK(w == tableaux);
      CHECK(w == maj_poly(P, natural_labeling(P)).at_minus_one());
    });
}

TEST_CASE("region validation") {
  CHECK_NOTHROW(make_region({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  // disconnected
  CHECK_THROWS_AS(make_region({{1, 1}, {3, 3}}), std::invalid_argument);
  // duplicate cell
  CHECK_THROWS_AS(make_region({{1, 1}, {1, 1}}), std::invalid_argument);
  // ring with a hole is connected but not simply connected
  CHECK_THROWS_AS(make_region({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3},
                               {3, 1}, {3, 2}, {3, 3}}),
                  std::invalid_argument);
}

TEST_CASE("region tilings of small rectangles") {
  auto tilings = [](const Region& r) {
    long long c = 0;
    for_each_region_tiling(r, [&](const std::vector<BorderDomino>&) { ++c; });
    return c;
  };
  Region square = make_region({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(tilings(square) == 2);
  Region two_by_three =
      make_region({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  CHECK(tilings(two_by_three) == 3);
  Region stairs = make_region({{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}});
  CHECK(tilings(stairs) == 0);  // checkerboard count is 4 against 2
}

TEST_CASE("region poset reads cells in reading order") {
  Region r = make_region({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  Poset P = region_poset(r);
  CHECK(P.size() == 4);
  CHECK(P.less(0, 1));  // right neighbor
  CHECK(P.less(0, 2));  // down neighbor
  CHECK(P.less(0, 3));
  CHECK_FALSE(P.leq(1, 2));
}

TEST_CASE("signed count matches chain count on every region labeling check") {
  Region r = make_region({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  auto [signed_w, chains] = schur_region_check(r);
  CHECK(signed_w == chains);
  CHECK(chains == 2);
}

TEST_CASE("forest recognizer and enumerator") {
  CHECK(is_forest(make_poset(3, {{0, 2}, {1, 2}})));  // two leaves joining up is fine
  CHECK_FALSE(is_forest(make_poset(3, {{2, 0}, {2, 1}})));  // element with two upper covers
  CHECK(is_forest(make_poset(3, {{0, 1}, {1, 2}})));
  static const long long counts[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 0; n <= 8; ++n) {
    long long seen = 0;
    std::set<std::vector<std::pair<int, int>>> distinct;
    for_each_forest(n, [&](const Poset& P) {
      ++seen;
      CHECK(P.size() == n);
      CHECK(is_forest(P));
      distinct.insert(P.covers());
    });
    CHECK(seen == counts[n]);
    CHECK(static_cast<long long>(distinct.size()) == seen);
  }
}

TEST_CASE("forest hooks are ideal sizes") {
  // chain: hooks 1..n; antichain: all hooks 1
  Poset chain = make_poset(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<int> got = forest_hooks(chain).values;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<int>{1, 2, 3, 4});
  Poset anti = make_poset(4, {});
  CHECK(forest_hooks(anti).values == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("hook product closed form on explicit posets") {
  Poset chain = make_poset(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(hook_product_poly(4, forest_hooks(chain)) == QPolynomial::one());
  Poset anti = make_poset(4, {});
  CHECK(hook_product_poly(4, forest_hooks(anti)) == q_factorial(4));
  // non-hook multiset leaves a remainder
  HookLengths bogus{{5, 5, 5, 5}};
  CHECK_THROWS_AS(hook_product_poly(4, bogus), std::invalid_argument);
}

TEST_CASE("hook imbalance closed form") {
  // chain of 4: hooks 1,2,3,4, two even hooks = floor(4/2): value 2!/(1*2) = 1
  Poset chain = make_poset(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(hook_imbalance(4, forest_hooks(chain)) == Rational(1));
  // antichain of 4: no even hooks < 2 required: value 0
  Poset anti = make_poset(4, {});
  CHECK(hook_imbalance(4, forest_hooks(anti)) == Rational(0));
  // more even hooks than floor(n/2) cannot come from a poset weight function
  HookLengths too_even{{2, 2}};
  CHECK_THROWS_AS(hook_imbalance(2, too_even), std::invalid_argument);
}

TEST_CASE("postorder labels equalize inv and maj on forests") {
  for (int n = 1; n <= 6; ++n)
    for_each_forest(n, [&](const Poset& P) {
      Labeling post = postorder_labeling(P);
      CHECK(is_natural_labeling(P, post));
      CHECK(inv_poly(P, post) == maj_poly(P, post));
      CHECK(postorder_check(P));
    });
}

TEST_CASE("dual consistency maj criterion on explicit posets") {
  // the cell poset of a shape is consistent both ways
  Poset P = shape_poset(make_partition({2, 2})).first;
  CHECK(is_consistent(P.dual()));
  CHECK(dual_consistent_maj_check(P));
}

TEST_CASE("region labels increase along rows and decrease down columns") {
  Region r = make_region({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  Labeling om = schur_labeling(r);
  CHECK(is_schur_labeling(r, om));
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b) {
      if (r.cells[a].i == r.cells[b].i && r.cells[a].j + 1 == r.cells[b].j)
        CHECK(om.label(a) < om.label(b));
      if (r.cells[a].j == r.cells[b].j && r.cells[a].i + 1 == r.cells[b].i)
        CHECK(om.label(a) > om.label(b));
    }
}

TEST_CASE("uniform filter chain lengths is stronger than dual consistency") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Poset P = random_poset(6, 0.3, rng);
    if (uniform_filter_chain_lengths(P)) CHECK(is_consistent(P.dual()));
  }
}
