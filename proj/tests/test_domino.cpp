#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>

#include "imbalance/domino.hpp"
#include "imbalance/poset.hpp"
#include "imbalance/shapes.hpp"

using namespace imbalance;

TEST_CASE("domino tableaux exist exactly when the two-core is empty") {
  for (int n = 2; n <= 10; n += 2)
    for (const Partition& p : partitions_of(n)) {
      auto all = enumerate_sdt(p);
      CHECK((two_core(p).weight() == 0) == !all.empty());
      for (const DominoTableau& d : all) {
        REQUIRE(d.chain.size() == d.dominos.size() + 1);
        CHECK(d.chain.front() == make_partition({}));
        CHECK(d.chain.back() == p);
        for (size_t i = 0; i < d.dominos.size(); ++i)
          CHECK(d.chain[i + 1].weight() == d.chain[i].weight() + 2);
      }
    }
  CHECK_THROWS_AS(for_each_sdt(make_partition({3}), [](const DominoTableau&) {}),
                  std::invalid_argument);
}

TEST_CASE("explicit small domino counts") {
  CHECK(enumerate_sdt(make_partition({2})).size() == 1);
  CHECK(enumerate_sdt(make_partition({1, 1})).size() == 1);
  CHECK(enumerate_sdt(make_partition({2, 2})).size() == 2);
  CHECK(enumerate_sdt(make_partition({3, 2, 1})).empty());  // its own two-core
}

TEST_CASE("signed domino count equals the filling polynomial at -1") {
  for (int n = 2; n <= 8; n += 2)
    for (const Partition& p : partitions_of(n))
      CHECK(imbalance_domino(p) == shape_imbalance(p));
}

TEST_CASE("vertical statistics count dominos") {
  for (const DominoTableau& d : enumerate_sdt(make_partition({2, 2}))) {
    long long verticals = 0;
    for (const BorderDomino& dom : d.dominos) verticals += dom.vertical ? 1 : 0;
    CHECK(vdom_stat(d) == verticals);
    CHECK(ev_stat(d) <= verticals);
  }
}

TEST_CASE("poset domino chains and tilability") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + 2 * static_cast<int>(rng() % 3);
    Poset P = random_poset(n, 0.35, rng);
    Int count = count_p_domino_tableaux(P);
    CHECK((count > 0) == is_tilable(P));
    long long streamed = 0;
    for_each_p_domino_tableau(P, [&](const IdealChain& chain) {
      ++streamed;
      REQUIRE(!chain.ideals.empty());
      CHECK(chain.ideals.front() == 0);
      for (size_t i = 0; i + 1 < chain.ideals.size(); ++i) {
        uint64_t lo = chain.ideals[i], hi = chain.ideals[i + 1];
        CHECK((lo & ~hi) == 0);  // chain of ideals grows
        CHECK(P.is_ideal(hi));
      }
    });
    CHECK(Int(streamed) == count);
  }
}

TEST_CASE("odd posets use a singleton block at one position") {
  Poset C = make_poset(3, {{0, 1}, {1, 2}});
  CHECK(is_j_tilable(C, 1));
  CHECK(is_j_tilable(C, 2));
  CHECK_THROWS_AS(is_j_tilable(C, 0), std::invalid_argument);
}

TEST_CASE("block factorization reassembles the inversion polynomial") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Poset P = random_poset(n, 0.3, rng);
    Labeling om = random_natural_labeling(P, rng);
    // random composition of n
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      int take = 1 + static_cast<int>(rng() % left);
      parts.push_back(take);
      left -= take;
    }
    Composition alpha = make_composition(parts);
    CHECK(factorized_inv_poly(P, om, alpha) == inv_poly(P, om));
  }
}

TEST_CASE("chain_inv is the least inversion count over compatible extensions") {
  Poset P = make_poset(4, {{0, 1}, {2, 3}});
  Labeling om = make_labeling({1, 3, 2, 4});
  Composition alpha = make_composition({2, 2});
  for (const IdealChain& chain : alpha_chains(P, alpha)) {
    long long best = -1;
    for_each_linear_extension(P, [&](const LinearExtension& f) {
      // extension lists the chain's blocks in order?
      for (size_t b = 0; b + 1 < chain.ideals.size(); ++b) {
        uint64_t members = chain.ideals[b + 1] & ~chain.ideals[b];
        int offset = std::popcount(chain.ideals[b]);
        for (int e = 0; e < P.size(); ++e)
          if ((members >> e) & 1)
            if (f.value(e) <= offset ||
                f.value(e) > offset + std::popcount(members))
              return;
      }
      long long v = inv(perm_of(f, om));
      if (best < 0 || v < best) best = v;
    });
    CHECK(chain_inv(P, om, chain) == best);
  }
}
