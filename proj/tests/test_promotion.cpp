#include <doctest.h>

#include <random>
#include <set>

#include "imbalance/poset.hpp"
#include "imbalance/promotion.hpp"
#include "imbalance/shapes.hpp"

using namespace imbalance;

TEST_CASE("promotion permutes the extensions") {
  for (int n = 1; n <= 5; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      std::set<std::vector<int>> images;
      long long count = 0;
      for_each_linear_extension(P, [&](const LinearExtension& f) {
        ++count;
        LinearExtension g = promote(P, f);
        CHECK(is_linear_extension(P, g));
        images.insert(g.f);
      });
      CHECK(static_cast<long long>(images.size()) == count);
    });
}

TEST_CASE("evacuation is an involution") {
  for (int n = 1; n <= 5; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      for_each_linear_extension(P, [&](const LinearExtension& f) {
        CHECK(evacuate(P, evacuate(P, f)) == f);
      });
    });
}

TEST_CASE("promotion of the chain rotates the unique extension") {
  Poset C = make_poset(3, {{0, 1}, {1, 2}});
  LinearExtension f = first_extension(C);
  CHECK(promote(C, f) == f);  // single extension must be fixed
}

TEST_CASE("parity class of promotion is obeyed extension by extension") {
  for (int n = 2; n <= 5; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      ParityClass cls = promotion_parity_class(P);
      Labeling om = natural_labeling(P);
      for_each_linear_extension(P, [&](const LinearExtension& f) {
        long long before = inv(perm_of(f, om));
        long long after = inv(perm_of(promote(P, f), om));
        if (cls == ParityClass::reversing) CHECK((before ^ after) % 2 == 1);
        if (cls == ParityClass::preserving) CHECK((before ^ after) % 2 == 0);
      });
    });
}

TEST_CASE("evacuation parity follows the gamma criterion on consistent posets") {
  for (int n = 2; n <= 5; ++n)
    for_each_natural_poset(n, [&](const Poset& P) {
      if (!is_consistent(P)) return;
      ParityClass cls = evac_parity(P);
      bool flip = cls == ParityClass::reversing;
      CHECK(((static_cast<long long>(n) * (n - 1) / 2 - gamma(P)) % 2 != 0) == flip);
      Labeling om = natural_labeling(P);
      for_each_linear_extension(P, [&](const LinearExtension& f) {
        long long before = inv(perm_of(f, om));
        long long after = inv(perm_of(evacuate(P, f), om));
        CHECK(((before ^ after) & 1) == (flip ? 1 : 0));
      });
    });
}

TEST_CASE("evac_parity requires consistency") {
  // maximal chains below the top have lengths 2 and 1: mixed parity
  Poset P = make_poset(4, {{0, 1}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_consistent(P));
  CHECK_THROWS_AS(evac_parity(P), std::invalid_argument);
}

TEST_CASE("cell posets of shapes are consistent") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(is_consistent(shape_poset(p).first));
}

TEST_CASE("nu, gamma and delta on explicit posets") {
  Poset C = make_poset(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(nu(C, 0) == 0);
  CHECK(nu(C, 3) == 3);
  CHECK(gamma(C) == 6);
  CHECK(delta_stat(C) == gamma(C.dual()));
  Poset A = make_poset(4, {});
  CHECK(gamma(A) == 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Poset P = random_poset(6, 0.3, rng);
    CHECK(delta_stat(P) == gamma(P.dual()));
  }
}

TEST_CASE("promotion chain ascends through covers from the first element") {
  Poset P = make_poset(4, {{0, 1}, {0, 2}, {1, 3}});
  for_each_linear_extension(P, [&](const LinearExtension& f) {
    PromotionChain chain = promotion_chain(P, f);
    REQUIRE(!chain.elements.empty());
    CHECK(f.value(chain.elements.front()) == 1);
    for (size_t i = 0; i + 1 < chain.elements.size(); ++i)
      CHECK(P.less(chain.elements[i], chain.elements[i + 1]));
    CHECK(chain.length == static_cast<int>(chain.elements.size()) - 1);
  });
}
