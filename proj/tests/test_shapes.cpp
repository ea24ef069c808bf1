#include <doctest.h>

#include <random>

#include "imbalance/poset.hpp"
#include "imbalance/shapes.hpp"
#include "oracles.hpp"

using namespace imbalance;

TEST_CASE("partition construction and conjugation") {
  Partition p = make_partition({4, 2, 1, 0, 0});
  CHECK(p.rows() == 3);
  CHECK(p.weight() == 7);
  CHECK(p.part(1) == 4);
  CHECK(p.part(4) == 0);  // off the end reads as zero
  CHECK(conjugate(p) == make_partition({3, 2, 1, 1}));
  CHECK(conjugate(conjugate(p)) == p);
  CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("partitions_of counts and contents") {
  static const size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n <= 9; ++n) {
    auto shapes = partitions_of(n);
    CHECK(shapes.size() == counts[n]);
    for (const Partition& p : shapes) CHECK(p.weight() == n);
  }
}

TEST_CASE("corners are exactly the removable cells") {
  for (const Partition& p : partitions_of(7))
    for (const Cell& t : corners(p)) {
      CHECK(p.part(t.i) == t.j);
      CHECK(p.part(t.i + 1) < t.j);
      std::vector<int> smaller;
      for (int r = 1; r <= p.rows(); ++r) smaller.push_back(p.part(r) - (r == t.i ? 1 : 0));
      CHECK_NOTHROW(make_partition(smaller));
    }
}

TEST_CASE("all three two-core routes agree") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) {
      Partition core = two_core(p);
      CHECK(core == two_core_abacus(p));
      CHECK(core == two_core_random(p, rng));
      // 2-cores are staircases
      for (int r = 1; r <= core.rows(); ++r) CHECK(core.part(r) == core.rows() - r + 1);
    }
}

TEST_CASE("cell poset extensions are standard fillings") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto [P, omega] = shape_poset(p);
      CHECK(is_natural_labeling(P, omega));
      CHECK(count_linear_extensions(P) == oracle::filling_count(p.parts));
    }
}

TEST_CASE("corner recursion reproduces the brute-force filling polynomial") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      std::vector<Int> coeffs;
      for (long long c : oracle::filling_inv_coeffs(p.parts)) coeffs.emplace_back(c);
      CHECK(inv_poly_shape(p) == QPolynomial(coeffs));
    }
}

TEST_CASE("corner recursion agrees with the labeled cell poset") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto [P, omega] = shape_poset(p);
      CHECK(inv_poly_shape(p) == inv_poly(P, omega));
    }
}

TEST_CASE("q-binomial specializations") {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      QPolynomial b = q_binomial(n, k);
      CHECK(b == q_binomial(n, n - k));
      // degree k(n-k), palindromic coefficients
      CHECK(b.degree() == k * (n - k));
      CHECK(b.palindromic(k * (n - k)));
    }
  CHECK(q_binomial(4, 2) == QPolynomial({1, 1, 2, 1, 1}));
  CHECK(q_binomial(6, 3).at_one() == 20);
}

TEST_CASE("q-binomial at -1 vanishes only on the odd-by-odd cases") {
  // evaluation collapses to an ordinary binomial on floored halves
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return Int(0);
    Int r = 1;
    for (long long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      Int got = q_binomial(n, k).at_minus_one();
      Int want = (n % 2 == 0 && k % 2 == 1) ? Int(0) : binom(n / 2, k / 2);
      CHECK(got == want);
    }
}

TEST_CASE("b statistic counts the cells below a corner's row start") {
  Partition p = make_partition({3, 3, 1});
  // corner (2,3): rows beyond row 2 contribute their full lengths
  CHECK(b_stat(p, Cell{2, 3}) == 1);
  CHECK(b_stat(p, Cell{3, 1}) == 0);
}

TEST_CASE("quadruple of parity statistics agrees mod 2") {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto q = a_lambda_quadruple(p);
      for (int i = 1; i < 4; ++i) CHECK((q[0] & 1) == (q[i] & 1));
    }
}

TEST_CASE("partition counting series matches direct enumeration") {
  auto series = count_series(SeriesKind::p_n, 16);
  for (int n = 0; n <= 16; ++n) CHECK(series[n] == Int(partitions_of(n).size()));
}

TEST_CASE("parse_partition accepts comma separated parts") {
  CHECK(parse_partition("4,2,1") == make_partition({4, 2, 1}));
  CHECK(parse_partition("") == make_partition({}));
  CHECK_THROWS_AS(parse_partition("2,4"), std::invalid_argument);
}
