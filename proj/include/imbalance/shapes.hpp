#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "imbalance/poset.hpp"
#include "imbalance/qpolynomial.hpp"

namespace imbalance {

// Integer partition in canonical form: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts[i - 1] : 0;
  }
  int weight() const;  // |lambda|
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// Validates weak decrease, allows and strips trailing zeros.
Partition make_partition(std::vector<int> parts);
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

// Diagram cell, row i and column j both 1-based.
struct Cell {
  int i = 0;
  int j = 0;
  bool operator==(const Cell& o) const { return i == o.i && j == o.j; }
};

int content(Cell t);  // j - i

Partition conjugate(const Partition& p);
long long content_sum(const Partition& p);
std::vector<Cell> cells(const Partition& p);  // reading order

struct SkewShape {
  Partition outer, inner;
  int weight() const { return outer.weight() - inner.weight(); }
};

SkewShape make_skew(Partition outer, Partition inner);  // inner must fit
SkewShape parse_shape(const std::string& text);  // "4,3,1" or "4,3,1/2,1"
std::string format_shape(const SkewShape& s);
std::vector<Cell> cells(const SkewShape& s);

// Poset of diagram cells ordered coordinatewise, elements indexed in reading
// order, with the reading-order labeling (element k carries label k+1).
std::pair<Poset, Labeling> shape_poset(const SkewShape& s);
std::pair<Poset, Labeling> shape_poset(const Partition& p);

// Edge-adjacent cell pair whose removal leaves a partition, i.e. a two-cell
// filter of the diagram.  `a` is the left or upper cell.
struct BorderDomino {
  Cell a, b;
  bool vertical = false;
};

std::vector<BorderDomino> removable_border_dominos(const Partition& p);
Partition remove_border_domino(const Partition& p, const BorderDomino& d);

// Repeated removal of two-cell filters (border dominos) down to the unique
// staircase core.
Partition two_core(const Partition& p);
// Same, but removing a uniformly random removable domino each step.
Partition two_core_random(const Partition& p, std::mt19937_64& rng);
// Independent route: beta-numbers slid down two abacus runners.
Partition two_core_abacus(const Partition& p);

// Total vertical dominos a diagram can hold, column by column.
long long v_stat(const Partition& p);
// Same sum restricted to even-indexed columns of the conjugate.
long long d_stat(const Partition& p);
// Maximum count of even-column vertical dominos over all standard domino
// tableaux of shape p.  Defined only when the 2-core is empty.
long long r_stat(const Partition& p);

std::vector<Cell> corners(const Partition& p);
// Number of diagram squares in rows strictly below the corner t.
long long b_stat(const Partition& p, Cell t);

// Sign-imbalance generating polynomial of the shape: sum of q^inv over
// standard tableaux, computed by the corner recursion
// I_p(q) = sum over corners t of q^{b(t)} I_{p-t}(q).  Memoized.
QPolynomial inv_poly_shape(const Partition& p);
// I_p(-1) through a leaner memo over specialized values.
Int shape_imbalance(const Partition& p);

QPolynomial q_binomial(int n, int k);  // Gaussian binomial, 0 <= k <= n

// (gamma(P_p), content sum, (odd parts of p minus odd parts of p')/2,
//  (weight minus 2-core weight)/2).  All four share one parity.
std::array<long long, 4> a_lambda_quadruple(const Partition& p);

enum class SeriesKind { core_le_1, a_even_f, t_n, g_n, p_n };

// Coefficients 0..n_max of the named counting series, exact integers:
//   p_n        partitions of n
//   core_le_1  partitions whose 2-core has at most one cell
//   a_even_f   f(n) with sum f(n)x^n = prod (1+x^(2i-1)) /
//              ((1-x^(4i)) (1+x^(4i-2))^2)
//   t_n        (p(n)+f(n))/2, partitions with even content-sum parity
//   g_n        partitions whose cell poset is evacuation parity-reversing
std::vector<Int> count_series(SeriesKind kind, int n_max);

// All partitions of n, lexicographically decreasing ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace imbalance
