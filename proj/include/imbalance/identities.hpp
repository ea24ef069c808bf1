#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imbalance/ints.hpp"
#include "imbalance/qpolynomial.hpp"
#include "imbalance/shapes.hpp"

namespace imbalance {

// Arbitrary integer tuple, possibly with repeats, zeros, or negatives.
using IntSequence = std::vector<int>;

// Number of standard tableaux of the shifted diagram of a strict partition
// (row i is indented i - 1 cells, entries increase along rows and columns).
// Computed by corner removal with memoization.
Int g_strict(const Partition& strict);

// Extension of g_strict to arbitrary tuples: trailing zeros are dropped,
// a tuple with a negative or repeated entry counts 0, and otherwise the
// value is g_strict of the sorted tuple times the sign of the sorting
// permutation.
Int g_shifted(const IntSequence& ds);

// |I_R(-1)| for the m x n rectangle: 1 when either side is 1, 0 when the
// sides have equal parity, and otherwise the shifted-tableau count of the
// staircase ((m+n-1)/2, (m+n-3)/2, ..., (|m-n|+1)/2) with min(m, n) parts.
// Returns the magnitude; the sign is not predicted here.
Int rectangle_imbalance(int m, int n);

// Three-row imbalance expressions.  Families index the parity pattern of
// (p1, p2, p3) = (2a + e1, 2b + e2, 2c + e3):
//   1: (0,0,0)  I = g(a,b,c) - g(a+1,b,c-1)
//   2: (1,0,0)  I = g(a,b,c) + g(a+1,b-1,c)
//   3: (0,1,0)  I = 0
//   4: (0,0,1)  I = -g(a+1,b-1,c) - g(a+1,b,c-1)
//   5: (1,1,0)  I = g(a+1,b,c) + g(a+1,b+1,c-1)
//   6: (1,0,1)  I = 0
//   7: (0,1,1)  I = g(a+1,b,c) + g(a,b+1,c)
//   8: (1,1,1)  I = g(a,b+1,c) + 2 g(a+1,b,c) + g(a+1,b+1,c-1)
// where g is g_shifted.  Returns {I_lambda(-1), predicted value}.  Throws
// if the resulting tuple is not weakly decreasing.
//
// The middle term of family 8 is forced: without it the right side is
// already wrong for (1,1,1), and with it the expansion is verified for
// every all-odd shape with a <= 5, so it is the unique expansion whose
// exponent shifts sum to -1.
std::pair<Int, Int> three_row_check(int a, int b, int c, int family);

// Four even rows: I_(2a,2b,2c,2d)(-1) against
//   g(a,b,c,d) - g(a+1,b,c-1,d) - g(a+1,b+1,c-1,d-1)
//     - 2 g(a+1,b,c,d-1) - g(a,b+1,c,d-1).
// The last term is forced by the data (e.g. (4,4,2,2) has I = 0, but the
// first four terms alone give -2); with it the identity holds for every
// instance with a <= 4.
std::pair<Int, Int> four_row_check(int a, int b, int c, int d);

// Sum of I_{2 mu}(-1) over partitions mu of m, where 2 mu doubles every
// part.  Expected value 1 for all m >= 0.
Int doubled_shape_sum(int m);

// Sum of (-1)^{v(lambda)} I_lambda(-1)^2 over partitions lambda of 2m.
// Expected value 0 for all m >= 1.
Int signed_square_sum(int m);

// Polynomial in the four variables q, t, x, y with integer coefficients,
// kept as a sparse exponent-vector map with no zero terms.
struct MultiPolynomial {
  // Exponents in the fixed order q, t, x, y.
  std::map<std::array<int, 4>, Int> terms;

  void add(const std::array<int, 4>& expo, const Int& coeff);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const MultiPolynomial& o) const { return terms == o.terms; }
  std::string str() const;
};

// (q + x)^k.
MultiPolynomial qx_power(int k);

// Sum over partitions lambda of n of
//   q^{v(lambda)} t^{d(lambda)} x^{v(lambda')} y^{d(lambda')} I_lambda(-1).
// Conjectured to collapse to (q + x)^{floor(n/2)}.
MultiPolynomial imbalance_generating_sum(int n);

// Sum over partitions lambda of n of (-1)^{v(lambda)} t^{d(lambda)}
// I_lambda(-1)^2, as a polynomial in t alone.  Conjectured to vanish
// whenever n is not congruent to 1 mod 4.
MultiPolynomial signed_square_t_sum(int n);

// Sum over hooks (n-k, 1^k) of q^{v(lambda)} x^{v(lambda')} I_lambda(-1),
// equal to (q + x)^{floor(n/2)}.
MultiPolynomial hook_sum(int n);

// Number of standard tableaux of the given hook shape in which every pair
// of the canonical pairing lies in one row or one column.  For n cells the
// pairing is (1,2)(3,4)... when n is even and (2,3)(4,5)... when n is odd.
// Throws if the shape is not a hook.
Int survivor_count(const Partition& hook);

// Formal integer combination of partitions with polynomial coefficients.
struct PartitionVector {
  std::map<Partition, QPolynomial> terms;

  void add(const Partition& p, const QPolynomial& coeff);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const PartitionVector& o) const { return terms == o.terms; }
  std::string str() const;
};

// Down operator: sends lambda to the sum of q^{b(t)} (lambda - t) over
// removable corners t.
PartitionVector op_down(const PartitionVector& v);

// Up operator: sends mu to the sum of q^{b(t)} (mu + t) over addable cells
// t, with b computed in the grown shape.
PartitionVector op_up(const PartitionVector& v);

// Diagonal operator: multiplies lambda by 2 (number of corners) + 1.
PartitionVector op_diag(const PartitionVector& v);

// Checks (DU + UD) s_lambda = A s_lambda at q = -1 for every partition of
// every m <= n_max.
bool du_commutator_check(int n_max);

// U(q)^n applied to the empty partition; the coefficient of lambda is the
// inversion polynomial I_lambda(q).
PartitionVector u_power_expansion(int n);

}  // namespace imbalance
