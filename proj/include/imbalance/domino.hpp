#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "imbalance/poset.hpp"
#include "imbalance/qpolynomial.hpp"
#include "imbalance/shapes.hpp"

namespace imbalance {

// Standard domino tableau: a chain of partitions growing by one domino per
// step, with the placed dominos recorded alongside.
struct DominoTableau {
  std::vector<Partition> chain;       // chain[0] empty, chain[m] full shape
  std::vector<BorderDomino> dominos;  // dominos[i] = chain[i+1] minus chain[i]
};

// Vertical dominos of D sitting in even-numbered columns.
long long ev_stat(const DominoTableau& d);
// All vertical dominos of D.
long long vdom_stat(const DominoTableau& d);

// Streams every standard domino tableau of the shape exactly once; the
// stream is empty iff the 2-core is nonempty.  Throws on odd weight.
void for_each_sdt(const Partition& p,
                  const std::function<void(const DominoTableau&)>& visit);
std::vector<DominoTableau> enumerate_sdt(const Partition& p);

// Signed tableau count: sum of (-1)^{ev(D)} over all SDT of the shape.
Int imbalance_domino(const Partition& p);

// Chain of order ideals of a poset, recorded as bitmasks, empty first.
struct IdealChain {
  std::vector<uint64_t> ideals;
  std::vector<int> block_sizes;  // sizes of successive differences
};

struct Composition {
  std::vector<int> parts;
  int total() const;
};

Composition make_composition(std::vector<int> parts);  // positive parts

// Ideal chains whose blocks are all two-element chains of P; when the size
// is odd, one final singleton block follows the two-element blocks.
void for_each_p_domino_tableau(const Poset& P,
                               const std::function<void(const IdealChain&)>& visit);
Int count_p_domino_tableaux(const Poset& P);

// Existence of an all-2-chain-block ideal chain (size must be even).
bool is_tilable(const Poset& P);
// Odd-size variant with the singleton block at position j, 1 <= j <= m+1.
bool is_j_tilable(const Poset& P, int j);

// Ideal chains with prescribed block sizes alpha.
void for_each_alpha_chain(const Poset& P, const Composition& alpha,
                          const std::function<void(const IdealChain&)>& visit);
std::vector<IdealChain> alpha_chains(const Poset& P, const Composition& alpha);

// Inversion polynomial of the subposet induced on `mask`, with the labels
// compressed order-isomorphically to 1..popcount(mask).
QPolynomial block_inv_poly(const Poset& P, const Labeling& omega, uint64_t mask);

// Minimum inversion count over linear extensions listing the chain's blocks
// in order: cross-block inversions plus each block's internal minimum.
long long chain_inv(const Poset& P, const Labeling& omega, const IdealChain& chain);

// Reassembles the inversion polynomial block by block:
// sum over alpha-chains of q^{cross inversions} times the product of the
// blocks' compressed inversion polynomials.  Equals inv_poly(P, omega).
QPolynomial factorized_inv_poly(const Poset& P, const Labeling& omega,
                                const Composition& alpha);

}  // namespace imbalance
