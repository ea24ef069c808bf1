#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "imbalance/domino.hpp"
#include "imbalance/poset.hpp"
#include "imbalance/qpolynomial.hpp"
#include "imbalance/shapes.hpp"

namespace imbalance {

// W_P(-1) under a natural labeling paired with the count of ideal chains
// whose blocks are two-element chains.  The two always agree.
std::pair<Int, Int> maj_domino_check(const Poset& P, long long cap = kDefaultExtensionCap);

// For a dual-consistent poset: when C(n,2) - delta_stat(P) is odd, the poset
// must be maj-balanced.  Returns whether that implication held (vacuously
// true when the difference is even).  Throws if the dual is not consistent.
bool dual_consistent_maj_check(const Poset& P, long long cap = kDefaultExtensionCap);

// Edge-connected, simply connected finite set of unit squares, stored in
// reading order (row, then column).  Rows grow downward, columns rightward.
struct Region {
  std::vector<Cell> cells;
  int size() const { return static_cast<int>(cells.size()); }
};

// Validates distinctness, edge-connectivity, and simple connectivity (the
// complement of the cells is connected within a one-cell-padded frame).
Region make_region(std::vector<Cell> cells);
Region parse_region(const std::string& text);  // one "row col" pair per line
std::string format_region(const Region& s);
Region shape_region(const SkewShape& s);  // diagram cells as a region

// Cell poset of the region: (i,j) precedes (i,j+1) and (i+1,j).  Element k
// is the k-th cell of the region in reading order.
Poset region_poset(const Region& s);

// Labels increase along rows and decrease down columns; built bottom row
// first, left to right, so cell poset element order and labels align.
Labeling schur_labeling(const Region& s);
bool is_schur_labeling(const Region& s, const Labeling& omega);

// Streams every domino tiling of the region; dominos are reported with
// their two cells and orientation.
void for_each_region_tiling(const Region& s,
                            const std::function<void(const std::vector<BorderDomino>&)>& visit);

// (-1)^{vertical dominos} of any tiling; every tiling gives the same value
// because tilings are connected by 2x2 flips.  Throws when the region has
// odd size or admits no tiling.
int region_sign(const Region& s);

// Left side sgn(S) * W(-1) under a Schur labeling, right side the number of
// ideal chains of the cell poset with two-element chain blocks.  For an
// untilable region the sign is undefined but both sides vanish; the left
// component is then reported as the bare W(-1).
std::pair<Int, Int> schur_region_check(const Region& s, long long cap = kDefaultExtensionCap);

// True when every principal filter { s : s >= t } has all its maximal
// chains of one exact length (stronger than parity-consistency of the dual).
bool uniform_filter_chain_lengths(const Poset& P);

struct HookLengths {
  std::vector<int> values;  // one per element
};

bool is_forest(const Poset& P);  // every element has at most one upper cover

// Streams one representative of every isomorphism class of n-element
// forests, built from canonical rooted-tree encodings.
void for_each_forest(int n, const std::function<void(const Poset&)>& visit);
// h_t = size of { s : s <= t }; requires a forest.
HookLengths forest_hooks(const Poset& P);
// Standard cell hooks of a partition diagram: arm + leg + 1, reading order.
HookLengths cell_hooks(const Partition& p);

// prod_{i=1..n}(1-q^i) divided exactly by prod_i (1-q^{h_i}); throws when
// any division step is inexact (the hooks do not fit an n-element poset).
QPolynomial hook_product_poly(int n, const HookLengths& hooks);

// Value of the hook-product polynomial at q = -1: zero when fewer than
// floor(n/2) hooks are even, floor(n/2)! / prod_{h even}(h/2) otherwise.
Rational hook_imbalance(int n, const HookLengths& hooks);

// Natural labeling that finishes each subtree before its root, visiting
// subtrees consecutively; requires a forest.
Labeling postorder_labeling(const Poset& P);
// inv_poly and maj_poly coincide under a postorder labeling.
bool postorder_check(const Poset& P, long long cap = kDefaultExtensionCap);

}  // namespace imbalance
