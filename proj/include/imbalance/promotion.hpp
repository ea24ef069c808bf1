#pragma once

#include <vector>

#include "imbalance/poset.hpp"

namespace imbalance {

// Maximal chain u_0 < u_1 < ... < u_l starting at f^{-1}(1) and ascending
// through covers, always to the cover with the smallest f-value.
struct PromotionChain {
  std::vector<int> elements;
  int length = 0;  // l = elements.size() - 1
};

PromotionChain promotion_chain(const Poset& P, const LinearExtension& f);

// g(t) = f(t) - 1 off the chain, g(u_i) = f(u_{i+1}) - 1 along it, g(u_l) = n.
LinearExtension promote(const Poset& P, const LinearExtension& f);

// Schuetzenberger evacuation: n rounds of promote-then-remove-top on the
// shrinking order ideals; the element removed in round k gets value n-k+1.
// An involution on the set of linear extensions.
LinearExtension evacuate(const Poset& P, const LinearExtension& f);

// Length of the longest chain in { s : s <= t }.
int nu(const Poset& P, int t);
// Sum of nu(t) over all elements.
long long gamma(const Poset& P);
// gamma of the dual poset.
long long delta_stat(const Poset& P);

// True when, for every t, all maximal chains of { s : s <= t } have lengths
// of one parity.
bool is_consistent(const Poset& P);

enum class ParityClass { reversing, preserving, neither };

// Classifies promotion by the parities of all maximal chain lengths l:
// reversing when n == l (mod 2) for every maximal chain, preserving when
// n != l (mod 2) for every one, neither when the parities are mixed.
ParityClass promotion_parity_class(const Poset& P);

// For consistent P: reversing when C(n,2) - gamma(P) is odd, preserving when
// even.  Throws std::invalid_argument on an inconsistent poset.
ParityClass evac_parity(const Poset& P);

const char* to_string(ParityClass c);

}  // namespace imbalance
