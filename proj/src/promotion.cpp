#include "imbalance/promotion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace imbalance {

namespace {

// Promotion restricted to the elements of `mask`, which must be an order
// ideal of P so that its cover relation is the restriction of P's.  `f`
// holds values 1..m on the mask elements and is ignored elsewhere.

std::vector<int> chain_in_mask(const Poset& P, uint64_t mask,
                               const std::vector<int>& f) {
  int start = -1;
  for (uint64_t m = mask; m; m &= m - 1) {
    const int e = std::countr_zero(m);
    if (f[e] == 1) {
      start = e;
      break;
    }
  }
  std::vector<int> chain{start};
  for (;;) {
    int best = -1;
    for (int u : P.upper_covers(chain.back())) {
      if (!((mask >> u) & 1)) continue;
      if (best < 0 || f[u] < f[best]) best = u;
    }
    if (best < 0) break;
    chain.push_back(best);
  }
  return chain;
}

void promote_in_mask(const Poset& P, uint64_t mask, std::vector<int>& f) {
  const std::vector<int> chain = chain_in_mask(P, mask, f);
  const int m = std::popcount(mask);
  for (uint64_t rest = mask; rest; rest &= rest - 1) f[std::countr_zero(rest)] -= 1;
  for (size_t i = 0; i + 1 < chain.size(); ++i) f[chain[i]] = f[chain[i + 1]];
  f[chain.back()] = m;
}

void require_extension(const Poset& P, const LinearExtension& f) {
  if (!is_linear_extension(P, f)) throw std::invalid_argument("not a linear extension");
}

}  // namespace

PromotionChain promotion_chain(const Poset& P, const LinearExtension& f) {
  require_extension(P, f);
  if (P.size() == 0) throw std::invalid_argument("empty poset has no promotion chain");
  PromotionChain c;
  c.elements = chain_in_mask(P, P.all_mask(), f.f);
  c.length = static_cast<int>(c.elements.size()) - 1;
  return c;
}

LinearExtension promote(const Poset& P, const LinearExtension& f) {
  require_extension(P, f);
  if (P.size() == 0) return f;
  LinearExtension g = f;
  promote_in_mask(P, P.all_mask(), g.f);
  return g;
}

LinearExtension evacuate(const Poset& P, const LinearExtension& f) {
  require_extension(P, f);
  const int n = P.size();
  LinearExtension out;
  out.f.assign(n, 0);
  std::vector<int> g = f.f;
  uint64_t mask = P.all_mask();
  for (int k = 1; k <= n; ++k) {
    // Round k: the top of the promoted extension leaves the poset and
    // receives evacuation value n-k+1.  The remaining mask stays an ideal
    // because only maximal elements are removed.
    promote_in_mask(P, mask, g);
    const int m = std::popcount(mask);
    int top = -1;
    for (uint64_t rest = mask; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      if (g[e] == m) {
        top = e;
        break;
      }
    }
    out.f[top] = n - k + 1;
    mask &= ~(uint64_t{1} << top);
  }
  return out;
}

int nu(const Poset& P, int t) {
  const uint64_t down = P.strict_down_mask(t);
  std::vector<int> longest(P.size(), 0);
  // Elements below t in any lex-first extension order appear before t.
  for (int e : first_extension(P).order()) {
    if (e != t && !((down >> e) & 1)) continue;
    int best = 0;
    for (int s : P.lower_covers(e))
      if ((down >> s) & 1) best = std::max(best, longest[s] + 1);
    longest[e] = best;
    if (e == t) return best;
  }
  return 0;  // n == 0 only
}

long long gamma(const Poset& P) {
  std::vector<int> longest(P.size(), 0);
  long long total = 0;
  for (int e : first_extension(P).order()) {
    int best = 0;
    for (int s : P.lower_covers(e)) best = std::max(best, longest[s] + 1);
    longest[e] = best;
    total += best;
  }
  return total;
}

long long delta_stat(const Poset& P) { return gamma(P.dual()); }

namespace {

// parities[t] = set of parities (bit 0, bit 1) of maximal chain lengths of
// the ideal { s : s <= t }.  Such chains run from a minimal element up to t.
std::vector<unsigned> chain_parity_sets(const Poset& P) {
  std::vector<unsigned> parities(P.size(), 0);
  for (int e : first_extension(P).order()) {
    unsigned p = 0;
    for (int s : P.lower_covers(e)) {
      const unsigned ps = parities[s];
      p |= ((ps & 1) << 1) | ((ps >> 1) & 1);  // lengths shift by one
    }
    parities[e] = p ? p : 1u;  // minimal element: single chain of length 0
  }
  return parities;
}

}  // namespace

bool is_consistent(const Poset& P) {
  for (unsigned p : chain_parity_sets(P))
    if (p == 3) return false;
  return true;
}

ParityClass promotion_parity_class(const Poset& P) {
  const int n = P.size();
  if (n == 0) return ParityClass::preserving;
  const std::vector<unsigned> parities = chain_parity_sets(P);
  unsigned seen = 0;
  for (uint64_t m = P.maximal_mask(); m; m &= m - 1)
    seen |= parities[std::countr_zero(m)];
  const unsigned same = 1u << (n & 1);  // parity bit for l == n (mod 2)
  if (seen == same) return ParityClass::reversing;
  if (seen == (same ^ 3u)) return ParityClass::preserving;
  return ParityClass::neither;
}

ParityClass evac_parity(const Poset& P) {
  if (!is_consistent(P)) throw std::invalid_argument("poset is not consistent");
  const long long n = P.size();
  const long long diff = n * (n - 1) / 2 - gamma(P);
  return (diff & 1) ? ParityClass::reversing : ParityClass::preserving;
}

const char* to_string(ParityClass c) {
  switch (c) {
    case ParityClass::reversing: return "reversing";
    case ParityClass::preserving: return "preserving";
    case ParityClass::neither: return "neither";
  }
  return "?";
}

}  // namespace imbalance
