#include "imbalance/domino.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace imbalance {

long long ev_stat(const DominoTableau& d) {
  long long count = 0;
  for (const BorderDomino& dom : d.dominos)
    if (dom.vertical && dom.a.j % 2 == 0) ++count;
  return count;
}

long long vdom_stat(const DominoTableau& d) {
  long long count = 0;
  for (const BorderDomino& dom : d.dominos)
    if (dom.vertical) ++count;
  return count;
}

void for_each_sdt(const Partition& p,
                  const std::function<void(const DominoTableau&)>& visit) {
  if (p.weight() % 2 != 0) throw std::invalid_argument("shape weight must be even");
  const int steps = p.weight() / 2;
  // Peel border dominos off the full shape; each removal sequence read
  // backwards is one tableau.
  std::vector<Partition> chain(steps + 1);
  std::vector<BorderDomino> dominos(steps);
  chain[steps] = p;
  auto rec = [&](auto&& self, int level) -> void {
    if (level == 0) {
      visit(DominoTableau{chain, dominos});
      return;
    }
    for (const BorderDomino& d : removable_border_dominos(chain[level])) {
      chain[level - 1] = remove_border_domino(chain[level], d);
      dominos[level - 1] = d;
      self(self, level - 1);
    }
  };
  rec(rec, steps);
}

std::vector<DominoTableau> enumerate_sdt(const Partition& p) {
  std::vector<DominoTableau> out;
  for_each_sdt(p, [&](const DominoTableau& d) { out.push_back(d); });
  return out;
}

Int imbalance_domino(const Partition& p) {
  if (p.weight() % 2 != 0) throw std::invalid_argument("shape weight must be even");
  Int total = 0;
  // Signs only, so walk the removal tree without materializing chains.
  auto rec = [&](auto&& self, const Partition& cur, int ev_parity) -> void {
    if (cur.rows() == 0) {
      total += ev_parity ? -1 : 1;
      return;
    }
    for (const BorderDomino& d : removable_border_dominos(cur)) {
      const int flip = (d.vertical && d.a.j % 2 == 0) ? 1 : 0;
      self(self, remove_border_domino(cur, d), ev_parity ^ flip);
    }
  };
  rec(rec, p, 0);
  return total;
}

long long r_stat(const Partition& p) {
  if (two_core(p).rows() != 0)
    throw std::invalid_argument("statistic requires an empty 2-core");
  long long best = -1;
  auto rec = [&](auto&& self, const Partition& cur, long long ev) -> void {
    if (cur.rows() == 0) {
      best = std::max(best, ev);
      return;
    }
    for (const BorderDomino& d : removable_border_dominos(cur)) {
      const int gain = (d.vertical && d.a.j % 2 == 0) ? 1 : 0;
      self(self, remove_border_domino(cur, d), ev + gain);
    }
  };
  rec(rec, p, 0);
  return best;
}

int Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Composition make_composition(std::vector<int> parts) {
  for (int part : parts)
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
  return Composition{std::move(parts)};
}

namespace {

// Two-element chain blocks {s, t} with s < t in P that extend the ideal
// `mask` to another ideal: every strict predecessor of s is already in, and
// every strict predecessor of t is in mask or is s itself.
template <class F>
void for_each_chain_block(const Poset& P, uint64_t mask, F&& take) {
  const int n = P.size();
  for (int s = 0; s < n; ++s) {
    if ((mask >> s) & 1) continue;
    if (P.strict_down_mask(s) & ~mask) continue;
    for (int t = 0; t < n; ++t) {
      if (t == s || ((mask >> t) & 1)) continue;
      if (!P.less(s, t)) continue;
      if (P.strict_down_mask(t) & ~(mask | (uint64_t{1} << s))) continue;
      take(s, t);
    }
  }
}

}  // namespace

void for_each_p_domino_tableau(const Poset& P,
                               const std::function<void(const IdealChain&)>& visit) {
  const int n = P.size();
  const int blocks = n / 2;
  IdealChain chain;
  chain.ideals.assign(1, 0);
  auto rec = [&](auto&& self, uint64_t mask, int placed) -> void {
    if (placed == blocks) {
      if (n % 2 == 1) {
        // The one remaining element is maximal, so appending it keeps the
        // chain a chain of ideals.
        chain.ideals.push_back(P.all_mask());
        chain.block_sizes.push_back(1);
        visit(chain);
        chain.ideals.pop_back();
        chain.block_sizes.pop_back();
      } else {
        visit(chain);
      }
      return;
    }
    for_each_chain_block(P, mask, [&](int s, int t) {
      const uint64_t next = mask | (uint64_t{1} << s) | (uint64_t{1} << t);
      chain.ideals.push_back(next);
      chain.block_sizes.push_back(2);
      self(self, next, placed + 1);
      chain.ideals.pop_back();
      chain.block_sizes.pop_back();
    });
  };
  rec(rec, 0, 0);
}

Int count_p_domino_tableaux(const Poset& P) {
  const int n = P.size();
  std::unordered_map<uint64_t, Int> memo;
  auto rec = [&](auto&& self, uint64_t mask) -> Int {
    if (std::popcount(mask) >= n - 1) return 1;  // even: full; odd: singleton left
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for_each_chain_block(P, mask, [&](int s, int t) {
      total += self(self, mask | (uint64_t{1} << s) | (uint64_t{1} << t));
    });
    return memo.emplace(mask, std::move(total)).first->second;
  };
  return rec(rec, 0);
}

bool is_tilable(const Poset& P) {
  if (P.size() % 2 != 0) throw std::invalid_argument("tilability needs even size");
  std::unordered_map<uint64_t, bool> memo;
  auto rec = [&](auto&& self, uint64_t mask) -> bool {
    if (mask == P.all_mask()) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for_each_chain_block(P, mask, [&](int s, int t) {
      if (!ok) ok = self(self, mask | (uint64_t{1} << s) | (uint64_t{1} << t));
    });
    memo.emplace(mask, ok);
    return ok;
  };
  return rec(rec, 0);
}

bool is_j_tilable(const Poset& P, int j) {
  const int n = P.size();
  if (n % 2 != 1 || n < 3) throw std::invalid_argument("j-tilability needs odd size >= 3");
  const int m = n / 2;
  if (j < 1 || j > m + 1) throw std::invalid_argument("singleton position out of range");
  // popcount(mask) determines the next block index: the singleton has been
  // placed already iff the count is odd.
  std::unordered_map<uint64_t, bool> memo;
  auto rec = [&](auto&& self, uint64_t mask) -> bool {
    if (mask == P.all_mask()) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int placed = std::popcount(mask);
    const int next = placed % 2 ? (placed + 1) / 2 + 1 : placed / 2 + 1;
    bool ok = false;
    if (next == j && placed % 2 == 0) {
      for (int e = 0; e < n && !ok; ++e) {
        if ((mask >> e) & 1) continue;
        if (P.strict_down_mask(e) & ~mask) continue;
        ok = self(self, mask | (uint64_t{1} << e));
      }
    } else {
      for_each_chain_block(P, mask, [&](int s, int t) {
        if (!ok) ok = self(self, mask | (uint64_t{1} << s) | (uint64_t{1} << t));
      });
    }
    memo.emplace(mask, ok);
    return ok;
  };
  return rec(rec, 0);
}

void for_each_alpha_chain(const Poset& P, const Composition& alpha,
                          const std::function<void(const IdealChain&)>& visit) {
  if (alpha.total() != P.size())
    throw std::invalid_argument("composition does not sum to the poset size");
  const int k = static_cast<int>(alpha.parts.size());
  IdealChain chain;
  chain.ideals.assign(1, 0);
  chain.block_sizes = alpha.parts;
  auto rec = [&](auto&& self, uint64_t mask, int block) -> void {
    if (block == k) {
      visit(chain);
      return;
    }
    // Choose the block as any subset of currently-minimal-closed elements:
    // extend one element at a time, each with all predecessors inside.
    const int want = alpha.parts[block];
    std::vector<int> chosen;
    auto grow = [&](auto&& again, uint64_t cur, int from) -> void {
      if (static_cast<int>(chosen.size()) == want) {
        chain.ideals.push_back(cur);
        self(self, cur, block + 1);
        chain.ideals.pop_back();
        return;
      }
      for (int e = from; e < P.size(); ++e) {
        if ((cur >> e) & 1) continue;
        if (P.strict_down_mask(e) & ~cur) continue;
        chosen.push_back(e);
        again(again, cur | (uint64_t{1} << e), e + 1);
        chosen.pop_back();
      }
    };
    grow(grow, mask, 0);
  };
  rec(rec, 0, 0);
}

std::vector<IdealChain> alpha_chains(const Poset& P, const Composition& alpha) {
  std::vector<IdealChain> out;
  for_each_alpha_chain(P, alpha, [&](const IdealChain& c) { out.push_back(c); });
  return out;
}

QPolynomial block_inv_poly(const Poset& P, const Labeling& omega, uint64_t mask) {
  auto [sub, old_of] = P.induced(mask);
  const int m = sub.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return omega.omega[old_of[a]] < omega.omega[old_of[b]];
  });
  std::vector<int> compressed(m);
  for (int rank = 0; rank < m; ++rank) compressed[order[rank]] = rank + 1;
  return inv_poly(sub, make_labeling(std::move(compressed)));
}

namespace {

long long cross_inversions(const Poset& P, const Labeling& omega,
                           const IdealChain& chain) {
  long long cross = 0;
  for (size_t a = 1; a < chain.ideals.size(); ++a) {
    const uint64_t block = chain.ideals[a] & ~chain.ideals[a - 1];
    const uint64_t later = P.all_mask() & ~chain.ideals[a];
    for (uint64_t sm = block; sm; sm &= sm - 1) {
      const int s = std::countr_zero(sm);
      for (uint64_t tm = later; tm; tm &= tm - 1)
        if (omega.omega[s] > omega.omega[std::countr_zero(tm)]) ++cross;
    }
  }
  return cross;
}

}  // namespace

long long chain_inv(const Poset& P, const Labeling& omega, const IdealChain& chain) {
  long long total = cross_inversions(P, omega, chain);
  for (size_t a = 1; a < chain.ideals.size(); ++a) {
    const uint64_t block = chain.ideals[a] & ~chain.ideals[a - 1];
    total += block_inv_poly(P, omega, block).min_degree();
  }
  return total;
}

QPolynomial factorized_inv_poly(const Poset& P, const Labeling& omega,
                                const Composition& alpha) {
  QPolynomial total;
  for_each_alpha_chain(P, alpha, [&](const IdealChain& chain) {
    QPolynomial term = QPolynomial::one().shifted(cross_inversions(P, omega, chain));
    for (size_t a = 1; a < chain.ideals.size(); ++a)
      term = term * block_inv_poly(P, omega, chain.ideals[a] & ~chain.ideals[a - 1]);
    total += term;
  });
  return total;
}

}  // namespace imbalance
