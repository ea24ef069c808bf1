#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "imbalance/ints.hpp"
#include "imbalance/qpolynomial.hpp"

namespace imbalance {

// Finite poset on elements 0..n-1 with n <= 64.  Holds the full order
// relation as bitmask rows together with the canonical transitive reduction.
// Immutable after construction.
class Poset {
 public:
  Poset() = default;  // empty poset

  int size() const { return n_; }
  bool leq(int s, int t) const { return (up_[s] >> t) & 1; }
  bool less(int s, int t) const { return s != t && leq(s, t); }
  // Cover pairs (s, t) with t covering s, sorted lexicographically.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  uint64_t down_mask(int t) const { return down_[t]; }          // { s : s <= t }
  uint64_t up_mask(int s) const { return up_[s]; }              // { t : s <= t }
  uint64_t strict_down_mask(int t) const { return down_[t] & ~(uint64_t{1} << t); }
  uint64_t strict_up_mask(int s) const { return up_[s] & ~(uint64_t{1} << s); }
  const std::vector<int>& upper_covers(int s) const { return upper_covers_[s]; }
  const std::vector<int>& lower_covers(int t) const { return lower_covers_[t]; }
  uint64_t all_mask() const { return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1; }
  uint64_t minimal_mask() const;
  uint64_t maximal_mask() const;
  bool is_ideal(uint64_t mask) const;  // downward closed

  Poset dual() const;
  // Induced subposet on the set bits of `mask`; new element i is the i-th
  // lowest set bit.  Returns the subposet and the new-index -> old-element map.
  std::pair<Poset, std::vector<int>> induced(uint64_t mask) const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  friend Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations);
  int n_ = 0;
  std::vector<uint64_t> up_, down_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upper_covers_, lower_covers_;
};

// Builds a poset from arbitrary strict relation pairs (s, t) meaning s < t.
// The transitive closure and reduction are recomputed; redundant pairs are
// fine.  Throws std::invalid_argument on out-of-range indices, self-loops,
// cycles, or n outside 0..64.
Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations);

// Bijection elements -> {1..n}.  omega[e] is the label of element e.
struct Labeling {
  std::vector<int> omega;
  int label(int e) const { return omega[e]; }
  int size() const { return static_cast<int>(omega.size()); }
};

Labeling make_labeling(std::vector<int> omega);  // validates bijectivity
Labeling identity_labeling(int n);

// Order-preserving bijection P -> {1..n}; f[e] is the position of element e.
struct LinearExtension {
  std::vector<int> f;
  int size() const { return static_cast<int>(f.size()); }
  int value(int e) const { return f[e]; }
  // Elements listed as f^{-1}(1), ..., f^{-1}(n).
  std::vector<int> order() const;
  bool operator==(const LinearExtension& o) const { return f == o.f; }
};

LinearExtension extension_from_order(const std::vector<int>& order);
bool is_linear_extension(const Poset& P, const LinearExtension& f);

// Word a_1 ... a_n with a_i in {1..n}.
struct Permutation {
  std::vector<int> word;
  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const Permutation& o) const { return word == o.word; }
};

// a_i = omega(f^{-1}(i)).
Permutation perm_of(const LinearExtension& f, const Labeling& omega);
long long inv(const Permutation& pi);
int sign(const Permutation& pi);                 // (-1)^inv
std::vector<int> descent_set(const Permutation& pi);  // 1-based positions
long long maj(const Permutation& pi);

// Streams every linear extension exactly once, in lexicographic order of the
// element sequence f^{-1}(1..n).  The visitor receives that sequence and must
// not retain the reference.  Throws CapExceeded when more than `cap`
// extensions would be produced.
template <class F>
void for_each_extension_order(const Poset& P, F&& visit,
                              long long cap = kDefaultExtensionCap) {
  const int n = P.size();
  std::vector<int> order(n);
  if (n == 0) {
    visit(static_cast<const std::vector<int>&>(order));
    return;
  }
  long long seen = 0;
  const uint64_t all = P.all_mask();
  auto rec = [&](auto&& self, uint64_t placed, int depth) -> void {
    if (depth == n) {
      if (seen == cap) throw CapExceeded("linear extension cap exceeded");
      ++seen;
      visit(static_cast<const std::vector<int>&>(order));
      return;
    }
    uint64_t avail = all & ~placed;
    while (avail) {
      const int e = std::countr_zero(avail);
      avail &= avail - 1;
      if ((P.strict_down_mask(e) & ~placed) == 0) {
        order[depth] = e;
        self(self, placed | (uint64_t{1} << e), depth + 1);
      }
    }
  };
  rec(rec, 0, 0);
}

void for_each_linear_extension(const Poset& P,
                               const std::function<void(const LinearExtension&)>& visit,
                               long long cap = kDefaultExtensionCap);
std::vector<LinearExtension> linear_extensions(const Poset& P,
                                               long long cap = kDefaultExtensionCap);
long long count_linear_extensions(const Poset& P, long long cap = kDefaultExtensionCap);
LinearExtension first_extension(const Poset& P);  // lex-first order

// Alternative enumerator (adjacent-transposition scheme); emits extensions in
// its own order.  Exists to cross-check the lexicographic backtracker.
void varol_rotem_extensions(const Poset& P,
                            const std::function<void(const LinearExtension&)>& visit,
                            long long cap = kDefaultExtensionCap);

// Generating function sum_f q^inv(perm_of(f, omega)).
QPolynomial inv_poly(const Poset& P, const Labeling& omega,
                     long long cap = kDefaultExtensionCap);
// Generating function sum_f q^maj(perm_of(f, omega)).
QPolynomial maj_poly(const Poset& P, const Labeling& omega,
                     long long cap = kDefaultExtensionCap);

// Labeling-independent: evaluated with a natural labeling.
bool is_sign_balanced(const Poset& P, long long cap = kDefaultExtensionCap);
bool is_maj_balanced(const Poset& P, const Labeling& omega,
                     long long cap = kDefaultExtensionCap);

// Natural labeling (a linear extension used as labeling), smallest-index
// tie-break.  maj_poly is independent of which natural labeling is chosen.
Labeling natural_labeling(const Poset& P);
Labeling random_natural_labeling(const Poset& P, std::mt19937_64& rng);
Labeling random_labeling(int n, std::mt19937_64& rng);
bool is_natural_labeling(const Poset& P, const Labeling& omega);

// Sufficient condition for sign-balance: n >= 2 and every nonminimal element
// lies above at least two minimal elements.  Throws on n < 2.
bool broad_base_hypothesis(const Poset& P);

// Text format: "n <count>" first, one "<s> <t>" cover per line, optional
// "omega <n labels>" line; '#' starts a comment.
struct PosetInput {
  Poset poset;
  std::optional<Labeling> omega;
};
PosetInput parse_poset(std::istream& in);
PosetInput parse_poset_string(const std::string& text);
std::string format_poset(const Poset& P, const Labeling* omega = nullptr);

// Every partial order on {0..n-1} contained in the natural order, each
// visited once.  Covers every isomorphism class of n-element posets, and each
// visited poset is naturally labeled by the identity.  Requires n <= 7.
void for_each_natural_poset(int n, const std::function<void(const Poset&)>& visit);

// Independent pairs (i, j), i < j, kept with probability p, then closed
// transitively.  The result respects the natural order of the indices.
Poset random_poset(int n, double p, std::mt19937_64& rng);

}  // namespace imbalance
