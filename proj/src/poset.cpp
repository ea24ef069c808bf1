#include "imbalance/poset.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace imbalance {

namespace {

uint64_t bit(int e) { return uint64_t{1} << e; }

void check_element(int n, int e) {
  if (e < 0 || e >= n)
    throw std::invalid_argument("poset element " + std::to_string(e) +
                                " out of range 0.." + std::to_string(n - 1));
}

}  // namespace

Poset make_poset(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0 || n > 64) throw std::invalid_argument("poset size must be in 0..64");
  Poset P;
  P.n_ = n;
  P.up_.assign(n, 0);
  P.down_.assign(n, 0);
  for (int e = 0; e < n; ++e) P.up_[e] = bit(e);
  for (auto [s, t] : relations) {
    check_element(n, s);
    check_element(n, t);
    if (s == t) throw std::invalid_argument("self-loop at element " + std::to_string(s));
    P.up_[s] |= bit(t);
  }
  // Reachability closure over bitmask rows.
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s)
      if ((P.up_[s] >> k) & 1) P.up_[s] |= P.up_[k];
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (((P.up_[s] >> t) & 1) && ((P.up_[t] >> s) & 1))
        throw std::invalid_argument("cycle through elements " + std::to_string(s) +
                                    " and " + std::to_string(t));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      if ((P.up_[s] >> t) & 1) P.down_[t] |= bit(s);
  // t covers s iff the closed interval [s, t] is exactly {s, t}.
  P.upper_covers_.assign(n, {});
  P.lower_covers_.assign(n, {});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && ((P.up_[s] >> t) & 1) &&
          std::popcount(P.up_[s] & P.down_[t]) == 2) {
        P.covers_.emplace_back(s, t);
        P.upper_covers_[s].push_back(t);
        P.lower_covers_[t].push_back(s);
      }
  std::sort(P.covers_.begin(), P.covers_.end());
  return P;
}

uint64_t Poset::minimal_mask() const {
  uint64_t m = 0;
  for (int e = 0; e < n_; ++e)
    if (strict_down_mask(e) == 0) m |= bit(e);
  return m;
}

uint64_t Poset::maximal_mask() const {
  uint64_t m = 0;
  for (int e = 0; e < n_; ++e)
    if (strict_up_mask(e) == 0) m |= bit(e);
  return m;
}

bool Poset::is_ideal(uint64_t mask) const {
  for (uint64_t rest = mask; rest;) {
    const int e = std::countr_zero(rest);
    rest &= rest - 1;
    if (strict_down_mask(e) & ~mask) return false;
  }
  return true;
}

Poset Poset::dual() const {
  std::vector<std::pair<int, int>> rel;
  rel.reserve(covers_.size());
  for (auto [s, t] : covers_) rel.emplace_back(t, s);
  return make_poset(n_, rel);
}

std::pair<Poset, std::vector<int>> Poset::induced(uint64_t mask) const {
  std::vector<int> old_of;
  for (uint64_t rest = mask; rest;) {
    old_of.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  const int m = static_cast<int>(old_of.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && leq(old_of[i], old_of[j])) rel.emplace_back(i, j);
  return {make_poset(m, rel), std::move(old_of)};
}

Labeling make_labeling(std::vector<int> omega) {
  const int n = static_cast<int>(omega.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : omega) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("labeling is not a bijection onto 1..n");
    seen[v] = 1;
  }
  return Labeling{std::move(omega)};
}

Labeling identity_labeling(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Labeling{std::move(w)};
}

std::vector<int> LinearExtension::order() const {
  std::vector<int> ord(f.size());
  for (size_t e = 0; e < f.size(); ++e) ord[f[e] - 1] = static_cast<int>(e);
  return ord;
}

LinearExtension extension_from_order(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> f(n, 0);
  for (int i = 0; i < n; ++i) {
    const int e = order[i];
    if (e < 0 || e >= n || f[e] != 0)
      throw std::invalid_argument("order sequence is not a permutation of the elements");
    f[e] = i + 1;
  }
  return LinearExtension{std::move(f)};
}

bool is_linear_extension(const Poset& P, const LinearExtension& f) {
  if (f.size() != P.size()) return false;
  std::vector<char> seen(P.size() + 1, 0);
  for (int v : f.f) {
    if (v < 1 || v > P.size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (auto [s, t] : P.covers())
    if (f.f[s] >= f.f[t]) return false;
  return true;
}

Permutation perm_of(const LinearExtension& f, const Labeling& omega) {
  const int n = f.size();
  std::vector<int> word(n);
  for (int e = 0; e < n; ++e) word[f.f[e] - 1] = omega.omega[e];
  return Permutation{std::move(word)};
}

long long inv(const Permutation& pi) {
  long long c = 0;
  const auto& a = pi.word;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++c;
  return c;
}

int sign(const Permutation& pi) { return inv(pi) % 2 == 0 ? 1 : -1; }

std::vector<int> descent_set(const Permutation& pi) {
  std::vector<int> d;
  for (size_t i = 0; i + 1 < pi.word.size(); ++i)
    if (pi.word[i] > pi.word[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

long long maj(const Permutation& pi) {
  long long m = 0;
  for (size_t i = 0; i + 1 < pi.word.size(); ++i)
    if (pi.word[i] > pi.word[i + 1]) m += static_cast<long long>(i) + 1;
  return m;
}

void for_each_linear_extension(const Poset& P,
                               const std::function<void(const LinearExtension&)>& visit,
                               long long cap) {
  for_each_extension_order(
      P, [&](const std::vector<int>& order) { visit(extension_from_order(order)); }, cap);
}

std::vector<LinearExtension> linear_extensions(const Poset& P, long long cap) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(P, [&](const LinearExtension& f) { out.push_back(f); }, cap);
  return out;
}

long long count_linear_extensions(const Poset& P, long long cap) {
  long long c = 0;
  for_each_extension_order(P, [&](const std::vector<int>&) { ++c; }, cap);
  return c;
}

LinearExtension first_extension(const Poset& P) {
  const int n = P.size();
  std::vector<int> f(n, 0);
  uint64_t placed = 0;
  for (int d = 0; d < n; ++d) {
    for (int e = 0; e < n; ++e) {
      if ((placed >> e) & 1) continue;
      if ((P.strict_down_mask(e) & ~placed) == 0) {
        f[e] = d + 1;
        placed |= uint64_t{1} << e;
        break;
      }
    }
  }
  return LinearExtension{std::move(f)};
}

// Enumerates by sweeping each value left through the subsequence of smaller
// values, recursively for every arrangement of those smaller values.  Values
// are ranks in a fixed topological order, so the rank order is itself an
// extension and sweeps only ever test rank pairs (smaller, larger).
void varol_rotem_extensions(const Poset& P,
                            const std::function<void(const LinearExtension&)>& visit,
                            long long cap) {
  const int n = P.size();
  const std::vector<int> topo = first_extension(P).order();  // topo[rank] = element
  // rank_less[r] bit r' set when topo[r'] < topo[r] in P (only r' < r occurs).
  std::vector<uint64_t> rank_less(n, 0);
  for (int r = 0; r < n; ++r)
    for (int r2 = 0; r2 < r; ++r2)
      if (P.less(topo[r2], topo[r])) rank_less[r] |= uint64_t{1} << r2;
  std::vector<int> word(n), pos(n), order(n);
  std::iota(word.begin(), word.end(), 0);
  std::iota(pos.begin(), pos.end(), 0);
  long long seen = 0;
  auto emit = [&] {
    if (seen == cap) throw CapExceeded("linear extension cap exceeded");
    ++seen;
    for (int i = 0; i < n; ++i) order[i] = topo[word[i]];
    visit(extension_from_order(order));
  };
  auto swap_positions = [&](int i, int j) {
    std::swap(word[i], word[j]);
    pos[word[i]] = i;
    pos[word[j]] = j;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k <= 0) {
      emit();
      return;
    }
    self(self, k - 1);
    int moves = 0;
    while (true) {
      // Nearest smaller value to the left of k; larger values in between keep
      // their array positions.
      int i = pos[k] - 1;
      while (i >= 0 && word[i] > k) --i;
      if (i < 0 || ((rank_less[k] >> word[i]) & 1)) break;
      swap_positions(i, pos[k]);
      ++moves;
      self(self, k - 1);
    }
    while (moves-- > 0) {
      int i = pos[k] + 1;
      while (word[i] > k) ++i;
      swap_positions(pos[k], i);
    }
  };
  if (n == 0) {
    emit();
    return;
  }
  rec(rec, n - 1);
}

namespace {

void check_labeling(const Poset& P, const Labeling& omega) {
  if (omega.size() != P.size())
    throw std::invalid_argument("labeling size does not match poset size");
}

// Shared enumerator for the two statistics polynomials.  The visitor gets the
// label word of each extension.
template <class F>
void for_each_label_word(const Poset& P, const Labeling& omega, F&& visit, long long cap) {
  check_labeling(P, omega);
  std::vector<int> word(P.size());
  for_each_extension_order(
      P,
      [&](const std::vector<int>& order) {
        for (size_t i = 0; i < order.size(); ++i) word[i] = omega.omega[order[i]];
        visit(static_cast<const std::vector<int>&>(word));
      },
      cap);
}

}  // namespace

QPolynomial inv_poly(const Poset& P, const Labeling& omega, long long cap) {
  const int n = P.size();
  std::vector<Int> coeffs(n * (n - 1) / 2 + 1, Int(0));
  for_each_label_word(
      P, omega,
      [&](const std::vector<int>& word) {
        long long v = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (word[i] > word[j]) ++v;
        ++coeffs[v];
      },
      cap);
  return QPolynomial(std::move(coeffs));
}

QPolynomial maj_poly(const Poset& P, const Labeling& omega, long long cap) {
  const int n = P.size();
  std::vector<Int> coeffs(n * (n - 1) / 2 + 1, Int(0));
  for_each_label_word(
      P, omega,
      [&](const std::vector<int>& word) {
        long long m = 0;
        for (int i = 0; i + 1 < n; ++i)
          if (word[i] > word[i + 1]) m += i + 1;
        ++coeffs[m];
      },
      cap);
  return QPolynomial(std::move(coeffs));
}

bool is_sign_balanced(const Poset& P, long long cap) {
  return inv_poly(P, natural_labeling(P), cap).at_minus_one() == 0;
}

bool is_maj_balanced(const Poset& P, const Labeling& omega, long long cap) {
  return maj_poly(P, omega, cap).at_minus_one() == 0;
}

Labeling natural_labeling(const Poset& P) {
  const auto f = first_extension(P);
  return Labeling{f.f};
}

Labeling random_natural_labeling(const Poset& P, std::mt19937_64& rng) {
  const int n = P.size();
  std::vector<int> omega(n, 0);
  uint64_t placed = 0;
  for (int d = 0; d < n; ++d) {
    std::vector<int> mins;
    for (int e = 0; e < n; ++e)
      if (!((placed >> e) & 1) && (P.strict_down_mask(e) & ~placed) == 0)
        mins.push_back(e);
    const int e = mins[std::uniform_int_distribution<size_t>(0, mins.size() - 1)(rng)];
    omega[e] = d + 1;
    placed |= uint64_t{1} << e;
  }
  return Labeling{std::move(omega)};
}

Labeling random_labeling(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Labeling{std::move(w)};
}

bool is_natural_labeling(const Poset& P, const Labeling& omega) {
  if (omega.size() != P.size()) return false;
  for (auto [s, t] : P.covers())
    if (omega.omega[s] >= omega.omega[t]) return false;
  return true;
}

bool broad_base_hypothesis(const Poset& P) {
  const int n = P.size();
  if (n < 2) throw std::invalid_argument("hypothesis requires at least two elements");
  const uint64_t mins = P.minimal_mask();
  for (int t = 0; t < n; ++t) {
    if ((mins >> t) & 1) continue;
    if (std::popcount(P.strict_down_mask(t) & mins) < 2) return false;
  }
  return true;
}

PosetInput parse_poset(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  auto as_int = [](const std::string& s) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return v;
  };
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "n")
    throw std::invalid_argument("poset input must start with a line 'n <count>'");
  const int n = as_int(lines[0][1]);
  std::vector<std::pair<int, int>> covers;
  std::optional<Labeling> omega;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] == "omega") {
      if (omega) throw std::invalid_argument("duplicate omega line");
      if (static_cast<int>(t.size()) != n + 1)
        throw std::invalid_argument("omega line must list exactly n labels");
      std::vector<int> w;
      for (size_t j = 1; j < t.size(); ++j) w.push_back(as_int(t[j]));
      omega = make_labeling(std::move(w));
    } else if (t.size() == 2) {
      covers.emplace_back(as_int(t[0]), as_int(t[1]));
    } else {
      throw std::invalid_argument("expected a cover line '<s> <t>' or an omega line");
    }
  }
  return PosetInput{make_poset(n, covers), std::move(omega)};
}

PosetInput parse_poset_string(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string format_poset(const Poset& P, const Labeling* omega) {
  std::ostringstream os;
  os << "n " << P.size() << "\n";
  for (auto [s, t] : P.covers()) os << s << " " << t << "\n";
  if (omega) {
    os << "omega";
    for (int v : omega->omega) os << " " << v;
    os << "\n";
  }
  return os.str();
}

void for_each_natural_poset(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0 || n > 7) throw std::invalid_argument("exhaustive poset sweep supports n <= 7");
  if (n == 0) {
    visit(make_poset(0, {}));
    return;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int np = static_cast<int>(pairs.size());
  std::vector<uint64_t> row(n);
  std::vector<std::pair<int, int>> rel;
  for (uint64_t m = 0; m < (uint64_t{1} << np); ++m) {
    std::fill(row.begin(), row.end(), 0);
    for (int b = 0; b < np; ++b)
      if ((m >> b) & 1) row[pairs[b].first] |= uint64_t{1} << pairs[b].second;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (uint64_t rest = row[i]; rest;) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        if (row[j] & ~row[i]) {
          transitive = false;
          break;
        }
      }
    if (!transitive) continue;
    rel.clear();
    for (int i = 0; i < n; ++i)
      for (uint64_t rest = row[i]; rest;) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        rel.emplace_back(i, j);
      }
    visit(make_poset(n, rel));
  }
}

Poset random_poset(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(i, j);
  return make_poset(n, rel);
}

}  // namespace imbalance
