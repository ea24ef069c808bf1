#include "imbalance/identities.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace imbalance {

namespace {

bool strictly_decreasing(const std::vector<int>& parts) {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] <= parts[i + 1]) return false;
  return true;
}

Int g_strict_rec(std::vector<int> parts);

Int g_strict_memoized(const std::vector<int>& parts) {
  static std::map<std::vector<int>, Int> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
  }
  Int value = g_strict_rec(parts);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(parts, std::move(value)).first->second;
}

Int g_strict_rec(std::vector<int> parts) {
  if (parts.empty()) return 1;
  Int total = 0;
  int k = static_cast<int>(parts.size());
  for (int i = 0; i < k; ++i) {
    // Removing a cell from row i must keep the parts strictly decreasing;
    // the last row may shrink to zero and disappear.
    if (i + 1 < k && parts[i] - 1 <= parts[i + 1]) continue;
    std::vector<int> rest = parts;
    rest[i] -= 1;
    if (rest[i] == 0) rest.pop_back();
    total += g_strict_memoized(rest);
  }
  return total;
}

}  // namespace

Int g_strict(const Partition& strict) {
  if (!strictly_decreasing(strict.parts))
    throw std::invalid_argument("parts must be strictly decreasing");
  return g_strict_memoized(strict.parts);
}

Int g_shifted(const IntSequence& ds) {
  std::vector<int> parts(ds.begin(), ds.end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return 0;
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i] == parts[j]) return 0;
  }
  long long inversions = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i] < parts[j]) ++inversions;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (!parts.empty() && parts.back() == 0) parts.pop_back();
  Int value = g_strict_memoized(parts);
  return (inversions % 2 == 0) ? value : Int(-value);
}

Int rectangle_imbalance(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rectangle sides must be positive");
  if (m == 1 || n == 1) return 1;
  if (m % 2 == n % 2) return 0;
  std::vector<int> staircase;
  int top = (m + n - 1) / 2;
  for (int i = 0; i < std::min(m, n); ++i) staircase.push_back(top - i);
  return g_strict_memoized(staircase);
}

namespace {

Int g3(int x, int y, int z) { return g_shifted({x, y, z}); }

}  // namespace

std::pair<Int, Int> three_row_check(int a, int b, int c, int family) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative row parameter");
  static const int kOffsets[8][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                     {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  if (family < 1 || family > 8) throw std::invalid_argument("family must be 1..8");
  const int* e = kOffsets[family - 1];
  std::vector<int> parts = {2 * a + e[0], 2 * b + e[1], 2 * c + e[2]};
  if (parts[0] < parts[1] || parts[1] < parts[2])
    throw std::invalid_argument("rows must be weakly decreasing");
  Int lhs = shape_imbalance(make_partition(parts));
  Int rhs;
  switch (family) {
    case 1: rhs = g3(a, b, c) - g3(a + 1, b, c - 1); break;
    case 2: rhs = g3(a, b, c) + g3(a + 1, b - 1, c); break;
    case 3: rhs = 0; break;
    case 4: rhs = -g3(a + 1, b - 1, c) - g3(a + 1, b, c - 1); break;
    case 5: rhs = g3(a + 1, b, c) + g3(a + 1, b + 1, c - 1); break;
    case 6: rhs = 0; break;
    case 7: rhs = g3(a + 1, b, c) + g3(a, b + 1, c); break;
    case 8: rhs = g3(a, b + 1, c) + 2 * g3(a + 1, b, c) + g3(a + 1, b + 1, c - 1); break;
  }
  return {lhs, rhs};
}

std::pair<Int, Int> four_row_check(int a, int b, int c, int d) {
  if (d < 0 || c < d || b < c || a < b)
    throw std::invalid_argument("rows must be weakly decreasing and nonnegative");
  Int lhs = shape_imbalance(make_partition({2 * a, 2 * b, 2 * c, 2 * d}));
  Int rhs = g_shifted({a, b, c, d}) - g_shifted({a + 1, b, c - 1, d}) -
            g_shifted({a + 1, b + 1, c - 1, d - 1}) - 2 * g_shifted({a + 1, b, c, d - 1}) -
            g_shifted({a, b + 1, c, d - 1});
  return {lhs, rhs};
}

Int doubled_shape_sum(int m) {
  if (m < 0) throw std::invalid_argument("negative weight");
  Int total = 0;
  for (const Partition& mu : partitions_of(m)) {
    std::vector<int> doubled = mu.parts;
    for (int& part : doubled) part *= 2;
    total += shape_imbalance(make_partition(doubled));
  }
  return total;
}

Int signed_square_sum(int m) {
  if (m < 1) throw std::invalid_argument("weight must be positive");
  Int total = 0;
  for (const Partition& p : partitions_of(2 * m)) {
    Int imbalance = shape_imbalance(p);
    Int square = imbalance * imbalance;
    total += (v_stat(p) % 2 == 0) ? square : Int(-square);
  }
  return total;
}

void MultiPolynomial::add(const std::array<int, 4>& expo, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

std::string MultiPolynomial::str() const {
  if (terms.empty()) return "0";
  static const char* kVars[4] = {"q", "t", "x", "y"};
  std::ostringstream out;
  bool first = true;
  for (const auto& [expo, coeff] : terms) {
    Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < 4; ++v) {
      if (expo[v] == 0) continue;
      if (!vars.empty()) vars += " ";
      vars += kVars[v];
      if (expo[v] != 1) vars += "^" + std::to_string(expo[v]);
    }
    if (vars.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << " ";
      out << vars;
    }
  }
  return out.str();
}

MultiPolynomial qx_power(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  MultiPolynomial result;
  // Binomial expansion of (q + x)^k.
  Int coeff = 1;
  for (int j = 0; j <= k; ++j) {
    result.add({k - j, 0, j, 0}, coeff);
    coeff = coeff * (k - j) / (j + 1);
  }
  return result;
}

MultiPolynomial imbalance_generating_sum(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  MultiPolynomial total;
  for (const Partition& p : partitions_of(n)) {
    Int imbalance = shape_imbalance(p);
    if (imbalance == 0) continue;
    Partition q = conjugate(p);
    total.add({static_cast<int>(v_stat(p)), static_cast<int>(d_stat(p)),
               static_cast<int>(v_stat(q)), static_cast<int>(d_stat(q))},
              imbalance);
  }
  return total;
}

MultiPolynomial signed_square_t_sum(int n) {
  if (n < 1) throw std::invalid_argument("weight must be positive");
  MultiPolynomial total;
  for (const Partition& p : partitions_of(n)) {
    Int imbalance = shape_imbalance(p);
    Int square = imbalance * imbalance;
    if (v_stat(p) % 2 != 0) square = -square;
    total.add({0, static_cast<int>(d_stat(p)), 0, 0}, square);
  }
  return total;
}

MultiPolynomial hook_sum(int n) {
  if (n < 1) throw std::invalid_argument("weight must be positive");
  MultiPolynomial total;
  for (int k = 0; k < n; ++k) {
    std::vector<int> parts(1 + k, 1);
    parts[0] = n - k;
    Partition p = make_partition(parts);
    total.add({static_cast<int>(v_stat(p)), 0, static_cast<int>(v_stat(conjugate(p))), 0},
              shape_imbalance(p));
  }
  return total;
}

Int survivor_count(const Partition& hook) {
  int n = hook.weight();
  if (n < 1 || hook.part(2) > 1) throw std::invalid_argument("shape is not a hook");
  int leg = hook.rows() - 1;
  // A tableau is determined by the set of entries placed in the leg.  Entry 1
  // sits in the corner cell, which lies in both the first row and the first
  // column, so any pair containing 1 is unconstrained.  A pair of entries
  // >= 2 must go entirely to the leg or entirely to the arm.
  int pairs = 0, free_entries = 0;
  if (n % 2 == 0) {
    pairs = n / 2 - 1;  // (3,4), (5,6), ...
    free_entries = 1;   // entry 2, paired with 1
  } else {
    pairs = (n - 1) / 2;  // (2,3), (4,5), ...
  }
  std::vector<Int> by_leg_size(n, 0);
  by_leg_size[0] = 1;
  for (int p = 0; p < pairs; ++p)
    for (int s = n - 1; s >= 2; --s) by_leg_size[s] += by_leg_size[s - 2];
  for (int f = 0; f < free_entries; ++f)
    for (int s = n - 1; s >= 1; --s) by_leg_size[s] += by_leg_size[s - 1];
  return by_leg_size[leg];
}

void PartitionVector::add(const Partition& p, const QPolynomial& coeff) {
  if (coeff == QPolynomial::zero()) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == QPolynomial::zero()) terms.erase(it);
}

std::string PartitionVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, coeff] : terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coeff.str() << ") [" << format_partition(p) << "]";
  }
  return out.str();
}

PartitionVector op_down(const PartitionVector& v) {
  PartitionVector result;
  for (const auto& [p, coeff] : v.terms) {
    for (Cell t : corners(p)) {
      std::vector<int> parts = p.parts;
      parts[t.i - 1] -= 1;
      result.add(make_partition(parts),
                 coeff * QPolynomial({1}).shifted(static_cast<int>(b_stat(p, t))));
    }
  }
  return result;
}

PartitionVector op_up(const PartitionVector& v) {
  PartitionVector result;
  for (const auto& [p, coeff] : v.terms) {
    for (int i = 1; i <= p.rows() + 1; ++i) {
      if (i > 1 && p.part(i - 1) <= p.part(i)) continue;
      std::vector<int> parts = p.parts;
      if (i <= p.rows())
        parts[i - 1] += 1;
      else
        parts.push_back(1);
      Partition grown = make_partition(parts);
      Cell t{i, grown.part(i)};
      result.add(grown, coeff * QPolynomial({1}).shifted(static_cast<int>(b_stat(grown, t))));
    }
  }
  return result;
}

PartitionVector op_diag(const PartitionVector& v) {
  PartitionVector result;
  for (const auto& [p, coeff] : v.terms) {
    long long scale = 2 * static_cast<long long>(corners(p).size()) + 1;
    result.add(p, coeff * QPolynomial({scale}));
  }
  return result;
}

namespace {

std::map<Partition, Int> eval_minus_one(const PartitionVector& v) {
  std::map<Partition, Int> out;
  for (const auto& [p, coeff] : v.terms) {
    Int value = coeff.at_minus_one();
    if (value != 0) out.emplace(p, value);
  }
  return out;
}

}  // namespace

bool du_commutator_check(int n_max) {
  for (int m = 0; m <= n_max; ++m) {
    for (const Partition& p : partitions_of(m)) {
      PartitionVector unit;
      unit.add(p, QPolynomial({1}));
      PartitionVector both = op_down(op_up(unit));
      for (const auto& [q, coeff] : op_up(op_down(unit)).terms) both.add(q, coeff);
      if (eval_minus_one(both) != eval_minus_one(op_diag(unit))) return false;
    }
  }
  return true;
}

PartitionVector u_power_expansion(int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  PartitionVector v;
  v.add(Partition{}, QPolynomial({1}));
  for (int i = 0; i < n; ++i) v = op_up(v);
  return v;
}

}  // namespace imbalance
