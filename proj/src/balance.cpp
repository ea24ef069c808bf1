#include "imbalance/balance.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "imbalance/promotion.hpp"

namespace imbalance {

std::pair<Int, Int> maj_domino_check(const Poset& P, long long cap) {
  const Int w = maj_poly(P, natural_labeling(P), cap).at_minus_one();
  return {w, count_p_domino_tableaux(P)};
}

bool dual_consistent_maj_check(const Poset& P, long long cap) {
  if (!is_consistent(P.dual())) throw std::invalid_argument("poset is not dual consistent");
  const long long n = P.size();
  if ((n * (n - 1) / 2 - delta_stat(P)) % 2 == 0) return true;
  return maj_poly(P, natural_labeling(P), cap).at_minus_one() == 0;
}

Region make_region(std::vector<Cell> cells) {
  if (cells.empty()) throw std::invalid_argument("region is empty");
  std::sort(cells.begin(), cells.end(),
            [](Cell a, Cell b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  for (size_t k = 1; k < cells.size(); ++k)
    if (cells[k] == cells[k - 1]) throw std::invalid_argument("duplicate region cell");

  std::set<std::pair<int, int>> in;
  for (Cell c : cells) in.insert({c.i, c.j});
  auto inside = [&](int i, int j) { return in.count({i, j}) > 0; };

  // Edge connectivity of the cells.
  std::vector<std::pair<int, int>> stack{{cells[0].i, cells[0].j}};
  std::set<std::pair<int, int>> seen{stack[0]};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      if (inside(i + di, j + dj) && seen.insert({i + di, j + dj}).second)
        stack.push_back({i + di, j + dj});
    }
  }
  if (seen.size() != cells.size()) throw std::invalid_argument("region is not edge-connected");

  // Simple connectivity: the complement inside a one-cell-padded frame must
  // be a single flood-fill component reachable from the frame corner.
  int lo_i = cells[0].i, hi_i = cells[0].i, lo_j = cells[0].j, hi_j = cells[0].j;
  for (Cell c : cells) {
    lo_i = std::min(lo_i, c.i);
    hi_i = std::max(hi_i, c.i);
    lo_j = std::min(lo_j, c.j);
    hi_j = std::max(hi_j, c.j);
  }
  lo_i -= 1, hi_i += 1, lo_j -= 1, hi_j += 1;
  std::set<std::pair<int, int>> outside{{lo_i, lo_j}};
  stack.assign(1, {lo_i, lo_j});
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const int ni = i + di, nj = j + dj;
      if (ni < lo_i || ni > hi_i || nj < lo_j || nj > hi_j) continue;
      if (inside(ni, nj)) continue;
      if (outside.insert({ni, nj}).second) stack.push_back({ni, nj});
    }
  }
  const size_t frame_area = static_cast<size_t>(hi_i - lo_i + 1) * (hi_j - lo_j + 1);
  if (outside.size() != frame_area - cells.size())
    throw std::invalid_argument("region is not simply connected");

  return Region{std::move(cells)};
}

Region parse_region(const std::string& text) {
  std::vector<Cell> cells;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j)) throw std::invalid_argument("region line needs two integers");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("region line has trailing tokens");
    cells.push_back({i, j});
  }
  return make_region(std::move(cells));
}

std::string format_region(const Region& s) {
  std::string out;
  for (Cell c : s.cells)
    out += std::to_string(c.i) + " " + std::to_string(c.j) + "\n";
  return out;
}

Region shape_region(const SkewShape& s) { return make_region(cells(s)); }

namespace {

std::map<std::pair<int, int>, int> cell_index(const Region& s) {
  std::map<std::pair<int, int>, int> idx;
  for (int k = 0; k < s.size(); ++k) idx[{s.cells[k].i, s.cells[k].j}] = k;
  return idx;
}

}  // namespace

Poset region_poset(const Region& s) {
  const auto idx = cell_index(s);
  std::vector<std::pair<int, int>> rel;
  for (int k = 0; k < s.size(); ++k) {
    const Cell c = s.cells[k];
    for (auto [di, dj] : {std::pair{0, 1}, {1, 0}}) {
      auto it = idx.find({c.i + di, c.j + dj});
      if (it != idx.end()) rel.emplace_back(k, it->second);
    }
  }
  return make_poset(s.size(), rel);
}

Labeling schur_labeling(const Region& s) {
  std::vector<int> order(s.size());
  for (int k = 0; k < s.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cell ca = s.cells[a], cb = s.cells[b];
    return ca.i != cb.i ? ca.i > cb.i : ca.j < cb.j;
  });
  std::vector<int> omega(s.size());
  for (int rank = 0; rank < s.size(); ++rank) omega[order[rank]] = rank + 1;
  return make_labeling(std::move(omega));
}

bool is_schur_labeling(const Region& s, const Labeling& omega) {
  if (omega.size() != s.size()) return false;
  const auto idx = cell_index(s);
  for (int k = 0; k < s.size(); ++k) {
    const Cell c = s.cells[k];
    auto right = idx.find({c.i, c.j + 1});
    if (right != idx.end() && !(omega.omega[k] < omega.omega[right->second])) return false;
    auto below = idx.find({c.i + 1, c.j});
    if (below != idx.end() && !(omega.omega[k] > omega.omega[below->second])) return false;
  }
  return true;
}

void for_each_region_tiling(const Region& s,
                            const std::function<void(const std::vector<BorderDomino>&)>& visit) {
  if (s.size() % 2 != 0) return;
  const auto idx = cell_index(s);
  std::vector<bool> used(s.size(), false);
  std::vector<BorderDomino> tiling;
  auto rec = [&](auto&& self, int from) -> void {
    int k = from;
    while (k < s.size() && used[k]) ++k;
    if (k == s.size()) {
      visit(tiling);
      return;
    }
    const Cell c = s.cells[k];
    used[k] = true;
    // Horizontal partner first, then vertical; the first uncovered cell in
    // reading order has no free partner above or to its left.
    auto right = idx.find({c.i, c.j + 1});
    if (right != idx.end() && !used[right->second]) {
      used[right->second] = true;
      tiling.push_back({c, {c.i, c.j + 1}, false});
      self(self, k + 1);
      tiling.pop_back();
      used[right->second] = false;
    }
    auto below = idx.find({c.i + 1, c.j});
    if (below != idx.end() && !used[below->second]) {
      used[below->second] = true;
      tiling.push_back({c, {c.i + 1, c.j}, true});
      self(self, k + 1);
      tiling.pop_back();
      used[below->second] = false;
    }
    used[k] = false;
  };
  rec(rec, 0);
}

int region_sign(const Region& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("region has odd size");
  const auto idx = cell_index(s);
  std::vector<bool> used(s.size(), false);
  // First tiling in the horizontal-before-vertical search order.
  auto rec = [&](auto&& self, int from, int verticals) -> int {
    int k = from;
    while (k < s.size() && used[k]) ++k;
    if (k == s.size()) return verticals % 2 ? -1 : 1;
    const Cell c = s.cells[k];
    used[k] = true;
    int sign = 0;
    auto right = idx.find({c.i, c.j + 1});
    if (right != idx.end() && !used[right->second]) {
      used[right->second] = true;
      sign = self(self, k + 1, verticals);
      used[right->second] = false;
    }
    auto below = idx.find({c.i + 1, c.j});
    if (sign == 0 && below != idx.end() && !used[below->second]) {
      used[below->second] = true;
      sign = self(self, k + 1, verticals + 1);
      used[below->second] = false;
    }
    used[k] = false;
    return sign;
  };
  const int sign = rec(rec, 0, 0);
  if (sign == 0) throw std::invalid_argument("region admits no domino tiling");
  return sign;
}

std::pair<Int, Int> schur_region_check(const Region& s, long long cap) {
  if (s.size() % 2 != 0) throw std::invalid_argument("region has odd size");
  const Poset P = region_poset(s);
  const Int w = maj_poly(P, schur_labeling(s), cap).at_minus_one();
  const Int tableaux = count_p_domino_tableaux(P);
  int sign = 1;
  try {
    sign = region_sign(s);
  } catch (const std::invalid_argument&) {
    // Untilable: no ideal chain of domino blocks exists either, so both
    // sides are zero and the sign never enters.
  }
  return {sign * w, tableaux};
}

bool uniform_filter_chain_lengths(const Poset& P) {
  const Poset dual = P.dual();
  // lengths[t] = bitmask of maximal chain lengths of the dual ideal at t.
  std::vector<uint64_t> lengths(dual.size(), 0);
  for (int e : first_extension(dual).order()) {
    uint64_t set = 0;
    for (int s : dual.lower_covers(e)) set |= lengths[s] << 1;
    lengths[e] = set ? set : 1;
    if (set & (set - 1)) return false;
  }
  return true;
}

bool is_forest(const Poset& P) {
  for (int e = 0; e < P.size(); ++e)
    if (P.upper_covers(e).size() > 1) return false;
  return true;
}

namespace {

// Sorted canonical encodings "(...)" of rooted trees, by node count.
using TreeTable = std::vector<std::vector<std::string>>;

// Emits every multiset of trees with `remaining` total nodes as a sequence
// that is non-increasing under the (size, encoding) order, so each forest
// appears exactly once.
void forest_lists(const TreeTable& table, int remaining, int bound_size,
                  const std::string& bound_enc, std::vector<std::string>& cur,
                  const std::function<void(const std::vector<std::string>&)>& emit) {
  if (remaining == 0) {
    emit(cur);
    return;
  }
  for (int sz = std::min(remaining, bound_size); sz >= 1; --sz)
    for (const std::string& t : table[sz]) {
      if (sz == bound_size && t > bound_enc) continue;
      cur.push_back(t);
      forest_lists(table, remaining - sz, sz, t, cur, emit);
      cur.pop_back();
    }
}

const TreeTable& rooted_tree_table(int n) {
  static TreeTable table = {{}};  // table[0] empty
  static std::mutex table_mutex;
  std::lock_guard<std::mutex> lock(table_mutex);
  while (static_cast<int>(table.size()) <= n) {
    int sz = static_cast<int>(table.size());
    std::vector<std::string> out;
    std::vector<std::string> cur;
    forest_lists(table, sz - 1, sz - 1, "\x7f", cur,
                 [&](const std::vector<std::string>& kids) {
                   std::string enc = "(";
                   for (const std::string& k : kids) enc += k;
                   enc += ")";
                   out.push_back(enc);
                 });
    if (sz == 1) out = {"()"};
    std::sort(out.begin(), out.end());
    table.push_back(std::move(out));
  }
  return table;
}

// Parses a sequence of tree encodings into covers child -> parent.
Poset forest_poset(const std::vector<std::string>& trees) {
  std::vector<std::pair<int, int>> rels;
  int next = 0;
  for (const std::string& enc : trees) {
    std::vector<int> stack;
    for (char ch : enc) {
      if (ch == '(') {
        int id = next++;
        if (!stack.empty()) rels.emplace_back(id, stack.back());
        stack.push_back(id);
      } else {
        stack.pop_back();
      }
    }
  }
  return make_poset(next, rels);
}

}  // namespace

void for_each_forest(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n == 0) {
    visit(make_poset(0, {}));
    return;
  }
  const TreeTable& table = rooted_tree_table(n);
  std::vector<std::string> cur;
  forest_lists(table, n, n, "\x7f", cur,
               [&](const std::vector<std::string>& trees) { visit(forest_poset(trees)); });
}

HookLengths forest_hooks(const Poset& P) {
  if (!is_forest(P)) throw std::invalid_argument("poset is not a forest");
  HookLengths h;
  h.values.reserve(P.size());
  for (int e = 0; e < P.size(); ++e)
    h.values.push_back(std::popcount(P.down_mask(e)));
  return h;
}

HookLengths cell_hooks(const Partition& p) {
  const Partition conj = conjugate(p);
  HookLengths h;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      h.values.push_back((p.part(i) - j) + (conj.part(j) - i) + 1);
  return h;
}

QPolynomial hook_product_poly(int n, const HookLengths& hooks) {
  if (static_cast<int>(hooks.values.size()) != n)
    throw std::invalid_argument("hook count differs from element count");
  QPolynomial w = QPolynomial::one();
  for (int i = 1; i <= n; ++i)
    w = w - w.shifted(i);  // multiply by (1 - q^i)
  for (int h : hooks.values) {
    if (h <= 0) throw std::invalid_argument("hook lengths must be positive");
    auto quotient = w.divided_by_one_minus_q_pow(h);
    if (!quotient) throw std::invalid_argument("hook product does not divide evenly");
    w = *quotient;
  }
  return w;
}

Rational hook_imbalance(int n, const HookLengths& hooks) {
  if (static_cast<int>(hooks.values.size()) != n)
    throw std::invalid_argument("hook count differs from element count");
  std::vector<int> even;
  for (int h : hooks.values) {
    if (h <= 0) throw std::invalid_argument("hook lengths must be positive");
    if (h % 2 == 0) even.push_back(h);
  }
  const int half = n / 2;
  if (static_cast<int>(even.size()) > half)
    throw std::invalid_argument("more even hooks than an n-element poset allows");
  if (static_cast<int>(even.size()) < half) return Rational(0);
  Rational value = 1;
  for (int k = 2; k <= half; ++k) value *= k;
  for (int h : even) value /= h / 2;
  if (denominator(value) != 1)
    throw std::invalid_argument("hook multiset gives a non-integer value");
  return value;
}

Labeling postorder_labeling(const Poset& P) {
  if (!is_forest(P)) throw std::invalid_argument("poset is not a forest");
  std::vector<int> omega(P.size(), 0);
  int next = 1;
  auto assign = [&](auto&& self, int e) -> void {
    for (int s : P.lower_covers(e)) self(self, s);
    omega[e] = next++;
  };
  for (uint64_t roots = P.maximal_mask(); roots; roots &= roots - 1)
    assign(assign, std::countr_zero(roots));
  return make_labeling(std::move(omega));
}

bool postorder_check(const Poset& P, long long cap) {
  const Labeling omega = postorder_labeling(P);
  return inv_poly(P, omega, cap) == maj_poly(P, omega, cap);
}

}  // namespace imbalance
