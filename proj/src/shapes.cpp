#include "imbalance/shapes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "imbalance/promotion.hpp"

namespace imbalance {

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition make_partition(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string trimmed;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
  if (!trimmed.empty()) {
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t used = 0;
      int part = 0;
      try {
        part = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition part: '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("bad partition part: '" + tok + "'");
      parts.push_back(part);
    }
    if (trimmed.back() == ',') throw std::invalid_argument("trailing comma in partition");
  }
  return make_partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.rows(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out;
}

int content(Cell t) { return t.j - t.i; }

Partition conjugate(const Partition& p) {
  std::vector<int> cols(p.parts.empty() ? 0 : p.parts[0], 0);
  for (int part : p.parts)
    for (int j = 0; j < part; ++j) cols[j] += 1;
  return Partition{std::move(cols)};
}

long long content_sum(const Partition& p) {
  long long total = 0;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j) total += j - i;
  return total;
}

std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.push_back({i, j});
  return out;
}

SkewShape make_skew(Partition outer, Partition inner) {
  if (inner.rows() > outer.rows()) throw std::invalid_argument("inner shape too tall");
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.part(i) > outer.part(i))
      throw std::invalid_argument("inner shape not contained in outer");
  return SkewShape{std::move(outer), std::move(inner)};
}

SkewShape parse_shape(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) return make_skew(parse_partition(text), Partition{});
  return make_skew(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

std::string format_shape(const SkewShape& s) {
  std::string out = format_partition(s.outer);
  if (s.inner.rows() > 0) out += "/" + format_partition(s.inner);
  return out;
}

std::vector<Cell> cells(const SkewShape& s) {
  std::vector<Cell> out;
  for (int i = 1; i <= s.outer.rows(); ++i)
    for (int j = s.inner.part(i) + 1; j <= s.outer.part(i); ++j) out.push_back({i, j});
  return out;
}

std::pair<Poset, Labeling> shape_poset(const SkewShape& s) {
  const std::vector<Cell> cs = cells(s);
  const int n = static_cast<int>(cs.size());
  if (n > 64) throw std::invalid_argument("shape has more than 64 cells");
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && cs[a].i <= cs[b].i && cs[a].j <= cs[b].j) rel.emplace_back(a, b);
  return {make_poset(n, rel), identity_labeling(n)};
}

std::pair<Poset, Labeling> shape_poset(const Partition& p) {
  return shape_poset(SkewShape{p, Partition{}});
}

std::vector<BorderDomino> removable_border_dominos(const Partition& p) {
  std::vector<BorderDomino> out;
  for (int i = 1; i <= p.rows(); ++i) {
    const int len = p.part(i);
    if (len >= 2 && len - 2 >= p.part(i + 1))
      out.push_back({{i, len - 1}, {i, len}, false});
    if (len >= 1 && len == p.part(i + 1) && len - 1 >= p.part(i + 2))
      out.push_back({{i, len}, {i + 1, len}, true});
  }
  return out;
}

Partition remove_border_domino(const Partition& p, const BorderDomino& d) {
  std::vector<int> parts = p.parts;
  if (d.vertical) {
    parts[d.a.i - 1] -= 1;
    parts[d.b.i - 1] -= 1;
  } else {
    parts[d.a.i - 1] -= 2;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

Partition two_core(const Partition& p) {
  Partition cur = p;
  for (;;) {
    const std::vector<BorderDomino> moves = removable_border_dominos(cur);
    if (moves.empty()) return cur;
    cur = remove_border_domino(cur, moves.front());
  }
}

Partition two_core_random(const Partition& p, std::mt19937_64& rng) {
  Partition cur = p;
  for (;;) {
    const std::vector<BorderDomino> moves = removable_border_dominos(cur);
    if (moves.empty()) return cur;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    cur = remove_border_domino(cur, moves[pick(rng)]);
  }
}

Partition two_core_abacus(const Partition& p) {
  const int rows = p.rows();
  if (rows == 0) return Partition{};
  // Bead positions lambda_i + rows - i slide down independently on the even
  // and odd runners.
  std::vector<long long> beads(rows);
  for (int i = 1; i <= rows; ++i) beads[i - 1] = p.part(i) + rows - i;
  int count[2] = {0, 0};
  for (long long b : beads) count[b & 1] += 1;
  std::vector<long long> slid;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < count[r]; ++k) slid.push_back(r + 2 * k);
  std::sort(slid.rbegin(), slid.rend());
  std::vector<int> parts(rows);
  for (int i = 1; i <= rows; ++i) parts[i - 1] = static_cast<int>(slid[i - 1] - (rows - i));
  return make_partition(std::move(parts));
}

long long v_stat(const Partition& p) {
  long long total = 0;
  for (int col : conjugate(p).parts) total += col / 2;
  return total;
}

long long d_stat(const Partition& p) {
  const Partition conj = conjugate(p);
  long long total = 0;
  for (int i = 2; i <= conj.rows(); i += 2) total += conj.part(i) / 2;
  return total;
}

std::vector<Cell> corners(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.rows(); ++i)
    if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
  return out;
}

long long b_stat(const Partition& p, Cell t) {
  if (t.i < 1 || t.i > p.rows() || t.j != p.part(t.i) || p.part(t.i) == p.part(t.i + 1))
    throw std::invalid_argument("cell is not a removable corner");
  long long below = 0;
  for (int r = t.i + 1; r <= p.rows(); ++r) below += p.part(r);
  return below;
}

namespace {

Partition remove_corner(const Partition& p, Cell t) {
  std::vector<int> parts = p.parts;
  parts[t.i - 1] -= 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

}  // namespace

QPolynomial inv_poly_shape(const Partition& p) {
  static std::map<std::vector<int>, QPolynomial> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(p.parts);
    if (it != memo.end()) return it->second;
  }
  QPolynomial result;
  if (p.rows() == 0) {
    result = QPolynomial::one();
  } else {
    for (Cell t : corners(p))
      result += inv_poly_shape(remove_corner(p, t)).shifted(b_stat(p, t));
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(p.parts, std::move(result)).first->second;
}

Int shape_imbalance(const Partition& p) {
  static std::map<std::vector<int>, Int> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(p.parts);
    if (it != memo.end()) return it->second;
  }
  Int result = 0;
  if (p.rows() == 0) {
    result = 1;
  } else {
    for (Cell t : corners(p)) {
      const Int sub = shape_imbalance(remove_corner(p, t));
      result += (b_stat(p, t) & 1) ? -sub : sub;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(p.parts, std::move(result)).first->second;
}

QPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial out of range");
  std::vector<QPolynomial> row(k + 1, QPolynomial::zero());
  row[0] = QPolynomial::one();
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(m, k); j >= 1; --j)
      row[j] = row[j - 1] + row[j].shifted(j);  // [m j] = [m-1 j-1] + q^j [m-1 j]
  return row[k];
}

std::array<long long, 4> a_lambda_quadruple(const Partition& p) {
  const long long n = p.weight();
  auto [poset, omega] = shape_poset(p);
  (void)omega;
  long long odd_diff = 0;
  for (int part : p.parts) odd_diff += part & 1;
  for (int col : conjugate(p).parts) odd_diff -= col & 1;
  const long long core_weight = two_core(p).weight();
  return {gamma(poset), content_sum(p), odd_diff / 2, (n - core_weight) / 2};
}

namespace {

// In-place truncated series updates over exact integers.
void mul_one_plus(std::vector<Int>& c, int k) {
  for (int j = static_cast<int>(c.size()) - 1; j >= k; --j) c[j] += c[j - k];
}
void div_one_minus(std::vector<Int>& c, int k) {
  for (int j = k; j < static_cast<int>(c.size()); ++j) c[j] += c[j - k];
}
void div_one_plus(std::vector<Int>& c, int k) {
  for (int j = k; j < static_cast<int>(c.size()); ++j) c[j] -= c[j - k];
}

std::vector<Int> unit_series(int n_max) {
  std::vector<Int> c(n_max + 1, 0);
  c[0] = 1;
  return c;
}

}  // namespace

std::vector<Int> count_series(SeriesKind kind, int n_max) {
  if (n_max < 0 || n_max > 64) throw std::invalid_argument("series order out of range");
  switch (kind) {
    case SeriesKind::p_n: {
      std::vector<Int> c = unit_series(n_max);
      for (int k = 1; k <= n_max; ++k) div_one_minus(c, k);
      return c;
    }
    case SeriesKind::core_le_1: {
      std::vector<Int> c = unit_series(n_max);
      mul_one_plus(c, 1);
      for (int i = 1; 2 * i <= n_max; ++i) {
        div_one_minus(c, 2 * i);
        div_one_minus(c, 2 * i);
      }
      return c;
    }
    case SeriesKind::a_even_f: {
      std::vector<Int> c = unit_series(n_max);
      for (int i = 1; 2 * i - 1 <= n_max; ++i) mul_one_plus(c, 2 * i - 1);
      for (int i = 1; 4 * i <= n_max; ++i) div_one_minus(c, 4 * i);
      for (int i = 1; 4 * i - 2 <= n_max; ++i) {
        div_one_plus(c, 4 * i - 2);
        div_one_plus(c, 4 * i - 2);
      }
      return c;
    }
    case SeriesKind::t_n:
    case SeriesKind::g_n: {
      const std::vector<Int> p = count_series(SeriesKind::p_n, n_max);
      const std::vector<Int> f = count_series(SeriesKind::a_even_f, n_max);
      std::vector<Int> c(n_max + 1);
      for (int n = 0; n <= n_max; ++n) {
        const bool plus =
            kind == SeriesKind::t_n || (static_cast<long long>(n) * (n - 1) / 2) % 2 == 1;
        const Int num = plus ? Int(p[n] + f[n]) : Int(p[n] - f[n]);
        if (num % 2 != 0) throw std::logic_error("series parity mismatch");
        c[n] = num / 2;
      }
      return c;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

}  // namespace imbalance
