// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion runs at full declared scale against the verification
// module or a local brute-force oracle, with exact (zero tolerance) checks.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "imbalance/cli.hpp"
#include "imbalance/identities.hpp"
#include "imbalance/qpolynomial.hpp"
#include "imbalance/shapes.hpp"
#include "imbalance/verify.hpp"
#include "oracles.hpp"

using namespace imbalance;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, what.c_str());
  if (!pass) ++failures;
}

bool suite_passes(const std::string& name,
                  const std::map<std::string, long long>& params = {}) {
  VerifyOptions opt;
  opt.params = params;
  return run_suite(name, opt).passed();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // 1: the corner recursion against an independent brute-force enumeration
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 0; n <= 9 && ok; ++n)
      for (const Partition& p : partitions_of(n)) {
        std::vector<Int> coeffs;
        for (long long c : oracle::filling_inv_coeffs(p.parts)) coeffs.emplace_back(c);
        if (inv_poly_shape(p) != QPolynomial(coeffs)) {
          ok = false;
          break;
        }
      }
    double secs = seconds_since(t0);
    report(1, ok && secs < 60.0,
           "shape polynomial equals brute-force tableau enumeration, all shapes up to "
           "weight 9 (" + std::to_string(secs).substr(0, 5) + " s)");
  }

  report(2, suite_passes("domino-formula", {{"weight", 10}}),
         "signed domino tableau count equals the polynomial at -1, even weights to 10");

  report(3, suite_passes("doubled-sum", {{"max-m", 6}}),
         "signed sum over doubled shapes collapses to 1, m = 1..6");

  report(4, suite_passes("signed-square", {{"max-m", 5}}),
         "alternating square-shape sum vanishes, m = 1..5");

  report(5,
         suite_passes("gen-sum", {{"n", 10}}) && suite_passes("signed-square-t", {{"n", 10}}),
         "four-variable generating sum collapses to (q + x)^(n/2) and the signed "
         "t-polynomial vanishes off 1 mod 4, n <= 10");

  report(6, suite_passes("hook-sum", {{"n", 12}}),
         "hook-shape sum matches (q + x)^(n/2) by both the q-binomial route and the "
         "pairing survivor count, n <= 12");

  // 7: closed-form rectangle magnitudes, cross-checked against brute force
  {
    bool ok = suite_passes("rectangles", {{"area", 12}});
    for (int m = 1; m <= 12 && ok; ++m)
      for (int n = 1; m * n <= 12 && ok; ++n) {
        auto coeffs = oracle::filling_inv_coeffs(std::vector<int>(m, n));
        long long at = 0;
        for (size_t i = 0; i < coeffs.size(); ++i)
          at += (i % 2 == 0) ? coeffs[i] : -coeffs[i];
        long long mag = at < 0 ? -at : at;
        if (Int(mag) != rectangle_imbalance(m, n)) ok = false;
      }
    report(7, ok, "rectangle imbalance magnitudes, all m x n with mn <= 12, "
                  "including brute-force cross-check");
  }

  report(8,
         suite_passes("three-row", {{"weight", 18}}) &&
             suite_passes("four-row", {{"weight", 16}}),
         "three-row families to weight 18 and even four-row shapes to weight 16");

  report(9, suite_passes("promotion", {{"n", 6}, {"samples", 100}, {"sample-n", 7}}),
         "promotion bijective, double evacuation trivial, parity classes hold: all "
         "posets n <= 6 plus 100 random n = 7");

  report(10,
         suite_passes("chain-balance", {{"samples", 500}, {"max-n", 8}}) &&
             suite_passes("consistent-balance", {{"samples", 500}, {"max-n", 8}}),
         "uniform chain parity and the consistent gamma criterion force sign "
         "balance, 500 random posets n <= 8 each");

  report(11, suite_passes("maj-domino", {{"n", 5}, {"samples", 200}, {"sample-n", 8}}),
         "maj polynomial at -1 counts domino chains: all posets n <= 5 plus 200 "
         "random n <= 8");

  report(12, suite_passes("region-schur", {{"frame", 4}, {"size", 10}}),
         "tiling sign well-defined and signed count matches domino chains, every "
         "simply connected even region of size <= 10 in a 4 x 4 frame");

  report(13,
         suite_passes("forest-hooks", {{"n", 8}}) && suite_passes("shape-hooks", {{"n", 8}}),
         "hook products reproduce maj polynomials and their -1 values, all forests "
         "and all dual cell posets with n <= 8");

  report(14, suite_passes("postorder", {{"n", 8}}),
         "postorder labels equalize the inversion and major polynomials, all "
         "forests n <= 8");

  report(15, suite_passes("operators", {{"n", 6}, {"power", 8}}),
         "lowering/raising commutator at q = -1 and power expansion against the "
         "corner recursion, shapes to weight 6 and powers to 8");

  report(16,
         suite_passes("series-core", {{"n", 20}}) && suite_passes("series-parity", {{"n", 16}}) &&
             suite_passes("series-evac", {{"n", 8}}) &&
             suite_passes("series-quadruple", {{"n", 12}}),
         "counting series match direct enumeration: small cores to 20, parity "
         "counts to 16, evacuation-reversing shapes to 8, parity quadruple to 12");

  // 17: the packaged full run finishes quickly and cleanly
  {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"verify", "all", "--small"}, out, err);
    double secs = seconds_since(t0);
    report(17, code == 0 && secs < 600.0,
           "verify all --small exits 0 in under ten minutes (" +
               std::to_string(secs).substr(0, 5) + " s)");
  }

  std::printf("%d of 17 criteria pass\n", 17 - failures);
  return failures == 0 ? 0 : 1;
}
