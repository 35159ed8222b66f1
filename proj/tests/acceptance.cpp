// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "osp/bott_plethysm.hpp"
#include "osp/orbits.hpp"
#include "osp/rep_theory.hpp"
#include "osp/schubert.hpp"
#include "osp/tensor_oracle.hpp"

using namespace osp;

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

std::string str(int v) { return std::to_string(v); }

// ---- brute-force group: permutations of letters first..first+2m-1 commuting with
// the involution x -> 2n+1-x.
using Perm = std::vector<int>;

std::vector<Perm> centralizer_of_involution(int first, int size, int n) {
  std::vector<Perm> out;
  Perm p(size);
  std::iota(p.begin(), p.end(), first);
  do {
    bool ok = true;
    for (int i = 0; i < size && ok; ++i) ok = p[2 * n + 1 - first - i - first] == 2 * n + 1 - p[i];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPermutation> brute_even(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : centralizer_of_involution(1, 2 * n, n)) out.emplace_back(Family::Even, n, Perm(p.begin(), p.begin() + n));
  std::sort(out.begin(), out.end());
  return out;
}

// Odd family: W(C_{n+1}) on letters 0..2n+1, window at positions 0..n.
std::vector<SignedPermutation> brute_odd_ambient(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : centralizer_of_involution(0, 2 * n + 2, n)) out.emplace_back(Family::Odd, n, Perm(p.begin(), p.begin() + n + 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> brute_odd_cells(int n) {
  std::vector<SignedPermutation> out;
  for (auto& w : brute_odd_ambient(n)) {
    const auto& win = w.window();
    if (std::find(win.begin(), win.end(), 2 * n + 1) == win.end()) out.push_back(w);
  }
  return out;
}

// ---- Bruhat order by its chain definition, closed transitively over the whole group.
// Reflections act on values: swap letters a <-> b together with their opposites.
std::map<std::vector<int>, std::set<std::vector<int>>> chain_order(const std::vector<SignedPermutation>& group) {
  const auto space = group.front().letters();
  std::vector<std::pair<int, int>> swaps;
  for (int a = space.first; a <= space.last; ++a)
    for (int b = a + 1; b <= space.last; ++b)
      if (b == space.opposite(a) || (a < space.opposite(a) && b != space.opposite(a) && a <= space.n))
        swaps.emplace_back(a, b);
  std::map<std::vector<int>, std::vector<std::vector<int>>> up;
  std::map<std::vector<int>, int> len;
  for (const auto& w : group) len[w.window()] = length(w);
  for (const auto& w : group) {
    for (auto [a, b] : swaps) {
      std::vector<int> moved = w.window();
      for (auto& x : moved) {
        const int oa = space.opposite(a), ob = space.opposite(b);
        if (x == a) x = b;
        else if (x == b) x = a;
        else if (b != oa && x == oa) x = ob;
        else if (b != oa && x == ob) x = oa;
      }
      if (len.count(moved) && len[moved] > len[w.window()]) up[w.window()].push_back(moved);
    }
  }
  std::map<std::vector<int>, std::set<std::vector<int>>> above;
  for (const auto& w : group) {
    auto& seen = above[w.window()];
    std::vector<std::vector<int>> stack{w.window()};
    seen.insert(w.window());
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (const auto& nxt : up[cur])
        if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return above;
}

// ---- polynomials with signed coefficients
using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly divide_by_q_minus_one(const Poly& a) {
  Poly q(a.size() - 1, 0);
  long long carry = 0;
  for (std::size_t d = a.size() - 1; d >= 1; --d) q[d - 1] = carry += a[d];
  expect(carry + a[0] == 0, "division by q-1 is not exact");
  return q;
}

Poly odd_flag_product(int n) {
  auto factor = [](int m) {
    Poly f(m + 1, 0);
    f[0] = -1;
    f[m] = 1;
    return f;
  };
  Poly p = factor(n + 1);
  for (int i = 1; i <= n; ++i) p = multiply(p, factor(2 * i));
  for (int t = 0; t <= n; ++t) p = divide_by_q_minus_one(p);
  return p;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(parts, remaining - p, p);
      parts.pop_back();
    }
  };
  for (int d = 0; d <= max_weight; ++d) {
    std::vector<int> parts;
    rec(parts, d, d);
  }
  return out;
}

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long factorial_ll(int n) { return n <= 1 ? 1 : n * factorial_ll(n - 1); }

// ---- criteria

std::string c1() {
  for (int n = 1; n <= 4; ++n) {
    const auto even = brute_even(n);
    expect(static_cast<long long>(even.size()) == (1LL << n) * factorial_ll(n), "|W(C_" + str(n) + ")|");
    expect(even == enumerate_weyl_even(n), "library even enumeration n=" + str(n));
    const auto odd = brute_odd_cells(n);
    expect(static_cast<long long>(odd.size()) == (1LL << n) * factorial_ll(n + 1), "|W_odd| n=" + str(n));
    auto library = enumerate_weyl_odd(n);
    std::sort(library.begin(), library.end());
    expect(odd == library, "library odd enumeration n=" + str(n));
  }
  for (int n = 1; n <= 3; ++n) {
    const auto top = odd_interval_top(n);
    const auto ambient = brute_odd_ambient(n);
    const auto order = chain_order(ambient);
    std::vector<SignedPermutation> interval;
    for (const auto& w : ambient)
      if (order.at(w.window()).count(top.window())) interval.push_back(w);
    expect(interval == brute_odd_cells(n), "interval characterization n=" + str(n));
  }
  return "2^n n! and 2^n (n+1)! for n <= 4; interval = 0b-free for n <= 3";
}

std::string c2() {
  for (int n = 1; n <= 4; ++n) {
    int best = 0;
    for (const auto& w : brute_even(n)) best = std::max(best, length(w));
    expect(best == n * n, "even longest n=" + str(n));
  }
  for (int n = 1; n <= 3; ++n) {
    int best = 0;
    for (const auto& w : brute_odd_cells(n)) best = std::max(best, length(w));
    expect(best == n * (n + 1), "odd longest n=" + str(n));
  }
  return "n^2 (n <= 4), n(n+1) (n <= 3)";
}

std::string c3() {
  expect(poincare_polynomial(Ambient::flag(3)) == IntPolynomial({1, 2, 1}), "F_w(3)");
  for (int n = 1; n <= 3; ++n) {
    const auto cells = poincare_polynomial(Ambient::flag(2 * n + 1)).coefficients();
    const auto product = odd_flag_product(n);
    expect(cells.size() == product.size(), "degree n=" + str(n));
    for (std::size_t d = 0; d < cells.size(); ++d)
      expect(static_cast<long long>(cells[d]) == product[d], "coefficient q^" + str(static_cast<int>(d)) + " n=" + str(n));
  }
  return "coefficientwise for n = 1, 2, 3";
}

std::string c4() {
  std::size_t pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto group = enumerate_weyl_even(n);
    const auto order = chain_order(group);
    for (const auto& w : group)
      for (const auto& v : group) {
        const bool chain = order.at(w.window()).count(v.window()) > 0;
        expect(bruhat_leq(w, v) == chain, w.to_string() + " <= " + v.to_string());
        expect(bruhat_leq_chain_oracle(w, v) == chain, "library chain oracle " + w.to_string());
        ++pairs;
      }
  }
  expect(pairs == 64 + 2304, "pair count");
  return "64 + 2304 pairs";
}

std::string c5() {
  expect(cell_dimension(AdmissibleIndex(LetterSpace::even(4), {4, 6, 8})) == 9, "G_w(3,8)");
  expect(cell_dimension(AdmissibleIndex(LetterSpace::odd(4), {4, 6, 8})) == 12, "G_w(3,9)");
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : brute_even(n)) expect(cell_dimension(w) == length(w), w.to_string());
  for (int n = 1; n <= 2; ++n)
    for (const auto& w : brute_odd_cells(n)) expect(cell_dimension(w) == length(w), w.to_string());
  return "9, 12; flag cells = length";
}

std::string c6() {
  auto brute = [](int k) {
    int count = 0;
    for (int mask = 0; mask < (1 << 7); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      bool ok = true;
      for (int i = 1; i <= 3; ++i) ok &= !((mask >> i) & 1 && (mask >> (7 - i)) & 1);
      count += ok;
    }
    return count;
  };
  expect(brute(2) == 18 && admissible_indices(2, 7).size() == 18, "|I_{2,7}| = 18");
  expect(brute(4) == 8 && admissible_indices(4, 7).size() == 8, "|I_{4,7}| = 8");
  return "18 and 8";
}

std::string c7() {
  for (int n = 1; n <= 3; ++n) {
    const auto orbits = flag_orbits(n);
    expect(static_cast<int>(orbits.size()) == n + 1, "orbit count");
    std::map<int, long long> per_orbit;
    for (const auto& w : brute_odd_cells(n)) {
      const auto& win = w.window();
      const int position = static_cast<int>(std::find(win.begin(), win.end(), 0) - win.begin());
      ++per_orbit[position + 1];
      expect(cell_orbit(w) == "O_" + str(position + 1), "orbit of " + w.to_string());
    }
    for (int i = 1; i <= n + 1; ++i) {
      expect(orbits[i - 1].codimension == n + 1 - i, "codim O_" + str(i));
      expect(per_orbit[i] == (1LL << n) * factorial_ll(n), "cells in O_" + str(i));
    }
    for (int k = 1; k <= n; ++k)
      for (const auto& cell : cells(Ambient::grassmannian(k, 2 * n + 1))) {
        const bool zero = std::get<AdmissibleIndex>(cell).contains(0);
        expect(cell_orbit(cell) == (zero ? "X_0" : "X_1"), to_string(cell));
      }
  }
  return "n <= 3";
}

std::string c8() {
  int cases = 0;
  for (int n = 1; n <= 2; ++n)
    for (const auto& lambda : partitions_up_to(4)) {
      const auto oracle = trace_free_schur_dim(lambda, 2 * n + 1);
      expect(BigInt(oracle) == dim_odd(lambda, n), lambda.to_string() + " n=" + str(n));
      if (lambda.length() > n + 1) expect(oracle == 0, "vanishing " + lambda.to_string());
      ++cases;
    }
  return str(cases) + " partitions";
}

std::string c9() {
  int cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : partitions_up_to(5)) {
      if (lambda.length() > n + 1) continue;
      BigInt sum = 0;
      // all mu with lambda_1 >= mu_1 >= lambda_2 >= ... >= lambda_{n+1} >= mu_{n+1} >= 0
      std::vector<int> mu(n + 1);
      std::function<void(int)> rec = [&](int i) {
        if (i == n + 1) {
          sum += dim_odd(Partition(mu), n);
          return;
        }
        for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
          mu[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      expect(sum == dim_sp(lambda, n + 1), lambda.to_string() + " n=" + str(n));
      expect(filtration_dimension_check(lambda, n).holds(), "library check " + lambda.to_string());
      ++cases;
    }
  return str(cases) + " cases";
}

std::string c10() {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& lambda : partitions_up_to(5))
      if (lambda.length() <= n + 1) expect(h0_line_bundle(lambda, 2 * n + 2) == dim_sp(lambda, n + 1), lambda.to_string());
    if (n == 0) continue;
    for (int k = 1; k <= n + 1; ++k)
      expect(h0_line_bundle(Partition(std::vector<int>(k, 1)), 2 * n + 1) == BigInt(static_cast<long>(choose(2 * n + 1, k) - choose(2 * n + 1, k - 2))),
             "column k=" + str(k) + " n=" + str(n));
  }
  return "n+1 <= 5";
}

std::string c11() {
  int singular = 0;
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto report = koszul_acyclicity_check(k, n);
      expect(report.acyclic, "acyclic k=" + str(k) + " n=" + str(n));
      for (const auto& term : report.terms) {
        if (term.j < 2) continue;
        for (const auto& c : term.components) {
          std::vector<int> shifted = c.eta.entries;
          const int m = c.eta.m();
          for (int i = 0; i < m; ++i) shifted[i] += m - i;
          std::sort(shifted.begin(), shifted.end());
          expect(std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end(), "repeated entry for " + c.shape.to_string());
          expect(c.cohomology.vanishes, "library vanishing " + c.shape.to_string());
          ++singular;
        }
      }
    }
  return str(singular) + " singular components";
}

std::string c12() {
  for (int r = 0; r <= 6; ++r)
    for (int j = 0; j <= 6; ++j) {
      BigInt total = 0;
      for (const auto& shape : plethysm_wedge2(j, r)) total += dim_gl(shape, r);
      expect(total == BigInt(static_cast<long>(choose(choose(r, 2), j))), "j=" + str(j) + " r=" + str(r));
    }
  return "j, r <= 6";
}

std::string c13() {
  const auto f = fano_report(3, 3);
  expect(f.components == 2, "two components");
  expect(f.dim_first == 9 && f.dim_second == 9, "dimensions 9, 9");
  expect(f.rank_h_first == 36 && f.rank_h_second == 32, "ranks 36, 32");
  for (int n = 2; n <= 8; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto g = fano_report(k, n);
      const bool equal = g.dim_second && *g.dim_second == g.dim_first;
      expect(equal == (k == 3 && n == 3), "coincidence at k=" + str(k) + " n=" + str(n));
    }
  return "(2, 9, 9, 36, 32); unique coincidence";
}

std::string c14() {
  for (int n = 1; n <= 3; ++n) {
    const auto dims = lie_dimension_check(n);
    expect(dims.even == static_cast<std::size_t>(n * (2 * n + 1)), "even n=" + str(n));
    expect(dims.odd == static_cast<std::size_t>((n + 1) * (2 * n + 1)), "odd n=" + str(n));
  }
  return "n <= 3";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::string (*run)();
    double limit_seconds;  // 0 = no limit
  };
  const Criterion criteria[] = {
      {1, "weyl-counts", c1, 5},           {2, "longest-lengths", c2, 0},
      {3, "poincare-product", c3, 10},     {4, "bruhat-oracle", c4, 0},
      {5, "echelon-dimensions", c5, 0},    {6, "admissible-counts", c6, 0},
      {7, "orbit-stratification", c7, 0},  {8, "tensor-oracle", c8, 120},
      {9, "filtration-identity", c9, 0},   {10, "borel-weil", c10, 0},
      {11, "koszul-acyclicity", c11, 0},   {12, "plethysm-identity", c12, 0},
      {13, "fano-values", c13, 0},         {14, "lie-dimensions", c14, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      passed = false;
      detail = "mismatch: " + f.what;
    } catch (const std::exception& e) {
      passed = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (passed && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      passed = false;
      detail += " (over the time limit)";
    }
    failures += !passed;
    std::printf("%s  %2d %-22s %8.3fs  %s\n", passed ? "PASS" : "FAIL", c.id, c.name, seconds, detail.c_str());
  }
  std::printf("%d/14 criteria passed\n", 14 - failures);
  return failures == 0 ? 0 : 1;
}
