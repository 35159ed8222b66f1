#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "osp/combinatorics.hpp"
#include "osp/rep_theory.hpp"

using namespace osp;

namespace {

std::vector<Partition> partitions_of(int total, int max_part = -1) {
  if (max_part < 0) max_part = total;
  if (total == 0) return {Partition()};
  std::vector<Partition> out;
  for (int first = std::min(total, max_part); first >= 1; --first) {
    for (const auto& rest : partitions_of(total - first, first)) {
      std::vector<int> parts{first};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(parts);
    }
  }
  return out;
}

// Counts semistandard fillings of the diagram with values in [0, alphabet);
// `allowed(row, value)` restricts entries per row.
long count_tableaux(const Partition& shape, int alphabet, const std::function<bool(int, int)>& allowed) {
  std::vector<std::vector<int>> t;
  for (int p : shape.parts()) t.emplace_back(p, -1);
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) boxes.emplace_back(r, c);
  long count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t b) {
    if (b == boxes.size()) {
      ++count;
      return;
    }
    const auto [r, c] = boxes[b];
    int low = 0;
    if (c > 0) low = std::max(low, t[r][c - 1]);
    if (r > 0) low = std::max(low, t[r - 1][c] + 1);
    for (int v = low; v < alphabet; ++v) {
      if (!allowed(r, v)) continue;
      t[r][c] = v;
      fill(b + 1);
    }
  };
  fill(0);
  return count;
}

long ssyt_count(const Partition& shape, int m) {
  return count_tableaux(shape, m, [](int, int) { return true; });
}

// Symplectic tableaux over 1 < 1b < 2 < 2b < ... < n < nb: entries of row r are at least r+1.
long symplectic_tableaux_count(const Partition& shape, int n) {
  return count_tableaux(shape, 2 * n, [](int row, int value) { return value / 2 >= row; });
}

}  // namespace

TEST_CASE("Partition") {
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition::parse("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(Partition::parse("0").length() == 0);
  CHECK(Partition::parse("").length() == 0);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({3, 1}).to_string() == "(3,1)");
  CHECK(Partition({3, 1}).weight() == 4);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("GL and Sp dimension examples") {
  CHECK(dim_gl(Partition({1}), 5) == 5);
  CHECK(dim_gl(Partition({1, 1}), 3) == 3);
  CHECK(dim_gl(Partition({2, 1}), 3) == 8);
  CHECK(dim_gl(Partition({1, 1, 1, 1}), 3) == 0);
  const std::vector<int> dual{0, 0, -1};
  CHECK(dim_gl_weight(dual) == 3);
  CHECK_THROWS_AS(dim_gl_weight(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK(dim_sp(Partition({1}), 1) == 2);
  CHECK(dim_sp(Partition({1, 1}), 2) == 5);
  CHECK(dim_sp(Partition({2}), 1) == 3);
  CHECK(dim_sp(Partition({1, 1}), 1) == 0);
}

TEST_CASE("Weyl formulas agree with tableau counts") {
  for (int total = 0; total <= 5; ++total) {
    for (const auto& lambda : partitions_of(total)) {
      for (int m = 1; m <= 4; ++m) CHECK(dim_gl(lambda, m) == ssyt_count(lambda, m));
      for (int n = 1; n <= 3; ++n) CHECK(dim_sp(lambda, n) == symplectic_tableaux_count(lambda, n));
    }
  }
}

TEST_CASE("interleavings") {
  CHECK(interleavings(Partition({1, 1}), 1) == std::vector<Partition>{Partition({1})});
  CHECK(interleavings(Partition({2, 1}), 1) == std::vector<Partition>{Partition({2}), Partition({1})});
  CHECK(interleavings(Partition(), 3) == std::vector<Partition>{Partition()});
  CHECK_THROWS_AS(interleavings(Partition({1, 1, 1}), 1), std::invalid_argument);
}

TEST_CASE("odd dimensions") {
  CHECK(dim_odd(Partition({1, 1}), 1) == 2);
  CHECK(dim_odd(Partition({2, 1}), 1) == 5);
  CHECK(dim_odd(Partition({1, 1}), 2) == 9);
  CHECK(dim_odd(Partition({1, 1, 1}), 1) == 0);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::vector<int> column(k, 1);
      const BigInt expected = BigInt(binomial(2 * n + 1, k)) - (k >= 2 ? BigInt(binomial(2 * n + 1, k - 2)) : 0);
      CHECK(dim_odd(Partition(column), n) == expected);
    }
  }
}

TEST_CASE("filtration factors") {
  auto one = shtepin_factors(Partition({1}), 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == FiltrationFactor{Partition({1}), 0});
  CHECK(one[1] == FiltrationFactor{Partition(), -1});
  CHECK(shtepin_factors(Partition(), 2) == std::vector<FiltrationFactor>{{Partition(), 0}});
  auto column = shtepin_factors(Partition({1, 1}), 1);
  REQUIRE(column.size() == 2);
  CHECK(column[0] == FiltrationFactor{Partition({1, 1}), 0});
  CHECK(column[1] == FiltrationFactor{Partition({1}), -1});
}

TEST_CASE("filtration patterns match brute enumeration") {
  for (int n = 1; n <= 3; ++n) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& lambda : partitions_of(total)) {
        if (lambda.length() > n + 1) continue;
        // every weakly decreasing (n+1)-tuple bounded by λ_1, filtered by interleaving
        std::vector<Partition> brute;
        std::vector<int> mu(n + 1);
        std::function<void(int, int)> rec = [&](int i, int cap) {
          if (i == n + 1) {
            bool ok = true;
            for (int t = 0; t <= n; ++t) ok &= lambda[t] >= mu[t] && mu[t] >= lambda[t + 1];
            if (ok) brute.emplace_back(mu);
            return;
          }
          for (int v = cap; v >= 0; --v) {
            mu[i] = v;
            rec(i + 1, v);
          }
        };
        rec(0, lambda[0]);
        const auto factors = shtepin_factors(lambda, n);
        REQUIRE(factors.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
          CHECK(factors[i].inner == brute[i]);
          CHECK(factors[i].shift == brute[i].weight() - lambda.weight());
        }
        const auto check = filtration_dimension_check(lambda, n);
        CHECK_MESSAGE(check.holds(), lambda.to_string(), " n=", n);
      }
    }
  }
  CHECK(filtration_dimension_check(Partition({1}), 1).factor_sum == 4);
  CHECK(filtration_dimension_check(Partition({1, 1}), 1).restricted_dimension == 5);
}

TEST_CASE("line bundle sections") {
  CHECK(h0_line_bundle(Partition({1, 1}), 3) == 2);
  CHECK(h0_line_bundle(Partition({1}), 4) == 4);
  CHECK(h0_line_bundle(Partition({1, 1}), 5) == 9);
  for (int n = 0; n <= 3; ++n)
    for (const auto& lambda : partitions_of(4))
      if (lambda.length() <= n + 1) CHECK(h0_line_bundle(lambda, 2 * n + 2) == dim_sp(lambda, n + 1));
  CHECK_THROWS_AS(h0_line_bundle(Partition({1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("Lie algebra dimensions") {
  const std::size_t even[] = {3, 10, 21, 36};
  const std::size_t odd[] = {6, 15, 28, 45};
  for (int n = 1; n <= 4; ++n) {
    const auto dims = lie_dimension_check(n);
    CHECK(dims.even == even[n - 1]);
    CHECK(dims.odd == odd[n - 1]);
    CHECK(dims.center_order == 2);
  }
  CHECK_THROWS_AS(lie_dimension_check(5), std::invalid_argument);
}
