#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "osp/bott_plethysm.hpp"
#include "osp/combinatorics.hpp"

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

}  // namespace

TEST_CASE("Frobenius hooks") {
  CHECK(lambda_minus(Partition({1})) == Partition({1, 1}));
  CHECK(lambda_minus(Partition({2})) == Partition({2, 1, 1}));
  CHECK(lambda_minus(Partition({3, 1})) == Partition({3, 2, 2, 1}));
  CHECK(lambda_minus(Partition()) == Partition());
  CHECK_THROWS_AS(lambda_minus(Partition({2, 2})), std::invalid_argument);
  CHECK(FrobeniusHook::from_partition(Partition({3, 2, 2, 1})).to_string() == "(2,0|3,1)");
  for (int d = 0; d <= 8; ++d)
    for (const auto& lambda : partitions_of(d))
      CHECK(FrobeniusHook::from_partition(lambda).to_partition() == lambda);
  CHECK_THROWS_AS((FrobeniusHook{{1, 1}, {2, 0}}.validate()), std::invalid_argument);
}

TEST_CASE("plethysm of the second exterior power") {
  CHECK(plethysm_wedge2(2, 4) == std::vector<Partition>{Partition({2, 1, 1})});
  CHECK(plethysm_wedge2(3, 4) == std::vector<Partition>{Partition({3, 1, 1, 1}), Partition({2, 2, 2})});
  for (int k = 2; k <= 5; ++k) CHECK(plethysm_wedge2(1, k) == std::vector<Partition>{Partition({1, 1})});
  for (int rank = 0; rank <= 6; ++rank) {
    for (int j = 0; j <= 6; ++j) {
      BigInt total = 0;
      for (const auto& shape : plethysm_wedge2(j, rank)) total += dim_gl(shape, rank);
      const int pairs = rank * (rank - 1) / 2;
      CHECK(total == BigInt(j <= pairs ? binomial(pairs, j) : 0));
    }
  }
}

TEST_CASE("Bott examples") {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 0; k <= m; ++k) {
      const auto r = bott_cohomology({std::vector<int>(m, 0), k});
      CHECK_FALSE(r.vanishes);
      CHECK(r.degree == 0);
      CHECK(r.dimension == 1);
    }
  }
  const auto serre = bott_cohomology({{0, 0, 0, 0, 5}, 1});
  CHECK_FALSE(serre.vanishes);
  CHECK(serre.degree == 4);
  CHECK(serre.weight == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(serre.dimension == 1);
  CHECK(bott_cohomology({{0, 0, 0, 0, 1, 0, 0}, 3}).vanishes);
  CHECK_THROWS_AS(bott_cohomology({{0, 1, 0}, 1}), std::invalid_argument);
}

TEST_CASE("Bott on dominant weights is Borel-Weil") {
  for (int m = 2; m <= 5; ++m) {
    for (const auto& lambda : partitions_of(4)) {
      if (lambda.length() > m) continue;
      for (int k = 0; k <= m; ++k) {
        const auto r = bott_cohomology({lambda.padded(m), k});
        CHECK(r.degree == 0);
        CHECK(r.weight == lambda.padded(m));
        CHECK(r.dimension == dim_gl(lambda, m));
      }
    }
  }
}

TEST_CASE("Koszul acyclicity") {
  const auto small = koszul_acyclicity_check(2, 2);
  CHECK(small.acyclic);
  REQUIRE(small.terms.size() == 2);
  CHECK(small.terms[0].h0 == 10);
  CHECK(small.terms[1].h0 == 1);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto report = koszul_acyclicity_check(k, n);
      CHECK(report.acyclic);
      CHECK(report.higher_terms_vanish);
      CHECK(report.euler_difference == plucker_h0(k, n));
    }
  }
  CHECK_THROWS_AS(koszul_acyclicity_check(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(koszul_acyclicity_check(3, 6), std::invalid_argument);
}

TEST_CASE("Plucker sections") {
  CHECK(plucker_h0(2, 2) == 9);
  CHECK(plucker_h0(3, 4) == 75);
  for (int n = 1; n <= 6; ++n) {
    CHECK(plucker_h0(1, n) == 2 * n + 1);
    for (int k = 1; k <= n + 1; ++k) {
      std::vector<int> column(k, 1);
      CHECK(plucker_h0(k, n) == dim_odd(Partition(column), n));
    }
  }
}

TEST_CASE("Fano scheme report") {
  const auto f33 = fano_report(3, 3);
  CHECK(f33.components == 2);
  CHECK(f33.dim_first == 9);
  CHECK(f33.dim_second == 9);
  CHECK(f33.rank_h_first == 36);
  CHECK(f33.rank_h_second == 32);
  CHECK_FALSE(f33.extrapolated);
  // blow-up decomposition with base P^5
  CHECK(admissible_count(2, LetterSpace::odd(3)) == 18);
  CHECK(3 * admissible_count(1, LetterSpace::even(3)) == 18);

  const auto f23 = fano_report(2, 3);
  CHECK(f23.components == 1);
  CHECK(f23.dim_first == 6);
  CHECK_FALSE(f23.dim_second.has_value());
  CHECK(f23.extrapolated);

  const auto f44 = fano_report(4, 4);
  CHECK(f44.components == 2);
  CHECK(f44.dim_first == 15);
  CHECK(f44.dim_second == 16);

  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto f = fano_report(k, n);
      CHECK((f.components == 2) == (3 * k >= 2 * (n + 1)));
      const bool equal = f.dim_second && *f.dim_second == f.dim_first;
      CHECK(equal == (k == 3 && n == 3));
    }
  }
  CHECK_THROWS_AS(fano_report(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(fano_report(4, 3), std::invalid_argument);
}
