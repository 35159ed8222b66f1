#include "osp/bott_plethysm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "osp/combinatorics.hpp"

namespace osp {

namespace {

bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] >= v[i - 1]) return false;
  return true;
}

std::vector<Partition> strict_partitions(int total, int max_part) {
  if (total == 0) return {Partition()};
  std::vector<Partition> out;
  for (int first = std::min(total, max_part); first >= 1; --first) {
    for (const auto& rest : strict_partitions(total - first, first - 1)) {
      std::vector<int> parts{first};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(parts);
    }
  }
  return out;
}

}  // namespace

void FrobeniusHook::validate() const {
  if (arms.size() != legs.size()) throw std::invalid_argument("arms and legs differ in number");
  if (!arms.empty() && (arms.back() < 0 || legs.back() < 0)) {
    throw std::invalid_argument("hook lengths must be nonnegative");
  }
  if (!strictly_decreasing(arms) || !strictly_decreasing(legs)) {
    throw std::invalid_argument("arms and legs must be strictly decreasing");
  }
}

Partition FrobeniusHook::to_partition() const {
  validate();
  const int r = rank();
  std::vector<int> rows;
  for (int i = 1; i <= r; ++i) rows.push_back(arms[i - 1] + i);
  const int depth = r == 0 ? 0 : legs[0] + 1;
  for (int i = r + 1; i <= depth; ++i) {
    int count = 0;
    for (int t = 1; t <= r; ++t) count += legs[t - 1] + t >= i;
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

FrobeniusHook FrobeniusHook::from_partition(const Partition& lambda) {
  const auto conjugate = lambda.conjugate();
  FrobeniusHook hook;
  for (int i = 0; lambda[i] > i; ++i) {
    hook.arms.push_back(lambda[i] - i - 1);
    hook.legs.push_back(conjugate[i] - i - 1);
  }
  return hook;
}

std::string FrobeniusHook::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < arms.size(); ++i) out += (i ? "," : "") + std::to_string(arms[i]);
  out += "|";
  for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? "," : "") + std::to_string(legs[i]);
  return out + ")";
}

Partition lambda_minus(const Partition& strict) {
  if (!strictly_decreasing(strict.parts())) {
    throw std::invalid_argument("lambda_minus needs a strictly decreasing partition, got " + strict.to_string());
  }
  FrobeniusHook hook;
  for (int part : strict.parts()) {
    hook.arms.push_back(part - 1);
    hook.legs.push_back(part);
  }
  Partition out = hook.to_partition();
  if (out.weight() != 2 * strict.weight()) throw std::logic_error("hook weight mismatch");
  return out;
}

std::vector<Partition> plethysm_wedge2(int j, int rank) {
  if (j < 0 || rank < 0) throw std::invalid_argument("plethysm needs j >= 0 and rank >= 0");
  std::vector<Partition> out;
  for (const auto& strict : strict_partitions(j, j)) {
    Partition shape = lambda_minus(strict);
    if (shape.length() <= rank) out.push_back(std::move(shape));
  }
  return out;
}

void BottWeight::validate() const {
  if (k < 0 || k > m()) throw std::invalid_argument("Bott weight needs 0 <= k <= m");
  for (int i = 1; i < m(); ++i) {
    if (i == m() - k) continue;
    if (entries[i] > entries[i - 1]) {
      throw std::invalid_argument("Bott weight must be non-increasing on each block");
    }
  }
}

BottResult bott_cohomology(const BottWeight& eta) {
  eta.validate();
  const int m = eta.m();
  std::vector<int> shifted(m);
  for (int i = 0; i < m; ++i) shifted[i] = eta.entries[i] + (m - i);
  BottResult result;
  std::vector<int> sorted = shifted;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return result;
  result.vanishes = false;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) result.degree += shifted[a] < shifted[b];
  result.weight.resize(m);
  for (int i = 0; i < m; ++i) result.weight[i] = sorted[i] - (m - i);
  result.dimension = dim_gl_weight(result.weight);
  return result;
}

KoszulReport koszul_acyclicity_check(int k, int n) {
  if (k < 2 || k > n || n > 5) throw std::invalid_argument("Koszul check needs 2 <= k <= n <= 5");
  const int m = 2 * n + 1;
  KoszulReport report{k, n, {}, true, true, 0};
  for (int j = 0; j <= k * (k - 1) / 2; ++j) {
    KoszulTerm term;
    term.j = j;
    for (const auto& shape : plethysm_wedge2(j, k)) {
      BottWeight eta{std::vector<int>(m, 0), k};
      const auto parts = shape.padded(k);
      for (int i = 0; i < k; ++i) eta.entries[m - k + i] = parts[i] - 1;
      auto cohomology = bott_cohomology(eta);
      if (!cohomology.vanishes) {
        if (cohomology.degree >= 1) report.acyclic = false;
        if (j >= 2) report.higher_terms_vanish = false;
        if (cohomology.degree == 0) term.h0 += cohomology.dimension;
      }
      term.components.push_back({shape, std::move(eta), std::move(cohomology)});
    }
    report.terms.push_back(std::move(term));
  }
  report.euler_difference = report.terms[0].h0 - report.terms[1].h0;
  return report;
}

BigInt plucker_h0(int k, int n) {
  if (n < 1 || k < 1 || k > n + 1) throw std::invalid_argument("plucker_h0 needs 1 <= k <= n+1");
  BigInt value = binomial(2 * n + 1, k);
  if (k >= 2) value -= binomial(2 * n + 1, k - 2);
  return value;
}

FanoReport fano_report(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("fano_report needs 2 <= k <= n");
  FanoReport report;
  report.k = k;
  report.n = n;
  const int excess = 3 * k - 2 * (n + 1);
  report.components = excess >= 0 ? 2 : 1;
  report.dim_first = (k - 1) * (2 * n - k + 2) - (k - 1) * (k - 2) / 2;
  const auto odd = LetterSpace::odd(n);
  const auto even = LetterSpace::even(n);
  report.rank_h_first = admissible_count(k - 1, odd) + (2 * n - 2 * k + 3) * admissible_count(k - 2, even);
  if (report.components == 2) {
    report.dim_second = (k + 1) * (2 * n - k) - (k + 1) * k / 2 + excess * (2 * (n - k) + 3);
    report.rank_h_second = binomial(k + 1, excess) * admissible_count(k + 1, odd);
  }
  report.extrapolated = !(k == 3 && n == 3);
  return report;
}

}  // namespace osp
