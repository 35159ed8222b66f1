#include "osp/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "osp/bott_plethysm.hpp"
#include "osp/orbits.hpp"
#include "osp/rep_theory.hpp"
#include "osp/schubert.hpp"
#include "osp/tensor_oracle.hpp"

namespace osp {

VerifyRanges VerifyRanges::quick() {
  VerifyRanges r;
  r.weyl_max_n = 3;
  r.interval_max_n = 2;
  r.longest_even_max_n = 3;
  r.longest_odd_max_n = 2;
  r.poincare_max_n = 2;
  r.bruhat_max_n = 2;
  r.flag_cells_even_max_n = 2;
  r.flag_cells_odd_max_n = 1;
  r.orbit_max_n = 2;
  r.oracle_max_weight = 3;
  r.oracle_max_n = 1;
  r.shtepin_max_weight = 4;
  r.shtepin_max_n = 2;
  r.borel_weil_max_rank = 3;
  r.koszul_max_n = 3;
  r.plethysm_max = 4;
  r.fano_max_n = 5;
  r.lie_max_n = 2;
  return r;
}

namespace {

// Collects the first failure; later expectations are skipped once one fails.
class Expect {
 public:
  void operator()(bool condition, const std::string& what) {
    if (!condition && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

std::vector<Partition> partitions_of(int total, int max_part) {
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

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d)
    for (auto& p : partitions_of(d, d)) out.push_back(std::move(p));
  return out;
}

std::uint64_t pow2(int n) { return std::uint64_t{1} << n; }

std::string weyl_counts(const VerifyRanges& r, Expect& expect) {
  for (int n = 1; n <= r.weyl_max_n; ++n) {
    expect(enumerate_weyl_even(n).size() == pow2(n) * factorial(n), "|W(C_" + std::to_string(n) + ")|");
    expect(enumerate_weyl_odd(n).size() == pow2(n) * factorial(n + 1), "odd count n=" + std::to_string(n));
  }
  for (int n = 1; n <= r.interval_max_n; ++n) {
    expect(enumerate_weyl_odd(n) == enumerate_weyl_odd_by_interval(n), "interval n=" + std::to_string(n));
  }
  return "n <= " + std::to_string(r.weyl_max_n);
}

std::string longest_lengths(const VerifyRanges& r, Expect& expect) {
  auto longest = [](const std::vector<SignedPermutation>& group) {
    int best = 0;
    for (const auto& w : group) best = std::max(best, length(w));
    return best;
  };
  for (int n = 1; n <= r.longest_even_max_n; ++n)
    expect(longest(enumerate_weyl_even(n)) == n * n, "even longest n=" + std::to_string(n));
  for (int n = 1; n <= r.longest_odd_max_n; ++n)
    expect(longest(enumerate_weyl_odd(n)) == n * (n + 1), "odd longest n=" + std::to_string(n));
  return "even n <= " + std::to_string(r.longest_even_max_n) + ", odd n <= " + std::to_string(r.longest_odd_max_n);
}

std::string poincare(const VerifyRanges& r, Expect& expect) {
  expect(poincare_polynomial(Ambient::flag(3)) == IntPolynomial({1, 2, 1}), "F_w(3)");
  std::string detail;
  for (int n = 1; n <= r.poincare_max_n; ++n) {
    const auto p = poincare_polynomial(Ambient::flag(2 * n + 1));
    expect(p == odd_flag_poincare_closed_form(n), "product formula n=" + std::to_string(n));
    detail = p.to_string();
  }
  return "largest: " + detail;
}

std::string bruhat(const VerifyRanges& r, Expect& expect) {
  std::size_t pairs = 0;
  for (int n = 2; n <= r.bruhat_max_n; ++n) {
    const auto group = enumerate_weyl_even(n);
    for (const auto& w : group)
      for (const auto& v : group) {
        expect(bruhat_leq(w, v) == bruhat_leq_chain_oracle(w, v), w.to_string() + " vs " + v.to_string());
        ++pairs;
      }
  }
  return std::to_string(pairs) + " pairs";
}

std::string echelon(const VerifyRanges& r, Expect& expect) {
  const auto even = echelon_pattern({4, 6, 8}, LetterSpace::even(4));
  const auto odd = echelon_pattern({4, 6, 8}, LetterSpace::odd(4));
  expect(even.count(EntryState::Free) == 9, "G_w(3,8) cell");
  expect(odd.count(EntryState::Free) == 12, "G_w(3,9) cell");
  for (int n = 1; n <= r.flag_cells_even_max_n; ++n)
    for (const auto& w : enumerate_weyl_even(n)) expect(cell_dimension(w) == length(w), w.to_string());
  for (int n = 1; n <= r.flag_cells_odd_max_n; ++n)
    for (const auto& w : enumerate_weyl_odd(n)) expect(cell_dimension(w) == length(w), w.to_string());
  return "9 and 12 free entries";
}

std::string admissible(const VerifyRanges&, Expect& expect) {
  const auto a = admissible_indices(2, 7).size();
  const auto b = admissible_indices(4, 7).size();
  expect(a == 18, "|I_{2,7}|");
  expect(b == 8, "|I_{4,7}|");
  return std::to_string(a) + ", " + std::to_string(b);
}

std::string orbits(const VerifyRanges& r, Expect& expect) {
  for (int n = 1; n <= r.orbit_max_n; ++n) {
    const auto info = flag_orbits(n);
    std::map<std::string, std::uint64_t> count;
    for (const auto& cell : cells(Ambient::flag(2 * n + 1))) ++count[cell_orbit(cell)];
    for (std::size_t i = 0; i < info.size(); ++i) {
      expect(info[i].codimension == n - static_cast<int>(i), info[i].id + " codim");
      expect(count[info[i].id] == pow2(n) * factorial(n), info[i].id + " cell count");
    }
    for (int k = 1; k <= n; ++k) {
      for (const auto& cell : cells(Ambient::grassmannian(k, 2 * n + 1))) {
        const bool through_kernel = std::get<AdmissibleIndex>(cell).contains(0);
        expect((cell_orbit(cell) == "X_0") == through_kernel, to_string(cell));
      }
    }
  }
  return "n <= " + std::to_string(r.orbit_max_n);
}

std::string tensor_oracle(const VerifyRanges& r, Expect& expect) {
  int cases = 0;
  for (int n = 1; n <= r.oracle_max_n; ++n) {
    for (const auto& lambda : partitions_up_to(r.oracle_max_weight)) {
      const BigInt oracle(trace_free_schur_dim(lambda, 2 * n + 1));
      expect(oracle == dim_odd(lambda, n), lambda.to_string() + " n=" + std::to_string(n));
      if (lambda.length() > n + 1) expect(oracle == 0, "vanishing " + lambda.to_string());
      ++cases;
    }
  }
  return std::to_string(cases) + " cases";
}

std::string shtepin(const VerifyRanges& r, Expect& expect) {
  int cases = 0;
  for (int n = 1; n <= r.shtepin_max_n; ++n)
    for (const auto& lambda : partitions_up_to(r.shtepin_max_weight)) {
      if (lambda.length() > n + 1) continue;
      expect(filtration_dimension_check(lambda, n).holds(), lambda.to_string());
      ++cases;
    }
  return std::to_string(cases) + " cases";
}

std::string borel_weil(const VerifyRanges& r, Expect& expect) {
  for (int n = 0; n + 1 <= r.borel_weil_max_rank; ++n) {
    for (const auto& lambda : partitions_up_to(4)) {
      if (lambda.length() > n + 1) continue;
      expect(h0_line_bundle(lambda, 2 * n + 2) == dim_sp(lambda, n + 1), lambda.to_string());
    }
    if (n == 0) continue;
    for (int k = 1; k <= n + 1; ++k) {
      BigInt expected = binomial(2 * n + 1, k);
      if (k >= 2) expected -= binomial(2 * n + 1, k - 2);
      expect(h0_line_bundle(Partition(std::vector<int>(k, 1)), 2 * n + 1) == expected,
             "(1^" + std::to_string(k) + ") n=" + std::to_string(n));
    }
  }
  return "n+1 <= " + std::to_string(r.borel_weil_max_rank);
}

std::string koszul(const VerifyRanges& r, Expect& expect) {
  int singular = 0;
  for (int n = 2; n <= r.koszul_max_n; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto report = koszul_acyclicity_check(k, n);
      expect(report.acyclic, "acyclic " + std::to_string(k) + "," + std::to_string(n));
      expect(report.higher_terms_vanish, "j >= 2 singular " + std::to_string(k) + "," + std::to_string(n));
      for (const auto& term : report.terms)
        if (term.j >= 2) singular += static_cast<int>(term.components.size());
    }
  return std::to_string(singular) + " singular components";
}

std::string plethysm(const VerifyRanges& r, Expect& expect) {
  for (int rank = 0; rank <= r.plethysm_max; ++rank)
    for (int j = 0; j <= r.plethysm_max; ++j) {
      BigInt total = 0;
      for (const auto& shape : plethysm_wedge2(j, rank)) total += dim_gl(shape, rank);
      const int pairs = rank * (rank - 1) / 2;
      expect(total == BigInt(j <= pairs ? binomial(pairs, j) : 0),
             "j=" + std::to_string(j) + " rank=" + std::to_string(rank));
    }
  return "j, rank <= " + std::to_string(r.plethysm_max);
}

std::string fano(const VerifyRanges& r, Expect& expect) {
  const auto f = fano_report(3, 3);
  expect(f.components == 2 && f.dim_first == 9 && f.dim_second == 9, "dimensions at (3,3)");
  expect(f.rank_h_first == 36 && f.rank_h_second == 32, "ranks at (3,3)");
  int coincidences = 0;
  for (int n = 2; n <= r.fano_max_n; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto g = fano_report(k, n);
      if (g.dim_second && *g.dim_second == g.dim_first) {
        ++coincidences;
        expect(k == 3 && n == 3, "coincidence at " + std::to_string(k) + "," + std::to_string(n));
      }
    }
  expect(coincidences == 1, "exactly one coincidence");
  return "9/9/36/32";
}

std::string lie(const VerifyRanges& r, Expect& expect) {
  for (int n = 1; n <= r.lie_max_n; ++n) {
    const auto dims = lie_dimension_check(n);
    expect(dims.even == static_cast<std::size_t>(n * (2 * n + 1)), "even n=" + std::to_string(n));
    expect(dims.odd == static_cast<std::size_t>((n + 1) * (2 * n + 1)), "odd n=" + std::to_string(n));
  }
  return "n <= " + std::to_string(r.lie_max_n);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyRanges& ranges) {
  using Check = std::function<std::string(const VerifyRanges&, Expect&)>;
  const std::vector<std::pair<std::string, Check>> checks = {
      {"weyl-counts", weyl_counts},       {"longest-lengths", longest_lengths},
      {"poincare", poincare},             {"bruhat-oracle", bruhat},
      {"echelon-dimensions", echelon},    {"admissible-counts", admissible},
      {"orbit-stratification", orbits},   {"tensor-oracle", tensor_oracle},
      {"filtration-identity", shtepin},   {"borel-weil", borel_weil},
      {"koszul-acyclicity", koszul},      {"plethysm-identity", plethysm},
      {"fano-values", fano},              {"lie-dimensions", lie},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CheckResult result;
    result.id = static_cast<int>(i + 1);
    result.name = checks[i].first;
    const auto start = std::chrono::steady_clock::now();
    Expect expect;
    try {
      result.detail = checks[i].second(ranges, expect);
      result.passed = expect.ok();
      if (!expect.ok()) result.detail = "failed: " + expect.failure();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace osp
