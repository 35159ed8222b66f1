#pragma once

#include <string>
#include <vector>

namespace osp {

/// Parameter ranges swept by the verification suite.
struct VerifyRanges {
  int weyl_max_n = 4;          // even and odd group counts
  int interval_max_n = 3;      // interval vs 0b-avoidance characterization
  int longest_even_max_n = 4;
  int longest_odd_max_n = 3;
  int poincare_max_n = 3;
  int bruhat_max_n = 3;        // chain oracle over all pairs of W(C_n)
  int flag_cells_even_max_n = 3;
  int flag_cells_odd_max_n = 2;
  int orbit_max_n = 3;
  int oracle_max_weight = 4;   // trace-free tensors, n in 1..oracle_max_n
  int oracle_max_n = 2;
  int shtepin_max_weight = 5;
  int shtepin_max_n = 3;
  int borel_weil_max_rank = 4;  // n+1 <= this
  int koszul_max_n = 4;
  int plethysm_max = 6;        // j <= and rank <=
  int fano_max_n = 8;
  int lie_max_n = 3;

  static VerifyRanges quick();
  static VerifyRanges full() { return {}; }
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the fourteen verification checks over the given ranges, in order.
std::vector<CheckResult> run_verification(const VerifyRanges& ranges);

}  // namespace osp
