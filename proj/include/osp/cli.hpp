#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osp::cli {

/// Exit codes: 0 success, 2 invalid input, 1 internal failure (including a
/// failed verification check).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osp::cli
