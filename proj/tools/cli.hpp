#pragma once

#include <ostream>

namespace stag::cli {

/// Exit codes: 0 ok, 1 not a STAG or property violated, 2 input error,
/// 3 resource guard tripped.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stag::cli
