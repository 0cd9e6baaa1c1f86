#pragma once

#include <iosfwd>

namespace tpb {

// Exit codes: 0 success, 1 failed/indeterminate verdict or reference mismatch,
// 2 usage error, 3 weight search exhausted.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tpb
