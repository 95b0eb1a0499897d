#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hyperconn::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,  // includes a witness that fails re-verification
  kParseError = 2,
  kBudgetExhausted = 3,
  kInvalidFlags = 4,
};

using EnvLookup = std::function<const char*(const char*)>;

/// Runs one command. `args` excludes the program name. Input hypergraphs are
/// read from the file operand, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env = [](const char* name) -> const char* { return std::getenv(name); });

/// 64-bit FNV-1a, used as the report's input digest.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace hyperconn::cli
