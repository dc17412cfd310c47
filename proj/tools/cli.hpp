#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wdist/codes.hpp"
#include "wdist/error.hpp"

namespace wdist::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string subcommand;
    std::uint32_t p = 0;
    unsigned m = 0;
    unsigned k = 0;
    std::uint64_t t = 0;
    std::uint64_t i = 0;
    std::string which = "r_alpha";
    std::optional<std::string> modulus_file;
    codes::Method method = codes::Method::Auto;
    unsigned workers = 0;
    Format format = Format::Text;
    std::optional<std::string> output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadParameters = 2;
inline constexpr int kExitTooLarge = 3;
inline constexpr int kExitInadmissible = 4;
inline constexpr int kExitNoMatch = 5;

int exit_code(ErrorCode code);

/// Runs one command line (without the program name). Results go to out (or the
/// --output file), diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdist::cli
