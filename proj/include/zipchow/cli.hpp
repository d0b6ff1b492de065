#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zipchow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMatrixCap = 3;

/// Environment variable overriding the relation-matrix size cap.
inline constexpr const char *kMatrixCapEnv = "ZIPCHOW_MATRIX_CAP";

/// Runs one command. args excludes the program name. The report goes to out
/// (or to --output); diagnostics go to err as a single line.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace zipchow::cli
