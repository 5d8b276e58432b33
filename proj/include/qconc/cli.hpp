// cli.hpp — Command implementations behind the qconc binary. Split from
// main() so the acceptance suite can drive the exact same code paths.
//
// Exit codes: 0 success, 1 validation/usage error, 2 internal invariant
// breach (dual-route disagreement or a bracket violation).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qconc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

struct BoundsFlags {
    std::string force_class;  // empty = dispatch on the actual class
    bool two_qubit_refine = false;
    bool with_reference = false;
};

struct VerifyFlags {
    std::string ortho_class = "arbitrary";
    long dim_a = 2;
    long dim_b = 2;
    int m = 2;
    int trials = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

int cmd_concurrence(const std::string& state_path, std::ostream& out, std::ostream& err);
int cmd_pair(const std::string& path_x, const std::string& path_y, std::ostream& out,
             std::ostream& err);
int cmd_classify(const std::vector<std::string>& state_paths, double tol, std::ostream& out,
                 std::ostream& err);
int cmd_bounds(const std::string& superposition_path, const BoundsFlags& flags,
               std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err);
int cmd_figure1(int samples, const std::string& out_path, std::ostream& out, std::ostream& err);

// Full argv-level entry point (CLI11 parsing + dispatch).
int run(int argc, const char* const* argv);

}  // namespace qconc::cli
