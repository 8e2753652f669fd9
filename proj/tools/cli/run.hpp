#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evidence::cli {

struct RunConfig {
    std::string subcommand;
    int n = 2;
    double xbar = 1.47;
    double sigma0 = 1.0;
    /// Null value for p-values and confidence checks; prior mean for rb/bias/lindley.
    double mu0 = 0.0;
    double tau0 = 2.0;
    double delta = 0.01;
    double alpha = 0.05;
    double gamma = 0.5;
    double a = 0.5;
    double p_sign = 0.5;
    std::uint64_t seed = 1;
    std::uint64_t reps = 10000;
    std::string output_dir = ".";
    unsigned workers = 1;

    double psi0 = 2.0;
    std::string target = "abs";
    int n1 = 50;
    int n2 = 50;
    int max_steps = 1000;
    double delta_sep = 0.5;
    std::vector<double> tau0_list{1.0, 10.0, 100.0, 1000.0};
    int k = 5;
    double sx2 = 10.0;
    std::uint64_t outer_reps = 0;
    std::uint64_t inner_reps = 1000;
    std::string example;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitConfig = 2;

/// Parses argv (argv[0] is the program name), runs the subcommand and writes
/// its files into the output directory.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evidence::cli
