#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wwlab/pseudo_product/pseudo_product.hpp"

namespace wwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

struct CommandOptions {
    std::string command;
    std::optional<std::filesystem::path> config;
    std::filesystem::path out = ".";
    std::optional<std::uint64_t> seed;
    bool dry_run = false;
    std::vector<std::string> overrides;
};

/// Subcommand names in a fixed order.
const std::vector<std::string>& command_names();

/// Runs one subcommand and maps failures to exit codes: 2 for configuration
/// errors, 3 for numerical aborts (after flushing partial output).
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Operators accepted by bound-probe: "product" (m = 1), "chi_mu" (chi m1 / (i phi_{--})
/// divided by |xi| + |eta|), "flag" (m3(xi, eta, sigma) m1(xi, eta) / (|xi| + |eta| + |sigma|)^4)
/// and "model" (model operator `variant` at offset J).
struct ProbeOperator {
    FieldOperator apply;
    std::size_t arity;
};
ProbeOperator make_probe_operator(const std::string& name, const FourierGrid& grid, int variant = 1, int J = 0);

}  // namespace wwlab::cli
