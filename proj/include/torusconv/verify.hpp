#ifndef TORUSCONV_VERIFY_HPP
#define TORUSCONV_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "torusconv/torus.hpp"

namespace torusconv
{

struct CheckResult
{
    std::string id;
    std::string identity; // the relation being tested, in plain notation
    int criterion = 0;    // acceptance criterion number, 0 when none
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::string verdict; // "exact", "ok", a counterexample, or an error message
    bool pass = false;
    bool report_only = false; // recorded, never fails the suite
};

struct VerifyReport
{
    std::string suite;
    std::uint64_t seed = 0;
    TorusParams params;
    std::vector<CheckResult> checks; // sorted by id
    bool pass = false;
    double wall_time = 0.0;
};

inline constexpr std::uint64_t default_seed = 20240617;

const std::vector<std::string> &verify_suite_names();

/// Runs one named suite ("all" runs every suite). Throws std::invalid_argument
/// for an unknown name; failing checks are report content, not exceptions.
VerifyReport run_suite(const std::string &suite, const TorusParams &params, std::uint64_t seed = default_seed);

nlohmann::json to_json(const VerifyReport &report, bool include_wall_time = true);

} // namespace torusconv

#endif
