#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidkit/brunnian.hpp"
#include "braidkit/word_oracle.hpp"

namespace braidkit {

struct CheckReport {
    std::string check;
    int n = 0;
    std::uint64_t seed = 0;
    std::string status; // "pass" | "fail" | "skip"
    std::string witness;
    std::int64_t elapsed_ms = 0;
};

struct CheckInfo {
    std::string id;
    std::string summary;
    int min_n;
    int max_n;
    bool negative_control; // excluded from run_all; expected to fail
};

const std::vector<CheckInfo>& check_catalog();
bool check_exists(const std::string& id);

// Runs one catalog entry at the given strand count.  Unknown ids throw
// std::invalid_argument; n outside the supported range reports skip;
// resource caps report skip with the reason.
CheckReport run_check(const std::string& id, int n, const SamplerParams& params = {},
                      const OracleLimits& limits = {});

// Runs every non-control catalog entry at every n in [n_lo, n_hi],
// ordered by catalog position then n.
std::vector<CheckReport> run_all(int n_lo, int n_hi, const SamplerParams& params = {},
                                 const OracleLimits& limits = {});

nlohmann::json report_to_json(const CheckReport& r);
nlohmann::json reports_to_json(const std::vector<CheckReport>& rs);
std::string report_to_text(const CheckReport& r);

} // namespace braidkit
