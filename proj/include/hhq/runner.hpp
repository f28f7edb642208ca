#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hhq/scalar.hpp"

namespace hhq {

struct RunConfig {
    std::vector<int> T_values = {0, 1};
    std::vector<long long> characteristics = {0};
    int max_n = 11;
    int hard_cap = 12;
    std::string emit = "csv";  // csv | json
    std::string only;          // check filter; empty = every check
    int wmax = 4;
};

/// Throws std::invalid_argument on invalid configuration (usage error).
void validate(const RunConfig& config);

/// "a..b" (inclusive) or a comma-separated list.
std::vector<int> parse_range_list(const std::string& text);
std::vector<long long> parse_char_list(const std::string& text);

struct DimRecord {
    int T = 0;
    long long characteristic = 0;
    int n = 0;
    long long dim_hh = 0;
    long long dim_ker = 0;
    long long dim_im = 0;
    long long formula_hh = 0;
    bool divides = false;
    bool match = false;
};

std::vector<DimRecord> compute_dim_records(const RunConfig& config);
std::string encode_dims_csv(const std::vector<DimRecord>& records);
std::string encode_dims_json(const std::vector<DimRecord>& records);

struct CheckOutcome {
    std::string check;
    std::string params;
    bool pass = false;
    std::string claim;
    std::string details;
};

/// Runs the verification suite selected by config.only across the
/// configured (T, characteristic) grid. Deterministic output order.
std::vector<CheckOutcome> run_checks(const RunConfig& config);
std::string encode_checks_json(const std::vector<CheckOutcome>& outcomes);

/// Subcommand drivers; return the process exit code
/// (0 pass, 1 mismatch/failure, 2 usage).
int cmd_dims(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_ring(const RunConfig& config, std::ostream& out);

}  // namespace hhq
