#pragma once

#include <theta/shapes.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace theta {

enum class CheckStatus { ok, fail, skipped };

std::string status_name(CheckStatus s);  // "ok", "fail", "skipped"

// Outcome of one named check. A check evaluates a family of instances; on
// success lhs and rhs summarise the agreement, on failure they render the two
// sides of the first instance that differs.
struct CheckReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    CheckStatus status = CheckStatus::ok;
    std::string lhs, rhs;
    double elapsed_ms = 0.0;
};

// Optional parameters narrowing a check to specific instances; checks without
// explicit parameters sweep a small default range. max_degree caps the
// symmetric-function degree a check may touch (default 7); trees may use one
// more vertex than that and polyomino boxes one more step.
struct CheckOptions {
    std::optional<int> n, m, k, j;
    std::optional<Composition> alpha;
    std::optional<Partition> mu, lambda;
    std::optional<std::vector<int>> word;
    std::optional<int> max_degree;
    int jobs = 1;
};

// The names accepted by run_check, in presentation order.
const std::vector<std::string>& check_names();

// Runs one named check. Throws std::invalid_argument for an unknown name or
// parameters beyond the configured caps.
CheckReport run_check(const std::string& name, const CheckOptions& opt = {});

}  // namespace theta
