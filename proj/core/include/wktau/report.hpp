#ifndef WKTAU_REPORT_HPP
#define WKTAU_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <wktau/exact.hpp>

namespace wktau {

/// One failed coefficient of a verification: where it was found and the value
/// that should have been zero (or the difference from the expected value).
struct Residual {
    std::string where;
    ExactScalar value;
};

/// Outcome of a single verification check.
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::vector<Residual> residuals;

    void add_param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
    void add_param(std::string key, long value) { params.emplace_back(std::move(key), std::to_string(value)); }
    void fail(std::string where, ExactScalar value) {
        pass = false;
        residuals.push_back({std::move(where), std::move(value)});
    }
};

}  // namespace wktau

#endif  // WKTAU_REPORT_HPP
