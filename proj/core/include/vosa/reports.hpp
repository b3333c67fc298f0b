#pragma once

#include <string>
#include <vector>

#include "nlohmann/json_fwd.hpp"

namespace vosa {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

// One verified identity or estimate. Exact-domain records render the
// residual as an exact rational (pass requires the literal "0"); analytic
// records carry a double residual, a tolerance and a truncation budget.
struct CheckRecord {
    std::string id;
    std::string identity;  // which relation or formula was checked
    std::string inputs;    // short human-readable digest of the inputs
    std::string residual = "0";
    bool exact = true;
    double residual_value = 0.0;
    double tolerance = 0.0;
    double budget = 0.0;
    Verdict verdict = Verdict::pass;
    std::string note;

    static CheckRecord exact_zero(std::string id, std::string identity, std::string inputs,
                                  bool ok, std::string residual_str = "0");
    static CheckRecord approx(std::string id, std::string identity, std::string inputs,
                              double residual, double tolerance, double budget = 0.0);
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const CheckReport& other);
    size_t count(Verdict v) const;
    bool all_pass() const { return count(Verdict::fail) == 0 && count(Verdict::inconclusive) == 0; }
    // 0 all pass, 1 any fail, 2 inconclusive only.
    int exit_code() const;

    nlohmann::json to_json() const;
};

}  // namespace vosa
