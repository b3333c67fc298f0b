#include "vosa/reports.hpp"

#include "nlohmann/json.hpp"

namespace vosa {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

CheckRecord CheckRecord::exact_zero(std::string id, std::string identity, std::string inputs,
                                    bool ok, std::string residual_str) {
    CheckRecord r;
    r.id = std::move(id);
    r.identity = std::move(identity);
    r.inputs = std::move(inputs);
    r.exact = true;
    r.residual = ok ? "0" : std::move(residual_str);
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    return r;
}

CheckRecord CheckRecord::approx(std::string id, std::string identity, std::string inputs,
                                double residual, double tolerance, double budget) {
    CheckRecord r;
    r.id = std::move(id);
    r.identity = std::move(identity);
    r.inputs = std::move(inputs);
    r.exact = false;
    r.residual_value = residual;
    r.residual = std::to_string(residual);
    r.tolerance = tolerance;
    r.budget = budget;
    if (budget > tolerance) {
        r.verdict = Verdict::inconclusive;
        r.note = "truncation budget exceeds tolerance";
    } else {
        r.verdict = residual <= tolerance + budget ? Verdict::pass : Verdict::fail;
    }
    return r;
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& r : other.records) records.push_back(r);
}

size_t CheckReport::count(Verdict v) const {
    size_t n = 0;
    for (const auto& r : records)
        if (r.verdict == v) ++n;
    return n;
}

int CheckReport::exit_code() const {
    if (count(Verdict::fail) > 0) return 1;
    if (count(Verdict::inconclusive) > 0) return 2;
    return 0;
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json out;
    out["suite"] = suite;
    out["counts"] = {{"pass", count(Verdict::pass)},
                     {"fail", count(Verdict::fail)},
                     {"inconclusive", count(Verdict::inconclusive)}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["id"] = r.id;
        row["identity"] = r.identity;
        row["inputs"] = r.inputs;
        row["exact"] = r.exact;
        row["residual"] = r.residual;
        if (!r.exact) {
            row["tolerance"] = r.tolerance;
            row["budget"] = r.budget;
        }
        row["verdict"] = verdict_name(r.verdict);
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    out["checks"] = std::move(rows);
    return out;
}

}  // namespace vosa
