#include "ghv/report.hpp"

#include <algorithm>
#include <sstream>

#include "ghv/errors.hpp"
#include "ghv/finite_field.hpp"
#include "ghv/graph.hpp"

namespace ghv {

bool RunConfig::wants(const std::string& suite) const {
    return std::find(suites.begin(), suites.end(), "all") != suites.end() ||
           std::find(suites.begin(), suites.end(), suite) != suites.end();
}

void RunConfig::validate() const {
    if (mode != "symbolic" && mode != "numeric")
        throw PreconditionError("mode must be 'symbolic' or 'numeric'");
    if (D < 3) throw PreconditionError("D >= 3 required");
    if (N < 2 * D) throw PreconditionError("N >= 2D required");
    if (format != "json" && format != "csv" && format != "text")
        throw PreconditionError("format must be json, csv or text");
    for (const auto& s : suites)
        if (s != "all" && s != "graph" && s != "leonard" && s != "hv" && s != "nonsym")
            throw PreconditionError("unknown suite '" + s + "'");
    if (mode == "numeric") {
        if (!FiniteField::is_prime_power(q) || q > 16)
            throw PreconditionError(std::to_string(q) + " is not a prime power <= 16");
        mpz_class count = subspace_count(q, static_cast<int>(N), static_cast<int>(D));
        if (count > max_vertices)
            throw PreconditionError("vertex budget exceeded: |X| = " + count.get_str());
    }
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schemaVersion"] = kSchemaVersion;
    j["config"] = {{"mode", config.mode},     {"q", config.q},
                   {"N", config.N},           {"D", config.D},
                   {"suites", config.suites}, {"seed", config.seed},
                   {"format", config.format}};
    j["allPass"] = all_pass();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json rec;
        rec["id"] = c.id;
        rec["statement"] = c.statement;
        rec["status"] = c.status;
        rec["witness"] = c.witness;
        if (config.include_timing) rec["millis"] = c.millis;
        arr.push_back(std::move(rec));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "id,statement,status,witness" << (config.include_timing ? ",millis" : "") << "\n";
    auto esc = [](const std::string& s) {
        std::string r = "\"";
        for (char c : s) {
            if (c == '"') r += '"';
            r += c;
        }
        return r + "\"";
    };
    for (const auto& c : checks) {
        os << esc(c.id) << "," << esc(c.statement) << "," << c.status << "," << esc(c.witness);
        if (config.include_timing) os << "," << c.millis;
        os << "\n";
    }
    return os.str();
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "  " << c.id
           << "  " << c.statement;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    os << (all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << " ("
       << checks.size() << " checks)\n";
    return os.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "csv") return to_csv();
    return to_text();
}

} // namespace ghv
