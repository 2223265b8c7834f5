#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ghv {

/// Configuration of a verification run.
struct RunConfig {
    std::string mode = "symbolic";  // "symbolic" | "numeric"
    int q = 0;                      // numeric mode only; prime power <= 16
    long N = 6;
    long D = 3;
    std::vector<std::string> suites = {"all"};  // graph, leonard, hv, nonsym, all
    unsigned seed = 12345;
    std::string output;             // report file; empty = stdout only
    std::string format = "text";    // "json" | "csv" | "text"
    std::string cache_dir;
    long max_vertices = 1'000'000;
    bool include_timing = false;  // timing varies run to run; off keeps reports byte-stable

    bool wants(const std::string& suite) const;
    /// Throws PreconditionError on an invalid combination.
    void validate() const;
};

struct CheckRecord {
    std::string id;         // stable dotted identifier
    std::string statement;  // what was verified
    std::string status;     // "pass" | "fail" | "skipped"
    std::string witness;    // counterexample rendering when failed
    double millis = 0.0;
};

struct Report {
    static constexpr int kSchemaVersion = 1;
    RunConfig config;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
    std::string render(const std::string& format) const;
};

} // namespace ghv
