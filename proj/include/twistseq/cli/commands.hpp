#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace twistseq::cli {

inline constexpr const char* schema_version = "twistseq-report/1";

enum class Format { text, json };

struct RunConfig {
    std::string command;  // validate | build | check | les | hochschild
    std::string category_path;
    std::vector<std::string> spheres;
    std::optional<std::pair<std::string, std::string>> pair;  // les
    std::optional<std::pair<std::string, std::string>> at;    // build
    int bound = 4;
    int cap = 6;
    std::optional<int> max_order;
    std::string out;
    Format format = Format::text;
};

/// Exit statuses.
enum Status { pass = 0, failed = 1, input_error = 2 };

struct RunResult {
    int status = pass;
    nlohmann::ordered_json report;
};

/// Runs one command. Never throws: input problems give status 2 with an
/// "error" entry in the report.
RunResult run(const RunConfig& config);

/// Report as text or as a JSON document (newline terminated).
std::string render(const RunResult& result, Format format);

}  // namespace twistseq::cli
