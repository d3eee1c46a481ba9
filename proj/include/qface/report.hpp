#ifndef QFACE_REPORT_HPP
#define QFACE_REPORT_HPP

#include <json.hpp>

#include <string>

namespace qface {

/// Machine-readable envelope for CLI results.
struct Report {
    std::string command;
    std::string input_digest;
    nlohmann::json result;
    double elapsed_ms = 0.0;
    std::string version;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

} // namespace qface

#endif
