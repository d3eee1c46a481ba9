#include "qface/report.hpp"

namespace qface {

nlohmann::json report_to_json(const Report& r) {
    return nlohmann::json{{"command", r.command},
                          {"input_digest", r.input_digest},
                          {"result", r.result},
                          {"elapsed_ms", r.elapsed_ms},
                          {"version", r.version}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.result = j.at("result");
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.version = j.at("version").get<std::string>();
    return r;
}

} // namespace qface
