#include "hexalab/report.hpp"

namespace hexalab {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::degenerate_resampled: return "degenerate-resampled";
        case CheckStatus::error: return "error";
    }
    return "?";
}

Json json_u64(std::uint64_t v) {
    if (v <= (std::uint64_t(1) << 53)) return v;
    return std::to_string(v);
}

bool Report::all_ok() const {
    for (const auto& c : checks_)
        if (c.status != CheckStatus::pass && c.status != CheckStatus::degenerate_resampled)
            return false;
    return true;
}

Json Report::to_json() const {
    Json j;
    j["config"] = config;
    Json arr = Json::array();
    int passed = 0, failed = 0, resampled = 0, errors = 0;
    for (const auto& c : checks_) {
        Json rec;
        rec["name"] = c.name;
        rec["params"] = c.params.is_null() ? Json::object() : c.params;
        rec["status"] = status_name(c.status);
        rec["data"] = c.data.is_null() ? Json::object() : c.data;
        arr.push_back(std::move(rec));
        switch (c.status) {
            case CheckStatus::pass: ++passed; break;
            case CheckStatus::fail: ++failed; break;
            case CheckStatus::degenerate_resampled: ++resampled; break;
            case CheckStatus::error: ++errors; break;
        }
    }
    j["checks"] = std::move(arr);
    j["summary"] = Json{{"total", static_cast<int>(checks_.size())},
                        {"passed", passed},
                        {"failed", failed},
                        {"degenerate_resampled", resampled},
                        {"errors", errors},
                        {"ok", all_ok()}};
    return j;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

} // namespace hexalab
