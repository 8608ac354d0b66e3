#ifndef HEXALAB_REPORT_HPP
#define HEXALAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hexalab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "hexalab";
inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, degenerate_resampled, error };

const char* status_name(CheckStatus s);

// Integers above the 53-bit safe range are emitted as decimal strings so the
// JSON round-trips losslessly.
Json json_u64(std::uint64_t v);

struct CheckRecord {
    std::string name;
    Json params;
    CheckStatus status = CheckStatus::pass;
    Json data;
};

// Verification report: config echo, ordered check records, summary.  All
// content is deterministic for a fixed config; wall time goes to stderr, not
// here, so identical configs produce byte-identical files.
class Report {
public:
    Json config;

    void add(CheckRecord rec) { checks_.push_back(std::move(rec)); }
    const std::vector<CheckRecord>& checks() const { return checks_; }

    bool all_ok() const;
    Json to_json() const;
    std::string to_string() const;

private:
    std::vector<CheckRecord> checks_;
};

} // namespace hexalab

#endif
