#include "signed_spectra/report.hpp"

#include <json.hpp>

namespace signed_spectra {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified: return "verified";
        case ClaimStatus::violated: return "violated";
        case ClaimStatus::resolved_discrepancy: return "resolved-discrepancy";
    }
    return "unknown";
}

bool VerificationReport::any_violated() const {
    for (const auto& c : claims)
        if (c.status == ClaimStatus::violated) return true;
    return false;
}

void VerificationReport::add(std::string id, std::string anchor, ClaimStatus status,
                             std::string details) {
    claims.push_back({std::move(id), std::move(anchor), status, std::move(details)});
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["version"] = 1;
    j["seed"] = seed;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        j["claims"].push_back({{"id", c.id},
                               {"anchor", c.anchor},
                               {"status", to_string(c.status)},
                               {"details", c.details}});
    }
    j["elapsed_ms"] = 0;
    return j.dump(2);
}

}  // namespace signed_spectra
