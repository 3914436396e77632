#ifndef SIGNED_SPECTRA_REPORT_HPP
#define SIGNED_SPECTRA_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace signed_spectra {

enum class ClaimStatus { verified, violated, resolved_discrepancy };

std::string to_string(ClaimStatus s);

/// One executable check bound to a source anchor. A violated claim carries a
/// reproducible counterexample in `details`.
struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::verified;
    std::string details;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<ClaimResult> claims;
    double elapsed_ms = 0;

    bool any_violated() const;
    void add(std::string id, std::string anchor, ClaimStatus status, std::string details = {});
    /// Machine form. elapsed_ms is serialized as 0 so that identical runs
    /// produce identical bytes; wall-clock time stays on stderr.
    std::string to_json() const;
};

}  // namespace signed_spectra

#endif
