#ifndef SIGNED_SPECTRA_HARNESS_HPP
#define SIGNED_SPECTRA_HARNESS_HPP

#include <cstdint>

#include "signed_spectra/report.hpp"

namespace signed_spectra {

/// Transcribed proof matrices (A1/B1, the A2/B2 family, the exceptional
/// A3..A5/B3..B5, the A6..A9 families, both unbalanced-K4 families) against
/// their least-eigenvalue thresholds.
VerificationReport verify_proof_matrices();

/// All 2^m signatures of P4, C5 and H1..H8 against the least-eigenvalue
/// thresholds their role requires, plus transcription self-tests.
VerificationReport verify_forbidden_subgraphs();

/// Exhaustive least-eigenvalue classification over all connected signed
/// graphs with n <= 5 (n = 6 behind the flag): the -1 and -2 equality
/// characterizations, the (-2,-1) gap, distance cospectrality vs balance, and
/// the all-negative complete multipartite multiplicities.
VerificationReport verify_classification(bool include_n6 = false);

/// Random signed complete graphs: eigenvector-guided sign-pair reversals must
/// move lambda_1 / lambda_n in the stated direction, strictly when the
/// Rayleigh margin is positive.
VerificationReport verify_monotonicity_lemmas(int trials, std::uint64_t seed);

}  // namespace signed_spectra

#endif
