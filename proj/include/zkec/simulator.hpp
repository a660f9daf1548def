#pragma once

// Honest-verifier simulator for Schnorr: picks the challenge and response
// first and solves for the commitment, A = m*G - c*B. Its transcripts
// verify without any witness, which is the zero-knowledge argument in
// executable form.

#include "zkec/protocol.hpp"
#include "zkec/transcript.hpp"

namespace zkec {

/// Point A, Scalar c, Scalar m, Final accept; the same shape as a real
/// Schnorr session.
Transcript simulate_schnorr(const Curve& curve, const Statement& st, Rng& rng);

}  // namespace zkec
