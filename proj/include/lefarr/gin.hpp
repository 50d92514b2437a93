#pragma once

#include <cstdint>

#include "lefarr/groebner.hpp"
#include "lefarr/monomial_ideal.hpp"

namespace lefarr {

struct GinConfig {
    std::uint64_t seed = 0;
    int coefficient_bound = 1000;  // matrix entries drawn from [-B, B]
    int agreement_trials = 2;
    int max_retries = 3;
};

struct GinResult {
    MonomialIdeal ideal;
    int trials_used = 0;
    bool certified = false;  // all agreement trials returned the same ideal
};

// rgin(I): leading term ideal after a random dense integer change of
// coordinates, certified by agreement of independent trials. Deterministic
// for a fixed (config, input).
GinResult rgin(const IdealPresentation& gens, const GinConfig& cfg);

// a certified gin must be strongly stable; failure flags a bad sample
StronglyStableVerdict strongly_stable_certificate(const GinResult& r);

}  // namespace lefarr
