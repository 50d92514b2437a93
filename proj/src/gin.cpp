#include "lefarr/gin.hpp"

#include <random>
#include <stdexcept>

#include "lefarr/linear_change.hpp"

namespace lefarr {

namespace {

MonomialIdeal single_trial(const IdealPresentation& gens, std::mt19937_64& rng,
                           int bound) {
    const std::size_t l = gens.nvars;
    std::uniform_int_distribution<int> entry(-bound, bound);
    for (;;) {
        std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        if (determinant(m) == 0) continue;  // resample singular matrices
        const LinearChange g(std::move(m));
        std::vector<Polynomial> transformed;
        transformed.reserve(gens.generators.size());
        for (const auto& f : gens.generators)
            transformed.push_back(g.apply(f).primitive_part());
        const auto pres = IdealPresentation::make(l, std::move(transformed));
        return leading_term_ideal(buchberger(pres));
    }
}

}  // namespace

GinResult rgin(const IdealPresentation& gens, const GinConfig& cfg) {
    if (!gens.homogeneous)
        throw std::invalid_argument("rgin needs a homogeneous ideal");
    if (cfg.coefficient_bound < 2 || cfg.agreement_trials < 2)
        throw std::invalid_argument("bad gin configuration");
    if (gens.generators.empty())
        return {MonomialIdeal::zero(gens.nvars), 0, true};

    std::mt19937_64 rng(cfg.seed);
    int bound = cfg.coefficient_bound;
    int trials_used = 0;
    MonomialIdeal best = MonomialIdeal::zero(gens.nvars);
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        std::vector<MonomialIdeal> results;
        bool agreed = true;
        for (int t = 0; t < cfg.agreement_trials; ++t) {
            MonomialIdeal r = single_trial(gens, rng, bound);
            ++trials_used;
            // a non-strongly-stable leading term ideal is a non-generic
            // sample; treat it like a disagreement
            if (!is_strongly_stable(r).holds ||
                (!results.empty() && !(r == results.front())))
                agreed = false;
            results.push_back(std::move(r));
            if (!agreed) break;
        }
        if (agreed) return {results.front(), trials_used, true};
        for (const auto& r : results) {
            // keep the DegRevLex-largest candidate for the uncertified fallback
            if (best.is_zero() && !r.is_zero()) best = r;
            else if (!r.is_zero() && !r.min_gens().empty() && !best.min_gens().empty() &&
                     degrevlex_greater(r.min_gens().front(), best.min_gens().front()))
                best = r;
        }
        bound *= 2;
    }
    return {best, trials_used, false};
}

StronglyStableVerdict strongly_stable_certificate(const GinResult& r) {
    return is_strongly_stable(r.ideal);
}

}  // namespace lefarr
