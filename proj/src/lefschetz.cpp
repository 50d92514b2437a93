#include "lefarr/lefschetz.hpp"

#include <algorithm>

namespace lefarr {

RankProfile map_rank_xl(const MonomialIdeal& I, int i, int s) {
    RankProfile p;
    p.degree = i;
    p.shift = s;
    p.dim_source = hilbert_function(I, i);
    p.dim_target = hilbert_function(I, i + s);
    p.rank = xl_multiplication_rank(I, i, s);
    p.full_rank = p.rank == std::min(p.dim_source, p.dim_target);
    return p;
}

namespace {

// first failing degree plus an explicit kernel or cokernel monomial
void attach_witness(const MonomialIdeal& I, const RankProfile& p,
                    LefschetzReport& report) {
    report.failing_map = p;
    const std::size_t last = I.nvars() - 1;
    const PowerProduct shift = PowerProduct::variable(I.nvars(), last, p.shift);
    if (p.dim_source <= p.dim_target) {
        // not injective: a standard monomial killed by x_l^s
        for (const auto& m : standard_monomials(I, p.degree))
            if (I.contains(m * shift)) {
                report.witness_monomial = m;
                return;
            }
    }
    // not surjective: a standard monomial in the target not divisible by x_l^s
    for (const auto& m : standard_monomials(I, p.degree + p.shift))
        if (m.exponent(last) < p.shift) {
            report.witness_monomial = m;
            return;
        }
}

}  // namespace

LefschetzReport has_wlp_monomial(const MonomialIdeal& I) {
    LefschetzReport report;
    report.property = LefschetzProperty::weak;
    report.element = "x_l";
    report.route = LefschetzRoute::direct_monomial;
    report.element_only = !is_strongly_stable(I).holds;
    const int reg = I.is_zero() || I.is_unit() ? 0 : *I.max_generator_degree();
    for (int i = 0; i + 1 <= reg; ++i) {
        const RankProfile p = map_rank_xl(I, i, 1);
        if (!p.full_rank) {
            report.holds = false;
            attach_witness(I, p, report);
            return report;
        }
    }
    report.holds = true;
    return report;
}

LefschetzReport has_slp_monomial(const MonomialIdeal& I) {
    LefschetzReport report;
    report.property = LefschetzProperty::strong;
    report.element = "x_l";
    report.route = LefschetzRoute::direct_monomial;
    report.element_only = !is_strongly_stable(I).holds;
    const SlVerdict v = sl_condition(I);
    report.holds = v.holds;
    report.sl_witness = v.witness;
    return report;
}

namespace {

LefschetzReport via_rgin(const IdealPresentation& gens, const GinConfig& cfg,
                         LefschetzProperty property) {
    const GinResult gin_result = rgin(gens, cfg);
    LefschetzReport report = property == LefschetzProperty::weak
                                 ? has_wlp_monomial(gin_result.ideal)
                                 : has_slp_monomial(gin_result.ideal);
    report.route = LefschetzRoute::via_rgin;
    report.element = "general linear form";
    report.element_only = false;
    report.gin = gin_result;
    return report;
}

}  // namespace

LefschetzReport has_wlp(const IdealPresentation& gens, const GinConfig& cfg) {
    return via_rgin(gens, cfg, LefschetzProperty::weak);
}

LefschetzReport has_slp(const IdealPresentation& gens, const GinConfig& cfg) {
    return via_rgin(gens, cfg, LefschetzProperty::strong);
}

MonomialIdeal artinian_reduction(const MonomialIdeal& I) {
    const int reg = I.is_zero() || I.is_unit() ? 0 : *I.max_generator_degree();
    auto gens = I.min_gens();
    for (auto& m : monomials_of_degree(I.nvars(), reg + 1))
        gens.push_back(std::move(m));
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

}  // namespace lefarr
