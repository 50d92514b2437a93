#include "lefarr/report.hpp"

namespace lefarr {

using nlohmann::json;

json json_ideal(const MonomialIdeal& I, const VariableContext& ctx) {
    json gens = json::array();
    for (const auto& g : I.min_gens()) gens.push_back(to_string(g, ctx));
    return {{"generators", gens},
            {"zero", I.is_zero()},
            {"unit", I.is_unit()}};
}

json json_gin(const GinResult& r, const VariableContext& ctx) {
    return {{"ideal", json_ideal(r.ideal, ctx)},
            {"trials_used", r.trials_used},
            {"certified", r.certified}};
}

json json_strongly_stable(const StronglyStableVerdict& v, const VariableContext& ctx) {
    json j = {{"strongly_stable", v.holds}};
    if (v.witness) {
        j["witness"] = {{"generator", to_string(v.witness->generator, ctx)},
                        {"larger_var", ctx.names[v.witness->larger_var]},
                        {"smaller_var", ctx.names[v.witness->smaller_var]},
                        {"exchanged", to_string(v.witness->exchanged, ctx)}};
    }
    return j;
}

json json_almost_revlex(const AlmostRevlexVerdict& v, const VariableContext& ctx) {
    json j = {{"almost_revlex", v.holds}};
    if (v.witness) {
        j["witness"] = {{"gen", to_string(v.witness->generator, ctx)},
                        {"missing", to_string(v.witness->missing, ctx)}};
    }
    return j;
}

json json_lefschetz(const LefschetzReport& r, const VariableContext& ctx) {
    json j = {
        {"property", r.property == LefschetzProperty::weak ? "WLP" : "SLP"},
        {"verdict", r.holds ? "holds" : "fails"},
        {"element", r.element},
        {"element_only", r.element_only},
        {"route", r.route == LefschetzRoute::direct_monomial ? "direct-monomial"
                                                             : "via-rgin"},
    };
    if (r.failing_map) {
        j["failing_map"] = {{"degree", r.failing_map->degree},
                            {"shift", r.failing_map->shift},
                            {"dim_source", r.failing_map->dim_source},
                            {"dim_target", r.failing_map->dim_target},
                            {"rank", r.failing_map->rank}};
    }
    if (r.witness_monomial)
        j["witness_monomial"] = to_string(*r.witness_monomial, ctx);
    if (r.sl_witness)
        j["sl_witness"] = {to_string(r.sl_witness->first, ctx),
                           to_string(r.sl_witness->second, ctx)};
    if (r.gin)
        j["gin"] = {{"trials_used", r.gin->trials_used},
                    {"certified", r.gin->certified}};
    return j;
}

json json_betti(const BettiTable& t) {
    json beta = json::array();
    for (const auto& [ij, b] : t.beta)
        beta.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    json m = json::array();
    for (const auto& [kj, c] : t.m)
        m.push_back({{"k", kj.first}, {"j", kj.second}, {"m", c}});
    return {{"beta", beta}, {"m", m}};
}

json json_freeness(const FreenessVerdict& v, const VariableContext& ctx) {
    json j = {{"status", v.free ? "free" : "not_free"}};
    if (v.free) j["lambda"] = v.lambda;
    if (v.witness) j["witness"] = to_string(*v.witness, ctx);
    if (v.witness_reason) j["reason"] = *v.witness_reason;
    return j;
}

json json_conjecture(const ConjectureReport& r, const VariableContext& ctx) {
    json j = {{"consistent", r.consistent}, {"d0", r.d0}};
    if (r.violating_generator)
        j["violating_generator"] = to_string(*r.violating_generator, ctx);
    return j;
}

json json_jacobian_report(const JacobianAlgebraReport& r, const VariableContext& ctx) {
    return {{"schema_version", 1},
            {"n", r.n},
            {"gin", json_gin(r.gin, ctx)},
            {"hilbert_function", r.hilbert},
            {"wlp", json_lefschetz(r.wlp, ctx)},
            {"slp", json_lefschetz(r.slp, ctx)},
            {"almost_revlex", json_almost_revlex(r.almost_revlex, ctx)},
            {"freeness", json_freeness(r.freeness, ctx)},
            {"conjecture", json_conjecture(r.conjecture, ctx)}};
}

}  // namespace lefarr
