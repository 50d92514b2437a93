#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lefarr/gin.hpp"
#include "lefarr/groebner.hpp"
#include "lefarr/monomial_ideal.hpp"

namespace lefarr {

// multiplication map x_l^s : (S/I)_i -> (S/I)_{i+s}
struct RankProfile {
    int degree = 0;
    int shift = 1;
    long dim_source = 0;
    long dim_target = 0;
    long rank = 0;
    bool full_rank = false;
};

RankProfile map_rank_xl(const MonomialIdeal& I, int i, int s);

enum class LefschetzProperty { weak, strong };
enum class LefschetzRoute { direct_monomial, via_rgin };

struct LefschetzReport {
    LefschetzProperty property = LefschetzProperty::weak;
    bool holds = false;
    std::string element;       // "x_l" or "general linear form"
    bool element_only = false; // verdict is only about x_l (input not strongly stable)
    LefschetzRoute route = LefschetzRoute::direct_monomial;
    std::optional<RankProfile> failing_map;
    std::optional<PowerProduct> witness_monomial;  // kernel or cokernel witness
    std::optional<std::pair<PowerProduct, PowerProduct>> sl_witness;
    std::optional<GinResult> gin;  // present on the via-rgin route
};

// WLP with element x_l, checked for 0 <= i <= reg-1 only; on strongly
// stable input this decides the WLP outright, otherwise the verdict is
// labeled as x_l-only
LefschetzReport has_wlp_monomial(const MonomialIdeal& I);

// SLP with element x_l via the chain-comparison condition
LefschetzReport has_slp_monomial(const MonomialIdeal& I);

LefschetzReport has_wlp(const IdealPresentation& gens, const GinConfig& cfg);
LefschetzReport has_slp(const IdealPresentation& gens, const GinConfig& cfg);

// I + (x_1,...,x_l)^(reg+1); the quotient becomes Artinian with the same
// Lefschetz behavior
MonomialIdeal artinian_reduction(const MonomialIdeal& I);

}  // namespace lefarr
