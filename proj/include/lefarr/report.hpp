#pragma once

#include <json.hpp>

#include "lefarr/arrangement.hpp"
#include "lefarr/context.hpp"
#include "lefarr/io.hpp"
#include "lefarr/lefschetz.hpp"
#include "lefarr/monomial_ideal.hpp"

namespace lefarr {

// JSON pieces of the CLI reports. nlohmann keeps object keys sorted, so
// dumps are canonical; generators are listed DegRevLex descending.
nlohmann::json json_ideal(const MonomialIdeal& I, const VariableContext& ctx);
nlohmann::json json_gin(const GinResult& r, const VariableContext& ctx);
nlohmann::json json_strongly_stable(const StronglyStableVerdict& v,
                                    const VariableContext& ctx);
nlohmann::json json_almost_revlex(const AlmostRevlexVerdict& v,
                                  const VariableContext& ctx);
nlohmann::json json_lefschetz(const LefschetzReport& r, const VariableContext& ctx);
nlohmann::json json_betti(const BettiTable& t);
nlohmann::json json_freeness(const FreenessVerdict& v, const VariableContext& ctx);
nlohmann::json json_conjecture(const ConjectureReport& r, const VariableContext& ctx);
nlohmann::json json_jacobian_report(const JacobianAlgebraReport& r,
                                    const VariableContext& ctx);

}  // namespace lefarr
