#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "lefarr/gin.hpp"
#include "lefarr/io.hpp"
#include "lefarr/lefschetz.hpp"
#include "lefarr/report.hpp"

using nlohmann::json;
using namespace lefarr;

namespace {

struct Options {
    std::string verb;
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    int gin_bound = 1000;
    int gin_trials = 2;
    int max_degree = 10;
    std::string format = "json";
    bool strict_gin = false;

    GinConfig gin() const {
        GinConfig cfg;
        cfg.seed = seed;
        cfg.coefficient_bound = gin_bound;
        cfg.agreement_trials = gin_trials;
        return cfg;
    }
};

struct StrictGinFailure : std::runtime_error {
    StrictGinFailure() : std::runtime_error("gin not certified after retries (--strict-gin)") {}
};

void check_strict(const Options& opt, const GinResult& r) {
    if (opt.strict_gin && !r.certified) throw StrictGinFailure();
}

// Verbs on ideal files prefer the monomial route when the file is a
// monomial ideal; polynomial input goes through a Groebner basis (hilbert)
// or rgin (lefschetz, betti).
json run_on_ideal(const Options& opt, const IdealFile& file) {
    const VariableContext& ctx = file.ctx;
    if (opt.verb == "rgin") {
        const GinResult r = rgin(file.presentation, opt.gin());
        check_strict(opt, r);
        return {{"rgin", json_gin(r, ctx)}};
    }
    if (opt.verb == "strongly-stable") {
        if (!file.monomial) throw std::runtime_error("strongly-stable needs a monomial ideal file");
        return {{"strongly_stable", json_strongly_stable(is_strongly_stable(*file.monomial), ctx)}};
    }
    if (opt.verb == "almost-revlex") {
        if (!file.monomial) throw std::runtime_error("almost-revlex needs a monomial ideal file");
        return {{"almost_revlex", json_almost_revlex(is_almost_revlex(*file.monomial), ctx)}};
    }
    if (opt.verb == "hilbert") {
        MonomialIdeal lt = file.monomial
                               ? *file.monomial
                               : leading_term_ideal(buchberger(file.presentation));
        json values = json::array();
        for (int d = 0; d <= opt.max_degree; ++d)
            values.push_back(hilbert_function(lt, d));
        return {{"hilbert", {{"max_degree", opt.max_degree}, {"values", values}}}};
    }
    if (opt.verb == "lefschetz") {
        LefschetzReport wlp, slp;
        if (file.monomial) {
            wlp = has_wlp_monomial(*file.monomial);
            slp = has_slp_monomial(*file.monomial);
        } else {
            wlp = has_wlp(file.presentation, opt.gin());
            slp = has_slp(file.presentation, opt.gin());
            if (wlp.gin) check_strict(opt, *wlp.gin);
            if (slp.gin) check_strict(opt, *slp.gin);
        }
        return {{"wlp", json_lefschetz(wlp, ctx)}, {"slp", json_lefschetz(slp, ctx)}};
    }
    if (opt.verb == "betti") {
        MonomialIdeal I = MonomialIdeal::zero(ctx.size());
        json j;
        if (file.monomial && is_strongly_stable(*file.monomial)) {
            I = *file.monomial;
            j["route"] = "direct";
        } else {
            const GinResult r = rgin(file.presentation, opt.gin());
            check_strict(opt, r);
            I = r.ideal;
            j["route"] = "via-rgin";
            j["gin"] = {{"certified", r.certified}, {"trials_used", r.trials_used}};
        }
        j["betti"] = json_betti(betti_eliahou_kervaire(I));
        return j;
    }
    throw std::runtime_error("verb '" + opt.verb + "' expects an arrangement file");
}

json run_on_arrangement(const Options& opt, const ArrangementFile& file) {
    const VariableContext& ctx = file.ctx;
    if (opt.verb == "free") {
        const GinResult r = rgin(jacobian_ideal(file.arrangement), opt.gin());
        check_strict(opt, r);
        json j = {{"freeness", json_freeness(is_free_via_rgin_of(r.ideal, file.arrangement.size()), ctx)}};
        j["gin"] = {{"certified", r.certified}, {"trials_used", r.trials_used}};
        return j;
    }
    if (opt.verb == "conjecture") {
        const GinResult r = rgin(jacobian_ideal(file.arrangement), opt.gin());
        check_strict(opt, r);
        json j = {{"conjecture", json_conjecture(check_conjecture_d0_of(r.ideal), ctx)}};
        j["gin"] = {{"certified", r.certified}, {"trials_used", r.trials_used}};
        return j;
    }
    if (opt.verb == "report") {
        const JacobianAlgebraReport rep =
            jacobian_algebra_report(file.arrangement, opt.gin(), opt.max_degree);
        check_strict(opt, rep.gin);
        return json_jacobian_report(rep, ctx);
    }
    throw std::runtime_error("verb '" + opt.verb + "' expects an ideal file");
}

bool arrangement_verb(const std::string& verb) {
    return verb == "free" || verb == "conjecture" || verb == "report";
}

void print_text(std::ostream& os, const json& j, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
                os << pad << k << ":\n";
                print_text(os, v, depth + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) print_text(os, v, depth);
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

int run(const Options& opt) {
    std::vector<json> docs;
    for (const auto& path : opt.inputs) {
        json doc = {{"input", path}, {"schema_version", 1}, {"verb", opt.verb}};
        json body = arrangement_verb(opt.verb) ? run_on_arrangement(opt, read_arrangement_file(path))
                                               : run_on_ideal(opt, read_ideal_file(path));
        doc.update(body);
        docs.push_back(std::move(doc));
    }
    for (const auto& doc : docs) {
        if (opt.format == "json") {
            std::cout << doc.dump(2) << '\n';
        } else {
            print_text(std::cout, doc, 0);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lefschetz/gin/freeness analyses on ideals and hyperplane arrangements"};
    Options opt;
    app.add_option("verb", opt.verb, "analysis to run")
        ->required()
        ->check(CLI::IsMember({"rgin", "lefschetz", "betti", "almost-revlex", "strongly-stable",
                               "hilbert", "free", "conjecture", "report"}));
    app.add_option("inputs", opt.inputs, "input files, processed in order")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--seed", opt.seed, "random seed for gin trials");
    app.add_option("--gin-bound", opt.gin_bound, "coefficient bound for random matrices")
        ->check(CLI::PositiveNumber);
    app.add_option("--gin-trials", opt.gin_trials, "independent trials that must agree")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-degree", opt.max_degree, "top degree for Hilbert function tables")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--strict-gin", opt.strict_gin, "fail when the gin cannot be certified");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(opt);
    } catch (const StrictGinFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
