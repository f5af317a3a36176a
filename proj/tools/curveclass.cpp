/*
   Copyright 2026 the curveclass authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// curveclass: exact-arithmetic classification of equiclassical families of
// plane curves and duality computations for rationally parametrized curves.
//
// Exit codes: 0 success, 2 validation error (malformed input, inadmissible
// triple, degenerate curve), 3 internal inconsistency. Errors are reported as
// JSON objects on stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curveclass/curveclass.hpp"

namespace cc = curveclass;

namespace {

cc::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cc::InvalidInput("cannot open '" + path + "'");
    cc::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw cc::InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

cc::Integer max_strata_degree() {
    if (const char* env = std::getenv("CURVECLASS_MAX_DEGREE")) {
        try {
            cc::Integer bound = cc::parse_integer(env);
            if (bound < 1) throw cc::InvalidInput("CURVECLASS_MAX_DEGREE must be >= 1");
            return bound;
        } catch (const cc::Error&) {
            throw cc::InvalidInput("CURVECLASS_MAX_DEGREE is not a valid integer");
        }
    }
    return cc::Integer(12);
}

struct TripleFlags {
    std::string d, g, c, n, k, delta, kappa;

    cc::ClassTriple resolve() const {
        const bool gc = !g.empty() || !c.empty();
        const bool nk = !n.empty() || !k.empty();
        const bool dk = !delta.empty() || !kappa.empty();
        if ((gc ? 1 : 0) + (nk ? 1 : 0) + (dk ? 1 : 0) != 1)
            throw cc::InvalidInput("give exactly one parameterization: --g --c | --n --k | --delta --kappa");
        if (d.empty()) throw cc::InvalidInput("--d is required");
        const cc::Integer dd = cc::parse_integer(d);
        if (dd < 1) throw cc::InvalidInput("degree must be >= 1");
        if (gc) {
            if (g.empty() || c.empty()) throw cc::InvalidInput("--g and --c go together");
            return cc::ClassTriple{dd, cc::parse_integer(g), cc::parse_integer(c)};
        }
        if (nk) {
            if (n.empty() || k.empty()) throw cc::InvalidInput("--n and --k go together");
            const cc::Integer nn = cc::parse_integer(n), kk = cc::parse_integer(k);
            if (nn < 0 || kk < 0) throw cc::InvalidInput("node and cusp counts must be >= 0");
            return cc::triple_of(cc::from_nodal_cuspidal(cc::NodalCuspidal{dd, nn, kk}));
        }
        if (delta.empty() || kappa.empty()) throw cc::InvalidInput("--delta and --kappa go together");
        const cc::Integer de = cc::parse_integer(delta), ka = cc::parse_integer(kappa);
        if (de < 0 || ka < 0) throw cc::InvalidInput("delta and kappa must be >= 0");
        return cc::triple_of(cc::DeltaKappa{dd, de, ka});
    }
};

void emit(const std::string& text) { std::cout << text; }

int run(int argc, char** argv) {
    CLI::App app{"exact classification of equiclassical plane-curve families and curve duality checks"};
    app.require_subcommand(1);
    int lrq_exponent = 2;
    app.add_option("--lrq-exponent", lrq_exponent, "exponent in the quadratic local-regularity bound (2 or 3)")
        ->check(CLI::IsMember({2, 3}));

    // classify
    auto* classify = app.add_subcommand("classify", "classify one equiclassical family");
    TripleFlags flags;
    classify->add_option("--d", flags.d, "degree");
    classify->add_option("--g", flags.g, "geometric genus");
    classify->add_option("--c", flags.c, "class (degree of the dual curve)");
    classify->add_option("--n", flags.n, "virtual node count");
    classify->add_option("--k", flags.k, "virtual cusp count");
    classify->add_option("--delta", flags.delta, "total delta-invariant");
    classify->add_option("--kappa", flags.kappa, "total kappa-invariant");
    std::string classify_format = "json";
    classify->add_option("--format", classify_format, "json|table")->check(CLI::IsMember({"json", "table"}));

    // strata
    auto* strata = app.add_subcommand("strata", "stratification graph of one degree");
    std::string strata_d;
    strata->add_option("--d", strata_d, "degree")->required();
    std::string strata_format = "json";
    strata->add_option("--format", strata_format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    // dual-triple
    auto* dualt = app.add_subcommand("dual-triple", "dualize a (d,g,c) triple");
    std::string dt_d, dt_g, dt_c;
    dualt->add_option("--d", dt_d)->required();
    dualt->add_option("--g", dt_g)->required();
    dualt->add_option("--c", dt_c)->required();

    // curve-file subcommands
    std::string input_path;
    auto* assoc = app.add_subcommand("associated", "k-th associated curve of a parametrized curve");
    int assoc_k = 1;
    assoc->add_option("--input", input_path, "curve JSON file")->required();
    assoc->add_option("--k", assoc_k, "associated level")->required();

    auto* pcheck = app.add_subcommand("pluecker-check", "degree/ramification bookkeeping and duality residuals");
    pcheck->add_option("--input", input_path, "curve JSON file")->required();
    std::string pcheck_format = "json";
    pcheck->add_option("--format", pcheck_format, "json|table")->check(CLI::IsMember({"json", "table"}));

    auto* dualc = app.add_subcommand("dual", "dual curve of a parametrized curve");
    dualc->add_option("--input", input_path, "curve JSON file")->required();

    auto* integrable = app.add_subcommand("integrable", "integrability test for a Grassmannian frame");
    integrable->add_option("--input", input_path, "frame JSON file")->required();
    bool do_recover = false;
    integrable->add_flag("--recover", do_recover, "also emit the recovered underlying curve when integrable");

    auto* implicit = app.add_subcommand("implicitize", "implicit equation of a plane parametrized curve");
    implicit->add_option("--input", input_path, "curve JSON file")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "duality sweep over extremal cuspidal strata");
    std::string sweep_from, sweep_to;
    sweep->add_option("--from", sweep_from, "first degree (>= 5)")->required();
    sweep->add_option("--to", sweep_to, "last degree")->required();
    std::string sweep_format = "json";
    sweep->add_option("--format", sweep_format, "json|table")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(cc::dump(cc::error_to_json("InvalidInput", e.what())));
        return 2;
    }

    cc::EvalOptions opts;
    opts.lrq_exponent = lrq_exponent;

    try {
        if (classify->parsed()) {
            const cc::ClassTriple t = flags.resolve();
            const cc::CriteriaReport rep = cc::evaluate(t, opts);
            if (rep.empty) {
                cc::Json err = cc::error_to_json("NotAdmissible", "family is empty: " + rep.empty_reason);
                err["report"] = cc::report_to_json(rep);
                emit(cc::dump(err));
                return 2;
            }
            emit(classify_format == "table" ? cc::report_to_table(rep) : cc::dump(cc::report_to_json(rep)));
            return 0;
        }
        if (strata->parsed()) {
            const cc::StrataGraph g = cc::strata_graph(cc::parse_integer(strata_d), opts, max_strata_degree());
            emit(strata_format == "dot" ? cc::graph_to_dot(g) : cc::dump(cc::graph_to_json(g)));
            return 0;
        }
        if (dualt->parsed()) {
            const cc::ClassTriple t{cc::parse_integer(dt_d), cc::parse_integer(dt_g), cc::parse_integer(dt_c)};
            const cc::ClassTriple dual = cc::dual_triple(t);
            cc::Json j;
            j["input"] = cc::triple_to_json(t);
            j["dual"] = cc::triple_to_json(dual);
            const cc::DeltaKappa dk = cc::delta_kappa_of(t), ddk = cc::delta_kappa_of(dual);
            j["input"]["delta"] = cc::to_string(dk.delta);
            j["input"]["kappa"] = cc::to_string(dk.kappa);
            j["input"]["admissible"] = cc::is_admissible(dk);
            j["dual"]["delta"] = cc::to_string(ddk.delta);
            j["dual"]["kappa"] = cc::to_string(ddk.kappa);
            j["dual"]["admissible"] = cc::is_admissible(ddk);
            j["expected_dim"] = cc::to_string(cc::expected_dim(t));
            j["involution_ok"] = (cc::dual_triple(dual) == t);
            j["expected_dim_invariant"] = (cc::expected_dim(t) == cc::expected_dim(dual));
            emit(cc::dump(j));
            return 0;
        }
        if (assoc->parsed()) {
            const cc::ParamCurve c = cc::curve_from_json(load_json(input_path));
            emit(cc::dump(cc::associated_to_json(cc::associated(c, assoc_k))));
            return 0;
        }
        if (pcheck->parsed()) {
            const cc::ParamCurve c = cc::curve_from_json(load_json(input_path));
            const cc::Json j = cc::pluecker_check_to_json(c);
            emit(pcheck_format == "table" ? cc::pluecker_check_to_table(j) : cc::dump(j));
            return 0;
        }
        if (dualc->parsed()) {
            const cc::ParamCurve c = cc::curve_from_json(load_json(input_path));
            emit(cc::dump(cc::curve_to_json(cc::dual(c))));
            return 0;
        }
        if (integrable->parsed()) {
            const cc::GrassFrame f = cc::frame_from_json(load_json(input_path));
            const cc::IntegrabilityVerdict v = cc::integrability_check(f);
            cc::Json j;
            j["verdict"] = cc::integrability_name(v);
            if (do_recover && v == cc::IntegrabilityVerdict::Integrable)
                j["recovered"] = cc::curve_to_json(cc::recover_underlying(f));
            emit(cc::dump(j));
            return 0;
        }
        if (implicit->parsed()) {
            const cc::ParamCurve c = cc::curve_from_json(load_json(input_path));
            emit(cc::dump(cc::tripoly_to_json(cc::implicitize(c))));
            return 0;
        }
        if (sweep->parsed()) {
            const auto rows = cc::dual_sweep(cc::parse_integer(sweep_from), cc::parse_integer(sweep_to), opts);
            emit(sweep_format == "table" ? cc::sweep_to_table(rows) : cc::dump(cc::sweep_to_json(rows)));
            return 0;
        }
    } catch (const cc::InternalInconsistency& e) {
        emit(cc::dump(cc::error_to_json(e.kind(), e.what())));
        return 3;
    } catch (const cc::Error& e) {
        emit(cc::dump(cc::error_to_json(e.kind(), e.what())));
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
