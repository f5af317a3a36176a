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

#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveclass/criteria.hpp"
#include "curveclass/curve.hpp"
#include "curveclass/grassmann.hpp"
#include "curveclass/implicitize.hpp"
#include "curveclass/strata.hpp"

namespace curveclass {

// JSON is the single input format; JSON, DOT, and aligned tables are emitted.
// Every numeric value that participates in the mathematics is serialized as a
// decimal string ("p" or "p/q"): dual sweeps produce quantities ~ d^4 that do
// not fit 64-bit JSON numbers. Structural sizes (ambient_dim, degree, level)
// stay plain JSON integers. Keys keep insertion order so identical inputs
// produce byte-identical output.

using Json = nlohmann::ordered_json;

// ---- curve and frame files ---------------------------------------------------

inline Json coeffs_to_json(const BinaryForm& f, int degree) {
    Json arr = Json::array();
    for (int j = 0; j <= degree; ++j) arr.push_back(f.is_zero() ? "0" : f.coeff(j).str());
    return arr;
}

inline BinaryForm coeffs_from_json(const Json& arr, int degree) {
    if (!arr.is_array() || arr.size() != static_cast<size_t>(degree) + 1)
        throw InvalidInput("coefficient list must have degree+1 entries");
    std::vector<Rational> cs;
    cs.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw InvalidInput("coefficients are rational strings like \"3/2\"");
        cs.push_back(Rational::parse(v.get<std::string>()));
    }
    return BinaryForm(std::move(cs));
}

inline ParamCurve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("degree") || !j.contains("coords"))
        throw InvalidInput("curve file needs ambient_dim, degree, coords");
    const int n = j.at("ambient_dim").get<int>();
    const int d = j.at("degree").get<int>();
    if (!j.at("coords").is_array()) throw InvalidInput("coords must be an array");
    PolyVector coords;
    for (const auto& row : j.at("coords")) coords.entries.push_back(coeffs_from_json(row, d));
    return ParamCurve::make(n, std::move(coords));
}

inline Json curve_to_json(const ParamCurve& c) {
    Json j;
    j["ambient_dim"] = c.ambient_dim;
    j["degree"] = c.degree;
    Json coords = Json::array();
    const PolyVector canon = canonicalized(c.coords);
    for (const auto& f : canon.entries) coords.push_back(coeffs_to_json(f, c.degree));
    j["coords"] = coords;
    return j;
}

inline GrassFrame frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("level") || !j.contains("degree") ||
        !j.contains("rows"))
        throw InvalidInput("frame file needs ambient_dim, level, degree, rows");
    const int n = j.at("ambient_dim").get<int>();
    const int k = j.at("level").get<int>();
    const int d = j.at("degree").get<int>();
    std::vector<PolyVector> rows;
    if (!j.at("rows").is_array()) throw InvalidInput("rows must be an array");
    for (const auto& row : j.at("rows")) {
        PolyVector r;
        if (!row.is_array()) throw InvalidInput("each frame row is a list of coordinate entries");
        for (const auto& entry : row) r.entries.push_back(coeffs_from_json(entry, d));
        rows.push_back(std::move(r));
    }
    return GrassFrame::make(n, k, std::move(rows));
}

inline Json frame_to_json(const GrassFrame& f) {
    Json j;
    j["ambient_dim"] = f.ambient_dim;
    j["level"] = f.level;
    j["degree"] = f.degree;
    Json rows = Json::array();
    for (const auto& r : f.rows) {
        Json row = Json::array();
        for (const auto& e : r.entries) row.push_back(coeffs_to_json(e, f.degree));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

// ---- classification reports --------------------------------------------------

inline Json triple_to_json(const ClassTriple& t) {
    Json j;
    j["d"] = to_string(t.d);
    j["g"] = to_string(t.g);
    j["c"] = to_string(t.c);
    return j;
}

inline Json report_to_json(const CriteriaReport& rep) {
    Json j;
    j["d"] = to_string(rep.triple.d);
    j["g"] = to_string(rep.triple.g);
    j["c"] = to_string(rep.triple.c);
    j["delta"] = to_string(rep.delta);
    j["kappa"] = to_string(rep.kappa);
    if (rep.has_counts) {
        j["nodes"] = to_string(rep.nodes);
        j["cusps"] = to_string(rep.cusps);
    }
    j["admissible"] = rep.admissible;
    j["smooth"] = rep.smooth;
    j["empty"] = rep.empty;
    if (rep.empty) j["empty_reason"] = rep.empty_reason;
    j["expected_dim"] = to_string(rep.expected_dimension);
    Json dual;
    dual["d"] = to_string(rep.dual.d);
    dual["g"] = to_string(rep.dual.g);
    dual["c"] = to_string(rep.dual.c);
    dual["in_range"] = rep.dual_in_range;
    dual["admissible"] = rep.dual_admissible;
    j["dual"] = dual;
    Json verdicts = Json::array();
    for (const auto& p : rep.properties) {
        Json v;
        v["property"] = property_name(p.property);
        v["verdict"] = verdict_name(p.verdict);
        Json certs = Json::array();
        for (const auto& c : p.certificates) {
            Json cj;
            cj["id"] = c.id;
            cj["route"] = (c.route == Route::Direct ? "direct" : "via_dual");
            cj["conditional"] = c.conditional;
            certs.push_back(cj);
        }
        v["certificates"] = certs;
        verdicts.push_back(v);
    }
    j["verdicts"] = verdicts;
    return j;
}

inline std::string report_to_table(const CriteriaReport& rep) {
    std::ostringstream os;
    os << "triple (d,g,c) = " << rep.triple.str() << "   delta=" << to_string(rep.delta)
       << " kappa=" << to_string(rep.kappa);
    if (rep.has_counts) os << "   nodes=" << to_string(rep.nodes) << " cusps=" << to_string(rep.cusps);
    os << "\n";
    os << "dual (d,g,c)   = " << rep.dual.str()
       << (rep.dual_in_range ? (rep.dual_admissible ? "   admissible" : "   inadmissible") : "   out of range")
       << "   expected_dim=" << to_string(rep.expected_dimension) << "\n";
    if (rep.smooth) os << "smooth stratum (delta = kappa = 0)\n";
    if (rep.empty) os << "EMPTY: " << rep.empty_reason << "\n";
    os << std::left << std::setw(24) << "property" << std::setw(9) << "verdict" << "certificates\n";
    for (const auto& p : rep.properties) {
        std::string certs;
        for (const auto& c : p.certificates) {
            if (!certs.empty()) certs += ", ";
            certs += c.id;
            certs += (c.route == Route::Direct ? "(direct" : "(via_dual");
            certs += c.conditional ? ",conditional)" : ")";
        }
        os << std::left << std::setw(24) << property_name(p.property) << std::setw(9)
           << verdict_name(p.verdict) << certs << "\n";
    }
    return os.str();
}

// ---- strata graphs -------------------------------------------------------------

inline Json graph_to_json(const StrataGraph& g) {
    Json j;
    j["d"] = to_string(g.d);
    Json nodes = Json::array();
    for (const auto& rep : g.nodes) nodes.push_back(report_to_json(rep));
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json ej;
        ej["type"] = edge_type_name(e.type);
        ej["from"] = triple_to_json(e.from);
        ej["to"] = triple_to_json(e.to);
        ej["label"] = edge_label(e.type);
        edges.push_back(ej);
    }
    j["edges"] = edges;
    return j;
}

inline std::string graph_to_dot(const StrataGraph& g) {
    auto node_id = [](const ClassTriple& t) {
        return to_string(t.d) + "," + to_string(t.g) + "," + to_string(t.c);
    };
    std::ostringstream os;
    os << "digraph \"strata_d" << to_string(g.d) << "\" {\n";
    os << "  node [shape=box];\n";
    for (const auto& rep : g.nodes) {
        os << "  \"" << node_id(rep.triple) << "\" [label=\"" << node_id(rep.triple) << " | ";
        if (rep.has_counts)
            os << to_string(rep.nodes) << "," << to_string(rep.cusps);
        else
            os << "-";
        os << "\"";
        if (rep.empty) os << " style=dashed";
        os << "];\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << node_id(e.from) << "\" -> \"" << node_id(e.to) << "\" [label=\""
           << edge_label(e.type) << "\"];\n";
    os << "}\n";
    return os.str();
}

// ---- dual sweep ---------------------------------------------------------------

inline Json sweep_row_to_json(const SweepRow& r) {
    Json j;
    j["d"] = to_string(r.d);
    j["k"] = to_string(r.cusps);
    j["dual_d"] = to_string(r.primal.c);
    j["g"] = to_string(r.primal.g);
    j["dual_n"] = to_string(r.dual_nodes);
    j["dual_k"] = to_string(r.dual_cusps);
    j["ratio_dual_d"] = r.ratio_dual_degree.str();
    j["ratio_g"] = r.ratio_genus.str();
    j["ratio_dual_n"] = r.ratio_dual_nodes.str();
    j["ratio_dual_k"] = r.ratio_dual_cusps.str();
    j["admissible"] = r.primal_admissible;
    j["lrq_primal"] = r.lrq_primal;
    j["dual_linear"] = r.dual_linear;
    j["dual_quadratic"] = r.dual_quadratic;
    return j;
}

inline Json sweep_to_json(const std::vector<SweepRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(sweep_row_to_json(r));
    Json j;
    j["rows"] = arr;
    Json limits;
    limits["ratio_dual_d"] = "2/3";
    limits["ratio_g"] = "7/18";
    limits["ratio_dual_n"] = "2/9";
    limits["ratio_dual_k"] = "19/9";
    j["limits"] = limits;
    return j;
}

inline std::string sweep_to_table(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "d" << std::setw(10) << "k" << std::setw(14) << "dual_d"
       << std::setw(14) << "g" << std::setw(18) << "dual_n" << std::setw(14) << "dual_k"
       << std::setw(11) << "d*/d^2" << std::setw(11) << "g/d^2" << std::setw(11) << "n*/d^4"
       << std::setw(11) << "k*/d^2" << std::setw(5) << "LRQ" << std::setw(5) << "kL*"
       << "q*\n";
    os << std::fixed << std::setprecision(6);
    for (const auto& r : rows) {
        os << std::left << std::setw(6) << to_string(r.d) << std::setw(10) << to_string(r.cusps)
           << std::setw(14) << to_string(r.primal.c) << std::setw(14) << to_string(r.primal.g)
           << std::setw(18) << to_string(r.dual_nodes) << std::setw(14) << to_string(r.dual_cusps)
           << std::setw(11) << r.ratio_dual_degree.to_double() << std::setw(11)
           << r.ratio_genus.to_double() << std::setw(11) << r.ratio_dual_nodes.to_double()
           << std::setw(11) << r.ratio_dual_cusps.to_double() << std::setw(5)
           << (r.lrq_primal ? "y" : "n") << std::setw(5) << (r.dual_linear ? "y" : "n")
           << (r.dual_quadratic ? "y" : "n") << "\n";
    }
    os << "limits: d*/d^2 -> 2/3, g/d^2 -> 7/18, n*/d^4 -> 2/9, k*/d^2 -> 19/9\n";
    return os.str();
}

// ---- geometry outputs -----------------------------------------------------------

inline Json associated_to_json(const AssociatedCurve& a) {
    Json j;
    j["level"] = a.level;
    j["degree"] = a.degree;
    j["removed_content_degree"] = a.removed_content_degree;
    Json pl = Json::array();
    for (const auto& f : a.plucker.entries) pl.push_back(coeffs_to_json(f, a.degree));
    j["plucker"] = pl;
    return j;
}

inline Json pluecker_check_to_json(const ParamCurve& c) {
    Json j;
    const auto ds = degree_sequence(c);
    const auto beta = total_ramification(c);
    Json dj = Json::array(), bj = Json::array(), rj = Json::array();
    bool all_zero = true;
    for (size_t k = 0; k < ds.size(); ++k) {
        dj.push_back(ds[k]);
        bj.push_back(beta[k]);
        const int prev = (k == 0) ? 0 : ds[k - 1];
        const int next = (k + 1 == ds.size()) ? 0 : ds[k + 1];
        const int residual = prev - 2 * ds[k] + next + 2 + beta[k];
        rj.push_back(residual);
        if (residual != 0) all_zero = false;
    }
    j["degrees"] = dj;
    j["beta"] = bj;
    j["residuals"] = rj;
    j["all_zero"] = all_zero;
    const auto sym = duality_symmetry_check(c);
    j["duality_degree_residuals"] = sym.degree_residuals;
    j["duality_beta_residuals"] = sym.beta_residuals;
    j["bidual_ok"] = bidual_check(c);
    const auto orth = orthogonality_check(c);
    j["orthogonality_raw"] = orth.raw_ok;
    j["orthogonality_reduced"] = orth.reduced_ok;
    return j;
}

inline std::string pluecker_check_to_table(const Json& j) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "k" << std::setw(10) << "degree" << std::setw(8) << "beta"
       << "residual\n";
    for (size_t k = 0; k < j.at("degrees").size(); ++k)
        os << std::left << std::setw(4) << k << std::setw(10) << j.at("degrees")[k].get<int>()
           << std::setw(8) << j.at("beta")[k].get<int>() << j.at("residuals")[k].get<int>() << "\n";
    os << "all residuals zero: " << (j.at("all_zero").get<bool>() ? "yes" : "no") << "\n";
    os << "bidual proportional: " << (j.at("bidual_ok").get<bool>() ? "yes" : "no") << "\n";
    os << "orthogonality (raw/reduced): " << (j.at("orthogonality_raw").get<bool>() ? "yes" : "no")
       << "/" << (j.at("orthogonality_reduced").get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

inline Json tripoly_to_json(const TriPoly& f) {
    Json j;
    j["degree"] = f.degree;
    j["polynomial"] = f.str();
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) {
        Json t;
        t["exponents"] = {e[0], e[1], e[2]};
        t["coefficient"] = c.str();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline Json error_to_json(const std::string& kind, const std::string& message) {
    Json j;
    Json e;
    e["type"] = kind;
    e["message"] = message;
    j["error"] = e;
    return j;
}

/// Canonical serialization: two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curveclass
