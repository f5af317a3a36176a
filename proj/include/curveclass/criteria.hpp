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

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curveclass/equiclassical.hpp"
#include "curveclass/errors.hpp"

namespace curveclass {

// Catalog of sufficient regularity conditions for equiclassical families, and
// the aggregate classifier with duality closure.
//
// Every criterion is an inequality in (d, g, c) or equivalently in
// (d, delta, kappa). The classifier evaluates the primal criteria on the
// triple itself (direct certificates) and on its dual (c, g, d); a criterion
// firing on the dual certifies the property for the triple through the
// duality isomorphism and is reported under the dualized catalog id
// (NE-Q -> NE-QD2, LR-Q -> LR-QD, IRR-L -> IRR-DL, IRR-Q -> IRR-QD; the
// linear ids keep their name). Nonemptiness, local regularity, and
// irreducibility transfer through duality; the nodal-cuspidal property does
// not and only direct certificates count for it.

enum class Property { NonEmpty = 0, LocallyRegular = 1, NodalCuspidal = 2, Irreducible = 3 };
enum class Route { Direct, ViaDual };
enum class Verdict { Empty, Yes, Unknown };

inline const char* property_name(Property p) {
    switch (p) {
        case Property::NonEmpty: return "NONEMPTY";
        case Property::LocallyRegular: return "LOCALLY_REGULAR";
        case Property::NodalCuspidal: return "NODAL_CUSPIDAL_GENERIC";
        case Property::Irreducible: return "IRREDUCIBLE";
    }
    return "?";
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Empty: return "EMPTY";
        case Verdict::Yes: return "YES";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

struct Certificate {
    std::string id;
    Route route = Route::Direct;
    bool conditional = false;  // hypothesis "family nonempty" not discharged
};

struct PropertyReport {
    Property property = Property::NonEmpty;
    Verdict verdict = Verdict::Unknown;
    std::vector<Certificate> certificates;
};

struct EvalOptions {
    // The local-regularity bound is implemented as 5*kappa - 6*delta <= (d+3)^e.
    // The exponent is 2 in the headline statement and 3 in a parallel reading
    // of the same source; both are available, 2 is the default.
    int lrq_exponent = 2;
};

/// Catalog metadata (fixed, closed list; ids are stable interface).
struct CriterionSpec {
    const char* id;
    Property property;
    bool conditional_on_nonempty;
    bool via_dual_only;  // reported only as a via_dual certificate
    const char* statement;
};

inline const std::vector<CriterionSpec>& criterion_catalog() {
    static const std::vector<CriterionSpec> catalog = {
        {"SMOOTH", Property::NonEmpty, false, false, "delta = kappa = 0 (smooth curves of degree d)"},
        {"NE-L", Property::NonEmpty, false, false, "c >= 2g + floor((d+1)/2) + 1, d,c >= 2"},
        {"NE-Q", Property::NonEmpty, false, false,
         "d <= 4: admissibility; d >= 5: kappa - delta <= (d^2 - 4d + 6)/2"},
        {"NE-QD2", Property::NonEmpty, false, true, "NE-Q on the dual triple (c, g, d)"},
        {"LR-SEV", Property::LocallyRegular, false, false, "c = 2d - 2 + 2g (Severi case)"},
        {"LR-L", Property::LocallyRegular, true, false, "c - 2g + d >= -1, d,c >= 2"},
        {"LR-Q", Property::LocallyRegular, true, false, "5*kappa - 6*delta <= (d+3)^2"},
        {"LR-QD", Property::LocallyRegular, true, true, "LR-Q on the dual triple (c, g, d)"},
        {"NC-DH", Property::NodalCuspidal, true, false, "c >= 2g - 1"},
        {"NC-SH", Property::NodalCuspidal, true, false, "c >= 2g - d + 2"},
        {"NC-Q", Property::NodalCuspidal, true, false, "5*kappa - 6*delta <= d^2 + 6d - 3"},
        {"NC-D10", Property::NodalCuspidal, true, false, "d <= 10 (externally sourced degree bound)"},
        {"IRR-L", Property::Irreducible, true, false,
         "c >= 2g + 2d - 5, or 2c >= 6g + 3d - 5, or 2c >= 2g + d^2 - 2d - 3; d,c >= 2"},
        {"IRR-DL", Property::Irreducible, true, true, "IRR-L on the dual triple (c, g, d)"},
        {"IRR-Q", Property::Irreducible, true, false, "11*kappa + 3*delta < 2*d^2"},
        {"IRR-QD", Property::Irreducible, true, true, "IRR-Q on the dual triple (c, g, d)"},
    };
    return catalog;
}

inline int catalog_position(const std::string& id) {
    const auto& cat = criterion_catalog();
    for (size_t i = 0; i < cat.size(); ++i)
        if (id == cat[i].id) return static_cast<int>(i);
    return static_cast<int>(cat.size());
}

inline const CriterionSpec& criterion_info(const std::string& id) {
    const auto& cat = criterion_catalog();
    for (const auto& spec : cat)
        if (id == spec.id) return spec;
    throw InvalidInput("unknown criterion id: " + id);
}

struct CriteriaReport {
    ClassTriple triple;
    Integer delta{0}, kappa{0};
    bool admissible = false;
    bool smooth = false;
    bool empty = false;
    std::string empty_reason;
    bool has_counts = false;
    Integer nodes{0}, cusps{0};
    ClassTriple dual;
    bool dual_in_range = false;  // d, c >= 2, so the duality isomorphism applies
    bool dual_admissible = false;
    Integer expected_dimension{0};
    std::array<PropertyReport, 4> properties;

    const PropertyReport& property(Property p) const { return properties[static_cast<size_t>(p)]; }
    Verdict verdict(Property p) const { return property(p).verdict; }

    bool has_certificate(Property p, const std::string& id, std::optional<Route> route = {}) const {
        for (const auto& cert : property(p).certificates)
            if (cert.id == id && (!route || cert.route == *route)) return true;
        return false;
    }
};

namespace detail {

struct Ctx {
    Integer d, g, c, delta, kappa;
};

inline Ctx make_ctx(const ClassTriple& t) {
    DeltaKappa dk = delta_kappa_of(t);
    return Ctx{t.d, t.g, t.c, dk.delta, dk.kappa};
}

inline bool ne_l(const Ctx& x) {
    return x.d >= 2 && x.c >= 2 && x.c >= 2 * x.g + (x.d + 1) / 2 + 1;
}
inline bool ne_q(const Ctx& x) {
    if (x.d < 3 || x.delta < 1) return false;
    if (x.d <= 4) return true;  // admissibility alone suffices
    return 2 * (x.kappa - x.delta) <= x.d * x.d - 4 * x.d + 6;
}
inline bool lr_sev(const Ctx& x) { return x.c == 2 * x.d - 2 + 2 * x.g; }
inline bool lr_l(const Ctx& x) { return x.d >= 2 && x.c >= 2 && x.c - 2 * x.g + x.d >= -1; }
inline Integer pow_int(const Integer& base, int e) {
    Integer r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
inline bool lr_q(const Ctx& x, const EvalOptions& opts) {
    return x.d >= 3 && 5 * x.kappa - 6 * x.delta <= pow_int(x.d + 3, opts.lrq_exponent);
}
inline bool nc_dh(const Ctx& x) { return x.c >= 2 * x.g - 1; }
inline bool nc_sh(const Ctx& x) { return x.c >= 2 * x.g - x.d + 2; }
inline bool nc_q(const Ctx& x) { return x.d >= 3 && 5 * x.kappa - 6 * x.delta <= x.d * x.d + 6 * x.d - 3; }
inline bool nc_d10(const Ctx& x) { return x.d <= 10; }
inline bool irr_l(const Ctx& x) {
    if (x.d < 2 || x.c < 2) return false;
    if (x.c >= 2 * x.g + 2 * x.d - 5) return true;
    if (2 * x.c >= 6 * x.g + 3 * x.d - 5) return true;
    return 2 * x.c >= 2 * x.g + x.d * x.d - 2 * x.d - 3;
}
inline bool irr_q(const Ctx& x) { return x.d >= 3 && 11 * x.kappa + 3 * x.delta < 2 * x.d * x.d; }

struct DirectCriterion {
    const char* id;
    const char* dual_id;  // id under which a dual-side firing is reported
    Property property;
    bool (*pred)(const Ctx&, const EvalOptions&);
};

inline const std::vector<DirectCriterion>& direct_criteria() {
    static const std::vector<DirectCriterion> list = {
        {"NE-L", "NE-L", Property::NonEmpty, [](const Ctx& x, const EvalOptions&) { return ne_l(x); }},
        {"NE-Q", "NE-QD2", Property::NonEmpty, [](const Ctx& x, const EvalOptions&) { return ne_q(x); }},
        {"LR-SEV", "LR-SEV", Property::LocallyRegular, [](const Ctx& x, const EvalOptions&) { return lr_sev(x); }},
        {"LR-L", "LR-L", Property::LocallyRegular, [](const Ctx& x, const EvalOptions&) { return lr_l(x); }},
        {"LR-Q", "LR-QD", Property::LocallyRegular, [](const Ctx& x, const EvalOptions& o) { return lr_q(x, o); }},
        {"NC-DH", nullptr, Property::NodalCuspidal, [](const Ctx& x, const EvalOptions&) { return nc_dh(x); }},
        {"NC-SH", nullptr, Property::NodalCuspidal, [](const Ctx& x, const EvalOptions&) { return nc_sh(x); }},
        {"NC-Q", nullptr, Property::NodalCuspidal, [](const Ctx& x, const EvalOptions&) { return nc_q(x); }},
        {"NC-D10", nullptr, Property::NodalCuspidal, [](const Ctx& x, const EvalOptions&) { return nc_d10(x); }},
        {"IRR-L", "IRR-DL", Property::Irreducible, [](const Ctx& x, const EvalOptions&) { return irr_l(x); }},
        {"IRR-Q", "IRR-QD", Property::Irreducible, [](const Ctx& x, const EvalOptions&) { return irr_q(x); }},
    };
    return list;
}

}  // namespace detail

/// Classify a triple against the whole catalog, with duality closure.
inline CriteriaReport evaluate(const ClassTriple& t, const EvalOptions& opts = {}) {
    if (t.d < 1) throw InvalidInput("degree must be >= 1");
    CriteriaReport rep;
    rep.triple = t;
    const DeltaKappa dk = delta_kappa_of(t);
    rep.delta = dk.delta;
    rep.kappa = dk.kappa;
    rep.admissible = is_admissible(dk);
    rep.dual = dual_triple(t);
    rep.dual_in_range = (t.d >= 2 && t.c >= 2);
    rep.dual_admissible = rep.dual_in_range && is_admissible(rep.dual);
    rep.expected_dimension = expected_dim(t);
    for (size_t i = 0; i < 4; ++i) rep.properties[i].property = static_cast<Property>(i);

    if (rep.admissible) {
        const NodalCuspidal nc = virtual_counts(dk);
        rep.has_counts = true;
        rep.nodes = nc.nodes;
        rep.cusps = nc.cusps;
        rep.smooth = (dk.delta == 0 && dk.kappa == 0);
    }

    if (!rep.admissible) {
        rep.empty = true;
        rep.empty_reason =
            "invariants (delta,kappa)=(" + to_string(dk.delta) + "," + to_string(dk.kappa) +
            ") violate 2*delta <= kappa <= 3*delta, 0 <= delta <= (d-1)(d-2)/2";
    } else if (t.d >= 2 && t.c < 2) {
        rep.empty = true;
        rep.empty_reason = "an irreducible curve of degree >= 2 has class >= 2";
    } else if (rep.dual_in_range && !rep.dual_admissible) {
        rep.empty = true;
        rep.empty_reason = "dual triple " + rep.dual.str() +
                           " violates admissibility; duality makes the family empty";
    }

    if (rep.empty) {
        for (auto& p : rep.properties) p.verdict = Verdict::Empty;
        return rep;
    }

    auto certs_of = [&rep](Property p) -> std::vector<Certificate>& {
        return rep.properties[static_cast<size_t>(p)].certificates;
    };

    const detail::Ctx primal = detail::make_ctx(t);
    if (rep.smooth) certs_of(Property::NonEmpty).push_back({"SMOOTH", Route::Direct, false});
    for (const auto& crit : detail::direct_criteria())
        if (crit.pred(primal, opts)) certs_of(crit.property).push_back({crit.id, Route::Direct, false});

    if (rep.dual_in_range) {
        const detail::Ctx dual = detail::make_ctx(rep.dual);
        for (const auto& crit : detail::direct_criteria()) {
            if (crit.dual_id == nullptr) continue;  // nodal-cuspidal does not transfer
            if (crit.pred(dual, opts)) certs_of(crit.property).push_back({crit.dual_id, Route::ViaDual, false});
        }
    }

    // verdicts, then conditional flags for criteria whose theorems assume
    // nonemptiness and no independent NONEMPTY certificate exists
    for (auto& p : rep.properties)
        p.verdict = p.certificates.empty() ? Verdict::Unknown : Verdict::Yes;
    const bool nonempty_known = rep.verdict(Property::NonEmpty) == Verdict::Yes;
    for (auto& p : rep.properties) {
        for (auto& cert : p.certificates)
            cert.conditional = criterion_info(cert.id).conditional_on_nonempty && !nonempty_known;
        std::stable_sort(p.certificates.begin(), p.certificates.end(),
                         [](const Certificate& a, const Certificate& b) {
                             const int pa = catalog_position(a.id), pb = catalog_position(b.id);
                             if (pa != pb) return pa < pb;
                             return a.route == Route::Direct && b.route == Route::ViaDual;
                         });
    }
    return rep;
}

enum class EdgeType { CuspToNode, NodeSmoothed };

inline const char* edge_type_name(EdgeType e) {
    return e == EdgeType::CuspToNode ? "CUSP_TO_NODE" : "NODE_SMOOTHED";
}

/// Adjacency label per the incidence relations: deforming one cusp into a
/// node lands in (d, g, c+1); smoothing one node lands in (d, g+1, c+2).
inline const char* edge_label(EdgeType e) { return e == EdgeType::CuspToNode ? "c+1" : "g+1,c+2"; }

struct IncidenceEdge {
    EdgeType type;
    ClassTriple target;
};

/// Incidence edges out of a stratum. Emitted only when the report certifies
/// local regularity (the incidence statement's hypothesis).
inline std::vector<IncidenceEdge> incidence_edges(const ClassTriple& t, const EvalOptions& opts = {}) {
    if (!is_admissible(t)) throw NotAdmissible("incidence edges of an inadmissible triple " + t.str());
    const CriteriaReport rep = evaluate(t, opts);
    std::vector<IncidenceEdge> out;
    if (rep.verdict(Property::LocallyRegular) != Verdict::Yes) return out;
    const DeltaKappa dk = delta_kappa_of(t);
    if (dk.kappa - 2 * dk.delta > 0) out.push_back({EdgeType::CuspToNode, ClassTriple{t.d, t.g, t.c + 1}});
    if (3 * dk.delta - dk.kappa > 0) out.push_back({EdgeType::NodeSmoothed, ClassTriple{t.d, t.g + 1, t.c + 2}});
    return out;
}

}  // namespace curveclass
