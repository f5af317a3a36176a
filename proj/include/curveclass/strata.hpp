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

#include <vector>

#include "curveclass/criteria.hpp"

namespace curveclass {

/// All admissible strata of one degree, with classification reports and the
/// incidence edges between them.
struct StrataGraph {
    Integer d;
    std::vector<CriteriaReport> nodes;  // ordered by (g asc, c asc)
    struct Edge {
        ClassTriple from;
        EdgeType type;
        ClassTriple to;
    };
    std::vector<Edge> edges;
};

inline StrataGraph strata_graph(const Integer& d, const EvalOptions& opts = {},
                                const Integer& max_degree = Integer(12)) {
    if (d < 1 || d > max_degree)
        throw InvalidInput("strata degree must be in [1, " + to_string(max_degree) + "], got " + to_string(d));
    StrataGraph graph;
    graph.d = d;
    const Integer gmax = max_delta(d);
    for (Integer g(0); g <= gmax; ++g) {
        const Integer delta = gmax - g;
        // c ascending means kappa descending
        for (Integer kappa = 3 * delta; kappa >= 2 * delta; --kappa) {
            const ClassTriple t = triple_of(DeltaKappa{d, delta, kappa});
            graph.nodes.push_back(evaluate(t, opts));
            for (const auto& e : incidence_edges(t, opts))
                graph.edges.push_back({t, e.type, e.target});
            if (kappa == 0) break;
        }
    }
    return graph;
}

/// One row of the cuspidal-stratum duality sweep: the stratum of degree-d
/// rational curves with the extremal cusp count k = floor((d+3)^2/9), its
/// dual invariants, and the asymptotic ratios those approach.
struct SweepRow {
    Integer d;
    Integer cusps;  // k = floor((d+3)^2/9), nodes = 0
    ClassTriple primal;
    bool primal_admissible = false;
    Integer dual_delta, dual_kappa, dual_nodes, dual_cusps;
    Rational ratio_dual_degree;  // (dual degree)/d^2   -> 2/3
    Rational ratio_genus;        // g/d^2               -> 7/18
    Rational ratio_dual_nodes;   // (dual nodes)/d^4    -> 2/9
    Rational ratio_dual_cusps;   // (dual cusps)/d^2    -> 19/9
    bool lrq_primal = false;     // 5*kappa - 6*delta <= (d+3)^2 on the primal
    bool dual_linear = false;    // dual cusps < 3 * dual degree
    bool dual_quadratic = false; // 4*(dual nodes) + 9*(dual cusps) < (dual degree + 3)^2
};

inline std::vector<SweepRow> dual_sweep(const Integer& from, const Integer& to,
                                        const EvalOptions& opts = {}) {
    if (from < 5) throw InvalidInput("dual sweep starts at degree >= 5");
    if (to < from) throw InvalidInput("empty sweep range");
    std::vector<SweepRow> rows;
    for (Integer d = from; d <= to; ++d) {
        SweepRow row;
        row.d = d;
        row.cusps = (d + 3) * (d + 3) / 9;
        const DeltaKappa dk{d, row.cusps, 3 * row.cusps};
        row.primal = triple_of(dk);
        row.primal_admissible = is_admissible(dk);
        const ClassTriple dual = dual_triple(row.primal);
        const DeltaKappa ddk = delta_kappa_of(dual);
        row.dual_delta = ddk.delta;
        row.dual_kappa = ddk.kappa;
        row.dual_nodes = 3 * ddk.delta - ddk.kappa;
        row.dual_cusps = ddk.kappa - 2 * ddk.delta;
        const Integer d2 = d * d, d4 = d2 * d2;
        row.ratio_dual_degree = Rational(row.primal.c, d2);
        row.ratio_genus = Rational(row.primal.g, d2);
        row.ratio_dual_nodes = Rational(row.dual_nodes, d4);
        row.ratio_dual_cusps = Rational(row.dual_cusps, d2);
        row.lrq_primal =
            5 * dk.kappa - 6 * dk.delta <= detail::pow_int(d + 3, opts.lrq_exponent);
        row.dual_linear = row.dual_cusps < 3 * row.primal.c;
        row.dual_quadratic =
            4 * row.dual_nodes + 9 * row.dual_cusps < (row.primal.c + 3) * (row.primal.c + 3);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace curveclass
