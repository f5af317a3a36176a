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

#include <string>
#include <tuple>

#include "curveclass/errors.hpp"
#include "curveclass/rational.hpp"

namespace curveclass {

// Three equivalent integer parameterizations of an equiclassical family of
// plane curves, linked by the Pluecker and genus formulas
//     kappa = d(d-1) - c,   delta = (d-1)(d-2)/2 - g,
// and, on the nodal-cuspidal side, delta = n + k, kappa = 2n + 3k.
// All inequalities downstream are evaluated in integer arithmetic with
// denominators cleared, so equality boundaries are exact.

/// (degree, geometric genus, class).
struct ClassTriple {
    Integer d, g, c;
    friend bool operator==(const ClassTriple& a, const ClassTriple& b) {
        return a.d == b.d && a.g == b.g && a.c == b.c;
    }
    friend bool operator<(const ClassTriple& a, const ClassTriple& b) {
        return std::tie(a.d, a.g, a.c) < std::tie(b.d, b.g, b.c);
    }
    std::string str() const { return "(" + to_string(d) + "," + to_string(g) + "," + to_string(c) + ")"; }
};

/// (degree, total delta-invariant, total kappa-invariant).
struct DeltaKappa {
    Integer d, delta, kappa;
    friend bool operator==(const DeltaKappa& a, const DeltaKappa& b) {
        return a.d == b.d && a.delta == b.delta && a.kappa == b.kappa;
    }
};

/// (degree, virtual node count, virtual cusp count).
struct NodalCuspidal {
    Integer d, nodes, cusps;
    friend bool operator==(const NodalCuspidal& a, const NodalCuspidal& b) {
        return a.d == b.d && a.nodes == b.nodes && a.cusps == b.cusps;
    }
};

inline Integer max_delta(const Integer& d) { return (d - 1) * (d - 2) / 2; }

/// Unchecked conversion; delta or kappa may come out negative.
inline DeltaKappa delta_kappa_of(const ClassTriple& t) {
    return DeltaKappa{t.d, max_delta(t.d) - t.g, t.d * (t.d - 1) - t.c};
}

inline ClassTriple triple_of(const DeltaKappa& dk) {
    return ClassTriple{dk.d, max_delta(dk.d) - dk.delta, dk.d * (dk.d - 1) - dk.kappa};
}

/// Checked conversion: rejects triples whose invariants are negative.
inline DeltaKappa to_delta_kappa(const ClassTriple& t) {
    DeltaKappa dk = delta_kappa_of(t);
    if (dk.delta < 0) throw NotAdmissible("genus " + to_string(t.g) + " exceeds (d-1)(d-2)/2 for d=" + to_string(t.d));
    if (dk.kappa < 0) throw NotAdmissible("class " + to_string(t.c) + " exceeds d(d-1) for d=" + to_string(t.d));
    return dk;
}

inline DeltaKappa from_nodal_cuspidal(const NodalCuspidal& nc) {
    return DeltaKappa{nc.d, nc.nodes + nc.cusps, 2 * nc.nodes + 3 * nc.cusps};
}

/// 2*delta <= kappa <= 3*delta and 0 <= delta <= (d-1)(d-2)/2; the smooth case
/// delta = kappa = 0 passes.
inline bool is_admissible(const DeltaKappa& dk) {
    return dk.delta >= 0 && 2 * dk.delta <= dk.kappa && dk.kappa <= 3 * dk.delta &&
           dk.delta <= max_delta(dk.d);
}

inline bool is_admissible(const ClassTriple& t) { return is_admissible(delta_kappa_of(t)); }

/// Virtual counts: k = kappa - 2*delta cusps, n = 3*delta - kappa nodes.
inline NodalCuspidal virtual_counts(const DeltaKappa& dk) {
    if (!(dk.delta >= 0 && 2 * dk.delta <= dk.kappa && dk.kappa <= 3 * dk.delta))
        throw NotAdmissible("(d,delta,kappa)=(" + to_string(dk.d) + "," + to_string(dk.delta) + "," +
                            to_string(dk.kappa) + ") violates 2*delta <= kappa <= 3*delta");
    return NodalCuspidal{dk.d, 3 * dk.delta - dk.kappa, dk.kappa - 2 * dk.delta};
}

/// Duality swaps degree and class and keeps the genus.
inline ClassTriple dual_triple(const ClassTriple& t) { return ClassTriple{t.c, t.g, t.d}; }

/// Expected dimension d - g + c + 1 of the family; invariant under duality.
inline Integer expected_dim(const ClassTriple& t) { return t.d - t.g + t.c + 1; }

/// Local gamma-invariant kappa_z^2 / delta_z of an equiclassical point scheme.
inline Rational gamma_point(const Integer& kappa_z, const Integer& delta_z) {
    if (delta_z < 1) throw NotAdmissible("gamma requires delta_z >= 1");
    if (!(2 * delta_z <= kappa_z && kappa_z <= 3 * delta_z))
        throw NotAdmissible("gamma requires 2*delta_z <= kappa_z <= 3*delta_z");
    return Rational(kappa_z * kappa_z, delta_z);
}

}  // namespace curveclass
