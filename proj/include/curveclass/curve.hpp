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

#include "curveclass/equiclassical.hpp"
#include "curveclass/errors.hpp"
#include "curveclass/poly_linalg.hpp"

namespace curveclass {

// Rationally parametrized curves in projective n-space, given by n+1 coprime
// binary forms of a common degree. The k-th associated curve (osculating
// k-planes) is computed as the (k+1)-minors of the derivative stack
// X, X', ..., X^(k). Derivation in t alone makes every raw minor divisible by
// s^(k(k+1)/2) (the chart-change weight at t = infinity); that systematic
// power is divided out before any geometric content analysis, so genuine
// ramification at t = infinity shows up in the remaining content like at any
// other point.

struct ParamCurve {
    int ambient_dim = 0;  // n
    int degree = 0;       // d
    PolyVector coords;    // n+1 entries

    static ParamCurve make(int ambient_dim, PolyVector coords);
};

/// Rows X, X', ..., X^(k).
inline PolyMatrix derivative_stack(const PolyVector& coords, int k) {
    std::vector<PolyVector> rows;
    rows.reserve(static_cast<size_t>(k) + 1);
    rows.push_back(coords);
    for (int j = 1; j <= k; ++j) rows.push_back(derivative_t(rows.back()));
    return PolyMatrix(std::move(rows));
}

/// (k+1)-minors of the derivative stack with the systematic s-power removed.
/// Level 0 is the coordinate vector itself; level n is the full derivative
/// determinant (one entry).
inline PolyVector wedge_level(const ParamCurve& curve, int k) {
    if (k == 0) return curve.coords;
    PolyVector raw = minors(derivative_stack(curve.coords, k), static_cast<size_t>(k) + 1);
    if (raw.is_zero()) return raw;
    return divided_by_s(raw, k * (k + 1) / 2);
}

inline ParamCurve ParamCurve::make(int ambient_dim, PolyVector coords) {
    if (ambient_dim < 2) throw InvalidInput("ambient dimension must be >= 2");
    if (coords.size() != static_cast<size_t>(ambient_dim) + 1)
        throw InvalidInput("expected " + std::to_string(ambient_dim + 1) + " coordinates");
    const auto deg = coords.degree();
    if (!deg || *deg < 1) throw InvalidInput("coordinates must be forms of a common degree >= 1");
    for (const auto& f : coords.entries)
        if (f.is_zero()) throw DegenerateCurve("a coordinate vanishes identically");
    BinaryForm cont = content(coords);
    if (cont.degree() != 0)
        throw InvalidInput("coordinates share the factor " + cont.str() + "; reduce the parametrization");
    ParamCurve c;
    c.ambient_dim = ambient_dim;
    c.degree = *deg;
    c.coords = std::move(coords);
    if (wedge_level(c, ambient_dim).is_zero())
        throw DegenerateCurve("derivative wedge vanishes identically; image lies in a hyperplane");
    return c;
}

/// Content-free Pluecker coordinates of the k-th associated curve.
struct AssociatedCurve {
    int level = 0;                    // k
    int degree = 0;                   // d_k
    PolyVector plucker;               // C(n+1, k+1) entries, lexicographic, canonical
    int removed_content_degree = 0;   // degree of the non-systematic content
};

inline AssociatedCurve associated(const ParamCurve& curve, int k) {
    if (k < 1 || k > curve.ambient_dim - 1) throw InvalidInput("associated level out of range");
    PolyVector stripped = wedge_level(curve, k);
    if (stripped.is_zero())
        throw DegenerateCurve("wedge of order " + std::to_string(k) + " vanishes identically");
    AssociatedCurve out;
    out.level = k;
    const BinaryForm h = content(stripped);
    out.removed_content_degree = h.degree();
    if (h.degree() > 0) stripped = divided_exact(stripped, h);
    out.plucker = canonicalized(stripped);
    out.degree = *out.plucker.degree();
    return out;
}

/// Grassmann-Pluecker exchange relations on a coordinate vector indexed by
/// lexicographic (k+1)-subsets of {0..n}: for every k-subset I and every
/// (k+2)-subset J,  sum_l (-1)^l p_{I + j_l} p_{J - j_l} = 0.
inline bool plucker_relations_hold(int n, int k, const PolyVector& p) {
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> cur(static_cast<size_t>(k) + 1);
        for (int i = 0; i <= k; ++i) cur[static_cast<size_t>(i)] = i;
        while (true) {
            subsets.push_back(cur);
            int i = k;
            while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
            for (int j = i + 1; j <= k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
        }
    }
    if (p.size() != subsets.size()) throw InvalidInput("pluecker vector has the wrong length");
    auto index_of = [&subsets](const std::vector<int>& s) {
        for (size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i] == s) return i;
        throw InternalInconsistency("subset lookup failed");
    };
    // signed coordinate of I with j inserted; zero when j is already in I
    auto signed_coord = [&](const std::vector<int>& I, int j) -> BinaryForm {
        std::vector<int> s(I);
        int greater = 0;
        for (int x : I) {
            if (x == j) return BinaryForm();
            if (x > j) ++greater;
        }
        s.push_back(j);
        std::sort(s.begin(), s.end());
        BinaryForm f = p[index_of(s)];
        if (greater % 2 == 1 && !f.is_zero()) f = -f;
        return f;
    };
    auto for_each_subset = [&](int size, auto&& fn) {
        std::vector<int> cur(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) cur[static_cast<size_t>(i)] = i;
        while (true) {
            fn(cur);
            int i = size - 1;
            while (i >= 0 && cur[static_cast<size_t>(i)] == n - size + 1 + i) --i;
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
        }
    };
    bool ok = true;
    std::vector<std::vector<int>> Is, Js;
    if (k >= 1) for_each_subset(k, [&](const std::vector<int>& s) { Is.push_back(s); });
    else Is.push_back({});
    for_each_subset(k + 2, [&](const std::vector<int>& s) { Js.push_back(s); });
    for (const auto& I : Is) {
        for (const auto& J : Js) {
            BinaryForm acc;
            for (size_t l = 0; l < J.size(); ++l) {
                std::vector<int> Jminus;
                for (size_t m = 0; m < J.size(); ++m)
                    if (m != l) Jminus.push_back(J[m]);
                BinaryForm term = signed_coord(I, J[l]) * p[index_of(Jminus)];
                if (l % 2 == 1 && !term.is_zero()) term = -term;
                acc = acc.is_zero() ? term : (term.is_zero() ? acc : acc + term);
            }
            if (!acc.is_zero()) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
    }
    return ok;
}

/// Degrees (d_0, ..., d_{n-1}) of the curve and its associated curves.
inline std::vector<int> degree_sequence(const ParamCurve& curve) {
    std::vector<int> ds;
    ds.push_back(curve.degree);
    for (int k = 1; k <= curve.ambient_dim - 1; ++k) ds.push_back(associated(curve, k).degree);
    return ds;
}

/// Total ramification indices beta_0..beta_{n-1} from the genus-0 Pluecker
/// relations d_{k-1} - 2 d_k + d_{k+1} = -2 - beta_k.
inline std::vector<int> total_ramification(const ParamCurve& curve) {
    const std::vector<int> ds = degree_sequence(curve);
    const int n = curve.ambient_dim;
    std::vector<int> beta(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        const int prev = (k == 0) ? 0 : ds[static_cast<size_t>(k - 1)];
        const int next = (k == n - 1) ? 0 : ds[static_cast<size_t>(k + 1)];
        const int b = 2 * ds[static_cast<size_t>(k)] - prev - next - 2;
        if (b < 0)
            throw InternalInconsistency("negative total ramification beta_" + std::to_string(k) +
                                        " = " + std::to_string(b));
        beta[static_cast<size_t>(k)] = b;
    }
    return beta;
}

/// Per-point ramification indices beta_k(p) at a rational point (a : b) of the
/// parameter line, via second differences of minimal wedge valuations.
inline std::vector<int> ramification_at(const ParamCurve& curve, const Rational& a, const Rational& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("(0:0) is not a point");
    const int n = curve.ambient_dim;
    std::vector<int> v(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        const PolyVector w = wedge_level(curve, k);
        int best = -1;
        for (const auto& f : w.entries) {
            if (f.is_zero()) continue;
            const int val = valuation(f, a, b);
            if (best < 0 || val < best) best = val;
        }
        if (best < 0) throw DegenerateCurve("wedge of order " + std::to_string(k) + " vanishes");
        v[static_cast<size_t>(k)] = best;
    }
    if (v[0] != 0) throw InternalInconsistency("coordinates not coprime at the point");
    std::vector<int> beta(static_cast<size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        const int prev = (k == 0) ? 0 : v[static_cast<size_t>(k - 1)];
        const int b_k = v[static_cast<size_t>(k + 1)] - 2 * v[static_cast<size_t>(k)] + prev;
        if (b_k < 0) throw InternalInconsistency("negative pointwise ramification");
        beta[static_cast<size_t>(k)] = b_k;
    }
    return beta;
}

/// Total ramification together with an optional pointwise refinement at
/// chosen rational points of the parameter line.
struct RamificationProfile {
    std::vector<int> totals;
    std::vector<std::pair<std::pair<Rational, Rational>, std::vector<int>>> at_points;
};

inline RamificationProfile ramification_profile(
    const ParamCurve& curve, const std::vector<std::pair<Rational, Rational>>& points = {}) {
    RamificationProfile p;
    p.totals = total_ramification(curve);
    for (const auto& [a, b] : points) p.at_points.push_back({{a, b}, ramification_at(curve, a, b)});
    for (size_t k = 0; k < p.totals.size(); ++k) {
        int sum = 0;
        for (const auto& [pt, beta] : p.at_points) sum += beta[k];
        if (sum > p.totals[k])
            throw InternalInconsistency("pointwise ramification exceeds the total at level " +
                                        std::to_string(k));
    }
    return p;
}

/// Signed n-minor vector of the rows X, ..., X^(n-1): the dual curve before
/// any content removal (still carries the systematic s-power).
inline PolyVector raw_dual_coords(const ParamCurve& curve) {
    const int n = curve.ambient_dim;
    const PolyMatrix stack = derivative_stack(curve.coords, n - 1);
    std::vector<size_t> rows(static_cast<size_t>(n));
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    PolyVector y;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<size_t> cols;
        cols.reserve(static_cast<size_t>(n));
        for (int j = 0; j <= n; ++j)
            if (j != omit) cols.push_back(static_cast<size_t>(j));
        BinaryForm m = minor_det(stack, rows, cols);
        if (omit % 2 == 1 && !m.is_zero()) m = -m;
        y.entries.push_back(std::move(m));
    }
    return y;
}

/// The dual curve: content-reduced, canonically normalized coordinates in the
/// dual projective space. Its degree is d_{n-1}.
inline ParamCurve dual(const ParamCurve& curve) {
    const int n = curve.ambient_dim;
    PolyVector y = raw_dual_coords(curve);
    if (y.is_zero()) throw DegenerateCurve("dual wedge vanishes identically");
    y = divided_by_s(y, (n - 1) * n / 2);
    const BinaryForm h = content(y);
    if (h.degree() > 0) y = divided_exact(y, h);
    return ParamCurve::make(n, canonicalized(y));
}

/// dual(dual(C)) must reproduce C up to projective proportionality.
inline bool bidual_check(const ParamCurve& curve) {
    return proportional(dual(dual(curve)).coords, curve.coords);
}

/// Degree/ramification symmetry of the duality: d_k(C*) = d_{n-1-k}(C) and
/// beta_k(C*) = beta_{n-1-k}(C). All residuals must vanish.
struct DualitySymmetryReport {
    std::vector<int> degrees_primal, degrees_dual;
    std::vector<int> beta_primal, beta_dual;
    std::vector<int> degree_residuals, beta_residuals;
    bool pass = false;
};

inline DualitySymmetryReport duality_symmetry_check(const ParamCurve& curve) {
    DualitySymmetryReport rep;
    const ParamCurve dc = dual(curve);
    rep.degrees_primal = degree_sequence(curve);
    rep.degrees_dual = degree_sequence(dc);
    rep.beta_primal = total_ramification(curve);
    rep.beta_dual = total_ramification(dc);
    const size_t n = rep.degrees_primal.size();
    rep.pass = true;
    for (size_t k = 0; k < n; ++k) {
        rep.degree_residuals.push_back(rep.degrees_dual[k] - rep.degrees_primal[n - 1 - k]);
        rep.beta_residuals.push_back(rep.beta_dual[k] - rep.beta_primal[n - 1 - k]);
        if (rep.degree_residuals.back() != 0 || rep.beta_residuals.back() != 0) rep.pass = false;
    }
    return rep;
}

/// X^(i) . Y^(j) = 0 for all i + j <= n-1, checked for the unreduced
/// signed-minor dual and for the content-reduced dual separately.
struct OrthogonalityReport {
    bool raw_ok = false;
    bool reduced_ok = false;
    bool top_order_nonzero = false;  // X^(n) . Y_raw must NOT vanish
};

inline OrthogonalityReport orthogonality_check(const ParamCurve& curve) {
    const int n = curve.ambient_dim;
    OrthogonalityReport rep;
    auto pairing_holds = [&](const PolyVector& y0) {
        std::vector<PolyVector> xd{curve.coords}, yd{y0};
        for (int i = 1; i <= n - 1; ++i) {
            xd.push_back(derivative_t(xd.back()));
            yd.push_back(derivative_t(yd.back()));
        }
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; i + j <= n - 1; ++j)
                if (!dot(xd[static_cast<size_t>(i)], yd[static_cast<size_t>(j)]).is_zero()) return false;
        return true;
    };
    const PolyVector raw = raw_dual_coords(curve);
    rep.raw_ok = pairing_holds(raw);
    rep.reduced_ok = pairing_holds(dual(curve).coords);
    PolyVector xn = curve.coords;
    for (int i = 0; i < n; ++i) xn = derivative_t(xn);
    rep.top_order_nonzero = !dot(xn, raw).is_zero();
    return rep;
}

/// Plane-curve invariants of a proper degree-d rational parametrization:
/// class, delta/kappa totals, virtual singularity counts, cusp-type total
/// ramification, and the equiclassical triple (d, 0, c).
struct PlaneProfile {
    Integer d, class_c, delta, kappa, nodes, cusps;
    int beta0 = 0;
    ClassTriple triple;
};

inline PlaneProfile plane_profile(const ParamCurve& curve) {
    if (curve.ambient_dim != 2) throw InvalidInput("plane profile needs a plane curve");
    PlaneProfile p;
    p.d = curve.degree;
    p.class_c = associated(curve, 1).degree;
    p.delta = max_delta(p.d);  // genus 0 source
    p.kappa = p.d * (p.d - 1) - p.class_c;
    const NodalCuspidal nc = virtual_counts(DeltaKappa{p.d, p.delta, p.kappa});
    p.nodes = nc.nodes;
    p.cusps = nc.cusps;
    p.beta0 = total_ramification(curve)[0];
    p.triple = ClassTriple{p.d, Integer(0), p.class_c};
    return p;
}

}  // namespace curveclass
