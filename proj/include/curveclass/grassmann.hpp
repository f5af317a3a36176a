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

#include "curveclass/curve.hpp"
#include "curveclass/poly_linalg.hpp"

namespace curveclass {

/// Moving frame of a curve in the Grassmannian of (k+1)-planes: k+1 rows of
/// n+1 binary forms of one common degree, spanning the moving subspace at
/// generic parameter values. Spanning is a generic notion here, so rows may
/// be rescaled by forms without changing the curve.
struct GrassFrame {
    int ambient_dim = 0;  // n
    int level = 0;        // k
    int degree = 0;       // common row degree
    std::vector<PolyVector> rows;

    static GrassFrame make(int ambient_dim, int level, std::vector<PolyVector> rows) {
        if (ambient_dim < 2) throw InvalidInput("ambient dimension must be >= 2");
        if (level < 0 || level > ambient_dim - 1) throw InvalidInput("frame level out of range");
        if (rows.size() != static_cast<size_t>(level) + 1)
            throw InvalidInput("frame needs level+1 rows");
        std::optional<int> deg;
        for (const auto& row : rows) {
            if (row.size() != static_cast<size_t>(ambient_dim) + 1)
                throw InvalidInput("frame rows need ambient_dim+1 entries");
            const auto rd = row.degree();
            if (!rd) throw InvalidInput("zero frame row");
            if (!deg)
                deg = rd;
            else if (*deg != *rd)
                throw InvalidInput("frame rows must share one degree");
        }
        GrassFrame f;
        f.ambient_dim = ambient_dim;
        f.level = level;
        f.degree = *deg;
        f.rows = std::move(rows);
        if (generic_rank(PolyMatrix(std::vector<PolyVector>(f.rows))) != level + 1)
            throw InvalidInput("frame rows are generically dependent");
        return f;
    }
};

namespace detail {

inline PolyMatrix stack_with_derivatives(const std::vector<PolyVector>& rows, int orders) {
    std::vector<PolyVector> all(rows);
    std::vector<PolyVector> current(rows);
    for (int o = 1; o <= orders; ++o) {
        for (auto& r : current) r = derivative_t(r);
        for (const auto& r : current)
            if (!r.is_zero()) all.push_back(r);
    }
    return PolyMatrix(std::move(all));
}

/// Reduce each row to its primitive content-free representative, then pad
/// with s-powers to a common degree (padding only changes behavior at
/// t = infinity, which generic-rank computations ignore).
inline std::vector<PolyVector> tidy_rows(std::vector<PolyVector> rows) {
    int maxdeg = 0;
    for (auto& row : rows) {
        const BinaryForm h = content(row);
        if (h.degree() > 0) row = divided_exact(row, h);
        row = canonicalized(row);
        maxdeg = std::max(maxdeg, *row.degree());
    }
    for (auto& row : rows) {
        const int pad = maxdeg - *row.degree();
        if (pad > 0)
            for (auto& f : row.entries)
                if (!f.is_zero()) f = f.times_s(pad);
    }
    return rows;
}

}  // namespace detail

/// The frame of the span L(t) + L'(t), one level up. Chooses the
/// lexicographically first row subset of the stacked matrix [rows; rows']
/// with full generic rank.
inline GrassFrame hat(const GrassFrame& frame) {
    const int n = frame.ambient_dim;
    const int k = frame.level;
    if (k + 1 > n - 1) throw InvalidInput("hat would exceed the hyperplane level");
    std::vector<PolyVector> stack(frame.rows);
    for (const auto& r : frame.rows) stack.push_back(derivative_t(r));
    const PolyMatrix m{std::vector<PolyVector>(stack)};
    const int rank = generic_rank(m);
    if (rank != k + 2)
        throw NotIntegrable("dim(L + L') = " + std::to_string(rank) + ", expected " + std::to_string(k + 2));
    // lexicographically first (k+2)-row subset of full generic rank
    const size_t want = static_cast<size_t>(k) + 2;
    std::vector<size_t> sel(want);
    for (size_t i = 0; i < want; ++i) sel[i] = i;
    while (true) {
        std::vector<PolyVector> cand;
        for (size_t i : sel) cand.push_back(stack[i]);
        if (generic_rank(PolyMatrix(std::move(cand))) == static_cast<int>(want)) break;
        int i = static_cast<int>(want) - 1;
        while (i >= 0 && sel[static_cast<size_t>(i)] == stack.size() - want + static_cast<size_t>(i)) --i;
        if (i < 0) throw InternalInconsistency("no full-rank row subset despite full stack rank");
        ++sel[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < want; ++j) sel[j] = sel[j - 1] + 1;
    }
    std::vector<PolyVector> rows;
    for (size_t i : sel) rows.push_back(stack[i]);
    return GrassFrame::make(n, k + 1, detail::tidy_rows(std::move(rows)));
}

enum class IntegrabilityVerdict { Integrable, FailsHatDim, FailsNondegeneracy };

inline const char* integrability_name(IntegrabilityVerdict v) {
    switch (v) {
        case IntegrabilityVerdict::Integrable: return "INTEGRABLE";
        case IntegrabilityVerdict::FailsHatDim: return "FAILS_HAT_DIM";
        case IntegrabilityVerdict::FailsNondegeneracy: return "FAILS_NONDEGENERACY";
    }
    return "?";
}

/// A frame is the associated curve of a nondegenerate projective curve iff
/// L + L' has generic dimension k+2 and the frame is (k,n)-nondegenerate
/// (derivatives of all orders span the whole space).
inline IntegrabilityVerdict integrability_check(const GrassFrame& frame) {
    const int n = frame.ambient_dim;
    const int k = frame.level;
    std::vector<PolyVector> once(frame.rows);
    for (const auto& r : frame.rows) once.push_back(derivative_t(r));
    if (generic_rank(PolyMatrix(std::move(once))) != k + 2) return IntegrabilityVerdict::FailsHatDim;
    const PolyMatrix full = detail::stack_with_derivatives(frame.rows, n);
    if (generic_rank(full) != n + 1) return IntegrabilityVerdict::FailsNondegeneracy;
    return IntegrabilityVerdict::Integrable;
}

/// Pluecker coordinate vector of the frame's subspace, content-free and
/// canonical (lexicographic column-set order).
inline PolyVector frame_plucker(const GrassFrame& frame) {
    PolyVector p = minors(PolyMatrix(std::vector<PolyVector>(frame.rows)),
                          static_cast<size_t>(frame.level) + 1);
    const BinaryForm h = content(p);
    if (h.degree() > 0) p = divided_exact(p, h);
    return canonicalized(p);
}

/// Invert the associated-curve construction: raise the frame to the
/// hyperplane level, pass to the annihilator (signed minors) in the dual
/// space, and dualize back. The result is projectively proportional to the
/// underlying curve whenever the frame is an associated frame.
inline ParamCurve recover_underlying(const GrassFrame& frame) {
    if (integrability_check(frame) != IntegrabilityVerdict::Integrable)
        throw NotIntegrable("frame is not integrable");
    const int n = frame.ambient_dim;
    GrassFrame g = frame;
    while (g.level < n - 1) g = hat(g);
    const PolyMatrix m{std::vector<PolyVector>(g.rows)};
    std::vector<size_t> rsel(static_cast<size_t>(n));
    for (size_t i = 0; i < rsel.size(); ++i) rsel[i] = i;
    PolyVector y;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<size_t> cols;
        for (int j = 0; j <= n; ++j)
            if (j != omit) cols.push_back(static_cast<size_t>(j));
        BinaryForm mi = minor_det(m, rsel, cols);
        if (omit % 2 == 1 && !mi.is_zero()) mi = -mi;
        y.entries.push_back(std::move(mi));
    }
    if (y.is_zero()) throw InternalInconsistency("hyperplane frame has vanishing minors");
    const BinaryForm h = content(y);
    if (h.degree() > 0) y = divided_exact(y, h);
    const ParamCurve in_dual = ParamCurve::make(n, canonicalized(y));
    return dual(in_dual);
}

/// Frame of the k-th associated curve of a parametrized curve: derivative
/// rows brought to a common degree with s-powers.
inline GrassFrame associated_frame(const ParamCurve& curve, int k) {
    if (k < 1 || k > curve.ambient_dim - 1) throw InvalidInput("frame level out of range");
    std::vector<PolyVector> rows;
    PolyVector row = curve.coords;
    for (int j = 0; j <= k; ++j) {
        PolyVector padded = row;
        if (j > 0)
            for (auto& f : padded.entries)
                if (!f.is_zero()) f = f.times_s(j);
        rows.push_back(std::move(padded));
        row = derivative_t(row);
    }
    return GrassFrame::make(curve.ambient_dim, k, std::move(rows));
}

}  // namespace curveclass
