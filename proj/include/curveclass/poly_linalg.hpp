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

#include <optional>
#include <vector>

#include "curveclass/binary_form.hpp"
#include "curveclass/errors.hpp"

namespace curveclass {

/// Exact division of binary forms (throws if the division does not come out).
inline BinaryForm divided_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw InternalInconsistency("division of a form by zero");
    if (f.is_zero()) return BinaryForm();
    if (g.degree() == 0) return f.scaled(Rational(1) / g.coeff(0));
    if (f.degree() < g.degree()) throw InternalInconsistency("inexact form division (degree)");
    if (f.s_multiplicity() < g.s_multiplicity())
        throw InternalInconsistency("inexact form division (s-power)");
    auto [q, r] = divmod(f.affine_t(), g.affine_t());
    if (!r.is_zero()) throw InternalInconsistency("inexact form division (remainder)");
    return BinaryForm::from_affine_t(q, f.degree() - g.degree());
}

/// Vector of binary forms of a common homogeneous degree (zero entries
/// allowed; they are compatible with any degree).
struct PolyVector {
    std::vector<BinaryForm> entries;

    PolyVector() = default;
    explicit PolyVector(std::vector<BinaryForm> e) : entries(std::move(e)) {}

    size_t size() const { return entries.size(); }
    const BinaryForm& operator[](size_t i) const { return entries[i]; }
    BinaryForm& operator[](size_t i) { return entries[i]; }

    bool is_zero() const {
        for (const auto& f : entries)
            if (!f.is_zero()) return false;
        return true;
    }

    /// Common degree of the nonzero entries; nullopt for the zero vector.
    std::optional<int> degree() const {
        std::optional<int> deg;
        for (const auto& f : entries) {
            if (f.is_zero()) continue;
            if (!deg)
                deg = f.degree();
            else if (*deg != f.degree())
                throw InternalInconsistency("mixed degrees in a homogeneous vector");
        }
        return deg;
    }

    friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.entries == b.entries; }
};

/// Entrywise t-derivative.
inline PolyVector derivative_t(const PolyVector& v) {
    PolyVector out;
    out.entries.reserve(v.size());
    for (const auto& f : v.entries) out.entries.push_back(derivative_t(f));
    return out;
}

/// Gcd of the entries (the vector's content), canonical primitive.
inline BinaryForm content(const PolyVector& v) {
    BinaryForm g;  // zero
    for (const auto& f : v.entries) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? canonical_primitive(f) : gcd(g, f);
        if (!g.is_zero() && g.degree() == 0) break;  // already constant
    }
    if (g.is_zero()) throw InvalidInput("content of the zero vector");
    return g;
}

inline PolyVector divided_exact(const PolyVector& v, const BinaryForm& g) {
    PolyVector out;
    out.entries.reserve(v.size());
    for (const auto& f : v.entries) out.entries.push_back(f.is_zero() ? BinaryForm() : divided_exact(f, g));
    return out;
}

inline PolyVector divided_by_s(const PolyVector& v, int k) {
    PolyVector out;
    out.entries.reserve(v.size());
    for (const auto& f : v.entries) out.entries.push_back(f.is_zero() ? BinaryForm() : f.divided_by_s(k));
    return out;
}

/// One global scalar makes the vector integer, coprime, and first-sign
/// positive; proportional vectors map to the same representative.
inline PolyVector canonicalized(const PolyVector& v, Rational* unit = nullptr) {
    std::vector<Rational> flat;
    for (const auto& f : v.entries)
        for (const auto& c : f.coeffs()) flat.push_back(c);
    BinaryForm packed{std::vector<Rational>(flat)};
    if (packed.is_zero()) {
        if (unit) *unit = Rational(1);
        return v;
    }
    Rational u;
    canonical_primitive(packed, &u);
    if (unit) *unit = u;
    PolyVector out;
    out.entries.reserve(v.size());
    for (const auto& f : v.entries) out.entries.push_back(f.scaled(u));
    return out;
}

/// Scalar product (sum of entrywise products); entries must give a
/// homogeneous result.
inline BinaryForm dot(const PolyVector& a, const PolyVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dot product of different lengths");
    BinaryForm acc;
    for (size_t i = 0; i < a.size(); ++i) {
        BinaryForm p = a[i] * b[i];
        acc = acc.is_zero() ? p : (p.is_zero() ? acc : acc + p);
    }
    return acc;
}

/// True iff a and b are projectively proportional (all 2x2 minors of the
/// stacked 2-row matrix vanish identically).
inline bool proportional(const PolyVector& a, const PolyVector& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            BinaryForm m = a[i] * b[j] - a[j] * b[i];
            if (!m.is_zero()) return false;
        }
    return true;
}

/// Rectangular matrix of binary forms, stored by rows.
struct PolyMatrix {
    std::vector<PolyVector> rows;

    PolyMatrix() = default;
    explicit PolyMatrix(std::vector<PolyVector> r) : rows(std::move(r)) {
        for (const auto& row : rows)
            if (row.size() != rows.front().size()) throw InvalidInput("ragged matrix");
    }

    size_t row_count() const { return rows.size(); }
    size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

namespace detail {

inline BinaryForm det_recursive(const PolyMatrix& m, const std::vector<size_t>& rsel,
                                std::vector<size_t>& csel) {
    const size_t k = rsel.size();
    if (k == 1) return m.rows[rsel[0]][csel[0]];
    BinaryForm acc;
    std::vector<size_t> sub_rows(rsel.begin() + 1, rsel.end());
    for (size_t i = 0; i < k; ++i) {
        const BinaryForm& pivot = m.rows[rsel[0]][csel[i]];
        if (pivot.is_zero()) continue;
        std::vector<size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t j = 0; j < k; ++j)
            if (j != i) sub_cols.push_back(csel[j]);
        BinaryForm minor = det_recursive(m, sub_rows, sub_cols);
        if (minor.is_zero()) continue;
        BinaryForm term = pivot * minor;
        if (i % 2 == 1) term = -term;
        acc = acc.is_zero() ? term : acc + term;
    }
    return acc;
}

}  // namespace detail

/// Determinant of the submatrix given by row and column index sets.
inline BinaryForm minor_det(const PolyMatrix& m, const std::vector<size_t>& rows,
                            const std::vector<size_t>& cols) {
    if (rows.size() != cols.size() || rows.empty()) throw InvalidInput("non-square minor");
    std::vector<size_t> cs(cols);
    return detail::det_recursive(m, rows, cs);
}

/// All (size x size) minors of the first `size` rows, lexicographic by column
/// set. Exact cofactor expansion.
inline PolyVector minors(const PolyMatrix& m, size_t size) {
    if (size == 0 || m.row_count() < size || m.col_count() < size)
        throw InvalidInput("minor size exceeds matrix dimensions");
    std::vector<size_t> rsel(size);
    for (size_t i = 0; i < size; ++i) rsel[i] = i;
    std::vector<size_t> cols(size);
    for (size_t i = 0; i < size; ++i) cols[i] = i;
    PolyVector out;
    const size_t ncols = m.col_count();
    while (true) {
        out.entries.push_back(minor_det(m, rsel, cols));
        // next lexicographic column combination
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && cols[static_cast<size_t>(i)] == ncols - size + static_cast<size_t>(i)) --i;
        if (i < 0) break;
        ++cols[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < size; ++j) cols[j] = cols[j - 1] + 1;
    }
    return out;
}

/// Largest r with some r x r minor not identically zero.
inline int generic_rank(const PolyMatrix& m) {
    const size_t maxr = std::min(m.row_count(), m.col_count());
    // exhaustive minor search, largest size first; matrices here are at most
    // ~10 x 6 so this stays cheap
    for (size_t r = maxr; r >= 1; --r) {
        std::vector<size_t> rows(r), cols(r);
        // enumerate row subsets
        for (size_t i = 0; i < r; ++i) rows[i] = i;
        while (true) {
            for (size_t i = 0; i < r; ++i) cols[i] = i;
            while (true) {
                if (!minor_det(m, rows, cols).is_zero()) return static_cast<int>(r);
                int i = static_cast<int>(r) - 1;
                while (i >= 0 && cols[static_cast<size_t>(i)] == m.col_count() - r + static_cast<size_t>(i)) --i;
                if (i < 0) break;
                ++cols[static_cast<size_t>(i)];
                for (size_t j = static_cast<size_t>(i) + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
            }
            int i = static_cast<int>(r) - 1;
            while (i >= 0 && rows[static_cast<size_t>(i)] == m.row_count() - r + static_cast<size_t>(i)) --i;
            if (i < 0) break;
            ++rows[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < r; ++j) rows[j] = rows[j - 1] + 1;
        }
    }
    return 0;
}

}  // namespace curveclass
