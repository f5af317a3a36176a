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

#include <utility>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/rational.hpp"

namespace curveclass {

/// Dense univariate polynomial over a commutative ring R. R is Rational for
/// the affine charts of binary forms; nesting DensePoly<DensePoly<Rational>>
/// provides the symbolic coefficient rings that the resultant-based
/// implicitization eliminates into. Coefficients are stored low degree first;
/// an empty vector is the zero polynomial.
template <class R>
class DensePoly {
   public:
    DensePoly() = default;
    explicit DensePoly(R constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly monomial(R coef, int k) {
        DensePoly p;
        if (coef.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(k) + 1, R());
        p.c_.back() = std::move(coef);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<R>& coeffs() const { return c_; }

    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return R();
        return c_[static_cast<size_t>(i)];
    }
    const R& leading() const { return c_.back(); }

    DensePoly operator-() const {
        DensePoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R());
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return DensePoly(std::move(out));
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(out));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    DensePoly scaled(const R& s) const {
        if (s.is_zero()) return DensePoly();
        DensePoly r(*this);
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    /// Multiply by x^k.
    DensePoly shifted(int k) const {
        if (is_zero()) return DensePoly();
        DensePoly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), R());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

    DensePoly derivative() const {
        if (c_.size() <= 1) return DensePoly();
        std::vector<R> out(c_.size() - 1, R());
        for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * R(static_cast<int>(i));
        return DensePoly(std::move(out));
    }

    template <class X>
    X eval(const X& x) const {
        X acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<R> c_;
};

using UPoly = DensePoly<Rational>;

inline Rational eval_at(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

/// Division with remainder over the rationals.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<size_t>(i)] / b.leading();
        quot[static_cast<size_t>(i - db)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= q * b.coeff(j);
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

/// Monic gcd over the rationals (1 for coprime inputs, 0 only if both zero).
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());
}

inline bool divides(const UPoly& d, const UPoly& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return divmod(a, d).second.is_zero();
}

// ---- exact division (any coefficient ring) ----------------------------------

inline Rational divexact(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InternalInconsistency("exact division by zero");
    return a / b;
}

template <class R>
DensePoly<R> divexact(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (b.is_zero()) throw InternalInconsistency("exact polynomial division by zero");
    if (a.is_zero()) return DensePoly<R>();
    if (a.degree() < b.degree()) throw InternalInconsistency("inexact polynomial division (degree)");
    std::vector<R> rem(a.coeffs());
    const int db = b.degree();
    std::vector<R> quot(static_cast<size_t>(a.degree() - db) + 1, R());
    for (int i = a.degree(); i >= db; --i) {
        const R& top = rem[static_cast<size_t>(i)];
        if (top.is_zero()) continue;
        R q = divexact(top, b.leading());
        quot[static_cast<size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - q * b.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw InternalInconsistency("inexact polynomial division (remainder)");
    return DensePoly<R>(std::move(quot));
}

// ---- fraction-free determinant and resultants --------------------------------

/// Bareiss one-step fraction-free elimination. All divisions are exact in the
/// coefficient ring; row swaps flip the sign.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    const size_t n = m.size();
    if (n == 0) throw InvalidInput("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    bool negate = false;
    T prev;  // pivot of the previous step; divisor guaranteed exact
    bool have_prev = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return T();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = have_prev ? divexact(num, prev) : std::move(num);
            }
            m[i][k] = T();
        }
        prev = m[k][k];
        have_prev = true;
    }
    T det = m[n - 1][n - 1];
    if (negate) det = T() - det;
    return det;
}

/// Sylvester resultant eliminating the polynomial variable; coefficients live
/// in an arbitrary ring (Rational, or nested DensePoly for symbolic output).
template <class R>
R resultant(const DensePoly<R>& f, const DensePoly<R>& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant of the zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0 && n == 0) {
        R one = divexact(f.leading(), f.leading());
        return one;  // both constants: empty Sylvester matrix, resultant 1
    }
    if (m == 0) {
        R acc = f.leading();
        for (int i = 1; i < n; ++i) acc = acc * f.leading();
        return acc;  // f0^n
    }
    if (n == 0) {
        R acc = g.leading();
        for (int i = 1; i < m; ++i) acc = acc * g.leading();
        return acc;  // g0^m
    }
    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<R>> syl(size, std::vector<R>(size, R()));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            syl[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            syl[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = g.coeff(n - j);
    return bareiss_determinant(std::move(syl));
}

}  // namespace curveclass
