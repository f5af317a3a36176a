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
#include <utility>
#include <vector>

#include "curveclass/dense_poly.hpp"
#include "curveclass/errors.hpp"
#include "curveclass/rational.hpp"

namespace curveclass {

/// Homogeneous binary form in the coordinates (s, t) of the parameter line.
/// coeffs[j] is the coefficient of s^(D-j) t^j. The zero form carries no
/// degree (empty coefficient vector); every other form has a structural
/// degree D with exactly D+1 stored coefficients, leading/trailing zeros
/// allowed. Storing parametrizations homogeneously keeps the point t = infinity
/// on equal footing in gcd and valuation bookkeeping; affine views in either
/// chart are derived.
class BinaryForm {
   public:
    BinaryForm() = default;  // zero form

    explicit BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        bool all_zero = true;
        for (const auto& x : c_)
            if (!x.is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) c_.clear();
    }

    static BinaryForm zero() { return BinaryForm(); }

    static BinaryForm constant(const Rational& v) {
        if (v.is_zero()) return BinaryForm();
        return BinaryForm(std::vector<Rational>{v});
    }

    /// coef * s^a t^b
    static BinaryForm monomial(const Rational& coef, int s_exp, int t_exp) {
        if (coef.is_zero()) return BinaryForm();
        std::vector<Rational> cs(static_cast<size_t>(s_exp + t_exp) + 1, Rational(0));
        cs[static_cast<size_t>(t_exp)] = coef;
        return BinaryForm(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw InvalidInput("degree of the zero form");
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(j)];
    }

    /// Multiplicity of t (index of the lowest nonzero coefficient).
    int t_multiplicity() const {
        for (size_t j = 0; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return static_cast<int>(j);
        throw InvalidInput("t-multiplicity of the zero form");
    }

    /// Multiplicity of s (degree minus the highest nonzero index).
    int s_multiplicity() const {
        for (size_t j = c_.size(); j-- > 0;)
            if (!c_[j].is_zero()) return degree() - static_cast<int>(j);
        throw InvalidInput("s-multiplicity of the zero form");
    }

    BinaryForm operator-() const {
        BinaryForm r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree() != b.degree())
            throw InternalInconsistency("adding binary forms of different degrees");
        std::vector<Rational> out(a.c_);
        for (size_t j = 0; j < out.size(); ++j) out[j] += b.c_[j];
        return BinaryForm(std::move(out));
    }

    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() || b.is_zero()) return BinaryForm();
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return BinaryForm(std::move(out));
    }

    BinaryForm scaled(const Rational& r) const {
        if (r.is_zero() || is_zero()) return BinaryForm();
        BinaryForm out(*this);
        for (auto& x : out.c_) x *= r;
        return out;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    /// Multiply by s^k (degree rises, indices stay put).
    BinaryForm times_s(int k) const {
        if (is_zero()) return BinaryForm();
        std::vector<Rational> out(c_);
        out.insert(out.end(), static_cast<size_t>(k), Rational(0));
        return BinaryForm(std::move(out));
    }

    /// Multiply by t^k.
    BinaryForm times_t(int k) const {
        if (is_zero()) return BinaryForm();
        std::vector<Rational> out(static_cast<size_t>(k), Rational(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return BinaryForm(std::move(out));
    }

    BinaryForm divided_by_s(int k) const {
        if (k == 0 || is_zero()) return *this;
        if (s_multiplicity() < k) throw InternalInconsistency("inexact division by s-power");
        std::vector<Rational> out(c_.begin(), c_.end() - k);
        return BinaryForm(std::move(out));
    }

    /// Affine chart s = 1: polynomial in t, coefficient of t^j = coeffs[j].
    UPoly affine_t() const { return UPoly(std::vector<Rational>(c_)); }

    /// Opposite chart t = 1: polynomial in u = s, coefficient of u^i = coeffs[D-i].
    UPoly affine_u() const {
        std::vector<Rational> rev(c_.rbegin(), c_.rend());
        return UPoly(std::move(rev));
    }

    /// Homogenize a t-chart polynomial up to the given degree.
    static BinaryForm from_affine_t(const UPoly& p, int degree) {
        if (p.is_zero()) return BinaryForm();
        if (p.degree() > degree) throw InvalidInput("homogenization degree too small");
        std::vector<Rational> out(static_cast<size_t>(degree) + 1, Rational(0));
        for (int j = 0; j <= p.degree(); ++j) out[static_cast<size_t>(j)] = p.coeff(j);
        return BinaryForm(std::move(out));
    }

    /// f(a, b) = sum c_j a^(D-j) b^j
    Rational evaluate(const Rational& a, const Rational& b) const {
        if (is_zero()) return Rational(0);
        std::vector<Rational> apows(c_.size(), Rational(1));
        for (size_t i = 1; i < c_.size(); ++i) apows[i] = apows[i - 1] * a;
        Rational acc(0), bpow(1);
        for (size_t j = 0; j < c_.size(); ++j) {
            acc += c_[j] * apows[c_.size() - 1 - j] * bpow;
            bpow *= b;
        }
        return acc;
    }

    std::string str() const;

   private:
    std::vector<Rational> c_;
};

/// Formal derivative with respect to the affine parameter t:
/// c s^(D-j) t^j  ->  j c s^(D-j) t^(j-1), total degree drops by one.
inline BinaryForm derivative_t(const BinaryForm& f) {
    if (f.is_zero() || f.degree() == 0) return BinaryForm();
    std::vector<Rational> out(static_cast<size_t>(f.degree()), Rational(0));
    for (int j = 1; j <= f.degree(); ++j) out[static_cast<size_t>(j - 1)] = f.coeff(j) * Rational(j);
    return BinaryForm(std::move(out));
}

/// Multiplicity of the linear form (b s - a t) in f, i.e. the order of
/// vanishing of f at the point (a : b) of the parameter line.
inline int valuation(const BinaryForm& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw InvalidInput("valuation of the zero form");
    if (a.is_zero() && b.is_zero()) throw InvalidInput("(0:0) is not a point");
    if (a.is_zero()) return f.s_multiplicity();
    const Rational t0 = b / a;
    UPoly p = f.affine_t();
    UPoly lin(std::vector<Rational>{-t0, Rational(1)});
    int mult = 0;
    while (true) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero()) break;
        ++mult;
        p = std::move(q);
        if (p.is_zero()) break;  // cannot happen for nonzero f
    }
    return mult;
}

/// Canonical primitive representative of the proportionality class: integer
/// coefficients with gcd 1 and positive first nonzero coefficient. Returns the
/// scalar u with canonical = u * f through the second argument when requested.
inline BinaryForm canonical_primitive(const BinaryForm& f, Rational* unit = nullptr) {
    if (f.is_zero()) {
        if (unit) *unit = Rational(1);
        return f;
    }
    Integer den_lcm(1), num_gcd(0);
    for (const auto& x : f.coeffs()) {
        if (x.is_zero()) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    }
    for (const auto& x : f.coeffs()) {
        if (x.is_zero()) continue;
        Integer scaled_num = x.num() * (den_lcm / x.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational u(den_lcm, num_gcd);
    // sign: first nonzero coefficient positive
    for (const auto& x : f.coeffs()) {
        if (x.is_zero()) continue;
        if ((x * u).sign() < 0) u = -u;
        break;
    }
    if (unit) *unit = u;
    return f.scaled(u);
}

/// Gcd of two binary forms: the common s-power (root at t = infinity) times
/// the homogenized gcd of the t-chart polynomials. Canonical primitive output.
inline BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd of two zero forms");
    if (f.is_zero()) return canonical_primitive(g);
    if (g.is_zero()) return canonical_primitive(f);
    const int sf = f.s_multiplicity();
    const int sg = g.s_multiplicity();
    UPoly h = gcd(f.affine_t(), g.affine_t());
    const int spow = std::min(sf, sg);
    BinaryForm out = BinaryForm::from_affine_t(h, h.degree()).times_s(spow);
    return canonical_primitive(out);
}

inline std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    const int D = degree();
    for (int j = 0; j <= D; ++j) {
        const Rational& c = c_[static_cast<size_t>(j)];
        if (c.is_zero()) continue;
        std::string term;
        const Rational ac = abs(c);
        const int se = D - j, te = j;
        if (!(ac == Rational(1)) || (se == 0 && te == 0)) term += ac.str();
        auto append_var = [&term](const char* v, int e) {
            if (e == 0) return;
            if (!term.empty()) term += "*";
            term += v;
            if (e > 1) term += "^" + std::to_string(e);
        };
        append_var("s", se);
        append_var("t", te);
        if (out.empty())
            out += (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace curveclass
