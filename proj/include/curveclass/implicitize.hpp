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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "curveclass/curve.hpp"
#include "curveclass/dense_poly.hpp"

namespace curveclass {

/// Homogeneous trivariate polynomial in (x0, x1, x2), normalized primitive
/// (integer coprime coefficients, first term in lexicographic exponent order
/// positive).
struct TriPoly {
    int degree = 0;
    std::map<std::array<int, 3>, Rational> terms;  // exponents sum to degree

    bool is_zero() const { return terms.empty(); }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms) {
            std::string term;
            const Rational ac = abs(c);
            if (!(ac == Rational(1)) || (e[0] == 0 && e[1] == 0 && e[2] == 0)) term = ac.str();
            for (int v = 0; v < 3; ++v) {
                if (e[static_cast<size_t>(v)] == 0) continue;
                if (!term.empty()) term += "*";
                term += "x" + std::to_string(v);
                if (e[static_cast<size_t>(v)] > 1) term += "^" + std::to_string(e[static_cast<size_t>(v)]);
            }
            if (out.empty())
                out += (c.sign() < 0 ? "-" : "") + term;
            else
                out += (c.sign() < 0 ? " - " : " + ") + term;
        }
        return out;
    }

    /// Substitute binary forms for the coordinates.
    BinaryForm evaluate(const PolyVector& coords) const {
        if (coords.size() != 3) throw InvalidInput("trivariate evaluation needs 3 coordinates");
        std::array<std::vector<BinaryForm>, 3> pw;
        for (size_t v = 0; v < 3; ++v) {
            pw[v].push_back(BinaryForm::constant(Rational(1)));
            for (int e = 1; e <= degree; ++e) pw[v].push_back(pw[v].back() * coords[v]);
        }
        BinaryForm acc;
        for (const auto& [e, c] : terms) {
            BinaryForm term = pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] *
                              pw[2][static_cast<size_t>(e[2])];
            term = term.scaled(c);
            acc = acc.is_zero() ? term : (term.is_zero() ? acc : acc + term);
        }
        return acc;
    }

    friend bool operator==(const TriPoly& a, const TriPoly& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

namespace detail {

using XPoly = DensePoly<Rational>;
using XYPoly = DensePoly<XPoly>;  // polynomials in y over Q[x]

inline TriPoly homogenize_primitive(const XYPoly& r) {
    // collect monomials x^i y^j
    std::map<std::array<int, 2>, Rational> mono;
    int total = 0;
    for (int j = 0; j <= r.degree(); ++j) {
        const XPoly cx = r.coeff(j);
        for (int i = 0; i <= cx.degree(); ++i) {
            const Rational c = cx.coeff(i);
            if (c.is_zero()) continue;
            mono[{i, j}] = c;
            total = std::max(total, i + j);
        }
    }
    TriPoly f;
    f.degree = total;
    for (const auto& [e, c] : mono) f.terms[{total - e[0] - e[1], e[0], e[1]}] = c;
    // primitive normalization: one scalar for all coefficients
    std::vector<Rational> flat;
    for (const auto& [e, c] : f.terms) flat.push_back(c);
    BinaryForm packed{std::vector<Rational>(flat)};
    Rational unit;
    canonical_primitive(packed, &unit);
    // sign so the lexicographically first exponent triple has positive coefficient
    if (!f.terms.empty() && (f.terms.begin()->second * unit).sign() < 0) unit = -unit;
    for (auto& [e, c] : f.terms) c *= unit;
    return f;
}

}  // namespace detail

/// Implicit equation of a properly parametrized plane curve, by eliminating
/// the parameter from the reduced chart fractions x = a(t)/c1(t),
/// y = b(t)/c2(t) with one resultant. Validates that the result has total
/// degree d (a cheap properness witness) and that it vanishes on the
/// parametrization.
inline TriPoly implicitize(const ParamCurve& curve) {
    if (curve.ambient_dim != 2) throw InvalidInput("implicitization needs a plane curve");
    const UPoly C0 = curve.coords[0].affine_t();
    const UPoly A = curve.coords[1].affine_t();
    const UPoly B = curve.coords[2].affine_t();

    const UPoly ga = gcd(A, C0);
    const UPoly a = divmod(A, ga).first, c1 = divmod(C0, ga).first;
    const UPoly gb = gcd(B, C0);
    const UPoly b = divmod(B, gb).first, c2 = divmod(C0, gb).first;

    using detail::XPoly;
    using detail::XYPoly;
    const int d1 = std::max(a.degree(), c1.degree());
    const int d2 = std::max(b.degree(), c2.degree());
    std::vector<XYPoly> h1(static_cast<size_t>(d1) + 1), h2(static_cast<size_t>(d2) + 1);
    for (int i = 0; i <= d1; ++i)  // a_i - x * c1_i
        h1[static_cast<size_t>(i)] =
            XYPoly(XPoly(std::vector<Rational>{a.coeff(i), -c1.coeff(i)}));
    for (int i = 0; i <= d2; ++i) {  // b_i - y * c2_i
        std::vector<XPoly> ycoeffs{XPoly(std::vector<Rational>{b.coeff(i)}),
                                   XPoly(std::vector<Rational>{-c2.coeff(i)})};
        h2[static_cast<size_t>(i)] = XYPoly(std::move(ycoeffs));
    }
    const DensePoly<XYPoly> H1{std::vector<XYPoly>(h1)}, H2{std::vector<XYPoly>(h2)};
    if (H1.is_zero() || H2.is_zero()) throw DegenerateCurve("constant chart fraction");

    const XYPoly res = resultant(H1, H2);
    if (res.is_zero()) throw ImproperParametrization("vanishing elimination resultant");
    TriPoly f = detail::homogenize_primitive(res);
    if (f.degree != curve.degree)
        throw ImproperParametrization("implicit degree " + std::to_string(f.degree) +
                                      " differs from parametrization degree " +
                                      std::to_string(curve.degree) +
                                      "; parametrization is not proper");
    if (!f.evaluate(curve.coords).is_zero())
        throw InternalInconsistency("implicit polynomial does not vanish on the curve");
    return f;
}

}  // namespace curveclass
