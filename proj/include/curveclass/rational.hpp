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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "curveclass/errors.hpp"

namespace curveclass {

/// Arbitrary-precision integer. GMP supplies the representation; everything
/// downstream only relies on exact ring arithmetic and comparisons.
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw InvalidInput("empty integer literal");
    Integer z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw InvalidInput("not a base-10 integer: '" + std::string(text) + "'");
    return z;
}

/// Exact rational scalar. Canonical form (positive denominator, coprime
/// numerator/denominator) is maintained after every operation; construction
/// from a numerator/denominator pair canonicalizes.
class Rational {
   public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_integer(text));
        return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidInput("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "p" when integral, "p/q" otherwise; the interchange grammar.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    double to_double() const { return q_.get_d(); }

   private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational pow(const Rational& x, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace curveclass
