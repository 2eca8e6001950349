/*
   Copyright 2026 The spinfake Authors

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

#include <ostream>
#include <string>

#include <gmpxx.h>

namespace spinfake {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
class AlgebraicScalar {
public:
    AlgebraicScalar() = default;
    AlgebraicScalar(long v) : rat_(v) {}  // NOLINT: implicit from integers
    AlgebraicScalar(int v) : rat_(v) {}   // NOLINT
    AlgebraicScalar(const Integer& v) : rat_(v) {}  // NOLINT
    AlgebraicScalar(const Rational& v) : rat_(v) { rat_.canonicalize(); }  // NOLINT
    AlgebraicScalar(Rational rat, Rational sqrt2) : rat_(std::move(rat)), sqrt2_(std::move(sqrt2)) {
        rat_.canonicalize();
        sqrt2_.canonicalize();
    }

    static AlgebraicScalar sqrt2() { return {Rational(0), Rational(1)}; }
    /// 2^(e/2) for any integer e (negative allowed).
    static AlgebraicScalar pow2_half(int e);

    const Rational& rational_part() const noexcept { return rat_; }
    const Rational& sqrt2_part() const noexcept { return sqrt2_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(sqrt2_) == 0; }
    bool is_rational() const { return sgn(sqrt2_) == 0; }

    AlgebraicScalar& operator+=(const AlgebraicScalar& o) {
        rat_ += o.rat_;
        sqrt2_ += o.sqrt2_;
        return *this;
    }
    AlgebraicScalar& operator-=(const AlgebraicScalar& o) {
        rat_ -= o.rat_;
        sqrt2_ -= o.sqrt2_;
        return *this;
    }
    AlgebraicScalar& operator*=(const AlgebraicScalar& o) {
        Rational a = rat_ * o.rat_ + 2 * sqrt2_ * o.sqrt2_;
        Rational b = rat_ * o.sqrt2_ + sqrt2_ * o.rat_;
        rat_ = std::move(a);
        sqrt2_ = std::move(b);
        return *this;
    }
    AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this *= o.inverse(); }

    /// Throws std::domain_error on zero.
    AlgebraicScalar inverse() const;

    friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
    friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
    friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
    AlgebraicScalar operator-() const { return {-rat_, -sqrt2_}; }

    friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
        return a.rat_ == b.rat_ && a.sqrt2_ == b.sqrt2_;
    }

    std::string to_string() const;

private:
    Rational rat_{0};
    Rational sqrt2_{0};
};

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& v);

}  // namespace spinfake
