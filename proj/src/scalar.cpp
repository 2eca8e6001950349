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

#include "spinfake/scalar.hpp"

#include <stdexcept>

namespace spinfake {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

AlgebraicScalar AlgebraicScalar::pow2_half(int e) {
    // 2^(e/2) = 2^floor(e/2) * (sqrt2 if e odd)
    int whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
    bool half = (e - 2 * whole) != 0;
    Rational base(1);
    if (whole >= 0)
        base = Rational(Integer(1) << whole);
    else
        base = Rational(Integer(1), Integer(1) << -whole);
    if (half) return {Rational(0), base};
    return {base, Rational(0)};
}

AlgebraicScalar AlgebraicScalar::inverse() const {
    Rational norm = rat_ * rat_ - 2 * sqrt2_ * sqrt2_;
    if (sgn(norm) == 0) throw std::domain_error("AlgebraicScalar: division by zero");
    return {rat_ / norm, -sqrt2_ / norm};
}

std::string AlgebraicScalar::to_string() const {
    if (is_rational()) return rat_.get_str();
    std::string s2 = sqrt2_.get_str() + "*sqrt2";
    if (sgn(rat_) == 0) return s2;
    return rat_.get_str() + (sgn(sqrt2_) > 0 ? " + " : " - ") +
           Rational(abs(sqrt2_)).get_str() + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& v) {
    return os << v.to_string();
}

}  // namespace spinfake
