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

#include <string>
#include <vector>

#include "spinfake/scalar.hpp"

namespace spinfake {

/// Dense univariate polynomial in t with integer coefficients, trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, int degree);
    /// 1 + sign * t^e  (e >= 1)
    static IntPolynomial binomial(int sign, int e);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent with nonzero coefficient, -1 for zero.
    int low_degree() const;

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    Integer coefficient(int k) const;

    Integer evaluate_at_one() const;
    Rational evaluate(const Rational& t) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const Integer& c);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }

    IntPolynomial shifted(int k) const;

    /// Quotient of an exact division; throws std::logic_error on a nonzero remainder.
    IntPolynomial exact_divide(const IntPolynomial& divisor) const;
    /// Divides every coefficient by d; throws std::logic_error if not exact.
    IntPolynomial exact_divide(const Integer& d) const;

    /// Coefficient k equals coefficient N-k for all k.
    bool is_palindromic(int shift) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Power series in t with rational coefficients, kept up to t^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0);
    TruncatedSeries(int order, const IntPolynomial& p);
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries one(int order);
    /// c * t^e
    static TruncatedSeries monomial(int order, const Rational& c, int e);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(k); }
    Rational& operator[](int k) { return coeffs_.at(k); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

    /// Multiplicative inverse; constant term must be nonzero.
    TruncatedSeries inverse() const;
    /// Composition-free substitution t -> t^k.
    TruncatedSeries dilate(int k) const;
    /// Same series viewed at a smaller (or larger, zero padded) order.
    TruncatedSeries truncated(int order) const;

    bool is_zero() const;
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// "c0 + c1*t + ... + O(t^(N+1))"
    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

/// First index where two series differ (compared up to the smaller order), or -1.
int first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/**
 * scalar * t^shift * prod (1 + t^e) / prod (1 - t^d), all e, d >= 1.
 *
 * Factors (1 + t^e) with e <= 0 are normalized on insertion: e = 0 doubles the
 * scalar, e < 0 moves t^e into the shift.
 */
class FactoredRational {
public:
    FactoredRational() = default;

    void multiply_scalar(const Integer& c) { scalar_ *= c; }
    void multiply_monomial(long long e) { shift_ += e; }
    void add_plus_factor(long long e);
    void add_denominator_factor(long long d);

    const Integer& scalar() const noexcept { return scalar_; }
    long long shift() const noexcept { return shift_; }
    /// Sorted exponents.
    std::vector<long long> plus_factors() const;
    std::vector<long long> denominator_factors() const;

    /// scalar * t^shift * prod (1 + t^e); requires shift >= 0.
    IntPolynomial numerator() const;
    /// prod (1 - t^d)
    IntPolynomial denominator() const;

    TruncatedSeries expand(int order) const;

    std::string to_string() const;

private:
    Integer scalar_{1};
    long long shift_ = 0;
    std::vector<long long> plus_;
    std::vector<long long> denom_;
};

/// Sum of factored terms sharing one denominator.
struct FactoredSum {
    std::vector<FactoredRational> terms;

    TruncatedSeries expand(int order) const;
    /// Sum of numerators (over the common denominator).
    IntPolynomial numerator() const;
    /// Common denominator; throws std::logic_error if terms disagree.
    IntPolynomial denominator() const;
    std::string to_string() const;
};

}  // namespace spinfake
