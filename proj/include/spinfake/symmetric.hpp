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

#include <map>
#include <string>
#include <vector>

#include "spinfake/partition.hpp"
#include "spinfake/report.hpp"
#include "spinfake/scalar.hpp"
#include "spinfake/series.hpp"

namespace spinfake {

/// Finite linear combination of power sums p_lambda.
class PowerSumExpansion {
public:
    PowerSumExpansion() = default;

    static PowerSumExpansion power_sum(const Partition& lambda);

    void add_term(const Partition& lambda, const AlgebraicScalar& c);
    AlgebraicScalar coefficient(const Partition& lambda) const;
    /// Nonzero terms only.
    const std::map<Partition, AlgebraicScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// All indices share one size.
    bool is_homogeneous() const;

    PowerSumExpansion& operator+=(const PowerSumExpansion& o);
    PowerSumExpansion& operator-=(const PowerSumExpansion& o);
    PowerSumExpansion& operator*=(const AlgebraicScalar& c);
    friend PowerSumExpansion operator+(PowerSumExpansion a, const PowerSumExpansion& b) { return a += b; }
    friend PowerSumExpansion operator-(PowerSumExpansion a, const PowerSumExpansion& b) { return a -= b; }
    friend PowerSumExpansion operator*(PowerSumExpansion a, const AlgebraicScalar& c) { return a *= c; }
    /// p_lambda p_mu = p_{lambda union mu}
    friend PowerSumExpansion operator*(const PowerSumExpansion& a, const PowerSumExpansion& b);

    friend bool operator==(const PowerSumExpansion& a, const PowerSumExpansion& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    std::map<Partition, AlgebraicScalar> terms_;
};

/// Sparse polynomial over Q in a fixed number of variables.
class MultivariatePolynomial {
public:
    using Exponent = std::vector<int>;

    explicit MultivariatePolynomial(int variables = 0);

    static MultivariatePolynomial constant(int variables, const Rational& c);
    static MultivariatePolynomial variable(int variables, int index);

    int variables() const noexcept { return vars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
    MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
    MultivariatePolynomial& operator*=(const Rational& c);
    friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
    friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
    friend MultivariatePolynomial operator*(MultivariatePolynomial a, const Rational& c) { return a *= c; }
    friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);

    /// Product keeping only terms whose weighted degree sum(w_i e_i) is <= max_weight.
    static MultivariatePolynomial multiply_truncated(const MultivariatePolynomial& a,
                                                     const MultivariatePolynomial& b,
                                                     const std::vector<int>& weights, int max_weight);

    /// Places this polynomial's variables at positions offset.. of a ring with `total` variables.
    MultivariatePolynomial embedded(int total, int offset) const;
    /// Swaps variables i and j.
    MultivariatePolynomial swapped(int i, int j) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Substitutes a power series for every variable.
    TruncatedSeries evaluate(const std::vector<TruncatedSeries>& point, int order) const;

    friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int vars_;
    std::map<Exponent, Rational> terms_;
};

/// s_mu = sum_lambda chi^mu_lambda / z_lambda p_lambda
PowerSumExpansion schur_in_powersums(const Partition& mu);

/// Substitutes p_k = x_1^k + ... + x_m^k; throws std::domain_error on sqrt2 coefficients.
MultivariatePolynomial evaluate_powersum(const PowerSumExpansion& expansion, int m);

/// h_0 .. h_max_k in m variables.
std::vector<MultivariatePolynomial> complete_homogeneous_upto(int max_k, int m);

/// Skew Schur polynomial s_{lambda/mu}(x_1..x_m) by the Jacobi-Trudi determinant.
MultivariatePolynomial skew_schur(const Partition& lambda, const Partition& mu, int m);
MultivariatePolynomial schur_polynomial(const Partition& lambda, int m);

/// hs_lambda(x; y) with variables ordered x_1..x_p, y_1..y_q.
MultivariatePolynomial super_schur_truncated(const Partition& lambda, int x_count, int y_count);

/// s_{lambda/mu} evaluated at series-valued variables, via Jacobi-Trudi over series.
TruncatedSeries skew_schur_at(const Partition& lambda, const Partition& mu,
                              const std::vector<TruncatedSeries>& point, int order);
/// hs_lambda(x; y) evaluated at series-valued variables.
TruncatedSeries super_schur_at(const Partition& lambda, const std::vector<TruncatedSeries>& xs,
                               const std::vector<TruncatedSeries>& ys, int order);

/// q^{n(lambda)} prod (a + b q^c) / (1 - q^h): exact data plus expansion in q.
struct SpecializedSuperSchur {
    Rational a, b;
    long long shift = 0;           // q-exponent after normalizing negative contents
    std::vector<int> contents;     // one per cell
    std::vector<int> hooks;        // one per cell

    TruncatedSeries expand(int order) const;
    std::string to_string() const;
};

SpecializedSuperSchur super_schur_specialized(const Partition& lambda, const Rational& a,
                                              const Rational& b);

/// Compares both sides of the super Cauchy identity up to z-degree N.
VerificationReport verify_super_cauchy(int N, int x_count, int y_count, int z_count);

/// Evaluates hs_lambda at x_i = a q^{i-1}, y_j = b q^{j-1} and compares with the product form.
VerificationReport verify_super_schur_specialization(int n_max, int order);

}  // namespace spinfake
