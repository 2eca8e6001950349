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

#include <doctest.h>

#include "brute.hpp"
#include "spinfake/characters.hpp"
#include "spinfake/symmetric.hpp"

using namespace spinfake;

namespace {

MultivariatePolynomial::Exponent exps(std::initializer_list<int> e) { return e; }

// Tableau-sum evaluation of hs_lambda(a q^0, a q^1, ...; b q^0, b q^1, ...) through q^order.
TruncatedSeries tableau_specialization(const Partition& lambda, const Rational& a, const Rational& b, int order) {
    const int m = order + 1;
    const Partition conj = conjugate(lambda);
    TruncatedSeries total(order);
    auto side = [&](const Partition& outer, const Partition& inner, const Rational& scale) {
        TruncatedSeries s(order);
        for (const auto& [content, count] : brute::skew_tableaux(outer, inner, m)) {
            long deg = 0, cells = 0;
            for (int v = 0; v < m; ++v) {
                deg += static_cast<long>(v) * content[v];
                cells += content[v];
            }
            if (deg > order) continue;
            Rational w(count);
            for (long c = 0; c < cells; ++c) w *= scale;
            s[deg] += w;
        }
        return s;
    };
    for (int k = 0; k <= lambda.size(); ++k)
        for (const auto& mu : partitions_of(k)) {
            if (!contains(lambda, mu)) continue;
            total += side(mu, Partition(), a) * side(conj, conjugate(mu), b);
        }
    return total;
}

}  // namespace

TEST_CASE("schur functions in power sums") {
    auto s1 = schur_in_powersums(Partition{1});
    CHECK(s1 == PowerSumExpansion::power_sum(Partition{1}));
    auto s2 = schur_in_powersums(Partition{2});
    CHECK(s2.coefficient(Partition{2}) == AlgebraicScalar(ratio(1, 2)));
    CHECK(s2.coefficient(Partition{1, 1}) == AlgebraicScalar(ratio(1, 2)));
    auto s21 = schur_in_powersums(Partition{2, 1});
    CHECK(s21.terms().size() == 2);
    CHECK(s21.coefficient(Partition{1, 1, 1}) == AlgebraicScalar(ratio(1, 3)));
    CHECK(s21.coefficient(Partition{3}) == AlgebraicScalar(ratio(-1, 3)));
    CHECK(s21.coefficient(Partition{2, 1}).is_zero());
    CHECK(s21.is_homogeneous());
}

TEST_CASE("schur expansions are orthonormal") {
    for (int n = 1; n <= 7; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Rational total = 0;
                for (const auto& l : parts) total += ratio(chi_sn(mu, l) * chi_sn(nu, l), z_order(l));
                CHECK(total == (mu == nu ? 1 : 0));
            }
    }
}

TEST_CASE("power sum evaluation") {
    auto p1 = evaluate_powersum(PowerSumExpansion::power_sum(Partition{1}), 2);
    CHECK(p1 == MultivariatePolynomial::variable(2, 0) + MultivariatePolynomial::variable(2, 1));
    CHECK(evaluate_powersum(schur_in_powersums(Partition{1, 1}), 1).is_zero());
    auto s21 = evaluate_powersum(schur_in_powersums(Partition{2, 1}), 3);
    CHECK(s21.term_count() == 7);
    CHECK(s21.evaluate({Rational(1), Rational(1), Rational(1)}) == 8);
    CHECK(s21.coefficient(exps({1, 1, 1})) == brute::kostka(Partition{2, 1}, {1, 1, 1}));
    CHECK(s21.coefficient(exps({1, 1, 1})) == 2);
    PowerSumExpansion irrational;
    irrational.add_term(Partition{1}, AlgebraicScalar::sqrt2());
    CHECK_THROWS_AS(evaluate_powersum(irrational, 2), std::domain_error);
}

TEST_CASE("schur polynomials count semistandard tableaux") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const int m = 3;
            auto poly = schur_polynomial(lambda, m);
            auto ref = brute::skew_tableaux(lambda, Partition(), m);
            CHECK(poly.term_count() == ref.size());
            for (const auto& [e, count] : ref) CHECK(poly.coefficient(e) == count);
            CHECK(poly == evaluate_powersum(schur_in_powersums(lambda), m));
            CHECK(poly.swapped(0, 2) == poly);
        }
}

TEST_CASE("skew schur polynomials") {
    CHECK(skew_schur(Partition{3, 1}, Partition{3, 1}, 2) == MultivariatePolynomial::constant(2, 1));
    auto s = skew_schur(Partition{2, 1}, Partition{1}, 2);
    CHECK(s.evaluate({Rational(1), Rational(1)}) == 4);
    long fillings = 0;
    for (const auto& [e, count] : brute::skew_tableaux(Partition{2, 1}, Partition{1}, 2)) fillings += count;
    CHECK(fillings == 4);
    CHECK(skew_schur(Partition{3, 2}, Partition(), 3) == schur_polynomial(Partition{3, 2}, 3));
    CHECK_THROWS_WITH_AS(skew_schur(Partition{2}, Partition{1, 1}, 2), "mu not contained in lambda",
                         std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!contains(lambda, mu)) continue;
                    auto poly = skew_schur(lambda, mu, 3);
                    for (const auto& [e, count] : brute::skew_tableaux(lambda, mu, 3))
                        CHECK(poly.coefficient(e) == count);
                }
}

TEST_CASE("super schur polynomials") {
    auto h1 = super_schur_truncated(Partition{1}, 2, 2);
    MultivariatePolynomial sum(4);
    for (int i = 0; i < 4; ++i) sum += MultivariatePolynomial::variable(4, i);
    CHECK(h1 == sum);
    auto h11 = super_schur_truncated(Partition{1, 1}, 1, 1);
    MultivariatePolynomial x = MultivariatePolynomial::variable(2, 0), y = MultivariatePolynomial::variable(2, 1);
    CHECK(h11 == y * y + x * y);
    CHECK(super_schur_truncated(Partition(), 2, 2) == MultivariatePolynomial::constant(4, 1));
}

TEST_CASE("super schur with one alphabet empty") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(super_schur_truncated(lambda, 3, 0) == schur_polynomial(lambda, 3));
            CHECK(super_schur_truncated(lambda, 0, 3) == schur_polynomial(conjugate(lambda), 3));
        }
}

TEST_CASE("specialized super schur product form") {
    auto one = super_schur_specialized(Partition{1}, Rational(2), Rational(3)).expand(6);
    for (int k = 0; k <= 6; ++k) CHECK(one[k] == 5);
    auto col = super_schur_specialized(Partition{1, 1}, Rational(0), Rational(1)).expand(10);
    auto ref = brute::rational_series({}, {2, 1}, 10);
    for (int k = 0; k <= 10; ++k) CHECK(col[k] == ref[k]);
}

TEST_CASE("specialized super schur equals the tableau sum") {
    const std::vector<std::pair<Rational, Rational>> ab{
        {Rational(1), Rational(1)}, {Rational(2), ratio(-1, 3)}, {Rational(0), Rational(1)}, {ratio(-3, 2), ratio(5, 7)}};
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& [a, b] : ab)
                CHECK(super_schur_specialized(lambda, a, b).expand(8) == tableau_specialization(lambda, a, b, 8));
}

TEST_CASE("series evaluation of skew schur") {
    std::vector<TruncatedSeries> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(TruncatedSeries::monomial(6, Rational(1), i));
    auto s = skew_schur_at(Partition{2, 1}, Partition(), pt, 6);
    auto direct = schur_polynomial(Partition{2, 1}, 4).evaluate(pt, 6);
    CHECK(s == direct);
}

TEST_CASE("super cauchy identity") {
    CHECK(verify_super_cauchy(0, 1, 1, 1).passed);
    CHECK(verify_super_cauchy(1, 2, 2, 2).passed);
    auto r = verify_super_cauchy(4, 2, 2, 2);
    CHECK(r.passed);
    CHECK(r.cases > 0);
    CHECK_THROWS(verify_super_cauchy(13, 1, 1, 1));
    CHECK_THROWS(verify_super_cauchy(2, 0, 1, 1));
}

TEST_CASE("hook content specialization check") {
    auto r = verify_super_schur_specialization(5, 10);
    CHECK(r.passed);
    CHECK(r.first_discrepancy.empty());
}
