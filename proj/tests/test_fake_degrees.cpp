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
#include "spinfake/fake_degrees.hpp"
#include "spinfake/symmetric.hpp"

using namespace spinfake;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
    IntPolynomial p;
    int k = 0;
    for (long c : coeffs) p += IntPolynomial::monomial(Integer(c), k++);
    return p;
}

bool matches(const TruncatedSeries& s, const std::vector<long>& ref) {
    for (int k = 0; k <= s.order(); ++k)
        if (s[k] != ref.at(k)) return false;
    return true;
}

}  // namespace

TEST_CASE("degrees of the basic invariants") {
    CHECK(degrees(WeylType::B, 3) == std::vector<int>{2, 4, 6});
    CHECK(degrees(WeylType::D, 4) == std::vector<int>{2, 4, 6, 4});
    CHECK(degrees(WeylType::A, 1) == std::vector<int>{2});
    CHECK(degrees(WeylType::A, 3) == std::vector<int>{2, 3, 4});
    CHECK(reflection_count(WeylType::B, 4) == 16);
    CHECK(reflection_count(WeylType::D, 5) == 20);
    CHECK(reflection_count(WeylType::A, 3) == 6);
    for (auto w : {WeylType::A, WeylType::B, WeylType::D})
        for (int n = 4; n <= 8; ++n) {
            long long s = 0;
            for (int d : degrees(w, n)) s += d - 1;
            CHECK(s == reflection_count(w, n));
        }
    CHECK_THROWS_AS(degrees(WeylType::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(degrees(WeylType::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(degrees(WeylType::A, 0), std::invalid_argument);
}

TEST_CASE("invariant hilbert series") {
    auto b2 = invariant_hilbert_series(WeylType::B, 2, 4);
    CHECK(matches(b2, {1, 0, 1, 0, 2}));
    CHECK(invariant_hilbert_series(WeylType::D, 5, 0) == TruncatedSeries::one(0));
    CHECK(invariant_hilbert_series(WeylType::D, 4, 6)[2] == 1);
    CHECK(matches(invariant_hilbert_series(WeylType::D, 4, 12), brute::rational_series({}, {2, 4, 6, 4}, 12)));
    CHECK(matches(invariant_hilbert_series(WeylType::A, 3, 12), brute::rational_series({}, {2, 3, 4}, 12)));
}

TEST_CASE("graded multiplicities of type B") {
    auto h2 = H_minus_B(Partition{2});
    CHECK(h2.scalar() == 1);
    CHECK(h2.shift() == 0);
    CHECK(h2.plus_factors() == std::vector<long long>{1, 3});
    CHECK(h2.denominator_factors() == std::vector<long long>{2, 4});
    CHECK(matches(h2.expand(15), brute::rational_series({{1, 1}, {1, 3}}, {2, 4}, 15)));

    auto h1 = H_minus_B(Partition{1});
    CHECK(h1.scalar() == 2);
    CHECK(matches(h1.expand(8), std::vector<long>(9, 2)));

    auto h11 = H_minus_B(Partition{1, 1});
    CHECK(h11.shift() == 1);
    CHECK(h11.plus_factors() == std::vector<long long>{1, 1});
    auto ref = brute::rational_series({{1, 1}, {1, 1}}, {2, 4}, 14);
    ref.insert(ref.begin(), 0);
    CHECK(matches(h11.expand(15), ref));
}

TEST_CASE("spin fake degrees of type B") {
    CHECK(P_minus_B(Partition{2}) == poly({1, 1, 0, 1, 1}));
    CHECK(P_minus_B(Partition{1, 1}) == poly({0, 1, 2, 1}));
    CHECK(P_minus_B(Partition{2}).evaluate_at_one() == 4);
    CHECK(P_minus_B(Partition{1, 1}).evaluate_at_one() == 4);
    CHECK(P_B_heckeclifford(Partition{2}) == poly({1, 1, 0, 1, 1}));
    CHECK(P_B_heckeclifford(Partition{3}) == poly({1, 1}) * poly({1, 0, 0, 1}) * poly({1, 0, 0, 0, 0, 1}));
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            IntPolynomial expect = P_B_heckeclifford(lambda) * Integer(n % 2 ? 2 : 1);
            CHECK(P_minus_B(lambda) == expect);
        }
    CHECK_THROWS_AS(P_minus_B(Partition{1}), std::invalid_argument);
}

TEST_CASE("Hecke-Clifford multiplicities are super Schur specializations") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto s = H_B_heckeclifford(lambda).expand(20);
            CHECK(matches(s, brute::hook_content_series(lambda, 20)));
        }
    CHECK(heckeclifford_super_schur_check(6, 20).passed);
}

TEST_CASE("graded multiplicities of type D") {
    // lambda = lambda' agrees with type B; otherwise the pair sums.
    for (int n = 4; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto d = H_minus_D(lambda).expand(30);
            if (is_self_conjugate(lambda)) {
                CHECK(d == H_minus_B(lambda).expand(30));
            } else {
                CHECK(d == H_minus_B(lambda).expand(30) + H_minus_B(conjugate(lambda)).expand(30));
                CHECK(d == H_minus_D(conjugate(lambda)).expand(30));
                CHECK(P_minus_D(lambda) == P_minus_D(conjugate(lambda)));
            }
        }
    auto p22 = P_minus_D(Partition{2, 2});
    CHECK(check_palindromic(p22, 12));
    CHECK(p22.degree() <= 12);
    CHECK(P_minus_D(Partition{2, 2}) ==
          (H_minus_B(Partition{2, 2}).numerator() * degree_product(WeylType::D, 4))
              .exact_divide(H_minus_B(Partition{2, 2}).denominator()));
    CHECK_THROWS_AS(P_minus_D(Partition{2, 1}), std::invalid_argument);
}

TEST_CASE("Hecke-Clifford type D") {
    CHECK(P_D_heckeclifford(Partition{3, 1, 1}) == P_minus_D(Partition{3, 1, 1}));
    for (int n : {5, 7})
        for (const auto& lambda : partitions_of(n)) {
            if (is_self_conjugate(lambda))
                CHECK(P_D_heckeclifford(lambda) == P_minus_D(lambda));
            else
                CHECK(P_D_heckeclifford(lambda) * Integer(2) == P_minus_D(lambda));
        }
}

TEST_CASE("palindromic fake degrees") {
    CHECK(check_palindromic(poly({1, 1, 0, 1, 1}), 4));
    CHECK(check_palindromic(poly({0, 1, 2, 1}), 4));
    CHECK_FALSE(check_palindromic(poly({1, 1}), 3));
    CHECK(palindromicity_check(8).passed);
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto p = P_minus_B(lambda);
            CHECK(p.low_degree() + p.degree() == n * n);
            for (const auto& c : p.coefficients()) CHECK(c >= 0);
        }
}

TEST_CASE("conjugation identity") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(conjugate_content_product(lambda).expand(25) == H_B_heckeclifford(conjugate(lambda)).expand(25));
    CHECK(conjugation_identity_check(8).passed);
}

TEST_CASE("regular representation sum rules") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(sum_rule_check(WeylType::B, n, false).passed);
        CHECK(sum_rule_check(WeylType::B, n, true).passed);
    }
    for (int n = 4; n <= 7; ++n) CHECK(sum_rule_check(WeylType::D, n, false).passed);
    // Direct count for n = 2: dim B^(2) = dim B^(1,1) = 2, dim U = 2, |B_2| = 8.
    CHECK(2 * P_minus_B(Partition{2}).evaluate_at_one() + 2 * P_minus_B(Partition{1, 1}).evaluate_at_one() == 16);
}

TEST_CASE("fake degrees are multiplicities times the degree product") {
    for (const auto& lambda : partitions_of(4)) CHECK(P_equals_H_times_degrees(lambda, WeylType::B));
    for (const auto& lambda : partitions_of(5)) CHECK(P_equals_H_times_degrees(lambda, WeylType::D));
    CHECK_THROWS(P_equals_H_times_degrees(Partition{1}, WeylType::B));
    CHECK(formula_relations_check(6).passed);
}

TEST_CASE("fake degree tables") {
    auto b2 = fake_degree_table(WeylType::B, 2, false);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0].polynomial == poly({1, 1, 0, 1, 1}));
    CHECK(b2[1].polynomial == poly({0, 1, 2, 1}));
    for (const auto& row : b2) {
        CHECK(row.shift == 4);
        CHECK(row.palindromic);
        CHECK(row.value_at_one == 4);
    }
    auto d4 = fake_degree_table(WeylType::D, 4, false);
    int duplicated = 0;
    for (const auto& row : d4) {
        CHECK(row.shift == 12);
        if (row.duplicity == 2) ++duplicated;
    }
    CHECK(duplicated == 1);
}
