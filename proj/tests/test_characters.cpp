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

using namespace spinfake;

namespace {

Integer dimension_of(const Partition& lambda) {
    return chi_sn(lambda, Partition(std::vector<int>(lambda.size(), 1)));
}

SplitClassLabel label(Partition plus, Partition minus, ClassFamily family, Parity parity = Parity::even) {
    return {std::move(plus), std::move(minus), family, parity};
}

}  // namespace

TEST_CASE("symmetric group characters match the alternant expansion") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) CHECK(chi_sn(lambda, mu) == brute::frobenius_character(lambda, mu));
}

TEST_CASE("symmetric group character values") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(chi_sn(Partition{n}, mu) == 1);
            CHECK(chi_sn(Partition(std::vector<int>(n, 1)), mu) == ((n - mu.length()) % 2 ? -1 : 1));
        }
    CHECK(chi_sn(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(chi_sn(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(chi_sn(Partition{2, 1}, Partition{3}) == -1);
    CHECK_THROWS(chi_sn(Partition{2, 1}, Partition{2}));
}

TEST_CASE("character table columns are orthogonal") {
    for (int n = 1; n <= 6; ++n) {
        auto table = sn_character_table(n);
        auto parts = partitions_of(n);
        REQUIRE(table.size() == parts.size());
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = 0; b < parts.size(); ++b) {
                Integer s = 0;
                for (std::size_t l = 0; l < parts.size(); ++l) s += table[l][a] * table[l][b];
                CHECK(s == (a == b ? Integer(brute::centralizer_order(parts[a].parts())) : Integer(0)));
            }
    }
}

TEST_CASE("split classes of small groups") {
    auto b2 = split_classes(GroupKind::B, 2);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == label(Partition{1, 1}, Partition(), ClassFamily::B_even));
    CHECK(b2[1] == label(Partition(), Partition{2}, ClassFamily::B_even));

    auto d4 = split_classes(GroupKind::D, 4);
    REQUIRE(d4.size() == 4);
    std::vector<std::pair<Partition, Partition>> want{
        {Partition{1, 1, 1, 1}, Partition()}, {Partition{3, 1}, Partition()},
        {Partition(), Partition{2, 2}}, {Partition(), Partition{3, 1}}};
    for (const auto& [p, m] : want) {
        bool found = false;
        for (const auto& c : d4) found = found || (c.rho_plus == p && c.rho_minus == m);
        CHECK(found);
    }

    auto g3 = split_classes(GroupKind::Gamma, 3);
    REQUIRE(g3.size() == 3);
    for (const auto& [p, m] : std::vector<std::pair<Partition, Partition>>{
             {Partition{1, 1, 1}, Partition()}, {Partition{3}, Partition()}, {Partition{1}, Partition{2}}}) {
        bool found = false;
        for (const auto& c : g3) found = found || (c.rho_plus == p && c.rho_minus == m && c.family == ClassFamily::Gamma);
        CHECK(found);
    }

    CHECK_THROWS_AS(split_classes(GroupKind::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_classes(GroupKind::D, 3), std::invalid_argument);
}

TEST_CASE("split class counts") {
    for (int n = 2; n <= 10; ++n) {
        long even = 0, odd = 0;
        for (const auto& c : split_classes(GroupKind::B, n)) {
            CHECK(c.size() == n);
            (c.parity == Parity::even ? even : odd)++;
        }
        CHECK(even == partition_count(n));
        CHECK(odd == (n % 2 ? partition_count(n) : 0));
    }
    for (int n = 1; n <= 9; ++n)
        CHECK(static_cast<long long>(split_classes(GroupKind::Gamma, n).size()) == partition_count(n));
    for (int n = 4; n <= 8; n += 2)
        CHECK(static_cast<long>(split_classes(GroupKind::D, n).size()) == brute::alternating_classes(n));
}

TEST_CASE("alternating group class count") {
    for (int n = 2; n <= 9; ++n) CHECK(alternating_class_count(n) == brute::alternating_classes(n));
    auto r = count_consistency_check(10, 15);
    CHECK(r.passed);
}

TEST_CASE("spin characters of CB_n^-") {
    auto v = spin_char_B(Partition{2}, label(Partition{1, 1}, Partition(), ClassFamily::B_even));
    CHECK(v == AlgebraicScalar(2));
    auto w = spin_char_B(Partition{1, 1}, label(Partition(), Partition{2}, ClassFamily::B_even));
    CHECK(w == AlgebraicScalar::sqrt2());
    for (int n = 2; n <= 7; ++n) {
        Integer dim_u = clifford_module_dimension(n);
        auto identity = label(Partition(std::vector<int>(n, 1)), Partition(), ClassFamily::B_even);
        CHECK(spin_char_B(Partition{n}, identity) == AlgebraicScalar(dim_u));
        for (const auto& lambda : partitions_of(n))
            CHECK(spin_char_B(lambda, identity) == AlgebraicScalar(Integer(dim_u * dimension_of(lambda))));
    }
    CHECK_THROWS(spin_char_B(Partition{2}, label(Partition{1, 1}, Partition(), ClassFamily::Gamma)));
    CHECK_THROWS(spin_char_B(Partition{3}, label(Partition{1, 1}, Partition(), ClassFamily::B_even)));
}

TEST_CASE("characters of the Hecke-Clifford modules") {
    CHECK(hc_char_B(Partition{2}, label(Partition{1, 1}, Partition(), ClassFamily::Gamma)) == 4);
    CHECK(hc_char_B(Partition{1, 1, 1}, label(Partition{1}, Partition{2}, ClassFamily::Gamma)) == -4);
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto identity = label(Partition(std::vector<int>(n, 1)), Partition(), ClassFamily::Gamma);
            CHECK(hc_char_B(lambda, identity) == (Integer(1) << n) * dimension_of(lambda));
        }
    CHECK(hc_char_B(Partition{1, 1}, label(Partition(), Partition{2}, ClassFamily::Gamma)) == -2);
    CHECK_THROWS(hc_char_B(Partition{1, 1}, label(Partition{1}, Partition{2}, ClassFamily::Gamma)));
    CHECK_THROWS(hc_char_B(Partition{2}, label(Partition{1, 1}, Partition(), ClassFamily::B_even)));
}

TEST_CASE("simple module lists") {
    auto cb3 = simple_modules(AlgebraKind::CB_minus, 3);
    REQUIRE(cb3.size() == 3);
    for (const auto& m : cb3) CHECK(m.type == ModuleType::Q);

    auto cd5 = simple_modules(AlgebraKind::CD_minus, 5);
    int type_m = 0, type_q = 0;
    for (const auto& m : cd5) (m.type == ModuleType::M ? type_m : type_q)++;
    CHECK(type_m == 1);
    CHECK(type_q == 3);
    for (const auto& m : cd5)
        if (m.type == ModuleType::M) CHECK(m.lambda == Partition{3, 1, 1});

    for (int n = 1; n <= 6; ++n) {
        auto hc = simple_modules(AlgebraKind::HC_B, n);
        CHECK(static_cast<long long>(hc.size()) == partition_count(n));
        for (const auto& m : hc) CHECK(m.type == ModuleType::M);
    }
}

TEST_CASE("simple module dimensions exhaust the algebra") {
    // Type M contributes dim^2, type Q contributes dim^2 / 2.
    auto total = [](const std::vector<SimpleModuleLabel>& mods) {
        Integer s = 0;
        for (const auto& m : mods) {
            Integer sq = m.dimension * m.dimension;
            s += m.type == ModuleType::M ? sq : Integer(sq / 2);
        }
        return s;
    };
    for (int n = 2; n <= 7; ++n)
        CHECK(total(simple_modules(AlgebraKind::CB_minus, n)) == (Integer(1) << n) * factorial(n));
    for (int n = 4; n <= 8; ++n)
        CHECK(total(simple_modules(AlgebraKind::CD_minus, n)) == (Integer(1) << (n - 1)) * factorial(n));
    for (int n = 1; n <= 6; ++n)
        CHECK(total(simple_modules(AlgebraKind::HC_B, n)) == (Integer(1) << (2 * n)) * factorial(n));
}

TEST_CASE("self-conjugate vanishing") {
    CHECK(lambda_selfconjugate_vanishing_check(3).passed);
    CHECK(lambda_selfconjugate_vanishing_check(5).passed);
    CHECK(lambda_selfconjugate_vanishing_check(9).passed);
    CHECK_THROWS(lambda_selfconjugate_vanishing_check(4));
}

TEST_CASE("characteristic maps") {
    CHECK(characteristic_map_minus(spin_character_B(Partition{2, 2}), 4) == schur_in_powersums(Partition{2, 2}));
    CHECK(characteristic_map_minus(spin_character_B(Partition{2, 1}), 3) ==
          schur_in_powersums(Partition{2, 1}) * AlgebraicScalar::sqrt2());
    CHECK(characteristic_map_minus(ClassFunction{}, 3).is_zero());
    for (int n = 1; n <= 6; ++n)
        CHECK(characteristic_map_gamma(hc_character(Partition{n}), n) == schur_in_powersums(Partition{n}));
    for (const auto& lambda : partitions_of(4))
        CHECK(characteristic_map_gamma(hc_character(lambda), 4) == schur_in_powersums(lambda));
    CHECK(characteristic_map_gamma(ClassFunction{}, 2).is_zero());
    CHECK(characteristic_map_check(6).passed);
}

TEST_CASE("orthogonality of spin characters") {
    for (int n = 1; n <= 6; ++n) CHECK(orthogonality_check(n).passed);
}

TEST_CASE("induction follows Pieri") {
    auto one = hc_character(Partition{1});
    auto prod = characteristic_map_gamma(induction_product(one, 1, one, 1), 2);
    CHECK(prod == schur_in_powersums(Partition{2}) + schur_in_powersums(Partition{1, 1}));
    auto prod2 = characteristic_map_gamma(induction_product(hc_character(Partition{2}), 2, one, 1), 3);
    CHECK(prod2 == schur_in_powersums(Partition{3}) + schur_in_powersums(Partition{2, 1}));
    CHECK(induction_product_check(2, 2).passed);
    CHECK(induction_product_check(3, 2).passed);
    CHECK_THROWS(induction_product(one, 2, one, 1));
}
