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
#include "spinfake/oracle.hpp"

using namespace spinfake;

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

SplitClassLabel gamma_class(Partition plus, Partition minus) {
    return {std::move(plus), std::move(minus), ClassFamily::Gamma, Parity::even};
}

bool series_match(const TruncatedSeries& s, const std::vector<long>& ref) {
    for (int k = 0; k <= s.order(); ++k)
        if (s[k] != ref.at(k)) return false;
    return true;
}

}  // namespace

TEST_CASE("presentation images") {
    CHECK(verify_presentation_images(PresentationTarget::phiB, WeylType::B, 3).passed);
    CHECK(verify_presentation_images(PresentationTarget::Omega, WeylType::B, 2).passed);
    for (int n = 2; n <= 6; ++n) CHECK(verify_presentation_images(PresentationTarget::phiB, WeylType::B, n).passed);
    for (int n : {5, 7}) CHECK(verify_presentation_images(PresentationTarget::phiD, WeylType::D, n).passed);
    for (int n = 1; n <= 5; ++n) {
        CHECK(verify_presentation_images(PresentationTarget::Omega, WeylType::A, n).passed);
        CHECK(verify_presentation_images(PresentationTarget::Psi, WeylType::A, n).passed);
    }
    for (int n = 2; n <= 5; ++n) {
        CHECK(verify_presentation_images(PresentationTarget::Omega, WeylType::B, n).passed);
        CHECK(verify_presentation_images(PresentationTarget::Psi, WeylType::B, n).passed);
    }
    CHECK(verify_presentation_images(PresentationTarget::Omega, WeylType::D, 4).passed);
    CHECK(verify_presentation_images(PresentationTarget::Omega, WeylType::D, 5).passed);
    CHECK(verify_presentation_images(PresentationTarget::Psi, WeylType::D, 5).passed);
    CHECK_THROWS(verify_presentation_images(PresentationTarget::phiD, WeylType::D, 4));
}

TEST_CASE("Clifford generators of the reflection representation") {
    // Omega sends t_i to beta_i; the beta_i square to one and satisfy the Coxeter relations up to sign.
    for (auto [w, n] : std::vector<std::pair<WeylType, int>>{{WeylType::A, 3}, {WeylType::B, 3}, {WeylType::D, 4}}) {
        auto beta = clifford_generators(w, n);
        auto m = coxeter_matrix(w, n);
        REQUIRE(static_cast<int>(beta.size()) == n);
        auto one = CliffordElement::scalar(clifford_rank(w, n), 1);
        for (int i = 0; i < n; ++i) {
            CHECK(beta[i] * beta[i] == one);
            for (int j = i + 1; j < n; ++j) {
                if (m[i][j] != 2) continue;
                CHECK(beta[i] * beta[j] == -(beta[j] * beta[i]));
            }
        }
    }
    auto beta = clifford_generators(WeylType::B, 2);
    auto x = beta[0] * beta[1];
    CHECK(x * x * x * x == -CliffordElement::scalar(2, 1));
    CHECK(coxeter_matrix(WeylType::B, 3)[1][2] == 4);
    CHECK(clifford_rank(WeylType::A, 3) == 4);
}

TEST_CASE("zeta identities for odd rank") {
    for (int n : {5, 7}) {
        CHECK(verify_phiD_surjectivity_identities(n).passed);
        auto z = zeta_element(n);
        CHECK(z.parity() == 1);
        CHECK(z * z * AlgebraicScalar(zeta_phase_square(n)) == CliffordElement::scalar(n, 1));
        for (int i = 1; i <= n; ++i) {
            auto c = CliffordElement::generator(n, i);
            CHECK(z * c == c * z);
        }
    }
    CHECK(zeta_phase_square(5) == 1);
    CHECK(zeta_phase_square(7) == -1);
    CHECK_THROWS(verify_phiD_surjectivity_identities(6));
}

TEST_CASE("graded representation") {
    GradedRepresentation rep(2, 0);
    CHECK(rep.dimension() == 4);
    CHECK(rep.action(SignedPermutation::identity(2)).is_identity());
    auto s1 = rep.generators()[0];
    CHECK((s1 * s1).is_identity());
    auto tau2 = rep.generators()[1];
    CHECK(s1.trace() == 0);
    CHECK((s1 * tau2).trace() == 2);
    CHECK((s1 * tau2).trace() == rep.word_matrix({1, 2}).trace());
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            GradedRepresentation r(n, k);
            CHECK(r.dimension() == (Integer(1) << n) * binomial(n + k - 1, k));
            CHECK(GradedRepresentation::required_dimension(n, k) == r.dimension());
            CHECK(verify_graded_rep_relations(n, k).passed);
        }
    CHECK_THROWS_WITH_AS(GradedRepresentation(6, 10, 1000), "graded representation needs dimension 192192, cap is 1000",
                         std::length_error);
}

TEST_CASE("canonical representatives") {
    auto id = canonical_representative(Partition{1, 1}, Partition());
    CHECK(id.element == SignedPermutation::identity(2));
    CHECK(id.word.empty());
    auto neg2 = canonical_representative(Partition(), Partition{2});
    CHECK(neg2.word == std::vector<int>{1, 2});
    CHECK(neg2.element == element_of_word(2, {1, 2}));
    CHECK(neg2.element.signed_cycle_type() == std::make_pair(Partition(), Partition{2}));
    auto mixed = canonical_representative(Partition{1}, Partition{2});
    CHECK(mixed.word == std::vector<int>{2, 3});
    CHECK(mixed.element.image(0) == 0);
    CHECK(mixed.element.sign(0) == 1);
    CHECK(mixed.element.signed_cycle_type() == std::make_pair(Partition{1}, Partition{2}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& cls : split_classes(GroupKind::Gamma, n)) {
            auto rep = canonical_representative(cls);
            CHECK(rep.element == element_of_word(n, rep.word));
            CHECK(rep.element.signed_cycle_type() == std::make_pair(cls.rho_plus, cls.rho_minus));
        }
}

TEST_CASE("graded traces") {
    CHECK(graded_trace(gamma_class(Partition(), Partition{2}), 0) == 2);
    CHECK(closed_form_trace(Partition(), Partition{2}, 4)[0] == 2);
    CHECK(graded_trace(gamma_class(Partition{1, 1}, Partition()), 1) == 8);
    CHECK(closed_form_trace(Partition{1, 1}, Partition(), 4)[1] == 8);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 5; ++k)
            CHECK(graded_trace(gamma_class(Partition(std::vector<int>(n, 1)), Partition()), k) ==
                  (Integer(1) << n) * binomial(n + k - 1, k));
    for (int n = 2; n <= 4; ++n) CHECK(verify_graded_traces(n, 8).passed);
}

TEST_CASE("oracle multiplicities of type B") {
    auto two = oracle_H_B(Partition{2}, 10);
    CHECK(series_match(two, brute::rational_series({{1, 1}, {1, 3}}, {2, 4}, 10)));
    CHECK(two[0] == 1);
    CHECK(two[1] == 1);
    CHECK(two[2] == 1);
    CHECK(two[3] == 2);
    CHECK(oracle_H_B(Partition{1, 1}, 4)[0] == 0);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            auto m = oracle_multiplicities_B(n, k);
            auto parts = partitions_of(n);
            REQUIRE(m.size() == parts.size());
            Rational total = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                CHECK(m[i] >= 0);
                CHECK(m[i].get_den() == 1);
                total += m[i] * (Integer(1) << n) * standard_tableaux_count(parts[i]);
            }
            CHECK(total == (Integer(1) << n) * binomial(n + k - 1, k));
        }
    for (int n = 2; n <= 3; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(series_match(oracle_H_B(lambda, 12), brute::hook_content_series(lambda, 12)));
    CHECK(verify_oracle_B(2, 12).passed);
    CHECK(verify_oracle_B(3, 12).passed);
}

TEST_CASE("oracle multiplicities of type D") {
    auto sc = oracle_H_D(Partition{3, 1, 1}, 10);
    CHECK(sc == oracle_H_B(Partition{3, 1, 1}, 10) * Rational(2));
    CHECK(sc == H_minus_D(Partition{3, 1, 1}).expand(10));
    auto pair = oracle_H_D(Partition{3, 1}, 10);
    CHECK(pair == oracle_H_B(Partition{3, 1}, 10) + oracle_H_B(Partition{2, 1, 1}, 10));
    CHECK(pair == oracle_H_D(Partition{2, 1, 1}, 10));
    CHECK(pair == oracle_H_D_from_B(Partition{3, 1}, 10));
    CHECK(verify_oracle_D(4, 10).passed);
    CHECK(verify_oracle_D(5, 8).passed);
}

TEST_CASE("basic spin module") {
    CHECK(verify_basic_spin_correspondence(WeylType::B, 2).passed);
    CHECK(verify_basic_spin_correspondence(WeylType::B, 3).passed);
    CHECK(verify_basic_spin_correspondence(WeylType::D, 4).passed);
    for (int n = 1; n <= 4; ++n) CHECK(verify_basic_spin_correspondence(WeylType::A, n).passed);
}

TEST_CASE("super tensor associativity") {
    CHECK(verify_super_tensor_associativity(3, 20, 1).passed);
    CHECK(verify_super_tensor_associativity(4, 20, 2).passed);
}
