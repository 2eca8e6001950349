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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "spinfake/characters.hpp"
#include "spinfake/fake_degrees.hpp"
#include "spinfake/oracle.hpp"
#include "spinfake/symmetric.hpp"

using namespace spinfake;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

void fold(Outcome& o, const VerificationReport& r) {
    if (!r.passed && o.passed) {
        o.passed = false;
        o.detail = r.check + ": " + r.first_discrepancy;
    }
}

void fold(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.passed) {
        o.passed = false;
        o.detail = what;
    }
}

Outcome oracle_b() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) fold(o, verify_oracle_B(n, 12));
    return o;
}

Outcome oracle_d() {
    Outcome o;
    for (int n = 4; n <= 5; ++n) fold(o, verify_oracle_D(n, 12));
    return o;
}

Outcome palindromes() {
    Outcome o;
    fold(o, palindromicity_check(8));
    return o;
}

Outcome hook_example() {
    Outcome o;
    const Partition lambda{4, 3, 1};
    std::vector<int> hooks, contents;
    for (const auto& c : hooks_and_contents(lambda)) {
        hooks.push_back(c.hook);
        contents.push_back(c.content);
    }
    fold(o, n_stat(lambda) == 5, "n(4,3,1) = " + std::to_string(n_stat(lambda)));
    fold(o, hooks == std::vector<int>{6, 4, 3, 1, 4, 2, 1, 1}, "hooks of (4,3,1)");
    fold(o, contents == std::vector<int>{0, 1, 2, 3, -1, 0, 1, -2}, "contents of (4,3,1)");
    return o;
}

Outcome characteristic_maps() {
    Outcome o;
    fold(o, characteristic_map_check(6));
    return o;
}

Outcome cauchy() {
    Outcome o;
    fold(o, verify_super_cauchy(4, 2, 2, 2));
    fold(o, verify_super_schur_specialization(5, 10));
    return o;
}

Outcome isomorphisms() {
    Outcome o;
    for (int n = 2; n <= 6; ++n) fold(o, verify_presentation_images(PresentationTarget::phiB, WeylType::B, n));
    for (int n : {5, 7}) {
        fold(o, verify_presentation_images(PresentationTarget::phiD, WeylType::D, n));
        fold(o, verify_phiD_surjectivity_identities(n));
    }
    for (int n = 1; n <= 5; ++n) fold(o, verify_presentation_images(PresentationTarget::Omega, WeylType::A, n));
    for (int n = 2; n <= 5; ++n) fold(o, verify_presentation_images(PresentationTarget::Omega, WeylType::B, n));
    for (int n = 4; n <= 5; ++n) fold(o, verify_presentation_images(PresentationTarget::Omega, WeylType::D, n));
    return o;
}

Outcome counts() {
    Outcome o;
    fold(o, count_consistency_check(10, 15));
    for (int n = 2; n <= 10; ++n) {
        long long even = 0;
        for (const auto& c : split_classes(GroupKind::B, n)) even += c.parity == Parity::even;
        fold(o, even == static_cast<long long>(simple_modules(AlgebraKind::CB_minus, n).size()),
             "B split classes vs simples at n = " + std::to_string(n));
    }
    for (int n = 1; n <= 10; ++n)
        fold(o, split_classes(GroupKind::Gamma, n).size() == simple_modules(AlgebraKind::HC_B, n).size(),
             "Gamma split classes vs simples at n = " + std::to_string(n));
    for (int n = 4; n <= 10; n += 2)
        fold(o, static_cast<long long>(split_classes(GroupKind::D, n).size()) == alternating_class_count(n),
             "D split classes vs alternating classes at n = " + std::to_string(n));
    return o;
}

Outcome sum_rules() {
    Outcome o;
    for (int n = 2; n <= 7; ++n) fold(o, sum_rule_check(WeylType::B, n, false));
    for (int n = 4; n <= 7; ++n) fold(o, sum_rule_check(WeylType::D, n, false));
    return o;
}

Outcome basic_spin() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) fold(o, verify_basic_spin_correspondence(WeylType::A, n));
    for (int n = 2; n <= 4; ++n) fold(o, verify_basic_spin_correspondence(WeylType::B, n));
    fold(o, verify_basic_spin_correspondence(WeylType::D, 4));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"type B closed form vs oracle, n = 2..4, degree 12", oracle_b},
        {"type D closed form vs oracle, n = 4..5, degree 12", oracle_d},
        {"palindromic fake degrees, n <= 8", palindromes},
        {"hooks and contents of (4,3,1)", hook_example},
        {"characteristic maps, n <= 6", characteristic_maps},
        {"super Cauchy to degree 4 and hook-content specialization", cauchy},
        {"presentation images and zeta identities", isomorphisms},
        {"split class and simple module counts", counts},
        {"regular representation sum rules, n <= 7", sum_rules},
        {"basic spin correspondence, n <= 4", basic_spin},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
                  << secs << " s)";
        if (!o.passed) std::cout << "  " << o.detail;
        std::cout << "\n";
        failures += !o.passed;
    }
    return failures ? 1 : 0;
}
