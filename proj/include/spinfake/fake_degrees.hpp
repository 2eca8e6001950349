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

#include "spinfake/characters.hpp"
#include "spinfake/partition.hpp"
#include "spinfake/report.hpp"
#include "spinfake/series.hpp"

namespace spinfake {

enum class WeylType { A, B, D };

std::string to_string(WeylType w);

/// Throws std::invalid_argument below rank 1 (A), 2 (B) or 4 (D).
void require_weyl_rank(WeylType w, int n);

/// Degrees of the basic invariants.
std::vector<int> degrees(WeylType w, int n);
long long reflection_count(WeylType w, int n);
/// prod (1 - t^{d_i})
IntPolynomial degree_product(WeylType w, int n);
/// 1 / prod (1 - t^{d_i}) to order N.
TruncatedSeries invariant_hilbert_series(WeylType w, int n, int N);

/// Graded multiplicity of B^lambda in the basic spin module tensor S*V.
FactoredRational H_minus_B(const Partition& lambda);
/// Same product without the factor 2 for odd |lambda|: multiplicity of K^lambda.
FactoredRational H_B_heckeclifford(const Partition& lambda);
/// Spin fake degrees of type B; |lambda| >= 2.
IntPolynomial P_minus_B(const Partition& lambda);
IntPolynomial P_B_heckeclifford(const Partition& lambda);

/// t^{2n(lambda)} prod (t^{2c} + t) / (1 - t^{2h}), equal to the lambda' product.
FactoredRational conjugate_content_product(const Partition& lambda);

/// Type D multiplicity of the module indexed by lambda (and lambda'); |lambda| >= 4.
/// For |lambda| even and lambda = lambda' this is the common value of both labels.
FactoredSum H_minus_D(const Partition& lambda);
FactoredSum H_D_heckeclifford(const Partition& lambda);
IntPolynomial P_minus_D(const Partition& lambda);
IntPolynomial P_D_heckeclifford(const Partition& lambda);

bool check_palindromic(const IntPolynomial& p, int shift);

/// Expands H * prod(1 - t^{d_i}) to order reflection_count + 1 and compares with P,
/// for both the minus and the Hecke-Clifford versions.
bool P_equals_H_times_degrees(const Partition& lambda, WeylType w);

struct FakeDegreeRow {
    SimpleModuleLabel module;
    /// 2 when one row stands for the two labels attached to lambda = lambda'.
    int duplicity = 1;
    IntPolynomial polynomial;
    int shift = 0;
    bool palindromic = false;
    Integer value_at_one;
};

/// One row per module label (the two labels of a self-conjugate lambda, type D with
/// n even, share a row), in canonical partition order.
std::vector<FakeDegreeRow> fake_degree_table(WeylType w, int n, bool hecke_clifford);

/// Sum of dim * P(1) over simple modules (type Q weighted 1/2) equals the dimension of
/// the spin coinvariant algebra.
VerificationReport sum_rule_check(WeylType w, int n, bool hecke_clifford);
/// Palindromicity of all type B and D fake degrees with n <= n_max.
VerificationReport palindromicity_check(int n_max);
/// t^{2n(lambda')} prod_{lambda'}(1+t^{2c+1}) = t^{2n(lambda)} prod_lambda (t^{2c}+t).
VerificationReport conjugation_identity_check(int n_max);
/// The Hecke-Clifford product equals hs_lambda at x_i = t^{2(i-1)}, y_j = t^{2j-1}.
VerificationReport heckeclifford_super_schur_check(int n_max, int order);
/// Formula-level relations: minus vs Hecke-Clifford scalars, D vs B sums, P = H * prod.
VerificationReport formula_relations_check(int n_max);

}  // namespace spinfake
