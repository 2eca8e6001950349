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
#include <optional>
#include <string>
#include <vector>

#include "spinfake/partition.hpp"
#include "spinfake/report.hpp"
#include "spinfake/scalar.hpp"
#include "spinfake/symmetric.hpp"

namespace spinfake {

/// Character of the Specht module S^lambda at cycle type mu (Murnaghan-Nakayama).
/// The memo table is thread_local.
Integer chi_sn(const Partition& lambda, const Partition& mu);

/// Rows and columns both in partitions_of(n) order.
std::vector<std::vector<Integer>> sn_character_table(int n);

enum class GroupKind { B, D, Gamma };
enum class ClassFamily { B_even, B_odd, D, Gamma };
enum class Parity { even, odd };

std::string to_string(GroupKind g);
std::string to_string(ClassFamily f);
std::string to_string(Parity p);

/// A split conjugacy class named by its positive and negative cycle types.
struct SplitClassLabel {
    Partition rho_plus;
    Partition rho_minus;
    ClassFamily family = ClassFamily::B_even;
    Parity parity = Parity::even;

    int size() const { return rho_plus.size() + rho_minus.size(); }
    /// rho_plus union rho_minus
    Partition merged() const { return partition_union(rho_plus, rho_minus); }
    /// "3,1|2" with "-" for an empty side.
    std::string to_string() const;

    bool operator==(const SplitClassLabel&) const = default;
};

/// Minimal ranks accepted for type B and type D computations.
inline constexpr int kMinRankB = 2;
inline constexpr int kMinRankD = 4;

/// Throws std::invalid_argument below the rank guard for the group.
void require_rank(GroupKind g, int n);

std::vector<SplitClassLabel> split_classes(GroupKind group, int n);

/// Spin character of B^lambda at an even split class of B_n.
AlgebraicScalar spin_char_B(const Partition& lambda, const SplitClassLabel& cls);
/// Character of K^lambda at the canonical element of a Gamma split class.
Integer hc_char_B(const Partition& lambda, const SplitClassLabel& cls);

enum class AlgebraKind { CB_minus, CD_minus, HC_B, HC_D };
enum class ModuleType { M, Q };

std::string to_string(AlgebraKind a);
std::string to_string(ModuleType t);

struct SimpleModuleLabel {
    AlgebraKind algebra = AlgebraKind::CB_minus;
    Partition lambda;
    /// Conjugate partner when the module is indexed by a pair {lambda, lambda'}.
    std::optional<Partition> partner;
    /// +1 / -1 for the two labels attached to lambda = lambda' (type D, n even), else 0.
    int sign = 0;
    ModuleType type = ModuleType::M;
    Integer dimension;

    std::string to_string() const;
};

/// dim U = 2^ceil(n/2) for the simple Cl_n-module.
Integer clifford_module_dimension(int n);

std::vector<SimpleModuleLabel> simple_modules(AlgebraKind algebra, int n);

/// chi^lambda vanishes on all even-length classes iff lambda = lambda'; n odd.
VerificationReport lambda_selfconjugate_vanishing_check(int n);

/// Class functions on even split classes, keyed by the merged partition.
using ClassFunction = std::map<Partition, AlgebraicScalar>;

ClassFunction spin_character_B(const Partition& lambda);
ClassFunction hc_character(const Partition& lambda);

PowerSumExpansion characteristic_map_minus(const ClassFunction& phi, int n);
PowerSumExpansion characteristic_map_gamma(const ClassFunction& phi, int n);

/// sum_rho z_rho^{-1} 2^{-l(rho)} phi(rho) psi(rho), the pairing for CB_n^- characters.
AlgebraicScalar spin_inner_product(const ClassFunction& phi, const ClassFunction& psi);
/// sum_rho z_rho^{-1} 4^{-l(rho)} phi(rho) psi(rho); centralizers in Gamma_n have order z 4^l.
AlgebraicScalar gamma_inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// (phi . psi)(gamma) = sum_{alpha u beta = gamma} z_gamma/(z_alpha z_beta) phi(alpha) psi(beta)
ClassFunction induction_product(const ClassFunction& phi, int m, const ClassFunction& psi, int n);
VerificationReport induction_product_check(int m, int n);

/// Checks characteristic maps send the irreducible characters to Schur functions, n <= n_max.
VerificationReport characteristic_map_check(int n_max);
/// Orthogonality of the spin character tables of CB_n^- and of the Gamma family.
VerificationReport orthogonality_check(int n);

/// Number of conjugacy classes of the alternating group A_n (n >= 2).
long long alternating_class_count(int n);

/// Split-class counts versus simple-module counts for B, D and Gamma up to n_max,
/// the alternating-group comparison for even n, and the odd-n counting identities.
VerificationReport count_consistency_check(int n_max, int odd_identity_max);

}  // namespace spinfake
