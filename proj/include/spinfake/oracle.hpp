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
#include <utility>
#include <vector>

#include "spinfake/characters.hpp"
#include "spinfake/clifford.hpp"
#include "spinfake/fake_degrees.hpp"
#include "spinfake/report.hpp"
#include "spinfake/series.hpp"

namespace spinfake {

/// Coxeter matrix, 0-based; diagonal entries 1.
std::vector<std::vector<int>> coxeter_matrix(WeylType w, int n);

/// Number of Clifford generators carrying the reflection representation (n+1 for type A).
int clifford_rank(WeylType w, int n);

/// beta_1..beta_n inside Cl_m.
std::vector<CliffordElement> clifford_generators(WeylType w, int n);

/// Simple reflections as signed permutations of degree clifford_rank(w, n).
std::vector<SignedPermutation> simple_reflections(WeylType w, int n);

enum class PresentationTarget { phiB, phiD, Psi, Omega };
std::string to_string(PresentationTarget t);

/// Checks (x_i x_j)^m_ij against the expected scalar for every i <= j.
VerificationReport verify_presentation_images(PresentationTarget target, WeylType w, int n);

/// Product identities behind surjectivity, the zeta lemma and the iota comparison; n odd, n >= 5.
VerificationReport verify_phiD_surjectivity_identities(int n);

/// zeta = eps c_1 ... c_n with eps^2 = zeta_phase_square(n), so that zeta^2 = 1.
/// eps is imaginary when n = 3 mod 4; only the real factor c_1 ... c_n is returned and
/// identities with 2d factors of zeta are compared after multiplying by eps^(2d).
CliffordElement zeta_element(int n);
int zeta_phase_square(int n);

/// Basis element -> signed basis element.
struct SignedPermMatrix {
    std::vector<int> target;
    std::vector<int> sign;

    int dimension() const { return static_cast<int>(target.size()); }
    /// (a * b) applied as a after b.
    friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
    bool is_identity() const;
    long trace() const;
};

inline constexpr long kDefaultDimensionCap = 100000;

/// B_n acting on Cl_n tensor S^k V.
class GradedRepresentation {
public:
    /// Throws std::length_error naming the required dimension when it exceeds cap.
    GradedRepresentation(int n, int k, long cap = kDefaultDimensionCap);

    static Integer required_dimension(int n, int k);

    int rank() const noexcept { return n_; }
    int degree() const noexcept { return k_; }
    int dimension() const noexcept { return static_cast<int>(monomials_.size()) << n_; }
    const std::vector<std::vector<int>>& monomials() const noexcept { return monomials_; }

    SignedPermMatrix action(const SignedPermutation& g) const;
    /// Generators s_1..s_{n-1}, tau_n; word letter i in 1..n.
    const std::vector<SignedPermMatrix>& generators() const noexcept { return generators_; }
    SignedPermMatrix word_matrix(const std::vector<int>& word) const;

private:
    int n_;
    int k_;
    std::vector<std::vector<int>> monomials_;
    std::vector<SignedPermMatrix> generators_;
};

/// Letters 1..n-1 are s_i, letter n is tau_n.
SignedPermutation element_of_word(int n, const std::vector<int>& word);

struct CanonicalRepresentative {
    SignedPermutation element;
    std::vector<int> word;
};

CanonicalRepresentative canonical_representative(const Partition& rho_plus, const Partition& rho_minus);
CanonicalRepresentative canonical_representative(const SplitClassLabel& cls);

/// Matrix trace of the canonical representative on Cl_n tensor S^k V.
Integer graded_trace(const SplitClassLabel& cls, int k, long cap = kDefaultDimensionCap);
/// Product of per-cycle factors, truncated at t^N.
TruncatedSeries closed_form_trace(const Partition& rho_plus, const Partition& rho_minus, int N);

VerificationReport verify_graded_rep_relations(int n, int k, long cap = kDefaultDimensionCap);
VerificationReport verify_graded_traces(int n, int max_k, long cap = kDefaultDimensionCap);

/// Degree-k multiplicity of each K^lambda, in partitions_of(n) order.
std::vector<Rational> oracle_multiplicities_B(int n, int k, long cap = kDefaultDimensionCap);
TruncatedSeries oracle_H_B(const Partition& lambda, int maxdeg, long cap = kDefaultDimensionCap);

/// Group average over D_n of chi^lambda * Clifford trace * symmetric power trace, rescaled to the minus algebra.
TruncatedSeries oracle_H_D(const Partition& lambda, int maxdeg);
/// Same series assembled from oracle_H_B of lambda and its conjugate.
TruncatedSeries oracle_H_D_from_B(const Partition& lambda, int maxdeg, long cap = kDefaultDimensionCap);

VerificationReport verify_oracle_B(int n, int maxdeg, long cap = kDefaultDimensionCap);
VerificationReport verify_oracle_D(int n, int maxdeg, long cap = kDefaultDimensionCap);

VerificationReport verify_basic_spin_correspondence(WeylType w, int n);

/// Random triples in Cl_n tensor CS_n; seeded.
VerificationReport verify_super_tensor_associativity(int n, int trials, unsigned seed);

}  // namespace spinfake
