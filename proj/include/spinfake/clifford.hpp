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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinfake/partition.hpp"
#include "spinfake/scalar.hpp"

namespace spinfake {

/// Bit i set <=> generator c_{i+1} present; products are kept in increasing index order.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxCliffordRank = 24;

/// Sign s with c_A c_B = s c_{A xor B} under c_i^2 = 1 and anticommutation.
int clifford_basis_sign(SubsetMask a, SubsetMask b);

inline int mask_parity(SubsetMask m) { return __builtin_popcount(m) & 1; }

/// Element of the Clifford algebra Cl_rank over Q(sqrt 2).
class CliffordElement {
public:
    explicit CliffordElement(int rank = 0);

    static CliffordElement scalar(int rank, const AlgebraicScalar& c);
    /// c_i, 1-based.
    static CliffordElement generator(int rank, int i);
    static CliffordElement basis(int rank, SubsetMask mask, const AlgebraicScalar& c = AlgebraicScalar(1));

    int rank() const noexcept { return rank_; }
    const std::map<SubsetMask, AlgebraicScalar>& terms() const noexcept { return terms_; }
    AlgebraicScalar coefficient(SubsetMask mask) const;
    /// Coefficient of the identity.
    AlgebraicScalar scalar_part() const { return coefficient(0); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// 0 or 1 for homogeneous elements, -1 for mixed parity (zero counts as even).
    int parity() const;

    void add_term(SubsetMask mask, const AlgebraicScalar& c);

    CliffordElement& operator+=(const CliffordElement& o);
    CliffordElement& operator-=(const CliffordElement& o);
    CliffordElement& operator*=(const AlgebraicScalar& c);
    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator*(CliffordElement a, const AlgebraicScalar& c) { return a *= c; }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
    CliffordElement operator-() const { return *this * AlgebraicScalar(-1); }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int rank_;
    std::map<SubsetMask, AlgebraicScalar> terms_;
};

/// e_i -> sign_i e_{image_i}; composition (g h)(i) = g(h(i)).
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> image, std::vector<int> signs);

    static SignedPermutation identity(int n);
    /// s_i swapping i and i+1 (1-based).
    static SignedPermutation transposition(int n, int i);
    /// tau_i negating coordinate i (1-based).
    static SignedPermutation sign_change(int n, int i);
    /// Reflection in e_i + e_j: e_i -> -e_j, e_j -> -e_i (1-based).
    static SignedPermutation plus_reflection(int n, int i, int j);

    int degree() const noexcept { return static_cast<int>(image_.size()); }
    int image(int i) const { return image_.at(i); }  // 0-based
    int sign(int i) const { return signs_.at(i); }

    friend SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h);
    SignedPermutation inverse() const;

    int negative_count() const;
    /// Parity of the underlying permutation.
    int permutation_parity() const;
    /// Cycle type of the underlying permutation.
    Partition cycle_type() const;
    /// (positive cycle lengths, negative cycle lengths).
    std::pair<Partition, Partition> signed_cycle_type() const;

    /// g(c_I) = sign * c_{g(I)}.
    std::pair<int, SubsetMask> act_on_basis(SubsetMask mask) const;
    CliffordElement act(const CliffordElement& x) const;
    /// Acts on polynomial exponents: x_i -> sign_i x_{image_i}; returns sign and new exponent.
    int act_on_monomial(const std::vector<int>& exponent, std::vector<int>& out) const;

    /// Determinant of 1 + g on the permutation representation (trace on the Clifford algebra).
    Integer clifford_trace() const;

    bool operator==(const SignedPermutation&) const = default;
    auto operator<=>(const SignedPermutation& o) const {
        if (auto c = image_ <=> o.image_; c != 0) return c;
        return signs_ <=> o.signs_;
    }

    std::string to_string() const;

private:
    std::vector<int> image_;
    std::vector<int> signs_;
};

/// Cl_n (x) C[S_n] with Koszul signs; group elements may be even or odd.
class SuperTensorElement {
public:
    using Key = std::pair<SubsetMask, SignedPermutation>;

    /// odd_group: each s_i has parity 1 (group parity = permutation parity).
    SuperTensorElement(int rank, bool odd_group);

    static SuperTensorElement pure(const CliffordElement& a, const SignedPermutation& g, bool odd_group);
    static SuperTensorElement one(int rank, bool odd_group);

    int rank() const noexcept { return rank_; }
    bool odd_group() const noexcept { return odd_group_; }
    const std::map<Key, AlgebraicScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int group_parity(const SignedPermutation& g) const { return odd_group_ ? g.permutation_parity() : 0; }
    /// 0/1 for homogeneous, -1 for mixed.
    int parity() const;

    void add_term(SubsetMask mask, const SignedPermutation& g, const AlgebraicScalar& c);

    SuperTensorElement& operator+=(const SuperTensorElement& o);
    SuperTensorElement& operator-=(const SuperTensorElement& o);
    SuperTensorElement& operator*=(const AlgebraicScalar& c);
    friend SuperTensorElement operator+(SuperTensorElement a, const SuperTensorElement& b) { return a += b; }
    friend SuperTensorElement operator-(SuperTensorElement a, const SuperTensorElement& b) { return a -= b; }
    friend SuperTensorElement operator*(SuperTensorElement a, const AlgebraicScalar& c) { return a *= c; }
    /// (a g)(a' g') = (-1)^{|g||a'|} a a' g g'
    friend SuperTensorElement operator*(const SuperTensorElement& x, const SuperTensorElement& y);

    friend bool operator==(const SuperTensorElement& a, const SuperTensorElement& b) {
        return a.rank_ == b.rank_ && a.odd_group_ == b.odd_group_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int rank_;
    bool odd_group_;
    std::map<Key, AlgebraicScalar> terms_;
};

/// Cl_m smash W for W a group of signed permutations: (a w)(a' w') = a w(a') w w'.
class SmashProductElement {
public:
    using Key = std::pair<SubsetMask, SignedPermutation>;

    explicit SmashProductElement(int rank = 0);
    static SmashProductElement pure(const CliffordElement& a, const SignedPermutation& w);
    static SmashProductElement one(int rank);

    const std::map<Key, AlgebraicScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(SubsetMask mask, const SignedPermutation& w, const AlgebraicScalar& c);

    SmashProductElement& operator+=(const SmashProductElement& o);
    SmashProductElement& operator*=(const AlgebraicScalar& c);
    friend SmashProductElement operator*(SmashProductElement a, const AlgebraicScalar& c) { return a *= c; }
    friend SmashProductElement operator*(const SmashProductElement& x, const SmashProductElement& y);

    friend bool operator==(const SmashProductElement& a, const SmashProductElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int rank_;
    std::map<Key, AlgebraicScalar> terms_;
};

}  // namespace spinfake
