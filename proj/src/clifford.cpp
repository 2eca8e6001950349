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

#include "spinfake/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinfake {

int clifford_basis_sign(SubsetMask a, SubsetMask b) {
    int swaps = 0;
    for (SubsetMask rest = b; rest; rest &= rest - 1) {
        int bit = __builtin_ctz(rest);
        SubsetMask above = bit >= 31 ? 0u : (a >> (bit + 1));
        swaps += __builtin_popcount(above);
    }
    return swaps % 2 ? -1 : 1;
}

CliffordElement::CliffordElement(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxCliffordRank) throw std::invalid_argument("CliffordElement: rank out of range");
}

CliffordElement CliffordElement::scalar(int rank, const AlgebraicScalar& c) { return basis(rank, 0, c); }

CliffordElement CliffordElement::generator(int rank, int i) {
    if (i < 1 || i > rank) throw std::out_of_range("Clifford generator index out of range");
    return basis(rank, SubsetMask(1) << (i - 1));
}

CliffordElement CliffordElement::basis(int rank, SubsetMask mask, const AlgebraicScalar& c) {
    CliffordElement x(rank);
    x.add_term(mask, c);
    return x;
}

AlgebraicScalar CliffordElement::coefficient(SubsetMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? AlgebraicScalar() : it->second;
}

int CliffordElement::parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
        int q = mask_parity(m);
        if (p == -2) p = q;
        else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
}

void CliffordElement::add_term(SubsetMask mask, const AlgebraicScalar& c) {
    if (rank_ < 32 && (mask >> rank_)) throw std::out_of_range("Clifford mask exceeds rank");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
    if (o.rank_ != rank_) throw std::invalid_argument("Clifford rank mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
    if (o.rank_ != rank_) throw std::invalid_argument("Clifford rank mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CliffordElement& CliffordElement::operator*=(const AlgebraicScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("Clifford rank mismatch");
    CliffordElement out(a.rank_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            AlgebraicScalar c = ca * cb;
            if (clifford_basis_sign(ma, mb) < 0) c = -c;
            out.add_term(ma ^ mb, c);
        }
    return out;
}

static std::string mask_string(SubsetMask m) {
    if (!m) return "1";
    std::string s;
    for (int i = 0; i < 32; ++i)
        if (m & (SubsetMask(1) << i)) s += "c" + std::to_string(i + 1);
    return s;
}

std::string CliffordElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + mask_string(m);
    }
    return out;
}

SignedPermutation::SignedPermutation(std::vector<int> image, std::vector<int> signs)
    : image_(std::move(image)), signs_(std::move(signs)) {
    const int n = static_cast<int>(image_.size());
    if (static_cast<int>(signs_.size()) != n) throw std::invalid_argument("SignedPermutation: size mismatch");
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (image_[i] < 0 || image_[i] >= n || seen[image_[i]])
            throw std::invalid_argument("SignedPermutation: not a permutation");
        seen[image_[i]] = true;
        if (signs_[i] != 1 && signs_[i] != -1) throw std::invalid_argument("SignedPermutation: bad sign");
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return {img, std::vector<int>(n, 1)};
}

SignedPermutation SignedPermutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition index out of range");
    auto g = identity(n);
    std::swap(g.image_[i - 1], g.image_[i]);
    return g;
}

SignedPermutation SignedPermutation::sign_change(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("sign change index out of range");
    auto g = identity(n);
    g.signs_[i - 1] = -1;
    return g;
}

SignedPermutation SignedPermutation::plus_reflection(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::out_of_range("plus_reflection indices");
    auto g = identity(n);
    g.image_[i - 1] = j - 1;
    g.image_[j - 1] = i - 1;
    g.signs_[i - 1] = -1;
    g.signs_[j - 1] = -1;
    return g;
}

SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
    const int n = g.degree();
    if (h.degree() != n) throw std::invalid_argument("SignedPermutation: degree mismatch");
    std::vector<int> img(n), sg(n);
    for (int i = 0; i < n; ++i) {
        img[i] = g.image_[h.image_[i]];
        sg[i] = h.signs_[i] * g.signs_[h.image_[i]];
    }
    SignedPermutation out;
    out.image_ = std::move(img);
    out.signs_ = std::move(sg);
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = degree();
    SignedPermutation out = identity(n);
    for (int i = 0; i < n; ++i) {
        out.image_[image_[i]] = i;
        out.signs_[image_[i]] = signs_[i];
    }
    return out;
}

int SignedPermutation::negative_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

int SignedPermutation::permutation_parity() const {
    auto [pos, neg] = signed_cycle_type();
    int transpositions = 0;
    for (int p : pos.parts()) transpositions += p - 1;
    for (int p : neg.parts()) transpositions += p - 1;
    return transpositions % 2;
}

std::pair<Partition, Partition> SignedPermutation::signed_cycle_type() const {
    const int n = degree();
    std::vector<bool> seen(n, false);
    std::vector<int> pos, neg;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1;
        for (int j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            sign *= signs_[j];
            ++len;
        }
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.begin(), pos.end(), std::greater<>());
    std::sort(neg.begin(), neg.end(), std::greater<>());
    return {Partition(pos), Partition(neg)};
}

Partition SignedPermutation::cycle_type() const {
    auto [pos, neg] = signed_cycle_type();
    return partition_union(pos, neg);
}

std::pair<int, SubsetMask> SignedPermutation::act_on_basis(SubsetMask mask) const {
    int sign = 1;
    int targets[32];
    int count = 0;
    SubsetMask out = 0;
    for (int i = 0; i < degree(); ++i) {
        if (!(mask & (SubsetMask(1) << i))) continue;
        sign *= signs_[i];
        targets[count++] = image_[i];
        out |= SubsetMask(1) << image_[i];
    }
    if (mask >> degree()) throw std::out_of_range("act_on_basis: mask exceeds degree");
    int inversions = 0;
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b)
            if (targets[a] > targets[b]) ++inversions;
    if (inversions % 2) sign = -sign;
    return {sign, out};
}

CliffordElement SignedPermutation::act(const CliffordElement& x) const {
    if (x.rank() != degree()) throw std::invalid_argument("SignedPermutation::act: rank mismatch");
    CliffordElement out(x.rank());
    for (const auto& [m, c] : x.terms()) {
        auto [s, m2] = act_on_basis(m);
        out.add_term(m2, s > 0 ? c : -c);
    }
    return out;
}

int SignedPermutation::act_on_monomial(const std::vector<int>& exponent, std::vector<int>& out) const {
    const int n = degree();
    out.assign(n, 0);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        out[image_[i]] = exponent[i];
        if (signs_[i] < 0 && exponent[i] % 2) sign = -sign;
    }
    return sign;
}

Integer SignedPermutation::clifford_trace() const {
    long t = 0;
    const SubsetMask full = degree() == 32 ? ~0u : ((SubsetMask(1) << degree()) - 1);
    for (SubsetMask m = 0;; ++m) {
        auto [s, m2] = act_on_basis(m);
        if (m2 == m) t += s;
        if (m == full) break;
    }
    return t;
}

std::string SignedPermutation::to_string() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ",";
        s += (signs_[i] < 0 ? "-" : "") + std::to_string(image_[i] + 1);
    }
    return s + "]";
}

SuperTensorElement::SuperTensorElement(int rank, bool odd_group) : rank_(rank), odd_group_(odd_group) {
    if (rank < 0 || rank > kMaxCliffordRank) throw std::invalid_argument("SuperTensorElement: rank out of range");
}

SuperTensorElement SuperTensorElement::pure(const CliffordElement& a, const SignedPermutation& g, bool odd_group) {
    if (g.degree() != a.rank()) throw std::invalid_argument("SuperTensorElement: degree mismatch");
    if (g.negative_count()) throw std::invalid_argument("SuperTensorElement: group part must be a permutation");
    SuperTensorElement x(a.rank(), odd_group);
    for (const auto& [m, c] : a.terms()) x.add_term(m, g, c);
    return x;
}

SuperTensorElement SuperTensorElement::one(int rank, bool odd_group) {
    return pure(CliffordElement::scalar(rank, 1), SignedPermutation::identity(rank), odd_group);
}

int SuperTensorElement::parity() const {
    int p = -2;
    for (const auto& [k, c] : terms_) {
        int q = (mask_parity(k.first) + group_parity(k.second)) % 2;
        if (p == -2) p = q;
        else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
}

void SuperTensorElement::add_term(SubsetMask mask, const SignedPermutation& g, const AlgebraicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{mask, g}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperTensorElement& SuperTensorElement::operator+=(const SuperTensorElement& o) {
    if (o.rank_ != rank_ || o.odd_group_ != odd_group_) throw std::invalid_argument("SuperTensor mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

SuperTensorElement& SuperTensorElement::operator-=(const SuperTensorElement& o) {
    if (o.rank_ != rank_ || o.odd_group_ != odd_group_) throw std::invalid_argument("SuperTensor mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

SuperTensorElement& SuperTensorElement::operator*=(const AlgebraicScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SuperTensorElement operator*(const SuperTensorElement& x, const SuperTensorElement& y) {
    if (x.rank_ != y.rank_ || x.odd_group_ != y.odd_group_) throw std::invalid_argument("SuperTensor mismatch");
    SuperTensorElement out(x.rank_, x.odd_group_);
    for (const auto& [kx, cx] : x.terms_) {
        const int gp = x.group_parity(kx.second);
        for (const auto& [ky, cy] : y.terms_) {
            int sign = clifford_basis_sign(kx.first, ky.first);
            if (gp && mask_parity(ky.first)) sign = -sign;
            AlgebraicScalar c = cx * cy;
            out.add_term(kx.first ^ ky.first, kx.second * ky.second, sign > 0 ? c : -c);
        }
    }
    return out;
}

std::string SuperTensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + mask_string(k.first) + "(x)" + k.second.to_string();
    }
    return out;
}

SmashProductElement::SmashProductElement(int rank) : rank_(rank) {}

SmashProductElement SmashProductElement::pure(const CliffordElement& a, const SignedPermutation& w) {
    if (w.degree() != a.rank()) throw std::invalid_argument("SmashProductElement: degree mismatch");
    SmashProductElement x(a.rank());
    for (const auto& [m, c] : a.terms()) x.add_term(m, w, c);
    return x;
}

SmashProductElement SmashProductElement::one(int rank) {
    return pure(CliffordElement::scalar(rank, 1), SignedPermutation::identity(rank));
}

void SmashProductElement::add_term(SubsetMask mask, const SignedPermutation& w, const AlgebraicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{mask, w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SmashProductElement& SmashProductElement::operator+=(const SmashProductElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

SmashProductElement& SmashProductElement::operator*=(const AlgebraicScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SmashProductElement operator*(const SmashProductElement& x, const SmashProductElement& y) {
    SmashProductElement out(x.rank_);
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            auto [s1, moved] = kx.second.act_on_basis(ky.first);
            int sign = s1 * clifford_basis_sign(kx.first, moved);
            AlgebraicScalar c = cx * cy;
            out.add_term(kx.first ^ moved, kx.second * ky.second, sign > 0 ? c : -c);
        }
    }
    return out;
}

std::string SmashProductElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + mask_string(k.first) + "*" + k.second.to_string();
    }
    return out;
}

}  // namespace spinfake
