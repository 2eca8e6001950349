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

#include "spinfake/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spinfake {

namespace {

using PartsKey = std::pair<std::vector<int>, std::vector<int>>;

// Removes border strips of length k via the beta-set; calls f(shape, sign) for each.
template <class F>
void for_each_strip_removal(const std::vector<int>& parts, int k, F&& f) {
    const int L = static_cast<int>(parts.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = parts[i] + (L - 1 - i);
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> shape;
        for (int j = 0; j < L; ++j) {
            int part = nb[j] - (L - 1 - j);
            if (part > 0) shape.push_back(part);
        }
        f(shape, between % 2 ? -1 : 1);
    }
}

Integer mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    thread_local std::map<PartsKey, Integer> memo;
    PartsKey key{lambda, mu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<int> rest(mu.begin() + 1, mu.end());
    Integer total = 0;
    for_each_strip_removal(lambda, mu.front(), [&](const std::vector<int>& shape, int sign) {
        Integer v = mn_recursive(shape, rest);
        if (sign < 0) total -= v;
        else total += v;
    });
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer chi_sn(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("chi_sn: |lambda| = " + std::to_string(lambda.size()) +
                                    " differs from |mu| = " + std::to_string(mu.size()));
    return mn_recursive(lambda.parts(), mu.parts());
}

std::vector<std::vector<Integer>> sn_character_table(int n) {
    auto ps = partitions_of(n);
    std::vector<std::vector<Integer>> table(ps.size(), std::vector<Integer>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) table[i][j] = chi_sn(ps[i], ps[j]);
    return table;
}

std::string to_string(GroupKind g) {
    switch (g) {
        case GroupKind::B: return "B";
        case GroupKind::D: return "D";
        case GroupKind::Gamma: return "Gamma";
    }
    return "?";
}

std::string to_string(ClassFamily f) {
    switch (f) {
        case ClassFamily::B_even: return "B_even";
        case ClassFamily::B_odd: return "B_odd";
        case ClassFamily::D: return "D";
        case ClassFamily::Gamma: return "Gamma";
    }
    return "?";
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string SplitClassLabel::to_string() const {
    return rho_plus.to_string() + "|" + rho_minus.to_string();
}

void require_rank(GroupKind g, int n) {
    int lo = g == GroupKind::B ? kMinRankB : g == GroupKind::D ? kMinRankD : 1;
    if (n < lo)
        throw std::invalid_argument("rank " + std::to_string(n) + " below the minimum " +
                                    std::to_string(lo) + " for type " + spinfake::to_string(g));
    if (n > kMaxPartitionSize) throw std::invalid_argument("rank too large");
}

std::vector<SplitClassLabel> split_classes(GroupKind group, int n) {
    require_rank(group, n);
    std::vector<SplitClassLabel> even, odd;
    const bool n_odd = n % 2 == 1;
    for (int a = n; a >= 0; --a) {
        auto pluses = partitions_of(a);
        auto minuses = partitions_of(n - a);
        for (const auto& rp : pluses) {
            for (const auto& rm : minuses) {
                const bool op_ep = all_parts_odd(rp) && all_parts_even(rm);
                switch (group) {
                    case GroupKind::B:
                        if (op_ep) even.push_back({rp, rm, ClassFamily::B_even, Parity::even});
                        else if (n_odd && rp.empty())
                            odd.push_back({rp, rm, ClassFamily::B_odd, Parity::odd});
                        break;
                    case GroupKind::Gamma:
                        if (op_ep) even.push_back({rp, rm, ClassFamily::Gamma, Parity::even});
                        break;
                    case GroupKind::D: {
                        if (rm.length() % 2 != 0) break;
                        if (op_ep) even.push_back({rp, rm, ClassFamily::D, Parity::even});
                        else if (rp.empty() && n_odd)
                            odd.push_back({rp, rm, ClassFamily::D, Parity::odd});
                        else if (rp.empty() && is_strict_odd(rm))
                            even.push_back({rp, rm, ClassFamily::D, Parity::even});
                        break;
                    }
                }
            }
        }
    }
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

AlgebraicScalar spin_char_B(const Partition& lambda, const SplitClassLabel& cls) {
    if (cls.family != ClassFamily::B_even)
        throw std::invalid_argument("spin_char_B: class " + cls.to_string() +
                                    " is not an even split class of B_n");
    const int n = cls.size();
    if (lambda.size() != n) throw std::invalid_argument("spin_char_B: size mismatch");
    Partition rho = cls.merged();
    int ell = rho.length();
    int exponent = ell + (n % 2);  // 2^{l/2} or 2^{(l+1)/2}
    AlgebraicScalar v = AlgebraicScalar::pow2_half(exponent) * AlgebraicScalar(chi_sn(lambda, rho));
    if (((n - cls.rho_plus.length()) / 2) % 2) v = -v;
    return v;
}

Integer hc_char_B(const Partition& lambda, const SplitClassLabel& cls) {
    if (cls.family != ClassFamily::Gamma)
        throw std::invalid_argument("hc_char_B: class " + cls.to_string() +
                                    " is not a Gamma split class");
    Partition rho = cls.merged();
    if (lambda.size() != rho.size()) throw std::invalid_argument("hc_char_B: size mismatch");
    return (Integer(1) << rho.length()) * chi_sn(lambda, rho);
}

std::string to_string(AlgebraKind a) {
    switch (a) {
        case AlgebraKind::CB_minus: return "CB_minus";
        case AlgebraKind::CD_minus: return "CD_minus";
        case AlgebraKind::HC_B: return "HC_B";
        case AlgebraKind::HC_D: return "HC_D";
    }
    return "?";
}

std::string to_string(ModuleType t) { return t == ModuleType::M ? "M" : "Q"; }

std::string SimpleModuleLabel::to_string() const {
    std::string s = lambda.to_string();
    if (partner) s = "{" + lambda.to_string() + ";" + partner->to_string() + "}";
    if (sign > 0) s += "+";
    if (sign < 0) s += "-";
    return s;
}

Integer clifford_module_dimension(int n) {
    if (n < 0) throw std::invalid_argument("clifford_module_dimension: negative rank");
    return Integer(1) << ((n + 1) / 2);
}

std::vector<SimpleModuleLabel> simple_modules(AlgebraKind algebra, int n) {
    switch (algebra) {
        case AlgebraKind::CB_minus: require_rank(GroupKind::B, n); break;
        case AlgebraKind::HC_B: require_rank(GroupKind::Gamma, n); break;
        default: require_rank(GroupKind::D, n); break;
    }
    std::vector<SimpleModuleLabel> out;
    const bool n_odd = n % 2 == 1;
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
        Integer f = standard_tableaux_count(lambda);
        Partition conj = conjugate(lambda);
        const bool sym = conj == lambda;
        switch (algebra) {
            case AlgebraKind::CB_minus:
                out.push_back({algebra, lambda, std::nullopt, 0, n_odd ? ModuleType::Q : ModuleType::M,
                               clifford_module_dimension(n) * f});
                break;
            case AlgebraKind::HC_B:
                out.push_back({algebra, lambda, std::nullopt, 0, ModuleType::M, (Integer(1) << n) * f});
                break;
            case AlgebraKind::CD_minus:
            case AlgebraKind::HC_D: {
                if (!sym && conj > lambda) break;  // pair listed at its larger member
                const bool hc = algebra == AlgebraKind::HC_D;
                if (n_odd) {
                    Integer base = Integer(1) << ((n - 1) / 2);
                    if (hc) {
                        out.push_back({algebra, lambda, sym ? std::nullopt : std::optional(conj), 0,
                                       sym ? ModuleType::Q : ModuleType::M, (Integer(1) << n) * f});
                    } else if (sym) {
                        out.push_back({algebra, lambda, std::nullopt, 0, ModuleType::M, base * f});
                    } else {
                        out.push_back({algebra, lambda, conj, 0, ModuleType::Q, base * 2 * f});
                    }
                } else {
                    Integer full = hc ? Integer(1) << n : Integer(1) << (n / 2);
                    if (sym) {
                        out.push_back({algebra, lambda, std::nullopt, +1, ModuleType::M, full / 2 * f});
                        out.push_back({algebra, lambda, std::nullopt, -1, ModuleType::M, full / 2 * f});
                    } else {
                        out.push_back({algebra, lambda, conj, 0, ModuleType::M, full * f});
                    }
                }
                break;
            }
        }
    }
    return out;
}

VerificationReport lambda_selfconjugate_vanishing_check(int n) {
    if (n % 2 == 0) throw std::invalid_argument("lambda_selfconjugate_vanishing_check: n must be odd");
    VerificationReport r("selfconjugate_vanishing", {{"n", n}});
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
        bool vanishes = true;
        for (const auto& mu : parts)
            if (mu.length() % 2 == 0 && sgn(chi_sn(lambda, mu)) != 0) vanishes = false;
        r.expect(vanishes == is_self_conjugate(lambda),
                 "lambda=" + lambda.to_string() + " breaks the biconditional");
    }
    return r;
}

ClassFunction spin_character_B(const Partition& lambda) {
    ClassFunction phi;
    for (const auto& c : split_classes(GroupKind::B, lambda.size()))
        if (c.family == ClassFamily::B_even) phi[c.merged()] = spin_char_B(lambda, c);
    return phi;
}

ClassFunction hc_character(const Partition& lambda) {
    ClassFunction phi;
    for (const auto& c : split_classes(GroupKind::Gamma, lambda.size()))
        phi[c.merged()] = AlgebraicScalar(hc_char_B(lambda, c));
    return phi;
}

PowerSumExpansion characteristic_map_minus(const ClassFunction& phi, int n) {
    PowerSumExpansion out;
    for (const auto& [lambda, value] : phi) {
        if (lambda.size() != n) throw std::invalid_argument("characteristic_map_minus: class size mismatch");
        int sign_exp = (n - odd_part(lambda).length()) / 2;
        AlgebraicScalar c = value * AlgebraicScalar::pow2_half(-lambda.length()) /
                            AlgebraicScalar(Integer(z_order(lambda)));
        if (sign_exp % 2) c = -c;
        out.add_term(lambda, c);
    }
    return out;
}

PowerSumExpansion characteristic_map_gamma(const ClassFunction& phi, int n) {
    PowerSumExpansion out;
    for (const auto& [mu, value] : phi) {
        if (mu.size() != n) throw std::invalid_argument("characteristic_map_gamma: class size mismatch");
        Rational w(1, 1);
        w /= Rational(z_order(mu) << mu.length());
        out.add_term(mu, value * AlgebraicScalar(w));
    }
    return out;
}

AlgebraicScalar spin_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    AlgebraicScalar total;
    for (const auto& [rho, a] : phi) {
        auto it = psi.find(rho);
        if (it == psi.end()) continue;
        Rational w(1);
        w /= Rational(z_order(rho) << rho.length());
        total += a * it->second * AlgebraicScalar(w);
    }
    return total;
}

AlgebraicScalar gamma_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    AlgebraicScalar total;
    for (const auto& [rho, a] : phi) {
        auto it = psi.find(rho);
        if (it == psi.end()) continue;
        total += a * it->second * AlgebraicScalar(ratio(1, z_order(rho) << (2 * rho.length())));
    }
    return total;
}

ClassFunction induction_product(const ClassFunction& phi, int m, const ClassFunction& psi, int n) {
    ClassFunction out;
    for (const auto& gamma : partitions_of(m + n)) {
        AlgebraicScalar total;
        for (const auto& [alpha, a] : phi) {
            if (alpha.size() != m) throw std::invalid_argument("induction_product: size mismatch");
            // beta = gamma minus alpha as multisets
            std::vector<int> rest = gamma.parts();
            bool ok = true;
            for (int p : alpha.parts()) {
                auto it = std::find(rest.begin(), rest.end(), p);
                if (it == rest.end()) { ok = false; break; }
                rest.erase(it);
            }
            if (!ok) continue;
            Partition beta(rest);
            auto jt = psi.find(beta);
            if (jt == psi.end()) continue;
            Rational w = ratio(z_order(gamma), z_order(alpha) * z_order(beta));
            total += a * jt->second * AlgebraicScalar(w);
        }
        if (!total.is_zero()) out[gamma] = total;
    }
    return out;
}

VerificationReport induction_product_check(int m, int n) {
    VerificationReport r("induction_product", {{"m", m}, {"n", n}});
    for (const auto& lambda : partitions_of(m)) {
        for (const auto& nu : partitions_of(n)) {
            ClassFunction prod = induction_product(hc_character(lambda), m, hc_character(nu), n);
            PowerSumExpansion lhs = characteristic_map_gamma(prod, m + n);
            PowerSumExpansion rhs = schur_in_powersums(lambda) * schur_in_powersums(nu);
            r.expect(lhs == rhs, "ch(phi^" + lambda.to_string() + " . phi^" + nu.to_string() +
                                     ") = " + lhs.to_string() + " but s*s = " + rhs.to_string());
        }
    }
    return r;
}

VerificationReport characteristic_map_check(int n_max) {
    VerificationReport r("characteristic_maps", {{"n_max", n_max}});
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            PowerSumExpansion s = schur_in_powersums(lambda);
            PowerSumExpansion g = characteristic_map_gamma(hc_character(lambda), n);
            r.expect(g == s, "ch(K^" + lambda.to_string() + ") = " + g.to_string());
            if (n < kMinRankB) continue;
            PowerSumExpansion b = characteristic_map_minus(spin_character_B(lambda), n);
            PowerSumExpansion expect = n % 2 ? s * AlgebraicScalar::sqrt2() : s;
            r.expect(b == expect, "ch-(B^" + lambda.to_string() + ") = " + b.to_string());
        }
    }
    return r;
}

VerificationReport orthogonality_check(int n) {
    VerificationReport r("orthogonality", {{"n", n}});
    const auto parts = partitions_of(n);
    std::vector<ClassFunction> gam, bm;
    for (const auto& l : parts) {
        gam.push_back(hc_character(l));
        if (n >= kMinRankB) bm.push_back(spin_character_B(l));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            AlgebraicScalar g = gamma_inner_product(gam[i], gam[j]);
            r.expect(g == AlgebraicScalar(i == j ? 1 : 0),
                     "<K^" + parts[i].to_string() + ", K^" + parts[j].to_string() + "> = " + g.to_string());
            if (bm.empty()) continue;
            AlgebraicScalar b = spin_inner_product(bm[i], bm[j]);
            int expect = i == j ? (n % 2 ? 2 : 1) : 0;
            r.expect(b == AlgebraicScalar(expect),
                     "<B^" + parts[i].to_string() + ", B^" + parts[j].to_string() + "> = " + b.to_string());
        }
    }
    return r;
}

long long alternating_class_count(int n) {
    if (n < 2) throw std::invalid_argument("alternating_class_count: n must be at least 2");
    long long even_types = 0, splitting = 0;
    for (const auto& mu : partitions_of(n)) {
        if ((n - mu.length()) % 2 == 0) ++even_types;
        if (is_strict_odd(mu)) ++splitting;
    }
    return even_types + splitting;
}

namespace {

struct ModuleCounts {
    long long total = 0, type_q = 0;
    Rational weighted_square_sum = 0;  // sum d^2 (M) + d^2/2 (Q)
};

ModuleCounts count_modules(AlgebraKind a, int n) {
    ModuleCounts c;
    for (const auto& m : simple_modules(a, n)) {
        ++c.total;
        Rational d2(m.dimension * m.dimension);
        if (m.type == ModuleType::Q) {
            ++c.type_q;
            d2 /= 2;
        }
        c.weighted_square_sum += d2;
    }
    return c;
}

}  // namespace

VerificationReport count_consistency_check(int n_max, int odd_identity_max) {
    VerificationReport r("count_consistency", {{"n_max", n_max}, {"odd_identity_max", odd_identity_max}});
    for (int n = 1; n <= n_max; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        Integer order_b = factorial(n) << n;
        {
            auto cls = split_classes(GroupKind::Gamma, n);
            auto mods = count_modules(AlgebraKind::HC_B, n);
            r.expect(static_cast<long long>(cls.size()) == mods.total, "Gamma classes vs K modules" + at);
            r.expect(mods.weighted_square_sum == Rational((Integer(1) << n) * order_b),
                     "HC_B Wedderburn dimension" + at);
        }
        if (n >= kMinRankB) {
            auto cls = split_classes(GroupKind::B, n);
            long long ev = std::count_if(cls.begin(), cls.end(), [](auto& c) { return c.parity == Parity::even; });
            long long od = static_cast<long long>(cls.size()) - ev;
            auto mods = count_modules(AlgebraKind::CB_minus, n);
            r.expect(ev == mods.total, "B even split classes vs simple modules" + at);
            r.expect(od == mods.type_q, "B odd split classes vs type Q modules" + at);
            r.expect(ev == partition_count(n), "B even split classes vs p(n)" + at);
            r.expect(mods.weighted_square_sum == Rational(order_b), "CB_minus Wedderburn dimension" + at);
        }
        if (n >= kMinRankD) {
            Integer order_d = order_b / 2;
            auto cls = split_classes(GroupKind::D, n);
            long long ev = std::count_if(cls.begin(), cls.end(), [](auto& c) { return c.parity == Parity::even; });
            long long od = static_cast<long long>(cls.size()) - ev;
            auto mods = count_modules(AlgebraKind::CD_minus, n);
            r.expect(ev == mods.total, "D even split classes vs simple modules" + at);
            r.expect(od == mods.type_q, "D odd split classes vs type Q modules" + at);
            r.expect(mods.weighted_square_sum == Rational(order_d), "CD_minus Wedderburn dimension" + at);
            auto hc = count_modules(AlgebraKind::HC_D, n);
            r.expect(hc.weighted_square_sum == Rational((Integer(1) << n) * order_d),
                     "HC_D Wedderburn dimension" + at);
            if (n % 2 == 0)
                r.expect(static_cast<long long>(cls.size()) == alternating_class_count(n),
                         "D classes vs alternating group classes" + at);
        }
    }
    for (int n = 1; n <= odd_identity_max; n += 2) {
        const std::string at = " at n=" + std::to_string(n);
        long long even_len = 0, odd_len = 0, sop = 0, sym = 0, pairs = 0;
        for (const auto& l : partitions_of(n)) {
            ((n - l.length()) % 2 == 0 ? even_len : odd_len)++;
            if (is_strict_odd(l)) ++sop;
            if (is_self_conjugate(l)) ++sym;
            else if (conjugate(l) < l) ++pairs;
        }
        long long p = partition_count(n);
        r.expect(even_len - odd_len == sop && sop == sym, "type M counting identities" + at);
        r.expect(odd_len == pairs && 2 * pairs == p - sym, "type Q counting identities" + at);
        if (n >= kMinRankD) {
            auto mods = count_modules(AlgebraKind::CD_minus, n);
            r.expect(mods.total - mods.type_q == sym, "CD_minus type M count" + at);
            r.expect(mods.type_q == pairs, "CD_minus type Q count" + at);
        }
    }
    return r;
}

}  // namespace spinfake
