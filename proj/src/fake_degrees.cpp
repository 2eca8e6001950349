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

#include "spinfake/fake_degrees.hpp"

#include <stdexcept>

#include "spinfake/symmetric.hpp"

namespace spinfake {

std::string to_string(WeylType w) {
    switch (w) {
        case WeylType::A: return "A";
        case WeylType::B: return "B";
        case WeylType::D: return "D";
    }
    return "?";
}

void require_weyl_rank(WeylType w, int n) {
    int lo = w == WeylType::A ? 1 : w == WeylType::B ? kMinRankB : kMinRankD;
    if (n < lo || n > kMaxPartitionSize)
        throw std::invalid_argument("rank " + std::to_string(n) + " outside the supported range for type " +
                                    to_string(w) + " (minimum " + std::to_string(lo) + ")");
}

std::vector<int> degrees(WeylType w, int n) {
    require_weyl_rank(w, n);
    std::vector<int> d;
    switch (w) {
        case WeylType::A:
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case WeylType::B:
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case WeylType::D:
            for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
    }
    return d;
}

long long reflection_count(WeylType w, int n) {
    require_weyl_rank(w, n);
    const long long m = n;
    switch (w) {
        case WeylType::A: return m * (m + 1) / 2;
        case WeylType::B: return m * m;
        case WeylType::D: return m * (m - 1);
    }
    return 0;
}

IntPolynomial degree_product(WeylType w, int n) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (int d : degrees(w, n)) p *= IntPolynomial::binomial(-1, d);
    return p;
}

TruncatedSeries invariant_hilbert_series(WeylType w, int n, int N) {
    FactoredRational f;
    for (int d : degrees(w, n)) f.add_denominator_factor(d);
    return f.expand(N);
}

namespace {

FactoredRational hook_content_product(const Partition& lambda, bool with_parity_scalar) {
    if (lambda.empty()) throw std::invalid_argument("hook/content product needs a nonempty partition");
    FactoredRational f;
    if (with_parity_scalar && lambda.size() % 2) f.multiply_scalar(2);
    f.multiply_monomial(2 * n_stat(lambda));
    for (const auto& cell : hooks_and_contents(lambda)) {
        f.add_plus_factor(2LL * cell.content + 1);
        f.add_denominator_factor(2LL * cell.hook);
    }
    return f;
}

IntPolynomial fake_degree_from(const FactoredSum& h, WeylType w, int n) {
    return (h.numerator() * degree_product(w, n)).exact_divide(h.denominator());
}

FactoredSum type_d_sum(const Partition& lambda, bool hecke_clifford) {
    const int n = lambda.size();
    require_weyl_rank(WeylType::D, n);
    const bool odd = n % 2 == 1;
    FactoredSum s;
    if (is_self_conjugate(lambda)) {
        FactoredRational f = hook_content_product(lambda, false);
        if (odd) f.multiply_scalar(2);
        s.terms.push_back(f);
        return s;
    }
    FactoredRational a = hook_content_product(lambda, false);
    FactoredRational b = conjugate_content_product(lambda);
    if (odd && !hecke_clifford) {
        a.multiply_scalar(2);
        b.multiply_scalar(2);
    }
    s.terms = {a, b};
    return s;
}

}  // namespace

FactoredRational H_minus_B(const Partition& lambda) { return hook_content_product(lambda, true); }

FactoredRational H_B_heckeclifford(const Partition& lambda) { return hook_content_product(lambda, false); }

IntPolynomial P_minus_B(const Partition& lambda) {
    require_weyl_rank(WeylType::B, lambda.size());
    return fake_degree_from(FactoredSum{{H_minus_B(lambda)}}, WeylType::B, lambda.size());
}

IntPolynomial P_B_heckeclifford(const Partition& lambda) {
    require_weyl_rank(WeylType::B, lambda.size());
    return fake_degree_from(FactoredSum{{H_B_heckeclifford(lambda)}}, WeylType::B, lambda.size());
}

FactoredRational conjugate_content_product(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("conjugate_content_product: empty partition");
    FactoredRational f;
    f.multiply_monomial(2 * n_stat(lambda));
    for (const auto& cell : hooks_and_contents(lambda)) {
        // t^{2c} + t = t (1 + t^{2c-1})
        f.multiply_monomial(1);
        f.add_plus_factor(2LL * cell.content - 1);
        f.add_denominator_factor(2LL * cell.hook);
    }
    return f;
}

FactoredSum H_minus_D(const Partition& lambda) { return type_d_sum(lambda, false); }

FactoredSum H_D_heckeclifford(const Partition& lambda) { return type_d_sum(lambda, true); }

IntPolynomial P_minus_D(const Partition& lambda) {
    return fake_degree_from(H_minus_D(lambda), WeylType::D, lambda.size());
}

IntPolynomial P_D_heckeclifford(const Partition& lambda) {
    return fake_degree_from(H_D_heckeclifford(lambda), WeylType::D, lambda.size());
}

bool check_palindromic(const IntPolynomial& p, int shift) { return p.is_palindromic(shift); }

bool P_equals_H_times_degrees(const Partition& lambda, WeylType w) {
    if (w == WeylType::A) throw std::invalid_argument("P_equals_H_times_degrees: type A not supported");
    const int n = lambda.size();
    require_weyl_rank(w, n);
    const int order = static_cast<int>(reflection_count(w, n)) + 1;
    TruncatedSeries prod(order, degree_product(w, n));
    auto check = [&](const TruncatedSeries& h, const IntPolynomial& p) {
        return h * prod == TruncatedSeries(order, p);
    };
    if (w == WeylType::B)
        return check(H_minus_B(lambda).expand(order), P_minus_B(lambda)) &&
               check(H_B_heckeclifford(lambda).expand(order), P_B_heckeclifford(lambda));
    return check(H_minus_D(lambda).expand(order), P_minus_D(lambda)) &&
           check(H_D_heckeclifford(lambda).expand(order), P_D_heckeclifford(lambda));
}

std::vector<FakeDegreeRow> fake_degree_table(WeylType w, int n, bool hecke_clifford) {
    if (w == WeylType::A) throw std::invalid_argument("fake_degree_table: type A not supported");
    require_weyl_rank(w, n);
    AlgebraKind algebra = w == WeylType::B ? (hecke_clifford ? AlgebraKind::HC_B : AlgebraKind::CB_minus)
                                           : (hecke_clifford ? AlgebraKind::HC_D : AlgebraKind::CD_minus);
    const int shift = static_cast<int>(reflection_count(w, n));
    std::vector<FakeDegreeRow> rows;
    for (const auto& m : simple_modules(algebra, n)) {
        if (m.sign < 0) continue;  // shares the row of its + partner
        FakeDegreeRow row;
        row.module = m;
        row.duplicity = m.sign > 0 ? 2 : 1;
        if (w == WeylType::B)
            row.polynomial = hecke_clifford ? P_B_heckeclifford(m.lambda) : P_minus_B(m.lambda);
        else
            row.polynomial = hecke_clifford ? P_D_heckeclifford(m.lambda) : P_minus_D(m.lambda);
        row.shift = shift;
        row.palindromic = check_palindromic(row.polynomial, shift);
        row.value_at_one = row.polynomial.evaluate_at_one();
        rows.push_back(std::move(row));
    }
    return rows;
}

VerificationReport sum_rule_check(WeylType w, int n, bool hecke_clifford) {
    VerificationReport r("sum_rule", {{"type", to_string(w)}, {"n", n}, {"hecke_clifford", hecke_clifford}});
    Integer order = factorial(n) << n;
    if (w == WeylType::D) order /= 2;
    Integer target = (hecke_clifford ? Integer(1) << n : clifford_module_dimension(n)) * order;
    Rational total = 0;
    for (const auto& row : fake_degree_table(w, n, hecke_clifford)) {
        Rational term(row.module.dimension * row.value_at_one * row.duplicity);
        if (row.module.type == ModuleType::Q) term /= 2;
        total += term;
    }
    r.expect(total == Rational(target), "weighted sum " + total.get_str() + " != " + target.get_str());
    return r;
}

VerificationReport palindromicity_check(int n_max) {
    VerificationReport r("palindromicity", {{"n_max", n_max}});
    for (int n = kMinRankB; n <= n_max; ++n) {
        for (WeylType w : {WeylType::B, WeylType::D}) {
            if (w == WeylType::D && n < kMinRankD) continue;
            for (bool hc : {false, true})
                for (const auto& row : fake_degree_table(w, n, hc))
                    r.expect(row.palindromic, to_string(w) + std::to_string(n) + " " + row.module.to_string() +
                                                  ": " + row.polynomial.to_string());
        }
    }
    return r;
}

VerificationReport conjugation_identity_check(int n_max) {
    VerificationReport r("conjugation_identity", {{"n_max", n_max}});
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            IntPolynomial lhs = hook_content_product(conjugate(lambda), false).numerator();
            IntPolynomial rhs = conjugate_content_product(lambda).numerator();
            r.expect(lhs == rhs, "lambda=" + lambda.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
        }
    }
    return r;
}

VerificationReport heckeclifford_super_schur_check(int n_max, int order) {
    VerificationReport r("heckeclifford_super_schur", {{"n_max", n_max}, {"order", order}});
    std::vector<TruncatedSeries> xs, ys;
    for (int i = 0; 2 * i <= order; ++i) {
        xs.push_back(TruncatedSeries::monomial(order, 1, 2 * i));
        ys.push_back(TruncatedSeries::monomial(order, 1, 2 * i + 1));
    }
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            TruncatedSeries closed = H_B_heckeclifford(lambda).expand(order);
            TruncatedSeries direct = super_schur_at(lambda, xs, ys, order);
            int k = first_difference(closed, direct);
            r.expect(k < 0, "lambda=" + lambda.to_string() + " differs at t^" + std::to_string(k));
        }
    }
    return r;
}

VerificationReport formula_relations_check(int n_max) {
    VerificationReport r("formula_relations", {{"n_max", n_max}});
    for (int n = kMinRankB; n <= n_max; ++n) {
        const Integer scale = n % 2 ? 2 : 1;
        const int order = n * n + 1;
        for (const auto& lambda : partitions_of(n)) {
            const std::string at = " at lambda=" + lambda.to_string();
            r.expect(P_minus_B(lambda) == P_B_heckeclifford(lambda) * scale, "minus vs Hecke-Clifford (B)" + at);
            r.expect(P_equals_H_times_degrees(lambda, WeylType::B), "P = H * prod (B)" + at);
            for (const auto& row : {P_minus_B(lambda), P_B_heckeclifford(lambda)})
                for (const auto& c : row.coefficients()) r.expect(sgn(c) >= 0, "negative coefficient (B)" + at);
            if (n < kMinRankD) continue;
            const Partition conj = conjugate(lambda);
            TruncatedSeries d = H_minus_D(lambda).expand(order);
            TruncatedSeries expect = H_minus_B(lambda).expand(order);
            if (conj != lambda) expect += H_minus_B(conj).expand(order);
            else if (n % 2 == 0) expect = H_B_heckeclifford(lambda).expand(order);
            r.expect(d == expect, "D multiplicity vs B sum" + at);
            r.expect(P_minus_D(lambda) == P_minus_D(conj), "lambda <-> lambda' invariance (D)" + at);
            r.expect(P_equals_H_times_degrees(lambda, WeylType::D), "P = H * prod (D)" + at);
            IntPolynomial hc = P_D_heckeclifford(lambda), mi = P_minus_D(lambda);
            bool halved = n % 2 == 1 && conj != lambda;
            r.expect(halved ? mi == hc * Integer(2) : mi == hc, "minus vs Hecke-Clifford (D)" + at);
            for (const auto& c : mi.coefficients()) r.expect(sgn(c) >= 0, "negative coefficient (D)" + at);
        }
    }
    return r;
}

}  // namespace spinfake
