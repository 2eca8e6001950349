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

#include "spinfake/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

#include "determinant.hpp"
#include "spinfake/characters.hpp"

namespace spinfake {

PowerSumExpansion PowerSumExpansion::power_sum(const Partition& lambda) {
    PowerSumExpansion e;
    e.add_term(lambda, AlgebraicScalar(1));
    return e;
}

void PowerSumExpansion::add_term(const Partition& lambda, const AlgebraicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraicScalar PowerSumExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? AlgebraicScalar() : it->second;
}

bool PowerSumExpansion::is_homogeneous() const {
    if (terms_.empty()) return true;
    int n = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.size() == n; });
}

PowerSumExpansion& PowerSumExpansion::operator+=(const PowerSumExpansion& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

PowerSumExpansion& PowerSumExpansion::operator-=(const PowerSumExpansion& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

PowerSumExpansion& PowerSumExpansion::operator*=(const AlgebraicScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

PowerSumExpansion operator*(const PowerSumExpansion& a, const PowerSumExpansion& b) {
    PowerSumExpansion out;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_) out.add_term(partition_union(ka, kb), va * vb);
    return out;
}

std::string PowerSumExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + v.to_string() + ")*p[" + k.to_string() + "]";
    }
    return out;
}

MultivariatePolynomial::MultivariatePolynomial(int variables) : vars_(variables) {
    if (variables < 0) throw std::invalid_argument("MultivariatePolynomial: negative variable count");
}

MultivariatePolynomial MultivariatePolynomial::constant(int variables, const Rational& c) {
    MultivariatePolynomial p(variables);
    p.add_term(Exponent(variables, 0), c);
    return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(int variables, int index) {
    if (index < 0 || index >= variables) throw std::out_of_range("variable index out of range");
    MultivariatePolynomial p(variables);
    Exponent e(variables, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Rational MultivariatePolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    return MultivariatePolynomial::multiply_truncated(a, b, {}, -1);
}

MultivariatePolynomial MultivariatePolynomial::multiply_truncated(const MultivariatePolynomial& a,
                                                                  const MultivariatePolynomial& b,
                                                                  const std::vector<int>& weights,
                                                                  int max_weight) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("variable count mismatch");
    const bool truncate = max_weight >= 0;
    if (truncate && static_cast<int>(weights.size()) != a.vars_)
        throw std::invalid_argument("weight vector length mismatch");
    auto weight = [&](const Exponent& e) {
        long long w = 0;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) w += static_cast<long long>(weights[i]) * e[i];
        return w;
    };
    MultivariatePolynomial out(a.vars_);
    Exponent e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        long long wa = truncate ? weight(ea) : 0;
        if (truncate && wa > max_weight) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (truncate && wa + weight(eb) > max_weight) continue;
            for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::embedded(int total, int offset) const {
    if (offset < 0 || offset + vars_ > total) throw std::invalid_argument("embedded: bad offset");
    MultivariatePolynomial out(total);
    for (const auto& [e, c] : terms_) {
        Exponent f(total, 0);
        std::copy(e.begin(), e.end(), f.begin() + offset);
        out.add_term(f, c);
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::swapped(int i, int j) const {
    MultivariatePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f.at(i), f.at(j));
        out.add_term(f, c);
    }
    return out;
}

Rational MultivariatePolynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_) throw std::invalid_argument("evaluate: point size mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < vars_; ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

TruncatedSeries MultivariatePolynomial::evaluate(const std::vector<TruncatedSeries>& point, int order) const {
    if (static_cast<int>(point.size()) != vars_) throw std::invalid_argument("evaluate: point size mismatch");
    std::vector<std::vector<TruncatedSeries>> powers(vars_);
    for (int i = 0; i < vars_; ++i) powers[i].push_back(TruncatedSeries::one(order));
    TruncatedSeries total(order);
    for (const auto& [e, c] : terms_) {
        TruncatedSeries v = TruncatedSeries::one(order) * c;
        for (int i = 0; i < vars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i])
                powers[i].push_back(powers[i].back() * point[i].truncated(order));
            if (e[i]) v *= powers[i][e[i]];
        }
        total += v;
    }
    return total;
}

std::string MultivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        for (int i = 0; i < vars_; ++i) {
            if (!e[i]) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

PowerSumExpansion schur_in_powersums(const Partition& mu) {
    PowerSumExpansion out;
    for (const auto& lambda : partitions_of(mu.size()))
        out.add_term(lambda, AlgebraicScalar(ratio(chi_sn(mu, lambda), z_order(lambda))));
    return out;
}

MultivariatePolynomial evaluate_powersum(const PowerSumExpansion& expansion, int m) {
    if (m < 1) throw std::invalid_argument("evaluate_powersum: need at least one variable");
    std::map<int, MultivariatePolynomial> pk;
    auto power_sum = [&](int k) -> const MultivariatePolynomial& {
        auto it = pk.find(k);
        if (it != pk.end()) return it->second;
        MultivariatePolynomial p(m);
        for (int i = 0; i < m; ++i) {
            MultivariatePolynomial::Exponent e(m, 0);
            e[i] = k;
            p.add_term(e, 1);
        }
        return pk.emplace(k, std::move(p)).first->second;
    };
    MultivariatePolynomial out(m);
    for (const auto& [lambda, c] : expansion.terms()) {
        if (!c.is_rational())
            throw std::domain_error("evaluate_powersum: coefficient " + c.to_string() + " is irrational");
        MultivariatePolynomial term = MultivariatePolynomial::constant(m, c.rational_part());
        for (int part : lambda.parts()) term = term * power_sum(part);
        out += term;
    }
    return out;
}

std::vector<MultivariatePolynomial> complete_homogeneous_upto(int max_k, int m) {
    std::vector<MultivariatePolynomial> h(static_cast<std::size_t>(max_k) + 1, MultivariatePolynomial(m));
    h[0] = MultivariatePolynomial::constant(m, 1);
    // adding variable j: h_d <- h_d + x_j h_{d-1} (ascending d uses the updated value)
    for (int j = 0; j < m; ++j) {
        MultivariatePolynomial xj = MultivariatePolynomial::variable(m, j);
        for (int d = 1; d <= max_k; ++d) h[d] += xj * h[d - 1];
    }
    return h;
}

namespace {

void require_contained(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) throw std::invalid_argument("mu not contained in lambda");
}

/// Jacobi-Trudi matrix entries h_{lambda_i - mu_j - i + j}, given h_0..h_K.
template <class Ring>
Ring jacobi_trudi(const Partition& lambda, const Partition& mu, const std::vector<Ring>& h,
                  const Ring& zero, const Ring& one) {
    const int L = lambda.length();
    std::vector<std::vector<Ring>> m(L, std::vector<Ring>(L, zero));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            int idx = lambda[i] - mu[j] - i + j;
            if (idx >= 0) m[i][j] = h.at(idx);
        }
    return detail::determinant(m, zero, one);
}

int jacobi_trudi_max_index(const Partition& lambda) { return lambda[0] + lambda.length(); }

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (int k = 0; k <= lambda.size(); ++k)
        for (auto& mu : partitions_of(k))
            if (contains(lambda, mu)) out.push_back(std::move(mu));
    return out;
}

std::vector<TruncatedSeries> complete_homogeneous_at(int max_k, const std::vector<TruncatedSeries>& point,
                                                     int order) {
    std::vector<TruncatedSeries> h(static_cast<std::size_t>(max_k) + 1, TruncatedSeries(order));
    h[0] = TruncatedSeries::one(order);
    for (const auto& x : point) {
        TruncatedSeries xt = x.truncated(order);
        for (int d = 1; d <= max_k; ++d) h[d] += xt * h[d - 1];
    }
    return h;
}

}  // namespace

MultivariatePolynomial skew_schur(const Partition& lambda, const Partition& mu, int m) {
    require_contained(lambda, mu);
    if (m < 0) throw std::invalid_argument("skew_schur: negative variable count");
    if (lambda == mu) return MultivariatePolynomial::constant(m, 1);
    auto h = complete_homogeneous_upto(jacobi_trudi_max_index(lambda), m);
    return jacobi_trudi(lambda, mu, h, MultivariatePolynomial(m), MultivariatePolynomial::constant(m, 1));
}

MultivariatePolynomial schur_polynomial(const Partition& lambda, int m) {
    return skew_schur(lambda, Partition{}, m);
}

MultivariatePolynomial super_schur_truncated(const Partition& lambda, int x_count, int y_count) {
    if (x_count < 0 || y_count < 0) throw std::invalid_argument("super_schur_truncated: negative count");
    const int total = x_count + y_count;
    const Partition conj = conjugate(lambda);
    MultivariatePolynomial out(total);
    for (const auto& mu : subpartitions(lambda)) {
        MultivariatePolynomial sx = schur_polynomial(mu, x_count);
        if (sx.is_zero()) continue;
        MultivariatePolynomial sy = skew_schur(conj, conjugate(mu), y_count);
        if (sy.is_zero()) continue;
        out += sx.embedded(total, 0) * sy.embedded(total, x_count);
    }
    return out;
}

TruncatedSeries skew_schur_at(const Partition& lambda, const Partition& mu,
                              const std::vector<TruncatedSeries>& point, int order) {
    require_contained(lambda, mu);
    if (lambda == mu) return TruncatedSeries::one(order);
    auto h = complete_homogeneous_at(jacobi_trudi_max_index(lambda), point, order);
    return jacobi_trudi(lambda, mu, h, TruncatedSeries(order), TruncatedSeries::one(order));
}

TruncatedSeries super_schur_at(const Partition& lambda, const std::vector<TruncatedSeries>& xs,
                               const std::vector<TruncatedSeries>& ys, int order) {
    const Partition conj = conjugate(lambda);
    TruncatedSeries out(order);
    for (const auto& mu : subpartitions(lambda))
        out += skew_schur_at(mu, Partition{}, xs, order) * skew_schur_at(conj, conjugate(mu), ys, order);
    return out;
}

SpecializedSuperSchur super_schur_specialized(const Partition& lambda, const Rational& a, const Rational& b) {
    SpecializedSuperSchur s;
    s.a = a;
    s.b = b;
    s.shift = n_stat(lambda);
    for (const auto& cell : hooks_and_contents(lambda)) {
        s.contents.push_back(cell.content);
        s.hooks.push_back(cell.hook);
        // a + b q^c = q^c (b + a q^{-c}) for c < 0
        if (cell.content < 0) s.shift += cell.content;
    }
    return s;
}

TruncatedSeries SpecializedSuperSchur::expand(int order) const {
    if (shift < 0) throw std::logic_error("SpecializedSuperSchur: negative shift");
    TruncatedSeries s = TruncatedSeries::monomial(order, 1, static_cast<int>(std::min<long long>(shift, order + 1)));
    for (int c : contents) {
        TruncatedSeries f(order);
        if (c == 0) {
            f[0] = a + b;
        } else if (c > 0) {
            f[0] = a;
            if (c <= order) f[c] += b;
        } else {
            f[0] = b;
            if (-c <= order) f[-c] += a;
        }
        s *= f;
    }
    for (int h : hooks)
        for (int k = h; k <= order; ++k) s[k] += s[k - h];
    return s;
}

std::string SpecializedSuperSchur::to_string() const {
    std::string out = "q^" + std::to_string(shift);
    std::string as = a.get_str(), bs = b.get_str();
    for (int c : contents) {
        if (c == 0) out += "*(" + as + "+" + bs + ")";
        else if (c > 0) out += "*(" + as + "+" + bs + "*q^" + std::to_string(c) + ")";
        else out += "*(" + bs + "+" + as + "*q^" + std::to_string(-c) + ")";
    }
    out += " / (";
    for (std::size_t i = 0; i < hooks.size(); ++i)
        out += (i ? "*(1-q^" : "(1-q^") + std::to_string(hooks[i]) + ")";
    return out + ")";
}

namespace {

std::string exponent_string(const MultivariatePolynomial::Exponent& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "]";
}

}  // namespace

VerificationReport verify_super_cauchy(int N, int x_count, int y_count, int z_count) {
    VerificationReport r("super_cauchy", {{"degree", N}, {"x", x_count}, {"y", y_count}, {"z", z_count}});
    if (N < 0 || x_count < 1 || y_count < 1 || z_count < 1)
        throw std::invalid_argument("verify_super_cauchy: counts must be positive and N nonnegative");
    if (N > 12) throw std::invalid_argument("verify_super_cauchy: N above practical bound 12");
    const int total = x_count + y_count + z_count;
    const int zoff = x_count + y_count;
    std::vector<int> weights(total, 0);
    for (int k = 0; k < z_count; ++k) weights[zoff + k] = 1;

    MultivariatePolynomial lhs = MultivariatePolynomial::constant(total, 1);
    for (int k = 0; k < z_count; ++k) {
        auto z = MultivariatePolynomial::variable(total, zoff + k);
        for (int j = 0; j < y_count; ++j) {
            auto f = MultivariatePolynomial::constant(total, 1) +
                     MultivariatePolynomial::variable(total, x_count + j) * z;
            lhs = MultivariatePolynomial::multiply_truncated(lhs, f, weights, N);
        }
        for (int i = 0; i < x_count; ++i) {
            auto xz = MultivariatePolynomial::variable(total, i) * z;
            MultivariatePolynomial geo = MultivariatePolynomial::constant(total, 1), pw = geo;
            for (int e = 1; e <= N; ++e) {
                pw = pw * xz;
                geo += pw;
            }
            lhs = MultivariatePolynomial::multiply_truncated(lhs, geo, weights, N);
        }
    }

    MultivariatePolynomial rhs(total);
    for (int n = 0; n <= N; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            auto sz = schur_polynomial(lambda, z_count);
            if (sz.is_zero()) continue;
            auto hs = super_schur_truncated(lambda, x_count, y_count);
            rhs += hs.embedded(total, 0) * sz.embedded(total, zoff);
        }
    }

    auto diff = lhs - rhs;
    if (!r.expect(diff.is_zero(), "")) {
        const auto& [e, c] = *diff.terms().begin();
        r.first_discrepancy = "coefficient of " + exponent_string(e) + ": lhs " +
                              lhs.coefficient(e).get_str() + ", rhs " + rhs.coefficient(e).get_str();
    }
    r.params["terms"] = lhs.term_count();
    return r;
}

VerificationReport verify_super_schur_specialization(int n_max, int order) {
    VerificationReport r("super_schur_specialization", {{"n_max", n_max}, {"order", order}});
    const std::vector<std::pair<Rational, Rational>> ab = {
        {1, 1}, {Rational(2), Rational(-1, 3)}, {0, 1}, {1, 0}, {Rational(-3, 2), Rational(5, 7)}};
    for (const auto& [a, b] : ab) {
        std::vector<TruncatedSeries> xs, ys;
        for (int i = 0; i <= order; ++i) {
            xs.push_back(TruncatedSeries::monomial(order, a, i));
            ys.push_back(TruncatedSeries::monomial(order, b, i));
        }
        for (int n = 0; n <= n_max; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                TruncatedSeries direct = super_schur_at(lambda, xs, ys, order);
                TruncatedSeries closed = super_schur_specialized(lambda, a, b).expand(order);
                int k = first_difference(direct, closed);
                r.expect(k < 0, "lambda=" + lambda.to_string() + " a=" + a.get_str() + " b=" + b.get_str() +
                                    " differs at q^" + std::to_string(k));
            }
        }
    }
    return r;
}

}  // namespace spinfake
