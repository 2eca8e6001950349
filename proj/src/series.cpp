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

#include "spinfake/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinfake {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(int sign, int e) {
    if (e < 1) throw std::invalid_argument("binomial: exponent must be positive");
    std::vector<Integer> v(static_cast<std::size_t>(e) + 1, Integer(0));
    v[0] = 1;
    v[e] += sign;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int IntPolynomial::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    return -1;
}

Integer IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Integer IntPolynomial::evaluate_at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

Rational IntPolynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) {
        if (low_degree() < -k) throw std::invalid_argument("shifted: negative power of t");
        return IntPolynomial(std::vector<Integer>(coeffs_.begin() - k, coeffs_.end()));
    }
    std::vector<Integer> v(static_cast<std::size_t>(k), Integer(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (is_zero()) return {};
    int dd = divisor.degree();
    const Integer& lead = divisor.coeffs_.back();
    std::vector<Integer> rem = coeffs_;
    if (degree() < dd) throw std::logic_error("exact_divide: nonzero remainder " + to_string());
    std::vector<Integer> q(static_cast<std::size_t>(degree() - dd) + 1, Integer(0));
    for (int k = degree() - dd; k >= 0; --k) {
        Integer top = rem[k + dd];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("exact_divide: non-integral quotient");
        Integer c = top / lead;
        q[k] = c;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
    }
    for (const auto& r : rem)
        if (sgn(r) != 0)
            throw std::logic_error("exact_divide: nonzero remainder dividing " + to_string() +
                                   " by " + divisor.to_string());
    return IntPolynomial(std::move(q));
}

IntPolynomial IntPolynomial::exact_divide(const Integer& d) const {
    if (sgn(d) == 0) throw std::domain_error("exact_divide: division by zero");
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("exact_divide: coefficient " + c.get_str() +
                                   " not divisible by " + d.get_str());
        v.push_back(c / d);
    }
    return IntPolynomial(std::move(v));
}

bool IntPolynomial::is_palindromic(int shift) const {
    if (is_zero()) return true;
    if (degree() > shift) return false;
    for (int k = 0; k <= shift; ++k)
        if (coefficient(k) != coefficient(shift - k)) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, const IntPolynomial& p) : TruncatedSeries(order) {
    for (int k = 0; k <= std::min(order, p.degree()); ++k) coeffs_[k] = p.coefficient(k);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k)
        coeffs_[k] = std::move(coeffs[k]);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, const Rational& c, int e) {
    if (e < 0) throw std::invalid_argument("TruncatedSeries::monomial: negative exponent");
    TruncatedSeries s(order);
    if (e <= order) s.coeffs_[e] = c;
    return s;
}

static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    std::vector<Rational> r(coeffs_.size(), Rational(0));
    for (int i = 0; i <= order_; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (int j = 0; i + j <= order_; ++j)
            if (sgn(o.coeffs_[j]) != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) throw std::domain_error("TruncatedSeries: constant term is zero");
    TruncatedSeries r(order_);
    Rational inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            if (sgn(coeffs_[j]) != 0) acc += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = -acc * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::dilate(int k) const {
    if (k < 1) throw std::invalid_argument("dilate: factor must be positive");
    TruncatedSeries r(order_);
    for (int i = 0; i * k <= order_; ++i) r.coeffs_[i * k] = coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries r(order);
    for (int k = 0; k <= std::min(order, order_); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        out += Rational(abs(c)).get_str();
        if (k > 0) out += "*t" + (k > 1 ? "^" + std::to_string(k) : std::string());
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(order_ + 1) + ")";
}

int first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a[k] != b[k]) return k;
    return -1;
}

void FactoredRational::add_plus_factor(long long e) {
    if (e == 0) {
        scalar_ *= 2;
    } else if (e < 0) {
        // 1 + t^e = t^e (1 + t^-e)
        shift_ += e;
        plus_.push_back(-e);
    } else {
        plus_.push_back(e);
    }
}

void FactoredRational::add_denominator_factor(long long d) {
    if (d < 1) throw std::invalid_argument("denominator factor exponent must be positive");
    denom_.push_back(d);
}

std::vector<long long> FactoredRational::plus_factors() const {
    auto v = plus_;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<long long> FactoredRational::denominator_factors() const {
    auto v = denom_;
    std::sort(v.begin(), v.end());
    return v;
}

IntPolynomial FactoredRational::numerator() const {
    if (shift_ < 0) throw std::logic_error("FactoredRational: negative monomial shift");
    IntPolynomial p = IntPolynomial::monomial(scalar_, static_cast<int>(shift_));
    for (long long e : plus_) p *= IntPolynomial::binomial(1, static_cast<int>(e));
    return p;
}

IntPolynomial FactoredRational::denominator() const {
    IntPolynomial p = IntPolynomial::constant(1);
    for (long long d : denom_) p *= IntPolynomial::binomial(-1, static_cast<int>(d));
    return p;
}

TruncatedSeries FactoredRational::expand(int order) const {
    TruncatedSeries s(order, numerator());
    for (long long d : denom_) {
        // multiply by 1/(1 - t^d) = running prefix sums with stride d
        for (int k = static_cast<int>(d); k <= order; ++k) s[k] += s[k - static_cast<int>(d)];
    }
    return s;
}

std::string FactoredRational::to_string() const {
    std::string out = scalar_.get_str();
    if (shift_ != 0) out += "*t^" + std::to_string(shift_);
    for (long long e : plus_factors()) out += "*(1+t^" + std::to_string(e) + ")";
    auto den = denominator_factors();
    if (!den.empty()) {
        out += " / (";
        for (std::size_t i = 0; i < den.size(); ++i)
            out += (i ? "*(1-t^" : "(1-t^") + std::to_string(den[i]) + ")";
        out += ")";
    }
    return out;
}

TruncatedSeries FactoredSum::expand(int order) const {
    TruncatedSeries s(order);
    for (const auto& t : terms) s += t.expand(order);
    return s;
}

IntPolynomial FactoredSum::numerator() const {
    IntPolynomial p;
    for (const auto& t : terms) p += t.numerator();
    return p;
}

IntPolynomial FactoredSum::denominator() const {
    if (terms.empty()) return IntPolynomial::constant(1);
    auto d = terms.front().denominator_factors();
    for (const auto& t : terms)
        if (t.denominator_factors() != d)
            throw std::logic_error("FactoredSum: terms have different denominators");
    return terms.front().denominator();
}

std::string FactoredSum::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i].to_string();
    return out.empty() ? "0" : out;
}

}  // namespace spinfake
