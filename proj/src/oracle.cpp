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

#include "spinfake/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace spinfake {

namespace {

const AlgebraicScalar& inv_sqrt2() {
    static const AlgebraicScalar v = AlgebraicScalar::pow2_half(-1);
    return v;
}

template <class T>
T power(const T& x, int e, const T& one) {
    T r = one;
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

std::string relation_name(int i, int j, int m) {
    return "(x" + std::to_string(i + 1) + " x" + std::to_string(j + 1) + ")^" + std::to_string(m);
}

// Every exponent vector of total degree k in n variables, ascending lex.
std::vector<std::vector<int>> monomials_of_degree(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (n > 0) rec(rec, 0, k);
    else if (k == 0) out.push_back(e);
    return out;
}

// Solves A x = b exactly; throws on singular A.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(a[piv][col]) == 0) ++piv;
        if (piv == n) throw std::logic_error("oracle: singular character system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// [k][index of lambda in partitions_of(n)]
std::vector<std::vector<Rational>> multiplicity_table_B(int n, int maxdeg, long cap) {
    const auto lambdas = partitions_of(n);
    const auto classes = split_classes(GroupKind::Gamma, n);
    std::vector<std::vector<Rational>> a(classes.size(), std::vector<Rational>(lambdas.size()));
    std::vector<std::vector<int>> words;
    for (std::size_t r = 0; r < classes.size(); ++r) {
        for (std::size_t l = 0; l < lambdas.size(); ++l) a[r][l] = Rational(hc_char_B(lambdas[l], classes[r]));
        words.push_back(canonical_representative(classes[r]).word);
    }
    std::vector<std::vector<Rational>> out;
    for (int k = 0; k <= maxdeg; ++k) {
        GradedRepresentation rep(n, k, cap);
        std::vector<Rational> b(classes.size());
        for (std::size_t r = 0; r < classes.size(); ++r) b[r] = Rational(rep.word_matrix(words[r]).trace());
        out.push_back(solve_linear(a, b));
    }
    return out;
}

// Group average over D_n for every lambda at once, before rescaling.
std::map<Partition, TruncatedSeries> group_average_D(int n, int maxdeg) {
    require_weyl_rank(WeylType::D, n);
    std::map<std::pair<Partition, Partition>, std::pair<long, SignedPermutation>> tally;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long order = 0;
    do {
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            if (__builtin_popcount(bits) % 2) continue;
            std::vector<int> signs(n);
            for (int i = 0; i < n; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
            SignedPermutation g(perm, signs);
            auto [it, fresh] = tally.try_emplace(g.signed_cycle_type(), 0L, g);
            ++it->second.first;
            ++order;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<std::vector<int>>> monos;
    for (int k = 0; k <= maxdeg; ++k) monos.push_back(monomials_of_degree(n, k));

    std::map<Partition, TruncatedSeries> out;
    for (const auto& lambda : partitions_of(n)) out.emplace(lambda, TruncatedSeries(maxdeg));
    std::vector<int> image;
    for (const auto& [type, entry] : tally) {
        const auto& [count, g] = entry;
        Integer cl = g.clifford_trace();
        if (cl == 0) continue;
        std::vector<Integer> sym(maxdeg + 1, Integer(0));
        for (int k = 0; k <= maxdeg; ++k)
            for (const auto& e : monos[k]) {
                int s = g.act_on_monomial(e, image);
                if (image == e) sym[k] += s;
            }
        Partition mu = g.cycle_type();
        for (auto& [lambda, series] : out) {
            Integer weight = Integer(count) * chi_sn(lambda, mu) * cl;
            for (int k = 0; k <= maxdeg; ++k) series[k] += Rational(weight * sym[k]);
        }
    }
    for (auto& [lambda, series] : out) series *= Rational(1, order);
    return out;
}

TruncatedSeries rescale_D(const Partition& lambda, const TruncatedSeries& m) {
    const int n = lambda.size();
    const bool self = is_self_conjugate(lambda);
    if (n % 2) return self ? m : m * Rational(2);
    return self ? m * Rational(1, 2) : m;
}

SuperTensorElement phiB_image(int n, int i) {
    if (i < n) return SuperTensorElement::pure(clifford_generators(WeylType::B, n)[i - 1],
                                               SignedPermutation::transposition(n, i), false);
    return SuperTensorElement::pure(CliffordElement::generator(n, n), SignedPermutation::identity(n), false);
}

SuperTensorElement phiD_image(int n, int i) {
    const CliffordElement z = zeta_element(n);
    if (i < n) {
        CliffordElement b = (CliffordElement::generator(n, i) - CliffordElement::generator(n, i + 1)) * inv_sqrt2();
        return SuperTensorElement::pure(z * b, SignedPermutation::transposition(n, i), true);
    }
    CliffordElement b = (CliffordElement::generator(n, n - 1) + CliffordElement::generator(n, n)) * inv_sqrt2();
    return SuperTensorElement::pure(z * b, SignedPermutation::transposition(n, n - 1), true);
}

// phiB applied to iota(t_i).
SuperTensorElement phiB_iota_image(int n, int i) {
    if (i < n) return phiB_image(n, i);
    SuperTensorElement tn = phiB_image(n, n);
    return (tn * phiB_image(n, n - 1) * tn) * AlgebraicScalar(-1);
}

// a (x) g  ->  a zeta^|g| (x) g, from the odd-group algebra to the even-group one.
SuperTensorElement twist_by_zeta(const SuperTensorElement& x) {
    const int n = x.rank();
    const CliffordElement z = zeta_element(n);
    SuperTensorElement out(n, false);
    for (const auto& [key, c] : x.terms()) {
        CliffordElement a = CliffordElement::basis(n, key.first, c);
        if (key.second.permutation_parity()) a = a * z;
        out += SuperTensorElement::pure(a, key.second, false);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> coxeter_matrix(WeylType w, int n) {
    require_weyl_rank(w, n);
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    auto link = [&](int i, int j, int v) { m[i][j] = m[j][i] = v; };
    switch (w) {
        case WeylType::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
            break;
        case WeylType::B:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
            link(n - 2, n - 1, 4);
            break;
        case WeylType::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
            link(n - 3, n - 1, 3);
            break;
    }
    return m;
}

int clifford_rank(WeylType w, int n) { return w == WeylType::A ? n + 1 : n; }

std::vector<CliffordElement> clifford_generators(WeylType w, int n) {
    require_weyl_rank(w, n);
    const int m = clifford_rank(w, n);
    std::vector<CliffordElement> beta;
    const int chain = w == WeylType::A ? n : n - 1;
    for (int i = 1; i <= chain; ++i)
        beta.push_back((CliffordElement::generator(m, i) - CliffordElement::generator(m, i + 1)) * inv_sqrt2());
    if (w == WeylType::B) beta.push_back(CliffordElement::generator(m, n));
    if (w == WeylType::D)
        beta.push_back((CliffordElement::generator(m, n - 1) + CliffordElement::generator(m, n)) * inv_sqrt2());
    return beta;
}

std::vector<SignedPermutation> simple_reflections(WeylType w, int n) {
    require_weyl_rank(w, n);
    const int m = clifford_rank(w, n);
    std::vector<SignedPermutation> s;
    const int chain = w == WeylType::A ? n : n - 1;
    for (int i = 1; i <= chain; ++i) s.push_back(SignedPermutation::transposition(m, i));
    if (w == WeylType::B) s.push_back(SignedPermutation::sign_change(n, n));
    if (w == WeylType::D) s.push_back(SignedPermutation::plus_reflection(n, n - 1, n));
    return s;
}

std::string to_string(PresentationTarget t) {
    switch (t) {
        case PresentationTarget::phiB: return "phiB";
        case PresentationTarget::phiD: return "phiD";
        case PresentationTarget::Psi: return "Psi";
        case PresentationTarget::Omega: return "Omega";
    }
    return "?";
}

CliffordElement zeta_element(int n) {
    CliffordElement z = CliffordElement::scalar(n, 1);
    for (int i = 1; i <= n; ++i) z = z * CliffordElement::generator(n, i);
    return z;
}

int zeta_phase_square(int n) { return (n * (n - 1) / 2) % 2 ? -1 : 1; }

VerificationReport verify_presentation_images(PresentationTarget target, WeylType w, int n) {
    require_weyl_rank(w, n);
    VerificationReport rep("presentation_images",
                           {{"target", to_string(target)}, {"type", to_string(w)}, {"n", n}});
    const auto m = coxeter_matrix(w, n);
    const int r = clifford_rank(w, n);

    // sign_of(e) is the expected scalar of (x_i x_j)^e.
    auto run = [&](const auto& images, const auto& one, auto sign_of) {
        for (int i = 0; i < n; ++i) {
            if constexpr (requires { images[i].parity(); })
                rep.expect(images[i].parity() == 1, "image of generator " + std::to_string(i + 1) + " is not odd");
            for (int j = i; j < n; ++j) {
                const int e = m[i][j];
                auto lhs = power(images[i] * images[j], e, one);
                const int sign = sign_of(e);
                rep.expect(lhs == one * AlgebraicScalar(sign), relation_name(i, j, e) + " = " + lhs.to_string());
            }
        }
    };

    auto standard = [](int e) { return (e + 1) % 2 ? -1 : 1; };
    switch (target) {
        case PresentationTarget::Omega:
            run(clifford_generators(w, n), CliffordElement::scalar(r, 1), standard);
            break;
        case PresentationTarget::Psi: {
            const auto beta = clifford_generators(w, n);
            const auto s = simple_reflections(w, n);
            std::vector<SmashProductElement> x;
            for (int i = 0; i < n; ++i) x.push_back(SmashProductElement::pure(beta[i], s[i]));
            run(x, SmashProductElement::one(r), [](int) { return -1; });
            break;
        }
        case PresentationTarget::phiB: {
            if (w != WeylType::B) throw std::invalid_argument("phiB requires type B");
            std::vector<SuperTensorElement> y;
            for (int i = 1; i <= n; ++i) y.push_back(phiB_image(n, i));
            run(y, SuperTensorElement::one(n, false), standard);
            break;
        }
        case PresentationTarget::phiD: {
            if (w != WeylType::D || n % 2 == 0) throw std::invalid_argument("phiD requires type D with n odd");
            std::vector<SuperTensorElement> y;
            for (int i = 1; i <= n; ++i) y.push_back(phiD_image(n, i));
            // each relation word carries 2e factors of zeta
            const int phase = zeta_phase_square(n);
            run(y, SuperTensorElement::one(n, true), [&](int e) { return standard(e) * (e % 2 ? phase : 1); });
            break;
        }
    }
    return rep;
}

VerificationReport verify_phiD_surjectivity_identities(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("surjectivity identities need odd n >= 5");
    VerificationReport rep("phiD_surjectivity", {{"n", n}});
    const auto id = SignedPermutation::identity(n);
    auto cc = [&](int i, int j) {
        return SuperTensorElement::pure(CliffordElement::generator(n, i) * CliffordElement::generator(n, j), id, true);
    };
    const AlgebraicScalar phase(zeta_phase_square(n));
    rep.expect(phiD_image(n, n - 1) * phiD_image(n, n) * phase == cc(n - 1, n),
               "phiD(t_{n-1}) phiD(t_n) != c_{n-1} c_n");
    for (int i = 1; i <= n - 2; ++i) {
        auto t = phiD_image(n, i);
        rep.expect(t * cc(i + 1, n) * t * phase == cc(i, n), "conjugation identity fails at i=" + std::to_string(i));
    }

    const CliffordElement z = zeta_element(n);
    const CliffordElement one = CliffordElement::scalar(n, 1);
    rep.expect(z * z * phase == one, "zeta^2 != 1");
    rep.expect(z.parity() == 1, "zeta is not odd");
    for (int i = 1; i <= n; ++i) {
        auto c = CliffordElement::generator(n, i);
        rep.expect(z * c == c * z, "zeta does not commute with c" + std::to_string(i));
    }

    const auto zt = SuperTensorElement::pure(z, id, false);
    for (int i = 1; i <= n; ++i) {
        auto x = phiB_iota_image(n, i);
        rep.expect(zt * x == x * zt, "zeta does not commute with the iota image of t" + std::to_string(i));
        rep.expect(twist_by_zeta(phiD_image(n, i)) * phase == x, "zeta twist of phiD(t" + std::to_string(i) + ") differs");
    }
    return rep;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
    const int d = b.dimension();
    if (a.dimension() != d) throw std::invalid_argument("SignedPermMatrix: dimension mismatch");
    SignedPermMatrix out{std::vector<int>(d), std::vector<int>(d)};
    for (int i = 0; i < d; ++i) {
        out.target[i] = a.target[b.target[i]];
        out.sign[i] = b.sign[i] * a.sign[b.target[i]];
    }
    return out;
}

bool SignedPermMatrix::is_identity() const {
    for (int i = 0; i < dimension(); ++i)
        if (target[i] != i || sign[i] != 1) return false;
    return true;
}

long SignedPermMatrix::trace() const {
    long t = 0;
    for (int i = 0; i < dimension(); ++i)
        if (target[i] == i) t += sign[i];
    return t;
}

Integer GradedRepresentation::required_dimension(int n, int k) {
    Integer monos;
    mpz_bin_uiui(monos.get_mpz_t(), n + k - 1, k);
    return monos << n;
}

GradedRepresentation::GradedRepresentation(int n, int k, long cap) : n_(n), k_(k) {
    if (n < 1 || n > kMaxCliffordRank) throw std::invalid_argument("GradedRepresentation: rank out of range");
    if (k < 0) throw std::invalid_argument("GradedRepresentation: negative degree");
    Integer need = required_dimension(n, k);
    if (need > cap)
        throw std::length_error("graded representation needs dimension " + need.get_str() + ", cap is " +
                                std::to_string(cap));
    monomials_ = monomials_of_degree(n, k);
    for (int i = 1; i < n; ++i) generators_.push_back(action(SignedPermutation::transposition(n, i)));
    generators_.push_back(action(SignedPermutation::sign_change(n, n)));
}

SignedPermMatrix GradedRepresentation::action(const SignedPermutation& g) const {
    if (g.degree() != n_) throw std::invalid_argument("GradedRepresentation::action: degree mismatch");
    const int m = static_cast<int>(monomials_.size());
    std::vector<int> mono_target(m), mono_sign(m);
    std::vector<int> image;
    for (int j = 0; j < m; ++j) {
        mono_sign[j] = g.act_on_monomial(monomials_[j], image);
        mono_target[j] = static_cast<int>(std::lower_bound(monomials_.begin(), monomials_.end(), image) -
                                          monomials_.begin());
    }
    SignedPermMatrix out{std::vector<int>(dimension()), std::vector<int>(dimension())};
    for (SubsetMask mask = 0; mask < (SubsetMask(1) << n_); ++mask) {
        auto [s, moved] = g.act_on_basis(mask);
        for (int j = 0; j < m; ++j) {
            const int from = static_cast<int>(mask) * m + j;
            out.target[from] = static_cast<int>(moved) * m + mono_target[j];
            out.sign[from] = s * mono_sign[j];
        }
    }
    return out;
}

SignedPermMatrix GradedRepresentation::word_matrix(const std::vector<int>& word) const {
    SignedPermMatrix out{std::vector<int>(dimension()), std::vector<int>(dimension(), 1)};
    std::iota(out.target.begin(), out.target.end(), 0);
    for (int letter : word) {
        if (letter < 1 || letter > n_) throw std::out_of_range("word letter out of range");
        out = out * generators_[letter - 1];
    }
    return out;
}

SignedPermutation element_of_word(int n, const std::vector<int>& word) {
    SignedPermutation g = SignedPermutation::identity(n);
    for (int letter : word) {
        if (letter < 1 || letter > n) throw std::out_of_range("word letter out of range");
        g = g * (letter < n ? SignedPermutation::transposition(n, letter) : SignedPermutation::sign_change(n, n));
    }
    return g;
}

CanonicalRepresentative canonical_representative(const Partition& rho_plus, const Partition& rho_minus) {
    const int n = rho_plus.size() + rho_minus.size();
    if (n < 1) throw std::invalid_argument("canonical_representative: empty class");
    std::vector<int> word;
    int a = 1;
    for (int len : rho_plus.parts()) {
        for (int i = a; i <= a + len - 2; ++i) word.push_back(i);
        a += len;
    }
    for (int len : rho_minus.parts()) {
        for (int i = a; i <= a + len - 2; ++i) word.push_back(i);
        const int b = a + len - 1;
        for (int i = b; i < n; ++i) word.push_back(i);
        word.push_back(n);
        for (int i = n - 1; i >= b; --i) word.push_back(i);
        a += len;
    }
    return {element_of_word(n, word), word};
}

CanonicalRepresentative canonical_representative(const SplitClassLabel& cls) {
    return canonical_representative(cls.rho_plus, cls.rho_minus);
}

Integer graded_trace(const SplitClassLabel& cls, int k, long cap) {
    GradedRepresentation rep(cls.size(), k, cap);
    return Integer(rep.word_matrix(canonical_representative(cls).word).trace());
}

TruncatedSeries closed_form_trace(const Partition& rho_plus, const Partition& rho_minus, int N) {
    TruncatedSeries out = TruncatedSeries::one(N);
    for (int len : rho_plus.parts()) {
        if (len % 2 == 0) return TruncatedSeries(N);
        out *= TruncatedSeries(N, IntPolynomial::binomial(-1, len)).inverse() * Rational(2);
    }
    for (int len : rho_minus.parts()) {
        if (len % 2) return TruncatedSeries(N);
        out *= TruncatedSeries(N, IntPolynomial::binomial(1, len)).inverse() * Rational(2);
    }
    return out;
}

VerificationReport verify_graded_rep_relations(int n, int k, long cap) {
    VerificationReport rep("graded_rep_relations", {{"n", n}, {"k", k}});
    GradedRepresentation g(n, k, cap);
    const auto m = coxeter_matrix(WeylType::B, n);
    const auto& gens = g.generators();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SignedPermMatrix p = gens[i] * gens[j];
            SignedPermMatrix acc = p;
            for (int e = 1; e < m[i][j]; ++e) acc = acc * p;
            rep.expect(acc.is_identity(), relation_name(i, j, m[i][j]) + " is not the identity");
        }
    for (const auto& cls : split_classes(GroupKind::B, n)) {
        auto c = canonical_representative(cls);
        rep.expect(c.element.signed_cycle_type() == std::make_pair(cls.rho_plus, cls.rho_minus),
                   "representative of " + cls.to_string() + " has the wrong signed cycle type");
        rep.expect(g.word_matrix(c.word).target == g.action(c.element).target &&
                       g.word_matrix(c.word).sign == g.action(c.element).sign,
                   "word and element actions differ for " + cls.to_string());
    }
    return rep;
}

VerificationReport verify_graded_traces(int n, int max_k, long cap) {
    VerificationReport rep("graded_traces", {{"n", n}, {"max_k", max_k}});
    auto classes = split_classes(GroupKind::B, n);
    for (const auto& c : split_classes(GroupKind::Gamma, n))
        if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
    std::vector<TruncatedSeries> closed;
    std::vector<std::vector<int>> words;
    for (const auto& c : classes) {
        closed.push_back(closed_form_trace(c.rho_plus, c.rho_minus, max_k));
        words.push_back(canonical_representative(c).word);
    }
    for (int k = 0; k <= max_k; ++k) {
        GradedRepresentation g(n, k, cap);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            Rational tr(g.word_matrix(words[i]).trace());
            rep.expect(tr == closed[i][k], "class " + classes[i].to_string() + " degree " + std::to_string(k) +
                                               ": matrix " + tr.get_str() + " vs closed form " +
                                               closed[i][k].get_str());
        }
    }
    return rep;
}

std::vector<Rational> oracle_multiplicities_B(int n, int k, long cap) {
    require_rank(GroupKind::Gamma, n);
    return multiplicity_table_B(n, k, cap).back();
}

TruncatedSeries oracle_H_B(const Partition& lambda, int maxdeg, long cap) {
    const int n = lambda.size();
    require_rank(GroupKind::Gamma, n);
    const auto lambdas = partitions_of(n);
    const auto idx = std::find(lambdas.begin(), lambdas.end(), lambda) - lambdas.begin();
    const auto table = multiplicity_table_B(n, maxdeg, cap);
    TruncatedSeries out(maxdeg);
    for (int k = 0; k <= maxdeg; ++k) out[k] = table[k][idx];
    return out;
}

TruncatedSeries oracle_H_D(const Partition& lambda, int maxdeg) {
    const auto averages = group_average_D(lambda.size(), maxdeg);
    return rescale_D(lambda, averages.at(lambda));
}

TruncatedSeries oracle_H_D_from_B(const Partition& lambda, int maxdeg, long cap) {
    const int n = lambda.size();
    require_weyl_rank(WeylType::D, n);
    const Partition conj = conjugate(lambda);
    TruncatedSeries sum = oracle_H_B(lambda, maxdeg, cap);
    if (conj != lambda) sum += oracle_H_B(conj, maxdeg, cap);
    return n % 2 ? sum * Rational(2) : sum;
}

VerificationReport verify_oracle_B(int n, int maxdeg, long cap) {
    require_weyl_rank(WeylType::B, n);
    VerificationReport rep("oracle_B", {{"n", n}, {"maxdeg", maxdeg}});
    const auto lambdas = partitions_of(n);
    const auto table = multiplicity_table_B(n, maxdeg, cap);
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        TruncatedSeries expected = H_B_heckeclifford(lambdas[l]).expand(maxdeg);
        for (int k = 0; k <= maxdeg; ++k)
            rep.expect(table[k][l] == expected[k], "lambda " + lambdas[l].to_string() + " degree " +
                                                       std::to_string(k) + ": oracle " + table[k][l].get_str() +
                                                       " vs formula " + expected[k].get_str());
    }
    for (int k = 0; k <= maxdeg; ++k) {
        Integer total = 0;
        for (std::size_t l = 0; l < lambdas.size(); ++l) {
            Rational part = table[k][l] * Rational(standard_tableaux_count(lambdas[l]) << n);
            total += part.get_num();
        }
        rep.expect(total == GradedRepresentation::required_dimension(n, k),
                   "dimension count fails in degree " + std::to_string(k));
    }
    return rep;
}

VerificationReport verify_oracle_D(int n, int maxdeg, long cap) {
    require_weyl_rank(WeylType::D, n);
    VerificationReport rep("oracle_D", {{"n", n}, {"maxdeg", maxdeg}});
    const auto averages = group_average_D(n, maxdeg);
    for (const auto& lambda : partitions_of(n)) {
        const Partition conj = conjugate(lambda);
        TruncatedSeries oracle = rescale_D(lambda, averages.at(lambda));
        rep.expect(oracle == rescale_D(conj, averages.at(conj)),
                   "oracle differs between " + lambda.to_string() + " and its conjugate");
        if (lambda < conj) continue;
        const std::string tag = "lambda " + lambda.to_string();
        TruncatedSeries minus = H_minus_D(lambda).expand(maxdeg);
        rep.expect(oracle == minus, tag + ": group average " + oracle.to_string() + " vs " + minus.to_string());
        TruncatedSeries via_b = oracle_H_D_from_B(lambda, maxdeg, cap);
        rep.expect(via_b == minus, tag + ": restriction route " + via_b.to_string() + " vs " + minus.to_string());
        TruncatedSeries hc = H_D_heckeclifford(lambda).expand(maxdeg);
        TruncatedSeries hc_oracle = (n % 2 && conj != lambda) ? oracle * Rational(1, 2) : oracle;
        rep.expect(hc_oracle == hc, tag + ": Hecke-Clifford " + hc_oracle.to_string() + " vs " + hc.to_string());
    }
    return rep;
}

VerificationReport verify_basic_spin_correspondence(WeylType w, int n) {
    require_weyl_rank(w, n);
    VerificationReport rep("basic_spin_correspondence", {{"type", to_string(w)}, {"n", n}});
    const int r = clifford_rank(w, n);
    const auto beta = clifford_generators(w, n);
    const auto s = simple_reflections(w, n);
    const AlgebraicScalar dim_u(clifford_module_dimension(n));
    const Integer factor = n % 2 ? 2 : 1;

    std::map<SignedPermutation, std::pair<CliffordElement, int>> seen;
    std::deque<SignedPermutation> queue;
    const auto id = SignedPermutation::identity(r);
    seen.emplace(id, std::make_pair(CliffordElement::scalar(r, 1), 0));
    queue.push_back(id);
    while (!queue.empty()) {
        SignedPermutation g = queue.front();
        queue.pop_front();
        const auto [omega, len] = seen.at(g);
        for (int i = 0; i < n; ++i) {
            SignedPermutation h = g * s[i];
            if (seen.count(h)) continue;
            seen.emplace(h, std::make_pair(omega * beta[i], len + 1));
            queue.push_back(h);
        }
    }

    for (const auto& [g, entry] : seen) {
        const auto& [omega, len] = entry;
        Integer tr = g.clifford_trace();
        if (w == WeylType::A) tr /= 2;
        if (len % 2) {
            rep.expect(tr == 0, "odd element " + g.to_string() + " has nonzero Clifford trace");
            continue;
        }
        AlgebraicScalar lhs = dim_u * omega.scalar_part();
        lhs = lhs * lhs;
        rep.expect(lhs == AlgebraicScalar(Integer(factor * tr)),
                   "element " + g.to_string() + ": " + lhs.to_string() + " vs " + Integer(factor * tr).get_str());
    }
    return rep;
}

VerificationReport verify_super_tensor_associativity(int n, int trials, unsigned seed) {
    VerificationReport rep("super_tensor_associativity", {{"n", n}, {"trials", trials}, {"seed", seed}});
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<SubsetMask> mask_dist(0, (SubsetMask(1) << n) - 1);
    auto random_perm = [&] {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return SignedPermutation(p, std::vector<int>(n, 1));
    };
    for (bool odd_group : {false, true}) {
        auto random_element = [&] {
            SuperTensorElement x(n, odd_group);
            const int parity = static_cast<int>(rng() % 2);
            for (int t = 0; t < 3; ++t) {
                SignedPermutation g = random_perm();
                SubsetMask m = mask_dist(rng);
                if ((mask_parity(m) + x.group_parity(g)) % 2 != parity) m ^= 1;
                x.add_term(m, g, coeff(rng));
            }
            return x;
        };
        for (int t = 0; t < trials; ++t) {
            auto a = random_element(), b = random_element(), c = random_element();
            rep.expect((a * b) * c == a * (b * c), "associativity fails for " + a.to_string());
        }
    }
    return rep;
}

}  // namespace spinfake
