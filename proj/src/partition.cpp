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

#include "spinfake/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinfake {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        total += parts_[i];
        if (total > kMaxPartitionSize)
            throw std::invalid_argument("partition size exceeds " +
                                        std::to_string(kMaxPartitionSize));
    }
    size_ = static_cast<int>(total);
}

Partition Partition::parse(std::string_view text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    if (n > kMaxPartitionSize) throw std::invalid_argument("partitions_of: n too large");
    std::vector<Partition> out;
    std::vector<int> current;
    // Depth-first with largest first part first gives reverse lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long long partition_count(int n) {
    static const auto table = [] {
        std::array<long long, kMaxPartitionSize + 1> p{};
        p[0] = 1;
        for (int m = 1; m <= kMaxPartitionSize; ++m) {
            long long acc = 0;
            for (int k = 1;; ++k) {
                int g1 = k * (3 * k - 1) / 2;
                int g2 = k * (3 * k + 1) / 2;
                if (g1 > m) break;
                long long sign = (k % 2) ? 1 : -1;
                acc += sign * p[m - g1];
                if (g2 <= m) acc += sign * p[m - g2];
            }
            p[m] = acc;
        }
        return p;
    }();
    if (n < 0 || n > kMaxPartitionSize)
        throw std::invalid_argument("partition_count: n out of range");
    return table[n];
}

long long n_stat(const Partition& lambda) {
    long long s = 0;
    for (int i = 0; i < lambda.length(); ++i) s += static_cast<long long>(i) * lambda[i];
    return s;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    int cols = lambda.empty() ? 0 : lambda[0];
    parts.reserve(cols);
    for (int j = 1; j <= cols; ++j) {
        int c = 0;
        for (int p : lambda.parts())
            if (p >= j) ++c;
        parts.push_back(c);
    }
    return Partition(std::move(parts));
}

std::vector<CellStatistic> hooks_and_contents(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<CellStatistic> cells;
    cells.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            int arm = lambda[i - 1] - j;
            int leg = conj[j - 1] - i;
            cells.push_back({i, j, arm + leg + 1, j - i});
        }
    }
    return cells;
}

bool all_parts_odd(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                       [](int p) { return p % 2 == 1; });
}

bool all_parts_even(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                       [](int p) { return p % 2 == 0; });
}

bool is_strict_odd(const Partition& lambda) {
    const auto& p = lambda.parts();
    return all_parts_odd(lambda) && std::adjacent_find(p.begin(), p.end()) == p.end();
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

PartitionFlags classify(const Partition& lambda) {
    PartitionFlags f;
    f.odd_parts = all_parts_odd(lambda);
    f.even_parts = all_parts_even(lambda);
    f.strict_odd = is_strict_odd(lambda);
    f.symmetric = is_self_conjugate(lambda);
    f.odd_length = lambda.length() % 2 == 1;
    f.even_length = !f.odd_length;
    return f;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class z_order(const Partition& lambda) {
    mpz_class z = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p[i]),
                      static_cast<unsigned long>(m));
        z *= power * factorial(m);
        i = j;
    }
    return z;
}

Partition partition_union(const Partition& alpha, const Partition& beta) {
    std::vector<int> parts(alpha.parts());
    parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

Partition odd_part(const Partition& lambda) {
    std::vector<int> out;
    for (int p : lambda.parts())
        if (p % 2) out.push_back(p);
    return Partition(std::move(out));
}

Partition even_part(const Partition& lambda) {
    std::vector<int> out;
    for (int p : lambda.parts())
        if (p % 2 == 0) out.push_back(p);
    return Partition(std::move(out));
}

mpz_class standard_tableaux_count(const Partition& lambda) {
    mpz_class hooks = 1;
    for (const auto& c : hooks_and_contents(lambda)) hooks *= c.hook;
    mpz_class f = factorial(lambda.size());
    return f / hooks;
}

}  // namespace spinfake
