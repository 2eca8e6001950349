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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spinfake {

/// Largest partition size accepted anywhere in the library.
inline constexpr int kMaxPartitionSize = 64;

/**
 * A partition: a weakly decreasing sequence of positive integers.
 *
 * Construction validates the invariant and the size bound; the stored parts
 * never contain trailing zeros. The empty partition is the unique partition
 * of 0 and serializes as "-".
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Parses "4,3,1" (parts in any order are rejected) or "-" for empty.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based), or 0 past the end.
    int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Number of parts equal to k.
    int multiplicity(int k) const noexcept;

    std::string to_string() const;

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const noexcept {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// One cell of a Young diagram with its hook length and content.
struct CellStatistic {
    int row = 0;      // 1-based
    int column = 0;   // 1-based
    int hook = 0;
    int content = 0;  // column - row

    bool operator==(const CellStatistic&) const = default;
};

struct PartitionFlags {
    bool odd_parts = false;
    bool even_parts = false;
    bool strict_odd = false;
    bool symmetric = false;
    bool odd_length = false;
    bool even_length = false;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (cached table, computed by Euler's recurrence).
long long partition_count(int n);

/// n(lambda) = sum (i-1) lambda_i.
long long n_stat(const Partition& lambda);

/// Cells in row-major order.
std::vector<CellStatistic> hooks_and_contents(const Partition& lambda);

Partition conjugate(const Partition& lambda);

PartitionFlags classify(const Partition& lambda);

/// Order of the centralizer in S_n of a permutation of cycle type lambda.
mpz_class z_order(const Partition& lambda);

/// Multiset union of parts.
Partition partition_union(const Partition& alpha, const Partition& beta);

/// True iff the diagram of mu is contained in that of lambda.
bool contains(const Partition& lambda, const Partition& mu);

/// Every part odd (vacuously true for the empty partition).
bool all_parts_odd(const Partition& lambda);
/// Every part even (vacuously true for the empty partition).
bool all_parts_even(const Partition& lambda);
/// Odd parts, no repeats.
bool is_strict_odd(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

/// Parts of lambda that are odd / even, as partitions.
Partition odd_part(const Partition& lambda);
Partition even_part(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook length formula).
mpz_class standard_tableaux_count(const Partition& lambda);

mpz_class factorial(int n);

}  // namespace spinfake
