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
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace spinfake::detail {

/// Laplace expansion along rows, memoized on the set of remaining columns.
/// Ring needs +=, -=, *, and is_zero().
template <class Ring>
Ring determinant(const std::vector<std::vector<Ring>>& m, const Ring& zero, const Ring& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    if (n > 30) throw std::invalid_argument("determinant: matrix too large");
    std::unordered_map<std::uint32_t, Ring> memo;
    std::function<Ring(int, std::uint32_t)> rec = [&](int row, std::uint32_t cols) -> Ring {
        if (row == n) return one;
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Ring acc = zero;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!m[row][j].is_zero()) {
                Ring minor = rec(row + 1, cols & ~(1u << j));
                if (!minor.is_zero()) {
                    Ring term = m[row][j] * minor;
                    if (pos % 2) acc -= term;
                    else acc += term;
                }
            }
            ++pos;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(0, n == 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace spinfake::detail
