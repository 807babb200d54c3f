// SPDX-License-Identifier: Apache-2.0
//
// wigatr - geometric algebra transformer surrogates for wireless channels
// Copyright (C) 2026 The wigatr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Test-only reference implementations, kept deliberately independent of the
// library code paths they check.

#ifndef WIGATR_TESTS_ORACLES_HPP
#define WIGATR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace test_oracle {

// Symbolic basis-blade product over (e0,e1,e2,e3) with e0^2=0, ei^2=1.
// Blades are ascending generator lists; the product sorts the concatenated
// list by adjacent swaps (each swap flips the sign) and then cancels equal
// neighbours through the metric.
struct BladeProduct {
    int sign = 1;                // 0 when the product vanishes
    std::vector<int> generators; // canonical ascending list
};

inline BladeProduct blade_product(std::vector<int> a, const std::vector<int>& b) {
    BladeProduct out;
    a.insert(a.end(), b.begin(), b.end());
    // bubble sort with sign bookkeeping
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                out.sign = -out.sign;
                moved = true;
            }
        }
    }
    // metric: equal neighbours square away
    for (size_t i = 0; i + 1 < a.size();) {
        if (a[i] == a[i + 1]) {
            if (a[i] == 0) {
                out.sign = 0;
                out.generators.clear();
                return out;
            }
            a.erase(a.begin() + i, a.begin() + i + 2);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    out.generators = a;
    return out;
}

// Component index of a canonical generator list in the fixed 16-blade order.
inline int blade_index(const std::vector<int>& gens) {
    static const std::vector<std::vector<int>> order = {
        {},        {0},       {1},       {2},       {3},       {0, 1},
        {0, 2},    {0, 3},    {1, 2},    {1, 3},    {2, 3},    {0, 1, 2},
        {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == gens) return static_cast<int>(i);
    return -1;
}

inline std::vector<int> blade_generators(int index) {
    static const std::vector<std::vector<int>> order = {
        {},        {0},       {1},       {2},       {3},       {0, 1},
        {0, 2},    {0, 3},    {1, 2},    {1, 3},    {2, 3},    {0, 1, 2},
        {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
    return order[static_cast<size_t>(index)];
}

} // namespace test_oracle

#endif
