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

#ifndef WIGATR_RNG_HPP
#define WIGATR_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "wigatr/vec3.hpp"

namespace wigatr {

// Deterministic random stream. std::mt19937_64 is bit-stable across
// platforms; the variate transforms below are our own so outputs do not
// depend on the standard library's distribution implementations.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t raw() { return eng_(); }

    uint64_t seed() const { return seed_; }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Modulo bias is negligible for our small n.
    uint64_t uniform_index(uint64_t n) { return eng_() % n; }

    // Standard normal via Box-Muller (two uniforms per variate, no cache).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Vec3 unit_vector() {
        // Marsaglia: uniform on the sphere.
        while (true) {
            double a = uniform(-1.0, 1.0), b = uniform(-1.0, 1.0);
            double s = a * a + b * b;
            if (s >= 1.0 || s == 0.0) continue;
            double r = 2.0 * std::sqrt(1.0 - s);
            return {a * r, b * r, 1.0 - 2.0 * s};
        }
    }

    Vec3 in_box(const Vec3& lo, const Vec3& hi) {
        return {uniform(lo.x, hi.x), uniform(lo.y, hi.y), uniform(lo.z, hi.z)};
    }

    // Independent child stream derived from the construction seed (not the
    // stream position), so (seed, salt) alone fixes the child sequence.
    RandomStream child(uint64_t salt) const {
        uint64_t z = seed_ + (salt + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return RandomStream(z ^ (z >> 31));
    }

  private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace wigatr

#endif
