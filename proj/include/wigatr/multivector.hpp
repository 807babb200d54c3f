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
// Projective geometric algebra over the basis (e0, e1, e2, e3) with the
// degenerate metric e0^2 = 0, ei^2 = 1. Multivectors are dense 16-component
// values indexed by basis blade:
//
//   0:1    1:e0   2:e1   3:e2   4:e3
//   5:e01  6:e02  7:e03  8:e12  9:e13  10:e23
//   11:e012  12:e013  13:e023  14:e123  15:e0123
//
// Conventions fixed by this module (validated by round-trip tests, not
// borrowed from any external library):
//   point(x,y,z)    = e123 + x e023 - y e013 + z e012
//   plane(n,d)      = n1 e1 + n2 e2 + n3 e3 + d e0, the locus {n.x = d}
//   direction(v)    = v1 e01 + v2 e02 + v3 e03
//   translator(t)   = 1 + (1/2)(t1 e01 + t2 e02 + t3 e03)
//   rotor(u,theta)  = cos(t/2) - sin(t/2)(u1 e23 - u2 e13 + u3 e12)
//   dual            = right complement, dual(b) ^ b-complement sign such
//                     that b ^ dual_pair = +e0123
//
// The versor action is the parity-twisted sandwich: even versors act as
// v x ~v, odd versors as v (grade-involuted x) ~v. Under odd versors the
// homogeneous primitives transform projectively: an embedded point maps to
// the embedded image point up to an overall sign that extract_point divides
// away. This is the convention under which all nine grade/e0 linear maps
// used by the network commute with the action.

#ifndef WIGATR_MULTIVECTOR_HPP
#define WIGATR_MULTIVECTOR_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "wigatr/errors.hpp"
#include "wigatr/rng.hpp"
#include "wigatr/vec3.hpp"

namespace wigatr::ga {

inline constexpr int kComponents = 16;

namespace detail {

// Blade bitmasks in component order; bit i set means generator e_i present.
inline constexpr std::array<uint8_t, 16> kBladeMask = {
    0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001,
    0b0110, 0b1010, 0b1100, 0b0111, 0b1011, 0b1101, 0b1110, 0b1111};

constexpr int mask_to_index(uint8_t m) {
    for (int i = 0; i < 16; ++i)
        if (kBladeMask[i] == m) return i;
    return -1;
}

constexpr int popcount4(uint8_t m) {
    return ((m >> 0) & 1) + ((m >> 1) & 1) + ((m >> 2) & 1) + ((m >> 3) & 1);
}

// Sign of sorting the concatenated generator lists of two ascending blades
// into one ascending list (metric not applied).
constexpr int reorder_sign(uint8_t a, uint8_t b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += popcount4(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

struct ProductTables {
    // result[i][j]: component index of blade_i * blade_j; sign 0 kills it.
    int geom_idx[16][16] = {};
    int geom_sign[16][16] = {};
    int outer_idx[16][16] = {};
    int outer_sign[16][16] = {};
};

constexpr ProductTables make_tables() {
    ProductTables t{};
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            uint8_t a = kBladeMask[i], b = kBladeMask[j];
            uint8_t common = a & b;
            int idx = mask_to_index(a ^ b);
            // Geometric product: shared e0 factor squares to zero.
            if (common & 1u) {
                t.geom_idx[i][j] = idx;
                t.geom_sign[i][j] = 0;
            } else {
                t.geom_idx[i][j] = idx;
                t.geom_sign[i][j] = reorder_sign(a, b);
            }
            // Outer product: any shared generator kills the term.
            if (common != 0) {
                t.outer_idx[i][j] = idx;
                t.outer_sign[i][j] = 0;
            } else {
                t.outer_idx[i][j] = idx;
                t.outer_sign[i][j] = reorder_sign(a, b);
            }
        }
    }
    return t;
}

inline constexpr ProductTables kTables = make_tables();

constexpr std::array<int, 16> make_grades() {
    std::array<int, 16> g{};
    for (int i = 0; i < 16; ++i) g[i] = popcount4(kBladeMask[i]);
    return g;
}

inline constexpr std::array<int, 16> kGrade = make_grades();

constexpr std::array<int, 16> make_reverse_signs() {
    std::array<int, 16> s{};
    for (int i = 0; i < 16; ++i) {
        int k = kGrade[i];
        s[i] = ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1;
    }
    return s;
}

inline constexpr std::array<int, 16> kReverseSign = make_reverse_signs();

constexpr std::array<int, 16> make_involute_signs() {
    std::array<int, 16> s{};
    for (int i = 0; i < 16; ++i) s[i] = (kGrade[i] % 2 == 0) ? 1 : -1;
    return s;
}

inline constexpr std::array<int, 16> kInvoluteSign = make_involute_signs();

struct DualTables {
    int idx[16] = {};
    int sign[16] = {};
    int inv_idx[16] = {};
    int inv_sign[16] = {};
};

constexpr DualTables make_dual_tables() {
    DualTables d{};
    for (int i = 0; i < 16; ++i) {
        uint8_t m = kBladeMask[i];
        uint8_t c = static_cast<uint8_t>(~m & 0xF);
        int j = mask_to_index(c);
        // Right complement: blade ^ dual(blade) = +e0123.
        d.idx[i] = j;
        d.sign[i] = reorder_sign(m, c);
        d.inv_idx[i] = j;
        d.inv_sign[i] = reorder_sign(c, m);
    }
    return d;
}

inline constexpr DualTables kDual = make_dual_tables();

// Blades free of e0; the invariant pairing runs over exactly these.
inline constexpr std::array<int, 8> kBodyBlades = {0, 2, 3, 4, 8, 9, 10, 14};

} // namespace detail

inline constexpr std::array<const char*, 16> kBladeName = {
    "1",    "e0",   "e1",   "e2",   "e3",   "e01",  "e02",  "e03",
    "e12",  "e13",  "e23",  "e012", "e013", "e023", "e123", "e0123"};

inline int blade_grade(int i) { return detail::kGrade[i]; }

struct Multivector {
    std::array<double, kComponents> c{};

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    Multivector operator+(const Multivector& o) const {
        Multivector r;
        for (int i = 0; i < kComponents; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Multivector operator-(const Multivector& o) const {
        Multivector r;
        for (int i = 0; i < kComponents; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Multivector operator*(double s) const {
        Multivector r;
        for (int i = 0; i < kComponents; ++i) r.c[i] = c[i] * s;
        return r;
    }
    Multivector operator-() const { return *this * -1.0; }
    Multivector& operator+=(const Multivector& o) {
        for (int i = 0; i < kComponents; ++i) c[i] += o.c[i];
        return *this;
    }

    static Multivector blade(int i, double v = 1.0) {
        Multivector r;
        r.c[i] = v;
        return r;
    }

    double norm() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return std::sqrt(s);
    }
};

inline Multivector operator*(double s, const Multivector& a) { return a * s; }

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i) {
        double ai = a.c[i];
        if (ai == 0.0) continue;
        for (int j = 0; j < kComponents; ++j) {
            int s = detail::kTables.geom_sign[i][j];
            if (s == 0) continue;
            r.c[detail::kTables.geom_idx[i][j]] += s * ai * b.c[j];
        }
    }
    return r;
}

inline Multivector outer_product(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i) {
        double ai = a.c[i];
        if (ai == 0.0) continue;
        for (int j = 0; j < kComponents; ++j) {
            int s = detail::kTables.outer_sign[i][j];
            if (s == 0) continue;
            r.c[detail::kTables.outer_idx[i][j]] += s * ai * b.c[j];
        }
    }
    return r;
}

// E(3)-invariant scalar pairing. Every e0-containing blade pairs to zero
// under the degenerate metric; on the remaining blades <a ~b>_0 reduces to
// a plain dot product.
inline double inner_product(const Multivector& a, const Multivector& b) {
    double s = 0.0;
    for (int i : detail::kBodyBlades) s += a.c[i] * b.c[i];
    return s;
}

inline Multivector grade_projection(const Multivector& a, int k) {
    if (k < 0 || k > 4) throw ArgumentError("grade_projection: grade must be in 0..4, got " + std::to_string(k));
    Multivector r;
    for (int i = 0; i < kComponents; ++i)
        if (detail::kGrade[i] == k) r.c[i] = a.c[i];
    return r;
}

inline Multivector reverse(const Multivector& a) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i) r.c[i] = detail::kReverseSign[i] * a.c[i];
    return r;
}

inline Multivector involute(const Multivector& a) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i) r.c[i] = detail::kInvoluteSign[i] * a.c[i];
    return r;
}

inline Multivector dual(const Multivector& a) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i)
        r.c[detail::kDual.idx[i]] += detail::kDual.sign[i] * a.c[i];
    return r;
}

inline Multivector dual_inverse(const Multivector& a) {
    Multivector r;
    for (int i = 0; i < kComponents; ++i)
        r.c[detail::kDual.inv_idx[i]] += detail::kDual.inv_sign[i] * a.c[i];
    return r;
}

inline Multivector join(const Multivector& a, const Multivector& b) {
    return dual_inverse(outer_product(dual(a), dual(b)));
}

// ---------------------------------------------------------------------------
// Versors

struct Versor {
    Multivector mv;
    bool odd = false;

    Versor reversed() const { return {reverse(mv), odd}; }
};

// Normalizes so that v ~v has scalar part 1.
inline Versor make_versor(const Multivector& m, bool odd) {
    Multivector vv = geometric_product(m, reverse(m));
    double s = vv.c[0];
    if (!(s > 1e-30)) throw NumericError("make_versor: versor is not normalizable (v ~v scalar part " + std::to_string(s) + ")");
    return {m * (1.0 / std::sqrt(s)), odd};
}

inline Versor compose(const Versor& v1, const Versor& v2) {
    return make_versor(geometric_product(v1.mv, v2.mv), v1.odd != v2.odd);
}

// Parity-twisted sandwich action (see header comment).
inline Multivector sandwich(const Versor& v, const Multivector& a) {
    const Multivector& arg = a;
    Multivector x = v.odd ? involute(arg) : arg;
    return geometric_product(geometric_product(v.mv, x), reverse(v.mv));
}

inline Versor rotor_from_axis_angle(const Vec3& axis, double angle) {
    Vec3 u = normalized(axis);
    double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    Multivector m;
    m.c[0] = c;
    m.c[10] = -s * u.x; // e23
    m.c[9] = s * u.y;   // e13
    m.c[8] = -s * u.z;  // e12
    return make_versor(m, false);
}

inline Versor translator_from_vector(const Vec3& t) {
    Multivector m;
    m.c[0] = 1.0;
    m.c[5] = 0.5 * t.x; // e01
    m.c[6] = 0.5 * t.y; // e02
    m.c[7] = 0.5 * t.z; // e03
    return {m, false};  // exactly unit already
}

// Mirror across the plane {x : dot(n, x) = d}.
inline Versor reflector_from_plane(const Vec3& n, double d) {
    Vec3 u = normalized(n);
    Multivector m;
    m.c[1] = d;
    m.c[2] = u.x;
    m.c[3] = u.y;
    m.c[4] = u.z;
    return make_versor(m, true);
}

// ---------------------------------------------------------------------------
// Embeddings of geometric primitives

inline Multivector embed_scalar(double s) { return Multivector::blade(0, s); }

inline Multivector embed_point(const Vec3& p) {
    Multivector m;
    m.c[14] = 1.0;  // e123
    m.c[13] = p.x;  // e023
    m.c[12] = -p.y; // e013
    m.c[11] = p.z;  // e012
    return m;
}

inline Vec3 extract_point(const Multivector& m) {
    double w = m.c[14];
    if (std::abs(w) < 1e-30) throw NumericError("extract_point: degenerate point (zero e123 component)");
    return {m.c[13] / w, -m.c[12] / w, m.c[11] / w};
}

inline Multivector embed_plane(const Vec3& n, double d) {
    double len = norm(n);
    if (len < 1e-15) throw ArgumentError("embed_plane: zero normal");
    Vec3 u = {n.x / len, n.y / len, n.z / len};
    Multivector m;
    m.c[1] = d;
    m.c[2] = u.x;
    m.c[3] = u.y;
    m.c[4] = u.z;
    return m;
}

// Returns (n, d) with n scaled as stored (callers normalize if needed).
inline void extract_plane(const Multivector& m, Vec3& n, double& d) {
    n = {m.c[2], m.c[3], m.c[4]};
    d = m.c[1];
}

inline Multivector embed_direction(const Vec3& v) {
    Multivector m;
    m.c[5] = v.x; // e01
    m.c[6] = v.y; // e02
    m.c[7] = v.z; // e03
    return m;
}

inline Vec3 extract_direction(const Multivector& m) { return {m.c[5], m.c[6], m.c[7]}; }

// Line through two points, as produced by join(point, point): the e23/e13/e12
// components carry the direction (axis convention of the rotor generators)
// and the e01/e02/e03 components carry the moment.
inline Multivector line_through_points(const Vec3& p, const Vec3& q) {
    return join(embed_point(p), embed_point(q));
}

// ---------------------------------------------------------------------------
// Random versors for property tests and augmentation

struct RandomVersorOptions {
    double translation_range = 3.0; // each component uniform in +-range
    double reflection_probability = 0.5;
};

inline Versor rotor_from_quaternion(double w, double x, double y, double z) {
    Multivector m;
    m.c[0] = w;
    m.c[10] = -x; // e23
    m.c[9] = y;   // e13
    m.c[8] = -z;  // e12
    return make_versor(m, false);
}

// Returns the versor together with the matching affine map built from the
// same draw parameters along an independent textbook route (quaternion
// matrix, Householder mirror), so tests can compare the two actions.
inline Versor random_versor(RandomStream& rng, Affine3* matrix_out = nullptr,
                            const RandomVersorOptions& opt = {}) {
    // Uniform rotation from a uniform unit quaternion.
    double q[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& v : q) {
            v = rng.normal();
            n2 += v * v;
        }
    } while (n2 < 1e-12);
    double inv = 1.0 / std::sqrt(n2);
    double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;

    Versor v = rotor_from_quaternion(w, x, y, z);
    Affine3 m;
    m.a[0][0] = 1 - 2 * (y * y + z * z); m.a[0][1] = 2 * (x * y - w * z);     m.a[0][2] = 2 * (x * z + w * y);
    m.a[1][0] = 2 * (x * y + w * z);     m.a[1][1] = 1 - 2 * (x * x + z * z); m.a[1][2] = 2 * (y * z - w * x);
    m.a[2][0] = 2 * (x * z - w * y);     m.a[2][1] = 2 * (y * z + w * x);     m.a[2][2] = 1 - 2 * (x * x + y * y);

    if (rng.uniform() < opt.reflection_probability) {
        Vec3 n = rng.unit_vector();
        double d = rng.uniform(-1.0, 1.0);
        v = compose(reflector_from_plane(n, d), v);
        m = Affine3::reflection(n, d).compose(m);
    }
    Vec3 t = rng.in_box({-opt.translation_range, -opt.translation_range, -opt.translation_range},
                        {opt.translation_range, opt.translation_range, opt.translation_range});
    v = compose(translator_from_vector(t), v);
    m = Affine3::translation(t).compose(m);
    if (matrix_out) *matrix_out = m;
    return v;
}

} // namespace wigatr::ga

#endif
