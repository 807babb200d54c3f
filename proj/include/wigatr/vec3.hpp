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

#ifndef WIGATR_VEC3_HPP
#define WIGATR_VEC3_HPP

#include <cmath>

namespace wigatr {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

// Column-major-free 3x4 rigid/affine transform: y = A x + t.
struct Affine3 {
    double a[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3 t;

    Vec3 apply_point(const Vec3& p) const {
        return {a[0][0] * p.x + a[0][1] * p.y + a[0][2] * p.z + t.x,
                a[1][0] * p.x + a[1][1] * p.y + a[1][2] * p.z + t.y,
                a[2][0] * p.x + a[2][1] * p.y + a[2][2] * p.z + t.z};
    }

    Vec3 apply_vector(const Vec3& v) const {
        return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
                a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
                a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
    }

    double det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    static Affine3 identity() { return {}; }

    static Affine3 rotation_axis_angle(const Vec3& axis, double angle) {
        Vec3 u = normalized(axis);
        double c = std::cos(angle), s = std::sin(angle), k = 1.0 - c;
        Affine3 m;
        m.a[0][0] = c + u.x * u.x * k;
        m.a[0][1] = u.x * u.y * k - u.z * s;
        m.a[0][2] = u.x * u.z * k + u.y * s;
        m.a[1][0] = u.y * u.x * k + u.z * s;
        m.a[1][1] = c + u.y * u.y * k;
        m.a[1][2] = u.y * u.z * k - u.x * s;
        m.a[2][0] = u.z * u.x * k - u.y * s;
        m.a[2][1] = u.z * u.y * k + u.x * s;
        m.a[2][2] = c + u.z * u.z * k;
        return m;
    }

    static Affine3 translation(const Vec3& t) {
        Affine3 m;
        m.t = t;
        return m;
    }

    // Mirror across the plane {x : dot(n, x) = d}, n unit.
    static Affine3 reflection(const Vec3& n, double d) {
        Affine3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.a[i][j] = (i == j ? 1.0 : 0.0) - 2.0 * n[i] * n[j];
        m.t = 2.0 * d * n;
        return m;
    }

    // this ∘ other (apply other first).
    Affine3 compose(const Affine3& o) const {
        Affine3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m.a[i][j] = 0.0;
                for (int k = 0; k < 3; ++k) m.a[i][j] += a[i][k] * o.a[k][j];
            }
        m.t = apply_point(o.t);
        return m;
    }
};

} // namespace wigatr

#endif
