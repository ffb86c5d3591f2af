#pragma once

#include <array>
#include <cmath>

#include "clumpdem/vec3.hpp"

namespace clumpdem {

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m {0, 0, 0, 0, 0, 0, 0, 0, 0};

    double operator()(int r, int c) const { return m[3 * r + c]; }
    double& operator()(int r, int c) { return m[3 * r + c]; }

    static Mat3 identity() {
        Mat3 q;
        q(0, 0) = q(1, 1) = q(2, 2) = 1.0;
        return q;
    }

    static Mat3 diagonal(double a, double b, double c) {
        Mat3 q;
        q(0, 0) = a; q(1, 1) = b; q(2, 2) = c;
        return q;
    }

    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 q;
        for (int c = 0; c < 3; ++c) { q(0, c) = r0[c]; q(1, c) = r1[c]; q(2, c) = r2[c]; }
        return q;
    }

    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 q;
        for (int r = 0; r < 3; ++r) { q(r, 0) = c0[r]; q(r, 1) = c1[r]; q(r, 2) = c2[r]; }
        return q;
    }

    Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
    Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

    void set_col(int c, const Vec3& v) {
        (*this)(0, c) = v.x; (*this)(1, c) = v.y; (*this)(2, c) = v.z;
    }

    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) m[i] += o.m[i];
        return *this;
    }
    Mat3& operator-=(const Mat3& o) {
        for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
        return *this;
    }
    Mat3& operator*=(double s) {
        for (double& v : m) v *= s;
        return *this;
    }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator*(Mat3 a, double s) { return a *= s; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(j, i);
    return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
         - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
         + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline double frobenius(const Mat3& a) {
    double s = 0.0;
    for (double v : a.m) s += v * v;
    return std::sqrt(s);
}

inline bool is_finite(const Mat3& a) {
    for (double v : a.m) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

// Solves a x = b by Cramer's rule. Throws on a singular matrix.
Vec3 solve3(const Mat3& a, const Vec3& b);

} // namespace clumpdem
