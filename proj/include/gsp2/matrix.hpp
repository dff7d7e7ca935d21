#pragma once

#include <array>
#include <stdexcept>

namespace gsp2 {

template <class T>
struct Mat2 {
    std::array<T, 4> e;  // row-major: e[0] e[1] / e[2] e[3]

    Mat2() = default;
    Mat2(T a, T b, T c, T d) : e{a, b, c, d} {}

    T& at(int i, int j) { return e[2 * i + j]; }
    const T& at(int i, int j) const { return e[2 * i + j]; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                    e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]);
    }
    Mat2 operator+(const Mat2& o) const {
        return Mat2(e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]);
    }
    Mat2 operator-(const Mat2& o) const {
        return Mat2(e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]);
    }
    bool operator==(const Mat2& o) const { return e == o.e; }

    T det() const { return e[0] * e[3] - e[1] * e[2]; }
    T tr() const { return e[0] + e[3]; }

    Mat2 scaled(const T& s) const { return Mat2(s * e[0], s * e[1], s * e[2], s * e[3]); }
};

template <class T>
struct Mat4 {
    std::array<T, 16> e;

    T& at(int i, int j) { return e[4 * i + j]; }
    const T& at(int i, int j) const { return e[4 * i + j]; }

    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                T s = at(i, 0) * o.at(0, j);
                for (int k = 1; k < 4; ++k) s = s + at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    Mat4 operator-(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    bool operator==(const Mat4& o) const { return e == o.e; }

    Mat4 transpose() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
        return r;
    }
};

}  // namespace gsp2
