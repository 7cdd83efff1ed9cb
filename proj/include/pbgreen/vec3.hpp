#ifndef PBGREEN_VEC3_HPP
#define PBGREEN_VEC3_HPP

#include <cmath>
#include <complex>

namespace pbgreen {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Complex 3-vector, component-wise semantics match Vec3.
struct CVec3 {
    Complex x{}, y{}, z{};

    CVec3() = default;
    CVec3(Complex cx, Complex cy, Complex cz) : x(cx), y(cy), z(cz) {}
    CVec3(const Vec3& re, const Vec3& im)
        : x(re.x, im.x), y(re.y, im.y), z(re.z, im.z) {}

    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
    Vec3 imag() const { return {x.imag(), y.imag(), z.imag()}; }

    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
};

// Bilinear dot product (no conjugation).
inline Complex dot(const CVec3& a, const CVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace pbgreen

#endif
