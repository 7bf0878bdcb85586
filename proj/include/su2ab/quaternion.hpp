#pragma once

#include <cmath>
#include <string>

namespace su2ab {

// w + x i + y j + z k; unit quaternions model SU(2) via
// q <-> [[w + i x, y + i z], [-y + i z, w - i x]], so Tr = 2w.
template <class T>
struct BasicQuat {
    T w = 1, x = 0, y = 0, z = 0;

    BasicQuat operator*(const BasicQuat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
    }
    BasicQuat operator+(const BasicQuat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    BasicQuat operator-(const BasicQuat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    BasicQuat scaled(T s) const { return {w * s, x * s, y * s, z * s}; }
    BasicQuat conj() const { return {w, -x, -y, -z}; }
    T norm2() const { return w * w + x * x + y * y + z * z; }
    T norm() const { return std::sqrt(norm2()); }
    BasicQuat normalized() const { return scaled(T(1) / norm()); }
    BasicQuat inverse() const { return conj().scaled(T(1) / norm2()); }
    T trace() const { return 2 * w; }

    // exp(2 pi i t) on the i-axis
    static BasicQuat from_turn(T t) {
        const T a = 2 * T(M_PI) * t;
        return {std::cos(a), std::sin(a), 0, 0};
    }
    template <class U>
    BasicQuat<U> as() const {
        return {U(w), U(x), U(y), U(z)};
    }
};

using Quat = BasicQuat<long double>;

template <class T>
T distance(const BasicQuat<T>& a, const BasicQuat<T>& b) {
    return (a - b).norm();
}

template <class T>
BasicQuat<T> commutator(const BasicQuat<T>& a, const BasicQuat<T>& b) {
    return a * b * a.inverse() * b.inverse();
}

// Unit quaternion r with r u r^-1 = v for unit pure quaternions u, v.
template <class T>
BasicQuat<T> rotation_between(const BasicQuat<T>& u, const BasicQuat<T>& v) {
    // 1 - v u = 1 + u.v + u x v
    BasicQuat<T> q = BasicQuat<T>{1, 0, 0, 0} - v * u;
    if (q.norm() > T(1e-9)) return q.normalized();
    // u = -v: rotate by pi about any axis orthogonal to u
    BasicQuat<T> axis = std::abs(u.x) < T(0.9) ? BasicQuat<T>{0, 1, 0, 0} : BasicQuat<T>{0, 0, 1, 0};
    // remove the component along u
    T d = axis.x * u.x + axis.y * u.y + axis.z * u.z;
    axis = axis - BasicQuat<T>{0, u.x, u.y, u.z}.scaled(d);
    axis.w = 0;
    return axis.normalized();
}

}  // namespace su2ab
