#pragma once

// Galilean group calculus on R^m x R^m x R: group law, dilations,
// homogeneous norm, quasi-distance and the associated cylinders.
//
// Conventions: points are (X, Y, t) with X the velocity block and Y the
// position block, both of length m. The dilation exponents are (1, 3, 2)
// and the group law is (Xa+Xb, Ya+Yb+tb*Xa, ta+tb). All operations are
// pure functions on value types.

#include <cmath>
#include <vector>

#include "kfp/numeric.hpp"

namespace kfp {

struct KPoint {
    std::vector<double> x;  // velocity block, length m
    std::vector<double> y;  // position block, length m
    double t = 0.0;

    KPoint() = default;
    KPoint(std::vector<double> x_, std::vector<double> y_, double t_)
        : x(std::move(x_)), y(std::move(y_)), t(t_) {
        require(x.size() == y.size() && !x.empty(),
                "KPoint: x and y must have equal positive length");
        require(all_finite(x) && all_finite(y) && std::isfinite(t),
                "KPoint: entries must be finite");
    }
    // m = 1 convenience
    KPoint(double x_, double y_, double t_) : KPoint({x_}, {y_}, t_) {}

    int dim() const { return static_cast<int>(x.size()); }
};

inline KPoint origin(int m) {
    return KPoint(std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), 0.0);
}

// (Xa, Ya, ta) o (Xb, Yb, tb) = (Xa+Xb, Ya+Yb+tb*Xa, ta+tb)
inline KPoint compose(const KPoint& a, const KPoint& b) {
    require(a.dim() == b.dim(), "compose: dimension mismatch");
    KPoint r = a;
    for (int k = 0; k < a.dim(); ++k) {
        r.x[k] = a.x[k] + b.x[k];
        r.y[k] = a.y[k] + b.y[k] + b.t * a.x[k];
    }
    r.t = a.t + b.t;
    return r;
}

// (X, Y, t)^{-1} = (-X, -Y + tX, -t)
inline KPoint inverse(const KPoint& p) {
    KPoint r = p;
    for (int k = 0; k < p.dim(); ++k) {
        r.x[k] = -p.x[k];
        r.y[k] = -p.y[k] + p.t * p.x[k];
    }
    r.t = -p.t;
    return r;
}

// q^{-1} o p = (Xp-Xq, Yp-Yq-(tp-tq)*Xq, tp-tq)
inline KPoint relative(const KPoint& p, const KPoint& q) {
    require(p.dim() == q.dim(), "relative: dimension mismatch");
    KPoint r = p;
    const double dt = p.t - q.t;
    for (int k = 0; k < p.dim(); ++k) {
        r.x[k] = p.x[k] - q.x[k];
        r.y[k] = p.y[k] - q.y[k] - dt * q.x[k];
    }
    r.t = dt;
    return r;
}

// delta_r(X, Y, t) = (rX, r^3 Y, r^2 t), r > 0
inline KPoint dilate(double r, const KPoint& p) {
    require(r > 0.0, "dilate: scale must be positive");
    KPoint q = p;
    for (int k = 0; k < p.dim(); ++k) {
        q.x[k] = r * p.x[k];
        q.y[k] = r * r * r * p.y[k];
    }
    q.t = r * r * p.t;
    return q;
}

// ||(X, Y, t)|| = |X| + |Y|^{1/3} + |t|^{1/2}, Euclidean block norms.
inline double hom_norm(const KPoint& p) {
    return norm2(p.x) + std::cbrt(norm2(p.y)) + std::sqrt(std::abs(p.t));
}

inline double quasi_distance(const KPoint& p, const KPoint& q) {
    return hom_norm(relative(p, q));
}

// Q_r(center) = center o Q_r with Q_r = {|X|<r, |Y|<r^3, -r^2<t<0}.
struct KCylinder {
    KPoint center;
    double radius = 1.0;

    KCylinder(KPoint c, double r) : center(std::move(c)), radius(r) {
        require(radius > 0.0, "KCylinder: radius must be positive");
    }
};

// Strict inequalities throughout; in particular t = 0 (relative) is outside.
inline bool cylinder_contains(const KCylinder& c, const KPoint& p) {
    const KPoint rel = relative(p, c.center);
    const double r = c.radius;
    return norm2(rel.x) < r && norm2(rel.y) < r * r * r && rel.t > -r * r &&
           rel.t < 0.0;
}

}  // namespace kfp
