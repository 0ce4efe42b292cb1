#pragma once

#include <vector>

#include "annulus/rng.hpp"

namespace annulus {

// Position on the circle of unit circumference, value in [0, 1).
struct CircPosition {
    double value = 0.0;
};

// Point on S^t, the t-dimensional unit sphere embedded in R^(t+1).
struct SpherePosition {
    int dim_t = 1;
    std::vector<double> coords;  // size dim_t + 1, unit norm
};

enum class Metric { circle_geodesic, sphere_chord };

// Annulus [r_inner, r_outer] under the given metric.
struct AnnulusSpec {
    double r_inner = 0.0;
    double r_outer = 0.0;
    Metric metric = Metric::circle_geodesic;
};

// min(|x-y|, 1-|x-y|): geodesic distance on the unit-circumference circle.
// This exact expression is shared by the generators and the naive oracle.
inline double circle_distance(double x, double y) {
    double diff = x - y;
    if (diff < 0.0) diff = -diff;
    return diff <= 0.5 ? diff : 1.0 - diff;
}

inline double circle_distance(CircPosition x, CircPosition y) {
    return circle_distance(x.value, y.value);
}

// Euclidean (chord) distance between points given as coordinate arrays.
inline double chord_distance(const double* u, const double* v, int ambient_dim) {
    double sum = 0.0;
    for (int i = 0; i < ambient_dim; ++i) {
        double d = u[i] - v[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double chord_distance(const SpherePosition& u, const SpherePosition& v);

CircPosition sample_circle(RandomStream& rng);
SpherePosition sample_sphere(int t, RandomStream& rng);

// Samples a point on S^t directly into out[0..t], for bulk generation.
void sample_sphere_coords(int t, RandomStream& rng, double* out);

// |S^t| = (t+1) pi^((t+1)/2) / Gamma((t+3)/2).
double surface_area(int t);

// Volume of the t-dimensional unit ball, pi^(t/2) / Gamma(t/2+1). Equals the
// small-radius cap constant: |B_t(u,r)| -> unit_ball_volume(t) * r^t.
double unit_ball_volume(int t);

// psi(t) = sqrt(pi) (t+1) Gamma((t+2)/2) / Gamma((t+3)/2), the isolated-vertex
// threshold on a^t - b^t. Identical to surface_area(t) / unit_ball_volume(t).
double psi(int t);

// Normalized area of the spherical cap {x in S^t : |x-u| <= r}, r in [0, 2].
double cap_fraction(int t, double r);

// cap_fraction(t, r2) - cap_fraction(t, r1).
double annulus_fraction(int t, double r1, double r2);

// Normalized area of the intersection of two caps with chord radii r1, r2
// whose centers are chord distance ell apart.
double lens_fraction(int t, double r1, double r2, double ell);

// Chord length on the unit-radius circle subtended by a geodesic distance g
// on the unit-circumference circle (angle 2*pi*g), and its inverse.
inline double chord_from_circle_geodesic(double g) { return 2.0 * std::sin(M_PI * g); }
inline double circle_geodesic_from_chord(double c) { return std::asin(c / 2.0) / M_PI; }

// Scaled-parameter translation between the two t=1 conventions: a VRG window
// parameter x (geodesic, unit circumference, units of log n/n) corresponds
// asymptotically to the RAG_1 chord parameter 2*pi*x, preserving the annulus
// measure ratio c_1 (a'-b') / |S^1| = 2 (a-b).
inline double rag1_param_from_vrg_param(double x) { return 2.0 * M_PI * x; }

namespace detail {

// Adaptive Gauss-Kronrod (G7-K15) quadrature.
double integrate_gk(double (*f)(double, const void*), const void* ctx, double lo, double hi,
                    double rel_tol, double abs_tol);

// Normalized cap area of S^m by angular radius theta in [0, pi].
double cap_fraction_angle(int m, double theta);

// Fraction of S^m lying in the half-space <y, e> >= s, s unrestricted
// (clamped); closed forms for m <= 3, quadrature above.
double sphere_halfspace_fraction(int m, double s);

}  // namespace detail

}  // namespace annulus
