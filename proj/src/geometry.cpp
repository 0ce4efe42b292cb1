#include "annulus/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kAngleTol = 1e-12;  // disjoint/containment classification

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }

// Angular radius of a cap of chord radius r: cos(theta) = 1 - r^2/2.
double angle_from_chord(double r) { return std::acos(clamp_cos(1.0 - 0.5 * r * r)); }

void require_dim(int t) {
    if (t < 1) throw DimensionError("sphere dimension t must be >= 1");
}

}  // namespace

double chord_distance(const SpherePosition& u, const SpherePosition& v) {
    if (u.dim_t != v.dim_t || u.coords.size() != v.coords.size())
        throw DimensionError("chord_distance: dimension mismatch");
    return chord_distance(u.coords.data(), v.coords.data(), static_cast<int>(u.coords.size()));
}

CircPosition sample_circle(RandomStream& rng) { return CircPosition{rng.next_double()}; }

void sample_sphere_coords(int t, RandomStream& rng, double* out) {
    require_dim(t);
    const int dim = t + 1;
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (int i = 0; i < dim; ++i) {
            out[i] = rng.next_normal();
            norm_sq += out[i] * out[i];
        }
    } while (norm_sq < 1e-24);
    double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < dim; ++i) out[i] *= inv;
}

SpherePosition sample_sphere(int t, RandomStream& rng) {
    require_dim(t);
    SpherePosition p;
    p.dim_t = t;
    p.coords.resize(static_cast<size_t>(t) + 1);
    sample_sphere_coords(t, rng, p.coords.data());
    return p;
}

double surface_area(int t) {
    require_dim(t);
    double half = 0.5 * (t + 1);
    return (t + 1) * std::exp(half * std::log(M_PI) - std::lgamma(half + 1.0));
}

double unit_ball_volume(int t) {
    require_dim(t);
    return std::exp(0.5 * t * std::log(M_PI) - std::lgamma(0.5 * t + 1.0));
}

double psi(int t) {
    require_dim(t);
    return std::sqrt(M_PI) * (t + 1) *
           std::exp(std::lgamma(0.5 * (t + 2)) - std::lgamma(0.5 * (t + 3)));
}

namespace detail {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(double (*f)(double, const void*), const void* ctx, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f_center = f(center, ctx);
    double kronrod = kWgk[7] * f_center;
    double gauss = kWg[3] * f_center;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double sum = f(center - dx, ctx) + f(center + dx, ctx);
        kronrod += kWgk[i] * sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * sum;
    }
    return {kronrod * half, std::abs(kronrod - gauss) * half};
}

double integrate_rec(double (*f)(double, const void*), const void* ctx, double lo, double hi,
                     double rel_tol, double abs_tol, int depth) {
    GkResult r = gk15(f, ctx, lo, hi);
    if (depth >= 48 || r.error <= abs_tol + rel_tol * std::abs(r.value)) return r.value;
    const double mid = 0.5 * (lo + hi);
    return integrate_rec(f, ctx, lo, mid, rel_tol, 0.5 * abs_tol, depth + 1) +
           integrate_rec(f, ctx, mid, hi, rel_tol, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double integrate_gk(double (*f)(double, const void*), const void* ctx, double lo, double hi,
                    double rel_tol, double abs_tol) {
    if (hi <= lo) return 0.0;
    return integrate_rec(f, ctx, lo, hi, rel_tol, abs_tol, 0);
}

namespace {

double sin_power(double phi, const void* ctx) {
    int exponent = *static_cast<const int*>(ctx);
    return exponent == 0 ? 1.0 : std::pow(std::sin(phi), exponent);
}

}  // namespace

double cap_fraction_angle(int m, double theta) {
    if (theta <= 0.0) return 0.0;
    if (theta >= M_PI) return 1.0;
    if (m == 1) return theta / M_PI;
    // |S^(m-1)| / |S^m| * integral of sin^(m-1) over [0, theta]
    int exponent = m - 1;
    double integral = integrate_gk(sin_power, &exponent, 0.0, theta, 1e-8, 1e-300);
    return integral * surface_area(m - 1) / surface_area(m);
}

double sphere_halfspace_fraction(int m, double s) {
    if (s <= -1.0) return 1.0;
    if (s > 1.0) return 0.0;
    switch (m) {
        case 0:
            return 0.5;  // S^0 = {-1, +1}; only +1 satisfies <y,e> >= s for s in (-1, 1]
        case 1:
            return std::acos(clamp_cos(s)) / M_PI;
        case 2:
            return 0.5 * (1.0 - s);
        case 3: {
            double a = std::acos(clamp_cos(s));
            return (a - std::sin(a) * std::cos(a)) / M_PI;
        }
        default:
            return cap_fraction_angle(m, std::acos(clamp_cos(s)));
    }
}

}  // namespace detail

double cap_fraction(int t, double r) {
    require_dim(t);
    if (r < 0.0 || r > 2.0) throw DomainError("cap_fraction: r must lie in [0, 2]");
    return detail::cap_fraction_angle(t, angle_from_chord(r));
}

double annulus_fraction(int t, double r1, double r2) {
    require_dim(t);
    if (r1 > r2) throw DomainError("annulus_fraction: r1 must not exceed r2");
    if (r1 < 0.0 || r2 > 2.0) throw DomainError("annulus_fraction: radii must lie in [0, 2]");
    return std::max(0.0, cap_fraction(t, r2) - cap_fraction(t, r1));
}

namespace {

// Exact arc intersection on the circle: caps are arcs [-t1, t1] and
// [g - t2, g + t2] in angle space, normalized by 2 pi.
double lens_fraction_circle(double theta1, double theta2, double gamma) {
    double main_part =
        std::max(0.0, std::min(theta1, gamma + theta2) - std::max(-theta1, gamma - theta2));
    double wrap_part = std::max(0.0, gamma + theta2 + theta1 - 2.0 * M_PI);
    return std::min(1.0, (main_part + wrap_part) / (2.0 * M_PI));
}

struct LensCtx {
    int t;
    double cos_big;   // cos of the larger cap's angular radius
    double cos_gap;   // cos of the angular separation of the centers
    double sin_gap;
};

// Ring of colatitude phi around the smaller cap's center: weight by the ring
// area element sin^(t-1) phi, times the fraction of the ring that falls
// inside the larger cap.
double lens_integrand(double phi, const void* ctx_ptr) {
    const LensCtx& ctx = *static_cast<const LensCtx*>(ctx_ptr);
    double sin_phi = std::sin(phi);
    double weight = ctx.t == 1 ? 1.0 : std::pow(sin_phi, ctx.t - 1);
    if (sin_phi < 1e-300) return 0.0;
    double s = (ctx.cos_big - std::cos(phi) * ctx.cos_gap) / (sin_phi * ctx.sin_gap);
    return weight * detail::sphere_halfspace_fraction(ctx.t - 1, s);
}

double lens_fraction_quadrature(int t, double theta_small, double theta_big, double gamma) {
    LensCtx ctx{t, std::cos(theta_big), std::cos(gamma), std::sin(gamma)};
    // Split at the colatitudes where rings switch between fully inside,
    // partially inside, and fully outside the larger cap.
    double breaks[3] = {std::fabs(gamma - theta_big), gamma + theta_big,
                        2.0 * M_PI - gamma - theta_big};
    double cuts[5];
    int n_cuts = 0;
    cuts[n_cuts++] = 0.0;
    std::sort(breaks, breaks + 3);
    for (double b : breaks)
        if (b > kAngleTol && b < theta_small - kAngleTol) cuts[n_cuts++] = b;
    cuts[n_cuts++] = theta_small;
    double integral = 0.0;
    for (int i = 0; i + 1 < n_cuts; ++i)
        integral += detail::integrate_gk(lens_integrand, &ctx, cuts[i], cuts[i + 1], 1e-9, 1e-14);
    return integral * surface_area(t - 1) / surface_area(t);  // t >= 2 on this path
}

double lens_fraction_monte_carlo(int t, double r_small, double r_big, double gamma) {
    // Seeded, deterministic. Centers: big cap at e0, small cap in the e0-e1
    // plane at angular distance gamma.
    const std::uint64_t kSamples = 10'000'000;
    RandomStream rng = derive_stream(0x1e5541f5u, {static_cast<std::uint64_t>(t)});
    std::vector<double> x(static_cast<size_t>(t) + 1);
    const double c_small_x0 = std::cos(gamma), c_small_x1 = std::sin(gamma);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < kSamples; ++i) {
        sample_sphere_coords(t, rng, x.data());
        // chord^2 to big center (1,0,...) = 2 - 2 x0
        double d_big = 2.0 - 2.0 * x[0];
        if (d_big > r_big * r_big) continue;
        double dot_small = x[0] * c_small_x0 + x[1] * c_small_x1;
        double d_small = 2.0 - 2.0 * dot_small;
        if (d_small <= r_small * r_small) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(kSamples);
}

}  // namespace

double lens_fraction(int t, double r1, double r2, double ell) {
    require_dim(t);
    if (r1 < 0.0 || r1 > 2.0 || r2 < 0.0 || r2 > 2.0)
        throw DomainError("lens_fraction: radii must lie in [0, 2]");
    if (ell < 0.0 || ell > 2.0) throw DomainError("lens_fraction: ell must lie in [0, 2]");

    double r_small = std::min(r1, r2), r_big = std::max(r1, r2);
    double theta_small = angle_from_chord(r_small);
    double theta_big = angle_from_chord(r_big);
    double gamma = angle_from_chord(ell);

    if (theta_small <= 0.0) return 0.0;
    if (gamma <= kAngleTol || gamma < theta_big - theta_small - kAngleTol)
        return cap_fraction(t, r_small);  // concentric or contained
    if (gamma > theta_big + theta_small + kAngleTol) return 0.0;  // disjoint

    if (t == 1) return lens_fraction_circle(theta_big, theta_small, gamma);
    if (t > 4) return lens_fraction_monte_carlo(t, r_small, r_big, gamma);
    return lens_fraction_quadrature(t, theta_small, theta_big, gamma);
}

}  // namespace annulus
