#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

namespace vmp {

using cplx = std::complex<double>;

// Root finding or quadrature did not reach the requested accuracy.
struct numeric_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct continuation_failure : numeric_failure {
    using numeric_failure::numeric_failure;
};
// Evaluation at a pole of a transform.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

constexpr double default_root_tol = 1e-10;
constexpr double default_quad_tol = 1e-6;

namespace detail {
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double sqrt3 = 1.732050807568877293527446341505872367;
inline constexpr double sqrt6 = 2.449489742783178098197284074705891392;
inline const cplx omega{0.5, sqrt3 / 2};  // root of t^2 - t + 1 in the upper half plane
// tolerance used for T^{-1} inside G; density values are accurate to ~1e-15
inline constexpr double inner_root_tol = 1e-15;

template <class F>
double bracket_solve(F f, double lo, double hi, double flo, double fhi, double tol, const char* what) {
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw numeric_failure(std::string(what) + ": bracket has no sign change");
    std::uintmax_t it = 200;
    auto stop = [tol](double a, double b) { return std::fabs(b - a) <= tol * std::max(1.0, std::fabs(a)); };
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, stop, it);
    if (it >= 200) throw numeric_failure(std::string(what) + ": root finder did not converge");
    return (r.first + r.second) / 2;
}
}  // namespace detail

// T_0(0) = sqrt(3) pi / 9, the supremum of T_0.
inline double t0_at_zero() { return detail::sqrt3 * detail::pi / 9; }

// T_0(s) = int_s^1 t / (t^2 - t + 1) dt
inline double t0(double s) {
    if (!(s >= 0)) throw std::domain_error("t0: s must be >= 0");
    using detail::sqrt3;
    return -(sqrt3 / 3) * (std::atan((2 * s - 1) / sqrt3) - detail::pi / 6) - 0.5 * std::log1p(s * (s - 1));
}

inline double t0_inverse(double w, double tol = default_root_tol) {
    if (std::isnan(w)) throw std::domain_error("t0_inverse: w is NaN");
    if (w > t0_at_zero()) throw std::domain_error("t0_inverse: w exceeds T0(0) = sqrt(3) pi / 9");
    if (w == t0_at_zero()) return 0;
    double hi = 1;
    while (t0(hi) > w) {
        hi *= 2;
        if (hi > 1e300) throw numeric_failure("t0_inverse: no bracket");
    }
    auto f = [w](double s) { return t0(s) - w; };
    return detail::bracket_solve(f, 0.0, hi, f(0.0), f(hi), tol, "t0_inverse");
}

// Support half-width and the constant gamma_0.
inline double gamma0() { return 2 / std::expm1(2 * t0_at_zero()); }
inline double support_half_width() { return std::sqrt(2 + gamma0()); }

// ---------------------------------------------------------------------------
// Parametrization (g, H) of the inverse of T on the strip.

struct ThetaPoint {
    double eta;
    double xi;
};

namespace detail {

struct GH {
    cplx q;  // g - omega
    cplx g;
    cplx h;
};

// Evaluates g and H at (eta, xi) with delta = -(eta + xi) > 0 passed directly.
inline GH gh_delta(double eta, double delta) {
    const double xi = -eta - delta;
    const double a = sqrt3 * delta;
    const double s = std::sin(xi), c = std::cos(xi), sh = std::sin(xi / 2);
    double arg_e, log_abs_q;
    cplx q;
    if (a < 300) {
        const cplx em1(std::expm1(a) * c - 2 * sh * sh, std::exp(a) * s);  // e^{a + i xi} - 1
        q = cplx(0, -sqrt3) * em1 / std::expm1(2 * a);
        arg_e = std::arg(em1);
        log_abs_q = std::log(std::abs(q));
    } else {
        const cplx et(c - std::exp(-a), s);  // e^{-a} (e^{a + i xi} - 1)
        const double scale = std::exp(-a) / -std::expm1(-2 * a);
        q = cplx(0, -sqrt3) * et * scale;
        arg_e = std::arg(et);
        log_abs_q = 0.5 * std::log(3.0) - a + std::log(std::abs(et)) - std::log1p(-std::exp(-2 * a));
    }
    const cplx qb = q + cplx(0, sqrt3);  // g - conj(omega)
    const double ceil_term = 2 * std::ceil((xi - pi) / (2 * pi)) * pi;
    const double re_h = -(sqrt3 / 6) * (arg_e - std::arg(qb) + ceil_term + pi / 6) -
                        0.5 * (log_abs_q + std::log(std::abs(qb)));
    return GH{q, q + omega, cplx(re_h, eta / 2)};
}

inline double theta_delta(const ThetaPoint& p) {
    if (!(p.eta >= -pi && p.eta <= 0)) throw std::domain_error("ThetaPoint: eta outside [-pi, 0]");
    const double delta = -(p.eta + p.xi);
    if (!(delta > 0)) throw std::domain_error("ThetaPoint: eta + xi = 0 is a singularity of g");
    return delta;
}

}  // namespace detail

inline cplx g_map(const ThetaPoint& p) { return detail::gh_delta(p.eta, detail::theta_delta(p)).g; }
inline cplx h_map(const ThetaPoint& p) { return detail::gh_delta(p.eta, detail::theta_delta(p)).h; }

namespace detail {

struct StripSolution {
    cplx g;
    double eta;
    double delta;
};

// Solves Re H(eta, delta) = Re w with eta = 2 Im w, in u = log(delta).
// The scan gallops outward from the hint until Re H - Re w changes sign.
inline StripSolution strip_solve(cplx w, double tol, std::optional<double> hint_delta = std::nullopt) {
    const double eta = std::clamp(2 * w.imag(), -pi, 0.0);
    const double target = w.real();
    auto f = [&](double u) { return gh_delta(eta, std::exp(u)).h.real() - target; };
    const double u_min = std::log(std::numeric_limits<double>::min()) + 1, u_max = std::log(1e4);
    double u0 = hint_delta && *hint_delta > 0 ? std::clamp(std::log(*hint_delta), u_min, u_max) : 0.0;
    double f0 = f(u0);
    double lo, hi, flo, fhi;
    double step = 0.5;
    if (f0 < 0) {
        lo = u0, flo = f0;
        for (hi = lo + step;; hi = lo + step) {
            hi = std::min(hi, u_max);
            fhi = f(hi);
            if (fhi >= 0) break;
            if (hi >= u_max)
                throw continuation_failure("t_inverse: no sign change up to delta = 1e4 (eta = " +
                                           std::to_string(eta) + ", Re w = " + std::to_string(target) + ")");
            lo = hi, flo = fhi, step *= 2;
        }
    } else {
        hi = u0, fhi = f0;
        for (lo = hi - step;; lo = hi - step) {
            lo = std::max(lo, u_min);
            flo = f(lo);
            if (flo < 0) break;
            if (lo <= u_min)
                throw continuation_failure("t_inverse: no sign change down to the smallest delta (eta = " +
                                           std::to_string(eta) + ", Re w = " + std::to_string(target) + ")");
            hi = lo, fhi = flo, step *= 2;
        }
    }
    // absolute tolerance in log(delta) is a relative tolerance in delta
    double u;
    if (flo == 0 || fhi == 0) {
        u = flo == 0 ? lo : hi;
    } else {
        std::uintmax_t it = 200;
        auto stop = [tol](double a, double b) {
            return std::fabs(b - a) <= std::max(tol, 4 * std::numeric_limits<double>::epsilon() * std::fabs(a));
        };
        auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, stop, it);
        if (it >= 200) throw numeric_failure("t_inverse: root finder did not converge");
        u = (r.first + r.second) / 2;
    }
    const double delta = std::exp(u);
    return StripSolution{gh_delta(eta, delta).g, eta, delta};
}

}  // namespace detail

// Inverse of T on the strip -pi/2 <= Im w <= 0.
inline cplx t_inverse(cplx w, double tol = default_root_tol) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw std::domain_error("t_inverse: w not finite");
    if (w.imag() > 0 || w.imag() < -detail::pi / 2) throw std::domain_error("t_inverse: w outside the strip D");
    if (w.imag() == 0 && w.real() <= t0_at_zero()) return t0_inverse(w.real(), tol);
    return detail::strip_solve(w, tol).g;
}

// ---------------------------------------------------------------------------
// W(z) and the extended transform G.

inline cplx w_transform(cplx z) {
    using detail::pi;
    using detail::sqrt2;
    if (z.imag() < 0) throw std::domain_error("w_transform: z must lie in the closed upper half plane");
    if (z.imag() == 0) {
        const double x = z.real();
        if (x == 0 || x == sqrt2 || x == -sqrt2) throw std::domain_error("w_transform: z in {-sqrt2, 0, sqrt2}");
        const double x2 = x * x;
        if (std::fabs(x) > sqrt2) return 0.5 * std::log(x2 / (x2 - 2));
        const double re = std::log(std::fabs(x)) - 0.5 * std::log(2 - x2);
        return cplx(re, x > 0 ? -pi / 2 : pi / 2);
    }
    return 0.5 * std::log(z * (z / (z * z - 2.0)));  // = 1 + 2/(z^2 - 2) without cancellation near 0
}

inline cplx big_g_at_zero() { return cplx(0, -detail::sqrt2 / 2 * std::exp(t0_at_zero())); }
inline cplx big_g_at_sqrt2() { return cplx(detail::sqrt2, -detail::sqrt6) / 4.0; }

namespace detail {

// F(g) = int_0^g t/(t^2-t+1) dt by its power series; valid for |g| < 1.
inline cplx f_series(cplx g) {
    cplx sum = 0, p = g * g;  // g^{3k+2}
    const cplx g3 = g * g * g;
    for (int k = 0; k < 200; ++k) {
        const cplx t = p / double(3 * k + 2) + p * g / double(3 * k + 3);
        sum += (k % 2 ? -1.0 : 1.0) * t;
        if (std::abs(t) < 1e-18 * std::abs(sum)) break;
        p *= g3;
    }
    return sum;
}

// T^{-1}(T_0(0) + d) for small real d > 0: solves F(g) = -d by Newton from
// i sqrt(2d), the branch with Im g > 0 that the strip solve reaches from eta = 0.
inline cplx t_inverse_near_origin(double d) {
    cplx g(0, std::sqrt(2 * d));
    for (int it = 0; it < 50; ++it) {
        const cplx step = (f_series(g) + d) * (g * g - g + 1.0) / g;
        g -= step;
        if (std::abs(step) <= 1e-17 * std::abs(g)) break;
    }
    return g;
}

inline constexpr double near_origin_threshold = 1e-3;

// G(y) for real y with sqrt2 < y < x0 where the distance x0 - y is known exactly.
inline cplx big_g_near_edge(double y, double dist) {
    const double x0 = support_half_width();
    const double d = 0.5 * std::log1p(2 * dist * (x0 + y) / ((y * y - 2) * x0 * x0));
    cplx g = d < near_origin_threshold ? t_inverse_near_origin(d)
                                       : strip_solve(cplx(t0_at_zero() + d, 0), inner_root_tol).g;
    return 1.0 / (y * g);
}

inline cplx big_g_right(cplx z) {
    if (z == 0.0) return big_g_at_zero();
    if (z == cplx(sqrt2, 0)) return big_g_at_sqrt2();
    const cplx w = w_transform(z);
    cplx g;
    if (w.imag() == 0 && w.real() <= t0_at_zero()) {
        if (w.real() == t0_at_zero()) throw pole_error("G: pole of the extension at z = sqrt(2 + gamma0)");
        g = t0_inverse(w.real(), inner_root_tol);
    } else {
        g = strip_solve(w, inner_root_tol).g;
    }
    return 1.0 / (z * g);
}

}  // namespace detail

// G(z) = 1 / (z T^{-1}(W(z))) for Re z >= 0, G(z) = -conj(G(-conj z)) otherwise.
inline cplx big_g(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("G: z not finite");
    if (z.imag() < 0) throw std::domain_error("G: z must lie in the closed upper half plane");
    if (z.imag() == 0 && std::fabs(z.real()) == support_half_width())
        throw pole_error("G: pole of the extension at z = -+sqrt(2 + gamma0)");
    if (z.real() < 0) return -std::conj(detail::big_g_right(-std::conj(z)));
    return detail::big_g_right(z);
}

// G_lambda(z) = G(z - lambda) / (1 + lambda G(z - lambda)).
inline cplx g_lambda(cplx z, double lambda) {
    if (lambda < 0) return -std::conj(g_lambda(-std::conj(z), -lambda));
    const cplx y = z - lambda;
    if (y.imag() == 0 && std::fabs(y.real()) == support_half_width()) {
        if (lambda == 0) throw pole_error("G_lambda: pole at the support endpoint for lambda = 0");
        return 1.0 / lambda;
    }
    const cplx G = big_g(y);
    const cplx den = 1.0 + lambda * G;
    if (std::abs(den) <= 1e-15 * std::max(1.0, std::abs(lambda * G)))
        throw pole_error("G_lambda: z is the atom a(lambda) + lambda");
    return G / den;
}

// ---------------------------------------------------------------------------
// Atom

struct AtomInfo {
    double a;
    double weight;
    double position;  // a + lambda
};

// Residual of (sqrt3/2) ln((l^2 + l a + a^2)/(a^2 - 2)) = arctan((a + 2l)/(sqrt3 a)) + pi/6.
inline double atom_equation_residual(double lambda, double a) {
    using detail::sqrt3;
    return (sqrt3 / 2) * std::log((lambda * lambda + lambda * a + a * a) / (a * a - 2)) -
           std::atan((a + 2 * lambda) / (sqrt3 * a)) - detail::pi / 6;
}

inline std::pair<double, double> atom_bounds(double lambda) {
    const double x0 = support_half_width();
    return {-lambda - std::min(x0, 2 / lambda), -std::max(x0, lambda)};
}

// The root a < -sqrt(2 + gamma0) of 1 + lambda G(a) = 0, i.e. W(-a) = T_0(-lambda/a).
inline double atom_position(double lambda, double tol = default_root_tol) {
    if (!(lambda > 0)) throw std::domain_error("atom_position: lambda must be > 0 (use reflection for lambda < 0)");
    auto [lo, hi] = atom_bounds(lambda);
    auto f = [lambda](double a) { return -0.5 * std::log1p(-2 / (a * a)) - t0(-lambda / a); };
    return detail::bracket_solve(f, lo, hi, f(lo), f(hi), tol, "atom_position");
}

inline double atom_weight(double lambda, double a) {
    return lambda * (2 - a * a) / (lambda * lambda * a + 2 * lambda + 2 * a);
}

inline AtomInfo atom_info(double lambda, double tol = default_root_tol) {
    const double a = atom_position(lambda, tol);
    return AtomInfo{a, atom_weight(lambda, a), a + lambda};
}

}  // namespace vmp
