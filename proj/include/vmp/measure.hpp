#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "vmp/analytic.hpp"

namespace vmp {

// The density diverges at the support endpoints.
struct endpoint_divergence : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

// -Im G_lambda(y + lambda) / pi for lambda >= 0 and real y in (-x0, x0).
// edge_dist, when given, is the exact distance from |y| to x0.
inline double centered_density(double y, double lambda, std::optional<double> edge_dist = std::nullopt) {
    const double x0 = support_half_width();
    const double ay = std::fabs(y);
    cplx G;
    if (ay > sqrt2 && (edge_dist || x0 - ay < 0.25)) {
        const double dist = edge_dist ? *edge_dist : x0 - ay;
        G = big_g_near_edge(ay, dist);
        if (y < 0) G = -std::conj(G);
    } else if (ay < 1e-150) {
        G = big_g_at_zero();  // G is Lipschitz at 0
    } else {
        G = big_g(cplx(y, 0));
    }
    const cplx gl = G / (1.0 + lambda * G);
    return -gl.imag() / pi;
}

}  // namespace detail

// Absolutely continuous part of mu_lambda: -Im G_lambda(x) / pi on the open support.
inline double density(double x, double lambda) {
    if (!std::isfinite(x) || !std::isfinite(lambda)) throw std::domain_error("density: arguments must be finite");
    if (lambda < 0) return density(-x, -lambda);
    const double x0 = support_half_width();
    const double y = x - lambda;
    if (std::fabs(y) == x0) throw endpoint_divergence("density: diverges at the support endpoint");
    if (std::fabs(y) > x0) {
        if (lambda > 0 && y < 0) {
            const double pos = atom_position(lambda, 1e-14) + lambda;
            if (std::fabs(x - pos) <= 1e-12 * std::max(1.0, std::fabs(pos)))
                throw pole_error("density: x is the atom a(lambda) + lambda");
        }
        return 0;
    }
    return detail::centered_density(y, lambda);
}

struct MeasureSpec {
    double lambda = 0;
    std::optional<AtomInfo> atom;
    double support_lo = 0, support_hi = 0;
    double ac_mass = 0;                  // integral of the density
    double mass_check = 0;               // atom weight + ac_mass
    double quad_error = 0;               // summed error estimate of the quadrature
    std::vector<double> moments;         // moments[k], k = 0..max_moment
    std::function<double(double)> density;
};

namespace detail {

// Integrates y^k rho(y) over the four smooth pieces of (-x0, x0) split at -sqrt2, 0, sqrt2,
// for k = 0..kmax; density values are shared between the k-integrals.
inline std::vector<double> centered_moments(double lambda, int kmax, double tol, double& err_sum) {
    const double x0 = support_half_width();
    boost::math::quadrature::tanh_sinh<double> ts(15);
    std::unordered_map<double, double> cache;
    auto rho = [&](double y, std::optional<double> edge) {
        auto it = cache.find(y);
        if (it != cache.end() && !edge) return it->second;
        const double v = centered_density(y, lambda, edge);
        if (!edge) cache.emplace(y, v);
        return v;
    };
    std::vector<double> out(kmax + 1, 0.0);
    err_sum = 0;
    for (int k = 0; k <= kmax; ++k) {
        auto pw = [k](double y) { return k == 0 ? 1.0 : std::pow(y, k); };
        double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
        // outer pieces carry the endpoint distance for the 1/sqrt divergence
        const double left = ts.integrate(
            [&](double y, double yc) {
                const bool near_a = y < (-x0 - sqrt2) / 2;
                return pw(y) * rho(y, near_a ? std::optional<double>(-yc) : std::nullopt);
            },
            -x0, -sqrt2, tol, &e1);
        const double mid_l = ts.integrate([&](double y) { return pw(y) * rho(y, std::nullopt); }, -sqrt2, 0.0, tol, &e2);
        const double mid_r = ts.integrate([&](double y) { return pw(y) * rho(y, std::nullopt); }, 0.0, sqrt2, tol, &e3);
        const double right = ts.integrate(
            [&](double y, double yc) {
                const bool near_b = y > (x0 + sqrt2) / 2;
                return pw(y) * rho(y, near_b ? std::optional<double>(yc) : std::nullopt);
            },
            sqrt2, x0, tol, &e4);
        out[k] = left + mid_l + mid_r + right;
        err_sum += e1 + e2 + e3 + e4;
    }
    return out;
}

}  // namespace detail

// mu_lambda = C delta_{a+lambda} + rho(x) dx; lambda < 0 by reflection.
inline MeasureSpec build_measure(double lambda, double tol = default_quad_tol, int max_moment = 6) {
    if (!std::isfinite(lambda)) throw std::domain_error("build_measure: lambda must be finite");
    if (!(tol > 0)) throw std::domain_error("build_measure: tol must be > 0");
    const double x0 = support_half_width();
    const double L = std::fabs(lambda);
    MeasureSpec m;
    m.lambda = lambda;
    double err = 0;
    // quadrature runs well below tol so that mass and moments carry tol-level accuracy
    const double qtol = std::min(1e-9, tol * 1e-3);
    const auto cm = detail::centered_moments(L, max_moment, qtol, err);
    m.quad_error = err;
    if (err > tol) throw numeric_failure("build_measure: quadrature error estimate " + std::to_string(err) + " exceeds tol");
    // binomial shift from y = x - L to x
    std::vector<double> mom(max_moment + 1, 0.0);
    for (int k = 0; k <= max_moment; ++k) {
        double binom = 1;
        for (int j = 0; j <= k; ++j) {
            mom[k] += binom * std::pow(L, k - j) * cm[j];
            binom = binom * (k - j) / (j + 1);
        }
    }
    m.ac_mass = mom[0];
    double atom_w = 0;
    if (L > 0) {
        AtomInfo a = atom_info(L, 1e-14);
        atom_w = a.weight;
        for (int k = 0; k <= max_moment; ++k) mom[k] += a.weight * std::pow(a.position, k);
        if (lambda < 0) a = AtomInfo{-a.a, a.weight, -a.position};
        m.atom = a;
    }
    if (lambda < 0)
        for (int k = 1; k <= max_moment; k += 2) mom[k] = -mom[k];
    m.mass_check = atom_w + m.ac_mass;
    m.moments = mom;
    m.support_lo = lambda - x0;
    m.support_hi = lambda + x0;
    m.density = [lambda](double x) { return density(x, lambda); };
    return m;
}

}  // namespace vmp
