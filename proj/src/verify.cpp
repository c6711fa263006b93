#include "vmp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "vmp/vmp.hpp"

namespace vmp {
namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, double limit_s, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.seconds > limit_s) {
        r.pass = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    return r;
}

// Series of num/den with coefficients given lowest degree first.
std::vector<Rational> rational_series(const std::vector<Rational>& num, const std::vector<Rational>& den, int order) {
    PowerSeries<Rational> a(order), b(order);
    for (int i = 0; i <= order && i < static_cast<int>(num.size()); ++i) a[i] = num[i];
    for (int i = 0; i <= order && i < static_cast<int>(den.size()); ++i) b[i] = den[i];
    return (a * b.reciprocal()).coeffs();
}

// The displayed N = 2 moment generating function.
std::vector<Rational> n2_closed_form(const Rational& l, int order) {
    const Rational l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l;
    std::vector<Rational> num{-8, 40 * l, 12 - 80 * l2, 80 * l3 - 36 * l, -40 * l4 + 36 * l2 - 4,
                              8 * l5 - 12 * l3 + 4 * l};
    std::vector<Rational> den{-8, 40 * l, 20 - 80 * l2, 80 * l3 - 68 * l, -40 * l4 + 84 * l2 - 12,
                              8 * l5 - 44 * l3 + 20 * l, 8 * l4 - 8 * l2 + 1};
    return rational_series(num, den, order);
}

std::vector<Rational> n1_closed_form(const Rational& l, int order) {
    return rational_series({-1, l}, {-1, l, 1}, order);
}

BiPoly nu_poly(std::initializer_list<std::tuple<int, int, Rational>> terms) {
    BiPoly p;
    for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
    return p;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    const double x0 = support_half_width();

    out.push_back(timed("c01_combinatorial_golden_values", 5, [](CheckResult& r) {
        int bad = 0;
        bad += enumerate_nc2p(6).size() != 15;
        const BigInt ov[] = {1, 18, 28};
        BigInt total = 0;
        for (int k = 1; k <= 3; ++k) {
            bad += count_ordered_v(6, k) != ov[k - 1];
            total += count_ordered_v(6, k);
        }
        bad += total != 47;
        const UPoly n = UPoly::monomial(1);
        const UPoly expect[] = {n, UPoly(9) * n * n - UPoly(6) * n,
                                UPoly(Rational(14, 3)) * n * n * n - UPoly(Rational(11, 2)) * n * n +
                                    UPoly(Rational(11, 6)) * n};
        for (int k = 1; k <= 3; ++k) {
            bad += !(vl_polynomial(6, k) == expect[k - 1]);
            const auto parts = enumerate_nc2p(6, k);
            for (int N = 1; N <= 6; ++N) {
                BigInt brute = 0;
                for (const auto& p : parts) brute += count_v_labelings_brute(p, N, N + 1);
                bad += Rational(brute) != expect[k - 1](Rational(N));
                bad += brute != vl_count(6, k, N);
            }
        }
        r.residual = bad;
        r.pass = bad == 0;
    }));

    out.push_back(timed("c02_oracle_equivalence", 60, [&](CheckResult& r) {
        int bad = 0;
        for (int N = 1; N <= cfg.oracle_N_max; ++N)
            for (int n = 0; n <= cfg.oracle_n_max; ++n) {
                bad += !(exact_moment(N, n) == vacuum_moment_oracle(N, n));
                bad += !(at_N(exact_moment_symbolic(n), N) == at_N(exact_moment(N, n), N));
            }
        const BiPoly m4 = nu_poly({{2, 0, 1}, {0, 0, 2}, {0, 1, -1}});
        const BiPoly m5 = nu_poly({{3, 0, 1}, {1, 0, 5}, {1, 1, -3}});
        const BiPoly m6 = nu_poly({{4, 0, 1},
                                   {2, 0, 9},
                                   {2, 1, -6},
                                   {0, 0, Rational(14, 3)},
                                   {0, 1, Rational(-11, 2)},
                                   {0, 2, Rational(11, 6)}});
        bad += !(exact_moment_symbolic(4) == m4);
        bad += !(exact_moment_symbolic(5) == m5);
        bad += !(exact_moment_symbolic(6) == m6);
        r.residual = bad;
        r.pass = bad == 0;
    }));

    out.push_back(timed("c03_limit_moments_table", 1, [](CheckResult& r) {
        const UPoly l = UPoly::monomial(1);
        int bad = 0;
        bad += !(limit_moment(4) == l * l + UPoly(2));
        bad += !(limit_moment(5) == l * l * l + UPoly(5) * l);
        bad += !(limit_moment(6) == l * l * l * l + UPoly(9) * l * l + UPoly(Rational(14, 3)));
        r.residual = bad;
        r.pass = bad == 0;
    }));

    out.push_back(timed("c04_mgf_series", 5, [](CheckResult& r) {
        int bad = 0;
        const int order = 10;
        const auto s1 = mgf_exact_series(1, 2, order);
        const auto s2 = mgf_exact_series(2, 3, order);
        for (int lv : {0, 1, 2}) {
            const Rational l(lv);
            const auto c1 = n1_closed_form(l, order), c2 = n2_closed_form(l, order);
            for (int n = 0; n <= order; ++n) {
                bad += s1[n](l) != c1[n];
                bad += s2[n](l) != c2[n];
            }
        }
        r.residual = bad;
        r.pass = bad == 0;
    }));

    out.push_back(timed("c05_partition_polynomial_identity", 30, [](CheckResult& r) {
        int bad = 0;
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : enumerate_nc2p(n))
                bad += p_polynomial(p)(Rational(1)) * Rational(factorial(p.size())) != Rational(count_ordered_v(p));
        r.residual = bad;
        r.pass = bad == 0;
    }));

    out.push_back(timed("c06_limit_mgf_vs_moments", 1, [](CheckResult& r) {
        const double x = 0.05;
        std::vector<UPoly> m;
        for (int n = 0; n <= 12; ++n) m.push_back(limit_moment(n));
        double worst = 0;
        for (double l : {0.0, 1.0, 2.0}) {
            double s = 0;
            for (int n = 0; n <= 12; ++n) s += m[n].eval(l) * std::pow(x, n);
            worst = std::max(worst, std::fabs(limit_mgf(x, l) - s));
        }
        r.residual = worst;
        r.pass = worst <= 1e-6;
    }));

    out.push_back(timed("c07_transform_anchors", 1, [](CheckResult& r) {
        const double r2 = std::sqrt(2.0);
        const cplx g0 = cplx(0, -r2 / 2 * std::exp(std::sqrt(3.0) * M_PI / 9));
        const cplx gs = cplx(r2, -std::sqrt(6.0)) / 4.0;
        double worst = 0;
        for (cplx z : {cplx(1e-12, 0), cplx(0, 1e-12), cplx(1e-12, 1e-12)})
            worst = std::max(worst, std::abs(big_g(z) - g0));
        for (cplx z : {cplx(r2 + 1e-14, 0), cplx(r2 - 1e-14, 0), cplx(r2, 1e-14)})
            worst = std::max(worst, std::abs(big_g(z) - gs));
        r.residual = worst;
        r.pass = worst <= 1e-9;
    }));

    out.push_back(timed("c08_measure_closure", 300, [&](CheckResult& r) {
        double worst_mass = 0, worst_mom = 0;
        for (double l : {0.0, 0.2, 0.5, 1.0, 2.0, 4.0}) {
            const auto m = build_measure(l, cfg.quad_tol);
            worst_mass = std::max(worst_mass, std::fabs(m.mass_check - 1));
            for (int k = 1; k <= 6; ++k)
                worst_mom = std::max(worst_mom, std::fabs(m.moments[k] - limit_moment(k).eval(l)));
        }
        r.residual = std::max(worst_mass, worst_mom);
        r.pass = worst_mass <= 1e-6 && worst_mom <= 1e-5;
        std::ostringstream d;
        d << "mass " << worst_mass << ", moments " << worst_mom;
        r.detail = d.str();
    }));

    out.push_back(timed("c09_atom_behavior", 30, [&](CheckResult& r) {
        int bad = 0;
        double worst = 0;
        double prev = 0;
        const int pts = 80;
        for (int i = 0; i < pts; ++i) {
            const double l = 0.05 * std::pow(20 / 0.05, double(i) / (pts - 1));
            const double a = atom_position(l);
            const auto [lo, hi] = atom_bounds(l);
            bad += !(lo < a && a < hi);
            if (i > 0) bad += !(a < prev);
            prev = a;
            const double c = atom_weight(l, a);
            bad += !(c > 0 && c < 1);
        }
        const double h = 1e-4;
        for (double l : {0.2, 0.5, 1.0, 2.0, 4.0}) {
            const double d = (atom_position(l + h, 1e-14) - atom_position(l - h, 1e-14)) / (2 * h);
            const double c = atom_weight(l, atom_position(l, 1e-14));
            worst = std::max(worst, std::fabs(d + c));
        }
        const double small = std::fabs(atom_position(1e-4) + x0);
        bad += small > 1e-3;
        r.residual = worst;
        r.pass = bad == 0 && worst <= 1e-4;
        std::ostringstream d;
        d << "derivative " << worst << ", |a(1e-4) + x0| " << small << ", violations " << bad;
        r.detail = d.str();
    }));

    out.push_back(timed("c10_reflection_symmetry", 5, [&](CheckResult& r) {
        const double l = 1;
        double worst = 0;
        const int pts = 200;
        const double lo = l - x0, hi = l + x0, inset = 1e-6;
        for (int i = 0; i < pts; ++i) {
            const double x = lo + inset + (hi - lo - 2 * inset) * i / (pts - 1);
            const double d = density(x, l);
            worst = std::max(worst, std::fabs(density(-x, -l) - d));
            // the Moebius formula taken at -lambda directly, G's own reflection doing the work
            const cplx G = big_g(cplx(-x + l, 0));
            const double direct = -(G / (1.0 - l * G)).imag() / M_PI;
            worst = std::max(worst, std::fabs(direct - d));
        }
        r.residual = worst;
        r.pass = worst <= 1e-10;
    }));

    out.push_back(timed("c11_property_suites", 60, [](CheckResult& r) {
        int bad = 0;
        for (int n = 0; n <= 10; ++n) {
            const auto words = enumerate_riordan(n);
            bad += words.size() != enumerate_nc2p(n).size();
            for (const auto& e : words) bad += !(partition_to_riordan(riordan_to_partition(e)) == e);
        }
        for (int N = 1; N <= 3; ++N)
            for (const auto& w : basis_words(N, 5)) {
                const FockState v = basis_state(w);
                using K = OpKind;
                auto ap = [](K k, int i, const FockState& s) { return apply_operator(k, i, s); };
                for (int i = 1; i <= N; ++i) {
                    for (int j = 1; j <= N; ++j) {
                        if (i == j) continue;
                        bad += !ap(K::annihilation, i, ap(K::creation, j, v)).empty();
                        bad += !ap(K::conservation, i, ap(K::creation, j, v)).empty();
                        bad += !ap(K::annihilation, i, ap(K::conservation, j, v)).empty();
                        bad += !ap(K::conservation, i, ap(K::conservation, j, v)).empty();
                    }
                    bad += !ap(K::creation, i, ap(K::creation, i, v)).empty();
                    bad += !ap(K::annihilation, i, ap(K::annihilation, i, v)).empty();
                    bad += !ap(K::conservation, i, ap(K::annihilation, i, v)).empty();
                    bad += !ap(K::creation, i, ap(K::conservation, i, v)).empty();
                    FockState c = ap(K::creation, i, v);
                    for (int m = 1; m <= 3; ++m) {
                        FockState cm = c;
                        for (int t = 0; t < m; ++t) cm = ap(K::conservation, i, cm);
                        bad += !(cm == c);
                    }
                }
            }
        for (double l : {-2.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0})
            for (double y : {1e-3, 0.1, 1.0, 5.0})
                for (int i = 0; i <= 40; ++i) {
                    const double x = -5 + 10.0 * i / 40;
                    bad += !(g_lambda(cplx(x, y), l).imag() < 0);
                }
        for (int i = 0; i <= 20; ++i) {
            const double eta = -M_PI * i / 20;
            for (double delta : {1e-9, 1e-3, 0.5, 1.0, 3.0, 10.0, 40.0, 200.0}) {
                const ThetaPoint p{eta, -eta - delta};
                bad += h_map(p).imag() != eta / 2;
            }
        }
        r.residual = bad;
        r.pass = bad == 0;
    }));

    return out;
}

}  // namespace vmp
