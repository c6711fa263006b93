#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "vmp/analytic.hpp"
#include "vmp/combinatorics.hpp"
#include "vmp/poly.hpp"
#include "vmp/series.hpp"

namespace vmp {

// ---------------------------------------------------------------------------
// Exact MGF: P_{N,l} from
//   1/P_{N,l} = 1 - (z/N) sum_{p>=1} lambda^{p-1} z^p (sum_{i<l} P_{N,i}^p + sum_{i>l} P_{N-i,0}^p).
// Every member of the family carries the same scale 1/N.

inline PowerSeries<UPoly> mgf_exact_series(int N, int l, int n_max = 12) {
    using PS = PowerSeries<UPoly>;
    if (N < 0) throw std::invalid_argument("mgf_exact_series: N must be >= 0");
    if (l < 0 || l > N + 1) throw std::invalid_argument("mgf_exact_series: l outside [0, N+1]");
    if (n_max < 0) throw std::invalid_argument("mgf_exact_series: n_max must be >= 0");
    const PS one(n_max, UPoly(1));
    if (N == 0) return one;
    const UPoly lam = UPoly::monomial(1);
    const UPoly inv_n(Rational(1, N));

    // sum_{p>=1} lambda^{p-1} z^{p+1} X^p
    auto contribution = [&](const PS& X) {
        PS acc(n_max), pw = one;
        UPoly lp = 1;
        for (int p = 1; p + 1 <= n_max; ++p) {
            pw *= X;
            acc += lp * pw.shifted(p + 1);
            lp *= lam;
        }
        return acc;
    };

    std::vector<PS> mono;      // P_{M,0}, M = 0..N-1
    std::vector<PS> mono_c;    // their contributions
    mono.push_back(one);
    mono_c.push_back(contribution(one));
    for (int M = 1; M < N; ++M) {
        PS s(n_max);
        for (int i = 1; i <= M; ++i) s += mono_c[M - i];
        mono.push_back((one - inv_n * s).reciprocal());
        mono_c.push_back(contribution(mono.back()));
    }

    PS upper(n_max);  // sum_{i=1}^{l-1} contribution(P_{N,i})
    PS last;
    for (int cur = (l == 0 ? 0 : 1); cur <= l; ++cur) {
        PS lower(n_max);  // sum_{i=cur+1}^{N} contribution(P_{N-i,0})
        for (int i = cur + 1; i <= N; ++i) lower += mono_c[N - i];
        const PS p = (one - inv_n * (upper + lower)).reciprocal();
        if (cur == l) {
            last = p;
            break;
        }
        upper += contribution(p);
    }
    return last;
}

// Numeric coefficients at a given lambda.
inline std::vector<double> eval_series(const PowerSeries<UPoly>& s, double lambda) {
    std::vector<double> r;
    for (const auto& c : s.coeffs()) r.push_back(c.eval(lambda));
    return r;
}

// ---------------------------------------------------------------------------
// Partition polynomials Q_pi and P_pi on [0, 1].

namespace detail {

struct PQ {
    SPoly q, p;
};

// The recursive definition applied as stated (gaps between consecutive legs of
// the first block, middle legs included).
inline PQ pq_direct(const Partition& pi, std::map<Partition, PQ>& memo) {
    if (pi.empty()) return PQ{SPoly(1), SPoly(1)};
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;
    const auto d = decompose(pi);
    SPoly prod_q = 1, prod_p = 1;
    for (const auto& g : d.gaps) {
        const PQ sub = pq_direct(g, memo);
        prod_q *= sub.q;
        prod_p *= sub.p;
    }
    const PQ tail = pq_direct(d.tail, memo);
    const SPoly Fq = prod_q.antiderivative(), Fp = prod_p.antiderivative();
    const SPoly int_s1_q = SPoly(Fq(Rational(1))) - Fq;  // int_s^1
    PQ r{int_s1_q * tail.q, (Fp + int_s1_q) * tail.p};
    memo.emplace(pi, r);
    return r;
}

}  // namespace detail

inline detail::PQ pq_polynomials(const Partition& pi) {
    if (!is_nc2p(pi)) throw std::invalid_argument("partition polynomials: partition is not in NC2+");
    std::map<Partition, detail::PQ> memo;
    return detail::pq_direct(strip_middle_legs(pi), memo);
}
inline SPoly q_polynomial(const Partition& pi) { return pq_polynomials(pi).q; }
inline SPoly p_polynomial(const Partition& pi) { return pq_polynomials(pi).p; }

// Aggregated polynomials A_{n,ml}(s) = sum over NC2+(n) with ml middle legs,
// for the series P(x, lambda; s) and Q(x, lambda; s).
class PartitionPolySeries {
public:
    explicit PartitionPolySeries(int max_legs) : max_legs_(max_legs) {
        if (max_legs < 0) throw std::invalid_argument("PartitionPolySeries: max_legs must be >= 0");
        std::map<Partition, detail::PQ> memo;
        p_.assign(max_legs + 1, std::vector<SPoly>(max_legs + 1));
        q_ = p_;
        for (int n = 0; n <= max_legs; ++n)
            for (const auto& pi : enumerate_nc2p(n)) {
                const auto pq = detail::pq_direct(strip_middle_legs(pi), memo);
                const int ml = middle_legs(pi);
                p_[n][ml] += pq.p;
                q_[n][ml] += pq.q;
            }
    }
    double p(double x, double lambda, double s) const { return eval(p_, x, lambda, s); }
    double q(double x, double lambda, double s) const { return eval(q_, x, lambda, s); }
    int max_legs() const { return max_legs_; }

private:
    static double eval(const std::vector<std::vector<SPoly>>& a, double x, double lambda, double s) {
        double r = 0;
        for (size_t n = 0; n < a.size(); ++n)
            for (size_t ml = 0; ml <= n; ++ml)
                if (!a[n][ml].is_zero()) r += a[n][ml].eval(s) * std::pow(lambda, double(ml)) * std::pow(x, double(n));
        return r;
    }
    int max_legs_;
    std::vector<std::vector<SPoly>> p_, q_;
};

// Residual of
//   (sqrt((1-lx)^2 - 2(1-s)x^2) - (x/l)(int_0^s dt/(1 - l x P(t)) - s) + l x) P(s) - 1
// with P the truncated partition series; lambda != 0.
inline double integral_equation_residual(const PartitionPolySeries& ps, double x, double lambda, double s) {
    if (lambda == 0) throw std::domain_error("integral_equation_residual: lambda must be nonzero");
    const double lx = lambda * x;
    const double rad = (1 - lx) * (1 - lx) - 2 * (1 - s) * x * x;
    if (!(rad > 0)) throw std::domain_error("integral_equation_residual: radicand must be positive");
    double integral = 0;
    if (s > 0)
        integral = boost::math::quadrature::gauss<double, 30>::integrate(
            [&](double t) { return 1 / (1 - lx * ps.p(x, lambda, t)); }, 0.0, s);
    const double lhs = std::sqrt(rad) - (x / lambda) * (integral - s) + lx;
    return lhs * ps.p(x, lambda, s) - 1;
}

// Q(x, lambda; s) = 1 / (lambda x + sqrt((1 - lambda x)^2 - 2(1 - s) x^2))
inline double monotone_q_closed(double x, double lambda, double s) {
    if (!(s >= 0 && s <= 1)) throw std::domain_error("monotone_q_closed: s must lie in [0, 1]");
    const double rad = (1 - lambda * x) * (1 - lambda * x) - 2 * (1 - s) * x * x;
    if (!(rad > 0)) throw std::domain_error("monotone_q_closed: radicand (1 - lambda x)^2 - 2(1 - s)x^2 must be positive");
    const double den = lambda * x + std::sqrt(rad);
    if (den == 0) throw std::domain_error("monotone_q_closed: lambda x + sqrt(.) vanishes");
    return 1 / den;
}

// M_lambda(x) with 1/M = lambda x + (1 - lambda x) T_0^{-1}(1/2 ln((1-lx)^2 / ((1-lx)^2 - 2x^2))).
inline double limit_mgf(double x, double lambda, double tol = 1e-14) {
    if (!std::isfinite(x) || !std::isfinite(lambda)) throw std::domain_error("limit_mgf: arguments must be finite");
    if (x == 0) return 1;
    const double lx = lambda * x;
    const double a2 = (1 - lx) * (1 - lx);
    const double rad = a2 - 2 * x * x;
    if (!(rad > 0)) throw std::domain_error("limit_mgf: radicand (1 - lambda x)^2 - 2x^2 must be positive");
    const double arg = -0.5 * std::log1p(-2 * x * x / a2);
    if (arg > t0_at_zero()) throw std::domain_error("limit_mgf: log argument exceeds T0(0) = sqrt(3) pi / 9");
    const double inv = lx + (1 - lx) * t0_inverse(arg, tol);
    if (inv == 0) throw std::domain_error("limit_mgf: 1/M vanishes");
    return 1 / inv;
}

}  // namespace vmp
