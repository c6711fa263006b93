#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vmp/combinatorics.hpp"
#include "vmp/poly.hpp"

namespace vmp {

// m_n(lambda, N) = sum_k |VL_N(n,k)| N^{-k} lambda^{n-2k}, as a BiPoly in
// (lambda, nu) whose lambda^{n-2k} nu^k coefficient is the count at this N.
inline BiPoly exact_moment(int N, int n) {
    if (N < 1) throw std::invalid_argument("exact_moment: N must be >= 1");
    if (n < 0) throw std::invalid_argument("exact_moment: n must be >= 0");
    BiPoly m;
    for (const auto& p : enumerate_nc2p(n)) {
        const int k = p.size();
        m.add_term(n - 2 * k, k, Rational(v_labeling_table(p, N)[N][N + 1]));
    }
    return m;
}

// Same moment with N kept symbolic: coefficients do not depend on N and
// nu = 1/N appears with its genuine powers (e.g. lambda^2 + 2 - nu for n = 4).
inline BiPoly exact_moment_symbolic(int n) {
    if (n < 0) throw std::invalid_argument("exact_moment_symbolic: n must be >= 0");
    BiPoly m;
    for (int k = 0; 2 * k <= n; ++k) {
        const UPoly c = vl_polynomial(n, k);  // in N, degree <= k
        for (int j = 0; j <= c.degree(); ++j) m.add_term(n - 2 * k, k - j, c.coeff(j));
    }
    return m;
}

// nu -> 1/N; a polynomial in lambda.
inline UPoly at_N(const BiPoly& m, int N) {
    if (N < 1) throw std::invalid_argument("at_N: N must be >= 1");
    return m.substitute_y(Rational(1, N));
}

// nu -> 0: the coefficient-wise large-N limit.
inline UPoly nu_limit(const BiPoly& m) { return m.substitute_y(Rational(0)); }

// m_n(lambda) = sum_k |OV(n,k)| / k! lambda^{n-2k}
inline UPoly limit_moment(int n) {
    if (n < 0) throw std::invalid_argument("limit_moment: n must be >= 0");
    std::vector<Rational> c(n + 1);
    for (int k = 0; 2 * k <= n; ++k) c[n - 2 * k] = Rational(count_ordered_v(n, k)) / Rational(factorial(k));
    return UPoly(std::move(c));
}

// m_0 = 1, m_1 = 0, m_{n+2} = lambda m_{n+1} + m_n
inline std::vector<UPoly> single_operator_moments(int n_max) {
    if (n_max < 0) throw std::invalid_argument("single_operator_moments: n_max must be >= 0");
    std::vector<UPoly> m{UPoly(1), UPoly(0)};
    const UPoly lam = UPoly::monomial(1);
    while (static_cast<int>(m.size()) <= n_max) m.push_back(lam * m[m.size() - 1] + m[m.size() - 2]);
    m.resize(n_max + 1);
    return m;
}

// sum_k |I^{2+}(n,k)| lambda^{n-2k}
inline UPoly interval_moment(int n) {
    std::vector<Rational> c(n + 1);
    for (int k = 0; 2 * k <= n; ++k) c[n - 2 * k] = Rational(count_interval_2p(n, k));
    return UPoly(std::move(c));
}

struct TwoPointMeasure {
    double x1, x2;
    double p1, p2;

    double moment(int n) const { return p1 * std::pow(x1, n) + p2 * std::pow(x2, n); }
};

// Distribution of one summand u (A^+ + A^-) + lambda A^o with u = N^{-1/2}.
inline TwoPointMeasure summand_distribution(int N, double lambda) {
    if (N < 1) throw std::invalid_argument("summand_distribution: N must be >= 1");
    const double r = std::sqrt(lambda * lambda + 4.0 / N);
    return TwoPointMeasure{(lambda - r) / 2, (lambda + r) / 2, 0.5 + lambda / (2 * r), 0.5 - lambda / (2 * r)};
}

}  // namespace vmp
