#pragma once

#include <stdexcept>
#include <vector>

#include "vmp/poly.hpp"

namespace vmp {

// Inverse of a unit of the coefficient ring.
inline Rational unit_inverse(const Rational& c) {
    if (c == 0) throw std::domain_error("power series reciprocal: constant term is not a unit");
    return 1 / c;
}
inline double unit_inverse(double c) {
    if (c == 0) throw std::domain_error("power series reciprocal: constant term is not a unit");
    return 1 / c;
}
inline UPoly unit_inverse(const UPoly& c) {
    if (!c.is_constant() || c.is_zero())
        throw std::domain_error("power series reciprocal: constant term is not a unit");
    return UPoly(unit_inverse(c.coeff(0)));
}

// Truncated power series sum_{i<=order} c_i z^i over a commutative ring R.
template <class R>
class PowerSeries {
public:
    explicit PowerSeries(int order = 12) : c_(order + 1, R(0)) {
        if (order < 0) throw std::invalid_argument("power series order must be >= 0");
    }
    PowerSeries(int order, const R& constant) : PowerSeries(order) { c_[0] = constant; }

    static PowerSeries z_power(int order, int k) {
        PowerSeries s(order);
        if (k <= order) s.c_[k] = R(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int i) const { return c_[i]; }
    R& operator[](int i) { return c_[i]; }
    const std::vector<R>& coeffs() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check(b);
        PowerSeries r(a.order());
        const int n = a.order();
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == R(0)) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend PowerSeries operator*(const R& s, PowerSeries a) {
        for (auto& x : a.c_) x = s * x;
        return a;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

    // Multiply by z^k, dropping terms beyond the order.
    PowerSeries shifted(int k) const {
        PowerSeries r(order());
        for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    PowerSeries reciprocal() const {
        PowerSeries r(order());
        const R inv0 = unit_inverse(c_[0]);
        r.c_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            R acc(0);
            for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = R(0) - inv0 * acc;
        }
        return r;
    }

private:
    void check(const PowerSeries& o) const {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("power series order mismatch");
    }
    std::vector<R> c_;
};

}  // namespace vmp
