#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vmp/rational.hpp"

namespace vmp {

// Dense univariate polynomial with rational coefficients; coeffs[i] multiplies t^i.
// Used both for polynomials in lambda and for the s-polynomials P_pi, Q_pi.
class UPoly {
public:
    UPoly() = default;
    UPoly(int c) : UPoly(Rational(c)) {}
    UPoly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(int deg, const Rational& c = 1) {
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return UPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    Rational operator()(const Rational& t) const {
        Rational r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }
    double eval(double t) const {
        double r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * t + to_double(c_[i]);
        return r;
    }

    // Antiderivative vanishing at 0.
    UPoly antiderivative() const {
        std::vector<Rational> r(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<int>(i + 1);
        return UPoly(std::move(r));
    }
    // t -> p(-t)
    UPoly reflected() const {
        UPoly r = *this;
        for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rational a = c_[i];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            if (a < 0) a = -a;
            first = false;
            if (i == 0 || a != 1) os << vmp::to_string(a) << (i ? "*" : "");
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

using SPoly = UPoly;

// Sparse bivariate polynomial; key (i, j) multiplies x^i y^j.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(int c) : BiPoly(Rational(c)) {}
    BiPoly(const Rational& c) {
        if (c != 0) t_[{0, 0}] = c;
    }
    static BiPoly monomial(int i, int j, const Rational& c = 1) {
        BiPoly p;
        if (c != 0) p.t_[{i, j}] = c;
        return p;
    }

    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Rational(0) : it->second;
    }

    BiPoly& add_term(int i, int j, const Rational& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
        return *this;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, v] : o.t_) add_term(k.first, k.second, v);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, v] : o.t_) add_term(k.first, k.second, -v);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

    // Substitute y = value; result is a polynomial in x.
    UPoly substitute_y(const Rational& y) const {
        std::map<int, Rational> acc;
        for (const auto& [k, v] : t_) {
            Rational p = 1;
            for (int e = 0; e < k.second; ++e) p *= y;
            acc[k.first] += v * p;
        }
        int deg = acc.empty() ? -1 : acc.rbegin()->first;
        std::vector<Rational> c(deg + 1);
        for (const auto& [i, v] : acc) c[i] = v;
        return UPoly(std::move(c));
    }
    double eval(double x, double y) const {
        double r = 0;
        for (const auto& [k, v] : t_) r += to_double(v) * std::pow(x, k.first) * std::pow(y, k.second);
        return r;
    }

    std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // highest x-degree first, then ascending y-degree
        std::vector<std::pair<Key, Rational>> v(t_.begin(), t_.end());
        std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.first.first != b.first.first) return a.first.first > b.first.first;
            return a.first.second < b.first.second;
        });
        for (auto [k, a] : v) {
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            if (a < 0) a = -a;
            first = false;
            bool has_var = k.first > 0 || k.second > 0;
            if (!has_var || a != 1) os << vmp::to_string(a) << (has_var ? "*" : "");
            bool need_star = false;
            if (k.first > 0) {
                os << xv;
                if (k.first > 1) os << "^" << k.first;
                need_star = true;
            }
            if (k.second > 0) {
                if (need_star) os << "*";
                os << yv;
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

private:
    std::map<Key, Rational> t_;
};

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

}  // namespace vmp
