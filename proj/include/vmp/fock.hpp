#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "vmp/combinatorics.hpp"
#include "vmp/poly.hpp"

namespace vmp {

// Basis word of the discrete V-monotone Fock space; the empty word is the vacuum.
using VWord = std::vector<int>;

struct LengthLex {
    bool operator()(const VWord& a, const VWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Amplitudes live in Q[lambda, u]; BiPoly key (i, j) multiplies lambda^i u^j.
using Amplitude = BiPoly;
using FockState = std::map<VWord, Amplitude, LengthLex>;

enum class OpKind { creation, annihilation, conservation };

inline FockState vacuum_state() { return FockState{{VWord{}, Amplitude(1)}}; }

inline void accumulate(FockState& s, const VWord& w, const Amplitude& a) {
    if (a.is_zero()) return;
    auto [it, fresh] = s.try_emplace(w, a);
    if (!fresh) {
        it->second += a;
        if (it->second.is_zero()) s.erase(it);
    }
}

inline FockState apply_operator(OpKind kind, int i, const FockState& state) {
    if (i < 1) throw std::invalid_argument("apply_operator: index must be >= 1");
    FockState out;
    for (const auto& [w, a] : state) {
        switch (kind) {
            case OpKind::creation: {
                VWord nw;
                nw.reserve(w.size() + 1);
                nw.push_back(i);
                nw.insert(nw.end(), w.begin(), w.end());
                if (is_v_word(nw)) accumulate(out, nw, a);
                break;
            }
            case OpKind::annihilation:
                if (!w.empty() && w.front() == i) accumulate(out, VWord(w.begin() + 1, w.end()), a);
                break;
            case OpKind::conservation:
                if (!w.empty() && w.front() == i) accumulate(out, w, a);
                break;
        }
    }
    return out;
}

// S = sum_i [u (A_i^+ + A_i^-) + lambda A_i^o]. Words longer than max_len are
// dropped (they cannot return to the vacuum in the remaining steps).
inline FockState apply_S(int N, const FockState& state, int max_len = -1) {
    if (N < 1) throw std::invalid_argument("apply_S: N must be >= 1");
    const Amplitude u = Amplitude::monomial(0, 1);
    const Amplitude lam = Amplitude::monomial(1, 0);
    FockState out;
    for (const auto& [w, a] : state) {
        const Amplitude au = a * u;
        for (int i = 1; i <= N; ++i) {
            if (max_len < 0 || static_cast<int>(w.size()) + 1 <= max_len) {
                VWord nw;
                nw.reserve(w.size() + 1);
                nw.push_back(i);
                nw.insert(nw.end(), w.begin(), w.end());
                if (is_v_word(nw)) accumulate(out, nw, au);
            }
        }
        if (!w.empty()) {
            accumulate(out, VWord(w.begin() + 1, w.end()), au);
            accumulate(out, w, a * lam);
        }
    }
    return out;
}

inline Amplitude vacuum_coefficient(const FockState& s) {
    auto it = s.find(VWord{});
    return it == s.end() ? Amplitude() : it->second;
}

// Replaces u^{2j} by nu^j (nu = 1/N); throws on a surviving odd power of u.
inline BiPoly reduce_u_squared(const Amplitude& a) {
    BiPoly r;
    for (const auto& [k, v] : a.terms()) {
        if (k.second % 2) throw std::logic_error("vacuum moment has an odd power of u");
        r.add_term(k.first, k.second / 2, v);
    }
    return r;
}

// <S^n Omega, Omega> as a polynomial in (lambda, nu = 1/N), unreduced in N:
// the coefficient of lambda^{n-2k} nu^k is the integer path count.
inline BiPoly vacuum_moment_oracle(int N, int n) {
    if (N < 1) throw std::invalid_argument("vacuum_moment_oracle: N must be >= 1");
    if (n < 0) throw std::invalid_argument("vacuum_moment_oracle: n must be >= 0");
    FockState s = vacuum_state();
    for (int step = 0; step < n; ++step) s = apply_S(N, s, n - step - 1);
    return reduce_u_squared(vacuum_coefficient(s));
}

// Single summand u (A_1^+ + A_1^-) + lambda A_1^o; its vacuum moments.
inline BiPoly summand_moment_oracle(int n) {
    if (n < 0) throw std::invalid_argument("summand_moment_oracle: n must be >= 0");
    const Amplitude u = Amplitude::monomial(0, 1);
    const Amplitude lam = Amplitude::monomial(1, 0);
    FockState s = vacuum_state();
    for (int step = 0; step < n; ++step) {
        FockState next;
        auto add = [&](const FockState& part, const Amplitude& c) {
            for (const auto& [w, a] : part) accumulate(next, w, a * c);
        };
        add(apply_operator(OpKind::creation, 1, s), u);
        add(apply_operator(OpKind::annihilation, 1, s), u);
        add(apply_operator(OpKind::conservation, 1, s), lam);
        s = std::move(next);
    }
    return reduce_u_squared(vacuum_coefficient(s));
}

struct OpFactor {
    OpKind kind;
    int index;
};

// phi(A_1 A_2 ... A_n) = <A_1 ... A_n Omega, Omega>; the rightmost factor acts first.
inline Rational mixed_moment(const std::vector<OpFactor>& ops) {
    FockState s = vacuum_state();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) s = apply_operator(it->kind, it->index, s);
    return vacuum_coefficient(s).coeff(0, 0);
}

// Every V-shaped word over [N] with length <= max_len, length-lexicographic.
inline std::vector<VWord> basis_words(int N, int max_len) {
    std::vector<VWord> out{VWord{}};
    std::vector<VWord> frontier{VWord{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<VWord> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= N; ++i) {
                VWord nw{i};
                nw.insert(nw.end(), w.begin(), w.end());
                if (is_v_word(nw)) next.push_back(nw);
            }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

inline FockState basis_state(const VWord& w) { return FockState{{w, Amplitude(1)}}; }

// Inner product of two states with the basis orthonormal.
inline Amplitude inner(const FockState& a, const FockState& b) {
    Amplitude r;
    for (const auto& [w, x] : a) {
        auto it = b.find(w);
        if (it != b.end()) r += x * it->second;
    }
    return r;
}

}  // namespace vmp
