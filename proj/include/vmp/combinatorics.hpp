#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vmp/poly.hpp"
#include "vmp/rational.hpp"

namespace vmp {

// Set partition of [n] = {1..n}. Blocks are sorted and ordered by their minimum.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    bool empty() const { return blocks.empty(); }
    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.blocks < b.blocks;
    }
};

inline std::string to_string(const Partition& p) {
    std::string s = "{";
    for (size_t b = 0; b < p.blocks.size(); ++b) {
        s += b ? ",{" : "{";
        for (size_t i = 0; i < p.blocks[b].size(); ++i) s += (i ? "," : "") + std::to_string(p.blocks[b][i]);
        s += "}";
    }
    return s + "}";
}

// Validates that the blocks partition [n]; sorts into canonical form.
inline Partition make_partition(int n, std::vector<std::vector<int>> blocks) {
    if (n < 0) throw std::invalid_argument("partition: n must be >= 0");
    std::vector<int> seen(n + 1, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw std::invalid_argument("partition: element outside [n]");
            if (seen[x]++) throw std::invalid_argument("partition: blocks overlap");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) throw std::invalid_argument("partition: blocks do not cover [n]");
    std::sort(blocks.begin(), blocks.end());
    return Partition{n, std::move(blocks)};
}

// position (1-based) -> block index
inline std::vector<int> block_of(const Partition& p) {
    std::vector<int> r(p.n + 1, -1);
    for (int b = 0; b < p.size(); ++b)
        for (int x : p.blocks[b]) r[x] = b;
    return r;
}

inline bool is_noncrossing(const Partition& p) {
    // a < c < b < d with a, b in one block and c, d in another
    auto owner = block_of(p);
    for (int a = 1; a <= p.n; ++a)
        for (int c = a + 1; c <= p.n; ++c) {
            if (owner[c] == owner[a]) continue;
            for (int b = c + 1; b <= p.n; ++b) {
                if (owner[b] != owner[a]) continue;
                for (int d = b + 1; d <= p.n; ++d)
                    if (owner[d] == owner[c]) return false;
            }
        }
    return true;
}

inline bool is_nc2p(const Partition& p) {
    for (const auto& b : p.blocks)
        if (b.size() < 2) return false;
    return is_noncrossing(p);
}

inline int legs(const Partition& p) { return p.n; }

inline int middle_legs(const Partition& p) {
    int m = 0;
    for (const auto& b : p.blocks) m += std::max(0, static_cast<int>(b.size()) - 2);
    return m;
}

// Removes all middle legs and relabels the remaining points to 1..n'.
inline Partition strip_middle_legs(const Partition& p) {
    std::vector<int> keep(p.n + 1, 0);
    for (const auto& b : p.blocks) {
        keep[b.front()] = 1;
        keep[b.back()] = 1;
    }
    std::vector<int> newpos(p.n + 1, 0);
    int m = 0;
    for (int x = 1; x <= p.n; ++x)
        if (keep[x]) newpos[x] = ++m;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) blocks.push_back({newpos[b.front()], newpos[b.back()]});
    return make_partition(m, std::move(blocks));
}

// ---------------------------------------------------------------------------
// V-shaped words

// Strictly decreasing, then strictly increasing.
inline bool is_v_word(const std::vector<int>& w) {
    size_t i = 1;
    while (i < w.size() && w[i] < w[i - 1]) ++i;
    while (i < w.size() && w[i] > w[i - 1]) ++i;
    return i >= w.size();
}

// ---------------------------------------------------------------------------
// Nesting forest. B' is the parent of B when B sits in a gap of B' and no
// block strictly between them does.

struct NestingForest {
    std::vector<std::optional<int>> parent;
    std::vector<std::vector<int>> chains;  // root first
};

inline NestingForest nesting_forest(const Partition& p) {
    const int k = p.size();
    NestingForest f;
    f.parent.assign(k, std::nullopt);
    for (int b = 0; b < k; ++b) {
        const int lo = p.blocks[b].front(), hi = p.blocks[b].back();
        int best_left = 0;
        for (int o = 0; o < k; ++o) {
            if (o == b) continue;
            const auto& ob = p.blocks[o];
            for (size_t j = 0; j + 1 < ob.size(); ++j)
                if (ob[j] < lo && hi < ob[j + 1] && ob[j] > best_left) {
                    best_left = ob[j];
                    f.parent[b] = o;
                }
        }
    }
    std::vector<int> has_child(k, 0);
    for (int b = 0; b < k; ++b)
        if (f.parent[b]) has_child[*f.parent[b]] = 1;
    for (int b = 0; b < k; ++b) {
        if (has_child[b]) continue;
        std::vector<int> chain;
        for (std::optional<int> c = b; c; c = f.parent[*c]) chain.push_back(*c);
        std::reverse(chain.begin(), chain.end());
        f.chains.push_back(std::move(chain));
    }
    return f;
}

// labels[b] is the label of block b. With a virtual outer label, every chain
// word is prefixed by it (the imaginary block surrounding the partition).
inline bool is_v_monotone_labeling(const NestingForest& f, const std::vector<int>& labels,
                                   std::optional<int> virtual_root = std::nullopt) {
    std::vector<int> word;
    for (const auto& chain : f.chains) {
        word.clear();
        if (virtual_root) word.push_back(*virtual_root);
        for (int b : chain) word.push_back(labels[b]);
        if (!is_v_word(word)) return false;
    }
    return true;
}

inline bool is_v_monotone_labeling(const Partition& p, const std::vector<int>& labels,
                                   std::optional<int> virtual_root = std::nullopt) {
    if (static_cast<int>(labels.size()) != p.size())
        throw std::invalid_argument("labeling: one label per block required");
    return is_v_monotone_labeling(nesting_forest(p), labels, virtual_root);
}

// ---------------------------------------------------------------------------
// First-block decomposition: pi = {1 = l_0 < ... < l_p} u pi'_1 u ... u pi'_p u pi''.

struct FirstBlockDecomposition {
    std::vector<int> first_block;
    std::vector<Partition> gaps;
    Partition tail;
};

// Blocks of p lying inside [lo, hi], relabeled to start at 1.
inline Partition restrict_range(const Partition& p, int lo, int hi) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        if (b.front() < lo || b.front() > hi) continue;
        if (b.back() > hi) throw std::invalid_argument("restrict_range: block leaves the range");
        std::vector<int> nb;
        for (int x : b) nb.push_back(x - lo + 1);
        blocks.push_back(std::move(nb));
    }
    return make_partition(std::max(0, hi - lo + 1), std::move(blocks));
}

inline FirstBlockDecomposition decompose(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("decompose: empty partition");
    FirstBlockDecomposition d;
    d.first_block = p.blocks.front();  // blocks are ordered by minimum, so this holds 1
    const auto& fb = d.first_block;
    for (size_t q = 1; q < fb.size(); ++q) d.gaps.push_back(restrict_range(p, fb[q - 1] + 1, fb[q] - 1));
    d.tail = restrict_range(p, fb.back() + 1, p.n);
    return d;
}

// ---------------------------------------------------------------------------
// Enumeration of NC^{2+}(n) along the first-block decomposition.

namespace detail {

inline void append_shifted(std::vector<std::vector<int>>& out, const Partition& p, int offset) {
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(x + offset);
        out.push_back(std::move(nb));
    }
}

// All ways to split `len` interior points into gaps separated by middle legs;
// gap sizes are 0 or >= 2 (NC^{2+}(1) is empty).
inline void gap_compositions(int len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    for (int g = 0; g <= len; ++g) {
        if (g == 1) continue;
        cur.push_back(g);
        if (g == len) out.push_back(cur);
        else if (len - g - 1 >= 0) gap_compositions(len - g - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

inline std::vector<Partition> enumerate_nc2p(int n, std::optional<int> k = std::nullopt) {
    if (n < 0) throw std::invalid_argument("enumerate_nc2p: n must be >= 0");
    std::vector<std::vector<Partition>> all(n + 1);
    all[0].push_back(Partition{});
    for (int m = 1; m <= n; ++m) {
        for (int last = 2; last <= m; ++last) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            detail::gap_compositions(last - 2, cur, comps);
            for (const auto& comp : comps) {
                std::vector<int> fb{1};
                std::vector<int> offsets;
                int pos = 1;
                for (int g : comp) {
                    offsets.push_back(pos);
                    pos += g + 1;
                    fb.push_back(pos);
                }
                // cartesian product over gap choices and tail choice
                std::vector<const std::vector<Partition>*> lists;
                for (int g : comp) lists.push_back(&all[g]);
                lists.push_back(&all[m - last]);
                offsets.push_back(last);
                bool any_empty = false;
                for (auto* l : lists) any_empty |= l->empty();
                if (any_empty) continue;
                std::vector<size_t> idx(lists.size(), 0);
                while (true) {
                    std::vector<std::vector<int>> blocks{fb};
                    for (size_t j = 0; j < lists.size(); ++j)
                        detail::append_shifted(blocks, (*lists[j])[idx[j]], offsets[j]);
                    std::sort(blocks.begin(), blocks.end());
                    all[m].push_back(Partition{m, std::move(blocks)});
                    size_t j = lists.size();
                    while (j-- > 0) {
                        if (++idx[j] < lists[j]->size()) break;
                        idx[j] = 0;
                    }
                    if (j == static_cast<size_t>(-1)) break;
                }
            }
        }
    }
    std::vector<Partition> r = std::move(all[n]);
    if (k) std::erase_if(r, [&](const Partition& p) { return p.size() != *k; });
    return r;
}

// ---------------------------------------------------------------------------
// Riordan sequences

enum class Eps : int { minus = -1, circle = 0, plus = 1 };
using EpsilonSequence = std::vector<Eps>;

inline int sgn(Eps e) { return static_cast<int>(e); }

inline char eps_char(Eps e) { return e == Eps::minus ? '-' : (e == Eps::plus ? '+' : 'o'); }

inline std::string to_string(const EpsilonSequence& e) {
    std::string s;
    for (Eps x : e) s += eps_char(x);
    return s;
}

inline EpsilonSequence parse_eps(const std::string& s) {
    EpsilonSequence e;
    for (char c : s) {
        if (c == '-') e.push_back(Eps::minus);
        else if (c == '+') e.push_back(Eps::plus);
        else if (c == 'o' || c == '0') e.push_back(Eps::circle);
        else throw std::invalid_argument("parse_eps: unknown symbol");
    }
    return e;
}

inline bool is_riordan(const EpsilonSequence& e) {
    int s = 0;
    for (Eps x : e) {
        if (s == 0 && x != Eps::minus) return false;
        s += sgn(x);
        if (s > 0) return false;
    }
    return s == 0;
}

inline std::vector<EpsilonSequence> enumerate_riordan(int n) {
    std::vector<EpsilonSequence> out;
    EpsilonSequence cur;
    auto rec = [&](auto&& self, int level) -> void {
        const int left = n - static_cast<int>(cur.size());
        if (left == 0) {
            if (level == 0) out.push_back(cur);
            return;
        }
        for (Eps x : {Eps::minus, Eps::circle, Eps::plus}) {
            if (level == 0 && x != Eps::minus) continue;
            const int nl = level + sgn(x);
            if (nl > 0 || -nl > left - 1) continue;
            cur.push_back(x);
            self(self, nl);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace detail {

// Decodes e[lo..hi) (0-based) into blocks at absolute positions offset+index+1.
inline void riordan_decode(const EpsilonSequence& e, int lo, int hi, std::vector<std::vector<int>>& out) {
    while (lo < hi) {
        // first return to level 0
        int level = 0, m = lo;
        for (;; ++m) {
            level += sgn(e[m]);
            if (level == 0) break;
        }
        std::vector<int> block{lo + 1};
        int gap_start = lo + 1;
        level = -1;
        for (int j = lo + 1; j < m; ++j) {
            if (level == -1 && e[j] == Eps::circle) {
                riordan_decode(e, gap_start, j, out);
                block.push_back(j + 1);
                gap_start = j + 1;
            }
            level += sgn(e[j]);
        }
        riordan_decode(e, gap_start, m, out);
        block.push_back(m + 1);
        out.push_back(std::move(block));
        lo = m + 1;
    }
}

}  // namespace detail

inline Partition riordan_to_partition(const EpsilonSequence& e) {
    if (!is_riordan(e)) throw std::invalid_argument("riordan_to_partition: not a Riordan sequence");
    std::vector<std::vector<int>> blocks;
    detail::riordan_decode(e, 0, static_cast<int>(e.size()), blocks);
    return make_partition(static_cast<int>(e.size()), std::move(blocks));
}

inline EpsilonSequence partition_to_riordan(const Partition& p) {
    if (!is_nc2p(p)) throw std::invalid_argument("partition_to_riordan: partition is not in NC2+");
    EpsilonSequence e(p.n, Eps::circle);
    for (const auto& b : p.blocks) {
        e[b.front() - 1] = Eps::minus;
        e[b.back() - 1] = Eps::plus;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Counting V-monotone labelings.
//
// c_{M,l}(pi) for 0 <= M <= N, 0 <= l <= M+1; l = 0 forces labels to increase
// inward, l = M+1 leaves the outermost labels free.

using LabelTable = std::vector<std::vector<BigInt>>;  // [M][l]

inline LabelTable v_labeling_table(const Partition& p, int N) {
    LabelTable c(N + 1);
    for (int M = 0; M <= N; ++M) c[M].assign(M + 2, BigInt(p.empty() ? 1 : 0));
    if (p.empty()) return c;

    const auto d = decompose(p);
    std::vector<LabelTable> gap_tables;
    for (const auto& g : d.gaps) gap_tables.push_back(v_labeling_table(g, N));
    const LabelTable tail = v_labeling_table(d.tail, N);

    auto prod_at = [&](int M, int l) {
        BigInt r = 1;
        for (const auto& t : gap_tables) r *= t[M][l];
        return r;
    };
    for (int M = 1; M <= N; ++M) {
        std::vector<BigInt> A(M + 1), B(M);  // A[i] = prod c_{M,i}, B[j] = prod c_{j,0}
        for (int i = 1; i <= M; ++i) A[i] = prod_at(M, i);
        for (int j = 0; j < M; ++j) B[j] = prod_at(j, 0);
        // l runs 0..M+1: sum_{i=1}^{l-1} A[i] + sum_{i=l+1}^{M} B[M-i]
        BigInt below = 0, above = 0;
        for (int i = 1; i <= M; ++i) above += B[M - i];
        for (int l = 0; l <= M + 1; ++l) {
            if (l >= 2) below += A[l - 1];
            if (l >= 1 && l <= M) above -= B[M - l];
            c[M][l] = (below + above) * tail[M][l];
        }
    }
    return c;
}

inline BigInt count_v_labelings(const Partition& p, int N, int l) {
    if (N < 0) throw std::invalid_argument("count_v_labelings: N must be >= 0");
    if (l < 0 || l > N + 1) throw std::invalid_argument("count_v_labelings: l outside [0, N+1]");
    if (!is_nc2p(p)) throw std::invalid_argument("count_v_labelings: partition is not in NC2+");
    return v_labeling_table(p, N)[N][l];
}

// Direct enumeration over all N^k labelings.
inline BigInt count_v_labelings_brute(const Partition& p, int N, int l) {
    if (l < 0 || l > N + 1) throw std::invalid_argument("count_v_labelings_brute: l outside [0, N+1]");
    const int k = p.size();
    if (k == 0) return 1;
    if (N == 0) return 0;
    const auto f = nesting_forest(p);
    std::vector<int> lab(k, 1);
    BigInt count = 0;
    while (true) {
        if (is_v_monotone_labeling(f, lab, l)) ++count;
        int j = 0;
        while (j < k && ++lab[j] > N) lab[j++] = 1;
        if (j == k) break;
    }
    return count;
}

// |VL_N(n,k)| = sum over NC2+(n,k) of the unconstrained counts.
inline BigInt vl_count(int n, int k, int N) {
    BigInt s = 0;
    for (const auto& p : enumerate_nc2p(n, k)) s += v_labeling_table(p, N)[N][N + 1];
    return s;
}

// The count is a polynomial in N of degree <= k (each labeling is determined by
// the set of used values and an order pattern on the blocks), so k+1 samples fix it.
inline UPoly vl_polynomial(int n, int k) {
    const auto parts = enumerate_nc2p(n, k);
    std::vector<Rational> vals(k + 1);
    for (int N = 0; N <= k; ++N) {
        BigInt s = 0;
        for (const auto& p : parts) s += v_labeling_table(p, N)[N][N + 1];
        vals[N] = Rational(s);
    }
    // Newton forward differences in the binomial basis C(N, j)
    UPoly result;
    UPoly falling = 1;  // N (N-1) ... (N-j+1)
    std::vector<Rational> diff = vals;
    for (int j = 0; j <= k; ++j) {
        result += UPoly(diff[0] / Rational(factorial(j))) * falling;
        falling *= UPoly(std::vector<Rational>{Rational(-j), Rational(1)});
        for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
    }
    return result;
}

// ---------------------------------------------------------------------------
// Ordered V-monotone partitions

struct OrderedPartition {
    Partition partition;
    std::vector<int> order;  // block index -> position in 1..k
};

inline bool is_v_monotone(const OrderedPartition& op) {
    std::vector<int> seen(op.partition.size() + 1, 0);
    if (op.order.size() != static_cast<size_t>(op.partition.size()))
        throw std::invalid_argument("ordered partition: order size mismatch");
    for (int x : op.order) {
        if (x < 1 || x > op.partition.size() || seen[x]++)
            throw std::invalid_argument("ordered partition: order is not a bijection onto [k]");
    }
    return is_v_monotone_labeling(op.partition, op.order);
}

// |OV(pi)|: orderings of the blocks of pi forming a V-monotone labeling.
inline BigInt count_ordered_v(const Partition& p) {
    const auto f = nesting_forest(p);
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 1);
    BigInt c = 0;
    do {
        if (is_v_monotone_labeling(f, perm)) ++c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

inline BigInt count_ordered_v(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_ordered_v: n, k must be >= 0");
    BigInt s = 0;
    for (const auto& p : enumerate_nc2p(n, k)) s += count_ordered_v(p);
    return s;
}

// Interval partitions of [n] into k blocks, each of size >= 2.
inline BigInt count_interval_2p(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("count_interval_2p: n, k must be >= 0");
    std::vector<std::vector<BigInt>> f(n + 1, std::vector<BigInt>(k + 1, 0));
    f[0][0] = 1;
    for (int m = 2; m <= n; ++m)
        for (int j = 1; j <= k; ++j)
            for (int s = 2; s <= m; ++s) f[m][j] += f[m - s][j - 1];
    return f[n][k];
}

}  // namespace vmp
