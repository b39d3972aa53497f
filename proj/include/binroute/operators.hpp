#ifndef BINROUTE_OPERATORS_HPP
#define BINROUTE_OPERATORS_HPP

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "binroute/common.hpp"
#include "binroute/rng.hpp"

namespace binroute {

enum class CrossoverOp { PMX, OX, CX, CX2 };
enum class MutationOp { EM, IM, INM };

inline std::string to_string(CrossoverOp op) {
    switch (op) {
        case CrossoverOp::PMX: return "PMX";
        case CrossoverOp::OX: return "OX";
        case CrossoverOp::CX: return "CX";
        case CrossoverOp::CX2: return "CX2";
    }
    return "?";
}

inline std::string to_string(MutationOp op) {
    switch (op) {
        case MutationOp::EM: return "EM";
        case MutationOp::IM: return "IM";
        case MutationOp::INM: return "INM";
    }
    return "?";
}

inline CrossoverOp crossover_from_string(const std::string& s) {
    if (s == "PMX") return CrossoverOp::PMX;
    if (s == "OX") return CrossoverOp::OX;
    if (s == "CX") return CrossoverOp::CX;
    if (s == "CX2") return CrossoverOp::CX2;
    throw Error("unknown crossover operator: " + s);
}

inline MutationOp mutation_from_string(const std::string& s) {
    if (s == "EM") return MutationOp::EM;
    if (s == "IM") return MutationOp::IM;
    if (s == "INM") return MutationOp::INM;
    throw Error("unknown mutation operator: " + s);
}

using Perm = std::vector<int>;

namespace detail {

// Positions of each value in a permutation; values may be any ints, so a
// linear scan map is built per call (rows are short).
inline std::vector<int> position_of(const Perm& p, int max_value) {
    std::vector<int> pos(max_value + 1, -1);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) pos[p[i]] = i;
    return pos;
}

inline int max_value(const Perm& p) {
    int m = 0;
    for (int v : p) m = std::max(m, v);
    return m;
}

}  // namespace detail

// Partially mapped crossover: the cut segment is kept from the own parent,
// the rest comes from the mate, conflicts resolved through the segment
// mapping. cut_lo..cut_hi are 0-based inclusive.
inline std::pair<Perm, Perm> pmx_cross(const Perm& a, const Perm& b, int cut_lo, int cut_hi) {
    const int n = static_cast<int>(a.size());
    const int maxv = detail::max_value(a);
    auto make_child = [&](const Perm& own, const Perm& mate) {
        Perm child(n, -1);
        std::vector<uint8_t> in_segment(maxv + 1, 0);
        for (int i = cut_lo; i <= cut_hi; ++i) {
            child[i] = own[i];
            in_segment[own[i]] = 1;
        }
        const std::vector<int> pos_own = detail::position_of(own, maxv);
        for (int i = 0; i < n; ++i) {
            if (i >= cut_lo && i <= cut_hi) continue;
            int gene = mate[i];
            while (in_segment[gene]) gene = mate[pos_own[gene]];
            child[i] = gene;
        }
        return child;
    };
    return {make_child(a, b), make_child(b, a)};
}

// Order crossover: keep the cut segment, fill remaining slots with the mate's
// genes in rotational order starting after the second cut.
inline std::pair<Perm, Perm> ox_cross(const Perm& a, const Perm& b, int cut_lo, int cut_hi) {
    const int n = static_cast<int>(a.size());
    const int maxv = detail::max_value(a);
    auto make_child = [&](const Perm& own, const Perm& mate) {
        Perm child(n, -1);
        std::vector<uint8_t> in_segment(maxv + 1, 0);
        for (int i = cut_lo; i <= cut_hi; ++i) {
            child[i] = own[i];
            in_segment[own[i]] = 1;
        }
        int fill = (cut_hi + 1) % n;
        for (int k = 0; k < n; ++k) {
            const int gene = mate[(cut_hi + 1 + k) % n];
            if (in_segment[gene]) continue;
            child[fill] = gene;
            fill = (fill + 1) % n;
        }
        return child;
    };
    return {make_child(a, b), make_child(b, a)};
}

// Cycle crossover: positions are partitioned into alternating cycles; the
// first child keeps even cycles from the first parent.
inline std::pair<Perm, Perm> cx_cross(const Perm& a, const Perm& b) {
    const int n = static_cast<int>(a.size());
    const int maxv = detail::max_value(a);
    const std::vector<int> pos_a = detail::position_of(a, maxv);
    std::vector<int> cycle(n, -1);
    int n_cycles = 0;
    for (int start = 0; start < n; ++start) {
        if (cycle[start] != -1) continue;
        int i = start;
        while (cycle[i] == -1) {
            cycle[i] = n_cycles;
            i = pos_a[b[i]];
        }
        ++n_cycles;
    }
    Perm c1(n), c2(n);
    for (int i = 0; i < n; ++i) {
        if (cycle[i] % 2 == 0) {
            c1[i] = a[i];
            c2[i] = b[i];
        } else {
            c1[i] = b[i];
            c2[i] = a[i];
        }
    }
    return {c1, c2};
}

// Modified cycle crossover. Both offspring draw values from the second
// parent: the first with single lookup moves, the second with double moves.
// A round ends when the first parent's leading value lands in offspring two;
// leftovers are handled by re-running on the remaining values. If a round
// closes with diverging value sets (cycle length divisible by three) the
// offspring complete from the opposite parent's unused values in order.
inline std::pair<Perm, Perm> cx2_cross(const Perm& a, const Perm& b) {
    const int n = static_cast<int>(a.size());
    const int maxv = detail::max_value(a);
    Perm o1, o2;
    o1.reserve(n);
    o2.reserve(n);
    std::vector<uint8_t> used(maxv + 1, 0);

    Perm sub1 = a, sub2 = b;
    while (static_cast<int>(o1.size()) < n) {
        const std::vector<int> pos1 = detail::position_of(sub1, maxv);
        std::vector<int> round1, round2;
        std::vector<uint8_t> seen1(maxv + 1, 0), seen2(maxv + 1, 0);
        int v = sub2[0];
        bool diverged = false;
        while (true) {
            if (seen1[v]) {
                diverged = true;
                break;
            }
            round1.push_back(v);
            seen1[v] = 1;
            const int w = sub2[pos1[v]];
            const int w2 = sub2[pos1[w]];
            if (seen2[w2]) {
                diverged = true;
                break;
            }
            round2.push_back(w2);
            seen2[w2] = 1;
            if (w2 == sub1[0]) break;
            v = sub2[pos1[w2]];
        }

        if (diverged || round1.size() != round2.size() || seen1 != seen2) {
            // Complete from the untouched values, preserving parent order.
            std::vector<uint8_t> used1 = used, used2 = used;
            for (int x : round1) used1[x] = 1;
            for (int x : round2) used2[x] = 1;
            o1.insert(o1.end(), round1.begin(), round1.end());
            o2.insert(o2.end(), round2.begin(), round2.end());
            for (int x : b)
                if (!used1[x]) o1.push_back(x);
            for (int x : a)
                if (!used2[x]) o2.push_back(x);
            return {o1, o2};
        }

        o1.insert(o1.end(), round1.begin(), round1.end());
        o2.insert(o2.end(), round2.begin(), round2.end());
        for (int x : round1) used[x] = 1;

        Perm next1, next2;
        for (int x : sub1)
            if (!used[x]) next1.push_back(x);
        for (int x : sub2)
            if (!used[x]) next2.push_back(x);
        sub1 = std::move(next1);
        sub2 = std::move(next2);
    }
    return {o1, o2};
}

inline std::pair<Perm, Perm> crossover_perm(const Perm& a, const Perm& b, CrossoverOp op,
                                            Rng& rng) {
    const int n = static_cast<int>(a.size());
    switch (op) {
        case CrossoverOp::PMX:
        case CrossoverOp::OX: {
            int lo = rng.uniform_int(0, n - 1);
            int hi = rng.uniform_int(0, n - 1);
            if (lo > hi) std::swap(lo, hi);
            return op == CrossoverOp::PMX ? pmx_cross(a, b, lo, hi) : ox_cross(a, b, lo, hi);
        }
        case CrossoverOp::CX: return cx_cross(a, b);
        case CrossoverOp::CX2: return cx2_cross(a, b);
    }
    throw Error("unreachable crossover op");
}

// Exchange mutation: swap two sampled positions (which may coincide).
inline void em_swap(Perm& row, int i, int j) { std::swap(row[i], row[j]); }

// Insertion mutation: remove the element at i, reinsert at position j of the
// reduced row.
inline void im_move(Perm& row, int i, int j) {
    const int v = row[i];
    row.erase(row.begin() + i);
    row.insert(row.begin() + j, v);
}

// Inversion mutation: reverse the inclusive segment [i, j].
inline void inm_reverse(Perm& row, int i, int j) {
    std::reverse(row.begin() + i, row.begin() + j + 1);
}

inline void mutate_perm(Perm& row, MutationOp op, Rng& rng) {
    const int n = static_cast<int>(row.size());
    if (n < 2) return;
    switch (op) {
        case MutationOp::EM:
            em_swap(row, rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1));
            return;
        case MutationOp::IM:
            im_move(row, rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 2));
            return;
        case MutationOp::INM: {
            int i = rng.uniform_int(0, n - 1);
            int j = rng.uniform_int(0, n - 1);
            if (i > j) std::swap(i, j);
            inm_reverse(row, i, j);
            return;
        }
    }
}

// Two-point crossover on the flattened working-day bits of both masks.
// Rest-day columns are never touched and stay false.
inline void crossover_mask(BoolMat& a, BoolMat& b, const std::vector<int>& working_days,
                           Rng& rng) {
    const int n = a.rows();
    const int bits = n * static_cast<int>(working_days.size());
    if (bits == 0) return;
    int lo = rng.uniform_int(0, bits);
    int hi = rng.uniform_int(0, bits);
    if (lo > hi) std::swap(lo, hi);
    for (int k = lo; k < hi; ++k) {
        const int i = k / static_cast<int>(working_days.size());
        const int t = working_days[k % working_days.size()];
        std::swap(a(i, t), b(i, t));
    }
}

// Uniform bit-flip mutation on working-day bits at the given per-bit rate.
inline void mutate_mask(BoolMat& mask, const std::vector<int>& working_days, double rate,
                        Rng& rng) {
    for (int i = 0; i < mask.rows(); ++i)
        for (int t : working_days)
            if (rng.bernoulli(rate)) mask(i, t) = !mask(i, t);
}

}  // namespace binroute

#endif
