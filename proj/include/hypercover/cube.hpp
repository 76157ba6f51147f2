#pragma once

// Cube hypergraphs G_m^r over the alphabet {0..r-1,*}^m, the label-level
// partition of one extended block into floor((e-1) r!) complete r-partite
// blocks, and the recursive partition of G_m^r built from it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercover/combinatorics.hpp"
#include "hypercover/hypergraph.hpp"

namespace hypercover {

// Coordinate value: fixed values 0..r-1, or the free value kFree ("*").
// kFree compares greater than every fixed value, so 0 < 1 < ... < r-1 < *.
using Label = std::uint8_t;
inline constexpr Label kFree = 0xFF;

using LabelTuple = std::vector<Label>;

inline std::string label_text(Label x) { return x == kFree ? std::string("*") : std::to_string(int{x}); }

// n_r = sum_{k=1}^{r} r!/k! = floor((e-1) r!), in exact integer arithmetic.
// Throws std::overflow_error once the value leaves uint64 (r >= 21).
inline std::uint64_t floor_e_minus_one_factorial(int r) {
    if (r < 1)
        throw std::invalid_argument("floor_e_minus_one_factorial: r must be >= 1");
    std::uint64_t sum = 0;
    std::uint64_t term = 1;  // r!/k! for k = r, r-1, ..., 1
    for (int k = r; k >= 1; --k) {
        sum = checked_add(sum, term);
        if (k > 1)
            term = checked_mul(term, static_cast<std::uint64_t>(k));
    }
    return sum;
}

struct GammaCheck {
    bool pass = false;
    std::uint64_t exact = 0;  // floor_e_minus_one_factorial(r)
    long double closed_form = 0;  // e * Gamma(r+1, 1) - r!
    long double relative_error = 0;
};

// Evaluates e*Gamma(r+1,1) - Gamma(r+1) numerically, with Gamma(1,1) = 1/e and
// Gamma(s+1,1) = s*Gamma(s,1) + 1/e, and compares it to the exact integer.
inline GammaCheck check_gamma_closed_form(int r, long double tolerance = 1e-6L) {
    if (r < 1 || r > 12)
        throw std::invalid_argument("check_gamma_closed_form: r must be in 1..12");
    const long double e = std::exp(1.0L);
    long double upper_gamma = 1.0L / e;  // Gamma(1, 1)
    long double factorial = 1.0L;
    for (int s = 1; s <= r; ++s) {
        upper_gamma = s * upper_gamma + 1.0L / e;
        factorial *= s;
    }
    GammaCheck out;
    out.exact = floor_e_minus_one_factorial(r);
    out.closed_form = e * upper_gamma - factorial;
    out.relative_error = std::fabs(out.closed_form - static_cast<long double>(out.exact)) / out.exact;
    out.pass = out.relative_error <= tolerance;
    return out;
}

// One block of the label partition: label sets S_1..S_r; the block covers
// the label tuples S_1 x ... x S_r. Sets are sorted.
struct LabelBlock {
    std::vector<std::vector<Label>> sets;

    int arity() const { return static_cast<int>(sets.size()); }

    bool contains(const LabelTuple& t) const {
        if (t.size() != sets.size())
            return false;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (!std::binary_search(sets[j].begin(), sets[j].end(), t[j]))
                return false;
        return true;
    }

    std::uint64_t tuple_count() const {
        std::uint64_t out = 1;
        for (const auto& s : sets)
            out *= s.size();
        return out;
    }

    // Lexicographically smallest covered tuple.
    LabelTuple min_tuple() const {
        LabelTuple out;
        for (const auto& s : sets)
            out.push_back(s.front());
        return out;
    }

    friend bool operator==(const LabelBlock&, const LabelBlock&) = default;
};

// True iff every coordinate is fixed and the coordinates are pairwise
// distinct, i.e. the tuple is a permutation of 0..r-1.
inline bool is_fixed_permutation(const LabelTuple& t) {
    std::vector<bool> seen(t.size(), false);
    for (Label x : t) {
        if (x == kFree || x >= t.size() || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

namespace detail {

inline void sort_by_min_tuple(std::vector<LabelBlock>& blocks) {
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const LabelBlock& a, const LabelBlock& b) { return a.min_tuple() < b.min_tuple(); });
}

// Partition of the tuples over fixed ∪ {*} (length |fixed|) that are not
// permutations of `fixed`. Induction on |fixed|: the blocks starting with a
// fixed label a come from the partition over fixed \ {a}, with a inserted
// into the first class that does not extend the run of distinct fixed
// singletons, and into every class after it.
inline std::vector<LabelBlock> label_partition_over(const std::vector<Label>& fixed) {
    const std::size_t k = fixed.size();
    std::vector<Label> full = fixed;
    full.push_back(kFree);
    if (k == 1)
        return {LabelBlock{{{kFree}}}};

    std::vector<LabelBlock> out;
    for (Label a : fixed) {
        std::vector<Label> rest;
        for (Label x : fixed)
            if (x != a)
                rest.push_back(x);
        for (const LabelBlock& sub : label_partition_over(rest)) {
            std::size_t split = 0;
            std::vector<Label> prefix;
            while (split < sub.sets.size()) {
                const auto& s = sub.sets[split];
                bool new_singleton = s.size() == 1 && s[0] != kFree &&
                                     std::find(prefix.begin(), prefix.end(), s[0]) == prefix.end();
                if (!new_singleton)
                    break;
                prefix.push_back(s[0]);
                ++split;
            }
            if (split == sub.sets.size())
                throw std::logic_error("label partition: block covers a permutation tuple");
            LabelBlock block;
            block.sets.push_back({a});
            for (std::size_t j = 0; j < sub.sets.size(); ++j) {
                std::vector<Label> s = sub.sets[j];
                if (j >= split) {
                    s.push_back(a);
                    std::sort(s.begin(), s.end());
                }
                block.sets.push_back(std::move(s));
            }
            out.push_back(std::move(block));
        }
    }
    LabelBlock star;
    star.sets.push_back({kFree});
    for (std::size_t j = 1; j < k; ++j)
        star.sets.push_back(full);
    out.push_back(std::move(star));
    sort_by_min_tuple(out);
    return out;
}

}  // namespace detail

// Partition of {0..r-1,*}^r minus the r! permutation tuples into
// floor((e-1) r!) label blocks, in increasing order of smallest tuple.
inline std::vector<LabelBlock> label_partition(int r, int max_r = 7) {
    if (r < 2 || r > max_r || r >= kFree)
        throw std::invalid_argument("label_partition: r=" + std::to_string(r) + " outside supported range 2.." +
                                    std::to_string(max_r));
    std::vector<Label> fixed;
    for (int x = 0; x < r; ++x)
        fixed.push_back(static_cast<Label>(x));
    return detail::label_partition_over(fixed);
}

// Table layout, one block after another: column j lists S_j as "xαj".
inline std::string label_partition_table(const std::vector<LabelBlock>& blocks) {
    std::ostringstream out;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& sets = blocks[bi].sets;
        std::size_t height = 0;
        std::size_t width = 0;  // in glyphs
        for (std::size_t j = 0; j < sets.size(); ++j) {
            height = std::max(height, sets[j].size());
            for (Label x : sets[j])
                width = std::max(width, label_text(x).size() + 1 + std::to_string(j + 1).size());
        }
        if (bi)
            out << '\n';
        for (std::size_t row = 0; row < height; ++row) {
            std::string line;
            for (std::size_t j = 0; j < sets.size(); ++j) {
                std::string cell;
                std::size_t glyphs = 0;
                if (row < sets[j].size()) {
                    cell = label_text(sets[j][row]) + "α" + std::to_string(j + 1);
                    glyphs = label_text(sets[j][row]).size() + 1 + std::to_string(j + 1).size();
                }
                if (j)
                    line += " | ";
                line += cell + std::string(width - glyphs, ' ');
            }
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            out << line << '\n';
        }
    }
    return out.str();
}

// Vertex ids of G_m^r: base-(r+1) numbers whose most significant digit is the
// first coordinate; * is digit r.
inline std::uint32_t encode_cube_vertex(const LabelTuple& t, int r) {
    std::uint64_t id = 0;
    for (Label x : t)
        id = id * (r + 1) + (x == kFree ? r : x);
    return static_cast<std::uint32_t>(id);
}

inline LabelTuple decode_cube_vertex(std::uint32_t id, int r, int m) {
    LabelTuple t(m);
    for (int i = m - 1; i >= 0; --i) {
        int digit = static_cast<int>(id % (r + 1));
        t[i] = digit == r ? kFree : static_cast<Label>(digit);
        id /= (r + 1);
    }
    return t;
}

struct CubeGraph {
    int r = 2;
    int m = 1;
    Hypergraph graph;
};

inline constexpr std::uint64_t kCubeEdgeGuard = 10'000'000;

inline std::uint64_t cube_vertex_count(int r, int m) { return checked_pow(static_cast<std::uint64_t>(r) + 1, m); }

inline void check_cube_guard(int r, int m) {
    if (r < 2 || m < 1)
        throw std::invalid_argument("cube graph needs r >= 2 and m >= 1");
    if (r >= kFree)
        throw std::invalid_argument("cube graph: r too large");
    std::uint64_t n = 0;
    std::uint64_t subsets = 0;
    try {
        n = cube_vertex_count(r, m);
        subsets = binomial(n, r);
    } catch (const std::overflow_error&) {
        subsets = std::numeric_limits<std::uint64_t>::max();
    }
    check_guard(subsets <= kCubeEdgeGuard && n <= std::numeric_limits<std::uint32_t>::max(),
                "cube graph r=" + std::to_string(r) + " m=" + std::to_string(m) + " has more than 1e7 candidate r-sets");
}

// True iff some coordinate takes all r fixed values across the r tuples.
inline bool is_cube_edge(const std::vector<LabelTuple>& tuples, int r, int m) {
    for (int j = 0; j < m; ++j) {
        std::uint64_t seen = 0;
        bool ok = true;
        for (const auto& t : tuples) {
            Label x = t[j];
            if (x == kFree || (seen >> x) & 1) {
                ok = false;
                break;
            }
            seen |= std::uint64_t{1} << x;
        }
        if (ok && static_cast<int>(tuples.size()) == r)
            return true;
    }
    return false;
}

inline CubeGraph cube_graph(int r, int m) {
    check_cube_guard(r, m);
    const auto n = static_cast<std::uint32_t>(cube_vertex_count(r, m));
    std::vector<LabelTuple> decoded(n);
    for (std::uint32_t v = 0; v < n; ++v)
        decoded[v] = decode_cube_vertex(v, r, m);
    std::vector<Edge> edges;
    std::vector<LabelTuple> tuples(r);
    for_each_combination(n, static_cast<std::uint32_t>(r), [&](const std::vector<std::uint32_t>& c) {
        for (int i = 0; i < r; ++i)
            tuples[i] = decoded[c[i]];
        if (is_cube_edge(tuples, r, m))
            edges.push_back(c);
    });
    return {r, m, Hypergraph(r, n, std::move(edges))};
}

// (B^m - 1)/(B - 1) with B = floor((e-1) r!), computed as sum_{i<m} B^i.
inline std::uint64_t pinto_upper_bound(int r, int m) {
    if (r < 2 || m < 1)
        throw std::invalid_argument("pinto_upper_bound: needs r >= 2 and m >= 1");
    const std::uint64_t base = floor_e_minus_one_factorial(r);
    std::uint64_t sum = 0;
    std::uint64_t power = 1;
    for (int i = 0; i < m; ++i) {
        sum = checked_add(sum, power);
        if (i + 1 < m)
            power = checked_mul(power, base);
    }
    return sum;
}

// Partition of G_m^r. Level 1 is the single block of the r fixed singletons.
// Level k+1 is W (class i = every vertex whose first coordinate is i),
// followed, for each block of level k in order, by the label partition
// instantiated on that block's classes with the new first coordinate.
inline Cover pi_partition(int r, int m) {
    check_cube_guard(r, m);
    Cover level(r);
    {
        std::vector<std::vector<Vertex>> parts;
        for (int i = 0; i < r; ++i)
            parts.push_back({static_cast<Vertex>(i)});
        level.add(RPartiteBlock(std::move(parts)));
    }
    const auto labels = label_partition(r, r);
    std::uint64_t stride = r + 1;  // vertex count at the current level
    for (int k = 1; k < m; ++k) {
        auto digit = [r](Label x) -> std::uint64_t { return x == kFree ? r : x; };
        Cover next(r);
        std::vector<std::vector<Vertex>> w(r);
        for (int i = 0; i < r; ++i)
            for (std::uint64_t v = 0; v < stride; ++v)
                w[i].push_back(static_cast<Vertex>(i * stride + v));
        next.add(RPartiteBlock(std::move(w)));
        for (const auto& parent : level.blocks()) {
            for (const auto& lb : labels) {
                std::vector<std::vector<Vertex>> parts(r);
                for (int j = 0; j < r; ++j)
                    for (Label x : lb.sets[j])
                        for (Vertex v : parent.parts()[j])
                            parts[j].push_back(static_cast<Vertex>(digit(x) * stride + v));
                next.add(RPartiteBlock(std::move(parts)));
            }
        }
        level = std::move(next);
        stride *= (r + 1);
    }
    return level;
}

}  // namespace hypercover
