#pragma once

// Seeded generators and naive reference computations shared by the tests.
// The references deliberately avoid the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace testsupport {

using hypercover::Cover;
using hypercover::Edge;
using hypercover::Hypergraph;
using hypercover::RPartiteBlock;
using hypercover::Vertex;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(engine_); }
    template <typename T>
    void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), engine_); }

private:
    std::mt19937_64 engine_;
};

// Every r-subset of 0..n-1 in lexicographic order, by odometer.
inline std::vector<Edge> all_subsets(std::size_t n, std::size_t r) {
    std::vector<Edge> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r)
            continue;
        Edge e;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                e.push_back(static_cast<Vertex>(v));
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Hypergraph random_graph(Rng& rng, std::size_t n, int r, double p) {
    std::vector<Edge> edges;
    for (const Edge& e : all_subsets(n, r))
        if (rng.coin(p))
            edges.push_back(e);
    return Hypergraph(r, n, edges);
}

// A random block containing `e`: vertex e[i] seeds class i and every other
// vertex joins a random class or stays out.
inline RPartiteBlock random_block_through(Rng& rng, const Edge& e, std::size_t n, double join) {
    const std::size_t r = e.size();
    std::vector<std::vector<Vertex>> parts(r);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < r; ++i) {
        parts[i].push_back(e[i]);
        used[e[i]] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!used[v] && rng.coin(join))
            parts[rng.below(r)].push_back(static_cast<Vertex>(v));
    return RPartiteBlock(parts);
}

// A cover hitting every edge of h at least once; blocks may imply non-edges.
inline Cover random_cover(Rng& rng, const Hypergraph& h, double join) {
    Cover c(h.uniformity());
    std::vector<bool> done(h.edge_count(), false);
    std::vector<std::size_t> order(h.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    for (std::size_t i : order) {
        if (done[i])
            continue;
        RPartiteBlock b = random_block_through(rng, h.edges()[i], h.vertex_count(), join);
        for (std::size_t j = 0; j < h.edge_count(); ++j)
            if (!done[j]) {
                // membership by permutation search
                Edge perm = h.edges()[j];
                do {
                    bool in = true;
                    for (std::size_t p = 0; p < perm.size() && in; ++p)
                        in = std::binary_search(b.parts()[p].begin(), b.parts()[p].end(), perm[p]);
                    if (in) {
                        done[j] = true;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        c.add(b);
    }
    return c;
}

// Block membership by trying every assignment of the edge's vertices to classes.
inline bool naive_in_block(const RPartiteBlock& b, Edge e) {
    std::sort(e.begin(), e.end());
    do {
        bool in = true;
        for (std::size_t p = 0; p < e.size() && in; ++p)
            in = std::find(b.parts()[p].begin(), b.parts()[p].end(), e[p]) != b.parts()[p].end();
        if (in)
            return true;
    } while (std::next_permutation(e.begin(), e.end()));
    return false;
}

// Multiplicity of every r-subset of 0..n-1 under c.
inline std::vector<std::size_t> naive_multiplicities(const Cover& c, const std::vector<Edge>& sets) {
    std::vector<std::size_t> out;
    for (const Edge& e : sets) {
        std::size_t k = 0;
        for (const auto& b : c.blocks())
            k += naive_in_block(b, e);
        out.push_back(k);
    }
    return out;
}

inline bool edge_inside(const Edge& e, std::uint64_t mask) {
    for (Vertex v : e)
        if (!((mask >> v) & 1))
            return false;
    return true;
}

inline std::size_t naive_independence(const Hypergraph& h) {
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.vertex_count()); ++mask) {
        bool ok = true;
        for (const Edge& e : h.edges())
            if (edge_inside(e, mask)) {
                ok = false;
                break;
            }
        if (ok)
            best = std::max<std::size_t>(best, __builtin_popcountll(mask));
    }
    return best;
}

inline std::size_t naive_matching(const Hypergraph& h) {
    std::size_t best = 0;
    const std::size_t m = h.edge_count();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        std::uint64_t used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if ((pick >> i) & 1)
                for (Vertex v : h.edges()[i]) {
                    if ((used >> v) & 1)
                        ok = false;
                    used |= std::uint64_t{1} << v;
                }
        if (ok)
            best = std::max<std::size_t>(best, __builtin_popcountll(pick));
    }
    return best;
}

inline std::size_t naive_chromatic(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    if (n == 0)
        return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> color(n, 0);
        while (true) {
            bool proper = true;
            for (const Edge& e : h.edges()) {
                bool mono = true;
                for (Vertex v : e)
                    mono = mono && color[v] == color[e[0]];
                if (mono) {
                    proper = false;
                    break;
                }
            }
            if (proper)
                return k;
            std::size_t i = 0;
            while (i < n && ++color[i] == k)
                color[i++] = 0;
            if (i == n)
                break;
        }
    }
}

// GF(2) rank of a small 0/1 matrix as log2 of the size of its row span.
inline std::size_t span_rank(const std::vector<std::vector<int>>& rows) {
    std::set<std::vector<int>> span;
    const std::size_t m = rows.size();
    const std::size_t cols = m ? rows[0].size() : 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        std::vector<int> v(cols, 0);
        for (std::size_t i = 0; i < m; ++i)
            if ((pick >> i) & 1)
                for (std::size_t j = 0; j < cols; ++j)
                    v[j] ^= rows[i][j];
        span.insert(v);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size())
        ++rank;
    return rank;
}

// GF(2) rank by plain row reduction on an int matrix.
inline std::size_t dense_rank(std::vector<std::vector<int>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && !a[p][c])
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && a[i][c])
                for (std::size_t j = 0; j < cols; ++j)
                    a[i][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

}  // namespace testsupport
