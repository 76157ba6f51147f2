#pragma once

// Closed-form lower bounds on cover order and cover size, the derandomized
// independent-set extractor behind the order bound, iterated peeling into a
// proper coloring, and greedy hypergraph coloring.
//
// All logarithms are base 2.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// n * log(n / alpha) / log(r / (r-1)): no cover of an r-uniform hypergraph on
// n vertices with independence number alpha has smaller total order. For r = 2
// this is n * log2(n / alpha); for larger r it sits above (r-1) * n * ln(n / alpha).
inline double ks_order_lower_bound(std::uint64_t n, std::uint64_t alpha, int r) {
    if (r < 2)
        throw std::invalid_argument("ks_order_lower_bound: r must be >= 2");
    if (alpha < 1 || alpha > n)
        throw std::invalid_argument("ks_order_lower_bound: need 1 <= alpha <= n");
    if (alpha == n)
        return 0.0;
    const double ratio = static_cast<double>(n) / static_cast<double>(alpha);
    if (r == 2)
        return static_cast<double>(n) * std::log2(ratio);
    return static_cast<double>(n) * std::log(ratio) / std::log(static_cast<double>(r) / (r - 1));
}

struct ChromaticBoundCases {
    double many_rounds = 0;  // (r-1)^2 k [log k - log log k - log log log k]
    double few_rounds = 0;   // (r-1)^2 k (log k - log log k - 1) - 2r(r-1)^2 k
    double value = 0;        // min of the two
};

inline ChromaticBoundCases ks_chromatic_bound_cases(std::uint64_t k, int r) {
    if (r < 2)
        throw std::invalid_argument("ks_chromatic_lower_bound: r must be >= 2");
    if (k < 17)
        throw std::invalid_argument("ks_chromatic_lower_bound: k must be >= 17 (log log log k must be positive)");
    const double lk = std::log2(static_cast<double>(k));
    const double llk = std::log2(lk);
    const double lllk = std::log2(llk);
    const double scale = static_cast<double>(r - 1) * (r - 1) * static_cast<double>(k);
    ChromaticBoundCases out;
    out.many_rounds = scale * (lk - llk - lllk);
    out.few_rounds = scale * (lk - llk - 1) - 2.0 * r * scale;
    out.value = std::min(out.many_rounds, out.few_rounds);
    return out;
}

// Lower bound on the cover order of an r-uniform hypergraph with chromatic
// number k: the smaller of the two explicit case expressions.
inline double ks_chromatic_lower_bound(std::uint64_t k, int r) { return ks_chromatic_bound_cases(k, r).value; }

// nu^{1+1/(r-1)} / |E|^{1/(r-1)}
inline double matching_cover_lower_bound(std::uint64_t nu, std::uint64_t edge_count, int r) {
    if (r < 2)
        throw std::invalid_argument("matching_cover_lower_bound: r must be >= 2");
    if (nu < 1 || edge_count < nu)
        throw std::invalid_argument("matching_cover_lower_bound: need 1 <= nu <= |E|");
    const double p = 1.0 / (r - 1);
    return std::pow(static_cast<double>(nu), 1.0 + p) / std::pow(static_cast<double>(edge_count), p);
}

// k^{1/(r-1)} m^{1+1/(r-1)} / |E|^{1/(r-1)} for k pairwise independent m-matchings.
inline double independent_matchings_lower_bound(std::uint64_t k, std::uint64_t m, std::uint64_t edge_count, int r) {
    if (r < 2)
        throw std::invalid_argument("independent_matchings_lower_bound: r must be >= 2");
    if (k < 1 || m < 1)
        throw std::invalid_argument("independent_matchings_lower_bound: need k, m >= 1");
    if (edge_count < k * m)
        throw std::invalid_argument("independent_matchings_lower_bound: need |E| >= k*m");
    const double p = 1.0 / (r - 1);
    return std::pow(static_cast<double>(k), p) * std::pow(static_cast<double>(m), 1.0 + p) /
           std::pow(static_cast<double>(edge_count), p);
}

inline std::uint64_t sum_of_orders(const Cover& c) {
    std::uint64_t out = 0;
    for (const auto& b : c.blocks())
        out += block_order(b);
    return out;
}

// a_i = number of blocks containing vertex i.
struct CoverIncidence {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }
};

inline CoverIncidence cover_incidence(const Cover& c, std::size_t n) {
    CoverIncidence out;
    out.counts.assign(n, 0);
    for (const auto& b : c.blocks())
        for (const auto& part : b.parts())
            for (Vertex v : part) {
                if (v >= n)
                    throw std::out_of_range("cover_incidence: vertex " + std::to_string(v) + " >= n");
                ++out.counts[v];
            }
    return out;
}

inline bool is_independent(const Hypergraph& h, const std::vector<Vertex>& set) {
    std::vector<bool> in(h.vertex_count(), false);
    for (Vertex v : set)
        in.at(v) = true;
    for (const Edge& e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; }))
            return false;
    return true;
}

// Every edge sees at least two colors.
inline bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& colors) {
    if (colors.size() != h.vertex_count())
        return false;
    for (const Edge& e : h.edges()) {
        bool mono = true;
        for (Vertex v : e)
            mono = mono && colors[v] == colors[e.front()];
        if (mono)
            return false;
    }
    return true;
}

inline int color_count(const std::vector<int>& colors) {
    int top = -1;
    for (int c : colors)
        top = std::max(top, c);
    return top + 1;
}

struct IndependentSetResult {
    std::vector<Vertex> vertices;  // survivors, ascending
    // Conditional expectation of the survivor count: before any block, then
    // after each block's deletion. Never decreases.
    std::vector<long double> expectation;
    std::vector<std::size_t> deleted_part;  // per block
    long double initial_expectation = 0;    // sum_i (1-1/r)^{a_i}
    std::uint64_t guaranteed_size = 0;      // ceil(initial_expectation)
};

// Derandomized version of "delete one uniformly random class of every block":
// blocks are processed in order, and each deletes the class that keeps the
// conditional expectation sum_{alive v} (1-1/r)^{blocks of v still ahead}
// largest (lowest class index on ties). Requires every edge of h to be
// covered at least once; the survivors are then independent.
inline IndependentSetResult extract_independent_set(const Hypergraph& h, const Cover& c) {
    const MultiplicityProfile profile = multiplicity_profile(h, c);
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (profile.counts[i] == 0)
            throw std::invalid_argument("extract_independent_set: cover misses edge " + to_string(h.edges()[i]));

    const std::size_t n = h.vertex_count();
    const long double q = 1.0L - 1.0L / h.uniformity();
    std::vector<std::uint64_t> remaining = cover_incidence(c, n).counts;
    std::vector<bool> alive(n, true);
    auto expectation = [&] {
        long double sum = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v])
                sum += std::pow(q, static_cast<long double>(remaining[v]));
        return sum;
    };

    IndependentSetResult out;
    out.initial_expectation = expectation();
    out.expectation.push_back(out.initial_expectation);
    out.guaranteed_size = static_cast<std::uint64_t>(std::ceil(out.initial_expectation - 1e-9L));

    for (const auto& block : c.blocks()) {
        // Deleting class p loses sum_{alive v in p} q^{remaining_v - 1} relative
        // to the other classes; pick the class that loses least.
        std::size_t best = 0;
        long double best_loss = 0;
        for (std::size_t p = 0; p < block.parts().size(); ++p) {
            long double loss = 0;
            for (Vertex v : block.parts()[p])
                if (alive[v])
                    loss += std::pow(q, static_cast<long double>(remaining[v] - 1));
            if (p == 0 || loss < best_loss) {
                best = p;
                best_loss = loss;
            }
        }
        for (Vertex v : block.parts()[best])
            alive[v] = false;
        for (const auto& part : block.parts())
            for (Vertex v : part)
                --remaining[v];
        out.deleted_part.push_back(best);
        out.expectation.push_back(expectation());
    }
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v])
            out.vertices.push_back(static_cast<Vertex>(v));
    return out;
}

// Subhypergraph induced on `keep` (ascending), relabelled to 0..|keep|-1.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<Vertex>& keep) {
    std::vector<std::int64_t> local(h.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        local.at(keep[i]) = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        Edge mapped;
        for (Vertex v : e) {
            if (local[v] < 0)
                break;
            mapped.push_back(static_cast<Vertex>(local[v]));
        }
        if (mapped.size() == e.size())
            edges.push_back(std::move(mapped));
    }
    return Hypergraph(h.uniformity(), keep.size(), std::move(edges));
}

// Each block cut down to `keep` (relabelled as in induced_subhypergraph);
// blocks that lose a whole class are dropped. Covers the induced
// subhypergraph whenever the original cover covers h.
inline Cover restrict_cover(const Cover& c, const std::vector<Vertex>& keep, std::size_t n) {
    std::vector<std::int64_t> local(n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        local.at(keep[i]) = static_cast<std::int64_t>(i);
    Cover out(c.uniformity());
    for (const auto& b : c.blocks()) {
        std::vector<std::vector<Vertex>> parts;
        bool nonempty = true;
        for (const auto& part : b.parts()) {
            std::vector<Vertex> kept;
            for (Vertex v : part)
                if (v < n && local[v] >= 0)
                    kept.push_back(static_cast<Vertex>(local[v]));
            nonempty = nonempty && !kept.empty();
            parts.push_back(std::move(kept));
        }
        if (nonempty)
            out.add(RPartiteBlock(std::move(parts)));
    }
    return out;
}

// One singleton-class block per edge.
inline Cover edge_blocks_cover(const Hypergraph& h) {
    Cover out(h.uniformity());
    for (const Edge& e : h.edges()) {
        std::vector<std::vector<Vertex>> parts;
        for (Vertex v : e)
            parts.push_back({v});
        out.add(RPartiteBlock(std::move(parts)));
    }
    return out;
}

using CoverProvider = std::function<Cover(const Hypergraph&)>;

struct PeelColoring {
    std::vector<int> colors;
    std::vector<std::size_t> class_sizes;  // survivor-set size of each round
};

// Repeatedly extracts an independent set from the subhypergraph induced on
// the uncolored vertices and gives it a fresh color.
inline PeelColoring peel_coloring(const Hypergraph& h, const CoverProvider& provider) {
    PeelColoring out;
    out.colors.assign(h.vertex_count(), -1);
    std::vector<Vertex> remaining(h.vertex_count());
    std::iota(remaining.begin(), remaining.end(), Vertex{0});
    int color = 0;
    while (!remaining.empty()) {
        const Hypergraph sub = induced_subhypergraph(h, remaining);
        const Cover cover = provider(sub);
        const auto found = extract_independent_set(sub, cover);
        if (found.vertices.empty())
            throw std::logic_error("peel_coloring: empty independent set");
        std::vector<bool> taken(remaining.size(), false);
        for (Vertex local : found.vertices) {
            out.colors[remaining[local]] = color;
            taken[local] = true;
        }
        out.class_sizes.push_back(found.vertices.size());
        std::vector<Vertex> next;
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (!taken[i])
                next.push_back(remaining[i]);
        remaining = std::move(next);
        ++color;
    }
    return out;
}

// Colors vertices in `order`, each with the smallest color that completes no
// monochromatic edge among the vertices colored so far.
inline std::vector<int> greedy_color(const Hypergraph& h, const std::vector<Vertex>& order) {
    const std::size_t n = h.vertex_count();
    {
        std::vector<bool> seen(n, false);
        if (order.size() != n)
            throw std::invalid_argument("greedy_color: order is not a permutation of the vertices");
        for (Vertex v : order) {
            if (v >= n || seen[v])
                throw std::invalid_argument("greedy_color: order is not a permutation of the vertices");
            seen[v] = true;
        }
    }
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edges()[i])
            incident[v].push_back(i);

    std::vector<int> colors(n, -1);
    std::vector<bool> forbidden;
    for (Vertex v : order) {
        forbidden.assign(n + 1, false);
        for (std::size_t ei : incident[v]) {
            int shared = -2;
            for (Vertex u : h.edges()[ei]) {
                if (u == v)
                    continue;
                if (colors[u] < 0 || (shared != -2 && colors[u] != shared)) {
                    shared = -1;
                    break;
                }
                shared = colors[u];
            }
            if (shared >= 0)
                forbidden[shared] = true;
        }
        int c = 0;
        while (forbidden[c])
            ++c;
        colors[v] = c;
    }
    return colors;
}

// Vertices ordered by color class (class 0 first), ascending within a class.
inline std::vector<Vertex> order_by_color_classes(const std::vector<int>& colors) {
    std::vector<Vertex> order(colors.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    return order;
}

inline std::vector<std::size_t> color_class_sizes(const std::vector<int>& colors) {
    std::vector<std::size_t> out(color_count(colors), 0);
    for (int c : colors)
        ++out[c];
    return out;
}

}  // namespace hypercover
