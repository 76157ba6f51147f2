#pragma once

// Explicit covering constructions of complete hypergraphs: the hexagonal-grid
// {2,3}-cover of K_n, the square-grid 4-multicover of K_n^3, and the two
// baselines (star partition, binary log cover).

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// A target hypergraph with a cover of it.
struct Construction {
    Hypergraph graph;
    Cover cover;
};

struct HexCoord {
    int x = 0;
    int y = 0;
    int z = 0;

    int along(int direction) const { return direction == 0 ? x : direction == 1 ? y : z; }
    friend bool operator==(const HexCoord&, const HexCoord&) = default;
};

// Cube coordinates of a hexagon with m vertices per side, in lexicographic
// order of (x, y); position in the vector is the vertex id. Size 3m^2-3m+1.
inline std::vector<HexCoord> hex_coordinates(int m) {
    if (m < 1)
        throw std::invalid_argument("hex grid side must be >= 1");
    std::vector<HexCoord> out;
    const int radius = m - 1;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y) {
            int z = -x - y;
            if (std::abs(z) <= radius)
                out.push_back({x, y, z});
        }
    return out;
}

inline std::uint64_t hex_vertex_count(std::uint64_t m) { return 3 * m * m - 3 * m + 1; }

namespace detail {

// Blocks (line_i, lines after i) for every line except the last.
inline void add_line_bicliques(Cover& cover, const std::vector<std::vector<Vertex>>& lines) {
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        std::vector<Vertex> later;
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            later.insert(later.end(), lines[j].begin(), lines[j].end());
        if (lines[i].empty() || later.empty())
            continue;
        cover.add(RPartiteBlock({lines[i], later}));
    }
}

// Blocks (line_i, lines after i, lines before i) for 2 <= i <= L-1 (1-based).
inline void add_line_tripartites(Cover& cover, const std::vector<std::vector<Vertex>>& lines) {
    const std::size_t count = lines.size();
    for (std::size_t i = 1; i + 1 < count; ++i) {
        std::vector<Vertex> after;
        std::vector<Vertex> before;
        for (std::size_t j = i + 1; j < count; ++j)
            after.insert(after.end(), lines[j].begin(), lines[j].end());
        for (std::size_t k = 0; k < i; ++k)
            before.insert(before.end(), lines[k].begin(), lines[k].end());
        cover.add(RPartiteBlock({lines[i], after, before}));
    }
}

}  // namespace detail

// K_n on the hexagonal grid of side m, n = 3m^2-3m+1. For each of the three
// line directions, one biclique per line (ascending coordinate) against the
// union of all later lines. Every pair is covered 2 or 3 times.
inline Construction hex_cover(int m) {
    const auto coords = hex_coordinates(m);
    Cover cover(2);
    for (int direction = 0; direction < 3; ++direction) {
        std::map<int, std::vector<Vertex>> lines;
        for (std::size_t v = 0; v < coords.size(); ++v)
            lines[coords[v].along(direction)].push_back(static_cast<Vertex>(v));
        std::vector<std::vector<Vertex>> ordered;
        for (auto& [value, members] : lines)
            ordered.push_back(std::move(members));
        detail::add_line_bicliques(cover, ordered);
    }
    return {complete_hypergraph(coords.size(), 2), std::move(cover)};
}

// Row-major id of grid cell (row, col), both 1-based.
inline Vertex grid_vertex(int m, int row, int col) { return static_cast<Vertex>((row - 1) * m + (col - 1)); }

// K_{m^2}^3 on the m x m grid. Four families of 3-partite blocks, one per
// line direction: rows R_i and columns C_i for 2 <= i <= m-1, diagonals
// M_i = {r-c = i-m} and counter-diagonals N_i = {r+c = i+1} for
// 2 <= i <= 2m-2. Block i has parts (line_i, later lines, earlier lines).
// Every triple is covered between 1 and 4 times; 6m-10 blocks for m >= 3.
inline Construction grid3_cover(int m) {
    if (m < 2)
        throw std::invalid_argument("grid3_cover: side must be >= 2");
    std::vector<std::vector<Vertex>> rows(m), cols(m), diag(2 * m - 1), anti(2 * m - 1);
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c) {
            Vertex v = grid_vertex(m, r, c);
            rows[r - 1].push_back(v);
            cols[c - 1].push_back(v);
            diag[(r - c + m) - 1].push_back(v);
            anti[(r + c - 1) - 1].push_back(v);
        }
    Cover cover(3);
    detail::add_line_tripartites(cover, rows);
    detail::add_line_tripartites(cover, cols);
    detail::add_line_tripartites(cover, diag);
    detail::add_line_tripartites(cover, anti);
    return {complete_hypergraph(static_cast<std::size_t>(m) * m, 3), std::move(cover)};
}

// K_n partitioned into the n-1 stars ({i}, {i+1..n-1}).
inline Construction star_partition(int n) {
    if (n < 2)
        throw std::invalid_argument("star_partition: n must be >= 2");
    Cover cover(2);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Vertex> rest;
        for (int j = i + 1; j < n; ++j)
            rest.push_back(static_cast<Vertex>(j));
        cover.add(RPartiteBlock({{static_cast<Vertex>(i)}, rest}));
    }
    return {complete_hypergraph(n, 2), std::move(cover)};
}

inline int ceil_log2(std::uint64_t n) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < n)
        ++bits;
    return bits;
}

// K_n covered by ceil(log2 n) bicliques: block i splits vertices by bit i.
// The multiplicity of {u,v} is the Hamming distance of u and v.
inline Construction log_cover(int n) {
    if (n < 2)
        throw std::invalid_argument("log_cover: n must be >= 2");
    Cover cover(2);
    for (int bit = 0; bit < ceil_log2(n); ++bit) {
        std::vector<Vertex> zero, one;
        for (int v = 0; v < n; ++v)
            ((v >> bit) & 1 ? one : zero).push_back(static_cast<Vertex>(v));
        if (!zero.empty() && !one.empty())
            cover.add(RPartiteBlock({zero, one}));
    }
    return {complete_hypergraph(n, 2), std::move(cover)};
}

}  // namespace hypercover
