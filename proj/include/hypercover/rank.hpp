#pragma once

// GF(2) rank certificates: packed binary matrices, disjointness matrices,
// the half-edge adjacency matrix of the cube hypergraph, and the partition
// lower bounds they certify.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercover/combinatorics.hpp"
#include "hypercover/cube.hpp"

namespace hypercover {

inline constexpr std::uint64_t kMatrixRowGuard = 20'000;

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            out.set(i, i, true);
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return (data_[i * words_ + j / 64] >> (j % 64)) & 1; }
    void set(std::size_t i, std::size_t j, bool value) {
        std::uint64_t& w = data_[i * words_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = value ? (w | bit) : (w & ~bit);
    }

    bool symmetric() const {
        if (rows_ != cols_)
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (get(i, j) != get(j, i))
                    return false;
        return true;
    }

    // Rows and columns reordered: out(i, j) = this(row_order[i], col_order[j]).
    GF2Matrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const {
        GF2Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out.set(i, j, get(row_order[i], col_order[j]));
        return out;
    }

    // Gaussian elimination on a copy of the packed rows.
    std::size_t rank() const {
        std::vector<std::uint64_t> m = data_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            const std::size_t word = col / 64;
            const std::uint64_t bit = std::uint64_t{1} << (col % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * words_ + word] & bit))
                ++pivot;
            if (pivot == rows_)
                continue;
            if (pivot != rank)
                std::swap_ranges(m.begin() + pivot * words_, m.begin() + (pivot + 1) * words_,
                                 m.begin() + rank * words_);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i != rank && (m[i * words_ + word] & bit)) {
                    for (std::size_t w = word; w < words_; ++w)
                        m[i * words_ + w] ^= m[rank * words_ + w];
                }
            }
            ++rank;
        }
        return rank;
    }

    // Dump format: "rows cols", then one line per row of ceil(cols/4)
    // lowercase hex digits; column 0 is the high bit of the first digit.
    void write(std::ostream& out) const {
        static const char* digits = "0123456789abcdef";
        out << rows_ << ' ' << cols_ << '\n';
        const std::size_t nibbles = (cols_ + 3) / 4;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::string line(nibbles, '0');
            for (std::size_t q = 0; q < nibbles; ++q) {
                int v = 0;
                for (std::size_t b = 0; b < 4; ++b) {
                    std::size_t j = q * 4 + b;
                    v = (v << 1) | (j < cols_ && get(i, j) ? 1 : 0);
                }
                line[q] = digits[v];
            }
            out << line << '\n';
        }
    }

    static GF2Matrix read(std::istream& in) {
        std::size_t rows = 0, cols = 0;
        if (!(in >> rows >> cols))
            throw std::invalid_argument("GF2Matrix::read: bad header");
        GF2Matrix out(rows, cols);
        const std::size_t nibbles = (cols + 3) / 4;
        for (std::size_t i = 0; i < rows; ++i) {
            std::string line;
            if (!(in >> line) || line.size() != nibbles)
                throw std::invalid_argument("GF2Matrix::read: bad row " + std::to_string(i));
            for (std::size_t q = 0; q < nibbles; ++q) {
                char c = line[q];
                int v = (c >= '0' && c <= '9') ? c - '0' : (c >= 'a' && c <= 'f') ? c - 'a' + 10 : -1;
                if (v < 0)
                    throw std::invalid_argument("GF2Matrix::read: bad hex digit");
                for (std::size_t b = 0; b < 4; ++b) {
                    std::size_t j = q * 4 + b;
                    bool bit = (v >> (3 - b)) & 1;
                    if (j < cols)
                        out.set(i, j, bit);
                    else if (bit)
                        throw std::invalid_argument("GF2Matrix::read: padding bit set");
                }
            }
        }
        return out;
    }

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

inline std::size_t gf2_rank(const GF2Matrix& m) { return m.rank(); }

namespace detail {

inline bool sorted_disjoint(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        a[i] < b[j] ? ++i : ++j;
    }
    return true;
}

}  // namespace detail

// D(n,k): rows and columns are the k-subsets of {0..n-1} in colex order;
// entry 1 iff the two subsets are disjoint.
inline GF2Matrix disjointness_matrix(std::uint32_t n, std::uint32_t k) {
    if (k > n)
        throw std::invalid_argument("disjointness_matrix: k > n");
    const SubsetIndex index(n, k);
    check_guard(index.size() <= kMatrixRowGuard, "disjointness matrix has more than 20000 rows");
    const std::size_t size = index.size();
    std::vector<std::vector<std::uint32_t>> subsets(size);
    for (std::size_t i = 0; i < size; ++i)
        subsets[i] = index.unrank(i);
    GF2Matrix out(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (detail::sorted_disjoint(subsets[i], subsets[j]))
                out.set(i, j, true);
    return out;
}

// Half-edge adjacency of G_m^r (r even): rows and columns are the r/2-subsets
// of the (r+1)^m vertices in colex order; entry 1 iff the subsets are
// disjoint and their union is an edge of G_m^r.
inline GF2Matrix adjacency_cube_matrix(int r, int m) {
    if (r < 4 || r % 2 != 0)
        throw std::invalid_argument("adjacency_cube_matrix: r must be even and >= 4");
    if (m < 1)
        throw std::invalid_argument("adjacency_cube_matrix: m must be >= 1");
    const std::uint64_t n = cube_vertex_count(r, m);
    std::uint64_t rows = 0;
    try {
        rows = binomial(n, r / 2);
    } catch (const std::overflow_error&) {
        rows = std::numeric_limits<std::uint64_t>::max();
    }
    check_guard(rows <= kMatrixRowGuard, "adjacency matrix has more than 20000 rows");
    const SubsetIndex index(static_cast<std::uint32_t>(n), r / 2);
    std::vector<LabelTuple> decoded(n);
    for (std::uint32_t v = 0; v < n; ++v)
        decoded[v] = decode_cube_vertex(v, r, m);
    std::vector<std::vector<std::uint32_t>> subsets(rows);
    for (std::size_t i = 0; i < rows; ++i)
        subsets[i] = index.unrank(i);

    GF2Matrix out(rows, rows);
    std::vector<LabelTuple> tuples(r);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < rows; ++j) {
            const auto& a = subsets[i];
            const auto& b = subsets[j];
            if (!detail::sorted_disjoint(a, b))
                continue;
            for (int t = 0; t < r / 2; ++t) {
                tuples[t] = decoded[a[t]];
                tuples[r / 2 + t] = decoded[b[t]];
            }
            if (is_cube_edge(tuples, r, m)) {
                out.set(i, j, true);
                out.set(j, i, true);
            }
        }
    }
    return out;
}

// Largest GF(2) adjacency rank that a d-block partition permits: d * C(r, r/2).
inline std::uint64_t rank_bound_from_cover(std::uint64_t blocks, int r) {
    if (r < 2 || r % 2 != 0)
        throw std::invalid_argument("rank_bound_from_cover: r must be even and >= 2");
    return checked_mul(blocks, binomial(r, r / 2));
}

// The certified rank floor [(C(r,r/2)+1)^m - 1] for even r.
inline std::uint64_t adjacency_rank_lower_bound(int r, int m) {
    if (r < 4 || r % 2 != 0 || m < 1)
        throw std::invalid_argument("adjacency_rank_lower_bound: r must be even >= 4, m >= 1");
    return checked_pow(binomial(r, r / 2) + 1, m) - 1;
}

// ceil(([C+1]^m - 1) / C) with C = C(r, r/2) for even r and
// C = C(r-1, (r-1)/2) for odd r.
inline std::uint64_t partition_lower_bound(int r, int m) {
    if (r < 3 || m < 1)
        throw std::invalid_argument("partition_lower_bound: needs r >= 3 and m >= 1");
    const int even = r % 2 == 0 ? r : r - 1;
    const std::uint64_t c = binomial(even, even / 2);
    const std::uint64_t numerator = checked_pow(c + 1, m) - 1;
    return (numerator + c - 1) / c;
}

}  // namespace hypercover
