#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace hypercover {

// Thrown when a desk-scale size guard refuses an input.
class GuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// HYPERCOVER_GUARD_OVERRIDE=1 lifts every size guard. Unsafe: memory and time
// are then unbounded.
inline bool guards_overridden() {
    const char* value = std::getenv("HYPERCOVER_GUARD_OVERRIDE");
    return value != nullptr && *value != '\0' && std::string(value) != "0";
}

inline void check_guard(bool within, const std::string& what) {
    if (!within && !guards_overridden())
        throw GuardExceeded("size guard exceeded: " + what);
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

// Multiplication clamped at UINT64_MAX, for size estimates that only feed guards.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        return std::numeric_limits<std::uint64_t>::max();
    return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exponent; ++i)
        out = checked_mul(out, base);
    return out;
}

// n choose k, exact; throws std::overflow_error when the value leaves uint64.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient overflows uint64");
    }
    return static_cast<std::uint64_t>(acc);
}

// Calls f(const std::vector<std::uint32_t>&) for every k-subset of {0..n-1}
// in lexicographic order. Stops early if f returns false (when it returns bool).
template <typename F>
void for_each_combination(std::uint32_t n, std::uint32_t k, F&& f) {
    if (k > n)
        return;
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i)
        c[i] = i;
    while (true) {
        if constexpr (std::is_same_v<decltype(f(c)), bool>) {
            if (!f(c))
                return;
        } else {
            f(c);
        }
        if (k == 0)
            return;
        std::uint32_t i = k;
        while (i > 0 && c[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++c[i - 1];
        for (std::uint32_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

// Colexicographic bijection between k-subsets of {0..n-1} and 0..C(n,k)-1.
// rank({c_0 < ... < c_{k-1}}) = sum_i C(c_i, i+1).
class SubsetIndex {
public:
    SubsetIndex(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
        if (k > n)
            throw std::invalid_argument("SubsetIndex: k > n");
        table_.assign(static_cast<std::size_t>(n + 1) * (k + 1), 0);
        for (std::uint32_t a = 0; a <= n; ++a)
            for (std::uint32_t b = 0; b <= k; ++b)
                table_[a * (k + 1) + b] = binomial(a, b);
        size_ = binomial(n, k);
    }

    std::uint32_t ground_size() const { return n_; }
    std::uint32_t subset_size() const { return k_; }
    std::uint64_t size() const { return size_; }

    // subset must be strictly increasing with entries < n.
    std::uint64_t rank(const std::vector<std::uint32_t>& subset) const {
        if (subset.size() != k_)
            throw std::invalid_argument("SubsetIndex::rank: wrong subset size");
        std::uint64_t out = 0;
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (subset[i] >= n_ || (i > 0 && subset[i] <= subset[i - 1]))
                throw std::invalid_argument("SubsetIndex::rank: not a sorted subset of 0..n-1");
            out += choose(subset[i], i + 1);
        }
        return out;
    }

    std::vector<std::uint32_t> unrank(std::uint64_t index) const {
        if (index >= size_)
            throw std::out_of_range("SubsetIndex::unrank: index out of range");
        std::vector<std::uint32_t> out(k_);
        std::uint32_t hi = n_;
        for (std::uint32_t i = k_; i > 0; --i) {
            // largest c < hi with C(c, i) <= index
            std::uint32_t c = hi - 1;
            while (choose(c, i) > index)
                --c;
            out[i - 1] = c;
            index -= choose(c, i);
            hi = c;
        }
        return out;
    }

private:
    std::uint64_t choose(std::uint32_t a, std::uint32_t b) const { return table_[a * (k_ + 1) + b]; }

    std::uint32_t n_;
    std::uint32_t k_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> table_;
};

}  // namespace hypercover
