#pragma once

// Exhaustive ground truth on small instances: candidate block enumeration,
// minimum L-cover and partition size, minimum sum of orders, and the
// independence, matching and chromatic numbers.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypercover/combinatorics.hpp"
#include "hypercover/hypergraph.hpp"

namespace hypercover {

// Every complete r-partite block on vertices of h with non-empty classes,
// one representative per unordered class set. With within_edges, only blocks
// whose implied edges are all edges of h. Order: restricted-growth labelling
// of vertices 0..n-1 with "unused" as label 0, in lexicographic order.
inline std::vector<RPartiteBlock> enumerate_blocks(const Hypergraph& h, bool within_edges = true) {
    const int r = h.uniformity();
    const std::size_t n = h.vertex_count();
    check_guard(n <= (r == 2 ? 8u : 7u), r == 2 ? "enumerate_blocks: n > 8 for r = 2" : "enumerate_blocks: n > 7 for r >= 3");
    std::vector<RPartiteBlock> out;
    if (n < static_cast<std::size_t>(r))
        return out;
    std::vector<int> label(n, 0);
    auto emit = [&] {
        std::vector<std::vector<Vertex>> parts(r);
        for (std::size_t v = 0; v < n; ++v)
            if (label[v] > 0)
                parts[label[v] - 1].push_back(static_cast<Vertex>(v));
        RPartiteBlock block(std::move(parts));
        if (within_edges) {
            if (block_edge_count(block) > h.edge_count())
                return;
            bool inside = true;
            block.for_each_edge([&](const Edge& e) { inside = inside && h.contains(e); });
            if (!inside)
                return;
        }
        out.push_back(std::move(block));
    };
    auto rec = [&](auto&& self, std::size_t v, int used) -> void {
        if (static_cast<std::size_t>(r - used) > n - v)
            return;
        if (v == n) {
            emit();
            return;
        }
        for (int l = 0; l <= std::min(used + 1, r); ++l) {
            label[v] = l;
            self(self, v + 1, std::max(used, l));
        }
        label[v] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

struct SearchBudget {
    std::size_t max_blocks = 64;
    std::size_t max_candidates = 200'000;
    double time_limit_seconds = 120.0;
    std::uint64_t max_nodes = 200'000'000;
};

struct SearchResult {
    bool exact = false;
    // The optimum when exact; otherwise a proven lower bound.
    std::uint64_t value = 0;
    std::optional<std::uint64_t> upper;
    Cover witness;
    std::uint64_t nodes = 0;
    std::string reason;  // why the search stopped short
};

namespace detail {

class SearchClock {
public:
    explicit SearchClock(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Counts one node; false once the node or time budget is spent.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) {
            reason_ = "node budget exhausted";
            return false;
        }
        if ((nodes_ & 0x3ff) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.time_limit_seconds) {
                reason_ = "time budget exhausted";
                return false;
            }
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::string& reason() const { return reason_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    std::string reason_;
};

struct Candidate {
    std::size_t block;                // index into the candidate list
    std::vector<std::size_t> edges;   // edge indices it covers, ascending
};

inline std::vector<Candidate> candidate_edges(const Hypergraph& h, const std::vector<RPartiteBlock>& blocks) {
    std::vector<Candidate> out;
    out.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Candidate c{i, {}};
        bool inside = true;
        blocks[i].for_each_edge([&](const Edge& e) {
            auto idx = h.find(e);
            if (idx)
                c.edges.push_back(*idx);
            else
                inside = false;
        });
        if (!inside)
            throw std::invalid_argument("search: candidate block has an edge outside h");
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
    }
    return out;
}

// Drops candidates whose edge set lies inside another candidate's edge set
// (keeping the first of equal sets).
inline std::vector<Candidate> maximal_candidates(const std::vector<Candidate>& all) {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
            if (i == j || all[j].edges.size() < all[i].edges.size())
                continue;
            if (all[j].edges.size() == all[i].edges.size() && j > i)
                continue;
            dominated = std::includes(all[j].edges.begin(), all[j].edges.end(), all[i].edges.begin(),
                                      all[i].edges.end());
        }
        if (!dominated)
            out.push_back(all[i]);
    }
    return out;
}

}  // namespace detail

// Smallest number of candidate blocks (repetition allowed) giving every edge
// of h a multiplicity in L. Blocks come from `candidates`, which must imply
// only edges of h. Iterative deepening on the block count; branches on the
// first edge whose multiplicity is not yet allowed.
inline SearchResult min_cover_size_over(const Hypergraph& h, const MultiplicityList& list,
                                        const std::vector<RPartiteBlock>& candidates, const SearchBudget& budget = {}) {
    SearchResult result;
    result.witness = Cover(h.uniformity());
    const std::size_t edge_count = h.edge_count();
    if (edge_count == 0) {
        result.exact = true;
        return result;
    }
    if (candidates.size() > budget.max_candidates) {
        result.value = 1;
        result.reason = "candidate budget exhausted";
        return result;
    }
    if (!list.unbounded() && *list.max() > 255)
        throw std::invalid_argument("min_cover_size: multiplicities above 255 are not supported");

    std::vector<detail::Candidate> pool = detail::candidate_edges(h, candidates);
    if (list.unbounded())
        pool = detail::maximal_candidates(pool);
    // Canonical pool order so the answer and witness do not depend on the
    // caller's candidate order.
    std::sort(pool.begin(), pool.end(), [&](const detail::Candidate& a, const detail::Candidate& b) {
        if (a.edges.size() != b.edges.size())
            return a.edges.size() > b.edges.size();
        if (a.edges != b.edges)
            return a.edges < b.edges;
        return candidates[a.block].parts() < candidates[b.block].parts();
    });

    // Multiplicities are tracked up to `cap`; deficit[c] is the distance from
    // c to the next allowed value (or -1 if none).
    const unsigned cap = list.unbounded() ? 1u : *list.max();
    std::vector<int> deficit(cap + 2, -1);
    for (unsigned c = 0; c <= cap; ++c)
        for (unsigned t = std::max(c, 1u); t <= cap; ++t)
            if (list.allows(t)) {
                deficit[c] = static_cast<int>(t - c);
                break;
            }

    std::vector<std::vector<std::size_t>> by_edge(edge_count);
    std::size_t widest = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t e : pool[i].edges)
            by_edge[e].push_back(i);
        widest = std::max(widest, pool[i].edges.size());
    }
    for (std::size_t e = 0; e < edge_count; ++e)
        if (by_edge[e].empty()) {
            result.reason = "no candidate covers edge " + to_string(h.edges()[e]);
            throw std::invalid_argument("min_cover_size: " + result.reason);
        }

    detail::SearchClock clock(budget);
    std::string counts(edge_count, '\0');
    std::unordered_map<std::string, std::size_t> failed;  // state -> largest depth that failed
    std::vector<std::size_t> chosen;
    bool aborted = false;

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (!clock.tick()) {
            aborted = true;
            return false;
        }
        std::size_t first = edge_count;
        std::uint64_t total_deficit = 0;
        for (std::size_t e = 0; e < edge_count; ++e) {
            int d = deficit[static_cast<unsigned char>(counts[e])];
            if (d != 0 && first == edge_count)
                first = e;
            total_deficit += static_cast<std::uint64_t>(d);
        }
        if (first == edge_count)
            return true;
        if (depth == 0 || total_deficit > depth * widest)
            return false;
        auto it = failed.find(counts);
        if (it != failed.end() && it->second >= depth)
            return false;
        for (std::size_t ci : by_edge[first]) {
            const auto& cand = pool[ci];
            bool fits = true;
            for (std::size_t e : cand.edges)
                fits = fits && static_cast<unsigned char>(counts[e]) < cap;
            if (!fits)
                continue;
            for (std::size_t e : cand.edges)
                ++counts[e];
            chosen.push_back(ci);
            if (self(self, depth - 1))
                return true;
            chosen.pop_back();
            for (std::size_t e : cand.edges)
                --counts[e];
            if (aborted)
                return false;
        }
        auto& slot = failed[counts];
        slot = std::max(slot, depth);
        return false;
    };

    // Unbounded lists only need "covered or not"; undo rebuilds from `chosen`.
    if (list.unbounded()) {
        auto rebuild = [&] {
            std::fill(counts.begin(), counts.end(), '\0');
            for (std::size_t ci : chosen)
                for (std::size_t e : pool[ci].edges)
                    counts[e] = 1;
        };
        auto search_unbounded = [&](auto&& self, std::size_t depth) -> bool {
            if (!clock.tick()) {
                aborted = true;
                return false;
            }
            std::size_t first = edge_count, uncovered = 0;
            for (std::size_t e = 0; e < edge_count; ++e)
                if (!counts[e]) {
                    if (first == edge_count)
                        first = e;
                    ++uncovered;
                }
            if (first == edge_count)
                return true;
            if (depth == 0 || uncovered > depth * widest)
                return false;
            auto it = failed.find(counts);
            if (it != failed.end() && it->second >= depth)
                return false;
            for (std::size_t ci : by_edge[first]) {
                chosen.push_back(ci);
                for (std::size_t e : pool[ci].edges)
                    counts[e] = 1;
                if (self(self, depth - 1))
                    return true;
                chosen.pop_back();
                rebuild();
                if (aborted)
                    return false;
            }
            auto& slot = failed[counts];
            slot = std::max(slot, depth);
            return false;
        };
        for (std::size_t t = 1; t <= budget.max_blocks; ++t) {
            if (search_unbounded(search_unbounded, t)) {
                result.exact = true;
                result.value = t;
                break;
            }
            if (aborted) {
                result.value = t;
                result.reason = clock.reason();
                break;
            }
            result.value = t + 1;
        }
    } else {
        for (std::size_t t = 1; t <= budget.max_blocks; ++t) {
            if (search(search, t)) {
                result.exact = true;
                result.value = t;
                break;
            }
            if (aborted) {
                result.value = t;
                result.reason = clock.reason();
                break;
            }
            result.value = t + 1;
        }
    }
    if (!result.exact && result.reason.empty())
        result.reason = "block budget exhausted";
    if (result.exact)
        for (std::size_t ci : chosen)
            result.witness.add(candidates[pool[ci].block]);
    result.nodes = clock.nodes();
    return result;
}

inline SearchResult min_cover_size(const Hypergraph& h, const MultiplicityList& list, const SearchBudget& budget = {}) {
    return min_cover_size_over(h, list, enumerate_blocks(h, true), budget);
}

inline SearchResult min_partition_size(const Hypergraph& h, const SearchBudget& budget = {}) {
    return min_cover_size(h, MultiplicityList::exactly_once(), budget);
}

// Minimum total order over covers of h (every edge at least once, no block
// implying a non-edge). Iterative deepening on the cost.
inline SearchResult min_sum_of_orders(const Hypergraph& h, const SearchBudget& budget = {}) {
    check_guard(h.vertex_count() <= 5, "min_sum_of_orders: n > 5");
    SearchResult result;
    result.witness = Cover(h.uniformity());
    const std::size_t edge_count = h.edge_count();
    if (edge_count == 0) {
        result.exact = true;
        return result;
    }
    const std::vector<RPartiteBlock> blocks = enumerate_blocks(h, true);
    const auto pool = detail::candidate_edges(h, blocks);
    std::vector<std::uint64_t> mask(pool.size(), 0), order(pool.size(), 0);
    std::vector<std::vector<std::size_t>> by_edge(edge_count);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t e : pool[i].edges) {
            mask[i] |= std::uint64_t{1} << e;
            by_edge[e].push_back(i);
        }
        order[i] = block_order(blocks[i]);
    }
    const std::uint64_t full = edge_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edge_count) - 1;
    const std::uint64_t r = static_cast<std::uint64_t>(h.uniformity());

    detail::SearchClock clock(budget);
    std::unordered_map<std::uint64_t, std::uint64_t> failed;  // covered mask -> largest failed budget
    std::vector<std::size_t> chosen;
    bool aborted = false;
    auto search = [&](auto&& self, std::uint64_t covered, std::uint64_t left) -> bool {
        if (covered == full)
            return true;
        if (!clock.tick()) {
            aborted = true;
            return false;
        }
        if (left < r)
            return false;
        auto it = failed.find(covered);
        if (it != failed.end() && it->second >= left)
            return false;
        std::size_t first = static_cast<std::size_t>(__builtin_ctzll(~covered & full));
        for (std::size_t ci : by_edge[first]) {
            if (order[ci] > left)
                continue;
            chosen.push_back(ci);
            if (self(self, covered | mask[ci], left - order[ci]))
                return true;
            chosen.pop_back();
            if (aborted)
                return false;
        }
        auto& slot = failed[covered];
        slot = std::max(slot, left);
        return false;
    };
    const std::uint64_t upper = r * edge_count;  // one block per edge
    result.upper = upper;
    for (std::uint64_t cost = r; cost <= upper; ++cost) {
        if (search(search, 0, cost)) {
            result.exact = true;
            result.value = cost;
            break;
        }
        if (aborted) {
            result.value = cost;
            result.reason = clock.reason();
            break;
        }
    }
    if (result.exact) {
        result.upper.reset();
        for (std::size_t ci : chosen)
            result.witness.add(blocks[ci]);
    }
    result.nodes = clock.nodes();
    return result;
}

// Largest vertex set containing no edge of h. Branch and bound over vertices.
inline std::size_t independence_number(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    check_guard(n <= 20, "independence_number: n > 20");
    // Edges grouped by their largest vertex, as bitmasks.
    std::vector<std::vector<std::uint32_t>> closing(n);
    for (const Edge& e : h.edges()) {
        std::uint32_t m = 0;
        for (Vertex v : e)
            m |= std::uint32_t{1} << v;
        closing[e.back()].push_back(m);
    }
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t set, std::size_t size) -> void {
        if (size + (n - v) <= best)
            return;
        if (v == n) {
            best = size;
            return;
        }
        const std::uint32_t with = set | (std::uint32_t{1} << v);
        bool ok = true;
        for (std::uint32_t m : closing[v])
            if ((m & with) == m) {
                ok = false;
                break;
            }
        if (ok)
            self(self, v + 1, with, size + 1);
        self(self, v + 1, set, size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

// Largest set of pairwise disjoint edges. Branches on the lowest free vertex:
// either it stays unmatched or one of its edges inside the free set is taken.
inline std::size_t matching_number(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    check_guard(n <= 40, "matching_number: n > 40");
    check_guard(h.edge_count() <= 100'000, "matching_number: more than 100000 edges");
    const std::size_t r = static_cast<std::size_t>(h.uniformity());
    std::vector<std::vector<std::uint64_t>> lowest(n);  // edges by smallest vertex
    for (const Edge& e : h.edges()) {
        std::uint64_t m = 0;
        for (Vertex v : e)
            m |= std::uint64_t{1} << v;
        lowest[e.front()].push_back(m);
    }
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t v, std::uint64_t used, std::size_t size) -> void {
        while (v < n && ((used >> v) & 1))
            ++v;
        const std::size_t free = n - v - static_cast<std::size_t>(__builtin_popcountll(used >> v));
        // Every vertex below v is decided, so only vertices >= v remain free.
        if (size + free / r <= best)
            return;
        if (v >= n) {
            best = std::max(best, size);
            return;
        }
        for (std::uint64_t m : lowest[v])
            if ((m & used) == 0)
                self(self, v + 1, used | m, size + 1);
        self(self, v + 1, used | (std::uint64_t{1} << v), size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

// Fewest colors with no monochromatic edge. Tries k = 1, 2, ... with
// backtracking; colors are introduced in order to skip relabellings.
inline std::size_t chromatic_number(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    check_guard(n <= 12, "chromatic_number: n > 12");
    if (n == 0)
        return 0;
    std::vector<std::vector<const Edge*>> closing(n);
    for (const Edge& e : h.edges())
        closing[e.back()].push_back(&e);
    std::vector<int> color(n, -1);
    auto colorable = [&](auto&& self, std::size_t v, int used, int k) -> bool {
        if (v == n)
            return true;
        for (int c = 0; c <= std::min(used, k - 1); ++c) {
            color[v] = c;
            bool ok = true;
            for (const Edge* e : closing[v]) {
                bool mono = true;
                for (Vertex u : *e)
                    mono = mono && color[u] == c;
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, v + 1, std::max(used, c + 1), k))
                return true;
        }
        color[v] = -1;
        return false;
    };
    for (std::size_t k = 1;; ++k)
        if (colorable(colorable, 0, 0, static_cast<int>(k)))
            return k;
}

}  // namespace hypercover
