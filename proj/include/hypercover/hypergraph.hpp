#pragma once

// Core data model: r-uniform hypergraphs, complete r-partite blocks, covers,
// multiplicity lists, and the multiplicity verifier every construction is
// checked against.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercover/combinatorics.hpp"

namespace hypercover {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;  // sorted, distinct

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Vertex v : e) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string to_string(const Edge& e) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < e.size(); ++i)
        out << (i ? "," : "") << e[i];
    out << '}';
    return out.str();
}

class Hypergraph {
public:
    Hypergraph() = default;

    // Canonicalizes: each edge is sorted, the edge list sorted and deduplicated.
    Hypergraph(int r, std::size_t n, std::vector<Edge> edges) : r_(r), n_(n) {
        if (r < 2)
            throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
        for (Edge& e : edges) {
            if (e.size() != static_cast<std::size_t>(r))
                throw std::invalid_argument("Hypergraph: edge " + to_string(e) + " does not have r vertices");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("Hypergraph: edge " + to_string(e) + " repeats a vertex");
            if (e.back() >= n)
                throw std::out_of_range("Hypergraph: edge " + to_string(e) + " has a vertex >= n");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        index_.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            index_.emplace(edges_[i], i);
    }

    int uniformity() const { return r_; }
    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Position of a canonical (sorted) edge in edges().
    std::optional<std::size_t> find(const Edge& sorted_edge) const {
        auto it = index_.find(sorted_edge);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    bool contains(const Edge& sorted_edge) const { return index_.count(sorted_edge) != 0; }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int r_ = 2;
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::unordered_map<Edge, std::size_t, EdgeHash> index_;
};

// K_n^r: every r-subset of 0..n-1.
inline Hypergraph complete_hypergraph(std::size_t n, int r) {
    if (r < 2)
        throw std::invalid_argument("complete_hypergraph: r must be >= 2");
    check_guard(binomial(n, r) <= 10'000'000, "complete hypergraph has more than 1e7 edges");
    std::vector<Edge> edges;
    for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r),
                         [&](const std::vector<std::uint32_t>& c) { edges.push_back(c); });
    return Hypergraph(r, n, std::move(edges));
}

// A complete r-partite r-graph: r pairwise disjoint, non-empty vertex classes.
// Its edges are the r-sets with exactly one vertex in each class.
class RPartiteBlock {
public:
    RPartiteBlock() = default;

    // Brace lists such as {{v}, rest} always mean one part per element.
    RPartiteBlock(std::initializer_list<std::vector<Vertex>> parts)
        : RPartiteBlock(std::vector<std::vector<Vertex>>(parts)) {}

    explicit RPartiteBlock(std::vector<std::vector<Vertex>> parts) : parts_(std::move(parts)) {
        if (parts_.size() < 2)
            throw std::invalid_argument("RPartiteBlock: need at least 2 parts");
        std::set<Vertex> seen;
        for (auto& part : parts_) {
            if (part.empty())
                throw std::invalid_argument("RPartiteBlock: empty part");
            std::sort(part.begin(), part.end());
            for (Vertex v : part)
                if (!seen.insert(v).second)
                    throw std::invalid_argument("RPartiteBlock: parts are not pairwise disjoint (vertex " +
                                                std::to_string(v) + ")");
        }
    }

    int uniformity() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<Vertex>>& parts() const { return parts_; }

    Vertex max_vertex() const {
        Vertex out = 0;
        for (const auto& part : parts_)
            out = std::max(out, part.back());
        return out;
    }

    // Calls f(const Edge&) with each implied edge in canonical (sorted) form.
    template <typename F>
    void for_each_edge(F&& f) const {
        const std::size_t r = parts_.size();
        std::vector<std::size_t> pick(r, 0);
        Edge e(r);
        while (true) {
            for (std::size_t i = 0; i < r; ++i)
                e[i] = parts_[i][pick[i]];
            Edge sorted = e;
            std::sort(sorted.begin(), sorted.end());
            f(static_cast<const Edge&>(sorted));
            std::size_t i = r;
            while (i > 0) {
                --i;
                if (++pick[i] < parts_[i].size())
                    break;
                pick[i] = 0;
                if (i == 0)
                    return;
            }
        }
    }

    // True iff the sorted r-set takes exactly one vertex from each class.
    bool contains_edge(const Edge& e) const {
        if (e.size() != parts_.size())
            return false;
        std::vector<bool> hit(parts_.size(), false);
        for (Vertex v : e) {
            std::size_t p = part_of(v);
            if (p == npos || hit[p])
                return false;
            hit[p] = true;
        }
        return true;
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t part_of(Vertex v) const {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (std::binary_search(parts_[i].begin(), parts_[i].end(), v))
                return i;
        return npos;
    }

    friend bool operator==(const RPartiteBlock& a, const RPartiteBlock& b) { return a.parts_ == b.parts_; }

private:
    std::vector<std::vector<Vertex>> parts_;
};

// Product of part sizes, saturating at UINT64_MAX.
inline std::uint64_t block_edge_count(const RPartiteBlock& b) {
    std::uint64_t out = 1;
    for (const auto& part : b.parts())
        out = saturating_mul(out, part.size());
    return out;
}

// Number of vertices in the block.
inline std::uint64_t block_order(const RPartiteBlock& b) {
    std::uint64_t out = 0;
    for (const auto& part : b.parts())
        out += part.size();
    return out;
}

class Cover {
public:
    explicit Cover(int r = 2, std::vector<RPartiteBlock> blocks = {}) : r_(r), blocks_(std::move(blocks)) {
        if (r < 2)
            throw std::invalid_argument("Cover: uniformity must be >= 2");
        for (const auto& b : blocks_)
            check(b);
    }

    void add(RPartiteBlock b) {
        check(b);
        blocks_.push_back(std::move(b));
    }

    int uniformity() const { return r_; }
    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const std::vector<RPartiteBlock>& blocks() const { return blocks_; }
    const RPartiteBlock& operator[](std::size_t i) const { return blocks_[i]; }

    friend bool operator==(const Cover& a, const Cover& b) { return a.r_ == b.r_ && a.blocks_ == b.blocks_; }

private:
    void check(const RPartiteBlock& b) const {
        if (b.uniformity() != r_)
            throw std::invalid_argument("Cover: block uniformity " + std::to_string(b.uniformity()) +
                                        " differs from cover uniformity " + std::to_string(r_));
    }

    int r_;
    std::vector<RPartiteBlock> blocks_;
};

// The list L of allowed multiplicities. "any" is the unbounded list {1,2,...}.
class MultiplicityList {
public:
    static MultiplicityList any() {
        MultiplicityList out;
        out.unbounded_ = true;
        return out;
    }
    static MultiplicityList exactly_once() { return MultiplicityList({1}); }
    static MultiplicityList up_to(unsigned p) {
        if (p < 1)
            throw std::invalid_argument("MultiplicityList: range 1..p needs p >= 1");
        std::set<unsigned> s;
        for (unsigned i = 1; i <= p; ++i)
            s.insert(i);
        return MultiplicityList(std::move(s));
    }

    explicit MultiplicityList(std::set<unsigned> allowed) : allowed_(std::move(allowed)) {
        if (allowed_.empty())
            throw std::invalid_argument("MultiplicityList: list is empty");
        if (*allowed_.begin() < 1)
            throw std::invalid_argument("MultiplicityList: members must be >= 1");
    }

    // Accepts "a,b,c", "1..p" (or "lo..hi"), or "any".
    static MultiplicityList parse(const std::string& text) {
        if (text == "any")
            return any();
        auto dots = text.find("..");
        if (dots != std::string::npos) {
            unsigned lo = parse_number(text.substr(0, dots));
            unsigned hi = parse_number(text.substr(dots + 2));
            if (lo < 1 || hi < lo)
                throw std::invalid_argument("MultiplicityList: bad range '" + text + "'");
            std::set<unsigned> s;
            for (unsigned i = lo; i <= hi; ++i)
                s.insert(i);
            return MultiplicityList(std::move(s));
        }
        std::set<unsigned> s;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            s.insert(parse_number(item));
        return MultiplicityList(std::move(s));
    }

    bool unbounded() const { return unbounded_; }
    bool allows(std::size_t k) const {
        if (k < 1)
            return false;
        return unbounded_ || allowed_.count(static_cast<unsigned>(k)) != 0;
    }
    // Largest allowed value; nullopt when unbounded.
    std::optional<unsigned> max() const {
        if (unbounded_)
            return std::nullopt;
        return *allowed_.rbegin();
    }
    const std::set<unsigned>& members() const { return allowed_; }

    std::string to_string() const {
        if (unbounded_)
            return "any";
        std::string out;
        for (unsigned v : allowed_)
            out += (out.empty() ? "" : ",") + std::to_string(v);
        return out;
    }

private:
    MultiplicityList() = default;

    static unsigned parse_number(const std::string& s) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("MultiplicityList: '" + s + "' is not a number");
        }
        if (used != s.size())
            throw std::invalid_argument("MultiplicityList: '" + s + "' is not a number");
        return static_cast<unsigned>(v);
    }

    std::set<unsigned> allowed_;
    bool unbounded_ = false;
};

// A named bound value with its inputs, for machine-checkable comparisons.
struct BoundReport {
    enum class Direction { lower, upper, exact };

    std::string name;
    std::map<std::string, double> inputs;
    double value = 0.0;
    Direction direction = Direction::lower;
};

inline const char* to_string(BoundReport::Direction d) {
    switch (d) {
    case BoundReport::Direction::lower:
        return "lower";
    case BoundReport::Direction::upper:
        return "upper";
    case BoundReport::Direction::exact:
        return "exact";
    }
    return "lower";
}

struct ForeignEdge {
    std::size_t block = 0;  // index into the cover
    Edge edge;
};

struct MultiplicityProfile {
    std::vector<std::size_t> counts;  // counts[i] belongs to h.edges()[i]
    std::vector<ForeignEdge> foreign;

    // multiplicity -> number of edges with that multiplicity
    std::map<std::size_t, std::size_t> histogram() const {
        std::map<std::size_t, std::size_t> out;
        for (std::size_t c : counts)
            ++out[c];
        return out;
    }
};

namespace detail {

inline void check_compatible(const Hypergraph& h, const Cover& c) {
    if (c.uniformity() != h.uniformity())
        throw std::invalid_argument("uniformity mismatch: hypergraph r=" + std::to_string(h.uniformity()) +
                                    ", cover r=" + std::to_string(c.uniformity()));
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].max_vertex() >= h.vertex_count())
            throw std::out_of_range("block " + std::to_string(i) + " uses a vertex >= n=" +
                                    std::to_string(h.vertex_count()));
}

}  // namespace detail

// For each edge of h, the number of blocks containing it, plus every
// block-implied edge that is not an edge of h.
inline MultiplicityProfile multiplicity_profile(const Hypergraph& h, const Cover& c) {
    detail::check_compatible(h, c);
    MultiplicityProfile out;
    out.counts.assign(h.edge_count(), 0);
    for (std::size_t bi = 0; bi < c.size(); ++bi) {
        const RPartiteBlock& block = c[bi];
        const std::uint64_t implied = block_edge_count(block);
        if (implied <= h.edge_count()) {
            block.for_each_edge([&](const Edge& e) {
                if (auto pos = h.find(e))
                    ++out.counts[*pos];
                else
                    out.foreign.push_back({bi, e});
            });
            continue;
        }
        // Block larger than h: test each edge of h, then enumerate only if
        // some implied edge must lie outside h.
        std::vector<std::size_t> part(h.vertex_count(), RPartiteBlock::npos);
        for (std::size_t p = 0; p < block.parts().size(); ++p)
            for (Vertex v : block.parts()[p])
                part[v] = p;
        std::uint64_t inside = 0;
        std::vector<bool> hit(block.parts().size());
        for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
            std::fill(hit.begin(), hit.end(), false);
            bool member = true;
            for (Vertex v : h.edges()[ei]) {
                std::size_t p = part[v];
                if (p == RPartiteBlock::npos || hit[p]) {
                    member = false;
                    break;
                }
                hit[p] = true;
            }
            if (member) {
                ++out.counts[ei];
                ++inside;
            }
        }
        if (inside < implied)
            block.for_each_edge([&](const Edge& e) {
                if (!h.contains(e))
                    out.foreign.push_back({bi, e});
            });
    }
    return out;
}

struct VerifyResult {
    bool ok = true;
    // Set on failure: the first offending edge in canonical order, or a
    // foreign edge when every edge of h has an allowed multiplicity.
    std::optional<Edge> witness;
    std::size_t witness_multiplicity = 0;
    bool witness_is_foreign = false;
    std::vector<ForeignEdge> foreign;
    MultiplicityProfile profile;

    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_cover(const Hypergraph& h, const Cover& c, const MultiplicityList& list) {
    VerifyResult out;
    out.profile = multiplicity_profile(h, c);
    out.foreign = out.profile.foreign;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (!list.allows(out.profile.counts[i])) {
            out.ok = false;
            out.witness = h.edges()[i];
            out.witness_multiplicity = out.profile.counts[i];
            return out;
        }
    }
    if (!out.foreign.empty()) {
        out.ok = false;
        out.witness = out.foreign.front().edge;
        out.witness_is_foreign = true;
        std::size_t k = 0;
        for (const auto& f : out.foreign)
            if (f.edge == *out.witness)
                ++k;
        out.witness_multiplicity = k;
    }
    return out;
}

inline VerifyResult verify_partition(const Hypergraph& h, const Cover& c) {
    return verify_cover(h, c, MultiplicityList::exactly_once());
}

}  // namespace hypercover
