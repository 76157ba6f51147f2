#pragma once

// Command implementations behind the hypercover tool. Each returns a
// CommandResult; the executable prints the payload to stdout and the
// diagnostics to stderr, and exits 0 only for status ok.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hypercover/bounds.hpp"
#include "hypercover/cube.hpp"
#include "hypercover/grid.hpp"
#include "hypercover/json_io.hpp"
#include "hypercover/oracles.hpp"
#include "hypercover/rank.hpp"

namespace hypercover {

struct CommandResult {
    enum class Status { ok, fail, unknown };

    Status status = Status::ok;
    Json payload = Json::object();
    std::string diagnostics;

    int exit_code() const { return status == Status::ok ? 0 : status == Status::fail ? 1 : 3; }
};

inline const char* to_string(CommandResult::Status s) {
    switch (s) {
    case CommandResult::Status::ok:
        return "ok";
    case CommandResult::Status::fail:
        return "fail";
    case CommandResult::Status::unknown:
        return "unknown";
    }
    return "?";
}

// Each r-subset of {0..n-1} is an edge independently with probability p.
inline Hypergraph random_hypergraph(std::size_t n, int r, double p, std::uint64_t seed) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("random_hypergraph: p must lie in [0,1]");
    check_guard(binomial(n, r) <= 1'000'000, "random_hypergraph: more than 1e6 candidate r-sets");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for_each_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r),
                         [&](const std::vector<std::uint32_t>& c) {
                             if (coin(rng))
                                 edges.push_back(Edge(c.begin(), c.end()));
                         });
    return Hypergraph(r, n, std::move(edges));
}

struct ConstructOptions {
    std::string kind;
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> r;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::string graph_out;
    std::string cover_out;
};

namespace detail {

inline int require_option(const std::optional<int>& v, const char* name, const std::string& kind) {
    if (!v)
        throw std::invalid_argument("construct " + kind + ": --" + name + " is required");
    return *v;
}

}  // namespace detail

// Writes the hypergraph and cover (when the kind has one) to the given
// paths. The payload names the multiplicity list the cover is built for.
inline CommandResult cmd_construct(const ConstructOptions& opt) {
    CommandResult out;
    std::optional<Hypergraph> graph;
    std::optional<Cover> cover;
    std::string list;
    const std::string& kind = opt.kind;
    if (kind == "hex-cover") {
        auto c = hex_cover(detail::require_option(opt.m, "m", kind));
        graph = std::move(c.graph);
        cover = std::move(c.cover);
        list = "2,3";
    } else if (kind == "grid3-cover") {
        int m = detail::require_option(opt.m, "m", kind);
        auto c = grid3_cover(m);
        graph = std::move(c.graph);
        cover = std::move(c.cover);
        list = m == 2 ? "1" : "1..4";
    } else if (kind == "star-partition") {
        auto c = star_partition(detail::require_option(opt.n, "n", kind));
        graph = std::move(c.graph);
        cover = std::move(c.cover);
        list = "1";
    } else if (kind == "log-cover") {
        auto c = log_cover(detail::require_option(opt.n, "n", kind));
        graph = std::move(c.graph);
        cover = std::move(c.cover);
        list = "any";
    } else if (kind == "cube-graph") {
        graph = cube_graph(detail::require_option(opt.r, "r", kind), detail::require_option(opt.m, "m", kind)).graph;
    } else if (kind == "pi-partition") {
        int r = detail::require_option(opt.r, "r", kind);
        int m = detail::require_option(opt.m, "m", kind);
        graph = cube_graph(r, m).graph;
        cover = pi_partition(r, m);
        list = "1";
    } else if (kind == "label-partition") {
        int r = detail::require_option(opt.r, "r", kind);
        const auto blocks = label_partition(r);
        Json rows = Json::array();
        for (const auto& b : blocks) {
            Json sets = Json::array();
            for (const auto& s : b.sets) {
                Json labels = Json::array();
                for (Label x : s)
                    labels.push_back(label_text(x));
                sets.push_back(std::move(labels));
            }
            rows.push_back(std::move(sets));
        }
        out.payload["kind"] = kind;
        out.payload["r"] = r;
        out.payload["blocks"] = blocks.size();
        out.payload["expected_blocks"] = floor_e_minus_one_factorial(r);
        out.payload["label_sets"] = std::move(rows);
        out.payload["table"] = label_partition_table(blocks);
        out.diagnostics = "label partition r=" + std::to_string(r) + ": " + std::to_string(blocks.size()) + " blocks";
        return out;
    } else if (kind == "random") {
        int n = detail::require_option(opt.n, "n", kind);
        int r = detail::require_option(opt.r, "r", kind);
        graph = random_hypergraph(n, r, opt.density, opt.seed);
        cover = edge_blocks_cover(*graph);
        list = "1";
    } else {
        throw std::invalid_argument("construct: unknown kind '" + kind + "'");
    }

    out.payload["kind"] = kind;
    out.payload["vertices"] = graph->vertex_count();
    out.payload["edges"] = graph->edge_count();
    if (cover) {
        out.payload["blocks"] = cover->size();
        out.payload["list"] = list;
        out.payload["sum_of_orders"] = sum_of_orders(*cover);
    }
    if (!opt.graph_out.empty())
        write_json_file(opt.graph_out, to_json(*graph));
    if (!opt.cover_out.empty()) {
        if (!cover)
            throw std::invalid_argument("construct " + kind + ": this kind has no cover to write");
        write_json_file(opt.cover_out, to_json(*cover));
    }
    std::ostringstream diag;
    diag << kind << ": n=" << graph->vertex_count() << " edges=" << graph->edge_count();
    if (cover)
        diag << " blocks=" << cover->size();
    out.diagnostics = diag.str();
    return out;
}

inline Json verify_payload(const Hypergraph& h, const Cover& c, const MultiplicityList& list, const VerifyResult& v) {
    Json out;
    out["ok"] = v.ok;
    out["list"] = list.to_string();
    out["vertices"] = h.vertex_count();
    out["edges"] = h.edge_count();
    out["blocks"] = c.size();
    Json histogram = Json::object();
    for (const auto& [mult, count] : v.profile.histogram())
        histogram[std::to_string(mult)] = count;
    out["histogram"] = std::move(histogram);
    out["foreign"] = v.foreign.size();
    if (v.witness) {
        Json w;
        w["edge"] = *v.witness;
        w["multiplicity"] = v.witness_multiplicity;
        w["foreign"] = v.witness_is_foreign;
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline CommandResult cmd_verify(const std::string& graph_file, const std::string& cover_file,
                                const MultiplicityList& list) {
    const Hypergraph h = hypergraph_from_json(read_json_file(graph_file));
    const Cover c = cover_from_json(read_json_file(cover_file));
    const VerifyResult v = verify_cover(h, c, list);
    CommandResult out;
    out.status = v.ok ? CommandResult::Status::ok : CommandResult::Status::fail;
    out.payload = verify_payload(h, c, list, v);
    if (!v.ok)
        out.diagnostics = "verification failed at edge " + to_string(*v.witness) + " (multiplicity " +
                          std::to_string(v.witness_multiplicity) + (v.witness_is_foreign ? ", not an edge of h)" : ")");
    else
        out.diagnostics = "every edge has a multiplicity in " + list.to_string();
    return out;
}

inline CommandResult cmd_rank(int r, int m) {
    if (r % 2 != 0) {
        std::string msg = "rank: r=" + std::to_string(r) + " is odd; the adjacency certificate needs even r";
        if (r >= 3 && m >= 1)
            msg += ". For odd r the partition bound comes from the r-1=" + std::to_string(r - 1) +
                   " certificate and equals " + std::to_string(partition_lower_bound(r, m));
        throw std::invalid_argument(msg);
    }
    const GF2Matrix matrix = adjacency_cube_matrix(r, m);
    const std::uint64_t rank = gf2_rank(matrix);
    const std::uint64_t formula = adjacency_rank_lower_bound(r, m);
    CommandResult out;
    out.payload["r"] = r;
    out.payload["m"] = m;
    out.payload["rows"] = matrix.rows();
    out.payload["rank"] = rank;
    out.payload["lower_bound_formula"] = formula;
    out.payload["partition_lower_bound"] = partition_lower_bound(r, m);
    if (rank < formula) {
        out.status = CommandResult::Status::fail;
        out.diagnostics = "rank " + std::to_string(rank) + " is below the certified floor " + std::to_string(formula);
    } else {
        out.diagnostics = "rank " + std::to_string(rank) + " >= " + std::to_string(formula);
    }
    return out;
}

struct BoundsOptions {
    std::string name;
    std::optional<std::uint64_t> n, alpha, r, k, m, nu, edges;
};

namespace detail {

inline std::uint64_t require_bound_input(const std::optional<std::uint64_t>& v, const char* name,
                                         const std::string& bound) {
    if (!v)
        throw std::invalid_argument("bounds " + bound + ": --" + name + " is required");
    return *v;
}

}  // namespace detail

inline BoundReport compute_bound(const BoundsOptions& opt) {
    auto need = [&](const std::optional<std::uint64_t>& v, const char* name) {
        return detail::require_bound_input(v, name, opt.name);
    };
    auto as_int = [](std::uint64_t v) {
        if (v > 1'000'000)
            throw std::invalid_argument("bounds: parameter too large");
        return static_cast<int>(v);
    };
    BoundReport b;
    b.name = opt.name;
    if (opt.name == "ks-order") {
        auto n = need(opt.n, "n"), alpha = need(opt.alpha, "alpha"), r = need(opt.r, "r");
        b.inputs = {{"n", double(n)}, {"alpha", double(alpha)}, {"r", double(r)}};
        b.value = ks_order_lower_bound(n, alpha, as_int(r));
        b.direction = BoundReport::Direction::lower;
    } else if (opt.name == "ks-chromatic") {
        auto k = need(opt.k, "k"), r = need(opt.r, "r");
        b.inputs = {{"k", double(k)}, {"r", double(r)}};
        b.value = ks_chromatic_lower_bound(k, as_int(r));
        b.direction = BoundReport::Direction::lower;
    } else if (opt.name == "matching-cover") {
        auto nu = need(opt.nu, "nu"), e = need(opt.edges, "edges"), r = need(opt.r, "r");
        b.inputs = {{"nu", double(nu)}, {"edges", double(e)}, {"r", double(r)}};
        b.value = matching_cover_lower_bound(nu, e, as_int(r));
        b.direction = BoundReport::Direction::lower;
    } else if (opt.name == "independent-matchings") {
        auto k = need(opt.k, "k"), m = need(opt.m, "m"), e = need(opt.edges, "edges"), r = need(opt.r, "r");
        b.inputs = {{"k", double(k)}, {"m", double(m)}, {"edges", double(e)}, {"r", double(r)}};
        b.value = independent_matchings_lower_bound(k, m, e, as_int(r));
        b.direction = BoundReport::Direction::lower;
    } else if (opt.name == "partition-upper") {
        auto r = need(opt.r, "r"), m = need(opt.m, "m");
        b.inputs = {{"r", double(r)}, {"m", double(m)}};
        b.value = static_cast<double>(pinto_upper_bound(as_int(r), as_int(m)));
        b.direction = BoundReport::Direction::upper;
    } else if (opt.name == "partition-lower") {
        auto r = need(opt.r, "r"), m = need(opt.m, "m");
        b.inputs = {{"r", double(r)}, {"m", double(m)}};
        b.value = static_cast<double>(partition_lower_bound(as_int(r), as_int(m)));
        b.direction = BoundReport::Direction::lower;
    } else if (opt.name == "label-count") {
        auto r = need(opt.r, "r");
        b.inputs = {{"r", double(r)}};
        b.value = static_cast<double>(floor_e_minus_one_factorial(as_int(r)));
        b.direction = BoundReport::Direction::exact;
    } else {
        throw std::invalid_argument("bounds: unknown bound '" + opt.name + "'");
    }
    return b;
}

inline CommandResult cmd_bounds(const BoundsOptions& opt) {
    CommandResult out;
    const BoundReport b = compute_bound(opt);
    out.payload = to_json(b);
    std::ostringstream diag;
    diag << b.name << " = " << b.value;
    out.diagnostics = diag.str();
    return out;
}

struct SearchOptions {
    std::string goal;
    std::string file;
    std::string list = "any";
    SearchBudget budget;
};

inline CommandResult cmd_search(const SearchOptions& opt) {
    const Hypergraph h = hypergraph_from_json(read_json_file(opt.file));
    BoundReport report;
    report.name = opt.goal;
    report.inputs = {{"n", double(h.vertex_count())}, {"r", double(h.uniformity())}, {"edges", double(h.edge_count())}};
    std::optional<SearchResult> search;
    if (opt.goal == "min-cover") {
        search = min_cover_size(h, MultiplicityList::parse(opt.list), opt.budget);
    } else if (opt.goal == "min-partition") {
        search = min_partition_size(h, opt.budget);
    } else if (opt.goal == "min-sum-orders") {
        search = min_sum_of_orders(h, opt.budget);
    } else if (opt.goal == "independence") {
        report.value = static_cast<double>(independence_number(h));
    } else if (opt.goal == "matching") {
        report.value = static_cast<double>(matching_number(h));
    } else if (opt.goal == "chromatic") {
        report.value = static_cast<double>(chromatic_number(h));
    } else {
        throw std::invalid_argument("search: unknown goal '" + opt.goal + "'");
    }

    CommandResult out;
    report.direction = BoundReport::Direction::exact;
    if (search) {
        report.value = static_cast<double>(search->value);
        if (!search->exact) {
            report.direction = BoundReport::Direction::lower;
            out.status = CommandResult::Status::unknown;
        }
    }
    out.payload = to_json(report);
    out.payload["exact"] = report.direction == BoundReport::Direction::exact;
    if (opt.goal == "min-cover")
        out.payload["list"] = MultiplicityList::parse(opt.list).to_string();
    if (search) {
        out.payload["nodes"] = search->nodes;
        if (search->upper)
            out.payload["upper"] = *search->upper;
        if (search->exact)
            out.payload["witness"] = to_json(search->witness);
        else
            out.diagnostics = "search stopped (" + search->reason + "): value >= " + std::to_string(search->value);
    }
    if (out.diagnostics.empty()) {
        std::ostringstream diag;
        diag << opt.goal << " = " << report.value;
        out.diagnostics = diag.str();
    }
    return out;
}

}  // namespace hypercover
