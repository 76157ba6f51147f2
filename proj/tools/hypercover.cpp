// hypercover: construct | verify | rank | bounds | search
//
// Payload JSON on stdout, diagnostics on stderr. Exit codes: 0 ok, 1 fail,
// 2 usage or input error, 3 unknown (search budget exhausted).

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hypercover/cli.hpp"

namespace {

int emit(const hypercover::CommandResult& result) {
    std::cout << result.payload.dump(2) << '\n';
    if (!result.diagnostics.empty())
        std::cerr << result.diagnostics << '\n';
    return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hypercover;

    CLI::App app{"Complete r-partite covers of r-uniform hypergraphs"};
    app.require_subcommand(1);
    app.footer("Size guards can be lifted with HYPERCOVER_GUARD_OVERRIDE=1 (unsafe: may exhaust memory or time).");

    ConstructOptions construct;
    int construct_m = 0, construct_n = 0, construct_r = 0;
    auto* c = app.add_subcommand("construct", "Build a hypergraph and its cover");
    c->add_option("kind", construct.kind,
                  "hex-cover | grid3-cover | star-partition | log-cover | cube-graph | pi-partition | "
                  "label-partition | random")
        ->required();
    auto* cm = c->add_option("--m", construct_m, "Grid side or cube dimension");
    auto* cn = c->add_option("--n", construct_n, "Vertex count");
    auto* cr = c->add_option("--r", construct_r, "Uniformity");
    c->add_option("--seed", construct.seed, "Seed for random instances")->default_val(0);
    c->add_option("--density", construct.density, "Edge probability for random instances")->default_val(0.5);
    c->add_option("--graph-out", construct.graph_out, "Write the hypergraph JSON here");
    c->add_option("--cover-out", construct.cover_out, "Write the cover JSON here");

    std::string graph_file, cover_file, list_text;
    bool partition = false;
    auto* v = app.add_subcommand("verify", "Check a cover's multiplicities against a list");
    v->add_option("--graph", graph_file, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    v->add_option("--cover", cover_file, "Cover JSON")->required()->check(CLI::ExistingFile);
    auto* vlist = v->add_option("--list", list_text, "Allowed multiplicities: a,b,c | lo..hi | any");
    auto* vpart = v->add_flag("--partition", partition, "Same as --list 1");
    vlist->excludes(vpart);

    int rank_r = 0, rank_m = 0;
    auto* rk = app.add_subcommand("rank", "GF(2) rank certificate of the cube hypergraph");
    rk->add_option("--r", rank_r, "Even uniformity >= 4")->required();
    rk->add_option("--m", rank_m, "Dimension")->required();

    BoundsOptions bounds;
    std::uint64_t b_n = 0, b_alpha = 0, b_r = 0, b_k = 0, b_m = 0, b_nu = 0, b_edges = 0;
    auto* b = app.add_subcommand("bounds", "Evaluate a closed-form bound");
    b->add_option("name", bounds.name,
                  "ks-order | ks-chromatic | matching-cover | independent-matchings | partition-upper | "
                  "partition-lower | label-count")
        ->required();
    auto* bn = b->add_option("--n", b_n);
    auto* balpha = b->add_option("--alpha", b_alpha);
    auto* br = b->add_option("--r", b_r);
    auto* bk = b->add_option("--k", b_k);
    auto* bm = b->add_option("--m", b_m);
    auto* bnu = b->add_option("--nu", b_nu);
    auto* bedges = b->add_option("--edges", b_edges);

    SearchOptions search;
    auto* s = app.add_subcommand("search", "Exact oracle on a small hypergraph");
    s->add_option("goal", search.goal, "min-cover | min-partition | min-sum-orders | independence | matching | chromatic")
        ->required();
    s->add_option("--file", search.file, "Hypergraph JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--list", search.list, "Allowed multiplicities for min-cover")->default_val("any");
    s->add_option("--budget", search.budget.time_limit_seconds, "Time limit in seconds")->default_val(120.0);
    s->add_option("--max-nodes", search.budget.max_nodes, "Search node limit");
    s->add_option("--max-blocks", search.budget.max_blocks, "Largest block count tried");

    CLI11_PARSE(app, argc, argv);

    auto opt_int = [](CLI::Option* o, int value) { return o->count() ? std::optional<int>(value) : std::nullopt; };
    auto opt_u64 = [](CLI::Option* o, std::uint64_t value) {
        return o->count() ? std::optional<std::uint64_t>(value) : std::nullopt;
    };

    try {
        if (c->parsed()) {
            construct.m = opt_int(cm, construct_m);
            construct.n = opt_int(cn, construct_n);
            construct.r = opt_int(cr, construct_r);
            return emit(cmd_construct(construct));
        }
        if (v->parsed()) {
            MultiplicityList list = partition ? MultiplicityList::exactly_once()
                                              : MultiplicityList::parse(list_text.empty() ? "any" : list_text);
            return emit(cmd_verify(graph_file, cover_file, list));
        }
        if (rk->parsed())
            return emit(cmd_rank(rank_r, rank_m));
        if (b->parsed()) {
            bounds.n = opt_u64(bn, b_n);
            bounds.alpha = opt_u64(balpha, b_alpha);
            bounds.r = opt_u64(br, b_r);
            bounds.k = opt_u64(bk, b_k);
            bounds.m = opt_u64(bm, b_m);
            bounds.nu = opt_u64(bnu, b_nu);
            bounds.edges = opt_u64(bedges, b_edges);
            return emit(cmd_bounds(bounds));
        }
        if (s->parsed())
            return emit(cmd_search(search));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
