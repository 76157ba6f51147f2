#include <gtest/gtest.h>

#include <cmath>

#include "hypercover/bounds.hpp"
#include "hypercover/cube.hpp"
#include "hypercover/grid.hpp"
#include "hypercover/oracles.hpp"
#include "support.hpp"

using namespace hypercover;
using testsupport::Rng;

namespace {

std::uint64_t guarantee(const Hypergraph& h, const Cover& c) {
    const double q = 1.0 - 1.0 / h.uniformity();
    double sum = 0;
    for (auto a : cover_incidence(c, h.vertex_count()).counts)
        sum += std::pow(q, double(a));
    return static_cast<std::uint64_t>(std::ceil(sum - 1e-9));
}

void check_extraction(const Hypergraph& h, const Cover& c) {
    auto res = extract_independent_set(h, c);
    EXPECT_TRUE(is_independent(h, res.vertices));
    EXPECT_GE(res.vertices.size(), guarantee(h, c));
    EXPECT_EQ(res.guaranteed_size, guarantee(h, c));
    ASSERT_EQ(res.expectation.size(), c.size() + 1);
    for (std::size_t i = 1; i < res.expectation.size(); ++i)
        EXPECT_GE(res.expectation[i], res.expectation[i - 1] - 1e-12L);
    // once every block is processed nothing is random: expectation = survivors
    EXPECT_NEAR(static_cast<double>(res.expectation.back()), double(res.vertices.size()), 1e-9);
}

}  // namespace

TEST(KsOrder, Values) {
    EXPECT_EQ(ks_order_lower_bound(5, 5, 3), 0.0);
    EXPECT_DOUBLE_EQ(ks_order_lower_bound(8, 1, 2), 24.0);
    EXPECT_NEAR(ks_order_lower_bound(9, 3, 3), 9 * std::log(3.0) / std::log(1.5), 1e-9);
    EXPECT_NEAR(ks_order_lower_bound(9, 3, 3), 24.39, 0.01);
    for (int r = 3; r <= 8; ++r)
        EXPECT_GE(ks_order_lower_bound(12, 5, r), (r - 1) * 12 * std::log(12.0 / 5));
    // one triple on four vertices: alpha 3, and a single block of order 3
    EXPECT_LE(ks_order_lower_bound(4, 3, 3), 3.0);
    EXPECT_THROW(ks_order_lower_bound(4, 0, 2), std::invalid_argument);
    EXPECT_THROW(ks_order_lower_bound(4, 5, 2), std::invalid_argument);
    EXPECT_THROW(ks_order_lower_bound(4, 1, 1), std::invalid_argument);
}

TEST(KsChromatic, Values) {
    const std::uint64_t k = 1u << 16;
    auto cases = ks_chromatic_bound_cases(k, 2);
    EXPECT_DOUBLE_EQ(cases.many_rounds, 655360.0);
    EXPECT_DOUBLE_EQ(cases.few_rounds, 458752.0);
    EXPECT_DOUBLE_EQ(ks_chromatic_lower_bound(k, 2), 458752.0);
    auto r3 = ks_chromatic_bound_cases(k, 3);
    EXPECT_DOUBLE_EQ(r3.many_rounds, 4 * 655360.0);
    EXPECT_DOUBLE_EQ(r3.few_rounds, 4.0 * 65536 * 11 - 6.0 * 4 * 65536);
    EXPECT_DOUBLE_EQ(ks_chromatic_lower_bound(k, 3), std::min(r3.many_rounds, r3.few_rounds));
    for (std::uint64_t kk : {17ull, 100ull, 1000ull, 1ull << 20, 1ull << 40})
        for (int r = 2; r <= 5; ++r)
            EXPECT_LT(ks_chromatic_lower_bound(kk, r), double((r - 1) * (r - 1)) * kk * std::log2(double(kk)));
    EXPECT_THROW(ks_chromatic_lower_bound(16, 2), std::invalid_argument);
    EXPECT_NO_THROW(ks_chromatic_lower_bound(17, 2));
}

TEST(MatchingBounds, Values) {
    for (int r = 2; r <= 5; ++r)
        EXPECT_DOUBLE_EQ(matching_cover_lower_bound(1, 1, r), 1.0);
    EXPECT_NEAR(matching_cover_lower_bound(2, 6, 2), 4.0 / 6.0, 1e-12);
    for (std::uint64_t m = 1; m <= 10; ++m)
        EXPECT_NEAR(matching_cover_lower_bound(m, m, 3), double(m), 1e-9);
    EXPECT_THROW(matching_cover_lower_bound(0, 1, 2), std::invalid_argument);
    EXPECT_THROW(matching_cover_lower_bound(3, 2, 2), std::invalid_argument);

    for (std::uint64_t m = 1; m <= 5; ++m)
        EXPECT_DOUBLE_EQ(independent_matchings_lower_bound(1, m, 30, 3), matching_cover_lower_bound(m, 30, 3));
    EXPECT_DOUBLE_EQ(independent_matchings_lower_bound(4, 2, 16, 2), 1.0);
    EXPECT_NEAR(independent_matchings_lower_bound(2, 3, 27, 3), std::sqrt(2.0), 1e-12);
    EXPECT_THROW(independent_matchings_lower_bound(4, 2, 7, 2), std::invalid_argument);
}

TEST(SumOfOrders, Values) {
    EXPECT_EQ(sum_of_orders(Cover(2)), 0u);
    EXPECT_EQ(sum_of_orders(star_partition(4).cover), 9u);
    EXPECT_EQ(sum_of_orders(log_cover(8).cover), 24u);
    EXPECT_DOUBLE_EQ(double(sum_of_orders(log_cover(8).cover)), ks_order_lower_bound(8, 1, 2));
}

TEST(Incidence, SumsToTotalOrder) {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = testsupport::random_graph(rng, 7, 2 + static_cast<int>(rng.below(2)), 0.4);
        auto c = testsupport::random_cover(rng, h, 0.4);
        EXPECT_EQ(cover_incidence(c, h.vertex_count()).total(), sum_of_orders(c));
    }
}

TEST(Extract, SpecExamples) {
    auto res = extract_independent_set(Hypergraph(2, 5, {}), Cover(2));
    EXPECT_EQ(res.vertices.size(), 5u);

    auto lc = log_cover(4);
    auto r4 = extract_independent_set(lc.graph, lc.cover);
    EXPECT_EQ(r4.guaranteed_size, 1u);
    EXPECT_TRUE(is_independent(lc.graph, r4.vertices));
    EXPECT_GE(r4.vertices.size(), 1u);

    Hypergraph one(3, 3, {{0, 1, 2}});
    Cover single(3, {RPartiteBlock({{0}, {1}, {2}})});
    auto r1 = extract_independent_set(one, single);
    EXPECT_EQ(r1.guaranteed_size, 2u);
    EXPECT_EQ(r1.vertices, (std::vector<Vertex>{1, 2}));  // ties delete class 0
    EXPECT_EQ(r1.deleted_part, (std::vector<std::size_t>{0}));
}

TEST(Extract, RequiresACover) {
    auto k4 = complete_hypergraph(4, 2);
    EXPECT_THROW(extract_independent_set(k4, Cover(2, {RPartiteBlock({{0}, {1}})})), std::invalid_argument);
}

TEST(Extract, ConstructionsAndRandomCovers) {
    for (int m = 2; m <= 4; ++m) {
        auto hex = hex_cover(m);
        check_extraction(hex.graph, hex.cover);
        auto grid = grid3_cover(m + 1);
        check_extraction(grid.graph, grid.cover);
    }
    for (auto [r, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
        check_extraction(cube_graph(r, m).graph, pi_partition(r, m));
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + rng.below(6);
        auto h = testsupport::random_graph(rng, n, 2 + static_cast<int>(rng.below(2)), 0.5);
        check_extraction(h, testsupport::random_cover(rng, h, 0.3));
    }
}

TEST(Extract, ChosenClassMaximizesConditionalExpectation) {
    // Re-run every alternative deletion at each step and compare.
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = testsupport::random_graph(rng, 7, 2 + static_cast<int>(rng.below(2)), 0.5);
        auto c = testsupport::random_cover(rng, h, 0.4);
        auto res = extract_independent_set(h, c);
        const long double q = 1.0L - 1.0L / h.uniformity();
        std::vector<std::uint64_t> remaining = cover_incidence(c, h.vertex_count()).counts;
        std::vector<bool> alive(h.vertex_count(), true);
        for (std::size_t bi = 0; bi < c.size(); ++bi) {
            const auto& parts = c[bi].parts();
            std::vector<long double> value(parts.size(), 0);
            for (std::size_t p = 0; p < parts.size(); ++p) {
                auto alive2 = alive;
                auto rem2 = remaining;
                for (Vertex v : parts[p])
                    alive2[v] = false;
                for (const auto& part : parts)
                    for (Vertex v : part)
                        --rem2[v];
                for (std::size_t v = 0; v < alive2.size(); ++v)
                    if (alive2[v])
                        value[p] += std::pow(q, (long double)rem2[v]);
            }
            const std::size_t chosen = res.deleted_part[bi];
            for (std::size_t p = 0; p < parts.size(); ++p)
                EXPECT_GE(value[chosen], value[p] - 1e-12L);
            for (Vertex v : parts[chosen])
                alive[v] = false;
            for (const auto& part : parts)
                for (Vertex v : part)
                    --remaining[v];
        }
    }
}

TEST(Extract, OrderBoundAgainstOracleIndependence) {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng.below(5);
        auto h = testsupport::random_graph(rng, n, 2 + static_cast<int>(rng.below(2)), 0.6);
        auto c = testsupport::random_cover(rng, h, 0.3);
        const auto alpha = independence_number(h);
        EXPECT_GE(double(sum_of_orders(c)) + 1e-9, ks_order_lower_bound(n, alpha, h.uniformity()));
    }
}

TEST(Induced, SubhypergraphAndRestrictedCover) {
    auto k5 = complete_hypergraph(5, 3);
    auto sub = induced_subhypergraph(k5, {0, 2, 4});
    EXPECT_EQ(sub.vertex_count(), 3u);
    EXPECT_EQ(sub.edges(), (std::vector<Edge>{{0, 1, 2}}));
    Cover c(3, {RPartiteBlock({{0, 1}, {2, 3}, {4}})});
    auto rc = restrict_cover(c, {0, 2, 4}, 5);
    ASSERT_EQ(rc.size(), 1u);
    EXPECT_EQ(rc[0].parts(), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
    EXPECT_EQ(restrict_cover(c, {0, 1, 2}, 5).size(), 0u);
    auto eb = edge_blocks_cover(k5);
    EXPECT_EQ(eb.size(), 10u);
    EXPECT_TRUE(verify_partition(k5, eb).ok);
}

TEST(Peel, ProperColorings) {
    auto edgeless = Hypergraph(2, 6, {});
    auto p0 = peel_coloring(edgeless, [](const Hypergraph& g) { return Cover(g.uniformity()); });
    EXPECT_EQ(color_count(p0.colors), 1);

    auto lc = [](const Hypergraph& g) {
        // bit cover of the complete graph on g's vertices, restricted to g
        const int n = static_cast<int>(g.vertex_count());
        if (n < 2)
            return Cover(2);
        return log_cover(n).cover;
    };
    auto k4 = complete_hypergraph(4, 2);
    auto p1 = peel_coloring(k4, lc);
    EXPECT_TRUE(is_proper_coloring(k4, p1.colors));
    EXPECT_LE(color_count(p1.colors), 4);

    Hypergraph one(3, 3, {{0, 1, 2}});
    auto p2 = peel_coloring(one, [](const Hypergraph& g) { return edge_blocks_cover(g); });
    EXPECT_TRUE(is_proper_coloring(one, p2.colors));
    EXPECT_LE(color_count(p2.colors), 2);
    EXPECT_GE(p2.class_sizes.front(), 2u);

    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = testsupport::random_graph(rng, 8, 2 + static_cast<int>(rng.below(2)), 0.5);
        auto p = peel_coloring(h, [&](const Hypergraph& g) { return testsupport::random_cover(rng, g, 0.3); });
        EXPECT_TRUE(is_proper_coloring(h, p.colors));
        std::size_t total = 0;
        for (auto s : p.class_sizes)
            total += s;
        EXPECT_EQ(total, h.vertex_count());
    }
}

TEST(Greedy, SpecExamples) {
    std::vector<Vertex> id4{0, 1, 2, 3}, rev4{3, 2, 1, 0};
    auto k4 = complete_hypergraph(4, 2);
    EXPECT_EQ(color_count(greedy_color(k4, id4)), 4);
    EXPECT_EQ(color_count(greedy_color(k4, rev4)), 4);
    EXPECT_EQ(color_count(greedy_color(Hypergraph(3, 4, {}), id4)), 1);

    auto k53 = complete_hypergraph(5, 3);
    auto colors = greedy_color(k53, {0, 1, 2, 3, 4});
    EXPECT_TRUE(is_proper_coloring(k53, colors));
    EXPECT_EQ(color_class_sizes(colors), (std::vector<std::size_t>{2, 2, 1}));
    EXPECT_THROW(greedy_color(k4, {0, 1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(greedy_color(k4, {0, 1, 2}), std::invalid_argument);
}

TEST(Greedy, ProperOnRandomInstances) {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.below(8);
        auto h = testsupport::random_graph(rng, n, 2 + static_cast<int>(rng.below(3)), 0.5);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        rng.shuffle(order);
        auto colors = greedy_color(h, order);
        EXPECT_TRUE(is_proper_coloring(h, colors));
        if (n <= 10) {
            EXPECT_GE(color_count(colors), static_cast<int>(chromatic_number(h)));
        }
    }
}

// On complete r-uniform hypergraphs every class fills to r-1 before the next
// opens, so at most one class is smaller than r-1; recoloring greedily in the
// class order of an optimal coloring keeps the optimum.
TEST(Greedy, AtMostOneSmallClassOnCompleteHypergraphs) {
    Rng rng(31);
    for (int r = 2; r <= 4; ++r)
        for (std::size_t n = r; n <= 10; ++n) {
            auto h = complete_hypergraph(n, r);
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), Vertex{0});
            rng.shuffle(order);
            auto sizes = color_class_sizes(greedy_color(h, order));
            int small = 0;
            for (auto s : sizes)
                small += s < static_cast<std::size_t>(r - 1);
            EXPECT_LE(small, 1);
        }
    for (std::size_t n = 3; n <= 7; ++n) {
        auto h = complete_hypergraph(n, 3);
        // an optimal coloring: consecutive pairs
        std::vector<int> optimal(n);
        for (std::size_t v = 0; v < n; ++v)
            optimal[v] = static_cast<int>(v / 2);
        ASSERT_TRUE(is_proper_coloring(h, optimal));
        ASSERT_EQ(color_count(optimal), static_cast<int>(chromatic_number(h)));
        auto recolored = greedy_color(h, order_by_color_classes(optimal));
        EXPECT_EQ(color_count(recolored), color_count(optimal));
    }
}
