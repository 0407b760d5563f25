#include <doctest.h>

#include <theta/sandpile.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace theta;

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) edges.push_back({a, b});
    return Graph(n, edges);
}

// two triangles glued along the edge {2,3}
Graph diamond_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}); }

SandpileConfig config(const std::vector<int>& grains) {
    std::vector<int> padded{0};
    padded.insert(padded.end(), grains.begin(), grains.end());
    return SandpileConfig{padded};
}

// every stable configuration with the sink pinned at its degree
std::vector<SandpileConfig> stable_candidates(const SandpileGraph& g) {
    std::vector<SandpileConfig> out;
    SandpileConfig c{std::vector<int>(g.vertex_count() + 1, 0)};
    c.grains[g.sink()] = g.degree(g.sink());
    while (true) {
        out.push_back(c);
        int v = 1;
        while (v <= g.vertex_count() && (v == g.sink() || c.grains[v] + 1 >= g.degree(v))) {
            if (v != g.sink()) c.grains[v] = 0;
            ++v;
        }
        if (v > g.vertex_count()) break;
        ++c.grains[v];
    }
    return out;
}

QTPoly level_enumerator(const SandpileGraph& g) {
    QTPoly sum;
    for (const SandpileConfig& c : recurrent_configs(g)) sum += QTPoly::monomial(level(g, c), 0);
    return sum;
}

}  // namespace

TEST_CASE("sandpile graphs expose degrees and reject bad input") {
    SandpileGraph k3(complete_graph(3), 1);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.sink() == 1);
    CHECK(k3.degree(1) == 2);
    CHECK(k3.degree(3) == 2);
    CHECK(k3.neighbours(2) == std::vector<int>{1, 3});

    CHECK_THROWS_AS(SandpileGraph(Graph(2, {}), 1), std::invalid_argument);
    CHECK_THROWS_AS(SandpileGraph(complete_graph(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(SandpileGraph(complete_graph(3), 0), std::invalid_argument);
}

TEST_CASE("toppling sheds one grain along every incident edge") {
    SandpileGraph g(Graph(2, {{1, 2}}), 2);
    CHECK(topple(g, config({1, 0}), 1) == config({0, 1}));
    CHECK(topple(g, config({3, 2}), 1) == config({2, 3}));

    SandpileGraph k3(complete_graph(3), 1);
    CHECK(topple(k3, config({0, 2, 1}), 2) == config({1, 0, 2}));
    // the sink may topple too, under the same threshold
    CHECK(topple(k3, config({2, 0, 1}), 1) == config({0, 1, 2}));

    CHECK_THROWS_AS(topple(g, config({0, 0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(topple(g, config({1, 0}), 3), std::invalid_argument);
    CHECK_THROWS_AS(topple(g, config({-1, 2}), 2), std::invalid_argument);
    CHECK_THROWS_AS(topple(g, SandpileConfig{{0, 1}}, 1), std::invalid_argument);
}

TEST_CASE("stabilization drains every non-sink vertex below its degree") {
    SandpileGraph d(diamond_graph(), 1);
    SandpileConfig start = config({0, 4, 4, 3});
    SandpileConfig settled = stabilize(d, start);
    CHECK(is_stable(d, settled));

    // grains only leave the system through the sink
    int before = 0, after = 0;
    for (int v = 1; v <= 4; ++v) {
        before += start.grains[v];
        after += settled.grains[v];
    }
    CHECK(after <= before);

    // toppling unstable vertices in any order reaches the same configuration
    std::mt19937 rng(7);
    for (int run = 0; run < 20; ++run) {
        SandpileConfig c = start;
        while (!is_stable(d, c)) {
            std::vector<int> unstable;
            for (int v = 2; v <= 4; ++v)
                if (c.grains[v] >= d.degree(v)) unstable.push_back(v);
            c = topple(d, c, unstable[rng() % unstable.size()]);
        }
        CHECK(c == settled);
    }
}

TEST_CASE("recurrence by definition and by burning") {
    SandpileGraph edge(Graph(2, {{1, 2}}), 2);
    CHECK(is_recurrent(edge, config({0, 1})));
    CHECK_FALSE(is_recurrent(edge, config({0, 0})));

    SandpileGraph k3(complete_graph(3), 1);
    CHECK_FALSE(is_recurrent(k3, config({0, 0, 0})));
    CHECK_FALSE(is_recurrent(k3, config({2, 0, 0})));
    CHECK(is_recurrent(k3, config({2, 1, 1})));
    CHECK(is_recurrent(k3, config({2, 0, 1})));
    CHECK(is_recurrent(k3, config({2, 1, 0})));

    // the burning test agrees with the definition on every stable candidate
    for (const SandpileGraph& g :
         {k3, edge, SandpileGraph(diamond_graph(), 1), SandpileGraph(diamond_graph(), 2),
          SandpileGraph(complete_graph(4), 3),
          SandpileGraph(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}}), 1)}) {
        for (const SandpileConfig& c : stable_candidates(g))
            CHECK(is_recurrent(g, c) == is_recurrent_burning(g, c));
    }
}

TEST_CASE("level measures grains above the edge count") {
    SandpileGraph edge(Graph(2, {{1, 2}}), 2);
    CHECK(level(edge, config({0, 1})) == 0);
    SandpileGraph k3(complete_graph(3), 1);
    CHECK(level(k3, config({2, 1, 1})) == 1);
    CHECK(level(k3, config({2, 0, 1})) == 0);
}

TEST_CASE("recurrent configurations enumerate external activity") {
    SandpileGraph edge(Graph(2, {{1, 2}}), 2);
    CHECK(recurrent_configs(edge) == std::vector<SandpileConfig>{config({0, 1})});

    SandpileGraph k3(complete_graph(3), 1);
    CHECK(recurrent_configs(k3).size() == 3);
    CHECK(level_enumerator(k3) == QTPoly(2) + QTPoly::var_q());

    // cycle: one recurrent configuration per discarded edge
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(level_enumerator(SandpileGraph(c4, 2)) == QTPoly(3) + QTPoly::var_q());

    // the level enumerator is the Tutte polynomial along x = 1
    std::vector<Graph> graphs{complete_graph(2), complete_graph(3), complete_graph(4),
                              complete_graph(5), diamond_graph(), c4,
                              Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}})};
    for (const Graph& g : graphs)
        for (int sink = 1; sink <= g.vertex_count(); sink += 2) {
            SandpileGraph sg(g, sink);
            CHECK(level_enumerator(sg) == tutte_at_one(g));
        }

    // trees carry a single recurrent configuration at level zero
    Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(level_enumerator(SandpileGraph(path, 3)) == QTPoly(1));
}
