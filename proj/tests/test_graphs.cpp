#include <doctest.h>

#include <theta/graphs.hpp>
#include <theta/macdonald.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace theta;

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

// Tree given by label pairs, against a graph whose vertex v carries label
// labels[v-1]; resolves to sorted edge indices.
SpanningTree tree_by_labels(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> pos(g.vertex_count() + 1, 0);
    for (int v = 1; v <= g.vertex_count(); ++v) pos[g.label(v)] = v;
    SpanningTree tree;
    for (auto [la, lb] : pairs) {
        int idx = g.edge_index(pos[la], pos[lb]);
        REQUIRE(idx >= 0);
        tree.push_back(idx);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

QTPoly kappa_sum(const Graph& g, int root) {
    Graph rooted = g;
    rooted.set_root(root);
    QTPoly out;
    for (const SpanningTree& tree : spanning_trees(rooted))
        out += QTPoly::monomial(kappa_inversions(rooted, tree), 0);
    return out;
}

const QTPoly Q = QTPoly::var_q();
const QTPoly T = QTPoly::var_t();

// Inversion graph of 452163 from the worked spanning-tree example; vertex i
// is the i-th letter, so the edge list below is by position.
const std::vector<int> kWord{4, 5, 2, 1, 6, 3};

}  // namespace

TEST_CASE("graph construction and validation") {
    Graph g(4, {{2, 1}, {3, 4}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.edge_index(4, 3) == 1);
    CHECK(g.edge_index(1, 4) == -1);
    CHECK(g.label(3) == 3);
    CHECK(!g.root());

    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(g.set_root(5), std::invalid_argument);
    CHECK_THROWS_AS(g.set_labels({1, 2}), std::invalid_argument);

    CHECK(!g.connected());
    std::vector<int> comp = g.components();
    CHECK(comp[1] == comp[2]);
    CHECK(comp[3] == comp[4]);
    CHECK(comp[1] != comp[3]);
    CHECK(path_graph(4).connected());
    CHECK(Graph(0, {}).connected());
}

TEST_CASE("spanning tree enumeration") {
    CHECK(spanning_trees(complete_graph(3)).size() == 3);
    CHECK(spanning_trees(complete_graph(4)).size() == 16);
    CHECK(spanning_trees(complete_graph(5)).size() == 125);
    CHECK(spanning_trees(path_graph(5)).size() == 1);
    CHECK(spanning_trees(Graph(1, {})).size() == 1);
    CHECK(spanning_trees(Graph(0, {})).size() == 1);
    CHECK(spanning_trees(Graph(2, {})).empty());

    auto trees = spanning_trees(complete_graph(4));
    std::set<SpanningTree> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
    for (const SpanningTree& tree : trees) CHECK(tree.size() == 3);

    Graph k = inversion_graph(kWord);
    auto ktrees = spanning_trees(k);
    SpanningTree red = tree_by_labels(k, {{1, 2}, {1, 4}, {2, 5}, {3, 5}, {3, 6}});
    CHECK(std::count(ktrees.begin(), ktrees.end(), red) == 1);
}

TEST_CASE("internal and external activity") {
    Graph k = inversion_graph(kWord);
    SpanningTree red = tree_by_labels(k, {{1, 2}, {1, 4}, {2, 5}, {3, 5}, {3, 6}});
    CHECK(activity(k, red, lex_label_order(k)) == Activity{3, 0});

    Graph p = path_graph(4);
    CHECK(activity(p, {0, 1, 2}, index_order(p)) == Activity{3, 0});

    Graph k3 = complete_graph(3);
    CHECK(activity(k3, {1, 2}, index_order(k3)) == Activity{0, 1});
    CHECK(activity(k3, {0, 1}, index_order(k3)) == Activity{2, 0});

    CHECK_THROWS_AS(activity(k3, {0}, index_order(k3)), std::invalid_argument);
    CHECK_THROWS_AS(activity(k3, {0, 1}, EdgeOrder{0}), std::invalid_argument);
}

TEST_CASE("tutte polynomial") {
    CHECK(tutte(complete_graph(3)) == Q * Q + Q + T);
    CHECK(tutte(Graph(2, {{1, 2}})) == Q);
    CHECK(tutte(Graph(1, {})) == QTPoly(1));

    // Cycle C4: x^3 + x^2 + x + y.
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(tutte(c4) == Q.pow(3) + Q * Q + Q + T);

    // T(1,1) counts spanning trees.
    for (const Graph& g : {complete_graph(4), c4, inversion_graph(kWord)})
        CHECK(tutte(g).eval(1, 1) == mpq_class(static_cast<long>(spanning_trees(g).size())));

    // No spanning trees, so the sum over them is empty.
    CHECK(tutte(Graph(4, {{1, 2}, {3, 4}})).is_zero());
}

TEST_CASE("tutte activity sums are order independent") {
    std::mt19937 rng(20260814);
    for (const Graph& g : {complete_graph(4), inversion_graph(kWord)}) {
        QTPoly reference = tutte(g);
        auto trees = spanning_trees(g);
        EdgeOrder order = index_order(g);
        for (int round = 0; round < 5; ++round) {
            std::shuffle(order.begin(), order.end(), rng);
            QTPoly sum;
            for (const SpanningTree& tree : trees) {
                Activity a = activity(g, tree, order);
                sum += QTPoly::monomial(a.internal_active, a.external_active);
            }
            CHECK(sum == reference);
        }
    }
}

TEST_CASE("kappa inversions") {
    Graph k = inversion_graph(kWord);
    SpanningTree red = tree_by_labels(k, {{1, 2}, {1, 4}, {2, 5}, {3, 5}, {3, 6}});
    CHECK_THROWS_AS(kappa_inversions(Graph(2, {{1, 2}}), {0}), std::invalid_argument);

    // Rooted at the vertex labelled 5 the only kappa-inversion comes from the
    // descent pair with labels (2, 1).
    Graph rooted = k;
    rooted.set_root(2);
    REQUIRE(rooted.label(2) == 5);
    CHECK(kappa_inversions(rooted, red) == 1);

    // Labels increasing away from the root leave nothing to invert.
    Graph p = path_graph(4);
    p.set_root(1);
    CHECK(kappa_inversions(p, {0, 1, 2}) == 0);

    CHECK(kappa_sum(complete_graph(3), 1) == QTPoly(2) + Q);
}

TEST_CASE("tiered tree inside its compatibility graph") {
    // Nine-vertex standard tiered tree: vertex = label, root 2; levels
    // lv(2)=0, lv(1)=lv(4)=lv(5)=lv(6)=1, lv(3)=lv(9)=2, lv(7)=lv(8)=3.
    std::vector<std::pair<int, int>> tree_edges{
        {2, 4}, {2, 7}, {6, 9}, {4, 9}, {5, 7}, {1, 3}, {3, 7}, {6, 8}};
    std::vector<std::pair<int, int>> compatible{
        {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 5}, {2, 6}, {2, 8},
        {2, 9}, {3, 8}, {4, 7}, {4, 8}, {5, 8}, {5, 9}, {6, 7}};
    std::vector<Edge> edges;
    for (auto [a, b] : tree_edges) edges.push_back({a, b});
    for (auto [a, b] : compatible) edges.push_back({a, b});
    Graph g(9, std::move(edges));
    g.set_root(2);

    // The compatibility graph is the inversion graph of the word sending each
    // label to 9 minus its level.
    CHECK(g.edges() == inversion_graph({8, 9, 7, 8, 8, 8, 6, 6, 7}).edges());

    SpanningTree tree = tree_by_labels(g, tree_edges);
    CHECK(kappa_inversions(g, tree) == 4);
}

TEST_CASE("inversion graphs") {
    Graph k = inversion_graph(kWord);
    CHECK(k.vertex_count() == 6);
    CHECK(k.labels() == kWord);
    CHECK(k.root() == 6);
    std::vector<Edge> expected{{1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {5, 6}};
    CHECK(k.edges() == expected);
    // By labels that edge list reads (1,2),(1,4),(1,5),(2,4),(2,5),(3,4),(3,5),(3,6).
    std::multiset<std::pair<int, int>> by_label, want{{1, 2}, {1, 4}, {1, 5}, {2, 4},
                                                      {2, 5}, {3, 4}, {3, 5}, {3, 6}};
    for (const Edge& e : k.edges())
        by_label.insert(std::minmax(k.label(e.a), k.label(e.b)));
    CHECK(by_label == want);

    CHECK(inversion_graph({1, 2, 3}).edge_count() == 0);
    CHECK(inversion_graph({4, 3, 2, 1}).edges() == complete_graph(4).edges());
    CHECK(inversion_graph({}).vertex_count() == 0);
}

TEST_CASE("r polynomial") {
    CHECK(r_poly({2, 1}) == QTPoly(1));
    CHECK(r_poly({3, 2, 1}) == QTPoly(2) + Q);
    CHECK(r_poly({5}) == QTPoly(1));
    CHECK(r_poly({}) == QTPoly(1));

    // Words with disconnected inversion graphs contribute nothing: the sum
    // over spanning trees is empty. The shuffle-sum identities depend on it.
    CHECK(r_poly({1, 2}).is_zero());
    CHECK(r_poly({2, 1, 4, 3}).is_zero());
    CHECK(r_poly({3, 2, 1, 6, 5, 4}).is_zero());

    // Standardisation preserves the inversion graph, hence R_u.
    CHECK(r_poly({3, 3, 2, 1, 3, 2}) == r_poly({4, 5, 2, 1, 6, 3}));
    CHECK(r_poly({2, 2, 1, 1}) == r_poly(word_standardise({2, 2, 1, 1})));
}

TEST_CASE("kappa distributes as external activity") {
    // Sum of q^kappa over spanning trees matches T(1,q) for every root;
    // disconnected graphs agree trivially as empty sums.
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> u(n);
        std::iota(u.begin(), u.end(), 1);
        do {
            Graph k = inversion_graph(u);
            QTPoly expected = r_poly(u);
            for (int root = 1; root <= n; ++root)
                CHECK(kappa_sum(k, root) == expected);
        } while (std::next_permutation(u.begin(), u.end()));
    }
}

TEST_CASE("alpha shuffles") {
    CHECK(alpha_shuffles(Composition({1, 1})) ==
          std::vector<std::vector<int>>{{1, 2}, {2, 1}});
    CHECK(alpha_shuffles(Composition({2, 1})) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}, {3, 1, 2}});
    CHECK(alpha_shuffles(Composition({3})) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(alpha_shuffles(Composition()).size() == 1);

    CHECK(alpha_shuffles(Composition({2, 2})).size() == 6);
    CHECK(alpha_shuffles(Composition({1, 1, 1})).size() == 6);
    CHECK(alpha_shuffles(Composition({2, 1, 1})).size() == 12);

    // Each block stays an increasing subsequence.
    for (const auto& sigma : alpha_shuffles(Composition({3, 2}))) {
        std::vector<int> pos(6, 0);
        for (int i = 0; i < 5; ++i) pos[sigma[i]] = i;
        CHECK(pos[1] < pos[2]);
        CHECK(pos[2] < pos[3]);
        CHECK(pos[4] < pos[5]);
    }
}

TEST_CASE("word standardisation") {
    CHECK(word_standardise({3, 3, 2, 1, 3, 2}) == std::vector<int>{4, 5, 2, 1, 6, 3});
    CHECK(word_standardise({4, 5, 2, 1, 6, 3}) == std::vector<int>{4, 5, 2, 1, 6, 3});
    CHECK(word_standardise({1, 1, 1}) == std::vector<int>{1, 2, 3});
    CHECK(word_standardise({}).empty());

    // The standardised word keeps the inversion graph.
    CHECK(inversion_graph({3, 3, 2, 1, 3, 2}).edges() == inversion_graph(kWord).edges());

    // Standardising a word with alpha_i copies of i gives an alpha-shuffle.
    Composition alpha({2, 2, 1});
    auto shuffles = alpha_shuffles(alpha);
    std::vector<int> word{1, 1, 2, 2, 3};
    std::sort(word.begin(), word.end());
    std::set<std::vector<int>> seen;
    do {
        seen.insert(word_standardise(word));
    } while (std::next_permutation(word.begin(), word.end()));
    CHECK(std::vector<std::vector<int>>(seen.begin(), seen.end()) == shuffles);
}

TEST_CASE("shuffle sums of R match the Theta pairing at t=1") {
    SymF e1 = SymF::single(Basis::e, Partition({1}));
    for (int n = 2; n <= 4; ++n) {
        SymF f = e1;
        for (int k = 1; k < n; ++k) f = theta_op(e1, f);
        for (const Partition& mu : partitions_of(n)) {
            QTPoly sum;
            for (const auto& sigma : alpha_shuffles(Composition(mu.parts())))
                sum += r_poly(sigma);
            QTRatio pairing = hall(f, SymF::single(Basis::h, mu));
            CHECK(pairing.specialize(std::nullopt, mpq_class(1)) == QTRatio(sum));
        }
    }
}
