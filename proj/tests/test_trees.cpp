#include <doctest.h>

#include <theta/graphs.hpp>
#include <theta/trees.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace theta;

namespace {

const QTPoly Q = QTPoly::var_q();

// Nine vertices with tiers (4,2,2) and content (2,3,1,3).
RootedTieredTree repeated_label_tree() {
    return RootedTieredTree({0, 1, 1, 1, 1, 2, 2, 3, 3},
                            {1, 3, 2, 2, 1, 4, 2, 4, 4},
                            {-1, 5, 0, 7, 6, 2, 7, 0, 1});
}

// Its standardisation: same shape, labels 1..9.
RootedTieredTree standard_nine_tree() {
    return RootedTieredTree({0, 1, 1, 1, 1, 2, 2, 3, 3},
                            {2, 6, 4, 5, 1, 9, 3, 7, 8},
                            {-1, 5, 0, 7, 6, 2, 7, 0, 1});
}

// Six vertices, one per level; content (1,2,3).
RootedTieredTree fully_tiered_six_tree() {
    return RootedTieredTree({0, 1, 2, 3, 4, 5},
                            {2, 3, 1, 2, 3, 3},
                            {-1, 0, 3, 4, 0, 2});
}

// The level/label exchange of the tree above: standard with tiers (2,3).
RootedTieredTree standard_six_tree() {
    return RootedTieredTree({1, 2, 0, 1, 2, 2},
                            {1, 2, 3, 4, 5, 6},
                            {4, 0, -1, 2, 3, 2});
}

// Mirror of the inv definition that records the label pairs.
std::set<std::pair<int, int>> inv_pairs_by_label(const RootedTieredTree& t) {
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < t.size(); ++i) {
        if (i == t.root()) continue;
        std::vector<int> stack(t.children(i));
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            bool smaller = t.label(j) < t.label(i) ||
                           (t.label(j) == t.label(i) && t.level(j) > t.level(i));
            if (smaller && compatible(t, j, t.parent(i))) out.insert({t.label(i), t.label(j)});
            for (int c : t.children(j)) stack.push_back(c);
        }
    }
    return out;
}

bool has_content(const RootedTieredTree& t, const Composition& content) {
    std::vector<int> counts(content.length() + 1, 0);
    for (int v = 0; v < t.size(); ++v) {
        if (t.label(v) < 1 || t.label(v) > content.length()) return false;
        ++counts[t.label(v)];
    }
    for (int w = 1; w <= content.length(); ++w)
        if (counts[w] != content.part(w)) return false;
    return true;
}

QTPoly inv_sum(const std::vector<RootedTieredTree>& trees) {
    QTPoly sum;
    for (const RootedTieredTree& t : trees) sum += QTPoly::monomial(inv(t), 0);
    return sum;
}

Composition ones(int k) { return Composition(std::vector<int>(k, 1)); }

}  // namespace

TEST_CASE("tiered tree construction and validation") {
    RootedTieredTree t = repeated_label_tree();
    CHECK(t.size() == 9);
    CHECK(t.root() == 0);
    CHECK(t.level(5) == 2);
    CHECK(t.label(5) == 4);
    CHECK(t.parent(5) == 2);
    CHECK(t.parent(0) == -1);
    CHECK(t.height(0) == 0);
    CHECK(t.height(7) == 1);
    CHECK(t.height(8) == 4);
    CHECK(t.children(7) == std::vector<int>{3, 6});
    CHECK(t.tier_profile() == Composition({4, 2, 2}));
    CHECK_FALSE(t.is_standard());
    CHECK(standard_nine_tree().is_standard());

    RootedTieredTree solo({0}, {1}, {-1});
    CHECK(solo.size() == 1);
    CHECK(solo.tier_profile().empty());

    // zero label on the root, and equal labels on distinct parents, are fine
    CHECK_NOTHROW(RootedTieredTree({0, 1}, {0, 1}, {-1, 0}));
    CHECK_NOTHROW(RootedTieredTree({0, 1, 2, 1}, {1, 2, 3, 2}, {-1, 0, 0, 2}));

    // the root may sit on a middle level as long as it is alone there
    RootedTieredTree mid({1, 2, 3}, {1, 2, 3}, {1, -1, 1});
    CHECK(mid.root() == 1);
    CHECK(mid.height(0) == 1);
    CHECK(mid.tier_profile() == Composition({1, 1, 1}));

    // two roots, a shared root level, a non-root on level 0, negative level
    CHECK_THROWS_AS(RootedTieredTree({0, 0}, {1, 2}, {-1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({1, 1}, {1, 2}, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({1, 2, 2}, {1, 2, 3}, {1, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({1, 0}, {2, 1}, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({0, -1}, {1, 2}, {-1, 0}), std::invalid_argument);
    // edge inside a level, wrong label order, zero label off the root
    CHECK_THROWS_AS(RootedTieredTree({0, 1, 1}, {1, 2, 3}, {-1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({0, 1}, {2, 1}, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({0, 1}, {1, 0}, {-1, 0}), std::invalid_argument);
    // equal-label siblings on one level, a parent cycle, a rooted root
    CHECK_THROWS_AS(RootedTieredTree({0, 1, 1}, {1, 2, 2}, {-1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({0, 1, 2}, {1, 2, 3}, {-1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTieredTree({0, 1}, {1, 2}, {0, 0}), std::invalid_argument);
}

TEST_CASE("reading order and word") {
    CHECK(reading_order(repeated_label_tree()) == std::vector<int>{0, 1, 4, 3, 2, 5, 6, 8, 7});
    CHECK(reading_word(repeated_label_tree()) == std::vector<int>{1, 3, 1, 2, 2, 4, 2, 4, 4});
    CHECK(reading_word(standard_nine_tree()) == std::vector<int>{2, 6, 1, 5, 4, 9, 3, 8, 7});
    // one vertex per level reads bottom to top
    CHECK(reading_word(fully_tiered_six_tree()) == std::vector<int>{2, 3, 1, 2, 3, 3});
}

TEST_CASE("standardisation") {
    CHECK(standardise(repeated_label_tree()) == standard_nine_tree());
    CHECK(standardise(standard_nine_tree()) == standard_nine_tree());
    CHECK(standardise(fully_tiered_six_tree()) ==
          RootedTieredTree({0, 1, 2, 3, 4, 5}, {3, 6, 1, 2, 5, 4}, {-1, 0, 3, 4, 0, 2}));

    // standardising keeps the statistic, over a whole content class
    for (const Composition& content : compositions_of(4))
        for (const RootedTieredTree& t : enumerate_rtt(Composition({2, 1}), content)) {
            RootedTieredTree s = standardise(t);
            CHECK(s.is_standard());
            CHECK(s.levels() == t.levels());
            CHECK(s.parents() == t.parents());
            CHECK(inv(s) == inv(t));
        }
}

TEST_CASE("inversion statistic") {
    CHECK(inv(repeated_label_tree()) == 4);
    CHECK(inv(standard_nine_tree()) == 4);
    CHECK(inv(fully_tiered_six_tree()) == 2);
    CHECK(inv(standard_six_tree()) == 0);
    CHECK(inv(RootedTieredTree({0}, {1}, {-1})) == 0);
    // a hooked chain: the grandchild sits below its grandparent's level
    CHECK(inv(RootedTieredTree({0, 2, 1}, {1, 3, 2}, {-1, 0, 1})) == 1);

    CHECK(inv_pairs_by_label(standard_nine_tree()) ==
          std::set<std::pair<int, int>>{{9, 8}, {7, 5}, {7, 3}, {3, 1}});
}

TEST_CASE("level and label exchange") {
    CHECK(level_label_swap(fully_tiered_six_tree()) == standard_six_tree());
    CHECK(level_label_swap(standard_six_tree()) == fully_tiered_six_tree());
    // needs exactly one vertex labelled 1
    CHECK_THROWS_AS(level_label_swap(RootedTieredTree({0, 2, 1}, {1, 3, 1}, {-1, 0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(level_label_swap(RootedTieredTree({0, 1}, {2, 3}, {-1, 0})),
                    std::invalid_argument);
}

TEST_CASE("compatibility graphs") {
    RootedTieredTree t = standard_nine_tree();
    Graph g = compatibility_graph(t);
    CHECK(g.vertex_count() == 9);
    CHECK(*g.root() == 1);
    CHECK(g.labels() == t.labels());

    std::set<std::pair<int, int>> got;
    for (const Edge& e : g.edges()) {
        int a = g.label(e.a), b = g.label(e.b);
        got.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<std::pair<int, int>> expect = {
        {2, 4}, {2, 7}, {6, 9}, {4, 9}, {5, 7}, {1, 3}, {3, 7}, {6, 8},  // tree edges
        {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 5}, {2, 6}, {2, 8}, {2, 9},
        {3, 8}, {4, 7}, {4, 8}, {5, 8}, {5, 9}, {6, 7}};
    CHECK(got == expect);

    SpanningTree st = as_spanning_tree(t, g);
    CHECK(static_cast<int>(st.size()) == 8);
    CHECK(kappa_inversions(g, st) == inv(t));
    CHECK_THROWS_AS(as_spanning_tree(t, inversion_graph({1, 2, 3, 4, 5, 6, 7, 8, 9})),
                    std::invalid_argument);

    // with one vertex per level the compatibility graph is the inversion graph
    // of the bottom-to-top label word, reversed into positions
    RootedTieredTree f = fully_tiered_six_tree();
    Graph c = compatibility_graph(f);
    Graph k = inversion_graph({3, 3, 2, 1, 3, 2});
    CHECK(c.vertex_count() == k.vertex_count());
    CHECK(*k.root() == 7 - *c.root());
    std::set<Edge> mapped;
    for (const Edge& e : c.edges())
        mapped.insert({std::min(7 - e.a, 7 - e.b), std::max(7 - e.a, 7 - e.b)});
    CHECK(mapped == std::set<Edge>(k.edges().begin(), k.edges().end()));
    for (int v = 1; v <= 6; ++v) CHECK(c.label(v) == k.label(7 - v));
}

TEST_CASE("tiered tree enumeration") {
    std::vector<RootedTieredTree> tiny = enumerate_rtt(Composition({1}), Composition({1, 1}));
    CHECK(tiny.size() == 1);
    CHECK(inv(tiny[0]) == 0);
    CHECK(enumerate_rtt(Composition({1}), Composition({2})).empty());
    CHECK(enumerate_rtt(Composition(), Composition({1})).size() == 1);

    std::vector<RootedTieredTree> st11 = enumerate_strtt(Composition({1, 1}));
    CHECK(st11.size() == 5);
    CHECK(inv_sum(st11) == QTPoly(4) + Q);
    CHECK(enumerate_strtt(Composition({2})).size() == 1);
    CHECK(tree_enumerator(Composition({2}), ones(3)) == QTPoly(1));
    CHECK(tree_enumerator(Composition({1, 1}), ones(3)) == QTPoly(4) + Q);

    Composition tiers({4, 2, 2});
    Composition content({2, 3, 1, 3});
    std::vector<RootedTieredTree> trees = enumerate_rtt(tiers, content);
    std::set<std::string> forms;
    for (const RootedTieredTree& t : trees) {
        CHECK(t.tier_profile() == tiers);
        CHECK(has_content(t, content));
        forms.insert(canonical_form(t));
    }
    CHECK(forms.size() == trees.size());
    CHECK(forms.count(canonical_form(repeated_label_tree())) == 1);

    CHECK_THROWS_AS(enumerate_rtt(Composition({1, 1}), Composition({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("zero-rooted enumeration") {
    std::vector<RootedTieredTree> one = enumerate_rtt0(Composition({1}), Composition({1}));
    CHECK(one.size() == 1);
    CHECK(one[0].label(one[0].root()) == 0);

    std::vector<RootedTieredTree> trees = enumerate_rtt0(Composition({1, 1}), Composition({1, 1}));
    CHECK(trees.size() == 4);
    CHECK(inv_sum(trees) == QTPoly(3) + Q);

    CHECK_THROWS_AS(enumerate_rtt0(Composition({1}), Composition({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("inv of a standard tree is kappa inside its compatibility graph") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& tiers : compositions_of(n))
            for (const RootedTieredTree& t : enumerate_strtt(tiers)) {
                Graph g = compatibility_graph(t);
                CHECK(kappa_inversions(g, as_spanning_tree(t, g)) == inv(t));
            }
}

TEST_CASE("fully tiered trees are the rooted spanning trees of inversion graphs") {
    for (int n = 2; n <= 4; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            std::map<std::vector<int>, int> per_word;
            std::vector<RootedTieredTree> trees = enumerate_rtt(ones(n - 1), alpha);
            for (const RootedTieredTree& t : trees) {
                std::vector<int> word(n);
                for (int v = 0; v < n; ++v) word[n - t.level(v) - 1] = t.label(v);
                std::vector<int> u = word_standardise(word);
                Graph g = inversion_graph(u);
                SpanningTree st;
                for (int v = 0; v < n; ++v) {
                    if (v == t.root()) continue;
                    int e = g.edge_index(n - t.level(v), n - t.level(t.parent(v)));
                    REQUIRE(e >= 0);
                    st.push_back(e);
                }
                std::sort(st.begin(), st.end());
                CHECK(kappa_inversions(g, st) == inv(t));
                ++per_word[u];
            }
            std::size_t matched = 0;
            for (const std::vector<int>& u : alpha_shuffles(alpha)) {
                CHECK(per_word[u] ==
                      static_cast<int>(spanning_trees(inversion_graph(u)).size()));
                matched += per_word[u];
            }
            CHECK(matched == trees.size());
        }
}

TEST_CASE("shuffle sums of R match the tree enumerators") {
    for (int n = 2; n <= 4; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            QTPoly flat;
            for (const std::vector<int>& u : alpha_shuffles(alpha)) flat += r_poly(u);
            CHECK(flat == tree_enumerator(ones(n - 1), alpha));

            std::vector<int> parts{1};
            for (int p : alpha.parts()) parts.push_back(p);
            QTPoly pinned;
            for (const std::vector<int>& u : alpha_shuffles(Composition(parts)))
                pinned += r_poly(u);
            CHECK(pinned == tree_enumerator(alpha, ones(n + 1)));

            // the level/label exchange realises the second identity
            std::multiset<std::string> swapped, standard;
            for (const RootedTieredTree& t : enumerate_rtt(ones(n), Composition(parts)))
                swapped.insert(canonical_form(level_label_swap(t)));
            for (const RootedTieredTree& s : enumerate_strtt(alpha))
                standard.insert(canonical_form(s));
            CHECK(swapped == standard);
        }
}

TEST_CASE("standard route reproduces the enumerator") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& tiers : compositions_of(n))
            for (const Composition& content : compositions_of(n + 1))
                CHECK(tree_enumerator(tiers, content) == tree_enumerator_std(tiers, content));
    // content order never matters
    CHECK(tree_enumerator(Composition({2, 1}), Composition({2, 1, 1})) ==
          tree_enumerator(Composition({2, 1}), Composition({1, 1, 2})));
}

TEST_CASE("standard trees split by root label") {
    Composition tiers({1, 1, 1});
    std::vector<RootedTieredTree> all = enumerate_strtt(tiers);
    std::size_t total = 0;
    QTPoly parts_sum;
    for (int j = 1; j <= 4; ++j) {
        std::vector<RootedTieredTree> part = enumerate_strtt_root(tiers, j);
        total += part.size();
        for (const RootedTieredTree& t : part) CHECK(t.label(t.root()) == j);
        parts_sum += inv_sum(part);
    }
    CHECK(total == all.size());
    CHECK(parts_sum == inv_sum(all));
    CHECK_THROWS_AS(enumerate_strtt_root(tiers, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_strtt_root(tiers, 5), std::invalid_argument);
}
