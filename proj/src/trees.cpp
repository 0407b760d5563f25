#include <theta/trees.hpp>

#include <theta/symfunc.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace theta {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RootedTieredTree::RootedTieredTree(std::vector<int> levels, std::vector<int> labels,
                                   std::vector<int> parents)
    : levels_(std::move(levels)), labels_(std::move(labels)), parents_(std::move(parents)) {
    int n = size();
    require(n > 0, "tiered tree: empty vertex set");
    require(static_cast<int>(labels_.size()) == n && static_cast<int>(parents_.size()) == n,
            "tiered tree: vector sizes differ");
    for (int v = 0; v < n; ++v) {
        require(levels_[v] >= 0, "tiered tree: negative level");
        if (parents_[v] == -1) {
            require(root_ < 0, "tiered tree: more than one root");
            root_ = v;
        }
    }
    require(root_ >= 0, "tiered tree: no root");
    for (int v = 0; v < n; ++v) {
        require(v == root_ || levels_[v] != levels_[root_],
                "tiered tree: the root must be alone on its level");
        require(levels_[v] > 0 || v == root_, "tiered tree: level 0 belongs to the root");
    }
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        require(labels_[v] > 0 || (v == root_ && labels_[v] == 0),
                "tiered tree: labels must be positive away from the root");
        if (v == root_) continue;
        int p = parents_[v];
        require(p >= 0 && p < n && p != v, "tiered tree: parent out of range");
        require(levels_[p] != levels_[v], "tiered tree: edge inside a level");
        int lo = levels_[p] < levels_[v] ? p : v;
        int hi = lo == p ? v : p;
        require(labels_[lo] < labels_[hi],
                "tiered tree: the lower endpoint must carry the smaller label");
        children_[p].push_back(v);
    }
    heights_.assign(n, -1);
    heights_[root_] = 0;
    std::vector<int> queue{root_};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int v = queue[k];
        for (int c : children_[v]) {
            heights_[c] = heights_[v] + 1;
            queue.push_back(c);
        }
    }
    require(static_cast<int>(queue.size()) == n, "tiered tree: parents do not form a tree");
    for (int p = 0; p < n; ++p)
        for (std::size_t x = 0; x < children_[p].size(); ++x)
            for (std::size_t y = x + 1; y < children_[p].size(); ++y) {
                int a = children_[p][x];
                int b = children_[p][y];
                require(levels_[a] != levels_[b] || labels_[a] != labels_[b],
                        "tiered tree: same-level siblings share a label");
            }
}

bool RootedTieredTree::is_standard() const {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < size(); ++v)
        if (sorted[v] != v + 1) return false;
    return true;
}

Composition RootedTieredTree::tier_profile() const {
    int top = *std::max_element(levels_.begin(), levels_.end());
    std::vector<int> counts(top, 0);
    for (int v = 0; v < size(); ++v)
        if (levels_[v] > 0) ++counts[levels_[v] - 1];
    return Composition(std::move(counts));
}

bool compatible(const RootedTieredTree& t, int a, int b) {
    if (t.level(a) == t.level(b)) return false;
    if (t.level(a) < t.level(b)) return t.label(a) < t.label(b);
    return t.label(a) > t.label(b);
}

int inv(const RootedTieredTree& t) {
    int total = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (i == t.root()) continue;
        int p = t.parent(i);
        std::vector<int> stack(t.children(i));
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            bool smaller = t.label(j) < t.label(i) ||
                           (t.label(j) == t.label(i) && t.level(j) > t.level(i));
            if (smaller && compatible(t, j, p)) ++total;
            stack.insert(stack.end(), t.children(j).begin(), t.children(j).end());
        }
    }
    return total;
}

namespace {

bool reads_before(const RootedTieredTree& t, int a, int b) {
    if (a == b) return false;
    if (t.level(a) != t.level(b)) return t.level(a) < t.level(b);
    if (t.height(a) != t.height(b)) return t.height(a) > t.height(b);
    if (t.parent(a) != t.parent(b)) return reads_before(t, t.parent(a), t.parent(b));
    return t.label(a) < t.label(b);
}

}  // namespace

std::vector<int> reading_order(const RootedTieredTree& t) {
    std::vector<int> order(t.size());
    for (int v = 0; v < t.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return reads_before(t, a, b); });
    return order;
}

std::vector<int> reading_word(const RootedTieredTree& t) {
    std::vector<int> word;
    word.reserve(t.size());
    for (int v : reading_order(t)) word.push_back(t.label(v));
    return word;
}

RootedTieredTree standardise(const RootedTieredTree& t) {
    int n = t.size();
    std::vector<int> pos(n);
    {
        std::vector<int> order = reading_order(t);
        for (int k = 0; k < n; ++k) pos[order[k]] = k;
    }
    std::vector<int> by_label(n);
    for (int v = 0; v < n; ++v) by_label[v] = v;
    std::sort(by_label.begin(), by_label.end(), [&](int a, int b) {
        if (t.label(a) != t.label(b)) return t.label(a) < t.label(b);
        return pos[a] > pos[b];
    });
    std::vector<int> labels(n);
    for (int r = 0; r < n; ++r) labels[by_label[r]] = r + 1;
    return RootedTieredTree(t.levels(), std::move(labels), t.parents());
}

RootedTieredTree level_label_swap(const RootedTieredTree& t) {
    int n = t.size();
    std::vector<int> levels(n), labels(n);
    int root = -1;
    for (int v = 0; v < n; ++v) {
        levels[v] = t.label(v) - 1;
        labels[v] = t.level(v) + 1;
        if (levels[v] == 0) root = v;
    }
    if (root < 0) throw std::invalid_argument("level swap: no vertex labelled 1");
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        if (v != t.root()) {
            adj[v].push_back(t.parent(v));
            adj[t.parent(v)].push_back(v);
        }
    std::vector<int> parents(n, -2);
    parents[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int w : adj[queue[k]])
            if (parents[w] == -2) {
                parents[w] = queue[k];
                queue.push_back(w);
            }
    return RootedTieredTree(std::move(levels), std::move(labels), std::move(parents));
}

namespace {

std::string encode(const RootedTieredTree& t, int v) {
    std::vector<std::string> kids;
    kids.reserve(t.children(v).size());
    for (int c : t.children(v)) kids.push_back(encode(t, c));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + std::to_string(t.level(v)) + "." + std::to_string(t.label(v));
    for (const std::string& k : kids) out += k;
    return out + ")";
}

}  // namespace

std::string canonical_form(const RootedTieredTree& t) {
    return encode(t, t.root());
}

Graph compatibility_graph(const RootedTieredTree& t) {
    int n = t.size();
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (compatible(t, a, b)) edges.push_back({a + 1, b + 1});
    Graph g(n, std::move(edges));
    g.set_labels(t.labels());
    g.set_root(t.root() + 1);
    return g;
}

SpanningTree as_spanning_tree(const RootedTieredTree& t, const Graph& g) {
    SpanningTree tree;
    for (int v = 0; v < t.size(); ++v) {
        if (v == t.root()) continue;
        int e = g.edge_index(v + 1, t.parent(v) + 1);
        if (e < 0)
            throw std::invalid_argument("as_spanning_tree: tree edge missing from the graph");
        tree.push_back(e);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

struct Slot {
    int level = 0;
    int label = 0;
};

bool slots_compatible(const Slot& a, const Slot& b) {
    if (a.level == b.level) return false;
    return a.level < b.level ? a.label < b.label : a.label > b.label;
}

// All tiered trees over the fixed slots (slot 0 alone on level 0), read off
// the spanning trees of the graph joining the compatible slot pairs. Slots
// sharing level and label make renumbered duplicates; `seen` filters them.
void trees_over_slots(const std::vector<Slot>& slots, std::set<std::string>& seen,
                      std::vector<RootedTieredTree>& out) {
    int n = static_cast<int>(slots.size());
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (slots_compatible(slots[a], slots[b])) edges.push_back({a + 1, b + 1});
    Graph g(n, std::move(edges));
    std::vector<int> levels(n), labels(n);
    for (int v = 0; v < n; ++v) {
        levels[v] = slots[v].level;
        labels[v] = slots[v].label;
    }
    for (const SpanningTree& tree : spanning_trees(g)) {
        std::vector<std::vector<int>> adj(n);
        for (int e : tree) {
            const Edge& ed = g.edges()[e];
            adj[ed.a - 1].push_back(ed.b - 1);
            adj[ed.b - 1].push_back(ed.a - 1);
        }
        std::vector<int> parents(n, -2);
        parents[0] = -1;
        std::vector<int> queue{0};
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (int w : adj[queue[k]])
                if (parents[w] == -2) {
                    parents[w] = queue[k];
                    queue.push_back(w);
                }
        bool ok = true;
        for (int v = 1; v < n && ok; ++v)
            for (int w = v + 1; w < n && ok; ++w)
                if (parents[v] == parents[w] && slots[v].level == slots[w].level &&
                    slots[v].label == slots[w].label)
                    ok = false;
        if (!ok) continue;
        RootedTieredTree t(levels, labels, parents);
        if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
    }
}

// Distributes the pooled labels (value, multiplicity) over the tiers, then
// hands each filled slot list to the tree builder.
void fill_tiers(std::vector<std::pair<int, int>>& pool, const Composition& tiers, int tier,
                std::vector<Slot>& slots, std::set<std::string>& seen,
                std::vector<RootedTieredTree>& out) {
    if (tier > tiers.length()) {
        trees_over_slots(slots, seen, out);
        return;
    }
    auto choose = [&](auto&& self, int idx, int left) -> void {
        if (left == 0) {
            fill_tiers(pool, tiers, tier + 1, slots, seen, out);
            return;
        }
        if (idx >= static_cast<int>(pool.size())) return;
        self(self, idx + 1, left);
        int avail = pool[idx].second;
        int value = pool[idx].first;
        int cap = std::min(avail, left);
        for (int c = 1; c <= cap; ++c) {
            pool[idx].second = avail - c;
            for (int r = 0; r < c; ++r) slots.push_back({tier, value});
            self(self, idx + 1, left - c);
            for (int r = 0; r < c; ++r) slots.pop_back();
        }
        pool[idx].second = avail;
    };
    choose(choose, 0, tiers.part(tier));
}

std::vector<std::pair<int, int>> content_pool(const Composition& content, int skip_once) {
    std::vector<std::pair<int, int>> pool;
    for (int v = 1; v <= content.length(); ++v) {
        int m = content.part(v) - (v == skip_once ? 1 : 0);
        if (m > 0) pool.push_back({v, m});
    }
    return pool;
}

}  // namespace

std::vector<RootedTieredTree> enumerate_rtt(const Composition& tiers,
                                            const Composition& content) {
    if (content.size() != tiers.size() + 1)
        throw std::invalid_argument("enumerate_rtt: content must cover the root and the tiers");
    std::vector<RootedTieredTree> out;
    std::set<std::string> seen;
    for (int w = 1; w <= content.length(); ++w) {
        std::vector<std::pair<int, int>> pool = content_pool(content, w);
        std::vector<Slot> slots{{0, w}};
        fill_tiers(pool, tiers, 1, slots, seen, out);
    }
    return out;
}

std::vector<RootedTieredTree> enumerate_rtt0(const Composition& tiers,
                                             const Composition& content) {
    if (content.size() != tiers.size())
        throw std::invalid_argument("enumerate_rtt0: content must cover exactly the tiers");
    std::vector<RootedTieredTree> out;
    std::set<std::string> seen;
    std::vector<std::pair<int, int>> pool = content_pool(content, 0);
    std::vector<Slot> slots{{0, 0}};
    fill_tiers(pool, tiers, 1, slots, seen, out);
    return out;
}

std::vector<RootedTieredTree> enumerate_strtt(const Composition& tiers) {
    return enumerate_rtt(tiers, Composition(std::vector<int>(tiers.size() + 1, 1)));
}

std::vector<RootedTieredTree> enumerate_strtt_root(const Composition& tiers, int root_label) {
    if (root_label < 1 || root_label > tiers.size() + 1)
        throw std::invalid_argument("enumerate_strtt_root: label out of range");
    std::vector<RootedTieredTree> out;
    for (RootedTieredTree& t : enumerate_strtt(tiers))
        if (t.label(t.root()) == root_label) out.push_back(std::move(t));
    return out;
}

QTPoly tree_enumerator(const Composition& tiers, const Composition& content) {
    QTPoly total;
    for (const RootedTieredTree& t : enumerate_rtt(tiers, content))
        total += QTPoly::monomial(inv(t), 0);
    return total;
}

QTPoly tree_enumerator_std(const Composition& tiers, const Composition& content) {
    int n = tiers.size() + 1;
    if (content.size() != n)
        throw std::invalid_argument("tree_enumerator_std: content size mismatch");
    QTPoly total;
    for (const RootedTieredTree& t : enumerate_strtt(tiers)) {
        std::vector<int> word = reading_word(t);
        std::reverse(word.begin(), word.end());
        std::vector<int> pos(n + 1, 0);
        for (int k = 0; k < n; ++k) pos[word[k]] = k;
        SubsetMask mask{n, {}};
        for (int v = 1; v < n; ++v)
            if (pos[v + 1] < pos[v]) mask.S.insert(v);
        if (fundamental_content(mask, content)) total += QTPoly::monomial(inv(t), 0);
    }
    return total;
}

}  // namespace theta
