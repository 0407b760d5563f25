#include <theta/graphs.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace theta {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Adjacency as {neighbour, edge index} pairs.
std::vector<std::vector<std::pair<int, int>>> tree_adjacency(const Graph& g,
                                                             const SpanningTree& tree) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count() + 1);
    for (int idx : tree) {
        const Edge& e = g.edges()[idx];
        adj[e.a].emplace_back(e.b, idx);
        adj[e.b].emplace_back(e.a, idx);
    }
    return adj;
}

void check_spanning_tree(const Graph& g, const SpanningTree& tree) {
    int n = g.vertex_count();
    if (static_cast<int>(tree.size()) != std::max(n - 1, 0))
        throw std::invalid_argument("spanning tree: wrong edge count");
    Dsu dsu(n);
    for (int idx : tree) {
        if (idx < 0 || idx >= g.edge_count())
            throw std::invalid_argument("spanning tree: edge index out of range");
        const Edge& e = g.edges()[idx];
        if (!dsu.unite(e.a, e.b)) throw std::invalid_argument("spanning tree: cycle");
    }
}

// Sum of q^int t^ext over spanning trees, or of q^ext alone (the x = 1
// specialization) when bivariate is off. Zero for disconnected graphs, which
// have no spanning trees.
QTPoly activity_sum(const Graph& g, bool bivariate) {
    QTPoly out;
    EdgeOrder order = index_order(g);
    for (const SpanningTree& tree : spanning_trees(g)) {
        Activity a = activity(g, tree, order);
        out += bivariate ? QTPoly::monomial(a.internal_active, a.external_active)
                         : QTPoly::monomial(a.external_active, 0);
    }
    return out;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (Edge& e : edges) {
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.a < 1 || e.b > n_) throw std::invalid_argument("graph: vertex out of range");
        if (e.a == e.b) throw std::invalid_argument("graph: loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: multiple edge");
    edges_ = std::move(edges);
    labels_.resize(n_);
    std::iota(labels_.begin(), labels_.end(), 1);
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
    if (it == edges_.end() || !(*it == Edge{a, b})) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::label(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("graph: vertex out of range");
    return labels_[v - 1];
}

void Graph::set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("graph: label count mismatch");
    labels_ = std::move(labels);
}

void Graph::set_root(int v) {
    if (v < 1 || v > n_) throw std::invalid_argument("graph: root out of range");
    root_ = v;
}

std::vector<int> Graph::components() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (const Edge& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<int> comp(n_ + 1, -1);
    int c = 0;
    for (int s = 1; s <= n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

bool Graph::connected() const {
    std::vector<int> comp = components();
    for (int v = 1; v <= n_; ++v)
        if (comp[v] != 0) return false;
    return true;
}

EdgeOrder index_order(const Graph& g) {
    EdgeOrder order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

EdgeOrder lex_label_order(const Graph& g) {
    int m = g.edge_count();
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](int j) {
        const Edge& e = g.edges()[j];
        int la = g.label(e.a), lb = g.label(e.b);
        if (la > lb) std::swap(la, lb);
        return std::tuple(la, lb, j);
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return key(x) < key(y); });
    EdgeOrder order(m);
    for (int r = 0; r < m; ++r) order[idx[r]] = r;
    return order;
}

std::vector<SpanningTree> spanning_trees(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return {SpanningTree{}};
    if (!g.connected()) return {};
    int m = g.edge_count();
    std::vector<SpanningTree> out;
    SpanningTree chosen;
    // Include/exclude on edges in index order; each tree is reached exactly
    // once because the branch point after its last edge never occurs.
    auto rec = [&](auto&& self, const Dsu& dsu, int idx, int parts) -> void {
        if (parts == 1) {
            out.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) + (m - idx) < n - 1) return;
        Dsu probe = dsu;
        int reachable = parts;
        for (int j = idx; j < m && reachable > 1; ++j)
            if (probe.unite(g.edges()[j].a, g.edges()[j].b)) --reachable;
        if (reachable > 1) return;
        Dsu with = dsu;
        if (with.unite(g.edges()[idx].a, g.edges()[idx].b)) {
            chosen.push_back(idx);
            self(self, with, idx + 1, parts - 1);
            chosen.pop_back();
        }
        self(self, dsu, idx + 1, parts);
    };
    rec(rec, Dsu(n), 0, n);
    return out;
}

Activity activity(const Graph& g, const SpanningTree& tree, const EdgeOrder& order) {
    int n = g.vertex_count(), m = g.edge_count();
    if (static_cast<int>(order.size()) != m)
        throw std::invalid_argument("activity: order size mismatch");
    check_spanning_tree(g, tree);
    auto adj = tree_adjacency(g, tree);
    std::vector<char> in_tree(m, 0);
    for (int idx : tree) in_tree[idx] = 1;
    Activity out;
    for (int te : tree) {
        // Mark the side of the cut containing one endpoint of te.
        std::vector<char> side(n + 1, 0);
        side[g.edges()[te].a] = 1;
        std::vector<int> stack{g.edges()[te].a};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, idx] : adj[v])
                if (idx != te && !side[w]) {
                    side[w] = 1;
                    stack.push_back(w);
                }
        }
        bool active = true;
        for (int j = 0; j < m && active; ++j)
            if (side[g.edges()[j].a] != side[g.edges()[j].b] && order[j] < order[te])
                active = false;
        if (active) ++out.internal_active;
    }
    for (int j = 0; j < m; ++j) {
        if (in_tree[j]) continue;
        // Walk the tree path closing the fundamental circuit of edge j.
        std::vector<int> via(n + 1, -1);
        int from = g.edges()[j].a, to = g.edges()[j].b;
        via[from] = m;
        std::vector<int> stack{from};
        while (via[to] < 0) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, idx] : adj[v])
                if (via[w] < 0) {
                    via[w] = idx;
                    stack.push_back(w);
                }
        }
        bool active = true;
        for (int v = to; v != from && active; ) {
            const Edge& e = g.edges()[via[v]];
            if (order[via[v]] < order[j]) active = false;
            v = e.a == v ? e.b : e.a;
        }
        if (active) ++out.external_active;
    }
    return out;
}

QTPoly tutte(const Graph& g) { return activity_sum(g, true); }

QTPoly tutte_at_one(const Graph& g) { return activity_sum(g, false); }

int kappa_inversions(const Graph& g, const SpanningTree& tree) {
    if (!g.root()) throw std::invalid_argument("kappa_inversions: graph has no root");
    check_spanning_tree(g, tree);
    int n = g.vertex_count(), root = *g.root();
    auto adj = tree_adjacency(g, tree);
    std::vector<int> parent(n + 1, 0), order;
    order.reserve(n);
    parent[root] = root;
    order.push_back(root);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (auto [w, idx] : adj[order[k]])
            if (w != parent[order[k]] && w != root) {
                parent[w] = order[k];
                order.push_back(w);
            }
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == root) continue;
        // Descendants of i, found by walking its subtree.
        std::vector<int> stack;
        for (auto [w, idx] : adj[i])
            if (parent[w] == i) stack.push_back(w);
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            if (g.label(j) < g.label(i) && g.has_edge(parent[i], j)) ++count;
            for (auto [w, idx] : adj[j])
                if (parent[w] == j) stack.push_back(w);
        }
    }
    return count;
}

Graph inversion_graph(const std::vector<int>& u) {
    int n = static_cast<int>(u.size());
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (u[i - 1] > u[j - 1]) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    g.set_labels(u);
    if (n > 0) g.set_root(n);
    return g;
}

QTPoly r_poly(const std::vector<int>& u) { return activity_sum(inversion_graph(u), false); }

std::vector<std::vector<int>> alpha_shuffles(const Composition& alpha) {
    int n = alpha.size();
    std::vector<int> block(n + 1, 0);
    int v = 0, b = 0;
    for (int part : alpha.parts()) {
        ++b;
        for (int k = 0; k < part; ++k) block[++v] = b;
    }
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> pos(n + 1, 0);
        for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
        bool ok = true;
        for (int val = 2; val <= n && ok; ++val)
            if (block[val] == block[val - 1] && pos[val] < pos[val - 1]) ok = false;
        if (ok) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<int> word_standardise(const std::vector<int>& u) {
    int n = static_cast<int>(u.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return u[a] < u[b]; });
    std::vector<int> out(n);
    for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
    return out;
}

}  // namespace theta
