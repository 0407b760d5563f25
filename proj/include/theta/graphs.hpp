#pragma once

#include <theta/qt.hpp>
#include <theta/shapes.hpp>

#include <optional>
#include <vector>

namespace theta {

// Undirected edge between 1-based vertices, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n: no loops, no multiple edges.
// Optionally rooted and vertex-labelled (labels default to the vertex ids).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int a, int b) const;
    // Index into edges() of {a,b}; -1 if absent.
    int edge_index(int a, int b) const;

    int label(int v) const;  // defaults to v when unlabelled
    const std::vector<int>& labels() const { return labels_; }
    void set_labels(std::vector<int> labels);

    std::optional<int> root() const { return root_; }
    void set_root(int v);
    void clear_root() { root_.reset(); }

    // Component id per vertex (index 0 unused), ids consecutive from 0.
    std::vector<int> components() const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> labels_;
    std::optional<int> root_;
};

// A spanning tree as a sorted list of indices into Graph::edges().
using SpanningTree = std::vector<int>;

// Rank per edge index; smaller rank = smaller edge. Any permutation of
// 0..edge_count-1 is a valid order.
using EdgeOrder = std::vector<int>;

// Index order of the edge list.
EdgeOrder index_order(const Graph& g);
// Lexicographic by the (sorted) label pair of the endpoints; ties broken by
// edge index. The preset order used for the figures.
EdgeOrder lex_label_order(const Graph& g);

// All spanning trees, each exactly once; empty when g is disconnected.
std::vector<SpanningTree> spanning_trees(const Graph& g);

struct Activity {
    int internal_active = 0;
    int external_active = 0;
    friend bool operator==(const Activity&, const Activity&) = default;
};

// Internal/external activity of a spanning tree under the given edge order: a
// tree edge is internally active if it is minimal in the cut it spans, a
// non-tree edge externally active if minimal in its fundamental circuit.
Activity activity(const Graph& g, const SpanningTree& tree, const EdgeOrder& order);

// Tutte polynomial as the activity sum over spanning trees, rendered with q
// as x and t as y; zero when g is disconnected (no spanning trees).
QTPoly tutte(const Graph& g);

// T_g(1, q): the Tutte polynomial with its first argument fixed to 1,
// returned as a polynomial in q alone.
QTPoly tutte_at_one(const Graph& g);

// Number of kappa-inversions of the tree: pairs (i, j) with j a descendant of
// i, label(j) < label(i), i not the root, and {parent(i), j} an edge of g.
// Requires a root; throws std::invalid_argument without one.
int kappa_inversions(const Graph& g, const SpanningTree& tree);

// Graph on positions 1..n with vertex i labelled u[i-1] and edges between the
// positions of every inversion of u. The root defaults to the last position,
// the tier-0 vertex of the corresponding tiered tree.
Graph inversion_graph(const std::vector<int>& u);

// R_u(q) = T_{K_u}(1, q) with K_u the inversion graph of u; zero whenever K_u
// is disconnected. The shuffle sums of these match the Kac polynomials.
QTPoly r_poly(const std::vector<int>& u);

// All permutations of S_n containing the increasing blocks (1..a_1),
// (a_1+1..a_1+a_2), ... as subsequences, in lexicographic order.
std::vector<std::vector<int>> alpha_shuffles(const Composition& alpha);

// Replaces the occurrences of the smallest letter by 1, 2, ... left to right,
// then the next letter by the following integers, and so on. The result is a
// permutation with the same inversion graph as u.
std::vector<int> word_standardise(const std::vector<int>& u);

}  // namespace theta
