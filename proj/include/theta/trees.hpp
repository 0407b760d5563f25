#pragma once

#include <theta/graphs.hpp>
#include <theta/qt.hpp>
#include <theta/shapes.hpp>

#include <string>
#include <vector>

namespace theta {

// Rooted tree on vertices 0..size-1 whose vertices carry a level and a label.
// The root is the vertex without a parent; it sits alone on its level, and a
// vertex on level 0 must be the root. Every edge joins two distinct levels
// with the lower endpoint carrying the strictly smaller label, and same-level
// children of a common parent have distinct labels. Labels are positive,
// except that the root may carry 0 (the variant whose content skips the root).
// Equality is positional; use canonical_form to compare up to renumbering.
class RootedTieredTree {
public:
    RootedTieredTree(std::vector<int> levels, std::vector<int> labels,
                     std::vector<int> parents);

    int size() const { return static_cast<int>(levels_.size()); }
    int root() const { return root_; }
    int level(int v) const { return levels_.at(v); }
    int label(int v) const { return labels_.at(v); }
    int parent(int v) const { return parents_.at(v); }  // -1 for the root
    int height(int v) const { return heights_.at(v); }  // edge distance from the root
    const std::vector<int>& children(int v) const { return children_.at(v); }
    const std::vector<int>& levels() const { return levels_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<int>& parents() const { return parents_; }

    bool is_standard() const;          // labels are exactly 1..size
    Composition tier_profile() const;  // vertex counts on levels 1..max

    friend bool operator==(const RootedTieredTree&, const RootedTieredTree&) = default;

private:
    std::vector<int> levels_;
    std::vector<int> labels_;
    std::vector<int> parents_;
    std::vector<int> heights_;
    std::vector<std::vector<int>> children_;
    int root_ = -1;
};

// Vertices a and b lie on distinct levels and their labels increase strictly
// in the same direction as their levels.
bool compatible(const RootedTieredTree& t, int a, int b);

// Number of pairs (i, j) of non-root vertices with j a proper descendant of i,
// j compatible with parent(i), and either label(j) < label(i) or the labels
// tie with j on the strictly higher level.
int inv(const RootedTieredTree& t);

// Vertices sorted by level, then by decreasing height, then recursively by the
// order of their parents, then by label.
std::vector<int> reading_order(const RootedTieredTree& t);

// Labels along the reading order.
std::vector<int> reading_word(const RootedTieredTree& t);

// Relabels with 1..size so that relative label order is kept and equal labels
// decrease along the reading word; preserves inv.
RootedTieredTree standardise(const RootedTieredTree& t);

// Exchanges the two decorations: new level = label - 1, new label = level + 1,
// edges conserved, re-rooted at the unique relabelled level-0 vertex. Only
// meaningful when every level is distinct and exactly one vertex has label 1.
RootedTieredTree level_label_swap(const RootedTieredTree& t);

// Canonical text encoding, identical for trees differing only by renumbering.
std::string canonical_form(const RootedTieredTree& t);

// Graph on vertices 1..size (tree vertex v becomes v+1) joining all
// compatible pairs; contains the tree edges, keeps labels and root. For a
// standard tree this is the inversion graph of an associated word, and inv of
// the tree equals the kappa count of the tree inside it.
Graph compatibility_graph(const RootedTieredTree& t);

// Edge indices of the tree inside g under the v -> v+1 correspondence; throws
// std::invalid_argument if some tree edge is missing from g.
SpanningTree as_spanning_tree(const RootedTieredTree& t, const Graph& g);

// All trees, up to renumbering, with tiers.part(i) vertices on level i and
// content.part(w) vertices labelled w; content must have size tiers.size()+1
// (the root carries a label from the content).
std::vector<RootedTieredTree> enumerate_rtt(const Composition& tiers,
                                            const Composition& content);

// Same with the root labelled 0; content covers the non-root vertices only,
// so its size must be tiers.size().
std::vector<RootedTieredTree> enumerate_rtt0(const Composition& tiers,
                                             const Composition& content);

// Standard trees: content (1, 1, ..., 1) of size tiers.size()+1.
std::vector<RootedTieredTree> enumerate_strtt(const Composition& tiers);

// Standard trees whose root is labelled root_label (between 1 and size).
std::vector<RootedTieredTree> enumerate_strtt_root(const Composition& tiers,
                                                   int root_label);

// Sum of q^inv over enumerate_rtt(tiers, content).
QTPoly tree_enumerator(const Composition& tiers, const Composition& content);

// The same sum computed from standard trees alone: each standard tree
// contributes q^inv times the content coefficient of the fundamental
// quasi-symmetric function indexed by the inverse descents of its reversed
// reading word.
QTPoly tree_enumerator_std(const Composition& tiers, const Composition& content);

}  // namespace theta
