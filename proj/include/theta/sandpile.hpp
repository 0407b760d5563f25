#pragma once

#include <theta/graphs.hpp>
#include <theta/qt.hpp>

#include <vector>

namespace theta {

// Connected graph with a distinguished sink vertex. Grains sit on vertices; a
// vertex is unstable once it holds at least as many grains as its degree.
class SandpileGraph {
public:
    SandpileGraph(Graph graph, int sink);

    const Graph& graph() const { return graph_; }
    int sink() const { return sink_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::vector<int>& neighbours(int v) const { return adjacency_.at(v); }

private:
    Graph graph_;
    int sink_;
    std::vector<std::vector<int>> adjacency_;
};

// Grain counts per vertex; entry 0 is unused so that grains[v] belongs to
// vertex v. All counts are nonnegative.
struct SandpileConfig {
    std::vector<int> grains;

    friend bool operator==(const SandpileConfig&, const SandpileConfig&) = default;
};

// Vertex v sheds one grain along each incident edge. Throws when v holds
// fewer grains than its degree (toppling a stable vertex), sink included.
SandpileConfig topple(const SandpileGraph& g, SandpileConfig c, int v);

// Every vertex other than the sink holds fewer grains than its degree.
bool is_stable(const SandpileGraph& g, const SandpileConfig& c);

// Topples unstable non-sink vertices until none remain. The result does not
// depend on the order in which they are picked.
SandpileConfig stabilize(const SandpileGraph& g, SandpileConfig c);

// True when the sink holds exactly its degree, no other vertex is unstable,
// and toppling the sink followed by stabilizing reproduces c.
bool is_recurrent(const SandpileGraph& g, const SandpileConfig& c);

// Same predicate decided by the burning test: starting from the sink, a
// vertex burns once its grains reach its degree minus its burnt neighbours,
// and c is recurrent exactly when the fire consumes the whole graph.
bool is_recurrent_burning(const SandpileGraph& g, const SandpileConfig& c);

// Total number of grains minus the number of edges.
int level(const SandpileGraph& g, const SandpileConfig& c);

// All recurrent configurations, obtained by filtering the stable candidates
// (sink at its degree, every other vertex below its own). Their generating
// polynomial by level is tutte_at_one(g.graph()).
std::vector<SandpileConfig> recurrent_configs(const SandpileGraph& g);

}  // namespace theta
