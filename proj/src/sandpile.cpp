#include <theta/sandpile.hpp>

#include <stdexcept>
#include <utility>

namespace theta {

namespace {

void check_config(const SandpileGraph& g, const SandpileConfig& c) {
    if (static_cast<int>(c.grains.size()) != g.vertex_count() + 1)
        throw std::invalid_argument("sandpile: grain vector size mismatch");
    if (c.grains[0] != 0) throw std::invalid_argument("sandpile: entry 0 must stay empty");
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (c.grains[v] < 0) throw std::invalid_argument("sandpile: negative grain count");
}

}  // namespace

SandpileGraph::SandpileGraph(Graph graph, int sink) : graph_(std::move(graph)), sink_(sink) {
    if (sink_ < 1 || sink_ > graph_.vertex_count())
        throw std::invalid_argument("sandpile: sink out of range");
    if (!graph_.connected()) throw std::invalid_argument("sandpile: graph must be connected");
    adjacency_.assign(graph_.vertex_count() + 1, {});
    for (const Edge& e : graph_.edges()) {
        adjacency_[e.a].push_back(e.b);
        adjacency_[e.b].push_back(e.a);
    }
}

SandpileConfig topple(const SandpileGraph& g, SandpileConfig c, int v) {
    check_config(g, c);
    if (v < 1 || v > g.vertex_count()) throw std::invalid_argument("topple: vertex out of range");
    if (c.grains[v] < g.degree(v)) throw std::invalid_argument("topple: vertex is stable");
    c.grains[v] -= g.degree(v);
    for (int w : g.neighbours(v)) ++c.grains[w];
    return c;
}

bool is_stable(const SandpileGraph& g, const SandpileConfig& c) {
    check_config(g, c);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != g.sink() && c.grains[v] >= g.degree(v)) return false;
    return true;
}

SandpileConfig stabilize(const SandpileGraph& g, SandpileConfig c) {
    check_config(g, c);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (v == g.sink()) continue;
            while (c.grains[v] >= g.degree(v)) {
                c.grains[v] -= g.degree(v);
                for (int w : g.neighbours(v)) ++c.grains[w];
                moved = true;
            }
        }
    }
    return c;
}

bool is_recurrent(const SandpileGraph& g, const SandpileConfig& c) {
    if (!is_stable(g, c)) return false;
    if (c.grains[g.sink()] != g.degree(g.sink())) return false;
    return stabilize(g, topple(g, c, g.sink())) == c;
}

bool is_recurrent_burning(const SandpileGraph& g, const SandpileConfig& c) {
    if (!is_stable(g, c)) return false;
    if (c.grains[g.sink()] != g.degree(g.sink())) return false;
    std::vector<char> burnt(g.vertex_count() + 1, 0);
    burnt[g.sink()] = 1;
    int count = 1;
    bool spread = true;
    while (spread) {
        spread = false;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (burnt[v]) continue;
            int hot = 0;
            for (int w : g.neighbours(v)) hot += burnt[w];
            if (c.grains[v] >= g.degree(v) - hot) {
                burnt[v] = 1;
                ++count;
                spread = true;
            }
        }
    }
    return count == g.vertex_count();
}

int level(const SandpileGraph& g, const SandpileConfig& c) {
    check_config(g, c);
    int total = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) total += c.grains[v];
    return total - g.edge_count();
}

std::vector<SandpileConfig> recurrent_configs(const SandpileGraph& g) {
    std::vector<SandpileConfig> out;
    SandpileConfig c{std::vector<int>(g.vertex_count() + 1, 0)};
    c.grains[g.sink()] = g.degree(g.sink());
    while (true) {
        if (is_recurrent(g, c)) out.push_back(c);
        int v = 1;
        while (v <= g.vertex_count() &&
               (v == g.sink() || c.grains[v] + 1 >= g.degree(v))) {
            if (v != g.sink()) c.grains[v] = 0;
            ++v;
        }
        if (v > g.vertex_count()) break;
        ++c.grains[v];
    }
    return out;
}

}  // namespace theta
