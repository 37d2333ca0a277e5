#include "circlepaint/graph.hpp"

#include <algorithm>

namespace circlepaint {

Graph::Graph(std::vector<std::string> vertex_ids) : ids(std::move(vertex_ids)) {
    adj.resize(ids.size());
}

int Graph::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (ids[i] == id) return i;
    return -1;
}

void Graph::add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
}

void Graph::finalize() {
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (const auto& nbrs : adj) total += static_cast<long long>(nbrs.size());
    return total / 2;
}

}  // namespace circlepaint
