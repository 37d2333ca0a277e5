#pragma once

#include <string>
#include <vector>

namespace circlepaint {

// Undirected graph with string vertex ids. Adjacency lives in sorted index
// lists; call finalize() after the last add_edge before querying has_edge.
struct Graph {
    std::vector<std::string> ids;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(std::vector<std::string> vertex_ids);

    int size() const { return static_cast<int>(ids.size()); }
    int index_of(const std::string& id) const;  // -1 if absent
    void add_edge(int u, int v);
    void finalize();
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

}  // namespace circlepaint
