#pragma once

#include <cstdint>
#include <vector>

namespace minhom {

/// Integer-capacity flow network solved by Dinic's algorithm (shortest
/// augmenting paths in level graphs).
class FlowNetwork {
public:
    using Capacity = std::int64_t;
    using Node = std::size_t;

    explicit FlowNetwork(std::size_t nodes = 0);

    auto add_node() -> Node;
    auto node_count() const noexcept -> std::size_t { return adj_.size(); }
    /// Directed arc with nonnegative capacity. Throws InvalidArgument otherwise.
    auto add_arc(Node from, Node to, Capacity capacity) -> void;

    /// Maximum s-t flow value. May be called once per network.
    auto max_flow(Node source, Node sink) -> Capacity;

    /// After max_flow: whether `v` is reachable from the source in the
    /// residual network (the source side of a minimum cut).
    auto on_source_side(Node v) const -> bool { return source_side_.at(v) != 0; }

private:
    struct Edge {
        Node to;
        Capacity residual;
    };

    auto bfs(Node source, Node sink) -> bool;
    auto dfs(Node v, Node sink, Capacity pushed) -> Capacity;

    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
    std::vector<char> source_side_;
};

} // namespace minhom
