#include <minhom/error.hpp>
#include <minhom/maxflow.hpp>

#include <algorithm>
#include <limits>
#include <queue>

namespace minhom {

FlowNetwork::FlowNetwork(std::size_t nodes) : adj_(nodes) {}

auto FlowNetwork::add_node() -> Node
{
    adj_.emplace_back();
    return adj_.size() - 1;
}

auto FlowNetwork::add_arc(Node from, Node to, Capacity capacity) -> void
{
    if (from >= adj_.size() || to >= adj_.size())
        throw InvalidArgument("flow arc endpoint out of range");
    if (capacity < 0)
        throw InvalidArgument("flow arc capacity must be nonnegative");
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, capacity});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
}

auto FlowNetwork::bfs(Node source, Node sink) -> bool
{
    level_.assign(adj_.size(), -1);
    level_[source] = 0;
    std::queue<Node> queue;
    queue.push(source);
    while (! queue.empty()) {
        Node v = queue.front();
        queue.pop();
        for (std::size_t id : adj_[v]) {
            const Edge & e = edges_[id];
            if (e.residual > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                queue.push(e.to);
            }
        }
    }
    return level_[sink] >= 0;
}

auto FlowNetwork::dfs(Node v, Node sink, Capacity pushed) -> Capacity
{
    if (v == sink)
        return pushed;
    for (std::size_t & i = next_[v]; i < adj_[v].size(); ++i) {
        std::size_t id = adj_[v][i];
        Edge & e = edges_[id];
        if (e.residual <= 0 || level_[e.to] != level_[v] + 1)
            continue;
        Capacity got = dfs(e.to, sink, std::min(pushed, e.residual));
        if (got > 0) {
            e.residual -= got;
            edges_[id ^ 1].residual += got;
            return got;
        }
    }
    return 0;
}

auto FlowNetwork::max_flow(Node source, Node sink) -> Capacity
{
    if (source >= adj_.size() || sink >= adj_.size() || source == sink)
        throw InvalidArgument("bad source or sink");
    Capacity total = 0;
    while (bfs(source, sink)) {
        next_.assign(adj_.size(), 0);
        while (Capacity pushed = dfs(source, sink, std::numeric_limits<Capacity>::max()))
            if (__builtin_add_overflow(total, pushed, &total))
                throw Overflow("max-flow value overflows int64");
    }
    // The final failed BFS leaves exactly the residual-reachable nodes levelled.
    source_side_.assign(adj_.size(), 0);
    for (Node v = 0; v < adj_.size(); ++v)
        source_side_[v] = level_[v] >= 0;
    return total;
}

} // namespace minhom
