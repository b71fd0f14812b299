#include <minhom/cost.hpp>
#include <minhom/error.hpp>

#include <string>

namespace minhom {

auto CostMatrix::check_shape(std::size_t input_size, std::size_t target_size) const -> void
{
    if (rows_ != input_size || cols_ != target_size)
        throw InvalidArgument("cost matrix is " + std::to_string(rows_) + "x" + std::to_string(cols_) + ", expected "
            + std::to_string(input_size) + "x" + std::to_string(target_size));
}

auto is_homomorphism(const Digraph & input, const Digraph & target, std::span<const Vertex> map) -> bool
{
    if (map.size() != input.size())
        throw InvalidArgument("map is not total on the input digraph");
    for (Vertex image : map)
        if (image >= target.size())
            throw InvalidArgument("map image outside the target digraph");
    for (auto [u, v] : input.arcs())
        if (! target.has_arc(map[u], map[v]))
            return false;
    return true;
}

auto homomorphism_cost(const CostMatrix & costs, std::span<const Vertex> map) -> Cost
{
    Cost total = 0;
    for (Vertex u = 0; u < map.size(); ++u)
        if (__builtin_add_overflow(total, costs.at(u, map[u]), &total))
            throw Overflow("homomorphism cost overflows int64");
    return total;
}

} // namespace minhom
