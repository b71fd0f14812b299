#pragma once

#include <minhom/digraph.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace minhom {

using Cost = std::int64_t;

/// Dense cost table c_i(u): one row per input vertex u, one column per
/// target vertex i. Unspecified entries are zero.
class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    auto rows() const noexcept -> std::size_t { return rows_; }
    auto cols() const noexcept -> std::size_t { return cols_; }

    auto at(Vertex u, Vertex i) const -> Cost { return data_.at(index(u, i)); }
    auto set(Vertex u, Vertex i, Cost c) -> void { data_.at(index(u, i)) = c; }
    auto row(Vertex u) const -> std::span<const Cost> { return std::span<const Cost>(data_).subspan(u * cols_, cols_); }

    /// Throws InvalidArgument unless the shape is |V(input)| x |V(target)|.
    auto check_shape(std::size_t input_size, std::size_t target_size) const -> void;

    friend auto operator==(const CostMatrix &, const CostMatrix &) -> bool = default;

private:
    auto index(Vertex u, Vertex i) const -> std::size_t
    {
        if (u >= rows_ || i >= cols_)
            throw std::out_of_range("cost index out of range");
        return u * cols_ + i;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cost> data_;
};

/// True when `map` sends every arc of `input` to an arc of `target` (loops
/// need loops at the image). Throws InvalidArgument for a non-total map or an
/// image outside V(target).
auto is_homomorphism(const Digraph & input, const Digraph & target, std::span<const Vertex> map) -> bool;

/// Sum of c_{map(u)}(u). Throws Overflow if the sum leaves the int64 range.
auto homomorphism_cost(const CostMatrix & costs, std::span<const Vertex> map) -> Cost;

} // namespace minhom
