#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "dgsp/matrix.hpp"

namespace dgsp {

struct Edge {
    std::size_t src;
    std::size_t dst;
    double weight;
};

/// Weighted directed graph stored as a dense adjacency matrix.
/// Entry (i, j) is the weight of edge i -> j; the diagonal is always zero.
class Digraph {
public:
    /// Empty graph on n vertices.
    explicit Digraph(std::size_t n);

    /// Validates: non-negative finite weights, zero diagonal.
    explicit Digraph(RMatrix adjacency);

    std::size_t size() const noexcept { return adjacency_.rows(); }
    const RMatrix& adjacency() const noexcept { return adjacency_; }
    double weight(std::size_t src, std::size_t dst) const { return adjacency_(src, dst); }

    RVector out_degrees() const;
    std::size_t edge_count() const;

    bool operator==(const Digraph&) const = default;

private:
    RMatrix adjacency_;
};

/// L = D_out - A. Every row sums to zero.
class Laplacian {
public:
    explicit Laplacian(const Digraph& g);

    const RMatrix& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return matrix_.rows(); }

    /// Largest |row sum|; zero up to rounding.
    double max_row_sum() const;

private:
    RMatrix matrix_;
};

Digraph from_edge_list(std::size_t n, const std::vector<Edge>& edges);

Digraph directed_cycle(std::size_t n);

/// Directed cycle plus edges i -> j (i != j, not a cycle edge) each added
/// independently with probability p and weight w. Pure function of its arguments.
Digraph perturbed_cycle(std::size_t n, double p, double w, std::uint64_t seed);

Laplacian laplacian(const Digraph& g);

// Edge-list text format (0-based vertices):
//   # comment
//   n <count>
//   <src> <dst> <weight>
Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Digraph& g);

}  // namespace dgsp
