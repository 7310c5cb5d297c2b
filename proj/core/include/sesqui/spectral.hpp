#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

/// Largest order accepted by `eigenvalues`.
inline constexpr std::size_t kMaxEigenOrder = 2000;

/// Asymmetry above this is rejected on construction.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Width of the band around a threshold inside which a comparison is
/// reported as numerically marginal.
inline constexpr double kMarginBand = 1e-7;

/// Dense real symmetric matrix, row-major. Entries within
/// kSymmetryTolerance of symmetric are accepted and stored averaged, so
/// (i,j) and (j,i) are bitwise equal.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    /// Zero matrix.
    explicit SymmetricMatrix(std::size_t order);
    /// Throws InputError for a non-square size, non-finite entries, or
    /// asymmetry above kSymmetryTolerance.
    SymmetricMatrix(std::size_t order, std::vector<double> entries);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
    /// Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value) noexcept;
    double trace() const noexcept;
    std::span<const double> entries() const noexcept { return entries_; }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

/// Eigenvalues in ascending order; `tolerance` is the absolute error bound
/// claimed for every value.
struct SymmetricSpectrum {
    std::vector<double> values;
    double tolerance = 0.0;

    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

/// Throws InputError for order 0 or order above kMaxEigenOrder.
SymmetricSpectrum eigenvalues(const SymmetricMatrix& m);

SymmetricMatrix adjacency_matrix(const Graph& g);

/// Adjacency spectrum. Throws InputError for the empty graph.
SymmetricSpectrum spectrum(const Graph& g);
double lambda_min(const Graph& g);
double lambda_max(const Graph& g);

/// Block-to-block neighbour counts for a vertex partition.
struct QuotientMatrix {
    std::size_t blocks = 0;
    /// Row-major; entry (i,j) is the number of neighbours in block j of a
    /// vertex of block i, averaged over block i when not equitable.
    std::vector<double> entries;
    std::vector<std::size_t> block_sizes;
    bool equitable = false;

    double operator()(std::size_t i, std::size_t j) const noexcept { return entries[i * blocks + j]; }
};

/// Throws InputError unless the blocks are nonempty, disjoint and cover
/// every vertex.
QuotientMatrix quotient_matrix(const Graph& g, std::span<const std::vector<Vertex>> partition);

/// Eigenvalues of an equitable quotient (each is an adjacency eigenvalue of
/// the graph). Uses the similarity D^{1/2} B D^{-1/2}, which is symmetric
/// when the partition is equitable. Throws InputError if not equitable.
SymmetricSpectrum quotient_eigenvalues(const QuotientMatrix& q);

/// Outcome of a guarded "value < threshold" test.
struct GuardedComparison {
    bool below = false;
    /// |value - threshold| <= kMarginBand.
    bool marginal = false;
};

/// below = value < threshold - kMarginBand.
GuardedComparison guarded_less(double value, double threshold) noexcept;

}  // namespace sesqui
