#include "sesqui/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sesqui/error.hpp"

namespace sesqui {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

SymmetricMatrix::SymmetricMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) {
        throw InputError("SymmetricMatrix: expected " + std::to_string(order_ * order_) +
                         " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j < order_; ++j) {
            const double a = entries_[i * order_ + j];
            if (!std::isfinite(a)) {
                throw InputError("SymmetricMatrix: non-finite entry at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
            if (j > i) {
                const double b = entries_[j * order_ + i];
                if (std::abs(a - b) > kSymmetryTolerance) {
                    throw InputError("SymmetricMatrix: asymmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
                }
            }
        }
    }
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            set(i, j, 0.5 * (entries_[i * order_ + j] + entries_[j * order_ + i]));
        }
    }
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) noexcept {
    entries_[i * order_ + j] = value;
    entries_[j * order_ + i] = value;
}

double SymmetricMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

SymmetricSpectrum eigenvalues(const SymmetricMatrix& m) {
    const auto n = m.order();
    if (n == 0) {
        throw InputError("eigenvalues: matrix order must be at least 1");
    }
    if (n > kMaxEigenOrder) {
        throw InputError("eigenvalues: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxEigenOrder));
    }
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        view(m.entries().data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const Eigen::MatrixXd dense = view;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: QR iteration did not converge");
    }
    SymmetricSpectrum out;
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.values.begin(), out.values.end());
    const double frobenius = std::max(1.0, dense.norm());
    out.tolerance = 16.0 * std::numeric_limits<double>::epsilon() * frobenius *
                    std::sqrt(static_cast<double>(n));
    return out;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) {
        a.set(u, v, 1.0);
    }
    return a;
}

SymmetricSpectrum spectrum(const Graph& g) {
    if (g.order() == 0) {
        throw InputError("spectrum: graph has no vertices");
    }
    return eigenvalues(adjacency_matrix(g));
}

double lambda_min(const Graph& g) { return spectrum(g).min(); }

double lambda_max(const Graph& g) { return spectrum(g).max(); }

QuotientMatrix quotient_matrix(const Graph& g, std::span<const std::vector<Vertex>> partition) {
    const auto n = g.order();
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(n, kNone);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) {
            throw InputError("quotient_matrix: block " + std::to_string(b) + " is empty");
        }
        for (const Vertex v : partition[b]) {
            if (v >= n) {
                throw InputError("quotient_matrix: vertex " + std::to_string(v) + " out of range");
            }
            if (block_of[v] != kNone) {
                throw InputError("quotient_matrix: vertex " + std::to_string(v) +
                                 " appears in more than one block");
            }
            block_of[v] = b;
        }
    }
    if (const auto it = std::find(block_of.begin(), block_of.end(), kNone); it != block_of.end()) {
        throw InputError("quotient_matrix: vertex " + std::to_string(it - block_of.begin()) +
                         " is not covered");
    }

    const auto k = partition.size();
    QuotientMatrix q;
    q.blocks = k;
    q.entries.assign(k * k, 0.0);
    q.equitable = true;
    for (std::size_t i = 0; i < k; ++i) {
        q.block_sizes.push_back(partition[i].size());
        std::vector<std::size_t> first(k, 0);
        for (std::size_t idx = 0; idx < partition[i].size(); ++idx) {
            std::vector<std::size_t> counts(k, 0);
            for (const Vertex w : g.neighbors(partition[i][idx])) {
                ++counts[block_of[w]];
            }
            if (idx == 0) {
                first = counts;
            } else if (counts != first) {
                q.equitable = false;
            }
            for (std::size_t j = 0; j < k; ++j) {
                q.entries[i * k + j] += static_cast<double>(counts[j]);
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            q.entries[i * k + j] /= static_cast<double>(partition[i].size());
        }
    }
    return q;
}

SymmetricSpectrum quotient_eigenvalues(const QuotientMatrix& q) {
    if (!q.equitable) {
        throw InputError("quotient_eigenvalues: partition is not equitable");
    }
    SymmetricMatrix s(q.blocks);
    for (std::size_t i = 0; i < q.blocks; ++i) {
        for (std::size_t j = i; j < q.blocks; ++j) {
            // |V_i| b_ij = |V_j| b_ji, so sqrt(b_ij b_ji) is the symmetrised entry.
            s.set(i, j, std::sqrt(q(i, j) * q(j, i)));
        }
    }
    return eigenvalues(s);
}

GuardedComparison guarded_less(double value, double threshold) noexcept {
    return {value < threshold - kMarginBand, std::abs(value - threshold) <= kMarginBand};
}

}  // namespace sesqui
