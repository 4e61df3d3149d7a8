#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace swarmsync {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected, unweighted interaction graph on nodes 0..n-1.
///
/// Edges are stored normalized (first < second) and sorted. Construction
/// rejects self-loops and out-of-range endpoints. An edge repeated in either
/// orientation is rejected too.
class InteractionGraph {
public:
    InteractionGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t k) const { return adjacency_.at(k); }
    std::size_t degree(std::size_t k) const { return adjacency_.at(k).size(); }

    friend bool operator==(const InteractionGraph& a, const InteractionGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Graph Laplacian: degree on the diagonal, -1 per neighbor.
class LaplacianMatrix {
public:
    explicit LaplacianMatrix(const InteractionGraph& g);

    /// Accepts an explicit matrix; must be square, symmetric, with zero row sums.
    static LaplacianMatrix from_matrix(Eigen::MatrixXd m);

    std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    double operator()(std::size_t j, std::size_t k) const { return m_(j, k); }

private:
    LaplacianMatrix() = default;
    Eigen::MatrixXd m_;
};

struct LaplacianSpectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // column j pairs with eigenvalues(j)
};

/// Eigenvalues below this are treated as zero.
inline constexpr double kZeroEigenvalue = 1e-10;

InteractionGraph complete_graph(std::size_t n);
InteractionGraph ring_graph(std::size_t n);
LaplacianMatrix laplacian(const InteractionGraph& g);
bool is_connected(const InteractionGraph& g);
LaplacianSpectrum laplacian_spectrum(const LaplacianMatrix& L);

/// Second-smallest Laplacian eigenvalue.
double algebraic_connectivity(const LaplacianMatrix& L);

}  // namespace swarmsync
