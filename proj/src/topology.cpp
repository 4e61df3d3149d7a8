#include "swarmsync/topology.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace swarmsync {

InteractionGraph::InteractionGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n)
{
    for (auto& [j, k] : edges_) {
        if (j >= n_ || k >= n_)
            throw std::invalid_argument("edge [" + std::to_string(j) + "," + std::to_string(k) +
                                        "] references a node outside 0.." + std::to_string(n_ - 1));
        if (j == k) throw std::invalid_argument("self-loop on node " + std::to_string(j));
        if (j > k) std::swap(j, k);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw std::invalid_argument("duplicate edge [" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + "]");
    for (const auto& [j, k] : edges_) {
        adjacency_[j].push_back(k);
        adjacency_[k].push_back(j);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

LaplacianMatrix::LaplacianMatrix(const InteractionGraph& g)
    : m_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.node_count()),
                               static_cast<Eigen::Index>(g.node_count())))
{
    for (const auto& [j, k] : g.edges()) {
        const auto a = static_cast<Eigen::Index>(j);
        const auto b = static_cast<Eigen::Index>(k);
        m_(a, b) = -1.0;
        m_(b, a) = -1.0;
        m_(a, a) += 1.0;
        m_(b, b) += 1.0;
    }
}

LaplacianMatrix LaplacianMatrix::from_matrix(Eigen::MatrixXd m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("Laplacian must be square");
    if (!m.allFinite()) throw std::invalid_argument("Laplacian has non-finite entries");
    if (m.rows() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("Laplacian must be symmetric");
    if (m.rows() > 0 && m.rowwise().sum().cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("Laplacian rows must sum to zero");
    LaplacianMatrix L;
    L.m_ = std::move(m);
    return L;
}

InteractionGraph complete_graph(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) edges.emplace_back(j, k);
    return InteractionGraph(n, std::move(edges));
}

InteractionGraph ring_graph(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("ring graph needs n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
    return InteractionGraph(n, std::move(edges));
}

LaplacianMatrix laplacian(const InteractionGraph& g) { return LaplacianMatrix(g); }

bool is_connected(const InteractionGraph& g)
{
    const std::size_t n = g.node_count();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t visited = 1;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t w : g.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = true;
            ++visited;
            frontier.push(w);
        }
    }
    return visited == n;
}

LaplacianSpectrum laplacian_spectrum(const LaplacianMatrix& L)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L.matrix());
    if (solver.info() != Eigen::Success) throw std::runtime_error("Laplacian eigendecomposition failed");
    // Eigen returns eigenvalues in ascending order.
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double algebraic_connectivity(const LaplacianMatrix& L)
{
    if (L.size() < 2) return 0.0;
    return laplacian_spectrum(L).eigenvalues(1);
}

}  // namespace swarmsync
