// Laplacian pseudo-inverse, Euclidean embedding, topological centrality
// and Kirchhoff index.
//
// L+ is computed two ways. The default route is the rank correction
//
//     L+ = (L + J/n)^-1 - J/n,
//
// which needs one dense Cholesky factorization. The verification route is
// the symmetric eigen-decomposition L = U diag(lambda) U', from which
// L+ = U diag(1/lambda) U' with the null eigenvalue dropped. Both are kept
// in the bundle so callers can compare them.

#ifndef LPCENT_SPECTRAL_HPP
#define LPCENT_SPECTRAL_HPP

#include "lpcent/graph.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace lpcent {

struct SpectralBundle {
    Eigen::MatrixXd laplacian;
    /// Descending: lambda_1 >= ... >= lambda_{n-1} > lambda_n = 0.
    Eigen::VectorXd eigenvalues;
    /// Column k is the unit eigenvector of eigenvalues(k).
    Eigen::MatrixXd eigenvectors;
    /// Rank-correction route; the authoritative L+.
    Eigen::MatrixXd lplus;
    /// Eigen-decomposition route.
    Eigen::MatrixXd lplus_eigen;
    /// X = Lambda+^{1/2} U'; column i is the position vector x_i.
    Eigen::MatrixXd embedding;

    std::size_t size() const noexcept { return static_cast<std::size_t>(lplus.rows()); }
};

/// L+ by the rank correction (L + J/n)^-1 - J/n. L must come from a
/// connected graph.
inline Eigen::MatrixXd lplus_rank_correction(const Eigen::MatrixXd& laplacian)
{
    const auto n = laplacian.rows();
    const double c = 1.0 / static_cast<double>(n);
    Eigen::MatrixXd shifted = laplacian.array() + c;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success) throw Error("lplus_rank_correction: L + J/n is not positive definite");
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
    inv.array() -= c;
    return 0.5 * (inv + inv.transpose());
}

inline SpectralBundle build_spectral(const Graph& g)
{
    require_connected(g, "build_spectral");
    if (g.size() < 2) throw Error("build_spectral: need at least two nodes");
    const auto n = static_cast<Eigen::Index>(g.size());

    SpectralBundle b;
    b.laplacian = g.laplacian();
    b.lplus = lplus_rank_correction(b.laplacian);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.laplacian);
    if (es.info() != Eigen::Success) throw Error("build_spectral: eigen-decomposition failed");
    // Eigen returns ascending order; store descending so index n-1 is the null pair.
    b.eigenvalues = es.eigenvalues().reverse();
    b.eigenvectors = es.eigenvectors().rowwise().reverse();
    b.eigenvalues(n - 1) = 0.0;

    Eigen::VectorXd inv_sqrt = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) inv_sqrt(k) = 1.0 / std::sqrt(b.eigenvalues(k));
    b.embedding = inv_sqrt.asDiagonal() * b.eigenvectors.transpose();
    b.lplus_eigen = b.embedding.transpose() * b.embedding;
    return b;
}

/// C*(i) = 1 / l+_ii.
inline Eigen::VectorXd topological_centrality(const SpectralBundle& b)
{
    return b.lplus.diagonal().cwiseInverse();
}

/// l+_ii = sum_{j<n} u_ji^2 / lambda_j, straight from the spectrum.
inline Eigen::VectorXd spectral_diagonal(const SpectralBundle& b)
{
    const auto n = b.eigenvalues.size();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (Eigen::Index j = 0; j + 1 < n; ++j)
        out += b.eigenvectors.col(j).cwiseAbs2() / b.eigenvalues(j);
    return out;
}

struct KirchhoffIndex {
    double value = 0.0;     ///< K = Tr(L+)
    double spectral = 0.0;  ///< sum_{i<n} 1/lambda_i
    double inverse = 0.0;   ///< K* = 1/K
};

/// Unscaled convention: K = Tr(L+), not n Tr(L+).
inline KirchhoffIndex kirchhoff_index(const SpectralBundle& b)
{
    KirchhoffIndex k;
    k.value = b.lplus.trace();
    for (Eigen::Index j = 0; j + 1 < b.eigenvalues.size(); ++j) k.spectral += 1.0 / b.eigenvalues(j);
    k.inverse = 1.0 / k.value;
    return k;
}

/// Omega_ij = l+_ii + l+_jj - 2 l+_ij.
inline double effective_resistance(const SpectralBundle& b, NodeId i, NodeId j)
{
    if (i == j) return 0.0;
    return b.lplus(i, i) + b.lplus(j, j) - 2.0 * b.lplus(i, j);
}

inline Eigen::MatrixXd resistance_matrix(const SpectralBundle& b)
{
    const auto n = b.lplus.rows();
    Eigen::VectorXd d = b.lplus.diagonal();
    Eigen::MatrixXd omega = d.replicate(1, n) + d.transpose().replicate(n, 1) - 2.0 * b.lplus;
    omega.diagonal().setZero();
    return omega;
}

// Diagnostics used by the tests and `verify`.

/// max |row sum| and max |column sum|.
inline double centering_residual(const Eigen::MatrixXd& m)
{
    return std::max(m.rowwise().sum().cwiseAbs().maxCoeff(), m.colwise().sum().cwiseAbs().maxCoeff());
}

inline double symmetry_residual(const Eigen::MatrixXd& m)
{
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// max of ||L L+ L - L|| / ||L|| and ||L+ L L+ - L+|| / ||L+|| (max-abs norms).
inline double moore_penrose_residual(const Eigen::MatrixXd& l, const Eigen::MatrixXd& lp)
{
    double r1 = (l * lp * l - l).cwiseAbs().maxCoeff() / l.cwiseAbs().maxCoeff();
    double r2 = (lp * l * lp - lp).cwiseAbs().maxCoeff() / lp.cwiseAbs().maxCoeff();
    return std::max(r1, r2);
}

/// max |X'X - L+| over entries.
inline double embedding_residual(const SpectralBundle& b)
{
    return (b.embedding.transpose() * b.embedding - b.lplus).cwiseAbs().maxCoeff();
}

/// max |lplus - lplus_eigen|.
inline double route_disagreement(const SpectralBundle& b)
{
    return (b.lplus - b.lplus_eigen).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of a symmetric matrix (PSD check).
inline double min_eigenvalue(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace lpcent

#endif  // LPCENT_SPECTRAL_HPP
