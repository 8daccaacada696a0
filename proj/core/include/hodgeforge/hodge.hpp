#pragma once

#include "hodgeforge/chain.hpp"

#include <Eigen/Sparse>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hodgeforge {

/// L_k = B_k^T B_k + B_{k+1} B_{k+1}^T with B the boundary matrices, i.e.
/// d d* + d* d in the standard cochain inner product.
struct HodgeLaplacian {
    int degree = 0;
    Eigen::SparseMatrix<double> matrix;
};

struct SpectrumResult {
    int degree = 0;
    std::vector<double> eigenvalues;  // ascending, multiplicities repeated
    double zero_threshold = 0.0;
    std::size_t zero_multiplicity = 0;
    /// False when only the lowest eigenvalues were computed iteratively.
    bool complete = true;
};

using BettiVector = std::vector<std::int64_t>;

struct LanczosOptions {
    std::size_t max_iterations = 2000;
    double tolerance = 1e-10;  // on the Ritz residual, relative to the operator norm estimate
    std::uint64_t seed = 0x5eed;
};

struct SpectralOptions {
    std::optional<double> zero_threshold;  // default: scale-aware, see default_zero_threshold
    std::size_t dense_cutoff = 2000;
    std::size_t count = 10;  // eigenvalues requested above the dense cutoff
    LanczosOptions lanczos;
};

HodgeLaplacian laplacian(const ChainSystem& cs, int k);

/// 1e-9 times the largest eigenvalue, or 1e-9 when every eigenvalue is
/// below 1e-6.
double default_zero_threshold(std::span<const double> eigenvalues);

SpectrumResult spectrum(const ChainSystem& cs, int k, const SpectralOptions& options = {});
/// All degrees 0..dim, computed in parallel.
std::vector<SpectrumResult> all_spectra(const ChainSystem& cs, const SpectralOptions& options = {});

BettiVector betti_exact(const ChainSystem& cs);
/// Zero multiplicities, cross-checked against betti_exact; throws
/// threshold_failure naming the eigenvalue at the harmonic/non-harmonic gap.
BettiVector betti_spectral(const ChainSystem& cs, const std::vector<SpectrumResult>& spectra);

std::optional<double> ground_state(const SpectrumResult& spectrum);
/// Sum over degrees of (-1)^k sum exp(-lambda t). Needs complete spectra.
double heat_supertrace(const std::vector<SpectrumResult>& spectra, double t);
/// Sum of log(lambda) over eigenvalues at or above the zero threshold.
double log_det_nonzero(const SpectrumResult& spectrum);

/// y = L_k x computed from the simplices directly; neither L_k nor the
/// boundary matrices are formed.
std::vector<double> implicit_matvec(const SimplicialComplex& k, int degree, std::span<const double> x);

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

/// Lowest `count` eigenvalues of a symmetric operator by Lanczos with full
/// reorthogonalization and explicit deflation of converged vectors, so
/// repeated eigenvalues are found with their multiplicity.
std::vector<double> lanczos_lowest(const LinearOperator& op, std::size_t n, std::size_t count,
                                   const LanczosOptions& options = {});

std::vector<double> lanczos_extremes(const ChainSystem& cs, int k, std::size_t count,
                                     const LanczosOptions& options = {});

}  // namespace hodgeforge
