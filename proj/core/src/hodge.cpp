#include "hodgeforge/hodge.hpp"

#include "hodgeforge/error.hpp"
#include "hodgeforge/exact.hpp"
#include "hodgeforge/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hodgeforge {

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseIntMatrix& m) {
    std::vector<Eigen::Triplet<double>> ts;
    ts.reserve(m.nnz());
    for (const Triplet& t : m.triplets)
        ts.emplace_back(static_cast<int>(t.row), static_cast<int>(t.col), static_cast<double>(t.value));
    Eigen::SparseMatrix<double> s(static_cast<int>(m.rows), static_cast<int>(m.cols));
    s.setFromTriplets(ts.begin(), ts.end());
    return s;
}

std::size_t count_below(const std::vector<double>& eigenvalues, double threshold) {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [&](double l) { return l < threshold; }));
}

double zero_threshold_for_scale(double scale) { return 1e-9 * (scale >= 1e-6 ? scale : 1.0); }

}  // namespace

HodgeLaplacian laplacian(const ChainSystem& cs, int k) {
    const int n = static_cast<int>(cs.complex().count(k));
    Eigen::SparseMatrix<double> l(n, n);
    if (k >= 1) {
        const auto b = to_eigen(cs.boundary(k));
        l += Eigen::SparseMatrix<double>(b.transpose() * b);
    }
    if (k < cs.dim()) {
        const auto b = to_eigen(cs.boundary(k + 1));
        l += Eigen::SparseMatrix<double>(b * b.transpose());
    }
    l.makeCompressed();
    return HodgeLaplacian{k, std::move(l)};
}

double default_zero_threshold(std::span<const double> eigenvalues) {
    double top = 0.0;
    for (double l : eigenvalues) top = std::max(top, std::abs(l));
    return zero_threshold_for_scale(top);
}

SpectrumResult spectrum(const ChainSystem& cs, int k, const SpectralOptions& options) {
    SpectrumResult r;
    r.degree = k;
    const std::size_t n = cs.complex().count(k);
    if (n == 0) {
        r.zero_threshold = options.zero_threshold.value_or(zero_threshold_for_scale(0.0));
        return r;
    }

    if (n <= options.dense_cutoff) {
        const Eigen::MatrixXd dense(laplacian(cs, k).matrix);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
        const auto& ev = solver.eigenvalues();
        r.eigenvalues.reserve(n);
        // L_k is positive semidefinite; negative values are rounding noise.
        for (Eigen::Index i = 0; i < ev.size(); ++i) r.eigenvalues.push_back(std::max(0.0, ev[i]));
        r.zero_threshold = options.zero_threshold.value_or(default_zero_threshold(r.eigenvalues));
    } else {
        r.complete = false;
        r.eigenvalues = lanczos_extremes(cs, k, std::min(options.count, n), options.lanczos);
        for (double& l : r.eigenvalues) l = std::max(0.0, l);
        // Gershgorin bound stands in for the unknown top eigenvalue.
        const auto l = laplacian(cs, k).matrix;
        std::vector<double> row_sum(n, 0.0);
        for (int c = 0; c < l.outerSize(); ++c)
            for (Eigen::SparseMatrix<double>::InnerIterator it(l, c); it; ++it)
                row_sum[static_cast<std::size_t>(it.row())] += std::abs(it.value());
        r.zero_threshold = options.zero_threshold.value_or(
            zero_threshold_for_scale(*std::max_element(row_sum.begin(), row_sum.end())));
    }
    r.zero_multiplicity = count_below(r.eigenvalues, r.zero_threshold);
    return r;
}

std::vector<SpectrumResult> all_spectra(const ChainSystem& cs, const SpectralOptions& options) {
    std::vector<SpectrumResult> out(static_cast<std::size_t>(cs.dim() + 1));
    parallel_for(out.size(), [&](std::size_t k) { out[k] = spectrum(cs, static_cast<int>(k), options); });
    return out;
}

BettiVector betti_exact(const ChainSystem& cs) {
    const int d = cs.dim();
    std::vector<std::size_t> rank(static_cast<std::size_t>(d + 2), 0);
    parallel_for(rank.size(), [&](std::size_t k) { rank[k] = exact_rank(cs.boundary(static_cast<int>(k))); });
    BettiVector b;
    for (int k = 0; k <= d; ++k)
        b.push_back(static_cast<std::int64_t>(cs.complex().count(k)) - static_cast<std::int64_t>(rank[k]) -
                    static_cast<std::int64_t>(rank[k + 1]));
    return b;
}

BettiVector betti_spectral(const ChainSystem& cs, const std::vector<SpectrumResult>& spectra) {
    if (static_cast<int>(spectra.size()) != cs.dim() + 1)
        throw Error(ErrorKind::dimension_mismatch, "betti_spectral needs one spectrum per degree");
    const BettiVector exact = betti_exact(cs);
    BettiVector b;
    for (const SpectrumResult& s : spectra) {
        const auto k = static_cast<std::size_t>(s.degree);
        const auto zeros = static_cast<std::int64_t>(s.zero_multiplicity);
        if (!s.complete && s.zero_multiplicity == s.eigenvalues.size() && exact[k] > zeros) {
            throw Error(ErrorKind::incomplete_spectrum,
                        "degree " + std::to_string(k) + ": all " + std::to_string(zeros) +
                            " computed eigenvalues are harmonic; request more eigenvalues");
        }
        if (zeros != exact[k]) {
            const auto gap_index = static_cast<std::size_t>(zeros > exact[k] ? exact[k] : exact[k] - 1);
            std::ostringstream msg;
            msg.precision(17);
            msg << "degree " << k << ": " << zeros << " eigenvalues below threshold " << s.zero_threshold
                << " but exact Betti number is " << exact[k] << "; gap eigenvalue "
                << s.eigenvalues.at(gap_index);
            throw Error(ErrorKind::threshold_failure, msg.str());
        }
        b.push_back(zeros);
    }
    return b;
}

std::optional<double> ground_state(const SpectrumResult& spectrum) {
    for (double l : spectrum.eigenvalues)
        if (l >= spectrum.zero_threshold) return l;
    return std::nullopt;
}

double heat_supertrace(const std::vector<SpectrumResult>& spectra, double t) {
    if (!(t > 0.0)) throw Error(ErrorKind::malformed_input, "heat time must be positive");
    double total = 0.0;
    for (const SpectrumResult& s : spectra) {
        if (!s.complete)
            throw Error(ErrorKind::incomplete_spectrum,
                        "heat supertrace needs the full spectrum in degree " + std::to_string(s.degree));
        double trace = 0.0;
        for (double l : s.eigenvalues) trace += std::exp(-l * t);
        total += (s.degree % 2 == 0 ? trace : -trace);
    }
    return total;
}

double log_det_nonzero(const SpectrumResult& spectrum) {
    double sum = 0.0;
    std::size_t used = 0;
    for (double l : spectrum.eigenvalues) {
        if (l >= spectrum.zero_threshold) {
            sum += std::log(l);
            ++used;
        }
    }
    if (used == 0)
        throw Error(ErrorKind::undefined_determinant,
                    "degree " + std::to_string(spectrum.degree) + " has no nonzero eigenvalue");
    return sum;
}

std::vector<double> implicit_matvec(const SimplicialComplex& k, int degree, std::span<const double> x) {
    const std::size_t n = k.count(degree);
    if (x.size() != n)
        throw Error(ErrorKind::dimension_mismatch, "implicit_matvec: vector has length " +
                                                       std::to_string(x.size()) + ", expected " +
                                                       std::to_string(n));
    std::vector<double> y(n, 0.0);
    const auto& cells = k.skeleton(degree);

    if (degree >= 1) {
        std::vector<double> down(k.count(degree - 1), 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < cells[j].size(); ++i)
                down[*k.index_of(cells[j].face(i))] += static_cast<double>(face_sign(i)) * x[j];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < cells[j].size(); ++i)
                y[j] += static_cast<double>(face_sign(i)) * down[*k.index_of(cells[j].face(i))];
    }
    if (degree < k.dim()) {
        for (const Simplex& tau : k.skeleton(degree + 1)) {
            std::vector<std::size_t> faces(tau.size());
            double s = 0.0;
            for (std::size_t i = 0; i < tau.size(); ++i) {
                faces[i] = *k.index_of(tau.face(i));
                s += static_cast<double>(face_sign(i)) * x[faces[i]];
            }
            for (std::size_t i = 0; i < tau.size(); ++i) y[faces[i]] += static_cast<double>(face_sign(i)) * s;
        }
    }
    return y;
}

std::vector<double> lanczos_lowest(const LinearOperator& op, std::size_t n, std::size_t count,
                                   const LanczosOptions& options) {
    using Vec = Eigen::VectorXd;
    count = std::min(count, n);
    std::vector<Vec> locked;
    std::vector<double> values;
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    double norm_estimate = 0.0;
    std::size_t total_iterations = 0;

    auto deflate = [&](Vec& w) {
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& y : locked) w -= y.dot(w) * y;
    };
    auto apply = [&](const Vec& v) {
        Vec w(static_cast<Eigen::Index>(n));
        op(std::span<const double>(v.data(), n), std::span<double>(w.data(), n));
        deflate(w);
        return w;
    };

    while (values.size() < count) {
        Vec v(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = normal(rng);
        deflate(v);
        v.normalize();

        std::vector<Vec> basis{v};
        std::vector<double> alpha, beta;
        const std::size_t room = n - locked.size();
        bool done = false;
        double residual = 0.0;

        for (std::size_t j = 0; !done; ++j) {
            Vec w = apply(basis[j]);
            alpha.push_back(basis[j].dot(w));
            // Full reorthogonalization against the Krylov basis.
            for (int pass = 0; pass < 2; ++pass)
                for (const Vec& b : basis) w -= b.dot(w) * b;
            deflate(w);
            const double b_next = w.norm();
            ++total_iterations;

            const std::size_t m = alpha.size();
            const bool exhausted = m >= room;
            const bool breakdown = b_next <= 1e-13 * std::max(norm_estimate, 1.0);
            const bool check = exhausted || breakdown || m < 20 || m % std::max<std::size_t>(1, m / 20) == 0;
            if (check) {
                Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
                for (std::size_t i = 0; i < m; ++i) {
                    t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = alpha[i];
                    if (i + 1 < m) {
                        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = beta[i];
                        t(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = beta[i];
                    }
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
                const auto& theta = es.eigenvalues();
                norm_estimate = std::max({norm_estimate, std::abs(theta[0]), std::abs(theta[theta.size() - 1])});
                const Vec s = es.eigenvectors().col(0);
                residual = std::abs(b_next * s[s.size() - 1]);
                if (exhausted || breakdown || residual <= options.tolerance * std::max(norm_estimate, 1.0)) {
                    Vec y = Vec::Zero(static_cast<Eigen::Index>(n));
                    for (std::size_t i = 0; i < m; ++i) y += s[static_cast<Eigen::Index>(i)] * basis[i];
                    deflate(y);
                    y.normalize();
                    locked.push_back(std::move(y));
                    values.push_back(theta[0]);
                    done = true;
                    break;
                }
            }
            if (total_iterations >= options.max_iterations) {
                std::ostringstream msg;
                msg.precision(6);
                msg << "Lanczos did not converge after " << total_iterations << " iterations (residual "
                    << residual << ", " << values.size() << " of " << count << " eigenvalues locked)";
                throw Error(ErrorKind::convergence, msg.str());
            }
            beta.push_back(b_next);
            basis.push_back(w / b_next);
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> lanczos_extremes(const ChainSystem& cs, int k, std::size_t count,
                                     const LanczosOptions& options) {
    const std::size_t n = cs.complex().count(k);
    if (n == 0) throw Error(ErrorKind::dimension_mismatch, "degree " + std::to_string(k) + " has no simplices");
    const SimplicialComplex& complex = cs.complex();
    auto op = [&](std::span<const double> x, std::span<double> y) {
        const auto r = implicit_matvec(complex, k, x);
        std::copy(r.begin(), r.end(), y.begin());
    };
    return lanczos_lowest(op, n, count, options);
}

}  // namespace hodgeforge
