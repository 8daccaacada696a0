#pragma once

#include "hodgeforge/complex.hpp"
#include "hodgeforge/sparse.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace hodgeforge {

/// Signed boundary operators of a complex over its canonical bases.
/// boundary(k) has shape f_{k-1} x f_k; boundary(0) is the empty 0 x f_0 map.
class ChainSystem {
public:
    explicit ChainSystem(std::shared_ptr<const SimplicialComplex> complex);
    explicit ChainSystem(SimplicialComplex complex)
        : ChainSystem(std::make_shared<const SimplicialComplex>(std::move(complex))) {}

    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    int dim() const { return complex_->dim(); }
    const std::vector<Simplex>& basis(int k) const { return complex_->skeleton(k); }

    /// Zero-shaped matrices outside 0..dim+1.
    const SparseIntMatrix& boundary(int k) const;
    /// d_k : C^k -> C^{k+1}, the transpose of boundary(k+1).
    SparseIntMatrix coboundary(int k) const { return boundary(k + 1).transpose(); }

private:
    std::shared_ptr<const SimplicialComplex> complex_;
    std::vector<SparseIntMatrix> boundary_;  // indices 0..dim+1
    SparseIntMatrix empty_;
};

/// Sign (+1/-1) of the i-th face in the boundary of a simplex.
inline std::int64_t face_sign(std::size_t i) { return (i % 2 == 0) ? 1 : -1; }

/// Coherent orientation of the facets of an orientable pseudomanifold.
struct FundamentalClass {
    std::vector<int> orientation;  // indexed like skeleton(dim), entries +1/-1
};

struct OrientationResult {
    std::optional<FundamentalClass> fundamental_class;
    /// Facet indices of a closed walk whose sign constraints contradict;
    /// populated only for non-orientable input.
    std::vector<std::size_t> witness_cycle;

    bool orientable() const { return fundamental_class.has_value(); }
};

/// Throws not_pseudomanifold (naming the offending ridge when there is one).
OrientationResult orient(const SimplicialComplex& k);

struct StorageEstimate {
    std::uint64_t nnz = 0;
    std::uint64_t bytes = 0;
    int index_width = 8;
    int value_width = 8;
};

/// Storage of boundary(k) in coordinate form with 64-bit indices and values.
StorageEstimate estimate_storage(const std::vector<std::size_t>& f_vector, int k);

/// Header "k rows cols nnz" followed by one "row col value" line per entry.
void write_triplets(std::ostream& os, int k, const SparseIntMatrix& m);

}  // namespace hodgeforge
