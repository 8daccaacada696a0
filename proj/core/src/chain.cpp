#include "hodgeforge/chain.hpp"

#include "hodgeforge/error.hpp"
#include "hodgeforge/parallel.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace hodgeforge {

ChainSystem::ChainSystem(std::shared_ptr<const SimplicialComplex> complex) : complex_(std::move(complex)) {
    const int d = complex_->dim();
    boundary_.resize(static_cast<std::size_t>(d + 2));
    // Degrees are independent; each slot is written by one worker.
    parallel_for(boundary_.size(), [&](std::size_t idx) {
        const int k = static_cast<int>(idx);
        SparseIntMatrix m{complex_->count(k - 1), complex_->count(k), {}};
        if (k >= 1 && k <= d) {
            const auto& cells = complex_->skeleton(k);
            m.triplets.reserve(cells.size() * (k + 1));
            for (std::size_t j = 0; j < cells.size(); ++j) {
                const std::size_t first = m.triplets.size();
                for (std::size_t i = 0; i < cells[j].size(); ++i)
                    m.triplets.push_back({*complex_->index_of(cells[j].face(i)), j, face_sign(i)});
                std::sort(m.triplets.begin() + static_cast<std::ptrdiff_t>(first), m.triplets.end(),
                          [](const Triplet& a, const Triplet& b) { return a.row < b.row; });
            }
        }
        boundary_[idx] = std::move(m);
    });
}

const SparseIntMatrix& ChainSystem::boundary(int k) const {
    if (k < 0 || k >= static_cast<int>(boundary_.size())) return empty_;
    return boundary_[static_cast<std::size_t>(k)];
}

OrientationResult orient(const SimplicialComplex& k) {
    const int d = k.dim();
    if (d < 1) throw Error(ErrorKind::not_pseudomanifold, "complex of dimension < 1 is not a pseudomanifold");
    for (const Simplex& f : k.facets())
        if (f.dim() != d)
            throw Error(ErrorKind::not_pseudomanifold, "facet " + to_string(f) + " is not top-dimensional");

    const auto& top = k.skeleton(d);
    const auto& ridges = k.skeleton(d - 1);
    // For each ridge: (facet, sign of the ridge in that facet's boundary).
    std::vector<std::vector<std::pair<std::size_t, int>>> incident(ridges.size());
    for (std::size_t j = 0; j < top.size(); ++j)
        for (std::size_t i = 0; i < top[j].size(); ++i)
            incident[*k.index_of(top[j].face(i))].push_back({j, static_cast<int>(face_sign(i))});
    for (std::size_t r = 0; r < ridges.size(); ++r)
        if (incident[r].size() != 2)
            throw Error(ErrorKind::not_pseudomanifold, "ridge " + to_string(ridges[r]) + " lies in " +
                                                           std::to_string(incident[r].size()) + " facets");

    std::vector<int> eps(top.size(), 0);
    std::vector<std::size_t> parent(top.size(), 0);
    std::vector<std::size_t> depth(top.size(), 0);
    std::queue<std::size_t> queue;
    eps[0] = 1;
    queue.push(0);
    std::optional<std::pair<std::size_t, std::size_t>> conflict;

    while (!queue.empty() && !conflict) {
        const std::size_t a = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < top[a].size() && !conflict; ++i) {
            const auto& inc = incident[*k.index_of(top[a].face(i))];
            const auto& self = inc[0].first == a ? inc[0] : inc[1];
            const auto& other = inc[0].first == a ? inc[1] : inc[0];
            // The ridge must cancel: eps_a * s_a + eps_b * s_b = 0.
            const int want = -eps[a] * self.second * other.second;
            const std::size_t b = other.first;
            if (eps[b] == 0) {
                eps[b] = want;
                parent[b] = a;
                depth[b] = depth[a] + 1;
                queue.push(b);
            } else if (eps[b] != want) {
                conflict = std::make_pair(a, b);
            }
        }
    }

    if (!conflict) {
        if (std::find(eps.begin(), eps.end(), 0) != eps.end())
            throw Error(ErrorKind::not_pseudomanifold, "facet adjacency graph is disconnected");
        return OrientationResult{FundamentalClass{std::move(eps)}, {}};
    }

    // Walk both endpoints up the search tree to their common ancestor.
    auto [a, b] = *conflict;
    std::vector<std::size_t> left{a}, right{b};
    while (a != b) {
        if (depth[a] >= depth[b]) {
            a = parent[a];
            left.push_back(a);
        } else {
            b = parent[b];
            right.push_back(b);
        }
    }
    right.pop_back();
    std::reverse(right.begin(), right.end());
    left.insert(left.end(), right.begin(), right.end());
    return OrientationResult{std::nullopt, std::move(left)};
}

StorageEstimate estimate_storage(const std::vector<std::size_t>& f_vector, int k) {
    if (k < 1 || k >= static_cast<int>(f_vector.size()))
        throw Error(ErrorKind::malformed_input, "estimate_storage needs 1 <= k <= dim");
    StorageEstimate e;
    e.nnz = static_cast<std::uint64_t>(k + 1) * f_vector[static_cast<std::size_t>(k)];
    e.bytes = e.nnz * static_cast<std::uint64_t>(2 * e.index_width + e.value_width);
    return e;
}

void write_triplets(std::ostream& os, int k, const SparseIntMatrix& m) {
    os << k << ' ' << m.rows << ' ' << m.cols << ' ' << m.nnz() << '\n';
    for (const Triplet& t : m.triplets) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

}  // namespace hodgeforge
