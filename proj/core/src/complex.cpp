#include "hodgeforge/complex.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hodgeforge {

Simplex::Simplex(std::vector<VertexId> vs) : vertices(std::move(vs)) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0)
            throw Error(ErrorKind::malformed_input, "negative vertex id " + std::to_string(vertices[i]));
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw Error(ErrorKind::malformed_input,
                        "repeated vertex " + std::to_string(vertices[i]) + " in simplex");
    }
}

Simplex Simplex::face(std::size_t i) const {
    Simplex f;
    f.vertices.reserve(vertices.size() - 1);
    for (std::size_t j = 0; j < vertices.size(); ++j)
        if (j != i) f.vertices.push_back(vertices[j]);
    return f;
}

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s.vertices) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// SimplicialComplex --------------------------------------------------------

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices,
                                                    std::string name) {
    SimplicialComplex k;
    k.name_ = std::move(name);

    std::vector<std::unordered_set<Simplex, SimplexHash>> levels;
    for (const Simplex& s : simplices) {
        if (s.size() == 0) continue;
        const std::size_t n = s.size();
        if (levels.size() < n) levels.resize(n);
        if (levels[n - 1].count(s)) continue;
        // Enumerate every nonempty subset by bitmask.
        const std::uint64_t full = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
        for (std::uint64_t mask = full; mask != 0; --mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ULL << i)) f.vertices.push_back(s.vertices[i]);
            levels[f.size() - 1].insert(std::move(f));
        }
    }

    k.skeleton_.resize(levels.size());
    k.index_.resize(levels.size());
    for (std::size_t d = 0; d < levels.size(); ++d) {
        auto& sk = k.skeleton_[d];
        sk.assign(levels[d].begin(), levels[d].end());
        std::sort(sk.begin(), sk.end());
        k.index_[d].reserve(sk.size());
        for (std::size_t i = 0; i < sk.size(); ++i) k.index_[d].emplace(sk[i], i);
    }

    // A simplex is a facet unless it is a codimension-one face of something.
    std::vector<std::vector<bool>> covered(levels.size());
    for (std::size_t d = 0; d < levels.size(); ++d) covered[d].assign(k.skeleton_[d].size(), false);
    for (std::size_t d = 1; d < levels.size(); ++d)
        for (const Simplex& s : k.skeleton_[d])
            for (std::size_t i = 0; i < s.size(); ++i) covered[d - 1][k.index_[d - 1].at(s.face(i))] = true;
    for (std::size_t d = 0; d < levels.size(); ++d)
        for (std::size_t i = 0; i < k.skeleton_[d].size(); ++i)
            if (!covered[d][i]) k.facets_.push_back(k.skeleton_[d][i]);
    std::sort(k.facets_.begin(), k.facets_.end());
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<VertexId>>& facets,
                                                 std::string name) {
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw Error(ErrorKind::malformed_input, "empty facet");
        simplices.emplace_back(f);
    }
    return from_simplices(simplices, std::move(name));
}

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
    SimplicialComplex k = *this;
    k.name_ = std::move(name);
    return k;
}

const std::vector<Simplex>& SimplicialComplex::skeleton(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dim()) return none;
    return skeleton_[k];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& sk : skeleton_) f.push_back(sk.size());
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(skeleton_[k].size());
    return chi;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> vs;
    for (const Simplex& s : skeleton(0)) vs.push_back(s[0]);
    return vs;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const int d = s.dim();
    if (d < 0 || d > dim()) return std::nullopt;
    auto it = index_[d].find(s);
    if (it == index_[d].end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::is_pseudomanifold() const {
    const int d = dim();
    if (d < 1) return false;
    for (const Simplex& f : facets_)
        if (f.dim() != d) return false;

    const auto& top = skeleton_[d];
    std::vector<std::vector<std::size_t>> ridge_facets(skeleton_[d - 1].size());
    for (std::size_t j = 0; j < top.size(); ++j)
        for (std::size_t i = 0; i < top[j].size(); ++i)
            ridge_facets[index_[d - 1].at(top[j].face(i))].push_back(j);
    for (const auto& rf : ridge_facets)
        if (rf.size() != 2) return false;

    std::vector<bool> seen(top.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t j = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < top[j].size(); ++i)
            for (std::size_t nb : ridge_facets[index_[d - 1].at(top[j].face(i))])
                if (!seen[nb]) {
                    seen[nb] = true;
                    ++reached;
                    stack.push_back(nb);
                }
    }
    return reached == top.size();
}

// Generators ---------------------------------------------------------------

SimplicialComplex build_from_facets(const std::vector<std::vector<VertexId>>& facets, std::string name) {
    return SimplicialComplex::from_facets(facets, std::move(name));
}

SimplicialComplex point_complex() { return SimplicialComplex::from_facets({{0}}, "point"); }

SimplicialComplex simplex_sphere(int n) {
    if (n < 0) throw Error(ErrorKind::malformed_input, "simplex_sphere needs n >= 0");
    std::vector<std::vector<VertexId>> facets;
    for (VertexId skip = 0; skip <= n + 1; ++skip) {
        std::vector<VertexId> f;
        for (VertexId v = 0; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets, "S" + std::to_string(n) + "_simplex");
}

SimplicialComplex cross_polytope_sphere(int n) {
    if (n < 1) throw Error(ErrorKind::malformed_input, "cross_polytope_sphere needs n >= 1");
    const int axes = n + 1;
    std::vector<std::vector<VertexId>> facets;
    for (std::uint64_t signs = 0; signs < (1ULL << axes); ++signs) {
        std::vector<VertexId> f;
        for (int a = 0; a < axes; ++a) f.push_back(2 * a + ((signs >> a) & 1));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets, "S" + std::to_string(n) + "_cross");
}

SimplicialComplex circle(int n) {
    if (n < 3) throw Error(ErrorKind::malformed_input, "circle needs at least 3 vertices");
    std::vector<std::vector<VertexId>> facets;
    for (VertexId v = 0; v < n; ++v) facets.push_back({v, (v + 1) % n});
    return SimplicialComplex::from_facets(facets, "S1_" + std::to_string(n));
}

const std::vector<std::vector<VertexId>>& icosahedron_facets() {
    // Vertices 0..5 are (0,1,phi), (1,phi,0), (phi,0,1), (0,1,-phi),
    // (-1,phi,0), (phi,0,-1) up to the cyclic construction; 6..11 are their
    // negatives in the same order.
    static const std::vector<std::vector<VertexId>> facets = {
        {0, 1, 2},  {0, 1, 10}, {0, 2, 9},  {0, 5, 9},  {0, 5, 10}, {1, 2, 11}, {1, 3, 10},
        {1, 3, 11}, {2, 4, 9},  {2, 4, 11}, {3, 6, 8},  {3, 6, 11}, {3, 8, 10}, {4, 6, 7},
        {4, 6, 11}, {4, 7, 9},  {5, 7, 8},  {5, 7, 9},  {5, 8, 10}, {6, 7, 8},
    };
    return facets;
}

SimplicialComplex icosahedron_sphere() {
    return SimplicialComplex::from_facets(icosahedron_facets(), "icosahedron");
}

VertexMap icosahedron_antipodal_map() {
    VertexMap m;
    for (VertexId v = 0; v < 12; ++v) m[v] = (v + 6) % 12;
    return m;
}

SimplicialComplex projective_plane() {
    return quotient(icosahedron_sphere(), GroupAction{{icosahedron_antipodal_map()}}).renamed("RP2");
}

SimplicialComplex torus() { return product(circle(3), circle(3)).renamed("T2"); }

// Constructions ------------------------------------------------------------

namespace {

std::unordered_map<VertexId, std::size_t> vertex_ranks(const SimplicialComplex& k) {
    std::unordered_map<VertexId, std::size_t> rank;
    const auto vs = k.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = i;
    return rank;
}

}  // namespace

SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.empty() || l.empty()) throw Error(ErrorKind::malformed_input, "product needs nonempty factors");
    const auto rank_k = vertex_ranks(k);
    const auto rank_l = vertex_ranks(l);
    const auto width = static_cast<VertexId>(l.count(0));

    std::vector<Simplex> tops;
    for (const Simplex& s : k.facets()) {
        for (const Simplex& t : l.facets()) {
            const std::size_t p = s.size() - 1, q = t.size() - 1;
            // Each monotone lattice path is a choice of which of the p+q steps
            // advance in the first factor.
            std::vector<int> steps(p + q, 1);
            std::fill(steps.begin(), steps.begin() + p, 0);
            do {
                std::size_t i = 0, j = 0;
                std::vector<VertexId> path;
                auto push = [&] {
                    path.push_back(static_cast<VertexId>(rank_k.at(s[i])) * width +
                                   static_cast<VertexId>(rank_l.at(t[j])));
                };
                push();
                for (int st : steps) {
                    (st == 0 ? i : j)++;
                    push();
                }
                tops.emplace_back(std::move(path));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    return SimplicialComplex::from_simplices(tops, k.name() + "x" + l.name());
}

std::vector<VertexId> image_vertices(const Simplex& s, const VertexMap& map) {
    std::vector<VertexId> img;
    img.reserve(s.size());
    for (VertexId v : s.vertices) {
        auto it = map.find(v);
        img.push_back(it == map.end() ? v : it->second);
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

std::vector<VertexMap> group_elements(const SimplicialComplex& k, const GroupAction& action,
                                      std::size_t limit) {
    const auto vs = k.vertices();
    const auto rank = vertex_ranks(k);

    using Perm = std::vector<std::size_t>;
    std::vector<Perm> gens;
    for (const VertexMap& g : action.generators) {
        Perm p(vs.size());
        std::vector<bool> hit(vs.size(), false);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            auto it = g.find(vs[i]);
            const VertexId img = (it == g.end()) ? vs[i] : it->second;
            auto r = rank.find(img);
            if (r == rank.end())
                throw Error(ErrorKind::quotient_invalid,
                            "generator maps vertex " + std::to_string(vs[i]) + " outside the complex");
            if (hit[r->second])
                throw Error(ErrorKind::quotient_invalid, "generator is not a bijection on vertices");
            hit[r->second] = true;
            p[i] = r->second;
        }
        gens.push_back(std::move(p));
    }

    Perm id(vs.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elements{id};
    std::set<Perm> seen{id};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const Perm& g : gens) {
            Perm h(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) h[i] = g[elements[head][i]];
            if (seen.insert(h).second) {
                if (elements.size() >= limit)
                    throw Error(ErrorKind::quotient_invalid, "group closure exceeds element limit");
                elements.push_back(std::move(h));
            }
        }
    }

    std::vector<VertexMap> out;
    out.reserve(elements.size());
    for (const Perm& p : elements) {
        VertexMap m;
        for (std::size_t i = 0; i < vs.size(); ++i) m[vs[i]] = vs[p[i]];
        out.push_back(std::move(m));
    }
    return out;
}

SimplicialComplex quotient(const SimplicialComplex& k, const GroupAction& action) {
    const auto group = group_elements(k, action);

    for (const VertexMap& g : group)
        for (const Simplex& f : k.facets())
            if (!k.contains(Simplex(image_vertices(f, g))) || image_vertices(f, g).size() != f.size())
                throw Error(ErrorKind::quotient_invalid,
                            "group element does not map simplex " + to_string(f) + " to a simplex");

    // Orbit representative = smallest vertex in the orbit.
    std::map<VertexId, VertexId> rep;
    for (VertexId v : k.vertices()) {
        VertexId r = v;
        for (const VertexMap& g : group) r = std::min(r, g.at(v));
        rep[v] = r;
    }

    for (int d = 0; d <= k.dim(); ++d) {
        for (const Simplex& s : k.skeleton(d)) {
            for (std::size_t gi = 1; gi < group.size(); ++gi)
                if (Simplex(image_vertices(s, group[gi])) == s)
                    throw Error(ErrorKind::quotient_invalid,
                                "action is not free: simplex " + to_string(s) + " is fixed setwise");
            std::vector<VertexId> reps;
            for (VertexId v : s.vertices) reps.push_back(rep.at(v));
            std::sort(reps.begin(), reps.end());
            if (std::adjacent_find(reps.begin(), reps.end()) != reps.end())
                throw Error(ErrorKind::quotient_invalid,
                            "simplex " + to_string(s) + " contains two vertices of one orbit");
        }
    }

    std::vector<Simplex> images;
    for (const Simplex& f : k.facets()) {
        std::vector<VertexId> reps;
        for (VertexId v : f.vertices) reps.push_back(rep.at(v));
        images.emplace_back(std::move(reps));
    }
    SimplicialComplex q = SimplicialComplex::from_simplices(images, k.name() + "_quotient");

    const auto fk = k.f_vector();
    const auto fq = q.f_vector();
    for (std::size_t d = 0; d < fk.size(); ++d) {
        if (d >= fq.size() || fq[d] * group.size() != fk[d])
            throw Error(ErrorKind::quotient_invalid,
                        "distinct orbits collapse in dimension " + std::to_string(d));
    }
    return q;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<VertexId> offset(k.dim() + 2, 0);
    for (int d = 0; d <= k.dim(); ++d) offset[d + 1] = offset[d] + static_cast<VertexId>(k.count(d));
    auto id_of = [&](const Simplex& s) { return offset[s.dim()] + static_cast<VertexId>(*k.index_of(s)); };

    std::vector<Simplex> flags;
    for (const Simplex& f : k.facets()) {
        std::vector<std::size_t> order(f.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            // Peel vertices off in `order`, recording each intermediate face.
            std::vector<VertexId> chain{id_of(f)};
            std::vector<VertexId> current = f.vertices;
            for (std::size_t step = 0; step + 1 < order.size(); ++step) {
                const VertexId drop = f[order[step]];
                current.erase(std::find(current.begin(), current.end(), drop));
                Simplex s;
                s.vertices = current;
                chain.push_back(id_of(s));
            }
            flags.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_simplices(flags, "sd(" + k.name() + ")");
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.empty()) return l;
    if (l.empty()) return k;
    const auto kv = k.vertices();
    const VertexId shift = kv.back() + 1;
    const auto rank_l = vertex_ranks(l);
    std::vector<Simplex> tops;
    for (const Simplex& s : k.facets()) {
        for (const Simplex& t : l.facets()) {
            std::vector<VertexId> vs = s.vertices;
            for (VertexId v : t.vertices) vs.push_back(shift + static_cast<VertexId>(rank_l.at(v)));
            tops.emplace_back(std::move(vs));
        }
    }
    return SimplicialComplex::from_simplices(tops, k.name() + "*" + l.name());
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    return join(k, simplex_sphere(0)).renamed("susp(" + k.name() + ")");
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map) {
    std::set<VertexId> targets;
    for (VertexId v : k.vertices()) {
        auto it = map.find(v);
        if (it == map.end())
            throw Error(ErrorKind::malformed_input, "relabel map misses vertex " + std::to_string(v));
        if (!targets.insert(it->second).second)
            throw Error(ErrorKind::malformed_input, "relabel map is not injective");
    }
    std::vector<Simplex> tops;
    for (const Simplex& f : k.facets()) {
        std::vector<VertexId> vs;
        for (VertexId v : f.vertices) vs.push_back(map.at(v));
        tops.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_simplices(tops, k.name());
}

}  // namespace hodgeforge
