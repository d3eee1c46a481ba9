#include "qface/faces.hpp"

#include "qface/config.hpp"
#include "qface/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qface {

namespace {

std::string edge_str(const Quiver& q, int i) {
    return q.vertex(q.edge(i).tail) + "->" + q.vertex(q.edge(i).head);
}

// Face test relative to an ambient subquiver: componentwise fullness plus
// acyclic contraction.
bool split_face_test(const Quiver& q, const EdgeMask& ambient, const EdgeMask& r) {
    if (!is_componentwise_full(q, r, ambient)) return false;
    return is_directed_acyclic(contract(q, r, ambient));
}

} // namespace

FacetCheck is_facet(const Quiver& q, const EdgeMask& ambient, const EdgeMask& r) {
    FacetCheck out;
    int amb_dim = dim_de(q, ambient);
    int r_dim = dim_de(q, r);
    if (r_dim != amb_dim - 1) {
        out.reason = "dimension is " + std::to_string(r_dim) + ", facets have dimension " +
                     std::to_string(amb_dim - 1);
        return out;
    }
    int amb_comps = component_count(q, ambient);
    int r_comps = component_count(q, r);

    if (r_comps == amb_comps + 1) {
        if (!is_componentwise_full(q, r, ambient)) {
            out.reason = "a component of the subquiver is not full";
            return out;
        }
        if (!is_directed_acyclic(contract(q, r, ambient))) {
            out.reason = "the contraction has a directed cycle";
            return out;
        }
        out.facet = true;
        out.condition = 1;
        out.reason = "component split: " + std::to_string(r_comps) + " components, full, acyclic contraction";
        return out;
    }

    if (r_comps == amb_comps) {
        auto rho = find_rank_function(q, r);
        if (!rho) {
            out.reason = "component counts match but the subquiver has no rank function";
            return out;
        }
        int sign = 0;
        for (int i = 0; i < q.edge_count(); ++i) {
            if (!ambient.test(i) || r.test(i)) continue;
            long long d = rho->at(q.edge(i).tail) - rho->at(q.edge(i).head) + 1;
            if (d == 0) {
                out.reason = "excluded edge " + edge_str(q, i) + " lies on the rank hyperplane";
                return out;
            }
            int s = d > 0 ? 1 : -1;
            if (sign == 0)
                sign = s;
            else if (sign != s) {
                out.reason = "excluded edges fall on both sides of the rank hyperplane";
                return out;
            }
        }
        out.facet = true;
        out.condition = 2;
        out.reason = std::string("rank hyperplane with all excluded edges strictly ") +
                     (sign >= 0 ? "below" : "above");
        return out;
    }

    out.reason = "component count " + std::to_string(r_comps) + " (ambient has " +
                 std::to_string(amb_comps) + "; facets have equal or one more)";
    return out;
}

FacetCheck is_facet(const Quiver& q, const EdgeSubset& r) {
    return is_facet(q, EdgeMask::all(q.edge_count()), r.mask);
}

bool is_face_ranked(const Quiver& q, const EdgeSubset& r) {
    if (!find_rank_function(q))
        throw Error(Errc::NoRankFunction, "the quiver has no rank function");
    EdgeMask full = EdgeMask::all(q.edge_count());
    if (r.mask == full) throw Error(Errc::BadParams, "the subquiver must be proper");
    return split_face_test(q, full, r.mask);
}

namespace {

std::vector<EdgeMask> exhaustive_facets(const Quiver& q, const EdgeMask& ambient) {
    std::vector<int> bits = ambient.indices();
    const int k = static_cast<int>(bits.size());
    std::vector<EdgeMask> out;
    for (uint64_t x = 0; x + 1 < (uint64_t{1} << k); ++x) { // skip the full subset
        EdgeMask r(q.edge_count());
        for (int i = 0; i < k; ++i)
            if ((x >> i) & 1u) r.set(bits[static_cast<size_t>(i)]);
        if (is_facet(q, ambient, r).facet) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- pruned candidate search ------------------------------------------------

// Split-condition candidates: drop all edges between the two sides of an
// ordered bipartition of one component; both sides must stay connected and
// every dropped edge must leave the lower side.
void split_candidates(const Quiver& q, const EdgeMask& ambient, std::set<EdgeMask>& out) {
    auto decomp = components(q, ambient);
    for (const auto& comp : decomp.components) {
        const int k = static_cast<int>(comp.size());
        if (k < 2 || k > 30) continue;
        for (uint64_t choice = 1; choice + 1 < (uint64_t{1} << k); ++choice) {
            std::vector<char> in_a(static_cast<size_t>(q.vertex_count()), 0);
            for (int i = 0; i < k; ++i)
                if ((choice >> i) & 1u) in_a[static_cast<size_t>(comp[static_cast<size_t>(i)])] = 1;

            bool ok = true;
            EdgeMask r = ambient;
            for (int e = 0; e < q.edge_count() && ok; ++e) {
                if (!ambient.test(e)) continue;
                int t = q.edge(e).tail, h = q.edge(e).head;
                bool ta = in_a[static_cast<size_t>(t)], ha = in_a[static_cast<size_t>(h)];
                bool t_in_comp = decomp.component_of[static_cast<size_t>(t)] ==
                                 decomp.component_of[static_cast<size_t>(comp[0])];
                if (!t_in_comp) continue;
                if (ta && !ha)
                    r.set(e, false); // crossing edge, dropped
                else if (!ta && ha)
                    ok = false; // crossing edge in the wrong direction
            }
            if (!ok) continue;
            // both sides must induce connected subquivers
            if (component_count(q, r) != decomp.count() + 1) continue;
            out.insert(std::move(r));
        }
    }
}

// Rank-condition candidates: kernels of sign-consistent integer labelings.
// For each component, depth-first assignment of labels subject to
// rho(head) <= rho(tail) + 1 (plus case) or >= (minus case); the tight
// edges must span the component.
struct ComponentKernel {
    EdgeMask kernel;     // global edge indexing
    bool pure = false;   // no excluded edges in this component
};

void component_kernels(const Quiver& q, const EdgeMask& ambient, const std::vector<int>& comp,
                       int sign, std::vector<ComponentKernel>& plus_out,
                       std::vector<ComponentKernel>& pure_out, std::set<EdgeMask>& seen) {
    const int k = static_cast<int>(comp.size());
    std::vector<int> pos(static_cast<size_t>(q.vertex_count()), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(comp[static_cast<size_t>(i)])] = i;

    // edges inside this component
    std::vector<int> edges;
    for (int e = 0; e < q.edge_count(); ++e)
        if (ambient.test(e) && pos[static_cast<size_t>(q.edge(e).tail)] >= 0 &&
            pos[static_cast<size_t>(q.edge(e).head)] >= 0)
            edges.push_back(e);

    // breadth-first vertex order so every vertex after the first has an
    // already-labeled neighbor
    std::vector<int> order;
    {
        std::vector<char> seen_v(static_cast<size_t>(k), 0);
        std::vector<std::vector<int>> adj(static_cast<size_t>(k));
        for (int e : edges) {
            int a = pos[static_cast<size_t>(q.edge(e).tail)];
            int b = pos[static_cast<size_t>(q.edge(e).head)];
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        order.push_back(0);
        seen_v[0] = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (int w : adj[static_cast<size_t>(order[i])])
                if (!seen_v[static_cast<size_t>(w)]) {
                    seen_v[static_cast<size_t>(w)] = 1;
                    order.push_back(w);
                }
    }

    std::vector<long long> label(static_cast<size_t>(k), 0);
    std::vector<char> assigned(static_cast<size_t>(k), 0);

    auto edge_ok = [&](int e) {
        int a = pos[static_cast<size_t>(q.edge(e).tail)];
        int b = pos[static_cast<size_t>(q.edge(e).head)];
        if (!assigned[static_cast<size_t>(a)] || !assigned[static_cast<size_t>(b)]) return true;
        long long d = label[static_cast<size_t>(a)] - label[static_cast<size_t>(b)] + 1;
        return sign > 0 ? d >= 0 : d <= 0;
    };

    auto emit = [&]() {
        EdgeMask kernel(q.edge_count());
        bool excluded = false;
        for (int e : edges) {
            long long d = label[static_cast<size_t>(pos[static_cast<size_t>(q.edge(e).tail)])] -
                          label[static_cast<size_t>(pos[static_cast<size_t>(q.edge(e).head)])] + 1;
            if (d == 0)
                kernel.set(e);
            else
                excluded = true;
        }
        if (component_count(q, kernel) != q.vertex_count() - k + 1) return; // must span the component
        if (!seen.insert(kernel).second) return;
        if (excluded)
            plus_out.push_back({kernel, false});
        else
            pure_out.push_back({kernel, true});
    };

    // depth-first over labelings, base vertex pinned to 0
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            emit();
            return;
        }
        int v = order[idx];
        long long lo = idx == 0 ? 0 : -(k - 1);
        long long hi = idx == 0 ? 0 : (k - 1);
        for (long long value = lo; value <= hi; ++value) {
            label[static_cast<size_t>(v)] = value;
            assigned[static_cast<size_t>(v)] = 1;
            bool ok = true;
            for (int e : edges) {
                if (!edge_ok(e)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, idx + 1);
            assigned[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

void rank_candidates(const Quiver& q, const EdgeMask& ambient, std::set<EdgeMask>& out) {
    if (find_rank_function(q, ambient)) return; // rank condition needs the ambient quiver unranked
    auto decomp = components(q, ambient);
    const int ncomp = decomp.count();

    for (int sign : {+1, -1}) {
        std::vector<std::vector<ComponentKernel>> options(static_cast<size_t>(ncomp));
        bool possible = true;
        for (int c = 0; c < ncomp && possible; ++c) {
            std::vector<ComponentKernel> signed_k, pure_k;
            std::set<EdgeMask> seen;
            component_kernels(q, ambient, decomp.components[static_cast<size_t>(c)], sign,
                              signed_k, pure_k, seen);
            auto& opts = options[static_cast<size_t>(c)];
            opts.insert(opts.end(), pure_k.begin(), pure_k.end());
            opts.insert(opts.end(), signed_k.begin(), signed_k.end());
            if (opts.empty()) possible = false;
        }
        if (!possible) continue;

        // product over components; at least one non-pure choice
        std::vector<size_t> pick(static_cast<size_t>(ncomp), 0);
        while (true) {
            EdgeMask r(q.edge_count());
            bool any_excluded = false;
            for (int c = 0; c < ncomp; ++c) {
                const auto& ck = options[static_cast<size_t>(c)][pick[static_cast<size_t>(c)]];
                for (int e : ck.kernel.indices()) r.set(e);
                if (!ck.pure) any_excluded = true;
            }
            if (any_excluded) out.insert(std::move(r));

            int c = 0;
            while (c < ncomp) {
                if (++pick[static_cast<size_t>(c)] < options[static_cast<size_t>(c)].size()) break;
                pick[static_cast<size_t>(c)] = 0;
                ++c;
            }
            if (c == ncomp) break;
        }
    }
}

std::vector<EdgeMask> pruned_facets(const Quiver& q, const EdgeMask& ambient) {
    std::set<EdgeMask> candidates;
    split_candidates(q, ambient, candidates);
    rank_candidates(q, ambient, candidates);
    std::vector<EdgeMask> out;
    for (const EdgeMask& r : candidates)
        if (is_facet(q, ambient, r).facet) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<EdgeMask> enumerate_facets(const Quiver& q, const EdgeMask& ambient) {
    if (ambient.count() <= exhaustive_edge_threshold()) return exhaustive_facets(q, ambient);
    return pruned_facets(q, ambient);
}

std::vector<EdgeMask> enumerate_facets(const Quiver& q) {
    return enumerate_facets(q, EdgeMask::all(q.edge_count()));
}

std::vector<EdgeMask> FaceLattice::sorted_masks() const {
    std::vector<EdgeMask> out;
    out.reserve(dim_of.size());
    for (const auto& [m, d] : dim_of) {
        (void)d;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FaceLattice face_lattice(const Quiver& q) {
    const int m = q.edge_count();
    FaceLattice out;
    out.dim = dim_de(q);
    EdgeMask full = EdgeMask::all(m);

    if (find_rank_function(q) && m <= exhaustive_edge_threshold()) {
        // ranked quiver: every proper subset is tested directly
        for (uint64_t x = 0; x + 1 < (uint64_t{1} << m); ++x) {
            EdgeMask r(m);
            for (int i = 0; i < m; ++i)
                if ((x >> i) & 1u) r.set(i);
            if (split_face_test(q, full, r)) out.dim_of.emplace(std::move(r), dim_de(q, r));
        }
        out.dim_of.emplace(full, out.dim);
        return out;
    }

    // descend through facets of facets, memoizing on masks
    std::vector<EdgeMask> work{full};
    out.dim_of.emplace(full, out.dim);
    while (!work.empty()) {
        EdgeMask face = std::move(work.back());
        work.pop_back();
        for (EdgeMask& facet : enumerate_facets(q, face)) {
            if (out.dim_of.count(facet)) continue;
            out.dim_of.emplace(facet, dim_de(q, facet));
            work.push_back(std::move(facet));
        }
    }
    out.dim_of.emplace(EdgeMask(m), -1); // the empty face
    return out;
}

FVector f_vector(const FaceLattice& lattice) {
    FVector f;
    f.dim = lattice.dim;
    if (f.dim < 1) return f;
    f.counts.assign(static_cast<size_t>(f.dim), Int(0));
    for (const auto& [mask, d] : lattice.dim_of) {
        (void)mask;
        if (d >= 0 && d < f.dim) ++f.counts[static_cast<size_t>(d)];
    }
    return f;
}

FVector f_vector(const Quiver& q) {
    return f_vector(face_lattice(q));
}

bool euler_relation_holds(const FVector& f) {
    if (f.dim < 0) return true;
    Int sum = 0;
    for (size_t i = 0; i < f.counts.size(); ++i)
        sum += (i % 2 == 0) ? f.counts[i] : -f.counts[i];
    Int expect = (f.dim % 2 == 0) ? 0 : 2; // 1 - (-1)^dim
    return sum == expect;
}

SymmetricFacetCheck is_facet_symmetric(const Graph& g, const EdgeSubset& r) {
    Quiver dq = double_quiver(g);
    if (!r.parent || !(*r.parent == dq))
        throw Error(Errc::ParentNotDouble, "the subset's parent is not the double of the graph");

    SymmetricFacetCheck out;
    if (dim_de(dq, r.mask) != dim_de(dq) - 1) return out;
    if (component_count(dq, r.mask) != component_count(dq, EdgeMask::all(dq.edge_count())))
        return out;

    // propagate the forced differences over each component of g
    const int n = g.vertex_count();
    struct Arc {
        int other;
        long long delta;
    };
    std::vector<std::vector<Arc>> adj(static_cast<size_t>(n));
    for (auto [a, b] : g.edges()) {
        int fwd = *dq.edge_index(a, b);
        int bwd = *dq.edge_index(b, a);
        if (r.mask.test(fwd) && r.mask.test(bwd)) return out; // both orientations kept
        long long d = r.mask.test(fwd) ? 1 : (r.mask.test(bwd) ? -1 : 0);
        adj[static_cast<size_t>(a)].push_back({b, d});
        adj[static_cast<size_t>(b)].push_back({a, -d});
    }
    std::vector<long long> rho(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        seen[static_cast<size_t>(start)] = 1;
        std::vector<int> queue{start}, members{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const Arc& arc : adj[static_cast<size_t>(v)]) {
                long long want = rho[static_cast<size_t>(v)] - arc.delta;
                if (!seen[static_cast<size_t>(arc.other)]) {
                    seen[static_cast<size_t>(arc.other)] = 1;
                    rho[static_cast<size_t>(arc.other)] = want;
                    queue.push_back(arc.other);
                    members.push_back(arc.other);
                } else if (rho[static_cast<size_t>(arc.other)] != want) {
                    return out;
                }
            }
        }
        long long lo = rho[static_cast<size_t>(members[0])];
        for (int v : members) lo = std::min(lo, rho[static_cast<size_t>(v)]);
        for (int v : members) rho[static_cast<size_t>(v)] -= lo;
    }
    out.facet = true;
    out.potential = std::move(rho);
    return out;
}

HigashitaniResult higashitani_check(const Graph& g, const std::vector<long long>& rho) {
    if (g.vertex_count() == 0 || components(g).count() != 1)
        throw Error(Errc::BadParams, "the graph must be connected");
    if (rho.size() != static_cast<size_t>(g.vertex_count()))
        throw Error(Errc::BadParams, "labeling size does not match the vertex count");

    HigashitaniResult out;
    for (auto [a, b] : g.edges()) {
        long long d = rho[static_cast<size_t>(a)] - rho[static_cast<size_t>(b)];
        if (d < -1 || d > 1) {
            std::ostringstream os;
            os << "labels differ by " << (d < 0 ? -d : d) << " across edge {" << g.vertices()[static_cast<size_t>(a)]
               << "," << g.vertices()[static_cast<size_t>(b)] << "}";
            out.reject_reason = os.str();
            return out;
        }
    }
    Quiver dq = double_quiver(g);
    EdgeMask tight(dq.edge_count());
    for (int e = 0; e < dq.edge_count(); ++e) {
        long long d = rho[static_cast<size_t>(dq.edge(e).tail)] - rho[static_cast<size_t>(dq.edge(e).head)];
        if (d == 1) tight.set(e);
    }
    if (component_count(dq, tight) != 1) {
        out.reject_reason = "tight edges do not form a spanning connected subgraph";
        return out;
    }
    out.edge_set = std::move(tight);
    return out;
}

} // namespace qface
