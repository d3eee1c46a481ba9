#include "qface/families.hpp"

#include "qface/rational.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qface {
namespace families {

namespace {

std::string label(int i) { return std::to_string(i); }

std::vector<VertexId> labels(int n) {
    std::vector<VertexId> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(label(i));
    return out;
}

} // namespace

Quiver path(int n) {
    if (n < 0) throw Error(Errc::BadParams, "path length must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return Quiver(labels(n + 1), std::move(edges));
}

Quiver polygon(const std::string& word) {
    const int m = static_cast<int>(word.size());
    if (m < 3) throw Error(Errc::BadParams, "orientation word needs length at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) {
        char c = word[static_cast<size_t>(i - 1)];
        int u = (i - 1) % m;
        int w = i % m;
        if (c == '+')
            edges.emplace_back(u, w);
        else if (c == '-')
            edges.emplace_back(w, u);
        else
            throw Error(Errc::BadParams, "orientation word may contain only '+' and '-'");
    }
    return Quiver(labels(m), std::move(edges));
}

Graph cycle_graph(int m) {
    if (m < 3) throw Error(Errc::BadParams, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph(labels(m), std::move(edges));
}

Graph path_graph(int n) {
    if (n < 0) throw Error(Errc::BadParams, "path length must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(labels(n + 1), std::move(edges));
}

Graph complete_graph(int m) {
    if (m < 1) throw Error(Errc::BadParams, "complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    return Graph(labels(m), std::move(edges));
}

Quiver double_cycle(int m) {
    return double_quiver(cycle_graph(m));
}

Quiver double_complete(int m) {
    return double_quiver(complete_graph(m));
}

Quiver random_quiver(int vertices, int edges, uint64_t seed) {
    if (vertices < 1) throw Error(Errc::BadParams, "need at least one vertex");
    long long cap = static_cast<long long>(vertices) * (vertices - 1);
    if (edges < 0 || edges > cap)
        throw Error(Errc::BadParams, "edge count exceeds the loop-free maximum");
    std::mt19937_64 gen(seed);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < edges) {
        int t = static_cast<int>(gen() % static_cast<uint64_t>(vertices));
        int h = static_cast<int>(gen() % static_cast<uint64_t>(vertices));
        if (t == h) continue;
        chosen.emplace(t, h);
    }
    return Quiver(labels(vertices),
                  std::vector<std::pair<int, int>>(chosen.begin(), chosen.end()));
}

Quiver generate(const Family& f) {
    switch (f.kind) {
    case Family::Kind::Path: return path(f.n);
    case Family::Kind::Polygon: return polygon(f.word);
    case Family::Kind::DoubleCycle: return double_cycle(f.n);
    case Family::Kind::DoubleComplete: return double_complete(f.n);
    case Family::Kind::Random: return random_quiver(f.n, f.edges, f.seed);
    }
    throw Error(Errc::BadParams, "unknown family");
}

namespace {

// Faces of the cycle double pick at most one orientation per position with
// bounded counts on each side; `strict` excludes labelings that exhaust one
// side, which is the even-cycle situation below the facet dimension.
Int cycle_double_face_count(int m, int n, int d, bool strict) {
    Int total = 0;
    for (int i = 0; i <= d + 1; ++i) {
        int j = d + 1 - i;
        bool ok = strict ? (i < n && j < n) : (i <= n && j <= n);
        if (!ok) continue;
        total += binomial(m, i) * binomial(m - i, j);
    }
    return total;
}

} // namespace

std::optional<FVector> closed_form_fvector(const Family& f) {
    switch (f.kind) {
    case Family::Kind::Path: {
        // simplex on n vertices
        int n = f.n;
        FVector out;
        out.dim = n - 1;
        for (int d = 0; d <= n - 2; ++d) out.counts.push_back(binomial(n, d + 1));
        return out;
    }
    case Family::Kind::Polygon: {
        const int m = static_cast<int>(f.word.size());
        long long plus = std::count(f.word.begin(), f.word.end(), '+');
        long long minus = m - plus;
        if (m % 2 != 0 || plus != minus) return std::nullopt; // covered only when balanced
        const int n = m / 2;
        FVector out;
        out.dim = 2 * n - 2;
        for (int d = 0; d <= 2 * n - 3; ++d)
            out.counts.push_back(binomial(2 * n, d + 1) - 2 * binomial(n, d + 1 - n));
        return out;
    }
    case Family::Kind::DoubleCycle: {
        const int m = f.n;
        FVector out;
        if (m % 2 == 0) {
            const int n = m / 2;
            out.dim = 2 * n - 1;
            for (int d = 0; d <= 2 * n - 3; ++d)
                out.counts.push_back(cycle_double_face_count(m, n, d, /*strict=*/true));
            out.counts.push_back(binomial(2 * n, n)); // facets
        } else {
            const int n = (m - 1) / 2;
            out.dim = 2 * n;
            for (int d = 0; d <= 2 * n - 1; ++d)
                out.counts.push_back(cycle_double_face_count(m, n, d, /*strict=*/false));
        }
        return out;
    }
    case Family::Kind::DoubleComplete:
    case Family::Kind::Random: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace families
} // namespace qface
