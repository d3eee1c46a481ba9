#include "qface/geometry.hpp"

#include "qface/rank.hpp"

#include <algorithm>

namespace qface {

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

Rational inner_product(const RationalVector& a, const RationalVector& b) {
    Rational out = 0;
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

RationalVector indicator(const Quiver& q, const std::vector<int>& vertex_set) {
    RationalVector v(static_cast<size_t>(q.vertex_count()), Rational(0));
    for (int i : vertex_set) v[static_cast<size_t>(i)] = 1;
    return v;
}

RationalVector edge_vector(const Quiver& q, int edge_index) {
    if (edge_index < 0 || edge_index >= q.edge_count())
        throw Error(Errc::UnknownEdge, "edge index out of range");
    RationalVector v(static_cast<size_t>(q.vertex_count()), Rational(0));
    v[static_cast<size_t>(q.edge(edge_index).tail)] = 1;
    v[static_cast<size_t>(q.edge(edge_index).head)] = -1;
    return v;
}

IncidenceMatrix incidence_matrix(const Quiver& q) {
    IncidenceMatrix m;
    m.rows = q.vertex_count();
    m.cols = q.edge_count();
    m.entries.assign(static_cast<size_t>(m.rows) * m.cols, 0);
    for (int j = 0; j < m.cols; ++j) {
        m.entries[static_cast<size_t>(q.edge(j).tail) * m.cols + j] = 1;
        m.entries[static_cast<size_t>(q.edge(j).head) * m.cols + j] = -1;
    }
    return m;
}

namespace {

int integer_rank(std::vector<std::vector<Int>> a) {
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    size_t row = 0;
    Int prev_pivot = 1;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev_pivot;
            a[i][col] = 0;
        }
        prev_pivot = a[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

} // namespace

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    std::vector<std::vector<Int>> scaled(rows.size(), std::vector<Int>(ncols));
    // clearing denominators row by row preserves rank
    for (size_t i = 0; i < rows.size(); ++i) {
        Int lcm = 1;
        for (const Rational& x : rows[i]) {
            Int d = rational_den(x);
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (size_t j = 0; j < ncols; ++j)
            scaled[i][j] = rational_num(rows[i][j]) * (lcm / rational_den(rows[i][j]));
    }
    return integer_rank(std::move(scaled));
}

int matrix_rank(const IncidenceMatrix& m) {
    std::vector<std::vector<Int>> a(static_cast<size_t>(m.rows),
                                    std::vector<Int>(static_cast<size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    return integer_rank(std::move(a));
}

int affine_dim(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    // rank of the points extended by a homogenizing coordinate, minus one
    std::vector<std::vector<Rational>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        std::vector<Rational> row = p;
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    return matrix_rank(std::move(rows)) - 1;
}

int dim_de(const Quiver& q, const EdgeMask& mask) {
    if (mask.count() == 0) return -1;
    int c = coconnectivity(q, mask);
    bool ranked = find_rank_function(q, mask).has_value();
    return ranked ? c - 1 : c;
}

int dim_de(const Quiver& q) {
    return dim_de(q, EdgeMask::all(q.edge_count()));
}

} // namespace qface
