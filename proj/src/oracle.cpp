#include "qface/oracle.hpp"

#include "qface/config.hpp"

#include <sstream>
#include <stdexcept>

namespace qface {

namespace {

std::string mask_edges_str(const Quiver& q, const EdgeMask& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : m.indices()) {
        if (!first) os << ", ";
        first = false;
        os << q.vertex(q.edge(i).tail) << "->" << q.vertex(q.edge(i).head);
    }
    os << "}";
    return os.str();
}

} // namespace

bool validate_certificate(const Quiver& q, const EdgeMask& s, const SupportCertificate& cert,
                          const Rational& slack) {
    for (int i = 0; i < q.edge_count(); ++i) {
        Rational v = cert.normal[static_cast<size_t>(q.edge(i).tail)] -
                     cert.normal[static_cast<size_t>(q.edge(i).head)];
        if (s.test(i)) {
            if (v != cert.offset) return false;
        } else {
            if (v > cert.offset - slack) return false;
        }
    }
    return true;
}

FaceProbe is_face_oracle(const Quiver& q, const EdgeMask& s) {
    const int n = q.vertex_count();
    // stated certificates for the two improper cases
    if (s.count() == 0) {
        SupportCertificate cert{RationalVector(static_cast<size_t>(n), Rational(0)), Rational(1)};
        return {true, cert};
    }
    if (s == EdgeMask::all(q.edge_count())) {
        SupportCertificate cert{RationalVector(static_cast<size_t>(n), Rational(0)), Rational(0)};
        return {true, cert};
    }

    // variables x = (c_0..c_{n-1}, b)
    LPProblem p;
    p.num_vars = n + 1;
    for (int i = 0; i < q.edge_count(); ++i) {
        std::vector<Rational> row(static_cast<size_t>(n) + 1, Rational(0));
        row[static_cast<size_t>(q.edge(i).tail)] = 1;
        row[static_cast<size_t>(q.edge(i).head)] = -1;
        row[static_cast<size_t>(n)] = -1; // coefficient of b
        if (s.test(i)) {
            p.eq_lhs.push_back(std::move(row));
            p.eq_rhs.push_back(0);
        } else {
            // b - <c, eps_e> >= 1
            for (auto& x : row) x = -x;
            p.ge_lhs.push_back(std::move(row));
            p.ge_rhs.push_back(1);
        }
    }
    auto x = lp_feasible_point(p);
    if (!x) return {false, std::nullopt};
    SupportCertificate cert;
    cert.normal.assign(x->begin(), x->begin() + n);
    cert.offset = (*x)[static_cast<size_t>(n)];
    if (!validate_certificate(q, s, cert))
        throw std::logic_error("solver returned an invalid support certificate");
    return {true, cert};
}

FaceProbe is_face_oracle(const EdgeSubset& s) {
    return is_face_oracle(*s.parent, s.mask);
}

FaceLattice brute_force_lattice(const Quiver& q) {
    const int m = q.edge_count();
    if (m > oracle_edge_guard())
        throw Error(Errc::TooLarge, "brute-force oracle is guarded at " +
                                        std::to_string(oracle_edge_guard()) + " edges");
    FaceLattice out;
    // dimension from the hull, not from the combinatorial formula: this
    // module stays independent of the rank/component pipeline
    {
        std::vector<RationalVector> all;
        for (int i = 0; i < m; ++i) all.push_back(edge_vector(q, i));
        out.dim = affine_dim(all);
    }
    for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
        EdgeMask s(m);
        std::vector<RationalVector> pts;
        for (int i = 0; i < m; ++i) {
            if ((bits >> i) & 1u) {
                s.set(i);
                pts.push_back(edge_vector(q, i));
            }
        }
        if (is_face_oracle(q, s).face) out.dim_of.emplace(std::move(s), affine_dim(pts));
    }
    return out;
}

VerifyReport verify_against(const Quiver& q, const FaceLattice& combinatorial) {
    const int m = q.edge_count();
    if (m > oracle_edge_guard())
        throw Error(Errc::TooLarge, "verification is guarded at " +
                                        std::to_string(oracle_edge_guard()) + " edges");
    VerifyReport rep;

    std::vector<RationalVector> pts;
    for (int i = 0; i < m; ++i) pts.push_back(edge_vector(q, i));
    int by_formula = dim_de(q);
    int by_hull = affine_dim(pts);
    if (by_formula != by_hull) {
        rep.detail = "dimension mismatch: formula gives " + std::to_string(by_formula) +
                     ", affine hull gives " + std::to_string(by_hull);
        return rep;
    }
    rep.dim = by_formula;

    FaceLattice geometric = brute_force_lattice(q);
    for (const auto& [mask, d] : geometric.dim_of) {
        auto it = combinatorial.dim_of.find(mask);
        if (it == combinatorial.dim_of.end()) {
            rep.detail = "missing face " + mask_edges_str(q, mask);
            return rep;
        }
        if (it->second != d) {
            rep.detail = "face " + mask_edges_str(q, mask) + " graded " +
                         std::to_string(it->second) + ", oracle says " + std::to_string(d);
            return rep;
        }
    }
    for (const auto& [mask, d] : combinatorial.dim_of) {
        (void)d;
        if (!geometric.contains(mask)) {
            rep.detail = "spurious face " + mask_edges_str(q, mask);
            return rep;
        }
    }
    rep.match = true;
    rep.face_count = static_cast<int>(geometric.size());
    rep.detail = "MATCH: " + std::to_string(rep.face_count) + " faces, dim " + std::to_string(rep.dim);
    return rep;
}

VerifyReport verify(const Quiver& q) {
    return verify_against(q, face_lattice(q));
}

} // namespace qface
