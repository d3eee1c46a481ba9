#include "qface/oracle.hpp"

#include "qface/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace qface;
using qtest::qv;
using qtest::sub;

TEST_CASE("improper faces have the stated certificates") {
    Quiver path = qv({{"0", "1"}, {"1", "2"}});
    auto empty = is_face_oracle(EdgeSubset::empty(path));
    REQUIRE(empty.face);
    CHECK(empty.certificate->normal == RationalVector{0, 0, 0});
    CHECK(empty.certificate->offset == Rational(1));

    auto full = is_face_oracle(EdgeSubset::full(path));
    REQUIRE(full.face);
    CHECK(full.certificate->normal == RationalVector{0, 0, 0});
    CHECK(full.certificate->offset == Rational(0));
}

TEST_CASE("diamond diagonal is not a face") {
    Quiver d = qtest::diamond();
    CHECK_FALSE(is_face_oracle(sub(d, {{"0", "1"}, {"1", "3"}})).face);
    CHECK(is_face_oracle(sub(d, {{"0", "1"}, {"2", "3"}})).face);
}

TEST_CASE("brute force lattice of small instances") {
    auto hexagon = brute_force_lattice(families::double_cycle(3));
    FVector fh = f_vector(hexagon);
    CHECK(fh.dim == 2);
    CHECK(fh.counts == std::vector<Int>{6, 6});

    auto segment = brute_force_lattice(qv({{"0", "1"}, {"1", "2"}}));
    CHECK(segment.size() == 4); // empty, two vertices, full

    FVector f4 = f_vector(brute_force_lattice(families::double_cycle(4)));
    CHECK(f4.dim == 3);
    CHECK(f4.counts == std::vector<Int>{8, 12, 6});
}

TEST_CASE("oracle guard") {
    Quiver big = qtest::random_quiver(6, 15, 99);
    CHECK_THROWS_AS((void)brute_force_lattice(big), Error);
    try {
        (void)brute_force_lattice(big);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("verify on the named instances") {
    CHECK(verify(families::double_cycle(4)).match);
    CHECK(verify(families::polygon("++-+--")).match);
    CHECK(verify(qtest::random_quiver(5, 7, 20210829)).match);
    auto rep = verify(qtest::balanced_4gon());
    CHECK(rep.match);
    CHECK(rep.face_count == 10);
    CHECK(rep.dim == 2);
    CHECK(rep.detail == "MATCH: 10 faces, dim 2");
}

TEST_CASE("verify flags an injected fault") {
    Quiver q = qtest::balanced_4gon();
    FaceLattice lattice = face_lattice(q);
    EdgeMask victim;
    for (const auto& m : lattice.sorted_masks())
        if (lattice.dim_of.at(m) == 0) {
            victim = m;
            break;
        }
    lattice.dim_of.erase(victim);
    auto rep = verify_against(q, lattice);
    CHECK_FALSE(rep.match);
    CHECK(rep.detail.find("missing face") != std::string::npos);

    lattice.dim_of.emplace(victim, 1); // wrong grade
    rep = verify_against(q, lattice);
    CHECK_FALSE(rep.match);
}

TEST_CASE("certificates stay valid under positive rescaling") {
    Quiver q = families::double_cycle(3);
    for (uint64_t bits = 0; bits < (uint64_t{1} << q.edge_count()); ++bits) {
        EdgeMask s(q.edge_count());
        for (int i = 0; i < q.edge_count(); ++i)
            if ((bits >> i) & 1u) s.set(i);
        auto probe = is_face_oracle(q, s);
        if (!probe.face) continue;
        const auto& cert = *probe.certificate;
        CHECK(validate_certificate(q, s, cert));
        for (Rational k : {Rational(2), Rational(7, 3), Rational(1, 5)}) {
            SupportCertificate scaled;
            for (const Rational& c : cert.normal) scaled.normal.push_back(c * k);
            scaled.offset = cert.offset * k;
            CHECK(validate_certificate(q, s, scaled, k)); // slack renormalized by the same factor
        }
    }
}

TEST_CASE("faces of the brute-force lattice are closed under intersection") {
    for (const Quiver& q : {families::double_cycle(3), qtest::diamond(),
                            families::polygon("+-+-"), qtest::random_quiver(4, 6, 77)}) {
        auto lattice = brute_force_lattice(q);
        auto masks = lattice.sorted_masks();
        for (size_t i = 0; i < masks.size(); ++i) {
            for (size_t j = i + 1; j < masks.size(); ++j) {
                EdgeMask meet(q.edge_count());
                for (int b = 0; b < q.edge_count(); ++b)
                    if (masks[i].test(b) && masks[j].test(b)) meet.set(b);
                CHECK(lattice.contains(meet));
            }
        }
    }
}

TEST_CASE("monotone consistency: faces of a face are exactly the nested faces") {
    for (const Quiver& q : {families::double_cycle(3), qtest::diamond(), qtest::balanced_4gon()}) {
        auto lattice = brute_force_lattice(q);
        for (const auto& m : lattice.sorted_masks()) {
            if (m.count() == 0) continue;
            // the face as a standalone quiver; subset positions map through
            // the kept-edge list, which stays in canonical order
            std::vector<int> kept = m.indices();
            std::vector<std::pair<int, int>> edges;
            for (int e : kept) edges.emplace_back(q.edge(e).tail, q.edge(e).head);
            Quiver qm(q.vertices(), edges);
            const int k = static_cast<int>(kept.size());
            for (uint64_t bits = 0; bits < (uint64_t{1} << k); ++bits) {
                EdgeMask inner_local(k);
                EdgeMask inner_global(q.edge_count());
                for (int pos = 0; pos < k; ++pos)
                    if ((bits >> pos) & 1u) {
                        inner_local.set(pos);
                        inner_global.set(kept[static_cast<size_t>(pos)]);
                    }
                CHECK(is_face_oracle(qm, inner_local).face == lattice.contains(inner_global));
            }
        }
    }
}
