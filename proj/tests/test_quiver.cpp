#include "qface/quiver.hpp"

#include "qface/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace qface;
using qtest::qv;
using qtest::sub;

TEST_CASE("components and coconnectivity") {
    Quiver path = qv({{"0", "1"}, {"1", "2"}});
    auto c = components(path);
    CHECK(c.count() == 1);
    CHECK(c.components[0] == std::vector<int>{0, 1, 2});
    CHECK(coconnectivity(path) == 2);

    Quiver split(std::vector<VertexId>{"0", "1", "2"}, {{0, 1}});
    auto cs = components(split);
    CHECK(cs.count() == 2);
    CHECK(cs.components[0] == std::vector<int>{0, 1});
    CHECK(cs.components[1] == std::vector<int>{2});

    Quiver edgeless(std::vector<VertexId>{"a", "b", "c"}, {});
    CHECK(coconnectivity(edgeless) == 0);

    Quiver dc4 = families::double_cycle(4);
    CHECK(components(dc4).count() == 1);
    CHECK(components(dc4).components[0].size() == 4);
    CHECK(coconnectivity(dc4) == 3);
}

TEST_CASE("componentwise fullness") {
    Quiver path = qv({{"0", "1"}, {"1", "2"}});
    CHECK(is_full(sub(path, {{"0", "1"}})));

    Quiver pair = qv({{"0", "1"}, {"1", "0"}});
    CHECK_FALSE(is_full(sub(pair, {{"0", "1"}})));

    Quiver d = qtest::diamond();
    CHECK(is_full(sub(d, {{"0", "1"}, {"2", "3"}})));
    CHECK_FALSE(is_full(sub(d, {{"0", "1"}, {"2", "3"}}), /*component_restricted=*/false));
    CHECK(is_full(EdgeSubset::full(d), /*component_restricted=*/false));
}

TEST_CASE("directed acyclicity") {
    CHECK_FALSE(is_directed_acyclic(qv({{"0", "1"}, {"1", "2"}, {"2", "0"}})));
    CHECK(is_directed_acyclic(qv({{"0", "1"}, {"1", "2"}})));
    CHECK_FALSE(is_directed_acyclic(qv({{"0", "1"}, {"1", "0"}})));
    CHECK_FALSE(is_directed_acyclic(families::double_cycle(3)));
}

TEST_CASE("contraction of the diamond") {
    Quiver d = qtest::diamond();
    auto c = contract(sub(d, {{"0", "1"}, {"2", "3"}}));
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[0] == std::vector<int>{0, 1});
    CHECK(c.classes[1] == std::vector<int>{2, 3});
    // both (0,2) and (1,3) collapse to the same class edge
    CHECK(c.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(is_directed_acyclic(c));
}

TEST_CASE("contracting all edges leaves no class edges") {
    Quiver d = qtest::diamond();
    auto c = contract(EdgeSubset::full(d));
    CHECK(c.classes.size() == 1);
    CHECK(c.edges.empty());
    CHECK(is_directed_acyclic(c));
}

TEST_CASE("contraction can create a two-cycle between classes") {
    Quiver q = qv({{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}});
    auto c = contract(sub(q, {{"0", "1"}, {"1", "3"}}));
    REQUIRE(c.classes.size() == 2); // {0,1,3} and {2}
    CHECK(c.edges.size() == 2);
    CHECK_FALSE(is_directed_acyclic(c));
}

TEST_CASE("a loop class-edge counts as a cycle") {
    ContractedQuiver c;
    c.classes = {{0, 1}, {2}};
    c.class_of = {0, 0, 1};
    c.edges = {{0, 0}};
    CHECK_FALSE(is_directed_acyclic(c));
    c.edges = {{0, 1}};
    CHECK(is_directed_acyclic(c));
}

TEST_CASE("contraction requires componentwise fullness") {
    Quiver pair = qv({{"0", "1"}, {"1", "0"}});
    CHECK_THROWS_AS((void)contract(sub(pair, {{"0", "1"}})), Error);
    try {
        (void)contract(sub(pair, {{"0", "1"}}));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotComponentwiseFull);
    }
}

TEST_CASE("doubles") {
    Quiver dc3 = families::double_cycle(3);
    CHECK(dc3.vertex_count() == 3);
    CHECK(dc3.edge_count() == 6);

    Graph single = Graph::from_pairs({{"a", "b"}});
    Quiver ds = double_quiver(single);
    CHECK(ds.edge_count() == 2);
    CHECK(ds.has_edge(0, 1));
    CHECK(ds.has_edge(1, 0));

    CHECK(families::double_complete(4).edge_count() == 12);
}

TEST_CASE("double is symmetric and preserves components") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 gen(seed);
        int n = 2 + static_cast<int>(gen() % 5);
        std::vector<std::pair<VertexId, VertexId>> pairs;
        std::set<std::pair<int, int>> used;
        int edges = static_cast<int>(gen() % 6);
        for (int i = 0; i < edges; ++i) {
            int a = static_cast<int>(gen() % static_cast<uint64_t>(n));
            int b = static_cast<int>(gen() % static_cast<uint64_t>(n));
            if (a == b) continue;
            if (!used.insert({std::min(a, b), std::max(a, b)}).second) continue;
            pairs.emplace_back(std::to_string(a), std::to_string(b));
        }
        std::vector<VertexId> ids;
        for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
        std::vector<std::pair<int, int>> gedges;
        for (auto& [a, b] : pairs)
            gedges.emplace_back(static_cast<int>(std::stoi(a)), static_cast<int>(std::stoi(b)));
        Graph g(ids, gedges);
        Quiver dq = double_quiver(g);
        for (const Edge& e : dq.edges()) CHECK(dq.has_edge(e.head, e.tail));
        CHECK(components(dq).components == components(g).components);
    }
}

TEST_CASE("spanning polyforest") {
    Quiver path = qv({{"0", "1"}, {"1", "2"}});
    CHECK(spanning_polyforest(path).mask == EdgeMask::all(2));

    Quiver dc3 = families::double_cycle(3);
    auto f = spanning_polyforest(dc3);
    CHECK(f.mask.count() == 2);
    CHECK(is_directed_acyclic(dc3, f.mask)); // underlying forest has no walk back

    Quiver edgeless(std::vector<VertexId>{"x", "y"}, {});
    CHECK(spanning_polyforest(edgeless).mask.count() == 0);

    for (uint64_t seed = 0; seed < 30; ++seed) {
        Quiver q = qtest::random_quiver(2 + static_cast<int>(seed % 6), static_cast<int>(seed % 9),
                                        seed + 100);
        auto pf = spanning_polyforest(q);
        CHECK(pf.mask.count() == coconnectivity(q));
        // underlying graph of the polyforest is acyclic: edge count matches
        // vertex count minus components within the polyforest itself
        CHECK(pf.mask.count() == coconnectivity(q, pf.mask));
    }
}

TEST_CASE("coconnectivity identity") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Quiver q = qtest::random_quiver(1 + static_cast<int>(seed % 7), static_cast<int>(seed % 8),
                                        seed);
        CHECK(coconnectivity(q) == q.vertex_count() - components(q).count());
        CHECK(coconnectivity(q) >= 0);
    }
}

TEST_CASE("contracted acyclicity agrees with brute-force walk search") {
    int checked = 0;
    qtest::for_each_quiver(4, 5, [&](const Quiver& q) {
        if (q.edge_count() > 5) return;
        if ((checked++ % 7) != 0) return; // thin out, still a few hundred instances
        // contract by a componentwise-full subset: the spanning polyforest is
        // full only sometimes, so use every single-component split that is
        for (uint64_t bits = 0; bits < (uint64_t{1} << q.edge_count()); ++bits) {
            EdgeMask m(q.edge_count());
            for (int i = 0; i < q.edge_count(); ++i)
                if ((bits >> i) & 1u) m.set(i);
            if (!is_componentwise_full(q, m, EdgeMask::all(q.edge_count()))) continue;
            auto c = contract(q, m, EdgeMask::all(q.edge_count()));
            CHECK(is_directed_acyclic(c) ==
                  !qtest::has_directed_cycle_brute(static_cast<int>(c.classes.size()), c.edges));
        }
    });
    CHECK(checked > 0);
}

TEST_CASE("edge mask basics") {
    EdgeMask a(70);
    a.set(0);
    a.set(69);
    CHECK(a.count() == 2);
    CHECK(a.test(69));
    CHECK(a.is_subset_of(EdgeMask::all(70)));
    EdgeMask b = a;
    CHECK(a == b);
    b.set(5);
    CHECK(a != b);
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.complement_within(b).indices() == std::vector<int>{5});
}

TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(qv({{"0", "0"}}), Error);
    CHECK_THROWS_AS(qv({{"0", "1"}, {"0", "1"}}), Error);
    // canonical edge order: sorted by (tail, head) indices
    Quiver q = qv({{"b", "a"}, {"a", "b"}});
    CHECK(q.vertex(0) == "b");
    CHECK(q.edge(0) == Edge{0, 1});
    CHECK(q.edge(1) == Edge{1, 0});
}
