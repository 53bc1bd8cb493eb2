#include <doctest.h>

#include "clab/generators.hpp"
#include "clab/io.hpp"

using namespace clab;

TEST_CASE("random uniform generator") {
    CHECK(gen_random_uniform(5, 2, 10, 123) == gen_complete_graph(5));
    CHECK(gen_random_uniform(10, 3, 0, 1).edge_count() == 0);
    CHECK(gen_random_uniform(10, 3, 20, 7) == gen_random_uniform(10, 3, 20, 7));
    CHECK(gen_random_uniform(10, 3, 20, 7) != gen_random_uniform(10, 3, 20, 8));
    CHECK_THROWS_AS(gen_random_uniform(4, 2, 7, 1), std::invalid_argument);
    Hypergraph h = gen_random_uniform(12, 4, 15, 9);
    CHECK(h.edge_count() == 15);
    CHECK(h.is_uniform());
    CHECK(h.rank() == 4);
}

TEST_CASE("triangle hypergraph generator") {
    Hypergraph t3 = gen_triangles(3);
    CHECK(t3.vertex_count() == 3);
    CHECK(t3.edge_count() == 1);
    Hypergraph t4 = gen_triangles(4);
    CHECK(t4.vertex_count() == 6);
    CHECK(t4.edge_count() == 4);
    Hypergraph t5 = gen_triangles(5);
    CHECK(t5.vertex_count() == 10);
    CHECK(t5.edge_count() == 10);
    // every pair-vertex lies in exactly n-2 triangles
    for (int v = 0; v < 10; ++v) CHECK(degree(t5, VertexSet(10, {v})) == 3);
}

TEST_CASE("arithmetic progression generator") {
    Hypergraph a = gen_aps(5, 3);
    std::vector<VertexSet> want = {VertexSet(5, {0, 1, 2}), VertexSet(5, {1, 2, 3}), VertexSet(5, {2, 3, 4}),
                                   VertexSet(5, {0, 2, 4})};
    CHECK(a == Hypergraph(5, std::move(want)));
    CHECK(gen_aps(3, 3).edge_count() == 1);
    CHECK(gen_aps(4, 4).edge_count() == 1);
    CHECK(gen_aps(4, 4).edges()[0] == VertexSet::full(4));
    for (int n = 3; n <= 20; ++n) {
        long c = 0;
        for (int d = 1; n - 2 * d > 0; ++d) c += n - 2 * d;
        CHECK(gen_aps(n, 3).edge_count() == size_t(c));
    }
}

TEST_CASE("decreasing family and singleton complement generators") {
    CHECK(gen_decreasing_family_instance(6, 0, 5).edge_count() == 0);
    CHECK(gen_decreasing_family_instance(6, rat(1, 2), 5) == gen_decreasing_family_instance(6, rat(1, 2), 5));
    Hypergraph d = gen_decreasing_family_instance(8, rat(3, 4), 11);
    for (const auto& e : d.edges()) CHECK(e.size() <= 3);
    CHECK(gen_singleton_complement(VertexSet(4, {0, 2})) == Hypergraph(4, {VertexSet(4, {1}), VertexSet(4, {3})}));
    CHECK(gen_singleton_complement(VertexSet::full(3)).edge_count() == 0);
}

TEST_CASE("document round trip") {
    HypergraphDocument d;
    d.n = 2;
    d.edges = {{0, 1}};
    d.meta = {{"generator", "manual"}};
    CHECK(parse_document(serialize_document(d)) == d);

    Hypergraph h = gen_random_uniform(9, 3, 10, 99);
    CHECK(document_to_hypergraph(hypergraph_to_document(h)) == h);
}

TEST_CASE("canonicalization with warnings") {
    std::vector<std::string> w;
    HypergraphDocument d = parse_document(R"({"n":3,"edges":[[2,1],[1,2],[0]]})", &w);
    CHECK_FALSE(w.empty());
    CHECK(d.edges == std::vector<std::vector<int>>{{0}, {1, 2}});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_document("{nope"), MalformedDocumentError);
    CHECK_THROWS_AS(parse_document(R"({"edges":[[0]]})"), MalformedDocumentError);
    CHECK_THROWS_AS(parse_document(R"({"n":2,"edges":[[5]]})"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parse_document(R"({"n":2,"edges":[[-1]]})"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parse_document(R"({"n":2,"edges":[[]]})"), EmptyEdgeError);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.name = "demo";
    rep.add("a", true, "w");
    rep.add("b", false);
    CHECK_FALSE(rep.pass());
    std::string j = report_to_json(rep);
    CHECK(j.find("\"demo\"") != std::string::npos);
    CHECK(j.find("\"a\"") != std::string::npos);
}
