#include <catch2/catch.hpp>

#include "loopkit/catalog.hpp"
#include "loopkit/iso.hpp"
#include "loopkit/quotient.hpp"
#include "loopkit/search.hpp"

using namespace loopkit;

TEST_CASE("cosets") {
    const CayleyTable& n8 = catalog_get("nafil8").table;
    CHECK(coset(n8, ElemSet::of({1, 2, 3, 4}), 5, CosetSide::left) == ElemSet::of({5, 6, 7, 8}));
    CHECK(coset(n8, ElemSet::of({1, 2, 3, 4}), 1, CosetSide::left) == ElemSet::of({1, 2, 3, 4}));
    CHECK(coset(n8, ElemSet::of({1, 7}), 2, CosetSide::left) == ElemSet::of({2, 8}));
    try {
        coset(n8, ElemSet::of({1, 2}), 3, CosetSide::left);
        FAIL("expected NotASubsystem");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_subsystem);
    }
}

TEST_CASE("coset partitions") {
    const CayleyTable& n8 = catalog_get("nafil8").table;
    auto pr = coset_partition(n8, ElemSet::of({1, 7}));
    REQUIRE(pr.cells.size() == 4);
    CHECK(pr.cells[0] == ElemSet::of({1, 7}));
    CHECK(pr.cells[1] == ElemSet::of({2, 8}));
    CHECK(pr.cells[2] == ElemSet::of({3, 5}));
    CHECK(pr.cells[3] == ElemSet::of({4, 6}));
    CHECK(pr.partitions);

    auto pr6 = coset_partition(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    REQUIRE(pr6.cells.size() == 3);
    CHECK(pr6.cells[1] == ElemSet::of({3, 4}));
    CHECK(pr6.cells[2] == ElemSet::of({5, 6}));

    auto full = coset_partition(n8, ElemSet::full(8));
    CHECK(full.cells.size() == 1);
    CHECK(full.partitions);

    // Non-divisor order: cosets overlap.
    auto bad = coset_partition(catalog_get("l5").table, ElemSet::of({1, 2}));
    CHECK_FALSE(bad.partitions);
    CHECK(bad.witness.has_value());
}

TEST_CASE("normality pipeline on the order-8 loop") {
    const CayleyTable& n8 = catalog_get("nafil8").table;

    auto good = is_normal(n8, ElemSet::of({1, 2, 3, 4}));
    REQUIRE(good.normal);
    REQUIRE(good.factor.has_value());
    CHECK(are_isomorphic(*good.factor->table, catalog_get("c2").table).has_value());

    auto bad = is_normal(n8, ElemSet::of({1, 7}));
    CHECK_FALSE(bad.normal);
    CHECK(bad.partition.partitions);
    REQUIRE(bad.factor.has_value());
    CHECK_FALSE(bad.factor->well_defined);
    REQUIRE(bad.factor->witness.has_value());
    const CellConflict& w = *bad.factor->witness;
    CHECK(w.x1 == 2);
    CHECK(w.y1 == 8);
    CHECK(w.p1 == 5);
    CHECK(w.x2 == 8);
    CHECK(w.y2 == 2);
    CHECK(w.p2 == 7);

    // {1,3} satisfies the full pipeline: partition, well-defined cells, loop.
    auto extra = is_normal(n8, ElemSet::of({1, 3}));
    CHECK(extra.normal);
    CHECK(are_isomorphic(*extra.factor->table, catalog_get("k4").table).has_value());
}

TEST_CASE("center cosets of the abelian order-6 loop give the cyclic factor") {
    auto nr = is_normal(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    REQUIRE(nr.normal);
    CHECK(are_isomorphic(*nr.factor->table, catalog_get("c3").table).has_value());
}

TEST_CASE("degenerate normality cases") {
    const CayleyTable& t = catalog_get("l5").table;
    auto triv = is_normal(t, ElemSet::of({1}));
    REQUIRE(triv.normal);
    CHECK(*triv.factor->table == t);
    auto full = is_normal(t, ElemSet::full(5));
    REQUIRE(full.normal);
    CHECK(full.factor->table->order() == 1);
}

TEST_CASE("nuclei and center") {
    auto rep = nuclei(catalog_get("abelian6").table);
    CHECK(rep.center == ElemSet::of({1, 2}));
    CHECK(is_subsystem(catalog_get("abelian6").table, rep.center));

    auto grp = nuclei(catalog_get("k4").table);
    CHECK(grp.nucleus == ElemSet::full(4));
    CHECK(grp.center == ElemSet::full(4));

    CHECK(center(catalog_get("l5").table) == ElemSet::of({1}));
}

TEST_CASE("nucleus and center are subloops on every catalog loop") {
    for (const CatalogEntry& e : catalog()) {
        if (!is_loop(e.table)) continue;
        auto rep = nuclei(e.table);
        for (ElemSet s : {rep.left, rep.middle, rep.right, rep.nucleus, rep.center})
            CHECK(is_subsystem(e.table, s));
        CHECK(is_normal(e.table, rep.center).normal);
    }
}

TEST_CASE("simplicity and plainness") {
    CHECK(is_simple(catalog_get("l7-composite").table));
    CHECK(is_simple(catalog_get("l7-plain").table));
    CHECK_FALSE(is_simple(catalog_get("abelian6").table));

    CHECK(is_plain(catalog_get("plain7n").table));
    CHECK_FALSE(is_plain(catalog_get("l7-composite").table));
    CHECK(is_plain(catalog_get("c2").table));

    CayleyTable quasi = CayleyTable::from_rows({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}});
    CHECK_THROWS_AS(is_simple(quasi), error);
}

TEST_CASE("half-order subsystems are always normal") {
    CHECK(is_normal(catalog_get("nafil8").table, ElemSet::of({1, 2, 3, 4})).normal);
    CHECK(is_normal(catalog_get("l10").table, ElemSet::of({1, 2, 3, 4, 5})).normal);

    // Every order-6 loop with an order-3 subloop has it normal.
    SearchSpec spec;
    spec.order = 6;
    spec.job_count = 2;
    auto census = enumerate_loops(spec);
    int with_order3 = 0;
    for (const CayleyTable& t : census.representatives) {
        for (auto* s : subsystems(t).nontrivial_proper())
            if (s->order == 3) {
                ++with_order3;
                CHECK(is_normal(t, s->elements).normal);
            }
    }
    CHECK(with_order3 > 0);
}

TEST_CASE("factors of normal subloops are loops and projections are homomorphisms") {
    for (const char* id : {"nafil8", "abelian6", "l10", "c4", "k4"}) {
        const CayleyTable& t = catalog_get(id).table;
        for (auto* s : subsystems(t).nontrivial_proper()) {
            auto nr = is_normal(t, s->elements);
            if (!nr.normal) continue;
            AxiomProfile p = axiom_profile(*nr.factor->table);
            CHECK(p.a1);
            CHECK(p.a4);
            CHECK(p.a2);
            std::vector<int> projection(static_cast<std::size_t>(t.order()));
            for (int x = 1; x <= t.order(); ++x)
                for (std::size_t c = 0; c < nr.factor->cells.size(); ++c)
                    if (nr.factor->cells[c].contains(x)) projection[static_cast<std::size_t>(x) - 1] = static_cast<int>(c) + 1;
            CHECK(is_homomorphism(t, *nr.factor->table, projection).ok);
        }
    }
}

TEST_CASE("homomorphism checks") {
    const CayleyTable& t = catalog_get("abelian6").table;
    auto nr = is_normal(t, ElemSet::of({1, 2}));
    REQUIRE(nr.normal);

    std::vector<int> identity_map;
    for (int x = 1; x <= t.order(); ++x) identity_map.push_back(x);
    CHECK(is_homomorphism(t, t, identity_map).ok);

    std::vector<int> constant(static_cast<std::size_t>(t.order()), 2);
    auto bad = is_homomorphism(t, *nr.factor->table, constant);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == std::pair<int, int>{1, 1});

    CHECK_THROWS_AS(is_homomorphism(t, t, std::vector<int>{1, 2}), error);
    CHECK_THROWS_AS(is_homomorphism(t, t, std::vector<int>{1, 2, 3, 4, 5, 99}), error);
}

TEST_CASE("ascending central series") {
    auto s6 = ascending_central_series(catalog_get("abelian6").table);
    REQUIRE(s6.size() == 3);
    CHECK(s6[0] == ElemSet::of({1}));
    CHECK(s6[1] == ElemSet::of({1, 2}));
    CHECK(s6[2] == ElemSet::full(6));

    auto s5 = ascending_central_series(catalog_get("l5").table);
    REQUIRE(s5.size() == 1);
    CHECK(s5[0] == ElemSet::of({1}));

    auto s4 = ascending_central_series(catalog_get("c4").table);
    REQUIRE(s4.size() == 2);
    CHECK(s4[1] == ElemSet::full(4));
}
