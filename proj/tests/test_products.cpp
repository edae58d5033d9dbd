#include <catch2/catch.hpp>

#include <set>

#include "loopkit/catalog.hpp"
#include "loopkit/products.hpp"
#include "loopkit/search.hpp"

using namespace loopkit;

namespace {

// Independent composition oracle for block products, straight from the rule.
CayleyTable compose_oracle(const CayleyTable& e, const std::vector<CayleyTable>& phi) {
    int k = e.order(), m = phi.front().order(), n = k * m;
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
    for (int p = 1; p <= k; ++p)
        for (int a = 1; a <= m; ++a)
            for (int q = 1; q <= k; ++q)
                for (int b = 1; b <= m; ++b) {
                    int ep = e.at(p, q);
                    int cc = phi[static_cast<std::size_t>(p - 1) * k + (q - 1)].at(a, b);
                    int row = m * (p - 1) + a, col = m * (q - 1) + b, val = m * (ep - 1) + cc;
                    entries[static_cast<std::size_t>(row - 1) * n + (col - 1)] = static_cast<std::uint8_t>(val);
                }
    return CayleyTable(n, std::move(entries));
}

const CayleyTable identity_free_q3 = CayleyTable::from_rows({{2, 1, 3}, {1, 3, 2}, {3, 2, 1}});

}  // namespace

TEST_CASE("direct products of the catalog") {
    CHECK(direct_product(catalog_get("c2").table, catalog_get("c2").table) == catalog_get("k4").table);
    CHECK(direct_product(catalog_get("c2").table, catalog_get("l5").table) == catalog_get("l10").table);
}

TEST_CASE("order-15 direct product has the expected subloop orders") {
    CayleyTable t = direct_product(catalog_get("l5").table, catalog_get("c3").table);
    REQUIRE(t.order() == 15);
    CHECK(is_nafil(t));
    std::set<int> orders;
    for (auto* s : subsystems(t).nontrivial_proper()) orders.insert(s->order);
    CHECK(orders == std::set<int>{2, 3, 5, 6});
    CHECK(lagrangian_class(t) == LagrangianClass::NonLagrangian);
}

TEST_CASE("block product agrees with the composition oracle") {
    const CayleyTable& c4 = catalog_get("c4").table;
    const CayleyTable& k4 = catalog_get("k4").table;
    std::vector<CayleyTable> phi{c4, c4, c4, k4};
    MultiPhiSystem mp(catalog_get("c2").table, phi);
    CayleyTable built = block_product(mp);
    CHECK(built == compose_oracle(catalog_get("c2").table, phi));
}

TEST_CASE("groups-only generators can still produce a NAFIL") {
    // Outer C2 with local tables C4, C4, C4, K4 sharing identity 1.
    const CayleyTable& c4 = catalog_get("c4").table;
    const CayleyTable& k4 = catalog_get("k4").table;
    MultiPhiSystem mp(catalog_get("c2").table, {c4, c4, c4, k4});
    CHECK(classify_phi_type(mp) == PhiType::TypeA);
    CayleyTable t = block_product(mp);
    REQUIRE(t.order() == 8);
    CHECK(is_invertible_loop(t));
    CHECK_FALSE(is_associative(t));
    CHECK(is_nafil(t));
}

TEST_CASE("phi type classification") {
    CHECK(classify_phi_type(mono_phi(catalog_get("c2").table, catalog_get("c2").table)) == PhiType::TypeA);

    // Local loops with different identities: the abelian order-6 loop
    // decomposed over its center is Type B.
    auto d = decompose(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    CHECK(d.phi_type == PhiType::TypeB);
    CHECK_FALSE(d.is_mono_phi);

    const CayleyTable& c3 = catalog_get("c3").table;
    MultiPhiSystem irr(catalog_get("c2").table, {c3, identity_free_q3, c3, c3});
    CHECK(classify_phi_type(irr) == PhiType::Irregular);
}

TEST_CASE("generator validation") {
    CHECK(validate_generators(mono_phi(catalog_get("c2").table, catalog_get("c2").table)).ok);

    auto d = decompose(catalog_get("nafil8").table, ElemSet::of({1, 2, 3, 4}));
    auto res = validate_generators(d.multiphi);
    CHECK(res.ok);

    const CayleyTable& c3 = catalog_get("c3").table;
    MultiPhiSystem bad(catalog_get("c2").table, {identity_free_q3, c3, c3, c3});
    auto v = validate_generators(bad);
    CHECK_FALSE(v.ok);
    bool found = false;
    for (const auto& viol : v.violations)
        if (viol.clause == "local-identity" && viol.p == 1 && viol.q == 1) found = true;
    CHECK(found);
}

TEST_CASE("decomposition of the order-10 loop over its order-5 subloop") {
    auto d = decompose(catalog_get("l10").table, ElemSet::of({1, 2, 3, 4, 5}));
    CHECK(d.multiphi.k() == 2);
    CHECK(d.multiphi.m() == 5);
    CHECK(d.is_mono_phi);
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) CHECK(d.multiphi.phi_at(p, q) == catalog_get("l5").table);
    CHECK(are_isomorphic(d.e_table, catalog_get("c2").table).has_value());
}

TEST_CASE("decomposition of the abelian order-6 loop over its center") {
    auto d = decompose(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    CHECK(d.multiphi.k() == 3);
    CHECK(d.multiphi.m() == 2);
    CHECK(are_isomorphic(d.e_table, catalog_get("c3").table).has_value());
    // Pointwise read-off: 3*3 = 5 is the first element of its coset {5,6}.
    CHECK(d.multiphi.phi_at(2, 2).at(1, 1) == 1);
}

TEST_CASE("decomposition of the order-8 loop over its cyclic subgroup") {
    auto d = decompose(catalog_get("nafil8").table, ElemSet::of({1, 2, 3, 4}));
    CHECK(d.multiphi.k() == 2);
    CHECK(d.multiphi.m() == 4);
    CHECK(are_isomorphic(d.e_table, catalog_get("c2").table).has_value());
    CHECK(are_isomorphic(d.multiphi.phi_at(1, 1), catalog_get("c4").table).has_value());
}

TEST_CASE("recompose inverts decompose on every catalog normal pair") {
    for (const CatalogEntry& e : catalog()) {
        if (!is_loop(e.table)) continue;
        for (auto* s : subsystems(e.table).nontrivial_proper()) {
            if (!is_normal(e.table, s->elements).normal) continue;
            CosetDecomposition d = decompose(e.table, s->elements);
            CHECK(recompose(d) == e.table);
        }
    }
}

TEST_CASE("recompose of a hand-built mono-phi decomposition is the direct product") {
    const CayleyTable& e = catalog_get("c3").table;
    const CayleyTable& c = catalog_get("c2").table;
    CosetDecomposition d{e, mono_phi(e, c), {}, {}, PhiType::TypeA, true};
    for (int x = 1; x <= 6; ++x) d.relabeling.push_back(x);
    CHECK(recompose(d) == direct_product(e, c));
}

TEST_CASE("recompose rejects a tampered relabeling") {
    auto d = decompose(catalog_get("l10").table, ElemSet::of({1, 2, 3, 4, 5}));
    d.relabeling[1] = d.relabeling[0];
    try {
        recompose(d);
        FAIL("expected InconsistentDecomposition");
    } catch (const error& e) {
        CHECK(e.code() == errc::inconsistent_decomposition);
    }
}

TEST_CASE("decompose rejects non-normal subloops") {
    try {
        decompose(catalog_get("nafil8").table, ElemSet::of({1, 7}));
        FAIL("expected NotNormal");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_normal);
    }
}

TEST_CASE("multi-phi construction validates shape and quasigroup condition") {
    const CayleyTable& c2 = catalog_get("c2").table;
    const CayleyTable& c3 = catalog_get("c3").table;
    try {
        MultiPhiSystem bad(c2, {c2, c2, c2});
        FAIL("expected ShapeMismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::shape_mismatch);
    }
    try {
        MultiPhiSystem bad(c2, {c2, c2, c2, c3});
        FAIL("expected ShapeMismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::shape_mismatch);
    }
    CayleyTable broken = CayleyTable::from_rows({{1, 2}, {1, 2}});
    try {
        MultiPhiSystem bad(c2, {c2, c2, c2, broken});
        FAIL("expected PhiNotQuasigroup");
    } catch (const error& e) {
        CHECK(e.code() == errc::phi_not_quasigroup);
    }
}

TEST_CASE("multi-phi file format round-trips") {
    auto d = decompose(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    std::string text = serialize_multiphi(d.multiphi);
    MultiPhiSystem back = parse_multiphi(text);
    CHECK(back.k() == d.multiphi.k());
    CHECK(back.m() == d.multiphi.m());
    CHECK(back.e_table() == d.multiphi.e_table());
    for (int p = 1; p <= back.k(); ++p)
        for (int q = 1; q <= back.k(); ++q) CHECK(back.phi_at(p, q) == d.multiphi.phi_at(p, q));
    CHECK(block_product(back) == block_product(d.multiphi));
}

TEST_CASE("multi-phi parse errors") {
    CHECK_THROWS_AS(parse_multiphi(""), error);
    CHECK_THROWS_AS(parse_multiphi("x 2\n"), error);
    CHECK_THROWS_AS(parse_multiphi("2 2\n1 2\n2 1\n1 2\n2 1\n"), error);  // missing phi blocks
}

TEST_CASE("pair flattening matches the m(p-1)+a rule") {
    CHECK(pair_index(1, 1, 5) == 1);
    CHECK(pair_index(2, 1, 5) == 6);
    CHECK(pair_index(2, 5, 5) == 10);
}
