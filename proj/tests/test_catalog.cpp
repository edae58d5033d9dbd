#include <catch2/catch.hpp>

#include "loopkit/report.hpp"

using namespace loopkit;

// Every catalog note is a claim; re-derive all of them through the pipeline.
TEST_CASE("catalog notes are re-derived, not stored") {
    for (const CatalogEntry& e : catalog()) {
        INFO("catalog id " << e.id);
        const CayleyTable& t = e.table;
        const CatalogNotes& n = e.notes;

        if (n.nafil) CHECK(is_nafil(t) == *n.nafil);
        if (n.group) CHECK(is_group(t) == *n.group);
        if (n.abelian) CHECK(is_abelian(t) == *n.abelian);
        if (n.simple) CHECK(is_simple(t) == *n.simple);
        if (n.plain) CHECK(is_plain(t) == *n.plain);

        auto rep = subsystems(t);
        if (n.lagrangian) CHECK(rep.lagrangian_class == *n.lagrangian);

        std::vector<ElemSet> derived;
        for (auto* s : rep.nontrivial_proper()) derived.push_back(s->elements);
        std::sort(derived.begin(), derived.end(), ElemSet::lattice_less);

        if (n.nontrivial_subsystems) {
            std::vector<ElemSet> expected = *n.nontrivial_subsystems;
            std::sort(expected.begin(), expected.end(), ElemSet::lattice_less);
            CHECK(derived == expected);
        }
        for (ElemSet claimed : n.contains_subsystems)
            CHECK(std::find(derived.begin(), derived.end(), claimed) != derived.end());

        if (n.normal_nontrivial) {
            std::vector<ElemSet> normal_derived;
            for (ElemSet s : derived)
                if (is_normal(t, s).normal) normal_derived.push_back(s);
            std::vector<ElemSet> expected = *n.normal_nontrivial;
            std::sort(expected.begin(), expected.end(), ElemSet::lattice_less);
            CHECK(normal_derived == expected);
        }

        if (n.center) CHECK(center(t) == *n.center);
        if (n.factor_over_center) {
            auto nr = is_normal(t, center(t));
            REQUIRE(nr.normal);
            CHECK(are_isomorphic(*nr.factor->table, catalog_get(*n.factor_over_center).table).has_value());
        }
    }
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_get("l5").table.order() == 5);
    CHECK(catalog_get("plain7n-t").table.at(4, 6) == 2);
    try {
        catalog_get("nope");
        FAIL("expected UnknownId");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_id);
        CHECK(std::string(e.what()).find("l5") != std::string::npos);
    }
}

TEST_CASE("the transpose pair really is a transpose pair") {
    const CayleyTable& a = catalog_get("plain7n").table;
    const CayleyTable& b = catalog_get("plain7n-t").table;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) CHECK(a.at(i, j) == b.at(j, i));
}

TEST_CASE("analysis report examples") {
    {
        AnalysisReport r = analyze(catalog_get("l9-anti").table);
        REQUIRE(r.subsystem_report.has_value());
        CHECK(r.subsystem_report->lagrangian_class == LagrangianClass::AntiLagrangian);
        CHECK(*r.simple);
        CHECK(r.subsystem_report->nontrivial_proper().size() == 5);
    }
    {
        AnalysisReport r = analyze(catalog_get("abelian6").table);
        CHECK(r.profile.a5);
        REQUIRE(r.nucleus_report.has_value());
        CHECK(r.nucleus_report->center == ElemSet::of({1, 2}));
        REQUIRE_FALSE(r.decompositions.empty());
        CHECK(r.decompositions.front().k == 3);
    }
    {
        AnalysisReport r = analyze(catalog_get("l7-composite").table);
        CHECK(*r.simple);
        CHECK_FALSE(*r.plain);
        CHECK(r.nafil);
    }
}

// Renaming or removing any of these keys breaks consumers; adding keys is fine.
TEST_CASE("analysis JSON schema is stable") {
    nlohmann::json j = to_json(analyze(catalog_get("l5").table));
    const std::vector<std::string> required{
        "source", "order",  "axioms",    "classification", "axiom_type", "label",     "abelian",
        "nafil",  "witnesses", "identity", "inverses",       "subsystems", "nuclei",    "simple",
        "plain",  "decompositions"};
    for (const std::string& key : required) {
        INFO("key " << key);
        CHECK(j.contains(key));
    }
    for (const char* a : {"a1", "a2", "a3", "a4", "a5", "a6"}) CHECK(j["axioms"].contains(a));
    CHECK(j["identity"].contains("two_sided"));
    CHECK(j["subsystems"].contains("lagrangian_class"));
    CHECK(j["subsystems"].contains("items"));
    REQUIRE(j["subsystems"]["items"].is_array());
    for (const char* k : {"elements", "order", "label", "is_group", "is_divisor", "normal"})
        CHECK(j["subsystems"]["items"][0].contains(k));
    for (const char* k : {"left", "middle", "right", "nucleus", "center"}) CHECK(j["nuclei"].contains(k));
}

TEST_CASE("source loading") {
    std::istringstream stream("2\n1 2\n2 1\n");
    CHECK(load_table("-", stream).order() == 2);
    CHECK(load_table("catalog:k4").order() == 4);
    CHECK_THROWS_AS(load_table("/no/such/file.tbl"), error);
}
