#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopkit/substructure.hpp"

namespace loopkit {

// Expected structure of a catalog table. Every field is a claim the analysis
// pipeline re-derives in the test suite; nothing here is a stored output.
struct CatalogNotes {
    std::optional<bool> nafil;
    std::optional<bool> group;
    std::optional<bool> abelian;
    std::optional<bool> simple;
    std::optional<bool> plain;
    std::optional<LagrangianClass> lagrangian;
    std::optional<std::vector<ElemSet>> nontrivial_subsystems;  // the complete list
    std::vector<ElemSet> contains_subsystems;                   // membership-only claims
    std::optional<std::vector<ElemSet>> normal_nontrivial;      // complete list of normal nontrivial proper subloops
    std::optional<ElemSet> center;
    std::optional<std::string> factor_over_center;  // catalog id of an isomorphic table
    std::string structure;                          // free-text description
};

struct CatalogEntry {
    std::string id;
    CayleyTable table;
    std::string source;
    CatalogNotes notes;
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string id, std::vector<std::vector<int>> rows, std::string source, CatalogNotes notes) {
        cat.push_back({id, CayleyTable::from_rows(rows, id), std::move(source), std::move(notes)});
    };
    auto sets = [](std::vector<ElemSet> v) { return std::optional<std::vector<ElemSet>>(std::move(v)); };

    {
        CatalogNotes n;
        n.nafil = true;
        n.abelian = false;
        n.simple = true;
        n.plain = false;
        n.lagrangian = LagrangianClass::NonLagrangian;
        n.nontrivial_subsystems =
            sets({ElemSet::of({1, 2}), ElemSet::of({1, 3}), ElemSet::of({1, 4}), ElemSet::of({1, 5})});
        n.normal_nontrivial = sets({});
        n.center = ElemSet::of({1});
        n.structure = "smallest NAFIL; four order-2 subloops, none a divisor of 5";
        add("l5",
            {{1, 2, 3, 4, 5}, {2, 1, 5, 3, 4}, {3, 4, 1, 5, 2}, {4, 5, 2, 1, 3}, {5, 3, 4, 2, 1}},
            "classical smallest NAFIL, order 5", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.abelian = false;
        n.simple = false;
        n.plain = false;
        n.lagrangian = LagrangianClass::Lagrangian;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 3}), ElemSet::of({1, 5}), ElemSet::of({1, 6}),
                                        ElemSet::of({1, 7}), ElemSet::of({1, 8}), ElemSet::of({1, 2, 3, 4}),
                                        ElemSet::of({1, 3, 5, 7}), ElemSet::of({1, 3, 6, 8})});
        // {1,3} passes the full normality pipeline alongside the three
        // order-4 subgroups; {1,5} and {1,7} partition but fail cell
        // multiplication, {1,6} and {1,8} do not even partition.
        n.normal_nontrivial = sets({ElemSet::of({1, 3}), ElemSet::of({1, 2, 3, 4}), ElemSet::of({1, 3, 5, 7}),
                                    ElemSet::of({1, 3, 6, 8})});
        n.structure = "non-abelian NAFIL of order 8; all eight nontrivial subloops are groups "
                      "(one C4, two K4, five C2)";
        add("nafil8",
            {{1, 2, 3, 4, 5, 6, 7, 8},
             {2, 3, 4, 1, 6, 7, 8, 5},
             {3, 4, 1, 2, 7, 8, 5, 6},
             {4, 1, 2, 3, 8, 5, 6, 7},
             {5, 6, 7, 8, 1, 2, 3, 4},
             {6, 5, 8, 7, 2, 1, 4, 3},
             {7, 8, 5, 6, 3, 4, 1, 2},
             {8, 7, 6, 5, 4, 3, 2, 1}},
            "non-abelian NAFIL of order 8 with a normal order-4 subgroup", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.abelian = true;
        n.simple = false;
        n.plain = false;
        n.lagrangian = LagrangianClass::Lagrangian;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 2})});
        n.normal_nontrivial = sets({ElemSet::of({1, 2})});
        n.center = ElemSet::of({1, 2});
        n.factor_over_center = "c3";
        n.structure = "abelian NAFIL of order 6; center {1,2} with cyclic factor of order 3";
        add("abelian6",
            {{1, 2, 3, 4, 5, 6},
             {2, 1, 4, 3, 6, 5},
             {3, 4, 5, 6, 1, 2},
             {4, 3, 6, 5, 2, 1},
             {5, 6, 1, 2, 4, 3},
             {6, 5, 2, 1, 3, 4}},
            "abelian NAFIL of order 6 with two-element center", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.simple = true;
        n.plain = false;
        n.lagrangian = LagrangianClass::AntiLagrangian;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 2}), ElemSet::of({1, 3}), ElemSet::of({1, 4}),
                                        ElemSet::of({1, 8}), ElemSet::of({1, 2, 3, 4})});
        n.normal_nontrivial = sets({});
        n.structure = "anti-Lagrangian NAFIL of order 9: every nontrivial subloop order (4, 2) is a non-divisor";
        add("l9-anti",
            {{1, 2, 3, 4, 5, 6, 7, 8, 9},
             {2, 1, 4, 3, 6, 5, 8, 9, 7},
             {3, 4, 1, 2, 7, 8, 9, 6, 5},
             {4, 3, 2, 1, 8, 9, 5, 7, 6},
             {5, 6, 7, 8, 9, 1, 2, 4, 3},
             {6, 5, 8, 9, 1, 7, 3, 2, 4},
             {7, 8, 9, 6, 2, 3, 4, 5, 1},
             {8, 9, 5, 7, 3, 4, 6, 1, 2},
             {9, 7, 6, 5, 4, 2, 1, 3, 8}},
            "anti-Lagrangian NAFIL of order 9", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.lagrangian = LagrangianClass::NonLagrangian;
        n.contains_subsystems = {ElemSet::of({1, 2, 6, 7}), ElemSet::of({1, 2, 3, 4, 5}), ElemSet::of({1, 6})};
        n.center = ElemSet::of({1, 6});
        n.simple = false;
        n.plain = false;
        n.structure = "the \"PAP NAFIL\" of order 10 (name recorded verbatim from its source); direct product "
                      "of the order-2 cyclic group with the smallest NAFIL; order-4 subloops are non-divisors, "
                      "orders 5 and 2 divide";
        add("l10",
            {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
             {2, 1, 5, 3, 4, 7, 6, 10, 8, 9},
             {3, 4, 1, 5, 2, 8, 9, 6, 10, 7},
             {4, 5, 2, 1, 3, 9, 10, 7, 6, 8},
             {5, 3, 4, 2, 1, 10, 8, 9, 7, 6},
             {6, 7, 8, 9, 10, 1, 2, 3, 4, 5},
             {7, 6, 10, 8, 9, 2, 1, 5, 3, 4},
             {8, 9, 6, 10, 7, 3, 4, 1, 5, 2},
             {9, 10, 7, 6, 8, 4, 5, 2, 1, 3},
             {10, 8, 9, 7, 6, 5, 3, 4, 2, 1}},
            "non-Lagrangian NAFIL of order 10 with both divisor and non-divisor subloops", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.simple = true;
        n.plain = false;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 4}), ElemSet::of({1, 5}), ElemSet::of({1, 6}),
                                        ElemSet::of({1, 7}), ElemSet::of({1, 2, 3})});
        n.normal_nontrivial = sets({});
        n.structure = "simple but composite NAFIL of order 7; subloops of orders 2 and 3, all groups";
        add("l7-composite",
            {{1, 2, 3, 4, 5, 6, 7},
             {2, 3, 1, 5, 6, 7, 4},
             {3, 1, 2, 7, 4, 5, 6},
             {4, 5, 6, 1, 7, 3, 2},
             {5, 6, 7, 2, 1, 4, 3},
             {6, 7, 4, 3, 2, 1, 5},
             {7, 4, 5, 6, 3, 2, 1}},
            "simple composite NAFIL of order 7", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.simple = true;
        n.plain = true;
        n.lagrangian = LagrangianClass::NoNontrivial;
        n.nontrivial_subsystems = sets({});
        n.structure = "plain NAFIL of order 7: no nontrivial subloop of any kind";
        add("l7-plain",
            {{1, 2, 3, 4, 5, 6, 7},
             {2, 3, 1, 5, 4, 7, 6},
             {3, 1, 4, 6, 7, 2, 5},
             {4, 5, 6, 7, 2, 1, 3},
             {5, 4, 7, 2, 6, 3, 1},
             {6, 7, 2, 1, 3, 5, 4},
             {7, 6, 5, 3, 1, 4, 2}},
            "plain NAFIL of order 7", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.plain = true;
        n.simple = true;
        n.lagrangian = LagrangianClass::NoNontrivial;
        n.structure = "plain NAFIL of order 7; transpose pair of plain7n-t";
        add("plain7n",
            {{1, 2, 3, 4, 5, 6, 7},
             {2, 3, 4, 5, 6, 7, 1},
             {3, 4, 2, 6, 7, 1, 5},
             {4, 5, 6, 7, 1, 3, 2},
             {5, 6, 7, 1, 4, 2, 3},
             {6, 7, 1, 2, 3, 5, 4},
             {7, 1, 5, 3, 2, 4, 6}},
            "plain NAFIL of order 7 (one of a transpose pair)", n);
    }
    {
        CatalogNotes n;
        n.nafil = true;
        n.plain = true;
        n.simple = true;
        n.lagrangian = LagrangianClass::NoNontrivial;
        n.structure = "plain NAFIL of order 7; the transpose of plain7n";
        add("plain7n-t",
            {{1, 2, 3, 4, 5, 6, 7},
             {2, 3, 4, 5, 6, 7, 1},
             {3, 4, 2, 6, 7, 1, 5},
             {4, 5, 6, 7, 1, 2, 3},
             {5, 6, 7, 1, 4, 3, 2},
             {6, 7, 1, 3, 2, 5, 4},
             {7, 1, 5, 2, 3, 4, 6}},
            "plain NAFIL of order 7 (transpose of plain7n)", n);
    }

    {
        CatalogNotes n;
        n.group = true;
        n.abelian = true;
        n.simple = true;
        n.plain = true;
        n.lagrangian = LagrangianClass::NoNontrivial;
        n.structure = "cyclic group of order 2";
        add("c2", {{1, 2}, {2, 1}}, "cyclic group of order 2", n);
    }
    {
        CatalogNotes n;
        n.group = true;
        n.abelian = true;
        n.simple = true;
        n.plain = true;
        n.lagrangian = LagrangianClass::NoNontrivial;
        n.structure = "cyclic group of order 3";
        add("c3", {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, "cyclic group of order 3", n);
    }
    {
        CatalogNotes n;
        n.group = true;
        n.abelian = true;
        n.simple = false;
        n.plain = false;
        n.lagrangian = LagrangianClass::Lagrangian;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 3})});
        n.normal_nontrivial = sets({ElemSet::of({1, 3})});
        n.structure = "cyclic group of order 4";
        add("c4", {{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}}, "cyclic group of order 4", n);
    }
    {
        CatalogNotes n;
        n.group = true;
        n.abelian = true;
        n.simple = false;
        n.plain = false;
        n.lagrangian = LagrangianClass::Lagrangian;
        n.nontrivial_subsystems = sets({ElemSet::of({1, 2}), ElemSet::of({1, 3}), ElemSet::of({1, 4})});
        n.normal_nontrivial = sets({ElemSet::of({1, 2}), ElemSet::of({1, 3}), ElemSet::of({1, 4})});
        n.structure = "Klein four-group";
        add("k4", {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}, "Klein four-group", n);
    }
    return cat;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = detail::build_catalog();
    return cat;
}

inline const CatalogEntry& catalog_get(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return e;
    std::string ids;
    for (const CatalogEntry& e : catalog()) ids += (ids.empty() ? "" : ", ") + e.id;
    throw error(errc::unknown_id, "no catalog table '" + id + "'; valid ids: " + ids);
}

}  // namespace loopkit
