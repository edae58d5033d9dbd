#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopkit/catalog.hpp"
#include "loopkit/products.hpp"

namespace loopkit {

struct NormalityEntry {
    ElemSet subsystem;
    bool partitions = false;
    bool normal = false;
    std::optional<CellConflict> witness;
};

struct DecompositionSummary {
    ElemSet subloop;
    int k = 0, m = 0;
    bool mono_phi = false;
    PhiType phi_type = PhiType::Irregular;
};

// Everything the pipeline can derive from one table. Fields that require a
// loop (or an invertible loop) stay empty for weaker systems.
struct AnalysisReport {
    std::string source_name;
    int order = 0;
    AxiomProfile profile;
    ElementIdentityInfo identities;
    std::vector<InverseInfo> inverses;
    std::optional<SubsystemReport> subsystem_report;
    std::vector<NormalityEntry> normality;  // nontrivial proper subsystems only
    std::optional<NucleusReport> nucleus_report;
    std::optional<bool> simple;
    std::optional<bool> plain;
    bool nafil = false;
    std::vector<DecompositionSummary> decompositions;
};

inline AnalysisReport analyze(const CayleyTable& t) {
    AnalysisReport rep;
    rep.source_name = t.name();
    rep.order = t.order();
    rep.profile = axiom_profile(t);
    rep.identities = identity_info(t);
    if (rep.identities.two_sided_identity)
        for (int x = 1; x <= t.order(); ++x) rep.inverses.push_back(inverse_info(t, x));

    bool loop = rep.profile.a4 && rep.profile.a2;
    bool invertible = loop && rep.profile.a3;
    rep.nafil = invertible && !rep.profile.a6;

    if (loop) {
        rep.subsystem_report = subsystems(t);
        rep.nucleus_report = nuclei(t);
        for (const Subsystem* s : rep.subsystem_report->nontrivial_proper()) {
            NormalityEntry entry;
            entry.subsystem = s->elements;
            NormalityResult nr = is_normal(t, s->elements);
            entry.partitions = nr.partition.partitions;
            entry.normal = nr.normal;
            if (nr.factor && nr.factor->witness) entry.witness = nr.factor->witness;
            rep.normality.push_back(entry);
            if (nr.normal) {
                CosetDecomposition d = decompose(t, s->elements);
                rep.decompositions.push_back(
                    {s->elements, d.multiphi.k(), d.multiphi.m(), d.is_mono_phi, d.phi_type});
            }
        }
    }
    if (invertible) {
        rep.simple = true;
        for (const NormalityEntry& e : rep.normality)
            if (e.normal) rep.simple = false;
        rep.plain = rep.normality.empty();
    }
    return rep;
}

namespace detail {

inline nlohmann::json json_set(ElemSet s) { return nlohmann::json(s.elements()); }

}  // namespace detail

inline nlohmann::json to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json j;
    j["source"] = r.source_name;
    j["order"] = r.order;
    j["axioms"] = {{"a1", r.profile.a1}, {"a2", r.profile.a2}, {"a3", r.profile.a3},
                   {"a4", r.profile.a4}, {"a5", r.profile.a5}, {"a6", r.profile.a6}};
    j["classification"] = r.profile.name;
    j["axiom_type"] = r.profile.axiom_type;
    j["label"] = r.profile.label;
    j["abelian"] = r.profile.a5;
    j["nafil"] = r.nafil;

    json w;
    w["a4"] = nullptr;
    if (r.profile.witness_a4)
        w["a4"] = {{"a", r.profile.witness_a4->a},
                   {"b", r.profile.witness_a4->b},
                   {"side", std::string(1, r.profile.witness_a4->side)}};
    w["a5"] = nullptr;
    if (r.profile.witness_a5) w["a5"] = {r.profile.witness_a5->first, r.profile.witness_a5->second};
    w["a6"] = nullptr;
    if (r.profile.witness_a6)
        w["a6"] = {(*r.profile.witness_a6)[0], (*r.profile.witness_a6)[1], (*r.profile.witness_a6)[2]};
    j["witnesses"] = w;

    json ident;
    ident["left"] = detail::json_set(r.identities.left_identities);
    ident["right"] = detail::json_set(r.identities.right_identities);
    ident["two_sided"] = nullptr;
    if (r.identities.two_sided_identity) ident["two_sided"] = *r.identities.two_sided_identity;
    j["identity"] = ident;

    j["inverses"] = json::array();
    for (const InverseInfo& inv : r.inverses) {
        json e;
        e["element"] = inv.element;
        e["left"] = inv.left_inverse ? json(*inv.left_inverse) : json(nullptr);
        e["right"] = inv.right_inverse ? json(*inv.right_inverse) : json(nullptr);
        e["two_sided"] = inv.two_sided ? json(*inv.two_sided) : json(nullptr);
        j["inverses"].push_back(e);
    }

    j["subsystems"] = nullptr;
    if (r.subsystem_report) {
        json sub;
        sub["parent_order"] = r.subsystem_report->parent_order;
        sub["lagrangian_class"] = to_string(r.subsystem_report->lagrangian_class);
        sub["items"] = json::array();
        for (const Subsystem& s : r.subsystem_report->subsystems) {
            json e;
            e["elements"] = detail::json_set(s.elements);
            e["order"] = s.order;
            e["label"] = s.label;
            e["is_group"] = s.is_group;
            e["is_divisor"] = s.is_divisor;
            e["trivial"] = s.trivial;
            e["improper"] = s.improper;
            e["normal"] = nullptr;
            for (const NormalityEntry& ne : r.normality)
                if (ne.subsystem == s.elements) e["normal"] = ne.normal;
            sub["items"].push_back(e);
        }
        j["subsystems"] = sub;
    }

    j["nuclei"] = nullptr;
    if (r.nucleus_report) {
        json nuc;
        nuc["left"] = detail::json_set(r.nucleus_report->left);
        nuc["middle"] = detail::json_set(r.nucleus_report->middle);
        nuc["right"] = detail::json_set(r.nucleus_report->right);
        nuc["nucleus"] = detail::json_set(r.nucleus_report->nucleus);
        nuc["center"] = detail::json_set(r.nucleus_report->center);
        j["nuclei"] = nuc;
    }

    j["simple"] = r.simple ? nlohmann::json(*r.simple) : nlohmann::json(nullptr);
    j["plain"] = r.plain ? nlohmann::json(*r.plain) : nlohmann::json(nullptr);

    j["decompositions"] = json::array();
    for (const DecompositionSummary& d : r.decompositions) {
        json e;
        e["subloop"] = detail::json_set(d.subloop);
        e["k"] = d.k;
        e["m"] = d.m;
        e["mono_phi"] = d.mono_phi;
        e["phi_type"] = to_string(d.phi_type);
        j["decompositions"].push_back(e);
    }
    return j;
}

inline void print_report(const AnalysisReport& r, std::ostream& out) {
    out << "table: " << (r.source_name.empty() ? "(unnamed)" : r.source_name) << "  order " << r.order << '\n';
    out << "classification: " << r.profile.label << '\n';
    if (r.profile.witness_a6) {
        auto [a, b, c] = *r.profile.witness_a6;
        out << "  associativity fails at (" << a << "," << b << "," << c << ")\n";
    }
    if (r.identities.two_sided_identity)
        out << "identity: " << *r.identities.two_sided_identity << '\n';
    else
        out << "identity: none (left " << r.identities.left_identities.to_string() << ", right "
            << r.identities.right_identities.to_string() << ")\n";
    if (r.subsystem_report) {
        auto nontrivial = r.subsystem_report->nontrivial_proper();
        out << "subsystems: " << nontrivial.size() << " nontrivial proper\n";
        for (const Subsystem* s : nontrivial) {
            out << "  " << s->elements.to_string() << "  order " << s->order << "  " << s->label
                << (s->is_divisor ? "  divisor" : "  non-divisor");
            for (const NormalityEntry& ne : r.normality)
                if (ne.subsystem == s->elements) out << (ne.normal ? "  normal" : "  not normal");
            out << '\n';
        }
        out << "lagrangian: " << to_string(r.subsystem_report->lagrangian_class) << '\n';
    }
    if (r.nucleus_report) out << "center: " << r.nucleus_report->center.to_string() << '\n';
    if (r.simple) out << "simple: " << (*r.simple ? "yes" : "no") << '\n';
    if (r.plain) out << "plain: " << (*r.plain ? "yes" : "no") << '\n';
    if (r.nafil) out << "nafil: yes\n";
    for (const DecompositionSummary& d : r.decompositions) {
        out << "decomposition over " << d.subloop.to_string() << ": k=" << d.k << " m=" << d.m
            << (d.mono_phi ? "  mono-phi (direct product)" : "  multi-phi") << "  " << to_string(d.phi_type)
            << '\n';
    }
}

// Table source syntax: a file path, "catalog:<id>", or "-" for a stream.
inline CayleyTable load_table(const std::string& source, std::istream& in = std::cin) {
    if (source == "-") return parse_table(in);
    if (source.rfind("catalog:", 0) == 0) return catalog_get(source.substr(8)).table;
    std::ifstream file(source);
    if (!file) throw error(errc::io_error, "cannot open '" + source + "'");
    CayleyTable t = parse_table(file);
    return t.name().empty() ? t.renamed(source) : t;
}

inline MultiPhiSystem load_multiphi(const std::string& source, std::istream& in = std::cin) {
    if (source == "-") return parse_multiphi(in);
    std::ifstream file(source);
    if (!file) throw error(errc::io_error, "cannot open '" + source + "'");
    return parse_multiphi(file);
}

}  // namespace loopkit
