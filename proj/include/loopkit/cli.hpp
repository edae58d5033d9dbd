#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopkit/loopkit.hpp"

namespace loopkit {

namespace cli_detail {

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    bool json = false;
    bool quiet = false;
};

inline void emit_json(Context& ctx, const nlohmann::json& j) { ctx.out << j.dump(2) << '\n'; }

inline nlohmann::json set_json(ElemSet s) { return nlohmann::json(s.elements()); }

inline void print_table_grid(Context& ctx, const CayleyTable& t) {
    int width = t.order() >= 10 ? 2 : 1;
    for (int i = 1; i <= t.order(); ++i) {
        std::string line;
        for (int j = 1; j <= t.order(); ++j) {
            std::string v = std::to_string(t.at(i, j));
            line += std::string(static_cast<std::size_t>(width) + 1 - v.size(), ' ') + v;
        }
        ctx.out << line.substr(1) << '\n';
    }
}

inline int cmd_analyze(Context& ctx, const std::string& src) {
    CayleyTable t = load_table(src, ctx.in);
    AnalysisReport rep = analyze(t);
    if (ctx.json)
        emit_json(ctx, to_json(rep));
    else
        print_report(rep, ctx.out);
    return 0;
}

inline int cmd_subsystems(Context& ctx, const std::string& src) {
    CayleyTable t = load_table(src, ctx.in);
    SubsystemReport rep = subsystems(t);
    if (ctx.json) {
        nlohmann::json j;
        j["parent_order"] = rep.parent_order;
        j["lagrangian_class"] = to_string(rep.lagrangian_class);
        j["subsystems"] = nlohmann::json::array();
        for (const Subsystem& s : rep.subsystems) {
            nlohmann::json e;
            e["elements"] = set_json(s.elements);
            e["order"] = s.order;
            e["label"] = s.label;
            e["is_group"] = s.is_group;
            e["is_divisor"] = s.is_divisor;
            e["trivial"] = s.trivial;
            e["improper"] = s.improper;
            j["subsystems"].push_back(e);
        }
        emit_json(ctx, j);
        return 0;
    }
    auto nontrivial = rep.nontrivial_proper();
    ctx.out << "order " << rep.parent_order << ": " << nontrivial.size() << " nontrivial proper subsystem"
            << (nontrivial.size() == 1 ? "" : "s") << '\n';
    for (const Subsystem* s : nontrivial)
        ctx.out << "  " << s->elements.to_string() << "  order " << s->order << "  " << s->label
                << (s->is_divisor ? "  divisor" : "  non-divisor") << '\n';
    ctx.out << "lagrangian: " << to_string(rep.lagrangian_class) << '\n';
    return 0;
}

inline int cmd_cosets(Context& ctx, const std::string& src, const std::string& subset, int rep_elem,
                      const std::string& side) {
    CayleyTable t = load_table(src, ctx.in);
    ElemSet h = ElemSet::parse_csv(subset, t.order());
    if (rep_elem != 0) {
        CosetSide s = side == "right" ? CosetSide::right : CosetSide::left;
        ElemSet c = coset(t, h, rep_elem, s);
        if (ctx.json) {
            nlohmann::json j;
            j["subsystem"] = set_json(h);
            j["representative"] = rep_elem;
            j["side"] = side;
            j["coset"] = set_json(c);
            emit_json(ctx, j);
        } else {
            ctx.out << c.to_string() << '\n';
        }
        return 0;
    }
    CosetPartitionResult pr = coset_partition(t, h);
    if (ctx.json) {
        nlohmann::json j;
        j["subsystem"] = set_json(h);
        j["cells"] = nlohmann::json::array();
        for (ElemSet c : pr.cells) j["cells"].push_back(set_json(c));
        j["partitions"] = pr.partitions;
        j["left_equals_right"] = pr.left_equals_right;
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "left cosets of " << h.to_string() << ":";
    for (ElemSet c : pr.cells) ctx.out << ' ' << c.to_string();
    ctx.out << '\n';
    ctx.out << "partition: " << (pr.partitions ? "yes" : "no") << "; left=right: "
            << (pr.left_equals_right ? "yes" : "no") << '\n';
    return 0;
}

inline nlohmann::json conflict_json(const CellConflict& w) {
    nlohmann::json j;
    j["cell_pair"] = {w.p, w.q};
    j["first"] = {{"x", w.x1}, {"y", w.y1}, {"product", w.p1}, {"cell", w.cell1}};
    j["second"] = {{"x", w.x2}, {"y", w.y2}, {"product", w.p2}, {"cell", w.cell2}};
    return j;
}

inline int cmd_normal(Context& ctx, const std::string& src, const std::string& subset) {
    CayleyTable t = load_table(src, ctx.in);
    ElemSet h = ElemSet::parse_csv(subset, t.order());
    NormalityResult nr = is_normal(t, h);
    if (ctx.json) {
        nlohmann::json j;
        j["subsystem"] = set_json(h);
        j["normal"] = nr.normal;
        j["partitions"] = nr.partition.partitions;
        j["witness"] = nullptr;
        if (nr.factor && nr.factor->witness) j["witness"] = conflict_json(*nr.factor->witness);
        j["factor"] = nullptr;
        if (nr.normal) {
            nlohmann::json f;
            f["order"] = nr.factor->table->order();
            f["cells"] = nlohmann::json::array();
            for (ElemSet c : nr.factor->cells) f["cells"].push_back(set_json(c));
            f["table"] = nr.factor->table->entries();
            j["factor"] = f;
        }
        emit_json(ctx, j);
        return 0;
    }
    if (nr.normal) {
        ctx.out << h.to_string() << ": normal; factor of order " << nr.factor->table->order() << '\n';
        if (!ctx.quiet) print_table_grid(ctx, *nr.factor->table);
        return 0;
    }
    ctx.out << h.to_string() << ": not normal";
    if (!nr.partition.partitions) {
        ctx.out << " (left cosets do not partition)\n";
    } else if (nr.factor && nr.factor->witness) {
        const CellConflict& w = *nr.factor->witness;
        ctx.out << "; witness " << w.x1 << "*" << w.y1 << "=" << w.p1 << " in "
                << nr.factor->cells[static_cast<std::size_t>(w.cell1 - 1)].to_string() << " vs " << w.x2 << "*"
                << w.y2 << "=" << w.p2 << " in "
                << nr.factor->cells[static_cast<std::size_t>(w.cell2 - 1)].to_string() << '\n';
    } else {
        ctx.out << " (cell table is not a loop)\n";
    }
    return 0;
}

inline int cmd_factor(Context& ctx, const std::string& src, const std::string& subset) {
    CayleyTable t = load_table(src, ctx.in);
    ElemSet h = ElemSet::parse_csv(subset, t.order());
    NormalityResult nr = is_normal(t, h);
    if (!nr.normal) throw error(errc::not_normal, h.to_string() + " is not a normal subloop");
    CayleyTable f = nr.factor->table->renamed("factor of " + (t.name().empty() ? std::string("table") : t.name()) +
                                              " over " + h.to_string());
    if (ctx.json) {
        nlohmann::json j;
        j["order"] = f.order();
        j["cells"] = nlohmann::json::array();
        for (ElemSet c : nr.factor->cells) j["cells"].push_back(set_json(c));
        j["table"] = f.entries();
        emit_json(ctx, j);
    } else {
        serialize_table(f, ctx.out);
    }
    return 0;
}

inline int cmd_center(Context& ctx, const std::string& src) {
    CayleyTable t = load_table(src, ctx.in);
    ElemSet z = center(t);
    if (ctx.json) {
        nlohmann::json j;
        j["center"] = set_json(z);
        emit_json(ctx, j);
    } else {
        ctx.out << z.to_string() << '\n';
    }
    return 0;
}

inline int cmd_nuclei(Context& ctx, const std::string& src) {
    CayleyTable t = load_table(src, ctx.in);
    NucleusReport rep = nuclei(t);
    if (ctx.json) {
        nlohmann::json j;
        j["left"] = set_json(rep.left);
        j["middle"] = set_json(rep.middle);
        j["right"] = set_json(rep.right);
        j["nucleus"] = set_json(rep.nucleus);
        j["center"] = set_json(rep.center);
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "left:    " << rep.left.to_string() << '\n'
            << "middle:  " << rep.middle.to_string() << '\n'
            << "right:   " << rep.right.to_string() << '\n'
            << "nucleus: " << rep.nucleus.to_string() << '\n'
            << "center:  " << rep.center.to_string() << '\n';
    return 0;
}

inline int cmd_series(Context& ctx, const std::string& src) {
    CayleyTable t = load_table(src, ctx.in);
    auto series = ascending_central_series(t);
    if (ctx.json) {
        nlohmann::json j = nlohmann::json::array();
        for (ElemSet z : series) j.push_back(set_json(z));
        emit_json(ctx, nlohmann::json{{"series", j}});
        return 0;
    }
    for (std::size_t i = 0; i < series.size(); ++i)
        ctx.out << "Z" << i << " = " << series[i].to_string() << '\n';
    return 0;
}

inline int cmd_iso(Context& ctx, const std::string& src_a, const std::string& src_b) {
    CayleyTable a = load_table(src_a, ctx.in);
    CayleyTable b = load_table(src_b, ctx.in);
    auto bij = are_isomorphic(a, b);
    if (ctx.json) {
        nlohmann::json j;
        j["isomorphic"] = bij.has_value();
        j["bijection"] = bij ? nlohmann::json(*bij) : nlohmann::json(nullptr);
        emit_json(ctx, j);
        return 0;
    }
    if (!bij) {
        ctx.out << "not isomorphic\n";
        return 0;
    }
    ctx.out << "isomorphic\n";
    if (!ctx.quiet) {
        for (std::size_t x = 0; x < bij->size(); ++x)
            ctx.out << (x + 1) << " -> " << (*bij)[x] << '\n';
    }
    return 0;
}

inline int cmd_product(Context& ctx, const std::string& direct_e, const std::string& direct_c,
                       const std::string& block_src) {
    if (!block_src.empty()) {
        MultiPhiSystem mp = load_multiphi(block_src, ctx.in);
        serialize_table(block_product(mp, mp.name().empty() ? "block product" : mp.name()), ctx.out);
        return 0;
    }
    CayleyTable e = load_table(direct_e, ctx.in);
    CayleyTable c = load_table(direct_c, ctx.in);
    serialize_table(direct_product(e, c), ctx.out);
    return 0;
}

inline int cmd_decompose(Context& ctx, const std::string& src, const std::string& subset) {
    CayleyTable t = load_table(src, ctx.in);
    ElemSet h = ElemSet::parse_csv(subset, t.order());
    CosetDecomposition d = decompose(t, h);
    if (ctx.json) {
        nlohmann::json j;
        j["k"] = d.multiphi.k();
        j["m"] = d.multiphi.m();
        j["mono_phi"] = d.is_mono_phi;
        j["phi_type"] = to_string(d.phi_type);
        j["cells"] = nlohmann::json::array();
        for (ElemSet c : d.cells) j["cells"].push_back(set_json(c));
        j["relabeling"] = d.relabeling;
        j["e_table"] = d.e_table.entries();
        j["phi"] = nlohmann::json::array();
        for (const CayleyTable& f : d.multiphi.phi()) j["phi"].push_back(f.entries());
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "# mono-phi: " << (d.is_mono_phi ? "yes" : "no (under the canonical cell labeling)") << '\n';
    ctx.out << "# phi-type: " << to_string(d.phi_type) << '\n';
    serialize_multiphi(d.multiphi, ctx.out);
    return 0;
}

inline int cmd_search(Context& ctx, SearchSpec spec, const std::string& emit_dir) {
    if (!emit_dir.empty()) {
        spec.mode = CensusMode::Emit;
        spec.emit_dir = emit_dir;
    }
    CensusResult r = enumerate_loops(spec);
    std::vector<std::string> files;
    if (spec.mode == CensusMode::Emit) files = write_census(r, spec.emit_dir);
    if (ctx.json) {
        nlohmann::json j;
        j["order"] = r.order;
        j["constraints"] = spec.constraints_text();
        j["count_up_to_isomorphism"] = r.count_up_to_isomorphism;
        j["raw_count"] = r.raw_count;
        j["wall_seconds"] = r.wall_seconds;
        if (spec.mode == CensusMode::Emit) j["files"] = files;
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << "order " << r.order << " [" << spec.constraints_text() << "]: "
            << r.count_up_to_isomorphism << " up to isomorphism (" << r.raw_count
            << " reduced tables) in " << r.wall_seconds << "s\n";
    if (spec.mode == CensusMode::Emit)
        ctx.out << "wrote " << files.size() << " tables to " << spec.emit_dir << '\n';
    return 0;
}

inline int cmd_catalog(Context& ctx, bool list, const std::string& id) {
    if (list) {
        if (ctx.json) {
            nlohmann::json j = nlohmann::json::array();
            for (const CatalogEntry& e : catalog())
                j.push_back({{"id", e.id}, {"order", e.table.order()}, {"source", e.source}});
            emit_json(ctx, j);
            return 0;
        }
        for (const CatalogEntry& e : catalog())
            ctx.out << e.id << "  (order " << e.table.order() << ")  " << e.source << '\n';
        return 0;
    }
    const CatalogEntry& e = catalog_get(id);
    if (ctx.json) {
        nlohmann::json j;
        j["id"] = e.id;
        j["order"] = e.table.order();
        j["source"] = e.source;
        j["structure"] = e.notes.structure;
        j["table"] = e.table.entries();
        emit_json(ctx, j);
        return 0;
    }
    ctx.out << e.id << ": " << e.source << '\n';
    if (!e.notes.structure.empty()) ctx.out << e.notes.structure << '\n';
    serialize_table(e.table, ctx.out);
    return 0;
}

}  // namespace cli_detail

// Entry point shared by the binary and the in-process CLI tests.
// Exit codes: 0 success, 2 input or usage error, 1 internal failure.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr,
                   std::istream& in = std::cin) {
    cli_detail::Context ctx{out, err, in};

    CLI::App app{"workbench for finite quasigroups and loops given as Cayley tables"};
    app.name("loopkit");
    app.add_flag("--json", ctx.json, "structured JSON output");
    app.add_flag("--quiet", ctx.quiet, "suppress secondary output");
    app.require_subcommand(1);
    app.fallthrough();

    std::string src, src_b, subset, side = "left", emit_dir, block_src, direct_e, direct_c, catalog_id;
    int rep_elem = 0;
    SearchSpec spec;
    std::string strategy = "row-major";

    auto* analyze_cmd = app.add_subcommand("analyze", "full structural report of a table");
    analyze_cmd->add_option("src", src, "table source: path, catalog:<id>, or -")->required();

    auto* subsystems_cmd = app.add_subcommand("subsystems", "subloop lattice and Lagrangian class");
    subsystems_cmd->add_option("src", src)->required();

    auto* cosets_cmd = app.add_subcommand("cosets", "cosets of a subsystem");
    cosets_cmd->add_option("src", src)->required();
    cosets_cmd->add_option("--subset", subset, "comma-separated 1-based elements")->required();
    cosets_cmd->add_option("--rep", rep_elem, "single representative");
    cosets_cmd->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));

    auto* normal_cmd = app.add_subcommand("normal", "normality test with factor or witness");
    normal_cmd->add_option("src", src)->required();
    normal_cmd->add_option("--subset", subset)->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor table over a normal subloop");
    factor_cmd->add_option("src", src)->required();
    factor_cmd->add_option("--subset", subset)->required();

    auto* center_cmd = app.add_subcommand("center", "center of a loop");
    center_cmd->add_option("src", src)->required();

    auto* nuclei_cmd = app.add_subcommand("nuclei", "left/middle/right nuclei, nucleus, center");
    nuclei_cmd->add_option("src", src)->required();

    auto* series_cmd = app.add_subcommand("series", "ascending central series");
    series_cmd->add_option("src", src)->required();

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test for two tables");
    iso_cmd->add_option("srcA", src)->required();
    iso_cmd->add_option("srcB", src_b)->required();

    auto* product_cmd = app.add_subcommand("product", "direct or block product");
    auto* direct_opt = product_cmd->add_option("--direct", direct_e, "outer table source")
                           ->expected(1);
    product_cmd->add_option("inner", direct_c, "inner table source (with --direct)");
    auto* block_opt = product_cmd->add_option("--block", block_src, "multi-phi (.mphi) source");
    direct_opt->excludes(block_opt);

    auto* decompose_cmd = app.add_subcommand("decompose", "coset decomposition over a normal subloop (.mphi)");
    decompose_cmd->add_option("src", src)->required();
    decompose_cmd->add_option("--subset", subset)->required();

    auto* search_cmd = app.add_subcommand("search", "exhaustive census of small-order loops");
    search_cmd->add_option("--order", spec.order, "order, 1..8")->required();
    search_cmd->add_flag("--invertible", spec.invertible, "require two-sided inverses");
    search_cmd->add_flag("--nafil", spec.nafil, "require a non-associative invertible loop");
    search_cmd->add_flag("--abelian", spec.abelian, "require commutativity");
    search_cmd->add_flag("--plain", spec.plain, "require no nontrivial subloop");
    search_cmd->add_flag("--composite", spec.composite, "require a nontrivial subloop");
    search_cmd->add_flag("--count", "count only (default)");
    search_cmd->add_option("--emit", emit_dir, "write representatives into this directory");
    search_cmd->add_option("--jobs", spec.job_count, "parallel jobs")->check(CLI::PositiveNumber);
    search_cmd->add_option("--strategy", strategy, "row-major|most-constrained")
        ->check(CLI::IsMember({"row-major", "most-constrained"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "embedded reference tables");
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalog ids");
    auto* catalog_show = catalog_cmd->add_subcommand("show", "print one catalog table");
    catalog_show->add_option("id", catalog_id)->required();
    catalog_cmd->require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.get_name()
            << " <analyze|subsystems|cosets|normal|factor|center|nuclei|series|iso|product|decompose|search|"
               "catalog> [options]; see --help\n";
        return 2;
    }

    try {
        using namespace cli_detail;
        if (*analyze_cmd) return cmd_analyze(ctx, src);
        if (*subsystems_cmd) return cmd_subsystems(ctx, src);
        if (*cosets_cmd) return cmd_cosets(ctx, src, subset, rep_elem, side);
        if (*normal_cmd) return cmd_normal(ctx, src, subset);
        if (*factor_cmd) return cmd_factor(ctx, src, subset);
        if (*center_cmd) return cmd_center(ctx, src);
        if (*nuclei_cmd) return cmd_nuclei(ctx, src);
        if (*series_cmd) return cmd_series(ctx, src);
        if (*iso_cmd) return cmd_iso(ctx, src, src_b);
        if (*product_cmd) {
            if (direct_opt->count() == 0 && block_opt->count() == 0)
                throw error(errc::invalid_search_spec, "product requires --direct <srcE> <srcC> or --block <file>");
            if (direct_opt->count() > 0 && direct_c.empty())
                throw error(errc::invalid_search_spec, "--direct needs a second (inner) table source");
            return cmd_product(ctx, direct_e, direct_c, block_src);
        }
        if (*decompose_cmd) return cmd_decompose(ctx, src, subset);
        if (*search_cmd) {
            if (strategy == "most-constrained") spec.strategy = FillStrategy::MostConstrained;
            return cmd_search(ctx, spec, emit_dir);
        }
        if (*catalog_cmd) return cmd_catalog(ctx, catalog_list->parsed(), catalog_id);
        err << "error: no subcommand\n";
        return 2;
    } catch (const loopkit::error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace loopkit
