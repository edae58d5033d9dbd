#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/iso.hpp"

namespace loopkit {

// Generating pair for block products: an outer table (E, *) of order k and
// k*k local operations phi_pq on a common carrier C of order m, stored
// p-major (p outer, q inner). Every phi_pq must be at least a quasigroup;
// two local operations are equal exactly when their tables are identical.
class MultiPhiSystem {
public:
    MultiPhiSystem(CayleyTable e_table, std::vector<CayleyTable> phi, std::string name = "")
        : e_(std::move(e_table)), phi_(std::move(phi)), name_(std::move(name)) {
        int k = e_.order();
        if (static_cast<int>(phi_.size()) != k * k)
            throw error(errc::shape_mismatch, "expected " + std::to_string(k * k) + " local tables, got " +
                                                  std::to_string(phi_.size()));
        int m = phi_.front().order();
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q) {
                const CayleyTable& f = phi_at(p, q);
                if (f.order() != m)
                    throw error(errc::shape_mismatch, "local table (" + std::to_string(p) + "," + std::to_string(q) +
                                                          ") has order " + std::to_string(f.order()) +
                                                          ", expected " + std::to_string(m));
                if (!is_latin(f))
                    throw error(errc::phi_not_quasigroup, "local table (" + std::to_string(p) + "," +
                                                              std::to_string(q) + ") is not a quasigroup");
            }
        if (!is_latin(e_))
            throw error(errc::phi_not_quasigroup, "outer table is not a quasigroup");
    }

    int k() const { return e_.order(); }
    int m() const { return phi_.front().order(); }
    const CayleyTable& e_table() const { return e_; }
    const CayleyTable& phi_at(int p, int q) const {
        return phi_[static_cast<std::size_t>(p - 1) * k() + (q - 1)];
    }
    const std::vector<CayleyTable>& phi() const { return phi_; }
    const std::string& name() const { return name_; }

    bool is_mono_phi() const {
        for (std::size_t i = 1; i < phi_.size(); ++i)
            if (!(phi_[i] == phi_.front())) return false;
        return true;
    }

private:
    CayleyTable e_;
    std::vector<CayleyTable> phi_;
    std::string name_;
};

// Pair (e_p, c_a) <-> flat index m(p-1)+a. Paper-style tables of products
// then match built products entry for entry.
inline int pair_index(int p, int a, int m) { return m * (p - 1) + a; }

// Composition rule: (e_p, c_a) o (e_q, c_b) = (e_p * e_q, c_a phi_pq c_b),
// flattened by pair_index. The result of quasigroup-valid generators is
// itself a quasigroup.
inline CayleyTable block_product(const MultiPhiSystem& mp, std::string name = "") {
    int k = mp.k(), m = mp.m();
    int n = k * m;
    if (n > ElemSet::max_order)
        throw error(errc::unsupported_order,
                    "product order " + std::to_string(n) + " exceeds supported maximum " +
                        std::to_string(ElemSet::max_order));
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
    for (int p = 1; p <= k; ++p)
        for (int a = 1; a <= m; ++a)
            for (int q = 1; q <= k; ++q)
                for (int b = 1; b <= m; ++b) {
                    int e = mp.e_table().at(p, q);
                    int c = mp.phi_at(p, q).at(a, b);
                    entries[static_cast<std::size_t>(pair_index(p, a, m) - 1) * n + (pair_index(q, b, m) - 1)] =
                        static_cast<std::uint8_t>(pair_index(e, c, m));
                }
    return CayleyTable(n, std::move(entries), std::move(name));
}

// Block product in which every local operation is the same table.
inline MultiPhiSystem mono_phi(const CayleyTable& e, const CayleyTable& c, std::string name = "") {
    std::vector<CayleyTable> phi(static_cast<std::size_t>(e.order()) * e.order(), c);
    return MultiPhiSystem(e, std::move(phi), std::move(name));
}

inline CayleyTable direct_product(const CayleyTable& e, const CayleyTable& c, std::string name = "") {
    if (name.empty() && !e.name().empty() && !c.name().empty()) name = e.name() + " x " + c.name();
    return block_product(mono_phi(e, c), std::move(name));
}

enum class PhiType { TypeA, TypeB, Irregular };

inline const char* to_string(PhiType t) {
    switch (t) {
        case PhiType::TypeA: return "TypeA";
        case PhiType::TypeB: return "TypeB";
        case PhiType::Irregular: return "Irregular";
    }
    return "?";
}

// TypeA: one element is a two-sided identity in every local table.
// TypeB: no common identity, but every local table is a loop of its own.
// Irregular: some local table has no identity at all.
inline PhiType classify_phi_type(const MultiPhiSystem& mp) {
    ElemSet common = ElemSet::full(mp.m());
    bool all_loops = true;
    for (int p = 1; p <= mp.k(); ++p)
        for (int q = 1; q <= mp.k(); ++q) {
            auto ids = identity_info(mp.phi_at(p, q));
            if (!ids.two_sided_identity) {
                all_loops = false;
                common = ElemSet{};
            } else {
                common = common & ElemSet::single(*ids.two_sided_identity);
            }
        }
    if (!common.empty()) return PhiType::TypeA;
    return all_loops ? PhiType::TypeB : PhiType::Irregular;
}

struct GeneratorViolation {
    std::string clause;  // "outer-invertible", "local-identity", "inverse-pairing"
    int p = 0, q = 0;
    std::string detail;
};

// How an outer-inverse pair (p, q) satisfied the inverse condition. Both
// inverse-map orientations are computed since the condition admits a
// mirrored reading; either suffices.
struct InversePairingReport {
    int p = 0, q = 0;
    bool tables_equal = false;
    bool stated_orientation = false;   // left-inverse map of phi_pq == right-inverse map of phi_qp
    bool mirrored_orientation = false; // right-inverse map of phi_pq == left-inverse map of phi_qp
};

struct GeneratorValidation {
    bool ok = true;
    std::vector<GeneratorViolation> violations;
    std::vector<InversePairingReport> pairings;
};

namespace detail {

// Left/right inverse maps of a quasigroup with two-sided identity e:
// lambda(c) solves y phi c = e, rho(c) solves c phi y = e.
inline std::pair<std::vector<int>, std::vector<int>> inverse_maps(const CayleyTable& t, int e) {
    int m = t.order();
    std::vector<int> lambda(static_cast<std::size_t>(m) + 1, 0), rho(static_cast<std::size_t>(m) + 1, 0);
    for (int c = 1; c <= m; ++c)
        for (int y = 1; y <= m; ++y) {
            if (t.at(y, c) == e) lambda[static_cast<std::size_t>(c)] = y;
            if (t.at(c, y) == e) rho[static_cast<std::size_t>(c)] = y;
        }
    return {lambda, rho};
}

}  // namespace detail

// Necessary conditions on a generating pair whose coset product is an
// invertible loop: the outer table is an invertible loop; c_1 is a right
// identity in every phi_p1, a left identity in every phi_1q, and a two-sided
// identity in phi_11; and for outer-inverse index pairs p, q != 1 the local
// tables phi_pq, phi_qp are loops with common identity c_1 and either equal
// or with matching inverse maps (the left-inverse map of one equal to the
// right-inverse map of the other; both orientations are checked and reported).
inline GeneratorValidation validate_generators(const MultiPhiSystem& mp) {
    GeneratorValidation res;
    auto fail = [&](std::string clause, int p, int q, std::string detail) {
        res.ok = false;
        res.violations.push_back({std::move(clause), p, q, std::move(detail)});
    };

    if (!is_invertible_loop(mp.e_table()))
        fail("outer-invertible", 0, 0, "outer table is not an invertible loop");

    int k = mp.k(), m = mp.m();
    for (int x = 1; x <= k; ++x) {
        const CayleyTable& right = mp.phi_at(x, 1);
        for (int c = 1; c <= m; ++c)
            if (right.at(c, 1) != c) {
                fail("local-identity", x, 1, "c1 is not a right identity");
                break;
            }
        const CayleyTable& left = mp.phi_at(1, x);
        for (int c = 1; c <= m; ++c)
            if (left.at(1, c) != c) {
                fail("local-identity", 1, x, "c1 is not a left identity");
                break;
            }
    }
    {
        auto ids = identity_info(mp.phi_at(1, 1));
        if (!ids.two_sided_identity || *ids.two_sided_identity != 1)
            fail("local-identity", 1, 1, "c1 is not a two-sided identity");
    }

    if (is_invertible_loop(mp.e_table())) {
        for (int p = 2; p <= k; ++p) {
            int q = 0;
            for (int y = 1; y <= k; ++y)
                if (mp.e_table().at(p, y) == 1) q = y;
            if (q < p) continue;  // the pair was handled from the other side
            bool identities_ok = true;
            for (auto [pp, qq] : std::initializer_list<std::pair<int, int>>{{p, q}, {q, p}}) {
                auto ids = identity_info(mp.phi_at(pp, qq));
                if (!ids.two_sided_identity || *ids.two_sided_identity != 1) {
                    fail("inverse-pairing", pp, qq, "local table lacks identity c1");
                    identities_ok = false;
                }
                if (p == q) break;
            }
            if (!identities_ok) continue;
            InversePairingReport rep;
            rep.p = p;
            rep.q = q;
            const CayleyTable& f = mp.phi_at(p, q);
            const CayleyTable& g = mp.phi_at(q, p);
            rep.tables_equal = f == g;
            auto [f_lambda, f_rho] = detail::inverse_maps(f, 1);
            auto [g_lambda, g_rho] = detail::inverse_maps(g, 1);
            rep.stated_orientation = f_lambda == g_rho;
            rep.mirrored_orientation = f_rho == g_lambda;
            res.pairings.push_back(rep);
            if (!rep.tables_equal && !rep.stated_orientation && !rep.mirrored_orientation)
                fail("inverse-pairing", p, q,
                     "local tables differ and neither inverse-map orientation matches");
        }
    }

    res.ok = res.violations.empty();
    return res;
}

// Constructive coset decomposition of a loop over a normal subloop H:
// cells ordered H-first then by smallest member, elements within a cell
// ascending; the outer table is the factor table and each local table is
// read off pointwise from the parent products.
struct CosetDecomposition {
    CayleyTable e_table;
    MultiPhiSystem multiphi;
    std::vector<int> relabeling;  // original element -> flat product index
    std::vector<ElemSet> cells;
    PhiType phi_type = PhiType::Irregular;
    bool is_mono_phi = false;  // under this canonical labeling only
};

inline CosetDecomposition decompose(const CayleyTable& t, ElemSet h) {
    NormalityResult nr = is_normal(t, h);
    if (!nr.normal)
        throw error(errc::not_normal, h.to_string() + " is not a normal subloop");
    const FactorSystem& fs = *nr.factor;
    int k = static_cast<int>(fs.cells.size());
    int m = h.size();
    if (k * m != t.order())
        throw error(errc::order_mismatch, "cells do not tile the carrier");

    std::vector<std::vector<int>> cell_elems;
    cell_elems.reserve(static_cast<std::size_t>(k));
    for (const ElemSet& c : fs.cells) {
        if (c.size() != m) throw error(errc::order_mismatch, "coset " + c.to_string() + " has wrong size");
        cell_elems.push_back(c.elements());
    }

    // c-index of each element within its (sorted) cell.
    std::vector<int> cell_of(static_cast<std::size_t>(t.order()) + 1, 0);
    std::vector<int> pos_in_cell(static_cast<std::size_t>(t.order()) + 1, 0);
    for (int p = 1; p <= k; ++p)
        for (int a = 1; a <= m; ++a) {
            int e = cell_elems[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a - 1)];
            cell_of[static_cast<std::size_t>(e)] = p;
            pos_in_cell[static_cast<std::size_t>(e)] = a;
        }

    const CayleyTable& factor = *fs.table;
    std::vector<CayleyTable> phi;
    phi.reserve(static_cast<std::size_t>(k) * k);
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= k; ++q) {
            int r = factor.at(p, q);
            std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * m);
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= m; ++b) {
                    int prod = t.at(cell_elems[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(a - 1)],
                                    cell_elems[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(b - 1)]);
                    if (cell_of[static_cast<std::size_t>(prod)] != r)
                        throw error(errc::inconsistent_decomposition, "product escaped its target coset");
                    entries[static_cast<std::size_t>(a - 1) * m + (b - 1)] =
                        static_cast<std::uint8_t>(pos_in_cell[static_cast<std::size_t>(prod)]);
                }
            phi.emplace_back(m, std::move(entries));
        }

    std::vector<int> relabeling(static_cast<std::size_t>(t.order()));
    for (int e = 1; e <= t.order(); ++e)
        relabeling[static_cast<std::size_t>(e) - 1] =
            pair_index(cell_of[static_cast<std::size_t>(e)], pos_in_cell[static_cast<std::size_t>(e)], m);

    MultiPhiSystem mp(factor, std::move(phi), t.name().empty() ? "" : t.name() + " mod " + h.to_string());
    PhiType type = classify_phi_type(mp);
    bool mono = mp.is_mono_phi();
    return CosetDecomposition{factor, std::move(mp), std::move(relabeling), fs.cells, type, mono};
}

// Rebuilds the original table: block product of the multi-phi system, pulled
// back through the relabeling. Bit-exact against the decomposed table.
inline CayleyTable recompose(const CosetDecomposition& d, std::string name = "") {
    CayleyTable bp = block_product(d.multiphi);
    int n = bp.order();
    if (static_cast<int>(d.relabeling.size()) != n)
        throw error(errc::inconsistent_decomposition, "relabeling covers " + std::to_string(d.relabeling.size()) +
                                                          " of " + std::to_string(n) + " elements");
    std::vector<int> inverse(static_cast<std::size_t>(n) + 1, 0);
    for (int e = 1; e <= n; ++e) {
        int h = d.relabeling[static_cast<std::size_t>(e) - 1];
        if (h < 1 || h > n || inverse[static_cast<std::size_t>(h)])
            throw error(errc::inconsistent_decomposition, "relabeling is not a permutation");
        inverse[static_cast<std::size_t>(h)] = e;
    }
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            int hx = d.relabeling[static_cast<std::size_t>(x) - 1];
            int hy = d.relabeling[static_cast<std::size_t>(y) - 1];
            entries[static_cast<std::size_t>(x - 1) * n + (y - 1)] =
                static_cast<std::uint8_t>(inverse[static_cast<std::size_t>(bp.at(hx, hy))]);
        }
    return CayleyTable(n, std::move(entries), std::move(name));
}

// Multi-phi file (".mphi"): '#' comments; first line "k m"; then the k-by-k
// outer table; then k*k blocks of m rows, ordered phi_11, phi_12, ..., phi_1k,
// phi_21, ..., phi_kk. All entries 1-based.
inline MultiPhiSystem parse_multiphi(std::istream& in) {
    detail::TableLexer lex(in);
    auto next_int = [&](const char* what) {
        detail::Token tok = lex.next();
        if (tok.eof) throw error(errc::not_square, std::string("multi-phi source ended while reading ") + what);
        int v = 0;
        if (!detail::parse_int(tok.text, v))
            throw error(errc::not_square, "non-integer token '" + tok.text + "' while reading " + what);
        return v;
    };

    detail::Token first = lex.next();
    if (first.eof) throw error(errc::empty_input, "no tokens in multi-phi source");
    int k = 0;
    if (!detail::parse_int(first.text, k) || k < 1)
        throw error(errc::bad_header, "expected positive outer order, got '" + first.text + "'");
    int m = next_int("inner order");
    if (m < 1) throw error(errc::bad_header, "inner order must be positive");
    if (k * m > ElemSet::max_order)
        throw error(errc::bad_header, "product order " + std::to_string(k * m) + " exceeds supported maximum " +
                                          std::to_string(ElemSet::max_order));

    auto read_table = [&](int order, const std::string& what) {
        std::vector<std::uint8_t> entries;
        entries.reserve(static_cast<std::size_t>(order) * order);
        for (int i = 1; i <= order; ++i)
            for (int j = 1; j <= order; ++j) {
                int v = next_int(what.c_str());
                if (v < 1 || v > order)
                    throw error(errc::entry_out_of_range, what + ": entry at row " + std::to_string(i) +
                                                              ", column " + std::to_string(j) + " is " +
                                                              std::to_string(v));
                entries.push_back(static_cast<std::uint8_t>(v));
            }
        return CayleyTable(order, std::move(entries));
    };

    CayleyTable e = read_table(k, "outer table");
    std::vector<CayleyTable> phi;
    phi.reserve(static_cast<std::size_t>(k) * k);
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= k; ++q)
            phi.push_back(read_table(m, "local table (" + std::to_string(p) + "," + std::to_string(q) + ")"));
    detail::Token tail = lex.next();
    if (!tail.eof) throw error(errc::not_square, "trailing token '" + tail.text + "' in multi-phi source");
    return MultiPhiSystem(std::move(e), std::move(phi), lex.name());
}

inline MultiPhiSystem parse_multiphi(const std::string& text) {
    std::istringstream is(text);
    return parse_multiphi(is);
}

inline void serialize_multiphi(const MultiPhiSystem& mp, std::ostream& out) {
    out << "# " << (mp.name().empty() ? std::string("unnamed") : mp.name()) << '\n';
    out << mp.k() << ' ' << mp.m() << '\n';
    for (int i = 1; i <= mp.k(); ++i) {
        for (int j = 1; j <= mp.k(); ++j) out << (j > 1 ? " " : "") << mp.e_table().at(i, j);
        out << '\n';
    }
    for (int p = 1; p <= mp.k(); ++p)
        for (int q = 1; q <= mp.k(); ++q) {
            out << "# phi " << p << ' ' << q << '\n';
            const CayleyTable& f = mp.phi_at(p, q);
            for (int i = 1; i <= mp.m(); ++i) {
                for (int j = 1; j <= mp.m(); ++j) out << (j > 1 ? " " : "") << f.at(i, j);
                out << '\n';
            }
        }
}

inline std::string serialize_multiphi(const MultiPhiSystem& mp) {
    std::ostringstream os;
    serialize_multiphi(mp, os);
    return os.str();
}

}  // namespace loopkit
