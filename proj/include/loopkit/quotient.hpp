#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/substructure.hpp"

namespace loopkit {

enum class CosetSide { left, right };

// aH or Ha for a subsystem H. Size |H| whenever the table satisfies A4.
inline ElemSet coset(const CayleyTable& t, ElemSet h, int a, CosetSide side) {
    if (!is_subsystem(t, h))
        throw error(errc::not_a_subsystem, h.to_string() + " is not closed under the operation");
    if (a < 1 || a > t.order())
        throw error(errc::bad_subset, "representative " + std::to_string(a) + " outside 1.." + std::to_string(t.order()));
    ElemSet out;
    h.for_each([&](int x) { out.add(side == CosetSide::left ? t.at(a, x) : t.at(x, a)); });
    return out;
}

struct CosetPartitionResult {
    ElemSet subsystem;
    std::vector<ElemSet> cells;  // distinct left cosets; cells[0] is H itself
    bool partitions = false;     // pairwise disjoint (and then they cover 1..n)
    bool left_equals_right = false;
    // On failure: representative a and side. side 'o' marks overlapping left
    // cosets for representative a; side 'r' marks aH != Ha.
    std::optional<std::pair<int, char>> witness;
};

inline CosetPartitionResult coset_partition(const CayleyTable& t, ElemSet h) {
    if (!is_subsystem(t, h))
        throw error(errc::not_a_subsystem, h.to_string() + " is not closed under the operation");
    CosetPartitionResult res;
    res.subsystem = h;
    int n = t.order();

    // H itself leads the cell list; remaining cells appear by smallest
    // uncovered representative, which sorts them by smallest member whenever
    // the cosets are disjoint.
    ElemSet covered = h;
    res.cells.push_back(h);
    res.partitions = true;
    for (int a = 1; a <= n; ++a) {
        ElemSet c = coset(t, h, a, CosetSide::left);
        bool seen = false;
        for (ElemSet cell : res.cells)
            if (cell == c) {
                seen = true;
                break;
            }
        if (seen) continue;
        if (res.partitions && !(covered & c).empty()) {
            res.partitions = false;
            if (!res.witness) res.witness = {a, 'o'};
        }
        covered = covered | c;
        res.cells.push_back(c);
    }

    res.left_equals_right = true;
    for (int a = 1; a <= n && res.left_equals_right; ++a) {
        if (coset(t, h, a, CosetSide::left) != coset(t, h, a, CosetSide::right)) {
            res.left_equals_right = false;
            if (!res.witness) res.witness = {a, 'r'};
        }
    }
    return res;
}

// Two products from one cell pair that land in different cells.
struct CellConflict {
    int p = 0, q = 0;            // 1-based cell indices of the offending pair
    int x1 = 0, y1 = 0, p1 = 0;  // x1*y1 = p1, in cell1
    int x2 = 0, y2 = 0, p2 = 0;  // x2*y2 = p2, in cell2 != cell1
    int cell1 = 0, cell2 = 0;
};

struct FactorSystem {
    std::vector<ElemSet> cells;  // B1 contains the identity; rest ordered by smallest member
    bool well_defined = false;
    std::optional<CayleyTable> table;  // k-by-k cell table, present iff well_defined
    std::optional<CellConflict> witness;
};

struct NormalityResult {
    bool normal = false;
    CosetPartitionResult partition;
    std::optional<FactorSystem> factor;  // present iff the cosets partition
};

namespace detail {

inline int cell_of(const std::vector<ElemSet>& cells, int element) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].contains(element)) return static_cast<int>(i) + 1;
    return 0;
}

}  // namespace detail

// Normality pipeline, staged exactly as defined for loops: (1) the left
// cosets of H must partition the carrier, (2) cell multiplication must be
// well defined for every cell pair, (3) the induced cell table must be a
// loop. No shortcut via left-coset/right-coset equality is taken; that
// condition is sufficient only in the associative case.
inline NormalityResult is_normal(const CayleyTable& t, ElemSet h) {
    NormalityResult res;
    res.partition = coset_partition(t, h);
    if (!res.partition.partitions) return res;

    FactorSystem fs;
    fs.cells = res.partition.cells;
    int k = static_cast<int>(fs.cells.size());

    std::vector<int> cell_index(static_cast<std::size_t>(t.order()) + 1, 0);
    for (int c = 1; c <= k; ++c)
        fs.cells[static_cast<std::size_t>(c - 1)].for_each(
            [&](int e) { cell_index[static_cast<std::size_t>(e)] = c; });

    std::vector<std::uint8_t> cell_table(static_cast<std::size_t>(k) * k, 0);
    fs.well_defined = true;
    for (int p = 1; p <= k && fs.well_defined; ++p) {
        for (int q = 1; q <= k && fs.well_defined; ++q) {
            int expected = 0;
            int prev_x = 0, prev_y = 0, prev_prod = 0;
            for (int x : fs.cells[static_cast<std::size_t>(p - 1)].elements()) {
                for (int y : fs.cells[static_cast<std::size_t>(q - 1)].elements()) {
                    int prod = t.at(x, y);
                    int c = cell_index[static_cast<std::size_t>(prod)];
                    if (expected == 0) {
                        expected = c;
                    } else if (c != expected) {
                        fs.well_defined = false;
                        CellConflict w;
                        w.p = p;
                        w.q = q;
                        w.x1 = prev_x;
                        w.y1 = prev_y;
                        w.p1 = prev_prod;
                        w.cell1 = cell_index[static_cast<std::size_t>(prev_prod)];
                        w.x2 = x;
                        w.y2 = y;
                        w.p2 = prod;
                        w.cell2 = c;
                        fs.witness = w;
                        break;
                    }
                    prev_x = x;
                    prev_y = y;
                    prev_prod = prod;
                }
                if (!fs.well_defined) break;
            }
            if (fs.well_defined) cell_table[static_cast<std::size_t>(p - 1) * k + (q - 1)] = static_cast<std::uint8_t>(expected);
        }
    }

    if (fs.well_defined) {
        CayleyTable factor(k, std::move(cell_table), t.name().empty() ? "factor" : t.name() + "/" + h.to_string());
        res.normal = is_loop(factor);
        fs.table = std::move(factor);
    }
    res.factor = std::move(fs);
    return res;
}

struct NucleusReport {
    ElemSet left, middle, right;
    ElemSet nucleus;  // intersection of the three
    ElemSet center;   // nucleus elements commuting with everything
};

inline NucleusReport nuclei(const CayleyTable& t) {
    if (!is_loop(t)) throw error(errc::not_a_loop, "nuclei are defined for loops");
    int n = t.order();
    NucleusReport rep;
    for (int a = 1; a <= n; ++a) {
        bool left = true, middle = true, right = true;
        for (int x = 1; x <= n && (left || middle || right); ++x)
            for (int y = 1; y <= n && (left || middle || right); ++y) {
                if (left && t.at(a, t.at(x, y)) != t.at(t.at(a, x), y)) left = false;
                if (middle && t.at(x, t.at(a, y)) != t.at(t.at(x, a), y)) middle = false;
                if (right && t.at(x, t.at(y, a)) != t.at(t.at(x, y), a)) right = false;
            }
        if (left) rep.left.add(a);
        if (middle) rep.middle.add(a);
        if (right) rep.right.add(a);
    }
    rep.nucleus = rep.left & rep.middle & rep.right;
    rep.nucleus.for_each([&](int a) {
        for (int x = 1; x <= t.order(); ++x)
            if (t.at(a, x) != t.at(x, a)) return;
        rep.center.add(a);
    });
    return rep;
}

inline ElemSet center(const CayleyTable& t) { return nuclei(t).center; }

// No proper nontrivial normal subsystem.
inline bool is_simple(const CayleyTable& t) {
    if (!is_invertible_loop(t))
        throw error(errc::not_invertible_loop, "simplicity is defined for invertible loops");
    for (const Subsystem* s : subsystems(t).nontrivial_proper())
        if (is_normal(t, s->elements).normal) return false;
    return true;
}

// No nontrivial subsystem of any kind.
inline bool is_plain(const CayleyTable& t) {
    if (!is_invertible_loop(t))
        throw error(errc::not_invertible_loop, "plainness is defined for invertible loops");
    return subsystems(t).nontrivial_proper().empty();
}

struct HomomorphismCheck {
    bool ok = false;
    std::optional<std::pair<int, int>> witness;  // first (a, b) with theta(a*b) != theta(a) x theta(b)
};

// map is 1-based: map[i-1] is the image of element i.
inline HomomorphismCheck is_homomorphism(const CayleyTable& source, const CayleyTable& target,
                                         std::span<const int> map) {
    if (static_cast<int>(map.size()) != source.order())
        throw error(errc::bad_map_range, "map covers " + std::to_string(map.size()) + " elements, table has " +
                                             std::to_string(source.order()));
    for (int v : map)
        if (v < 1 || v > target.order())
            throw error(errc::bad_map_range, "image " + std::to_string(v) + " outside 1.." +
                                                 std::to_string(target.order()));
    HomomorphismCheck res;
    res.ok = true;
    int n = source.order();
    for (int a = 1; a <= n && res.ok; ++a)
        for (int b = 1; b <= n; ++b) {
            int lhs = map[static_cast<std::size_t>(source.at(a, b)) - 1];
            int rhs = target.at(map[static_cast<std::size_t>(a) - 1], map[static_cast<std::size_t>(b) - 1]);
            if (lhs != rhs) {
                res.ok = false;
                res.witness = {a, b};
                break;
            }
        }
    return res;
}

// Chain 1 = Z0 <= Z1 <= Z2 <= ... where Z1 is the center and each next term is
// the preimage of the center of the factor over the previous term. The list
// starts at {identity} and appends strictly growing terms until stable or full.
inline std::vector<ElemSet> ascending_central_series(const CayleyTable& t) {
    if (!is_invertible_loop(t))
        throw error(errc::not_invertible_loop, "central series is defined for invertible loops");
    int e = *identity_info(t).two_sided_identity;
    std::vector<ElemSet> series{ElemSet::single(e)};
    ElemSet z = series.back();
    for (;;) {
        ElemSet next;
        if (z.size() == 1) {
            next = center(t);
        } else {
            NormalityResult nr = is_normal(t, z);
            if (!nr.normal)
                throw error(errc::not_normal, "central series term " + z.to_string() + " is not normal");
            ElemSet factor_center = center(*nr.factor->table);
            factor_center.for_each([&](int cell) {
                next = next | nr.factor->cells[static_cast<std::size_t>(cell - 1)];
            });
        }
        if (next == z || next.size() <= z.size()) break;
        series.push_back(next);
        z = next;
        if (z.size() == t.order()) break;
    }
    return series;
}

}  // namespace loopkit
