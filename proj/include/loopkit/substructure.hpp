#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "loopkit/axioms.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

// Smallest superset of seed closed under the table operation.
inline ElemSet closure(const CayleyTable& t, ElemSet seed) {
    if (seed.empty()) throw error(errc::empty_seed, "closure of the empty set is undefined");
    if (!seed.is_subset_of(t.carrier()))
        throw error(errc::bad_subset, "seed contains elements outside 1.." + std::to_string(t.order()));

    ElemSet closed = seed;
    std::vector<int> worklist = seed.elements();
    std::vector<int> members = worklist;
    while (!worklist.empty()) {
        int x = worklist.back();
        worklist.pop_back();
        // Products of x against every current member, both orders.
        for (std::size_t i = 0; i < members.size(); ++i) {
            int y = members[i];
            for (int p : {t.at(x, y), t.at(y, x)}) {
                if (!closed.contains(p)) {
                    closed.add(p);
                    members.push_back(p);
                    worklist.push_back(p);
                }
            }
        }
    }
    return closed;
}

// True iff subset is nonempty and closed under the operation. For invertible
// loops closure alone makes the induced table a subloop; callers may assert
// the stronger profile but need not re-derive it here.
inline bool is_subsystem(const CayleyTable& t, ElemSet subset) {
    if (subset.empty() || !subset.is_subset_of(t.carrier())) return false;
    auto elems = subset.elements();
    for (int x : elems)
        for (int y : elems)
            if (!subset.contains(t.at(x, y))) return false;
    return true;
}

// Table induced on a closed subset, elements relabeled 1..m in ascending order.
inline CayleyTable induced_table(const CayleyTable& t, ElemSet subset, std::string name = "") {
    auto elems = subset.elements();
    int m = static_cast<int>(elems.size());
    std::vector<int> index(static_cast<std::size_t>(t.order()) + 1, 0);
    for (int i = 0; i < m; ++i) index[static_cast<std::size_t>(elems[i])] = i + 1;
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = t.at(elems[i], elems[j]);
            int rel = index[static_cast<std::size_t>(p)];
            if (rel == 0)
                throw error(errc::not_a_subsystem, "subset " + subset.to_string() + " is not closed");
            entries[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint8_t>(rel);
        }
    return CayleyTable(m, std::move(entries), std::move(name));
}

struct Subsystem {
    ElemSet elements;
    int order = 0;
    bool is_group = false;
    bool is_divisor = false;
    bool trivial = false;   // the one-element subsystem
    bool improper = false;  // the full carrier
    std::string label;      // classification of the induced table
};

enum class LagrangianClass { Lagrangian, NonLagrangian, AntiLagrangian, NoNontrivial };

inline const char* to_string(LagrangianClass c) {
    switch (c) {
        case LagrangianClass::Lagrangian: return "Lagrangian";
        case LagrangianClass::NonLagrangian: return "NonLagrangian";
        case LagrangianClass::AntiLagrangian: return "AntiLagrangian";
        case LagrangianClass::NoNontrivial: return "NoNontrivial";
    }
    return "?";
}

struct SubsystemReport {
    int parent_order = 0;
    std::vector<Subsystem> subsystems;  // sorted by (order, element list); includes trivial and improper
    LagrangianClass lagrangian_class = LagrangianClass::NoNontrivial;

    std::vector<const Subsystem*> nontrivial_proper() const {
        std::vector<const Subsystem*> out;
        for (const auto& s : subsystems)
            if (!s.trivial && !s.improper) out.push_back(&s);
        return out;
    }
};

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Classification convention: AntiLagrangian is reported only for composite
// parent orders, where a divisor-order nontrivial subsystem is arithmetically
// possible yet none exists. At prime order every nontrivial subsystem is a
// non-divisor by default, and such loops are reported NonLagrangian.
inline LagrangianClass classify_lagrangian(int n, const std::vector<int>& nontrivial_orders) {
    if (nontrivial_orders.empty()) return LagrangianClass::NoNontrivial;
    bool any_nondivisor = false, all_nondivisor = true;
    for (int m : nontrivial_orders) {
        if (n % m == 0)
            all_nondivisor = false;
        else
            any_nondivisor = true;
    }
    if (!any_nondivisor) return LagrangianClass::Lagrangian;
    if (all_nondivisor && !is_prime(n)) return LagrangianClass::AntiLagrangian;
    return LagrangianClass::NonLagrangian;
}

}  // namespace detail

// Complete subloop lattice of a loop. Starts from the identity's closure and
// grows each known subloop by one generator at a time; every subloop is
// reachable this way because a closed subset of a closed subset stays closed.
inline SubsystemReport subsystems(const CayleyTable& t) {
    if (!is_loop(t)) throw error(errc::not_a_loop, "subsystem lattice requires a loop (A1, A4, A2)");
    int n = t.order();
    int e = *identity_info(t).two_sided_identity;

    std::vector<ElemSet> found;
    std::vector<ElemSet> queue;
    ElemSet base = closure(t, ElemSet::single(e));  // always {e} in a loop
    found.push_back(base);
    queue.push_back(base);

    auto known = [&](ElemSet s) {
        return std::find(found.begin(), found.end(), s) != found.end();
    };

    while (!queue.empty()) {
        ElemSet h = queue.back();
        queue.pop_back();
        if (h.size() == n) continue;
        (t.carrier() - h).for_each([&](int x) {
            ElemSet grown = closure(t, h | ElemSet::single(x));
            if (!known(grown)) {
                found.push_back(grown);
                queue.push_back(grown);
            }
        });
    }

    SubsystemReport report;
    report.parent_order = n;
    std::sort(found.begin(), found.end(), ElemSet::lattice_less);
    std::vector<int> nontrivial_orders;
    for (ElemSet s : found) {
        Subsystem sub;
        sub.elements = s;
        sub.order = s.size();
        sub.trivial = sub.order == 1;
        sub.improper = sub.order == n;
        sub.is_divisor = n % sub.order == 0;
        auto profile = axiom_profile(induced_table(t, s));
        sub.label = profile.name;
        sub.is_group = profile.name == "group";
        if (!sub.trivial && !sub.improper) nontrivial_orders.push_back(sub.order);
        report.subsystems.push_back(std::move(sub));
    }
    report.lagrangian_class = detail::classify_lagrangian(n, nontrivial_orders);
    return report;
}

inline LagrangianClass lagrangian_class(const CayleyTable& t) { return subsystems(t).lagrangian_class; }

}  // namespace loopkit
