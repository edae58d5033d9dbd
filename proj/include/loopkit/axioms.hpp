#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "loopkit/table.hpp"

namespace loopkit {

// Axiom vocabulary used throughout:
//   A1 closure, A2 two-sided identity, A3 unique two-sided inverses,
//   A4 unique solvability (Latin square), A5 commutativity, A6 associativity.

struct ElementIdentityInfo {
    ElemSet left_identities;
    ElemSet right_identities;
    std::optional<int> two_sided_identity;
};

inline ElementIdentityInfo identity_info(const CayleyTable& t) {
    ElementIdentityInfo info;
    int n = t.order();
    for (int e = 1; e <= n; ++e) {
        bool left = true, right = true;
        for (int x = 1; x <= n && (left || right); ++x) {
            if (t.at(e, x) != x) left = false;
            if (t.at(x, e) != x) right = false;
        }
        if (left) info.left_identities.add(e);
        if (right) info.right_identities.add(e);
    }
    ElemSet both = info.left_identities & info.right_identities;
    if (!both.empty()) info.two_sided_identity = both.smallest();
    return info;
}

struct InverseInfo {
    int element = 0;
    std::optional<int> left_inverse;   // unique y with y*x = e, when it exists
    std::optional<int> right_inverse;  // unique y with x*y = e
    std::optional<int> two_sided;      // set when both sides agree
};

// Requires a two-sided identity (A2).
inline InverseInfo inverse_info(const CayleyTable& t, int x) {
    auto ids = identity_info(t);
    if (!ids.two_sided_identity) throw error(errc::no_identity, "table has no two-sided identity");
    int e = *ids.two_sided_identity;
    int n = t.order();
    InverseInfo info;
    info.element = x;
    int left = 0, right = 0, left_count = 0, right_count = 0;
    for (int y = 1; y <= n; ++y) {
        if (t.at(y, x) == e) {
            left = y;
            ++left_count;
        }
        if (t.at(x, y) == e) {
            right = y;
            ++right_count;
        }
    }
    if (left_count == 1) info.left_inverse = left;
    if (right_count == 1) info.right_inverse = right;
    if (info.left_inverse && info.right_inverse && *info.left_inverse == *info.right_inverse)
        info.two_sided = *info.left_inverse;
    return info;
}

struct A4Witness {
    int a = 0;
    int b = 0;
    // 'r': a*x = b has no unique solution x; 'l': y*a = b has no unique solution y.
    char side = 'r';
};

struct AxiomProfile {
    bool a1 = false, a2 = false, a3 = false, a4 = false, a5 = false, a6 = false;
    std::optional<A4Witness> witness_a4;
    std::optional<std::pair<int, int>> witness_a5;
    std::optional<std::array<int, 3>> witness_a6;
    std::string name;        // "group", "NAFIL", "loop", "quasigroup", ...
    std::string axiom_type;  // e.g. "A[1,4,2,3](~A6)"
    std::string label;       // full text, e.g. "abelian NAFIL: A[1,4,2,3](~A6)"
};

namespace detail {

inline bool rows_and_columns_are_permutations(const CayleyTable& t, std::optional<A4Witness>& witness) {
    int n = t.order();
    bool ok = true;
    // Row scan: a duplicate in row a means some b has no x with a*x = b.
    for (int a = 1; a <= n && ok; ++a) {
        ElemSet seen;
        for (int j = 1; j <= n; ++j) seen.add(t.at(a, j));
        if (seen.size() != n) {
            int b = (ElemSet::full(n) - seen).smallest();
            witness = A4Witness{a, b, 'r'};
            ok = false;
        }
    }
    for (int a = 1; a <= n && ok; ++a) {
        ElemSet seen;
        for (int i = 1; i <= n; ++i) seen.add(t.at(i, a));
        if (seen.size() != n) {
            int b = (ElemSet::full(n) - seen).smallest();
            witness = A4Witness{a, b, 'l'};
            ok = false;
        }
    }
    return ok;
}

}  // namespace detail

inline AxiomProfile axiom_profile(const CayleyTable& t) {
    AxiomProfile p;
    int n = t.order();
    p.a1 = true;  // total table over 1..n; enforced at construction

    p.a4 = detail::rows_and_columns_are_permutations(t, p.witness_a4);

    auto ids = identity_info(t);
    p.a2 = ids.two_sided_identity.has_value();

    if (p.a2) {
        p.a3 = true;
        for (int x = 1; x <= n && p.a3; ++x) {
            InverseInfo inv = inverse_info(t, x);
            if (!inv.two_sided) p.a3 = false;
        }
    }

    p.a5 = true;
    for (int a = 1; a <= n && p.a5; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (t.at(a, b) != t.at(b, a)) {
                p.a5 = false;
                p.witness_a5 = {a, b};
                break;
            }

    p.a6 = true;
    for (int a = 1; a <= n && p.a6; ++a)
        for (int b = 1; b <= n && p.a6; ++b)
            for (int c = 1; c <= n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
                    p.a6 = false;
                    p.witness_a6 = {{a, b, c}};
                    break;
                }

    if (p.a4 && p.a2 && p.a3) {
        if (p.a6) {
            p.name = "group";
            p.axiom_type = "A[1,4,2,3,6]";
        } else {
            p.name = "NAFIL";
            p.axiom_type = "A[1,4,2,3](~A6)";
        }
    } else if (p.a4 && p.a2) {
        p.name = "loop";
        p.axiom_type = "A[1,4,2]";
    } else if (p.a4) {
        p.name = "quasigroup";
        p.axiom_type = "A[1,4]";
    } else if (p.a6 && p.a2) {
        p.name = "monoid";
        p.axiom_type = "A[1,6,2]";
    } else if (p.a6) {
        p.name = "semigroup";
        p.axiom_type = "A[1,6]";
    } else {
        p.name = "groupoid";
        p.axiom_type = "A[1]";
    }
    p.label = (p.a5 ? "abelian " : "") + p.name + ": " + p.axiom_type;
    return p;
}

// Cheap single-axiom checks; used on hot paths where the full profile is overkill.

inline bool is_latin(const CayleyTable& t) {
    std::optional<A4Witness> w;
    return detail::rows_and_columns_are_permutations(t, w);
}

inline bool is_loop(const CayleyTable& t) {
    return is_latin(t) && identity_info(t).two_sided_identity.has_value();
}

inline bool is_invertible_loop(const CayleyTable& t) {
    if (!is_loop(t)) return false;
    int n = t.order();
    int e = *identity_info(t).two_sided_identity;
    for (int x = 1; x <= n; ++x) {
        int left = 0, right = 0;
        for (int y = 1; y <= n; ++y) {
            if (t.at(y, x) == e) left = y;
            if (t.at(x, y) == e) right = y;
        }
        if (left != right) return false;
    }
    return true;
}

inline bool is_associative(const CayleyTable& t) {
    int n = t.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
    return true;
}

inline bool is_abelian(const CayleyTable& t) {
    int n = t.order();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (t.at(a, b) != t.at(b, a)) return false;
    return true;
}

inline bool is_group(const CayleyTable& t) { return is_invertible_loop(t) && is_associative(t); }

inline bool is_nafil(const CayleyTable& t) { return is_invertible_loop(t) && !is_associative(t); }

}  // namespace loopkit
