#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "loopkit/quotient.hpp"

namespace loopkit {

// Applies a relabeling permutation: result(pi(x), pi(y)) = pi(t(x, y)).
// pi is 1-based: pi[x-1] is the new label of element x.
inline CayleyTable relabel(const CayleyTable& t, const std::vector<int>& pi, std::string name = "") {
    int n = t.order();
    if (static_cast<int>(pi.size()) != n)
        throw error(errc::bad_map_range, "permutation covers " + std::to_string(pi.size()) + " of " +
                                             std::to_string(n) + " elements");
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : pi) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]++)
            throw error(errc::bad_map_range, "relabeling is not a permutation of 1.." + std::to_string(n));
    }
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            int i = pi[static_cast<std::size_t>(x) - 1];
            int j = pi[static_cast<std::size_t>(y) - 1];
            entries[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
                static_cast<std::uint8_t>(pi[static_cast<std::size_t>(t.at(x, y)) - 1]);
        }
    return CayleyTable(n, std::move(entries), std::move(name));
}

namespace detail {

// Per-element invariants preserved by every isomorphism.
struct ElementFingerprint {
    int square_class = 0;  // 2: x*x is the identity, 1: x*x = x, 0: neither
    int generated_order = 0;
    int commute_count = 0;

    friend bool operator==(const ElementFingerprint&, const ElementFingerprint&) = default;
    friend bool operator<(const ElementFingerprint& a, const ElementFingerprint& b) {
        return std::tie(a.square_class, a.generated_order, a.commute_count) <
               std::tie(b.square_class, b.generated_order, b.commute_count);
    }
};

inline std::vector<ElementFingerprint> fingerprints(const CayleyTable& t) {
    int n = t.order();
    auto ids = identity_info(t);
    std::vector<ElementFingerprint> fps(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        ElementFingerprint& fp = fps[static_cast<std::size_t>(x) - 1];
        int sq = t.at(x, x);
        if (ids.two_sided_identity && sq == *ids.two_sided_identity)
            fp.square_class = 2;
        else if (sq == x)
            fp.square_class = 1;
        fp.generated_order = closure(t, ElemSet::single(x)).size();
        for (int y = 1; y <= n; ++y)
            if (t.at(x, y) == t.at(y, x)) ++fp.commute_count;
    }
    return fps;
}

class IsoSearch {
public:
    IsoSearch(const CayleyTable& a, const CayleyTable& b)
        : a_(a), b_(b), n_(a.order()), theta_(static_cast<std::size_t>(n_) + 1, 0),
          used_(static_cast<std::size_t>(n_) + 1, false), fa_(fingerprints(a)), fb_(fingerprints(b)) {}

    std::optional<std::vector<int>> run() {
        auto ida = identity_info(a_), idb = identity_info(b_);
        if (ida.two_sided_identity.has_value() != idb.two_sided_identity.has_value()) return std::nullopt;
        if (ida.two_sided_identity) {
            if (!try_assign(*ida.two_sided_identity, *idb.two_sided_identity)) return std::nullopt;
        }
        if (!extend()) return std::nullopt;
        std::vector<int> out(static_cast<std::size_t>(n_));
        for (int x = 1; x <= n_; ++x) out[static_cast<std::size_t>(x) - 1] = theta_[static_cast<std::size_t>(x)];
        return out;
    }

private:
    bool extend() {
        if (assigned_ == n_) return verify();

        // Forced step: an unassigned product of two assigned elements has a
        // unique possible image.
        for (int x = 1; x <= n_; ++x) {
            if (!theta_[static_cast<std::size_t>(x)]) continue;
            for (int y = 1; y <= n_; ++y) {
                if (!theta_[static_cast<std::size_t>(y)]) continue;
                int p = a_.at(x, y);
                if (theta_[static_cast<std::size_t>(p)]) continue;
                int image = b_.at(theta_[static_cast<std::size_t>(x)], theta_[static_cast<std::size_t>(y)]);
                if (!try_assign(p, image)) return false;
                if (extend()) return true;
                unassign(p);
                return false;
            }
        }

        // Branch on the smallest unassigned element.
        int x = 1;
        while (theta_[static_cast<std::size_t>(x)]) ++x;
        for (int y = 1; y <= n_; ++y) {
            if (used_[static_cast<std::size_t>(y)]) continue;
            if (try_assign(x, y)) {
                if (extend()) return true;
                unassign(x);
            }
        }
        return false;
    }

    bool try_assign(int x, int y) {
        if (used_[static_cast<std::size_t>(y)] || theta_[static_cast<std::size_t>(x)]) return false;
        if (!(fa_[static_cast<std::size_t>(x) - 1] == fb_[static_cast<std::size_t>(y) - 1])) return false;
        theta_[static_cast<std::size_t>(x)] = y;
        used_[static_cast<std::size_t>(y)] = true;
        ++assigned_;
        if (consistent(x)) return true;
        unassign(x);
        return false;
    }

    void unassign(int x) {
        used_[static_cast<std::size_t>(theta_[static_cast<std::size_t>(x)])] = false;
        theta_[static_cast<std::size_t>(x)] = 0;
        --assigned_;
    }

    // All products among assigned elements whose result is assigned must map
    // correctly; results not yet assigned must not collide with used images.
    bool consistent(int x) {
        int tx = theta_[static_cast<std::size_t>(x)];
        for (int a = 1; a <= n_; ++a) {
            int ta = theta_[static_cast<std::size_t>(a)];
            if (!ta) continue;
            int p = a_.at(a, x), q = a_.at(x, a);
            int ip = b_.at(ta, tx), iq = b_.at(tx, ta);
            int tp = theta_[static_cast<std::size_t>(p)], tq = theta_[static_cast<std::size_t>(q)];
            if (tp ? tp != ip : used_[static_cast<std::size_t>(ip)]) return false;
            if (tq ? tq != iq : used_[static_cast<std::size_t>(iq)]) return false;
        }
        return true;
    }

    bool verify() const {
        for (int x = 1; x <= n_; ++x)
            for (int y = 1; y <= n_; ++y)
                if (theta_[static_cast<std::size_t>(a_.at(x, y))] !=
                    b_.at(theta_[static_cast<std::size_t>(x)], theta_[static_cast<std::size_t>(y)]))
                    return false;
        return true;
    }

    const CayleyTable& a_;
    const CayleyTable& b_;
    int n_;
    int assigned_ = 0;
    std::vector<int> theta_;
    std::vector<bool> used_;
    std::vector<ElementFingerprint> fa_, fb_;
};

}  // namespace detail

// A bijection theta with theta(x*y) = theta(x) o theta(y), or absent.
// Screening on cheap isomorphism invariants first, then backtracking in which
// products of already-mapped elements have forced images.
inline std::optional<std::vector<int>> are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (is_abelian(a) != is_abelian(b)) return std::nullopt;

    auto fa = detail::fingerprints(a);
    auto fb = detail::fingerprints(b);
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return std::nullopt;

    if (is_loop(a) != is_loop(b)) return std::nullopt;
    if (is_loop(a)) {
        auto orders_of = [](const CayleyTable& t) {
            std::vector<int> orders;
            for (const auto& s : subsystems(t).subsystems) orders.push_back(s.order);
            std::sort(orders.begin(), orders.end());
            return orders;
        };
        if (orders_of(a) != orders_of(b)) return std::nullopt;
    }

    return detail::IsoSearch(a, b).run();
}

}  // namespace loopkit
