#include <catch2/catch.hpp>

#include <numeric>
#include <random>

#include "loopkit/catalog.hpp"
#include "loopkit/iso.hpp"
#include "loopkit/products.hpp"
#include "loopkit/quotient.hpp"
#include "loopkit/search.hpp"

using namespace loopkit;

namespace {

// All-permutations oracle for small orders.
bool isomorphic_oracle(const CayleyTable& a, const CayleyTable& b) {
    if (a.order() != b.order()) return false;
    int n = a.order();
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
        bool ok = true;
        for (int x = 1; x <= n && ok; ++x)
            for (int y = 1; y <= n && ok; ++y)
                if (pi[static_cast<std::size_t>(a.at(x, y)) - 1] !=
                    b.at(pi[static_cast<std::size_t>(x) - 1], pi[static_cast<std::size_t>(y) - 1]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

void check_bijection(const CayleyTable& a, const CayleyTable& b, const std::vector<int>& theta) {
    REQUIRE(theta.size() == static_cast<std::size_t>(a.order()));
    CHECK(is_homomorphism(a, b, theta).ok);
    std::vector<bool> used(theta.size() + 1, false);
    for (int v : theta) {
        CHECK_FALSE(used[static_cast<std::size_t>(v)]);
        used[static_cast<std::size_t>(v)] = true;
    }
    // The inverse map is an isomorphism in the other direction.
    std::vector<int> inv(theta.size());
    for (std::size_t x = 0; x < theta.size(); ++x) inv[static_cast<std::size_t>(theta[x]) - 1] = static_cast<int>(x) + 1;
    CHECK(is_homomorphism(b, a, inv).ok);
}

}  // namespace

TEST_CASE("isomorphism examples") {
    auto nr = is_normal(catalog_get("abelian6").table, ElemSet::of({1, 2}));
    auto theta = are_isomorphic(*nr.factor->table, catalog_get("c3").table);
    REQUIRE(theta.has_value());
    check_bijection(*nr.factor->table, catalog_get("c3").table, *theta);

    CHECK_FALSE(are_isomorphic(catalog_get("k4").table, catalog_get("c4").table).has_value());

    auto dp = direct_product(catalog_get("c2").table, catalog_get("l5").table);
    auto theta10 = are_isomorphic(dp, catalog_get("l10").table);
    REQUIRE(theta10.has_value());
    check_bijection(dp, catalog_get("l10").table, *theta10);
    // Identity relabeling: the product IS the catalog table.
    CHECK(dp == catalog_get("l10").table);
}

TEST_CASE("isomorphism is reflexive on the catalog") {
    for (const CatalogEntry& e : catalog()) {
        auto theta = are_isomorphic(e.table, e.table);
        REQUIRE(theta.has_value());
        check_bijection(e.table, e.table, *theta);
    }
}

TEST_CASE("relabeling invariance") {
    std::mt19937 rng(99);
    for (const char* id : {"l5", "abelian6", "l7-plain", "nafil8", "l9-anti", "l10"}) {
        const CayleyTable& t = catalog_get(id).table;
        for (int trial = 0; trial < 5; ++trial) {
            CayleyTable r = relabel(t, random_perm(t.order(), rng));
            auto theta = are_isomorphic(t, r);
            REQUIRE(theta.has_value());
            check_bijection(t, r, *theta);
        }
    }
}

TEST_CASE("agrees with the all-permutations oracle on random pairs") {
    std::mt19937 rng(20240818);

    SearchSpec s5;
    s5.order = 5;
    auto c5 = enumerate_loops(s5);
    SearchSpec s6;
    s6.order = 6;
    s6.nafil = true;
    auto c6 = enumerate_loops(s6);

    std::vector<CayleyTable> pool;
    for (auto& t : c5.representatives) pool.push_back(t);
    for (std::size_t i = 0; i < 10; ++i) pool.push_back(c6.representatives[i]);

    int checked = 0;
    while (checked < 50) {
        const CayleyTable& a = pool[rng() % pool.size()];
        CayleyTable b = pool[rng() % pool.size()];
        if (rng() % 2) b = relabel(b, random_perm(b.order(), rng));
        if (a.order() != b.order()) continue;
        ++checked;
        bool fast = are_isomorphic(a, b).has_value();
        CHECK(fast == isomorphic_oracle(a, b));
    }
}

TEST_CASE("relabel validates its permutation") {
    const CayleyTable& t = catalog_get("c2").table;
    CHECK_THROWS_AS(relabel(t, {1}), error);
    CHECK_THROWS_AS(relabel(t, {1, 1}), error);
    CHECK_THROWS_AS(relabel(t, {0, 1}), error);
}
