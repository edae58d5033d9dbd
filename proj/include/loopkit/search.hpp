#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <set>
#include <fstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "loopkit/axioms.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

namespace detail {

// Lexicographic comparison of the relabeled table against a reference, cell
// by cell in row-major order, without materializing the relabeling.
// pi and inv are 1-based with pi[identity] = 1, so row 1 and column 1 of the
// relabeled table match the reference whenever both are reduced; comparison
// starts at (2,2).
inline int compare_relabeled(const CayleyTable& t, const std::vector<int>& pi, const std::vector<int>& inv,
                             const CayleyTable& ref) {
    int n = t.order();
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) {
            int v = pi[static_cast<std::size_t>(t.at(inv[static_cast<std::size_t>(i)],
                                                     inv[static_cast<std::size_t>(j)]))];
            int r = ref.at(i, j);
            if (v != r) return v < r ? -1 : 1;
        }
    return 0;
}

}  // namespace detail

// Distinguished representative of the isomorphism class: the
// lexicographically least flattened table over all relabelings that send the
// identity to element 1. Idempotent and isomorphism-invariant.
inline CayleyTable canonical_form(const CayleyTable& t) {
    if (!is_loop(t)) throw error(errc::not_a_loop, "canonical form is defined for loops");
    int n = t.order();
    if (n > 10)
        throw error(errc::unsupported_order,
                    "canonical form enumerates identity-fixing relabelings; order " + std::to_string(n) +
                        " exceeds the practical cap of 10");
    int e = *identity_info(t).two_sided_identity;

    std::vector<int> others;
    for (int x = 1; x <= n; ++x)
        if (x != e) others.push_back(x);
    std::vector<int> images;
    for (int v = 2; v <= n; ++v) images.push_back(v);

    std::vector<int> pi(static_cast<std::size_t>(n) + 1, 0), inv(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint8_t> best;  // row-major entries of the best candidate so far
    auto materialize = [&]() {
        std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                out[static_cast<std::size_t>(pi[static_cast<std::size_t>(x)] - 1) * n +
                    (pi[static_cast<std::size_t>(y)] - 1)] =
                    static_cast<std::uint8_t>(pi[static_cast<std::size_t>(t.at(x, y))]);
        return out;
    };

    do {
        pi[static_cast<std::size_t>(e)] = 1;
        for (std::size_t idx = 0; idx < others.size(); ++idx)
            pi[static_cast<std::size_t>(others[idx])] = images[idx];
        auto cand = materialize();
        if (best.empty() || cand < best) best = std::move(cand);
    } while (std::next_permutation(images.begin(), images.end()));

    return CayleyTable(n, std::move(best), t.name().empty() ? "" : t.name() + " (canonical)");
}

// True iff the reduced loop table (identity 1, row/column 1 in natural order)
// is its own canonical form. Cheaper than materializing the form: each
// relabeling is compared lazily and abandoned at the first greater cell.
inline bool is_canonical_reduced(const CayleyTable& t) {
    int n = t.order();
    std::vector<int> images;
    for (int v = 2; v <= n; ++v) images.push_back(v);
    std::vector<int> pi(static_cast<std::size_t>(n) + 1, 0), inv(static_cast<std::size_t>(n) + 1, 0);
    pi[1] = 1;
    inv[1] = 1;
    do {
        bool ident = true;
        for (std::size_t idx = 0; idx < images.size(); ++idx) {
            pi[idx + 2] = images[idx];
            if (images[idx] != static_cast<int>(idx) + 2) ident = false;
        }
        if (ident) continue;
        for (int x = 2; x <= n; ++x) inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(x)])] = x;
        if (detail::compare_relabeled(t, pi, inv, t) < 0) return false;
    } while (std::next_permutation(images.begin(), images.end()));
    return true;
}

enum class FillStrategy { RowMajor, MostConstrained };
enum class CensusMode { Count, Emit };

struct SearchSpec {
    int order = 0;
    bool invertible = false;
    bool nafil = false;  // implies invertible
    bool abelian = false;
    bool plain = false;
    bool composite = false;
    CensusMode mode = CensusMode::Count;
    std::string emit_dir;
    int job_count = 1;
    FillStrategy strategy = FillStrategy::RowMajor;

    std::string constraints_text() const {
        std::string s;
        auto add = [&](bool on, const char* nm) {
            if (on) s += (s.empty() ? "" : ",") + std::string(nm);
        };
        add(invertible || nafil, "invertible");
        add(nafil, "nafil");
        add(abelian, "abelian");
        add(plain, "plain");
        add(composite, "composite");
        return s.empty() ? "loop" : s;
    }
};

struct CensusResult {
    SearchSpec spec;
    int order = 0;
    long long raw_count = 0;  // reduced tables passing the constraints, before isomorph rejection
    long long count_up_to_isomorphism = 0;
    std::vector<CayleyTable> representatives;  // canonical, sorted by entries
    double wall_seconds = 0.0;
};

namespace detail {

struct CensusParams {
    int n = 0;
    bool symmetric = false;    // fill the upper triangle, mirror assignments
    bool enforce_inv = false;  // keep 1-entries mirror-symmetric (two-sided inverses)
    bool require_nafil = false;
    bool require_plain = false;
    bool require_composite = false;
    bool prune_diag_one = false;  // sound only under require_plain
    FillStrategy strategy = FillStrategy::RowMajor;
};

class CensusWorker {
public:
    CensusWorker(const CensusParams& params) : p_(params), n_(params.n) {
        grid_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
        for (int x = 1; x <= n_; ++x) {
            set(1, x, x);
            if (x > 1) set(x, 1, x);
        }
        for (int i = 2; i <= n_; ++i)
            for (int j = 2; j <= n_; ++j)
                if (!p_.symmetric || j >= i) free_cells_.push_back({i, j});
    }

    long long raw = 0;
    long long accepted = 0;
    std::vector<CayleyTable> reps;

    // Enumerate all completions of row 2 (the first unfixed row) in
    // lexicographic order; the parallel split hands these out round-robin.
    std::vector<std::vector<int>> row2_completions() {
        std::vector<std::vector<int>> out;
        std::vector<int> vals;
        row2_rec(2, vals, out);
        return out;
    }

    void run(const std::vector<int>& row2) {
        std::size_t depth = 0;
        auto unwind = [&] {
            while (depth > 0) {
                auto [i, j] = free_cells_[--depth];
                unassign(i, j);
            }
        };
        for (int j = 2; j <= n_; ++j) {
            int v = row2[static_cast<std::size_t>(j) - 2];
            if (!assignable(2, j, v)) {
                unwind();
                return;
            }
            assign(2, j, v);
            ++depth;
        }
        dfs(depth);
        unwind();
    }

private:
    void row2_rec(int j, std::vector<int>& vals, std::vector<std::vector<int>>& out) {
        if (j > n_) {
            out.push_back(vals);
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (!assignable(2, j, v)) continue;
            assign(2, j, v);
            vals.push_back(v);
            row2_rec(j + 1, vals, out);
            vals.pop_back();
            unassign(2, j);
        }
    }

    int at(int i, int j) const { return grid_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
    void set(int i, int j, int v) {
        grid_[static_cast<std::size_t>(i) * (n_ + 1) + j] = static_cast<std::uint8_t>(v);
        if (v) {
            row_used_[i] |= 1u << v;
            col_used_[j] |= 1u << v;
        }
    }
    void clear(int i, int j) {
        int v = at(i, j);
        grid_[static_cast<std::size_t>(i) * (n_ + 1) + j] = 0;
        row_used_[i] &= ~(1u << v);
        col_used_[j] &= ~(1u << v);
    }

    bool assignable(int i, int j, int v) const {
        if ((row_used_[i] | col_used_[j]) & (1u << v)) return false;
        if (p_.symmetric && i != j) {
            if ((row_used_[j] | col_used_[i]) & (1u << v)) return false;
        }
        if (p_.prune_diag_one && i == j && v == 1) return false;
        if (p_.enforce_inv) {
            int mirror = at(j, i);
            if (v == 1 && mirror != 0 && mirror != 1) return false;
            if (v != 1 && mirror == 1) return false;
        }
        return true;
    }

    void assign(int i, int j, int v) {
        set(i, j, v);
        if (p_.symmetric && i != j) set(j, i, v);
    }
    void unassign(int i, int j) {
        if (p_.symmetric && i != j) clear(j, i);
        clear(i, j);
    }

    std::size_t pick_cell(std::size_t depth) {
        if (p_.strategy == FillStrategy::RowMajor) return depth;
        std::size_t best = depth;
        int best_count = n_ + 1;
        std::uint32_t full = ((1u << n_) - 1u) << 1;
        for (std::size_t k = depth; k < free_cells_.size(); ++k) {
            auto [i, j] = free_cells_[k];
            std::uint32_t used = row_used_[i] | col_used_[j];
            if (p_.symmetric && i != j) used |= row_used_[j] | col_used_[i];
            int count = std::popcount(full & ~used);
            if (count < best_count) {
                best_count = count;
                best = k;
                if (count <= 1) break;
            }
        }
        return best;
    }

    void dfs(std::size_t depth) {
        if (depth == free_cells_.size()) {
            on_complete();
            return;
        }
        std::size_t pick = pick_cell(depth);
        std::swap(free_cells_[depth], free_cells_[pick]);
        auto [i, j] = free_cells_[depth];
        for (int v = 1; v <= n_; ++v) {
            if (!assignable(i, j, v)) continue;
            assign(i, j, v);
            dfs(depth + 1);
            unassign(i, j);
        }
        std::swap(free_cells_[depth], free_cells_[pick]);
    }

    bool completed_is_associative() const {
        for (int a = 2; a <= n_; ++a)
            for (int b = 2; b <= n_; ++b) {
                int ab = at(a, b);
                for (int c = 2; c <= n_; ++c)
                    if (at(ab, c) != at(a, at(b, c))) return false;
            }
        return true;
    }

    // A nontrivial proper subloop exists iff some single element generates
    // one: a minimal nontrivial subloop equals the closure of any of its
    // non-identity elements, and every closure in a loop contains the identity.
    bool completed_is_composite() const {
        for (int x = 2; x <= n_; ++x) {
            std::uint64_t closed = 1ull | (1ull << (x - 1));
            std::vector<int> members{1, x};
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = 0; b <= a; ++b)
                    for (int prod : {at(members[a], members[b]), at(members[b], members[a])})
                        if (!(closed >> (prod - 1) & 1)) {
                            closed |= 1ull << (prod - 1);
                            members.push_back(prod);
                        }
            if (static_cast<int>(members.size()) < n_) return true;
        }
        return false;
    }

    void on_complete() {
        if (p_.require_nafil && completed_is_associative()) return;
        if (p_.require_plain || p_.require_composite) {
            bool comp = completed_is_composite();
            if (p_.require_plain && comp) return;
            if (p_.require_composite && !comp) return;
        }
        ++raw;

        CayleyTable t = to_table();
        if (!is_canonical_reduced(t)) return;
        ++accepted;
        reps.push_back(std::move(t));
    }

    CayleyTable to_table() const {
        std::vector<std::uint8_t> entries(static_cast<std::size_t>(n_) * n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                entries[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = static_cast<std::uint8_t>(at(i, j));
        return CayleyTable(n_, std::move(entries));
    }

    const CensusParams& p_;
    int n_;
    std::vector<std::uint8_t> grid_;  // (n+1)*(n+1), 1-based, 0 = unassigned
    std::array<std::uint32_t, ElemSet::max_order + 1> row_used_{};
    std::array<std::uint32_t, ElemSet::max_order + 1> col_used_{};
    std::vector<std::pair<int, int>> free_cells_;
};

inline std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Exhaustive census of loops of the given order, reduced form (identity is
// element 1, first row and column in natural order), with constraint filters
// and isomorph rejection by canonical-minimality. Counts and representative
// sets are independent of job count and fill strategy.
inline CensusResult enumerate_loops(const SearchSpec& spec_in) {
    SearchSpec spec = spec_in;
    if (spec.nafil) spec.invertible = true;
    if (spec.order < 1 || spec.order > 8)
        throw error(errc::unsupported_order,
                    "census supports orders 1..8, got " + std::to_string(spec.order));
    if (spec.plain && spec.composite)
        throw error(errc::invalid_search_spec, "plain and composite are mutually exclusive");
    if (spec.job_count < 1)
        throw error(errc::invalid_search_spec, "job count must be positive");

    auto t0 = std::chrono::steady_clock::now();

    detail::CensusParams params;
    params.n = spec.order;
    params.symmetric = spec.abelian;
    params.enforce_inv = spec.invertible;
    params.require_nafil = spec.nafil;
    params.require_plain = spec.plain;
    params.require_composite = spec.composite;
    params.prune_diag_one = spec.plain;
    params.strategy = spec.strategy;

    CensusResult result;
    result.spec = spec;
    result.order = spec.order;

    if (spec.order == 1) {
        // The one-element loop; associative, so excluded by the nafil filter.
        bool keep = !spec.nafil && !spec.composite;
        result.raw_count = keep ? 1 : 0;
        result.count_up_to_isomorphism = keep ? 1 : 0;
        if (keep) result.representatives.push_back(CayleyTable(1, {1}));
    } else {
        detail::CensusWorker seed(params);
        std::vector<std::vector<int>> row2 = seed.row2_completions();

        int jobs = spec.job_count;
        if (static_cast<std::size_t>(jobs) > row2.size())
            jobs = std::max<int>(1, static_cast<int>(row2.size()));
        std::vector<detail::CensusWorker> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) workers.emplace_back(params);

        auto drive = [&](int w) {
            for (std::size_t i = static_cast<std::size_t>(w); i < row2.size(); i += static_cast<std::size_t>(jobs))
                workers[static_cast<std::size_t>(w)].run(row2[i]);
        };
        if (jobs == 1) {
            drive(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs; ++w) threads.emplace_back(drive, w);
            for (auto& th : threads) th.join();
        }

        for (auto& w : workers) {
            result.raw_count += w.raw;
            result.count_up_to_isomorphism += w.accepted;
            for (auto& r : w.reps) result.representatives.push_back(std::move(r));
        }
        std::sort(result.representatives.begin(), result.representatives.end(),
                  [](const CayleyTable& a, const CayleyTable& b) { return a.entries() < b.entries(); });
    }

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// Emit mode: one ".tbl" per representative, named by canonical-form hash,
// plus a manifest listing count, constraints, and wall time.
inline std::vector<std::string> write_census(const CensusResult& result, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> files;
    std::set<std::string> taken;
    for (const CayleyTable& rep : result.representatives) {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(detail::fnv1a64(rep.entries())));
        std::string base = std::string(buf) + ".tbl";
        for (int bump = 2; taken.count(base); ++bump)
            base = std::string(buf) + "-" + std::to_string(bump) + ".tbl";
        taken.insert(base);
        std::string path = (fs::path(dir) / base).string();
        std::ofstream out(path);
        if (!out) throw error(errc::io_error, "cannot write " + path);
        serialize_table(rep.renamed("census order " + std::to_string(result.order)), out);
        files.push_back(base);
    }
    std::string manifest_path = (fs::path(dir) / "manifest.json").string();
    std::ofstream man(manifest_path);
    if (!man) throw error(errc::io_error, "cannot write " + manifest_path);
    man << "{\n"
        << "  \"order\": " << result.order << ",\n"
        << "  \"constraints\": \"" << result.spec.constraints_text() << "\",\n"
        << "  \"count_up_to_isomorphism\": " << result.count_up_to_isomorphism << ",\n"
        << "  \"raw_count\": " << result.raw_count << ",\n"
        << "  \"wall_seconds\": " << result.wall_seconds << ",\n"
        << "  \"files\": [";
    for (std::size_t i = 0; i < files.size(); ++i) man << (i ? ", " : "") << '"' << files[i] << '"';
    man << "]\n}\n";
    return files;
}

}  // namespace loopkit
