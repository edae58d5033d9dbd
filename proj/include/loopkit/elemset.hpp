#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/error.hpp"

namespace loopkit {

// Subset of elements {1..n} as a 64-bit mask; bit e-1 represents element e.
// The single-word cap (order <= 64) keeps closure and lattice scans branch-light.
class ElemSet {
public:
    static constexpr int max_order = 64;

    constexpr ElemSet() = default;

    static constexpr ElemSet from_bits(std::uint64_t bits) {
        ElemSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr ElemSet single(int e) { return from_bits(std::uint64_t{1} << (e - 1)); }

    // {1..n}
    static constexpr ElemSet full(int n) {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static ElemSet of(std::initializer_list<int> elems) {
        ElemSet s;
        for (int e : elems) s.add(e);
        return s;
    }

    static ElemSet of(const std::vector<int>& elems) {
        ElemSet s;
        for (int e : elems) s.add(e);
        return s;
    }

    bool contains(int e) const { return (bits_ >> (e - 1)) & 1u; }
    void add(int e) { bits_ |= std::uint64_t{1} << (e - 1); }
    void remove(int e) { bits_ &= ~(std::uint64_t{1} << (e - 1)); }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t raw() const { return bits_; }

    // Smallest member, 1-based; 0 when empty.
    int smallest() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) fn(std::countr_zero(b) + 1);
    }

    bool is_subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend ElemSet operator|(ElemSet a, ElemSet b) { return from_bits(a.bits_ | b.bits_); }
    friend ElemSet operator&(ElemSet a, ElemSet b) { return from_bits(a.bits_ & b.bits_); }
    friend ElemSet operator-(ElemSet a, ElemSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend bool operator==(ElemSet a, ElemSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(ElemSet a, ElemSet b) { return a.bits_ != b.bits_; }

    // Orders first by size, then by ascending element list; used for report sorting.
    static bool lattice_less(ElemSet a, ElemSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return list_less(a, b);
    }

    // Lexicographic comparison of ascending element lists.
    static bool list_less(ElemSet a, ElemSet b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x && y) {
            int ex = std::countr_zero(x), ey = std::countr_zero(y);
            if (ex != ey) return ex < ey;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for_each([&](int e) {
            if (!first) os << ',';
            os << e;
            first = false;
        });
        os << '}';
        return os.str();
    }

    // Comma-separated 1-based list, e.g. "1,2,3,4"; the CLI --subset format.
    static ElemSet parse_csv(const std::string& text, int order) {
        ElemSet s;
        std::string token;
        std::istringstream is(text);
        while (std::getline(is, token, ',')) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(token, &pos);
            } catch (const std::exception&) {
                throw error(errc::bad_subset, "'" + token + "' is not an element index");
            }
            if (pos != token.size())
                throw error(errc::bad_subset, "'" + token + "' is not an element index");
            if (v < 1 || v > order)
                throw error(errc::bad_subset,
                            "element " + std::to_string(v) + " outside 1.." + std::to_string(order));
            s.add(v);
        }
        if (s.empty()) throw error(errc::bad_subset, "empty element list");
        return s;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace loopkit
