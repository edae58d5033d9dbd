#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/elemset.hpp"
#include "loopkit/error.hpp"

namespace loopkit {

// Immutable n-by-n operation table over elements 1..n; at(i, j) = i * j.
// Every entry lies in 1..n by construction, so closure holds for any parsed table.
class CayleyTable {
public:
    CayleyTable(int n, std::vector<std::uint8_t> entries, std::string name = "")
        : n_(n), name_(std::move(name)), entries_(std::move(entries)) {
        if (n_ < 1) throw error(errc::bad_header, "order must be positive, got " + std::to_string(n_));
        if (n_ > ElemSet::max_order)
            throw error(errc::unsupported_order, "order " + std::to_string(n_) + " exceeds supported maximum " +
                                                     std::to_string(ElemSet::max_order));
        if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw error(errc::not_square, "expected " + std::to_string(n_ * n_) + " entries, got " +
                                              std::to_string(entries_.size()));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                int v = at(i, j);
                if (v < 1 || v > n_)
                    throw error(errc::entry_out_of_range, "entry at row " + std::to_string(i) + ", column " +
                                                              std::to_string(j) + " is " + std::to_string(v));
            }
    }

    static CayleyTable from_rows(const std::vector<std::vector<int>>& rows, std::string name = "") {
        int n = static_cast<int>(rows.size());
        std::vector<std::uint8_t> entries;
        entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw error(errc::not_square, "row of length " + std::to_string(row.size()) + " in order-" +
                                                  std::to_string(n) + " table");
            for (int v : row) entries.push_back(static_cast<std::uint8_t>(v));
        }
        return CayleyTable(n, std::move(entries), std::move(name));
    }

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    // 1-based row, 1-based column, 1-based product.
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }

    const std::vector<std::uint8_t>& entries() const { return entries_; }

    ElemSet carrier() const { return ElemSet::full(n_); }

    CayleyTable renamed(std::string name) const { return CayleyTable(n_, entries_, std::move(name)); }

    // Equality of shape and entries; names are labels, not identity.
    friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const CayleyTable& a, const CayleyTable& b) { return !(a == b); }

private:
    int n_;
    std::string name_;
    std::vector<std::uint8_t> entries_;
};

namespace detail {

struct Token {
    std::string text;
    bool eof = false;
};

// Whitespace-separated tokens; '#' starts a comment running to end of line.
// The first comment line seen before any token is kept as the table name.
class TableLexer {
public:
    explicit TableLexer(std::istream& in) : in_(in) {}

    Token next() {
        for (;;) {
            int c = in_.peek();
            if (c == std::char_traits<char>::eof()) return {"", true};
            if (c == '#') {
                std::string line;
                std::getline(in_, line);
                line.erase(0, 1);
                if (!line.empty() && line.front() == ' ') line.erase(0, 1);
                while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
                if (!saw_token_ && name_.empty()) name_ = line;
                continue;
            }
            if (std::isspace(c)) {
                in_.get();
                continue;
            }
            std::string tok;
            while (c != std::char_traits<char>::eof() && !std::isspace(c) && c != '#') {
                tok.push_back(static_cast<char>(in_.get()));
                c = in_.peek();
            }
            saw_token_ = true;
            return {tok, false};
        }
    }

    const std::string& name() const { return name_; }

private:
    std::istream& in_;
    std::string name_;
    bool saw_token_ = false;
};

inline bool parse_int(const std::string& text, int& out) {
    if (text.empty()) return false;
    std::size_t pos = 0;
    try {
        long v = std::stol(text, &pos);
        if (pos != text.size()) return false;
        if (v < INT32_MIN || v > INT32_MAX) return false;
        out = static_cast<int>(v);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace detail

// Table file format (".tbl"): optional '#' comment lines, then the order n,
// then n rows of n integers in 1..n; row i column j holds i * j.
inline CayleyTable parse_table(std::istream& in) {
    detail::TableLexer lex(in);
    detail::Token tok = lex.next();
    if (tok.eof) throw error(errc::empty_input, "no tokens in table source");

    int n = 0;
    if (!detail::parse_int(tok.text, n) || n < 1)
        throw error(errc::bad_header, "expected positive order, got '" + tok.text + "'");
    if (n > ElemSet::max_order)
        throw error(errc::bad_header, "order " + std::to_string(n) + " exceeds supported maximum " +
                                          std::to_string(ElemSet::max_order));

    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            tok = lex.next();
            if (tok.eof)
                throw error(errc::not_square, "table body ended at row " + std::to_string(i) + ", column " +
                                                  std::to_string(j) + "; expected " + std::to_string(n * n) +
                                                  " entries");
            int v = 0;
            if (!detail::parse_int(tok.text, v))
                throw error(errc::not_square, "non-integer entry '" + tok.text + "' at row " + std::to_string(i) +
                                                  ", column " + std::to_string(j));
            if (v < 1 || v > n)
                throw error(errc::entry_out_of_range, "entry at row " + std::to_string(i) + ", column " +
                                                          std::to_string(j) + " is " + std::to_string(v) +
                                                          ", outside 1.." + std::to_string(n));
            entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    tok = lex.next();
    if (!tok.eof)
        throw error(errc::not_square, "trailing token '" + tok.text + "' after " + std::to_string(n * n) + " entries");
    return CayleyTable(n, std::move(entries), lex.name());
}

inline CayleyTable parse_table(const std::string& text) {
    std::istringstream is(text);
    return parse_table(is);
}

inline void serialize_table(const CayleyTable& t, std::ostream& out) {
    out << "# " << (t.name().empty() ? std::string("unnamed") : t.name()) << '\n';
    out << t.order() << '\n';
    int width = t.order() >= 10 ? 2 : 1;
    for (int i = 1; i <= t.order(); ++i) {
        for (int j = 1; j <= t.order(); ++j) {
            if (j > 1) out << ' ';
            int v = t.at(i, j);
            for (int pad = (v >= 10 ? 2 : 1); pad < width; ++pad) out << ' ';
            out << v;
        }
        out << '\n';
    }
}

inline std::string serialize_table(const CayleyTable& t) {
    std::ostringstream os;
    serialize_table(t, os);
    return os.str();
}

}  // namespace loopkit
