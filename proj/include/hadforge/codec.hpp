#pragma once

// Storage encodings for base sequences:
//   * the quad encoding of BS(n+1,n) (symbol alphabets 1'..8', 1..8 and
//     central-column digits 0..3, with "0" written for 3' in table mode),
//   * the 15-hex-digit packing of a BS(15,15) quadruple (60 bits, -1 -> 0),
// plus checksum-verified loaders for the embedded regression tables.

#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hadforge/designs.hpp"
#include "hadforge/errors.hpp"
#include "hadforge/seq.hpp"
#include "hadforge/tables_data.hpp"

namespace hadforge {

// Quad-encoded BS(n+1,n): symbol string for (A;B), symbol string for (C;D).
// Stored in compact table mode ("0" stands for the primed quad 3').
struct QuadCode {
    std::string ab;
    std::string cd;
    std::size_t n = 0;

    // "0165; 6123" table-mode rendering; strict mode renders the first quad
    // of (A;B) with an explicit prime, e.g. "3'6142; 1675".
    std::string str(bool strict = false) const {
        std::string first = strict ? (ab.substr(0, 1) == "0" ? std::string("3'")
                                                             : ab.substr(0, 1) + "'")
                                   : ab.substr(0, 1);
        return first + ab.substr(1) + "; " + cd;
    }

    // Accepts "0165;6123", "0165; 6123" and the strict "3'6142; 1675" form.
    static QuadCode parse(std::string_view text, std::size_t n) {
        std::string compact;
        compact.reserve(text.size());
        bool primed_marker = false;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char ch = text[i];
            if (ch == ' ' || ch == '\t') continue;
            if (ch == '\'') {
                if (compact.size() != 1 || primed_marker)
                    throw MalformedCode("quad code: misplaced prime");
                primed_marker = true;
                if (compact == "3") compact = "0"; // normalize 3' to table mode
                continue;
            }
            compact.push_back(ch);
        }
        auto semi = compact.find(';');
        if (semi == std::string::npos) throw MalformedCode("quad code: missing ';'");
        if (compact.find(';', semi + 1) != std::string::npos)
            throw MalformedCode("quad code: more than one ';'");
        QuadCode code{compact.substr(0, semi), compact.substr(semi + 1), n};
        if (code.ab.empty() || code.cd.empty())
            throw MalformedCode("quad code: empty symbol run");
        return code;
    }

    friend auto operator<=>(const QuadCode&, const QuadCode&) = default;
};

// 15 hexadecimal digits encoding a BS(15,15) quadruple.
using HexCode = std::string;

namespace detail {

// Quad entry layout: {a_i, a_pair, b_i, b_pair} where "pair" is the mirrored
// position. Symbols 1..8 of each alphabet sit at indices 0..7.
using QuadEntries = std::array<Term, 4>;

inline constexpr std::array<QuadEntries, 8> kPrimedQuads = {{
    {-1, +1, +1, +1}, // 1'
    {+1, -1, +1, +1}, // 2'
    {+1, +1, +1, -1}, // 3'
    {+1, +1, -1, +1}, // 4'
    {+1, -1, -1, -1}, // 5'
    {-1, +1, -1, -1}, // 6'
    {-1, -1, -1, +1}, // 7'
    {-1, -1, +1, -1}, // 8'
}};

inline constexpr std::array<QuadEntries, 8> kPlainQuads = {{
    {+1, +1, +1, +1}, // 1
    {+1, +1, -1, -1}, // 2
    {-1, +1, -1, +1}, // 3
    {+1, -1, -1, +1}, // 4
    {-1, +1, +1, -1}, // 5
    {+1, -1, +1, -1}, // 6
    {-1, -1, +1, +1}, // 7
    {-1, -1, -1, -1}, // 8
}};

inline constexpr std::array<std::array<Term, 2>, 4> kCentralColumns = {{
    {+1, +1}, // 0
    {+1, -1}, // 1
    {-1, +1}, // 2
    {-1, -1}, // 3
}};

inline int digit_value(char ch, int lo, int hi, const char* what) {
    if (ch < '0' + lo || ch > '0' + hi)
        throw InvalidQuadLabel(std::string("bad ") + what + " symbol '" + ch + "'");
    return ch - '0';
}

template <class F, class E>
int match_index(const F& table, const E& e) {
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k] == e) return static_cast<int>(k);
    return -1;
}

} // namespace detail

// Reconstruct (A;B;C;D) in BS(n+1,n) from a quad code. Validity of the base
// sequence condition is the caller's business (codes from tables satisfy it).
inline BaseSeqQuad quad_decode(const QuadCode& code) {
    const std::size_t n = code.n;
    if (n == 0) throw MalformedCode("quad code: n must be positive");
    const std::size_t m = n / 2;
    const bool even = n % 2 == 0;
    const std::size_t ab_quads = even ? m : m + 1;
    const std::size_t want_ab = ab_quads + (even ? 1 : 0);
    const std::size_t want_cd = m + (even ? 0 : 1);
    if (code.ab.size() != want_ab || code.cd.size() != want_cd)
        throw MalformedCode("quad code: symbol count does not match n");

    std::vector<Term> a(n + 1), b(n + 1), c(n), d(n);
    for (std::size_t i = 1; i <= ab_quads; ++i) {
        char ch = code.ab[i - 1];
        detail::QuadEntries e{};
        if (i == 1) {
            int v = detail::digit_value(ch, 0, 8, "primed quad");
            e = detail::kPrimedQuads[v == 0 ? 2 : v - 1]; // 0 stands for 3'
        } else {
            e = detail::kPlainQuads[detail::digit_value(ch, 1, 8, "quad") - 1];
        }
        std::size_t lo = i - 1, hi = n + 1 - i; // positions i and n+2-i, 0-based
        a[lo] = e[0];
        a[hi] = e[1];
        b[lo] = e[2];
        b[hi] = e[3];
    }
    if (even) {
        auto col = detail::kCentralColumns[detail::digit_value(code.ab[ab_quads], 0, 3,
                                                               "central column")];
        a[m] = col[0];
        b[m] = col[1];
    }
    for (std::size_t i = 1; i <= m; ++i) {
        auto e = detail::kPlainQuads[detail::digit_value(code.cd[i - 1], 1, 8, "quad") - 1];
        std::size_t lo = i - 1, hi = n - i; // positions i and n+1-i, 0-based
        c[lo] = e[0];
        c[hi] = e[1];
        d[lo] = e[2];
        d[hi] = e[3];
    }
    if (!even) {
        auto col =
            detail::kCentralColumns[detail::digit_value(code.cd[m], 0, 3, "central column")];
        c[m] = col[0];
        d[m] = col[1];
    }
    return BaseSeqQuad(BinarySeq(std::move(a)), BinarySeq(std::move(b)),
                       BinarySeq(std::move(c)), BinarySeq(std::move(d)));
}

inline QuadCode quad_encode(const BaseSeqQuad& q) {
    require_bs_shape(q);
    const std::size_t n = q.n();
    const std::size_t m = n / 2;
    const bool even = n % 2 == 0;
    const std::size_t ab_quads = even ? m : m + 1;

    std::string ab, cd;
    for (std::size_t i = 1; i <= ab_quads; ++i) {
        std::size_t lo = i - 1, hi = n + 1 - i;
        detail::QuadEntries e{q.a[lo], q.a[hi], q.b[lo], q.b[hi]};
        int k = (i == 1) ? detail::match_index(detail::kPrimedQuads, e)
                         : detail::match_index(detail::kPlainQuads, e);
        if (k < 0) throw InvalidQuadLabel("quad has no symbol (not a KKS-compatible quad)");
        ab.push_back(i == 1 && k == 2 ? '0' : char('1' + k));
    }
    if (even) {
        int k = detail::match_index(detail::kCentralColumns,
                                    std::array<Term, 2>{q.a[m], q.b[m]});
        ab.push_back(char('0' + k));
    }
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t lo = i - 1, hi = n - i;
        detail::QuadEntries e{q.c[lo], q.c[hi], q.d[lo], q.d[hi]};
        int k = detail::match_index(detail::kPlainQuads, e);
        if (k < 0) throw InvalidQuadLabel("quad has no symbol (not a KKS-compatible quad)");
        cd.push_back(char('1' + k));
    }
    if (!even) {
        int k = detail::match_index(detail::kCentralColumns,
                                    std::array<Term, 2>{q.c[m], q.d[m]});
        cd.push_back(char('0' + k));
    }
    return QuadCode{std::move(ab), std::move(cd), n};
}

// Entry sums of all quads, reduced mod 4: 2 for the first quad of (A;B) and 0
// everywhere else (including every quad of (C;D)). Central columns are free.
inline bool kks_invariant_ok(const BaseSeqQuad& q) {
    require_bs_shape(q);
    const std::size_t n = q.n();
    for (std::size_t i = 1; 2 * i <= n + 1; ++i) {
        int sum = q.a[i - 1] + q.a[n + 1 - i] + q.b[i - 1] + q.b[n + 1 - i];
        int want = (i == 1) ? 2 : 0;
        if (((sum % 4) + 4) % 4 != want) return false;
    }
    for (std::size_t i = 1; 2 * i <= n; ++i) {
        int sum = q.c[i - 1] + q.c[n - i] + q.d[i - 1] + q.d[n - i];
        if (((sum % 4) + 4) % 4 != 0) return false;
    }
    return true;
}

// --- 15-hex-digit encoding of BS(15,15) -------------------------------------

inline int hex_digit_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    throw MalformedHex(std::string("bad hex digit '") + ch + "'");
}

inline bool is_hex_code(std::string_view x) {
    if (x.size() != 15) return false;
    for (char ch : x)
        if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'))) return false;
    return true;
}

inline BaseSeqQuad hex_decode(const HexCode& x) {
    if (x.size() != 15) throw MalformedHex("hex code must have exactly 15 digits");
    std::array<Term, 60> bits{};
    for (std::size_t i = 0; i < 15; ++i) {
        int v = hex_digit_value(x[i]);
        for (int k = 0; k < 4; ++k)
            bits[4 * i + k] = (v >> (3 - k)) & 1 ? Term(1) : Term(-1);
    }
    auto piece = [&](std::size_t at) {
        return BinarySeq(std::vector<Term>(bits.begin() + at, bits.begin() + at + 15));
    };
    return BaseSeqQuad(piece(0), piece(15), piece(30), piece(45));
}

inline HexCode hex_encode(const BaseSeqQuad& q) {
    if (q.m() != 15 || q.n() != 15) throw ShapeError("hex_encode: shape must be (15,15)");
    std::array<int, 60> bits{};
    std::size_t at = 0;
    for (const BinarySeq* s : {&q.a, &q.b, &q.c, &q.d})
        for (std::size_t i = 0; i < 15; ++i) bits[at++] = (*s)[i] > 0 ? 1 : 0;
    HexCode out(15, '0');
    for (std::size_t i = 0; i < 15; ++i) {
        int v = bits[4 * i] << 3 | bits[4 * i + 1] << 2 | bits[4 * i + 2] << 1 | bits[4 * i + 3];
        out[i] = v < 10 ? char('0' + v) : char('a' + v - 10);
    }
    return out;
}

// --- embedded table loading --------------------------------------------------

struct Table1Row {
    QuadCode code;
    std::size_t orbit_size = 0;
    std::size_t had_count = 0;
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::vector<std::string> table_lines(int id) {
    if (id < 1 || id > 6) throw CorruptData("table id out of range");
    std::string_view raw = std::array<std::string_view, 6>{
        kTable1Text, kTable2Text, kTable3Text, kTable4Text, kTable5Text, kTable6Text}[id - 1];
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : raw) {
        if (ch == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    std::string normalized;
    for (const auto& ln : lines) {
        normalized += ln;
        normalized += '\n';
    }
    if (fnv1a64(normalized) != kTableChecksums[id - 1])
        throw CorruptData("embedded table checksum mismatch");
    return lines;
}

} // namespace detail

// Normalized text of an embedded table, one row per line (checksum-verified).
inline std::string table_text(int id) {
    std::string out;
    for (const auto& ln : detail::table_lines(id)) {
        out += ln;
        out += '\n';
    }
    return out;
}

// Rows of the BS(8,7) class table: quad code, orbit cardinality, class count.
inline std::vector<Table1Row> load_table1() {
    std::vector<Table1Row> rows;
    for (const auto& ln : detail::table_lines(1)) {
        std::istringstream iss(ln);
        std::string code;
        std::size_t orbit = 0, had = 0;
        if (!(iss >> code >> orbit >> had)) throw CorruptData("table 1: bad row");
        rows.push_back({QuadCode::parse(code, 7), orbit, had});
    }
    if (rows.size() != 17) throw CorruptData("table 1: expected 17 rows");
    return rows;
}

// Hex rows of tables 2..6; expected row counts 558, 192, 208, 64, 64.
inline std::vector<HexCode> load_table(int id) {
    if (id == 1) throw CorruptData("table 1 is not a hex table; use load_table1()");
    static constexpr std::array<std::size_t, 7> expected = {0, 17, 558, 192, 208, 64, 64};
    std::vector<HexCode> rows;
    for (const auto& ln : detail::table_lines(id)) {
        if (!is_hex_code(ln)) throw CorruptData("hex table: malformed row");
        rows.push_back(ln);
    }
    if (rows.size() != expected[id]) throw CorruptData("hex table: unexpected row count");
    return rows;
}

} // namespace hadforge
