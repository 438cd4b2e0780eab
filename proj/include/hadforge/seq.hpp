#pragma once

// Sequence atoms: binary {+1,-1} and ternary {+1,0,-1} sequences, their
// textual "+-0" literal form, and the nonperiodic autocorrelation (the
// coefficients of the Laurent-polynomial norm N(A) = A(z)A(1/z)).
//
// Sequences are immutable values; every operation returns a fresh sequence,
// so they can be fanned out across worker threads freely.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hadforge/errors.hpp"

namespace hadforge {

using Term = std::int8_t;

namespace detail {

inline char term_char(int v) {
    return v > 0 ? '+' : (v < 0 ? '-' : '0');
}

inline std::vector<Term> parse_terms(std::string_view text, bool allow_zero) {
    std::vector<Term> out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '+': out.push_back(+1); break;
        case '-': out.push_back(-1); break;
        case '0':
            if (!allow_zero) throw RangeOverflow("binary literal contains '0'");
            out.push_back(0);
            break;
        case ' ': break; // literals may be spaced for readability
        default: throw MalformedCode(std::string("bad sequence literal char '") + ch + "'");
        }
    }
    return out;
}

} // namespace detail

class TernarySeq;

// Fixed-length sequence over {+1,-1}.
class BinarySeq {
public:
    BinarySeq() = default;
    explicit BinarySeq(std::vector<Term> terms) : terms_(std::move(terms)) {
        for (Term t : terms_)
            if (t != 1 && t != -1) throw RangeOverflow("BinarySeq term outside {+1,-1}");
    }
    static BinarySeq parse(std::string_view text) {
        return BinarySeq(detail::parse_terms(text, /*allow_zero=*/false));
    }

    std::size_t size() const { return terms_.size(); }
    Term operator[](std::size_t i) const { return terms_[i]; }
    const std::vector<Term>& terms() const { return terms_; }

    std::string str() const {
        std::string s;
        s.reserve(terms_.size());
        for (Term t : terms_) s.push_back(detail::term_char(t));
        return s;
    }

    friend auto operator<=>(const BinarySeq&, const BinarySeq&) = default;

private:
    std::vector<Term> terms_;
};

// Fixed-length sequence over {+1,0,-1}. A BinarySeq embeds as the zero-free case.
class TernarySeq {
public:
    TernarySeq() = default;
    explicit TernarySeq(std::vector<Term> terms) : terms_(std::move(terms)) {
        for (Term t : terms_)
            if (t < -1 || t > 1) throw RangeOverflow("TernarySeq term outside {+1,0,-1}");
    }
    TernarySeq(const BinarySeq& b) : terms_(b.terms()) {} // NOLINT(google-explicit-constructor)

    static TernarySeq parse(std::string_view text) {
        return TernarySeq(detail::parse_terms(text, /*allow_zero=*/true));
    }
    static TernarySeq zeros(std::size_t len) {
        return TernarySeq(std::vector<Term>(len, 0));
    }

    std::size_t size() const { return terms_.size(); }
    Term operator[](std::size_t i) const { return terms_[i]; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_binary() const {
        return std::none_of(terms_.begin(), terms_.end(), [](Term t) { return t == 0; });
    }
    std::size_t support_size() const {
        return static_cast<std::size_t>(
            std::count_if(terms_.begin(), terms_.end(), [](Term t) { return t != 0; }));
    }

    std::string str() const {
        std::string s;
        s.reserve(terms_.size());
        for (Term t : terms_) s.push_back(detail::term_char(t));
        return s;
    }

    friend auto operator<=>(const TernarySeq&, const TernarySeq&) = default;

private:
    std::vector<Term> terms_;
};

// Narrow a ternary sequence known to have no zeros back to binary.
inline BinarySeq to_binary(const TernarySeq& s) {
    if (!s.is_binary()) throw RangeOverflow("sequence has zero terms, not binary");
    return BinarySeq(s.terms());
}

// Coefficients r_0..r_{L-1} of the norm: r_s = sum_i a_i * a_{i+s}.
// r_s is also the coefficient of z^{-s}; only s >= 0 is stored.
using AutocorrVector = std::vector<int>;

inline AutocorrVector autocorr(const TernarySeq& seq) {
    const std::size_t len = seq.size();
    AutocorrVector r(len, 0);
    for (std::size_t s = 0; s < len; ++s) {
        int acc = 0;
        for (std::size_t i = 0; i + s < len; ++i) acc += int(seq[i]) * int(seq[i + s]);
        r[s] = acc;
    }
    return r;
}

namespace detail {

template <class S>
S from_terms(std::vector<Term> t) {
    return S(std::move(t));
}

} // namespace detail

template <class S>
S reversed(const S& seq) {
    std::vector<Term> t(seq.terms().rbegin(), seq.terms().rend());
    return detail::from_terms<S>(std::move(t));
}

template <class S>
S negated(const S& seq) {
    std::vector<Term> t = seq.terms();
    for (Term& x : t) x = static_cast<Term>(-x);
    return detail::from_terms<S>(std::move(t));
}

// scale(f, A) = fA with f in {+1,-1}.
template <class S>
S scaled(int f, const S& seq) {
    if (f != 1 && f != -1) throw RangeOverflow("scale factor must be +1 or -1");
    return f == 1 ? seq : negated(seq);
}

// Multiply term i (1-based) by (-1)^(i-1): keeps odd positions, flips even ones.
template <class S>
S alternated(const S& seq) {
    std::vector<Term> t = seq.terms();
    for (std::size_t i = 1; i < t.size(); i += 2) t[i] = static_cast<Term>(-t[i]);
    return detail::from_terms<S>(std::move(t));
}

// Widened term-wise sum/difference; callers that need {+2,0,-2} intermediates
// (the half-sum decompositions) go through these and then halve().
inline std::vector<int> add_wide(const TernarySeq& a, const TernarySeq& b) {
    if (a.size() != b.size()) throw LengthMismatch("add: length mismatch");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = int(a[i]) + int(b[i]);
    return out;
}

inline std::vector<int> sub_wide(const TernarySeq& a, const TernarySeq& b) {
    if (a.size() != b.size()) throw LengthMismatch("sub: length mismatch");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = int(a[i]) - int(b[i]);
    return out;
}

inline TernarySeq narrow_ternary(const std::vector<int>& wide) {
    std::vector<Term> t(wide.size());
    for (std::size_t i = 0; i < wide.size(); ++i) {
        if (wide[i] < -1 || wide[i] > 1)
            throw RangeOverflow("term outside {+1,0,-1} after combination");
        t[i] = static_cast<Term>(wide[i]);
    }
    return TernarySeq(std::move(t));
}

inline TernarySeq halve(const std::vector<int>& wide) {
    std::vector<Term> t(wide.size());
    for (std::size_t i = 0; i < wide.size(); ++i) {
        if (wide[i] % 2 != 0) throw RangeOverflow("halve: odd term");
        int h = wide[i] / 2;
        if (h < -1 || h > 1) throw RangeOverflow("halve: term outside {+1,0,-1}");
        t[i] = static_cast<Term>(h);
    }
    return TernarySeq(std::move(t));
}

// Term-wise sum that must stay ternary; RangeOverflow signals incompatible operands.
inline TernarySeq add(const TernarySeq& a, const TernarySeq& b) {
    return narrow_ternary(add_wide(a, b));
}
inline TernarySeq sub(const TernarySeq& a, const TernarySeq& b) {
    return narrow_ternary(sub_wide(a, b));
}

// A/C = a_1,c_1,a_2,c_2,...,a_m,c_m,a_{m+1}; requires len(A) = len(C)+1.
template <class S>
S interleave(const S& a, const S& c) {
    if (a.size() != c.size() + 1)
        throw LengthMismatch("interleave: first operand must be one longer");
    std::vector<Term> t;
    t.reserve(a.size() + c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        t.push_back(a[i]);
        t.push_back(c[i]);
    }
    t.push_back(a[a.size() - 1]);
    return detail::from_terms<S>(std::move(t));
}

// Inverse of interleave: recovers (A, C) from a length-(2m+1) sequence.
template <class S>
std::pair<S, S> deinterleave(const S& s) {
    if (s.size() % 2 == 0) throw LengthMismatch("deinterleave: length must be odd");
    std::vector<Term> a, c;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i % 2 == 0)
            a.push_back(s[i]);
        else
            c.push_back(s[i]);
    }
    return {detail::from_terms<S>(std::move(a)), detail::from_terms<S>(std::move(c))};
}

template <class S>
S concat(const S& a, const S& b) {
    std::vector<Term> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return detail::from_terms<S>(std::move(t));
}

template <class S, class... Rest>
S concat(const S& a, const S& b, const Rest&... rest) {
    return concat(concat(a, b), rest...);
}

// At most one of g_i, h_i nonzero at every index.
inline bool is_disjoint(const TernarySeq& g, const TernarySeq& h) {
    if (g.size() != h.size()) throw LengthMismatch("is_disjoint: length mismatch");
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0 && h[i] != 0) return false;
    return true;
}

} // namespace hadforge
