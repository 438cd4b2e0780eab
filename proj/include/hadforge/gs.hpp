#pragma once

// Circulants, the Goethals-Seidel array and Hadamard verification. Matrices
// are +-1 valued with rows bit-packed (+1 -> bit 1); row dot products reduce
// to XOR/popcount.

#include <cstdint>
#include <string>
#include <vector>

#include "hadforge/designs.hpp"
#include "hadforge/errors.hpp"
#include "hadforge/seq.hpp"

namespace hadforge {

// Square +-1 matrix. Construction does not imply the Hadamard property;
// is_hadamard() checks it.
class HadamardMatrix {
public:
    HadamardMatrix() = default;
    explicit HadamardMatrix(int order)
        : order_(order), words_((order + 63) / 64), bits_(std::size_t(order) * words_, 0) {}

    int order() const { return order_; }
    int words() const { return words_; }

    int get(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1 ? +1 : -1;
    }
    void set(int i, int j, int value) {
        std::uint64_t& w = bits_[std::size_t(i) * words_ + (j >> 6)];
        std::uint64_t bit = std::uint64_t(1) << (j & 63);
        if (value > 0)
            w |= bit;
        else
            w &= ~bit;
    }
    const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i) * words_; }

    // Raw export: order line, then one row per line over "+-".
    std::string raw_str() const {
        std::string out = std::to_string(order_) + "\n";
        for (int i = 0; i < order_; ++i) {
            for (int j = 0; j < order_; ++j) out.push_back(get(i, j) > 0 ? '+' : '-');
            out.push_back('\n');
        }
        return out;
    }

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    int order_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// All distinct row pairs orthogonal: popcount of XOR equals order/2.
inline bool is_hadamard(const HadamardMatrix& h) {
    const int n = h.order();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (n % 2 != 0) return false;
    const int w = h.words();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t *ri = h.row(i), *rj = h.row(j);
            int diff = 0;
            for (int k = 0; k < w; ++k) diff += __builtin_popcountll(ri[k] ^ rj[k]);
            if (diff != n / 2) return false;
        }
    }
    return true;
}

// Circulant with X as first row: row i is X cyclically right-shifted by i.
inline HadamardMatrix circulant(const BinarySeq& x) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw ShapeError("circulant: empty sequence");
    HadamardMatrix z(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z.set(i, j, x[((j - i) % d + d) % d]);
    return z;
}

inline HadamardMatrix transpose(const HadamardMatrix& h) {
    HadamardMatrix t(h.order());
    for (int i = 0; i < h.order(); ++i)
        for (int j = 0; j < h.order(); ++j) t.set(j, i, h.get(i, j));
    return t;
}

// Goethals-Seidel array on the circulants of a BS(d,d) quadruple:
//
//     [  Z0    Z1R   Z2R   Z3R ]
//     [ -Z1R   Z0   -RZ3   RZ2 ]
//     [ -Z2R   RZ3   Z0   -RZ1 ]
//     [ -Z3R  -RZ2   RZ1   Z0  ]
//
// R (ones on the back-diagonal) is never materialized: ZR is column reversal
// and RZ is row reversal, folded into the circulant index arithmetic.
inline HadamardMatrix gs_assemble(const BaseSeqQuad& q) {
    if (q.m() != q.n()) throw InvalidBS("gs_assemble: quadruple must have shape (d,d)");
    if (!validate_bs(q)) throw InvalidBS("gs_assemble: input fails validate_bs");
    const int d = static_cast<int>(q.n());
    const BinarySeq* z[4] = {&q.a, &q.b, &q.c, &q.d};

    // entry of Z_k (plain), Z_k R, R Z_k at block position (i,j)
    auto plain = [&](int k, int i, int j) { return int((*z[k])[((j - i) % d + d) % d]); };
    auto zr = [&](int k, int i, int j) { return int((*z[k])[((d - 1 - j - i) % d + d) % d]); };
    auto rz = [&](int k, int i, int j) { return int((*z[k])[(i + j + 1) % d]); };

    HadamardMatrix h(4 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            int block[4][4] = {
                {plain(0, i, j), zr(1, i, j), zr(2, i, j), zr(3, i, j)},
                {-zr(1, i, j), plain(0, i, j), -rz(3, i, j), rz(2, i, j)},
                {-zr(2, i, j), rz(3, i, j), plain(0, i, j), -rz(1, i, j)},
                {-zr(3, i, j), -rz(2, i, j), rz(1, i, j), plain(0, i, j)},
            };
            for (int p = 0; p < 4; ++p)
                for (int r = 0; r < 4; ++r) h.set(p * d + i, r * d + j, block[p][r]);
        }
    }
    if (!is_hadamard(h))
        throw PostconditionFailure("gs_assemble: array output is not Hadamard");
    return h;
}

} // namespace hadforge
