#pragma once

// Arithmetic in GF(2^k), polynomial-basis representation.
//
// A FieldCtx holds the extension degree k and the irreducible modulus of
// F_2[t] that defines the field.  Contexts are interned: FieldCtx::get
// returns a stable pointer, so two elements belong to the same field
// exactly when their ctx pointers compare equal.  Elements are k-bit
// vectors (bit i = coefficient of t^i) packed into a uint64_t, which caps
// k at 63 -- far beyond anything the rest of the library asks for.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "hyp2/errors.hpp"

namespace hyp2 {

// ---------------------------------------------------------------------------
// Polynomials over F_2 packed into machine words (bit i = coeff of t^i).
// Only what modulus handling needs: degree, modular arithmetic, gcd, and
// the Rabin irreducibility test.

namespace bitpoly {

inline int deg(std::uint64_t p) {
    return p ? 63 - __builtin_clzll(p) : -1;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
    const int dm = deg(m);
    for (int d = deg(a); d >= dm; d = deg(a))
        a ^= m << (d - dm);
    return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    unsigned __int128 acc = 0;
    while (b) {
        acc ^= static_cast<unsigned __int128>(a) << __builtin_ctzll(b);
        b &= b - 1;
    }
    // reduce the (at most 126-degree) product
    const int dm = deg(m);
    while (true) {
        std::uint64_t hi = static_cast<std::uint64_t>(acc >> 64);
        int d = hi ? 64 + deg(hi) : deg(static_cast<std::uint64_t>(acc));
        if (d < dm) break;
        acc ^= static_cast<unsigned __int128>(m) << (d - dm);
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// x^(2^e) mod m, by e modular squarings.
inline std::uint64_t x_pow_pow2_mod(unsigned e, std::uint64_t m) {
    std::uint64_t r = mod(2u, m);
    for (unsigned i = 0; i < e; ++i) r = mulmod(r, r, m);
    return r;
}

// Rabin's criterion: m (monic, degree n) is irreducible iff x^(2^n) == x
// (mod m) and gcd(x^(2^(n/p)) - x, m) = 1 for every prime p | n.
inline bool irreducible(std::uint64_t m) {
    const int n = deg(m);
    if (n < 1) return false;
    if (x_pow_pow2_mod(static_cast<unsigned>(n), m) != mod(2u, m)) return false;
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::uint64_t h = x_pow_pow2_mod(static_cast<unsigned>(n / p), m) ^ mod(2u, m);
        if (h == 0 || deg(gcd(h, m)) > 0) return false;
    }
    return true;
}

// Smallest (as an integer) monic irreducible of degree k.
inline std::uint64_t min_irreducible(unsigned k) {
    for (std::uint64_t v = std::uint64_t(1) << k;; ++v) {
        if (irreducible(v)) return v;
    }
}

} // namespace bitpoly

class FieldCtx;

// An element of GF(2^k).  Carries its field; mixing fields is a hard error.
struct Elem {
    const FieldCtx* field = nullptr;
    std::uint64_t bits = 0;

    bool is_zero() const { return bits == 0; }
    bool operator==(const Elem& o) const { return field == o.field && bits == o.bits; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
};

class FieldCtx {
public:
    // The field GF(2^k) with the library's default modulus for degree k:
    // frozen table below for k <= 16, lexicographically-least search above.
    static const FieldCtx& get(unsigned k) { return get(k, default_modulus(k)); }

    // Explicit modulus, bit i = coefficient of t^i; must be monic of degree
    // exactly k and irreducible.
    static const FieldCtx& get(unsigned k, std::uint64_t modulus) {
        if (k < 1 || k > 63)
            throw FieldError("field degree must be in [1, 63], got " + std::to_string(k));
        if (bitpoly::deg(modulus) != static_cast<int>(k))
            throw FieldError("modulus degree does not match field degree");
        if (!bitpoly::irreducible(modulus))
            throw FieldError("modulus is reducible over F_2");
        static std::mutex mu;
        static std::map<std::pair<unsigned, std::uint64_t>, std::unique_ptr<FieldCtx>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = registry[{k, modulus}];
        if (!slot) slot.reset(new FieldCtx(k, modulus));
        return *slot;
    }

    // Field spec strings: "2^k" (default modulus) or "2^k/0x<hex>".
    static const FieldCtx& parse_spec(std::string_view spec);

    unsigned degree() const { return k_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return std::uint64_t(1) << k_; }

    std::string spec_string() const {
        std::string s = "2^" + std::to_string(k_);
        if (modulus_ != default_modulus(k_)) s += "/0x" + hex_of(modulus_);
        return s;
    }

    Elem zero() const { return {this, 0}; }
    Elem one() const { return {this, 1}; }
    Elem gen() const { return {this, 2}; } // the class of t

    Elem elem(std::uint64_t bits) const {
        if (bits >> k_)
            throw FieldError("element 0x" + hex_of(bits) + " out of range for " + spec_string());
        return {this, bits};
    }

    // --- low-level bit arithmetic -----------------------------------------

    std::uint64_t mul_bits(std::uint64_t a, std::uint64_t b) const {
        unsigned __int128 acc = 0;
        while (b) {
            acc ^= static_cast<unsigned __int128>(a) << __builtin_ctzll(b);
            b &= b - 1;
        }
        while (true) {
            std::uint64_t hi = static_cast<std::uint64_t>(acc >> 64);
            int d = hi ? 64 + bitpoly::deg(hi) : bitpoly::deg(static_cast<std::uint64_t>(acc));
            if (d < static_cast<int>(k_)) break;
            acc ^= static_cast<unsigned __int128>(modulus_) << (d - k_);
        }
        return static_cast<std::uint64_t>(acc);
    }

    std::uint64_t inv_bits(std::uint64_t a) const {
        if (a == 0) throw FieldError("inverse of zero in " + spec_string());
        // extended Euclid in F_2[t]; accumulators kept wide, reduced at the end
        unsigned __int128 u = a, v = modulus_;
        unsigned __int128 g1 = 1, g2 = 0;
        while (u != 1) {
            int du = deg128(u), dv = deg128(v);
            int j = du - dv;
            if (j < 0) {
                std::swap(u, v);
                std::swap(g1, g2);
                j = -j;
            }
            u ^= v << j;
            g1 ^= g2 << j;
            if (u == 0) throw FieldError("element not invertible (reducible modulus?)");
        }
        while (true) {
            std::uint64_t hi = static_cast<std::uint64_t>(g1 >> 64);
            int d = hi ? 64 + bitpoly::deg(hi) : bitpoly::deg(static_cast<std::uint64_t>(g1));
            if (d < static_cast<int>(k_)) break;
            g1 ^= static_cast<unsigned __int128>(modulus_) << (d - k_);
        }
        return static_cast<std::uint64_t>(g1);
    }

    static std::string hex_of(std::uint64_t v) {
        if (v == 0) return "0";
        char buf[17];
        int i = 16;
        buf[16] = '\0';
        while (v) {
            buf[--i] = "0123456789abcdef"[v & 0xf];
            v >>= 4;
        }
        return std::string(buf + i);
    }

    static std::uint64_t default_modulus(unsigned k) {
        // lexicographically least monic irreducible per degree, frozen for
        // reproducibility; recomputed on demand past the table
        static constexpr std::uint64_t table[17] = {
            0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,
            0x11b,  0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,
            0x1002b};
        if (k >= 1 && k <= 16) return table[k];
        if (k < 1 || k > 63)
            throw FieldError("field degree must be in [1, 63], got " + std::to_string(k));
        return bitpoly::min_irreducible(k);
    }

private:
    FieldCtx(unsigned k, std::uint64_t modulus) : k_(k), modulus_(modulus) {}
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    static int deg128(unsigned __int128 v) {
        std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
        return hi ? 64 + bitpoly::deg(hi) : bitpoly::deg(static_cast<std::uint64_t>(v));
    }

    unsigned k_;
    std::uint64_t modulus_;
};

inline void require_same_field(const Elem& a, const Elem& b) {
    if (a.field != b.field)
        throw FieldError("elements of different fields ("
                         + (a.field ? a.field->spec_string() : std::string("null")) + " vs "
                         + (b.field ? b.field->spec_string() : std::string("null")) + ")");
}

inline Elem operator+(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field, a.bits ^ b.bits};
}

inline Elem operator*(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return {a.field, a.field->mul_bits(a.bits, b.bits)};
}

inline Elem inv(const Elem& a) {
    return {a.field, a.field->inv_bits(a.bits)};
}

inline Elem operator/(const Elem& a, const Elem& b) {
    require_same_field(a, b);
    return a * inv(b);
}

inline Elem square(const Elem& a) { return a * a; }

inline Elem pow(Elem base, std::uint64_t e) {
    Elem r = base.field->one();
    while (e) {
        if (e & 1) r = r * base;
        base = square(base);
        e >>= 1;
    }
    return r;
}

// Square roots exist and are unique in characteristic two:
// sqrt(x) = x^(2^(k-1)), i.e. k-1 squarings.
inline Elem sqrt(const Elem& a) {
    Elem r = a;
    for (unsigned i = 1; i < a.field->degree(); ++i) r = square(r);
    return r;
}

// Absolute trace GF(2^k) -> F_2:  Tr(x) = x + x^2 + ... + x^(2^(k-1)).
inline int trace(const Elem& a) {
    Elem s = a, t = a;
    for (unsigned i = 1; i < a.field->degree(); ++i) {
        t = square(t);
        s = s + t;
    }
    if (s.bits > 1)
        throw std::logic_error("trace fell outside F_2 -- broken field arithmetic");
    return static_cast<int>(s.bits);
}

// Both roots of y^2 + y = c, or empty when Tr(c) = 1.  The defining map
// y -> y^2 + y is F_2-linear with kernel {0, 1}; a particular solution is
// found by Gaussian elimination over F_2 in the polynomial basis.
inline std::vector<Elem> solve_artin_schreier(const Elem& c) {
    const FieldCtx& F = *c.field;
    if (trace(c) == 1) return {};
    const unsigned k = F.degree();
    // rows[i] = (column mask for unknown bits y_j, augmented bit)
    std::vector<std::uint64_t> rows(k, 0);
    std::vector<int> rhs(k, 0);
    for (unsigned j = 0; j < k; ++j) {
        Elem ej = F.elem(std::uint64_t(1) << j);
        std::uint64_t img = (square(ej) + ej).bits;
        for (unsigned i = 0; i < k; ++i)
            if ((img >> i) & 1) rows[i] |= std::uint64_t(1) << j;
    }
    for (unsigned i = 0; i < k; ++i) rhs[i] = static_cast<int>((c.bits >> i) & 1);

    std::uint64_t y = 0;
    std::vector<int> pivot_col(k, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < k && row < k; ++col) {
        unsigned p = row;
        while (p < k && !((rows[p] >> col) & 1)) ++p;
        if (p == k) continue;
        std::swap(rows[p], rows[row]);
        std::swap(rhs[p], rhs[row]);
        for (unsigned r2 = 0; r2 < k; ++r2) {
            if (r2 != row && ((rows[r2] >> col) & 1)) {
                rows[r2] ^= rows[row];
                rhs[r2] ^= rhs[row];
            }
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (unsigned r2 = row; r2 < k; ++r2)
        if (rhs[r2]) throw std::logic_error("Artin-Schreier system inconsistent despite Tr = 0");
    for (unsigned r2 = 0; r2 < row; ++r2)
        if (rhs[r2]) y |= std::uint64_t(1) << pivot_col[r2];

    Elem y0 = F.elem(y);
    Elem y1 = y0 + F.one();
    if (square(y0) + y0 != c)
        throw std::logic_error("Artin-Schreier solver produced a non-root");
    if (y1.bits < y0.bits) std::swap(y0, y1);
    return {y0, y1};
}

// --- hex element serialization ---------------------------------------------

inline std::string to_hex(const Elem& a) {
    return "0x" + FieldCtx::hex_of(a.bits);
}

inline Elem elem_from_hex(const FieldCtx& F, std::string_view s) {
    std::string_view body = s;
    if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X'))
        body.remove_prefix(2);
    if (body.empty() || body.size() > 16)
        throw ParseError("bad hex element '" + std::string(s) + "'");
    std::uint64_t v = 0;
    for (char ch : body) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw ParseError("bad hex digit in element '" + std::string(s) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return F.elem(v); // range check -> FieldError
}

inline const FieldCtx& FieldCtx::parse_spec(std::string_view spec) {
    if (spec.size() < 3 || spec[0] != '2' || spec[1] != '^')
        throw ParseError("bad field spec '" + std::string(spec) + "' (expected \"2^k\" or \"2^k/0x<hex>\")");
    std::string_view rest = spec.substr(2);
    std::size_t slash = rest.find('/');
    std::string_view kpart = slash == std::string_view::npos ? rest : rest.substr(0, slash);
    unsigned k = 0;
    if (kpart.empty() || kpart.size() > 2) throw ParseError("bad field degree in '" + std::string(spec) + "'");
    for (char ch : kpart) {
        if (ch < '0' || ch > '9') throw ParseError("bad field degree in '" + std::string(spec) + "'");
        k = k * 10 + static_cast<unsigned>(ch - '0');
    }
    if (slash == std::string_view::npos) return get(k);
    std::string_view mpart = rest.substr(slash + 1);
    if (mpart.size() < 3 || mpart[0] != '0' || (mpart[1] != 'x' && mpart[1] != 'X'))
        throw ParseError("modulus must be hex '0x...' in '" + std::string(spec) + "'");
    std::uint64_t m = 0;
    for (char ch : mpart.substr(2)) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw ParseError("bad hex digit in modulus of '" + std::string(spec) + "'");
        if (m >> 60) throw ParseError("modulus too large in '" + std::string(spec) + "'");
        m = (m << 4) | static_cast<std::uint64_t>(d);
    }
    return get(k, m);
}

} // namespace hyp2
