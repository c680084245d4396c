#pragma once

// Sparse multivariate polynomials over F_2 in the symbolic coefficients
// a_0..a_m, b_0..b_2m.  Coefficients are implicitly 1, so a polynomial is a
// set of monomials and addition is symmetric difference.  Monomials are
// exponent vectors kept in descending graded-lex order.
//
// This is what computes the generic discriminant for small m: build the
// generic forms, take the Sylvester determinant by fraction-free Bareiss
// elimination (cofactor expansion for tiny sizes), and divide out the
// leading-coefficient square.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyp2/binform.hpp"

namespace hyp2 {

struct SymRing {
    std::vector<std::string> names;
    std::size_t nvars() const { return names.size(); }
    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using SymRingPtr = std::shared_ptr<const SymRing>;

inline SymRingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const SymRing>(SymRing{std::move(names)});
}

// the coefficient ring of the pair (A, B): a0..am, b0..b2m
inline SymRingPtr delta_ring(int m) {
    std::vector<std::string> names;
    for (int i = 0; i <= m; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 0; j <= 2 * m; ++j) names.push_back("b" + std::to_string(j));
    return make_ring(std::move(names));
}

using SymMono = std::vector<std::uint8_t>;

namespace detail {

inline int mono_degree(const SymMono& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// graded-lex: total degree first, then leftmost differing exponent
inline bool mono_less(const SymMono& a, const SymMono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool mono_divides(const SymMono& d, const SymMono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

} // namespace detail

class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(SymRingPtr ring) : ring_(std::move(ring)) {}

    static SymPoly zero(SymRingPtr ring) { return SymPoly(std::move(ring)); }

    static SymPoly one(SymRingPtr ring) {
        SymPoly p(ring);
        p.terms_.push_back(SymMono(ring->nvars(), 0));
        return p;
    }

    static SymPoly variable(SymRingPtr ring, std::size_t i) {
        SymPoly p(ring);
        SymMono m(ring->nvars(), 0);
        m[i] = 1;
        p.terms_.push_back(std::move(m));
        return p;
    }

    static SymPoly monomial(SymRingPtr ring, SymMono exps) {
        SymPoly p(ring);
        p.terms_.push_back(std::move(exps));
        return p;
    }

    const SymRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<SymMono>& terms() const { return terms_; }
    const SymMono& leading() const { return terms_.front(); }

    bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPoly& o) const { return terms_ != o.terms_; }

    // symmetric difference of the monomial sets (coefficients live in F_2)
    SymPoly operator+(const SymPoly& o) const {
        SymPoly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i] == o.terms_[j]) {
                ++i;
                ++j;
            } else if (detail::mono_less(o.terms_[j], terms_[i])) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    SymPoly operator*(const SymPoly& o) const {
        SymPoly r(ring_);
        if (is_zero() || o.is_zero()) return r;
        const std::size_t nv = ring_->nvars();
        std::vector<SymMono> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const SymMono& s : terms_) {
            for (const SymMono& t : o.terms_) {
                SymMono m(nv);
                for (std::size_t v = 0; v < nv; ++v) {
                    unsigned e = static_cast<unsigned>(s[v]) + static_cast<unsigned>(t[v]);
                    if (e > 0xff) throw std::logic_error("monomial exponent overflow");
                    m[v] = static_cast<std::uint8_t>(e);
                }
                prod.push_back(std::move(m));
            }
        }
        std::sort(prod.begin(), prod.end(),
                  [](const SymMono& a, const SymMono& b) { return detail::mono_less(b, a); });
        // collapse duplicates mod 2
        for (std::size_t i = 0; i < prod.size();) {
            std::size_t j = i;
            while (j < prod.size() && prod[j] == prod[i]) ++j;
            if ((j - i) & 1) r.terms_.push_back(prod[i]);
            i = j;
        }
        return r;
    }

    SymPoly pow(unsigned e) const {
        SymPoly r = one(ring_);
        SymPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (const SymMono& m : terms_) d = std::max(d, detail::mono_degree(m));
        return d;
    }

    // degree when var i carries weight w[i]; nullopt unless homogeneous
    std::optional<int> homogeneous_weight(const std::vector<int>& w) const {
        std::optional<int> deg;
        for (const SymMono& m : terms_) {
            int d = 0;
            for (std::size_t v = 0; v < m.size(); ++v) d += w[v] * m[v];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg;
    }

    bool contains_monomial(const SymMono& m) const {
        for (const SymMono& t : terms_)
            if (t == m) return true;
        return false;
    }

    std::string to_string() const;
    static SymPoly parse(const SymRingPtr& ring, std::string_view text);

private:
    friend std::optional<SymPoly> sym_try_divide(const SymPoly&, const SymPoly&);

    SymRingPtr ring_;
    std::vector<SymMono> terms_; // descending graded-lex, no duplicates
};

// exact division attempt; nullopt when D does not divide P
inline std::optional<SymPoly> sym_try_divide(const SymPoly& P, const SymPoly& D) {
    if (D.is_zero()) throw std::logic_error("symbolic division by zero");
    SymPoly Q(P.ring());
    SymPoly R = P;
    const SymMono& dl = D.leading();
    while (!R.is_zero()) {
        const SymMono& rl = R.leading();
        if (!detail::mono_divides(dl, rl)) return std::nullopt;
        SymMono t(rl.size());
        for (std::size_t v = 0; v < rl.size(); ++v)
            t[v] = static_cast<std::uint8_t>(rl[v] - dl[v]);
        SymPoly tm = SymPoly::monomial(P.ring(), t);
        Q.terms_.push_back(std::move(t)); // quotient terms arrive in descending order
        R = R + tm * D;
    }
    return Q;
}

inline SymPoly sym_divide_exact(const SymPoly& P, const SymPoly& D) {
    auto q = sym_try_divide(P, D);
    if (!q) throw std::logic_error("inexact symbolic division");
    return *q;
}

inline std::string SymPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (t) out += " + ";
        const SymMono& m = terms_[t];
        bool any = false;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (!m[v]) continue;
            if (any) out += "*";
            out += ring_->names[v];
            if (m[v] > 1) out += "^" + std::to_string(m[v]);
            any = true;
        }
        if (!any) out += "1";
    }
    return out;
}

inline SymPoly SymPoly::parse(const SymRingPtr& ring, std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw ParseError("bad polynomial '" + std::string(text) + "': " + why);
    };
    SymPoly acc = SymPoly::zero(ring);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) fail("empty");
    while (pos < text.size()) {
        SymMono m(ring->nvars(), 0);
        bool term_is_zero = false;
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (start == pos) fail("expected a variable");
            std::string tok(text.substr(start, pos - start));
            if (tok == "1") {
                // multiplicative identity: nothing to record
            } else if (tok == "0") {
                term_is_zero = true;
            } else {
                int vi = ring->index_of(tok);
                if (vi < 0) fail("unknown variable '" + tok + "'");
                unsigned e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    std::size_t es = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (es == pos) fail("expected an exponent");
                    e = static_cast<unsigned>(std::stoul(std::string(text.substr(es, pos - es))));
                }
                unsigned tot = m[static_cast<std::size_t>(vi)] + e;
                if (tot > 0xff) fail("exponent too large");
                m[static_cast<std::size_t>(vi)] = static_cast<std::uint8_t>(tot);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!term_is_zero)
            acc = acc + SymPoly::monomial(ring, std::move(m));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
        skip_ws();
        if (pos == text.size()) fail("trailing '+'");
    }
    return acc;
}

// substitute images[i] for variable i; images live in the target ring
inline SymPoly sym_substitute(const SymPoly& P, const SymRingPtr& target,
                              const std::vector<SymPoly>& images) {
    if (images.size() != P.ring()->nvars())
        throw std::invalid_argument("substitution needs one image per variable");
    SymPoly acc = SymPoly::zero(target);
    for (const SymMono& m : P.terms()) {
        SymPoly term = SymPoly::one(target);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v]) term = term * images[v].pow(m[v]);
        acc = acc + term;
    }
    return acc;
}

// evaluate at concrete coefficients: variable i -> A.coeff(i) for i <= m,
// b_j -> B.coeff(j) after that
inline Elem sym_eval(const SymPoly& P, const BinaryForm& A, const BinaryForm& B) {
    const int m = A.degree();
    if (B.degree() != 2 * m)
        throw std::invalid_argument("sym_eval: B must have degree 2m");
    if (P.ring()->nvars() != static_cast<std::size_t>(3 * m + 2))
        throw std::invalid_argument("sym_eval: ring shape does not match the pair (A, B)");
    if (&A.field() != &B.field()) throw FieldError("sym_eval: forms over different fields");
    const FieldCtx& K = A.field();
    std::vector<Elem> vals;
    for (int i = 0; i <= m; ++i) vals.push_back(A.coeff(i));
    for (int j = 0; j <= 2 * m; ++j) vals.push_back(B.coeff(j));
    Elem acc = K.zero();
    for (const SymMono& mo : P.terms()) {
        Elem t = K.one();
        for (std::size_t v = 0; v < mo.size(); ++v)
            if (mo[v]) t = t * pow(vals[v], mo[v]);
        acc = acc + t;
    }
    return acc;
}

namespace detail {

// symbolic binary form: coefficient vector c_0..c_d in the X^(d-i) Y^i basis
using SymForm = std::vector<SymPoly>;

inline SymForm sym_form_dx(const SymForm& f) {
    const int d = static_cast<int>(f.size()) - 1;
    SymForm r;
    for (int i = 0; i < d; ++i)
        r.push_back(((d - i) & 1) ? f[static_cast<std::size_t>(i)]
                                  : SymPoly::zero(f[0].ring()));
    return r;
}

inline SymForm sym_form_dy(const SymForm& f) {
    const int d = static_cast<int>(f.size()) - 1;
    SymForm r;
    for (int i = 1; i <= d; ++i)
        r.push_back((i & 1) ? f[static_cast<std::size_t>(i)] : SymPoly::zero(f[0].ring()));
    return r;
}

inline SymForm sym_form_mul(const SymForm& a, const SymForm& b) {
    SymForm r(a.size() + b.size() - 1, SymPoly::zero(a[0].ring()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

inline SymForm sym_form_add(const SymForm& a, const SymForm& b) {
    SymForm r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline SymPoly sym_det_cofactor(const std::vector<std::vector<SymPoly>>& M,
                                std::vector<std::size_t>& cols, std::size_t row) {
    const SymRingPtr& ring = M[0][0].ring();
    if (cols.empty()) return SymPoly::one(ring);
    SymPoly acc = SymPoly::zero(ring);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const SymPoly& e = M[row][cols[ci]];
        if (e.is_zero()) continue;
        std::size_t saved = cols[ci];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(ci));
        acc = acc + e * sym_det_cofactor(M, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(ci), saved);
    }
    return acc;
}

// fraction-free Bareiss elimination; every division is exact over the
// integral domain F_2[a, b]
inline SymPoly sym_determinant(std::vector<std::vector<SymPoly>> M) {
    const std::size_t n = M.size();
    const SymRingPtr& ring = M[0][0].ring();
    if (n <= 6) {
        std::vector<std::size_t> cols(n);
        std::iota(cols.begin(), cols.end(), 0);
        return sym_det_cofactor(M, cols, 0);
    }
    SymPoly prev = SymPoly::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return SymPoly::zero(ring); // column of zeros below
            std::swap(M[k], M[swap_row]); // char 2: no sign change
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = sym_divide_exact(M[i][j] * M[k][k] + M[i][k] * M[k][j], prev);
            M[i][k] = SymPoly::zero(ring);
        }
        prev = M[k][k];
    }
    return M[n - 1][n - 1];
}

} // namespace detail

enum class PartialVar { X, Y };

// Sylvester resultant of the generic pair: A of degree m with symbolic
// coefficients, G = (A'_X)^2 B + (B'_X)^2 of formal degree 4m-2 (or the
// Y-derivative analogue).  Guarded to m <= 3; the symbolic determinant
// grows fast, and the numeric path covers larger m.
inline SymPoly sym_resultant_generic(int m, PartialVar side = PartialVar::X) {
    if (m < 1 || m > 3) throw RangeError("sym_resultant_generic supports 1 <= m <= 3");
    SymRingPtr ring = delta_ring(m);
    detail::SymForm A, B;
    for (int i = 0; i <= m; ++i) A.push_back(SymPoly::variable(ring, static_cast<std::size_t>(i)));
    for (int j = 0; j <= 2 * m; ++j)
        B.push_back(SymPoly::variable(ring, static_cast<std::size_t>(m + 1 + j)));

    detail::SymForm dA = side == PartialVar::X ? detail::sym_form_dx(A) : detail::sym_form_dy(A);
    detail::SymForm dB = side == PartialVar::X ? detail::sym_form_dx(B) : detail::sym_form_dy(B);
    detail::SymForm G =
        detail::sym_form_add(detail::sym_form_mul(detail::sym_form_mul(dA, dA), B),
                             detail::sym_form_mul(dB, dB));

    const int d1 = m, d2 = 4 * m - 2;
    const std::size_t n = static_cast<std::size_t>(d1 + d2);
    std::vector<std::vector<SymPoly>> M(n, std::vector<SymPoly>(n, SymPoly::zero(ring)));
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j <= d1; ++j)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = A[static_cast<std::size_t>(j)];
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j <= d2; ++j)
            M[static_cast<std::size_t>(d2 + i)][static_cast<std::size_t>(i + j)] = G[static_cast<std::size_t>(j)];
    return detail::sym_determinant(std::move(M));
}

// The generic discriminant: the exact quotient of the generic resultant by
// a_0^2, cross-checked against the a_m^2 quotient on the Y side.
inline SymPoly sym_delta(int m) {
    if (m < 1 || m > 3) throw RangeError("sym_delta supports 1 <= m <= 3");
    SymRingPtr ring = delta_ring(m);
    SymMono a0sq(ring->nvars(), 0);
    a0sq[0] = 2;
    SymMono amsq(ring->nvars(), 0);
    amsq[static_cast<std::size_t>(m)] = 2;

    SymPoly qx = sym_divide_exact(sym_resultant_generic(m, PartialVar::X),
                                  SymPoly::monomial(ring, a0sq));
    SymPoly qy = sym_divide_exact(sym_resultant_generic(m, PartialVar::Y),
                                  SymPoly::monomial(ring, amsq));
    if (qx != qy)
        throw std::logic_error("the two generic resultant routes disagree");
    return qx;
}

} // namespace hyp2
