#pragma once

// Dense univariate polynomials over GF(2^k), with the factorization stack
// the rest of the library leans on: gcd, squarefree decomposition (char-2
// variant), distinct-degree splitting, and equal-degree splitting via the
// absolute trace map.  Splitting uses a fixed-seed generator so every run
// factors the same way.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyp2/gf2.hpp"

namespace hyp2 {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const FieldCtx& F) : field_(&F) {}
    UPoly(const FieldCtx& F, std::vector<Elem> coeffs) : field_(&F), c_(std::move(coeffs)) {
        for (const Elem& e : c_)
            if (e.field != field_) throw FieldError("coefficient from a different field");
        trim();
    }

    static UPoly zero(const FieldCtx& F) { return UPoly(F); }
    static UPoly constant(const Elem& e) { return UPoly(*e.field, {e}); }
    static UPoly x(const FieldCtx& F) { return UPoly(F, {F.zero(), F.one()}); }

    const FieldCtx& field() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }

    // coefficient of x^i (zero beyond the degree)
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    Elem lead() const { return c_.empty() ? field_->zero() : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool operator==(const UPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    Elem eval(const Elem& x0) const {
        Elem r = field_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
        return r;
    }

    UPoly operator+(const UPoly& o) const {
        if (field_ != o.field_) throw FieldError("polynomials over different fields");
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return UPoly(*field_, std::move(r));
    }

    UPoly operator*(const UPoly& o) const {
        if (field_ != o.field_) throw FieldError("polynomials over different fields");
        if (is_zero() || o.is_zero()) return zero(*field_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UPoly(*field_, std::move(r));
    }

    UPoly scaled(const Elem& s) const {
        std::vector<Elem> r = c_;
        for (Elem& e : r) e = e * s;
        return UPoly(*field_, std::move(r));
    }

    // quotient/remainder; divisor must be nonzero
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::logic_error("polynomial division by zero");
        if (degree() < d.degree()) return {zero(*field_), *this};
        std::vector<Elem> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        std::vector<Elem> q(c_.size() - dd, field_->zero());
        Elem dl = inv(d.lead());
        for (std::size_t qi = q.size(); qi-- > 0;) {
            Elem f = rem[qi + dd] * dl;
            if (f.is_zero()) continue;
            q[qi] = f;
            for (std::size_t j = 0; j <= dd; ++j)
                rem[qi + j] = rem[qi + j] + f * d.c_[j];
        }
        return {UPoly(*field_, std::move(q)), UPoly(*field_, std::move(rem))};
    }

    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly monic() const {
        if (is_zero() || lead() == field_->one()) return *this;
        return scaled(inv(lead()));
    }

    // formal derivative; in char 2 only odd-degree terms survive
    UPoly derivative() const {
        if (degree() < 1) return zero(*field_);
        std::vector<Elem> r(c_.size() - 1, field_->zero());
        for (std::size_t i = 1; i < c_.size(); i += 2) r[i - 1] = c_[i];
        return UPoly(*field_, std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* field_ = nullptr;
    std::vector<Elem> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// base^(2^e) mod f, by e modular squarings
inline UPoly pow_frobenius_mod(UPoly base, unsigned e, const UPoly& f) {
    UPoly r = base % f;
    for (unsigned i = 0; i < e; ++i) r = (r * r) % f;
    return r;
}

namespace detail {

// splitmix64; fixed seed so factorizations are reproducible run to run
struct DetRng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    Elem elem(const FieldCtx& F) { return F.elem(next() & (F.order() - 1)); }
};

} // namespace detail

// square root of f under the Frobenius: requires f'(x) = 0, i.e. only even
// exponents; over a perfect field f = g(x)^2 with g as below
inline UPoly frobenius_root(const UPoly& f) {
    const FieldCtx& F = f.field();
    std::vector<Elem> r((f.degree() / 2) + 1, F.zero());
    for (int i = 0; i <= f.degree(); i += 2) r[i / 2] = sqrt(f.coeff(i));
    return UPoly(F, std::move(r));
}

// Squarefree decomposition in characteristic two: returns pairwise-coprime
// monic squarefree g_i with multiplicities e_i such that f = lc * prod g_i^e_i.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f0) {
    if (f0.is_zero()) throw std::logic_error("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = f0.monic();
    if (f.degree() < 1) return out;
    UPoly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, e] : squarefree_decomposition(frobenius_root(f)))
            out.emplace_back(g, 2 * e);
        return out;
    }
    UPoly g = gcd(f, fp);
    UPoly w = f / g;
    int i = 1;
    while (!w.is_one()) {
        UPoly y = gcd(w, g);
        UPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        g = g / w;
    }
    if (g.degree() > 0) {
        for (auto& [h, e] : squarefree_decomposition(frobenius_root(g)))
            out.emplace_back(h, 2 * e);
    }
    return out;
}

// Distinct-degree splitting of a monic squarefree polynomial: list of
// (product of irreducible factors of degree d, d).
inline std::vector<std::pair<UPoly, int>> distinct_degree_split(UPoly f) {
    const FieldCtx& F = f.field();
    std::vector<std::pair<UPoly, int>> out;
    UPoly h = UPoly::x(F) % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = pow_frobenius_mod(h, F.degree(), f); // h = x^(q^d) mod f
        UPoly g = gcd(h + UPoly::x(F), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting, Cantor-Zassenhaus char-2 variant: f monic
// squarefree, every irreducible factor of degree d.  The absolute trace
// T(u) = u + u^2 + ... + u^(2^(kd-1)) maps each root into F_2, so
// gcd(T(u), f) splits f whenever the roots land on both values.
inline void equal_degree_split(const UPoly& f, int d, detail::DetRng& rng,
                               std::vector<UPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldCtx& F = f.field();
    const unsigned kd = F.degree() * static_cast<unsigned>(d);
    for (;;) {
        std::vector<Elem> uc(static_cast<std::size_t>(f.degree()), F.zero());
        for (Elem& e : uc) e = rng.elem(F);
        UPoly u(F, std::move(uc));
        if (u.is_zero()) continue;
        UPoly t = u % f, s = t;
        for (unsigned i = 1; i < kd; ++i) {
            s = (s * s) % f;
            t = t + s;
        }
        UPoly g = gcd(t, f);
        if (g.degree() == 0 || g.degree() == f.degree())
            g = gcd(t + UPoly::constant(F.one()), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

// Full factorization: monic irreducible factors with multiplicities,
// deterministic order (by degree, then coefficient bit patterns).
inline std::vector<std::pair<UPoly, int>> factor(const UPoly& f) {
    if (f.is_zero()) throw std::logic_error("factorization of zero");
    std::vector<std::pair<UPoly, int>> out;
    detail::DetRng rng;
    for (auto& [sq, mult] : squarefree_decomposition(f)) {
        for (auto& [prod, d] : distinct_degree_split(sq)) {
            std::vector<UPoly> parts;
            equal_degree_split(prod, d, rng, parts);
            for (UPoly& p : parts) out.emplace_back(std::move(p), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        for (std::size_t i = ca.size(); i-- > 0;)
            if (ca[i].bits != cb[i].bits) return ca[i].bits < cb[i].bits;
        return a.second < b.second;
    });
    return out;
}

// All roots in the coefficient field, with multiplicities.
inline std::vector<std::pair<Elem, int>> roots_in_field(const UPoly& f) {
    std::vector<std::pair<Elem, int>> out;
    for (auto& [p, mult] : factor(f))
        if (p.degree() == 1) out.emplace_back(p.coeff(0), mult); // monic x + r has root r
    return out;
}

} // namespace hyp2
