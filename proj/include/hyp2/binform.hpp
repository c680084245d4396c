#pragma once

// Binary forms F(X,Y) = c_0 X^d + c_1 X^(d-1) Y + ... + c_d Y^d over GF(2^k),
// with formal partial derivatives, GL(2) substitution, Sylvester resultants
// on declared degrees, the characteristic-two binary discriminant, and
// complete factorization into points of P^1 over minimal extensions.
//
// Degrees are declared: a form keeps its degree even when leading
// coefficients vanish.  A vanishing c_0 means a root at (1:0); the
// resultant conventions below treat that case uniformly.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyp2/extfield.hpp"

namespace hyp2 {

// Invertible 2x2 matrix (p q; r s) acting on column vectors (X, Y).
struct GL2 {
    Elem p, q, r, s;

    GL2(Elem p_, Elem q_, Elem r_, Elem s_) : p(p_), q(q_), r(r_), s(s_) {
        require_same_field(p, q);
        require_same_field(p, r);
        require_same_field(p, s);
        if (det().is_zero()) throw std::invalid_argument("GL2 matrix is singular");
    }

    static GL2 identity(const FieldCtx& F) { return GL2(F.one(), F.zero(), F.zero(), F.one()); }

    const FieldCtx& field() const { return *p.field; }
    Elem det() const { return p * s + q * r; } // ps - qr, char 2

    GL2 inverse() const {
        Elem d = inv(det());
        return GL2(s * d, q * d, r * d, p * d); // adjugate; -1 = 1
    }

    GL2 operator*(const GL2& o) const {
        return GL2(p * o.p + q * o.r, p * o.q + q * o.s,
                   r * o.p + s * o.r, r * o.q + s * o.s);
    }

    bool operator==(const GL2& o) const { return p == o.p && q == o.q && r == o.r && s == o.s; }
};

class BinaryForm {
public:
    BinaryForm() = default;

    BinaryForm(const FieldCtx& F, std::vector<Elem> coeffs)
        : field_(&F), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("a form needs at least one coefficient");
        for (const Elem& e : c_)
            if (e.field != field_) throw FieldError("form coefficient from a different field");
    }

    static BinaryForm zero(const FieldCtx& F, int degree) {
        return BinaryForm(F, std::vector<Elem>(static_cast<std::size_t>(degree) + 1, F.zero()));
    }

    static BinaryForm constant(const Elem& e) { return BinaryForm(*e.field, {e}); }

    const FieldCtx& field() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(int i) const { return c_[static_cast<std::size_t>(i)]; } // coeff of X^(d-i) Y^i
    const std::vector<Elem>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Elem& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const BinaryForm& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    Elem eval(const Elem& x, const Elem& y) const {
        require_same_field(x, y);
        if (x.field != field_) throw FieldError("evaluation point in a different field");
        const int d = degree();
        std::vector<Elem> xp(static_cast<std::size_t>(d) + 1, field_->one());
        std::vector<Elem> yp(static_cast<std::size_t>(d) + 1, field_->one());
        for (int i = 1; i <= d; ++i) {
            xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
            yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
        }
        Elem acc = field_->zero();
        for (int i = 0; i <= d; ++i)
            acc = acc + coeff(i) * xp[static_cast<std::size_t>(d - i)] * yp[static_cast<std::size_t>(i)];
        return acc;
    }

    // formal d/dX; the term c_i X^(d-i) Y^i survives exactly when d-i is odd
    BinaryForm dX() const {
        const int d = degree();
        if (d < 1) throw RangeError("derivative of a degree-0 form");
        std::vector<Elem> r(static_cast<std::size_t>(d), field_->zero());
        for (int i = 0; i < d; ++i)
            if ((d - i) & 1) r[static_cast<std::size_t>(i)] = coeff(i);
        return BinaryForm(*field_, std::move(r));
    }

    // formal d/dY
    BinaryForm dY() const {
        const int d = degree();
        if (d < 1) throw RangeError("derivative of a degree-0 form");
        std::vector<Elem> r(static_cast<std::size_t>(d), field_->zero());
        for (int i = 1; i <= d; ++i)
            if (i & 1) r[static_cast<std::size_t>(i - 1)] = coeff(i);
        return BinaryForm(*field_, std::move(r));
    }

    BinaryForm operator+(const BinaryForm& o) const {
        if (field_ != o.field_) throw FieldError("forms over different fields");
        if (degree() != o.degree()) throw std::invalid_argument("adding forms of different degrees");
        std::vector<Elem> r = c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.c_[i];
        return BinaryForm(*field_, std::move(r));
    }

    BinaryForm operator*(const BinaryForm& o) const {
        if (field_ != o.field_) throw FieldError("forms over different fields");
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return BinaryForm(*field_, std::move(r));
    }

    BinaryForm scaled(const Elem& s) const {
        std::vector<Elem> r = c_;
        for (Elem& e : r) e = e * s;
        return BinaryForm(*field_, std::move(r));
    }

    // F o sigma, i.e. F(pX + qY, rX + sY); same declared degree
    BinaryForm substitute(const GL2& sigma) const {
        if (&sigma.field() != field_) throw FieldError("substitution matrix over a different field");
        const int d = degree();
        BinaryForm u(*field_, {sigma.p, sigma.q});
        BinaryForm v(*field_, {sigma.r, sigma.s});
        std::vector<BinaryForm> up, vp;
        up.push_back(constant(field_->one()));
        vp.push_back(constant(field_->one()));
        for (int j = 1; j <= d; ++j) {
            up.push_back(up.back() * u);
            vp.push_back(vp.back() * v);
        }
        BinaryForm acc = zero(*field_, d);
        for (int i = 0; i <= d; ++i) {
            if (coeff(i).is_zero()) continue;
            acc = acc + (up[static_cast<std::size_t>(d - i)] * vp[static_cast<std::size_t>(i)]).scaled(coeff(i));
        }
        return acc;
    }

    // exact quotient by Y^e; the first e coefficients must vanish
    BinaryForm quotient_by_Y_power(int e) const {
        for (int i = 0; i < e; ++i)
            if (!coeff(i).is_zero()) throw std::logic_error("form not divisible by Y^e");
        return BinaryForm(*field_, std::vector<Elem>(c_.begin() + e, c_.end()));
    }

    // exact quotient by X^e; the last e coefficients must vanish
    BinaryForm quotient_by_X_power(int e) const {
        for (int i = 0; i < e; ++i)
            if (!coeff(degree() - i).is_zero()) throw std::logic_error("form not divisible by X^e");
        return BinaryForm(*field_, std::vector<Elem>(c_.begin(), c_.end() - e));
    }

    BinaryForm map(const Embedding& emb) const {
        if (&emb.src() != field_) throw FieldError("embedding source mismatch");
        std::vector<Elem> r;
        r.reserve(c_.size());
        for (const Elem& e : c_) r.push_back(emb.apply(e));
        return BinaryForm(emb.dst(), std::move(r));
    }

    // multiplicity of the point (1:0), i.e. the number of leading vanishing
    // coefficients; equals degree()+1 for the zero form
    int multiplicity_at_infinity() const {
        int e = 0;
        while (e <= degree() && coeff(e).is_zero()) ++e;
        return e;
    }

    // F(x, 1) as a univariate polynomial (coefficient of x^j is c_(d-j))
    UPoly dehomogenized() const {
        std::vector<Elem> p(c_.rbegin(), c_.rend());
        return UPoly(*field_, std::move(p));
    }

private:
    const FieldCtx* field_ = nullptr;
    std::vector<Elem> c_;
};

// Resultant of two binary forms on their declared degrees: the determinant
// of the (d1+d2) x (d1+d2) Sylvester matrix.  Vanishing leading coefficients
// are just roots at (1:0); Res = 0 iff the forms share a root in P^1 over
// the algebraic closure.
inline Elem resultant(const BinaryForm& F, const BinaryForm& G) {
    if (&F.field() != &G.field()) throw FieldError("resultant of forms over different fields");
    const FieldCtx& K = F.field();
    const int d1 = F.degree(), d2 = G.degree();
    const int n = d1 + d2;
    if (n == 0) return K.one();
    std::vector<std::vector<Elem>> M(static_cast<std::size_t>(n),
                                     std::vector<Elem>(static_cast<std::size_t>(n), K.zero()));
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j <= d1; ++j)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = F.coeff(j);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j <= d2; ++j)
            M[static_cast<std::size_t>(d2 + i)][static_cast<std::size_t>(i + j)] = G.coeff(j);

    // Gaussian elimination; characteristic two spares us sign bookkeeping
    Elem det = K.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row) {
            if (!M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) return K.zero();
        if (piv != col) std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(col)]);
        Elem pv = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = det * pv;
        Elem pinv = inv(pv);
        for (int row = col + 1; row < n; ++row) {
            Elem f = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * pinv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j)
                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]
                    + f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    return det;
}

// A point of P^1, normalized to (x:1) or (1:0).
struct ProjPoint {
    Elem x, y;
    bool at_infinity() const { return y.is_zero(); }
    bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y; }
};

// A root of a form: a point over its minimal extension, the multiplicity,
// and the embedding of the coefficient field into the point's field.
struct FormRoot {
    ProjPoint point;
    int multiplicity;
    const Embedding* emb; // base field -> point field
};

// Complete factorization of a nonzero form into points of P^1 over the
// algebraic closure, realized over minimal extensions.  Multiplicities sum
// to the declared degree.
inline std::vector<FormRoot> roots_with_multiplicity(const BinaryForm& F) {
    if (F.is_zero()) throw RangeError("roots of the zero form");
    const FieldCtx& K = F.field();
    const Embedding& id = extend(K, 1);
    std::vector<FormRoot> out;
    UPoly p = F.dehomogenized();
    if (p.degree() >= 1) {
        for (auto& [h, mult] : factor(p)) {
            if (h.degree() == 1) {
                out.push_back({{h.coeff(0), K.one()}, mult, &id});
            } else {
                const Embedding& emb = extend(K, static_cast<unsigned>(h.degree()));
                std::vector<Elem> hc;
                for (const Elem& e : h.coeffs()) hc.push_back(emb.apply(e));
                UPoly hext(emb.dst(), std::move(hc));
                auto rs = roots_in_field(hext);
                if (static_cast<int>(rs.size()) != h.degree())
                    throw std::logic_error("irreducible factor did not split in its splitting field");
                std::sort(rs.begin(), rs.end(),
                          [](const auto& a, const auto& b) { return a.first.bits < b.first.bits; });
                for (auto& [r, rm] : rs)
                    out.push_back({{r, emb.dst().one()}, mult, &emb});
            }
        }
    }
    const int einf = F.multiplicity_at_infinity();
    if (einf > 0) out.push_back({{K.one(), K.zero()}, einf, &id});
    int total = 0;
    for (const FormRoot& r : out) total += r.multiplicity;
    if (total != F.degree()) throw std::logic_error("root multiplicities do not sum to the degree");
    return out;
}

// Multiplicity of the point P (over emb.dst()) as a root of F (over
// emb.src()); zero when F does not vanish there.
inline int multiplicity_at(const BinaryForm& F, const ProjPoint& P, const Embedding& emb) {
    if (F.is_zero()) throw RangeError("multiplicity in the zero form");
    if (P.at_infinity()) return F.multiplicity_at_infinity();
    UPoly p = F.map(emb).dehomogenized();
    const FieldCtx& L = emb.dst();
    UPoly lin(L, {P.x, L.one()}); // x + x0
    int mult = 0;
    while (!p.is_zero() && p.eval(P.x).is_zero()) {
        p = p / lin;
        ++mult;
        if (p.degree() < 0) break;
    }
    return mult;
}

// The characteristic-two discriminant of a binary form of degree m >= 1,
// defined through Res(F, F'_X) = c_0 * disc(F).  When c_0 = 0 the smallest
// shear (X, Y) -> (X, aX + Y) with nonzero new leading coefficient is
// applied first; its determinant is 1, so no correction factor appears.
inline Elem disc_binary(const BinaryForm& F) {
    const FieldCtx& K = F.field();
    const int m = F.degree();
    if (m < 1) throw RangeError("discriminant needs degree >= 1");
    if (F.is_zero()) throw RangeError("discriminant of the zero form");
    Elem a0 = F.coeff(0);
    if (!a0.is_zero())
        return resultant(F, F.dX()) / a0;
    for (std::uint64_t a = 0; a < K.order(); ++a) {
        Elem alpha = K.elem(a);
        if (F.eval(K.one(), alpha).is_zero()) continue;
        GL2 shear(K.one(), K.zero(), alpha, K.one());
        return disc_binary(F.substitute(shear));
    }
    // F vanishes on every (1:a): the base field is too small; retry over an
    // extension large enough to miss all m roots
    unsigned d = 2;
    while ((std::uint64_t(1) << (K.degree() * d)) <= static_cast<std::uint64_t>(m)) ++d;
    const Embedding& emb = extend(K, d);
    return emb.preimage(disc_binary(F.map(emb)));
}

} // namespace hyp2
