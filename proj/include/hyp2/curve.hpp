#pragma once

// The Artin-Schreier double cover C(A,B): z^2 + A(x,1) z = B(x,1) on the
// chart y != 0, w^2 + A(1,y) w = B(1,y) on x != 0, for a pair of binary
// forms of degrees (m, 2m).  The genus is m - 1.
//
// The discriminant Delta(A,B) is the exact quotient
//     Res(A, (A'_X)^2 B + (B'_X)^2) / a_0^2
// (or the Y-side analogue by a_m^2), extended to a_0 = a_m = 0 by a
// determinant-one shear.  Delta != 0 is equivalent to smoothness; the
// brute-force singular-point search below is the independent oracle for
// that equivalence.

#include <cstdint>
#include <optional>
#include <vector>

#include "hyp2/binform.hpp"

namespace hyp2 {

class CurvePair {
public:
    CurvePair(const FieldCtx& F, int m, BinaryForm A, BinaryForm B)
        : field_(&F), m_(m), A_(std::move(A)), B_(std::move(B)) {
        if (m_ < 1) throw RangeError("curve parameter m must be >= 1");
        if (&A_.field() != field_ || &B_.field() != field_)
            throw FieldError("curve forms over a different field");
        if (A_.degree() != m_) throw std::invalid_argument("A must have declared degree m");
        if (B_.degree() != 2 * m_) throw std::invalid_argument("B must have declared degree 2m");
    }

    const FieldCtx& field() const { return *field_; }
    int m() const { return m_; }
    int genus() const { return m_ - 1; }
    const BinaryForm& A() const { return A_; }
    const BinaryForm& B() const { return B_; }

    CurvePair map(const Embedding& emb) const {
        return CurvePair(emb.dst(), m_, A_.map(emb), B_.map(emb));
    }

    bool operator==(const CurvePair& o) const {
        return field_ == o.field_ && m_ == o.m_ && A_ == o.A_ && B_ == o.B_;
    }

private:
    const FieldCtx* field_;
    int m_;
    BinaryForm A_, B_;
};

inline int genus(const CurvePair& C) { return C.genus(); }

namespace detail {

inline BinaryForm singular_system_form(const BinaryForm& A, const BinaryForm& B, bool x_side) {
    BinaryForm dA = x_side ? A.dX() : A.dY();
    BinaryForm dB = x_side ? B.dX() : B.dY();
    return dA * dA * B + dB * dB; // degree 4m-2
}

} // namespace detail

inline Elem delta(const CurvePair& C) {
    const FieldCtx& K = C.field();
    const BinaryForm& A = C.A();
    const BinaryForm& B = C.B();
    if (A.is_zero()) return K.zero(); // inseparable cover
    Elem a0 = A.coeff(0), am = A.coeff(C.m());
    if (!a0.is_zero())
        return resultant(A, detail::singular_system_form(A, B, true)) / (a0 * a0);
    if (!am.is_zero())
        return resultant(A, detail::singular_system_form(A, B, false)) / (am * am);
    // a_0 = a_m = 0: shear (X, Y) -> (X, aX + Y) until the new leading
    // coefficient A(1, a) is nonzero; det = 1 keeps Delta unchanged
    for (std::uint64_t a = 0; a < K.order(); ++a) {
        Elem alpha = K.elem(a);
        if (A.eval(K.one(), alpha).is_zero()) continue;
        GL2 shear(K.one(), K.zero(), alpha, K.one());
        return delta(CurvePair(K, C.m(), A.substitute(shear), B.substitute(shear)));
    }
    // the base field is exhausted by roots of A; a degree-d extension with
    // q^d > m always has a usable shear, and Delta lands back in the base
    unsigned d = 2;
    while ((std::uint64_t(1) << (K.degree() * d)) <= static_cast<std::uint64_t>(C.m())) ++d;
    const Embedding& emb = extend(K, d);
    return emb.preimage(delta(C.map(emb)));
}

// Even-m shortcut: Y^2 divides (A'_X)^2 B + (B'_X)^2 and
// Delta = Res(A, quotient) with no leading-coefficient correction.
inline Elem delta_even_shortcut(const CurvePair& C) {
    if (C.m() % 2 != 0) throw std::invalid_argument("even-m shortcut needs m even");
    BinaryForm G = detail::singular_system_form(C.A(), C.B(), true);
    return resultant(C.A(), G.quotient_by_Y_power(2));
}

inline bool is_smooth(const CurvePair& C) { return !delta(C).is_zero(); }

struct SingularPoint {
    ProjPoint base;        // the point of P^1 under the singularity
    Elem z;                // fiber coordinate in the matching affine chart
    const Embedding* emb;  // base field -> the point's field
};

struct SingularReport {
    bool is_smooth = true;
    std::vector<SingularPoint> points;
    std::optional<bool> nodal; // set when singular and disc(A) != 0
};

// Brute-force singular-point search, independent of the resultant path.
// Singular points sit above roots of A; at an affine root the X-derivative
// system must vanish, at (1:0) the Y-derivative system.  The fiber
// coordinate is the square root of B there.
inline SingularReport find_singular_points(const CurvePair& C) {
    const BinaryForm& A = C.A();
    const BinaryForm& B = C.B();
    if (A.is_zero()) throw RangeError("singular-point oracle needs A != 0 (cover is inseparable)");
    BinaryForm GX = detail::singular_system_form(A, B, true);
    BinaryForm GY = detail::singular_system_form(A, B, false);
    SingularReport rep;
    for (const FormRoot& root : roots_with_multiplicity(A)) {
        const Embedding& emb = *root.emb;
        const ProjPoint& P = root.point;
        Elem val = P.at_infinity() ? GY.map(emb).eval(P.x, P.y) : GX.map(emb).eval(P.x, P.y);
        if (!val.is_zero()) continue;
        Elem z = sqrt(B.map(emb).eval(P.x, P.y));
        rep.points.push_back({P, z, &emb});
    }
    rep.is_smooth = rep.points.empty();
    if (!rep.is_smooth && !disc_binary(A).is_zero()) rep.nodal = true;
    return rep;
}

struct RamificationProfile {
    std::vector<FormRoot> branch_points;   // roots of A over their extensions
    std::vector<int> multiplicities;       // partition of m, descending
    std::vector<int> conductors;           // m_i = 2*mu_i - 1, descending
    int b = 0;                             // number of branch points
    int two_rank = 0;                      // = b - 1 (Crew's formula)
};

// Branch data of a smooth curve: the Weierstrass divisor is cut out by
// A = 0; each branch multiplicity mu gives the local conductor 2*mu - 1,
// and Riemann-Hurwitz makes the conductors sum back to 2m - b.
inline RamificationProfile ramification_profile(const CurvePair& C) {
    if (!is_smooth(C)) throw SingularCurveError("ramification profile of a singular curve");
    RamificationProfile prof;
    prof.branch_points = roots_with_multiplicity(C.A());
    for (const FormRoot& r : prof.branch_points) prof.multiplicities.push_back(r.multiplicity);
    std::sort(prof.multiplicities.rbegin(), prof.multiplicities.rend());
    for (int mu : prof.multiplicities) prof.conductors.push_back(2 * mu - 1);
    prof.b = static_cast<int>(prof.branch_points.size());
    // Crew: r_C - 1 = |Q| (r_{P^1} - 1) + sum (e_y - 1) = 2(0 - 1) + b
    prof.two_rank = prof.b - 1;
    return prof;
}

// Number of points of the smooth curve over K (an extension of the curve's
// field).  A fiber with A(P) != 0 has 2 points when Tr(B/A^2) = 0 and none
// otherwise; a fiber with A(P) = 0 has exactly one, z = sqrt(B(P)).
inline std::uint64_t count_points(const CurvePair& C, const FieldCtx& K) {
    if (!is_smooth(C)) throw SingularCurveError("point count of a singular curve");
    const Embedding& emb = embed_into(C.field(), K);
    BinaryForm A = C.A().map(emb), B = C.B().map(emb);
    std::uint64_t total = 0;
    auto tally = [&](const Elem& x, const Elem& y) {
        Elem a = A.eval(x, y);
        if (a.is_zero()) {
            total += 1;
        } else {
            Elem c = B.eval(x, y) / (a * a);
            total += trace(c) == 0 ? 2 : 0;
        }
    };
    for (std::uint64_t v = 0; v < K.order(); ++v) tally(K.elem(v), K.one());
    tally(K.one(), K.zero());
    return total;
}

inline std::uint64_t count_points(const CurvePair& C) { return count_points(C, C.field()); }

} // namespace hyp2
