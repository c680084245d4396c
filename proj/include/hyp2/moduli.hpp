#pragma once

// Group actions on the coefficient space of pairs (A, B), the locus Z of
// pairs with a shared square factor, the genus-2 stratification by branch
// partition, and the closed-form Picard invariants of the moduli stack.

#include <numeric>
#include <optional>
#include <vector>

#include "hyp2/curve.hpp"

namespace hyp2 {

// additive action: alpha . (A, B) = (A, B + alpha A + alpha^2)
inline CurvePair act_ga(const BinaryForm& alpha, const CurvePair& C) {
    if (alpha.degree() != C.m()) throw std::invalid_argument("act_ga: alpha must have degree m");
    if (&alpha.field() != &C.field()) throw FieldError("act_ga: alpha over a different field");
    return CurvePair(C.field(), C.m(), C.A(), C.B() + alpha * C.A() + alpha * alpha);
}

// frame change (1 alpha; 0 beta): (A, B) -> (beta A, beta^2 B + beta alpha A + alpha^2)
inline CurvePair act_h(const BinaryForm& alpha, const Elem& beta, const CurvePair& C) {
    if (alpha.degree() != C.m()) throw std::invalid_argument("act_h: alpha must have degree m");
    if (&alpha.field() != &C.field() || beta.field != &C.field())
        throw FieldError("act_h: parameters over a different field");
    if (beta.is_zero()) throw std::invalid_argument("act_h: beta must be nonzero");
    BinaryForm newB = C.B().scaled(beta * beta) + (alpha * C.A()).scaled(beta) + alpha * alpha;
    return CurvePair(C.field(), C.m(), C.A().scaled(beta), newB);
}

// coordinate change: (A, B) -> (A o sigma^{-1}, B o sigma^{-1})
inline CurvePair act_gl2(const GL2& sigma, const CurvePair& C) {
    GL2 t = sigma.inverse();
    return CurvePair(C.field(), C.m(), C.A().substitute(t), C.B().substitute(t));
}

// An element of the full group Gamma(O(m)) x| GL(2): shear alpha, scale
// beta, substitution sigma, acting as act_h after act_gl2.
struct GroupElem {
    BinaryForm alpha;
    Elem beta;
    GL2 sigma;

    static GroupElem identity(const FieldCtx& F, int m) {
        return {BinaryForm::zero(F, m), F.one(), GL2::identity(F)};
    }

    CurvePair apply(const CurvePair& C) const {
        return act_h(alpha, beta, act_gl2(sigma, C));
    }

    // semidirect-product law: applying first, then second, equals applying
    // the composite
    static GroupElem compose(const GroupElem& second, const GroupElem& first) {
        GL2 s_inv = second.sigma.inverse();
        BinaryForm a = first.alpha.substitute(s_inv).scaled(second.beta) + second.alpha;
        return {a, second.beta * first.beta, second.sigma * first.sigma};
    }
};

struct ZWitness {
    bool in_z = false;
    std::optional<BinaryForm> ell; // linear form over emb->dst() with ell | A, ell^2 | B
    const Embedding* emb = nullptr;
};

// Membership in Z: A != 0, B != 0, and some linear form divides A with its
// square dividing B.  Any witness must cut a root of A, so only those
// points are searched.
inline ZWitness in_Z(const CurvePair& C) {
    if (C.A().is_zero() || C.B().is_zero()) return {};
    for (const FormRoot& root : roots_with_multiplicity(C.A())) {
        if (multiplicity_at(C.B(), root.point, *root.emb) < 2) continue;
        const FieldCtx& L = root.emb->dst();
        BinaryForm ell = root.point.at_infinity()
                             ? BinaryForm(L, {L.zero(), L.one()})            // Y
                             : BinaryForm(L, {L.one(), root.point.x});       // X + x0 Y
        return {true, ell, root.emb};
    }
    return {};
}

// The three genus-2 families, keyed by the branch partition of m = 3.
enum class IgusaFamily { I, II, III };

inline int two_rank_of(IgusaFamily f) {
    switch (f) {
        case IgusaFamily::I: return 2;
        case IgusaFamily::II: return 1;
        default: return 0;
    }
}

inline const char* family_name(IgusaFamily f) {
    switch (f) {
        case IgusaFamily::I: return "I";
        case IgusaFamily::II: return "II";
        default: return "III";
    }
}

inline IgusaFamily classify_genus2(const CurvePair& C) {
    if (C.m() != 3) throw RangeError("genus-2 classification needs m = 3");
    RamificationProfile prof = ramification_profile(C); // rejects singular curves
    switch (prof.b) {
        case 3: return IgusaFamily::I;   // partition (1,1,1), conductors (1,1,1)
        case 2: return IgusaFamily::II;  // partition (2,1),   conductors (3,1)
        case 1: return IgusaFamily::III; // partition (3),     conductor  (5)
    }
    throw std::logic_error("impossible branch count for m = 3");
}

// |Pic| of the genus-g stack: 8g+4 for odd g, 4g+2 for even g.
inline long picard_order(int g) {
    if (g < 1) throw RangeError("picard_order needs genus >= 1");
    return g % 2 ? 8L * g + 4 : 4L * g + 2;
}

struct LambdaClass {
    long residue;       // the Hodge class lambda in Z/modulus
    long modulus;       // = picard_order(g)
    bool generator;     // gcd(residue, modulus) == 1
    long order;         // multiplicative order of lambda in the cyclic group
    long non_ordinary;  // class of the non-ordinary divisor, = 2*lambda
};

// lambda = (m-1)/2 for odd m = g+1, m-1 for even m.  It generates the
// Picard group exactly when m is even or m = 3 (mod 4); for m = 1 (mod 4)
// its order is modulus / gcd, an even proper divisor.
inline LambdaClass lambda_class(int g) {
    const long modulus = picard_order(g);
    const long m = g + 1L;
    const long residue = (m % 2) ? (m - 1) / 2 : m - 1;
    const long d = std::gcd(residue, modulus);
    return {residue, modulus, d == 1, modulus / d, (2 * residue) % modulus};
}

} // namespace hyp2
