#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyp2/binform.hpp"

using namespace hyp2;

namespace {

Elem random_elem(const FieldCtx& F, std::mt19937_64& rng) {
    return F.elem(rng() & (F.order() - 1));
}

BinaryForm random_form(const FieldCtx& F, int deg, std::mt19937_64& rng) {
    std::vector<Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_elem(F, rng));
    return BinaryForm(F, std::move(c));
}

GL2 random_gl2(const FieldCtx& F, std::mt19937_64& rng) {
    for (;;) {
        Elem p = random_elem(F, rng), q = random_elem(F, rng);
        Elem r = random_elem(F, rng), s = random_elem(F, rng);
        if (!(p * s + q * r).is_zero()) return GL2(p, q, r, s);
    }
}

// enumerate every nonzero form of the given declared degree
template <typename Fn>
void for_each_form(const FieldCtx& F, int deg, Fn&& fn) {
    const std::uint64_t q = F.order();
    std::vector<std::uint64_t> d(static_cast<std::size_t>(deg) + 1, 0);
    for (;;) {
        std::vector<Elem> c;
        for (std::uint64_t v : d) c.push_back(F.elem(v));
        BinaryForm f(F, std::move(c));
        if (!f.is_zero()) fn(f);
        int i = deg;
        while (i >= 0 && ++d[static_cast<std::size_t>(i)] == q) d[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
}

bool share_root(const BinaryForm& F, const BinaryForm& G) {
    for (const FormRoot& r : roots_with_multiplicity(F))
        if (multiplicity_at(G, r.point, *r.emb) > 0) return true;
    return false;
}

} // namespace

TEST_CASE("evaluation") {
    const FieldCtx& F2 = FieldCtx::get(1);
    BinaryForm xy(F2, {F2.one(), F2.one()}); // X + Y
    CHECK(xy.eval(F2.one(), F2.one()).is_zero());

    const FieldCtx& F16 = FieldCtx::get(4);
    BinaryForm xsq(F16, {F16.one(), F16.zero(), F16.zero()}); // X^2
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Elem x = random_elem(F16, rng), y = random_elem(F16, rng);
        CHECK(xsq.eval(x, y) == square(x));
    }

    // homogeneity: F(lx, ly) = l^d F(x, y)
    for (int i = 0; i < 30; ++i) {
        BinaryForm f = random_form(F16, 3, rng);
        Elem x = random_elem(F16, rng), y = random_elem(F16, rng), l = random_elem(F16, rng);
        CHECK(f.eval(l * x, l * y) == pow(l, 3) * f.eval(x, y));
    }
}

TEST_CASE("formal derivatives") {
    const FieldCtx& F2 = FieldCtx::get(1);
    BinaryForm xsq(F2, {F2.one(), F2.zero(), F2.zero()});
    CHECK(xsq.dX().is_zero()); // 2X = 0

    // d/dX (X^2 Y + X Y^2) = Y^2
    BinaryForm f(F2, {F2.zero(), F2.one(), F2.one(), F2.zero()});
    BinaryForm ysq(F2, {F2.zero(), F2.zero(), F2.one()});
    CHECK(f.dX() == ysq);

    BinaryForm c(F2, {F2.one()});
    CHECK_THROWS_AS(c.dX(), RangeError);

    // Euler in char 2: X F'_X + Y F'_Y = d F, and X B'_X = Y B'_Y for even d
    const FieldCtx& F16 = FieldCtx::get(4);
    std::mt19937_64 rng(8);
    BinaryForm X(F16, {F16.one(), F16.zero()});
    BinaryForm Y(F16, {F16.zero(), F16.one()});
    for (int d = 1; d <= 6; ++d) {
        for (int i = 0; i < 20; ++i) {
            BinaryForm f = random_form(F16, d, rng);
            BinaryForm lhs = X * f.dX() + Y * f.dY();
            BinaryForm rhs = (d % 2) ? f : BinaryForm::zero(F16, d);
            CHECK(lhs == rhs);
            if (d % 2 == 0) CHECK(X * f.dX() == Y * f.dY());
        }
    }
}

TEST_CASE("GL2 substitution") {
    const FieldCtx& F16 = FieldCtx::get(4);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        BinaryForm f = random_form(F16, 4, rng);
        CHECK(f.substitute(GL2::identity(F16)) == f);
        GL2 s = random_gl2(F16, rng);
        CHECK(f.substitute(s).substitute(s.inverse()) == f);
    }

    // the swap sends X^2 Y to X Y^2
    const FieldCtx& F2 = FieldCtx::get(1);
    BinaryForm x2y(F2, {F2.zero(), F2.one(), F2.zero(), F2.zero()});
    BinaryForm xy2(F2, {F2.zero(), F2.zero(), F2.one(), F2.zero()});
    GL2 swap(F2.zero(), F2.one(), F2.one(), F2.zero());
    CHECK(x2y.substitute(swap) == xy2);
}

TEST_CASE("resultants") {
    const FieldCtx& F2 = FieldCtx::get(1);
    BinaryForm X(F2, {F2.one(), F2.zero()});
    BinaryForm Y(F2, {F2.zero(), F2.one()});
    CHECK(resultant(X, Y) == F2.one());

    const FieldCtx& F16 = FieldCtx::get(4);
    std::mt19937_64 rng(10);
    for (int d = 1; d <= 4; ++d) {
        BinaryForm f = random_form(F16, d, rng);
        if (f.is_zero()) continue;
        CHECK(resultant(f, f).is_zero());
    }

    // Res(X + Y, X + wY) = 1 + w over F_4 (2x2 Sylvester determinant)
    const FieldCtx& F4 = FieldCtx::get(2);
    Elem w = F4.gen();
    BinaryForm f1(F4, {F4.one(), F4.one()});
    BinaryForm f2(F4, {F4.one(), w});
    CHECK(resultant(f1, f2) == F4.one() + w);

    // semi-invariance: Res(F o s, G o s) = det(s)^(d1 d2) Res(F, G)
    for (int i = 0; i < 40; ++i) {
        BinaryForm f = random_form(F16, 2, rng);
        BinaryForm g = random_form(F16, 3, rng);
        GL2 s = random_gl2(F16, rng);
        CHECK(resultant(f.substitute(s), g.substitute(s))
              == pow(s.det(), 6) * resultant(f, g));
    }
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    for (unsigned k : {1u, 2u}) {
        const FieldCtx& F = FieldCtx::get(k);
        for (int d1 = 1; d1 <= 3; ++d1) {
            for (int d2 = 1; d2 <= 3; ++d2) {
                for_each_form(F, d1, [&](const BinaryForm& f) {
                    for_each_form(F, d2, [&](const BinaryForm& g) {
                        bool res_zero = resultant(f, g).is_zero();
                        CHECK(res_zero == share_root(f, g));
                    });
                });
            }
        }
    }
}

TEST_CASE("roots with multiplicity") {
    const FieldCtx& F2 = FieldCtx::get(1);

    BinaryForm y2(F2, {F2.zero(), F2.zero(), F2.one()}); // Y^2
    auto r1 = roots_with_multiplicity(y2);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].point.at_infinity());
    CHECK(r1[0].multiplicity == 2);

    // XY(X+Y) has the three simple roots (0:1), (1:0), (1:1)
    BinaryForm f(F2, {F2.zero(), F2.one(), F2.one(), F2.zero()});
    auto r2 = roots_with_multiplicity(f);
    REQUIRE(r2.size() == 3);
    int affine = 0, infinite = 0;
    for (auto& r : r2) {
        CHECK(r.multiplicity == 1);
        r.point.at_infinity() ? ++infinite : ++affine;
    }
    CHECK(affine == 2);
    CHECK(infinite == 1);

    // X^2 + XY + Y^2 splits into two conjugate simple roots over F_4
    BinaryForm irr(F2, {F2.one(), F2.one(), F2.one()});
    auto r3 = roots_with_multiplicity(irr);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].emb->dst().degree() == 2);
    CHECK(r3[0].point.x != r3[1].point.x);
    for (auto& r : r3) {
        CHECK(r.multiplicity == 1);
        CHECK(multiplicity_at(irr, r.point, *r.emb) == 1);
    }

    CHECK_THROWS_AS(roots_with_multiplicity(BinaryForm::zero(F2, 2)), RangeError);
}

TEST_CASE("factorization of split forms re-expands to the form") {
    const FieldCtx& F4 = FieldCtx::get(2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        // product of random linear forms, so every root stays in the base field
        int nfac = 1 + static_cast<int>(rng() % 4);
        BinaryForm f = BinaryForm::constant(random_elem(F4, rng));
        while (f.coeffs()[0].is_zero()) f = BinaryForm::constant(random_elem(F4, rng));
        for (int i = 0; i < nfac; ++i) {
            BinaryForm lin = random_form(F4, 1, rng);
            while (lin.is_zero()) lin = random_form(F4, 1, rng);
            f = f * lin;
        }
        auto roots = roots_with_multiplicity(f);
        int total = 0;
        BinaryForm prod = BinaryForm::constant(F4.one());
        for (auto& r : roots) {
            total += r.multiplicity;
            REQUIRE(r.emb->is_identity());
            BinaryForm lin = r.point.at_infinity()
                                 ? BinaryForm(F4, {F4.zero(), F4.one()})
                                 : BinaryForm(F4, {F4.one(), r.point.x});
            for (int e = 0; e < r.multiplicity; ++e) prod = prod * lin;
        }
        CHECK(total == f.degree());
        // match leading scalars and compare
        int lead = 0;
        while (f.coeff(lead).is_zero()) ++lead;
        CHECK(prod.scaled(f.coeff(lead) / prod.coeff(lead)) == f);
    }

    // general forms: every reported root really is one, at the right order
    const FieldCtx& F16 = FieldCtx::get(4);
    for (int trial = 0; trial < 40; ++trial) {
        BinaryForm f = random_form(F16, 4, rng);
        if (f.is_zero()) continue;
        int total = 0;
        for (auto& r : roots_with_multiplicity(f)) {
            total += r.multiplicity;
            CHECK(multiplicity_at(f, r.point, *r.emb) == r.multiplicity);
        }
        CHECK(total == 4);
    }
}

TEST_CASE("binary discriminant") {
    const FieldCtx& F2 = FieldCtx::get(1);
    BinaryForm xy(F2, {F2.zero(), F2.one(), F2.zero()});
    CHECK(!disc_binary(xy).is_zero()); // distinct roots

    BinaryForm xsq(F2, {F2.one(), F2.zero(), F2.zero()});
    CHECK(disc_binary(xsq).is_zero()); // double root

    // squarefree <=> disc != 0, exhaustively for degrees <= 3 over F_2
    for (int d = 1; d <= 3; ++d) {
        for_each_form(FieldCtx::get(1), d, [&](const BinaryForm& f) {
            bool squarefree = true;
            for (auto& r : roots_with_multiplicity(f))
                if (r.multiplicity > 1) squarefree = false;
            CHECK(disc_binary(f).is_zero() == !squarefree);
        });
    }

    // the a0 = 0 fallback shear agrees with a direct root check over F_4
    const FieldCtx& F4 = FieldCtx::get(2);
    for (int d = 1; d <= 3; ++d) {
        for_each_form(F4, d, [&](const BinaryForm& f) {
            if (!f.coeff(0).is_zero()) return;
            bool squarefree = true;
            for (auto& r : roots_with_multiplicity(f))
                if (r.multiplicity > 1) squarefree = false;
            CHECK(disc_binary(f).is_zero() == !squarefree);
        });
    }
}
