#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyp2/extfield.hpp"
#include "hyp2/gf2.hpp"

using namespace hyp2;

namespace {

Elem random_elem(const FieldCtx& F, std::mt19937_64& rng) {
    return F.elem(rng() & (F.order() - 1));
}

} // namespace

TEST_CASE("frozen modulus table is the lexicographic minimum") {
    for (unsigned k = 1; k <= 16; ++k) {
        std::uint64_t m = FieldCtx::get(k).modulus();
        CHECK(bitpoly::irreducible(m));
        CHECK(m == bitpoly::min_irreducible(k)); // independent recomputation
    }
}

TEST_CASE("addition in characteristic two") {
    const FieldCtx& F16 = FieldCtx::get(4);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Elem x = random_elem(F16, rng);
        CHECK((x + x).is_zero());
        CHECK(x + F16.zero() == x);
    }

    // F_4 = F_2[w]/(w^2 + w + 1): w + 1 equals w^2
    const FieldCtx& F4 = FieldCtx::get(2);
    Elem w = F4.gen();
    CHECK(w + F4.one() == w * w);
}

TEST_CASE("multiplication and inverses") {
    const FieldCtx& F4 = FieldCtx::get(2);
    Elem w = F4.gen();
    CHECK(w * w == w + F4.one()); // reduce w^2 by the modulus
    CHECK(w * F4.one() == w);
    CHECK((w * F4.zero()).is_zero());

    CHECK(inv(F4.one()) == F4.one());
    CHECK(inv(w) == w + F4.one()); // w(w+1) = w^2 + w = 1
    CHECK_THROWS_AS(inv(F4.zero()), FieldError);

    // Fermat exponentiation as an independent oracle for the Euclid path
    for (unsigned k : {3u, 8u, 11u}) {
        const FieldCtx& F = FieldCtx::get(k);
        std::mt19937_64 rng(k);
        for (int i = 0; i < 100; ++i) {
            Elem x = random_elem(F, rng);
            if (x.is_zero()) continue;
            CHECK(inv(x) == pow(x, F.order() - 2));
            CHECK(x * inv(x) == F.one());
        }
    }
}

TEST_CASE("frobenius and square roots") {
    for (unsigned k = 1; k <= 8; ++k) {
        const FieldCtx& F = FieldCtx::get(k);
        std::mt19937_64 rng(100 + k);
        for (int i = 0; i < 60; ++i) {
            Elem x = random_elem(F, rng), y = random_elem(F, rng);
            CHECK(square(x + y) == square(x) + square(y));
            CHECK(square(sqrt(x)) == x);
            CHECK(sqrt(square(x)) == x);
        }
    }
    const FieldCtx& F4 = FieldCtx::get(2);
    CHECK(sqrt(F4.zero()).is_zero());
    CHECK(sqrt(F4.one()) == F4.one());
    CHECK(sqrt(F4.gen() + F4.one()) == F4.gen()); // w^2 = w + 1
}

TEST_CASE("trace is F_2-linear and onto") {
    const FieldCtx& F2 = FieldCtx::get(1);
    CHECK(trace(F2.zero()) == 0);
    CHECK(trace(F2.one()) == 1); // k = 1: trace is the identity
    const FieldCtx& F4 = FieldCtx::get(2);
    CHECK(trace(F4.gen()) == 1); // w + w^2 = 1

    for (unsigned k = 1; k <= 8; ++k) {
        const FieldCtx& F = FieldCtx::get(k);
        std::mt19937_64 rng(200 + k);
        bool hit[2] = {false, false};
        for (std::uint64_t v = 0; v < F.order(); ++v) hit[trace(F.elem(v))] = true;
        CHECK((hit[0] && hit[1]));
        for (int i = 0; i < 40; ++i) {
            Elem x = random_elem(F, rng), y = random_elem(F, rng);
            CHECK(trace(x + y) == (trace(x) ^ trace(y)));
        }
    }
}

TEST_CASE("Artin-Schreier solving") {
    const FieldCtx& F2 = FieldCtx::get(1);
    auto r0 = solve_artin_schreier(F2.zero());
    REQUIRE(r0.size() == 2);
    CHECK(r0[0] == F2.zero());
    CHECK(r0[1] == F2.one());
    CHECK(solve_artin_schreier(F2.one()).empty()); // y^2 + y never equals 1 in F_2

    const FieldCtx& F4 = FieldCtx::get(2);
    CHECK(solve_artin_schreier(F4.gen()).empty()); // Tr(w) = 1

    // |solutions| = 2 (1 - Tr(c)), exhaustively for k <= 4; roots differ by 1
    for (unsigned k = 1; k <= 4; ++k) {
        const FieldCtx& F = FieldCtx::get(k);
        for (std::uint64_t v = 0; v < F.order(); ++v) {
            Elem c = F.elem(v);
            auto roots = solve_artin_schreier(c);
            CHECK(roots.size() == static_cast<std::size_t>(2 * (1 - trace(c))));
            for (const Elem& y : roots) CHECK(square(y) + y == c);
            if (roots.size() == 2) CHECK(roots[0] + roots[1] == F.one());
        }
    }
}

TEST_CASE("field extension and embedding") {
    const FieldCtx& F2 = FieldCtx::get(1);
    const FieldCtx& F4 = FieldCtx::get(2);

    const Embedding& id = extend(F4, 1);
    CHECK(id.is_identity());
    Elem w = F4.gen();
    CHECK(id.apply(w) == w);

    const Embedding& e24 = extend(F2, 2);
    CHECK(&e24.dst() == &F4);
    CHECK(e24.apply(F2.one()) == F4.one());

    for (unsigned k : {2u, 3u}) {
        for (unsigned d : {2u, 3u}) {
            const FieldCtx& F = FieldCtx::get(k);
            const Embedding& emb = extend(F, d);
            CHECK(emb.dst().degree() == k * d);
            std::mt19937_64 rng(300 + 10 * k + d);
            for (int i = 0; i < 40; ++i) {
                Elem x = random_elem(F, rng), y = random_elem(F, rng);
                CHECK(emb.apply(x + y) == emb.apply(x) + emb.apply(y));
                CHECK(emb.apply(x * y) == emb.apply(x) * emb.apply(y));
                CHECK(emb.preimage(emb.apply(x)) == x);
            }
        }
    }

    // an element outside the embedded subfield has no preimage
    const Embedding& e4_16 = extend(F4, 2);
    bool found_outside = false;
    for (std::uint64_t v = 0; v < e4_16.dst().order() && !found_outside; ++v) {
        try {
            e4_16.preimage(e4_16.dst().elem(v));
        } catch (const FieldError&) {
            found_outside = true;
        }
    }
    CHECK(found_outside);
}

TEST_CASE("cross-field operations are hard errors") {
    const FieldCtx& F4 = FieldCtx::get(2);
    const FieldCtx& F8 = FieldCtx::get(3);
    CHECK_THROWS_AS(F4.one() + F8.one(), FieldError);
    CHECK_THROWS_AS(F4.gen() * F8.one(), FieldError);
}

TEST_CASE("field spec strings") {
    CHECK(&FieldCtx::parse_spec("2^4") == &FieldCtx::get(4));
    CHECK(&FieldCtx::parse_spec("2^2/0x7") == &FieldCtx::get(2)); // the table modulus, spelled out
    CHECK(FieldCtx::get(4).spec_string() == "2^4");

    const FieldCtx& alt = FieldCtx::parse_spec("2^4/0x19"); // t^4 + t^3 + 1
    CHECK(&alt != &FieldCtx::get(4));
    CHECK(alt.spec_string() == "2^4/0x19");
    CHECK(&FieldCtx::parse_spec(alt.spec_string()) == &alt);

    CHECK_THROWS_AS(FieldCtx::parse_spec("3^2"), ParseError);
    CHECK_THROWS_AS(FieldCtx::parse_spec("2^"), ParseError);
    CHECK_THROWS_AS(FieldCtx::parse_spec("2^4/19"), ParseError);
    CHECK_THROWS_AS(FieldCtx::parse_spec("2^4/0x13b"), FieldError); // degree mismatch
    CHECK_THROWS_AS(FieldCtx::parse_spec("2^4/0x18"), FieldError);  // t^4 + t^3 is reducible
    CHECK_THROWS_AS(FieldCtx::parse_spec("2^0"), FieldError);
}

TEST_CASE("hex element round trip") {
    const FieldCtx& F = FieldCtx::get(8);
    for (std::uint64_t v : {0ull, 1ull, 0x53ull, 0xffull}) {
        Elem e = F.elem(v);
        CHECK(elem_from_hex(F, to_hex(e)) == e);
    }
    CHECK(elem_from_hex(F, "AB") == F.elem(0xab)); // bare and 0x forms both accepted
    CHECK_THROWS_AS(elem_from_hex(F, "0x1zz"), ParseError);
    CHECK_THROWS_AS(elem_from_hex(F, ""), ParseError);
    CHECK_THROWS_AS(elem_from_hex(F, "0x100"), FieldError); // out of range for 2^8
}
