#include <doctest.h>

#include "hexalab/field.hpp"

using namespace hexalab;

namespace {

// Independent primality oracle: trial division up to sqrt(n).
bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Independent irreducibility oracle over GF(2): trial division by every
// polynomial of degree 1..k/2.
bool irreducible_by_trial_division(std::uint64_t f, int k) {
    auto deg = [](std::uint64_t x) { return x == 0 ? -1 : 63 - __builtin_clzll(x); };
    for (int d = 1; d <= k / 2; ++d) {
        for (std::uint64_t low = 0; low < (std::uint64_t(1) << d); ++low) {
            std::uint64_t g = (std::uint64_t(1) << d) | low;
            std::uint64_t r = f;
            while (deg(r) >= d) r ^= g << (deg(r) - d);
            if (r == 0) return false;
        }
    }
    return true;
}

template <class F>
void check_field_axioms(const F& f, std::uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        auto x = f.sample_nonzero(rng);
        auto y = f.sample_nonzero(rng);
        auto z = f.sample_nonzero(rng);
        REQUIRE(f.eq(f.add(f.add(x, y), z), f.add(x, f.add(y, z))));
        REQUIRE(f.eq(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z))));
        REQUIRE(f.eq(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z))));
        REQUIRE(f.eq(f.mul(x, f.inv(x)), f.one()));
        REQUIRE(f.eq(f.add(x, f.neg(x)), f.zero()));
    }
}

} // namespace

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField(7));
    CHECK(prime_by_trial_division(2147483647));
    CHECK_NOTHROW(PrimeField(2147483647));
    CHECK_THROWS_AS(PrimeField(2147483646), FieldSpecError);
    CHECK_THROWS_AS(PrimeField(1), FieldSpecError);
    CHECK(PrimeField::is_prime(2));
    CHECK_FALSE(PrimeField::is_prime(3215031751ull)); // strong pseudoprime to small bases
}

TEST_CASE("binary field construction and irreducibility") {
    BinaryField f(16);
    CAPTURE(f.poly_string());
    CHECK(irreducible_by_trial_division(f.poly(), 16));
    CHECK(BinaryField::is_irreducible(f.poly(), 16));
    // x^16 + 1 = (x + 1)^16 over GF(2)
    CHECK_THROWS_AS(BinaryField(16, (std::uint64_t(1) << 16) | 1), FieldSpecError);
    CHECK_THROWS_AS(BinaryField(4), FieldSpecError); // below sampling floor
}

TEST_CASE("field axioms hold on seeded triples") {
    check_field_axioms(PrimeField(2147483647), 1);
    check_field_axioms(PrimeField(7), 2);
    check_field_axioms(PrimeField(3), 3);
    check_field_axioms(BinaryField(16), 4);
    check_field_axioms(RationalField(), 5);
}

TEST_CASE("generic sampling is deterministic and nonzero") {
    PrimeField f(2147483647);
    CHECK(sample_generic(f, 42, 0).empty());
    auto a = sample_generic(f, 42, 100);
    auto b = sample_generic(f, 42, 100);
    CHECK(a == b);
    auto c = sample_generic(f, 43, 100);
    CHECK(a != c);
    auto big = sample_generic(f, 7, 10000);
    for (auto v : big) CHECK(v != 0);

    BinaryField g(16);
    for (auto v : sample_generic(g, 11, 2000)) {
        CHECK(v != 0);
        CHECK(v < (1u << 16));
    }
}

TEST_CASE("dual number arithmetic") {
    PrimeField base(2147483647);
    DualField df(base);
    auto one_plus_o = df.make(1, 1);
    auto inv = df.inv(one_plus_o);
    CHECK(base.eq(inv.a, 1));
    CHECK(base.eq(inv.b, base.from_int(-1)));
    CHECK(df.eq(df.mul(one_plus_o, inv), df.one()));

    CHECK(df.eq(df.inv(df.one()), df.one()));
    CHECK_THROWS_AS(df.inv(df.o()), NotInvertibleError);
    CHECK(df.is_zero(df.mul(df.o(), df.o())));

    // constant-part projection is a ring homomorphism
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        auto x = df.make(base.sample(rng), base.sample(rng));
        auto y = df.make(base.sample(rng), base.sample(rng));
        CHECK(base.eq(df.mul(x, y).a, base.mul(x.a, y.a)));
        CHECK(base.eq(df.add(x, y).a, base.add(x.a, y.a)));
    }
}

TEST_CASE("field spec grammar") {
    auto p = parse_field_spec("p=2147483647");
    CHECK(p.kind == FieldSpec::Kind::prime);
    CHECK(p.modulus == 2147483647);
    auto g = parse_field_spec("gf2=16");
    CHECK(g.kind == FieldSpec::Kind::binary);
    CHECK(g.degree == 16);
    auto q = parse_field_spec("q");
    CHECK(q.kind == FieldSpec::Kind::rational);

    CHECK_THROWS_AS(parse_field_spec("p=91"), FieldSpecError);      // 7 * 13
    CHECK_THROWS_AS(parse_field_spec("gf2=4"), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("f=3"), FieldSpecError);
    CHECK_THROWS_AS(parse_field_spec("p=x"), FieldSpecError);

    CHECK(with_field(p, [](const auto& f) { return f.describe(); }) == "p=2147483647");
}
