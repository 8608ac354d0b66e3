#include <doctest.h>

#include "hexalab/matrix.hpp"
#include "test_util.hpp"

using namespace hexalab;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, Rng& rng, int r, int c) {
    Matrix<F> m(f, r, c);
    for (auto& e : m.a) e = f.sample(rng);
    return m;
}

// The 4x6 vertex-relation pattern of one tetrahedron: rows are vertices,
// columns are its edges in lex order, entry gamma_ij at (i, edge ij).
template <class F>
Matrix<F> vertex_relation_matrix(const F& f, const std::vector<std::vector<typename F::Elem>>& g) {
    static const int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Matrix<F> m(f, 4, 6);
    for (int e = 0; e < 6; ++e) {
        m.at(edges[e][0], e) = g[edges[e][0]][edges[e][1]];
        m.at(edges[e][1], e) = g[edges[e][1]][edges[e][0]];
    }
    return m;
}

} // namespace

TEST_CASE("rref basics") {
    PrimeField f(2147483647);
    auto id = Matrix<PrimeField>::identity(f, 2);
    auto r = rref(f, id);
    CHECK(r.rank == 2);
    CHECK(mat_eq(f, r.mat, id));

    Matrix<PrimeField> z(f, 3, 4);
    CHECK(rref(f, z).rank == 0);
}

TEST_CASE("rref is idempotent and canonical under row operations") {
    PrimeField f(1000003);
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(f, rng, 5, 7);
        auto r1 = rref(f, m);
        CHECK(mat_eq(f, rref(f, r1.mat).mat, r1.mat));
        // scramble with random row operations, rref must not change
        auto s = m;
        for (int k = 0; k < 10; ++k) {
            int i = static_cast<int>(rng.next() % 5), j = static_cast<int>(rng.next() % 5);
            if (i == j) continue;
            auto c = f.sample_nonzero(rng);
            for (int col = 0; col < 7; ++col)
                s.at(i, col) = f.add(s.at(i, col), f.mul(c, s.at(j, col)));
        }
        CHECK(mat_eq(f, rref(f, s).mat, r1.mat));
    }
}

TEST_CASE("vertex-relation matrix has rank 4 for generic gamma") {
    // independent cross-check over Q with the minor-enumeration oracle
    RationalField q;
    Rng rng(7);
    std::vector<std::vector<RationalField::Elem>> g(4, std::vector<RationalField::Elem>(4, q.zero()));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) g[i][j] = q.from_int(static_cast<long long>(rng.next() % 19) + 1);
    auto m = vertex_relation_matrix(q, g);
    CHECK(testutil::rank_by_minors(q, m) == 4);
    CHECK(rank_of(q, m) == 4);
}

TEST_CASE("kernel dimensions") {
    PrimeField f(2147483647);
    Matrix<PrimeField> z(f, 2, 3);
    CHECK(kernel_basis(f, z).dim() == 3);
    CHECK(kernel_basis(f, Matrix<PrimeField>::identity(f, 4)).dim() == 0);
}

TEST_CASE("rank-nullity and exact kernels across field kinds") {
    auto run = [](const auto& f, std::uint64_t seed) {
        Rng rng(seed);
        for (int trial = 0; trial < 30; ++trial) {
            int r = 1 + static_cast<int>(rng.next() % 6);
            int c = 1 + static_cast<int>(rng.next() % 6);
            auto m = random_matrix(f, rng, r, c);
            auto ker = kernel_basis(f, m);
            CHECK(rank_of(f, m) + ker.dim() == c);
            for (int i = 0; i < ker.dim(); ++i) {
                std::vector<typename std::decay_t<decltype(f)>::Elem> v;
                for (int j = 0; j < c; ++j) v.push_back(ker.basis.at(i, j));
                CHECK(vec_is_zero(f, mat_vec(f, m, v)));
            }
        }
    };
    run(PrimeField(2147483647), 11);
    run(PrimeField(3), 12);
    run(BinaryField(16), 13);
    run(RationalField(), 14);
}

TEST_CASE("subspace predicates") {
    PrimeField f(101);
    Rng rng(21);
    auto m = random_matrix(f, rng, 3, 6);
    auto a = Subspace<PrimeField>::from_rows(f, m);
    auto b = Subspace<PrimeField>::from_rows(f, m);
    CHECK(a.equal(f, b));
    CHECK(sum_dim(f, a, b) == a.dim());
    CHECK(intersection_dim(f, a, b) == a.dim());

    Subspace<PrimeField> zero = Subspace<PrimeField>::from_rows(f, Matrix<PrimeField>(f, 1, 6));
    CHECK(zero.dim() == 0);
    CHECK(intersection_dim(f, a, zero) == 0);

    std::vector<PrimeField::Elem> v(6, f.zero());
    for (int j = 0; j < 6; ++j) v[j] = m.at(1, j);
    CHECK(a.contains(f, v));
    v[0] = f.add(v[0], f.one());
    // a has dim <= 3 in ambient 6; nudging one coordinate generically leaves it
    if (a.dim() < 6) CHECK_FALSE(a.contains(f, v));
}

TEST_CASE("solve returns canonical particular solutions") {
    PrimeField f(101);
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_matrix(f, rng, 4, 5);
        auto x = random_matrix(f, rng, 5, 2);
        auto b = mat_mul(f, a, x);
        auto sol = solve(f, a, b);
        REQUIRE(sol.has_value());
        CHECK(mat_eq(f, mat_mul(f, a, *sol), b));
    }
}

TEST_CASE("dual kernel basis") {
    PrimeField base(2147483647);
    DualField df(base);
    using DF = DualField<PrimeField>;

    SUBCASE("zero matrix lifts the standard basis") {
        Matrix<DF> z(df, 2, 3);
        auto ker = dual_kernel_basis(df, z);
        CHECK(ker.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(base.eq(ker[i][j].a, i == j ? base.one() : base.zero()));
                CHECK(base.is_zero(ker[i][j].b));
            }
    }

    SUBCASE("perturbed identity has empty kernel") {
        Rng rng(3);
        auto m = Matrix<DF>::identity(df, 3);
        for (auto& e : m.a) e.b = base.sample(rng);
        CHECK(dual_kernel_basis(df, m).empty());
    }

    SUBCASE("purely nilpotent pivot is a degenerate lift") {
        Matrix<DF> m(df, 1, 1);
        m.at(0, 0) = df.o();
        CHECK_THROWS_AS(dual_kernel_basis(df, m), DegenerateLiftError);
    }

    SUBCASE("first-order kernel conditions hold and constant parts match") {
        Rng rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            Matrix<PrimeField> m0(base, 4, 6), m1(base, 4, 6);
            for (auto& e : m0.a) e = base.sample(rng);
            for (auto& e : m1.a) e = base.sample(rng);
            Matrix<DF> m(df, 4, 6);
            for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = df.make(m0.a[i], m1.a[i]);
            auto ker = dual_kernel_basis(df, m);
            auto ker0 = kernel_basis(base, m0);
            CHECK(static_cast<int>(ker.size()) == 6 - rank_of(base, m0));
            Matrix<PrimeField> consts(base, static_cast<int>(ker.size()), 6);
            for (std::size_t v = 0; v < ker.size(); ++v) {
                std::vector<PrimeField::Elem> v0(6), v1(6);
                for (int j = 0; j < 6; ++j) { v0[j] = ker[v][j].a; v1[j] = ker[v][j].b; }
                CHECK(vec_is_zero(base, mat_vec(base, m0, v0)));
                auto lhs = mat_vec(base, m0, v1);
                auto rhs = mat_vec(base, m1, v0);
                for (int i = 0; i < 4; ++i) CHECK(base.eq(lhs[i], base.neg(rhs[i])));
                for (int j = 0; j < 6; ++j) consts.at(static_cast<int>(v), j) = v0[j];
            }
            CHECK(Subspace<PrimeField>::from_rows(base, consts).equal(base, ker0));
        }
    }
}
