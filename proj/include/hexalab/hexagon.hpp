#ifndef HEXALAB_HEXAGON_HPP
#define HEXALAB_HEXAGON_HPP

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hexalab/cochain.hpp"
#include "hexalab/matrix.hpp"
#include "hexalab/rng.hpp"
#include "hexalab/simplex.hpp"

namespace hexalab {

// ---------------------------------------------------------------------------
// Vertex-relation coefficients gamma_ij, one scalar per ordered pair (i, j)
// of distinct vertices.  gamma_ij and gamma_ji are independent.
// ---------------------------------------------------------------------------

template <class F>
struct GammaParams {
    std::vector<Vertex> verts;
    std::vector<typename F::Elem> vals; // row-major over ordered pairs, diagonal skipped

    static GammaParams sample(const F& f, std::vector<Vertex> verts, Rng& rng) {
        GammaParams g;
        g.verts = std::move(verts);
        const std::size_t n = g.verts.size();
        g.vals.reserve(n * (n - 1));
        for (std::size_t i = 0; i < n * (n - 1); ++i) g.vals.push_back(f.sample_nonzero(rng));
        return g;
    }

    static GammaParams constant(const F& f, std::vector<Vertex> verts, typename F::Elem c) {
        GammaParams g;
        g.verts = std::move(verts);
        const std::size_t n = g.verts.size();
        g.vals.assign(n * (n - 1), c);
        return g;
    }

    const typename F::Elem& at(Vertex i, Vertex j) const {
        const std::size_t n = verts.size();
        std::size_t a = pos(i), b = pos(j);
        if (a == b) throw HexalabError("gamma needs distinct vertices");
        return vals[a * (n - 1) + (b < a ? b : b - 1)];
    }
    typename F::Elem& at_mut(Vertex i, Vertex j) {
        return const_cast<typename F::Elem&>(static_cast<const GammaParams*>(this)->at(i, j));
    }

private:
    std::size_t pos(Vertex v) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) throw HexalabError("vertex not in gamma domain");
        return static_cast<std::size_t>(it - verts.begin());
    }
};

// ---------------------------------------------------------------------------
// The six edge-functional restrictions on one tetrahedron ijkl, as a 6x2
// block: rows follow the lex edge order ij, ik, il, jk, jl, kl; the two
// columns act on the tetrahedron coloring (x, y).
//
// All three families below share one shape, parameterized by five
// quantities A, B, C, D1, D2 and the gamma multipliers:
//
//   phi_ij = (      0, -g_ik*A )     phi_jk = ( -g_jl*B,  D1      )
//   phi_ik = ( g_il*A,  g_ij*A )     phi_jl = (  g_jk*B,  C*g_lk  )
//   phi_il = (-g_ik*A,       0 )     phi_kl = (  D2,     -C*g_lj  )
//
// In the generic family A..D2 are the bracketed subexpressions of the
// explicit column; in the first-order family they are its exact o-divided
// values (see phi_block_finite_o).
// ---------------------------------------------------------------------------

template <class R>
using PhiBlock = std::array<std::array<typename R::Elem, 2>, 6>;

template <class R, class G>
PhiBlock<R> phi_block_from_parts(const R& r, G&& g, Vertex i, Vertex j, Vertex k, Vertex l,
                                 const typename R::Elem& A, const typename R::Elem& B,
                                 const typename R::Elem& C, const typename R::Elem& D1,
                                 const typename R::Elem& D2) {
    PhiBlock<R> rows;
    rows[0] = {r.zero(), r.neg(r.mul(g(i, k), A))};
    rows[1] = {r.mul(g(i, l), A), r.mul(g(i, j), A)};
    rows[2] = {r.neg(r.mul(g(i, k), A)), r.zero()};
    rows[3] = {r.neg(r.mul(g(j, l), B)), D1};
    rows[4] = {r.mul(g(j, k), B), r.mul(C, g(l, k))};
    rows[5] = {D2, r.neg(r.mul(C, g(l, j)))};
    return rows;
}

// Generic-family block over an arbitrary commutative ring (the field for the
// generic case, duals for the vanishing tests).  check_generic requires the
// recurring bracket subexpressions to be nonzero; violations are
// resampleable.
template <class R, class G>
PhiBlock<R> phi_block_generic(const R& r, G&& g, Vertex i, Vertex j, Vertex k, Vertex l,
                              bool check_generic) {
    auto p3 = [&](auto a, auto b, auto c) { return r.mul(r.mul(a, b), c); };
    auto A = r.add(p3(g(j, l), g(k, j), g(l, k)), p3(g(j, k), g(k, l), g(l, j)));
    auto B = r.add(p3(g(i, l), g(k, i), g(l, k)), p3(g(i, k), g(k, l), g(l, i)));
    auto C = r.add(p3(g(i, k), g(j, i), g(k, j)), p3(g(i, j), g(j, k), g(k, i)));
    auto D1 = r.sub(r.mul(p3(g(i, k), g(j, i), g(k, l)), g(l, j)),
                    r.mul(p3(g(i, j), g(j, l), g(k, i)), g(l, k)));
    auto D2 = r.sub(r.mul(p3(g(i, k), g(j, l), g(k, j)), g(l, i)),
                    r.mul(p3(g(i, l), g(j, k), g(k, i)), g(l, j)));
    if (check_generic && (r.is_zero(A) || r.is_zero(B) || r.is_zero(C)))
        throw DegenerateError("vanishing bracket subexpression in the phi column");
    return phi_block_from_parts(r, g, i, j, k, l, A, B, C, D1, D2);
}

// First-order family block: the infinitesimal table in terms of
// omega_ijk = b_ij - b_ik + b_jk.
template <class F>
PhiBlock<F> phi_block_infinitesimal(const F& f, const Cochain2<F>& w,
                                    Vertex i, Vertex j, Vertex k, Vertex l) {
    const auto& wijk = w.at(i, j, k);
    const auto& wijl = w.at(i, j, l);
    const auto& wikl = w.at(i, k, l);
    const auto& wjkl = w.at(j, k, l);
    PhiBlock<F> rows;
    rows[0] = {f.sub(wjkl, wikl), f.zero()};
    rows[1] = {wijl, wjkl};
    rows[2] = {f.neg(wijk), f.neg(wjkl)};
    rows[3] = {f.neg(wijl), f.neg(wikl)};
    rows[4] = {wijk, wikl};
    rows[5] = {f.zero(), f.sub(wijk, wijl)};
    return rows;
}

// Finite-o family at gamma_ij = -1 + o b_ij (i < j), +1 + o b_ji (i > j),
// with one power of o and the overall content 2 factored out of every entry
// of the generic column.  As integer polynomials,
//
//   A  = 2o(-omega_jkl + o^2 b_jk b_jl b_kl)        C  analogous with omega_ijk
//   B  = 2o(-omega_ikl + o^2 b_ik b_il b_kl)        D1 = 2o((omega_ijl - omega_ikl) + O(o^2))
//   D2 = 2o((omega_ijk - omega_ijl) + O(o^2))
//
// (all o^2 coefficients vanish identically), so modulo o^2 the divided parts
// are plain field constants and only the gamma multipliers carry o.  Exact
// divisibility makes the construction valid in every characteristic,
// including 2, where the undivided column vanishes identically.
template <class F>
PhiBlock<DualField<F>> phi_block_finite_o_raw(const DualField<F>& df, const Cochain2<F>& w,
                                              const Cochain1<F>& b,
                                              Vertex i, Vertex j, Vertex k, Vertex l) {
    const F& f = df.base();
    auto gm = [&](Vertex a, Vertex c) {
        return a < c ? df.make(f.from_int(-1), b.at(a, c)) : df.make(f.one(), b.at(c, a));
    };
    auto A = df.lift(f.neg(w.at(j, k, l)));
    auto B = df.lift(f.neg(w.at(i, k, l)));
    auto C = df.lift(f.neg(w.at(i, j, k)));
    auto D1 = df.lift(f.sub(w.at(i, j, l), w.at(i, k, l)));
    auto D2 = df.lift(f.sub(w.at(i, j, k), w.at(i, j, l)));
    return phi_block_from_parts(df, gm, i, j, k, l, A, B, C, D1, D2);
}

// The raw divided block equals the infinitesimal table times a per-
// tetrahedron change of the two coloring components: at o = 0, with
// Delta = omega_jkl - omega_ikl,
//
//   raw0 = table * [[0, -omega_jkl / Delta], [1, omega_ijk / Delta]]
//
// (the verification uses the 2-cocycle identity on ijkl).  Undoing that
// basis change pins the finite-o functionals to the table's coordinates,
// where the 3-cochain formulas live: row (a, b) becomes
// ((a omega_ijk - b Delta) / omega_jkl, a).  Needs omega_jkl != 0.
template <class F>
PhiBlock<DualField<F>> phi_block_finite_o(const DualField<F>& df, const Cochain2<F>& w,
                                          const Cochain1<F>& b,
                                          Vertex i, Vertex j, Vertex k, Vertex l) {
    const F& f = df.base();
    if (f.is_zero(w.at(j, k, l)))
        throw DegenerateError("vanishing omega_jkl in the finite-o gauge");
    auto raw = phi_block_finite_o_raw(df, w, b, i, j, k, l);
    const auto inv_wjkl = df.lift(f.inv(w.at(j, k, l)));
    const auto wijk = df.lift(w.at(i, j, k));
    const auto delta = df.lift(f.sub(w.at(j, k, l), w.at(i, k, l)));
    PhiBlock<DualField<F>> rows;
    for (int e = 0; e < 6; ++e) {
        rows[e][0] = df.mul(df.sub(df.mul(raw[e][0], wijk), df.mul(raw[e][1], delta)), inv_wjkl);
        rows[e][1] = raw[e][0];
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Edge functionals of one pentachoron, assembled over its ten coloring
// coordinates (tetrahedra in lex order, (x, y) adjacent).  Row r = edge r in
// lex order; every per-tetrahedron block enters multiplied by the
// orientation sign of that tetrahedron in u.
// ---------------------------------------------------------------------------

template <class F>
struct PentFunctionals {
    Simplex u;
    std::vector<Simplex> tets;  // 5, lex
    std::vector<Simplex> edges; // 10, lex
    Matrix<F> rows;             // 10 x 10

    int tet_index(const Simplex& t) const {
        for (std::size_t a = 0; a < tets.size(); ++a)
            if (tets[a] == t) return static_cast<int>(a);
        return -1;
    }
    int edge_index(const Simplex& e) const {
        for (std::size_t a = 0; a < edges.size(); ++a)
            if (edges[a] == e) return static_cast<int>(a);
        return -1;
    }
};

namespace detail {

template <class F, class BlockFn>
PentFunctionals<F> assemble_functionals(const F& f, const Simplex& u, BlockFn&& block_for) {
    PentFunctionals<F> fam;
    fam.u = u;
    fam.tets = faces(u, 3);
    fam.edges = faces(u, 1);
    fam.rows = Matrix<F>(f, 10, 10);
    for (int tau = 0; tau < 5; ++tau) {
        const Simplex& t = fam.tets[tau];
        const int sign = orientation_sign(t, u);
        PhiBlock<F> block = block_for(t);
        const auto tet_edges = faces(t, 1);
        for (int e = 0; e < 6; ++e) {
            const int row = fam.edge_index(tet_edges[e]);
            for (int c = 0; c < 2; ++c) {
                auto val = block[e][c];
                if (sign < 0) val = f.neg(val);
                fam.rows.at(row, 2 * tau + c) = val;
            }
        }
    }
    return fam;
}

} // namespace detail

template <class F>
PentFunctionals<F> functionals_generic(const F& f, const GammaParams<F>& gamma, const Simplex& u,
                                       bool check_generic = true) {
    auto g = [&](Vertex a, Vertex c) -> const typename F::Elem& { return gamma.at(a, c); };
    return detail::assemble_functionals(f, u, [&](const Simplex& t) {
        return phi_block_generic(f, g, t.vertex(0), t.vertex(1), t.vertex(2), t.vertex(3),
                                 check_generic);
    });
}

template <class F>
PentFunctionals<F> functionals_infinitesimal(const F& f, const Cochain2<F>& w, const Simplex& u) {
    return detail::assemble_functionals(f, u, [&](const Simplex& t) {
        return phi_block_infinitesimal(f, w, t.vertex(0), t.vertex(1), t.vertex(2), t.vertex(3));
    });
}

template <class F>
PentFunctionals<DualField<F>> functionals_finite_o(const DualField<F>& df, const Cochain2<F>& w,
                                                   const Cochain1<F>& b, const Simplex& u) {
    return detail::assemble_functionals(df, u, [&](const Simplex& t) {
        return phi_block_finite_o(df, w, b, t.vertex(0), t.vertex(1), t.vertex(2), t.vertex(3));
    });
}

// Permitted colorings V_u: the intersection of the kernels of all ten edge
// functionals.
template <class F>
Subspace<F> permitted_space(const F& f, const PentFunctionals<F>& fam) {
    return kernel_basis(f, fam.rows);
}

// ---------------------------------------------------------------------------
// Edge vectors of the first-order family: explicit columns supported on the
// star of each edge.  All four omega values of each tetrahedron and the
// difference omega_ikl - omega_jkl appear as denominators; a vanishing one
// is a degenerate sample.
// ---------------------------------------------------------------------------

template <class F>
struct PentEdgeVectors {
    Simplex u;
    std::vector<Simplex> tets;
    std::vector<Simplex> edges;
    Matrix<F> cols; // 10 x 10: coordinate rows, edge columns
};

template <class F>
std::array<std::array<typename F::Elem, 2>, 6> psi_block_infinitesimal(
    const F& f, const Cochain2<F>& w, Vertex i, Vertex j, Vertex k, Vertex l) {
    const auto& wijk = w.at(i, j, k);
    const auto& wijl = w.at(i, j, l);
    const auto& wikl = w.at(i, k, l);
    const auto& wjkl = w.at(j, k, l);
    const auto delta = f.sub(wikl, wjkl);
    for (const auto* v : {&wijk, &wijl, &wikl, &wjkl, &delta})
        if (f.is_zero(*v))
            throw DegenerateError("vanishing denominator in the edge-vector table");
    auto iv = [&](const typename F::Elem& x, const typename F::Elem& y) {
        return f.inv(f.mul(x, y));
    };
    std::array<std::array<typename F::Elem, 2>, 6> cols;
    cols[0] = {iv(wijk, wijl), f.zero()};                       // psi_ij
    cols[1] = {f.neg(iv(wijk, delta)), iv(wikl, delta)};        // psi_ik
    cols[2] = {iv(wijl, delta), f.neg(iv(wikl, delta))};        // psi_il
    cols[3] = {iv(wijk, delta), f.neg(iv(delta, wjkl))};        // psi_jk
    cols[4] = {f.neg(iv(wijl, delta)), iv(delta, wjkl)};        // psi_jl
    cols[5] = {f.zero(), f.neg(iv(wikl, wjkl))};                // psi_kl
    return cols;
}

template <class F>
PentEdgeVectors<F> edge_vectors_infinitesimal(const F& f, const Cochain2<F>& w, const Simplex& u) {
    PentEdgeVectors<F> ev;
    ev.u = u;
    ev.tets = faces(u, 3);
    ev.edges = faces(u, 1);
    ev.cols = Matrix<F>(f, 10, 10);
    auto edge_pos = [&](const Simplex& e) {
        for (std::size_t a = 0; a < ev.edges.size(); ++a)
            if (ev.edges[a] == e) return static_cast<int>(a);
        return -1;
    };
    for (int tau = 0; tau < 5; ++tau) {
        const Simplex& t = ev.tets[tau];
        auto block = psi_block_infinitesimal(f, w, t.vertex(0), t.vertex(1), t.vertex(2), t.vertex(3));
        const auto tet_edges = faces(t, 1);
        for (int e = 0; e < 6; ++e) {
            const int col = edge_pos(tet_edges[e]);
            ev.cols.at(2 * tau + 0, col) = block[e][0];
            ev.cols.at(2 * tau + 1, col) = block[e][1];
        }
    }
    return ev;
}

// The identity tying the two tables together on each tetrahedron ijkl:
//   Psi_t = (omega_jkl - omega_ikl)^-1
//           * diag((omega_ijk omega_ijl)^-1, -(omega_ikl omega_jkl)^-1)
//           * Phi_t^T
// with Phi_t the unsigned infinitesimal block.
template <class F>
bool psi_phi_identity_holds(const F& f, const Cochain2<F>& w, const Simplex& u) {
    for (const auto& t : faces(u, 3)) {
        Vertex i = t.vertex(0), j = t.vertex(1), k = t.vertex(2), l = t.vertex(3);
        auto psi = psi_block_infinitesimal(f, w, i, j, k, l);
        auto phi = phi_block_infinitesimal(f, w, i, j, k, l);
        const auto pref = f.inv(f.sub(w.at(j, k, l), w.at(i, k, l)));
        const auto d0 = f.inv(f.mul(w.at(i, j, k), w.at(i, j, l)));
        const auto d1 = f.neg(f.inv(f.mul(w.at(i, k, l), w.at(j, k, l))));
        for (int e = 0; e < 6; ++e) {
            if (!f.eq(psi[e][0], f.mul(pref, f.mul(d0, phi[e][0])))) return false;
            if (!f.eq(psi[e][1], f.mul(pref, f.mul(d1, phi[e][1])))) return false;
        }
    }
    return true;
}

// Generic-family edge vector: the canonical generator of the one-dimensional
// space of permitted colorings vanishing outside the star of the edge,
// normalized so its first nonzero coordinate is 1.
template <class F>
std::vector<typename F::Elem> edge_vector_by_kernel(const F& f, const PentFunctionals<F>& fam,
                                                    const Simplex& edge) {
    std::vector<int> zero_coords;
    for (int tau = 0; tau < 5; ++tau)
        if (!fam.tets[tau].contains(edge)) {
            zero_coords.push_back(2 * tau);
            zero_coords.push_back(2 * tau + 1);
        }
    Matrix<F> sys(f, 10 + static_cast<int>(zero_coords.size()), 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) sys.at(i, j) = fam.rows.at(i, j);
    for (std::size_t i = 0; i < zero_coords.size(); ++i)
        sys.at(10 + static_cast<int>(i), zero_coords[i]) = f.one();
    auto ker = kernel_basis(f, sys);
    if (ker.dim() != 1)
        throw DegenerateError("edge-vector space of " + edge.to_string() + " has dim " +
                              std::to_string(ker.dim()));
    std::vector<typename F::Elem> v(10, f.zero());
    for (int j = 0; j < 10; ++j) v[j] = ker.basis.at(0, j);
    for (int j = 0; j < 10; ++j) {
        if (!f.is_zero(v[j])) {
            auto s = f.inv(v[j]);
            for (int c = 0; c < 10; ++c) v[c] = f.mul(s, v[c]);
            break;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Parameter families.  One parameter set serves the whole vertex set; each
// pentachoron's functionals are read off it.
// ---------------------------------------------------------------------------

enum class FamilyKind { generic, infinitesimal };

inline const char* family_name(FamilyKind k) {
    return k == FamilyKind::generic ? "generic" : "infinitesimal";
}

template <class F>
struct HexagonParams {
    FamilyKind kind = FamilyKind::generic;
    GammaParams<F> gamma; // generic family
    Cochain1<F> b;        // first-order family
    Cochain2<F> omega;    //   with omega = delta1(b)

    static HexagonParams sample(const F& f, FamilyKind kind, std::vector<Vertex> verts,
                                std::uint64_t seed) {
        Rng rng(seed);
        HexagonParams p;
        p.kind = kind;
        if (kind == FamilyKind::generic) {
            p.gamma = GammaParams<F>::sample(f, std::move(verts), rng);
        } else {
            p.b = Cochain1<F>::sample(f, std::move(verts), rng);
            p.omega = delta1(f, p.b);
        }
        return p;
    }

    // coefficient of phi_ij in the vertex-i relation
    typename F::Elem vertex_coeff(const F& f, Vertex i, Vertex j) const {
        if (kind == FamilyKind::generic) return gamma.at(i, j);
        return f.from_int(i < j ? -1 : 1);
    }
};

template <class F>
PentFunctionals<F> functionals_for(const F& f, const HexagonParams<F>& p, const Simplex& u) {
    if (p.kind == FamilyKind::generic) return functionals_generic(f, p.gamma, u);
    return functionals_infinitesimal(f, p.omega, u);
}

// Exact check of the per-vertex relations inside one pentachoron:
// sum_j gamma_ij phi_ij = 0 (generic) or sum_j eps_ij phi_ij = 0 plus
// sum_{i<j} b_ij phi_ij = 0 (first-order family).
template <class F>
bool vertex_relations_hold(const F& f, const HexagonParams<F>& p, const PentFunctionals<F>& fam) {
    for (Vertex i : fam.u.vertices()) {
        std::vector<typename F::Elem> acc(10, f.zero());
        for (Vertex j : fam.u.vertices()) {
            if (j == i) continue;
            Vertex a = std::min(i, j), b = std::max(i, j);
            const int row = fam.edge_index(Simplex{a, b});
            const auto coeff = p.vertex_coeff(f, i, j);
            for (int c = 0; c < 10; ++c)
                acc[c] = f.add(acc[c], f.mul(coeff, fam.rows.at(row, c)));
        }
        if (!vec_is_zero(f, acc)) return false;
    }
    if (p.kind == FamilyKind::infinitesimal) {
        std::vector<typename F::Elem> acc(10, f.zero());
        for (int row = 0; row < 10; ++row) {
            const auto& e = fam.edges[row];
            const auto& coeff = p.b.at(e.vertex(0), e.vertex(1));
            for (int c = 0; c < 10; ++c)
                acc[c] = f.add(acc[c], f.mul(coeff, fam.rows.at(row, c)));
        }
        if (!vec_is_zero(f, acc)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Cluster-wide systems.
// ---------------------------------------------------------------------------

// Stacks the edge-functional rows of all pentachora of a complex over the
// 2 * (#tetrahedra) coloring coordinates of the whole complex.
template <class F>
Matrix<F> stacked_system(const F& f, const std::vector<Simplex>& tets,
                         const std::vector<PentFunctionals<F>>& fams) {
    auto tet_index = [&](const Simplex& t) {
        auto it = std::lower_bound(tets.begin(), tets.end(), t);
        return static_cast<int>(it - tets.begin());
    };
    Matrix<F> sys(f, static_cast<int>(fams.size()) * 10, static_cast<int>(tets.size()) * 2);
    int row = 0;
    for (const auto& fam : fams) {
        std::array<int, 5> col_of;
        for (int tau = 0; tau < 5; ++tau) col_of[tau] = tet_index(fam.tets[tau]);
        for (int e = 0; e < 10; ++e, ++row)
            for (int tau = 0; tau < 5; ++tau)
                for (int c = 0; c < 2; ++c)
                    sys.at(row, 2 * col_of[tau] + c) = fam.rows.at(e, 2 * tau + c);
    }
    return sys;
}

// Permitted colorings of an arbitrary pentachoron complex (no boundary
// classification needed); used for V(boundary of Delta^5).
template <class F>
Subspace<F> complex_space(const F& f, const std::vector<Simplex>& pentachora,
                          const HexagonParams<F>& p) {
    std::set<Simplex> tset;
    std::vector<PentFunctionals<F>> fams;
    for (const auto& u : pentachora) {
        fams.push_back(functionals_for(f, p, u));
        for (const auto& t : faces(u, 3)) tset.insert(t);
    }
    std::vector<Simplex> tets(tset.begin(), tset.end());
    return kernel_basis(f, stacked_system(f, tets, fams));
}

template <class F>
struct ClusterSpace {
    Subspace<F> V;                     // over all cluster tetrahedra
    Subspace<F> boundary_restriction;  // projection image on boundary tetrahedra
    int fiber_dim = 0;                 // dim V - dim boundary_restriction
    std::vector<Simplex> boundary_tets;
};

template <class F>
ClusterSpace<F> cluster_space(const F& f, const Cluster& cluster, const HexagonParams<F>& p) {
    std::vector<PentFunctionals<F>> fams;
    for (const auto& u : cluster.pentachora) fams.push_back(functionals_for(f, p, u));
    ClusterSpace<F> cs;
    cs.V = kernel_basis(f, stacked_system(f, cluster.tetrahedra, fams));
    cs.boundary_tets = cluster.boundary_tetrahedra();
    std::vector<int> bcols;
    for (const auto& t : cs.boundary_tets) {
        const int idx = cluster.tet_index(t);
        bcols.push_back(2 * idx);
        bcols.push_back(2 * idx + 1);
    }
    cs.boundary_restriction =
        Subspace<F>::from_rows(f, select_cols(f, cs.V.basis, bcols));
    cs.fiber_dim = cs.V.dim() - cs.boundary_restriction.dim();
    return cs;
}

// ---------------------------------------------------------------------------
// Boundary edge functionals: phi_ij^boundary = sum over pentachora
// containing ij.  Inside the oriented boundary of Delta^5 each pentachoron
// enters with its boundary orientation (normalized so the cluster's first
// pentachoron counts +1); two pentachora then induce opposite signs on a
// shared tetrahedron and the inner components must cancel exactly.
// Anything left over is a sign-convention bug, not a degenerate sample.
// ---------------------------------------------------------------------------

// Orientation of a pentachoron of the boundary of Delta^5 relative to the
// increasing order of its vertices.
inline int boundary_orientation(const Simplex& u) { return orientation_sign(u, delta5()); }

template <class F>
struct BoundaryFunctionals {
    std::vector<Simplex> boundary_tets;
    std::vector<Simplex> boundary_edges;
    Matrix<F> rows; // per boundary edge, over boundary coordinates
};

template <class F>
BoundaryFunctionals<F> boundary_functionals(const F& f, const Cluster& cluster,
                                            const HexagonParams<F>& p) {
    std::vector<PentFunctionals<F>> fams;
    for (const auto& u : cluster.pentachora) fams.push_back(functionals_for(f, p, u));
    const int first_sign = boundary_orientation(cluster.pentachora[0]);

    const int ncols = static_cast<int>(cluster.tetrahedra.size()) * 2;
    Matrix<F> summed(f, static_cast<int>(cluster.edges.size()), ncols);
    for (const auto& fam : fams) {
        const bool flip = boundary_orientation(fam.u) != first_sign;
        std::array<int, 5> col_of;
        for (int tau = 0; tau < 5; ++tau) col_of[tau] = cluster.tet_index(fam.tets[tau]);
        for (int e = 0; e < 10; ++e) {
            const int row = cluster.edge_index(fam.edges[e]);
            for (int tau = 0; tau < 5; ++tau)
                for (int c = 0; c < 2; ++c) {
                    auto& cell = summed.at(row, 2 * col_of[tau] + c);
                    auto term = fam.rows.at(e, 2 * tau + c);
                    cell = f.add(cell, flip ? f.neg(term) : term);
                }
        }
    }

    // inner components must be exactly zero, for boundary and inner edges alike
    for (int e = 0; e < summed.rows; ++e)
        for (std::size_t t = 0; t < cluster.tetrahedra.size(); ++t)
            if (cluster.tet_inner[t])
                for (int c = 0; c < 2; ++c)
                    if (!f.is_zero(summed.at(e, 2 * static_cast<int>(t) + c)))
                        throw InnerResidueError("nonzero inner component of boundary functional " +
                                                cluster.edges[e].to_string() + " on " +
                                                cluster.tetrahedra[t].to_string());

    BoundaryFunctionals<F> bf;
    bf.boundary_tets = cluster.boundary_tetrahedra();
    bf.boundary_edges = cluster.boundary_edges();
    std::vector<int> bcols;
    for (const auto& t : bf.boundary_tets) {
        const int idx = cluster.tet_index(t);
        bcols.push_back(2 * idx);
        bcols.push_back(2 * idx + 1);
    }
    Matrix<F> rows(f, static_cast<int>(bf.boundary_edges.size()), static_cast<int>(bcols.size()));
    for (std::size_t e = 0; e < bf.boundary_edges.size(); ++e) {
        const int src = cluster.edge_index(bf.boundary_edges[e]);
        for (std::size_t j = 0; j < bcols.size(); ++j)
            rows.at(static_cast<int>(e), static_cast<int>(j)) = summed.at(src, bcols[j]);
    }
    bf.rows = std::move(rows);
    return bf;
}

// Theorem-1 vertex relations for the boundary functionals: for each boundary
// vertex i, sum over boundary edges ij of gamma_ij (or eps_ij) times
// phi_ij^boundary vanishes; the first-order family also satisfies the
// b-weighted relation over all boundary edges.
template <class F>
bool boundary_vertex_relations_hold(const F& f, const Cluster& cluster,
                                    const HexagonParams<F>& p,
                                    const BoundaryFunctionals<F>& bf) {
    auto edge_row = [&](const Simplex& e) {
        for (std::size_t a = 0; a < bf.boundary_edges.size(); ++a)
            if (bf.boundary_edges[a] == e) return static_cast<int>(a);
        return -1;
    };
    for (Vertex i : cluster.boundary_vertices()) {
        std::vector<typename F::Elem> acc(static_cast<std::size_t>(bf.rows.cols), f.zero());
        for (const auto& e : bf.boundary_edges) {
            if (!e.has_vertex(i)) continue;
            const Vertex j = e.vertex(0) == i ? e.vertex(1) : e.vertex(0);
            const auto coeff = p.vertex_coeff(f, i, j);
            const int row = edge_row(e);
            for (int c = 0; c < bf.rows.cols; ++c)
                acc[c] = f.add(acc[c], f.mul(coeff, bf.rows.at(row, c)));
        }
        if (!vec_is_zero(f, acc)) return false;
    }
    if (p.kind == FamilyKind::infinitesimal) {
        std::vector<typename F::Elem> acc(static_cast<std::size_t>(bf.rows.cols), f.zero());
        for (std::size_t e = 0; e < bf.boundary_edges.size(); ++e) {
            const auto& edge = bf.boundary_edges[e];
            const auto& coeff = p.b.at(edge.vertex(0), edge.vertex(1));
            for (int c = 0; c < bf.rows.cols; ++c)
                acc[c] = f.add(acc[c], f.mul(coeff, bf.rows.at(static_cast<int>(e), c)));
        }
        if (!vec_is_zero(f, acc)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Full hexagon over the boundary of Delta^5: all 31 unordered splittings.
// ---------------------------------------------------------------------------

inline const std::array<int, 5>& fiber_dim_table() {
    static const std::array<int, 5> a = {0, 0, 0, 1, 4};
    return a;
}

struct SplittingResult {
    std::set<Vertex> omitted; // identifies C; complement identifies C-bar
    int k = 0;
    int dim_boundary_C = 0;
    int dim_boundary_Cbar = 0;
    bool restrictions_equal = false;
    int fiber_C = 0;
    int fiber_Cbar = 0;
    bool pass = false;
};

struct HexagonReport {
    std::vector<SplittingResult> splittings;
    int dim_V_boundary = 0;
    bool restriction_to_pentachora_ok = false;
    bool all_pass = false;
};

template <class F>
HexagonReport full_hexagon_check(const F& f, const HexagonParams<F>& p) {
    HexagonReport report;
    report.all_pass = true;

    // enumerate unordered splittings: keep the side whose omitted set is
    // smaller, ties broken lexicographically
    std::vector<std::set<Vertex>> sides;
    for (unsigned mask = 1; mask < 63; ++mask) {
        std::set<Vertex> omitted, complement;
        for (Vertex v = 1; v <= 6; ++v)
            ((mask >> (v - 1)) & 1 ? omitted : complement).insert(v);
        if (omitted.size() > complement.size()) continue;
        if (omitted.size() == complement.size() && omitted > complement) continue;
        sides.push_back(omitted);
    }

    for (const auto& omitted : sides) {
        std::set<Vertex> complement;
        for (Vertex v = 1; v <= 6; ++v)
            if (!omitted.count(v)) complement.insert(v);

        SplittingResult sr;
        sr.omitted = omitted;
        sr.k = static_cast<int>(omitted.size());

        const Cluster c = cluster_from_omitted(omitted);
        const Cluster cb = cluster_from_omitted(complement);
        if (c.boundary_tetrahedra() != cb.boundary_tetrahedra())
            throw HexalabError("splitting sides disagree on the common boundary");

        auto cs = cluster_space(f, c, p);
        auto csb = cluster_space(f, cb, p);
        sr.dim_boundary_C = cs.boundary_restriction.dim();
        sr.dim_boundary_Cbar = csb.boundary_restriction.dim();
        sr.restrictions_equal = cs.boundary_restriction.equal(f, csb.boundary_restriction);
        sr.fiber_C = cs.fiber_dim;
        sr.fiber_Cbar = csb.fiber_dim;
        sr.pass = sr.restrictions_equal && sr.fiber_C == fiber_dim_table()[sr.k - 1] &&
                  sr.fiber_Cbar == fiber_dim_table()[6 - sr.k - 1];
        report.all_pass = report.all_pass && sr.pass;
        report.splittings.push_back(std::move(sr));
    }

    auto V = complex_space(f, delta5_pentachora(), p);
    report.dim_V_boundary = V.dim();
    if (V.dim() != 9) report.all_pass = false;

    // the projection of V onto each pentachoron must equal V_u
    report.restriction_to_pentachora_ok = true;
    std::vector<Simplex> all_tets = faces(delta5(), 3);
    for (const auto& u : delta5_pentachora()) {
        auto fam = functionals_for(f, p, u);
        auto Vu = permitted_space(f, fam);
        std::vector<int> cols;
        for (const auto& t : fam.tets) {
            auto it = std::lower_bound(all_tets.begin(), all_tets.end(), t);
            const int idx = static_cast<int>(it - all_tets.begin());
            cols.push_back(2 * idx);
            cols.push_back(2 * idx + 1);
        }
        auto proj = Subspace<F>::from_rows(f, select_cols(f, V.basis, cols));
        if (!proj.equal(f, Vu)) report.restriction_to_pentachora_ok = false;
    }
    if (!report.restriction_to_pentachora_ok) report.all_pass = false;

    return report;
}

} // namespace hexalab

#endif
