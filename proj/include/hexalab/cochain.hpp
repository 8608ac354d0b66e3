#ifndef HEXALAB_COCHAIN_HPP
#define HEXALAB_COCHAIN_HPP

#include <algorithm>
#include <vector>

#include "hexalab/field.hpp"
#include "hexalab/simplex.hpp"

namespace hexalab {

// Simplicial 1-cochain b: one scalar per (unordered) edge of the complete
// simplex on a sorted vertex list.
template <class F>
struct Cochain1 {
    std::vector<Vertex> verts;
    std::vector<Simplex> edges; // lex order
    std::vector<typename F::Elem> vals;

    static Cochain1 zero(const F& f, std::vector<Vertex> verts) {
        Cochain1 c;
        c.verts = std::move(verts);
        c.edges = faces(Simplex(c.verts), 1);
        c.vals.assign(c.edges.size(), f.zero());
        return c;
    }

    // Generic 1-cochain.  Coordinates may be zero: genericity lives in the
    // derived omega-expressions, and over F_3 every all-nonzero b provably
    // misses the generic locus of the nontriviality tests.
    static Cochain1 sample(const F& f, std::vector<Vertex> verts, Rng& rng) {
        Cochain1 c = zero(f, std::move(verts));
        for (auto& v : c.vals) v = f.sample(rng);
        return c;
    }

    int index(Vertex i, Vertex j) const {
        if (i > j) std::swap(i, j);
        Simplex e{i, j};
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e)) throw HexalabError("edge not in cochain domain");
        return static_cast<int>(it - edges.begin());
    }
    const typename F::Elem& at(Vertex i, Vertex j) const { return vals[index(i, j)]; }
};

// Simplicial 2-cochain omega: one scalar per triangle.
template <class F>
struct Cochain2 {
    std::vector<Vertex> verts;
    std::vector<Simplex> triangles; // lex order
    std::vector<typename F::Elem> vals;

    static Cochain2 zero(const F& f, std::vector<Vertex> verts) {
        Cochain2 c;
        c.verts = std::move(verts);
        c.triangles = faces(Simplex(c.verts), 2);
        c.vals.assign(c.triangles.size(), f.zero());
        return c;
    }

    int index(Vertex i, Vertex j, Vertex k) const {
        std::vector<Vertex> v{i, j, k};
        std::sort(v.begin(), v.end());
        Simplex t(v);
        auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
        if (it == triangles.end() || !(*it == t)) throw HexalabError("triangle not in cochain domain");
        return static_cast<int>(it - triangles.begin());
    }
    const typename F::Elem& at(Vertex i, Vertex j, Vertex k) const { return vals[index(i, j, k)]; }
    typename F::Elem& at_mut(Vertex i, Vertex j, Vertex k) { return vals[index(i, j, k)]; }
};

// omega_ijk = b_ij - b_ik + b_jk on every triangle of the ambient simplex.
template <class F>
Cochain2<F> delta1(const F& f, const Cochain1<F>& b) {
    Cochain2<F> w = Cochain2<F>::zero(f, b.verts);
    for (std::size_t t = 0; t < w.triangles.size(); ++t) {
        Vertex i = w.triangles[t].vertex(0);
        Vertex j = w.triangles[t].vertex(1);
        Vertex k = w.triangles[t].vertex(2);
        w.vals[t] = f.add(f.sub(b.at(i, j), b.at(i, k)), b.at(j, k));
    }
    return w;
}

// True iff omega_ijk - omega_ijl + omega_ikl - omega_jkl = 0 on every
// tetrahedron of the ambient simplex.
template <class F>
bool cocycle_check(const F& f, const Cochain2<F>& w) {
    for (const auto& t : faces(Simplex(w.verts), 3)) {
        Vertex i = t.vertex(0), j = t.vertex(1), k = t.vertex(2), l = t.vertex(3);
        auto s = f.sub(w.at(i, j, k), w.at(i, j, l));
        s = f.add(s, w.at(i, k, l));
        s = f.sub(s, w.at(j, k, l));
        if (!f.is_zero(s)) return false;
    }
    return true;
}

} // namespace hexalab

#endif
