#ifndef HEXALAB_SIMPLEX_HPP
#define HEXALAB_SIMPLEX_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "hexalab/errors.hpp"

namespace hexalab {

using Vertex = int;

// Simplex as a strictly increasing vertex list.  All triangulations here come
// with ordered vertices, so the increasing list is the one true
// representative.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> verts);
    Simplex(std::initializer_list<Vertex> verts) : Simplex(std::vector<Vertex>(verts)) {}

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    int size() const { return static_cast<int>(v_.size()); }
    Vertex vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<Vertex>& vertices() const { return v_; }

    bool contains(const Simplex& other) const;
    bool has_vertex(Vertex v) const;
    // position of v in the vertex list, -1 if absent
    int position_of(Vertex v) const;

    std::string to_string() const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<Vertex> v_;
};

// All (d+1)-subsets of s, in lexicographic order.
std::vector<Simplex> faces(const Simplex& s, int d);

// Sign (-1)^p where p is the position (0-based) of the vertex of u omitted by
// its codimension-1 face t.  For a tetrahedron inside a pentachoron this is
// the orientation sign of the coboundary convention.
int orientation_sign(const Simplex& t, const Simplex& u);

const Simplex& delta5();                       // 123456
const std::vector<Simplex>& delta5_pentachora(); // its six 4-faces, lex order

// Cluster of pentachora glued along tetrahedra.  A tetrahedron is inner iff
// it lies in exactly two pentachora, boundary iff in exactly one; three or
// more is rejected.
struct Cluster {
    std::vector<Simplex> pentachora;  // sorted, distinct
    std::vector<Simplex> tetrahedra;  // lex order
    std::vector<bool> tet_inner;      // parallel to tetrahedra
    std::vector<Simplex> edges;       // lex order
    std::vector<Vertex> vertices;     // sorted

    std::vector<Simplex> boundary_tetrahedra() const;
    std::vector<Simplex> inner_tetrahedra() const;
    // edges / vertices lying in some boundary tetrahedron
    std::vector<Simplex> boundary_edges() const;
    std::vector<Vertex> boundary_vertices() const;

    int tet_index(const Simplex& t) const;   // -1 if absent
    int edge_index(const Simplex& e) const;

    static Cluster build(std::vector<Simplex> pentachora);
};

// Cluster made of the pentachora of the boundary of Delta^5 that omit the
// given vertices.  Requires 1 <= |omitted| <= 5: the empty and the full set
// leave no boundary.
Cluster cluster_from_omitted(const std::set<Vertex>& omitted);

std::string omitted_to_string(const std::set<Vertex>& omitted);

} // namespace hexalab

#endif
