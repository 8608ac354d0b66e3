#include "hexalab/simplex.hpp"

#include <algorithm>
#include <map>

namespace hexalab {

Simplex::Simplex(std::vector<Vertex> verts) : v_(std::move(verts)) {
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (v_[i - 1] >= v_[i])
            throw HexalabError("simplex vertices must be strictly increasing");
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Simplex::has_vertex(Vertex v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

int Simplex::position_of(Vertex v) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    if (it == v_.end() || *it != v) return -1;
    return static_cast<int>(it - v_.begin());
}

std::string Simplex::to_string() const {
    bool compact = true;
    for (Vertex v : v_)
        if (v < 1 || v > 9) compact = false;
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (!compact && i > 0) s += '.';
        s += std::to_string(v_[i]);
    }
    return s;
}

std::vector<Simplex> faces(const Simplex& s, int d) {
    if (d < 0 || d > s.dim()) throw HexalabError("face dimension out of range");
    const int n = s.size(), m = d + 1;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<Simplex> out;
    while (true) {
        std::vector<Vertex> verts(m);
        for (int i = 0; i < m; ++i) verts[i] = s.vertex(idx[i]);
        out.emplace_back(std::move(verts));
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

int orientation_sign(const Simplex& t, const Simplex& u) {
    if (t.dim() != u.dim() - 1 || !u.contains(t))
        throw HexalabError("orientation_sign: not a codimension-1 face");
    for (int p = 0; p < u.size(); ++p)
        if (!t.has_vertex(u.vertex(p))) return (p % 2 == 0) ? 1 : -1;
    throw HexalabError("orientation_sign: no omitted vertex found");
}

const Simplex& delta5() {
    static const Simplex s{1, 2, 3, 4, 5, 6};
    return s;
}

const std::vector<Simplex>& delta5_pentachora() {
    static const std::vector<Simplex> p = faces(delta5(), 4);
    return p;
}

std::vector<Simplex> Cluster::boundary_tetrahedra() const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < tetrahedra.size(); ++i)
        if (!tet_inner[i]) out.push_back(tetrahedra[i]);
    return out;
}

std::vector<Simplex> Cluster::inner_tetrahedra() const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < tetrahedra.size(); ++i)
        if (tet_inner[i]) out.push_back(tetrahedra[i]);
    return out;
}

std::vector<Simplex> Cluster::boundary_edges() const {
    std::set<Simplex> acc;
    for (std::size_t i = 0; i < tetrahedra.size(); ++i)
        if (!tet_inner[i])
            for (const auto& e : faces(tetrahedra[i], 1)) acc.insert(e);
    return {acc.begin(), acc.end()};
}

std::vector<Vertex> Cluster::boundary_vertices() const {
    std::set<Vertex> acc;
    for (std::size_t i = 0; i < tetrahedra.size(); ++i)
        if (!tet_inner[i])
            for (Vertex v : tetrahedra[i].vertices()) acc.insert(v);
    return {acc.begin(), acc.end()};
}

int Cluster::tet_index(const Simplex& t) const {
    auto it = std::lower_bound(tetrahedra.begin(), tetrahedra.end(), t);
    if (it == tetrahedra.end() || !(*it == t)) return -1;
    return static_cast<int>(it - tetrahedra.begin());
}

int Cluster::edge_index(const Simplex& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
}

Cluster Cluster::build(std::vector<Simplex> pentachora) {
    std::sort(pentachora.begin(), pentachora.end());
    pentachora.erase(std::unique(pentachora.begin(), pentachora.end()), pentachora.end());
    if (pentachora.empty()) throw HexalabError("cluster needs at least one pentachoron");
    for (const auto& u : pentachora)
        if (u.dim() != 4) throw HexalabError("cluster members must be pentachora");

    std::map<Simplex, int> tet_count;
    std::set<Simplex> edge_set;
    std::set<Vertex> vert_set;
    for (const auto& u : pentachora) {
        for (const auto& t : faces(u, 3)) ++tet_count[t];
        for (const auto& e : faces(u, 1)) edge_set.insert(e);
        for (Vertex v : u.vertices()) vert_set.insert(v);
    }

    Cluster c;
    c.pentachora = std::move(pentachora);
    for (const auto& [t, n] : tet_count) {
        if (n > 2) throw HexalabError("tetrahedron " + t.to_string() + " lies in " +
                                      std::to_string(n) + " pentachora");
        c.tetrahedra.push_back(t);
        c.tet_inner.push_back(n == 2);
    }
    c.edges.assign(edge_set.begin(), edge_set.end());
    c.vertices.assign(vert_set.begin(), vert_set.end());
    return c;
}

Cluster cluster_from_omitted(const std::set<Vertex>& omitted) {
    if (omitted.empty() || omitted.size() >= 6)
        throw HexalabError("cluster must omit between 1 and 5 of the vertices 1..6");
    std::vector<Simplex> chosen;
    for (Vertex o : omitted) {
        if (o < 1 || o > 6) throw HexalabError("omitted vertex out of range 1..6");
        std::vector<Vertex> verts;
        for (Vertex v = 1; v <= 6; ++v)
            if (v != o) verts.push_back(v);
        chosen.emplace_back(std::move(verts));
    }
    return Cluster::build(std::move(chosen));
}

std::string omitted_to_string(const std::set<Vertex>& omitted) {
    std::string s;
    for (Vertex v : omitted) s += std::to_string(v);
    return s;
}

} // namespace hexalab
