#pragma once

// Toroidal lattice graphs: cycles, the square torus C_n x C_m, the Union Jack
// lattice and the 4.8.8 (truncated square) lattice, plus their integer
// matrices.
//
// Labeling used throughout:
//   grid(r, c) -> r*n + c                     (r in [0, m), c in [0, n))
//   face(r, c) -> n*m + r*n + c               corners (r,c) (r,c+1) (r+1,c) (r+1,c+1)
// With this order the adjacency of C_n x C_m is literally
// E_m (x) A(C_n) + A(C_m) (x) E_n.

#include "ujl/errors.hpp"
#include "ujl/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ujl {

using VertexId = std::uint32_t;

/// Unordered edge stored with first < second.
struct Edge {
    VertexId first;
    VertexId second;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Torus dimensions: n columns (cycle C_n), m rows (cycle C_m).
class LatticeSize {
public:
    static constexpr std::size_t min_extent = 3;

    LatticeSize(std::size_t n, std::size_t m) : n_(n), m_(m) {
        if (n < min_extent || m < min_extent)
            throw size_error("lattice size " + std::to_string(n) + "x" + std::to_string(m) +
                             " is too small: n and m must both be >= 3");
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t cells() const noexcept { return n_ * m_; }

    /// Row-major id of grid vertex (r, c), wrapping both coordinates.
    VertexId grid(std::size_t r, std::size_t c) const noexcept {
        return static_cast<VertexId>((r % m_) * n_ + (c % n_));
    }

    friend bool operator==(const LatticeSize&, const LatticeSize&) = default;

private:
    std::size_t n_;
    std::size_t m_;
};

/// Vertex cycle bounding one face of an embedded graph.
using Face = std::vector<VertexId>;

/// Immutable undirected graph. Edges are canonicalised (first < second) and
/// sorted lexicographically at construction.
class Graph {
public:
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {},
          std::optional<std::vector<Face>> faces = std::nullopt)
        : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)),
          faces_(std::move(faces)) {
        for (auto& e : edges_) {
            if (e.first == e.second) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.first));
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.second >= vertex_count_) throw std::invalid_argument("edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (!labels_.empty() && labels_.size() != vertex_count_)
            throw std::invalid_argument("label count does not match vertex count");
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::optional<std::vector<Face>>& faces() const noexcept { return faces_; }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(vertex_count_, 0);
        for (const auto& e : edges_) {
            ++deg[e.first];
            ++deg[e.second];
        }
        return deg;
    }

    bool is_simple() const noexcept {
        return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
    }

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::optional<std::vector<Face>> faces_;
};

/// Quadrangular faces of C_n x C_m indexed row-major by (r, c); corners are
/// grid ids of (r,c), (r,c+1), (r+1,c), (r+1,c+1).
struct FaceStructure {
    std::vector<std::array<VertexId, 4>> faces;
};

namespace detail {

inline std::string coord_label(const char* kind, std::size_t r, std::size_t c) {
    return std::string(kind) + "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

inline void add_grid_edges(const LatticeSize& size, std::vector<Edge>& edges) {
    for (std::size_t r = 0; r < size.m(); ++r)
        for (std::size_t c = 0; c < size.n(); ++c) {
            edges.push_back({size.grid(r, c), size.grid(r, c + 1)});
            edges.push_back({size.grid(r, c), size.grid(r + 1, c)});
        }
}

} // namespace detail

inline Graph build_cycle(std::size_t n) {
    if (n < LatticeSize::min_extent)
        throw size_error("cycle length " + std::to_string(n) + " is too small: must be >= 3");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
        labels.push_back("cycle(" + std::to_string(i) + ")");
    }
    return Graph(n, std::move(edges), std::move(labels));
}

inline Graph build_torus_grid(const LatticeSize& size) {
    std::vector<Edge> edges;
    detail::add_grid_edges(size, edges);
    std::vector<std::string> labels;
    for (std::size_t r = 0; r < size.m(); ++r)
        for (std::size_t c = 0; c < size.n(); ++c) labels.push_back(detail::coord_label("grid", r, c));
    return Graph(size.cells(), std::move(edges), std::move(labels));
}

inline FaceStructure grid_faces(const LatticeSize& size) {
    FaceStructure fs;
    fs.faces.reserve(size.cells());
    for (std::size_t r = 0; r < size.m(); ++r)
        for (std::size_t c = 0; c < size.n(); ++c)
            fs.faces.push_back({size.grid(r, c), size.grid(r, c + 1), size.grid(r + 1, c), size.grid(r + 1, c + 1)});
    return fs;
}

/// Union Jack lattice: the square torus with one extra vertex per face joined
/// to the four corners of that face.
inline std::pair<Graph, FaceStructure> build_union_jack(const LatticeSize& size) {
    const auto nm = static_cast<VertexId>(size.cells());
    FaceStructure fs = grid_faces(size);

    std::vector<Edge> edges;
    edges.reserve(6 * size.cells());
    detail::add_grid_edges(size, edges);
    for (VertexId f = 0; f < nm; ++f)
        for (VertexId corner : fs.faces[f]) edges.push_back({corner, nm + f});

    std::vector<std::string> labels;
    labels.reserve(2 * size.cells());
    for (const char* kind : {"grid", "face"})
        for (std::size_t r = 0; r < size.m(); ++r)
            for (std::size_t c = 0; c < size.n(); ++c) labels.push_back(detail::coord_label(kind, r, c));

    return {Graph(2 * size.cells(), std::move(edges), std::move(labels)), std::move(fs)};
}

/// 4.8.8 lattice on the torus. Cell (r, c) holds a quadrangle with vertices
///   left  = 4k, bottom = 4k+1, right = 4k+2, top = 4k+3   (k = r*n + c)
/// and sides left-bottom, bottom-right, right-top, top-left. right(r,c) links
/// to left(r,c+1) and top(r,c) links to bottom(r+1,c).
///
/// Faces are recorded in dual order: first the nm octagons (octagon k
/// surrounds grid vertex (r, c)), then the nm quadrangles.
inline Graph build_488(const LatticeSize& size) {
    const std::size_t n = size.n();
    const std::size_t m = size.m();
    auto cell = [&](std::size_t r, std::size_t c) -> VertexId { return 4 * size.grid(r, c); };
    auto left = [&](std::size_t r, std::size_t c) { return cell(r, c) + 0; };
    auto bottom = [&](std::size_t r, std::size_t c) { return cell(r, c) + 1; };
    auto right = [&](std::size_t r, std::size_t c) { return cell(r, c) + 2; };
    auto top = [&](std::size_t r, std::size_t c) { return cell(r, c) + 3; };

    std::vector<Edge> edges;
    std::vector<std::string> labels(4 * size.cells());
    std::vector<Face> octagons;
    std::vector<Face> quads;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            edges.push_back({left(r, c), bottom(r, c)});
            edges.push_back({bottom(r, c), right(r, c)});
            edges.push_back({right(r, c), top(r, c)});
            edges.push_back({top(r, c), left(r, c)});
            edges.push_back({right(r, c), left(r, c + 1)});
            edges.push_back({top(r, c), bottom(r + 1, c)});
            quads.push_back({left(r, c), bottom(r, c), right(r, c), top(r, c)});

            const char* names[] = {"left", "bottom", "right", "top"};
            for (int k = 0; k < 4; ++k)
                labels[cell(r, c) + k] = detail::coord_label(names[k], r, c);
        }

    // Octagon around grid vertex (r, c), walked counter-clockwise starting in
    // cell (r, c): that cell's left-bottom side, the link into cell (r, c-1),
    // and so on through cells (r-1, c-1) and (r-1, c).
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t rp = (r + m - 1) % m;
            const std::size_t cp = (c + n - 1) % n;
            octagons.push_back({
                bottom(r, c), left(r, c),    // cell (r, c)
                right(r, cp), bottom(r, cp), // cell (r, c-1)
                top(rp, cp), right(rp, cp),  // cell (r-1, c-1)
                left(rp, c), top(rp, c),     // cell (r-1, c)
            });
        }

    std::vector<Face> faces = std::move(octagons);
    faces.insert(faces.end(), quads.begin(), quads.end());
    return Graph(4 * size.cells(), std::move(edges), std::move(labels), std::move(faces));
}

/// Dual of an embedded graph whose faces were recorded by its builder: one
/// vertex per face, one edge per primal edge joining the two faces on either
/// side of it. Dual vertex k corresponds to recorded face k.
inline Graph dual_of_488(const Graph& primal) {
    if (!primal.faces())
        throw std::invalid_argument("dual requires a graph with recorded faces (use build_488)");
    const auto& faces = *primal.faces();

    std::map<Edge, std::vector<VertexId>> sides;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Face& face = faces[f];
        for (std::size_t k = 0; k < face.size(); ++k) {
            VertexId a = face[k];
            VertexId b = face[(k + 1) % face.size()];
            if (a > b) std::swap(a, b);
            sides[{a, b}].push_back(static_cast<VertexId>(f));
        }
    }

    std::vector<Edge> dual_edges;
    dual_edges.reserve(primal.edge_count());
    for (const Edge& e : primal.edges()) {
        auto it = sides.find(e);
        if (it == sides.end() || it->second.size() != 2)
            throw std::invalid_argument("face annotation does not cover every edge exactly twice");
        dual_edges.push_back({it->second[0], it->second[1]});
    }
    if (sides.size() != primal.edge_count())
        throw std::invalid_argument("face annotation references non-edges");

    std::vector<std::string> labels;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const char* kind = faces[f].size() == 4 ? "quad#" : faces[f].size() == 8 ? "octagon#" : "face#";
        labels.push_back(kind + std::to_string(f));
    }
    return Graph(faces.size(), std::move(dual_edges), std::move(labels));
}

// --- matrices ---------------------------------------------------------------

inline IntSymmetricMatrix adjacency_matrix(const Graph& g) {
    IntSymmetricMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) a.add(e.first, e.second, 1);
    return a;
}

inline IntSymmetricMatrix degree_matrix(const Graph& g) {
    IntSymmetricMatrix d(g.vertex_count());
    const auto deg = g.degrees();
    for (std::size_t v = 0; v < deg.size(); ++v) d.set(v, v, static_cast<std::int64_t>(deg[v]));
    return d;
}

/// L = D - A.
inline IntSymmetricMatrix laplacian(const Graph& g) {
    IntSymmetricMatrix l = degree_matrix(g);
    for (const Edge& e : g.edges()) l.add(e.first, e.second, -1);
    return l;
}

/// Q = D + A.
inline IntSymmetricMatrix signless_laplacian(const Graph& g) {
    IntSymmetricMatrix q = degree_matrix(g);
    for (const Edge& e : g.edges()) q.add(e.first, e.second, 1);
    return q;
}

/// Vertex-edge incidence matrix; column k is edge k of Graph::edges().
class IncidenceMatrix {
public:
    explicit IncidenceMatrix(IntMatrix entries) : m_(std::move(entries)) {
        for (std::size_t j = 0; j < m_.cols(); ++j) {
            std::int64_t ones = 0;
            for (std::size_t i = 0; i < m_.rows(); ++i) {
                if (m_(i, j) != 0 && m_(i, j) != 1) throw std::invalid_argument("incidence entries must be 0/1");
                ones += m_(i, j);
            }
            if (ones != 2) throw std::invalid_argument("incidence column must have exactly two 1-entries");
        }
    }

    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    const IntMatrix& matrix() const noexcept { return m_; }

    /// I * I^T, which equals the signless Laplacian.
    IntMatrix gram() const { return m_ * m_.transpose(); }

private:
    IntMatrix m_;
};

inline IncidenceMatrix incidence_matrix(const Graph& g) {
    IntMatrix inc(g.vertex_count(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        inc(g.edges()[k].first, k) = 1;
        inc(g.edges()[k].second, k) = 1;
    }
    return IncidenceMatrix(std::move(inc));
}

inline IntMatrix cycle_adjacency(std::size_t n) { return adjacency_matrix(build_cycle(n)).matrix(); }

/// Grid-vertex x face incidence M of the Union Jack construction (nm x nm):
/// M(v, f) = 1 iff v is a corner of face f.
inline IntMatrix face_vertex_incidence(const LatticeSize& size) {
    IntMatrix mat(size.cells(), size.cells());
    const FaceStructure fs = grid_faces(size);
    for (std::size_t f = 0; f < fs.faces.size(); ++f)
        for (VertexId v : fs.faces[f]) mat(v, f) = 1;
    return mat;
}

/// "# vertices=N edges=M" followed by one "u v" line per edge, sorted.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "# vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.first << ' ' << e.second << '\n';
}

} // namespace ujl
