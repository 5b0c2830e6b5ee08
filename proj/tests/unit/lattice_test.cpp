#include "ujl/lattice.hpp"
#include "ujl/spectra.hpp"
#include "ujl/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace ujl {
namespace {

std::multiset<std::size_t> degree_multiset(const Graph& g) {
    const auto d = g.degrees();
    return {d.begin(), d.end()};
}

std::multiset<std::size_t> repeated(std::size_t value, std::size_t count, std::multiset<std::size_t> into = {}) {
    for (std::size_t k = 0; k < count; ++k) into.insert(value);
    return into;
}

void expect_well_formed(const Graph& g) {
    EXPECT_TRUE(g.is_simple());
    std::size_t degree_sum = 0;
    for (auto d : g.degrees()) degree_sum += d;
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    const auto a = adjacency_matrix(g);
    for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a(i, i), 0);
    EXPECT_EQ(a.matrix(), a.matrix().transpose());
}

TEST(LatticeSize, RejectsExtentsBelowThree) {
    EXPECT_THROW(LatticeSize(2, 3), size_error);
    EXPECT_THROW(LatticeSize(3, 2), size_error);
    EXPECT_THROW(LatticeSize(0, 0), size_error);
    EXPECT_NO_THROW(LatticeSize(3, 3));
    EXPECT_THROW(build_cycle(2), size_error);
}

TEST(Graph, RejectsSelfLoopsAndOutOfRangeIds) {
    EXPECT_THROW(Graph(2, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(Cycle, SmallestCycle) {
    const Graph c3 = build_cycle(3);
    EXPECT_EQ(c3.vertex_count(), 3u);
    const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
    EXPECT_EQ(c3.edges(), expected);
}

TEST(Cycle, FourCycleIsTwoRegular) {
    const Graph c4 = build_cycle(4);
    EXPECT_EQ(c4.edge_count(), 4u);
    EXPECT_EQ(degree_multiset(c4), repeated(2, 4));
}

TEST(Cycle, FiveCycleSpectrumMatchesEigensolver) {
    const auto numeric = numeric_spectrum(adjacency_matrix(build_cycle(5)));
    const double c1 = 2.0 * std::cos(2.0 * std::numbers::pi / 5.0);
    const double c2 = 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
    const std::vector<double> expected{2.0, c1, c1, c2, c2};
    EXPECT_TRUE(compare_spectra(expected, numeric.values, 1e-10).pass);
}

TEST(TorusGrid, ThreeByThreeIsFourRegular) {
    const Graph g = build_torus_grid(LatticeSize(3, 3));
    EXPECT_EQ(g.vertex_count(), 9u);
    EXPECT_EQ(g.edge_count(), 18u);
    EXPECT_EQ(degree_multiset(g), repeated(4, 9));
    EXPECT_EQ(g.labels()[5], "grid(1,2)");
    expect_well_formed(g);
}

TEST(TorusGrid, CartesianProductIdentityThreeByFour) {
    const LatticeSize s(3, 4);
    const IntMatrix expected = kron(IntMatrix::identity(4), cycle_adjacency(3)) +
                               kron(cycle_adjacency(4), IntMatrix::identity(3));
    EXPECT_EQ(adjacency_matrix(build_torus_grid(s)).matrix(), expected);
}

TEST(TorusGrid, CartesianProductIdentityAllSmallSizes) {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t m = 3; m <= 6; ++m) EXPECT_TRUE(cartesian_product_identity_holds(LatticeSize(n, m))) << n << "x" << m;
}

TEST(TorusGrid, FourByFourAdjacencySpectrum) {
    // 2cos(alpha_i) + 2cos(beta_j) with cos values {1, 0, -1, 0}.
    std::vector<double> expected;
    for (double a : {2.0, 0.0, -2.0, 0.0})
        for (double b : {2.0, 0.0, -2.0, 0.0}) expected.push_back(a + b);
    const auto numeric = numeric_spectrum(adjacency_matrix(build_torus_grid(LatticeSize(4, 4))));
    EXPECT_TRUE(compare_spectra(expected, numeric.values, 1e-10).pass);
}

TEST(UnionJack, ThreeByThreeCounts) {
    const auto [g, faces] = build_union_jack(LatticeSize(3, 3));
    EXPECT_EQ(g.vertex_count(), 18u);
    EXPECT_EQ(g.edge_count(), 54u);
    EXPECT_EQ(degree_multiset(g), repeated(4, 9, repeated(8, 9)));
    EXPECT_EQ(signless_laplacian(g).trace(), 108);
    EXPECT_EQ(faces.faces.size(), 9u);
    EXPECT_EQ(g.labels()[9], "face(0,0)");
}

TEST(UnionJack, CountsForAllSizesUpToEight) {
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t m = 3; m <= 8; ++m) {
            const auto [g, faces] = build_union_jack(LatticeSize(n, m));
            EXPECT_EQ(g.vertex_count(), 2 * n * m);
            EXPECT_EQ(g.edge_count(), 6 * n * m);
            EXPECT_EQ(degree_multiset(g), repeated(4, n * m, repeated(8, n * m)));
            expect_well_formed(g);
        }
}

TEST(UnionJack, GridVerticesHaveDegreeEightThenFaceVerticesFour) {
    const LatticeSize s(4, 5);
    const auto d = degree_matrix(build_union_jack(s).first);
    for (std::size_t v = 0; v < s.cells(); ++v) EXPECT_EQ(d(v, v), 8);
    for (std::size_t v = s.cells(); v < 2 * s.cells(); ++v) EXPECT_EQ(d(v, v), 4);
}

TEST(UnionJack, FaceStructureCoversEachGridVertexFourTimes) {
    const LatticeSize s(5, 3);
    const FaceStructure fs = grid_faces(s);
    ASSERT_EQ(fs.faces.size(), s.cells());
    std::vector<int> hits(s.cells(), 0);
    for (const auto& f : fs.faces)
        for (VertexId v : f) ++hits[v];
    for (int h : hits) EXPECT_EQ(h, 4);
    // face(1, 4) wraps to column 0
    const std::array<VertexId, 4> expected{s.grid(1, 4), s.grid(1, 0), s.grid(2, 4), s.grid(2, 0)};
    EXPECT_EQ(fs.faces[1 * 5 + 4], expected);
}

TEST(UnionJack, ContainsTrianglesSoSpectraDiffer) {
    const auto [g, faces] = build_union_jack(LatticeSize(3, 4));
    const auto a = adjacency_matrix(g);
    // grid(0,0) - grid(0,1) - face(0,0)
    const std::size_t f = 12;
    EXPECT_EQ(a(0, 1), 1);
    EXPECT_EQ(a(0, f), 1);
    EXPECT_EQ(a(1, f), 1);

    const auto q = numeric_spectrum(signless_laplacian(g)).values;
    const auto l = numeric_spectrum(laplacian(g)).values;
    EXPECT_GT(compare_spectra(q, l, 1e-6).max_abs_diff, 1e-6);
}

TEST(Matrices, CycleThreeAdjacencyAndLaplacian) {
    const Graph c3 = build_cycle(3);
    const auto a = adjacency_matrix(c3);
    int ones = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones += static_cast<int>(a(i, j));
    EXPECT_EQ(ones, 6);
    const auto l = laplacian(c3);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(l(i, 0) + l(i, 1) + l(i, 2), 0);
}

TEST(Matrices, SignlessMinusLaplacianIsTwiceAdjacency) {
    const LatticeSize s(4, 3);
    for (const Graph& g : {build_cycle(7), build_torus_grid(s), build_union_jack(s).first, build_488(s)}) {
        const IntMatrix diff = signless_laplacian(g).matrix() - laplacian(g).matrix();
        EXPECT_EQ(diff, 2 * adjacency_matrix(g).matrix());
        const auto l = laplacian(g);
        for (std::size_t i = 0; i < l.order(); ++i) {
            std::int64_t row = 0;
            for (std::size_t j = 0; j < l.order(); ++j) row += l(i, j);
            EXPECT_EQ(row, 0);
        }
    }
}

TEST(Incidence, CycleThree) {
    const Graph c3 = build_cycle(3);
    const auto inc = incidence_matrix(c3);
    EXPECT_EQ(inc.rows(), 3u);
    EXPECT_EQ(inc.cols(), 3u);
    EXPECT_EQ(inc.gram(), 2 * IntMatrix::identity(3) + cycle_adjacency(3));
}

TEST(Incidence, ColumnSumsAreTwo) {
    const auto inc = incidence_matrix(build_cycle(4));
    for (std::size_t j = 0; j < inc.cols(); ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < inc.rows(); ++i) s += inc.matrix()(i, j);
        EXPECT_EQ(s, 2);
    }
    EXPECT_THROW(IncidenceMatrix(IntMatrix(3, 1)), std::invalid_argument);
}

TEST(Incidence, UnionJackThreeByThree) {
    const Graph g = build_union_jack(LatticeSize(3, 3)).first;
    const auto inc = incidence_matrix(g);
    EXPECT_EQ(inc.rows(), 18u);
    EXPECT_EQ(inc.cols(), 54u);
    EXPECT_EQ(inc.gram(), signless_laplacian(g).matrix());
}

TEST(Incidence, GramEqualsSignlessLaplacianForEveryBuilder) {
    for (std::size_t n = 3; n <= 6; ++n) {
        EXPECT_TRUE(incidence_identity_holds(build_cycle(n)));
        for (std::size_t m = 3; m <= 6; ++m) {
            const LatticeSize s(n, m);
            EXPECT_TRUE(incidence_identity_holds(build_torus_grid(s)));
            EXPECT_TRUE(incidence_identity_holds(build_union_jack(s).first));
            EXPECT_TRUE(incidence_identity_holds(build_488(s)));
            EXPECT_TRUE(incidence_identity_holds(dual_of_488(build_488(s))));
        }
    }
}

TEST(FaceIncidence, RowAndColumnSumsAreFour) {
    const IntMatrix m = face_vertex_incidence(LatticeSize(3, 3));
    for (std::size_t i = 0; i < 9; ++i) {
        std::int64_t row = 0, col = 0;
        for (std::size_t j = 0; j < 9; ++j) {
            row += m(i, j);
            col += m(j, i);
        }
        EXPECT_EQ(row, 4);
        EXPECT_EQ(col, 4);
    }
}

TEST(FaceIncidence, GramIsKroneckerOfShiftedCycles) {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t m = 3; m <= 6; ++m) EXPECT_TRUE(face_gram_identity_holds(LatticeSize(n, m))) << n << "x" << m;
}

TEST(FaceIncidence, BlockLayoutReproducesUnionJackAdjacency) {
    const LatticeSize s(4, 3);
    const std::size_t nm = s.cells();
    const IntMatrix grid = adjacency_matrix(build_torus_grid(s)).matrix();
    const IntMatrix m = face_vertex_incidence(s);
    const IntMatrix mt = m.transpose();
    IntMatrix block(2 * nm, 2 * nm);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            block(i, j) = grid(i, j);
            block(i, nm + j) = m(i, j);
            block(nm + i, j) = mt(i, j);
        }
    EXPECT_EQ(block, adjacency_matrix(build_union_jack(s).first).matrix());
}

TEST(FourEightEight, Counts) {
    for (auto [n, m] : {std::pair{3u, 3u}, std::pair{4u, 4u}, std::pair{5u, 3u}}) {
        const Graph g = build_488(LatticeSize(n, m));
        EXPECT_EQ(g.vertex_count(), 4u * n * m);
        EXPECT_EQ(g.edge_count(), 6u * n * m);
        EXPECT_EQ(degree_multiset(g), repeated(3, 4 * n * m));
        expect_well_formed(g);
        ASSERT_TRUE(g.faces().has_value());
        std::size_t quads = 0, octagons = 0;
        for (const Face& f : *g.faces()) (f.size() == 4 ? quads : octagons) += 1;
        EXPECT_EQ(quads, n * m);
        EXPECT_EQ(octagons, n * m);
        // Euler characteristic of the torus.
        EXPECT_EQ(static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                      static_cast<long>(g.faces()->size()),
                  0);
    }
}

TEST(FourEightEight, FaceCyclesFollowEdges) {
    const Graph g = build_488(LatticeSize(4, 3));
    const std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const Face& f : *g.faces())
        for (std::size_t k = 0; k < f.size(); ++k) {
            VertexId a = f[k], b = f[(k + 1) % f.size()];
            if (a > b) std::swap(a, b);
            EXPECT_TRUE(edges.count({a, b})) << a << "-" << b;
        }
}

TEST(Dual, ThreeByThreeCountsAndDegrees) {
    const Graph d = dual_of_488(build_488(LatticeSize(3, 3)));
    EXPECT_EQ(d.vertex_count(), 18u);
    EXPECT_EQ(d.edge_count(), 54u);
    EXPECT_EQ(degree_multiset(d), repeated(4, 9, repeated(8, 9)));
}

TEST(Dual, LaplacianSpectrumMatchesUnionJack) {
    const LatticeSize s(3, 4);
    const auto dual = numeric_spectrum(laplacian(dual_of_488(build_488(s)))).values;
    const auto ujl = numeric_spectrum(laplacian(build_union_jack(s).first)).values;
    EXPECT_TRUE(compare_spectra(dual, ujl, 1e-8).pass);
}

TEST(Dual, SignlessSpectrumMatchesUnionJackThreeByThree) {
    const LatticeSize s(3, 3);
    const auto dual = numeric_spectrum(signless_laplacian(dual_of_488(build_488(s)))).values;
    const auto ujl = numeric_spectrum(signless_laplacian(build_union_jack(s).first)).values;
    EXPECT_TRUE(compare_spectra(dual, ujl, 1e-8).pass);
}

TEST(Dual, EdgeSetEqualsUnionJackUnderFaceOrder) {
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::size_t m = 3; m <= 5; ++m) {
            const LatticeSize s(n, m);
            EXPECT_EQ(dual_of_488(build_488(s)).edges(), build_union_jack(s).first.edges());
        }
}

TEST(Dual, RejectsGraphWithoutFaces) {
    EXPECT_THROW(dual_of_488(build_union_jack(LatticeSize(3, 3)).first), std::invalid_argument);
    // A face list that misses edges is rejected as well.
    const Graph partial(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}, std::vector<Face>{{0, 1, 2, 3}});
    EXPECT_THROW(dual_of_488(partial), std::invalid_argument);
}

TEST(EdgeList, HeaderAndSortedLines) {
    std::ostringstream os;
    write_edge_list(os, build_cycle(3));
    EXPECT_EQ(os.str(), "# vertices=3 edges=3\n0 1\n0 2\n1 2\n");
}

} // namespace
} // namespace ujl
