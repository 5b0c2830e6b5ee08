#pragma once

// Self-checks for one lattice size: the structural matrix identities and the
// agreement of the closed-form spectra with the Jacobi eigensolver.

#include "ujl/format.hpp"
#include "ujl/lattice.hpp"
#include "ujl/spectra.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace ujl {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// A(C_n x C_m) == E_m (x) A(C_n) + A(C_m) (x) E_n.
inline bool cartesian_product_identity_holds(const LatticeSize& s) {
    const IntMatrix lhs = adjacency_matrix(build_torus_grid(s)).matrix();
    const IntMatrix rhs = kron(IntMatrix::identity(s.m()), cycle_adjacency(s.n())) +
                          kron(cycle_adjacency(s.m()), IntMatrix::identity(s.n()));
    return lhs == rhs;
}

/// M M^T == (2E_m + A(C_m)) (x) (2E_n + A(C_n)).
inline bool face_gram_identity_holds(const LatticeSize& s) {
    const IntMatrix m = face_vertex_incidence(s);
    const IntMatrix bm = 2 * IntMatrix::identity(s.m()) + cycle_adjacency(s.m());
    const IntMatrix bn = 2 * IntMatrix::identity(s.n()) + cycle_adjacency(s.n());
    return m * m.transpose() == kron(bm, bn);
}

/// I I^T == Q.
inline bool incidence_identity_holds(const Graph& g) {
    return incidence_matrix(g).gram() == signless_laplacian(g).matrix();
}

inline std::vector<CheckResult> verify_lattice(const LatticeSize& s, double tol = 1e-8) {
    std::vector<CheckResult> out;
    const std::string where = std::to_string(s.n()) + "x" + std::to_string(s.m());
    const Graph g = build_union_jack(s).first;

    out.push_back({"cartesian-product adjacency", cartesian_product_identity_holds(s), where});
    out.push_back({"face incidence gram = kronecker", face_gram_identity_holds(s), where});
    out.push_back({"incidence gram = signless laplacian", incidence_identity_holds(g), where});

    const IntSymmetricMatrix q = signless_laplacian(g);
    const IntSymmetricMatrix l = laplacian(g);
    const auto expected_trace = static_cast<std::int64_t>(12 * s.cells());
    out.push_back({"trace Q = trace L = 12nm", q.trace() == expected_trace && l.trace() == expected_trace,
                   "trace=" + std::to_string(q.trace())});

    for (SpectrumKind kind : {SpectrumKind::signless_laplacian, SpectrumKind::laplacian}) {
        const bool signless = kind == SpectrumKind::signless_laplacian;
        const auto numeric = numeric_spectrum(signless ? q : l);
        const auto closed = closed_form_spectrum(s, kind).sorted_values();
        const auto cmp = compare_spectra(closed, numeric.values, tol);
        out.push_back({signless ? "closed-form vs numeric Q spectrum" : "closed-form vs numeric L spectrum", cmp.pass,
                       "max_abs_diff=" + format_double(cmp.max_abs_diff)});
    }
    return out;
}

} // namespace ujl
