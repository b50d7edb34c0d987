#pragma once

#include <vector>

#include "sombor/graph.hpp"
#include "sombor/matrix.hpp"

namespace sombor {

/// Eigenvalues sorted non-increasing plus the inertia counted under
/// zero_tol = 1e-8 * max(1, ||M||_F).
struct Spectrum {
    std::vector<double> eigenvalues;
    double zero_tol = 0.0;
    int positives = 0; // p
    int zeros = 0;     // n0
    int negatives = 0; // q

    int size() const { return static_cast<int>(eigenvalues.size()); }
    int rank() const { return size() - zeros; }
};

/// Full eigensystem; vectors stored column-major (column k belongs to
/// eigenvalues[k]).
struct EigenDecomposition {
    Spectrum spectrum;
    int n = 0;
    std::vector<double> vectors;

    double vector_at(int row, int col) const {
        return vectors[static_cast<std::size_t>(col) * n + row];
    }
};

/// All eigenvalues of a symmetric matrix via cyclic Jacobi rotations.
/// Accuracy 1e-10 * max(1, ||M||_F); throws NoConvergenceError after 100
/// full sweeps (unreachable in practice for the supported sizes).
Spectrum eigenvalues(const SymmetricMatrix& m);
EigenDecomposition eigen_decomposition(const SymmetricMatrix& m);

// ---- graph matrices ----

/// Entry sqrt(d_i^2 + d_j^2) on edges, zero elsewhere.
SymmetricMatrix sombor_matrix(const Graph& g);
SymmetricMatrix adjacency_matrix(const Graph& g);
/// Entry d_i d_j / (d_i + d_j) on edges (inverse sum indeg weights).
SymmetricMatrix isi_matrix(const Graph& g);

// ---- scalar spectral quantities ----

double spectral_radius(const Spectrum& s);
double energy(const Spectrum& s);
/// Sum of e^{rho_i}; throws RangeError when rho_1 > 700.
double estrada(const Spectrum& s);

double spectral_radius(const Graph& g);
double sombor_energy(const Graph& g);
double estrada_index(const Graph& g);

/// |det| = prod |rho_i|, accumulated in log space; exactly 0 as soon as
/// any |rho_i| <= zero_tol. log_abs_determinant returns -inf in that case.
double determinant_abs(const Spectrum& s);
double log_abs_determinant(const Spectrum& s);
/// |det|^e via the log form (0 when singular).
double abs_determinant_power(const Spectrum& s, double e);

/// tr(S^k), k in {2,3,4}, via explicit matrix powers.
double trace_power_matrix(const Graph& g, int k);
/// tr(S^k) via the closed combinatorial forms: 2F for k=2, the
/// common-neighbor double sum for k=3, diagonal plus off-diagonal square
/// sums for k=4.
double trace_power_combinatorial(const Graph& g, int k);

// ---- characteristic polynomial ----

/// Coefficients c_0..c_n of |xI - M| = sum c_k x^{n-k}, c_0 = 1.
struct CharPoly {
    std::vector<double> coefficients;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Faddeev-LeVerrier recurrence in double precision; n <= 20
/// (SizeTooLargeError beyond that).
CharPoly char_poly(const SymmetricMatrix& m);

/// Expansion of prod (x - rho_i) from a computed spectrum.
CharPoly char_poly_from_spectrum(const Spectrum& s);

// ---- Perron vector ----

/// Positive unit eigenvector for rho_1, by shifted power iteration.
struct PerronVector {
    std::vector<double> components;
    double rho = 0.0;
};

/// Requires g connected with n >= 2; residual ||Sx - rho x|| <=
/// 1e-10 * max(1, rho). Throws DisconnectedError / NoConvergenceError.
PerronVector perron_vector(const Graph& g);

// ---- closed-form adjacency energies ----

enum class ReferenceFamily { path, star };

/// E_A(P_n) (csc form for even n, cot form for odd) and
/// E_A(K_{1,n-1}) = 2 sqrt(n-1); n >= 3.
double reference_adjacency_energy(ReferenceFamily kind, int n);

/// Number of numerically distinct eigenvalues, clustering with gap
/// threshold 1e-6 * ||M||_F (heuristic, used for the diameter check).
int distinct_eigenvalue_count(const Spectrum& s, double frobenius_norm);

} // namespace sombor
