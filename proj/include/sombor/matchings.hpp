#pragma once

#include "sombor/graph.hpp"
#include "sombor/spectra.hpp"

namespace sombor {

/// Coefficients b_0..b_{floor(n/2)}: b_k is the sum over all k-matchings
/// of the product of the matched edges' SO-values (or the plain k-matching
/// count in unweighted mode). b_0 = 1 and b_1 = F(G) in weighted mode.
struct MatchingPolynomial {
    std::vector<double> b;
};

/// Branch-on-edge enumeration (include edge and drop its endpoints, or
/// exclude it). Guarded at n <= 24 (SizeTooLargeError).
MatchingPolynomial matching_coefficients(const Graph& g, bool weighted);

/// phi_SO(G,x) = sum (-1)^k b_k x^{n-2k} for bipartite G, with the b_k
/// obtained from signed principal-minor sums (no eigensolver involved).
/// On forests the b_k coincide with the SO-weighted matching sums; on
/// bipartite graphs with cycles they also carry the Sachs cycle terms,
/// which the plain matching sums miss.
/// Throws NotBipartiteError / SizeTooLargeError.
CharPoly sombor_charpoly_bipartite(const Graph& g);

struct CoulsonResult {
    double energy = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
    int max_depth = 0;
};

/// Sombor energy of a bipartite graph through the Coulson integral of its
/// characteristic coefficients b_k. The removable singularity at 0
/// evaluates to b_1; the logarithmic tail is integrated in closed form
/// after reflecting (1, inf) onto (0, 1), leaving two analytic
/// quadratures. Throws NotBipartiteError / QuadratureFailureError.
CoulsonResult coulson_energy(const Graph& g, double rel_tol);

} // namespace sombor
