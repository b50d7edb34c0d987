#include "sombor/matchings.hpp"

#include <cmath>

#include "sombor/invariants.hpp"
#include "sombor/quadrature.hpp"

namespace sombor {

namespace {

constexpr int kMatchingMaxN = 24;

struct MatchingEnumerator {
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weight;
    std::vector<char> used;
    std::vector<double> acc;

    void run(std::size_t idx, std::size_t k, double w) {
        // advance to the next edge whose endpoints are both free
        while (idx < edges.size() &&
               (used[static_cast<std::size_t>(edges[idx].first)] ||
                used[static_cast<std::size_t>(edges[idx].second)]))
            ++idx;
        if (idx == edges.size()) {
            acc[k] += w;
            return;
        }
        // a matching that omits edge idx ...
        run(idx + 1, k, w);
        // ... or contains it
        const auto [u, v] = edges[idx];
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
        run(idx + 1, k + 1, w * weight[idx]);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
};

double principal_minor_det(const SymmetricMatrix& s, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    std::vector<double> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[static_cast<std::size_t>(i) * k + j] = s(idx[static_cast<std::size_t>(i)],
                                                       idx[static_cast<std::size_t>(j)]);
    // in-place LU with partial pivoting
    double det = 1.0;
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[static_cast<std::size_t>(r) * k + col]) >
                std::abs(a[static_cast<std::size_t>(pivot) * k + col]))
                pivot = r;
        const double p = a[static_cast<std::size_t>(pivot) * k + col];
        if (p == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < k; ++j)
                std::swap(a[static_cast<std::size_t>(pivot) * k + j],
                          a[static_cast<std::size_t>(col) * k + j]);
            det = -det;
        }
        det *= p;
        for (int r = col + 1; r < k; ++r) {
            const double f = a[static_cast<std::size_t>(r) * k + col] / p;
            if (f == 0.0) continue;
            for (int j = col; j < k; ++j)
                a[static_cast<std::size_t>(r) * k + j] -=
                    f * a[static_cast<std::size_t>(col) * k + j];
        }
    }
    return det;
}

// b_k of phi_SO for a bipartite graph: phi = sum (-1)^k b_k x^{n-2k} with
// b_k >= 0. Computed as signed sums of 2k x 2k principal minors, a route
// independent of the eigensolver and of the Leverrier recurrence. On
// forests these values equal the SO-weighted matching sums; on bipartite
// graphs with cycles they additionally carry the Sachs cycle terms.
std::vector<double> bipartite_even_coefficients(const Graph& g) {
    const int n = g.vertex_count();
    const SymmetricMatrix s = sombor_matrix(g);
    std::vector<double> b(static_cast<std::size_t>(n) / 2 + 1, 0.0);
    b[0] = 1.0;
    std::vector<int> idx;
    for (int k = 1; 2 * k <= n; ++k) {
        const int r = 2 * k;
        double sum = 0.0, scale = 0.0;
        idx.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            const double d = principal_minor_det(s, idx);
            sum += d;
            scale += std::abs(d);
            // next r-combination of 0..n-1
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < r; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        double v = (k % 2 == 0 ? 1.0 : -1.0) * sum;
        if (std::abs(v) <= 1e-9 * std::max(1.0, scale)) v = 0.0; // exact zero plus fp dust
        if (v < 0.0)
            throw Error("negative even characteristic coefficient on a bipartite graph");
        b[static_cast<std::size_t>(k)] = v;
    }
    return b;
}

} // namespace

MatchingPolynomial matching_coefficients(const Graph& g, bool weighted) {
    const int n = g.vertex_count();
    if (n > kMatchingMaxN)
        throw SizeTooLargeError("matching enumeration supports n <= 24");
    MatchingEnumerator e;
    e.edges = g.edges();
    e.weight.reserve(e.edges.size());
    for (auto [u, v] : e.edges) e.weight.push_back(weighted ? edge_so_value(g, u, v) : 1.0);
    e.used.assign(static_cast<std::size_t>(n), 0);
    e.acc.assign(static_cast<std::size_t>(n) / 2 + 1, 0.0);

    // every call path that exhausts the edges contributes to acc[k]; a
    // k-matching is counted once because edges are decided in index order
    e.run(0, 0, 1.0);
    return MatchingPolynomial{std::move(e.acc)};
}

CharPoly sombor_charpoly_bipartite(const Graph& g) {
    if (!is_bipartite(g))
        throw NotBipartiteError("Sombor matching polynomial needs a bipartite graph");
    const int n = g.vertex_count();
    if (n > kMatchingMaxN)
        throw SizeTooLargeError("bipartite characteristic polynomial supports n <= 24");
    const std::vector<double> b = bipartite_even_coefficients(g);
    std::vector<double> coeff(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t k = 0; k < b.size(); ++k)
        coeff[2 * k] = (k % 2 == 0 ? 1.0 : -1.0) * b[k]; // coefficient of x^{n-2k}
    return CharPoly{std::move(coeff)};
}

CoulsonResult coulson_energy(const Graph& g, double rel_tol) {
    if (!is_bipartite(g)) throw NotBipartiteError("Coulson integral needs a bipartite graph");
    if (g.vertex_count() > kMatchingMaxN)
        throw SizeTooLargeError("Coulson integral supports n <= 24");
    const std::vector<double> b = bipartite_even_coefficients(g);

    std::size_t top = 0;
    for (std::size_t k = 1; k < b.size(); ++k)
        if (b[k] != 0.0) top = k;
    if (top == 0) return CoulsonResult{0.0, 0.0, 0, 0};
    const double K = static_cast<double>(top);

    // The integral over (0, inf) of log(P(x^2))/x^2, P(u) = sum b_k u^k,
    // splits at x = 1; reflecting the tail through x -> 1/x leaves
    //   int_0^1 log(P(x^2))/x^2 dx  +  2K  +  int_0^1 log(Q(y^2)) dy
    // with Q(v) = sum b_{K-j} v^j, so both quadratures see an analytic
    // integrand and the log singularity is handled in closed form.
    auto p_tail = [&](double u) { // sum_{k>=1} b_k u^k
        double p = 0.0;
        for (std::size_t k = top; k >= 1; --k) p = (p + b[k]) * u;
        return p;
    };
    auto f_head = [&](double x) {
        if (x == 0.0) return b[1];
        return std::log1p(p_tail(x * x)) / (x * x);
    };
    auto f_tail = [&](double y) {
        const double v = y * y;
        double q = 0.0;
        for (std::size_t j = 0; j <= top; ++j) q = q * v + b[j];
        return std::log(q);
    };

    const QuadratureResult q1 = integrate_adaptive(f_head, 0.0, 1.0, rel_tol);
    const QuadratureResult q2 = integrate_adaptive(f_tail, 0.0, 1.0, rel_tol);
    if (!q1.converged || !q2.converged)
        throw QuadratureFailureError("Coulson integral did not reach the requested tolerance");
    constexpr double pi = 3.14159265358979323846;
    CoulsonResult out;
    out.energy = 2.0 / pi * (q1.value + 2.0 * K + q2.value);
    out.est_error = q1.est_error + q2.est_error;
    out.evaluations = q1.evaluations + q2.evaluations;
    out.max_depth = std::max(q1.max_depth, q2.max_depth);
    return out;
}

} // namespace sombor
