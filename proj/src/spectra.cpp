#include "sombor/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sombor/invariants.hpp"

namespace sombor {

namespace {

constexpr int kMaxSweeps = 100;
constexpr int kCharPolyMaxN = 20;

double off_diagonal_norm(const SymmetricMatrix& a) {
    double acc = 0.0;
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) acc += a(i, j) * a(i, j);
    return std::sqrt(2.0 * acc);
}

// Cyclic Jacobi. Rotations zero one off-diagonal pair at a time; the
// off-diagonal norm converges quadratically once it is small.
void jacobi(SymmetricMatrix a, std::vector<double>& eigvals, std::vector<double>* vecs) {
    const int n = a.size();
    eigvals.resize(static_cast<std::size_t>(n));
    if (vecs) {
        vecs->assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*vecs)[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    const double scale = std::max(1.0, a.frobenius_norm());
    const double stop = 1e-13 * scale;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a.set(k, p, akp - s * (akq + tau * akp));
                    a.set(k, q, akq + s * (akp - tau * akq));
                }
                if (vecs) {
                    for (int k = 0; k < n; ++k) {
                        double& vkp = (*vecs)[static_cast<std::size_t>(p) * n + k];
                        double& vkq = (*vecs)[static_cast<std::size_t>(q) * n + k];
                        const double tp = vkp, tq = vkq;
                        vkp = tp - s * (tq + tau * tp);
                        vkq = tq + s * (tp - tau * tq);
                    }
                }
            }
        }
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) > stop)
        throw NoConvergenceError("Jacobi eigensolver: 100 sweeps exceeded");
    for (int i = 0; i < n; ++i) eigvals[static_cast<std::size_t>(i)] = a(i, i);
}

Spectrum make_spectrum(std::vector<double> vals, double fro, std::vector<int>* order) {
    Spectrum s;
    const int n = static_cast<int>(vals.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)];
    });
    s.eigenvalues.reserve(static_cast<std::size_t>(n));
    for (int i : idx) s.eigenvalues.push_back(vals[static_cast<std::size_t>(i)]);
    if (order) *order = idx;

    s.zero_tol = 1e-8 * std::max(1.0, fro);
    for (double v : s.eigenvalues) {
        if (v > s.zero_tol) ++s.positives;
        else if (v < -s.zero_tol) ++s.negatives;
        else ++s.zeros;
    }
    return s;
}

} // namespace

Spectrum eigenvalues(const SymmetricMatrix& m) {
    std::vector<double> vals;
    jacobi(m, vals, nullptr);
    return make_spectrum(std::move(vals), m.frobenius_norm(), nullptr);
}

EigenDecomposition eigen_decomposition(const SymmetricMatrix& m) {
    std::vector<double> vals, vecs;
    jacobi(m, vals, &vecs);
    EigenDecomposition d;
    d.n = m.size();
    std::vector<int> order;
    d.spectrum = make_spectrum(std::move(vals), m.frobenius_norm(), &order);
    d.vectors.resize(vecs.size());
    for (int col = 0; col < d.n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        std::copy_n(vecs.begin() + static_cast<std::ptrdiff_t>(src) * d.n, d.n,
                    d.vectors.begin() + static_cast<std::ptrdiff_t>(col) * d.n);
    }
    return d;
}

SymmetricMatrix sombor_matrix(const Graph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double du = g.degree(u), dv = g.degree(v);
            m.set(u, v, std::sqrt(du * du + dv * dv));
        }
    return m;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) m.set(u, v, 1.0);
    return m;
}

SymmetricMatrix isi_matrix(const Graph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const double du = g.degree(u), dv = g.degree(v);
            m.set(u, v, du * dv / (du + dv));
        }
    return m;
}

double spectral_radius(const Spectrum& s) {
    return s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
}

double energy(const Spectrum& s) {
    double acc = 0.0;
    for (double v : s.eigenvalues) acc += std::abs(v);
    return acc;
}

double estrada(const Spectrum& s) {
    if (!s.eigenvalues.empty() && s.eigenvalues.front() > 700.0)
        throw RangeError("Estrada index overflow: rho_1 > 700");
    double acc = 0.0;
    for (double v : s.eigenvalues) acc += std::exp(v);
    return acc;
}

double spectral_radius(const Graph& g) { return spectral_radius(eigenvalues(sombor_matrix(g))); }
double sombor_energy(const Graph& g) { return energy(eigenvalues(sombor_matrix(g))); }
double estrada_index(const Graph& g) { return estrada(eigenvalues(sombor_matrix(g))); }

double log_abs_determinant(const Spectrum& s) {
    double acc = 0.0;
    for (double v : s.eigenvalues) {
        if (std::abs(v) <= s.zero_tol) return -std::numeric_limits<double>::infinity();
        acc += std::log(std::abs(v));
    }
    return acc;
}

double determinant_abs(const Spectrum& s) {
    const double lg = log_abs_determinant(s);
    return std::isinf(lg) ? 0.0 : std::exp(lg);
}

double abs_determinant_power(const Spectrum& s, double e) {
    const double lg = log_abs_determinant(s);
    return std::isinf(lg) ? 0.0 : std::exp(e * lg);
}

double trace_power_matrix(const Graph& g, int k) {
    if (k < 2 || k > 4) throw BadParamsError("trace power supports k in {2,3,4}");
    const SymmetricMatrix s = sombor_matrix(g);
    const int n = s.size();
    // S^2 once; tr(S^2) from its diagonal, tr(S^3) = <S^2, S>,
    // tr(S^4) = ||S^2||_F^2
    SymmetricMatrix s2(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += s(i, l) * s(l, j);
            s2.set(i, j, acc);
        }
    double acc = 0.0;
    if (k == 2) {
        for (int i = 0; i < n; ++i) acc += s2(i, i);
    } else if (k == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += s2(i, j) * s(j, i);
    } else {
        for (double x : s2.data()) acc += x * x;
    }
    return acc;
}

double trace_power_combinatorial(const Graph& g, int k) {
    if (k < 2 || k > 4) throw BadParamsError("trace power supports k in {2,3,4}");
    const int n = g.vertex_count();
    auto so2 = [&](int a, int b) {
        const double da = g.degree(a), db = g.degree(b);
        return da * da + db * db;
    };
    if (k == 2) return 2.0 * forgotten(g);
    if (k == 3) {
        // 2 * sum over edges ij of w_ij * sum over common neighbors k of
        // sqrt((d_i^2+d_k^2)(d_j^2+d_k^2))
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j : g.neighbors(i)) {
                if (j <= i) continue;
                double inner = 0.0;
                const auto& nj = g.neighbors(j);
                for (int c : g.neighbors(i))
                    if (std::binary_search(nj.begin(), nj.end(), c))
                        inner += std::sqrt(so2(i, c) * so2(j, c));
                acc += std::sqrt(so2(i, j)) * inner;
            }
        return 2.0 * acc;
    }
    // k == 4: diagonal squares of S^2 plus all ordered off-diagonal squares
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int c : g.neighbors(i)) diag += so2(i, c);
        acc += diag * diag;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double inner = 0.0;
            const auto& nj = g.neighbors(j);
            for (int c : g.neighbors(i))
                if (std::binary_search(nj.begin(), nj.end(), c))
                    inner += std::sqrt(so2(i, c) * so2(j, c));
            acc += inner * inner;
        }
    return acc;
}

CharPoly char_poly(const SymmetricMatrix& m) {
    const int n = m.size();
    if (n > kCharPolyMaxN)
        throw SizeTooLargeError("characteristic polynomial supports n <= 20");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k
    std::vector<double> coeff(static_cast<std::size_t>(n) + 1, 0.0);
    coeff[0] = 1.0;
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<double> mk(nn, 0.0), tmp(nn, 0.0);
    auto at = [&](std::vector<double>& v, int i, int j) -> double& {
        return v[static_cast<std::size_t>(i) * n + j];
    };
    for (int k = 1; k <= n; ++k) {
        // tmp = A * mk + c_{k-1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) acc += m(i, l) * at(mk, l, j);
                at(tmp, i, j) = acc + (i == j ? coeff[static_cast<std::size_t>(k) - 1] : 0.0);
            }
        std::swap(mk, tmp);
        double tr = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int l = 0; l < n; ++l) acc += m(i, l) * at(mk, l, i);
            tr += acc;
        }
        coeff[static_cast<std::size_t>(k)] = -tr / k;
    }
    return CharPoly{std::move(coeff)};
}

CharPoly char_poly_from_spectrum(const Spectrum& s) {
    std::vector<double> coeff{1.0};
    for (double r : s.eigenvalues) {
        coeff.push_back(0.0);
        for (std::size_t k = coeff.size() - 1; k >= 1; --k) coeff[k] -= r * coeff[k - 1];
    }
    return CharPoly{std::move(coeff)};
}

PerronVector perron_vector(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw BadParamsError("perron_vector needs n >= 2");
    if (!is_connected(g)) throw DisconnectedError("perron_vector requires a connected graph");
    const SymmetricMatrix s = sombor_matrix(g);

    // shift so the dominant eigenvalue is the unique largest in modulus
    // (bipartite spectra are symmetric around zero)
    double shift = 1.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(s(i, j));
        shift = std::max(shift, row + 1.0);
    }

    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(double(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    double rho = 0.0;
    const long max_iters = 500000;
    for (long it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = shift * x[static_cast<std::size_t>(i)];
            for (int j : g.neighbors(i)) acc += s(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;

        // Rayleigh quotient of S and residual check
        rho = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j : g.neighbors(i)) acc += s(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc;
            rho += x[static_cast<std::size_t>(i)] * acc;
        }
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = y[static_cast<std::size_t>(i)] - rho * x[static_cast<std::size_t>(i)];
            resid += r * r;
        }
        if (std::sqrt(resid) <= 1e-10 * std::max(1.0, rho)) {
            for (double& v : x) v = std::abs(v);
            return PerronVector{std::move(x), rho};
        }
    }
    throw NoConvergenceError("power iteration did not converge");
}

double reference_adjacency_energy(ReferenceFamily kind, int n) {
    if (n < 3) throw BadParamsError("closed-form adjacency energies need n >= 3");
    constexpr double pi = 3.14159265358979323846;
    switch (kind) {
        case ReferenceFamily::star:
            return 2.0 * std::sqrt(double(n) - 1.0);
        case ReferenceFamily::path: {
            const double t = pi / (2.0 * (n + 1));
            return n % 2 == 0 ? 2.0 / std::sin(t) - 2.0 : 2.0 / std::tan(t) - 2.0;
        }
    }
    throw BadParamsError("unknown reference family");
}

int distinct_eigenvalue_count(const Spectrum& s, double frobenius_norm) {
    if (s.eigenvalues.empty()) return 0;
    const double gap = 1e-6 * std::max(1.0, frobenius_norm);
    int count = 1;
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
        if (s.eigenvalues[i - 1] - s.eigenvalues[i] > gap) ++count;
    return count;
}

} // namespace sombor
