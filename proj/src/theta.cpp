#include "rmtheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace rmtheta {

i64 eval_harmonic(HarmonicWeight P, const std::vector<i64>& x1, const std::vector<i64>& x2) {
    if (P == HarmonicWeight::constant_one) return 1;
    if (x1.size() != 4 || x2.size() != 4) throw DimensionMismatch("harmonic weight needs 4-vectors");
    // det(X^t J X) = (x1^t J x2)^2, J = [[0, I2], [-I2, 0]]
    const i64 m = x1[0] * x2[2] + x1[1] * x2[3] - x1[2] * x2[0] - x1[3] * x2[1];
    return m * m;
}

i64 ThetaCoefficientTable::at(const HalfIntegralMatrix& T) const {
    auto it = entries.find(T);
    return it == entries.end() ? 0 : it->second;
}

namespace {

struct Enumerator {
    const GlobalLattice& L;
    int n;
    i64 bound;
    i64 budget;
    i64 nodes = 0;
    std::vector<std::vector<double>> R;    // Cholesky factor, upper triangular
    std::vector<i64> coeffs;
    std::vector<std::vector<i64>> out;

    Enumerator(const GlobalLattice& lat, i64 norm_bound, i64 node_budget)
        : L(lat), n(lat.rank()), bound(norm_bound), budget(node_budget) {
        const auto& G = L.gram();
        R.assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double s = static_cast<double>(G[i][j]);
                for (int k = 0; k < i; ++k) s -= R[k][i] * R[k][j];
                if (i == j) {
                    if (s <= 0.0) throw IndefiniteGram("gram matrix is not positive definite");
                    R[i][i] = std::sqrt(s);
                } else {
                    R[i][j] = s / R[i][i];
                }
            }
        }
        coeffs.assign(n, 0);
    }

    i64 exact_norm() const {
        const auto& G = L.gram();
        i64 q = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += coeffs[i] * G[i][j] * coeffs[j];
        return q;
    }

    void recurse(int level, double remaining, const std::vector<double>& shift) {
        if (level < 0) {
            if (exact_norm() <= bound) out.push_back(L.vector(coeffs));
            return;
        }
        const double rll = R[level][level];
        const double center = -shift[level] / rll;
        const double radius = std::sqrt(std::max(0.0, remaining)) / rll + 1e-9;
        const i64 lo = static_cast<i64>(std::ceil(center - radius));
        const i64 hi = static_cast<i64>(std::floor(center + radius));
        for (i64 z = lo; z <= hi; ++z) {
            if (++nodes > budget) throw BoundTooLarge("enumeration node budget exceeded");
            coeffs[level] = z;
            const double term = rll * z + shift[level];
            std::vector<double> next_shift = shift;
            for (int j = 0; j < level; ++j) next_shift[j] += R[j][level] * z;
            recurse(level - 1, remaining - term * term, next_shift);
        }
        coeffs[level] = 0;
    }

    std::vector<std::vector<i64>> run() {
        recurse(n - 1, static_cast<double>(bound) + 0.5, std::vector<double>(n, 0.0));
        return std::move(out);
    }
};

i64 dot(const std::vector<i64>& x, const std::vector<i64>& y) {
    i64 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

std::vector<std::vector<i64>> short_vectors(const GlobalLattice& L, i64 norm_bound,
                                            i64 node_budget) {
    if (norm_bound < 0) return {};
    Enumerator e(L, norm_bound, node_budget);
    std::vector<std::vector<i64>> v = e.run();
    // deterministic ordering
    std::sort(v.begin(), v.end());
    return v;
}

ThetaCoefficientTable theta_coefficients(const GlobalLattice& L, HarmonicWeight P,
                                         i64 trace_bound, i64 node_budget) {
    if (trace_bound < 0) throw BoundTooLarge("trace bound must be nonnegative");
    ThetaCoefficientTable table;
    table.weight = P;
    table.bound = trace_bound;

    const std::vector<std::vector<i64>> vecs = short_vectors(L, 2 * trace_bound, node_budget);
    struct Vec { std::vector<i64> x; i64 norm; };
    std::vector<Vec> vs;
    vs.reserve(vecs.size());
    for (const auto& x : vecs) vs.push_back({x, dot(x, x)});

    for (const Vec& v1 : vs) {
        if (v1.norm % 2 != 0) continue;  // T must be semi-integral
        for (const Vec& v2 : vs) {
            if (v2.norm % 2 != 0) continue;
            if (v1.norm + v2.norm > 2 * trace_bound) continue;
            HalfIntegralMatrix T{v1.norm / 2, dot(v1.x, v2.x), v2.norm / 2};
            table.entries[T] += eval_harmonic(P, v1.x, v2.x);
        }
    }
    // complete the table: every psd semi-integral T with tr(T) <= bound
    for (i64 a = 0; a <= trace_bound; ++a) {
        for (i64 c = 0; a + c <= trace_bound; ++c) {
            i64 bmax = static_cast<i64>(std::floor(2.0 * std::sqrt(static_cast<double>(a * c))));
            for (i64 b = -bmax; b <= bmax; ++b) {
                HalfIntegralMatrix T{a, b, c};
                if (T.psd()) table.entries.emplace(T, 0);
            }
        }
    }
    return table;
}

ThetaClassReport coefficient_report(const ThetaCoefficientTable& table) {
    if (table.entries.empty()) throw BoundTooLarge("empty coefficient table");

    std::vector<HalfIntegralMatrix> keys;
    keys.reserve(table.entries.size());
    for (const auto& [T, v] : table.entries) keys.push_back(T);
    std::map<HalfIntegralMatrix, std::size_t> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;

    // union-find over GL_2(Z) transforms with entries in [-3, 3]
    std::vector<std::size_t> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };

    std::vector<std::array<i64, 4>> units;
    for (i64 u00 = -3; u00 <= 3; ++u00)
        for (i64 u01 = -3; u01 <= 3; ++u01)
            for (i64 u10 = -3; u10 <= 3; ++u10)
                for (i64 u11 = -3; u11 <= 3; ++u11) {
                    i64 det = u00 * u11 - u01 * u10;
                    if (det == 1 || det == -1) units.push_back({u00, u01, u10, u11});
                }

    for (std::size_t i = 0; i < keys.size(); ++i) {
        const i64 m00 = 2 * keys[i].a, m01 = keys[i].b, m11 = 2 * keys[i].c;
        for (const auto& U : units) {
            // M' = U^T M U for M = 2T
            const i64 n00 = U[0] * (m00 * U[0] + m01 * U[2]) + U[2] * (m01 * U[0] + m11 * U[2]);
            const i64 n01 = U[0] * (m00 * U[1] + m01 * U[3]) + U[2] * (m01 * U[1] + m11 * U[3]);
            const i64 n11 = U[1] * (m00 * U[1] + m01 * U[3]) + U[3] * (m01 * U[1] + m11 * U[3]);
            HalfIntegralMatrix T2{n00 / 2, n01, n11 / 2};
            auto it = index.find(T2);
            if (it != index.end()) {
                std::size_t a = find(i), b = find(it->second);
                if (a != b) parent[a] = b;
            }
        }
    }

    ThetaClassReport report;
    std::map<std::size_t, ThetaClassReport::EquivClass> classes;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto& cls = classes[find(i)];
        cls.members.push_back(keys[i]);
        cls.values.push_back(table.entries.at(keys[i]));
    }
    for (auto& [root, cls] : classes) report.classes.push_back(std::move(cls));

    std::map<i64, ThetaClassReport::TraceRow> growth;
    for (const auto& [T, v] : table.entries) {
        auto& row = growth[T.trace()];
        row.trace = T.trace();
        row.num_entries += 1;
        if (v != 0) row.num_nonzero += 1;
        row.max_abs_value = std::max(row.max_abs_value, std::abs(v));
    }
    for (auto& [t, row] : growth) report.growth.push_back(row);
    return report;
}

}  // namespace rmtheta
