#include "fmmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fmmc {

EigenResult eig_symmetric(const Matrix& input, bool want_vectors) {
    const int n = input.rows();
    if (n != input.cols()) throw Error(Status::invalid, "eigensolver needs a square matrix");
    const double norm = input.frobenius();
    if (input.max_asymmetry() > 1e-9 * std::max(1.0, norm))
        throw Error(Status::invalid, "eigensolver input is not symmetric");

    Matrix a = input;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (input(i, j) + input(j, i));
    Matrix v = want_vectors ? Matrix::identity(n) : Matrix();

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    EigenResult out;
    const double target = 1e-12 * norm;
    while (out.sweeps < 100 && off_norm() > target) {
        ++out.sweeps;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                if (want_vectors)
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp - s * vkq;
                        v(k, q) = s * vkp + c * vkq;
                    }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
    if (want_vectors) {
        out.vectors = Matrix(n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

double mixing_time(double slem) {
    if (slem <= 1e-12) return 0.0;
    if (slem >= 1.0 - 1e-12) return std::numeric_limits<double>::infinity();
    return 1.0 / std::log(1.0 / slem);
}

SpectralReport report_from_spectrum(const Vec& eigenvalues) {
    SpectralReport r;
    r.eigenvalues = eigenvalues;
    if (eigenvalues.size() < 2) {
        r.lambda2 = r.lambdaN = 0.0;
        r.slem = 0.0;
    } else {
        r.lambda2 = eigenvalues[1];
        r.lambdaN = eigenvalues.back();
        r.slem = std::max(0.0, std::max(r.lambda2, -r.lambdaN));
    }
    r.mixing_time = mixing_time(r.slem);
    return r;
}

Matrix symmetrized(const Chain& c, double tol) {
    const int n = c.p.rows();
    const double scale = *std::max_element(c.pi.begin(), c.pi.end());
    Matrix s(n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = c.p(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(c.pi[i] * c.p(i, j) - c.pi[j] * c.p(j, i)) > tol * scale)
                throw Error(Status::invalid, "detailed balance violated between " + std::to_string(i) + " and " + std::to_string(j));
            const double a = std::sqrt(c.pi[i] / c.pi[j]) * c.p(i, j);
            const double b = std::sqrt(c.pi[j] / c.pi[i]) * c.p(j, i);
            s(i, j) = s(j, i) = 0.5 * (a + b);
        }
    }
    return s;
}

SpectralReport slem_of_chain(const Chain& c) {
    return report_from_spectrum(eig_symmetric(symmetrized(c)).values);
}

double path_slem(const Vec& pi, const Vec& q) {
    const int n = static_cast<int>(pi.size());
    if (n < 2) throw Error(Status::invalid, "path needs at least two vertices");
    if (static_cast<int>(q.size()) != n - 1) throw Error(Status::invalid, "path weights must number N-1");
    Matrix t(n);
    for (int i = 0; i < n; ++i) {
        double out = 0.0;
        if (i > 0) out += q[i - 1];
        if (i + 1 < n) out += q[i];
        t(i, i) = 1.0 - out / pi[i];
        if (i + 1 < n) t(i, i + 1) = t(i + 1, i) = q[i] / std::sqrt(pi[i] * pi[i + 1]);
    }
    return report_from_spectrum(eig_symmetric(t).values).slem;
}

std::pair<Matrix, Matrix> reduced_tree_chain(const std::vector<int>& m, const Vec& pi, const Vec& q) {
    const int n = static_cast<int>(m.size());
    if (n < 1 || static_cast<int>(pi.size()) != n + 1 || static_cast<int>(q.size()) != n)
        throw Error(Status::invalid, "tree parameters: need m[0..n-1], pi[0..n], q[0..n-1]");
    if (m[0] < 2) throw Error(Status::invalid, "tree root needs at least two children");
    Matrix p0 = Matrix::identity(n + 1);
    for (int i = 0; i < n; ++i) {
        // Rank-one term q_i v v^T with v = sqrt(m_i/pi_i) e_i - e_{i+1}/sqrt(pi_{i+1}).
        const double a = std::sqrt(m[i] / pi[i]), b = -1.0 / std::sqrt(pi[i + 1]);
        p0(i, i) -= q[i] * a * a;
        p0(i + 1, i + 1) -= q[i] * b * b;
        p0(i, i + 1) -= q[i] * a * b;
        p0(i + 1, i) -= q[i] * a * b;
    }
    return {p0, p0.trailing(1)};
}

double reduced_tree_slem(const std::pair<Matrix, Matrix>& blocks) {
    const Vec e0 = eig_symmetric(blocks.first).values;
    const Vec e1 = eig_symmetric(blocks.second).values;
    return std::max(e1.front(), -e0.back());
}

std::pair<Matrix, Matrix> ccs_reduced_chain(int m, int n, const Vec& pi, const Vec& q) {
    if (m < 2) throw Error(Status::invalid, "CCS star needs a core of at least two vertices");
    if (n < 1 || static_cast<int>(pi.size()) != n + 1 || static_cast<int>(q.size()) != n + 1)
        throw Error(Status::invalid, "CCS parameters: need pi[0..n] and q[0..n]");
    Matrix a(n + 1);
    for (int j = 0; j <= n; ++j) {
        double out = 0.0;
        if (j > 0) out += q[j];
        if (j < n) out += q[j + 1];
        a(j, j) = 1.0 - out / pi[j];
        if (j < n) a(j, j + 1) = a(j + 1, j) = q[j + 1] / std::sqrt(pi[j] * pi[j + 1]);
    }
    Matrix b = a;
    b(0, 0) -= m * q[0] / pi[0];
    return {a, b};
}

double ccs_reduced_slem(const std::pair<Matrix, Matrix>& blocks) {
    const SpectralReport ra = report_from_spectrum(eig_symmetric(blocks.first).values);
    const Vec eb = eig_symmetric(blocks.second).values;
    return std::max({ra.slem, eb.front(), -eb.back()});
}

}  // namespace fmmc
