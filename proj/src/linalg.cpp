#include "qsd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsd/errors.hpp"

namespace qsd {

Matrix Matrix::identity(int d) {
    Matrix m(d);
    for (int i = 0; i < d; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

Matrix multiply(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.dim != rhs.dim) {
        throw RangeError("matrix dimension mismatch in multiply");
    }
    const int d = lhs.dim;
    Matrix out(d);
    for (int r = 0; r < d; ++r) {
        for (int k = 0; k < d; ++k) {
            const complexd v = lhs.at(r, k);
            if (v == complexd{}) {
                continue;
            }
            for (int c = 0; c < d; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix &m) {
    Matrix out(m.dim);
    for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
            out.at(r, c) = std::conj(m.at(c, r));
        }
    }
    return out;
}

double hermiticity_defect(const Matrix &m) {
    double worst = 0.0;
    for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
            worst = std::max(worst, std::abs(m.at(r, c) - std::conj(m.at(c, r))));
        }
    }
    return worst;
}

double identity_defect(const Matrix &m) {
    double worst = 0.0;
    for (int r = 0; r < m.dim; ++r) {
        for (int c = 0; c < m.dim; ++c) {
            const complexd expect = (r == c) ? complexd{1.0, 0.0} : complexd{};
            worst = std::max(worst, std::abs(m.at(r, c) - expect));
        }
    }
    return worst;
}

namespace {

double off_diagonal_norm(const Matrix &m) {
    double s = 0.0;
    for (int r = 0; r < m.dim; ++r) {
        for (int c = r + 1; c < m.dim; ++c) {
            s += std::norm(m.at(r, c));
        }
    }
    return std::sqrt(s);
}

// One Jacobi rotation in the (p, q) plane. The complex off-diagonal entry
// is first made real by a unit phase on index q, then annihilated by the
// usual real Givens rotation. The combined unitary has the 2x2 block
//   [ c        s   ]
//   [ -s*w     c*w ]
// with |w| = 1 chosen so that a_pq * w is real and positive.
void jacobi_rotate(Matrix &m, Matrix &vecs, int p, int q) {
    const complexd g = m.at(p, q);
    const double abs_g = std::abs(g);
    if (abs_g == 0.0) {
        return;
    }
    const complexd w = std::conj(g) / abs_g;
    const double app = m.at(p, p).real();
    const double aqq = m.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int d = m.dim;
    // m <- U^dagger m U, applied as column then row updates.
    for (int i = 0; i < d; ++i) {
        const complexd mip = m.at(i, p);
        const complexd miq = m.at(i, q);
        m.at(i, p) = c * mip - s * w * miq;
        m.at(i, q) = s * mip + c * w * miq;
    }
    for (int i = 0; i < d; ++i) {
        const complexd mpi = m.at(p, i);
        const complexd mqi = m.at(q, i);
        m.at(p, i) = c * mpi - s * std::conj(w) * mqi;
        m.at(q, i) = s * mpi + c * std::conj(w) * mqi;
    }
    // Exact zeros and real diagonal keep roundoff from accumulating.
    m.at(p, q) = 0.0;
    m.at(q, p) = 0.0;
    m.at(p, p) = complexd{m.at(p, p).real(), 0.0};
    m.at(q, q) = complexd{m.at(q, q).real(), 0.0};

    for (int i = 0; i < vecs.dim; ++i) {
        const complexd vip = vecs.at(i, p);
        const complexd viq = vecs.at(i, q);
        vecs.at(i, p) = c * vip - s * w * viq;
        vecs.at(i, q) = s * vip + c * w * viq;
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix &input) {
    if (input.dim < 1) {
        throw RangeError("hermitian_eigensystem: empty matrix");
    }
    Matrix m = input;
    Matrix vecs = Matrix::identity(m.dim);

    double scale = 0.0;
    for (const complexd &v : m.a) {
        scale = std::max(scale, std::abs(v));
    }
    const double stop = std::max(scale, 1.0) * 1e-15;

    bool converged = (m.dim == 1);
    for (int sweep = 0; sweep < 64 && !converged; ++sweep) {
        if (off_diagonal_norm(m) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < m.dim; ++p) {
            for (int q = p + 1; q < m.dim; ++q) {
                jacobi_rotate(m, vecs, p, q);
            }
        }
    }
    if (!converged && off_diagonal_norm(m) > stop) {
        throw NumericalBreakdown("hermitian_eigensystem: Jacobi sweeps did not converge");
    }

    std::vector<int> order(m.dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&m](int a, int b) { return m.at(a, a).real() < m.at(b, b).real(); });

    EigenSystem out;
    out.values.resize(m.dim);
    out.vectors = Matrix(m.dim);
    for (int k = 0; k < m.dim; ++k) {
        out.values[k] = m.at(order[k], order[k]).real();
        for (int i = 0; i < m.dim; ++i) {
            out.vectors.at(i, k) = vecs.at(i, order[k]);
        }
    }
    return out;
}

Matrix psd_sqrt(const Matrix &m, double breakdown_tol, double *max_shift) {
    EigenSystem es = hermitian_eigensystem(m);
    double worst_shift = 0.0;
    std::vector<double> roots(es.values.size());
    for (size_t k = 0; k < es.values.size(); ++k) {
        const double clamped = std::clamp(es.values[k], 0.0, 1.0);
        worst_shift = std::max(worst_shift, std::abs(es.values[k] - clamped));
        roots[k] = std::sqrt(clamped);
    }
    if (worst_shift > breakdown_tol) {
        throw NumericalBreakdown("psd_sqrt: eigenvalue clamp shift " + std::to_string(worst_shift) +
                                 " exceeds tolerance");
    }
    if (max_shift != nullptr) {
        *max_shift = worst_shift;
    }

    const int d = m.dim;
    Matrix out(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            complexd v{};
            for (int k = 0; k < d; ++k) {
                v += es.vectors.at(r, k) * roots[k] * std::conj(es.vectors.at(c, k));
            }
            out.at(r, c) = v;
        }
    }
    return out;
}

}  // namespace qsd
