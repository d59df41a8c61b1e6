#include "nrpi/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nrpi {

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    if (n < 1) throw Error("ComplexMatrix: dimension must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> row_major_entries)
    : n_(n), e_(std::move(row_major_entries)) {
    if (n < 1) throw Error("ComplexMatrix: dimension must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw Error("ComplexMatrix: entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : e_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : e_) m = std::max(m, std::abs(v));
    return m;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& x) const {
    ComplexVector y(n_, Complex(0.0));
    for (int i = 0; i < n_; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexVector ComplexMatrix::column(int j) const {
    ComplexVector c(n_);
    for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& v : e_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double RealPolynomial::eval(double x) const {
    double y = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) y = y * x + coeffs[i];
    return y;
}

ComplexMatrix re_part(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return m;
}

ComplexMatrix im_part(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix m(n);
    const Complex half_i(0.0, 0.5);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = half_i * (std::conj(a(j, i)) - a(i, j));
    return m;
}

ComplexMatrix rotate(const ComplexMatrix& a, double theta) {
    ComplexMatrix m = a;
    m *= std::polar(1.0, -theta);
    return m;
}

namespace detail {

double hermitian_deviation(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
    double s = 0.0;
    const int n = h.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

// Index of the first eigenvector component with magnitude above the
// significance cutoff; used only to break ties between equal eigenvalues.
int first_significant_row(const ComplexMatrix& vectors, int col) {
    constexpr double kSignificant = 1e-8;
    for (int i = 0; i < vectors.dim(); ++i)
        if (std::abs(vectors(i, col)) > kSignificant) return i;
    return vectors.dim();
}

}  // namespace

HermitianEigenResult jacobi_eigen(const ComplexMatrix& h_in) {
    const int n = h_in.dim();

    // Work on the exactly Hermitian average so asymmetric rounding in the
    // input cannot leak into the rotations.
    ComplexMatrix h = re_part(h_in);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = h.frobenius_norm();
    const double threshold = 1e-13 * scale;
    constexpr int kMaxSweeps = 50;

    bool converged = (off_diagonal_norm(h) <= threshold);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex beta = h(p, q);
                const double abs_beta = std::abs(beta);
                if (abs_beta == 0.0) continue;

                // Unitary 2x2 that diagonalizes [[alpha, beta], [conj(beta), gamma]]:
                // absorb the phase of beta, then a real Jacobi rotation with the
                // smaller root t of t^2 + 2*tau*t - 1 = 0.
                const double alpha = h(p, p).real();
                const double gamma = h(q, q).real();
                const Complex phase = beta / abs_beta;  // e^{i phi}
                const double tau = (gamma - alpha) / (2.0 * abs_beta);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // R(p,p)=c, R(p,q)=s, R(q,p)=-s*conj(phase), R(q,q)=c*conj(phase)
                const Complex rqp = -s * std::conj(phase);
                const Complex rqq = c * std::conj(phase);

                // Columns: H <- H R
                for (int i = 0; i < n; ++i) {
                    const Complex hip = h(i, p);
                    const Complex hiq = h(i, q);
                    h(i, p) = hip * c + hiq * rqp;
                    h(i, q) = hip * s + hiq * rqq;
                }
                // Rows: H <- R* H
                for (int j = 0; j < n; ++j) {
                    const Complex hpj = h(p, j);
                    const Complex hqj = h(q, j);
                    h(p, j) = c * hpj + std::conj(rqp) * hqj;
                    h(q, j) = s * hpj + std::conj(rqq) * hqj;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = Complex(h(p, p).real(), 0.0);
                h(q, q) = Complex(h(q, q).real(), 0.0);

                // Accumulate V <- V R
                for (int i = 0; i < n; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = vip * c + viq * rqp;
                    v(i, q) = vip * s + viq * rqq;
                }
            }
        }
        converged = (off_diagonal_norm(h) <= threshold);
    }
    if (!converged)
        throw NoConvergenceError("hermitian_eigen: Jacobi sweep limit exhausted");

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = h(i, i).real();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] > values[b]; });

    // Reorder degenerate groups by the first significant eigenvector
    // component so pairing is deterministic at repeated eigenvalues.
    const double tie_tol = 1e-12 * std::max(1.0, scale);
    int group_begin = 0;
    while (group_begin < n) {
        int group_end = group_begin + 1;
        while (group_end < n &&
               values[order[group_end - 1]] - values[order[group_end]] <= tie_tol)
            ++group_end;
        if (group_end - group_begin > 1) {
            std::stable_sort(order.begin() + group_begin, order.begin() + group_end,
                             [&](int a, int b) {
                                 return first_significant_row(v, a) < first_significant_row(v, b);
                             });
        }
        group_begin = group_end;
    }

    HermitianEigenResult result{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        result.values[k] = values[order[k]];
        for (int i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
    }
    return result;
}

}  // namespace detail

HermitianEigenResult hermitian_eigen(const ComplexMatrix& h, double tol) {
    if (h.dim() > 64) throw Error("hermitian_eigen: dimension cap is 64");
    if (detail::hermitian_deviation(h) > tol * std::max(h.frobenius_norm(), 1e-300))
        throw NotHermitianError("hermitian_eigen: input is not Hermitian within tolerance");
    return detail::jacobi_eigen(h);
}

RealPolynomial char_poly(const ComplexMatrix& h, double tol) {
    if (detail::hermitian_deviation(h) > tol * std::max(h.frobenius_norm(), 1e-300))
        throw NotHermitianError("char_poly: input is not Hermitian within tolerance");

    // Faddeev-LeVerrier: M_1 = H, c_{n-1} = -tr M_1,
    // M_{k} = H (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    const int n = h.dim();
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs[n] = 1.0;

    ComplexMatrix m = h;
    coeffs[n - 1] = -m.trace().real();
    for (int k = 2; k <= n; ++k) {
        ComplexMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
        m = h * shifted;
        coeffs[n - k] = -m.trace().real() / k;
    }
    return RealPolynomial{std::move(coeffs)};
}

}  // namespace nrpi
