#include "hopfact/matrix.hpp"

#include <omp.h>

#include <numeric>

#include "hopfact/errors.hpp"

namespace hopfact {

ExactMatrix::ExactMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(size_t rows, size_t cols, std::vector<CycNum> entries)
    : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) throw ShapeMismatch("entry count does not match shape");
}

ExactMatrix ExactMatrix::identity(size_t n) { return scalar(n, CycNum(1)); }

ExactMatrix ExactMatrix::scalar(size_t n, const CycNum& s) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

ExactMatrix ExactMatrix::diag(const std::vector<CycNum>& d) {
    ExactMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::unit(size_t n, size_t i, size_t j) {
    ExactMatrix m(n, n);
    m(i, j) = CycNum(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return ExactMatrix();
    ExactMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw ShapeMismatch("ragged rows");
        for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<CycNum> ExactMatrix::scalar_value() const {
    if (!square()) return std::nullopt;
    if (r_ == 0) return CycNum(1);
    const CycNum s = (*this)(0, 0);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            const CycNum& x = (*this)(i, j);
            if (i == j ? x != s : !x.is_zero()) return std::nullopt;
        }
    return s;
}

std::optional<CycNum> ExactMatrix::multiple_of(const ExactMatrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw ShapeMismatch("multiple_of: shapes differ");
    size_t p = 0;
    while (p < a_.size() && b.a_[p].is_zero()) ++p;
    if (p == a_.size()) return std::nullopt;
    const CycNum s = a_[p] / b.a_[p];
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != s * b.a_[k]) return std::nullopt;
    return s;
}

long ExactMatrix::conductor() const {
    long l = 1;
    for (const auto& x : a_) l = std::lcm(l, x.conductor());
    return l;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("sum of matrices of different shapes");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("difference of matrices of different shapes");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const CycNum& s) {
    for (auto& x : a_)
        if (!x.is_zero()) x *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mul(a, b); }

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

ExactMatrix ExactMatrix::pow(long e) const {
    if (!square()) throw ShapeMismatch("power of a non-square matrix");
    if (e < 0) return inverse(*this).pow(-e);
    ExactMatrix result = identity(r_);
    ExactMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

std::string ExactMatrix::str() const {
    std::string s = "[";
    for (size_t i = 0; i < r_; ++i) {
        s += i ? "; " : "";
        for (size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    }
    return s + "]";
}

namespace {

// entries of a matrix as coefficient blocks over a common conductor
struct Packed {
    long conductor = 1;
    int phi = 1;
    std::vector<mpq_class> v;
    std::vector<char> nz;
};

Packed pack(const ExactMatrix& m, long l) {
    Packed p;
    p.conductor = l;
    p.phi = detail::field_table(l).phi;
    p.v.resize(m.data().size() * p.phi);
    p.nz.resize(m.data().size());
    for (size_t k = 0; k < m.data().size(); ++k) {
        const CycNum& x = m.data()[k];
        if (x.is_zero()) continue;
        p.nz[k] = 1;
        const CycNum y = x.conductor() == l ? x : x.in_conductor(l);
        for (int i = 0; i < p.phi; ++i) p.v[k * p.phi + i] = y.coeffs()[i];
    }
    return p;
}

struct RowScratch {
    std::vector<mpq_class> raw, out;
    mpq_class tmp;
};

void mul_row(const Packed& pa, const Packed& pb, size_t i, size_t inner, size_t cols, const detail::FieldTable& t,
             RowScratch& s, std::vector<CycNum>& dest) {
    const int phi = pa.phi;
    for (size_t j = 0; j < cols; ++j) {
        s.raw.assign(2 * phi - 1, 0);
        bool any = false;
        for (size_t k = 0; k < inner; ++k) {
            if (!pa.nz[i * inner + k] || !pb.nz[k * cols + j]) continue;
            any = true;
            const mpq_class* x = &pa.v[(i * inner + k) * phi];
            const mpq_class* y = &pb.v[(k * cols + j) * phi];
            for (int p = 0; p < phi; ++p) {
                if (sgn(x[p]) == 0) continue;
                for (int q = 0; q < phi; ++q) {
                    if (sgn(y[q]) == 0) continue;
                    mpq_mul(s.tmp.get_mpq_t(), x[p].get_mpq_t(), y[q].get_mpq_t());
                    mpq_add(s.raw[p + q].get_mpq_t(), s.raw[p + q].get_mpq_t(), s.tmp.get_mpq_t());
                }
            }
        }
        if (!any) {
            dest[i * cols + j] = CycNum();
            continue;
        }
        detail::reduce_into(t, s.raw, s.out);
        dest[i * cols + j] = CycNum::from_coeffs(pa.conductor, s.out);
    }
}

void check_mul_shapes(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shape mismatch");
}

}  // namespace

ExactMatrix mul_serial(const ExactMatrix& a, const ExactMatrix& b) {
    check_mul_shapes(a, b);
    const long l = std::lcm(a.conductor(), b.conductor());
    const Packed pa = pack(a, l);
    const Packed pb = pack(b, l);
    const detail::FieldTable& t = detail::field_table(l);
    std::vector<CycNum> out(a.rows() * b.cols());
    RowScratch s;
    for (size_t i = 0; i < a.rows(); ++i) mul_row(pa, pb, i, a.cols(), b.cols(), t, s, out);
    return ExactMatrix(a.rows(), b.cols(), std::move(out));
}

ExactMatrix mul_parallel(const ExactMatrix& a, const ExactMatrix& b) {
    check_mul_shapes(a, b);
    const long l = std::lcm(a.conductor(), b.conductor());
    const Packed pa = pack(a, l);
    const Packed pb = pack(b, l);
    const detail::FieldTable& t0 = detail::field_table(l);
    (void)t0;
    std::vector<CycNum> out(a.rows() * b.cols());
    const long rows = static_cast<long>(a.rows());
#pragma omp parallel
    {
        RowScratch s;
        const detail::FieldTable& t = detail::field_table(l);
#pragma omp for schedule(dynamic)
        for (long i = 0; i < rows; ++i) mul_row(pa, pb, static_cast<size_t>(i), a.cols(), b.cols(), t, s, out);
    }
    return ExactMatrix(a.rows(), b.cols(), std::move(out));
}

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b) {
    const size_t work = a.rows() * a.cols() * b.cols();
    if (work >= 32768 && omp_get_max_threads() > 1) return mul_parallel(a, b);
    return mul_serial(a, b);
}

ExactMatrix kron_serial(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const CycNum& x = a(i, j);
            if (x.is_zero()) continue;
            for (size_t p = 0; p < b.rows(); ++p)
                for (size_t q = 0; q < b.cols(); ++q) {
                    const CycNum& y = b(p, q);
                    if (y.is_zero()) continue;
                    k(i * b.rows() + p, j * b.cols() + q) = x * y;
                }
        }
    return k;
}

ExactMatrix kron_parallel(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    const long n = static_cast<long>(a.rows() * a.cols());
#pragma omp parallel for schedule(dynamic)
    for (long ij = 0; ij < n; ++ij) {
        const size_t i = static_cast<size_t>(ij) / a.cols();
        const size_t j = static_cast<size_t>(ij) % a.cols();
        const CycNum& x = a(i, j);
        if (x.is_zero()) continue;
        for (size_t p = 0; p < b.rows(); ++p)
            for (size_t q = 0; q < b.cols(); ++q) {
                const CycNum& y = b(p, q);
                if (y.is_zero()) continue;
                k(i * b.rows() + p, j * b.cols() + q) = x * y;
            }
    }
    return k;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    const size_t work = a.rows() * a.cols() * b.rows() * b.cols();
    if (work >= 16384 && omp_get_max_threads() > 1) return kron_parallel(a, b);
    return kron_serial(a, b);
}

ExactMatrix rref(const ExactMatrix& a, std::vector<size_t>* pivots) {
    ExactMatrix m = a;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const CycNum inv = m(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const CycNum f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

size_t rank(const ExactMatrix& a) {
    std::vector<size_t> piv;
    rref(a, &piv);
    return piv.size();
}

std::vector<std::vector<CycNum>> nullspace(const ExactMatrix& a) {
    std::vector<size_t> piv;
    const ExactMatrix r = rref(a, &piv);
    std::vector<char> is_piv(a.cols(), 0);
    for (size_t p : piv) is_piv[p] = 1;
    std::vector<std::vector<CycNum>> basis;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<CycNum> v(a.cols());
        v[f] = CycNum(1);
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

CycNum det(const ExactMatrix& a) {
    if (!a.square()) throw ShapeMismatch("determinant of a non-square matrix");
    ExactMatrix m = a;
    const size_t n = m.rows();
    CycNum d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return CycNum();
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        const CycNum inv = m(c, c).inv();
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const CycNum f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

std::optional<ExactMatrix> try_inverse(const ExactMatrix& a) {
    if (!a.square()) throw ShapeMismatch("inverse of a non-square matrix");
    const size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = CycNum(1);
    }
    std::vector<size_t> piv;
    const ExactMatrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

ExactMatrix inverse(const ExactMatrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularMatrix("matrix is singular");
    return *inv;
}

ExactMatrix conjugate(const ExactMatrix& c, const ExactMatrix& m) { return mul(mul(c, m), inverse(c)); }

ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks) {
    size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    ExactMatrix out(r, c);
    size_t oi = 0, oj = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) out(oi + i, oj + j) = b(i, j);
        oi += b.rows();
        oj += b.cols();
    }
    return out;
}

std::vector<CycNum> vec(const ExactMatrix& m) { return m.data(); }

ExactMatrix unvec(const std::vector<CycNum>& v, size_t rows, size_t cols) { return ExactMatrix(rows, cols, v); }

void EchelonBasis::reduce(std::vector<CycNum>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const size_t p = pivots_[k];
        if (v[p].is_zero()) continue;
        const CycNum f = v[p];
        const auto& row = rows_[k];
        for (size_t j = p; j < n_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
}

bool EchelonBasis::add(std::vector<CycNum> v) {
    if (v.size() != n_) throw ShapeMismatch("vector of wrong length");
    reduce(v);
    size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const CycNum inv = v[p].inv();
    for (size_t j = p; j < n_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(std::vector<CycNum> v) const {
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace hopfact
