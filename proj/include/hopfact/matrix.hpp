#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfact/cyclo.hpp"

namespace hopfact {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols);
    ExactMatrix(size_t rows, size_t cols, std::vector<CycNum> entries);
    static ExactMatrix identity(size_t n);
    static ExactMatrix scalar(size_t n, const CycNum& s);
    static ExactMatrix diag(const std::vector<CycNum>& d);
    // E_ij, 0-based
    static ExactMatrix unit(size_t n, size_t i, size_t j);
    static ExactMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    CycNum& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const CycNum& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const std::vector<CycNum>& data() const { return a_; }
    std::vector<CycNum>& data() { return a_; }

    bool is_zero() const;
    // s with M = s*I, if any
    std::optional<CycNum> scalar_value() const;
    // s with M = s*B, if any (B nonzero)
    std::optional<CycNum> multiple_of(const ExactMatrix& b) const;
    long conductor() const;

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const CycNum& s);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const CycNum& s) { return a *= s; }
    friend ExactMatrix operator*(const CycNum& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix pow(long e) const;
    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

// Dense kernels. The *_serial versions are the reference; mul/kron dispatch to
// the OpenMP versions above a size threshold.
ExactMatrix mul_serial(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mul_parallel(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron_serial(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron_parallel(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix inverse(const ExactMatrix& a);
std::optional<ExactMatrix> try_inverse(const ExactMatrix& a);
CycNum det(const ExactMatrix& a);
size_t rank(const ExactMatrix& a);
// reduced row echelon form; pivots receives pivot columns
ExactMatrix rref(const ExactMatrix& a, std::vector<size_t>* pivots = nullptr);
// basis of {v : a v = 0}, one column vector per element
std::vector<std::vector<CycNum>> nullspace(const ExactMatrix& a);
// C M C^{-1}
ExactMatrix conjugate(const ExactMatrix& c, const ExactMatrix& m);
// block diagonal / direct sum
ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks);
// row-major vectorization and its inverse
std::vector<CycNum> vec(const ExactMatrix& m);
ExactMatrix unvec(const std::vector<CycNum>& v, size_t rows, size_t cols);

// Incrementally maintained row-echelon basis of a subspace of F^n.
class EchelonBasis {
public:
    explicit EchelonBasis(size_t n) : n_(n) {}
    // returns true if v was independent of the current span
    bool add(std::vector<CycNum> v);
    size_t dim() const { return rows_.size(); }
    size_t ambient() const { return n_; }
    bool contains(std::vector<CycNum> v) const;
    const std::vector<std::vector<CycNum>>& rows() const { return rows_; }

private:
    void reduce(std::vector<CycNum>& v) const;
    size_t n_;
    std::vector<std::vector<CycNum>> rows_;  // each normalized with leading 1 at pivots_[k]
    std::vector<size_t> pivots_;
};

}  // namespace hopfact
