#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hopfact {

long euler_phi(long n);
// integer coefficients of Phi_n, lowest degree first
const std::vector<long>& cyclotomic_poly(long n);

// Element of Q(zeta_N), power basis modulo Phi_N. Conductors are kept
// off 2 mod 4 (Q(zeta_2M) = Q(zeta_M) for odd M) and rationals live at N = 1.
class CycNum {
public:
    CycNum();
    CycNum(long v);  // NOLINT: integer literals appear in most formulas
    explicit CycNum(const mpq_class& q);

    // coeffs may have any length; reduced modulo Phi_N here
    static CycNum from_coeffs(long conductor, std::vector<mpq_class> coeffs);
    static CycNum rational(long num, long den = 1);

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return n_ == 1; }
    std::optional<mpq_class> as_rational() const;

    // same number expressed over Q(zeta_m); m must be a multiple of conductor()
    CycNum in_conductor(long m) const;
    // same number over the smallest cyclotomic field containing it
    CycNum minimized() const;

    CycNum inv() const;
    CycNum pow(long e) const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    CycNum operator-() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    // "a + b·ζ3 - ζ3^2" style
    std::string str() const;

private:
    CycNum(long n, std::vector<mpq_class> c, bool);
    void normalize_conductor();

    long n_ = 1;
    std::vector<mpq_class> c_;
};

CycNum cyc_root(long n, long k);
std::optional<long> order_of(const CycNum& z);
// some r with r^n = z; searched among (rational n-th roots) times roots of unity
std::optional<CycNum> nth_root(const CycNum& z, long n);

std::string rational_str(const mpq_class& q);

namespace detail {
// x^k mod Phi_n for 0 <= k < table size; coefficient vectors of length phi(n)
struct FieldTable {
    long n = 1;
    int phi = 1;
    std::vector<std::vector<long>> xpow;
};
const FieldTable& field_table(long n);
// reduce a raw product vector (length up to 2*phi-1) in place into out (length phi)
void reduce_into(const FieldTable& t, std::vector<mpq_class>& raw, std::vector<mpq_class>& out);
}  // namespace detail

}  // namespace hopfact
