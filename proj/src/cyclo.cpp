#include "hopfact/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "hopfact/errors.hpp"

namespace hopfact {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

struct Registry {
    std::mutex mu;
    std::map<long, std::vector<long>> polys;
    std::map<long, std::unique_ptr<detail::FieldTable>> tables;
};

Registry& registry() {
    static Registry r;
    return r;
}

// caller holds the registry lock
const std::vector<long>& poly_locked(Registry& r, long n) {
    auto it = r.polys.find(n);
    if (it != r.polys.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long> den = poly_locked(r, d);
        // exact monic division
        std::vector<long> q(num.size() - den.size() + 1, 0);
        for (long k = static_cast<long>(num.size()) - 1; k >= static_cast<long>(den.size()) - 1; --k) {
            long c = num[k];
            long shift = k - (static_cast<long>(den.size()) - 1);
            q[shift] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        }
        num = q;
    }
    return r.polys.emplace(n, num).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(long n) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    return poly_locked(r, n);
}

namespace detail {

const FieldTable& field_table(long n) {
    thread_local std::unordered_map<long, const FieldTable*> cache;
    auto hit = cache.find(n);
    if (hit != cache.end()) return *hit->second;

    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.tables.find(n);
    if (it == r.tables.end()) {
        auto t = std::make_unique<FieldTable>();
        t->n = n;
        const std::vector<long>& p = poly_locked(r, n);
        t->phi = static_cast<int>(p.size()) - 1;
        const int phi = t->phi;
        const long size = std::max<long>(n, 2L * phi - 1);
        std::vector<long> cur(phi, 0);
        cur[0] = 1;
        for (long k = 0; k < size; ++k) {
            t->xpow.push_back(cur);
            // multiply by x, fold the top coefficient using monic Phi_n
            long top = cur[phi - 1];
            for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (int i = 0; i < phi; ++i) cur[i] -= top * p[i];
        }
        it = r.tables.emplace(n, std::move(t)).first;
    }
    cache.emplace(n, it->second.get());
    return *it->second;
}

void reduce_into(const FieldTable& t, std::vector<mpq_class>& raw, std::vector<mpq_class>& out) {
    const int phi = t.phi;
    out.assign(phi, 0);
    for (int i = 0; i < phi && i < static_cast<int>(raw.size()); ++i) out[i] = raw[i];
    for (size_t k = phi; k < raw.size(); ++k) {
        if (sgn(raw[k]) == 0) continue;
        const std::vector<long>& row = t.xpow[k];
        for (int i = 0; i < phi; ++i) {
            if (row[i] == 0) continue;
            if (row[i] == 1)
                out[i] += raw[k];
            else if (row[i] == -1)
                out[i] -= raw[k];
            else
                out[i] += raw[k] * row[i];
        }
    }
}

}  // namespace detail

namespace {

std::vector<mpq_class> coerce_coeffs(long from, const std::vector<mpq_class>& c, long to) {
    if (from == to) return c;
    const detail::FieldTable& t = detail::field_table(to);
    std::vector<mpq_class> out(t.phi, 0);
    const long step = to / from;
    for (size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        const std::vector<long>& row = t.xpow[(static_cast<long>(i) * step) % to];
        for (int j = 0; j < t.phi; ++j) {
            if (row[j] == 0) continue;
            if (row[j] == 1)
                out[j] += c[i];
            else if (row[j] == -1)
                out[j] -= c[i];
            else
                out[j] += c[i] * row[j];
        }
    }
    return out;
}

// solves A y = b over Q; A given column-wise. Returns nullopt when inconsistent.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> cols,
                                                     std::vector<mpq_class> b) {
    const size_t rows = b.size();
    const size_t ncols = cols.size();
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(ncols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
        m[i][ncols] = b[i];
    }
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c];
            for (size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (sgn(m[i][ncols]) != 0) return std::nullopt;
    std::vector<mpq_class> y(ncols, 0);
    for (size_t k = 0; k < pivcol.size(); ++k) y[pivcol[k]] = m[k][ncols];
    return y;
}

}  // namespace

CycNum::CycNum() : n_(1), c_{0} {}
CycNum::CycNum(long v) : n_(1), c_{mpq_class(v)} {}
CycNum::CycNum(const mpq_class& q) : n_(1), c_{q} {}
CycNum::CycNum(long n, std::vector<mpq_class> c, bool) : n_(n), c_(std::move(c)) {}

CycNum CycNum::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return CycNum(q);
}

CycNum CycNum::from_coeffs(long conductor, std::vector<mpq_class> coeffs) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    for (auto& q : coeffs) q.canonicalize();
    if (conductor % 4 == 2) {
        // zeta_N = -zeta_M^((M+1)/2) with M = N/2 odd
        const long m = conductor / 2;
        const long e = (m + 1) / 2;
        CycNum acc;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (sgn(coeffs[i]) == 0) continue;
            CycNum term = cyc_root(m, e * static_cast<long>(i)) * CycNum(coeffs[i]);
            acc += (i % 2 == 1) ? -term : term;
        }
        return acc;
    }
    const detail::FieldTable& t = detail::field_table(conductor);
    std::vector<mpq_class> out;
    if (static_cast<int>(coeffs.size()) <= t.phi) {
        out = std::move(coeffs);
        out.resize(t.phi, 0);
    } else if (static_cast<long>(coeffs.size()) <= static_cast<long>(t.xpow.size())) {
        detail::reduce_into(t, coeffs, out);
    } else {
        // wrap exponents modulo N first
        std::vector<mpq_class> wrapped(conductor, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) wrapped[i % conductor] += coeffs[i];
        detail::reduce_into(t, wrapped, out);
    }
    CycNum r(conductor, std::move(out), true);
    r.normalize_conductor();
    return r;
}

void CycNum::normalize_conductor() {
    if (n_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return;
    n_ = 1;
    c_.resize(1);
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CycNum::is_one() const { return n_ == 1 && c_[0] == 1; }

std::optional<mpq_class> CycNum::as_rational() const {
    if (n_ == 1) return c_[0];
    return std::nullopt;
}

CycNum CycNum::in_conductor(long m) const {
    if (m % n_ != 0) throw std::invalid_argument("target conductor must be a multiple");
    return CycNum(m, coerce_coeffs(n_, c_, m), true);
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.n_ == n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else if (o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    } else {
        const long l = std::lcm(n_, o.n_);
        std::vector<mpq_class> a = coerce_coeffs(n_, c_, l);
        std::vector<mpq_class> b = coerce_coeffs(o.n_, o.c_, l);
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        n_ = l;
        c_ = std::move(a);
    }
    normalize_conductor();
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.n_ == 1) {
        for (auto& q : c_) q *= o.c_[0];
        if (n_ != 1 && sgn(o.c_[0]) == 0) normalize_conductor();
        return *this;
    }
    if (n_ == 1) {
        mpq_class s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        if (sgn(s) == 0) normalize_conductor();
        return *this;
    }
    const long l = std::lcm(n_, o.n_);
    std::vector<mpq_class> a = coerce_coeffs(n_, c_, l);
    std::vector<mpq_class> b = coerce_coeffs(o.n_, o.c_, l);
    const detail::FieldTable& t = detail::field_table(l);
    std::vector<mpq_class> raw(2 * t.phi - 1, 0);
    for (int i = 0; i < t.phi; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; j < t.phi; ++j) {
            if (sgn(b[j]) == 0) continue;
            raw[i + j] += a[i] * b[j];
        }
    }
    n_ = l;
    detail::reduce_into(t, raw, c_);
    normalize_conductor();
    return *this;
}

CycNum CycNum::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (n_ == 1) return CycNum(mpq_class(1 / c_[0]));
    const detail::FieldTable& t = detail::field_table(n_);
    // column j holds the coefficients of this * x^j
    std::vector<std::vector<mpq_class>> cols;
    for (int j = 0; j < t.phi; ++j) {
        std::vector<mpq_class> raw(2 * t.phi - 1, 0);
        for (int i = 0; i < t.phi; ++i) raw[i + j] = c_[i];
        std::vector<mpq_class> col;
        detail::reduce_into(t, raw, col);
        cols.push_back(std::move(col));
    }
    std::vector<mpq_class> e(t.phi, 0);
    e[0] = 1;
    auto y = solve_rational(std::move(cols), std::move(e));
    if (!y) throw DivisionByZero("inverse does not exist");
    CycNum r(n_, std::move(*y), true);
    r.normalize_conductor();
    return r;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inv(); }

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum result(1);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const long l = std::lcm(a.n_, b.n_);
    return coerce_coeffs(a.n_, a.c_, l) == coerce_coeffs(b.n_, b.c_, l);
}

CycNum CycNum::minimized() const {
    if (n_ == 1) return *this;
    for (long d = 3; d < n_; ++d) {
        if (n_ % d != 0 || d % 4 == 2) continue;
        const long phid = euler_phi(d);
        std::vector<std::vector<mpq_class>> cols;
        for (long i = 0; i < phid; ++i) {
            std::vector<mpq_class> unit(phid, 0);
            unit[i] = 1;
            cols.push_back(coerce_coeffs(d, unit, n_));
        }
        auto y = solve_rational(std::move(cols), c_);
        if (y) return CycNum(d, std::move(*y), true);
    }
    return *this;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string CycNum::str() const {
    const CycNum m = minimized();
    if (m.n_ == 1) return rational_str(m.c_[0]);
    const std::string z = "ζ" + std::to_string(m.n_);
    std::string out;
    for (size_t i = 0; i < m.c_.size(); ++i) {
        const mpq_class& q = m.c_[i];
        if (sgn(q) == 0) continue;
        std::string term;
        const bool neg = sgn(q) < 0;
        const mpq_class absq = abs(q);
        if (i == 0) {
            term = rational_str(absq);
        } else {
            const std::string power = (i == 1) ? z : z + "^" + std::to_string(i);
            term = (absq == 1) ? power : rational_str(absq) + "·" + power;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

CycNum cyc_root(long n, long k) {
    if (n < 1) throw std::invalid_argument("cyc_root: N must be positive");
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return CycNum(1);
    if (n == 2) return CycNum(-1);
    const long g = std::gcd(n, k);
    if (g > 1) return cyc_root(n / g, k / g);
    if (n % 4 == 2) {
        const long m = n / 2;
        // zeta_n = -zeta_m^((m+1)/2)
        CycNum r = cyc_root(m, k * ((m + 1) / 2));
        return (k % 2 == 1) ? -r : r;
    }
    std::vector<mpq_class> raw(k + 1, 0);
    raw[k] = 1;
    return CycNum::from_coeffs(n, std::move(raw));
}

std::optional<long> order_of(const CycNum& z) {
    if (z.is_zero()) return std::nullopt;
    const long bound = 2 * z.conductor();
    CycNum p = z;
    for (long t = 1; t <= bound; ++t) {
        if (p.is_one()) return t;
        p *= z;
    }
    return std::nullopt;
}

namespace {

std::optional<mpz_class> int_root(const mpz_class& v, long n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
    return r;
}

std::optional<CycNum> rational_root(const mpq_class& s, long n) {
    const bool neg = sgn(s) < 0;
    const mpq_class a = abs(s);
    auto num = int_root(a.get_num(), n);
    auto den = int_root(a.get_den(), n);
    if (!num || !den) return std::nullopt;
    CycNum r(mpq_class(*num, *den));
    if (!neg) return r;
    if (n % 2 == 1) return -r;
    return r * cyc_root(2 * n, 1);
}

}  // namespace

std::optional<CycNum> nth_root(const CycNum& z, long n) {
    if (n < 1) throw std::invalid_argument("nth_root: n must be positive");
    if (z.is_zero()) return CycNum();
    const long nz = z.conductor();
    const long l = (nz % 2 == 0) ? nz : 2 * nz;
    for (long k = 0; k < l; ++k) {
        CycNum s = z * cyc_root(l, -k);
        auto q = s.as_rational();
        if (!q) continue;
        auto r = rational_root(*q, n);
        if (!r) continue;
        return *r * cyc_root(l * n, k);
    }
    return std::nullopt;
}

}  // namespace hopfact
