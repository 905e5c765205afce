#include <random>

#include "hopfact/classify.hpp"

namespace hopfact {

namespace {

CycNum trace(const ExactMatrix& m) {
    CycNum t;
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// lambda with U ~ lambda V up to similarity, filtered by traces of powers and the determinant
std::vector<CycNum> lambda_candidates(const ExactMatrix& u, const ExactMatrix& v, long order) {
    auto tu = u.pow(order).scalar_value(), tv = v.pow(order).scalar_value();
    if (!tu || !tv || tv->is_zero()) return {};
    auto rho = nth_root(*tu / *tv, order);
    if (!rho) return {};
    std::vector<ExactMatrix> up{ExactMatrix::identity(u.rows())}, vp{ExactMatrix::identity(v.rows())};
    for (long k = 1; k < order; ++k) {
        up.push_back(mul(up.back(), u));
        vp.push_back(mul(vp.back(), v));
    }
    const CycNum du = det(u), dv = det(v);
    std::vector<CycNum> out;
    for (long j = 0; j < order; ++j) {
        const CycNum lam = *rho * cyc_root(order, j);
        bool ok = du == lam.pow(static_cast<long>(u.rows())) * dv;
        for (long k = 1; k < order && ok; ++k) ok = trace(up[k]) == lam.pow(k) * trace(vp[k]);
        if (ok) out.push_back(lam);
    }
    return out;
}

// rows of kron(u, I) - s kron(I, v^T): vec(uC - s C v), row-major
void append_rows(std::vector<std::vector<CycNum>>& rows, const ExactMatrix& u, const ExactMatrix& v, const CycNum& s) {
    const ExactMatrix id = ExactMatrix::identity(u.rows());
    const ExactMatrix op = kron(u, id) - s * kron(id, v.transpose());
    for (size_t i = 0; i < op.rows(); ++i) {
        std::vector<CycNum> row(op.data().begin() + static_cast<long>(i * op.cols()),
                                op.data().begin() + static_cast<long>((i + 1) * op.cols()));
        rows.push_back(std::move(row));
    }
}

std::vector<ExactMatrix> intertwiners(const InnerActionMap& a, const InnerActionMap& b, const std::vector<CycNum>& lam) {
    std::vector<std::vector<CycNum>> rows;
    for (size_t l = 0; l < a.ug.size(); ++l) append_rows(rows, a.ug[l], b.ug[l], lam[l]);
    for (size_t i = 0; i < a.ux.size(); ++i) append_rows(rows, a.ux[i], b.ux[i], CycNum(1));
    const size_t m = a.m;
    ExactMatrix sys(rows.size(), m * m);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < m * m; ++j) sys(i, j) = rows[i][j];
    std::vector<ExactMatrix> out;
    for (const auto& v : nullspace(sys)) out.push_back(unvec(v, m, m));
    return out;
}

ExactMatrix combine(const std::vector<ExactMatrix>& basis, const std::vector<long>& t) {
    ExactMatrix c(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i)
        if (t[i]) c += CycNum(t[i]) * basis[i];
    return c;
}

struct Search {
    std::optional<ExactMatrix> found;
    bool probabilistic = false;
};

// an invertible element of span(basis), or a certificate that det vanishes on it
Search find_invertible(const std::vector<ExactMatrix>& basis, size_t m) {
    Search s;
    for (const auto& c : basis)
        if (!det(c).is_zero()) {
            s.found = c;
            return s;
        }
    const size_t d = basis.size();
    if (d < 2) return s;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> dist(1, 2000);
    auto sample = [&]() {
        std::vector<long> t(d);
        for (auto& x : t) x = dist(rng);
        return combine(basis, t);
    };
    for (int k = 0; k < 4; ++k) {
        ExactMatrix c = sample();
        if (!det(c).is_zero()) {
            s.found = std::move(c);
            return s;
        }
    }
    // det(sum t_i C_i) is homogeneous of degree m, so it vanishes identically iff it vanishes on the
    // lattice {t in N^d : sum t_i = m}, which is unisolvent for degree-m polynomials on that hyperplane
    double points = 1;
    for (size_t i = 1; i < d; ++i) points = points * static_cast<double>(m + i) / static_cast<double>(i);
    if (points <= 20000) {
        std::vector<long> t(d, 0);
        t[0] = static_cast<long>(m);
        for (;;) {
            ExactMatrix c = combine(basis, t);
            if (!det(c).is_zero()) {
                s.found = std::move(c);
                return s;
            }
            // next composition of m into d parts
            size_t p = 0;
            while (p + 1 < d && t[p] == 0) ++p;
            if (p + 1 == d) break;
            const long carry = t[p] - 1;
            t[p] = 0;
            t[p + 1] += 1;
            t[0] = carry;
        }
        return s;
    }
    for (int k = 0; k < 8; ++k) {
        ExactMatrix c = sample();
        if (!det(c).is_zero()) {
            s.found = std::move(c);
            return s;
        }
    }
    s.probabilistic = true;
    return s;
}

bool same_shape(const InnerActionMap& a, const InnerActionMap& b) {
    return a.pres.family == b.pres.family && a.pres.n == b.pres.n && a.pres.root == b.pres.root &&
           a.pres.datum.group == b.pres.datum.group && a.pres.datum.a == b.pres.datum.a &&
           a.pres.datum.chi == b.pres.datum.chi && a.m == b.m && a.ug.size() == b.ug.size() &&
           a.ux.size() == b.ux.size();
}

CycNum lambda_of(const GrpElt& g, const std::vector<CycNum>& lam) {
    CycNum r(1);
    for (size_t l = 0; l < lam.size(); ++l) r *= lam[l].pow(g[l]);
    return r;
}

CycNum shift_of(const InnerActionMap& a, size_t i) {
    auto it = a.extracted.shift.find(i);
    return it == a.extracted.shift.end() ? CycNum() : it->second;
}

}  // namespace

IsoVerdict iso_test(const InnerActionMap& a, const InnerActionMap& b) {
    IsoVerdict v;
    if (!same_shape(a, b)) {
        v.obstruction = "different presentations or matrix sizes";
        return v;
    }
    InnerActionMap na, nb;
    try {
        na = normalize(a);
        nb = normalize(b);
    } catch (const Error& e) {
        v.decided = false;
        v.obstruction = std::string("normalization failed: ") + e.what();
        return v;
    }
    const AbGroup& g = a.pres.datum.group;
    std::vector<std::vector<CycNum>> cands;
    for (size_t l = 0; l < na.ug.size(); ++l) {
        cands.push_back(lambda_candidates(na.ug[l], nb.ug[l], g.factors()[l]));
        if (cands.back().empty()) {
            v.obstruction = "no scalar lambda makes u(" + a.pres.group_names[l] + ") similar to lambda v(" +
                            a.pres.group_names[l] + ")";
            return v;
        }
    }
    // an invertible C: v -> u gives Hom_lambda(v, u) = C End(v), so all three dimensions agree
    const size_t end_a = intertwiners(na, na, std::vector<CycNum>(na.ug.size(), CycNum(1))).size();
    const size_t end_b = intertwiners(nb, nb, std::vector<CycNum>(nb.ug.size(), CycNum(1))).size();
    if (end_a != end_b) {
        v.obstruction = "commutant dimensions differ (" + std::to_string(end_a) + " vs " + std::to_string(end_b) + ")";
        return v;
    }
    size_t tuples = 0, empty_spaces = 0, wrong_dim = 0, singular_spaces = 0;
    bool sampled = false;
    std::vector<size_t> idx(cands.size(), 0);
    for (;;) {
        ++tuples;
        std::vector<CycNum> lam;
        for (size_t l = 0; l < cands.size(); ++l) lam.push_back(cands[l][idx[l]]);
        const auto basis = intertwiners(na, nb, lam);
        if (basis.empty()) {
            ++empty_spaces;
        } else if (basis.size() != end_a) {
            ++wrong_dim;
        } else {
            Search s = find_invertible(basis, a.m);
            if (s.found) {
                IsoWitness w{*s.found, lam, {}};
                for (size_t i = 0; i < a.ux.size(); ++i)
                    w.mu.push_back(shift_of(nb, i) / lambda_of(a.pres.datum.a[i], lam) - shift_of(na, i));
                v.isomorphic = true;
                v.witness = std::move(w);
                return v;
            }
            ++singular_spaces;
            sampled = sampled || s.probabilistic;
        }
        size_t p = 0;
        while (p < idx.size() && ++idx[p] == cands[p].size()) idx[p++] = 0;
        if (p == idx.size()) break;
    }
    v.probabilistic = sampled;
    v.obstruction = std::to_string(tuples) + " lambda tuples: " + std::to_string(empty_spaces) +
                    " with zero intertwiner space, " + std::to_string(wrong_dim) +
                    " with dimension unlike the commutant, " + std::to_string(singular_spaces) + " with only singular ones" +
                    (sampled ? " (singularity sampled, not certified)" : "");
    return v;
}

bool replay_witness(const InnerActionMap& a, const InnerActionMap& b, const IsoWitness& w) {
    if (!same_shape(a, b) || w.lambda.size() != a.ug.size() || w.mu.size() != a.ux.size()) return false;
    auto ci = try_inverse(w.c);
    if (!ci) return false;
    auto conj = [&](const ExactMatrix& m) { return mul(mul(w.c, m), *ci); };
    for (size_t l = 0; l < a.ug.size(); ++l)
        if (a.ug[l] != w.lambda[l] * conj(b.ug[l])) return false;
    for (size_t i = 0; i < a.ux.size(); ++i)
        if (a.ux[i] != conj(b.ux[i]) + w.mu[i] * a.u_group(a.pres.datum.a[i])) return false;
    std::vector<Word> letters;
    for (size_t l = 0; l < a.ug.size(); ++l) letters.push_back({Letter{Letter::Kind::group, l}});
    for (size_t i = 0; i < a.ux.size(); ++i) letters.push_back({Letter{Letter::Kind::skew, i}});
    for (size_t r = 0; r < a.m; ++r)
        for (size_t c = 0; c < a.m; ++c) {
            const ExactMatrix e = ExactMatrix::unit(a.m, r, c);
            for (const auto& word : letters)
                if (act(a, word, conj(e)) != conj(act(b, word, e))) return false;
        }
    return true;
}

}  // namespace hopfact
