#include <algorithm>
#include <array>

#include "hopfact/classify.hpp"

namespace hopfact {

namespace {

void place(ExactMatrix& m, size_t r0, size_t c0, const ExactMatrix& b) {
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

std::string lstr(long v) { return std::to_string(v); }

long mod(long a, long n) { return ((a % n) + n) % n; }

// smallest l in [1, n) with base^l = target
long log_of(const CycNum& base, const CycNum& target, long n) {
    CycNum p = base;
    for (long l = 1; l < n; ++l, p *= base)
        if (p == target) return l;
    throw NoSolution("no power of " + base.str() + " equals " + target.str());
}

CatalogEntry entry(std::string family, std::string label, std::vector<std::pair<std::string, std::string>> params,
                   InnerActionMap action, std::string source, bool skew_zero = false) {
    return CatalogEntry{std::move(family), std::move(label), std::move(params), std::move(action), std::move(source),
                        skew_zero};
}

}  // namespace

std::vector<CatalogEntry> catalog_taft_m3(long n, const CycNum& omega, const std::vector<CycNum>& gammas) {
    if (n < 3) throw BadOrder("Taft actions on M_3 need n >= 3");
    const HopfPresentation p = taft(n, omega);
    if (!gammas.empty() && n != 3) throw ConditionFailed("the gamma family exists only for n = 3");

    auto q1 = [&](long k) { return ExactMatrix::diag({CycNum(1), omega.pow(k), omega.pow(k)}); };
    auto q2 = [&](long a, long b) { return ExactMatrix::diag({CycNum(1), omega.pow(a), omega.pow(b)}); };
    auto e = [](size_t i, size_t j) { return ExactMatrix::unit(3, i - 1, j - 1); };

    std::vector<CatalogEntry> out;
    const auto ns = std::make_pair(std::string("n"), lstr(n));
    out.push_back(entry("taft_m3", "Q(1),P(1)", {ns, {"Q", "Q(1)"}, {"P", "E31"}}, make_action(p, {q1(1)}, {e(3, 1)}),
                        "taft_m3 case 1, k = 1"));
    out.push_back(entry("taft_m3", "Q(n-1),P(2)", {ns, {"Q", "Q(" + lstr(n - 1) + ")"}, {"P", "E13"}},
                        make_action(p, {q1(n - 1)}, {e(1, 3)}), "taft_m3 case 1, k = n-1"));

    // P = sum of E_ij; every term must have degree d_i - d_j = 1 for Q(p,q) = diag(1, w^p, w^q)
    using Terms = std::vector<std::array<size_t, 2>>;
    const std::vector<std::pair<std::string, Terms>> p3 = {
        {"E21", {{{2, 1}}}},           {"E32", {{{3, 2}}}},           {"E13", {{{1, 3}}}},
        {"E21+E32", {{{2, 1}}, {{3, 2}}}}, {"E32+E13", {{{3, 2}}, {{1, 3}}}}, {"E13+E21", {{{1, 3}}, {{2, 1}}}},
    };
    const std::array<std::pair<long, long>, 3> qs = {{{1, n - 1}, {n - 2, n - 1}, {1, 2}}};
    for (size_t i = 0; i < p3.size(); ++i) {
        const auto& [name, terms] = p3[i];
        std::optional<std::pair<long, long>> pick;
        for (const auto& [a, b] : qs) {
            const std::array<long, 3> d = {0, a, b};
            const bool ok = std::all_of(terms.begin(), terms.end(), [&](const auto& t) {
                return mod(d[t[0] - 1] - d[t[1] - 1], n) == 1;
            });
            if (ok) {
                pick = std::make_pair(a, b);
                break;
            }
        }
        if (!pick) throw ConditionFailed("no diagonal Q puts " + name + " in degree 1");
        ExactMatrix px(3, 3);
        for (const auto& t : terms) px += e(t[0], t[1]);
        const std::string qn = "Q(" + lstr(pick->first) + "," + lstr(pick->second) + ")";
        std::string src = "taft_m3 case 2, P(3)_" + lstr(static_cast<long>(i + 1));
        if (*pick != std::make_pair(1L, n - 1)) src += ", realized with " + qn + " since Q(1,n-1) puts it off degree 1";
        out.push_back(entry("taft_m3", qn + ",P(3)_" + lstr(static_cast<long>(i + 1)), {ns, {"Q", qn}, {"P", name}},
                            make_action(p, {q2(pick->first, pick->second)}, {px}), src));
    }
    for (const auto& g : gammas) {
        if (g.is_zero()) throw ConditionFailed("gamma must be nonzero");
        ExactMatrix px = e(2, 1) + e(3, 2) + g * e(1, 3);
        out.push_back(entry("taft_m3", "Q(1,2),P(3)_gamma", {ns, {"Q", "Q(1,2)"}, {"gamma", g.str()}},
                            make_action(p, {q2(1, 2)}, {px}), "taft_m3 case 2, all three entries nonzero"));
    }
    return out;
}

CatalogEntry catalog_taft_nonsingular(long n, const CycNum& omega, long m, const CycNum& alpha) {
    if (n < 2 || m < 1 || m % n != 0)
        throw NotDivisible("matrix size " + lstr(m) + " is not a multiple of n = " + lstr(n));
    if (alpha.is_zero()) throw ConditionFailed("alpha must be nonzero");
    const HopfPresentation p = taft(n, omega);
    const size_t d = static_cast<size_t>(m / n);
    const size_t sm = static_cast<size_t>(m);
    const ExactMatrix id = ExactMatrix::identity(d);
    ExactMatrix ug(sm, sm), ux(sm, sm);
    for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
        place(ug, j * d, j * d, omega.pow(static_cast<long>(j)) * id);
        if (j + 1 < static_cast<size_t>(n)) place(ux, (j + 1) * d, j * d, id);
    }
    place(ux, 0, (n - 1) * d, alpha * id);
    return entry("taft_nonsingular", "n=" + lstr(n) + ",m=" + lstr(m) + ",alpha=" + alpha.str(),
                 {{"n", lstr(n)}, {"m", lstr(m)}, {"d", lstr(m / n)}, {"alpha", alpha.str()}},
                 make_action(p, {ug}, {ux}), "Taft algebra, nonsingular u(x), block cyclic form");
}

CatalogEntry catalog_rank1_division(const HopfPresentation& p, const AbGroup& support, const Bicharacter& beta,
                                    const CycNum& alpha, std::vector<GrpElt> embedding) {
    const Datum& d = p.datum;
    if (d.rank() != 1) throw ShapeMismatch("rank-one catalog needs a single skew-primitive");
    const AbGroup& g = d.group;
    const AbGroup dual(g.factors());
    if (embedding.empty()) {
        if (support != dual) throw ShapeMismatch("without an embedding the support must be the full dual of G");
        for (size_t j = 0; j < support.rank(); ++j) embedding.push_back(dual.gen(j));
    }
    if (embedding.size() != support.rank()) throw ShapeMismatch("one embedding image per support generator");
    for (const auto& e : embedding)
        if (e.parent() != dual) throw ParentMismatch("embedding images must lie in the dual of G");

    auto image = [&](const GrpElt& t) {
        GrpElt r = dual.identity();
        for (size_t j = 0; j < t.exps().size(); ++j) r = r * embedding[j].pow(t[j]);
        return r;
    };
    std::vector<std::vector<CycNum>> tau_values(support.rank());
    for (size_t j = 0; j < support.rank(); ++j) {
        const Character tau = Character::from_dual(g, embedding[j]);
        for (size_t l = 0; l < g.rank(); ++l) tau_values[j].push_back(tau(g.gen(l)));
    }
    const std::vector<GrpElt> f = solve_f(beta, g, tau_values);
    const DivisionData dd = division_data(support, beta);

    std::vector<ExactMatrix> ug;
    for (const auto& t : f) ug.push_back(dd.X(t));
    GrpElt fa = support.identity();
    for (size_t l = 0; l < g.rank(); ++l) fa = fa * f[l].pow(d.a[0][l]);

    std::optional<GrpElt> chi_t;
    const GrpElt chi = d.chi[0].as_dual();
    for (const auto& t : support.elements())
        if (image(t) == chi) {
            chi_t = t;
            break;
        }

    std::vector<std::pair<std::string, std::string>> params = {{"alpha", alpha.str()}, {"mu", lstr(d.mu[0])}};
    for (size_t l = 0; l < g.rank(); ++l) params.emplace_back("f(" + p.group_names[l] + ")", to_string(f[l]));
    const size_t m = dd.grading.m;
    if (!chi_t) {
        params.emplace_back("chi", "outside support");
        return entry("rank1_division", "chi outside support", params,
                     make_action(p, ug, {ExactMatrix(m, m)}), "rank-one datum, division grading, chi not in T", true);
    }
    const long big_n = d.N(0);
    if (d.mu[0] == 0) {
        if (chi_t->pow(big_n) != fa.pow(big_n) && !alpha.is_zero())
            throw ConditionFailed("mu = 0 needs chi^N = f(a)^N in the support");
    } else if (!fa.pow(big_n).is_identity()) {
        // u(x)^N = I + sigma u(a)^N with u(a)^N of nontrivial degree forces sigma = 0 and alpha^N X_chi^N = I
        auto c = dd.X(*chi_t).pow(big_n).scalar_value();
        if (!c || !(alpha.pow(big_n) * *c).is_one())
            throw ConditionFailed("mu = 1 needs alpha^N X_chi^N = I");
    }
    params.emplace_back("chi", to_string(*chi_t));
    return entry("rank1_division", "alpha=" + alpha.str(), params, make_action(p, ug, {alpha * dd.X(*chi_t)}),
                 "rank-one datum, division grading, u(x) = alpha X_chi", alpha.is_zero());
}

CatalogEntry catalog_p3(long p_, const CycNum& omega, long ell, const CycNum& alpha) {
    const HopfPresentation p = p3_example(p_, omega);
    if (ell < 1 || ell >= p_) throw ConditionFailed("l must lie in [1, p)");
    // tau^l = w
    long inv = 1;
    while (mod(inv * ell, p_) != 1) ++inv;
    const CycNum tau = omega.pow(inv);
    auto [c, s] = clock_shift(p_, tau);
    return entry("p3", "l=" + lstr(ell) + ",alpha=" + alpha.str(),
                 {{"p", lstr(p_)}, {"l", lstr(ell)}, {"tau", tau.str()}, {"alpha", alpha.str()}},
                 make_action(p, {s.pow(ell), c.pow(-ell)}, {alpha * c}),
                 "p^3 example, division grading: u(g) = X_nu^l, u(h) = X_mu^-l, u(x) = alpha X_mu", alpha.is_zero());
}

CatalogEntry catalog_dd_division(long n, const CycNum& pi, const CycNum& gamma, const CycNum& delta) {
    if (order_of(pi) != n) throw NotPrimitiveRoot("pi must be a primitive n-th root of unity");
    const CycNum w = cyc_root(n, 1);
    if (gamma * delta != CycNum(1) / (CycNum(1) - w))
        throw ConstraintViolated("gamma delta must equal 1/(1 - w), got " + (gamma * delta).str());
    const long ell = log_of(pi, w, n + 1);
    auto [c, s] = clock_shift(n, pi);
    const ExactMatrix cs = mul(c, s);
    return entry("dd_division", "n=" + lstr(n) + ",pi=" + pi.str(),
                 {{"n", lstr(n)}, {"pi", pi.str()}, {"l", lstr(ell)}, {"gamma", gamma.str()}, {"delta", delta.str()}},
                 make_action(dd_taft(n, w), {s.pow(-ell), c.pow(ell)}, {gamma * cs, delta * inverse(cs)}),
                 "D(T_n) division action: u(g) = X_nu^-l, u(G) = X_mu^l, u(x) = gamma X_chi^-1, u(X) = delta X_chi");
}

namespace {

const ExactMatrix& pauli(char which) {
    static const ExactMatrix a = ExactMatrix::from_rows({{1, 0}, {0, -1}});
    static const ExactMatrix b = ExactMatrix::from_rows({{0, 1}, {1, 0}});
    static const ExactMatrix c = ExactMatrix::from_rows({{0, 1}, {-1, 0}});
    return which == 'A' ? a : which == 'B' ? b : c;
}

InnerActionMap dt2_action(const ExactMatrix& pm, const ExactMatrix& qm) {
    const size_t k = pm.rows();
    const ExactMatrix anti = mul(pm, qm) + mul(qm, pm);
    if (anti != ExactMatrix::scalar(k, CycNum(-1))) throw ShapeViolation("PQ + QP != -I_k");
    const ExactMatrix id = ExactMatrix::identity(k);
    return make_action(dd_taft(2, CycNum(-1)), {kron(id, pauli('A')), kron(id, pauli('B'))},
                       {kron(pm, pauli('C')), kron(qm, pauli('C'))});
}

}  // namespace

CatalogEntry catalog_dt2_mixed(const Dt2Nilpotent& v) {
    if (v.r < 1) throw ShapeViolation("r must be positive");
    const size_t r = static_cast<size_t>(v.r);
    const ExactMatrix id = ExactMatrix::identity(r);
    ExactMatrix pm(2 * r, 2 * r), qm(2 * r, 2 * r);
    place(pm, 0, r, id);
    place(qm, 0, r, v.tau * id);
    place(qm, r, 0, -id);
    return entry("dt2_mixed", "nilpotent r=" + lstr(v.r) + ",tau=" + v.tau.str(),
                 {{"variant", "nilpotent"}, {"r", lstr(v.r)}, {"tau", v.tau.str()}, {"k", lstr(2 * v.r)}},
                 dt2_action(pm, qm), "D(T_2) mixed action, u(x) nilpotent");
}

CatalogEntry catalog_dt2_mixed(const Dt2NonNilpotent& v) {
    if (v.r < 0 || v.s < 0 || v.r + v.s < 1) throw ShapeViolation("r, s must be nonnegative with r + s > 0");
    if (v.t < 0 || v.t > std::min(v.r, v.s)) throw ShapeViolation("t must lie in [0, min(r, s)]");
    if (v.xi.is_zero()) throw ShapeViolation("xi must be nonzero");
    const size_t r = static_cast<size_t>(v.r), s = static_cast<size_t>(v.s), t = static_cast<size_t>(v.t);
    const bool empty_xi = (s - t) == 0 || (r - t) == 0;
    if (!(empty_xi ? v.big_xi.rows() * v.big_xi.cols() == 0 : v.big_xi.rows() == s - t && v.big_xi.cols() == r - t))
        throw ShapeViolation("Xi must be (s-t) x (r-t)");
    const size_t k = r + s;
    ExactMatrix pm(k, k), mm(k, k);
    for (size_t i = 0; i < k; ++i) {
        pm(i, i) = i < r ? v.xi : -v.xi;
        mm(i, i) = i < r ? CycNum(1) : CycNum(-1);
    }
    // Y (r x s) = [[I_t, 0], [0, 0]] top right, Z (s x r) = [[0, 0], [0, Xi]] bottom left; YZ = ZY = 0
    for (size_t i = 0; i < t; ++i) mm(i, r + i) = 1;
    if (!empty_xi) place(mm, r + t, t, v.big_xi);
    const ExactMatrix qm = (CycNum(-1) / (CycNum(2) * v.xi)) * mm;
    return entry("dt2_mixed", "nonnilpotent r=" + lstr(v.r) + ",s=" + lstr(v.s) + ",t=" + lstr(v.t) + ",xi=" + v.xi.str(),
                 {{"variant", "nonnilpotent"},
                  {"r", lstr(v.r)},
                  {"s", lstr(v.s)},
                  {"t", lstr(v.t)},
                  {"xi", v.xi.str()},
                  {"Xi", v.big_xi.str()},
                  {"k", lstr(static_cast<long>(k))}},
                 dt2_action(pm, qm), "D(T_2) mixed action, u(x) nonsingular");
}

std::pair<ExactMatrix, ExactMatrix> dt2_factors(const CatalogEntry& e) {
    if (e.family != "dt2_mixed") throw SchemaError("not a dt2_mixed entry");
    const size_t k = e.action.m / 2;
    ExactMatrix pm(k, k), qm(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            pm(i, j) = e.action.ux[0](2 * i, 2 * j + 1);
            qm(i, j) = e.action.ux[1](2 * i, 2 * j + 1);
        }
    return {pm, qm};
}

CatalogEntry dd_elementary_X(long n, long r, std::pair<long, long> phi, const ExactMatrix& seed, const CycNum& lambda,
                             const CycNum& alpha) {
    if (n < 2 || r < 1) throw ShapeViolation("need n >= 2 and r >= 1");
    if (seed.rows() != static_cast<size_t>(r) || seed.cols() != static_cast<size_t>(r))
        throw ShapeViolation("seed must be r x r");
    if (alpha.is_zero()) throw ConditionFailed("alpha must be nonzero");
    const CycNum w = cyc_root(n, 1);
    const size_t sr = static_cast<size_t>(r), sn = static_cast<size_t>(n), m = sr * sn;
    const ExactMatrix id = ExactMatrix::identity(sr);
    const CycNum pg = w.pow(phi.first), pG = w.pow(phi.second);

    ExactMatrix ug(m, m), uG(m, m), ux(m, m), uX(m, m);
    std::vector<CycNum> rho(sn);
    for (size_t k = 0; k < sn; ++k) {
        const long kk = static_cast<long>(k);
        place(ug, k * sr, k * sr, pg * w.pow(-kk) * id);
        place(uG, k * sr, k * sr, pG * w.pow(-kk) * id);
        if (k + 1 < sn) place(ux, (k + 1) * sr, k * sr, id);
        rho[k] = CycNum(1) - lambda * w.pow(-2 * kk) * pg * pG;
    }
    place(ux, 0, (sn - 1) * sr, alpha * id);

    // u(x)u(X) - w u(X)u(x) = diag(rho_k): v_{n-1} = w alpha v_0 + rho_{n-1}, v_k = w v_{k+1} + rho_k
    std::vector<ExactMatrix> v(sn);
    v[0] = seed;
    v[sn - 1] = w * alpha * seed + rho[sn - 1] * id;
    for (size_t k = sn - 1; k-- > 1;) v[k] = w * v[k + 1] + rho[k] * id;
    place(uX, (sn - 1) * sr, 0, v[0]);
    for (size_t k = 1; k < sn; ++k) place(uX, (k - 1) * sr, k * sr, v[k]);

    // the diagonal closes automatically; X^n = 0 needs u(X)^n scalar
    const ExactMatrix xn = uX.pow(n);
    const ExactMatrix residual = xn - ExactMatrix::scalar(m, xn(0, 0));
    if (!residual.is_zero()) throw RecurrenceInconsistent("u(X)^n is not scalar for this seed", residual);

    return entry("dd_elementary", "n=" + lstr(n) + ",r=" + lstr(r),
                 {{"n", lstr(n)},
                  {"r", lstr(r)},
                  {"phi(g)", pg.str()},
                  {"phi(G)", pG.str()},
                  {"seed", seed.str()},
                  {"lambda", lambda.str()},
                  {"alpha", alpha.str()}},
                 make_action(dd_taft(n, w), {ug, uG}, {ux, uX}),
                 "D(T_n) elementary action, u(X) from the block recurrence");
}

CatalogEntry uqsl2_m2(long n, const CycNum& lam, long k, const CycNum& p_, bool allow_trivial) {
    if (n < 3 || n % 2 == 0) throw BadOrder("u_q(sl2) needs an odd n >= 3");
    if (lam.is_zero()) throw ConditionFailed("lambda must be nonzero");
    const CycNum w = cyc_root(n, 1);
    const HopfPresentation pres = uq_sl2(n, w);
    const long kk = mod(k, n);
    const ExactMatrix ua = lam * ExactMatrix::diag({CycNum(1), w.pow(kk)});
    std::vector<std::pair<std::string, std::string>> params = {
        {"n", lstr(n)}, {"lambda", lam.str()}, {"k", lstr(kk)}};
    if (kk != 2 && kk != n - 2) {
        if (!allow_trivial) throw TrivialSkewPart("x and y act trivially unless k = 2 or n - k = 2");
        // with x, y acting as 0 the relation xy - yx = a - a^-1 needs u(a)^2 scalar
        if (!mul(ua, ua).scalar_value())
            throw ConditionFailed("x, y acting as 0 leaves a - a^-1 acting nontrivially unless k = 0");
        return entry("uqsl2_m2", "k=" + lstr(kk) + " group only", params,
                     make_action_named(pres, {{"a", ua}}), "u_q(sl2) on M_2, purely a group action", true);
    }
    if (p_.is_zero()) throw ConditionFailed("p = 0 would force pq = 0, but pq is nonzero");
    const CycNum w2 = w.pow(2), wm2 = w.pow(-2);
    CycNum pq, tau;
    ExactMatrix ux, uy;
    if (kk == 2) {
        pq = lam * (w2 - CycNum(1));
        tau = lam * lam * w2;
        ux = p_ * ExactMatrix::unit(2, 1, 0);
        uy = (pq / p_) * ExactMatrix::unit(2, 0, 1);
    } else {
        pq = lam * (w2 - wm2) / (CycNum(1) + w2);
        tau = lam * lam * (CycNum(1) + wm2) / (CycNum(1) + w2);
        ux = p_ * ExactMatrix::unit(2, 0, 1);
        uy = (pq / p_) * ExactMatrix::unit(2, 1, 0);
    }
    params.insert(params.end(), {{"p", p_.str()}, {"q", (pq / p_).str()}, {"pq", pq.str()}, {"tau", tau.str()}});
    return entry("uqsl2_m2", "k=" + lstr(kk) + ",p=" + p_.str(), params,
                 make_action_named(pres, {{"a", ua}, {"x", ux}, {"y", uy}}), "u_q(sl2) on M_2, diagonal u(a)");
}

CatalogEntry lift_uqsl2_to_dd(const CatalogEntry& e) {
    const InnerActionMap& a = e.action;
    if (a.pres.family != Family::uq_sl2) throw SchemaError("lift needs a u_q(sl2) entry");
    const long n = a.pres.n;
    const CycNum w = a.pres.root;
    const CycNum c = w - w.inv();
    const ExactMatrix ainv = inverse(a.ug[0]);
    // x -> y / (w - w^-1) and X -> -(w - w^-1) x a^-1, with x a^-1 the canonical x1
    InnerActionMap lifted = make_action(dd_taft(n, w.pow(-2)), {ainv, ainv}, {a.ux[1] * c.inv(), -c * a.ux[0]});
    auto params = e.params;
    params.emplace_back("lifted_from", e.label);
    return entry("dd_lift", "lift of " + e.label, params, std::move(lifted),
                 "D(T_n) action lifted from u_q(sl2): g, G -> a^-1", e.skew_zero);
}

}  // namespace hopfact
