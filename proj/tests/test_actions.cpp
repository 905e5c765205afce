#include <gtest/gtest.h>

#include "hopfact/actions.hpp"
#include "hopfact/errors.hpp"
#include "prop.hpp"

using namespace hopfact;

namespace {

ExactMatrix unit(size_t m, size_t i, size_t j) {
    ExactMatrix e(m, m);
    e(i, j) = 1;
    return e;
}

ExactMatrix diag(const std::vector<CycNum>& d) {
    ExactMatrix r(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
    return r;
}

// Taft T_3 on M_3: u(g) = diag(1, w, w^2) and u(x) = a E_21 + b E_32 + c E_13
InnerActionMap taft3(const CycNum& a, const CycNum& b, const CycNum& c) {
    const CycNum w = cyc_root(3, 1);
    const auto p = taft(3, w);
    ExactMatrix ux = a * unit(3, 1, 0) + b * unit(3, 2, 1) + c * unit(3, 0, 2);
    return make_action(p, {diag({1, w, w.pow(2)})}, {ux});
}

// p^3 example with p = 3 on M_3: g -> S, h -> C, x -> alpha C
InnerActionMap p3_division(const CycNum& alpha) {
    const CycNum w = cyc_root(3, 1);
    auto [c, s] = clock_shift(3, w);
    return make_action(p3_example(3, w), {s, c}, {alpha * c});
}

// u_q(sl2) with n = 3 on M_2 in its own generators
InnerActionMap uq_m2(const CycNum& p_) {
    const CycNum w = cyc_root(3, 1);
    const CycNum pq = (w.pow(2) - w) / (1 + w);
    return make_action_named(uq_sl2(3, w), {{"a", diag({1, w.pow(2)})}, {"x", p_ * unit(2, 1, 0)}, {"y", (pq / p_) * unit(2, 0, 1)}});
}

std::vector<ExactMatrix> matrix_units(size_t m) {
    std::vector<ExactMatrix> r;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) r.push_back(unit(m, i, j));
    return r;
}

// lambda_i(g): u(g)u(x_i)u(g)^-1 = chi_i(g)u(x_i) + lambda_i(g)u(a_i)
CycNum lambda_at(const InnerActionMap& a, size_t i, const GrpElt& g) {
    const ExactMatrix u = a.u_group(g);
    const ExactMatrix d = mul(mul(u, a.ux[i]), inverse(u)) - a.pres.datum.chi[i](g) * a.ux[i];
    if (d.is_zero()) return CycNum();
    auto l = d.multiple_of(a.u_group(a.pres.datum.a[i]));
    if (!l) throw std::runtime_error("not a multiple of u(a)");
    return *l;
}

}  // namespace

TEST(Act, GroupAndSkewOnIdentity) {
    const auto a = taft3(1, 1, 0);
    const ExactMatrix id = ExactMatrix::identity(3);
    EXPECT_EQ(act(a, "g", id), id);
    EXPECT_TRUE(act(a, "x", id).is_zero());
    EXPECT_TRUE(act(a, "g^2 x", id).is_zero());
}

TEST(Act, SkewMatchesDirectFormula) {
    const auto a = taft3(1, 2, 3);
    const ExactMatrix ug = a.ug[0], ux = a.ux[0];
    for (const auto& e : matrix_units(3)) {
        // x is (1,g)-primitive: x*A = u(x)A - u(g)Au(g)^-1 u(x)
        const ExactMatrix want = mul(ux, e) - mul(mul(mul(ug, e), inverse(ug)), ux);
        EXPECT_EQ(act(a, "x", e), want);
        EXPECT_EQ(act(a, "g x", e), mul(mul(ug, want), inverse(ug)));
        EXPECT_EQ(act(a, "x·x", e), act(a, "x", act(a, "x", e)));
    }
}

TEST(Act, TaftNilpotencyOnMatrixUnits) {
    for (const auto& a : {taft3(1, 1, 0), taft3(2, 1, 5)})
        for (const auto& e : matrix_units(3)) EXPECT_TRUE(act(a, "x^3", e).is_zero());
}

TEST(Act, ParseErrors) {
    const auto a = taft3(1, 1, 0);
    EXPECT_THROW(parse_word(a.pres, "z"), UnknownGenerator);
    EXPECT_THROW(parse_word(a.pres, "x^y"), UnknownGenerator);
    EXPECT_EQ(parse_word(a.pres, "g*x^2").size(), 3u);
    EXPECT_TRUE(parse_word(a.pres, "").empty());
    EXPECT_THROW(act(a, "x", ExactMatrix::identity(2)), ShapeMismatch);
}

TEST(Normalize, RemovesShiftAlongGroupLike) {
    const auto base = taft3(1, 1, 0);
    auto shifted = base;
    shifted.ux[0] = shifted.ux[0] + CycNum(5) * base.ug[0];
    const auto n = normalize(shifted);
    EXPECT_EQ(n.ux[0], base.ux[0]);
    EXPECT_EQ(n.extracted.shift.at(0), CycNum(-5));
    const CycNum w = cyc_root(3, 1);
    EXPECT_EQ(n.extracted.lambda.at({0, 0}), CycNum(5) * (1 - w));
    for (const auto& e : matrix_units(3)) EXPECT_EQ(act(shifted, "x", e), act(n, "x", e));
}

TEST(Normalize, IdempotentAndActionPreserving) {
    prop::for_all(3, 10, [](prop::Gen& g) {
        auto a = p3_division(g.nonzero_cyc(3, 2));
        a.ux[0] = a.ux[0] + g.cyc(3, 3) * a.ug[0];
        const auto n1 = normalize(a);
        const auto n2 = normalize(n1);
        EXPECT_EQ(n1.ux, n2.ux);
        for (const auto& e : matrix_units(3)) {
            EXPECT_EQ(act(a, "x", e), act(n1, "x", e));
            EXPECT_EQ(act(a, "h x", e), act(n1, "h x", e));
        }
    });
}

TEST(Normalize, WrongDegreeRejected) {
    const CycNum w = cyc_root(3, 1);
    auto a = make_action(taft(3, w), {diag({1, w, w.pow(2)})}, {unit(3, 0, 1)});
    EXPECT_THROW(normalize(a), NotInnerCompatible);
}

TEST(Normalize, ExtractedLambdaSatisfiesCompatibility) {
    // lambda_i(g)(1 - q_i) = lambda_i(a_i)(xi(g, a_i) - chi_i(g)), with u(g)u(a)u(g)^-1 = xi(g,a) u(a)
    prop::for_all(5, 10, [](prop::Gen& gen) {
        auto a = p3_division(gen.nonzero_cyc(3, 2));
        a.ux[0] = a.ux[0] + gen.nonzero_cyc(3, 3) * a.ug[0];
        const ExactMatrix cj = gen.invertible(3, 3, 2);
        for (auto& u : a.ug) u = conjugate(cj, u);
        a.ux[0] = conjugate(cj, a.ux[0]);
        const Datum& d = a.pres.datum;
        const ExactMatrix ua = a.u_group(d.a[0]);
        const CycNum lam_a = lambda_at(a, 0, d.a[0]);
        for (const auto& g : d.group.elements()) {
            const ExactMatrix u = a.u_group(g);
            const auto xi = mul(mul(u, ua), inverse(u)).multiple_of(ua);
            ASSERT_TRUE(xi);
            EXPECT_EQ(lambda_at(a, 0, g) * (1 - d.q(0)), lam_a * (*xi - d.chi[0](g)));
        }
        const auto n = normalize(a);
        for (size_t l = 0; l < 2; ++l) EXPECT_EQ(n.extracted.lambda.at({0, l}), lambda_at(a, 0, d.group.gen(l)));
    });
}

TEST(Certify, TrivialActionOfEveryFamilyPasses) {
    const CycNum w3 = cyc_root(3, 1);
    for (const auto& p : {taft(3, w3), dd_taft(3, w3), uq_sl2(3, w3), book(3, w3, 2), p3_example(3, w3)}) {
        SCOPED_TRACE(to_string(p.family));
        std::vector<ExactMatrix> ug(p.num_group(), ExactMatrix::identity(2));
        std::vector<ExactMatrix> ux(p.rank(), ExactMatrix(2, 2));
        auto c = certify_action(make_action(p, ug, ux));
        EXPECT_TRUE(c.pass);
        EXPECT_TRUE(c.agree);
        EXPECT_FALSE(c.route_b.checked.empty());
    }
}

TEST(Certify, KnownGoodFixtures) {
    for (const auto& a : {taft3(1, 1, 0), taft3(1, 2, 3), p3_division(1), p3_division(cyc_root(3, 2)), uq_m2(1), uq_m2(cyc_root(3, 1))}) {
        auto c = certify_action(a);
        EXPECT_TRUE(c.route_a.pass) << (c.route_a.failures.empty() ? "" : c.route_a.failures[0].relation);
        EXPECT_TRUE(c.route_b.pass) << (c.route_b.failures.empty() ? "" : c.route_b.failures[0].relation);
        EXPECT_TRUE(c.agree);
    }
}

TEST(Certify, ExtractsScalars) {
    auto c = certify_action(taft3(1, 2, 3));
    ASSERT_TRUE(c.pass);
    EXPECT_EQ(c.extracted.sigma.at(0), CycNum(6));
    EXPECT_EQ(c.extracted.theta.at(0), CycNum(1));
    const CycNum w = cyc_root(3, 1);
    auto u = certify_action(uq_m2(1));
    ASSERT_TRUE(u.pass);
    // x y - y x = u(a) - tau u(a)^-1 with tau = 1 + pq
    EXPECT_EQ(u.extracted.family.at("tau"), 1 + (w.pow(2) - w) / (1 + w));
}

TEST(Certify, WrongDegreeFailsBothRoutes) {
    // u(x) = E_12 has degree w^-1 for u(g) = diag(1, w, w^2)
    const CycNum w = cyc_root(3, 1);
    auto a = make_action(taft(3, w), {diag({1, w, w.pow(2)})}, {unit(3, 0, 1)});
    auto c = certify_action(a);
    EXPECT_FALSE(c.pass);
    EXPECT_TRUE(c.agree);
    bool gx = false;
    for (const auto& f : c.route_b.failures) gx = gx || f.relation == "skew_group[x1,g]";
    EXPECT_TRUE(gx);
    EXPECT_THROW(require_certified(a), CertificationFailure);
    try {
        require_certified(a);
    } catch (const CertificationFailure& e) {
        EXPECT_NE(std::string(e.what()).find("pCR"), std::string::npos);
    }
}

TEST(Certify, RouteAgreementOnMutations) {
    const std::vector<InnerActionMap> base = {taft3(1, 1, 0), taft3(1, 2, 3), p3_division(1), uq_m2(1)};
    prop::for_all(17, 6, [&](prop::Gen& g) {
        for (const auto& b : base) {
            const size_t m = b.m;
            // valid mutations: conjugation, scaling u(g), shifting u(x) along u(a)
            auto ok = b;
            const ExactMatrix cj = g.invertible(m, 3, 2);
            for (auto& u : ok.ug) u = conjugate(cj, g.nonzero_cyc(3, 2) * u);
            for (size_t i = 0; i < ok.ux.size(); ++i)
                ok.ux[i] = conjugate(cj, ok.ux[i]) + g.cyc(3, 2) * ok.u_group(ok.pres.datum.a[i]);
            auto good = certify_action(ok);
            EXPECT_TRUE(good.pass);
            EXPECT_TRUE(good.agree);
            // invalid mutation: perturb one entry of one u(x)
            auto bad = b;
            const size_t i = static_cast<size_t>(g.integer(0, static_cast<long>(bad.ux.size()) - 1));
            bad.ux[i](static_cast<size_t>(g.integer(0, m - 1)), static_cast<size_t>(g.integer(0, m - 1))) += g.nonzero_cyc(3, 2);
            auto c2 = certify_action(bad);
            EXPECT_TRUE(c2.agree) << "route A " << c2.route_a.pass << " route B " << c2.route_b.pass;
        }
    });
}

TEST(Certify, RouteAgreementExhaustiveSmallTaft) {
    // every u(x) on M_2 with entries in {0, 1, -1} under u(g) = diag(1, -1)
    const auto p = taft(2, CycNum(-1));
    int passes = 0;
    for (int code = 0; code < 81; ++code) {
        ExactMatrix ux(2, 2);
        int c = code;
        for (size_t k = 0; k < 4; ++k, c /= 3) ux(k / 2, k % 2) = CycNum(c % 3 - 1);
        auto cert = certify_action(make_action(p, {diag({1, -1})}, {ux}));
        EXPECT_TRUE(cert.agree) << ux.str();
        passes += cert.pass;
    }
    EXPECT_GT(passes, 1);
    EXPECT_LT(passes, 81);
}

TEST(QBinomial, PowerOfSkewOperatorCollapses) {
    const CycNum w = cyc_root(3, 1);
    prop::for_all(23, 10, [&](prop::Gen& g) {
        std::vector<long> d(3);
        for (auto& e : d) e = g.integer(0, 2);
        ExactMatrix ua(3, 3), ux(3, 3);
        for (size_t i = 0; i < 3; ++i) {
            ua(i, i) = w.pow(d[i]);
            for (size_t j = 0; j < 3; ++j)
                if ((d[i] - d[j] - 1) % 3 == 0) ux(i, j) = g.cyc(3, 3);
        }
        const ExactMatrix pc = g.invertible(3, 3, 2);
        ua = conjugate(pc, ua);
        ux = conjugate(pc, ux);
        ASSERT_EQ(mul(ua, ux), w * mul(ux, ua));
        const ExactMatrix op = skew_operator(ux, ExactMatrix::identity(3), ua);
        const ExactMatrix brute = op.pow(3);
        // L_{x^N} + (-1)^N (L_a R_{a^-1} R_x)^N
        const ExactMatrix tail = kron(ua, mul(inverse(ua), ux).transpose());
        const ExactMatrix expected = kron(ux.pow(3), ExactMatrix::identity(3)) - tail.pow(3);
        EXPECT_EQ(brute, expected);
        EXPECT_EQ(brute, skew_power_closed_form(ua, ux, 3));
    });
}

TEST(Operators, LetterOperatorMatchesAct) {
    const auto a = uq_m2(cyc_root(3, 2));
    for (const auto& name : {"a", "x", "y", "x1", "x2"}) {
        const Word w = parse_word(a.pres, name);
        const ExactMatrix op = word_operator(a, w);
        for (const auto& e : matrix_units(2)) {
            const ExactMatrix col = mul(op, unvec(vec(e), 4, 1));
            EXPECT_EQ(unvec(vec(col), 2, 2), act(a, w, e)) << name;
        }
    }
}

TEST(SkewSupport, ElementaryTaftIsHomogeneous) {
    const auto r = skew_support_check(taft3(1, 1, 0));
    ASSERT_EQ(r.skew.size(), 1u);
    EXPECT_TRUE(r.skew[0].homogeneous);
    EXPECT_FALSE(r.skew[0].predicted_zero);
    EXPECT_FALSE(r.skew[0].operator_zero);
    EXPECT_TRUE(r.kernel.is_trivial());
}

TEST(SkewSupport, TrivialGroupPartKillsSkew) {
    // u(g) = I: any admissible u(x) is a multiple of u(g), and x acts by zero
    const CycNum w = cyc_root(3, 1);
    const auto a = make_action(taft(3, w), {ExactMatrix::identity(3)}, {CycNum(7) * ExactMatrix::identity(3)});
    const auto r = skew_support_check(a);
    EXPECT_EQ(r.kernel.order(), 3);
    EXPECT_TRUE(r.skew[0].predicted_zero);
    EXPECT_TRUE(r.skew[0].operator_zero);
    for (const auto& e : matrix_units(3)) EXPECT_TRUE(act(a, "x", e).is_zero());
}

TEST(SkewSupport, DivisionActionDegree) {
    const auto r = skew_support_check(p3_division(cyc_root(3, 1)));
    EXPECT_TRUE(r.skew[0].homogeneous);
    EXPECT_FALSE(r.skew[0].predicted_zero);
    EXPECT_EQ(r.support_span.order(), 9);
    const Component* c = r.grading.component(r.skew[0].degree);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->basis.size(), 1u);
}

TEST(SkewSupport, CharacterOutsideSupport) {
    // g acts trivially while chi(g) = w: x must vanish
    const CycNum w = cyc_root(3, 1);
    auto [c, s] = clock_shift(3, w);
    (void)s;
    const auto a = make_action(p3_example(3, w), {ExactMatrix::identity(3), c}, {ExactMatrix(3, 3)});
    const auto r = skew_support_check(a);
    EXPECT_TRUE(r.skew[0].predicted_zero);
    EXPECT_TRUE(r.skew[0].operator_zero);
}

TEST(SkewSupport, IncompatibleActionRejected) {
    const CycNum w = cyc_root(3, 1);
    auto a = make_action(taft(3, w), {diag({1, w, w.pow(2)})}, {unit(3, 0, 1)});
    EXPECT_THROW(skew_support_check(a), InconsistentDegree);
}
