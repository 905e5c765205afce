#include "hopfact/actions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hopfact {

ExactMatrix InnerActionMap::u_group(const GrpElt& g) const {
    ExactMatrix u = ExactMatrix::identity(m);
    for (size_t l = 0; l < ug.size(); ++l)
        if (g[l] != 0) u = mul(u, ug[l].pow(g[l]));
    return u;
}

ExactMatrix InnerActionMap::u_group_inverse(const GrpElt& g) const { return inverse(u_group(g)); }

ExactMatrix InnerActionMap::u_letter(const Letter& l) const {
    switch (l.kind) {
        case Letter::Kind::group: return ug.at(l.index);
        case Letter::Kind::skew: return ux.at(l.index);
        case Letter::Kind::native: {
            const auto& nat = pres.natives.at(l.index);
            return mul(ux.at(nat.canonical), u_group(nat.w));
        }
    }
    throw UnknownGenerator("bad letter");
}

InnerActionMap make_action(const HopfPresentation& p, std::vector<ExactMatrix> ug, std::vector<ExactMatrix> ux) {
    if (ug.size() != p.num_group()) throw ShapeMismatch("one u(g) per group generator expected");
    if (ux.size() != p.rank()) throw ShapeMismatch("one u(x) per skew-primitive expected");
    if (ug.empty()) throw ShapeMismatch("presentation without group generators");
    const size_t m = ug[0].rows();
    for (const auto& u : ug) {
        if (!u.square() || u.rows() != m) throw ShapeMismatch("u(g) must be m x m");
        if (!try_inverse(u)) throw SingularMatrix("u(g) must be invertible");
    }
    for (const auto& u : ux)
        if (!u.square() || u.rows() != m) throw ShapeMismatch("u(x) must be m x m");
    InnerActionMap a;
    a.pres = p;
    a.m = m;
    a.ug = std::move(ug);
    a.ux = std::move(ux);
    return a;
}

InnerActionMap make_action_named(const HopfPresentation& p, const std::map<std::string, ExactMatrix>& u) {
    std::vector<std::optional<ExactMatrix>> ug(p.num_group()), ux(p.rank()), nat(p.natives.size());
    for (const auto& [name, mtx] : u) {
        auto l = p.lookup(name);
        if (!l) throw UnknownGenerator("unknown generator '" + name + "'");
        auto& slot = l->kind == Letter::Kind::group ? ug[l->index]
                     : l->kind == Letter::Kind::skew ? ux[l->index]
                                                     : nat[l->index];
        if (slot) throw SchemaError("generator '" + name + "' given twice");
        slot = mtx;
    }
    std::vector<ExactMatrix> g;
    for (size_t l = 0; l < ug.size(); ++l) {
        if (!ug[l]) throw SchemaError("missing u(" + p.group_names[l] + ")");
        g.push_back(*ug[l]);
    }
    const size_t m = g[0].rows();
    InnerActionMap tmp;
    tmp.pres = p;
    tmp.m = m;
    tmp.ug = g;
    for (size_t k = 0; k < nat.size(); ++k) {
        if (!nat[k]) continue;
        const size_t i = p.natives[k].canonical;
        if (ux[i]) throw SchemaError("both " + p.skew_name(i) + " and " + p.natives[k].name + " given");
        ux[i] = mul(*nat[k], tmp.u_group_inverse(p.natives[k].w));
    }
    std::vector<ExactMatrix> x;
    for (auto& v : ux) x.push_back(v ? *v : ExactMatrix(m, m));
    return make_action(p, std::move(g), std::move(x));
}

Word parse_word(const HopfPresentation& p, const std::string& text) {
    Word w;
    std::string s;
    for (char c : text) s += (c == '*' || c == '.') ? ' ' : c;
    // the middle dot is two bytes in UTF-8
    for (size_t pos; (pos = s.find("·")) != std::string::npos;) s.replace(pos, std::string("·").size(), " ");
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        long power = 1;
        const auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        if (caret != std::string::npos) {
            const std::string e = tok.substr(caret + 1);
            if (e.empty() || !std::all_of(e.begin(), e.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw UnknownGenerator("bad exponent in '" + tok + "'");
            power = std::stol(e);
        }
        auto l = p.lookup(name);
        if (!l) throw UnknownGenerator("unknown generator '" + name + "'");
        for (long k = 0; k < power; ++k) w.push_back(*l);
    }
    return w;
}

namespace {

ExactMatrix apply_letter(const InnerActionMap& a, const Letter& l, const ExactMatrix& m) {
    if (l.kind == Letter::Kind::group) {
        const ExactMatrix& u = a.ug.at(l.index);
        return mul(mul(u, m), inverse(u));
    }
    const auto [h, k] = a.pres.coproduct(l);
    const ExactMatrix ux = a.u_letter(l);
    const ExactMatrix uhi = a.u_group_inverse(h);
    const ExactMatrix uk = a.u_group(k);
    return mul(mul(ux, m), uhi) - mul(mul(mul(mul(uk, m), inverse(uk)), ux), uhi);
}

}  // namespace

ExactMatrix act(const InnerActionMap& a, const Word& w, const ExactMatrix& m) {
    if (m.rows() != a.m || m.cols() != a.m) throw ShapeMismatch("act: argument must be m x m");
    ExactMatrix r = m;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_letter(a, *it, r);
    return r;
}

ExactMatrix act(const InnerActionMap& a, const std::string& word, const ExactMatrix& m) {
    return act(a, parse_word(a.pres, word), m);
}

InnerActionMap normalize(const InnerActionMap& a) {
    InnerActionMap out = a;
    const Datum& d = a.pres.datum;
    out.extracted.lambda.clear();
    out.extracted.shift.clear();
    for (size_t i = 0; i < d.rank(); ++i) {
        const ExactMatrix& x = a.ux[i];
        const ExactMatrix ua = a.u_group(d.a[i]);
        std::optional<CycNum> c;
        std::vector<std::pair<CycNum, CycNum>> constraints;  // lambda + c (beta - chi) = 0
        for (size_t l = 0; l < a.ug.size(); ++l) {
            const ExactMatrix& u = a.ug[l];
            const ExactMatrix ui = inverse(u);
            const CycNum chi = d.chi[i](d.group.gen(l));
            auto lam = (mul(mul(u, x), ui) - chi * x).multiple_of(ua);
            if (!lam)
                throw NotInnerCompatible("u(" + a.pres.group_names[l] + ")u(" + a.pres.skew_name(i) +
                                         ")u(" + a.pres.group_names[l] + ")^-1 - chi u(x) is not a multiple of u(a)");
            auto beta = mul(mul(u, ua), ui).multiple_of(ua);
            if (!beta) throw NotInnerCompatible("conjugation by u(g) does not preserve the line of u(a)");
            out.extracted.lambda[{i, l}] = *lam;
            constraints.emplace_back(*lam, *beta - chi);
        }
        for (const auto& [lam, coef] : constraints)
            if (!coef.is_zero()) {
                c = -lam / coef;
                break;
            }
        const CycNum shift = c.value_or(CycNum());
        for (const auto& [lam, coef] : constraints)
            if (!(lam + shift * coef).is_zero())
                throw NotInnerCompatible("no shift of u(" + a.pres.skew_name(i) + ") along u(a) removes every lambda");
        out.extracted.shift[i] = shift;
        if (!shift.is_zero()) out.ux[i] = x + shift * ua;
    }
    return out;
}

namespace {

struct Reporter {
    RouteReport& r;
    void check(const std::string& name) { r.checked.push_back(name); }
    void fail(const std::string& name, const std::string& detail, ExactMatrix residual) {
        r.pass = false;
        r.failures.push_back({name, detail, std::move(residual)});
    }
};

}  // namespace

RouteReport check_relations(InnerActionMap& a) {
    RouteReport rep;
    Reporter R{rep};
    const HopfPresentation& p = a.pres;
    const Datum& d = p.datum;
    Extracted& ex = a.extracted;
    const size_t m = a.m;
    const ExactMatrix id = ExactMatrix::identity(m);

    for (size_t l = 0; l < a.ug.size(); ++l) {
        const std::string name = "group_order[" + p.group_names[l] + "]";
        R.check(name);
        ExactMatrix pw = a.ug[l].pow(d.group.factors()[l]);
        if (auto t = pw.scalar_value())
            ex.theta[l] = *t;
        else
            R.fail(name, "u(g)^M is not scalar", pw);
    }
    for (size_t l = 0; l < a.ug.size(); ++l)
        for (size_t t = l + 1; t < a.ug.size(); ++t) {
            const std::string name = "group_commute[" + p.group_names[l] + "," + p.group_names[t] + "]";
            R.check(name);
            ExactMatrix c = mul(mul(a.ug[l], a.ug[t]), inverse(mul(a.ug[t], a.ug[l])));
            if (!c.scalar_value()) R.fail(name, "u(g)u(h)u(g)^-1u(h)^-1 is not scalar", c);
        }
    for (size_t i = 0; i < d.rank(); ++i)
        for (size_t l = 0; l < a.ug.size(); ++l) {
            const std::string name = "pCR[" + p.skew_name(i) + "," + p.group_names[l] + "]";
            R.check(name);
            ExactMatrix res = mul(a.ug[l], a.ux[i]) - d.chi[i](d.group.gen(l)) * mul(a.ux[i], a.ug[l]);
            if (!res.is_zero()) R.fail(name, "u(g)u(x) != chi(g)u(x)u(g)", res);
        }
    for (size_t i = 0; i < d.rank(); ++i) {
        const std::string name = "lSC[" + p.skew_name(i) + "]";
        R.check(name);
        const long n = d.N(i);
        ExactMatrix res = a.ux[i].pow(n) - CycNum(d.mu[i]) * id;
        if (auto s = res.multiple_of(a.u_group(d.a[i]).pow(n)))
            ex.sigma[i] = *s;
        else
            R.fail(name, "u(x)^N - mu I is not a multiple of u(a)^N", res);
    }
    for (size_t i = 0; i < d.rank(); ++i)
        for (size_t j = i + 1; j < d.rank(); ++j) {
            const std::string name = "pij-ji[" + p.skew_name(i) + "," + p.skew_name(j) + "]";
            R.check(name);
            ExactMatrix res = mul(a.ux[j], a.ux[i]) - d.chi[i](d.a[j]) * mul(a.ux[i], a.ux[j]) - d.lambda[i][j] * id;
            if (auto z = res.multiple_of(mul(a.u_group(d.a[i]), a.u_group(d.a[j]))))
                ex.zeta[{i, j}] = *z;
            else
                R.fail(name, "residual is not a multiple of u(a_i)u(a_j)", res);
        }

    const CycNum w = p.root;
    auto nat = [&](size_t k) { return a.u_letter(Letter{Letter::Kind::native, k}); };
    auto need_scalar = [&](const std::string& name, const ExactMatrix& mtx, const std::string& key) {
        R.check(name);
        if (auto s = mtx.scalar_value())
            ex.family[key] = *s;
        else
            R.fail(name, "not a scalar matrix", mtx);
    };
    auto need_zero = [&](const std::string& name, const ExactMatrix& mtx) {
        R.check(name);
        if (!mtx.is_zero()) R.fail(name, "identity fails", mtx);
    };
    switch (p.family) {
        case Family::dd_taft: {
            const std::string name = "dd_cross";
            R.check(name);
            const ExactMatrix ux = nat(0), uX = nat(1);
            ExactMatrix res = mul(ux, uX) - w * mul(uX, ux) - id;
            if (auto l = res.multiple_of(mul(a.ug[0], a.ug[1])))
                ex.dd_lambda = *l;
            else
                R.fail(name, "u(x)u(X) - w u(X)u(x) - I is not a multiple of u(g)u(G)", res);
            break;
        }
        case Family::uq_sl2: {
            const ExactMatrix ua = a.ug[0], ux = nat(0), uy = nat(1);
            const CycNum w2 = w.pow(2);
            need_scalar("eu1", ua.pow(p.n), "theta");
            need_zero("eu2", mul(ua, ux) - w2 * mul(ux, ua));
            need_zero("eu3", mul(ua, uy) - w2.inv() * mul(uy, ua));
            need_scalar("eu4[x]", ux.pow(p.n), "mu");
            need_scalar("eu4[y]", uy.pow(p.n), "nu");
            R.check("eu5");
            ExactMatrix lhs = mul(ux, uy) - mul(uy, ux);
            ExactMatrix res = ua - lhs;
            if (auto t = res.multiple_of(inverse(ua)))
                ex.family["tau"] = *t;
            else
                R.fail("eu5", "u(x)u(y) - u(y)u(x) - u(a) is not a multiple of u(a)^-1", res);
            break;
        }
        case Family::book: {
            const ExactMatrix ua = a.ug[0], ux = nat(0), uy = nat(1);
            need_scalar("eu1_b", ua.pow(p.n), "theta");
            need_zero("eu2_b", mul(ua, ux) - w * mul(ux, ua));
            need_zero("eu3_b", mul(ua, uy) - w.pow(p.book_m) * mul(uy, ua));
            need_scalar("eu4_b[x]", ux.pow(p.n), "mu");
            need_scalar("eu4_b[y]", uy.pow(p.n), "nu");
            R.check("eu5_b");
            ExactMatrix lhs = mul(ux, uy) - mul(uy, ux);
            if (auto t = lhs.multiple_of(ua.pow(p.book_m)))
                ex.family["tau"] = *t;
            else
                R.fail("eu5_b", "u(x)u(y) - u(y)u(x) is not a multiple of u(a)^m", lhs);
            break;
        }
        default: break;
    }
    return rep;
}

ExactMatrix skew_operator(const ExactMatrix& u_x, const ExactMatrix& u_h, const ExactMatrix& u_k) {
    const ExactMatrix uhi = inverse(u_h);
    const ExactMatrix uki = inverse(u_k);
    return kron(u_x, uhi.transpose()) - kron(u_k, mul(mul(uki, u_x), uhi).transpose());
}

ExactMatrix skew_power_closed_form(const ExactMatrix& u_a, const ExactMatrix& u_x, long n) {
    const ExactMatrix xn = u_x.pow(n);
    const ExactMatrix an = u_a.pow(n);
    const ExactMatrix id = ExactMatrix::identity(u_a.rows());
    return kron(xn, id) - kron(an, mul(inverse(an), xn).transpose());
}

ExactMatrix letter_operator(const InnerActionMap& a, const Letter& l) {
    if (l.kind == Letter::Kind::group) {
        const ExactMatrix& u = a.ug.at(l.index);
        return kron(u, inverse(u).transpose());
    }
    const auto [h, k] = a.pres.coproduct(l);
    return skew_operator(a.u_letter(l), a.u_group(h), a.u_group(k));
}

namespace {

struct OperatorCache {
    const InnerActionMap& a;
    std::map<std::vector<std::pair<int, size_t>>, ExactMatrix> memo;

    static std::vector<std::pair<int, size_t>> key(const Word& w, size_t len) {
        std::vector<std::pair<int, size_t>> k;
        for (size_t i = 0; i < len; ++i) k.emplace_back(static_cast<int>(w[i].kind), w[i].index);
        return k;
    }
    const ExactMatrix& get(const Word& w) { return prefix(w, w.size()); }
    const ExactMatrix& prefix(const Word& w, size_t len) {
        auto k = key(w, len);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        ExactMatrix val;
        if (len == 0)
            val = ExactMatrix::identity(a.m * a.m);
        else if (len == 1)
            val = letter_operator(a, w[0]);
        else
            val = mul(prefix(w, len - 1), prefix(Word{w[len - 1]}, 1));
        return memo.emplace(std::move(k), std::move(val)).first->second;
    }
};

void check_relation_set(OperatorCache& cache, const std::vector<Relation>& rels, const std::string& prefix, Reporter& R) {
    const size_t n = cache.a.m * cache.a.m;
    for (const auto& rel : rels) {
        const std::string name = prefix + rel.name;
        R.check(name);
        ExactMatrix s(n, n);
        for (const auto& t : rel.terms) s += t.coeff * cache.get(t.word);
        if (!s.is_zero()) R.fail(name, rel.text, s);
    }
}

// h*(ab) = (h1*a)(h2*b) on matrix units, with E_ab E_cd = delta_bc E_ad
bool module_law(const InnerActionMap& a, const ExactMatrix& op, const ExactMatrix& op_h, const ExactMatrix& op_k,
                ExactMatrix& residual) {
    const size_t m = a.m;
    auto column = [&](const ExactMatrix& o, size_t a_, size_t b_) {
        ExactMatrix c(m, m);
        const size_t col = a_ * m + b_;
        for (size_t r = 0; r < m * m; ++r) c(r / m, r % m) = o(r, col);
        return c;
    };
    std::vector<ExactMatrix> cx, ch, ck;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            cx.push_back(column(op, i, j));
            ch.push_back(column(op_h, i, j));
            ck.push_back(column(op_k, i, j));
        }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                for (size_t l = 0; l < m; ++l) {
                    ExactMatrix rhs = mul(cx[i * m + j], ch[k * m + l]) + mul(ck[i * m + j], cx[k * m + l]);
                    if (j == k) rhs -= cx[i * m + l];
                    if (!rhs.is_zero()) {
                        residual = rhs;
                        return false;
                    }
                }
    return true;
}

}  // namespace

ExactMatrix word_operator(const InnerActionMap& a, const Word& w) {
    OperatorCache cache{a, {}};
    return cache.get(w);
}

RouteReport operator_oracle(const InnerActionMap& a) {
    RouteReport rep;
    Reporter R{rep};
    OperatorCache cache{a, {}};
    const HopfPresentation& p = a.pres;
    const size_t m = a.m;
    check_relation_set(cache, p.relations, "", R);
    check_relation_set(cache, p.native_relations, "native:", R);

    for (size_t k = 0; k < p.natives.size(); ++k) {
        const auto& nat = p.natives[k];
        const std::string name = "native_factorization[" + nat.name + "]";
        R.check(name);
        Word w{Letter{Letter::Kind::skew, nat.canonical}};
        for (const auto& l : p.group_word(nat.w)) w.push_back(l);
        ExactMatrix res = cache.get(Word{Letter{Letter::Kind::native, k}}) - cache.get(w);
        if (!res.is_zero()) R.fail(name, nat.name + " = " + word_text(p, w), res);
    }

    const std::vector<CycNum> vid = vec(ExactMatrix::identity(m));
    const ExactMatrix col_id = unvec(vid, m * m, 1);
    std::vector<Letter> letters;
    for (size_t l = 0; l < p.num_group(); ++l) letters.push_back(Letter{Letter::Kind::group, l});
    for (size_t i = 0; i < p.rank(); ++i) letters.push_back(Letter{Letter::Kind::skew, i});
    for (const auto& l : letters) {
        const ExactMatrix& op = cache.get(Word{l});
        const bool group = l.kind == Letter::Kind::group;
        const std::string uname = "unit_law[" + p.letter_name(l) + "]";
        R.check(uname);
        ExactMatrix img = mul(op, col_id);
        ExactMatrix want = group ? col_id : ExactMatrix(m * m, 1);
        if (img != want) R.fail(uname, "h*1 != eps(h)1", img - want);

        const std::string mname = "module_law[" + p.letter_name(l) + "]";
        R.check(mname);
        ExactMatrix residual;
        bool ok;
        if (group) {
            ExactMatrix zero(m * m, m * m);
            ok = module_law(a, op, op, zero, residual);
        } else {
            const auto [h, k] = p.coproduct(l);
            const ExactMatrix oh = cache.get(p.group_word(h));
            const ExactMatrix ok_ = cache.get(p.group_word(k));
            ok = module_law(a, op, oh, ok_, residual);
        }
        if (!ok) R.fail(mname, "h*(ab) != (h1*a)(h2*b) on a pair of matrix units", residual);
    }
    return rep;
}

Certificate certify_action(const InnerActionMap& a) {
    Certificate c;
    try {
        InnerActionMap n = normalize(a);
        c.route_a = check_relations(n);
        c.extracted = n.extracted;
        c.normalized = std::move(n);
    } catch (const NotInnerCompatible& e) {
        c.route_a.pass = false;
        c.route_a.checked.push_back("pCR");
        c.route_a.failures.push_back({"pCR", e.what(), ExactMatrix()});
    }
    c.route_b = operator_oracle(a);
    c.agree = c.route_a.pass == c.route_b.pass;
    c.pass = c.route_a.pass && c.route_b.pass;
    return c;
}

Certificate require_certified(const InnerActionMap& a) {
    Certificate c = certify_action(a);
    if (c.pass) return c;
    const RouteReport& r = c.route_a.pass ? c.route_b : c.route_a;
    if (!r.failures.empty()) {
        const auto& f = r.failures.front();
        throw CertificationFailure("certification failed at " + f.relation + ": " + f.detail, f.residual);
    }
    throw CertificationFailure("certification failed", ExactMatrix());
}

SupportReport skew_support_check(const InnerActionMap& a0) {
    InnerActionMap a;
    try {
        a = normalize(a0);
    } catch (const NotInnerCompatible& e) {
        throw InconsistentDegree(std::string("action cannot be normalized: ") + e.what());
    }
    const Datum& d = a.pres.datum;
    const AbGroup& g = d.group;
    SupportReport rep;
    rep.grading = grading_from_action(g, a.ug);
    const AbGroup& dg = rep.grading.group;
    std::vector<GrpElt> kern;
    for (const auto& x : g.elements())
        if (a.u_group(x).scalar_value()) kern.push_back(x);
    rep.kernel = Subgroup::from_elements(g, kern);
    rep.support_span = Subgroup::generated_by(dg, rep.grading.support());
    long span_exp = 1;
    for (const auto& t : rep.support_span.elements) span_exp = std::lcm(span_exp, t.order());

    for (size_t i = 0; i < d.rank(); ++i) {
        SkewSupport s;
        s.index = i;
        s.degree = dg.elt(d.chi[i].exps());
        // homogeneity of u(x_i) in component chi_i
        const Component* comp = rep.grading.component(s.degree);
        if (a.ux[i].is_zero()) {
            s.homogeneous = true;
        } else if (comp) {
            EchelonBasis e(a.m * a.m);
            for (const auto& b : comp->basis) e.add(vec(b));
            s.homogeneous = e.contains(vec(a.ux[i]));
        }
        bool outside_kperp = false;
        for (const auto& k : rep.kernel.elements)
            if (!d.chi[i](k).is_one()) outside_kperp = true;
        if (outside_kperp) {
            s.predicted_zero = true;
            s.reason = "chi outside the annihilator of the kernel";
        } else if (!rep.support_span.contains(s.degree)) {
            s.predicted_zero = true;
            s.reason = "chi outside the subgroup generated by the support";
        } else if (!s.degree.pow(span_exp).is_identity()) {
            s.predicted_zero = true;
            s.reason = "chi^m nontrivial where the support has exponent m";
        }
        s.operator_zero = letter_operator(a, Letter{Letter::Kind::skew, i}).is_zero();
        if (!s.homogeneous)
            throw InconsistentDegree("u(" + a.pres.skew_name(i) + ") is not homogeneous of degree chi_" + std::to_string(i + 1));
        if (s.predicted_zero && !s.operator_zero)
            throw InconsistentDegree(a.pres.skew_name(i) + " should act by zero (" + s.reason + ") but does not");
        rep.skew.push_back(std::move(s));
    }
    return rep;
}

}  // namespace hopfact
