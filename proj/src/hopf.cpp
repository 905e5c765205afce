#include "hopfact/hopf.hpp"

#include <sstream>

#include "hopfact/errors.hpp"

namespace hopfact {

long Datum::N(size_t i) const {
    auto o = order_of(q(i));
    if (!o) throw NotFiniteOrder("q_i is not a root of unity");
    return *o;
}

namespace {

std::string idx(size_t i) { return std::to_string(i + 1); }

[[noreturn]] void violation(const std::string& which, int i, int j, const std::string& msg) {
    throw DatumViolation(which, i, j, which + ": " + msg);
}

}  // namespace

void validate(const Datum& d) {
    const size_t n = d.rank();
    if (n == 0) violation("shape", -1, -1, "datum needs at least one skew-primitive");
    if (d.chi.size() != n || d.mu.size() != n || d.lambda.size() != n)
        violation("shape", -1, -1, "a, chi, mu and lambda must all have rank entries");
    for (size_t i = 0; i < n; ++i) {
        if (d.lambda[i].size() != n) violation("shape", static_cast<int>(i), -1, "lambda must be square");
        if (d.a[i].parent() != d.group) violation("shape", static_cast<int>(i), -1, "a_" + idx(i) + " outside G");
        if (d.chi[i].parent() != d.group) violation("shape", static_cast<int>(i), -1, "chi_" + idx(i) + " not on G");
    }
    for (size_t i = 0; i < n; ++i)
        if (d.q(i).is_one()) violation("ejj", static_cast<int>(i), static_cast<int>(i), "q_" + idx(i) + " = chi_" + idx(i) + "(a_" + idx(i) + ") = 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && !(d.chi[j](d.a[i]) * d.chi[i](d.a[j])).is_one())
                violation("eji", static_cast<int>(i), static_cast<int>(j),
                          "chi_" + idx(j) + "(a_" + idx(i) + ") chi_" + idx(i) + "(a_" + idx(j) + ") != 1");
    for (size_t i = 0; i < n; ++i) {
        if (d.mu[i] != 0 && d.mu[i] != 1) violation("mu_range", static_cast<int>(i), -1, "mu_i must be 0 or 1");
        const long ni = d.N(i);
        if (d.mu[i] != 0 && (d.a[i].pow(ni).is_identity() || !d.chi[i].pow(ni).is_trivial()))
            violation("compat_i", static_cast<int>(i), -1,
                      "mu_" + idx(i) + " must vanish when a_i^N_i = 1 or chi_i^N_i is nontrivial");
    }
    for (size_t i = 0; i < n; ++i) {
        if (!d.lambda[i][i].is_zero()) violation("lambda_diag", static_cast<int>(i), static_cast<int>(i), "lambda_ii must be 0");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool forced = (d.a[i] * d.a[j]).is_identity() || !(d.chi[i] * d.chi[j]).is_trivial();
            if (forced && !d.lambda[i][j].is_zero())
                violation("compat_ii", static_cast<int>(i), static_cast<int>(j),
                          "lambda_" + idx(i) + idx(j) + " must vanish when a_i a_j = 1 or chi_i chi_j is nontrivial");
            // x_j x_i and x_i x_j relations must agree
            if (d.lambda[j][i] != -(d.chi[j](d.a[i]) * d.lambda[i][j]))
                violation("lambda_antisym", static_cast<int>(i), static_cast<int>(j),
                          "lambda_ji must equal -chi_j(a_i) lambda_ij");
        }
    }
}

std::string to_string(Family f) {
    switch (f) {
        case Family::taft: return "taft";
        case Family::dd_taft: return "dd_taft";
        case Family::uq_sl2: return "uq_sl2";
        case Family::book: return "book";
        case Family::p3: return "p3";
        case Family::custom: return "custom";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    for (Family f : {Family::taft, Family::dd_taft, Family::uq_sl2, Family::book, Family::p3, Family::custom})
        if (to_string(f) == s) return f;
    throw SchemaError("unknown family '" + s + "'");
}

std::optional<Letter> HopfPresentation::lookup(const std::string& name) const {
    for (size_t l = 0; l < group_names.size(); ++l)
        if (group_names[l] == name || "g" + idx(l) == name) return Letter{Letter::Kind::group, l};
    for (size_t i = 0; i < natives.size(); ++i)
        if (natives[i].name == name) return Letter{Letter::Kind::native, i};
    for (size_t i = 0; i < rank(); ++i)
        if (skew_name(i) == name) return Letter{Letter::Kind::skew, i};
    return std::nullopt;
}

std::string HopfPresentation::letter_name(const Letter& l) const {
    switch (l.kind) {
        case Letter::Kind::group: return group_names.at(l.index);
        case Letter::Kind::skew: return skew_name(l.index);
        case Letter::Kind::native: return natives.at(l.index).name;
    }
    return "?";
}

Word HopfPresentation::group_word(const GrpElt& g) const {
    Word w;
    for (size_t l = 0; l < g.exps().size(); ++l)
        for (long k = 0; k < g[l]; ++k) w.push_back(Letter{Letter::Kind::group, l});
    return w;
}

std::pair<GrpElt, GrpElt> HopfPresentation::coproduct(const Letter& l) const {
    switch (l.kind) {
        case Letter::Kind::skew: return {datum.group.identity(), datum.a.at(l.index)};
        case Letter::Kind::native: {
            const auto& nat = natives.at(l.index);
            return {nat.w, datum.a.at(nat.canonical) * nat.w};
        }
        case Letter::Kind::group: break;
    }
    throw std::invalid_argument("group-likes have no skew coproduct");
}

std::string word_text(const HopfPresentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "·";
        out += p.letter_name(w[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

Letter grp(size_t l) { return Letter{Letter::Kind::group, l}; }
Letter skew(size_t i) { return Letter{Letter::Kind::skew, i}; }
Letter nat(size_t i) { return Letter{Letter::Kind::native, i}; }

Word repeat(Letter l, long k) { return Word(static_cast<size_t>(k), l); }

std::string relation_text(const HopfPresentation& p, const std::vector<Term>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        std::string c;
        bool neg = false;
        if (t.coeff == CycNum(1)) {
        } else if (t.coeff == CycNum(-1)) {
            neg = true;
        } else {
            c = "(" + t.coeff.str() + ")·";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        os << c << word_text(p, t.word);
        first = false;
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

Relation rel(const HopfPresentation& p, std::string name, std::vector<Term> terms) {
    Relation r{std::move(name), "", std::move(terms)};
    r.text = relation_text(p, r.terms);
    return r;
}

// the canonical relation set materialized from the datum
void build_relations(HopfPresentation& p) {
    const Datum& d = p.datum;
    const size_t k = d.group.rank();
    const CycNum one(1);
    auto& rs = p.relations;
    rs.clear();
    for (size_t l = 0; l < k; ++l)
        rs.push_back(rel(p, "group_order[" + p.group_names[l] + "]",
                         {{one, repeat(grp(l), d.group.factors()[l])}, {-one, {}}}));
    for (size_t l = 0; l < k; ++l)
        for (size_t t = l + 1; t < k; ++t)
            rs.push_back(rel(p, "group_commute[" + p.group_names[l] + "," + p.group_names[t] + "]",
                             {{one, {grp(l), grp(t)}}, {-one, {grp(t), grp(l)}}}));
    for (size_t i = 0; i < d.rank(); ++i)
        for (size_t l = 0; l < k; ++l)
            rs.push_back(rel(p, "skew_group[" + p.skew_name(i) + "," + p.group_names[l] + "]",
                             {{one, {grp(l), skew(i)}}, {-d.chi[i](d.group.gen(l)), {skew(i), grp(l)}}}));
    for (size_t i = 0; i < d.rank(); ++i) {
        const long ni = d.N(i);
        std::vector<Term> t = {{one, repeat(skew(i), ni)}};
        if (d.mu[i] != 0) {
            t.push_back({-one, {}});
            t.push_back({one, p.group_word(d.a[i].pow(ni))});
        }
        rs.push_back(rel(p, "nilpotency[" + p.skew_name(i) + "]", std::move(t)));
    }
    for (size_t i = 0; i < d.rank(); ++i)
        for (size_t j = i + 1; j < d.rank(); ++j) {
            std::vector<Term> t = {{one, {skew(j), skew(i)}}, {-d.chi[i](d.a[j]), {skew(i), skew(j)}}};
            const CycNum& lam = d.lambda[i][j];
            if (!lam.is_zero()) {
                t.push_back({-lam, {}});
                t.push_back({lam, p.group_word(d.a[i] * d.a[j])});
            }
            rs.push_back(rel(p, "commutation[" + p.skew_name(i) + "," + p.skew_name(j) + "]", std::move(t)));
        }
}

void require_primitive(long n, const CycNum& omega) {
    if (n < 2 || order_of(omega) != n)
        throw NotPrimitiveRoot("expected a primitive " + std::to_string(n) + "-th root of unity, got " + omega.str());
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Datum datum_of(const AbGroup& g, std::vector<GrpElt> a, std::vector<std::vector<CycNum>> chi_values,
               std::vector<std::vector<CycNum>> lambda) {
    Datum d;
    d.group = g;
    d.a = std::move(a);
    for (const auto& v : chi_values) d.chi.push_back(character_from_values(g, v));
    d.mu.assign(d.a.size(), 0);
    d.lambda = std::move(lambda);
    return d;
}

HopfPresentation finish(HopfPresentation p) {
    validate(p.datum);
    build_relations(p);
    return p;
}

}  // namespace

HopfPresentation make_presentation(const Datum& d) {
    validate(d);
    HopfPresentation p;
    p.family = Family::custom;
    p.datum = d;
    for (size_t l = 0; l < d.group.rank(); ++l) p.group_names.push_back("g" + idx(l));
    return finish(std::move(p));
}

HopfPresentation taft(long n, const CycNum& omega) {
    require_primitive(n, omega);
    HopfPresentation p;
    p.family = Family::taft;
    p.n = n;
    p.root = omega;
    AbGroup g({n});
    p.datum = datum_of(g, {g.gen(0)}, {{omega}}, {{CycNum()}});
    p.group_names = {"g"};
    p.natives = {{"x", 0, g.identity()}};
    const CycNum one(1);
    p.native_relations = {
        rel(p, "g^n=1", {{one, repeat(grp(0), n)}, {-one, {}}}),
        rel(p, "x^n=0", {{one, repeat(nat(0), n)}}),
        rel(p, "gx=wxg", {{one, {grp(0), nat(0)}}, {-omega, {nat(0), grp(0)}}}),
    };
    return finish(std::move(p));
}

HopfPresentation dd_taft(long n, const CycNum& omega) {
    require_primitive(n, omega);
    HopfPresentation p;
    p.family = Family::dd_taft;
    p.n = n;
    p.root = omega;
    p.even_n_caveat = n % 2 == 0;
    AbGroup g({n, n});
    const CycNum wi = omega.inv();
    // x is (1,g)-primitive, X is (1,G)-primitive; Xx = w^-1 xX - w^-1 (1 - gG)
    p.datum = datum_of(g, {g.gen(0), g.gen(1)}, {{wi, wi}, {omega, omega}}, {{CycNum(), -wi}, {CycNum(1), CycNum()}});
    p.group_names = {"g", "G"};
    p.natives = {{"x", 0, g.identity()}, {"X", 1, g.identity()}};
    const CycNum one(1);
    const Letter gg = grp(0), gG = grp(1), x = nat(0), X = nat(1);
    p.native_relations = {
        rel(p, "g^n=1", {{one, repeat(gg, n)}, {-one, {}}}),
        rel(p, "G^n=1", {{one, repeat(gG, n)}, {-one, {}}}),
        rel(p, "gG=Gg", {{one, {gg, gG}}, {-one, {gG, gg}}}),
        rel(p, "gx=w^-1xg", {{one, {gg, x}}, {-wi, {x, gg}}}),
        rel(p, "Gx=w^-1xG", {{one, {gG, x}}, {-wi, {x, gG}}}),
        rel(p, "gX=wXg", {{one, {gg, X}}, {-omega, {X, gg}}}),
        rel(p, "GX=wXG", {{one, {gG, X}}, {-omega, {X, gG}}}),
        rel(p, "x^n=0", {{one, repeat(x, n)}}),
        rel(p, "X^n=0", {{one, repeat(X, n)}}),
        rel(p, "xX-wXx=1-gG", {{one, {x, X}}, {-omega, {X, x}}, {-one, {}}, {one, {gg, gG}}}),
    };
    return finish(std::move(p));
}

HopfPresentation uq_sl2(long n, const CycNum& omega) {
    if (n < 3 || n % 2 == 0) throw BadOrder("u_q(sl2) needs an odd n >= 3, got " + std::to_string(n));
    require_primitive(n, omega);
    HopfPresentation p;
    p.family = Family::uq_sl2;
    p.n = n;
    p.root = omega;
    AbGroup g({n});
    const GrpElt a = g.gen(0);
    const CycNum w2 = omega.pow(2);
    // x1 = x a^-1 and x2 = y, both (1, a^-1)-primitive
    p.datum = datum_of(g, {a.inverse(), a.inverse()}, {{w2}, {w2.inv()}}, {{CycNum(), CycNum(-1)}, {w2, CycNum()}});
    p.group_names = {"a"};
    p.natives = {{"x", 0, a}, {"y", 1, g.identity()}};
    const CycNum one(1);
    const Letter la = grp(0), x = nat(0), y = nat(1);
    p.native_relations = {
        rel(p, "a^n=1", {{one, repeat(la, n)}, {-one, {}}}),
        rel(p, "x^n=0", {{one, repeat(x, n)}}),
        rel(p, "y^n=0", {{one, repeat(y, n)}}),
        rel(p, "ax=w^2xa", {{one, {la, x}}, {-w2, {x, la}}}),
        rel(p, "ay=w^-2ya", {{one, {la, y}}, {-w2.inv(), {y, la}}}),
        rel(p, "xy-yx=a-a^-1", {{one, {x, y}}, {-one, {y, x}}, {-one, {la}}, {one, repeat(la, n - 1)}}),
    };
    return finish(std::move(p));
}

HopfPresentation book(long p_, const CycNum& q, long m) {
    if (p_ < 2 || order_of(q) != p_) throw BadOrder("book algebra needs q of order p");
    if (m % p_ == 0) throw BadOrder("book algebra needs m != 0 mod p");
    const long mm = ((m % p_) + p_) % p_;
    HopfPresentation p;
    p.family = Family::book;
    p.n = p_;
    p.root = q;
    p.book_m = mm;
    AbGroup g({p_});
    const GrpElt a = g.gen(0);
    // x1 = x a^-1 is (1, a^-1)-primitive, x2 = y is (1, a^m)-primitive
    p.datum = datum_of(g, {a.inverse(), a.pow(mm)}, {{q}, {q.pow(mm)}}, {{CycNum(), CycNum()}, {CycNum(), CycNum()}});
    p.group_names = {"a"};
    p.natives = {{"x", 0, a}, {"y", 1, g.identity()}};
    const CycNum one(1);
    const Letter la = grp(0), x = nat(0), y = nat(1);
    p.native_relations = {
        rel(p, "a^p=1", {{one, repeat(la, p_)}, {-one, {}}}),
        rel(p, "x^p=0", {{one, repeat(x, p_)}}),
        rel(p, "y^p=0", {{one, repeat(y, p_)}}),
        rel(p, "axa^-1=qx", {{one, {la, x}}, {-q, {x, la}}}),
        rel(p, "aya^-1=q^my", {{one, {la, y}}, {-q.pow(mm), {y, la}}}),
        rel(p, "xy-yx=0", {{one, {x, y}}, {-one, {y, x}}}),
    };
    return finish(std::move(p));
}

HopfPresentation p3_example(long p_, const CycNum& omega) {
    if (p_ < 3 || !is_prime(p_)) throw BadOrder("p^3 example needs an odd prime p");
    if (order_of(omega) != p_) throw BadOrder("omega must have order p");
    HopfPresentation p;
    p.family = Family::p3;
    p.n = p_;
    p.root = omega;
    AbGroup g({p_, p_});
    p.datum = datum_of(g, {g.gen(0)}, {{omega, CycNum(1)}}, {{CycNum()}});
    p.group_names = {"g", "h"};
    p.natives = {{"x", 0, g.identity()}};
    const CycNum one(1);
    const Letter lg = grp(0), lh = grp(1), x = nat(0);
    p.native_relations = {
        rel(p, "g^p=1", {{one, repeat(lg, p_)}, {-one, {}}}),
        rel(p, "h^p=1", {{one, repeat(lh, p_)}, {-one, {}}}),
        rel(p, "gh=hg", {{one, {lg, lh}}, {-one, {lh, lg}}}),
        rel(p, "gx=wxg", {{one, {lg, x}}, {-omega, {x, lg}}}),
        rel(p, "hx=xh", {{one, {lh, x}}, {-one, {x, lh}}}),
        rel(p, "x^p=0", {{one, repeat(x, p_)}}),
    };
    return finish(std::move(p));
}

ExactMatrix translate_generator(const ExactMatrix& u_x, const ExactMatrix& u_a, Translate dir) {
    if (!u_a.square() || u_x.rows() != u_a.rows() || u_x.cols() != u_a.cols())
        throw ShapeMismatch("translate_generator needs square matrices of one size");
    if (dir == Translate::from_canonical) return mul(u_x, u_a);
    return mul(u_x, inverse(u_a));
}

}  // namespace hopfact
