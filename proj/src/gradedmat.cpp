#include "hopfact/gradedmat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hopfact/errors.hpp"

namespace hopfact {

std::string to_string(GradingKind k) {
    switch (k) {
        case GradingKind::elementary: return "elementary";
        case GradingKind::division: return "division";
        case GradingKind::mixed: return "mixed";
    }
    return "?";
}

std::vector<GrpElt> Grading::support() const {
    std::vector<GrpElt> s;
    for (const auto& c : components) s.push_back(c.degree);
    return s;
}

size_t Grading::total_dim() const {
    size_t d = 0;
    for (const auto& c : components) d += c.basis.size();
    return d;
}

const Component* Grading::component(const GrpElt& d) const {
    for (const auto& c : components)
        if (c.degree == d) return &c;
    return nullptr;
}

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// echelonized basis of the span of the given m x m matrices
std::vector<ExactMatrix> echelon_matrices(const std::vector<std::vector<CycNum>>& vecs, size_t m) {
    if (vecs.empty()) return {};
    ExactMatrix rows(vecs.size(), m * m);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < m * m; ++j) rows(i, j) = vecs[i][j];
    std::vector<size_t> piv;
    ExactMatrix r = rref(rows, &piv);
    std::vector<ExactMatrix> out;
    for (size_t k = 0; k < piv.size(); ++k) {
        std::vector<CycNum> v(r.data().begin() + k * m * m, r.data().begin() + (k + 1) * m * m);
        out.push_back(unvec(v, m, m));
    }
    return out;
}

Grading assemble(size_t m, const AbGroup& d, std::map<long, std::vector<std::vector<CycNum>>> by_index) {
    Grading g;
    g.m = m;
    g.group = d;
    const auto elts = d.elements();
    for (auto& [idx, vecs] : by_index) {
        auto basis = echelon_matrices(vecs, m);
        if (basis.empty()) continue;
        g.components.push_back(Component{elts[idx], std::move(basis)});
    }
    return g;
}

// zeta exponent bookkeeping for psi_l(d) = zeta_{m_l}^{d_l}
CycNum dual_gen_value(const AbGroup& d, size_t l, const GrpElt& x) { return cyc_root(d.factors()[l], x[l]); }

}  // namespace

std::pair<ExactMatrix, ExactMatrix> clock_shift(long n, const CycNum& omega) {
    if (n < 1 || order_of(omega) != n) throw NotPrimitiveRoot("clock_shift needs a primitive n-th root of unity");
    std::vector<CycNum> d;
    for (long i = 0; i < n; ++i) d.push_back(omega.pow(i));
    ExactMatrix c = ExactMatrix::diag(d);
    ExactMatrix s(n, n);
    for (long i = 0; i < n; ++i) s(i, (i + 1) % n) = CycNum(1);
    return {c, s};
}

const ExactMatrix& DivisionData::X(const GrpElt& t) const {
    return x.at(static_cast<size_t>(grading.group.index_of(t)));
}

DivisionData division_data(const AbGroup& t, const Bicharacter& beta) {
    if (beta.support() != t) throw ParentMismatch("bicharacter lives on a different group");
    const long ord = t.order();
    const long ell = std::lround(std::sqrt(static_cast<double>(ord)));
    if (ell * ell != ord) throw BadSupportShape("support order is not a square");
    const BetaProps props = beta_props(beta);
    if (!props.alternating) throw BadBicharacter("bicharacter is not alternating");
    if (!props.nondegenerate) throw DegenerateBicharacter("bicharacter has a nontrivial kernel");

    const long big = t.exponent();
    // candidate order: the group's own generators first, then everything else
    std::vector<GrpElt> pref;
    for (size_t l = 0; l < t.rank(); ++l) pref.push_back(t.gen(l));
    for (const auto& x : t.elements())
        if (std::find(pref.begin(), pref.end(), x) == pref.end()) pref.push_back(x);

    std::vector<GrpElt> rest = t.elements();
    std::vector<std::pair<GrpElt, GrpElt>> pairs;
    auto in_rest = [&](const GrpElt& x) { return std::find(rest.begin(), rest.end(), x) != rest.end(); };
    while (rest.size() > 1) {
        long maxord = 1;
        for (const auto& x : rest) maxord = std::max(maxord, x.order());
        std::optional<GrpElt> mu, nu;
        for (const auto& x : pref)
            if (in_rest(x) && x.order() == maxord) {
                mu = x;
                break;
            }
        for (const auto& y : pref) {
            if (!in_rest(y) || y.order() != maxord) continue;
            const long e = beta.exponent_at(*mu, y);
            if (big / std::gcd(big, e) == maxord) {
                nu = y;
                break;
            }
        }
        if (!nu) throw BadSupportShape("no symplectic partner found");
        pairs.emplace_back(*mu, *nu);
        std::vector<GrpElt> next;
        for (const auto& x : rest)
            if (beta.exponent_at(x, *mu) == 0 && beta.exponent_at(x, *nu) == 0) next.push_back(x);
        rest = std::move(next);
    }
    auto first_coord = [](const GrpElt& x) {
        size_t i = 0;
        while (i < x.exps().size() && x[i] == 0) ++i;
        return i;
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return first_coord(a.first) < first_coord(b.first);
    });

    std::vector<std::pair<ExactMatrix, ExactMatrix>> cs;
    for (const auto& [mu, nu] : pairs) cs.push_back(clock_shift(mu.order(), beta(mu, nu)));

    DivisionData out;
    out.beta = beta;
    out.symplectic_pairs = pairs;
    out.elements = t.elements();
    out.x.assign(out.elements.size(), ExactMatrix());
    // walk all coordinate tuples (k_1, l_1, ..., k_r, l_r)
    const size_t r = pairs.size();
    std::vector<long> coord(2 * r, 0);
    for (;;) {
        GrpElt e = t.identity();
        ExactMatrix x = ExactMatrix::identity(1);
        for (size_t i = 0; i < r; ++i) {
            e = e * pairs[i].first.pow(coord[2 * i]) * pairs[i].second.pow(coord[2 * i + 1]);
            x = kron(x, mul(cs[i].first.pow(coord[2 * i]), cs[i].second.pow(coord[2 * i + 1])));
        }
        out.x[static_cast<size_t>(t.index_of(e))] = x;
        bool carry = true;
        for (size_t p = 2 * r; p-- > 0 && carry;) {
            carry = ++coord[p] == pairs[p / 2].first.order();
            if (carry) coord[p] = 0;
        }
        if (carry) break;
    }

    Grading& g = out.grading;
    g.m = static_cast<size_t>(ell);
    g.group = t;
    g.declared_kind = GradingKind::division;
    for (size_t i = 0; i < out.elements.size(); ++i) g.components.push_back(Component{out.elements[i], {out.x[i]}});
    // U_l = X_s with beta(t_j, s) = psi_l(t_j) on the generators t_j
    for (size_t l = 0; l < t.rank(); ++l) {
        std::optional<GrpElt> found;
        for (const auto& s : out.elements) {
            bool ok = true;
            for (size_t j = 0; j < t.rank() && ok; ++j) {
                const long want = mod((j == l ? 1 : 0) * (big / t.factors()[l]), big);
                ok = beta.exponent_at(t.gen(j), s) == want;
            }
            if (ok) {
                found = s;
                break;
            }
        }
        if (!found) throw DegenerateBicharacter("dual generator not realized by the bicharacter");
        g.rep.push_back(out.X(*found));
    }
    return out;
}

Grading division_grading(const AbGroup& t, const Bicharacter& beta) { return division_data(t, beta).grading; }

Grading elementary_grading_from_degrees(const AbGroup& d, const std::vector<GrpElt>& degrees) {
    const size_t m = degrees.size();
    std::map<long, std::vector<std::vector<CycNum>>> by_index;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const GrpElt deg = degrees[i] * degrees[j].inverse();
            by_index[d.index_of(deg)].push_back(vec(ExactMatrix::unit(m, i, j)));
        }
    Grading g = assemble(m, d, std::move(by_index));
    g.declared_kind = GradingKind::elementary;
    for (size_t l = 0; l < d.rank(); ++l) {
        std::vector<CycNum> diag;
        for (const auto& x : degrees) diag.push_back(dual_gen_value(d, l, x));
        g.rep.push_back(ExactMatrix::diag(diag));
    }
    return g;
}

Grading elementary_grading(const std::vector<Character>& chars) {
    if (chars.empty()) throw std::invalid_argument("elementary_grading needs at least one character");
    const AbGroup& parent = chars[0].parent();
    AbGroup d(parent.factors());
    std::vector<GrpElt> degs;
    for (const auto& c : chars) {
        if (c.parent() != parent) throw ParentMismatch("characters of different groups");
        degs.push_back(d.elt(c.exps()));
    }
    return elementary_grading_from_degrees(d, degs);
}

Grading grading_from_action(const AbGroup& g, const std::vector<ExactMatrix>& u) {
    if (u.size() != g.rank()) throw std::invalid_argument("one matrix per group generator expected");
    if (u.empty()) throw std::invalid_argument("trivial group: nothing to decompose");
    const size_t m = u[0].rows();
    std::vector<ExactMatrix> uinv;
    for (size_t l = 0; l < u.size(); ++l) {
        if (!u[l].square() || u[l].rows() != m) throw ShapeMismatch("action matrices must be m x m");
        uinv.push_back(inverse(u[l]));
        if (!u[l].pow(g.factors()[l]).scalar_value())
            throw NotFiniteOrder("u(g_" + std::to_string(l) + ")^order is not scalar");
    }
    for (size_t a = 0; a < u.size(); ++a)
        for (size_t b = a + 1; b < u.size(); ++b)
            if (!mul(mul(u[a], u[b]), mul(uinv[a], uinv[b])).scalar_value())
                throw NotCommutingAction("conjugations by u(g_" + std::to_string(a) + ") and u(g_" +
                                         std::to_string(b) + ") do not commute");

    struct Block {
        std::vector<long> exps;
        std::vector<std::vector<CycNum>> vecs;
    };
    std::vector<Block> blocks(1);
    for (size_t k = 0; k < m * m; ++k) {
        std::vector<CycNum> e(m * m);
        e[k] = CycNum(1);
        blocks[0].vecs.push_back(std::move(e));
    }
    for (size_t l = 0; l < u.size(); ++l) {
        const long ord = g.factors()[l];
        std::vector<Block> next;
        for (const auto& b : blocks) {
            std::vector<std::vector<CycNum>> ad;
            for (const auto& v : b.vecs) ad.push_back(vec(mul(mul(u[l], unvec(v, m, m)), uinv[l])));
            size_t found = 0;
            for (long e = 0; e < ord; ++e) {
                const CycNum c = cyc_root(ord, e);
                ExactMatrix sys(m * m, b.vecs.size());
                for (size_t k = 0; k < b.vecs.size(); ++k)
                    for (size_t i = 0; i < m * m; ++i) sys(i, k) = ad[k][i] - c * b.vecs[k][i];
                auto ns = nullspace(sys);
                if (ns.empty()) continue;
                Block child;
                child.exps = b.exps;
                child.exps.push_back(e);
                for (const auto& y : ns) {
                    std::vector<CycNum> v(m * m);
                    for (size_t k = 0; k < y.size(); ++k) {
                        if (y[k].is_zero()) continue;
                        for (size_t i = 0; i < m * m; ++i)
                            if (!b.vecs[k][i].is_zero()) v[i] += y[k] * b.vecs[k][i];
                    }
                    child.vecs.push_back(std::move(v));
                }
                found += child.vecs.size();
                next.push_back(std::move(child));
            }
            if (found != b.vecs.size()) throw NotFiniteOrder("conjugation operator is not diagonalizable");
        }
        blocks = std::move(next);
    }
    AbGroup d(g.factors());
    std::map<long, std::vector<std::vector<CycNum>>> by_index;
    for (auto& b : blocks) by_index[d.index_of(d.elt(b.exps))] = std::move(b.vecs);
    Grading out = assemble(m, d, std::move(by_index));
    out.rep = u;
    return out;
}

Grading kron_grading(const Grading& a, const Grading& b) {
    if (a.group != b.group) throw ParentMismatch("tensor product of gradings by different groups");
    const size_t m = a.m * b.m;
    std::map<long, std::vector<std::vector<CycNum>>> by_index;
    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            const long idx = a.group.index_of(ca.degree * cb.degree);
            for (const auto& x : ca.basis)
                for (const auto& y : cb.basis) by_index[idx].push_back(vec(kron(x, y)));
        }
    Grading g = assemble(m, a.group, std::move(by_index));
    if (!a.rep.empty() && !b.rep.empty())
        for (size_t l = 0; l < a.rep.size(); ++l) g.rep.push_back(kron(a.rep[l], b.rep[l]));
    return g;
}

Grading regrade(const Grading& a, const AbGroup& target, const std::vector<GrpElt>& images) {
    const AbGroup& d = a.group;
    if (images.size() != d.rank()) throw std::invalid_argument("one image per generator expected");
    for (size_t l = 0; l < d.rank(); ++l) {
        if (images[l].parent() != target) throw ParentMismatch("image outside the target group");
        if (!images[l].pow(d.factors()[l]).is_identity()) throw NoSolution("images do not define a homomorphism");
    }
    auto phi = [&](const GrpElt& x) {
        GrpElt y = target.identity();
        for (size_t l = 0; l < d.rank(); ++l) y = y * images[l].pow(x[l]);
        return y;
    };
    std::map<long, std::vector<std::vector<CycNum>>> by_index;
    for (const auto& c : a.components)
        for (const auto& x : c.basis) by_index[target.index_of(phi(c.degree))].push_back(vec(x));
    Grading g = assemble(a.m, target, std::move(by_index));
    if (!a.rep.empty()) {
        // psi'_k o phi = prod_l psi_l^{e_l} with e_l = (img_l)_k * m_l / m'_k
        for (size_t k = 0; k < target.rank(); ++k) {
            ExactMatrix u = ExactMatrix::identity(a.m);
            for (size_t l = 0; l < d.rank(); ++l) {
                const long e = images[l][k] * d.factors()[l] / target.factors()[k];
                if (e != 0) u = mul(u, a.rep[l].pow(e));
            }
            g.rep.push_back(u);
        }
    }
    return g;
}

std::vector<ExactMatrix> recover_rep(const Grading& g) {
    const size_t m = g.m;
    const size_t n = m * m;
    std::vector<ExactMatrix> rep;
    for (size_t l = 0; l < g.group.rank(); ++l) {
        EchelonBasis eqs(n);
        for (const auto& c : g.components) {
            const CycNum psi = dual_gen_value(g.group, l, c.degree);
            for (const auto& a : c.basis) {
                // U A - psi A U = 0, entry (i, j)
                for (size_t i = 0; i < m && eqs.dim() + 1 < n; ++i)
                    for (size_t j = 0; j < m && eqs.dim() + 1 < n; ++j) {
                        std::vector<CycNum> row(n);
                        bool any = false;
                        for (size_t k = 0; k < m; ++k) {
                            if (!a(k, j).is_zero()) {
                                row[i * m + k] += a(k, j);
                                any = true;
                            }
                            if (!a(i, k).is_zero()) {
                                row[k * m + j] -= psi * a(i, k);
                                any = true;
                            }
                        }
                        if (any) eqs.add(std::move(row));
                    }
                if (eqs.dim() + 1 >= n) break;
            }
            if (eqs.dim() + 1 >= n) break;
        }
        if (eqs.dim() + 1 != n) throw MalformedGrading("grading does not determine an inner automorphism");
        ExactMatrix sys(eqs.dim(), n);
        for (size_t r = 0; r < eqs.dim(); ++r)
            for (size_t k = 0; k < n; ++k) sys(r, k) = eqs.rows()[r][k];
        auto ns = nullspace(sys);
        ExactMatrix u = unvec(ns.at(0), m, m);
        auto uinv = try_inverse(u);
        if (!uinv) throw MalformedGrading("recovered automorphism is singular");
        for (const auto& c : g.components) {
            const CycNum psi = dual_gen_value(g.group, l, c.degree);
            for (const auto& a : c.basis)
                if (mul(mul(u, a), *uinv) != psi * a) throw MalformedGrading("components are not eigenspaces");
        }
        rep.push_back(u);
    }
    return rep;
}

bool product_rule_holds(const Grading& g) {
    std::map<long, EchelonBasis> spans;
    for (const auto& c : g.components) {
        EchelonBasis e(g.m * g.m);
        for (const auto& x : c.basis) e.add(vec(x));
        spans.emplace(g.group.index_of(c.degree), std::move(e));
    }
    for (const auto& ca : g.components)
        for (const auto& cb : g.components) {
            auto it = spans.find(g.group.index_of(ca.degree * cb.degree));
            for (const auto& x : ca.basis)
                for (const auto& y : cb.basis) {
                    ExactMatrix p = mul(x, y);
                    if (it == spans.end()) {
                        if (!p.is_zero()) return false;
                    } else if (!it->second.contains(vec(p))) {
                        return false;
                    }
                }
        }
    return true;
}

KindReport classify_kind(const Grading& g) {
    if (g.total_dim() != g.m * g.m) throw MalformedGrading("components do not span M_m");
    const std::vector<ExactMatrix> rep = g.rep.empty() ? recover_rep(g) : g.rep;
    const AbGroup& d = g.group;
    const size_t k = d.rank();
    const long big = d.exponent();
    if (rep.size() != k) throw MalformedGrading("one automorphism per dual generator expected");

    // U_a U_b = zeta_E^{c[a][b]} U_b U_a
    std::vector<std::vector<long>> c(k, std::vector<long>(k, 0));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            auto s = mul(rep[a], rep[b]).multiple_of(mul(rep[b], rep[a]));
            if (!s) throw MalformedGrading("automorphisms do not commute projectively");
            auto e = root_exponent(*s, big);
            if (!e) throw MalformedGrading("commutator scalar is not a root of unity");
            c[a][b] = *e;
        }
    const AbGroup dhat(d.factors());
    auto cexp = [&](const GrpElt& w1, const GrpElt& w2) {
        long acc = 0;
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) acc = mod(acc + w1[a] * w2[b] % big * c[a][b], big);
        return acc;
    };
    // degree of U_w: psi_a(tau_w) = zeta_E^{c(a, w)}
    auto tau = [&](const GrpElt& w) {
        std::vector<long> e(k);
        for (size_t a = 0; a < k; ++a) {
            const long ex = cexp(dhat.gen(a), w);
            const long step = big / d.factors()[a];
            if (ex % step != 0) throw MalformedGrading("commutator scalar of the wrong order");
            e[a] = ex / step;
        }
        return d.elt(e);
    };
    std::vector<GrpElt> tgens;
    for (size_t a = 0; a < k; ++a) tgens.push_back(tau(dhat.gen(a)));

    KindReport rep_out;
    rep_out.support_group = Subgroup::generated_by(d, tgens);
    const long tord = rep_out.support_group.order();
    const long ell = std::lround(std::sqrt(static_cast<double>(tord)));
    if (ell * ell != tord || static_cast<long>(g.m) % ell != 0)
        throw MalformedGrading("support of the division part has impossible order");
    rep_out.ell = ell;

    std::vector<GrpElt> dhat_elts = dhat.elements();
    auto preimage = [&](const GrpElt& t) {
        for (const auto& w : dhat_elts)
            if (tau(w) == t) return w;
        throw MalformedGrading("degree not realized by an automorphism");
    };
    std::vector<GrpElt> pre;
    for (const auto& t : rep_out.support_group.generators) pre.push_back(preimage(t));
    for (size_t i = 0; i < pre.size(); ++i) {
        std::vector<CycNum> row;
        for (size_t j = 0; j < pre.size(); ++j) row.push_back(cyc_root(big, cexp(pre[j], pre[i])));
        rep_out.beta_values.push_back(row);
    }

    if (tord == 1) {
        rep_out.kind = GradingKind::elementary;
    } else if (tord == static_cast<long>(g.m * g.m)) {
        rep_out.kind = GradingKind::division;
        for (const auto& comp : g.components)
            if (comp.basis.size() > 1) throw MalformedGrading("division grading with a component of dimension > 1");
    } else {
        rep_out.kind = GradingKind::mixed;
    }

    // radical K of the commutator form, acting by commuting operators on F^m
    std::vector<GrpElt> kelts;
    for (const auto& w : dhat_elts)
        if (tau(w).is_identity()) kelts.push_back(w);
    const Subgroup kgrp = Subgroup::from_elements(dhat, kelts);
    const size_t m = g.m;
    auto u_of = [&](const GrpElt& w) {
        ExactMatrix u = ExactMatrix::identity(m);
        for (size_t a = 0; a < k; ++a)
            if (w[a] != 0) u = mul(u, rep[a].pow(w[a]));
        return u;
    };
    struct Block {
        std::vector<long> labels;
        std::vector<std::vector<CycNum>> vecs;
    };
    std::vector<Block> blocks(1);
    for (size_t i = 0; i < m; ++i) {
        std::vector<CycNum> e(m);
        e[i] = CycNum(1);
        blocks[0].vecs.push_back(std::move(e));
    }
    std::vector<long> kord;
    for (const auto& kg : kgrp.generators) {
        const long o = kg.order();
        kord.push_back(o);
        const ExactMatrix uk = u_of(kg);
        auto theta = uk.pow(o).scalar_value();
        if (!theta) throw MalformedGrading("radical element of infinite projective order");
        auto r = nth_root(*theta, o);
        if (!r) throw MalformedGrading("eigenvalues of the radical lie outside the cyclotomic field");
        std::vector<Block> next;
        for (const auto& b : blocks) {
            size_t found = 0;
            for (long j = 0; j < o; ++j) {
                const CycNum ev = *r * cyc_root(o, j);
                ExactMatrix sys(m, b.vecs.size());
                for (size_t col = 0; col < b.vecs.size(); ++col) {
                    ExactMatrix v = unvec(b.vecs[col], m, 1);
                    ExactMatrix uv = mul(uk, v);
                    for (size_t i = 0; i < m; ++i) sys(i, col) = uv(i, 0) - ev * v(i, 0);
                }
                auto ns = nullspace(sys);
                if (ns.empty()) continue;
                Block child;
                child.labels = b.labels;
                child.labels.push_back(j);
                for (const auto& y : ns) {
                    std::vector<CycNum> v(m);
                    for (size_t col = 0; col < y.size(); ++col)
                        if (!y[col].is_zero())
                            for (size_t i = 0; i < m; ++i) v[i] += y[col] * b.vecs[col][i];
                    child.vecs.push_back(std::move(v));
                }
                found += child.vecs.size();
                next.push_back(std::move(child));
            }
            if (found != b.vecs.size()) throw MalformedGrading("radical does not act diagonalizably");
        }
        blocks = std::move(next);
    }
    const auto delts = d.elements();
    std::map<long, long> kappa;
    for (const auto& b : blocks) {
        if (static_cast<long>(b.vecs.size()) % ell != 0) throw MalformedGrading("block dimension not divisible by ell");
        std::optional<GrpElt> label;
        for (const auto& x : delts) {
            bool ok = true;
            for (size_t i = 0; i < kgrp.generators.size() && ok; ++i) {
                const GrpElt& kg = kgrp.generators[i];
                long val = 0;
                for (size_t a = 0; a < k; ++a) val = mod(val + kg[a] * x[a] * (big / d.factors()[a]), big);
                const long want = mod((b.labels[i] - blocks[0].labels[i]) * (big / kord[i]), big);
                ok = val == want;
            }
            if (ok) {
                label = x;
                break;
            }
        }
        if (!label) throw MalformedGrading("eigen-character does not extend to the degree group");
        kappa[d.index_of(*label)] += static_cast<long>(b.vecs.size()) / ell;
    }
    for (const auto& [idx, mult] : kappa) rep_out.kappa.emplace_back(delts[idx], mult);
    return rep_out;
}

DimFunction dim_function(const AbGroup& d, const std::vector<std::pair<GrpElt, long>>& kappa) {
    DimFunction f(static_cast<size_t>(d.order()), 0);
    for (const auto& [x, n] : kappa) f[static_cast<size_t>(d.index_of(x))] += n;
    return f;
}

std::optional<GrpElt> elementary_iso(const AbGroup& d, const DimFunction& kappa1, const DimFunction& kappa2) {
    const auto elts = d.elements();
    if (kappa1.size() != elts.size() || kappa2.size() != elts.size())
        throw std::invalid_argument("dimension functions must be indexed by the whole group");
    for (const auto& gamma : elts) {
        bool ok = true;
        for (const auto& x : elts) {
            if (kappa2[d.index_of(x)] != kappa1[d.index_of(gamma * x)]) {
                ok = false;
                break;
            }
        }
        if (ok) return gamma;
    }
    return std::nullopt;
}

}  // namespace hopfact
