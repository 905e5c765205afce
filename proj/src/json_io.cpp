#include "hopfact/json_io.hpp"

#include <map>

namespace hopfact {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
    throw SchemaError((where.empty() ? std::string("/") : where) + ": " + msg);
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(at(where, key), "missing field");
    return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) schema(where, "expected an object");
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

long as_long(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) schema(where, "expected an integer");
    return j.get<long>();
}

bool as_bool(const Json& j, const std::string& where) {
    if (!j.is_boolean()) schema(where, "expected a boolean");
    return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
    if (!j.is_array()) schema(where, "expected an array");
    return j;
}

std::vector<long> long_list(const Json& j, const std::string& where) {
    std::vector<long> out;
    for (size_t i = 0; i < as_array(j, where).size(); ++i) out.push_back(as_long(j[i], at(where, i)));
    return out;
}

mpq_class rational_from(const std::string& s, const std::string& where) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) schema(where, "not a rational \"p/q\": " + s);
    if (q.get_den() == 0) schema(where, "zero denominator");
    q.canonicalize();
    return q;
}

long get_long(const Json& j, const std::string& key, const std::string& where) {
    return as_long(field(j, key, where), at(where, key));
}

CycNum get_cyc(const Json& j, const std::string& key, const std::string& where, std::optional<CycNum> fallback = {}) {
    if (const Json* v = optional_field(j, key, where)) return cyc_from_json(*v, at(where, key));
    if (fallback) return *fallback;
    schema(at(where, key), "missing field");
}

Json cyc_list(const std::vector<CycNum>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

}  // namespace

// ---- scalars and matrices --------------------------------------------------------

Json to_json(const CycNum& z) {
    Json coeffs = Json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(rational_str(c));
    return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}, {"text", z.str()}};
}

CycNum cyc_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return CycNum(j.get<long>());
    if (j.is_string()) return CycNum(rational_from(j.get<std::string>(), where));
    if (!j.is_object()) schema(where, "expected a cyclotomic number");
    if (const Json* z = optional_field(j, "zeta", where)) {
        const auto nk = long_list(*z, at(where, "zeta"));
        if (nk.size() != 2 || nk[0] < 1) schema(at(where, "zeta"), "expected [n, k] with n >= 1");
        return cyc_root(nk[0], nk[1]);
    }
    const long n = get_long(j, "conductor", where);
    if (n < 1) schema(at(where, "conductor"), "conductor must be >= 1");
    const Json& cs = as_array(field(j, "coeffs", where), at(where, "coeffs"));
    std::vector<mpq_class> coeffs;
    for (size_t i = 0; i < cs.size(); ++i) {
        const std::string w = at(at(where, "coeffs"), i);
        if (cs[i].is_number_integer())
            coeffs.emplace_back(cs[i].get<long>());
        else
            coeffs.push_back(rational_from(as_string(cs[i], w), w));
    }
    return CycNum::from_coeffs(n, std::move(coeffs));
}

Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j, const std::string& where) {
    const Json& rows = as_array(j, where);
    if (rows.empty()) return {};
    const size_t cols = as_array(rows[0], at(where, size_t{0})).size();
    ExactMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        const std::string wr = at(where, i);
        if (as_array(rows[i], wr).size() != cols) schema(wr, "ragged matrix row");
        for (size_t k = 0; k < cols; ++k) m(i, k) = cyc_from_json(rows[i][k], at(wr, k));
    }
    return m;
}

// ---- groups and presentations -------------------------------------------------------

Json to_json(const AbGroup& g) { return g.factors(); }
Json to_json(const GrpElt& g) { return g.exps(); }

Json to_json(const Datum& d) {
    Json a = Json::array(), chi = Json::array(), lam = Json::array();
    for (const auto& x : d.a) a.push_back(to_json(x));
    for (const auto& c : d.chi) chi.push_back(c.exps());
    for (const auto& row : d.lambda) lam.push_back(cyc_list(row));
    return Json{{"group", to_json(d.group)}, {"a", a}, {"chi", chi}, {"mu", d.mu}, {"lambda", lam}};
}

namespace {

Datum datum_from_json(const Json& j, const std::string& where) {
    Datum d;
    const auto factors = long_list(field(j, "group", where), at(where, "group"));
    for (long f : factors)
        if (f < 1) schema(at(where, "group"), "factor orders must be >= 1");
    d.group = AbGroup(factors);
    auto elt = [&](const Json& e, const std::string& w) {
        const auto ex = long_list(e, w);
        if (ex.size() != factors.size()) schema(w, "exponent vector length differs from the group rank");
        return ex;
    };
    const Json& a = as_array(field(j, "a", where), at(where, "a"));
    for (size_t i = 0; i < a.size(); ++i) d.a.push_back(d.group.elt(elt(a[i], at(at(where, "a"), i))));
    const Json& chi = as_array(field(j, "chi", where), at(where, "chi"));
    if (chi.size() != a.size()) schema(at(where, "chi"), "one character per skew-primitive");
    for (size_t i = 0; i < chi.size(); ++i) d.chi.emplace_back(d.group, elt(chi[i], at(at(where, "chi"), i)));
    const auto mu = long_list(field(j, "mu", where), at(where, "mu"));
    if (mu.size() != a.size()) schema(at(where, "mu"), "one mu per skew-primitive");
    for (long v : mu) {
        if (v != 0 && v != 1) schema(at(where, "mu"), "mu must be 0 or 1");
        d.mu.push_back(static_cast<int>(v));
    }
    const Json& lam = as_array(field(j, "lambda", where), at(where, "lambda"));
    if (lam.size() != a.size()) schema(at(where, "lambda"), "lambda must be rank x rank");
    for (size_t i = 0; i < lam.size(); ++i) {
        const std::string w = at(at(where, "lambda"), i);
        if (as_array(lam[i], w).size() != a.size()) schema(w, "lambda must be rank x rank");
        std::vector<CycNum> row;
        for (size_t k = 0; k < a.size(); ++k) row.push_back(cyc_from_json(lam[i][k], at(w, k)));
        d.lambda.push_back(std::move(row));
    }
    return d;
}

}  // namespace

Json to_json(const HopfPresentation& p) {
    Json params = Json::object();
    switch (p.family) {
        case Family::book:
            params = {{"p", p.n}, {"q", to_json(p.root)}, {"m", p.book_m}};
            break;
        case Family::p3:
            params = {{"p", p.n}, {"omega", to_json(p.root)}};
            break;
        case Family::custom:
            break;
        default:
            params = {{"n", p.n}, {"omega", to_json(p.root)}};
    }
    return Json{{"family", to_string(p.family)}, {"params", params}, {"datum", to_json(p.datum)}};
}

HopfPresentation presentation_from_json(const Json& j, const std::string& where) {
    const std::string fam_s = as_string(field(j, "family", where), at(where, "family"));
    Family fam;
    try {
        fam = family_from_string(fam_s);
    } catch (const Error&) {
        schema(at(where, "family"), "unknown family " + fam_s);
    }
    if (fam == Family::custom) {
        const std::string w = at(where, "datum");
        return make_presentation(datum_from_json(field(j, "datum", where), w));
    }
    const std::string wp = at(where, "params");
    const Json& ps = field(j, "params", where);
    switch (fam) {
        case Family::taft:
        case Family::dd_taft:
        case Family::uq_sl2: {
            const long n = get_long(ps, "n", wp);
            if (n < 2) schema(at(wp, "n"), "n must be >= 2");
            const CycNum w = get_cyc(ps, "omega", wp, cyc_root(n, 1));
            if (fam == Family::taft) return taft(n, w);
            if (fam == Family::dd_taft) return dd_taft(n, w);
            return uq_sl2(n, w);
        }
        case Family::book: {
            const long p = get_long(ps, "p", wp);
            if (p < 2) schema(at(wp, "p"), "p must be >= 2");
            return book(p, get_cyc(ps, "q", wp, cyc_root(p, 1)), get_long(ps, "m", wp));
        }
        case Family::p3: {
            const long p = get_long(ps, "p", wp);
            if (p < 2) schema(at(wp, "p"), "p must be >= 2");
            return p3_example(p, get_cyc(ps, "omega", wp, cyc_root(p, 1)));
        }
        default:
            schema(at(where, "family"), "unsupported family");
    }
}

// ---- actions and certificates ----------------------------------------------------------

Json to_json(const InnerActionMap& a) {
    Json u = Json::object();
    for (size_t l = 0; l < a.ug.size(); ++l) u[a.pres.group_names[l]] = to_json(a.ug[l]);
    // native names read better and round-trip through make_action_named
    for (size_t i = 0; i < a.ux.size(); ++i) {
        const NativeGenerator* nat = nullptr;
        for (const auto& n : a.pres.natives)
            if (n.canonical == i && (!nat || n.w.is_identity())) nat = &n;
        if (nat)
            u[nat->name] = to_json(a.u_letter(*a.pres.lookup(nat->name)));
        else
            u[a.pres.skew_name(i)] = to_json(a.ux[i]);
    }
    return Json{{"presentation", to_json(a.pres)}, {"m", a.m}, {"u", u}};
}

InnerActionMap action_from_json(const Json& j, const std::string& where) {
    const HopfPresentation p = presentation_from_json(field(j, "presentation", where), at(where, "presentation"));
    const long m = get_long(j, "m", where);
    if (m < 1) schema(at(where, "m"), "m must be >= 1");
    const std::string wu = at(where, "u");
    const Json& u = field(j, "u", where);
    if (!u.is_object()) schema(wu, "expected an object of matrices");
    std::map<std::string, ExactMatrix> named;
    for (const auto& [key, val] : u.items()) {
        if (!p.lookup(key)) schema(at(wu, key), "unknown generator " + key);
        ExactMatrix mat = matrix_from_json(val, at(wu, key));
        if (mat.rows() != static_cast<size_t>(m) || mat.cols() != static_cast<size_t>(m))
            schema(at(wu, key), "expected an m x m matrix");
        named.emplace(key, std::move(mat));
    }
    for (const auto& g : p.group_names)
        if (!named.count(g)) schema(at(wu, g), "missing group generator");
    return make_action_named(p, named);
}

Json to_json(const Extracted& e) {
    Json lam = Json::array(), shift = Json::array(), theta = Json::array(), sigma = Json::array(),
         zeta = Json::array(), fam = Json::object();
    for (const auto& [k, v] : e.lambda) lam.push_back({{"i", k.first}, {"l", k.second}, {"value", to_json(v)}});
    for (const auto& [k, v] : e.shift) shift.push_back({{"i", k}, {"value", to_json(v)}});
    for (const auto& [k, v] : e.theta) theta.push_back({{"l", k}, {"value", to_json(v)}});
    for (const auto& [k, v] : e.sigma) sigma.push_back({{"i", k}, {"value", to_json(v)}});
    for (const auto& [k, v] : e.zeta) zeta.push_back({{"i", k.first}, {"j", k.second}, {"value", to_json(v)}});
    for (const auto& [k, v] : e.family) fam[k] = to_json(v);
    return Json{{"lambda", lam},
                {"shift", shift},
                {"theta", theta},
                {"sigma", sigma},
                {"zeta", zeta},
                {"lambda_dd", e.dd_lambda ? to_json(*e.dd_lambda) : Json(nullptr)},
                {"family", fam}};
}

Json to_json(const RouteReport& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"relation", f.relation}, {"detail", f.detail}, {"residual", to_json(f.residual)}});
    return Json{{"pass", r.pass}, {"checked", r.checked}, {"failures", fails}};
}

Json to_json(const Certificate& c) {
    return Json{{"verdict", c.pass ? "pass" : "fail"},
                {"agree", c.agree},
                {"route_a", to_json(c.route_a)},
                {"route_b", to_json(c.route_b)},
                {"extracted", to_json(c.extracted)}};
}

// ---- gradings ------------------------------------------------------------------------

Json to_json(const Grading& g) {
    Json comps = Json::array();
    for (const auto& c : g.components) {
        Json basis = Json::array();
        for (const auto& b : c.basis) basis.push_back(to_json(b));
        comps.push_back({{"char", to_json(c.degree)}, {"basis", basis}});
    }
    return Json{{"m", g.m},
                {"kind", g.declared_kind ? Json(to_string(*g.declared_kind)) : Json(nullptr)},
                {"group", to_json(g.group)},
                {"components", comps}};
}

Json to_json(const KindReport& k) {
    Json gens = Json::array(), beta = Json::array(), kappa = Json::array();
    for (const auto& t : k.support_group.generators) gens.push_back(to_json(t));
    for (const auto& row : k.beta_values) beta.push_back(cyc_list(row));
    for (const auto& [coset, mult] : k.kappa) kappa.push_back({{"coset", to_json(coset)}, {"dim", mult}});
    return Json{{"kind", to_string(k.kind)},
                {"ell", k.ell},
                {"support_group", {{"generators", gens}, {"order", k.support_group.order()}}},
                {"beta", beta},
                {"kappa", kappa}};
}

// ---- classification ----------------------------------------------------------------------

Json to_json(const CatalogEntry& e) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    return Json{{"family", e.family}, {"label", e.label},      {"params", params},
                {"source", e.source}, {"skew_zero", e.skew_zero}, {"action", to_json(e.action)}};
}

Json to_json(const IsoVerdict& v) {
    Json w = nullptr;
    if (v.witness) w = {{"c", to_json(v.witness->c)}, {"lambda", cyc_list(v.witness->lambda)}, {"mu", cyc_list(v.witness->mu)}};
    return Json{{"isomorphic", v.isomorphic},
                {"decided", v.decided},
                {"probabilistic", v.probabilistic},
                {"obstruction", v.obstruction},
                {"witness", w}};
}

Json to_json(const ClassReport& r) {
    Json entries = Json::array(), verdicts = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    for (const auto& row : r.verdicts) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(to_json(v));
        verdicts.push_back(std::move(jr));
    }
    return Json{{"entries", entries}, {"verdicts", verdicts}, {"classes", r.classes}};
}

std::vector<CatalogEntry> catalog_from_request(const Json& j, const std::string& where) {
    const std::string fam = as_string(field(j, "family", where), at(where, "family"));
    const std::string wp = at(where, "params");
    static const Json empty = Json::object();
    const Json* pp = optional_field(j, "params", where);
    const Json& ps = pp ? *pp : empty;
    if (!ps.is_object()) schema(wp, "expected an object");
    auto n_at_least = [&](const std::string& key, long lo) {
        const long v = get_long(ps, key, wp);
        if (v < lo) schema(at(wp, key), key + " must be >= " + std::to_string(lo));
        return v;
    };

    if (fam == "taft_m3") {
        const long n = n_at_least("n", 3);
        std::vector<CycNum> gammas;
        if (const Json* g = optional_field(ps, "gammas", wp))
            for (size_t i = 0; i < as_array(*g, at(wp, "gammas")).size(); ++i)
                gammas.push_back(cyc_from_json((*g)[i], at(at(wp, "gammas"), i)));
        return catalog_taft_m3(n, get_cyc(ps, "omega", wp, cyc_root(n, 1)), gammas);
    }
    if (fam == "taft_nonsingular") {
        const long n = n_at_least("n", 2);
        return {catalog_taft_nonsingular(n, get_cyc(ps, "omega", wp, cyc_root(n, 1)), n_at_least("m", 1),
                                         get_cyc(ps, "alpha", wp, CycNum(1)))};
    }
    if (fam == "rank1_division") {
        const HopfPresentation p = presentation_from_json(field(ps, "presentation", wp), at(wp, "presentation"));
        const auto factors = long_list(field(ps, "support", wp), at(wp, "support"));
        const AbGroup t(factors);
        const Json& bt = as_array(field(ps, "beta", wp), at(wp, "beta"));
        std::vector<std::vector<long>> table;
        for (size_t i = 0; i < bt.size(); ++i) table.push_back(long_list(bt[i], at(at(wp, "beta"), i)));
        if (table.size() != t.rank()) schema(at(wp, "beta"), "beta table must be rank x rank");
        for (size_t i = 0; i < table.size(); ++i)
            if (table[i].size() != t.rank()) schema(at(at(wp, "beta"), i), "beta table must be rank x rank");
        std::vector<GrpElt> emb;
        if (const Json* e = optional_field(ps, "embedding", wp)) {
            const AbGroup dual(p.datum.group.factors());
            for (size_t i = 0; i < as_array(*e, at(wp, "embedding")).size(); ++i) {
                const auto ex = long_list((*e)[i], at(at(wp, "embedding"), i));
                if (ex.size() != dual.rank()) schema(at(at(wp, "embedding"), i), "exponent vector length differs");
                emb.push_back(dual.elt(ex));
            }
        }
        return {catalog_rank1_division(p, t, Bicharacter(t, table), get_cyc(ps, "alpha", wp, CycNum(1)), emb)};
    }
    if (fam == "p3") {
        const long p = n_at_least("p", 2);
        return {catalog_p3(p, get_cyc(ps, "omega", wp, cyc_root(p, 1)), get_long(ps, "ell", wp),
                           get_cyc(ps, "alpha", wp, CycNum(1)))};
    }
    if (fam == "dd_division") {
        const long n = n_at_least("n", 2);
        const CycNum w = cyc_root(n, 1);
        const CycNum gamma = get_cyc(ps, "gamma", wp, CycNum(1));
        if (gamma.is_zero()) schema(at(wp, "gamma"), "gamma must be nonzero");
        const CycNum delta = get_cyc(ps, "delta", wp, (CycNum(1) - w).inv() / gamma);
        return {catalog_dd_division(n, get_cyc(ps, "pi", wp, w), gamma, delta)};
    }
    if (fam == "dt2_nilpotent")
        return {catalog_dt2_mixed(Dt2Nilpotent{n_at_least("r", 1), get_cyc(ps, "tau", wp, CycNum(0))})};
    if (fam == "dt2_nonnilpotent") {
        Dt2NonNilpotent v{n_at_least("r", 1), n_at_least("s", 1), n_at_least("t", 0),
                          get_cyc(ps, "xi", wp, CycNum(1)), {}};
        if (v.t > std::min(v.r, v.s)) schema(at(wp, "t"), "t must be <= min(r, s)");
        const size_t rows = static_cast<size_t>(v.s - v.t), cols = static_cast<size_t>(v.r - v.t);
        v.big_xi = ExactMatrix(rows, cols);
        if (const Json* x = optional_field(ps, "big_xi", wp)) {
            ExactMatrix m = matrix_from_json(*x, at(wp, "big_xi"));
            if (m.rows() != 0 || rows != 0) v.big_xi = std::move(m);
        }
        return {catalog_dt2_mixed(v)};
    }
    if (fam == "dd_elementary") {
        const long n = n_at_least("n", 2);
        const auto phi = long_list(field(ps, "phi", wp), at(wp, "phi"));
        if (phi.size() != 2) schema(at(wp, "phi"), "expected [phi(g), phi(G)]");
        return {dd_elementary_X(n, n_at_least("r", 1), {phi[0], phi[1]},
                                matrix_from_json(field(ps, "seed", wp), at(wp, "seed")),
                                get_cyc(ps, "lambda", wp), get_cyc(ps, "alpha", wp, CycNum(1)))};
    }
    if (fam == "uqsl2_m2" || fam == "uqsl2_lift") {
        bool trivial = false;
        if (const Json* t = optional_field(ps, "allow_trivial", wp)) trivial = as_bool(*t, at(wp, "allow_trivial"));
        CatalogEntry e = uqsl2_m2(n_at_least("n", 3), get_cyc(ps, "lambda", wp, CycNum(1)), get_long(ps, "k", wp),
                                  get_cyc(ps, "p", wp, CycNum(1)), trivial);
        if (fam == "uqsl2_lift") return {lift_uqsl2_to_dd(e)};
        return {e};
    }
    schema(at(where, "family"), "unknown catalog family " + fam);
}

}  // namespace hopfact
