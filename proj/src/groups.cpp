#include "hopfact/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hopfact/errors.hpp"

namespace hopfact {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

AbGroup::AbGroup(std::vector<long> factors) : m_(std::move(factors)) {
    for (long f : m_)
        if (f < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
}

long AbGroup::order() const {
    long n = 1;
    for (long f : m_) n *= f;
    return n;
}

long AbGroup::exponent() const {
    long e = 1;
    for (long f : m_) e = std::lcm(e, f);
    return e;
}

GrpElt AbGroup::identity() const { return GrpElt(*this, std::vector<long>(m_.size(), 0)); }

GrpElt AbGroup::gen(size_t l) const {
    std::vector<long> e(m_.size(), 0);
    e.at(l) = 1;
    return GrpElt(*this, std::move(e));
}

GrpElt AbGroup::elt(std::vector<long> exps) const { return GrpElt(*this, std::move(exps)); }

std::vector<GrpElt> AbGroup::elements() const {
    std::vector<GrpElt> out;
    const long n = order();
    out.reserve(n);
    std::vector<long> e(m_.size(), 0);
    for (long idx = 0; idx < n; ++idx) {
        out.emplace_back(*this, e);
        for (long l = static_cast<long>(m_.size()) - 1; l >= 0; --l) {
            if (++e[l] < m_[l]) break;
            e[l] = 0;
        }
    }
    return out;
}

long AbGroup::index_of(const GrpElt& g) const {
    if (g.parent() != *this) throw ParentMismatch("element of a different group");
    long idx = 0;
    for (size_t l = 0; l < m_.size(); ++l) idx = idx * m_[l] + g[l];
    return idx;
}

GrpElt::GrpElt(AbGroup parent, std::vector<long> exps) : parent_(std::move(parent)), e_(std::move(exps)) {
    if (e_.size() != parent_.rank()) throw std::invalid_argument("exponent vector has wrong length");
    for (size_t l = 0; l < e_.size(); ++l) e_[l] = mod(e_[l], parent_.factors()[l]);
}

GrpElt GrpElt::operator*(const GrpElt& o) const {
    if (o.parent_ != parent_) throw ParentMismatch("product of elements of different groups");
    std::vector<long> e(e_.size());
    for (size_t l = 0; l < e.size(); ++l) e[l] = e_[l] + o.e_[l];
    return GrpElt(parent_, std::move(e));
}

GrpElt GrpElt::inverse() const { return pow(-1); }

GrpElt GrpElt::pow(long k) const {
    std::vector<long> e(e_.size());
    for (size_t l = 0; l < e.size(); ++l) e[l] = mod(e_[l] * mod(k, parent_.factors()[l]), parent_.factors()[l]);
    return GrpElt(parent_, std::move(e));
}

long GrpElt::order() const {
    long o = 1;
    for (size_t l = 0; l < e_.size(); ++l) {
        const long m = parent_.factors()[l];
        o = std::lcm(o, m / std::gcd(m, e_[l]));
    }
    return o;
}

bool GrpElt::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](long v) { return v == 0; });
}

Character::Character(AbGroup parent, std::vector<long> exps) : parent_(std::move(parent)), e_(std::move(exps)) {
    if (e_.size() != parent_.rank()) throw std::invalid_argument("character exponent vector has wrong length");
    for (size_t l = 0; l < e_.size(); ++l) e_[l] = mod(e_[l], parent_.factors()[l]);
}

Character Character::trivial(const AbGroup& g) { return Character(g, std::vector<long>(g.rank(), 0)); }

Character Character::from_dual(const AbGroup& g, const GrpElt& d) {
    if (d.parent().factors() != g.factors()) throw ParentMismatch("dual element of a different shape");
    return Character(g, d.exps());
}

long Character::exponent_at(const GrpElt& g) const {
    if (g.parent() != parent_) throw ParentMismatch("character evaluated on a foreign element");
    const long big = parent_.exponent();
    long s = 0;
    for (size_t l = 0; l < e_.size(); ++l) s = mod(s + e_[l] * g[l] * (big / parent_.factors()[l]), big);
    return s;
}

CycNum Character::operator()(const GrpElt& g) const { return cyc_root(parent_.exponent(), exponent_at(g)); }

Character Character::operator*(const Character& o) const {
    if (o.parent_ != parent_) throw ParentMismatch("product of characters of different groups");
    std::vector<long> e(e_.size());
    for (size_t l = 0; l < e.size(); ++l) e[l] = e_[l] + o.e_[l];
    return Character(parent_, std::move(e));
}

Character Character::inverse() const { return pow(-1); }

Character Character::pow(long k) const {
    std::vector<long> e(e_.size());
    for (size_t l = 0; l < e.size(); ++l) e[l] = e_[l] * mod(k, parent_.factors()[l]);
    return Character(parent_, std::move(e));
}

bool Character::is_trivial() const {
    return std::all_of(e_.begin(), e_.end(), [](long v) { return v == 0; });
}

std::vector<Character> dual_generators(const AbGroup& g) {
    std::vector<Character> out;
    for (size_t l = 0; l < g.rank(); ++l) {
        std::vector<long> e(g.rank(), 0);
        e[l] = 1;
        out.emplace_back(g, std::move(e));
    }
    return out;
}

CycNum char_eval(const Character& chi, const GrpElt& g) { return chi(g); }

std::optional<long> root_exponent(const CycNum& z, long n) {
    for (long e = 0; e < n; ++e)
        if (cyc_root(n, e) == z) return e;
    return std::nullopt;
}

Character character_from_values(const AbGroup& g, const std::vector<CycNum>& values) {
    if (values.size() != g.rank()) throw std::invalid_argument("one value per generator expected");
    std::vector<long> e(g.rank());
    for (size_t l = 0; l < g.rank(); ++l) {
        auto k = root_exponent(values[l], g.factors()[l]);
        if (!k) throw NoSolution("character value is not a root of unity of the generator order");
        e[l] = *k;
    }
    return Character(g, std::move(e));
}

namespace {

std::set<GrpElt> closure(const AbGroup& ambient, const std::vector<GrpElt>& gens) {
    std::set<GrpElt> seen{ambient.identity()};
    std::vector<GrpElt> frontier{ambient.identity()};
    while (!frontier.empty()) {
        std::vector<GrpElt> next;
        for (const auto& x : frontier)
            for (const auto& s : gens) {
                GrpElt y = x * s;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

Subgroup Subgroup::generated_by(const AbGroup& ambient, const std::vector<GrpElt>& gens) {
    Subgroup out;
    out.ambient = ambient;
    std::set<GrpElt> all = closure(ambient, gens);
    out.elements.assign(all.begin(), all.end());
    // drop redundant generators, keeping the given order
    std::set<GrpElt> span{ambient.identity()};
    for (const auto& s : gens) {
        if (span.count(s)) continue;
        out.generators.push_back(s);
        span = closure(ambient, out.generators);
    }
    return out;
}

Subgroup Subgroup::from_elements(const AbGroup& ambient, std::vector<GrpElt> elts) {
    std::sort(elts.begin(), elts.end());
    elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
    return generated_by(ambient, elts);
}

bool Subgroup::contains(const GrpElt& g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Bicharacter::Bicharacter(AbGroup support, std::vector<std::vector<long>> table)
    : t_(std::move(support)), tab_(std::move(table)) {
    const size_t k = t_.rank();
    const long big = t_.exponent();
    if (tab_.size() != k) throw BadBicharacter("table must be k x k");
    for (size_t i = 0; i < k; ++i) {
        if (tab_[i].size() != k) throw BadBicharacter("table must be k x k");
        for (size_t j = 0; j < k; ++j) {
            tab_[i][j] = mod(tab_[i][j], big);
            const long mi = t_.factors()[i];
            const long mj = t_.factors()[j];
            if (mod(tab_[i][j] * mi, big) != 0 || mod(tab_[i][j] * mj, big) != 0)
                throw BadBicharacter("table entry incompatible with generator orders");
        }
    }
}

Bicharacter Bicharacter::from_values(const AbGroup& support, const std::vector<std::vector<CycNum>>& values) {
    const long big = support.exponent();
    std::vector<std::vector<long>> tab(support.rank(), std::vector<long>(support.rank(), 0));
    for (size_t i = 0; i < support.rank(); ++i)
        for (size_t j = 0; j < support.rank(); ++j) {
            auto e = root_exponent(values.at(i).at(j), big);
            if (!e) throw BadBicharacter("bicharacter value is not a root of unity of the exponent");
            tab[i][j] = *e;
        }
    return Bicharacter(support, std::move(tab));
}

long Bicharacter::exponent_at(const GrpElt& s, const GrpElt& t) const {
    if (s.parent() != t_ || t.parent() != t_) throw ParentMismatch("bicharacter evaluated off its support");
    const long big = t_.exponent();
    long acc = 0;
    for (size_t i = 0; i < tab_.size(); ++i) {
        if (s[i] == 0) continue;
        for (size_t j = 0; j < tab_.size(); ++j) acc = mod(acc + s[i] * t[j] % big * tab_[i][j], big);
    }
    return acc;
}

CycNum Bicharacter::operator()(const GrpElt& s, const GrpElt& t) const {
    return cyc_root(t_.exponent(), exponent_at(s, t));
}

BetaProps beta_props(const Bicharacter& beta) {
    BetaProps p;
    const auto& tab = beta.table();
    const long big = beta.support().exponent();
    p.alternating = true;
    for (size_t i = 0; i < tab.size(); ++i) {
        if (tab[i][i] != 0) p.alternating = false;
        for (size_t j = 0; j < tab.size(); ++j)
            if (mod(tab[i][j] + tab[j][i], big) != 0) p.alternating = false;
    }
    std::vector<GrpElt> ker;
    const AbGroup& t = beta.support();
    for (const auto& phi : t.elements()) {
        bool in = true;
        for (size_t j = 0; j < t.rank() && in; ++j) in = beta.exponent_at(phi, t.gen(j)) == 0;
        if (in) ker.push_back(phi);
    }
    p.kernel = Subgroup::from_elements(t, ker);
    p.nondegenerate = p.kernel.is_trivial();
    return p;
}

std::vector<GrpElt> solve_f(const Bicharacter& beta, const AbGroup& g,
                            const std::vector<std::vector<CycNum>>& tau_values) {
    const AbGroup& t = beta.support();
    const long big = t.exponent();
    if (tau_values.size() != t.rank()) throw std::invalid_argument("one row of values per support generator");
    std::vector<GrpElt> f;
    const auto candidates = t.elements();
    for (size_t l = 0; l < g.rank(); ++l) {
        std::vector<long> target(t.rank());
        for (size_t j = 0; j < t.rank(); ++j) {
            auto e = root_exponent(tau_values[j].at(l), big);
            if (!e) throw NoSolution("character value outside the support's roots of unity");
            target[j] = *e;
        }
        std::optional<GrpElt> found;
        for (const auto& c : candidates) {
            bool ok = true;
            for (size_t j = 0; j < t.rank() && ok; ++j) ok = beta.exponent_at(t.gen(j), c) == target[j];
            if (ok) {
                found = c;
                break;
            }
        }
        if (!found) throw NoSolution("no support element realizes the character values of generator " +
                                     std::to_string(l));
        if (!found->pow(g.factors()[l]).is_identity())
            throw NoSolution("solution is not a homomorphism on generator " + std::to_string(l));
        f.push_back(*found);
    }
    return f;
}

std::string to_string(const GrpElt& g) {
    std::string s = "(";
    for (size_t l = 0; l < g.exps().size(); ++l) {
        if (l) s += ",";
        s += std::to_string(g[l]);
    }
    return s + ")";
}

}  // namespace hopfact
