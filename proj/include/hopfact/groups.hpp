#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfact/cyclo.hpp"

namespace hopfact {

class GrpElt;

// Finite abelian group Z_{m_1} x ... x Z_{m_k} with the factor order kept as
// given: presentations name generators positionally.
class AbGroup {
public:
    AbGroup() = default;
    explicit AbGroup(std::vector<long> factors);

    const std::vector<long>& factors() const { return m_; }
    size_t rank() const { return m_.size(); }
    long order() const;
    long exponent() const;

    GrpElt identity() const;
    GrpElt gen(size_t l) const;
    GrpElt elt(std::vector<long> exps) const;
    // all elements, lexicographic in exponent vectors (first factor slowest)
    std::vector<GrpElt> elements() const;
    long index_of(const GrpElt& g) const;

    friend bool operator==(const AbGroup& a, const AbGroup& b) { return a.m_ == b.m_; }
    friend bool operator!=(const AbGroup& a, const AbGroup& b) { return !(a == b); }

private:
    std::vector<long> m_;
};

class GrpElt {
public:
    GrpElt() = default;
    GrpElt(AbGroup parent, std::vector<long> exps);

    const AbGroup& parent() const { return parent_; }
    const std::vector<long>& exps() const { return e_; }
    long operator[](size_t l) const { return e_[l]; }

    GrpElt operator*(const GrpElt& o) const;
    GrpElt inverse() const;
    GrpElt pow(long k) const;
    long order() const;
    bool is_identity() const;

    friend bool operator==(const GrpElt& a, const GrpElt& b) { return a.parent_ == b.parent_ && a.e_ == b.e_; }
    friend bool operator!=(const GrpElt& a, const GrpElt& b) { return !(a == b); }
    friend bool operator<(const GrpElt& a, const GrpElt& b) { return a.e_ < b.e_; }

private:
    AbGroup parent_;
    std::vector<long> e_;
};

// chi with chi(g_l) = zeta_{m_l}^{e_l}
class Character {
public:
    Character() = default;
    Character(AbGroup parent, std::vector<long> exps);
    static Character trivial(const AbGroup& g);
    // the character corresponding to an element of the dual (same factor type)
    static Character from_dual(const AbGroup& g, const GrpElt& d);

    const AbGroup& parent() const { return parent_; }
    const std::vector<long>& exps() const { return e_; }
    GrpElt as_dual() const { return GrpElt(parent_, e_); }

    // chi(g) = zeta_E^{exponent(g)}, E = parent().exponent()
    long exponent_at(const GrpElt& g) const;
    CycNum operator()(const GrpElt& g) const;

    Character operator*(const Character& o) const;
    Character inverse() const;
    Character pow(long k) const;
    bool is_trivial() const;

    friend bool operator==(const Character& a, const Character& b) { return a.parent_ == b.parent_ && a.e_ == b.e_; }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
    friend bool operator<(const Character& a, const Character& b) { return a.e_ < b.e_; }

private:
    AbGroup parent_;
    std::vector<long> e_;
};

std::vector<Character> dual_generators(const AbGroup& g);
CycNum char_eval(const Character& chi, const GrpElt& g);

// chi with the given values on the generators; values must be roots of unity of matching order
Character character_from_values(const AbGroup& g, const std::vector<CycNum>& values);

struct Subgroup {
    AbGroup ambient;
    std::vector<GrpElt> generators;
    std::vector<GrpElt> elements;  // sorted

    static Subgroup generated_by(const AbGroup& ambient, const std::vector<GrpElt>& gens);
    static Subgroup from_elements(const AbGroup& ambient, std::vector<GrpElt> elts);
    bool contains(const GrpElt& g) const;
    long order() const { return static_cast<long>(elements.size()); }
    bool is_trivial() const { return elements.size() == 1; }
};

// beta(sigma, tau) = zeta_E^{sum sigma_i tau_j t_ij}, E = support.exponent()
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(AbGroup support, std::vector<std::vector<long>> table);
    // table from values on generator pairs
    static Bicharacter from_values(const AbGroup& support, const std::vector<std::vector<CycNum>>& values);

    const AbGroup& support() const { return t_; }
    const std::vector<std::vector<long>>& table() const { return tab_; }
    long exponent_at(const GrpElt& s, const GrpElt& t) const;
    CycNum operator()(const GrpElt& s, const GrpElt& t) const;

    friend bool operator==(const Bicharacter& a, const Bicharacter& b) { return a.t_ == b.t_ && a.tab_ == b.tab_; }

private:
    AbGroup t_;
    std::vector<std::vector<long>> tab_;
};

struct BetaProps {
    bool alternating = false;
    bool nondegenerate = false;
    Subgroup kernel;
};

BetaProps beta_props(const Bicharacter& beta);

// f: G -> T with beta(tau, f(g)) = tau(g). tau_values[j][l] = tau_j(g_l) for the
// generators tau_j of T and g_l of G. Returns f on the generators of G.
std::vector<GrpElt> solve_f(const Bicharacter& beta, const AbGroup& g,
                            const std::vector<std::vector<CycNum>>& tau_values);

// exponent e in [0, n) with z = zeta_n^e, if z is an n-th root of unity
std::optional<long> root_exponent(const CycNum& z, long n);

std::string to_string(const GrpElt& g);

}  // namespace hopfact
