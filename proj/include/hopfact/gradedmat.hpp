#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfact/groups.hpp"
#include "hopfact/matrix.hpp"

namespace hopfact {

enum class GradingKind { elementary, division, mixed };
std::string to_string(GradingKind k);

struct Component {
    GrpElt degree;
    std::vector<ExactMatrix> basis;  // echelonized, deterministic
};

// Grading of M_m by an abelian group D (the "degree group"). For gradings
// induced by an action of G, D is the dual of G written in the same factor
// type: degree e means g_l acts by zeta_{m_l}^{e_l}.
struct Grading {
    size_t m = 0;
    AbGroup group;
    std::vector<Component> components;  // nonzero components, sorted by degree
    std::optional<GradingKind> declared_kind;
    // U_l with U_l A U_l^{-1} = psi_l(deg A) A, psi_l the l-th dual generator of D
    std::vector<ExactMatrix> rep;

    std::vector<GrpElt> support() const;
    size_t total_dim() const;
    const Component* component(const GrpElt& d) const;
};

// (C, S) with C = diag(1, w, ..., w^{n-1}), S the cyclic shift; S C = w C S
std::pair<ExactMatrix, ExactMatrix> clock_shift(long n, const CycNum& omega);

// Graded division algebra M_n spanned by X_t, t in T. Convention:
// X_t X_s = beta(s, t) X_s X_t, so X_s X_t X_s^{-1} = beta(t, s) X_t.
struct DivisionData {
    Grading grading;
    Bicharacter beta;
    std::vector<std::pair<GrpElt, GrpElt>> symplectic_pairs;  // (mu_i, nu_i)
    std::vector<GrpElt> elements;                              // T in lexicographic order
    std::vector<ExactMatrix> x;                                // X_t per element
    const ExactMatrix& X(const GrpElt& t) const;
};

DivisionData division_data(const AbGroup& t, const Bicharacter& beta);
Grading division_grading(const AbGroup& t, const Bicharacter& beta);

// deg E_ij = gamma_i gamma_j^{-1}, degree group = dual of the characters' parent
Grading elementary_grading(const std::vector<Character>& chars);
// same with degrees given directly as elements of D
Grading elementary_grading_from_degrees(const AbGroup& d, const std::vector<GrpElt>& degrees);

// grading induced by g_l * A = u_l A u_l^{-1}
Grading grading_from_action(const AbGroup& g, const std::vector<ExactMatrix>& u);

// tensor product grading: deg(A (x) B) = deg A deg B; both over the same D
Grading kron_grading(const Grading& a, const Grading& b);
// push degrees along the homomorphism D -> D' given by images of D's generators
Grading regrade(const Grading& a, const AbGroup& target, const std::vector<GrpElt>& images);

// recovers rep (one U per dual generator of D) from the components alone
std::vector<ExactMatrix> recover_rep(const Grading& g);

bool product_rule_holds(const Grading& g);

struct KindReport {
    GradingKind kind = GradingKind::elementary;
    long ell = 1;              // |T| = ell^2
    Subgroup support_group;    // T inside D
    // beta on T's generators: beta_values[i][j] = beta(T_i, T_j)
    std::vector<std::vector<CycNum>> beta_values;
    // multiplicities on cosets of T, keyed by the lexicographically least coset element;
    // for elementary gradings this is the dimension function up to a shift
    std::vector<std::pair<GrpElt, long>> kappa;
};

KindReport classify_kind(const Grading& g);

// dimension function as a vector indexed by D.index_of
using DimFunction = std::vector<long>;
DimFunction dim_function(const AbGroup& d, const std::vector<std::pair<GrpElt, long>>& kappa);
// gamma with kappa2(x) = kappa1(gamma x) for all x, if any
std::optional<GrpElt> elementary_iso(const AbGroup& d, const DimFunction& kappa1, const DimFunction& kappa2);

}  // namespace hopfact
