#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfact/actions.hpp"

namespace hopfact {

// ---- isomorphism ---------------------------------------------------------

// u(g) = lambda(g) C v(g) C^-1 and u(x_i) = C v(x_i) C^-1 + mu_i u(a_i)
struct IsoWitness {
    ExactMatrix c;
    std::vector<CycNum> lambda;  // per group generator
    std::vector<CycNum> mu;      // per canonical skew-primitive
};

struct IsoVerdict {
    bool isomorphic = false;
    bool decided = true;
    bool probabilistic = false;  // singularity of the intertwiner space only sampled
    std::optional<IsoWitness> witness;
    std::string obstruction;
};

IsoVerdict iso_test(const InnerActionMap& a, const InnerActionMap& b);

// checks the witness equations and that A -> C A C^-1 carries b's action to a's on all matrix units
bool replay_witness(const InnerActionMap& a, const InnerActionMap& b, const IsoWitness& w);

// ---- catalogs --------------------------------------------------------------

struct CatalogEntry {
    std::string family;
    std::string label;
    std::vector<std::pair<std::string, std::string>> params;
    InnerActionMap action;
    std::string source;
    bool skew_zero = false;  // only the group part acts
};

// (Q(1),P(1)), (Q(n-1),P(2)), six P(3)_i and, for n = 3, one P(3)_gamma per gamma
std::vector<CatalogEntry> catalog_taft_m3(long n, const CycNum& omega, const std::vector<CycNum>& gammas = {});

// u(g) = diag(I_d, w I_d, ..., w^{n-1} I_d), u(x) block cyclic with alpha I_d in the corner, d = m/n
CatalogEntry catalog_taft_nonsingular(long n, const CycNum& omega, long m, const CycNum& alpha);

// rank-one datum acting through a division grading: u(g) = X_{f(g)}, u(x) = alpha X_chi.
// embedding: images of the support generators in the dual of G (same factor list as G);
// empty means the support is the whole dual. chi outside the support gives u(x) = 0 and skew_zero.
CatalogEntry catalog_rank1_division(const HopfPresentation& p, const AbGroup& support, const Bicharacter& beta,
                                    const CycNum& alpha, std::vector<GrpElt> embedding = {});

// p^3 example: u(g) = X_nu^l, u(h) = X_mu^-l, u(x) = alpha X_mu with tau^l = w
CatalogEntry catalog_p3(long p, const CycNum& omega, long ell, const CycNum& alpha);

// D(T_n) on M_n through the division grading with beta(mu, nu) = pi; needs gamma delta = 1/(1 - w)
CatalogEntry catalog_dd_division(long n, const CycNum& pi, const CycNum& gamma, const CycNum& delta);

struct Dt2Nilpotent {
    long r;
    CycNum tau;
};
struct Dt2NonNilpotent {
    long r, s, t;
    CycNum xi;
    ExactMatrix big_xi;  // (s-t) x (r-t)
};
// D(T_2) mixed actions: u(g) = I_k (x) A, u(G) = I_k (x) B, u(x) = P (x) C, u(X) = Q (x) C with PQ + QP = -I_k
CatalogEntry catalog_dt2_mixed(const Dt2Nilpotent& v);
CatalogEntry catalog_dt2_mixed(const Dt2NonNilpotent& v);
// the k x k factors P, Q of an entry built above
std::pair<ExactMatrix, ExactMatrix> dt2_factors(const CatalogEntry& e);

struct RecurrenceInconsistent : Error {
    RecurrenceInconsistent(const std::string& msg, ExactMatrix r) : Error(msg), residual(std::move(r)) {}
    ExactMatrix residual;
};
// elementary D(T_n) action on one coset block: u(x) in nonsingular block-cyclic form with parameter alpha,
// u(X) generated from the seed block V^0 -> V^{n-1}; phi = (phi(g), phi(G)) exponents
CatalogEntry dd_elementary_X(long n, long r, std::pair<long, long> phi, const ExactMatrix& seed, const CycNum& lambda,
                             const CycNum& alpha);

// u_q(sl2) on M_2: u(a) = lam diag(1, w^k); skew parts need k = 2 or n - k = 2
CatalogEntry uqsl2_m2(long n, const CycNum& lam, long k, const CycNum& p, bool allow_trivial = false);

// lifts a u_q(sl2) action to D(T_n) at root w^-2: g, G -> a^-1, x -> y / (w - w^-1), X -> -(w - w^-1) x a^-1
CatalogEntry lift_uqsl2_to_dd(const CatalogEntry& e);

// ---- enumeration -----------------------------------------------------------

struct ClassReport {
    std::vector<CatalogEntry> entries;
    std::vector<std::vector<IsoVerdict>> verdicts;  // symmetric, diagonal included
    std::vector<std::vector<size_t>> classes;       // ordered by smallest member
};

// pairwise iso_test (OpenMP over pairs), classes by union of isomorphic pairs
ClassReport enumerate_and_dedupe(std::vector<CatalogEntry> entries);

}  // namespace hopfact
