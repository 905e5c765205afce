#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfact/errors.hpp"
#include "hopfact/gradedmat.hpp"
#include "hopfact/hopf.hpp"

namespace hopfact {

// Scalars read off while normalizing and checking an action.
struct Extracted {
    // pre-normalization lambda_i(g_l): u(g)u(x_i)u(g)^-1 = chi_i(g)u(x_i) + lambda_i(g)u(a_i)
    std::map<std::pair<size_t, size_t>, CycNum> lambda;
    std::map<size_t, CycNum> shift;  // c_i with u(x_i) -> u(x_i) + c_i u(a_i)
    std::map<size_t, CycNum> theta;  // u(g_l)^{M_l} = theta_l I
    std::map<size_t, CycNum> sigma;  // u(x_i)^{N_i} = mu_i I + sigma_i u(a_i)^{N_i}
    std::map<std::pair<size_t, size_t>, CycNum> zeta;
    std::optional<CycNum> dd_lambda;        // u(x)u(X) - w u(X)u(x) = I + lambda u(g)u(G)
    std::map<std::string, CycNum> family;  // tau, mu, nu of the u_q(sl2) / book relations
};

// Inner action u: H -> M_m given on group generators and canonical skew-primitives.
struct InnerActionMap {
    HopfPresentation pres;
    size_t m = 0;
    std::vector<ExactMatrix> ug;
    std::vector<ExactMatrix> ux;
    Extracted extracted;

    ExactMatrix u_group(const GrpElt& g) const;
    ExactMatrix u_group_inverse(const GrpElt& g) const;
    // native x_i w is sent to u(x_i) u(w)
    ExactMatrix u_letter(const Letter& l) const;
};

// validates shapes and invertibility of the group part
InnerActionMap make_action(const HopfPresentation& p, std::vector<ExactMatrix> ug, std::vector<ExactMatrix> ux);
// keys: group names (or g1..gk), canonical x1..xn or native names; missing skew keys mean 0
InnerActionMap make_action_named(const HopfPresentation& p, const std::map<std::string, ExactMatrix>& u);

// word like "x^3", "g x", "x1*g^2"
Word parse_word(const HopfPresentation& p, const std::string& text);
ExactMatrix act(const InnerActionMap& a, const Word& w, const ExactMatrix& m);
ExactMatrix act(const InnerActionMap& a, const std::string& word, const ExactMatrix& m);

InnerActionMap normalize(const InnerActionMap& a);

struct RelationFailure {
    std::string relation;
    std::string detail;
    ExactMatrix residual;
};

struct RouteReport {
    bool pass = true;
    std::vector<std::string> checked;
    std::vector<RelationFailure> failures;
};

// Relation-extraction route on a normalized action; fills a.extracted.
RouteReport check_relations(InnerActionMap& a);

// Operators on the m^2-dimensional space, row-major vec: L_P R_Q is kron(P, Q^T).
ExactMatrix letter_operator(const InnerActionMap& a, const Letter& l);
ExactMatrix word_operator(const InnerActionMap& a, const Word& w);
// brute-force operator route: every relation, native/canonical agreement, module-algebra law
RouteReport operator_oracle(const InnerActionMap& a);

struct Certificate {
    bool pass = false;
    bool agree = false;
    RouteReport route_a;
    RouteReport route_b;
    Extracted extracted;
    std::optional<InnerActionMap> normalized;
};

Certificate certify_action(const InnerActionMap& a);

struct CertificationFailure : Error {
    CertificationFailure(const std::string& msg, ExactMatrix r) : Error(msg), residual(std::move(r)) {}
    ExactMatrix residual;
};
// throws CertificationFailure with the first violated identity
Certificate require_certified(const InnerActionMap& a);

struct SkewSupport {
    size_t index;
    GrpElt degree;              // chi_i as an element of the degree group
    bool homogeneous = false;   // u(x_i) lies in component chi_i
    bool predicted_zero = false;
    std::string reason;         // which vanishing criterion applied
    bool operator_zero = false;
};

struct SupportReport {
    Grading grading;
    Subgroup kernel;        // elements of G acting trivially
    Subgroup support_span;  // subgroup generated by the support
    std::vector<SkewSupport> skew;
};

// throws InconsistentDegree if a prediction is violated
SupportReport skew_support_check(const InnerActionMap& a);

// A -> u(x)^N A - u(a)^N A u(a)^-N u(x)^N: the N-th power of the skew operator
// collapsed by the q-binomial formula when u(a)u(x) = q u(x)u(a), q of order N
ExactMatrix skew_operator(const ExactMatrix& u_x, const ExactMatrix& u_h, const ExactMatrix& u_k);
ExactMatrix skew_power_closed_form(const ExactMatrix& u_a, const ExactMatrix& u_x, long n);

}  // namespace hopfact
