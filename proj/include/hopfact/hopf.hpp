#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfact/groups.hpp"
#include "hopfact/matrix.hpp"

namespace hopfact {

// Datum (a_i, chi_i, mu_i, lambda_ij) over an abelian group. Skew-primitives
// x_i are (1, a_i)-primitive and satisfy g x_i g^-1 = chi_i(g) x_i.
struct Datum {
    AbGroup group;
    std::vector<GrpElt> a;
    std::vector<Character> chi;
    std::vector<int> mu;
    std::vector<std::vector<CycNum>> lambda;  // n x n, lambda[i][j] = lambda_ij

    size_t rank() const { return a.size(); }
    CycNum q(size_t i) const { return chi[i](a[i]); }
    long N(size_t i) const;
};

// throws DatumViolation naming the first broken invariant
void validate(const Datum& d);

enum class Family { taft, dd_taft, uq_sl2, book, p3, custom };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

// A letter of a word: group generator g_l, canonical x_i, or a native
// generator of the family's own presentation.
struct Letter {
    enum class Kind { group, skew, native } kind;
    size_t index;
    friend bool operator==(const Letter& a, const Letter& b) { return a.kind == b.kind && a.index == b.index; }
};
using Word = std::vector<Letter>;

struct Term {
    CycNum coeff;
    Word word;
};

// sum of terms = 0
struct Relation {
    std::string name;
    std::string text;
    std::vector<Term> terms;
};

// x_nat = x_i w, which is (w, a_i w)-primitive
struct NativeGenerator {
    std::string name;
    size_t canonical;
    GrpElt w;
};

struct HopfPresentation {
    Family family = Family::custom;
    long n = 0;          // order parameter (n, or p for book/p3)
    CycNum root;         // omega, or q for book
    long book_m = 0;
    bool even_n_caveat = false;  // dd_taft with even n

    Datum datum;
    std::vector<std::string> group_names;
    std::vector<NativeGenerator> natives;
    std::vector<Relation> relations;         // canonical form, generated from the datum
    std::vector<Relation> native_relations;  // the family's own display

    size_t num_group() const { return group_names.size(); }
    size_t rank() const { return datum.rank(); }
    std::string skew_name(size_t i) const { return "x" + std::to_string(i + 1); }
    // group generator, alias g1..gk, canonical x1..xn or native name
    std::optional<Letter> lookup(const std::string& name) const;
    std::string letter_name(const Letter& l) const;
    // letters spelling a group element as a product of generator powers
    Word group_word(const GrpElt& g) const;
    // (h, k) of a skew letter: canonical x_i is (1, a_i), native is (w, a_i w)
    std::pair<GrpElt, GrpElt> coproduct(const Letter& l) const;
};

HopfPresentation make_presentation(const Datum& d);
HopfPresentation taft(long n, const CycNum& omega);
HopfPresentation dd_taft(long n, const CycNum& omega);
HopfPresentation uq_sl2(long n, const CycNum& omega);
HopfPresentation book(long p, const CycNum& q, long m);
HopfPresentation p3_example(long p, const CycNum& omega);

// Moves u(x) between an (a,1)-primitive x and the (1,a^-1)-primitive x a^-1,
// with the free scalar normalized to 0.
enum class Translate { to_canonical, from_canonical };
ExactMatrix translate_generator(const ExactMatrix& u_x, const ExactMatrix& u_a, Translate dir);

std::string word_text(const HopfPresentation& p, const Word& w);

}  // namespace hopfact
