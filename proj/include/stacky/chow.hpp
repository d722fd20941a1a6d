#ifndef STACKY_CHOW_HPP
#define STACKY_CHOW_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stacky/fan.hpp"

namespace stacky {

/// Dense exponent vector over the fan's rays, one entry per ray.
using Exponents = std::vector<unsigned>;

int monomial_degree(const Exponents& e);
IndexSet monomial_support(const Exponents& e);
bool monomial_is_squarefree(const Exponents& e);

/// An element of SR(fan) (x) Q in its monomial presentation: a finitely
/// supported map from exponent vectors to rational coefficients.  Zero
/// coefficients are never stored.
class ChowClass {
public:
    explicit ChowClass(int num_vars) : num_vars_(num_vars) {}

    static ChowClass constant(int num_vars, const Rational& value);
    static ChowClass monomial(int num_vars, const Exponents& exps, const Rational& coeff);
    /// The generator x_var.
    static ChowClass generator(int num_vars, int var);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& coeff);

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const Rational& scalar);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
    friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

    friend bool operator==(const ChowClass& a, const ChowClass& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    ChowClass graded_part(int degree) const;
    /// Degree when every stored monomial has the same total degree; nullopt
    /// for inhomogeneous classes.  The zero class reports degree 0.
    std::optional<int> homogeneous_degree() const;

private:
    int num_vars_;
    std::map<Exponents, Rational> terms_;
};

/// Product with every monomial of total degree > max_degree discarded and,
/// when fan is given, every Stanley-Reisner-zero monomial dropped as well.
ChowClass multiply_truncated(const ChowClass& a, const ChowClass& b, int max_degree,
                             const StackyFan* fan);

/// Stanley-Reisner presentation of the rational Chow ring: one linear
/// relation sum_rho <e_j, v_rho> x_rho per dual basis vector e_j (the rows
/// of the ray matrix) and the inclusion-minimal ray sets not contained in
/// any cone.
struct SRPresentation {
    IntMatrix linear_relations; // d x n, row j = coefficients of relation j
    std::vector<IndexSet> minimal_nonfaces;
};

SRPresentation sr_presentation(const StackyFan& fan);

/// True iff the monomial's support is contained in no cone of the fan, i.e.
/// the monomial lies in the Stanley-Reisner ideal.
bool monomial_is_zero(const StackyFan& fan, const Exponents& e);

/// Membership of a Cox monomial in the irrelevant ideal B, decided twice:
/// once by divisibility by some generator prod_{rho not in sigma} X_rho,
/// once by membership in every component (X_rho : rho in S) over all ray
/// sets S not contained in a cone.  The routes are independent and must
/// agree.
struct IrrelevantMembership {
    bool member = false;
    bool route_divisor = false;    // some X_sigma-hat divides the monomial
    bool route_components = false; // monomial lies in every component
};

IrrelevantMembership irrelevant_membership(const StackyFan& fan, const Exponents& e);

/// Tie-break policy for the self-intersection recursion.  The defaults are
/// the documented canonical choices; the alternatives exist so tests can
/// force different reduction paths.
struct ReductionOptions {
    enum class Pivot { lowest_index, highest_index };
    enum class ConeChoice { lex_smallest, lex_largest };
    Pivot pivot = Pivot::lowest_index;
    ConeChoice cone_choice = ConeChoice::lex_smallest;
    long max_steps = 4000000; // diagnostic cap on monomial reductions
};

/// Rewrites the class, modulo the Stanley-Reisner relations, as a rational
/// combination of square-free monomials; Stanley-Reisner-zero monomials are
/// dropped.  Requires a complete simplicial fan.
ChowClass reduce_squarefree(const StackyFan& fan, const ChowClass& cls,
                            const ReductionOptions& options = {});

/// The orbit-closure pairing for a square-free monomial: (support cone,
/// 1/D) when the support spans a cone, nullopt (the zero class) otherwise.
std::optional<std::pair<IndexSet, Rational>> phi_squarefree(const StackyFan& fan,
                                                            const Exponents& e);

/// Degree of a top-degree class on a complete simplicial stacky fan.
Rational integrate_simplicial(const StackyFan& fan, const ChowClass& cls,
                              const ReductionOptions& options = {});

/// The unique relation beta+ v(rho+) + beta- v(rho-) + sum b_rho v_rho = 0
/// across a ridge, normalized by beta+ = 1 with rho+ the neighbor of
/// smaller ray index.
struct WallRelation {
    IndexSet ridge;
    int rho_plus = -1;
    int rho_minus = -1;
    Rational beta_plus;
    Rational beta_minus;
    std::vector<std::pair<int, Rational>> ridge_coefficients; // (ray, b_ray)
};

WallRelation wall_relation(const StackyFan& fan, const IndexSet& ridge);

/// chi = sum over maximal cones of 1/D.
Rational euler_simplicial(const StackyFan& fan);

/// Decides zeroness in SR (x) Q for the classes this library needs it for:
/// monomials in the Stanley-Reisner ideal are dropped, and a remaining pure
/// degree-1 part is tested for membership in the span of the linear
/// relations.  A remaining higher-degree part makes the answer false.
bool is_zero_in_sr(const StackyFan& fan, const ChowClass& cls);

} // namespace stacky

#endif
