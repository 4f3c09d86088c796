#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplex/graded.hpp"

namespace symplex {

using Sample = std::map<std::string, Rational>;

// Coefficient linear in the formal parameters: c + Σ_p lin[p]·p.
struct Coef {
    Scalar c;
    std::map<std::string, Scalar> lin;

    Coef() = default;
    Coef(Scalar s) : c(std::move(s)) {}
    bool is_constant() const { return lin.empty(); }
    bool is_zero() const { return c.is_zero() && lin.empty(); }
    Scalar eval(const Sample& s) const;  // throws on missing parameter
    Coef operator-() const;
    Coef& operator+=(const Coef& o);
    friend Coef operator*(const Scalar& s, const Coef& x);
    std::string str() const;  // empty-monomial rendering; used by print_structure
};

struct ParamForm {
    std::map<Monomial, Coef, MonomialLess> terms;

    void add(Monomial m, Coef c);
    bool has_params() const;
    Form eval(const Sample& s) const;
    Form constant_form() const;  // throws if parameters present
    ParamForm& operator+=(const ParamForm& o);
};

// Instantiated structure equations: d of each degree-1 generator, no free parameters.
struct StructureEquations {
    std::string name;
    int n = 0;
    std::vector<Form> d;  // size n, d[k-1] = d e^k
};

struct LieAlgebraPresentation {
    std::string name;
    int n = 0;
    std::vector<ParamForm> d_of_generator;  // size n
    std::vector<std::string> params;
    std::vector<Sample> samples;

    bool has_params() const;
    // gaussian if any imaginary coefficient occurs, else rational
    std::string field_tag() const;
    StructureEquations instantiate(const Sample& s) const;
    StructureEquations instantiate() const;  // requires no parameters
};

// Salamon shorthand "(0,0,0,12)" or long-form "d e4 = e1.2" lines.
LieAlgebraPresentation parse_structure(const std::string& text, int n);
// Long-form rendering; parse(print(parse(t))) == parse(t).
std::string print_structure(const LieAlgebraPresentation& p);

// Shared expression parser (used for omega, twists, characters).
// Accepts coefficients, parameters, and both monomial spellings (e1.2 / e12 for n ≤ 9).
ParamForm parse_form_expr(const std::string& text, int n,
                          const std::vector<std::string>& params);
// Salamon-style entry ("12+34+56", "16+2×34-25"); no parameters.
Form parse_salamon_entry(const std::string& text, int n);
// Either of the above, chosen by the presence of an 'e'.
ParamForm parse_form_any(const std::string& text, int n,
                         const std::vector<std::string>& params);
std::string print_param_form(const ParamForm& f);

// Leibniz extension of the generator differentials.
Form ce_apply(const StructureEquations& eq, const Form& a);
GradedOp ce_differential(const StructureEquations& eq, const ExteriorBasis& basis);
// nullopt = ok; otherwise a diagnostic naming the failing generator and residue.
std::optional<std::string> validate_presentation(const StructureEquations& eq);

}  // namespace symplex
