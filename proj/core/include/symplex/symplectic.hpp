#pragma once
#include "symplex/presentation.hpp"

namespace symplex {

struct SymplecticStructure {
    int n = 0;       // ambient dimension = 2·n_half
    int n_half = 0;  // the paper's n
    Form omega;
    Bivector pi;     // ω⁻¹ as a bivector; coefficients = Gram(ω)⁻¹ entries
    Form omega_top;  // ω^{n_half}, a multiple of the volume monomial
    Matrix gram;     // Gram_{ij} = ω(X_i, X_j)
    Matrix pinv;     // full antisymmetric matrix of pi
};

// Validates dω = 0 and non-degeneracy; throws Error("not closed: ...") /
// Error("degenerate: ...").
SymplecticStructure build_symplectic(const StructureEquations& eq, const Form& omega);

Form lefschetz_L(const SymplecticStructure& s, const Form& a);        // ω∧·
Form dual_lefschetz_Lambda(const SymplecticStructure& s, const Form& a);  // −ι_π
Form weight_H(const Form& a, int n_half);  // (n−k) on the degree-k part

// Unique solution of α∧⋆β = (ω⁻¹)^k(α,β)·ωⁿ; a must be homogeneous.
Form symplectic_star(const SymplecticStructure& s, const Form& a);

GradedOp op_L(const SymplecticStructure& s, const ExteriorBasis& basis);
GradedOp op_Lambda(const SymplecticStructure& s, const ExteriorBasis& basis);
GradedOp op_H(const SymplecticStructure& s, const ExteriorBasis& basis);

// ⋆ maps degree k to 2n−k; one matrix per source degree (not a fixed-shift GradedOp).
struct StarOp {
    std::vector<Matrix> mats;
};
StarOp op_star(const SymplecticStructure& s, const ExteriorBasis& basis);

// d^Λ = [d, Λ] = d∘Λ − Λ∘d, degree −1.
GradedOp d_lambda(const SymplecticStructure& s, const GradedOp& d, const ExteriorBasis& basis);

// a = Σ_j L^j p_j with Λ p_j = 0; returns the nonzero (j, p_j) pairs.
std::vector<std::pair<int, Form>> primitive_decomposition(const SymplecticStructure& s,
                                                          const ExteriorBasis& basis,
                                                          const Form& a);

}  // namespace symplex
