#pragma once
#include <functional>
#include <vector>

#include "symplex/form.hpp"
#include "symplex/linalg.hpp"

namespace symplex {

// One matrix per degree k = 0..n, mapping degree k to degree k+shift
// (empty-dimensional when k+shift falls outside 0..n).
struct GradedOp {
    int n = 0;
    int shift = 0;
    std::vector<Matrix> mats;

    const Matrix& operator[](int k) const { return mats[k]; }
};

// Build the matrix form of a linear map defined on basis monomials.
GradedOp graded_operator(const ExteriorBasis& basis, int shift,
                         const std::function<Form(Monomial)>& fn);

GradedOp compose(const GradedOp& outer, const GradedOp& inner);  // outer ∘ inner
GradedOp operator+(const GradedOp& x, const GradedOp& y);
GradedOp operator-(const GradedOp& x, const GradedOp& y);
bool op_is_zero(const GradedOp& op);

std::vector<Scalar> form_to_vector(const ExteriorBasis& basis, int k, const Form& f);
Form vector_to_form(const ExteriorBasis& basis, int k, const std::vector<Scalar>& v);

}  // namespace symplex
