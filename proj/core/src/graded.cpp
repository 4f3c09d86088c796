#include "symplex/graded.hpp"

namespace symplex {

GradedOp graded_operator(const ExteriorBasis& basis, int shift,
                         const std::function<Form(Monomial)>& fn) {
    GradedOp op{basis.n, shift, {}};
    op.mats.resize(basis.n + 1);
    for (int k = 0; k <= basis.n; ++k) {
        int rows = basis.dim(k + shift), cols = basis.dim(k);
        Matrix m(rows, cols);
        for (int c = 0; c < cols; ++c) {
            Form f = fn(basis.by_degree[k][c]);
            for (auto& [mono, s] : f.terms) {
                if (mono.degree() != k + shift)
                    throw Error("graded operator produced wrong degree");
                m.at(basis.index_of(k + shift, mono), c) = s;
            }
        }
        op.mats[k] = std::move(m);
    }
    return op;
}

GradedOp compose(const GradedOp& outer, const GradedOp& inner) {
    if (outer.n != inner.n) throw Error("graded compose dimension mismatch");
    GradedOp op{outer.n, outer.shift + inner.shift, {}};
    op.mats.resize(outer.n + 1);
    for (int k = 0; k <= outer.n; ++k) {
        int mid = k + inner.shift, out = k + op.shift;
        if (mid < 0 || mid > outer.n) {
            // inner lands outside the algebra: zero map of the right shape
            // (outer.mats[j].cols == dim(j) supplies the target dimension)
            int rows = (out < 0 || out > outer.n) ? 0 : outer.mats[out].cols;
            op.mats[k] = Matrix(rows, inner.mats[k].cols);
            continue;
        }
        op.mats[k] = outer.mats[mid] * inner.mats[k];
    }
    return op;
}

GradedOp operator+(const GradedOp& x, const GradedOp& y) {
    if (x.n != y.n || x.shift != y.shift) throw Error("graded sum mismatch");
    GradedOp op = x;
    for (int k = 0; k <= x.n; ++k) op.mats[k] = x.mats[k] + y.mats[k];
    return op;
}

GradedOp operator-(const GradedOp& x, const GradedOp& y) {
    if (x.n != y.n || x.shift != y.shift) throw Error("graded difference mismatch");
    GradedOp op = x;
    for (int k = 0; k <= x.n; ++k) op.mats[k] = x.mats[k] - y.mats[k];
    return op;
}

bool op_is_zero(const GradedOp& op) {
    for (auto& m : op.mats)
        if (!m.is_zero()) return false;
    return true;
}

std::vector<Scalar> form_to_vector(const ExteriorBasis& basis, int k, const Form& f) {
    std::vector<Scalar> v(basis.dim(k));
    for (auto& [mono, s] : f.terms) {
        if (mono.degree() != k) throw Error("form_to_vector: degree mismatch");
        v[basis.index_of(k, mono)] = s;
    }
    return v;
}

Form vector_to_form(const ExteriorBasis& basis, int k, const std::vector<Scalar>& v) {
    Form f;
    for (int i = 0; i < basis.dim(k); ++i) f.add(basis.by_degree[k][i], v[i]);
    return f;
}

}  // namespace symplex
