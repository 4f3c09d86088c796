#pragma once
#include <optional>
#include <vector>

#include "symplex/scalar.hpp"

namespace symplex {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    static Matrix identity(int n);

    Scalar& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[size_t(r) * cols + c]; }
    bool is_zero() const;
    Matrix transpose() const;
    std::vector<Scalar> column(int c) const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Scalar& c, const Matrix& x);
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::string str() const;
};

Matrix hcat(const Matrix& x, const Matrix& y);

// Gauss–Jordan reduced row echelon form (pivots 1, zeros above and below).
Matrix rref(const Matrix& m);
int rank(const Matrix& m);
Scalar det(const Matrix& m);
// One solution of m·x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// Subspace of K^ambient; basis columns in reduced column-echelon canonical form,
// so subspace equality is literal matrix equality.
struct Subspace {
    int ambient = 0;
    Matrix basis;  // ambient × dim

    int dim() const { return basis.cols; }
    bool contains(const std::vector<Scalar>& v) const;
    std::vector<int> pivot_rows() const;
    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient == y.ambient && x.basis == y.basis;
    }
};

// Canonicalize the span of the given columns.
Subspace column_span(const Matrix& m);
Subspace zero_subspace(int ambient);
Subspace full_space(int ambient);

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

struct QuotientSpace {
    int dim = 0;
    Subspace representatives;  // canonical complement of denominator inside numerator
    Subspace denominator;
};

// Requires denominator ⊆ numerator (throws Error otherwise).
QuotientSpace quotient(const Subspace& numerator, const Subspace& denominator);
// Coordinates of v's class in the quotient's representative basis; throws if v ∉ numerator.
std::vector<Scalar> coordinates_in_quotient(const std::vector<Scalar>& v, const QuotientSpace& q);

}  // namespace symplex
