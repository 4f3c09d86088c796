#include "symplex/linalg.hpp"

#include <algorithm>

namespace symplex {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Scalar> Matrix::column(int c) const {
    std::vector<Scalar> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw Error("matrix product shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& s = x.at(r, k);
            if (s.is_zero()) continue;
            for (int c = 0; c < y.cols; ++c) z.at(r, c) += s * y.at(k, c);
        }
    return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix sum shape mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix difference shape mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Matrix operator*(const Scalar& c, const Matrix& x) {
    Matrix z = x;
    for (auto& s : z.a) s *= c;
    return z;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols) throw Error("matrix apply shape mismatch");
    std::vector<Scalar> out(rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

std::string Matrix::str() const {
    std::string s;
    for (int r = 0; r < rows; ++r) {
        s += r ? "; " : "[";
        for (int c = 0; c < cols; ++c) {
            if (c) s += ", ";
            s += at(r, c).str();
        }
    }
    return s + "]";
}

Matrix hcat(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows) throw Error("hcat row mismatch");
    Matrix z(x.rows, x.cols + y.cols);
    for (int r = 0; r < x.rows; ++r) {
        for (int c = 0; c < x.cols; ++c) z.at(r, c) = x.at(r, c);
        for (int c = 0; c < y.cols; ++c) z.at(r, x.cols + c) = y.at(r, c);
    }
    return z;
}

namespace {
// in-place Gauss–Jordan; returns pivot columns
std::vector<int> reduce(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
}  // namespace

Matrix rref(const Matrix& m) {
    Matrix r = m;
    reduce(r);
    return r;
}

int rank(const Matrix& m) {
    Matrix r = m;
    return static_cast<int>(reduce(r).size());
}

Scalar det(const Matrix& m) {
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    Matrix w = m;
    Scalar d(1);
    for (int col = 0; col < w.cols; ++col) {
        int p = -1;
        for (int r = col; r < w.rows; ++r)
            if (!w.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != col) {
            for (int c = 0; c < w.cols; ++c) std::swap(w.at(p, c), w.at(col, c));
            d = -d;
        }
        d *= w.at(col, col);
        Scalar inv = w.at(col, col).inverse();
        for (int r = col + 1; r < w.rows; ++r) {
            if (w.at(r, col).is_zero()) continue;
            Scalar f = w.at(r, col) * inv;
            for (int c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(col, c);
        }
    }
    return d;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw Error("solve shape mismatch");
    Matrix aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    auto pivots = reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // row [0..0 | 1]
    std::vector<Scalar> x(m.cols);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    return x;
}

Subspace column_span(const Matrix& m) {
    // reduced row echelon of the transpose, rows back to columns
    Matrix t = rref(m.transpose());
    int r = 0;
    for (int i = 0; i < t.rows; ++i) {
        bool nz = false;
        for (int c = 0; c < t.cols; ++c)
            if (!t.at(i, c).is_zero()) {
                nz = true;
                break;
            }
        if (nz) r = i + 1;
    }
    Matrix basis(m.rows, r);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < m.rows; ++c) basis.at(c, i) = t.at(i, c);
    return Subspace{m.rows, basis};
}

Subspace zero_subspace(int ambient) {
    return Subspace{ambient, Matrix(ambient, 0)};
}

Subspace full_space(int ambient) {
    return Subspace{ambient, Matrix::identity(ambient)};
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    return solve(basis, v).has_value();
}

std::vector<int> Subspace::pivot_rows() const {
    std::vector<int> p;
    for (int c = 0; c < basis.cols; ++c)
        for (int r = 0; r < basis.rows; ++r)
            if (!basis.at(r, c).is_zero()) {
                p.push_back(r);
                break;
            }
    return p;
}

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    auto pivots = reduce(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix basis(m.cols, m.cols - static_cast<int>(pivots.size()));
    int k = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, k) = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            basis.at(pivots[i], k) = -r.at(static_cast<int>(i), free);
        ++k;
    }
    return column_span(basis);
}

Subspace image(const Matrix& m) {
    return column_span(m);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw Error("intersect ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return zero_subspace(u.ambient);
    // null space of [U | -V]; the U-part of each kernel vector spans the intersection
    Matrix neg = Scalar(-1) * v.basis;
    Subspace k = kernel(hcat(u.basis, neg));
    Matrix gen(u.ambient, k.dim());
    for (int c = 0; c < k.dim(); ++c) {
        std::vector<Scalar> x(u.dim());
        for (int i = 0; i < u.dim(); ++i) x[i] = k.basis.at(i, c);
        auto w = u.basis.apply(x);
        for (int r = 0; r < u.ambient; ++r) gen.at(r, c) = w[r];
    }
    return column_span(gen);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw Error("sum ambient mismatch");
    return column_span(hcat(u.basis, v.basis));
}

QuotientSpace quotient(const Subspace& numerator, const Subspace& denominator) {
    if (numerator.ambient != denominator.ambient) throw Error("quotient ambient mismatch");
    for (int c = 0; c < denominator.dim(); ++c)
        if (!numerator.contains(denominator.basis.column(c)))
            throw Error("quotient: denominator not contained in numerator");
    auto dp = denominator.pivot_rows();
    // project numerator basis along the denominator onto the rows-zero-at-dp complement
    Matrix gen(numerator.ambient, numerator.dim());
    for (int c = 0; c < numerator.dim(); ++c) {
        auto v = numerator.basis.column(c);
        for (size_t i = 0; i < dp.size(); ++i) {
            Scalar f = v[dp[i]];
            if (f.is_zero()) continue;
            for (int r = 0; r < numerator.ambient; ++r)
                v[r] -= f * denominator.basis.at(r, static_cast<int>(i));
        }
        for (int r = 0; r < numerator.ambient; ++r) gen.at(r, c) = v[r];
    }
    QuotientSpace q;
    q.representatives = column_span(gen);
    q.denominator = denominator;
    q.dim = q.representatives.dim();
    return q;
}

std::vector<Scalar> coordinates_in_quotient(const std::vector<Scalar>& v, const QuotientSpace& q) {
    // unique split v = r + d with r in the representative complement, d in the denominator
    auto dp = q.denominator.pivot_rows();
    std::vector<Scalar> r = v;
    for (size_t i = 0; i < dp.size(); ++i) {
        Scalar f = r[dp[i]];
        if (f.is_zero()) continue;
        for (int row = 0; row < q.denominator.ambient; ++row)
            r[row] -= f * q.denominator.basis.at(row, static_cast<int>(i));
    }
    auto x = solve(q.representatives.basis, r);
    if (!x) throw Error("coordinates_in_quotient: vector not in numerator");
    return *x;
}

}  // namespace symplex
