#include "symplex/symplectic.hpp"

namespace symplex {

SymplecticStructure build_symplectic(const StructureEquations& eq, const Form& omega) {
    SymplecticStructure s;
    s.n = eq.n;
    if (s.n % 2) throw Error("symplectic structure needs even dimension");
    s.n_half = s.n / 2;
    s.omega = omega;
    auto deg = omega.homogeneous_degree();
    if (omega.is_zero() || deg != 2) throw Error("omega must be a nonzero degree-2 form");

    Form dw = ce_apply(eq, omega);
    if (!dw.is_zero()) throw Error("not closed: domega = " + dw.str());

    s.gram = Matrix(s.n, s.n);
    for (auto& [m, c] : omega.terms) {
        auto idx = m.indices();
        s.gram.at(idx[0] - 1, idx[1] - 1) = c;
        s.gram.at(idx[1] - 1, idx[0] - 1) = -c;
    }
    int r = rank(s.gram);
    if (r < s.n)
        throw Error("degenerate: Gram rank " + std::to_string(r) + " of " +
                    std::to_string(s.n));

    // invert the Gram matrix column by column
    s.pinv = Matrix(s.n, s.n);
    for (int c = 0; c < s.n; ++c) {
        std::vector<Scalar> e(s.n);
        e[c] = Scalar(1);
        auto col = solve(s.gram, e);
        for (int row = 0; row < s.n; ++row) s.pinv.at(row, c) = (*col)[row];
    }
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (!s.pinv.at(i, j).is_zero()) s.pi.add(i + 1, j + 1, s.pinv.at(i, j));

    s.omega_top = wedge_pow(omega, s.n_half);
    if (s.omega_top.terms.size() != 1)
        throw Error("internal: omega^n is not a volume multiple");
    return s;
}

Form lefschetz_L(const SymplecticStructure& s, const Form& a) {
    return wedge(s.omega, a);
}

Form dual_lefschetz_Lambda(const SymplecticStructure& s, const Form& a) {
    return -interior_product(s.pi, a);
}

Form weight_H(const Form& a, int n_half) {
    Form out;
    for (auto& [m, c] : a.terms) out.add(m, Scalar(n_half - m.degree()) * c);
    return out;
}

namespace {
// (ω⁻¹)^k(α,β) = det of the pairing matrix; the 1-form pairing is
// ω(I⁻¹e^a, I⁻¹e^b) = −(Gram⁻¹)_{ab}.
Scalar inverse_pairing(const SymplecticStructure& s, Monomial alpha, Monomial beta) {
    auto ai = alpha.indices(), bi = beta.indices();
    int k = static_cast<int>(ai.size());
    Matrix m(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m.at(r, c) = -s.pinv.at(ai[r] - 1, bi[c] - 1);
    return det(m);
}
}  // namespace

Form symplectic_star(const SymplecticStructure& s, const Form& a) {
    auto deg = a.homogeneous_degree();
    if (!deg) throw Error("symplectic_star needs a homogeneous form");
    int k = *deg;
    if (a.is_zero()) return {};
    Monomial top = s.omega_top.terms.begin()->first;
    // Volume normalization ωⁿ/n! makes ⋆ an involution.
    Scalar c_top = s.omega_top.terms.begin()->second;
    for (int f = 2; f <= s.n_half; ++f) c_top = c_top / Scalar(f);
    ExteriorBasis basis(s.n);
    Form out;
    // α∧⋆a only meets the complementary monomial of each α, so the defining
    // linear system is a signed permutation: solve it entry by entry.
    for (Monomial alpha : basis.by_degree[k]) {
        Scalar rhs;
        for (auto& [beta, cb] : a.terms) rhs += inverse_pairing(s, alpha, beta) * cb;
        if (rhs.is_zero()) continue;
        Monomial gamma{top.bits & ~alpha.bits};
        int sign = wedge_sign(alpha.bits, gamma.bits);
        Scalar coef = rhs * c_top;
        if (sign < 0) coef = -coef;
        out.add(gamma, std::move(coef));
    }
    return out;
}

GradedOp op_L(const SymplecticStructure& s, const ExteriorBasis& basis) {
    return graded_operator(basis, +2, [&](Monomial m) {
        return lefschetz_L(s, Form(m, Scalar(1)));
    });
}

GradedOp op_Lambda(const SymplecticStructure& s, const ExteriorBasis& basis) {
    return graded_operator(basis, -2, [&](Monomial m) {
        return dual_lefschetz_Lambda(s, Form(m, Scalar(1)));
    });
}

GradedOp op_H(const SymplecticStructure& s, const ExteriorBasis& basis) {
    return graded_operator(basis, 0, [&](Monomial m) {
        return weight_H(Form(m, Scalar(1)), s.n_half);
    });
}

StarOp op_star(const SymplecticStructure& s, const ExteriorBasis& basis) {
    StarOp star;
    star.mats.resize(s.n + 1);
    for (int k = 0; k <= s.n; ++k) {
        Matrix m(basis.dim(s.n - k), basis.dim(k));
        for (int c = 0; c < basis.dim(k); ++c) {
            Form f = symplectic_star(s, Form(basis.by_degree[k][c], Scalar(1)));
            for (auto& [mono, v] : f.terms) m.at(basis.index_of(s.n - k, mono), c) = v;
        }
        star.mats[k] = std::move(m);
    }
    return star;
}

GradedOp d_lambda(const SymplecticStructure& s, const GradedOp& d, const ExteriorBasis& basis) {
    GradedOp lam = op_Lambda(s, basis);
    return compose(d, lam) - compose(lam, d);
}

std::vector<std::pair<int, Form>> primitive_decomposition(const SymplecticStructure& s,
                                                          const ExteriorBasis& basis,
                                                          const Form& a) {
    auto deg = a.homogeneous_degree();
    if (!deg) throw Error("primitive_decomposition needs a homogeneous form");
    int m = *deg;
    if (a.is_zero()) return {};

    GradedOp lam = op_Lambda(s, basis);
    GradedOp L = op_L(s, basis);

    // columns: L^j applied to a basis of the primitive space P_{m-2j} = ker Λ
    struct Block {
        int j;
        Subspace prim;  // in degree m-2j
    };
    std::vector<Block> blocks;
    int total = 0;
    for (int j = 0; 2 * j <= m; ++j) {
        int k = m - 2 * j;
        if (k > s.n) continue;  // no primitives above the middle degree
        Subspace p = kernel(lam[k]);
        if (p.dim() == 0) continue;
        blocks.push_back({j, p});
        total += p.dim();
    }
    Matrix sys(basis.dim(m), total);
    int col = 0;
    for (auto& b : blocks) {
        int k = m - 2 * b.j;
        for (int c = 0; c < b.prim.dim(); ++c, ++col) {
            std::vector<Scalar> v = b.prim.basis.column(c);
            for (int t = 0; t < b.j; ++t) v = L[k + 2 * t].apply(v);
            for (int r = 0; r < basis.dim(m); ++r) sys.at(r, col) = v[r];
        }
    }
    auto x = solve(sys, form_to_vector(basis, m, a));
    if (!x) throw Error("internal: primitive decomposition has no solution");

    std::vector<std::pair<int, Form>> out;
    col = 0;
    for (auto& b : blocks) {
        int k = m - 2 * b.j;
        std::vector<Scalar> p(basis.dim(k));
        for (int c = 0; c < b.prim.dim(); ++c, ++col)
            for (int r = 0; r < basis.dim(k); ++r)
                p[r] += (*x)[col] * b.prim.basis.at(r, c);
        Form pf = vector_to_form(basis, k, p);
        if (!pf.is_zero()) out.emplace_back(b.j, std::move(pf));
    }
    return out;
}

}  // namespace symplex
