#include "symplex/twist.hpp"

namespace symplex {

std::vector<std::vector<Form>> TwistConnection::instantiate(const Sample& s) const {
    std::vector<std::vector<Form>> out(rank, std::vector<Form>(rank));
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) out[r][c] = phi[r][c].eval(s);
    return out;
}

std::optional<std::string> validate_flat(const StructureEquations& eq,
                                         const std::vector<std::vector<Form>>& phi) {
    int r = static_cast<int>(phi.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!phi[i][j].is_zero() && phi[i][j].homogeneous_degree() != 1)
                return "phi entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") is not a 1-form";
            Form res = ce_apply(eq, phi[i][j]);
            for (int u = 0; u < r; ++u) res += wedge(phi[i][u], phi[u][j]);
            if (!res.is_zero())
                return "not flat: (dphi + phi∧phi)(" + std::to_string(i) + "," +
                       std::to_string(j) + ") = " + res.str();
        }
    return std::nullopt;
}

namespace {

// A acting on monomial coordinates, extended fiberwise: A⊗I_r
Matrix kron_fiber(const Matrix& a, int r) {
    Matrix m(a.rows * r, a.cols * r);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int t = 0; t < r; ++t) m.at(i * r + t, j * r + t) = a.at(i, j);
        }
    return m;
}

Matrix commutator_at(const std::vector<Matrix>& dmat, const std::vector<Matrix>& lam,
                     int k, int n, const std::vector<int>& fdims) {
    // [D, Λ] restricted to degree k = D_{k-2}·Λ_k − Λ_{k+1}·D_k
    Matrix out(k - 1 >= 0 ? fdims[k - 1] : 0, fdims[k]);
    if (k - 1 < 0) return out;
    if (k - 2 >= 0) out = out + dmat[k - 2] * lam[k];
    if (k + 1 <= n) out = out + Scalar(-1) * (lam[k + 1] * dmat[k]);
    return out;
}

}  // namespace

BiDifferentialComplex twisted_complex(const StructureEquations& eq,
                                      const SymplecticStructure& s,
                                      const std::vector<std::vector<Form>>& phi) {
    if (auto err = validate_flat(eq, phi)) throw Error(*err);
    int r = static_cast<int>(phi.size());
    int n = eq.n;
    ExteriorBasis basis(n);
    GradedOp d = ce_differential(eq, basis);
    GradedOp lamOp = op_Lambda(s, basis);
    GradedOp lefOp = op_L(s, basis);
    StarOp starOp = op_star(s, basis);

    std::vector<int> fdims(n + 1);
    for (int k = 0; k <= n; ++k) fdims[k] = basis.dim(k) * r;

    // D_φ(x⊗v_t) = dx⊗v_t + Σ_s (φ_{st}∧x)⊗v_s
    std::vector<Matrix> dphi(n + 1);
    for (int k = 0; k <= n; ++k) {
        Matrix m(k + 1 <= n ? fdims[k + 1] : 0, fdims[k]);
        if (k + 1 <= n) {
            const Matrix& dk = d.mats[k];
            for (int c = 0; c < basis.dim(k); ++c) {
                for (int row = 0; row < dk.rows; ++row)
                    if (!dk.at(row, c).is_zero())
                        for (int t = 0; t < r; ++t) m.at(row * r + t, c * r + t) = dk.at(row, c);
                for (int t = 0; t < r; ++t)
                    for (int fs = 0; fs < r; ++fs) {
                        Form w = wedge(phi[fs][t], Form(basis.by_degree[k][c], Scalar(1)));
                        for (auto& [mono, v] : w.terms)
                            m.at(basis.index_of(k + 1, mono) * r + fs, c * r + t) += v;
                    }
            }
        }
        dphi[k] = std::move(m);
    }

    std::vector<Matrix> lamF(n + 1), lefF(n + 1), starF(n + 1);
    for (int k = 0; k <= n; ++k) {
        lamF[k] = kron_fiber(lamOp.mats[k], r);
        lefF[k] = kron_fiber(lefOp.mats[k], r);
        starF[k] = kron_fiber(starOp.mats[k], r);
    }

    BiDifferentialComplex c;
    c.min_degree = 0;
    c.max_degree = n;
    c.n_half = s.n_half;
    for (int k = 0; k <= n; ++k) {
        c.dims.push_back(fdims[k]);
        c.del.push_back(dphi[k]);
        c.debar.push_back(commutator_at(dphi, lamF, k, n, fdims));
        c.lef.push_back(lefF[k]);
        c.lam.push_back(lamF[k]);
        c.star.push_back(starF[k]);
        std::vector<std::string> lab;
        for (Monomial m : basis.by_degree[k])
            for (int t = 0; t < r; ++t)
                lab.push_back(r == 1 ? m.str() : m.str() + "@" + std::to_string(t + 1));
        c.labels.push_back(std::move(lab));
    }
    if (auto err = c.validate()) throw Error("twisted complex invalid: " + *err);

    // D_φ^Λ|_k = (−1)^k ⋆ D_φ ⋆ — failure signals an internal sign bug
    for (int k = 1; k <= n; ++k) {
        Matrix m = starF[n - k + 1] * dphi[n - k] * starF[k];
        if (k % 2 == 1) m = Scalar(-1) * m;
        if (!(m == c.debar[k]))
            throw Error("internal: twisted star identity fails at degree " + std::to_string(k));
    }
    return c;
}

VerdictReport twisted_verdicts(const BiDifferentialComplex& c) {
    return verdicts(c);
}

std::vector<long> WeightedPresentation::monomial_weight(Monomial m) const {
    std::vector<long> w(char_names.size(), 0);
    for (int i : m.indices()) {
        const CharacterWeight& cw = weight_of_generator[i - 1];
        for (size_t j = 0; j < char_names.size(); ++j) {
            auto it = cw.exponents.find(char_names[j]);
            if (it != cw.exponents.end()) w[j] += it->second;
        }
    }
    return w;
}

bool WeightedPresentation::gamma_trivial(Monomial m) const {
    auto w = monomial_weight(m);
    for (auto& row : gamma_rows) {
        long dot = 0;
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * w[j];
        if (dot != 0) return false;
    }
    return true;
}

Form WeightedPresentation::weight_derivative(Monomial m) const {
    Form out;
    for (int i : m.indices()) out += weight_of_generator[i - 1].derivative;
    return out;
}

GradedOp weighted_differential(const WeightedPresentation& wp, const ExteriorBasis& basis) {
    for (auto& [name, lambda] : wp.char_derivative) {
        Form res = ce_apply(wp.base, lambda);
        if (!res.is_zero())
            throw Error("character '" + name + "' derivative is not closed: d = " + res.str());
    }
    GradedOp dw = graded_operator(basis, +1, [&](Monomial m) {
        Form x(m, Scalar(1));
        return wedge(wp.weight_derivative(m), x) + ce_apply(wp.base, x);
    });
    GradedOp sq = compose(dw, dw);
    for (int k = 0; k <= basis.n; ++k)
        for (int c = 0; c < sq.mats[k].cols; ++c)
            for (int row = 0; row < sq.mats[k].rows; ++row)
                if (!sq.mats[k].at(row, c).is_zero())
                    throw Error("d_w² ≠ 0 on monomial " + basis.by_degree[k][c].str());
    return dw;
}

std::vector<std::vector<int>> gamma_selection(const WeightedPresentation& wp,
                                              const ExteriorBasis& basis) {
    std::vector<std::vector<int>> sel(basis.n + 1);
    for (int k = 0; k <= basis.n; ++k)
        for (int i = 0; i < basis.dim(k); ++i)
            if (wp.gamma_trivial(basis.by_degree[k][i])) sel[k].push_back(i);
    return sel;
}

std::optional<Matrix> restrict_map(const Matrix& full, const std::vector<int>& row_sel,
                                   const std::vector<int>& col_sel, std::string* diag) {
    std::vector<bool> row_in(full.rows, false);
    for (int r : row_sel) row_in[r] = true;
    for (int c : col_sel)
        for (int r = 0; r < full.rows; ++r)
            if (!row_in[r] && !full.at(r, c).is_zero()) {
                if (diag) *diag = "escaping target coordinate " + std::to_string(r);
                return std::nullopt;
            }
    Matrix m(static_cast<int>(row_sel.size()), static_cast<int>(col_sel.size()));
    for (size_t i = 0; i < row_sel.size(); ++i)
        for (size_t j = 0; j < col_sel.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = full.at(row_sel[i], col_sel[j]);
    return m;
}

BiDifferentialComplex gamma_subcomplex(const WeightedPresentation& wp,
                                       const SymplecticStructure& s) {
    int n = wp.base.n;
    ExteriorBasis basis(n);
    for (auto& [m, c] : s.omega.terms)
        if (!wp.gamma_trivial(m))
            throw Error("omega not in A²_Γ: monomial " + m.str() + " has nontrivial weight");

    GradedOp dw = weighted_differential(wp, basis);
    GradedOp lamOp = op_Lambda(s, basis);
    GradedOp lefOp = op_L(s, basis);
    auto sel = gamma_selection(wp, basis);

    auto restrict_or_throw = [&](const Matrix& full, int k_to, int k_from,
                                 const char* opname) {
        const std::vector<int> empty;
        const std::vector<int>& rows = (k_to >= 0 && k_to <= n) ? sel[k_to] : empty;
        std::string diag;
        auto m = restrict_map(full, rows, sel[k_from], &diag);
        if (!m) {
            // name the escaping monomial for the diagnostic
            std::vector<bool> row_in(full.rows, false);
            for (int r : rows) row_in[r] = true;
            for (int c : sel[k_from])
                for (int r = 0; r < full.rows; ++r)
                    if (!row_in[r] && !full.at(r, c).is_zero())
                        throw Error(std::string("subcomplex not closed under ") + opname +
                                    ": escaping monomial " + basis.by_degree[k_to][r].str());
            throw Error(std::string("subcomplex not closed under ") + opname);
        }
        return *m;
    };

    int count = n + 1;
    std::vector<Matrix> del_sub(count), lam_sub(count), lef_sub(count);
    std::vector<int> dims(count);
    for (int k = 0; k <= n; ++k) {
        dims[k] = static_cast<int>(sel[k].size());
        del_sub[k] = restrict_or_throw(dw.mats[k], k + 1, k, "d_w");
        lam_sub[k] = restrict_or_throw(lamOp.mats[k], k - 2, k, "Λ");
        lef_sub[k] = restrict_or_throw(lefOp.mats[k], k + 2, k, "L");
    }

    BiDifferentialComplex c;
    c.min_degree = 0;
    c.max_degree = n;
    c.n_half = s.n_half;
    c.dims = dims;
    for (int k = 0; k <= n; ++k) {
        c.del.push_back(del_sub[k]);
        Matrix debar(k - 1 >= 0 ? dims[k - 1] : 0, dims[k]);
        if (k - 1 >= 0) {
            if (k - 2 >= 0) debar = debar + del_sub[k - 2] * lam_sub[k];
            if (k + 1 <= n) debar = debar + Scalar(-1) * (lam_sub[k + 1] * del_sub[k]);
        }
        c.debar.push_back(std::move(debar));
        c.lef.push_back(lef_sub[k]);
        c.lam.push_back(lam_sub[k]);
        std::vector<std::string> lab;
        for (int i : sel[k]) lab.push_back(basis.by_degree[k][i].str());
        c.labels.push_back(std::move(lab));
    }
    if (auto err = c.validate()) throw Error("gamma subcomplex invalid: " + *err);
    return c;
}

StructureEquations untwist(const WeightedPresentation& wp) {
    StructureEquations eq;
    eq.name = wp.base.name.empty() ? "untwisted" : wp.base.name + "-untwisted";
    eq.n = wp.base.n;
    for (int k = 1; k <= eq.n; ++k) {
        Monomial gen = Monomial::of({k});
        Form du = wp.base.d[k - 1] +
                  wedge(wp.weight_of_generator[k - 1].derivative, Form(gen, Scalar(1)));
        eq.d.push_back(std::move(du));
    }
    if (auto diag = validate_presentation(eq)) throw Error("untwist: " + *diag);
    return eq;
}

}  // namespace symplex
