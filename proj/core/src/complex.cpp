#include "symplex/complex.hpp"

#include <istream>
#include <sstream>

namespace symplex {

std::string kind_name(CohKind k) {
    switch (k) {
        case CohKind::dR: return "dR";
        case CohKind::debar: return "dLambda";
        case CohKind::BC: return "BC";
        case CohKind::A: return "A";
        case CohKind::harmonic: return "harmonic";
    }
    return "?";
}

std::optional<std::string> BiDifferentialComplex::validate() const {
    int cnt = count();
    if (static_cast<int>(dims.size()) != cnt || static_cast<int>(del.size()) != cnt ||
        static_cast<int>(debar.size()) != cnt)
        return "per-degree vectors have the wrong length";
    for (int k = min_degree; k <= max_degree; ++k) {
        if (del_at(k).rows != dim(k + 1) || del_at(k).cols != dim(k))
            return "del shape mismatch at degree " + std::to_string(k);
        if (debar_at(k).rows != dim(k - 1) || debar_at(k).cols != dim(k))
            return "debar shape mismatch at degree " + std::to_string(k);
    }
    for (int k = min_degree; k < max_degree; ++k)
        if (!(del_at(k + 1) * del_at(k)).is_zero())
            return "del² ≠ 0 at degree " + std::to_string(k);
    for (int k = min_degree + 1; k <= max_degree; ++k)
        if (!(debar_at(k - 1) * debar_at(k)).is_zero())
            return "debar² ≠ 0 at degree " + std::to_string(k);
    for (int k = min_degree; k <= max_degree; ++k) {
        Matrix anti(dim(k), dim(k));
        if (k + 1 <= max_degree) anti = anti + debar_at(k + 1) * del_at(k);
        if (k - 1 >= min_degree) anti = anti + del_at(k - 1) * debar_at(k);
        if (!anti.is_zero()) return "del∘debar + debar∘del ≠ 0 at degree " + std::to_string(k);
    }
    return std::nullopt;
}

namespace {

CohomologySpace empty_space(CohKind kind, int k) {
    CohomologySpace s;
    s.degree = k;
    s.kind = kind;
    return s;
}

Subspace image_del_into(const BiDifferentialComplex& c, int k) {
    if (k - 1 < c.min_degree || k > c.max_degree) return zero_subspace(c.dim(k));
    return image(c.del_at(k - 1));
}

Subspace image_debar_into(const BiDifferentialComplex& c, int k) {
    if (k + 1 > c.max_degree || k < c.min_degree) return zero_subspace(c.dim(k));
    return image(c.debar_at(k + 1));
}

Matrix deldebar(const BiDifferentialComplex& c, int k) {
    // ∂∘∂̄: A^k → A^k
    if (k - 1 < c.min_degree) return Matrix(c.dim(k), c.dim(k));
    return c.del_at(k - 1) * c.debar_at(k);
}

CohomologySpace make_quotient_space(CohKind kind, int k, const Subspace& num,
                                    const Subspace& den) {
    QuotientSpace q = quotient(num, den);
    CohomologySpace s;
    s.degree = k;
    s.kind = kind;
    s.dim = q.dim;
    s.representatives = q.representatives;
    s.denominator = q.denominator;
    return s;
}

}  // namespace

CohomologySpace h_dr(const BiDifferentialComplex& c, int k) {
    if (k < c.min_degree || k > c.max_degree) return empty_space(CohKind::dR, k);
    return make_quotient_space(CohKind::dR, k, kernel(c.del_at(k)), image_del_into(c, k));
}

CohomologySpace h_debar(const BiDifferentialComplex& c, int k) {
    if (k < c.min_degree || k > c.max_degree) return empty_space(CohKind::debar, k);
    return make_quotient_space(CohKind::debar, k, kernel(c.debar_at(k)),
                               image_debar_into(c, k));
}

CohomologySpace h_bc(const BiDifferentialComplex& c, int k) {
    if (k < c.min_degree || k > c.max_degree) return empty_space(CohKind::BC, k);
    Subspace num = intersect(kernel(c.del_at(k)), kernel(c.debar_at(k)));
    Subspace den = image(deldebar(c, k));
    return make_quotient_space(CohKind::BC, k, num, den);
}

CohomologySpace h_aeppli(const BiDifferentialComplex& c, int k) {
    if (k < c.min_degree || k > c.max_degree) return empty_space(CohKind::A, k);
    Subspace num = kernel(deldebar(c, k));
    Subspace den = sum(image_del_into(c, k), image_debar_into(c, k));
    return make_quotient_space(CohKind::A, k, num, den);
}

CohomologySpace harmonic_space(const BiDifferentialComplex& c, int k) {
    if (k < c.min_degree || k > c.max_degree) return empty_space(CohKind::harmonic, k);
    CohomologySpace s;
    s.degree = k;
    s.kind = CohKind::harmonic;
    s.representatives = intersect(kernel(c.del_at(k)), kernel(c.debar_at(k)));
    s.denominator = zero_subspace(c.dim(k));
    s.dim = s.representatives.dim();
    return s;
}

CohomologySpace cohomology(const BiDifferentialComplex& c, CohKind kind, int k) {
    switch (kind) {
        case CohKind::dR: return h_dr(c, k);
        case CohKind::debar: return h_debar(c, k);
        case CohKind::BC: return h_bc(c, k);
        case CohKind::A: return h_aeppli(c, k);
        case CohKind::harmonic: return harmonic_space(c, k);
    }
    throw Error("bad cohomology kind");
}

namespace {
InducedMap map_into_quotient(CohomologySpace source, CohomologySpace target) {
    QuotientSpace q{target.dim, target.representatives, target.denominator};
    Matrix m(target.dim, source.dim);
    for (int c = 0; c < source.dim; ++c) {
        auto coords = coordinates_in_quotient(source.representatives.basis.column(c), q);
        for (int r = 0; r < target.dim; ++r) m.at(r, c) = coords[r];
    }
    InducedMap im;
    int rk = rank(m);
    im.matrix = std::move(m);
    im.injective = (rk == source.dim);
    im.surjective = (rk == target.dim);
    im.source = std::move(source);
    im.target = std::move(target);
    return im;
}
}  // namespace

InducedMap natural_map(const BiDifferentialComplex& c, CohKind from, CohKind to, int k) {
    bool ok = (from == CohKind::BC && (to == CohKind::dR || to == CohKind::debar)) ||
              (to == CohKind::A && (from == CohKind::dR || from == CohKind::debar)) ||
              (from == CohKind::harmonic && to == CohKind::dR);
    if (!ok) throw Error("unsupported natural map " + kind_name(from) + " -> " + kind_name(to));
    return map_into_quotient(cohomology(c, from, k), cohomology(c, to, k));
}

InducedMap lefschetz_map(const BiDifferentialComplex& c, int k) {
    if (!c.has_lefschetz()) throw Error("complex has no Lefschetz operator attached");
    int n = c.n_half;
    CohomologySpace source = h_dr(c, n - k), target = h_dr(c, n + k);
    QuotientSpace q{target.dim, target.representatives, target.denominator};
    Matrix m(target.dim, source.dim);
    for (int col = 0; col < source.dim; ++col) {
        auto v = source.representatives.basis.column(col);
        for (int t = 0; t < k; ++t) v = c.lef[n - k + 2 * t - c.min_degree].apply(v);
        auto coords = coordinates_in_quotient(v, q);
        for (int r = 0; r < target.dim; ++r) m.at(r, col) = coords[r];
    }
    InducedMap im;
    int rk = rank(m);
    im.matrix = std::move(m);
    im.injective = (rk == source.dim);
    im.surjective = (rk == target.dim);
    im.source = std::move(source);
    im.target = std::move(target);
    return im;
}

VerdictReport verdicts(const BiDifferentialComplex& c) {
    VerdictReport r;
    r.brylinski = true;
    r.dd_lambda_lemma = true;
    for (int k = c.min_degree; k <= c.max_degree; ++k) {
        auto dr = h_dr(c, k);
        auto bc = h_bc(c, k);
        auto ae = h_aeppli(c, k);
        r.delta.push_back(bc.dim + ae.dim - 2 * dr.dim);

        InducedMap bcdr = map_into_quotient(bc, dr);
        r.bc_dr_injective.push_back(bcdr.injective);
        r.bc_dr_surjective.push_back(bcdr.surjective);
        if (!bcdr.injective) r.dd_lambda_lemma = false;

        InducedMap har = map_into_quotient(harmonic_space(c, k), bcdr.target);
        if (!har.surjective) r.brylinski = false;

        VerdictReport::Eq16 eq;
        Subspace a = intersect(image_debar_into(c, k), kernel(c.del_at(k)));
        Subspace b = image(deldebar(c, k));
        Subspace cc = intersect(image_del_into(c, k), kernel(c.debar_at(k)));
        eq.ab = (a == b);
        eq.bc = (b == cc);
        eq.ac = (a == cc);
        r.subspace_equalities.push_back(eq);
    }
    if (c.has_lefschetz()) {
        r.hlc = true;
        r.hlc_surjective = true;
        for (int k = 0; k <= c.n_half; ++k) {
            InducedMap lm = lefschetz_map(c, k);
            LefschetzRank lr;
            lr.k = k;
            lr.source_dim = lm.source.dim;
            lr.target_dim = lm.target.dim;
            lr.rank = rank(lm.matrix);
            lr.injective = lm.injective;
            lr.surjective = lm.surjective;
            if (!lr.injective || !lr.surjective) r.hlc = false;
            if (!lr.surjective) r.hlc_surjective = false;
            r.lefschetz.push_back(lr);
        }
    }
    return r;
}

BiDifferentialComplex from_presentation(const StructureEquations& eq,
                                        const SymplecticStructure& s) {
    ExteriorBasis basis(eq.n);
    GradedOp d = ce_differential(eq, basis);
    GradedOp dl = d_lambda(s, d, basis);
    GradedOp L = op_L(s, basis);
    GradedOp lam = op_Lambda(s, basis);
    StarOp star = op_star(s, basis);

    BiDifferentialComplex c;
    c.min_degree = 0;
    c.max_degree = eq.n;
    c.n_half = s.n_half;
    for (int k = 0; k <= eq.n; ++k) {
        c.dims.push_back(basis.dim(k));
        c.del.push_back(d.mats[k]);
        c.debar.push_back(dl.mats[k]);
        c.lef.push_back(L.mats[k]);
        c.lam.push_back(lam.mats[k]);
        c.star.push_back(star.mats[k]);
        std::vector<std::string> lab;
        for (Monomial m : basis.by_degree[k]) lab.push_back(m.str());
        c.labels.push_back(std::move(lab));
    }
    if (auto err = c.validate()) throw Error("internal: " + *err);
    return c;
}

Scalar parse_scalar(const std::string& token) {
    if (token.empty()) throw Error("empty scalar token");
    std::string t = token;
    bool imag = t.back() == 'i';
    if (imag) t.pop_back();
    if (!imag) return Scalar(parse_rational(t));
    // t is now "<re><+/-><im>" or just "<im>" (possibly signed)
    size_t split = std::string::npos;
    for (size_t p = 1; p < t.size(); ++p)
        if ((t[p] == '+' || t[p] == '-') && t[p - 1] != '/' && t[p - 1] != '+' &&
            t[p - 1] != '-')
            split = p;
    if (split == std::string::npos) {
        std::string im = t;
        if (im.empty() || im == "+") im = "1";
        else if (im == "-") im = "-1";
        return Scalar(Rational(0), parse_rational(im));
    }
    std::string re = t.substr(0, split);
    std::string im = t.substr(split);
    if (im == "+") im = "1";
    else if (im == "-") im = "-1";
    return Scalar(parse_rational(re), parse_rational(im));
}

BiDifferentialComplex load_complex(std::istream& in) {
    std::string tok;
    auto expect = [&](const std::string& what) {
        if (!(in >> tok) || tok != what) throw Error("raw complex: expected '" + what + "'");
    };
    expect("degrees");
    BiDifferentialComplex c;
    if (!(in >> c.min_degree >> c.max_degree) || c.max_degree < c.min_degree)
        throw Error("raw complex: bad degree range");
    expect("dims");
    for (int k = 0; k < c.count(); ++k) {
        int d;
        if (!(in >> d) || d < 0) throw Error("raw complex: bad dimension");
        c.dims.push_back(d);
    }
    for (int k = c.min_degree; k <= c.max_degree; ++k) {
        c.del.push_back(Matrix(c.dim(k + 1), c.dim(k)));
        c.debar.push_back(Matrix(c.dim(k - 1), c.dim(k)));
    }
    while (in >> tok) {
        bool is_del = (tok == "del");
        if (!is_del && tok != "debar") throw Error("raw complex: unexpected token '" + tok + "'");
        int k;
        if (!(in >> k) || k < c.min_degree || k > c.max_degree)
            throw Error("raw complex: bad block degree");
        Matrix& m = is_del ? c.del[k - c.min_degree] : c.debar[k - c.min_degree];
        for (int r = 0; r < m.rows; ++r)
            for (int col = 0; col < m.cols; ++col) {
                if (!(in >> tok)) throw Error("raw complex: truncated matrix block");
                m.at(r, col) = parse_scalar(tok);
            }
    }
    if (auto err = c.validate()) throw Error("raw complex: " + *err);
    return c;
}

}  // namespace symplex
