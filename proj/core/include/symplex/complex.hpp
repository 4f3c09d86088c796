#pragma once
#include <iosfwd>

#include "symplex/symplectic.hpp"

namespace symplex {

// Bounded graded spaces with anticommuting differentials ∂ (degree +1) and ∂̄
// (degree −1); optionally carries the symplectic operators so Lefschetz verdicts
// work uniformly for plain, twisted, and subcomplex builds.
struct BiDifferentialComplex {
    int min_degree = 0, max_degree = 0;
    std::vector<int> dims;                        // [k - min_degree]
    std::vector<Matrix> del;                      // k -> k+1
    std::vector<Matrix> debar;                    // k -> k-1
    std::vector<std::vector<std::string>> labels;  // optional basis labels
    std::vector<Matrix> lef;                      // optional L: k -> k+2
    std::vector<Matrix> lam;                      // optional Λ: k -> k-2
    std::vector<Matrix> star;                     // optional ⋆: k -> (min+max)-k
    int n_half = 0;                               // set when lef present

    int count() const { return max_degree - min_degree + 1; }
    int dim(int k) const {
        return (k < min_degree || k > max_degree) ? 0 : dims[k - min_degree];
    }
    const Matrix& del_at(int k) const { return del[k - min_degree]; }
    const Matrix& debar_at(int k) const { return debar[k - min_degree]; }
    bool has_lefschetz() const { return !lef.empty(); }

    // nullopt = ok; checks shapes, ∂²=0, ∂̄²=0, ∂∂̄+∂̄∂=0
    std::optional<std::string> validate() const;
};

enum class CohKind { dR, debar, BC, A, harmonic };
std::string kind_name(CohKind k);

struct CohomologySpace {
    int degree = 0;
    int dim = 0;
    Subspace representatives;  // canonical cocycle lifts (a plain subspace for harmonic)
    CohKind kind = CohKind::dR;
    Subspace denominator;  // the space quotiented out (empty for harmonic)
};

struct InducedMap {
    CohomologySpace source, target;
    Matrix matrix;  // target-representative coordinates of each source representative
    bool injective = false, surjective = false;
};

struct LefschetzRank {
    int k = 0;
    int rank = 0, source_dim = 0, target_dim = 0;
    bool injective = false, surjective = false;
};

struct VerdictReport {
    std::vector<int> delta;  // indexed by degree - min_degree
    std::vector<LefschetzRank> lefschetz;  // k = 0..n_half
    std::vector<bool> bc_dr_injective, bc_dr_surjective;  // per degree
    bool hlc = false;             // all Lefschetz maps bijective
    bool hlc_surjective = false;  // surjectivity only (twisted reporting)
    bool brylinski = false;       // harmonic -> H_dR surjective in every degree
    bool dd_lambda_lemma = false; // BC -> dR injective in every degree
    struct Eq16 {
        bool ab = false, bc = false, ac = false;
    };
    // per degree: im∂̄∩ker∂ (A) vs im∂∂̄ (B) vs im∂∩ker∂̄ (C)
    std::vector<Eq16> subspace_equalities;
};

// ∂ = d, ∂̄ = d^Λ on ∧•g*, with L/Λ/⋆ attached.
BiDifferentialComplex from_presentation(const StructureEquations& eq,
                                        const SymplecticStructure& s);

CohomologySpace h_dr(const BiDifferentialComplex& c, int k);
CohomologySpace h_debar(const BiDifferentialComplex& c, int k);
CohomologySpace h_bc(const BiDifferentialComplex& c, int k);
CohomologySpace h_aeppli(const BiDifferentialComplex& c, int k);
CohomologySpace harmonic_space(const BiDifferentialComplex& c, int k);
CohomologySpace cohomology(const BiDifferentialComplex& c, CohKind kind, int k);

// identity-induced maps; (from, to) ∈ {BC→dR, BC→debar, dR→A, debar→A}
InducedMap natural_map(const BiDifferentialComplex& c, CohKind from, CohKind to, int k);
// [ω^k]: H^{n−k}_dR → H^{n+k}_dR (requires attached Lefschetz operator)
InducedMap lefschetz_map(const BiDifferentialComplex& c, int k);

VerdictReport verdicts(const BiDifferentialComplex& c);

// Raw-matrix format: "degrees <min> <max>", "dims d0 ...", then "del <k>" /
// "debar <k>" blocks of row-major entries (p/q or p/q+r/si tokens).
BiDifferentialComplex load_complex(std::istream& in);
Scalar parse_scalar(const std::string& token);

}  // namespace symplex
