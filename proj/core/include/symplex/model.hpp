#pragma once
#include "symplex/twist.hpp"

namespace symplex {

struct DimExpect {
    CohKind kind = CohKind::dR;
    int lo = 0, hi = 0;  // degree range the values cover
    std::vector<int> dims;
};

struct RepExpect {
    CohKind kind = CohKind::dR;
    int degree = 0;
    std::vector<Monomial> reps;
};

struct ExpectBlock {
    std::vector<DimExpect> dims;
    std::optional<DimExpect> delta;  // kind ignored
    std::optional<bool> hlc, brylinski, dd_lambda_lemma;
    std::vector<RepExpect> reps;
    bool empty() const {
        return dims.empty() && !delta && !hlc && !brylinski && !dd_lambda_lemma && reps.empty();
    }
};

struct ModelFile {
    std::string path, name;
    int n = 0;
    LieAlgebraPresentation presentation;  // carries params + samples
    ParamForm omega;
    std::vector<Coef> constraints;  // linear in params; must evaluate to 0 per sample

    std::vector<std::string> char_names;
    std::map<std::string, ParamForm> char_derivative;
    std::vector<std::map<std::string, int>> weight_exponents;  // per generator
    std::vector<std::vector<long>> gamma_rows;
    bool has_weights() const { return !char_names.empty(); }

    std::vector<TwistConnection> twists;
    const TwistConnection* find_twist(const std::string& label) const;

    ExpectBlock expect;             // base complex
    ExpectBlock expect_subcomplex;  // A_Γ restriction
    std::map<std::string, ExpectBlock> expect_twist;

    // declared samples with constraints checked; a parameter-free model yields
    // one empty sample
    std::vector<Sample> effective_samples() const;
};

ModelFile parse_model(const std::string& text, const std::string& name_hint);
ModelFile load_model(const std::string& path);

struct InstantiatedModel {
    StructureEquations eq;
    SymplecticStructure sym;
    BiDifferentialComplex complex;  // base complex
    std::optional<WeightedPresentation> weighted;
};

// Validates everything (d²=0, ω closed/non-degenerate, character closedness).
InstantiatedModel instantiate_model(const ModelFile& m, const Sample& s);

}  // namespace symplex
