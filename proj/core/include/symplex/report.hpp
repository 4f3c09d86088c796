#pragma once
#include "symplex/model.hpp"

namespace symplex {

struct ComplexResult {
    int min_degree = 0;
    std::vector<int> degrees;
    std::vector<int> dR, dLambda, BC, A, delta;
    bool hlc = false, hlc_surjective = false, brylinski = false, dd_lambda_lemma = false;
    std::vector<LefschetzRank> lefschetz;
    std::vector<bool> bc_dr_injective, bc_dr_surjective;
    // kind name -> per-degree representative expressions (filled on request)
    std::map<std::string, std::vector<std::vector<std::string>>> representatives;
};

struct ResultReport {
    std::string model;
    ComplexResult base;
    std::optional<ComplexResult> subcomplex;
    std::map<std::string, ComplexResult> twists;
    bool samples_agree = true;
    std::vector<std::string> notes;
};

struct ReportOptions {
    bool subcomplex = false;                 // force the A_Γ restriction
    std::vector<std::string> twist_labels;   // force these twists
    bool reps = false;                       // include representative listings
    bool for_expectations = false;           // also compute whatever expect blocks need
};

ComplexResult summarize_complex(const BiDifferentialComplex& c, bool with_reps);
ResultReport compute_report(const ModelFile& m, const ReportOptions& opt);

// Golden comparison: empty list = pass. Includes representative class checks.
std::vector<std::string> check_expectations(const ModelFile& m, const ResultReport& r);

std::string render_json(const ResultReport& r);
ResultReport parse_json_report(const std::string& text);
bool report_equal(const ResultReport& a, const ResultReport& b);
std::string render_text(const ResultReport& r);
std::string render_csv(const ResultReport& r);

}  // namespace symplex
