#include "symplex/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace symplex {

namespace {

std::string rep_string(const BiDifferentialComplex& c, int k, const std::vector<Scalar>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string cs = v[i].str();
        bool neg = cs[0] == '-';
        if (neg) cs.erase(0, 1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const std::string& label = c.labels[k - c.min_degree][i];
        if (cs == "1")
            out += label;
        else
            out += cs + "*" + label;
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> space_reps(const BiDifferentialComplex& c, const CohomologySpace& s) {
    std::vector<std::string> out;
    for (int j = 0; j < s.dim; ++j)
        out.push_back(rep_string(c, s.degree, s.representatives.basis.column(j)));
    return out;
}

}  // namespace

ComplexResult summarize_complex(const BiDifferentialComplex& c, bool with_reps) {
    ComplexResult r;
    r.min_degree = c.min_degree;
    VerdictReport v = verdicts(c);
    for (int k = c.min_degree; k <= c.max_degree; ++k) {
        r.degrees.push_back(k);
        auto dr = h_dr(c, k), dl = h_debar(c, k), bc = h_bc(c, k), ae = h_aeppli(c, k);
        r.dR.push_back(dr.dim);
        r.dLambda.push_back(dl.dim);
        r.BC.push_back(bc.dim);
        r.A.push_back(ae.dim);
        if (with_reps) {
            r.representatives["dR"].push_back(space_reps(c, dr));
            r.representatives["dLambda"].push_back(space_reps(c, dl));
            r.representatives["BC"].push_back(space_reps(c, bc));
            r.representatives["A"].push_back(space_reps(c, ae));
        }
    }
    r.delta = v.delta;
    r.hlc = v.hlc;
    r.hlc_surjective = v.hlc_surjective;
    r.brylinski = v.brylinski;
    r.dd_lambda_lemma = v.dd_lambda_lemma;
    r.lefschetz = v.lefschetz;
    r.bc_dr_injective = v.bc_dr_injective;
    r.bc_dr_surjective = v.bc_dr_surjective;
    return r;
}

namespace {

bool dims_equal(const ComplexResult& a, const ComplexResult& b) {
    return a.degrees == b.degrees && a.dR == b.dR && a.dLambda == b.dLambda &&
           a.BC == b.BC && a.A == b.A;
}

struct SampleRun {
    ComplexResult base;
    std::optional<ComplexResult> subcomplex;
    std::map<std::string, ComplexResult> twists;
};

}  // namespace

ResultReport compute_report(const ModelFile& m, const ReportOptions& opt) {
    bool want_sub = opt.subcomplex ||
                    (opt.for_expectations && !m.expect_subcomplex.empty());
    std::set<std::string> twist_labels(opt.twist_labels.begin(), opt.twist_labels.end());
    if (opt.for_expectations)
        for (auto& [label, block] : m.expect_twist) twist_labels.insert(label);
    for (auto& label : twist_labels)
        if (!m.find_twist(label)) throw Error("model has no twist labelled '" + label + "'");
    if (want_sub && !m.has_weights())
        throw Error("model has no character weights; no subcomplex to restrict to");

    auto samples = m.effective_samples();
    std::vector<SampleRun> runs;
    for (auto& s : samples) {
        InstantiatedModel im = instantiate_model(m, s);
        SampleRun run;
        run.base = summarize_complex(im.complex, opt.reps);
        if (want_sub)
            run.subcomplex =
                summarize_complex(gamma_subcomplex(*im.weighted, im.sym), opt.reps);
        for (auto& label : twist_labels) {
            const TwistConnection* t = m.find_twist(label);
            run.twists.emplace(label, summarize_complex(
                twisted_complex(im.eq, im.sym, t->instantiate(s)), opt.reps));
        }
        runs.push_back(std::move(run));
    }

    ResultReport r;
    r.model = m.name;
    r.base = runs.front().base;
    r.subcomplex = runs.front().subcomplex;
    r.twists = runs.front().twists;
    for (size_t i = 1; i < runs.size(); ++i) {
        bool agree = dims_equal(runs[i].base, r.base);
        if (r.subcomplex) agree = agree && dims_equal(*runs[i].subcomplex, *r.subcomplex);
        for (auto& [label, res] : r.twists)
            agree = agree && dims_equal(runs[i].twists.at(label), res);
        if (!agree) {
            r.samples_agree = false;
            r.notes.push_back("non-generic: sample " + std::to_string(i + 1) +
                              " yields different dimensions than sample 1");
        }
    }
    return r;
}

namespace {

const std::vector<int>* dims_of(const ComplexResult& c, CohKind kind) {
    switch (kind) {
        case CohKind::dR: return &c.dR;
        case CohKind::debar: return &c.dLambda;
        case CohKind::BC: return &c.BC;
        case CohKind::A: return &c.A;
        default: return nullptr;
    }
}

void check_block(const ExpectBlock& e, const ComplexResult& c, const std::string& where,
                 std::vector<std::string>& out) {
    auto deg_index = [&](int k) { return k - c.min_degree; };
    for (auto& d : e.dims) {
        const std::vector<int>* got = dims_of(c, d.kind);
        for (int k = d.lo; k <= d.hi; ++k) {
            int want = d.dims[k - d.lo];
            int idx = deg_index(k);
            int have = (idx >= 0 && idx < static_cast<int>(got->size())) ? (*got)[idx] : 0;
            if (have != want)
                out.push_back(where + " " + kind_name(d.kind) + " degree " +
                              std::to_string(k) + ": expected " + std::to_string(want) +
                              ", computed " + std::to_string(have));
        }
    }
    if (e.delta)
        for (int k = e.delta->lo; k <= e.delta->hi; ++k) {
            int want = e.delta->dims[k - e.delta->lo];
            int idx = deg_index(k);
            int have =
                (idx >= 0 && idx < static_cast<int>(c.delta.size())) ? c.delta[idx] : 0;
            if (have != want)
                out.push_back(where + " delta degree " + std::to_string(k) + ": expected " +
                              std::to_string(want) + ", computed " + std::to_string(have));
        }
    auto check_bool = [&](const std::optional<bool>& want, bool have, const char* nm) {
        if (want && *want != have)
            out.push_back(where + " " + nm + ": expected " + (*want ? "true" : "false") +
                          ", computed " + (have ? "true" : "false"));
    };
    check_bool(e.hlc, c.hlc, "hlc");
    check_bool(e.brylinski, c.brylinski, "brylinski");
    check_bool(e.dd_lambda_lemma, c.dd_lambda_lemma, "ddLambdaLemma");
}

// the classes of the listed monomials must form a basis of the computed space
void check_reps(const ModelFile& m, std::vector<std::string>& out) {
    if (m.expect.reps.empty()) return;
    InstantiatedModel im = instantiate_model(m, m.effective_samples().front());
    ExteriorBasis basis(m.n);
    for (auto& re : m.expect.reps) {
        CohomologySpace space = cohomology(im.complex, re.kind, re.degree);
        std::string where = m.name + " " + kind_name(re.kind) + " reps degree " +
                            std::to_string(re.degree);
        if (static_cast<int>(re.reps.size()) != space.dim) {
            out.push_back(where + ": expected " + std::to_string(re.reps.size()) +
                          " classes, space has dimension " + std::to_string(space.dim));
            continue;
        }
        QuotientSpace q{space.dim, space.representatives, space.denominator};
        Matrix coords(space.dim, static_cast<int>(re.reps.size()));
        bool failed = false;
        for (size_t j = 0; j < re.reps.size(); ++j) {
            std::vector<Scalar> v = form_to_vector(basis, re.degree, Form(re.reps[j], Scalar(1)));
            try {
                auto x = coordinates_in_quotient(v, q);
                for (int r = 0; r < space.dim; ++r) coords.at(r, static_cast<int>(j)) = x[r];
            } catch (const Error&) {
                out.push_back(where + ": " + re.reps[j].str() + " is not a cocycle class");
                failed = true;
            }
        }
        if (!failed && rank(coords) != space.dim)
            out.push_back(where + ": listed classes do not span the space");
    }
}

}  // namespace

std::vector<std::string> check_expectations(const ModelFile& m, const ResultReport& r) {
    std::vector<std::string> out;
    check_block(m.expect, r.base, m.name, out);
    if (!m.expect_subcomplex.empty()) {
        if (!r.subcomplex)
            out.push_back(m.name + ": subcomplex expectations but no subcomplex computed");
        else
            check_block(m.expect_subcomplex, *r.subcomplex, m.name + " subcomplex", out);
    }
    for (auto& [label, block] : m.expect_twist) {
        auto it = r.twists.find(label);
        if (it == r.twists.end())
            out.push_back(m.name + ": twist '" + label + "' expectations but not computed");
        else
            check_block(block, it->second, m.name + " twist " + label, out);
    }
    if (!r.samples_agree)
        out.push_back(m.name + ": non-generic parameter samples (dimension disagreement)");
    check_reps(m, out);
    return out;
}

namespace {

using nlohmann::json;

json complex_json(const ComplexResult& c) {
    json j;
    j["degrees"] = c.degrees;
    j["cohomology"] = {{"dR", c.dR}, {"dLambda", c.dLambda}, {"BC", c.BC}, {"A", c.A}};
    j["delta"] = c.delta;
    j["verdicts"] = {{"hlc", c.hlc},
                     {"hlcSurjective", c.hlc_surjective},
                     {"brylinski", c.brylinski},
                     {"ddLambdaLemma", c.dd_lambda_lemma}};
    if (!c.representatives.empty()) j["representatives"] = c.representatives;
    return j;
}

ComplexResult complex_from_json(const json& j) {
    ComplexResult c;
    c.degrees = j.at("degrees").get<std::vector<int>>();
    c.min_degree = c.degrees.empty() ? 0 : c.degrees.front();
    c.dR = j.at("cohomology").at("dR").get<std::vector<int>>();
    c.dLambda = j.at("cohomology").at("dLambda").get<std::vector<int>>();
    c.BC = j.at("cohomology").at("BC").get<std::vector<int>>();
    c.A = j.at("cohomology").at("A").get<std::vector<int>>();
    c.delta = j.at("delta").get<std::vector<int>>();
    c.hlc = j.at("verdicts").at("hlc").get<bool>();
    c.hlc_surjective = j.at("verdicts").at("hlcSurjective").get<bool>();
    c.brylinski = j.at("verdicts").at("brylinski").get<bool>();
    c.dd_lambda_lemma = j.at("verdicts").at("ddLambdaLemma").get<bool>();
    if (j.contains("representatives"))
        c.representatives =
            j.at("representatives")
                .get<std::map<std::string, std::vector<std::vector<std::string>>>>();
    return c;
}

json report_json(const ResultReport& r) {
    json j;
    j["model"] = r.model;
    j["degrees"] = r.base.degrees;
    j["cohomology"] = complex_json(r.base)["cohomology"];
    j["delta"] = r.base.delta;
    j["verdicts"] = complex_json(r.base)["verdicts"];
    if (!r.base.representatives.empty())
        j["representatives"] = r.base.representatives;
    if (r.subcomplex) j["subcomplex"] = complex_json(*r.subcomplex);
    if (!r.twists.empty()) {
        json t;
        for (auto& [label, res] : r.twists) t[label] = complex_json(res);
        j["twists"] = t;
    }
    j["samplesAgree"] = r.samples_agree;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string render_json(const ResultReport& r) {
    return report_json(r).dump(2) + "\n";
}

ResultReport parse_json_report(const std::string& text) {
    json j = json::parse(text);
    ResultReport r;
    r.model = j.at("model").get<std::string>();
    json base;
    base["degrees"] = j.at("degrees");
    base["cohomology"] = j.at("cohomology");
    base["delta"] = j.at("delta");
    base["verdicts"] = j.at("verdicts");
    if (j.contains("representatives")) base["representatives"] = j.at("representatives");
    r.base = complex_from_json(base);
    if (j.contains("subcomplex")) r.subcomplex = complex_from_json(j.at("subcomplex"));
    if (j.contains("twists"))
        for (auto& [label, sub] : j.at("twists").items())
            r.twists.emplace(label, complex_from_json(sub));
    r.samples_agree = j.at("samplesAgree").get<bool>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

bool report_equal(const ResultReport& a, const ResultReport& b) {
    json ja = report_json(a), jb = report_json(b);
    // lefschetz rank details are not part of the JSON schema; compare the schema view
    return ja == jb;
}

namespace {
std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void text_section(std::ostringstream& out, const std::string& title, const ComplexResult& c) {
    out << title << "\n";
    out << "  k:        " << join_ints(c.degrees) << "\n";
    out << "  dR:       " << join_ints(c.dR) << "\n";
    out << "  dLambda:  " << join_ints(c.dLambda) << "\n";
    out << "  BC:       " << join_ints(c.BC) << "\n";
    out << "  A:        " << join_ints(c.A) << "\n";
    out << "  delta:    " << join_ints(c.delta) << "\n";
    out << "  hlc=" << (c.hlc ? "true" : "false")
        << " hlcSurjective=" << (c.hlc_surjective ? "true" : "false")
        << " brylinski=" << (c.brylinski ? "true" : "false")
        << " ddLambdaLemma=" << (c.dd_lambda_lemma ? "true" : "false") << "\n";
    for (auto& [kind, per_degree] : c.representatives) {
        for (size_t k = 0; k < per_degree.size(); ++k) {
            if (per_degree[k].empty()) continue;
            out << "  " << kind << "^" << c.degrees[k] << " reps: ";
            for (size_t i = 0; i < per_degree[k].size(); ++i)
                out << (i ? "; " : "") << per_degree[k][i];
            out << "\n";
        }
    }
}

void csv_section(std::ostringstream& out, const std::string& model,
                 const std::string& section, const ComplexResult& c) {
    const char* kinds[] = {"dR", "dLambda", "BC", "A", "delta"};
    const std::vector<int>* data[] = {&c.dR, &c.dLambda, &c.BC, &c.A, &c.delta};
    for (int t = 0; t < 5; ++t)
        for (size_t i = 0; i < c.degrees.size(); ++i)
            out << model << "," << section << "," << kinds[t] << "," << c.degrees[i] << ","
                << (*data[t])[i] << "\n";
    out << model << "," << section << ",hlc,," << (c.hlc ? "true" : "false") << "\n";
    out << model << "," << section << ",hlcSurjective,,"
        << (c.hlc_surjective ? "true" : "false") << "\n";
    out << model << "," << section << ",brylinski,," << (c.brylinski ? "true" : "false")
        << "\n";
    out << model << "," << section << ",ddLambdaLemma,,"
        << (c.dd_lambda_lemma ? "true" : "false") << "\n";
}
}  // namespace

std::string render_text(const ResultReport& r) {
    std::ostringstream out;
    text_section(out, "model " + r.model, r.base);
    if (r.subcomplex) text_section(out, "subcomplex (A_Γ)", *r.subcomplex);
    for (auto& [label, res] : r.twists) text_section(out, "twist " + label, res);
    out << "samplesAgree=" << (r.samples_agree ? "true" : "false") << "\n";
    for (auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string render_csv(const ResultReport& r) {
    std::ostringstream out;
    out << "model,section,kind,degree,value\n";
    csv_section(out, r.model, "base", r.base);
    if (r.subcomplex) csv_section(out, r.model, "subcomplex", *r.subcomplex);
    for (auto& [label, res] : r.twists) csv_section(out, r.model, "twist:" + label, res);
    out << r.model << ",meta,samplesAgree,," << (r.samples_agree ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace symplex
