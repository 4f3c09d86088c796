#include <fnmatch.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "symplex/report.hpp"

namespace fs = std::filesystem;
using namespace symplex;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string corpus_dir() {
    if (const char* env = std::getenv("SYMPLEX_CORPUS_DIR")) return env;
    return SYMPLEX_DEFAULT_CORPUS_DIR;
}

int cmd_validate(const std::string& file) {
    ModelFile m;
    try {
        m = load_model(file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fs::exists(file) ? kExitMismatch : kExitUsage;
    }
    try {
        for (auto& s : m.effective_samples()) {
            InstantiatedModel im = instantiate_model(m, s);
            for (auto& t : m.twists) {
                auto phi = t.instantiate(s);
                if (auto diag = validate_flat(im.eq, phi))
                    throw Error("twist '" + t.label + "': " + *diag);
            }
            if (im.weighted) {
                ExteriorBasis basis(m.n);
                weighted_differential(*im.weighted, basis);
                for (auto& [mono, c] : im.sym.omega.terms)
                    if (!im.weighted->gamma_trivial(mono))
                        throw Error("omega not in A²_Γ: monomial " + mono.str());
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    std::cout << m.name << ": ok\n";
    return kExitPass;
}

int cmd_cohomology(const std::string& file, bool reps, const std::string& twist,
                   bool subcomplex, const std::string& format) {
    try {
        ModelFile m = load_model(file);
        ReportOptions opt;
        opt.reps = reps;
        opt.subcomplex = subcomplex;
        if (!twist.empty()) opt.twist_labels.push_back(twist);
        ResultReport r = compute_report(m, opt);
        if (format == "json")
            std::cout << render_json(r);
        else if (format == "csv")
            std::cout << render_csv(r);
        else
            std::cout << render_text(r);
        return kExitPass;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fs::exists(file) ? kExitMismatch : kExitUsage;
    }
}

int cmd_lefschetz(const std::string& file) {
    try {
        ModelFile m = load_model(file);
        InstantiatedModel im = instantiate_model(m, m.effective_samples().front());
        std::cout << "model " << m.name << "\n";
        for (int k = 0; k <= im.complex.n_half; ++k) {
            InducedMap lm = lefschetz_map(im.complex, k);
            std::cout << "  L^" << k << ": H^" << (im.complex.n_half - k) << " -> H^"
                      << (im.complex.n_half + k) << "  rank " << rank(lm.matrix) << " of "
                      << lm.source.dim << " -> " << lm.target.dim
                      << (lm.injective && lm.surjective ? "  (bijective)" : "") << "\n";
        }
        return kExitPass;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fs::exists(file) ? kExitMismatch : kExitUsage;
    }
}

int cmd_corpus_run(const std::string& filter) {
    std::string dir = corpus_dir();
    std::vector<fs::path> files;
    std::error_code ec;
    for (auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".model") {
            std::string base = entry.path().filename().string();
            if (!filter.empty() && fnmatch(filter.c_str(), base.c_str(), 0) != 0) continue;
            files.push_back(entry.path());
        }
    }
    if (ec) {
        std::cerr << "error: cannot read corpus directory '" << dir << "'\n";
        return kExitUsage;
    }
    if (files.empty()) {
        std::cerr << "error: no models found in '" << dir << "'\n";
        return kExitUsage;
    }
    std::sort(files.begin(), files.end());
    int failures = 0;
    for (auto& f : files) {
        try {
            ModelFile m = load_model(f.string());
            ReportOptions opt;
            opt.for_expectations = true;
            ResultReport r = compute_report(m, opt);
            auto mismatches = check_expectations(m, r);
            if (mismatches.empty()) {
                std::cout << "PASS " << m.name << "\n";
            } else {
                ++failures;
                std::cout << "FAIL " << m.name << "\n";
                for (auto& msg : mismatches) std::cout << "     " << msg << "\n";
            }
        } catch (const Error& e) {
            ++failures;
            std::cout << "FAIL " << f.filename().string() << ": " << e.what() << "\n";
        }
    }
    std::cout << (files.size() - failures) << "/" << files.size() << " models pass\n";
    return failures ? kExitMismatch : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic cohomology of Lie-algebra complexes"};
    app.require_subcommand(1);

    std::string file, twist, format = "text", filter;
    bool reps = false, subcomplex = false;

    auto* validate = app.add_subcommand("validate", "run all model validations");
    validate->add_option("file", file)->required();

    auto* coh = app.add_subcommand("cohomology", "compute the cohomology report");
    coh->add_option("file", file)->required();
    coh->add_flag("--reps", reps, "include representative listings");
    coh->add_option("--twist", twist, "compute the named twisted variant");
    coh->add_flag("--subcomplex", subcomplex, "restrict to the Γ-trivial subcomplex");
    coh->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* lef = app.add_subcommand("lefschetz", "print per-k Lefschetz ranks");
    lef->add_option("file", file)->required();

    auto* corpus = app.add_subcommand("corpus", "bundled corpus commands");
    auto* run = corpus->add_subcommand("run", "run the golden corpus");
    run->add_option("--filter", filter, "glob over model file names");
    corpus->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (validate->parsed()) return cmd_validate(file);
    if (coh->parsed()) return cmd_cohomology(file, reps, twist, subcomplex, format);
    if (lef->parsed()) return cmd_lefschetz(file);
    if (corpus->parsed()) return cmd_corpus_run(filter);
    return kExitUsage;
}
