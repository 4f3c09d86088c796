#include "symplex/model.hpp"

#include <fstream>
#include <sstream>

namespace symplex {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw Error("expected [..] list, got '" + text + "'");
    std::vector<int> out;
    std::string body = strip(t.substr(1, t.size() - 2));
    if (body.empty()) return out;
    for (auto& e : split(body, ','))
        out.push_back(static_cast<int>(std::stol(e)));
    return out;
}

CohKind parse_kind(const std::string& s) {
    if (s == "dR") return CohKind::dR;
    if (s == "dLambda") return CohKind::debar;
    if (s == "BC") return CohKind::BC;
    if (s == "A") return CohKind::A;
    if (s == "harmonic") return CohKind::harmonic;
    throw Error("unknown cohomology kind '" + s + "'");
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error("expected true/false, got '" + s + "'");
}

// "dims" or "dims[1..3]" → degree range (full range signalled by lo=-1)
std::pair<int, int> parse_range_suffix(std::string& word) {
    auto br = word.find('[');
    if (br == std::string::npos) return {-1, -1};
    std::string range = word.substr(br + 1);
    word = word.substr(0, br);
    if (range.empty() || range.back() != ']') throw Error("bad range '" + range + "'");
    range.pop_back();
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        int k = static_cast<int>(std::stol(range));
        return {k, k};
    }
    return {static_cast<int>(std::stol(range.substr(0, dots))),
            static_cast<int>(std::stol(range.substr(dots + 2)))};
}

Monomial parse_monomial_token(const std::string& tok, int n) {
    ParamForm f = parse_form_expr(tok, n, {});
    if (f.terms.size() != 1 || !(f.terms.begin()->second.c == Scalar(1)) ||
        !f.terms.begin()->second.is_constant())
        throw Error("expected a plain monomial, got '" + tok + "'");
    return f.terms.begin()->first;
}

void parse_expect(ExpectBlock& block, std::istringstream& words, const std::string& line,
                  int n) {
    std::string what;
    words >> what;
    auto rest_after_eq = [&]() {
        std::string rest;
        std::getline(words, rest);
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw Error("expected '=' in: " + line);
        return strip(rest.substr(eq + 1));
    };
    if (what == "hlc")
        block.hlc = parse_bool(rest_after_eq());
    else if (what == "brylinski")
        block.brylinski = parse_bool(rest_after_eq());
    else if (what == "ddLambdaLemma")
        block.dd_lambda_lemma = parse_bool(rest_after_eq());
    else if (what.rfind("delta", 0) == 0) {
        DimExpect d;
        auto [lo, hi] = parse_range_suffix(what);
        d.dims = parse_int_list(rest_after_eq());
        d.lo = lo < 0 ? 0 : lo;
        d.hi = lo < 0 ? static_cast<int>(d.dims.size()) - 1 : hi;
        if (static_cast<int>(d.dims.size()) != d.hi - d.lo + 1)
            throw Error("delta list length mismatch in: " + line);
        block.delta = d;
    } else {
        CohKind kind = parse_kind(what);
        std::string sub;
        words >> sub;
        if (sub.rfind("dims", 0) == 0) {
            DimExpect d;
            d.kind = kind;
            auto [lo, hi] = parse_range_suffix(sub);
            d.dims = parse_int_list(rest_after_eq());
            d.lo = lo < 0 ? 0 : lo;
            d.hi = lo < 0 ? static_cast<int>(d.dims.size()) - 1 : hi;
            if (static_cast<int>(d.dims.size()) != d.hi - d.lo + 1)
                throw Error("dims list length mismatch in: " + line);
            block.dims.push_back(d);
        } else if (sub.rfind("reps", 0) == 0) {
            RepExpect r;
            r.kind = kind;
            auto [lo, hi] = parse_range_suffix(sub);
            if (lo < 0 || lo != hi) throw Error("reps needs a single degree in: " + line);
            r.degree = lo;
            for (auto& tok : split(rest_after_eq(), ','))
                r.reps.push_back(parse_monomial_token(tok, n));
            block.reps.push_back(r);
        } else {
            throw Error("bad expect line: " + line);
        }
    }
}

}  // namespace

const TwistConnection* ModelFile::find_twist(const std::string& label) const {
    for (auto& t : twists)
        if (t.label == label) return &t;
    return nullptr;
}

std::vector<Sample> ModelFile::effective_samples() const {
    if (presentation.params.empty()) return {Sample{}};
    if (presentation.samples.empty())
        throw Error("model '" + name + "' declares parameters but no samples");
    for (auto& s : presentation.samples)
        for (auto& c : constraints)
            if (!c.eval(s).is_zero())
                throw Error("model '" + name + "' sample violates a constraint");
    return presentation.samples;
}

ModelFile parse_model(const std::string& text, const std::string& name_hint) {
    ModelFile m;
    m.name = name_hint;
    std::istringstream in(text);
    std::string line;
    std::string structure_text;   // accumulated long-form `d e<k>` lines
    std::string salamon;
    std::string omega_text;
    std::vector<std::pair<int, std::string>> weight_lines;
    bool seen_n = false;

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream words(line);
        std::string key;
        words >> key;
        auto value_after_eq = [&]() {
            auto eq = line.find('=');
            if (eq == std::string::npos) throw Error("expected '=' in: " + line);
            return strip(line.substr(eq + 1));
        };
        if (key == "name") {
            m.name = value_after_eq();
        } else if (key == "n") {
            m.n = static_cast<int>(std::stol(value_after_eq()));
            seen_n = true;
        } else if (key == "structure") {
            salamon = value_after_eq();
        } else if (key == "d") {
            structure_text += line + "\n";
        } else if (key == "symplectic") {
            std::string w;
            words >> w;
            if (w != "omega") throw Error("bad symplectic line: " + line);
            omega_text = value_after_eq();
        } else if (key == "param") {
            std::string p;
            while (words >> p) m.presentation.params.push_back(p);
        } else if (key == "constraint") {
            auto eq = line.find('=');
            std::string lhs = strip(line.substr(10, eq - 10));  // after "constraint"
            if (strip(line.substr(eq + 1)) != "0")
                throw Error("constraint must be '<expr> = 0': " + line);
            ParamForm f = parse_form_expr(lhs, std::max(m.n, 1), m.presentation.params);
            for (auto& [mono, c] : f.terms) {
                if (mono.bits != 0) throw Error("constraint must be parameter-only: " + line);
                m.constraints.push_back(c);
            }
        } else if (key == "samples") {
            std::string body = value_after_eq();
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw Error("bad samples list: " + line);
            body = body.substr(1, body.size() - 2);
            // split "(..),(..)" on commas outside parentheses
            std::vector<std::string> tuples;
            int depth = 0;
            std::string cur;
            for (char c : body) {
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (c == ',' && depth == 0) {
                    tuples.push_back(strip(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!strip(cur).empty()) tuples.push_back(strip(cur));
            for (auto& t : tuples) {
                if (t.size() < 2 || t.front() != '(' || t.back() != ')')
                    throw Error("bad sample tuple '" + t + "'");
                auto vals = split(t.substr(1, t.size() - 2), ',');
                if (vals.size() != m.presentation.params.size())
                    throw Error("sample arity mismatch in: " + line);
                Sample s;
                for (size_t i = 0; i < vals.size(); ++i) {
                    std::string v = vals[i];
                    bool neg = !v.empty() && v[0] == '-';
                    if (neg) v = strip(v.substr(1));
                    Rational r = parse_rational(v);
                    s[m.presentation.params[i]] = neg ? Rational(-r) : r;
                }
                m.presentation.samples.push_back(s);
            }
        } else if (key == "char") {
            std::string cname, w;
            words >> cname >> w;
            if (w != "derivative") throw Error("bad char line: " + line);
            m.char_names.push_back(cname);
            m.char_derivative[cname] =
                parse_form_any(value_after_eq(), m.n, m.presentation.params);
        } else if (key == "weight") {
            std::string gen;
            words >> gen;
            if (gen.size() < 2 || gen[0] != 'e') throw Error("bad weight line: " + line);
            weight_lines.emplace_back(static_cast<int>(std::stol(gen.substr(1))),
                                      value_after_eq());
        } else if (key == "gamma_trivial") {
            std::string w;
            words >> w;
            if (w != "rows") throw Error("bad gamma_trivial line: " + line);
            std::string body = value_after_eq();
            if (body.size() < 2 || body.front() != '[' || body.back() != ']')
                throw Error("bad gamma rows: " + line);
            body = body.substr(1, body.size() - 2);
            for (auto& row : split(body, ';')) {
                auto ints = parse_int_list(row);
                m.gamma_rows.emplace_back(ints.begin(), ints.end());
            }
        } else if (key == "twist") {
            TwistConnection t;
            std::string w;
            words >> t.label >> w;
            if (w != "rank") throw Error("bad twist line: " + line);
            words >> t.rank;
            words >> w;
            if (w != "phi" || t.rank < 1) throw Error("bad twist line: " + line);
            std::string body = value_after_eq();
            auto entries = split(body, ';');
            if (static_cast<int>(entries.size()) != t.rank * t.rank)
                throw Error("twist needs rank² entries (';'-separated): " + line);
            t.phi.assign(t.rank, std::vector<ParamForm>(t.rank));
            for (int i = 0; i < t.rank; ++i)
                for (int j = 0; j < t.rank; ++j)
                    t.phi[i][j] = parse_form_expr(entries[i * t.rank + j], m.n,
                                                  m.presentation.params);
            m.twists.push_back(std::move(t));
        } else if (key == "expect") {
            std::string peek;
            words >> peek;
            if (peek == "subcomplex") {
                parse_expect(m.expect_subcomplex, words, line, m.n);
            } else if (peek == "twist") {
                std::string label;
                words >> label;
                parse_expect(m.expect_twist[label], words, line, m.n);
            } else {
                // rewind the consumed word
                std::istringstream again(line.substr(line.find("expect") + 6));
                parse_expect(m.expect, again, line, m.n);
            }
        } else {
            throw Error("unknown model directive '" + key + "' in: " + line);
        }
    }

    if (!seen_n || m.n < 1) throw Error("model needs 'n = <dim>'");
    if (!salamon.empty() && !structure_text.empty())
        throw Error("model mixes shorthand and long-form structure");
    if (!salamon.empty()) {
        LieAlgebraPresentation p = parse_structure(salamon, m.n);
        m.presentation.n = m.n;
        m.presentation.d_of_generator = std::move(p.d_of_generator);
    } else {
        m.presentation.n = m.n;
        m.presentation.d_of_generator.resize(m.n);
        if (!structure_text.empty()) {
            std::istringstream sin(structure_text);
            std::string sline;
            while (std::getline(sin, sline)) {
                sline = strip(sline);
                if (sline.empty()) continue;
                auto eq = sline.find('=');
                std::string head = strip(sline.substr(0, eq));  // "d e<k>"
                auto epos = head.find('e');
                int k = static_cast<int>(std::stol(head.substr(epos + 1)));
                if (k < 1 || k > m.n) throw Error("generator out of range: " + sline);
                m.presentation.d_of_generator[k - 1] = parse_form_expr(
                    sline.substr(eq + 1), m.n, m.presentation.params);
            }
        }
    }
    m.presentation.name = m.name;

    if (omega_text.empty()) throw Error("model needs 'symplectic omega = ...'");
    m.omega = parse_form_any(omega_text, m.n, m.presentation.params);

    if (!m.char_names.empty() || !weight_lines.empty()) {
        m.weight_exponents.resize(m.n);
        for (auto& [gen, spec] : weight_lines) {
            if (gen < 1 || gen > m.n) throw Error("weight generator out of range");
            for (auto& factor : split(spec, '*')) {
                auto caret = factor.find('^');
                if (caret == std::string::npos)
                    throw Error("weight factor needs '^': " + factor);
                std::string cname = strip(factor.substr(0, caret));
                if (!m.char_derivative.count(cname))
                    throw Error("weight uses undeclared character '" + cname + "'");
                m.weight_exponents[gen - 1][cname] +=
                    static_cast<int>(std::stol(strip(factor.substr(caret + 1))));
            }
        }
        for (auto& row : m.gamma_rows)
            if (row.size() != m.char_names.size())
                throw Error("gamma row length must equal the number of characters");
    }
    return m;
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string hint = path;
    auto slash = hint.find_last_of('/');
    if (slash != std::string::npos) hint = hint.substr(slash + 1);
    auto dot = hint.rfind(".model");
    if (dot != std::string::npos) hint = hint.substr(0, dot);
    ModelFile m = parse_model(buf.str(), hint);
    m.path = path;
    return m;
}

InstantiatedModel instantiate_model(const ModelFile& m, const Sample& s) {
    InstantiatedModel im;
    im.eq = m.presentation.instantiate(s);
    if (auto diag = validate_presentation(im.eq)) throw Error(m.name + ": " + *diag);
    im.sym = build_symplectic(im.eq, m.omega.eval(s));
    im.complex = from_presentation(im.eq, im.sym);
    if (m.has_weights()) {
        WeightedPresentation wp;
        wp.base = im.eq;
        wp.char_names = m.char_names;
        for (auto& [name, pf] : m.char_derivative) wp.char_derivative[name] = pf.eval(s);
        wp.gamma_rows = m.gamma_rows;
        wp.weight_of_generator.resize(m.n);
        for (int g = 0; g < m.n; ++g) {
            CharacterWeight cw;
            cw.exponents = m.weight_exponents[g];
            for (auto& [name, e] : cw.exponents)
                cw.derivative += Scalar(Rational(e)) * wp.char_derivative.at(name);
            wp.weight_of_generator[g] = std::move(cw);
        }
        im.weighted = std::move(wp);
    }
    return im;
}

}  // namespace symplex
