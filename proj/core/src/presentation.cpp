#include "symplex/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symplex {

Scalar Coef::eval(const Sample& s) const {
    Scalar out = c;
    for (auto& [p, coeff] : lin) {
        auto it = s.find(p);
        if (it == s.end()) throw Error("no sample value for parameter '" + p + "'");
        out += coeff * Scalar(it->second);
    }
    return out;
}

Coef Coef::operator-() const {
    Coef r;
    r.c = -c;
    for (auto& [p, s] : lin) r.lin.emplace(p, -s);
    return r;
}

Coef& Coef::operator+=(const Coef& o) {
    c += o.c;
    for (auto& [p, s] : o.lin) {
        auto it = lin.find(p);
        if (it == lin.end()) {
            lin.emplace(p, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) lin.erase(it);
        }
    }
    return *this;
}

Coef operator*(const Scalar& s, const Coef& x) {
    Coef r;
    if (s.is_zero()) return r;
    r.c = s * x.c;
    for (auto& [p, v] : x.lin) r.lin.emplace(p, s * v);
    return r;
}

void ParamForm::add(Monomial m, Coef c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool ParamForm::has_params() const {
    for (auto& [m, c] : terms)
        if (!c.is_constant()) return true;
    return false;
}

Form ParamForm::eval(const Sample& s) const {
    Form f;
    for (auto& [m, c] : terms) f.add(m, c.eval(s));
    return f;
}

Form ParamForm::constant_form() const {
    if (has_params()) throw Error("form has free parameters");
    Form f;
    for (auto& [m, c] : terms) f.add(m, c.c);
    return f;
}

ParamForm& ParamForm::operator+=(const ParamForm& o) {
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // multi-byte UTF-8 token (½, ×)
    bool consume_seq(const char* seq) {
        skip_ws();
        size_t len = std::char_traits<char>::length(seq);
        if (s.compare(pos, len, seq) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("syntax error at position " + std::to_string(pos) + ": " + msg +
                    " in '" + s + "'");
    }
    bool consume_times() { return consume('*') || consume_seq("\xc3\x97"); }

    long integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return v;
    }
    Rational rational_lit() {
        long num = integer();
        if (consume('/')) return rational(num, integer());
        return Rational(num);
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Monomial parse_monomial(Cursor& cur, int n) {
    // 'e' consumed by caller
    cur.skip_ws();
    size_t start = cur.pos;
    long first = cur.integer();
    std::vector<int> idx;
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '.') {
        idx.push_back(static_cast<int>(first));
        while (cur.pos < cur.s.size() && cur.s[cur.pos] == '.') {
            ++cur.pos;
            idx.push_back(static_cast<int>(cur.integer()));
        }
    } else if (n <= 9) {
        // compact digit-string spelling: e123 = e1∧e2∧e3
        for (size_t p = start; p < cur.pos; ++p) idx.push_back(cur.s[p] - '0');
    } else {
        idx.push_back(static_cast<int>(first));
    }
    for (int i : idx)
        if (i < 1 || i > n) cur.fail("index " + std::to_string(i) + " out of range 1.." +
                                     std::to_string(n));
    try {
        return Monomial::of(idx);
    } catch (const Error& e) {
        cur.fail(e.what());
    }
}

struct Term {
    Coef coef;
    Monomial mono;
};

Term parse_term(Cursor& cur, int n, const std::vector<std::string>& params) {
    Scalar scal(1);
    std::optional<std::string> param;
    std::optional<Monomial> mono;
    bool first = true;
    while (true) {
        if (!first && !cur.consume_times()) break;
        cur.skip_ws();
        if (cur.pos >= cur.s.size()) cur.fail("expected factor");
        char c = cur.s[cur.pos];
        if (cur.consume_seq("\xc2\xbd")) {  // ½
            scal *= Scalar(rational(1, 2));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            scal *= Scalar(cur.rational_lit());
        } else if (c == 'e' && cur.pos + 1 < cur.s.size() &&
                   std::isdigit(static_cast<unsigned char>(cur.s[cur.pos + 1]))) {
            ++cur.pos;
            mono = parse_monomial(cur, n);
            break;  // monomial ends the term
        } else if (ident_start(c)) {
            size_t p = cur.pos;
            std::string name;
            while (p < cur.s.size() && ident_char(cur.s[p])) name += cur.s[p++];
            cur.pos = p;
            if (name == "i") {
                scal *= Scalar::i();
            } else if (std::find(params.begin(), params.end(), name) != params.end()) {
                if (param) cur.fail("nonlinear parameter coefficient");
                param = name;
            } else {
                cur.fail("unknown symbol '" + name + "'");
            }
        } else {
            cur.fail("expected factor");
        }
        first = false;
    }
    Term t;
    t.mono = mono.value_or(Monomial{});
    if (param) {
        t.coef.lin.emplace(*param, scal);
    } else {
        t.coef = Coef(scal);
    }
    return t;
}

ParamForm parse_expr(Cursor& cur, int n, const std::vector<std::string>& params) {
    ParamForm f;
    bool neg = false;
    if (cur.consume('-'))
        neg = true;
    else
        cur.consume('+');
    while (true) {
        if (cur.peek() == '0') {
            ++cur.pos;  // explicit zero term
        } else {
            Term t = parse_term(cur, n, params);
            f.add(t.mono, neg ? -t.coef : t.coef);
        }
        if (cur.consume('-'))
            neg = true;
        else if (cur.consume('+'))
            neg = false;
        else
            break;
    }
    if (!cur.eof()) cur.fail("trailing input");
    return f;
}

Form parse_salamon(Cursor& cur, int n) {
    Form f;
    if (cur.peek() == '0') {
        ++cur.pos;
        if (!cur.eof()) cur.fail("trailing input after 0 entry");
        return f;
    }
    bool neg = false;
    if (cur.consume('-'))
        neg = true;
    else
        cur.consume('+');
    while (true) {
        Scalar coef(1);
        cur.skip_ws();
        size_t digits_start = cur.pos;
        if (cur.consume_seq("\xc2\xbd")) {
            coef = Scalar(rational(1, 2));
            if (!cur.consume_times()) cur.fail("expected × after coefficient");
            digits_start = cur.pos;
        } else if (cur.peek() == 'i') {
            ++cur.pos;
            coef = Scalar::i();
            if (!cur.consume_times()) cur.fail("expected × after coefficient");
            digits_start = cur.pos;
        } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            cur.skip_ws();
            digits_start = cur.pos;
            Rational r = cur.rational_lit();
            if (cur.consume_times()) {
                coef = Scalar(r);
                digits_start = cur.pos;
            } else {
                // the digits were the pair itself
                cur.pos = digits_start;
            }
        }
        cur.skip_ws();
        size_t p = cur.pos;
        if (p + 1 >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[p])) ||
            !std::isdigit(static_cast<unsigned char>(cur.s[p + 1])))
            cur.fail("expected two-digit index pair");
        int i = cur.s[p] - '0', j = cur.s[p + 1] - '0';
        cur.pos = p + 2;
        if (i < 1 || i > n || j < 1 || j > n)
            cur.fail("pair index out of range 1.." + std::to_string(n));
        if (i == j) cur.fail("duplicate index in pair");
        if (neg) coef = -coef;
        f += wedge(Form(Monomial::of({i}), coef), Form(Monomial::of({j}), Scalar(1)));
        if (cur.consume('-'))
            neg = true;
        else if (cur.consume('+'))
            neg = false;
        else
            break;
    }
    if (!cur.eof()) cur.fail("trailing input");
    return f;
}

std::vector<std::string> split_top_commas(const std::string& body) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ParamForm parse_form_expr(const std::string& text, int n,
                          const std::vector<std::string>& params) {
    Cursor cur{text};
    return parse_expr(cur, n, params);
}

Form parse_salamon_entry(const std::string& text, int n) {
    Cursor cur{text};
    return parse_salamon(cur, n);
}

ParamForm parse_form_any(const std::string& text, int n,
                         const std::vector<std::string>& params) {
    // long form iff a monomial spelling 'e<digit>' occurs
    for (size_t i = 0; i + 1 < text.size(); ++i)
        if (text[i] == 'e' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
            return parse_form_expr(text, n, params);
    ParamForm f;
    for (auto& [m, c] : parse_salamon_entry(text, n).terms) f.add(m, Coef(c));
    return f;
}

LieAlgebraPresentation parse_structure(const std::string& text, int n) {
    if (n < 1) throw Error("dimension must be at least 1");
    LieAlgebraPresentation p;
    p.n = n;
    p.d_of_generator.resize(n);

    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error("empty structure text");
    if (text[first] == '(') {
        size_t close = text.rfind(')');
        if (close == std::string::npos || close < first) throw Error("unbalanced parentheses");
        auto entries = split_top_commas(text.substr(first + 1, close - first - 1));
        if (static_cast<int>(entries.size()) != n)
            throw Error("expected " + std::to_string(n) + " entries, got " +
                        std::to_string(entries.size()));
        for (int k = 0; k < n; ++k)
            for (auto& [m, c] : parse_salamon_entry(entries[k], n).terms)
                p.d_of_generator[k].add(m, Coef(c));
        return p;
    }

    // long form: one `d e<k> = expr` per line
    std::istringstream in(text);
    std::string line;
    std::vector<bool> seen(n, false);
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Cursor cur{line};
        if (!cur.consume('d')) cur.fail("expected 'd e<k> = ...'");
        if (!cur.consume('e')) cur.fail("expected generator 'e<k>'");
        long k = cur.integer();
        if (k < 1 || k > n) cur.fail("generator index out of range");
        if (seen[k - 1]) cur.fail("duplicate differential for e" + std::to_string(k));
        seen[k - 1] = true;
        if (!cur.consume('=')) cur.fail("expected '='");
        std::string rest = line.substr(cur.pos);
        p.d_of_generator[k - 1] = parse_form_expr(rest, n, {});
    }
    return p;
}

std::string Coef::str() const {
    // not used for printing terms; see print_param_form
    std::string s = c.str();
    for (auto& [p, v] : lin) s += "+" + v.str() + "*" + p;
    return s;
}

namespace {
// one printed summand: sign, rational magnitude, optional i, optional param, monomial
void emit_term(std::string& out, const Rational& r, bool imag, const std::string& param,
               Monomial m) {
    if (r == 0) return;
    Rational mag = r < 0 ? Rational(-r) : r;
    bool neg = r < 0;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::vector<std::string> factors;
    if (mag != 1) factors.push_back(rational_str(mag));
    if (imag) factors.push_back("i");
    if (!param.empty()) factors.push_back(param);
    if (m.bits != 0) factors.push_back(m.str());
    if (factors.empty()) factors.push_back("1");
    for (size_t t = 0; t < factors.size(); ++t) {
        if (t) out += "*";
        out += factors[t];
    }
}
}  // namespace

std::string print_param_form(const ParamForm& f) {
    std::string out;
    for (auto& [m, c] : f.terms) {
        emit_term(out, c.c.re, false, "", m);
        emit_term(out, c.c.im, true, "", m);
        for (auto& [p, v] : c.lin) {
            emit_term(out, v.re, false, p, m);
            emit_term(out, v.im, true, p, m);
        }
    }
    return out.empty() ? "0" : out;
}

std::string print_structure(const LieAlgebraPresentation& p) {
    std::string out;
    for (int k = 1; k <= p.n; ++k)
        out += "d e" + std::to_string(k) + " = " + print_param_form(p.d_of_generator[k - 1]) +
               "\n";
    return out;
}

bool LieAlgebraPresentation::has_params() const {
    for (auto& f : d_of_generator)
        if (f.has_params()) return true;
    return false;
}

std::string LieAlgebraPresentation::field_tag() const {
    for (auto& f : d_of_generator)
        for (auto& [m, c] : f.terms) {
            if (!c.c.is_real()) return "gaussian";
            for (auto& [p, v] : c.lin)
                if (!v.is_real()) return "gaussian";
        }
    return "rational";
}

StructureEquations LieAlgebraPresentation::instantiate(const Sample& s) const {
    StructureEquations eq;
    eq.name = name;
    eq.n = n;
    eq.d.reserve(n);
    for (auto& f : d_of_generator) eq.d.push_back(f.eval(s));
    return eq;
}

StructureEquations LieAlgebraPresentation::instantiate() const {
    if (has_params()) throw Error("presentation has free parameters; supply a sample");
    return instantiate(Sample{});
}

Form ce_apply(const StructureEquations& eq, const Form& a) {
    Form out;
    for (auto& [m, c] : a.terms) {
        // Leibniz over the sorted factors: d(e_i ∧ rest) = d e_i ∧ rest − e_i ∧ d(rest)
        auto idx = m.indices();
        Form acc;  // d of the processed suffix
        for (int t = static_cast<int>(idx.size()) - 1; t >= 0; --t) {
            int i = idx[t];
            std::uint64_t suffix = 0;
            for (size_t u = t + 1; u < idx.size(); ++u)
                suffix |= std::uint64_t(1) << (idx[u] - 1);
            Form e_i(Monomial::of({i}), Scalar(1));
            Form term = wedge(eq.d[i - 1], Form(Monomial{suffix}, Scalar(1)));
            term -= wedge(e_i, acc);
            acc = std::move(term);
        }
        out += c * acc;
    }
    return out;
}

GradedOp ce_differential(const StructureEquations& eq, const ExteriorBasis& basis) {
    return graded_operator(basis, +1,
                           [&](Monomial m) { return ce_apply(eq, Form(m, Scalar(1))); });
}

std::optional<std::string> validate_presentation(const StructureEquations& eq) {
    for (int k = 1; k <= eq.n; ++k) {
        auto deg = eq.d[k - 1].homogeneous_degree();
        if (!eq.d[k - 1].is_zero() && deg != 2)
            return "d e" + std::to_string(k) + " is not a degree-2 form";
        Form res = ce_apply(eq, eq.d[k - 1]);
        if (!res.is_zero())
            return "d² ≠ 0 at generator e" + std::to_string(k) + ": residue " + res.str();
    }
    return std::nullopt;
}

}  // namespace symplex
