#include "symplex/form.hpp"

#include <algorithm>

namespace symplex {

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b;) {
        int j = std::countr_zero(b);
        out.push_back(j + 1);
        b &= b - 1;
    }
    return out;
}

Monomial Monomial::of(const std::vector<int>& idx) {
    Monomial m;
    for (int i : idx) {
        if (i < 1 || i > 64) throw Error("index " + std::to_string(i) + " out of range 1..64");
        std::uint64_t bit = std::uint64_t(1) << (i - 1);
        if (m.bits & bit) throw Error("duplicate index " + std::to_string(i) + " in monomial");
        m.bits |= bit;
    }
    return m;
}

std::string Monomial::str() const {
    if (bits == 0) return "1";
    auto idx = indices();
    bool wide = idx.back() > 9;
    std::string s = "e";
    for (size_t t = 0; t < idx.size(); ++t) {
        if (wide && t) s += '.';
        s += std::to_string(idx[t]);
    }
    return s;
}

bool monomial_less(Monomial a, Monomial b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // same popcount: lex order on sorted index lists = numeric order on bitmasks
    // read LSB-first... not quite; compare index lists directly
    std::uint64_t x = a.bits, y = b.bits;
    while (x && y) {
        int ia = std::countr_zero(x), ib = std::countr_zero(y);
        if (ia != ib) return ia < ib;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

int wedge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inv = 0;
    for (std::uint64_t y = b; y;) {
        int j = std::countr_zero(y);
        inv += std::popcount(a >> (j + 1));
        y &= y - 1;
    }
    return inv % 2 ? -1 : 1;
}

std::optional<int> Form::homogeneous_degree() const {
    if (terms.empty()) return 0;
    int d = terms.begin()->first.degree();
    for (auto& [m, c] : terms)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Scalar Form::coeff(Monomial m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Scalar() : it->second;
}

void Form::add(Monomial m, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Form Form::operator-() const {
    Form r;
    for (auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

Form& Form::operator+=(const Form& o) {
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

Form operator*(const Scalar& c, const Form& f) {
    Form r;
    if (c.is_zero()) return r;
    for (auto& [m, x] : f.terms) r.terms.emplace(m, c * x);
    return r;
}

Form Form::component(int degree) const {
    Form r;
    for (auto& [m, c] : terms)
        if (m.degree() == degree) r.terms.emplace(m, c);
    return r;
}

std::string Form::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms) {
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs.erase(0, 1);
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = (cs == "1");
        bool simple = c.is_real() || c == Scalar::i() || c == -Scalar::i();
        if (m.bits == 0) {
            s += neg && unit ? "1" : cs;
        } else {
            if (!unit) s += (simple ? cs : "(" + cs + ")") + "*";
            s += m.str();
        }
    }
    return s;
}

Form wedge(const Form& a, const Form& b) {
    Form r;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            int s = wedge_sign(ma.bits, mb.bits);
            if (!s) continue;
            Scalar c = ca * cb;
            if (s < 0) c = -c;
            r.add(Monomial{ma.bits | mb.bits}, std::move(c));
        }
    return r;
}

Form wedge_pow(const Form& a, int k) {
    Form r(Monomial{}, Scalar(1));
    for (int t = 0; t < k; ++t) r = wedge(r, a);
    return r;
}

void Bivector::add(int i, int j, Scalar c) {
    if (i == j) throw Error("bivector pair with equal indices");
    if (i > j) {
        std::swap(i, j);
        c = -c;
    }
    auto it = terms.find({i, j});
    if (it == terms.end()) {
        terms.emplace(std::make_pair(i, j), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {
// ι_{X_i}: remove index i, sign (-1)^{position of i}
bool contract_one(Monomial m, int i, Monomial& out, int& sign) {
    if (!m.contains(i)) return false;
    std::uint64_t below = m.bits & ((std::uint64_t(1) << (i - 1)) - 1);
    sign = std::popcount(below) % 2 ? -1 : 1;
    out = Monomial{m.bits & ~(std::uint64_t(1) << (i - 1))};
    return true;
}
}  // namespace

Form interior_product(const Bivector& b, const Form& a) {
    Form r;
    for (auto& [pair, cb] : b.terms) {
        auto [i, j] = pair;
        for (auto& [m, ca] : a.terms) {
            Monomial m1, m2;
            int s1, s2;
            if (!contract_one(m, i, m1, s1)) continue;
            if (!contract_one(m1, j, m2, s2)) continue;
            Scalar c = cb * ca;
            if (s1 * s2 < 0) c = -c;
            r.add(m2, std::move(c));
        }
    }
    return r;
}

ExteriorBasis::ExteriorBasis(int n_) : n(n_) {
    if (n < 0 || n > 64) throw Error("dimension out of range 0..64");
    by_degree.resize(n + 1);
    pos.resize(n + 1);
    // enumerate k-combinations of {1..n} in lex order
    for (int k = 0; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i + 1;
        while (true) {
            Monomial m = Monomial::of(comb);
            pos[k][m.bits] = static_cast<int>(by_degree[k].size());
            by_degree[k].push_back(m);
            int i = k - 1;
            while (i >= 0 && comb[i] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
        }
    }
}

int ExteriorBasis::index_of(int k, Monomial m) const {
    auto it = pos[k].find(m.bits);
    if (it == pos[k].end()) throw Error("monomial not in basis of degree " + std::to_string(k));
    return it->second;
}

}  // namespace symplex
