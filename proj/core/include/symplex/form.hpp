#pragma once
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplex/scalar.hpp"

namespace symplex {

// Sorted index set {i1 < ... < ip} ⊂ {1..64}, stored as a bitmask (bit j-1 = index j).
struct Monomial {
    std::uint64_t bits = 0;

    int degree() const { return std::popcount(bits); }
    bool contains(int idx) const { return bits >> (idx - 1) & 1; }
    std::vector<int> indices() const;
    static Monomial of(const std::vector<int>& idx);  // throws on duplicates / out of range

    // "e134", or "e1.3.10" once an index exceeds 9; "1" for the empty monomial
    std::string str() const;

    friend bool operator==(Monomial a, Monomial b) { return a.bits == b.bits; }
};

// degree-major, then lexicographic on the index lists (NOT numeric bitmask order)
bool monomial_less(Monomial a, Monomial b);
struct MonomialLess {
    bool operator()(Monomial a, Monomial b) const { return monomial_less(a, b); }
};

// Sign of sorting the concatenation a,b; 0 if they overlap.
int wedge_sign(std::uint64_t a, std::uint64_t b);

struct Form {
    std::map<Monomial, Scalar, MonomialLess> terms;

    Form() = default;
    Form(Monomial m, Scalar c) { add(m, std::move(c)); }

    bool is_zero() const { return terms.empty(); }
    // degree if homogeneous (0 for the zero form), nullopt if mixed
    std::optional<int> homogeneous_degree() const;
    Scalar coeff(Monomial m) const;
    void add(Monomial m, Scalar c);  // accumulates, drops zeros

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& c, const Form& f);
    friend bool operator==(const Form& a, const Form& b) { return a.terms == b.terms; }

    Form component(int degree) const;
    std::string str() const;
};

Form wedge(const Form& a, const Form& b);
Form wedge_pow(const Form& a, int k);

// Degree-2 element of the dual algebra: Σ_{i<j} c_{ij} X_i∧X_j.
struct Bivector {
    std::map<std::pair<int, int>, Scalar> terms;  // keys (i,j) with i<j
    void add(int i, int j, Scalar c);
};

// ι_{X_i∧X_j} := ι_{X_j}∘ι_{X_i}, extended linearly over the bivector.
Form interior_product(const Bivector& b, const Form& a);

// Monomial bases of ∧•K^n, per degree, in the canonical lexicographic order.
struct ExteriorBasis {
    int n;
    std::vector<std::vector<Monomial>> by_degree;  // [k][i]
    std::vector<std::map<std::uint64_t, int>> pos;

    explicit ExteriorBasis(int n);
    int dim(int k) const {
        return (k < 0 || k > n) ? 0 : static_cast<int>(by_degree[k].size());
    }
    int index_of(int k, Monomial m) const;
};

}  // namespace symplex
