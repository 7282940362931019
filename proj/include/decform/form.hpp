#pragma once

// Exact representation of homogeneous integer-coefficient forms in n
// variables, with evaluation, content extraction, unimodular changes of
// variables and restriction to rational subspaces. All coefficient
// arithmetic is exact (GMP); values are immutable after construction.

#include <map>
#include <optional>
#include <vector>

#include "decform/numeric.hpp"

namespace decform {

// exponent vector of one monomial; length n, entries >= 0
using Exponents = std::vector<int>;

// Graded-lex with x1 < x2 < ... < xn, leading monomial first.
// Within equal total degree: larger power of x1 wins, then x2, ...
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors
    }
};

using TermMap = std::map<Exponents, Int, GrlexDesc>;

class Form {
public:
    // Validates homogeneity, strips zero coefficients, rejects the zero
    // polynomial and non-positive dimensions/degrees.
    Form(int n, TermMap terms);

    int vars() const { return n_; }
    int degree() const { return d_; }
    const TermMap& terms() const { return terms_; }

    // leading term in graded-lex order
    const std::pair<const Exponents, Int>& leading() const { return *terms_.begin(); }

    Int coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int evaluate(const std::vector<Int>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    // gcd of all coefficients (always positive)
    Int content() const;

    bool operator==(const Form& o) const {
        return n_ == o.n_ && d_ == o.d_ && terms_ == o.terms_;
    }
    bool operator!=(const Form& o) const { return !(*this == o); }

private:
    int n_;
    int d_;
    TermMap terms_;
};

struct UnimodularMap {
    // row-major n x n integer matrix with |det| = 1
    std::vector<std::vector<Int>> matrix;

    explicit UnimodularMap(std::vector<std::vector<Int>> m);
    static UnimodularMap identity(int n);

    int dim() const { return static_cast<int>(matrix.size()); }
    std::vector<Int> apply(const std::vector<Int>& x) const;
};

UnimodularMap operator*(const UnimodularMap& a, const UnimodularMap& b);

struct IntegerPoint {
    std::vector<Int> coords;
};

// C0 with F = C0 * Fprim, |C0| = content, Fprim primitive with positive
// leading coefficient in graded-lex order.
std::pair<Int, Form> content_and_primitive(const Form& f);

// F o T, expanded exactly. Throws argument_error unless |det T| = 1.
Form apply_unimodular(const Form& f, const UnimodularMap& t);

// F restricted to the subspace spanned by `basis` (k independent integer
// vectors, 1 <= k < n), as a form in k variables; nullopt when the
// restriction is identically zero.
std::optional<Form> restrict_to_basis(const Form& f, const std::vector<std::vector<Int>>& basis);

// exact determinant of a square integer matrix (Bareiss)
Int det_exact(std::vector<std::vector<Int>> m);

// convenience constructors used throughout the tests
Form make_form(int n, const std::vector<std::pair<Exponents, Int>>& terms);

}  // namespace decform
