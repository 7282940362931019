#include "decform/form.hpp"

#include <cstdio>
#include <sstream>

namespace decform {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Form::Form(int n, TermMap terms) : n_(n) {
    if (n < 2) throw argument_error("Form: need at least 2 variables");
    int d = -1;
    for (auto it = terms.begin(); it != terms.end();) {
        const auto& [exp, coef] = *it;
        if (static_cast<int>(exp.size()) != n)
            throw argument_error("Form: exponent vector length mismatch");
        int total = 0;
        for (int e : exp) {
            if (e < 0) throw argument_error("Form: negative exponent");
            total += e;
        }
        if (coef == 0) {
            it = terms.erase(it);
            continue;
        }
        if (d < 0) d = total;
        else if (total != d)
            throw argument_error("Form: non-homogeneous term set");
        ++it;
    }
    if (terms.empty()) throw argument_error("Form: zero polynomial");
    if (d < 1) throw argument_error("Form: degree must be >= 1");
    d_ = d;
    terms_ = std::move(terms);
}

Int Form::evaluate(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw argument_error("evaluate: point dimension mismatch");
    Int acc = 0;
    for (const auto& [exp, coef] : terms_) {
        Int term = coef;
        for (int i = 0; i < n_; ++i)
            if (exp[i] > 0) term *= int_pow(point[i], exp[i]);
        acc += term;
    }
    return acc;
}

double Form::evaluate_double(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [exp, coef] : terms_) {
        double term = to_double(coef);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < exp[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

Int Form::content() const {
    Int g = 0;
    for (const auto& [exp, coef] : terms_) g = decform::gcd(g, coef);
    return g;
}

std::pair<Int, Form> content_and_primitive(const Form& f) {
    Int c = f.content();
    if (f.leading().second < 0) c = -c;
    TermMap prim;
    for (const auto& [exp, coef] : f.terms()) prim.emplace(exp, Int(coef / c));
    return {c, Form(f.vars(), std::move(prim))};
}

UnimodularMap::UnimodularMap(std::vector<std::vector<Int>> m) : matrix(std::move(m)) {
    const size_t n = matrix.size();
    if (n == 0) throw argument_error("UnimodularMap: empty matrix");
    for (const auto& row : matrix)
        if (row.size() != n) throw argument_error("UnimodularMap: not square");
    Int d = det_exact(matrix);
    if (d != 1 && d != -1) throw argument_error("UnimodularMap: |det| != 1");
}

UnimodularMap UnimodularMap::identity(int n) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return UnimodularMap(std::move(m));
}

std::vector<Int> UnimodularMap::apply(const std::vector<Int>& x) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n) throw argument_error("UnimodularMap: dimension mismatch");
    std::vector<Int> y(n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += matrix[i][j] * x[j];
    return y;
}

UnimodularMap operator*(const UnimodularMap& a, const UnimodularMap& b) {
    const int n = a.dim();
    if (b.dim() != n) throw argument_error("UnimodularMap product: dimension mismatch");
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) m[i][j] += a.matrix[i][k] * b.matrix[k][j];
    return UnimodularMap(std::move(m));
}

Int det_exact(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// multiply two (possibly non-homogeneous) term maps over `n` variables
TermMap mul_terms(const TermMap& a, const TermMap& b, int n) {
    TermMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

TermMap pow_terms(const TermMap& base, int e, int n) {
    TermMap acc;
    acc.emplace(Exponents(n, 0), Int(1));
    TermMap sq = base;
    while (e > 0) {
        if (e & 1) acc = mul_terms(acc, sq, n);
        e >>= 1;
        if (e) sq = mul_terms(sq, sq, n);
    }
    return acc;
}

// substitute x_i -> linear form rows[i] (in n_out variables) and expand
TermMap substitute_linear(const Form& f, const std::vector<std::vector<Int>>& rows, int n_out) {
    TermMap acc;
    std::vector<TermMap> lin(f.vars());
    for (int i = 0; i < f.vars(); ++i) {
        TermMap li;
        for (int j = 0; j < n_out; ++j) {
            if (rows[i][j] == 0) continue;
            Exponents e(n_out, 0);
            e[j] = 1;
            li.emplace(std::move(e), rows[i][j]);
        }
        lin[i] = std::move(li);
    }
    for (const auto& [exp, coef] : f.terms()) {
        TermMap term;
        term.emplace(Exponents(n_out, 0), coef);
        for (int i = 0; i < f.vars(); ++i) {
            if (exp[i] == 0) continue;
            if (lin[i].empty()) { term.clear(); break; }  // x_i -> 0
            term = mul_terms(term, pow_terms(lin[i], exp[i], n_out), n_out);
        }
        for (const auto& [e, c] : term) acc[e] += c;
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace

Form apply_unimodular(const Form& f, const UnimodularMap& t) {
    if (t.dim() != f.vars()) throw argument_error("apply_unimodular: dimension mismatch");
    TermMap out = substitute_linear(f, t.matrix, f.vars());
    return Form(f.vars(), std::move(out));
}

std::optional<Form> restrict_to_basis(const Form& f,
                                      const std::vector<std::vector<Int>>& basis) {
    const int n = f.vars();
    const int k = static_cast<int>(basis.size());
    if (k < 1 || k >= n)
        throw argument_error("restrict_to_basis: subspace dimension must be in [1, n)");
    for (const auto& v : basis)
        if (static_cast<int>(v.size()) != n)
            throw argument_error("restrict_to_basis: basis vector length mismatch");
    // x = sum_j t_j * basis[j]; rows[i][j] = basis[j][i]
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(k, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) rows[i][j] = basis[j][i];
    // restriction can collapse into a univariate in t_1; Form requires n >= 2,
    // so pad 1-dimensional restrictions with an unused second variable
    const int n_out = std::max(k, 2);
    for (auto& r : rows) r.resize(n_out, Int(0));
    TermMap out = substitute_linear(f, rows, n_out);
    if (out.empty()) return std::nullopt;
    return Form(n_out, std::move(out));
}

Form make_form(int n, const std::vector<std::pair<Exponents, Int>>& terms) {
    TermMap m;
    for (const auto& [e, c] : terms) m[e] += c;
    return Form(n, std::move(m));
}

}  // namespace decform
