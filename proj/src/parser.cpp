#include "decform/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace decform {

namespace {

// polynomial over an open variable set, keyed by variable name
using VarPoly = std::map<std::map<std::string, int>, Int>;

VarPoly vp_const(const Int& c) {
    VarPoly p;
    if (c != 0) p.emplace(std::map<std::string, int>{}, c);
    return p;
}

VarPoly vp_var(const std::string& name) {
    VarPoly p;
    p.emplace(std::map<std::string, int>{{name, 1}}, Int(1));
    return p;
}

void vp_strip(VarPoly& p) {
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
}

VarPoly vp_add(const VarPoly& a, const VarPoly& b, int bsign) {
    VarPoly out = a;
    for (const auto& [m, c] : b) out[m] += bsign * c;
    vp_strip(out);
    return out;
}

VarPoly vp_mul(const VarPoly& a, const VarPoly& b) {
    VarPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            out[m] += ca * cb;
        }
    vp_strip(out);
    return out;
}

VarPoly vp_pow(VarPoly base, long e) {
    VarPoly acc = vp_const(1);
    while (e > 0) {
        if (e & 1) acc = vp_mul(acc, base);
        e >>= 1;
        if (e) base = vp_mul(base, base);
    }
    return acc;
}

class ExprParser {
public:
    ExprParser(const std::string& text, const std::set<std::string>* allowed)
        : s_(text), allowed_(allowed) {}

    VarPoly parse() {
        VarPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    const std::set<std::string>* allowed_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    VarPoly parse_expr() {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            sign = (c == '-') ? -1 : 1;
        }
        VarPoly acc = vp_mul(vp_const(sign), parse_term());
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            acc = vp_add(acc, parse_term(), c == '-' ? -1 : 1);
        }
        return acc;
    }

    VarPoly parse_term() {
        VarPoly acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = vp_mul(acc, parse_factor());
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                throw parse_error("implicit multiplication is not allowed; use '*'", pos_);
            } else {
                break;
            }
        }
        return acc;
    }

    VarPoly parse_factor() {
        VarPoly base = parse_base();
        if (peek() == '^') {
            ++pos_;
            long e = parse_nat();
            return vp_pow(std::move(base), e);
        }
        return base;
    }

    long parse_nat() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected a non-negative integer exponent", pos_);
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 6) throw parse_error("exponent too large", start);
        return std::stol(digits);
    }

    VarPoly parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return vp_const(Int(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (allowed_ && !allowed_->count(name))
                throw parse_error("unknown variable '" + name + "'", start);
            return vp_var(name);
        }
        if (c == '(') {
            ++pos_;
            VarPoly inner = parse_expr();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

std::string monomial_to_string(const Exponents& exp, const std::vector<std::string>& vars) {
    std::string out;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out;
}

}  // namespace

std::vector<std::string> default_variables(int n) {
    if (n == 2) return {"x", "y"};
    if (n == 3) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Form parse_form(const FormSource& src) {
    std::vector<std::string> vars = src.variables;
    std::set<std::string> allowed(vars.begin(), vars.end());
    VarPoly poly = ExprParser(src.text, vars.empty() ? nullptr : &allowed).parse();

    if (vars.empty()) {
        // infer the ambient variable list from the identifiers used
        std::set<std::string> used;
        for (const auto& [m, c] : poly)
            for (const auto& [v, e] : m) used.insert(v);
        if (used.empty()) throw argument_error("expression uses no variables");
        auto subset_of = [&](std::initializer_list<const char*> names) {
            for (const auto& u : used)
                if (std::find_if(names.begin(), names.end(),
                                 [&](const char* n) { return u == n; }) == names.end())
                    return false;
            return true;
        };
        if (subset_of({"x", "y"})) {
            vars = {"x", "y"};
        } else if (subset_of({"x", "y", "z"})) {
            vars = {"x", "y", "z"};
        } else {
            int maxi = 0;
            for (const auto& u : used) {
                if (u.size() < 2 || u[0] != 'x') throw argument_error(
                        "cannot infer variable list from '" + u + "'; pass --vars");
                for (size_t i = 1; i < u.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(u[i])))
                        throw argument_error("cannot infer variable list from '" + u +
                                             "'; pass --vars");
                maxi = std::max(maxi, std::stoi(u.substr(1)));
            }
            maxi = std::max(maxi, 2);
            vars = default_variables(maxi);
        }
    }

    std::map<std::string, int> index;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (index.count(vars[i])) throw argument_error("duplicate variable name " + vars[i]);
        index[vars[i]] = static_cast<int>(i);
    }

    const int n = static_cast<int>(vars.size());
    TermMap terms;
    for (const auto& [m, c] : poly) {
        Exponents e(n, 0);
        for (const auto& [v, ex] : m) {
            auto it = index.find(v);
            if (it == index.end()) throw argument_error("unknown variable '" + v + "'");
            e[it->second] = ex;
        }
        terms[e] += c;
    }
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
    if (terms.empty()) throw argument_error("zero polynomial is not a form");

    // homogeneity check with a readable error naming two offending monomials
    int d = -1;
    const Exponents* first = nullptr;
    for (const auto& [e, c] : terms) {
        int total = 0;
        for (int x : e) total += x;
        if (d < 0) {
            d = total;
            first = &e;
        } else if (total != d) {
            throw homogeneity_error("polynomial is not homogeneous: monomial " +
                                    monomial_to_string(*first, vars) + " has degree " +
                                    std::to_string(d) + " but " + monomial_to_string(e, vars) +
                                    " has degree " + std::to_string(total));
        }
    }
    return Form(n, std::move(terms));
}

Form parse_form(const std::string& text) { return parse_form(FormSource{text, {}}); }

std::string render_form(const Form& f) {
    const auto vars = default_variables(f.vars());
    std::string out;
    bool first = true;
    for (const auto& [exp, coef] : f.terms()) {
        Int a = coef;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        const std::string mono = monomial_to_string(exp, vars);
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

std::vector<Int> parse_univariate(const std::string& text, const std::string& var) {
    std::set<std::string> allowed{var};
    VarPoly poly = ExprParser(text, &allowed).parse();
    std::vector<Int> coeffs;
    for (const auto& [m, c] : poly) {
        int e = m.empty() ? 0 : m.begin()->second;
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, Int(0));
        coeffs[e] += c;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::string render_univariate(const std::vector<Int>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = static_cast<int>(coeffs.size()) - 1; e >= 0; --e) {
        const Int& c = coeffs[e];
        if (c == 0) continue;
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (e > 1) out << "^" << e;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace decform
