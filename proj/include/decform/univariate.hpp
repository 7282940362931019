#pragma once

// Dense integer univariate polynomials (ascending coefficients) with the
// exact operations the factorization and counting layers need: content,
// gcd, Yun squarefree decomposition, exact division and resultants.

#include <optional>
#include <utility>
#include <vector>

#include "decform/numeric.hpp"

namespace decform {

// coefficient vector c[0] + c[1] t + ... ; normalized = no trailing zeros
using UniPoly = std::vector<Int>;

void uni_normalize(UniPoly& p);
int uni_degree(const UniPoly& p);  // -1 for the zero polynomial
Int uni_eval(const UniPoly& p, const Int& x);
// exact evaluation at a rational a/b scaled by b^deg: returns p(a/b) * b^deg
Int uni_eval_scaled(const UniPoly& p, const Int& a, const Int& b);
double uni_eval_double(const UniPoly& p, double x);

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_scale(const UniPoly& p, const Int& c);

Int uni_content(const UniPoly& p);                  // >= 0
UniPoly uni_primitive(const UniPoly& p);            // positive leading coefficient
std::optional<UniPoly> uni_divide_exact(const UniPoly& num, const UniPoly& den);

// primitive gcd (positive leading coefficient) via primitive PRS
UniPoly uni_gcd(UniPoly a, UniPoly b);

// Yun: p = content * prod_i out[i].first ^ out[i].second with the factors
// primitive, squarefree and pairwise coprime
std::vector<std::pair<UniPoly, int>> uni_squarefree(const UniPoly& p);

// Res_t(a, b), exact (Sylvester matrix + Bareiss)
Int uni_resultant(const UniPoly& a, const UniPoly& b);

}  // namespace decform
