#pragma once
#include <vector>

#include "slnchar/laurent.hpp"
#include "slnchar/partition.hpp"
#include "slnchar/springer.hpp"

namespace slnchar::green {

// coefficients in t, index = degree, trailing zeros trimmed
using IntPolynomial = std::vector<long long>;

IntPolynomial trim(IntPolynomial p);
long long poly_eval(const IntPolynomial& p, long long t);

// Kostka–Foulkes K_{λμ}(t) via the charge statistic (cached)
IntPolynomial kostka(const Partition& lambda, const Partition& mu);
// semistandard tableaux of shape λ and content μ, as rows
std::vector<std::vector<std::vector<int>>> ssyt(const Partition& lambda, const Partition& mu);
int charge(const std::vector<int>& word);

// K_{λ/d, μ/d}(t) where supp ι′ = O_λ, supp ι″ = O_μ; 0 when not comparable
IntPolynomial p_polynomial(const springer::PairLabel& iota2, const springer::PairLabel& iota1,
                           const springer::Block& b);
// BP_{ι″,ι′}(t) = t^{(dim O_λ − dim O_μ)/2} K(t⁻¹)
IntPolynomial bp_polynomial(const springer::PairLabel& iota2, const springer::PairLabel& iota1,
                            const springer::Block& b);

// |Z⁰_{L_w}^F| for w of cycle type ρ ⊢ n/d, as a polynomial in u (q = u²)
CycLaurent torus_order(const Partition& rho);
CycLaurent group_order(int n);

CycLaurent omega(const springer::PairLabel& a, const springer::PairLabel& b, const springer::Block& blk);
LaurentFraction x_inner(const springer::PairLabel& a, const springer::PairLabel& b, const springer::Block& blk);

}  // namespace slnchar::green
