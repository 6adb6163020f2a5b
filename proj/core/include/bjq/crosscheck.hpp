#pragma once

#include <utility>
#include <vector>

#include "bjq/grid.hpp"
#include "bjq/operators.hpp"

namespace bjq::crosscheck {

/// Independent verification routes used by the test suites. Nothing here is
/// needed for normal use of the library; the implementations deliberately
/// avoid the production code paths they are meant to check.

/// A product of single-variable letters, left to right. Letters are
/// ('q'|'p', index) with 1-based index.
using Word = std::vector<std::pair<char, int>>;

/// Normal-order a word by literally rewriting adjacent ph_i*qh_i into
/// qh_i*ph_i - i*hbar until standard order is reached (letters of distinct
/// index commute freely). Exponential-time but exact; independent of the
/// closed-form reordering inside op_mul.
OperatorPoly normal_order_word(int dof, const Word& word, const HBarPolynomial& coeff);

/// Equal-weight average of all distinct letter orderings of q^r p^s for one
/// degree of freedom, normal-ordered by the word rewriter.
OperatorPoly all_orderings_average(int r, int s);

/// p-split counterpart of the quantizer's q-split monomial formula:
/// (1/(s+1)) sum_{j=0..s} ph^j qh^r ph^(s-j).
OperatorPoly bj_p_split(int r, int s);

/// Born-Jordan Fourier operator assembled in the momentum basis
/// (entries sinc * e^{i l_s (p_r + hbar k_m / 2)} on the shifted momentum
/// diagonal) and conjugated back to the position basis by the discrete
/// Fourier transform.
GridOperator bj_fourier_momentum_route(const GridSpec& spec, int m, int s);

/// All window pairs whose Born-Jordan Fourier operator is numerically zero,
/// found by scanning every matrix.
std::vector<std::pair<int, int>> nullspace_brute_scan(const GridSpec& spec, double tol);

}  // namespace bjq::crosscheck
