#pragma once

#include <array>

#include "hhq/hochschild.hpp"

namespace hhq {

/// Position-shift lifting Q^{k+4} -> Q^k of the degree-4 generator classes
/// (T = 0 only): a^{k+4}_{r,s} -> a^k_{r,s-j} when 0 <= s-j <= k, identity
/// tensor coefficient, zero otherwise.
BimoduleMap shift_lifting(const Algebra& A, int j, int k);

/// The degree-4 generator class z_j = sum_i (x-kind, level 0) at position j.
Cochain degree4_generator(const Algebra& A, int j);

/// The degree-4w cocycle sending a^{4w}_{r,s} to e_r iff s == target.
Cochain product_formula(const Algebra& A, int w, int target);

/// Comparison lifting f_k : Q^{d+k} -> Q^k of a degree-d cocycle c, with
/// mult o f_0 = c and d^{k+1} o f_{k+1} = f_k o d^{d+k+1}.
struct LiftingChain {
    int base_degree = 0;
    std::vector<BimoduleMap> maps;
};

/// Solves the lifting systems degree by degree (any solution is acceptable:
/// products are well-defined up to coboundary). Throws std::invalid_argument
/// if c is not a cocycle, std::runtime_error if a system has no solution.
LiftingChain lift_cocycle(const Algebra& A, const Cochain& c, int steps);

/// c1 o f_m with f_m the m-th lifting map of the right factor, m = deg c1.
Cochain yoneda_product(const Algebra& A, const Cochain& c1, const LiftingChain& chain2);

/// Checks mult o sigma^0_j = z_j and sigma^l_j o d^{l+5} = d^{l+1} o sigma^{l+1}_j
/// for 0 <= j <= 4 and l <= cap.
CheckReport verify_shift_liftings(const Algebra& A, int cap);

/// z_a z_b - z_c z_d with a+b = c+d; the six defining relations.
struct RingPresentation {
    int generators = 5;
    std::vector<std::array<int, 4>> relations;
};
RingPresentation ring_presentation();

/// Dimension of the degree-w component of K[z_0..z_4]/(relations), computed
/// as the number of monomial classes under the relation identifications.
std::vector<long long> presentation_hilbert(int w_max);

/// Exhaustive product verification in degrees <= 4*w_max: every word equals
/// the closed product formula at its digit sum, the six relations vanish
/// identically, distinct products per degree number 4w+1 = dim HH^{4w}, the
/// presentation Hilbert function matches, and no product vanishes.
CheckReport verify_ring_presentation(const Algebra& A, CochainComplex& cx, int w_max);

/// Squares of the degree-1 and degree-2 cohomology basis classes are
/// coboundaries (identically zero where the coboundary space vanishes),
/// via the generic lifting solver; the unit class stays non-nilpotent.
CheckReport verify_nilpotent_part(const Algebra& A, CochainComplex& cx);

}  // namespace hhq
