#pragma once
#include <random>
#include <string>
#include <vector>

#include "floer/exact_linalg.hpp"

// Exact-arithmetic audit of the intersection-form argument behind the
// e(F)/2 - 2d bound: the form Q_Wbar of the (-1)-framed handle attachment, the
// capped surface class and its self-intersection m = e(F) + 1, the
// characteristic vector PD(c1(s_t)), the circle-bundle d_b value, and the
// inequality chain (1)-(5). Every identity the argument uses is recomputed by
// two routes and compared exactly.
namespace floer::lattice {

using exact::Int;
using exact::Rational;

// basis gamma0..gamman, alpha, beta; matrix (n+3)x(n+3)
struct QuadraticForm {
    std::vector<std::vector<long long>> matrix;
    std::vector<std::string> labels;

    long long evaluate(const std::vector<long long>& v) const;                 // v.v
    long long pair(const std::vector<long long>& v,
                   const std::vector<long long>& w) const;                     // v.w
};

// diag(-1 x (n+1)) + hyperbolic [[0,1],[1,0]] on (alpha, beta)
QuadraticForm q_wbar(unsigned n);

struct SpincParameters {
    unsigned n = 0;             // number of CP2-bar summands
    unsigned j = 0;             // 0 <= j <= n: split of the gamma coefficients
    std::vector<long long> a;   // a_1..a_n
    long long b = 0;
    unsigned g = 0;             // genus of the capped surface, (beta_1(F)-1)/2
};

// throws std::invalid_argument unless j <= n and |a| = n
void check_params(const SpincParameters& p);

// class of the capped surface Sigma:
//   gamma0 + sum_{i<=j} 2a_i gamma_i + sum_{i>j} (2a_i+1) gamma_i + 2 alpha + b beta
std::vector<long long> class_vector(const SpincParameters& p);
// PD(c1(s_t)) = eps gamma0 + sum_i (2a_i+1) gamma_i + 2 alpha + 2x beta
std::vector<long long> c1_vector(const SpincParameters& p);

// e(F') = -sum_{i<=j} 4a_i^2 - sum_{i>j} (2a_i+1)^2 + 4b; cross-checked
// against the form evaluation of the class with the gamma0 coefficient dropped
long long euler_from_class(const SpincParameters& p);

// m = [Sigma].[Sigma] = -1 + e(F'); cross-checked against the form; the
// surface F before the resolving move has e(F) = m - 1
long long self_intersection_m(const SpincParameters& p);

struct Epsilon {
    int epsilon = 0; // +-1
    long long x = 0;
};
// x = (sum_{i<=j} 2a_i + 2(b-g) - 1 + eps) / 4, eps in {+1,-1} the unique
// choice making x integral; throws InternalConsistencyError if not exactly one
Epsilon choose_epsilon(const SpincParameters& p);

// c1(s_t)^2 by form evaluation, asserted equal to the closed form
// e(F) - j - 1 + 2 eps - 4g; requires m > 0
long long c1_squared(const SpincParameters& p);

// d_b(Y_{g,-m}) = 1/4 - g^2/m - m/4; requires m > 0 and m - 2g > 0
Rational d_b_circle_bundle(unsigned g, long long m);

struct AuditReport {
    SpincParameters params;
    long long d_minus = 0;

    int epsilon = 0;
    long long x = 0;
    long long m = 0;               // self-intersection of the capped surface
    long long e = 0;               // e(F) = m - 1
    long long c1_sq = 0;           // form evaluation
    long long c1_sq_closed_form = 0;
    unsigned beta2_minus = 0;      // n + 2, cross-checked against the form signature
    long long pairing = 0;         // <c1, [Sigma]>, must equal m - 2g

    // (2): c1^2 - (m-2g)^2/m + beta2^- <= 4(1/4 - g^2/m - m/4) + 4d + 4g
    Rational ineq2_lhs, ineq2_rhs;
    // (3): c1^2 + (n+2) <= 1 + 4d
    long long ineq3_lhs = 0, ineq3_rhs = 0;
    bool ineq3_holds = false;
    // (5): e(F)/2 - 2d <= beta_1(F) = 2g + 1
    Rational ineq5_lhs;
    long long ineq5_rhs = 0;
    bool ineq5_holds = false;

    bool epsilon_unique = false;     // exactly one eps gives integral x
    bool characteristic = false;     // c1 . w == w . w mod 2 for all basis w
    bool dual_route_equal = false;   // form c1^2 == closed form
    bool pairing_ok = false;         // <c1,[Sigma]> == m - 2g
    bool two_iff_three = false;      // (2) and (3) have identical margins
    bool implication_3_to_5 = false; // (3) -> (5)
    bool all_pass = false;
};

// requires m > 0 and m - 2g > 0 (throws std::invalid_argument otherwise)
AuditReport audit_inequality_chain(const SpincParameters& p, long long d_minus);

// seeded tuples with n <= 6, |a_i| <= 10, |b| <= 10, resampled until m > 0 and
// m - 2g > 0; deterministic across platforms for a fixed-seed mt19937_64
SpincParameters random_params(std::mt19937_64& rng);

} // namespace floer::lattice
