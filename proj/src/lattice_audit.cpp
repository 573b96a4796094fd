#include "floer/lattice_audit.hpp"

#include <stdexcept>

#include "floer/errors.hpp"

namespace floer::lattice {

long long QuadraticForm::evaluate(const std::vector<long long>& v) const { return pair(v, v); }

long long QuadraticForm::pair(const std::vector<long long>& v,
                              const std::vector<long long>& w) const {
    if (v.size() != matrix.size() || w.size() != matrix.size())
        throw std::invalid_argument("vector length does not match the form");
    long long acc = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j) acc += v[i] * matrix[i][j] * w[j];
    return acc;
}

QuadraticForm q_wbar(unsigned n) {
    const std::size_t dim = n + 3;
    QuadraticForm q;
    q.matrix.assign(dim, std::vector<long long>(dim, 0));
    for (unsigned i = 0; i <= n; ++i) {
        q.matrix[i][i] = -1;
        q.labels.push_back("gamma" + std::to_string(i));
    }
    q.matrix[n + 1][n + 2] = 1;
    q.matrix[n + 2][n + 1] = 1;
    q.labels.push_back("alpha");
    q.labels.push_back("beta");
    return q;
}

void check_params(const SpincParameters& p) {
    if (p.j > p.n) throw std::invalid_argument("SpincParameters: j must satisfy 0 <= j <= n");
    if (p.a.size() != p.n)
        throw std::invalid_argument("SpincParameters: need exactly n coefficients a_1..a_n");
}

std::vector<long long> class_vector(const SpincParameters& p) {
    check_params(p);
    std::vector<long long> v(p.n + 3, 0);
    v[0] = 1; // gamma0
    for (unsigned i = 1; i <= p.n; ++i)
        v[i] = i <= p.j ? 2 * p.a[i - 1] : 2 * p.a[i - 1] + 1;
    v[p.n + 1] = 2;   // alpha
    v[p.n + 2] = p.b; // beta
    return v;
}

std::vector<long long> c1_vector(const SpincParameters& p) {
    Epsilon eps = choose_epsilon(p);
    std::vector<long long> v(p.n + 3, 0);
    v[0] = eps.epsilon;
    for (unsigned i = 1; i <= p.n; ++i) v[i] = 2 * p.a[i - 1] + 1;
    v[p.n + 1] = 2;
    v[p.n + 2] = 2 * eps.x;
    return v;
}

long long euler_from_class(const SpincParameters& p) {
    check_params(p);
    long long e = 4 * p.b;
    for (unsigned i = 1; i <= p.n; ++i) {
        long long c = i <= p.j ? 2 * p.a[i - 1] : 2 * p.a[i - 1] + 1;
        e -= c * c;
    }
    // dual route: the class with the gamma0 coefficient dropped
    std::vector<long long> v = class_vector(p);
    v[0] = 0;
    if (q_wbar(p.n).evaluate(v) != e)
        throw InternalConsistencyError("euler_from_class: formula and form evaluation differ");
    return e;
}

long long self_intersection_m(const SpincParameters& p) {
    long long m = -1 + euler_from_class(p);
    if (q_wbar(p.n).evaluate(class_vector(p)) != m)
        throw InternalConsistencyError("self_intersection_m: formula and form evaluation differ");
    return m;
}

Epsilon choose_epsilon(const SpincParameters& p) {
    check_params(p);
    long long base = -1 + 2 * (p.b - static_cast<long long>(p.g));
    for (unsigned i = 1; i <= p.j; ++i) base += 2 * p.a[i - 1];
    int count = 0;
    Epsilon out;
    for (int eps : {+1, -1}) {
        if ((base + eps) % 4 == 0) {
            out.epsilon = eps;
            out.x = (base + eps) / 4;
            ++count;
        }
    }
    if (count != 1)
        throw InternalConsistencyError("choose_epsilon: expected exactly one integral choice, got " +
                                       std::to_string(count));
    return out;
}

long long c1_squared(const SpincParameters& p) {
    long long m = self_intersection_m(p);
    if (m <= 0) throw std::invalid_argument("c1_squared requires self-intersection m > 0");
    Epsilon eps = choose_epsilon(p);
    long long via_form = q_wbar(p.n).evaluate(c1_vector(p));
    long long e_f = m - 1;
    long long closed = e_f - p.j - 1 + 2 * eps.epsilon - 4 * static_cast<long long>(p.g);
    if (via_form != closed)
        throw InternalConsistencyError("c1_squared: form evaluation " + std::to_string(via_form) +
                                       " != closed form " + std::to_string(closed));
    return via_form;
}

Rational d_b_circle_bundle(unsigned g, long long m) {
    if (m <= 0) throw std::invalid_argument("d_b needs m > 0");
    if (m - 2 * static_cast<long long>(g) <= 0)
        throw std::invalid_argument("d_b needs the pairing condition m - 2g > 0");
    return Rational(1, 4) - Rational(static_cast<long long>(g) * g, m) - Rational(m, 4);
}

AuditReport audit_inequality_chain(const SpincParameters& p, long long d_minus) {
    AuditReport r;
    r.params = p;
    r.d_minus = d_minus;

    r.m = self_intersection_m(p);
    if (r.m <= 0) throw std::invalid_argument("audit requires m > 0");
    const long long two_g = 2 * static_cast<long long>(p.g);
    if (r.m - two_g <= 0) throw std::invalid_argument("audit requires m - 2g > 0");
    r.e = r.m - 1;

    // (a) unique integral choice of epsilon: exhaustive mod-4 check
    {
        long long base = -1 + 2 * (p.b - static_cast<long long>(p.g));
        for (unsigned i = 1; i <= p.j; ++i) base += 2 * p.a[i - 1];
        int count = 0;
        for (int eps : {+1, -1})
            if ((base + eps) % 4 == 0) ++count;
        r.epsilon_unique = count == 1;
    }
    Epsilon eps = choose_epsilon(p);
    r.epsilon = eps.epsilon;
    r.x = eps.x;

    QuadraticForm q = q_wbar(p.n);
    std::vector<long long> c1 = c1_vector(p);
    std::vector<long long> cls = class_vector(p);

    // (b) characteristic: c1 . w == w . w mod 2 for every basis vector w
    r.characteristic = true;
    for (std::size_t k = 0; k < q.matrix.size(); ++k) {
        std::vector<long long> w(q.matrix.size(), 0);
        w[k] = 1;
        if (((q.pair(c1, w) - q.pair(w, w)) % 2 + 2) % 2 != 0) r.characteristic = false;
    }

    // (c) c1^2 by both routes
    r.c1_sq = q.evaluate(c1);
    r.c1_sq_closed_form = r.e - p.j - 1 + 2 * eps.epsilon - 4 * static_cast<long long>(p.g);
    r.dual_route_equal = r.c1_sq == r.c1_sq_closed_form;

    // (d) the Lemma pairing hypothesis
    r.pairing = q.pair(c1, cls);
    r.pairing_ok = r.pairing == r.m - two_g;

    // beta2^-(Wbar) = n + 2, cross-checked against the form signature:
    // sig = beta2^+ - beta2^- and beta2^+ + beta2^- = n + 3
    r.beta2_minus = p.n + 2;
    {
        exact::Matrix qm(q.matrix.size());
        for (std::size_t i = 0; i < q.matrix.size(); ++i)
            qm[i].assign(q.matrix[i].begin(), q.matrix[i].end());
        int sig = exact::signature(qm);
        long long beta2m = (static_cast<long long>(q.matrix.size()) - sig) / 2;
        if (beta2m != r.beta2_minus)
            throw InternalConsistencyError("beta2^- from signature disagrees with n + 2");
    }

    // (2), before the rational terms cancel: lhs/rhs exactly as displayed
    r.ineq2_lhs = Rational(r.c1_sq) - Rational((r.m - two_g) * (r.m - two_g), r.m) +
                  Rational(r.beta2_minus);
    r.ineq2_rhs = 4 * d_b_circle_bundle(p.g, r.m) + Rational(4 * d_minus) + Rational(2 * two_g);

    // (3)
    r.ineq3_lhs = r.c1_sq + r.beta2_minus;
    r.ineq3_rhs = 1 + 4 * d_minus;
    r.ineq3_holds = r.ineq3_lhs <= r.ineq3_rhs;

    // the reduction (2) -> (3) is an identity: the margins agree exactly
    r.two_iff_three = (r.ineq2_rhs - r.ineq2_lhs) == Rational(r.ineq3_rhs - r.ineq3_lhs);

    // (5) with exact rationals (e may be odd here; the integer-only entry
    // point prop14_bound is the one that insists on even e)
    r.ineq5_lhs = Rational(r.e, 2) - Rational(2 * d_minus);
    r.ineq5_rhs = two_g + 1; // beta_1(F)
    r.ineq5_holds = r.ineq5_lhs <= Rational(r.ineq5_rhs);

    // the weakening steps -1 <= eps and j <= n make (3) imply (5)
    r.implication_3_to_5 = !r.ineq3_holds || r.ineq5_holds;

    r.all_pass = r.epsilon_unique && r.characteristic && r.dual_route_equal && r.pairing_ok &&
                 r.two_iff_three && r.implication_3_to_5;
    return r;
}

SpincParameters random_params(std::mt19937_64& rng) {
    auto draw = [&](long long bound) { return static_cast<long long>(rng() % bound); };
    // small-biased coefficient in [-10, 10]: large squares almost always
    // violate m > 0, so weight the sampler toward small magnitudes while
    // still covering the whole box
    auto coeff = [&]() -> long long {
        long long mag = 0;
        switch (draw(8)) {
        case 0: case 1: case 2: mag = 0; break;
        case 3: case 4: mag = 1; break;
        case 5: mag = 2; break;
        case 6: mag = 3 + draw(3); break;
        default: mag = 6 + draw(5); break;
        }
        return draw(2) ? mag : -mag;
    };
    for (;;) {
        SpincParameters p;
        p.n = static_cast<unsigned>(draw(7));
        p.j = static_cast<unsigned>(draw(p.n + 1));
        for (unsigned i = 0; i < p.n; ++i) p.a.push_back(coeff());
        p.b = draw(21) - 10;
        p.g = static_cast<unsigned>(draw(4));
        long long m = -1 + euler_from_class(p);
        if (m > 0 && m - 2 * static_cast<long long>(p.g) > 0) return p;
    }
}

} // namespace floer::lattice
