#include "floer/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace floer::exact {

namespace {

void require_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
}

} // namespace

Int determinant(Matrix m) {
    require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0; // whole pivot column is zero
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev; // exact division
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int signature(const Matrix& m) {
    require_square(m);
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix must be symmetric");

    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = Rational(m[i][j]);

    // `live` is the index set of the block still to be reduced
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    int sig = 0;

    while (!live.empty()) {
        // a diagonal pivot keeps the reduction one-dimensional
        std::size_t dpos = live.size();
        for (std::size_t p = 0; p < live.size(); ++p)
            if (s[live[p]][live[p]] != 0) {
                dpos = p;
                break;
            }
        if (dpos < live.size()) {
            std::size_t k = live[dpos];
            Rational d = s[k][k];
            sig += d > 0 ? 1 : -1;
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(dpos));
            for (std::size_t a : live)
                for (std::size_t b : live) s[a][b] -= s[a][k] * s[k][b] / d;
            continue;
        }
        // all-zero diagonal: find any off-diagonal entry
        std::size_t ai = 0, bi = 0;
        bool found = false;
        for (std::size_t p = 0; p < live.size() && !found; ++p)
            for (std::size_t q = p + 1; q < live.size() && !found; ++q)
                if (s[live[p]][live[q]] != 0) {
                    ai = p;
                    bi = q;
                    found = true;
                }
        if (!found) break; // zero block: contributes nothing
        std::size_t a = live[ai], b = live[bi];
        Rational v = s[a][b]; // hyperbolic block [[0,v],[v,0]]: +1 and -1
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(bi));
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(ai));
        for (std::size_t i : live)
            for (std::size_t j : live)
                s[i][j] -= (s[i][a] * s[b][j] + s[i][b] * s[a][j]) / v;
    }
    return sig;
}

std::string to_string(const Rational& r) {
    Int num = numerator(r), den = denominator(r);
    std::string out = num.str();
    if (den != 1) out += "/" + den.str();
    return out;
}

} // namespace floer::exact
