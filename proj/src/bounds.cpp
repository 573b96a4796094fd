#include "floer/bounds.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "floer/cfk_engine.hpp"
#include "floer/exact_linalg.hpp"

namespace floer::bounds {

namespace {

exact::Matrix to_exact(const std::vector<std::vector<long long>>& v) {
    exact::Matrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        m[i].assign(v[i].begin(), v[i].end());
    return m;
}

} // namespace

SeifertMatrix SeifertMatrix::from_rows(std::vector<std::vector<long long>> rows) {
    const std::size_t n = rows.size();
    if (n % 2 != 0)
        throw ValidationError(ModelError::syntax, "Seifert matrix must be 2g x 2g (even size)");
    for (const auto& r : rows)
        if (r.size() != n)
            throw ValidationError(ModelError::syntax, "Seifert matrix must be square");
    exact::Matrix skew = to_exact(rows);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) skew[i][j] -= rows[j][i];
    exact::Int det = exact::determinant(std::move(skew));
    if (det != 1 && det != -1)
        throw ValidationError(ModelError::syntax,
                              "not a Seifert pairing: det(V - V^T) = " + det.str() +
                                  ", expected +-1");
    return SeifertMatrix{std::move(rows)};
}

int signature(const SeifertMatrix& v) {
    const std::size_t n = v.v.size();
    exact::Matrix sym = to_exact(v.v);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym[i][j] += v.v[j][i];
    return exact::signature(sym);
}

SeifertMatrix mirror(const SeifertMatrix& v) {
    const std::size_t n = v.v.size();
    std::vector<std::vector<long long>> t(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = -v.v[j][i];
    return SeifertMatrix::from_rows(std::move(t));
}

int signature_connected_sum(const std::vector<int>& sigmas) {
    return std::accumulate(sigmas.begin(), sigmas.end(), 0);
}

int batson_bound(int sigma, int d_plus) {
    if (sigma % 2 != 0) throw std::invalid_argument("knot signature must be even");
    return -sigma / 2 + d_plus;
}

int cp2_bound(int sigma, int d_plus, unsigned n) {
    if (sigma % 2 != 0) throw std::invalid_argument("knot signature must be even");
    return -sigma / 2 + d_plus - static_cast<int>(n);
}

int prop14_bound(int euler, int d_minus) {
    if (euler % 2 != 0) throw std::invalid_argument("normal Euler number must be even");
    return euler / 2 - 2 * d_minus;
}

bool yasuhara_check(int sigma_k, int sigma_m, int euler, unsigned beta2_m, unsigned beta1_f) {
    if (euler % 2 != 0) throw std::invalid_argument("normal Euler number must be even");
    long long lhs = std::llabs(static_cast<long long>(sigma_k) + sigma_m - euler / 2);
    return lhs <= static_cast<long long>(beta2_m) + beta1_f;
}

SurfaceState surface_move(SurfaceState s, SurfaceMove m) {
    switch (m) {
    case SurfaceMove::resolve_mobius:
        if (s.beta1 % 2 == 0 || s.beta1 == 0)
            throw std::invalid_argument("resolve_mobius needs an odd (>= 1) beta1");
        s.beta1 -= 1;
        s.euler += 2;
        s.ambient_beta2 += 2; // the resolution happens in M # S^2 x S^2
        return s;
    case SurfaceMove::add_rp2:
        s.beta1 += 1;
        s.euler += 2; // the standard cross-cap carries normal Euler number +2
        return s;
    }
    throw std::invalid_argument("unknown surface move");
}

TableEntry theorem13_table(unsigned n, unsigned k, int sigma_per_copy) {
    if (k == 0) throw std::invalid_argument("theorem13_table needs k >= 1");
    const unsigned m = n + k;
    std::vector<int> sigmas(m, sigma_per_copy);
    int sigma = signature_connected_sum(sigmas);
    int d_plus = cfk::d_plus_one_surgery(cfk::tensor_power(cfk::build_9_42(), m));
    TableEntry entry;
    entry.lower = cp2_bound(sigma, d_plus, n);
    entry.upper = k; // n disks + k Mobius bands from the explicit construction
    if (entry.lower != entry.upper || entry.upper != static_cast<long long>(k))
        throw InternalConsistencyError(
            "theorem13_table: lower " + std::to_string(entry.lower) + " != upper " +
            std::to_string(entry.upper) + " at n=" + std::to_string(n) +
            " k=" + std::to_string(k));
    return entry;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

} // namespace

std::map<std::string, SeifertMatrix> parse_seifert_text(const std::string& text) {
    std::map<std::string, SeifertMatrix> table;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    std::string pending_name;
    std::size_t pending_rows = 0; // rows still expected for the open entry
    std::vector<std::vector<long long>> rows;

    auto close_entry = [&]() {
        if (pending_name.empty()) return;
        try {
            table.emplace(pending_name, SeifertMatrix::from_rows(std::move(rows)));
        } catch (const ValidationError& e) {
            throw ValidationError(e.code(), std::string(e.what()) + " (entry " + pending_name + ")");
        }
        pending_name.clear();
        rows.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        auto toks = split_ws(raw);
        if (toks.empty()) continue;

        if (toks[0] == "seifert") {
            if (pending_rows != 0)
                throw ParseError(lineno, "expected " + std::to_string(pending_rows) +
                                             " more matrix rows for '" + pending_name + "'");
            close_entry();
            if (toks.size() != 3 || toks[2].substr(0, 2) != "g=")
                throw ParseError(lineno, "expected: seifert <name> g=<genus>");
            pending_name = toks[1];
            if (table.count(pending_name))
                throw ParseError(lineno, "duplicate entry '" + pending_name + "'");
            const std::string num = toks[2].substr(2);
            unsigned genus = 0;
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), genus);
            if (ec != std::errc{} || p != num.data() + num.size())
                throw ParseError(lineno, "bad genus '" + num + "'");
            pending_rows = 2 * genus;
            if (pending_rows == 0) close_entry(); // genus 0: empty matrix, done
            continue;
        }

        if (pending_rows == 0)
            throw ParseError(lineno, "matrix row outside any 'seifert' entry");
        std::vector<long long> row;
        for (const auto& t : toks) {
            long long value = 0;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc{} || p != t.data() + t.size())
                throw ParseError(lineno, "bad integer '" + t + "'");
            row.push_back(value);
        }
        rows.push_back(std::move(row)); // width is validated by from_rows
        if (--pending_rows == 0) close_entry();
    }
    if (pending_rows != 0)
        throw ParseError(lineno, "unexpected end of file: entry '" + pending_name +
                                     "' is missing matrix rows");
    close_entry();
    return table;
}

std::map<std::string, SeifertMatrix> parse_seifert_fixtures(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingDataError("cannot open Seifert fixture file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_seifert_text(ss.str());
}

} // namespace floer::bounds
