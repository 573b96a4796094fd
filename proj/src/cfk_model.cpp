#include "floer/cfk_model.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace floer::cfk {

std::optional<std::uint32_t> FundamentalComplex::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Extent FundamentalComplex::extent() const {
    Extent e;
    if (gens_.empty()) return e;
    e.min_i = e.max_i = gens_[0].i;
    e.min_j = e.max_j = gens_[0].j;
    for (const auto& g : gens_) {
        e.min_i = std::min(e.min_i, g.i);
        e.max_i = std::max(e.max_i, g.i);
        e.min_j = std::min(e.min_j, g.j);
        e.max_j = std::max(e.max_j, g.j);
    }
    return e;
}

int FundamentalComplex::max_abs_coordinate() const {
    Extent e = extent();
    return std::max({std::abs(e.min_i), std::abs(e.max_i), std::abs(e.min_j), std::abs(e.max_j)});
}

std::uint32_t ComplexBuilder::add_generator(std::string name, int i, int j, int maslov) {
    if (c_.index_.count(name))
        throw ValidationError(ModelError::duplicate_name, "generator '" + name + "' declared twice");
    auto idx = static_cast<std::uint32_t>(c_.gens_.size());
    c_.index_.emplace(name, idx);
    c_.gens_.push_back(Generator{std::move(name), i, j, maslov});
    c_.out_.emplace_back();
    return idx;
}

void ComplexBuilder::add_arrow(std::string_view src, std::string_view dst) {
    auto s = c_.index_of(src);
    auto d = c_.index_of(dst);
    if (!s) throw ValidationError(ModelError::unknown_generator,
                                  "arrow source '" + std::string(src) + "' not declared");
    if (!d) throw ValidationError(ModelError::unknown_generator,
                                  "arrow target '" + std::string(dst) + "' not declared");
    add_arrow(*s, *d);
}

void ComplexBuilder::add_arrow(std::uint32_t src, std::uint32_t dst) {
    const Generator& s = c_.gens_[src];
    const Generator& d = c_.gens_[dst];
    if (d.i > s.i || d.j > s.j)
        throw ValidationError(ModelError::filtration,
                              "arrow " + s.name + " -> " + d.name + " increases a filtration level");
    if (d.maslov != s.maslov - 1)
        throw ValidationError(ModelError::maslov_step,
                              "arrow " + s.name + " -> " + d.name + " must drop maslov by 1");
    auto& targets = c_.out_[src];
    auto it = std::lower_bound(targets.begin(), targets.end(), dst);
    if (it != targets.end() && *it == dst)
        throw ValidationError(ModelError::duplicate_arrow,
                              "arrow " + s.name + " -> " + d.name + " listed twice");
    targets.insert(it, dst);
    c_.arrows_.emplace_back(src, dst);
}

FundamentalComplex ComplexBuilder::build() {
    // d^2 = 0: the two-step neighbourhood of every generator must cancel mod 2
    for (std::uint32_t g = 0; g < c_.size(); ++g) {
        std::vector<std::uint32_t> dd;
        for (std::uint32_t t : c_.out_[g])
            dd.insert(dd.end(), c_.out_[t].begin(), c_.out_[t].end());
        std::sort(dd.begin(), dd.end());
        for (std::size_t k = 0; k + 1 < dd.size();) {
            if (dd[k] == dd[k + 1]) {
                k += 2;
            } else {
                throw ValidationError(ModelError::d_squared,
                                      "d^2 != 0 starting from generator '" + c_.gens_[g].name + "'");
            }
        }
        if (dd.size() & 1)
            throw ValidationError(ModelError::d_squared,
                                  "d^2 != 0 starting from generator '" + c_.gens_[g].name + "'");
    }
    std::sort(c_.arrows_.begin(), c_.arrows_.end());
    return std::move(c_);
}

bool equal_complexes(const FundamentalComplex& a, const FundamentalComplex& b) {
    if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) return false;
    for (std::uint32_t k = 0; k < a.size(); ++k) {
        const Generator& g = a.gen(k);
        auto other = b.index_of(g.name);
        if (!other) return false;
        const Generator& h = b.gen(*other);
        if (g.i != h.i || g.j != h.j || g.maslov != h.maslov) return false;
    }
    for (auto [s, d] : a.arrows()) {
        auto bs = b.index_of(a.gen(s).name);
        auto bd = b.index_of(a.gen(d).name);
        if (!bs || !bd) return false;
        auto tgts = b.boundary_of(*bs);
        if (!std::binary_search(tgts.begin(), tgts.end(), *bd)) return false;
    }
    return true;
}

void Chain::toggle(ChainElement e) {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    if (it != elems.end() && *it == e)
        elems.erase(it);
    else
        elems.insert(it, e);
}

Chain& Chain::operator^=(const Chain& o) {
    std::vector<ChainElement> out;
    out.reserve(elems.size() + o.elems.size());
    std::set_symmetric_difference(elems.begin(), elems.end(), o.elems.begin(), o.elems.end(),
                                  std::back_inserter(out));
    elems = std::move(out);
    return *this;
}

std::optional<int> chain_maslov(const FundamentalComplex& c, const Chain& ch) {
    std::optional<int> g;
    for (const auto& e : ch.elems) {
        int m = c.gen(e.gen).maslov + 2 * e.offset;
        if (!g)
            g = m;
        else if (*g != m)
            return std::nullopt;
    }
    return g;
}

Chain chain_boundary(const FundamentalComplex& c, const Chain& ch) {
    Chain out;
    for (const auto& e : ch.elems)
        for (std::uint32_t t : c.boundary_of(e.gen)) out.toggle({t, e.offset});
    return out;
}

std::string chain_to_string(const FundamentalComplex& c, const Chain& ch) {
    if (ch.is_zero()) return "0";
    std::string s;
    for (const auto& e : ch.elems) {
        if (!s.empty()) s += " + ";
        if (e.offset != 0) s += "U^" + std::to_string(-e.offset) + " ";
        s += c.gen(e.gen).name;
    }
    return s;
}

// --- shipped models ---------------------------------------------------------

FundamentalComplex build_unknot() {
    ComplexBuilder b;
    b.add_generator("u", 0, 0, 0);
    return b.build();
}

FundamentalComplex build_trefoil(Chirality h) {
    ComplexBuilder b;
    if (h == Chirality::left) {
        b.add_generator("a", 0, 1, 2);
        b.add_generator("b", 1, 0, 2);
        b.add_generator("c", 0, 0, 1);
        b.add_arrow("a", "c");
        b.add_arrow("b", "c");
    } else {
        b.add_generator("c", 0, 0, -1);
        b.add_generator("a", 0, -1, -2);
        b.add_generator("b", -1, 0, -2);
        b.add_arrow("c", "a");
        b.add_arrow("c", "b");
    }
    return b.build();
}

FundamentalComplex build_9_42() {
    ComplexBuilder b;
    b.add_generator("x5", 0, 0, 0);
    b.add_generator("x9", -1, 0, 0);
    b.add_generator("x6", -2, 0, -1);
    b.add_generator("x1", 0, -1, 0);
    b.add_generator("x8", -1, -1, -1);
    b.add_generator("x2", -1, -1, -1);
    b.add_generator("x7", -2, -1, -2);
    b.add_generator("x4", 0, -2, -1);
    b.add_generator("x3", -1, -2, -2);
    for (const char* t : {"x2", "x4", "x6", "x8"}) b.add_arrow("x5", t);
    b.add_arrow("x9", "x6");
    b.add_arrow("x9", "x8");
    b.add_arrow("x1", "x2");
    b.add_arrow("x1", "x4");
    b.add_arrow("x2", "x3");
    b.add_arrow("x4", "x3");
    b.add_arrow("x6", "x7");
    b.add_arrow("x8", "x7");
    return b.build();
}

// --- file format ------------------------------------------------------------

namespace {

bool legal_name(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
                  (ch >= '0' && ch <= '9') || ch == '_';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        if (k > start) toks.push_back(line.substr(start, k - start));
    }
    return toks;
}

int parse_int_field(std::string_view tok, std::string_view key, std::size_t lineno) {
    if (tok.size() < key.size() + 2 || tok.substr(0, key.size()) != key ||
        tok[key.size()] != '=')
        throw ParseError(lineno, "expected " + std::string(key) + "=<int>, got '" +
                                     std::string(tok) + "'");
    std::string_view num = tok.substr(key.size() + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size())
        throw ParseError(lineno, "bad integer '" + std::string(num) + "'");
    return value;
}

} // namespace

FundamentalComplex parse_complex(std::string_view text) {
    ComplexBuilder b;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        try {
            if (toks[0] == "gen") {
                if (toks.size() != 5)
                    throw ParseError(lineno, "gen line needs: gen <name> i=<int> j=<int> m=<int>");
                if (!legal_name(toks[1]))
                    throw ParseError(lineno, "generator name '" + std::string(toks[1]) +
                                                 "' must match [A-Za-z0-9_]+");
                int i = parse_int_field(toks[2], "i", lineno);
                int j = parse_int_field(toks[3], "j", lineno);
                int m = parse_int_field(toks[4], "m", lineno);
                b.add_generator(std::string(toks[1]), i, j, m);
            } else if (toks[0] == "arrow") {
                if (toks.size() != 3)
                    throw ParseError(lineno, "arrow line needs: arrow <src> <dst>");
                if (!legal_name(toks[1]) || !legal_name(toks[2]))
                    throw ParseError(lineno, "arrow endpoints must match [A-Za-z0-9_]+");
                b.add_arrow(toks[1], toks[2]);
            } else {
                throw ParseError(lineno, "unknown directive '" + std::string(toks[0]) + "'");
            }
        } catch (const ValidationError& ve) {
            // re-attach the offending line so file errors are actionable
            throw ValidationError(ve.code(), ve.what(), lineno);
        }
    }
    return b.build();
}

FundamentalComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingDataError("cannot open complex file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

std::string serialize_complex(const FundamentalComplex& c) {
    for (const auto& g : c.generators())
        if (!legal_name(g.name))
            throw ValidationError(ModelError::syntax, "generator name '" + g.name +
                                                          "' is not file-format legal");
    std::vector<std::uint32_t> order(c.size());
    for (std::uint32_t k = 0; k < c.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Generator& ga = c.gen(a);
        const Generator& gb = c.gen(b);
        if (ga.i != gb.i) return ga.i > gb.i;
        if (ga.j != gb.j) return ga.j > gb.j;
        return ga.name < gb.name;
    });
    std::string out;
    for (std::uint32_t k : order) {
        const Generator& g = c.gen(k);
        out += "gen " + g.name + " i=" + std::to_string(g.i) + " j=" + std::to_string(g.j) +
               " m=" + std::to_string(g.maslov) + "\n";
    }
    std::vector<std::string> arrow_lines;
    arrow_lines.reserve(c.arrows().size());
    for (auto [s, d] : c.arrows())
        arrow_lines.push_back("arrow " + c.gen(s).name + " " + c.gen(d).name + "\n");
    std::sort(arrow_lines.begin(), arrow_lines.end());
    for (auto& l : arrow_lines) out += l;
    return out;
}

bool knot_symmetry_holds(const FundamentalComplex& c) {
    std::map<std::pair<int, int>, int> multiset;
    for (const auto& g : c.generators())
        ++multiset[{g.alexander(), g.maslov - 2 * g.i}];
    for (const auto& [key, count] : multiset) {
        auto [a, gr] = key;
        auto it = multiset.find({-a, gr - 2 * a});
        if (it == multiset.end() || it->second != count) return false;
    }
    return true;
}

} // namespace floer::cfk
