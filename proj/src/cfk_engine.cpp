#include "floer/cfk_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace floer::cfk {

bool Region::contains(int i, int j) const {
    switch (kind) {
    case Kind::max_ge: return std::max(i, j) >= c;
    case Kind::band_i: return i == c && j <= c;
    case Kind::band_j: return j == c && i <= c;
    case Kind::max_eq: return std::max(i, j) == c;
    }
    return false;
}

FundamentalComplex tensor(const FundamentalComplex& a, const FundamentalComplex& b) {
    ComplexBuilder bld;
    const auto nb = static_cast<std::uint32_t>(b.size());
    for (std::uint32_t u = 0; u < a.size(); ++u)
        for (std::uint32_t v = 0; v < b.size(); ++v) {
            const Generator& gu = a.gen(u);
            const Generator& gv = b.gen(v);
            bld.add_generator(gu.name + "|" + gv.name, gu.i + gv.i, gu.j + gv.j,
                              gu.maslov + gv.maslov);
        }
    // Leibniz rule; over GF(2) no signs
    for (std::uint32_t u = 0; u < a.size(); ++u)
        for (std::uint32_t v = 0; v < b.size(); ++v) {
            std::uint32_t src = u * nb + v;
            for (std::uint32_t t : a.boundary_of(u)) bld.add_arrow(src, t * nb + v);
            for (std::uint32_t t : b.boundary_of(v)) bld.add_arrow(src, u * nb + t);
        }
    return bld.build();
}

FundamentalComplex tensor_power(const FundamentalComplex& c, unsigned m) {
    if (m < 1) throw std::invalid_argument("tensor_power: m must be >= 1");
    FundamentalComplex acc = c;
    for (unsigned k = 1; k < m; ++k) acc = tensor(acc, c);
    return acc;
}

FundamentalComplex mirror(const FundamentalComplex& c) {
    ComplexBuilder bld;
    for (const auto& g : c.generators()) bld.add_generator(g.name, -g.i, -g.j, -g.maslov);
    for (auto [s, d] : c.arrows()) bld.add_arrow(d, s);
    return bld.build();
}

FundamentalComplex translate(const FundamentalComplex& c, int l) {
    ComplexBuilder bld;
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        const Generator& g = c.gen(k);
        bld.add_generator(g.name, g.i + l, g.j + l, g.maslov + 2 * l);
    }
    for (auto [s, d] : c.arrows()) bld.add_arrow(s, d);
    return bld.build();
}

FundamentalComplex truncate(const FundamentalComplex& c, int l, const Region& region) {
    ComplexBuilder bld;
    std::vector<std::int64_t> kept(c.size(), -1);
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        const Generator& g = c.gen(k);
        if (region.contains(g.i + l, g.j + l))
            kept[k] = bld.add_generator(g.name, g.i + l, g.j + l, g.maslov + 2 * l);
    }
    for (auto [s, d] : c.arrows())
        if (kept[s] >= 0 && kept[d] >= 0)
            bld.add_arrow(static_cast<std::uint32_t>(kept[s]), static_cast<std::uint32_t>(kept[d]));
    return bld.build();
}

std::size_t GradedHomology::total() const {
    std::size_t t = 0;
    for (const auto& [g, d] : dims) t += d;
    return t;
}

std::size_t GradedHomology::dim_at(int grading) const {
    auto it = dims.find(grading);
    return it == dims.end() ? 0 : it->second;
}

// --- graded homology machinery ----------------------------------------------

namespace {

// A finite complex with an arbitrary integer grading dropped by 1 by every
// boundary arrow. The model homology uses the maslov grading; the column/row
// slice complexes reuse the same machinery with grading maslov - 2i (resp.
// maslov - 2j) and arrows filtered to the slice.
struct GradedProblem {
    std::vector<int> grade;
    std::vector<std::vector<std::uint32_t>> out;
};

GradedProblem model_problem(const FundamentalComplex& c) {
    GradedProblem p;
    p.grade.reserve(c.size());
    p.out.resize(c.size());
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        p.grade.push_back(c.gen(k).maslov);
        auto tgts = c.boundary_of(k);
        p.out[k].assign(tgts.begin(), tgts.end());
    }
    return p;
}

// keep_arrow(src, dst) filters to the slice
template <class Keep>
GradedProblem slice_problem(const FundamentalComplex& c, Keep keep_arrow, bool column) {
    GradedProblem p;
    p.grade.reserve(c.size());
    p.out.resize(c.size());
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        const Generator& g = c.gen(k);
        p.grade.push_back(column ? g.maslov - 2 * g.i : g.maslov - 2 * g.j);
        for (std::uint32_t t : c.boundary_of(k))
            if (keep_arrow(g, c.gen(t))) p.out[k].push_back(t);
    }
    return p;
}

struct Decomposition {
    std::map<int, std::vector<std::uint32_t>> by_grade;
    std::vector<std::uint32_t> pos; // index within own grade
};

Decomposition decompose(const GradedProblem& p) {
    Decomposition d;
    d.pos.resize(p.grade.size());
    for (std::uint32_t k = 0; k < p.grade.size(); ++k) {
        auto& v = d.by_grade[p.grade[k]];
        d.pos[k] = static_cast<std::uint32_t>(v.size());
        v.push_back(k);
    }
    return d;
}

std::size_t grade_dim(const Decomposition& d, int g) {
    auto it = d.by_grade.find(g);
    return it == d.by_grade.end() ? 0 : it->second.size();
}

// boundary block from grade g down to g-1
f2::F2Matrix boundary_block(const GradedProblem& p, const Decomposition& d, int g) {
    f2::F2Matrix m(grade_dim(d, g - 1), grade_dim(d, g));
    auto it = d.by_grade.find(g);
    if (it == d.by_grade.end()) return m;
    for (std::uint32_t col = 0; col < it->second.size(); ++col)
        for (std::uint32_t t : p.out[it->second[col]]) m.toggle(d.pos[t], col);
    return m;
}

struct HomologyCore {
    Decomposition dec;
    std::map<int, std::size_t> dims;
    std::map<int, std::vector<f2::F2Vector>> reps_local;
    std::size_t total = 0;
};

HomologyCore homology_core(const GradedProblem& p, bool want_reps) {
    HomologyCore h;
    h.dec = decompose(p);
    std::map<int, std::size_t> rank_of;
    for (const auto& [g, gens] : h.dec.by_grade)
        rank_of[g] = f2::rank(boundary_block(p, h.dec, g));
    for (const auto& [g, gens] : h.dec.by_grade) {
        auto next = rank_of.find(g + 1);
        std::size_t dim = gens.size() - rank_of[g] - (next == rank_of.end() ? 0 : next->second);
        if (dim == 0) continue;
        h.dims[g] = dim;
        h.total += dim;
        if (!want_reps) continue;
        auto cycles = f2::kernel_basis(boundary_block(p, h.dec, g));
        f2::F2Matrix up = boundary_block(p, h.dec, g + 1);
        f2::GF2Eliminator elim(gens.size());
        for (std::uint32_t c = 0; c < up.cols(); ++c) elim.add_column(up.column(c));
        auto& reps = h.reps_local[g];
        for (const auto& cyc : cycles) {
            if (elim.add(cyc))
                reps.push_back(f2::F2Vector{gens.size(), elim.unpack_row_part(elim.last())});
            if (reps.size() == dim) break;
        }
        if (reps.size() != dim)
            throw InternalConsistencyError("homology: representative extraction disagrees with rank count");
    }
    return h;
}

Chain local_to_chain(const HomologyCore& h, int g, const f2::F2Vector& local,
                     const std::vector<int>& offset_of) {
    Chain ch;
    const auto& gens = h.dec.by_grade.at(g);
    for (std::uint32_t k : local.support) {
        std::uint32_t gen = gens[k];
        ch.toggle({gen, offset_of.empty() ? 0 : offset_of[gen]});
    }
    return ch;
}

} // namespace

GradedHomology homology(const FundamentalComplex& c) {
    HomologyCore core = homology_core(model_problem(c), true);
    GradedHomology out;
    out.dims = core.dims;
    for (const auto& [g, vecs] : core.reps_local) {
        auto& reps = out.reps[g];
        for (const auto& v : vecs) reps.push_back(local_to_chain(core, g, v, {}));
    }
    return out;
}

// --- standardness -----------------------------------------------------------

StandardReport validate_standard(const FundamentalComplex& c) {
    StandardReport r;
    r.symmetric = knot_symmetry_holds(c);
    if (c.size() == 0) return r;

    HomologyCore full = homology_core(model_problem(c), true);
    r.h_total_dim = full.total;
    if (full.total == 1) {
        auto it = full.dims.begin();
        r.h_grading = it->first;
        r.generator = local_to_chain(full, it->first, full.reps_local.at(it->first)[0], {});
    }

    auto vertical = [](const Generator& s, const Generator& d) { return s.i == d.i; };
    auto horizontal = [](const Generator& s, const Generator& d) { return s.j == d.j; };

    std::vector<int> col_offsets(c.size()), row_offsets(c.size());
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        col_offsets[k] = -c.gen(k).i; // U^{-l} x lands on {i=0} at l = -i(x)
        row_offsets[k] = -c.gen(k).j;
    }

    HomologyCore col = homology_core(slice_problem(c, vertical, true), true);
    r.column_dim = col.total;
    if (col.total == 1) {
        auto it = col.dims.begin();
        r.column_grading = it->first;
        r.column_generator =
            local_to_chain(col, it->first, col.reps_local.at(it->first)[0], col_offsets);
    }

    HomologyCore row = homology_core(slice_problem(c, horizontal, false), true);
    r.row_dim = row.total;
    if (row.total == 1) {
        auto it = row.dims.begin();
        r.row_grading = it->first;
        r.row_generator =
            local_to_chain(row, it->first, row.reps_local.at(it->first)[0], row_offsets);
    }

    r.standard = r.h_total_dim == 1 && r.column_dim == 1 && r.column_grading == 0 &&
                 r.row_dim == 1 && r.row_grading == 0;
    return r;
}

// --- towers and surgery d-invariants ------------------------------------------

namespace {

// Decide the image of the tower class in the truncation of translate l. The
// cycle is a homogeneous offset-0 cycle of c generating its homology.
TowerImage tower_detail(const FundamentalComplex& c, const Chain& cycle, int cycle_grading,
                        int l, const Region& region) {
    // surviving components of the translated cycle
    std::vector<std::uint32_t> survivors;
    for (const auto& e : cycle.elems) {
        const Generator& g = c.gen(e.gen);
        if (region.contains(g.i + l, g.j + l)) survivors.push_back(e.gen);
    }
    if (survivors.empty()) return {false, std::nullopt};

    int grading = cycle_grading + 2 * l;
    bool keeps_everything = true;
    for (const auto& g : c.generators())
        if (!region.contains(g.i + l, g.j + l)) {
            keeps_everything = false;
            break;
        }
    // nothing truncated: the class generates H of the translate, which is
    // one-dimensional by standardness
    if (keeps_everything) return {true, grading};

    FundamentalComplex t = truncate(c, l, region);
    // chain space at `grading` in t, image from grading+1
    std::vector<std::uint32_t> space;      // t indices at grading
    std::vector<std::uint32_t> above;      // t indices at grading+1
    std::vector<std::uint32_t> pos(t.size(), 0);
    for (std::uint32_t k = 0; k < t.size(); ++k) {
        if (t.gen(k).maslov == grading) {
            pos[k] = static_cast<std::uint32_t>(space.size());
            space.push_back(k);
        } else if (t.gen(k).maslov == grading + 1) {
            above.push_back(k);
        }
    }
    std::vector<std::uint32_t> probe_idx;
    for (std::uint32_t s : survivors) {
        auto idx = t.index_of(c.gen(s).name);
        if (!idx)
            throw InternalConsistencyError("tower_image: surviving component missing from truncation");
        probe_idx.push_back(pos[*idx]);
    }
    auto probe = f2::F2Vector::from_indices(space.size(), std::move(probe_idx));
    f2::GF2Eliminator elim(space.size());
    for (std::uint32_t a : above) {
        std::vector<std::uint32_t> colbits;
        for (std::uint32_t tgt : t.boundary_of(a)) colbits.push_back(pos[tgt]);
        std::sort(colbits.begin(), colbits.end());
        elim.add_column(colbits);
    }
    bool zero = elim.reduces_to_zero(probe);
    if (zero) return {false, std::nullopt};
    return {true, grading};
}

SurgeryResult scan_plus_one(const FundamentalComplex& c) {
    StandardReport sr = validate_standard(c);
    if (!sr.standard)
        throw NotStandardError("d-invariant requires a standard complex (one-dimensional "
                               "homology and HF-hat model in column/row slices)");
    const int w = c.max_abs_coordinate() + 1;
    SurgeryResult res;
    bool found = false;
    for (int l = -w; l <= w; ++l) {
        TowerImage ti = tower_detail(c, sr.generator, *sr.h_grading, l, Region::max_ge(0));
        res.trace.push_back({l, ti.nonzero, ti.grading});
        if (ti.nonzero && (!found || *ti.grading < res.d)) {
            res.d = *ti.grading;
            res.achieved_at_l = l;
            found = true;
        }
    }
    if (!found)
        throw InternalConsistencyError("surgery scan found no surviving tower image in window");
    return res;
}

} // namespace

TowerImage tower_image(const FundamentalComplex& c, int l, const Region& region) {
    if (region.kind != Region::Kind::max_ge)
        throw std::invalid_argument("tower_image: region must be max_ge (upward-closed)");
    StandardReport sr = validate_standard(c);
    if (!sr.standard) throw NotStandardError("tower_image requires a standard complex");
    return tower_detail(c, sr.generator, *sr.h_grading, l, region);
}

SurgeryResult d_plus_one_surgery_detailed(const FundamentalComplex& c) { return scan_plus_one(c); }

int d_plus_one_surgery(const FundamentalComplex& c) { return scan_plus_one(c).d; }

SurgeryResult d_minus_one_surgery_detailed(const FundamentalComplex& c) {
    SurgeryResult res = scan_plus_one(mirror(c));
    res.d = -res.d;
    return res;
}

int d_minus_one_surgery(const FundamentalComplex& c) {
    return d_minus_one_surgery_detailed(c).d;
}

// --- the 9_42 beta cycle ------------------------------------------------------

namespace {

// all length-m words over the given letters, joined with '|'
std::vector<std::string> words_over(const std::vector<std::string>& letters, unsigned m) {
    std::vector<std::string> words = {""};
    for (unsigned k = 0; k < m; ++k) {
        std::vector<std::string> next;
        next.reserve(words.size() * letters.size());
        for (const auto& w : words)
            for (const auto& l : letters) next.push_back(k == 0 ? l : w + "|" + l);
        words = std::move(next);
    }
    return words;
}

Chain chain_from_names(const FundamentalComplex& c, const std::vector<std::string>& names,
                       const char* what) {
    Chain ch;
    for (const auto& n : names) {
        auto idx = c.index_of(n);
        if (!idx) throw InternalConsistencyError(std::string(what) + ": generator '" + n +
                                                 "' missing from complex");
        ch.toggle({*idx, 0});
    }
    return ch;
}

// class of a homogeneous offset-0 cycle against the image inside grading+1
bool class_nonzero(const FundamentalComplex& c, const Chain& cycle, int grading) {
    std::vector<std::uint32_t> space, above, pos(c.size(), 0);
    for (std::uint32_t k = 0; k < c.size(); ++k) {
        if (c.gen(k).maslov == grading) {
            pos[k] = static_cast<std::uint32_t>(space.size());
            space.push_back(k);
        } else if (c.gen(k).maslov == grading + 1) {
            above.push_back(k);
        }
    }
    std::vector<std::uint32_t> bits;
    for (const auto& e : cycle.elems) bits.push_back(pos[e.gen]);
    auto probe = f2::F2Vector::from_indices(space.size(), std::move(bits));
    f2::GF2Eliminator elim(space.size());
    for (std::uint32_t a : above) {
        std::vector<std::uint32_t> colbits;
        for (std::uint32_t t : c.boundary_of(a)) colbits.push_back(pos[t]);
        std::sort(colbits.begin(), colbits.end());
        elim.add_column(colbits);
    }
    return !elim.reduces_to_zero(probe);
}

} // namespace

bool homology_class_nonzero(const FundamentalComplex& c, const Chain& z) {
    if (z.is_zero()) return false;
    for (const auto& e : z.elems)
        if (e.offset != 0)
            throw std::invalid_argument(
                "homology_class_nonzero: chain must lie in the fundamental part (offset 0)");
    std::optional<int> grading = chain_maslov(c, z);
    if (!grading) throw std::invalid_argument("homology_class_nonzero: chain is not homogeneous");
    if (!chain_boundary(c, z).is_zero())
        throw std::invalid_argument("homology_class_nonzero: chain is not a cycle");
    return class_nonzero(c, z, *grading);
}

Chain word_sum_chain(const FundamentalComplex& c, const std::vector<std::string>& letters,
                     unsigned m) {
    return chain_from_names(c, words_over(letters, m), "word_sum_chain");
}

BetaReport verify_beta(unsigned m) {
    if (m < 1) throw std::invalid_argument("verify_beta: m must be >= 1");
    BetaReport r;
    r.m = m;
    FundamentalComplex pw = tensor_power(build_9_42(), m);
    FundamentalComplex t = truncate(pw, 0, Region::max_ge(0));

    Chain beta;
    beta ^= chain_from_names(t, words_over({"x5", "x9"}, m), "beta");
    beta ^= chain_from_names(t, words_over({"x5", "x1"}, m), "beta");
    std::string x5m = "x5";
    for (unsigned k = 1; k < m; ++k) x5m += "|x5";
    beta ^= chain_from_names(t, {x5m}, "beta");
    r.component_count = beta.size();

    r.boundary_zero = chain_boundary(t, beta).is_zero();
    r.grading = chain_maslov(t, beta);

    GradedHomology h = homology(t);
    r.h_dim = h.total();
    r.class_nonzero = r.boundary_zero && r.grading && class_nonzero(t, beta, *r.grading);

    // chain-level truncation of alpha^{(x) m}: words over {x1,x5,x9} whose
    // position sum stays in {max >= 0}
    Chain alpha_trunc;
    for (const auto& w : words_over({"x1", "x5", "x9"}, m)) {
        auto idx = pw.index_of(w);
        if (!idx) throw InternalConsistencyError("verify_beta: missing tensor word " + w);
        const Generator& g = pw.gen(*idx);
        if (std::max(g.i, g.j) >= 0) {
            auto tidx = t.index_of(w);
            if (!tidx)
                throw InternalConsistencyError("verify_beta: surviving word missing after truncation");
            alpha_trunc.toggle({*tidx, 0});
        }
    }
    r.truncated_alpha_equals_beta = alpha_trunc == beta;

    r.all_pass = r.boundary_zero && r.class_nonzero && r.grading == 0 && r.h_dim == 1 &&
                 r.truncated_alpha_equals_beta;
    if (!r.all_pass) {
        Chain diff = beta;
        diff ^= alpha_trunc;
        r.detail = "boundary=" + chain_to_string(t, chain_boundary(t, beta)) +
                   " grading=" + (r.grading ? std::to_string(*r.grading) : "mixed") +
                   " h_dim=" + std::to_string(r.h_dim) +
                   " beta_xor_alpha_trunc=" + chain_to_string(t, diff);
    }
    return r;
}

// --- trefoil column model -----------------------------------------------------

ColumnModelReport column_model_check(unsigned m) {
    if (m < 1) throw std::invalid_argument("column_model_check: m must be >= 1");
    ColumnModelReport r;
    r.m = m;
    FundamentalComplex band = truncate(tensor_power(build_9_42(), m), 0, Region::band_i(0));
    FundamentalComplex tref = tensor_power(build_trefoil(Chirality::left), m);

    auto dims_of = [](const FundamentalComplex& c) {
        std::map<int, std::size_t> d;
        for (const auto& g : c.generators()) ++d[g.maslov];
        return d;
    };
    auto band_dims = dims_of(band);
    auto tref_dims = dims_of(tref);
    r.grading_offset = band_dims.rbegin()->first - tref_dims.rbegin()->first;

    std::map<int, std::size_t> tref_shifted;
    for (const auto& [g, n] : tref_dims) tref_shifted[g + r.grading_offset] = n;
    r.graded_dims_equal = band_dims == tref_shifted;

    auto band_h = homology(band);
    auto tref_h = homology(tref);
    std::map<int, std::size_t> tref_h_shifted;
    for (const auto& [g, n] : tref_h.dims) tref_h_shifted[g + r.grading_offset] = n;
    r.graded_homology_equal = band_h.dims == tref_h_shifted;

    r.pass = r.graded_dims_equal && r.graded_homology_equal;
    if (!r.pass) {
        r.detail = "graded dimension or homology mismatch at offset " +
                   std::to_string(r.grading_offset);
    }
    return r;
}

} // namespace floer::cfk
