#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floer/cfk_model.hpp"
#include "floer/f2linalg.hpp"

namespace floer::cfk {

// Truncation regions in the (i, j) plane. Only max_ge is upward-closed (the
// complement is a subcomplex, so killing it is a quotient chain map); the
// band/diagonal kinds model hat-type slices.
struct Region {
    enum class Kind { max_ge, band_i, band_j, max_eq };
    Kind kind = Kind::max_ge;
    int c = 0;

    bool contains(int i, int j) const;

    static Region max_ge(int c) { return {Kind::max_ge, c}; }
    static Region band_i(int c) { return {Kind::band_i, c}; }
    static Region band_j(int c) { return {Kind::band_j, c}; }
    static Region max_eq(int c) { return {Kind::max_eq, c}; }
};

// Tensor product of models (connected sum of knots). Generator names pair up
// as "x|y", which cannot collide with file-format names.
FundamentalComplex tensor(const FundamentalComplex& a, const FundamentalComplex& b);
FundamentalComplex tensor_power(const FundamentalComplex& c, unsigned m); // m >= 1

// Mirror knot: positions negated, maslov negated, arrows reversed.
FundamentalComplex mirror(const FundamentalComplex& c);

// Translate the whole model by U^{-l}: positions (i+l, j+l), maslov + 2l,
// names and arrows unchanged.
FundamentalComplex translate(const FundamentalComplex& c, int l);

// Translate by U^{-l} (positions +l, maslov +2l), then keep the generators
// inside the region and the arrows with both endpoints inside.
FundamentalComplex truncate(const FundamentalComplex& c, int l, const Region& region);

struct GradedHomology {
    std::map<int, std::size_t> dims;          // only gradings with dim > 0
    std::map<int, std::vector<Chain>> reps;   // canonical cycle representatives
    std::size_t total() const;
    std::size_t dim_at(int grading) const;
};

GradedHomology homology(const FundamentalComplex& c);

// Whether an offset-0 homogeneous cycle represents a nonzero class in
// homology(c). The zero chain gives false; a chain with nonzero offsets, a
// grading-mixed chain, or a non-cycle throws std::invalid_argument.
bool homology_class_nonzero(const FundamentalComplex& c, const Chain& z);

// The chain with one component per m-letter word over `letters`, names joined
// with '|' as tensor_power names them: word_sum_chain(c, {"x1","x5","x9"}, m)
// is alpha^{(x) m} inside tensor_power(build_9_42(), m). Throws
// InternalConsistencyError when a word is not a generator of c.
Chain word_sum_chain(const FundamentalComplex& c, const std::vector<std::string>& letters,
                     unsigned m);

// Whether the homology class of the generating tower cycle survives in
// homology(truncate(c, l, region)). Requires a standard complex and a max_ge
// region. The class is well defined: truncation by an upward-closed region is
// a quotient chain map, so representative choice cannot change the answer.
struct TowerImage {
    bool nonzero = false;
    std::optional<int> grading;
};

TowerImage tower_image(const FundamentalComplex& c, int l, const Region& region);

struct SurgeryTraceRow {
    int l = 0;
    bool nonzero = false;
    std::optional<int> grading;
};

struct SurgeryResult {
    int d = 0;
    int achieved_at_l = 0;                 // smallest translate attaining the minimum
    std::vector<SurgeryTraceRow> trace;    // the full scan, in translate order
};

// d of +1-surgery: minimum over the translate window of the grading of the
// surviving tower image under max_ge(0) truncation. The window is
// [-W, W] with W = max|coordinate| + 1: below -W every translate of the cycle
// is already chain-zero, at +W nothing is truncated and the class survives.
SurgeryResult d_plus_one_surgery_detailed(const FundamentalComplex& c);
int d_plus_one_surgery(const FundamentalComplex& c);

// d of -1-surgery via the mirror: d_-1(K) = -d_+1(mirror K). The trace is the
// scan of the mirrored complex.
SurgeryResult d_minus_one_surgery_detailed(const FundamentalComplex& c);
int d_minus_one_surgery(const FundamentalComplex& c);

// The distinguished cycle beta = (x5+x9)^{(x) m} + (x5+x1)^{(x) m} + x5^{(x) m}
// in truncate(tensor_power(9_42, m), 0, max_ge(0)): checks it is a cycle, its
// class generates the one-dimensional homology at grading 0, and that it
// equals the chain-level truncation of alpha^{(x) m}, alpha = x1+x5+x9.
struct BetaReport {
    unsigned m = 0;
    std::size_t component_count = 0;
    bool boundary_zero = false;
    bool class_nonzero = false;
    std::optional<int> grading;
    std::size_t h_dim = 0;
    bool truncated_alpha_equals_beta = false;
    bool all_pass = false;
    std::string detail; // human-readable diff when something fails
};

BetaReport verify_beta(unsigned m);

// The {i=0, j<=0} band of tensor_power(9_42, m) is isomorphic, up to an
// overall grading shift, to tensor_power(left trefoil model, m): equal graded
// dimensions and equal graded homology.
struct ColumnModelReport {
    unsigned m = 0;
    int grading_offset = 0; // applied to the trefoil side
    bool graded_dims_equal = false;
    bool graded_homology_equal = false;
    bool pass = false;
    std::string detail;
};

ColumnModelReport column_model_check(unsigned m);

} // namespace floer::cfk
