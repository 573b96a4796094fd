#pragma once
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floer/errors.hpp"

// Finite bigraded models over GF(2) of the fundamental part of a knot's
// CFK-infinity: generators carry a plane position (i, j) and a maslov grading,
// arrows are the boundary. The full complex is the direct sum of U-translates
// of this model; U^{-l} shifts a generator to (i+l, j+l) and raises maslov by
// 2l. The Alexander grading is derived: A = j - i.
namespace floer::cfk {

struct Generator {
    std::string name;
    int i = 0;
    int j = 0;
    int maslov = 0;
    int alexander() const { return j - i; }
};

struct Extent {
    int min_i = 0, max_i = 0, min_j = 0, max_j = 0;
};

class ComplexBuilder;

class FundamentalComplex {
    friend class ComplexBuilder;

public:
    FundamentalComplex() = default;

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::uint32_t k) const { return gens_[k]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::uint32_t> index_of(std::string_view name) const;

    // sorted target indices of the boundary of generator k
    std::span<const std::uint32_t> boundary_of(std::uint32_t k) const { return out_[k]; }
    // all arrows as (src, dst), sorted by index pair
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arrows() const { return arrows_; }

    Extent extent() const; // meaningless on an empty complex (all zeros)
    int max_abs_coordinate() const;

private:
    std::vector<Generator> gens_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arrows_;
    std::map<std::string, std::uint32_t, std::less<>> index_;
};

// Throws ValidationError (duplicate_name, unknown_generator, duplicate_arrow,
// filtration, maslov_step, d_squared) from add_* or build().
class ComplexBuilder {
public:
    std::uint32_t add_generator(std::string name, int i, int j, int maslov);
    void add_arrow(std::string_view src, std::string_view dst);
    void add_arrow(std::uint32_t src, std::uint32_t dst);
    FundamentalComplex build();

private:
    FundamentalComplex c_;
};

// Order-insensitive equality: same generator data (matched by name), same
// arrow set.
bool equal_complexes(const FundamentalComplex& a, const FundamentalComplex& b);

// --- chains ----------------------------------------------------------------

// An element U^{-offset} x: lives at (i+offset, j+offset), maslov + 2*offset.
struct ChainElement {
    std::uint32_t gen = 0;
    int offset = 0;
    friend auto operator<=>(const ChainElement&, const ChainElement&) = default;
};

struct Chain {
    std::vector<ChainElement> elems; // sorted, unique

    static Chain single(std::uint32_t gen, int offset = 0) { return {{{gen, offset}}}; }
    bool is_zero() const { return elems.empty(); }
    std::size_t size() const { return elems.size(); }
    void toggle(ChainElement e);
    Chain& operator^=(const Chain& o);
    bool operator==(const Chain&) const = default;
};

// grading of a homogeneous chain (with offsets counted), nullopt if mixed or zero
std::optional<int> chain_maslov(const FundamentalComplex& c, const Chain& ch);
Chain chain_boundary(const FundamentalComplex& c, const Chain& ch);
// "x1 + x5 + U^-1 x3" (deterministic order); "0" for the zero chain
std::string chain_to_string(const FundamentalComplex& c, const Chain& ch);

// --- shipped models ---------------------------------------------------------

enum class Chirality { left, right };

FundamentalComplex build_unknot();
FundamentalComplex build_trefoil(Chirality h);
FundamentalComplex build_9_42();

// --- file format ------------------------------------------------------------
//
//   # comment
//   gen <name> i=<int> j=<int> m=<int>
//   arrow <src> <dst>
//
// Names match [A-Za-z0-9_]+. Gen line order fixes generator order; arrows must
// reference already-declared names. Serialization is canonical: gen lines
// sorted by (i desc, j desc, name), then arrow lines sorted lexicographically;
// round trips are bit-exact on canonical text.

FundamentalComplex parse_complex(std::string_view text);
FundamentalComplex parse_complex_file(const std::string& path); // MissingDataError if unreadable
std::string serialize_complex(const FundamentalComplex& c);

// The knot-model symmetry: the multiset of (A, maslov - 2i) pairs is invariant
// under (A, g) -> (-A, g - 2A). Holds for every shipped model and is preserved
// by tensor products; a general valid complex need not satisfy it.
bool knot_symmetry_holds(const FundamentalComplex& c);

// --- standardness -----------------------------------------------------------

// A model is standard when the homology of the model itself is a single copy
// of GF(2), and the column ({i=0} slice across all U-translates, vertical
// arrows, graded by maslov-2i) and row ({j=0} slice, horizontal arrows, graded
// by maslov-2j) complexes each have one-dimensional homology sitting at
// grading 0 — the model of HF-hat(S^3).
struct StandardReport {
    bool standard = false;

    std::size_t h_total_dim = 0;
    std::optional<int> h_grading;
    Chain generator; // representative cycle of the model homology (offsets 0)

    std::size_t column_dim = 0;
    std::optional<int> column_grading;
    Chain column_generator; // offsets: element x enters the slice at offset -i(x)

    std::size_t row_dim = 0;
    std::optional<int> row_grading;
    Chain row_generator;

    bool symmetric = false; // informational, not part of `standard`
};

StandardReport validate_standard(const FundamentalComplex& c);

} // namespace floer::cfk
