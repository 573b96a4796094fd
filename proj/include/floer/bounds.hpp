#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "floer/errors.hpp"

// Knot signature from Seifert matrices and the surgery-d genus lower bounds:
// the S^4 bound -sigma/2 + d(S^3_+1), its punctured-nCP^2 refinement with the
// -n correction, the normal-Euler-number bound e/2 - 2 d(S^3_-1), the ambient
// signature inequality |sigma(K) + sigma(M) - e/2| <= beta_2(M) + beta_1(F),
// and the bookkeeping for the surface moves that trade Mobius bands for
// crosscaps. All formulas take plain integers; resolving a knot to its
// (sigma, d_plus, d_minus) triple is the caller's job.
namespace floer::bounds {

// The Seifert pairing of a genus-g spanning surface: a 2g x 2g integer matrix
// with det(V - V^T) = +-1.
struct SeifertMatrix {
    std::vector<std::vector<long long>> v;

    std::size_t genus() const { return v.size() / 2; }
    // validates: square, even size, det(V - V^T) = +-1
    static SeifertMatrix from_rows(std::vector<std::vector<long long>> rows);
};

// signature of V + V^T, exact; even for every valid Seifert matrix
int signature(const SeifertMatrix& v);

// the mirror knot's Seifert matrix: -V^T (still a valid pairing)
SeifertMatrix mirror(const SeifertMatrix& v);

int signature_connected_sum(const std::vector<int>& sigmas);

// gamma_{S^4}(K) >= -sigma/2 + d(S^3_+1(K)); sigma must be even
int batson_bound(int sigma, int d_plus);
// gamma^0_{nCP^2}(K) >= -sigma/2 + d(S^3_+1(K)) - n
int cp2_bound(int sigma, int d_plus, unsigned n);
// beta_1(F) >= e(F)/2 - 2 d(S^3_-1(K)); euler must be even
int prop14_bound(int euler, int d_minus);
// |sigma_k + sigma_m - euler/2| <= beta2_m + beta1_f; euler must be even
bool yasuhara_check(int sigma_k, int sigma_m, int euler, unsigned beta2_m, unsigned beta1_f);

struct SurfaceState {
    unsigned beta1 = 0;       // first Betti number of the surface
    int euler = 0;            // normal Euler number
    unsigned ambient_beta2 = 0;
    int ambient_sigma = 0;
    bool null_homologous_mod2 = true;
};

enum class SurfaceMove {
    resolve_mobius, // Mobius band -> annulus: beta1 - 1, e + 2, ambient gains S^2 x S^2
    add_rp2,        // connect-sum a standard RP^2 (e = +2): beta1 + 1, e + 2
};

// throws std::invalid_argument when resolve_mobius is applied to even beta1
SurfaceState surface_move(SurfaceState s, SurfaceMove m);

enum class BoundKind { batson, cp2, prop14 };

struct BoundReport {
    std::string knot;
    int sigma = 0;
    int d_plus = 0;
    int d_minus = 0;
    long long bound_value = 0;
    BoundKind kind = BoundKind::batson;
    long long kind_param = 0; // n for cp2, e for prop14; unused for batson
};

// The (lower, upper) pair for gamma^0_{nCP^2}(#^{n+k} 9_42): lower from
// cp2_bound with sigma = (n+k) * sigma_per_copy and d_plus from the tensor
// power of the shipped 9_42 model; upper = k from the explicit surface (n
// disks plus k Mobius bands). Throws InternalConsistencyError unless
// lower = upper = k. sigma_per_copy comes from the validated Seifert fixture.
struct TableEntry {
    long long lower = 0;
    long long upper = 0;
};
TableEntry theorem13_table(unsigned n, unsigned k, int sigma_per_copy);

// Fixture format, '#' comments allowed:
//   seifert <name> g=<genus>
//   <2g rows of 2g integers>
std::map<std::string, SeifertMatrix> parse_seifert_fixtures(const std::string& path);
std::map<std::string, SeifertMatrix> parse_seifert_text(const std::string& text);

} // namespace floer::bounds
