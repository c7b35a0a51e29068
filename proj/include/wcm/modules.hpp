#pragma once

#include <optional>

#include "wcm/profiles.hpp"
#include "wcm/truncpoly.hpp"

namespace wcm {

// The doubled cyclic quiver with n vertices, arrows x_i: (i-1) -> i and
// y_i: i -> (i-1), relations y_{i+1} x_{i+1} = x_i y_i (the central t) and
// x-path of length k = y-path of length n-k at every vertex (2n relations).
struct QuiverAlgebraSpec {
    int k = 0, n = 0;
    bool operator==(const QuiverAlgebraSpec& o) const { return k == o.k && n == o.n; }
};

// Free rank-r module over Q[t]/t^N at every vertex, with arrow matrices.
// Vertex label v in 1..n is stored at index v-1 (label 0 == n); the arrow at
// position p in 1..n is x[p-1]: M_{p-1} -> M_p and y[p-1]: M_p -> M_{p-1}.
struct ExplicitModule {
    QuiverAlgebraSpec spec;
    int N = 0, r = 0;
    std::vector<PolyMat> x, y;

    int src_index(int p) const { return (p - 2 + spec.n) % spec.n; }
    int dst_index(int p) const { return p - 1; }
};

// Per-vertex matrices of a module map M -> M' (r' x r over the truncated ring).
using ModuleHom = std::vector<PolyMat>;

int default_truncation(int n); // 2n

ExplicitModule module_from_rank1(const Rank1Profile& p, int k, int N);

// Rank-2 module for a 3-box profile: diagonal strand model (top contour I on
// strand 1 = the quotient, bottom contour J on strand 2 = the submodule) with
// unipotent lower-triangular twists at the three box openings. Construction is
// validated: (a) both relation families hold exactly, (b) extract_profile
// round-trips, (c) the module is indecomposable, (d) strand 2 is a submodule
// isomorphic to M_J with quotient M_I (structural). A bounded search over
// alternative twist values runs if the primary choice fails validation.
ExplicitModule module_from_profile(const Rank2Profile& p, int N);

// nullopt when both relation families hold exactly; otherwise a description
// of the first failure
std::optional<std::string> relations_failure(const ExplicitModule& m);

// Reads the two contours back off the arrow matrices. Requires per-position
// smith valuations within {0,1}; strand orientation comes from the triangular
// form, and the box scanner validates the packing.
Rank2Profile extract_profile(const ExplicitModule& m);

ExplicitModule stretch_module(const ExplicitModule& m, StretchDir dir, int i);

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b);

ExplicitModule retruncate(const ExplicitModule& m, int N);

struct ModuleCounts {
    long long total = 0;
    long long real_root = 0; // webs with |V| = k-3
};

ModuleCounts enumerate_modules(int k, int n);

struct SweepReport {
    long long modules = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Builds every psi-image module at each truncation order with the full
// validation (relation families, profile round-trip, indecomposability).
// OpenMP over webs; results are order-independent.
SweepReport sweep_psi_modules(int k, int n, const std::vector<int>& truncations);

// Every rank-1 module, relation families checked at each truncation order.
SweepReport sweep_rank1_modules(int k, int n, const std::vector<int>& truncations);

} // namespace wcm
