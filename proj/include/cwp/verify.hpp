#pragma once

#include <span>

#include "cwp/surface.hpp"

namespace cwp {

/// Horocycle-scaling action: one positive scalar per puncture, acting on an
/// edge value by the product of the scalars at its endpoints (square for a
/// loop). Throws on nonpositive inputs.
std::vector<Rat> gauge_act(const IdealTriangulation& t, const std::vector<Rat>& lambda,
                           const std::vector<Rat>& values);

/// Numeric shear coordinates tau_e = prod_k values_k^{Z_ek}; invariant under
/// gauge_act.
std::vector<Rat> tau_values(const IdealTriangulation& t, const std::vector<Rat>& values);

struct CorankReport {
    int rank;
    int corank;
    int punctures;
    std::vector<QVec> kernel_basis;      // kernel of Z over Q
    std::vector<QVec> incidence_image;   // one row per puncture: edge-end counts
    bool agrees;                         // corank == punctures and equal subspaces
};

/// Exact rank/corank of the triangulation's exchange matrix, together with
/// the per-puncture incidence vectors (loops counted twice) whose span must
/// be the kernel.
CorankReport corank_check(const IdealTriangulation& t);

struct RepresentativeSubset {
    std::vector<int> edges;                   // S, |S| = punctures
    std::vector<std::vector<int>> components; // edge sets of the components of Gamma(S)
    std::vector<int> cycle_lengths;           // per component; all odd, loops = 1
    std::vector<int> complement;              // R = edges \ S
    bool restricted_nondegenerate;            // Z[R,R] has full rank (vacuous if R empty)
};

/// Smallest edge subset on which the scaling action is faithful, with each
/// component of its subgraph unicyclic with an odd cycle; also checks that Z
/// restricted to the complement is nondegenerate.
RepresentativeSubset find_representative(const IdealTriangulation& t);

/// True iff for every edge the multiplicative shear
/// f(e1) f(e3) / (f(e2) f(e4)) equals tau_e = prod_k f_k^{Z_ek} as exact
/// rational functions, up to one global inversion fixed for the whole
/// surface. Requires a perfect triangulation.
bool shear_tau_check(const IdealTriangulation& t);

struct FlipTrace {
    std::vector<int> word;
    std::vector<std::vector<int>> inter;  // [current edge][initial edge]
    std::vector<std::vector<int>> delta;  // same recurrence, tracked separately
    std::vector<RationalFunction> seed_vars;
};

/// Runs the word of flips while tracking intersection numbers and
/// denominator exponents by their twin recurrences (diagonal initialized to
/// -1) alongside the Ptolemy label updates.
FlipTrace track_flips(const IdealTriangulation& t, std::span<const int> word);

/// True iff after every step of the word, for every current edge p and
/// initial edge x, the denominator exponent of x in the label of p equals
/// both tracked matrices' entries [p][x].
bool thm34_check(const IdealTriangulation& t, std::span<const int> word);

}  // namespace cwp
