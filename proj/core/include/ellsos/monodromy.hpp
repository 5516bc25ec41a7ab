#ifndef ELLSOS_MONODROMY_HPP
#define ELLSOS_MONODROMY_HPP

#include <vector>

#include "ellsos/model.hpp"
#include "ellsos/numerics.hpp"
#include "ellsos/report.hpp"

namespace ellsos {

/// Chain-space vector, dimension 2^L, basis index big-endian in site order
/// (site 1 is the most significant bit; bit 0 = spin up).
using state_vector = std::vector<scalar>;

/// |0> = all spins up (index 0).
state_vector all_up(int L);
/// <0du| = all spins down (index 2^L - 1), stored as a plain vector.
state_vector all_down(int L);

/// The four chain-space generator blocks of the monodromy operator at one
/// spectral/dynamical point, extracted by auxiliary-space index (A = up/up,
/// B = up-row/down-column, C = down-row/up-column, D = down/down).
struct monodromy_blocks {
    dense_matrix A, B, C, D;
    scalar at_x;
    scalar at_tau;
};

/// Ordered product over sites i = 1..L of the local R factor at
/// (x - mu_i; tau - gamma * sum of spins of sites i+1..L), the site-1 factor
/// leftmost, each dynamical shift resolved per weight sector before any
/// matrix element is formed.  Matrix route; use the vector-sweep partition
/// function for amplitudes.
monodromy_blocks monodromy(scalar x, scalar tau, const model_params& params);

/// <all-down| B(y_1, tau + gamma) ... B(y_n, tau + n gamma) |all-up>, the
/// first factor leftmost, computed by sweeping state vectors through the
/// local factors (no full operator matrix is ever multiplied).  n need not
/// equal L; the amplitude is structurally zero unless n == L.
scalar bstring_amplitude(const std::vector<scalar>& y, scalar tau, const model_params& params);

/// Domain-wall partition function at the model's own tau.
scalar partition_function(const std::vector<scalar>& x, const model_params& params);
/// Same with an explicit dynamical parameter (the functional equations couple
/// neighbouring tau values).
scalar partition_function(const std::vector<scalar>& x, scalar tau, const model_params& params);
scalar partition_function(const spectral_config& cfg, const model_params& params);

/// Six-vertex domain-wall partition function from the non-dynamical weights;
/// same construction, no dynamical shifts.
scalar sixv_partition_function(const std::vector<scalar>& x, scalar gamma,
                               const std::vector<scalar>& mu);

/// Verifies the operator-algebra identities used by the functional-equation
/// derivations: the A/B exchange family, the D/B/Cartan family (with the
/// operator-valued bracket factors realized per weight sector), and the two
/// length-L string lift identities.  Spectral points are drawn internally
/// (seeded, with pole rejection); gamma, tau, mu come from params.  Returns
/// one report per identity with the worst residual over sample_count draws.
std::vector<residual_report> verify_algebra(const model_params& params, int sample_count,
                                            double tolerance = 1e-10,
                                            std::uint64_t seed = 12345);

} // namespace ellsos

#endif
