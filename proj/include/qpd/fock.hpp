#pragma once

#include <array>
#include <map>
#include <vector>

#include "qpd/tensor.hpp"

namespace qpd {
namespace fock {

// Optical modes: Alice's and Bob's spatial mode, two polarizations each.
enum ModeIndex { A_H = 0, A_V = 1, B_H = 2, B_V = 3 };

inline constexpr int kModes = 4;
inline constexpr int kMaxPhotons = 2;
inline constexpr int kBasisSize = 15;

// Occupation numbers over the four modes, total photon number <= 2.
using Occupation = std::array<int, kModes>;

// Deterministic ordering: ascending total photon number, then lexicographic
// occupations. Size 15.
const std::vector<Occupation>& basis();
int basis_index(const Occupation& occ);

// Per-party local labels 0..5:
// |0> vac, |1> 1_H, |2> 1_V, |3> 2_H, |4> 1_H 1_V, |5> 2_V.
int local_label(int n_h, int n_v);
std::pair<int, int> label_occupation(int label);  // -> (n_h, n_v)

// |labelA>_A (x) |labelB>_B as a Fock-basis vector.
Vector local_state(int label_a, int label_b);

// Homomorphic lift of a mode-level unitary to the truncated Fock space via
// its action on creation operators, with bosonic sqrt(n!) normalization.
// Block-diagonal in total photon number.
Matrix lift_mode_unitary(const Matrix& mode_unitary);

// The 1 (+) H (+) H3 block unitary acting on one party's six local labels.
Matrix build_h6();

// Central 50/50 beamsplitter lift. The per-polarization sign convention is
// fixed so that build_J reproduces the coincidence terms |1>_A|1>_B and
// |2>_A|2>_B: the H pair (A_H, B_H) mixes by rows (1,1)/sqrt2, (1,-1)/sqrt2
// and the V pair (A_V, B_V) by rows (1,1)/sqrt2, (-1,1)/sqrt2.
Matrix beamsplitter_mode_matrix();
Matrix build_beamsplitter();

Matrix build_J();  // (H6 (x) H6) . B on the two-party Fock space
Matrix build_I();

// Detector counts (A+, A-, B+, B-): + receives H photons, - receives V.
using DetectorPattern = std::array<int, 4>;

std::map<DetectorPattern, double> detector_distribution(const Vector& state);

// Photon counts at the two + detectors merged with the two - detectors is
// never needed; patterns keep full number resolution. `resolve=false`
// collapses count-2 entries to clicks for non-resolving detector emulation.
std::map<DetectorPattern, double> detector_distribution(const Vector& state, bool resolving);

// Beamsplitter output for the V@mode1, H@mode2 photon pair, including the
// phase correction on mode 2 (sign flip on both of Bob's modes).
Vector bs_output_state();

// Projects onto one photon per spatial mode; returns the renormalized
// two-qubit polarization state (H=0, V=1; mode 1 most significant) and the
// success probability.
std::pair<Vector, double> post_select_coincidence(const Vector& state);

// Two-component indistinguishability model: coincidence probability (1-m)/2.
double hom_coincidence(double overlap);

}  // namespace fock
}  // namespace qpd

#include "qpd/protocols.hpp"

namespace qpd {
namespace fock {

// LOCC rule on two-photon patterns: the A- / B+ coincidence flags the
// identity; both photons at + detectors or both at - detectors flag J.
// Anything else signals a convention breakage and throws.
Decision decide_locc(const DetectorPattern& pattern);

}  // namespace fock
}  // namespace qpd
