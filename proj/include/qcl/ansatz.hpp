#pragma once

#include <numbers>
#include <string>

#include "qcl/circuit.hpp"
#include "qcl/datasets.hpp"

namespace qcl {

// Every two-qubit gate in these circuits is an XX at this fixed, maximally
// entangling angle; only single-qubit angles are learned.
inline constexpr double kEntanglingAngle = std::numbers::pi / 2.0;

inline constexpr int kNumQubits = 4;
inline constexpr int kGammaCount = 4;   // data encoder
inline constexpr int kThetaCount = 24;  // variational block
inline constexpr int kPhiCount = 18;    // classifier block

// Slot naming shared by all builders and by checkpoint serialization
// (slot layout "v1"): gamma0..gamma3, theta0..theta23, phi0..phi17.
std::string gamma_slot_name(int index);
std::string theta_slot_name(int index);
std::string phi_slot_name(int index);

// Module T on one qubit pair: per qubit a RZ, RX, RZ triple (slots consumed
// in circuit order, low qubit first), then XX(pi/2) on the pair. Seven
// gates, six parameter slots named <prefix>0..<prefix>5.
Circuit build_t_module(int qubit_lo, int qubit_hi, const std::string& slot_prefix = "t");

// Variational block: T modules on pairs (0,1), (2,3), (1,2), (0,3), six
// theta slots each, 24 in total.
Circuit build_u_theta();

// Classifier block: same layout as the variational block minus the final
// (0,3) module; 18 phi slots.
Circuit build_v_phi();

// Data encoder for one image, four gamma slots. Five sub-modules in
// sequence: for each 2x2 quadrant (top-left, top-right, bottom-left,
// bottom-right; bits row-major, bit k on qubit k) an entangling layer with
// XX(pi/2) on every pair of one-valued qubits (lexicographic order)
// followed by RX(gamma1) on one-bits and RX(gamma0) on zero-bits; then an
// aggregation module driven by the quadrant bit-sums s_k: XX(pi/2) on pairs
// of qubits with s >= 2, then RX(gamma2 + gamma3 * s_k / 4) on each qubit.
Circuit build_a_gamma(const BinaryImage& image);

// Feature state |psi(x)>: variational block first, then the data encoder.
Circuit build_feature_circuit(const BinaryImage& image);

// Overlap between two encoded images: the x_j encoder runs forward, the
// x_i side in adjoint order; |<psi(x_i)|psi(x_j)>|^2 is the all-zeros
// probability of the output.
Circuit build_overlap_circuit(const BinaryImage& x_i, const BinaryImage& x_j);

// Classifier score circuit: feature circuit followed by the classifier
// block; the score is the all-zeros probability.
Circuit build_classifier_circuit(const BinaryImage& image);

// Precomputed slot-to-parameter-group mapping for one circuit, so repeated
// evaluations under new parameter values skip name lookups.
class SlotBinder {
public:
  explicit SlotBinder(const Circuit& circuit);

  // Fills `values` (resized to the slot count) from the group arrays.
  // Groups not referenced by the circuit may be empty; a referenced group
  // that is too short is a binding error.
  void bind(std::span<const double> gamma, std::span<const double> theta,
            std::span<const double> phi, std::vector<double>& values) const;

private:
  enum class Group { kGamma, kTheta, kPhi };
  struct Entry {
    Group group;
    int index;
  };
  std::vector<Entry> plan_;
};

}  // namespace qcl
