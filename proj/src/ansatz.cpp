#include "qcl/ansatz.hpp"

#include <stdexcept>

namespace qcl {

namespace {

constexpr int kNumPairs = 6;
constexpr int kPairs[kNumPairs][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// T-module pair order; the long-range (0,3) module is the one the
// classifier block drops.
constexpr int kTModulePairs[4][2] = {{0, 1}, {2, 3}, {1, 2}, {0, 3}};

void append_t_module(Circuit& circuit, int qubit_lo, int qubit_hi,
                     const int slots[6]) {
  circuit.rz(qubit_lo, AngleExpr::slot_ref(slots[0]));
  circuit.rx(qubit_lo, AngleExpr::slot_ref(slots[1]));
  circuit.rz(qubit_lo, AngleExpr::slot_ref(slots[2]));
  circuit.rz(qubit_hi, AngleExpr::slot_ref(slots[3]));
  circuit.rx(qubit_hi, AngleExpr::slot_ref(slots[4]));
  circuit.rz(qubit_hi, AngleExpr::slot_ref(slots[5]));
  circuit.xx(qubit_lo, qubit_hi, AngleExpr(kEntanglingAngle));
}

}  // namespace

std::string gamma_slot_name(int index) { return "gamma" + std::to_string(index); }
std::string theta_slot_name(int index) { return "theta" + std::to_string(index); }
std::string phi_slot_name(int index) { return "phi" + std::to_string(index); }

Circuit build_t_module(int qubit_lo, int qubit_hi, const std::string& slot_prefix) {
  Circuit circuit(kNumQubits);
  int slots[6];
  for (int i = 0; i < 6; ++i) {
    slots[i] = circuit.declare_slot(slot_prefix + std::to_string(i));
  }
  append_t_module(circuit, qubit_lo, qubit_hi, slots);
  return circuit;
}

Circuit build_u_theta() {
  Circuit circuit(kNumQubits);
  int slots[kThetaCount];
  for (int i = 0; i < kThetaCount; ++i) slots[i] = circuit.declare_slot(theta_slot_name(i));
  for (int m = 0; m < 4; ++m) {
    append_t_module(circuit, kTModulePairs[m][0], kTModulePairs[m][1], slots + 6 * m);
  }
  return circuit;
}

Circuit build_v_phi() {
  Circuit circuit(kNumQubits);
  int slots[kPhiCount];
  for (int i = 0; i < kPhiCount; ++i) slots[i] = circuit.declare_slot(phi_slot_name(i));
  for (int m = 0; m < 3; ++m) {
    append_t_module(circuit, kTModulePairs[m][0], kTModulePairs[m][1], slots + 6 * m);
  }
  return circuit;
}

Circuit build_a_gamma(const BinaryImage& image) {
  Circuit circuit(kNumQubits);
  int gamma[kGammaCount];
  for (int i = 0; i < kGammaCount; ++i) gamma[i] = circuit.declare_slot(gamma_slot_name(i));

  // Encoding module M, repeated over the four quadrants.
  for (int q = 0; q < 4; ++q) {
    const auto bits = image.quadrant_bits(q);
    for (int p = 0; p < kNumPairs; ++p) {
      if (bits[static_cast<std::size_t>(kPairs[p][0])] &&
          bits[static_cast<std::size_t>(kPairs[p][1])]) {
        circuit.xx(kPairs[p][0], kPairs[p][1], AngleExpr(kEntanglingAngle));
      }
    }
    for (int k = 0; k < 4; ++k) {
      circuit.rx(k, AngleExpr::slot_ref(bits[static_cast<std::size_t>(k)] ? gamma[1] : gamma[0]));
    }
  }

  // Aggregation module N over the quadrant sums; a sum of two or more
  // counts as a one for the entangling layer.
  int sums[4];
  for (int q = 0; q < 4; ++q) sums[q] = image.quadrant_sum(q);
  for (int p = 0; p < kNumPairs; ++p) {
    if (sums[kPairs[p][0]] >= 2 && sums[kPairs[p][1]] >= 2) {
      circuit.xx(kPairs[p][0], kPairs[p][1], AngleExpr(kEntanglingAngle));
    }
  }
  for (int k = 0; k < 4; ++k) {
    AngleExpr angle = AngleExpr::slot_ref(gamma[2]);
    angle.add_term(gamma[3], static_cast<double>(sums[k]) / 4.0);
    circuit.rx(k, std::move(angle));
  }
  return circuit;
}

Circuit build_feature_circuit(const BinaryImage& image) {
  Circuit circuit = build_u_theta();
  circuit.append(build_a_gamma(image));
  return circuit;
}

Circuit build_overlap_circuit(const BinaryImage& x_i, const BinaryImage& x_j) {
  Circuit circuit = build_u_theta();
  circuit.append(build_a_gamma(x_j));
  circuit.append(build_a_gamma(x_i).adjoint());
  circuit.append(build_u_theta().adjoint());
  return circuit;
}

Circuit build_classifier_circuit(const BinaryImage& image) {
  Circuit circuit = build_feature_circuit(image);
  circuit.append(build_v_phi());
  return circuit;
}

SlotBinder::SlotBinder(const Circuit& circuit) {
  plan_.reserve(static_cast<std::size_t>(circuit.slot_count()));
  for (const std::string& name : circuit.slot_names()) {
    Entry entry{};
    std::string_view view(name);
    if (view.starts_with("gamma")) {
      entry.group = Group::kGamma;
      entry.index = std::stoi(name.substr(5));
    } else if (view.starts_with("theta")) {
      entry.group = Group::kTheta;
      entry.index = std::stoi(name.substr(5));
    } else if (view.starts_with("phi")) {
      entry.group = Group::kPhi;
      entry.index = std::stoi(name.substr(3));
    } else {
      throw std::invalid_argument("SlotBinder: unrecognized slot name '" + name + "'");
    }
    plan_.push_back(entry);
  }
}

void SlotBinder::bind(std::span<const double> gamma, std::span<const double> theta,
                      std::span<const double> phi, std::vector<double>& values) const {
  values.resize(plan_.size());
  for (std::size_t i = 0; i < plan_.size(); ++i) {
    const Entry& e = plan_[i];
    const std::span<const double>& group =
        e.group == Group::kGamma ? gamma : (e.group == Group::kTheta ? theta : phi);
    if (static_cast<std::size_t>(e.index) >= group.size()) {
      throw std::invalid_argument("SlotBinder: parameter group too short for slot index " +
                                  std::to_string(e.index));
    }
    values[i] = group[static_cast<std::size_t>(e.index)];
  }
}

}  // namespace qcl
