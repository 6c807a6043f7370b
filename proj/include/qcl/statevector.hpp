#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qcl/rng.hpp"

namespace qcl {

// Dense complex-amplitude register of n qubits.
//
// Conventions used throughout the project:
//   - qubit 0 is the most significant bit of the basis-state index, so for
//     four qubits the index of |q0 q1 q2 q3> is q0*8 + q1*4 + q2*2 + q3;
//   - RX(a) = exp(-i a X/2), RZ(a) = exp(-i a Z/2), XX(a) = exp(-i a XX/2).
//     Any fixed maximally entangling XX phase convention would do, because
//     every observable quantity here is a basis-state probability; this one
//     is stated so that all circuit builders agree on it.
//
// Global phase is not meaningful; callers compare squared magnitudes.
class StateVector {
public:
  // Initializes |0...0>.
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::complex<double> amplitude(std::size_t index) const { return amps_.at(index); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  void apply_rx(int qubit, double angle);
  void apply_rz(int qubit, double angle);
  void apply_xx(int qubit_a, int qubit_b, double angle);

  // Squared magnitude of the |0...0> amplitude.
  double prob_all_zeros() const { return std::norm(amps_[0]); }

  double norm_sq() const;

  // <this|other>; states must have the same qubit count.
  std::complex<double> inner_product(const StateVector& other) const;

private:
  std::size_t bit_mask(int qubit) const;
  void check_target(int qubit) const;

  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

// Estimates p from `shots` independent Bernoulli(p) draws on the given
// stream. Deterministic for a fixed seed; shots must be >= 1.
double sample_probability(double p, int shots, Rng& rng);

}  // namespace qcl
