#include "qcl/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcl {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("StateVector: qubit count out of range: " +
                                std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

std::size_t StateVector::bit_mask(int qubit) const {
  return std::size_t{1} << (n_qubits_ - 1 - qubit);
}

void StateVector::check_target(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("gate target out of range: qubit " +
                                std::to_string(qubit) + " on " +
                                std::to_string(n_qubits_) + " qubits");
  }
}

void StateVector::apply_rx(int qubit, double angle) {
  check_target(qubit);
  const double c = std::cos(0.5 * angle);
  const std::complex<double> ms(0.0, -std::sin(0.5 * angle));
  const std::size_t mask = bit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | mask];
    amps_[i] = c * a0 + ms * a1;
    amps_[i | mask] = ms * a0 + c * a1;
  }
}

void StateVector::apply_rz(int qubit, double angle) {
  check_target(qubit);
  const std::complex<double> e0 = std::polar(1.0, -0.5 * angle);
  const std::complex<double> e1 = std::polar(1.0, 0.5 * angle);
  const std::size_t mask = bit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] *= (i & mask) ? e1 : e0;
  }
}

void StateVector::apply_xx(int qubit_a, int qubit_b, double angle) {
  check_target(qubit_a);
  check_target(qubit_b);
  if (qubit_a == qubit_b) {
    throw std::invalid_argument("XX targets must be distinct");
  }
  const double c = std::cos(0.5 * angle);
  const std::complex<double> ms(0.0, -std::sin(0.5 * angle));
  // XX(a) = cos(a/2) I - i sin(a/2) (X(x)X): couples i with both bits flipped.
  const std::size_t mask = bit_mask(qubit_a) | bit_mask(qubit_b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const std::size_t j = i ^ mask;
    if (i >= j) continue;
    const auto ai = amps_[i];
    const auto aj = amps_[j];
    amps_[i] = c * ai + ms * aj;
    amps_[j] = ms * ai + c * aj;
  }
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

std::complex<double> StateVector::inner_product(const StateVector& other) const {
  if (n_qubits_ != other.n_qubits_) {
    throw std::invalid_argument("inner_product: qubit counts differ");
  }
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * other.amps_[i];
  }
  return acc;
}

double sample_probability(double p, int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("sample_probability: shots must be >= 1");
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw std::invalid_argument("sample_probability: p outside [0, 1]");
  }
  p = std::min(1.0, std::max(0.0, p));
  int successes = 0;
  for (int s = 0; s < shots; ++s) {
    if (rng.next_bernoulli(p)) ++successes;
  }
  return static_cast<double>(successes) / static_cast<double>(shots);
}

}  // namespace qcl
