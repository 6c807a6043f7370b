#include "qcl/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qcl {

double AngleExpr::evaluate(std::span<const double> slot_values) const {
  double value = constant_;
  for (const Term& t : terms_) {
    value += t.coeff * slot_values[static_cast<std::size_t>(t.slot)];
  }
  return value;
}

AngleExpr AngleExpr::negated() const {
  AngleExpr out;
  out.constant_ = -constant_;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.slot, -t.coeff});
  return out;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("Circuit: qubit count must be positive");
}

int Circuit::declare_slot(const std::string& name) {
  if (auto existing = find_slot(name)) return *existing;
  slot_names_.push_back(name);
  return static_cast<int>(slot_names_.size()) - 1;
}

std::optional<int> Circuit::find_slot(std::string_view name) const {
  for (std::size_t i = 0; i < slot_names_.size(); ++i) {
    if (slot_names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

void Circuit::check_target(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("instruction target out of range: qubit " +
                                std::to_string(qubit));
  }
}

void Circuit::check_expr(const AngleExpr& angle) const {
  for (const auto& t : angle.terms()) {
    if (t.slot < 0 || t.slot >= slot_count()) {
      throw std::invalid_argument("angle references undeclared slot " +
                                  std::to_string(t.slot));
    }
  }
}

void Circuit::rx(int qubit, AngleExpr angle) {
  check_target(qubit);
  check_expr(angle);
  instructions_.push_back({GateKind::kRx, qubit, -1, std::move(angle)});
}

void Circuit::rz(int qubit, AngleExpr angle) {
  check_target(qubit);
  check_expr(angle);
  instructions_.push_back({GateKind::kRz, qubit, -1, std::move(angle)});
}

void Circuit::xx(int qubit_a, int qubit_b, AngleExpr angle) {
  check_target(qubit_a);
  check_target(qubit_b);
  if (qubit_a == qubit_b) throw std::invalid_argument("XX targets must be distinct");
  check_expr(angle);
  instructions_.push_back({GateKind::kXx, qubit_a, qubit_b, std::move(angle)});
}

Circuit Circuit::adjoint() const {
  Circuit out(n_qubits_);
  out.slot_names_ = slot_names_;
  out.instructions_.reserve(instructions_.size());
  for (auto it = instructions_.rbegin(); it != instructions_.rend(); ++it) {
    out.instructions_.push_back({it->kind, it->target0, it->target1, it->angle.negated()});
  }
  return out;
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("append: qubit counts differ");
  }
  std::vector<int> slot_map(other.slot_names_.size());
  for (std::size_t i = 0; i < other.slot_names_.size(); ++i) {
    slot_map[i] = declare_slot(other.slot_names_[i]);
  }
  for (const GateInstruction& ins : other.instructions_) {
    AngleExpr remapped(ins.angle.constant());
    for (const auto& t : ins.angle.terms()) {
      remapped.add_term(slot_map[static_cast<std::size_t>(t.slot)], t.coeff);
    }
    instructions_.push_back({ins.kind, ins.target0, ins.target1, std::move(remapped)});
  }
}

int Circuit::count_kind(GateKind kind) const {
  return static_cast<int>(std::count_if(
      instructions_.begin(), instructions_.end(),
      [kind](const GateInstruction& g) { return g.kind == kind; }));
}

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_expr(const AngleExpr& expr, const std::vector<std::string>& slots) {
  if (expr.is_literal()) return format_number(expr.constant());
  std::string out;
  bool first = true;
  for (const auto& t : expr.terms()) {
    const std::string& name = slots[static_cast<std::size_t>(t.slot)];
    if (t.coeff == 1.0) {
      out += first ? name : "+" + name;
    } else if (t.coeff == -1.0) {
      out += "-" + name;
    } else {
      std::string c = format_number(t.coeff);
      if (!first && t.coeff > 0) out += "+";
      out += c + "*" + name;
    }
    first = false;
  }
  if (expr.constant() != 0.0) {
    if (expr.constant() > 0) out += "+";
    out += format_number(expr.constant());
  }
  return out;
}

}  // namespace

std::string Circuit::to_text() const {
  std::string out = "qubits " + std::to_string(n_qubits_) + "\n";
  if (!slot_names_.empty()) {
    out += "slots";
    for (const auto& s : slot_names_) out += " " + s;
    out += "\n";
  }
  for (const GateInstruction& ins : instructions_) {
    switch (ins.kind) {
      case GateKind::kRx: out += "rx q" + std::to_string(ins.target0); break;
      case GateKind::kRz: out += "rz q" + std::to_string(ins.target0); break;
      case GateKind::kXx:
        out += "xx q" + std::to_string(ins.target0) + " q" + std::to_string(ins.target1);
        break;
    }
    out += " " + format_expr(ins.angle, slot_names_) + "\n";
  }
  return out;
}

void apply_gate(StateVector& state, const GateInstruction& gate, double angle) {
  switch (gate.kind) {
    case GateKind::kRx: state.apply_rx(gate.target0, angle); break;
    case GateKind::kRz: state.apply_rz(gate.target0, angle); break;
    case GateKind::kXx: state.apply_xx(gate.target0, gate.target1, angle); break;
  }
}

StateVector run_circuit(const Circuit& circuit, std::span<const double> slot_values) {
  if (static_cast<int>(slot_values.size()) != circuit.slot_count()) {
    throw std::invalid_argument(
        "run_circuit: binding covers " + std::to_string(slot_values.size()) +
        " slots, circuit declares " + std::to_string(circuit.slot_count()));
  }
  StateVector state(circuit.n_qubits());
  for (const GateInstruction& ins : circuit.instructions()) {
    apply_gate(state, ins, ins.angle.evaluate(slot_values));
  }
  return state;
}

}  // namespace qcl
