#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcl/statevector.hpp"

namespace qcl {

enum class GateKind { kRx, kRz, kXx };

// Gate angle as an affine expression over a circuit's parameter slots:
// constant + sum(coeff * slot_value). A literal angle has no terms. The
// builders here need at most two terms (aggregation rotations combine two
// encoder parameters), but the form is general.
class AngleExpr {
public:
  struct Term {
    int slot;
    double coeff;
  };

  AngleExpr() = default;
  explicit AngleExpr(double constant) : constant_(constant) {}

  static AngleExpr slot_ref(int slot, double coeff = 1.0) {
    AngleExpr e;
    e.terms_.push_back({slot, coeff});
    return e;
  }

  AngleExpr& add_term(int slot, double coeff) {
    terms_.push_back({slot, coeff});
    return *this;
  }

  bool is_literal() const { return terms_.empty(); }
  double constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }

  double evaluate(std::span<const double> slot_values) const;

  AngleExpr negated() const;

  bool operator==(const AngleExpr&) const = default;

private:
  double constant_ = 0.0;
  std::vector<Term> terms_;
};

struct GateInstruction {
  GateKind kind;
  int target0;
  int target1;  // -1 for single-qubit gates
  AngleExpr angle;

  bool operator==(const GateInstruction&) const = default;
};

// Ordered list of parameterized gate instructions over named slots.
// Circuits are cheap value types; builders construct them once and callers
// bind slot values at execution time.
class Circuit {
public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }

  // Declares (or finds) a named parameter slot; returns its index.
  int declare_slot(const std::string& name);
  int slot_count() const { return static_cast<int>(slot_names_.size()); }
  const std::vector<std::string>& slot_names() const { return slot_names_; }
  std::optional<int> find_slot(std::string_view name) const;

  void rx(int qubit, AngleExpr angle);
  void rz(int qubit, AngleExpr angle);
  void xx(int qubit_a, int qubit_b, AngleExpr angle);

  const std::vector<GateInstruction>& instructions() const { return instructions_; }

  // Reversed instruction order with negated angles; RX, RZ and XX are each
  // self-adjoint under angle negation. Slot table is preserved.
  Circuit adjoint() const;

  // Appends another circuit's instructions, merging parameter slots by name.
  void append(const Circuit& other);

  int count_kind(GateKind kind) const;

  // Line-based text form, one instruction per line, for debugging and
  // golden tests.
  std::string to_text() const;

  bool operator==(const Circuit&) const = default;

private:
  void check_target(int qubit) const;
  void check_expr(const AngleExpr& angle) const;

  int n_qubits_;
  std::vector<GateInstruction> instructions_;
  std::vector<std::string> slot_names_;
};

// Applies one concrete-angle gate to a state.
void apply_gate(StateVector& state, const GateInstruction& gate, double angle);

// Runs the circuit from |0...0> with the given slot values (positional,
// matching the circuit's slot table). Throws std::invalid_argument when the
// binding does not cover every slot.
StateVector run_circuit(const Circuit& circuit, std::span<const double> slot_values);

}  // namespace qcl
