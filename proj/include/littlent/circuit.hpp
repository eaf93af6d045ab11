#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "littlent/gate.hpp"

namespace littlent {

struct Circuit {
  int n = 0;
  std::vector<GateInstance> gates;
  std::string name;  // optional label, not part of the text format
};

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  Severity severity = Severity::Error;
};

struct ParseResult {
  std::optional<Circuit> circuit;
  std::vector<ParseDiagnostic> diagnostics;
  bool ok() const { return circuit.has_value(); }
};

// Line-oriented circuit text format.
//
//   qubits N                  required header, first statement
//   x|y|z|h|s|t <q>           one-qubit gates
//   ry <angle> <q>            angle in radians, decimal floating point
//   cnot <qc> <qt>            control then target
//   unitary <q...> <re im>*   explicit 1- or 2-qubit unitary, row-major
//   ctrl <q> ...              prefix adding a control to the gate on the line
//   # comment                 blank lines ignored; LF or CRLF accepted
//
// At most 3 qubits may be touched per instruction, controls included.
// Parsing is total: any input yields either a Circuit or a nonempty
// diagnostic list, never both.
ParseResult parse_circuit(std::string_view text);

// Canonical text (LF line endings); parse(serialize(c)) is structurally
// equal to c. Gate parameters use shortest round-trip decimals; unitary
// matrix entries use 17 significant digits.
std::string serialize_circuit(const Circuit& c);

// Structural checks mirroring the parser's rules; empty means valid.
std::vector<ParseDiagnostic> validate_circuit(const Circuit& c);

// True iff every gate is an uncontrolled H, T or CNOT.
bool validate_universal_set(const Circuit& c);

// Equality on (n, gates); names are ignored.
bool structurally_equal(const Circuit& a, const Circuit& b);

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diags,
                               std::string_view source_name = "");

}  // namespace littlent
