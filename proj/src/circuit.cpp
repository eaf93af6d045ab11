#include "littlent/circuit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace littlent {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '#')
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), int(i + 1)});
    i = j;
  }
  return out;
}

bool parse_int(const std::string& s, long& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc() && res.ptr == e;
}

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc() && res.ptr == e;
}

std::string fmt_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_17(double v) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct LineParser {
  std::vector<ParseDiagnostic>& diags;
  int line_no;
  bool failed = false;

  void error(int column, std::string message) {
    diags.push_back({line_no, column, std::move(message),
                     ParseDiagnostic::Severity::Error});
    failed = true;
  }
};

}  // namespace

ParseResult parse_circuit(std::string_view text) {
  ParseResult result;
  std::vector<ParseDiagnostic>& diags = result.diagnostics;

  Circuit circuit;
  bool have_header = false;
  bool any_error = false;

  std::vector<std::string_view> lines;
  {
    size_t start = 0;
    while (start <= text.size()) {
      size_t nl = text.find('\n', start);
      std::string_view line = nl == std::string_view::npos
                                  ? text.substr(start)
                                  : text.substr(start, nl - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  for (size_t li = 0; li < lines.size(); ++li) {
    std::vector<Token> toks = tokenize(lines[li]);
    if (toks.empty()) continue;
    LineParser lp{diags, int(li + 1)};

    auto qubit_index = [&](const Token& t, long& q) {
      if (!parse_int(t.text, q) || q < 0) {
        lp.error(t.column, "expected a qubit index, got '" + t.text + "'");
        return false;
      }
      if (have_header && q >= circuit.n) {
        lp.error(t.column, "qubit index " + t.text + " is out of range for " +
                               std::to_string(circuit.n) + " qubits");
        return false;
      }
      return true;
    };

    if (toks[0].text == "qubits") {
      if (have_header) {
        lp.error(toks[0].column, "duplicate 'qubits' header");
      } else if (toks.size() != 2) {
        lp.error(toks[0].column, "'qubits' takes exactly one count");
      } else {
        long n = 0;
        if (!parse_int(toks[1].text, n) || n < 1 || n > 1000000) {
          lp.error(toks[1].column,
                   "invalid qubit count '" + toks[1].text + "'");
        } else {
          circuit.n = int(n);
          have_header = true;
        }
      }
      any_error |= lp.failed;
      continue;
    }

    if (!have_header && !any_error) {
      lp.error(toks[0].column,
               "missing 'qubits' header before the first instruction");
    }

    // ctrl prefix chain
    GateInstance gate;
    size_t pos = 0;
    while (pos < toks.size() && toks[pos].text == "ctrl") {
      if (pos + 1 >= toks.size()) {
        lp.error(toks[pos].column, "'ctrl' needs a qubit index");
        break;
      }
      long q = 0;
      if (!qubit_index(toks[pos + 1], q)) break;
      gate.controls.push_back(int(q));
      pos += 2;
    }
    if (lp.failed) {
      any_error = true;
      continue;
    }
    if (pos >= toks.size()) {
      lp.error(toks.empty() ? 1 : toks.back().column,
               "expected a gate after 'ctrl' prefix");
      any_error = true;
      continue;
    }

    const Token& mn = toks[pos];
    size_t rest = pos + 1;
    auto take_targets = [&](size_t count) {
      if (toks.size() - rest != count) {
        lp.error(mn.column, "'" + mn.text + "' expects " +
                                std::to_string(count) + " qubit index" +
                                (count == 1 ? "" : "es"));
        return false;
      }
      for (size_t i = 0; i < count; ++i) {
        long q = 0;
        if (!qubit_index(toks[rest + i], q)) return false;
        gate.targets.push_back(int(q));
      }
      return true;
    };

    if (mn.text == "x" || mn.text == "y" || mn.text == "z" || mn.text == "h" ||
        mn.text == "s" || mn.text == "t") {
      gate.kind = mn.text == "x"   ? GateKind::X
                  : mn.text == "y" ? GateKind::Y
                  : mn.text == "z" ? GateKind::Z
                  : mn.text == "h" ? GateKind::H
                  : mn.text == "s" ? GateKind::S
                                   : GateKind::T;
      take_targets(1);
    } else if (mn.text == "cnot") {
      gate.kind = GateKind::CNOT;
      take_targets(2);
    } else if (mn.text == "ry") {
      gate.kind = GateKind::RY;
      if (toks.size() - rest != 2) {
        lp.error(mn.column, "'ry' expects an angle and one qubit index");
      } else {
        double theta = 0.0;
        if (!parse_double(toks[rest].text, theta)) {
          lp.error(toks[rest].column,
                   "invalid angle '" + toks[rest].text + "'");
        } else {
          gate.params.push_back(theta);
          long q = 0;
          if (qubit_index(toks[rest + 1], q)) gate.targets.push_back(int(q));
        }
      }
    } else if (mn.text == "unitary") {
      gate.kind = GateKind::Unitary;
      size_t count = toks.size() - rest;
      int n_targets = count == 1 + 8 ? 1 : count == 2 + 32 ? 2 : 0;
      if (n_targets == 0) {
        lp.error(mn.column,
                 "'unitary' expects <q> plus 8 numbers or <q> <q> plus 32 "
                 "numbers");
      } else {
        bool ok = true;
        for (int i = 0; i < n_targets && ok; ++i) {
          long q = 0;
          ok = qubit_index(toks[rest + i], q);
          if (ok) gate.targets.push_back(int(q));
        }
        if (ok) {
          int dim = 1 << n_targets;
          gate.matrix.resize(dim, dim);
          size_t k = rest + n_targets;
          for (int r = 0; r < dim && ok; ++r) {
            for (int c = 0; c < dim && ok; ++c) {
              double re = 0.0, im = 0.0;
              if (!parse_double(toks[k].text, re) ||
                  !parse_double(toks[k + 1].text, im)) {
                lp.error(toks[k].column, "invalid matrix entry");
                ok = false;
              } else {
                gate.matrix(r, c) = cplx(re, im);
                k += 2;
              }
            }
          }
          if (ok && !is_unitary(gate.matrix))
            lp.error(mn.column, "explicit matrix is not unitary");
        }
      }
    } else {
      lp.error(mn.column, "unknown mnemonic '" + mn.text + "'");
    }

    if (!lp.failed) {
      std::set<int> seen;
      for (int q : gate.targets) seen.insert(q);
      for (int q : gate.controls) seen.insert(q);
      if (int(seen.size()) != gate.touched_qubits())
        lp.error(mn.column, "repeated qubit within one instruction");
      else if (gate.touched_qubits() > 3)
        lp.error(mn.column, "instruction touches more than 3 qubits");
    }

    if (lp.failed)
      any_error = true;
    else
      circuit.gates.push_back(std::move(gate));
  }

  if (!have_header && !any_error) {
    diags.push_back(
        {1, 1, "missing 'qubits' header", ParseDiagnostic::Severity::Error});
    any_error = true;
  }
  if (!any_error) result.circuit = std::move(circuit);
  return result;
}

std::string serialize_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n) + "\n";
  for (const GateInstance& g : c.gates) {
    std::string line;
    for (int q : g.controls) line += "ctrl " + std::to_string(q) + " ";
    line += gate_name(g.kind);
    if (g.kind == GateKind::RY) line += " " + fmt_shortest(g.params.at(0));
    for (int q : g.targets) line += " " + std::to_string(q);
    if (g.kind == GateKind::Unitary) {
      for (Eigen::Index r = 0; r < g.matrix.rows(); ++r)
        for (Eigen::Index col = 0; col < g.matrix.cols(); ++col)
          line += " " + fmt_17(g.matrix(r, col).real()) + " " +
                  fmt_17(g.matrix(r, col).imag());
    }
    out += line + "\n";
  }
  return out;
}

std::vector<ParseDiagnostic> validate_circuit(const Circuit& c) {
  std::vector<ParseDiagnostic> diags;
  auto err = [&](std::string msg) {
    diags.push_back({0, 0, std::move(msg), ParseDiagnostic::Severity::Error});
  };
  if (c.n < 1) err("qubit count must be >= 1");
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const GateInstance& g = c.gates[i];
    std::set<int> seen;
    for (int q : g.targets) seen.insert(q);
    for (int q : g.controls) seen.insert(q);
    std::string at = "gate " + std::to_string(i) + ": ";
    for (int q : seen)
      if (q < 0 || q >= c.n) err(at + "qubit index out of range");
    if (int(seen.size()) != g.touched_qubits())
      err(at + "repeated qubit within one instruction");
    if (g.touched_qubits() > 3) err(at + "touches more than 3 qubits");
    try {
      gate_matrix(g);
    } catch (const std::exception& e) {
      err(at + e.what());
    }
  }
  return diags;
}

bool validate_universal_set(const Circuit& c) {
  for (const GateInstance& g : c.gates) {
    if (!g.controls.empty()) return false;
    if (g.kind != GateKind::H && g.kind != GateKind::T &&
        g.kind != GateKind::CNOT)
      return false;
  }
  return true;
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.n != b.n || a.gates.size() != b.gates.size()) return false;
  for (size_t i = 0; i < a.gates.size(); ++i) {
    const GateInstance& x = a.gates[i];
    const GateInstance& y = b.gates[i];
    if (x.kind != y.kind || x.params != y.params || x.targets != y.targets ||
        x.controls != y.controls)
      return false;
    if (x.matrix.rows() != y.matrix.rows() ||
        x.matrix.cols() != y.matrix.cols())
      return false;
    if (x.matrix.size() > 0 && x.matrix != y.matrix) return false;
  }
  return true;
}

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diags,
                               std::string_view source_name) {
  std::ostringstream out;
  for (const ParseDiagnostic& d : diags) {
    if (!source_name.empty()) out << source_name << ":";
    out << d.line << ":" << d.column << ": "
        << (d.severity == ParseDiagnostic::Severity::Error ? "error"
                                                           : "warning")
        << ": " << d.message << "\n";
  }
  return out.str();
}

}  // namespace littlent
