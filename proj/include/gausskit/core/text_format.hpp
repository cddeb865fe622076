// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented circuit text format:
//
//   QUBITS data=<n> ancilla=<a> alpha=<v> [log_alpha=<l>]
//   A <exp> q<t> [eps=<e>]
//   B <exp> q<t> [c<j>[!]] [c<k>[!]] [eps=<e>]
//   Z <exp> q<t> [c<j>[!]]... [eps=<e>]
//   H q<t>
//   X q<t>
//   CNOT c<j>[!] q<t>
//   MEASURE a<i>,a<j>,...
//
// q/c indices are absolute qubit indices, a<i> indexes the ancilla register.
// '!' marks an open control. Blank lines and lines starting with '#' are
// ignored. Reals are written with 17 significant digits so export/import is
// lossless.

#pragma once

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gausskit/core/circuit.hpp"

namespace gausskit {

namespace text_detail {

inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline double parse_real(std::string_view s, std::size_t line, const char* what) {
  std::string str(s);
  if (str.empty()) throw ParseError(line, std::string("missing ") + what);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(str.c_str(), &end);
  if (end != str.c_str() + str.size() || errno == ERANGE) {
    throw ParseError(line, std::string("bad ") + what + " '" + str + "'");
  }
  return v;
}

inline std::size_t parse_index(std::string_view s, std::size_t line, const char* what) {
  if (s.empty()) throw ParseError(line, std::string("missing ") + what);
  std::size_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') {
      throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    v = v * 10 + static_cast<std::size_t>(ch - '0');
    if (v > (std::size_t{1} << 40)) throw ParseError(line, "index too large");
  }
  return v;
}

inline Qubit parse_prefixed(const std::string& tok, char prefix, std::size_t line) {
  if (tok.size() < 2 || tok[0] != prefix) {
    throw ParseError(line, std::string("expected ") + prefix + "<index>, got '" + tok + "'");
  }
  return parse_index(std::string_view(tok).substr(1), line, "qubit index");
}

inline Control parse_control(const std::string& tok, std::size_t line) {
  std::string body = tok;
  Polarity pol = Polarity::Closed;
  if (!body.empty() && body.back() == '!') {
    pol = Polarity::Open;
    body.pop_back();
  }
  return {parse_prefixed(body, 'c', line), pol};
}

inline std::string control_token(const Control& c) {
  return "c" + std::to_string(c.qubit) + (c.polarity == Polarity::Open ? "!" : "");
}

}  // namespace text_detail

inline void write_circuit(std::ostream& out, const Circuit& c) {
  using text_detail::fmt_real;
  out << "QUBITS data=" << c.data_qubits << " ancilla=" << c.ancilla_qubits
      << " alpha=" << fmt_real(c.alpha.value());
  if (c.alpha.is_window()) out << " log_alpha=" << fmt_real(c.alpha.log());
  out << '\n';
  for (const Element& e : c.elements) {
    if (const auto* m = std::get_if<MeasureBarrier>(&e)) {
      out << "MEASURE ";
      for (std::size_t i = 0; i < m->ancilla.size(); ++i) {
        out << (i ? "," : "") << 'a' << m->ancilla[i];
      }
      out << '\n';
      continue;
    }
    const Gate& g = std::get<Gate>(e);
    switch (g.kind.type) {
      case GateType::A:
      case GateType::B:
      case GateType::Z:
        out << gate_name(g.kind.type) << ' ' << fmt_real(g.kind.exponent) << " q"
            << g.target;
        for (const Control& k : g.controls) out << ' ' << text_detail::control_token(k);
        break;
      case GateType::Hadamard:
      case GateType::PauliX:
        out << gate_name(g.kind.type) << " q" << g.target;
        break;
      case GateType::CNOT:
        out << "CNOT";
        for (const Control& k : g.controls) out << ' ' << text_detail::control_token(k);
        out << " q" << g.target;
        break;
    }
    if (g.synthesis_error) out << " eps=" << fmt_real(*g.synthesis_error);
    out << '\n';
  }
}

inline std::string to_text(const Circuit& c) {
  std::ostringstream s;
  write_circuit(s, c);
  return s.str();
}

/// Parses the text format. Throws ParseError carrying the 1-based line number.
inline Circuit read_circuit(std::istream& in) {
  using namespace text_detail;
  Circuit c;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& op = toks[0];

    if (op == "QUBITS") {
      if (have_header) throw ParseError(lineno, "duplicate QUBITS header");
      double alpha = std::numeric_limits<double>::quiet_NaN();
      double log_alpha = std::numeric_limits<double>::quiet_NaN();
      bool seen_data = false, seen_anc = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key=value");
        const std::string key = toks[i].substr(0, eq);
        const std::string_view val = std::string_view(toks[i]).substr(eq + 1);
        if (key == "data") {
          c.data_qubits = parse_index(val, lineno, "data count");
          seen_data = true;
        } else if (key == "ancilla") {
          c.ancilla_qubits = parse_index(val, lineno, "ancilla count");
          seen_anc = true;
        } else if (key == "alpha") {
          alpha = parse_real(val, lineno, "alpha");
        } else if (key == "log_alpha") {
          log_alpha = parse_real(val, lineno, "log_alpha");
        } else {
          throw ParseError(lineno, "unknown header field '" + key + "'");
        }
      }
      if (!seen_data || !seen_anc || std::isnan(alpha)) {
        throw ParseError(lineno, "header needs data=, ancilla= and alpha=");
      }
      try {
        c.alpha = std::isnan(log_alpha) ? ExpBase::from_alpha(alpha)
                                        : ExpBase::from_log(log_alpha);
      } catch (const ParameterError& e) {
        throw ParseError(lineno, e.what());
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "circuit must start with QUBITS header");

    if (op == "MEASURE") {
      if (toks.size() != 2) throw ParseError(lineno, "MEASURE takes one comma list");
      MeasureBarrier m;
      std::string_view rest = toks[1];
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string item(rest.substr(0, comma));
        m.ancilla.push_back(parse_prefixed(item, 'a', lineno));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      c.elements.emplace_back(std::move(m));
      continue;
    }

    Gate g;
    std::size_t pos = 1;
    auto take_eps = [&](std::size_t from) {
      for (std::size_t i = from; i < toks.size(); ++i) {
        if (toks[i].rfind("eps=", 0) == 0) {
          if (i + 1 != toks.size()) throw ParseError(lineno, "eps= must be last");
          g.synthesis_error = parse_real(std::string_view(toks[i]).substr(4), lineno, "eps");
          return i;
        }
      }
      return toks.size();
    };

    if (op == "A" || op == "B" || op == "Z") {
      if (toks.size() < 3) throw ParseError(lineno, op + " needs exponent and target");
      const double exp = parse_real(toks[1], lineno, "exponent");
      g.kind = op == "A" ? RotationKind::A(exp)
               : op == "B" ? RotationKind::B(exp)
                           : RotationKind::Z(exp);
      g.target = parse_prefixed(toks[2], 'q', lineno);
      const std::size_t end = take_eps(3);
      for (pos = 3; pos < end; ++pos) g.controls.push_back(parse_control(toks[pos], lineno));
    } else if (op == "H" || op == "X") {
      g.kind = op == "H" ? RotationKind::H() : RotationKind::X();
      if (take_eps(2) != 2) throw ParseError(lineno, op + " takes exactly one target");
      g.target = parse_prefixed(toks[1], 'q', lineno);
    } else if (op == "CNOT") {
      const std::size_t end = take_eps(1);
      if (end != 3) throw ParseError(lineno, "CNOT takes one control and one target");
      g.kind = RotationKind::CNOT();
      g.controls.push_back(parse_control(toks[1], lineno));
      g.target = parse_prefixed(toks[2], 'q', lineno);
    } else {
      throw ParseError(lineno, "unknown element '" + op + "'");
    }
    c.elements.emplace_back(std::move(g));
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing QUBITS header");
  return c;
}

inline Circuit from_text(const std::string& text) {
  std::istringstream s(text);
  return read_circuit(s);
}

}  // namespace gausskit
