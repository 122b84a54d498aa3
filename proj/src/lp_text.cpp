// Copyright 2026 The laa Authors.
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

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "laa/common.hpp"
#include "laa/lp.hpp"

namespace laa {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_expression(std::ostringstream& out, const Eigen::SparseVector<double>& coeffs) {
  bool first = true;
  for (Eigen::SparseVector<double>::InnerIterator it(coeffs); it; ++it) {
    const double v = it.value();
    if (!first || v < 0) out << (v < 0 ? " - " : " + ");
    out << number(std::abs(v)) << " x" << it.index();
    first = false;
  }
  if (first) out << " 0 x0";
}

}  // namespace

std::string write_lp_text(const LpProblem& problem) {
  std::ostringstream out;
  out << "\\ generated by laa\nMaximize\n obj:";
  write_expression(out, problem.objective.sparseView());
  out << "\nSubject To\n";
  int row = 0;
  for (const auto& c : problem.constraints) {
    if (std::isfinite(c.lower)) {
      out << " c" << row << "_lo:";
      write_expression(out, c.coeffs);
      out << " >= " << number(c.lower) << '\n';
    }
    if (std::isfinite(c.upper)) {
      out << " c" << row << "_hi:";
      write_expression(out, c.coeffs);
      out << " <= " << number(c.upper) << '\n';
    }
    ++row;
  }
  out << "Bounds\n";
  for (int j = 0; j < problem.n; ++j) out << " 0 <= x" << j << " <= 1\n";
  out << "End\n";
  return out.str();
}

namespace {

// Parses "[label:] term term ... [op rhs]" into coefficients.
struct ParsedRow {
  std::vector<std::pair<int, double>> terms;
  std::string op;
  double rhs = 0.0;
};

ParsedRow parse_row(const std::string& body, int line) {
  ParsedRow row;
  std::string text = body;
  if (auto colon = text.find(':'); colon != std::string::npos) text = text.substr(colon + 1);
  for (const char* op : {"<=", ">=", "="}) {
    if (auto pos = text.find(op); pos != std::string::npos) {
      row.op = op;
      try {
        row.rhs = std::stod(text.substr(pos + std::string(op).size()));
      } catch (const std::exception&) {
        throw ParseError(line, "bad right-hand side");
      }
      text = text.substr(0, pos);
      break;
    }
  }
  std::istringstream in(text);
  double sign = 1.0;
  double coeff = 1.0;
  bool have_coeff = false;
  for (std::string tok; in >> tok;) {
    if (tok == "+" || tok == "-") {
      sign = tok == "-" ? -1.0 : 1.0;
      continue;
    }
    if (tok[0] == 'x') {
      int idx;
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw ParseError(line, "bad variable '" + tok + "'");
      }
      row.terms.emplace_back(idx, sign * (have_coeff ? coeff : 1.0));
      sign = 1.0;
      have_coeff = false;
      continue;
    }
    try {
      coeff = std::stod(tok);
      have_coeff = true;
    } catch (const std::exception&) {
      throw ParseError(line, "unexpected token '" + tok + "'");
    }
  }
  return row;
}

}  // namespace

LpProblem read_lp_text(std::string_view text) {
  enum class Section { kNone, kObjective, kConstraints, kBounds, kEnd } section = Section::kNone;
  std::vector<std::pair<int, double>> objective;
  bool minimize = false;
  std::vector<ParsedRow> rows;
  int max_index = -1;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto slash = line.find('\\'); slash != std::string::npos) line = line.substr(0, slash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (first == "Maximize" || first == "Minimize") {
      minimize = first == "Minimize";
      section = Section::kObjective;
      continue;
    }
    if (first == "Subject") {
      section = Section::kConstraints;
      continue;
    }
    if (first == "Bounds") {
      section = Section::kBounds;
      continue;
    }
    if (first == "End") {
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kObjective: {
        auto row = parse_row(line, line_no);
        for (const auto& t : row.terms) {
          objective.push_back(t);
          max_index = std::max(max_index, t.first);
        }
        break;
      }
      case Section::kConstraints: {
        auto row = parse_row(line, line_no);
        if (row.op.empty()) throw ParseError(line_no, "constraint without relation");
        for (const auto& t : row.terms) max_index = std::max(max_index, t.first);
        rows.push_back(std::move(row));
        break;
      }
      case Section::kBounds: {
        // Only the unit box is supported.
        if (line.find("0 <= x") == std::string::npos || line.find("<= 1") == std::string::npos)
          throw ParseError(line_no, "only 0 <= x <= 1 bounds are supported");
        const auto pos = line.find('x');
        max_index = std::max(max_index, std::stoi(line.substr(pos + 1)));
        break;
      }
      default:
        throw ParseError(line_no, "content outside a section");
    }
  }
  LpProblem p;
  p.n = max_index + 1;
  p.objective = Eigen::VectorXd::Zero(p.n);
  for (const auto& [j, v] : objective) p.objective(j) += minimize ? -v : v;
  for (const auto& row : rows) {
    Eigen::VectorXd dense = Eigen::VectorXd::Zero(p.n);
    for (const auto& [j, v] : row.terms) dense(j) += v;
    const double lower = row.op == "<=" ? -kInf : row.rhs;
    const double upper = row.op == ">=" ? kInf : row.rhs;
    p.constraints.push_back(make_constraint(dense, lower, upper));
  }
  return p;
}

}  // namespace laa
