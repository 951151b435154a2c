// Copyright 2026 The qroute Authors
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

#include "qroute/milp/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qroute::milp {

namespace {

constexpr std::size_t kWrapColumn = 240;

std::string number(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

class LineWriter {
 public:
  explicit LineWriter(std::ostringstream& out) : out_(out) {}

  void start(const std::string& text) {
    line_ = text;
  }
  void append(const std::string& piece) {
    if (line_.size() + piece.size() > kWrapColumn) {
      out_ << line_ << '\n';
      line_ = " ";
      std::string trimmed = piece;
      if (!trimmed.empty() && trimmed[0] == ' ') trimmed.erase(0, 1);
      line_ += trimmed;
    } else {
      line_ += piece;
    }
  }
  void finish() {
    out_ << line_ << '\n';
    line_.clear();
  }

 private:
  std::ostringstream& out_;
  std::string line_;
};

void write_terms(LineWriter& w, const MilpModel& model,
                 const std::vector<Term>& terms) {
  bool first = true;
  for (const Term& t : terms) {
    const std::string& name = model.variable(t.var).name;
    double c = t.coef;
    std::string piece = first ? " " : (c < 0 ? " - " : " + ");
    if (first && c < 0) piece += "-";
    double mag = std::abs(c);
    if (mag != 1.0) piece += number(mag) + " ";
    piece += name;
    w.append(piece);
    first = false;
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const MilpModel& model) {
  std::ostringstream out;
  LineWriter w(out);
  out << "\\ Problem name: " << model.name() << '\n';
  out << "Minimize\n";
  std::vector<Term> obj;
  for (int j = 0; j < model.num_variables(); ++j) {
    if (model.variable(j).cost != 0.0) obj.push_back({j, model.variable(j).cost});
  }
  w.start(" obj:");
  write_terms(w, model, obj);
  w.finish();

  out << "Subject To\n";
  for (const Row& r : model.rows()) {
    w.start(" " + r.name + ":");
    if (r.terms.empty() && model.num_variables() > 0) {
      w.append(" 0 " + model.variable(0).name);
    }
    write_terms(w, model, r.terms);
    w.append(std::string(" ") + sense_text(r.sense) + " " + number(r.rhs));
    w.finish();
  }

  out << "Bounds\n";
  for (const Variable& v : model.variables()) {
    const double dl = 0.0;
    const double du = v.type == VarType::Binary ? 1.0 : kInf;
    if (v.lower == dl && v.upper == du) continue;
    if (v.lower == v.upper) {
      out << ' ' << v.name << " = " << number(v.lower) << '\n';
    } else if (v.lower == -kInf && v.upper == kInf) {
      out << ' ' << v.name << " free\n";
    } else if (v.upper == kInf) {
      out << ' ' << v.name << " >= " << number(v.lower) << '\n';
    } else {
      out << ' ' << number(v.lower) << " <= " << v.name
          << " <= " << number(v.upper) << '\n';
    }
  }

  auto write_names = [&](const char* header, VarType type) {
    bool any = false;
    for (const Variable& v : model.variables()) {
      if (v.type != type) continue;
      if (!any) {
        out << header << '\n';
        w.start("");
        any = true;
      }
      w.append(" " + v.name);
    }
    if (any) w.finish();
  };
  write_names("Binaries", VarType::Binary);
  write_names("Generals", VarType::Integer);
  out << "End\n";
  return out.str();
}

namespace {

enum class Section { None, Objective, Constraints, Bounds, Binaries,
                     Generals, End };

struct Token {
  enum Kind { Name, Number, Op, Colon } kind;
  std::string text;
  double value = 0.0;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ':') {
      out.push_back({Token::Colon, ":"});
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      if (i + 1 < line.size() && (line[i + 1] == '=' || line[i + 1] == '<' ||
                                  line[i + 1] == '>')) {
        op += line[i + 1];
        ++i;
      }
      ++i;
      if (op == "=<" || op == "<") op = "<=";
      if (op == "=>" || op == ">") op = ">=";
      out.push_back({Token::Op, op});
    } else if (c == '+' || c == '-') {
      out.push_back({Token::Op, std::string(1, c)});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) ||
              line[j] == '.' || line[j] == 'e' || line[j] == 'E' ||
              ((line[j] == '+' || line[j] == '-') && j > i &&
               (line[j - 1] == 'e' || line[j - 1] == 'E')))) {
        ++j;
      }
      Token t{Token::Number, line.substr(i, j - i)};
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, t.value);
      if (ec != std::errc()) throw std::invalid_argument("bad number " + t.text);
      out.push_back(std::move(t));
      i = j;
    } else {
      std::size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])) &&
             std::string("<>=:+-").find(line[j]) == std::string::npos) {
        ++j;
      }
      std::string word = line.substr(i, j - i);
      std::string lw = lower(word);
      if (lw == "inf" || lw == "infinity") {
        out.push_back({Token::Number, word, kInf});
      } else {
        out.push_back({Token::Name, word});
      }
      i = j;
    }
  }
  return out;
}

class Reader {
 public:
  MilpModel model{"imported"};

  int column(const std::string& name) {
    if (auto j = model.find_variable(name)) return *j;
    return model.add_variable(name, VarType::Continuous, 0.0, kInf);
  }

  // expr := { [+|-] [number] name }
  std::vector<Term> expression(const std::vector<Token>& t, std::size_t& i) {
    std::vector<Term> terms;
    while (i < t.size()) {
      double sign = 1.0;
      while (i < t.size() && t[i].kind == Token::Op &&
             (t[i].text == "+" || t[i].text == "-")) {
        if (t[i].text == "-") sign = -sign;
        ++i;
      }
      if (i >= t.size() || t[i].kind == Token::Op) break;
      double coef = 1.0;
      if (t[i].kind == Token::Number) {
        coef = t[i].value;
        ++i;
      }
      if (i >= t.size() || t[i].kind != Token::Name) {
        throw std::invalid_argument("expected a variable name");
      }
      terms.push_back({column(t[i].text), sign * coef});
      ++i;
    }
    return terms;
  }

  static double signed_number(const std::vector<Token>& t, std::size_t& i) {
    double sign = 1.0;
    while (i < t.size() && t[i].kind == Token::Op &&
           (t[i].text == "+" || t[i].text == "-")) {
      if (t[i].text == "-") sign = -sign;
      ++i;
    }
    if (i >= t.size() || t[i].kind != Token::Number) {
      throw std::invalid_argument("expected a number");
    }
    return sign * t[i++].value;
  }

  void objective(const std::vector<Token>& t, bool maximize) {
    std::size_t i = 0;
    if (t.size() >= 2 && t[0].kind == Token::Name && t[1].kind == Token::Colon) {
      i = 2;
    }
    for (const Term& term : expression(t, i)) {
      model.set_cost(term.var, model.variable(term.var).cost +
                                   (maximize ? -term.coef : term.coef));
    }
  }

  void constraints(const std::vector<Token>& t) {
    std::size_t i = 0;
    int unnamed = 0;
    while (i < t.size()) {
      std::string name = "R" + std::to_string(++unnamed);
      if (i + 1 < t.size() && t[i].kind == Token::Name &&
          t[i + 1].kind == Token::Colon) {
        name = t[i].text;
        i += 2;
      }
      auto terms = expression(t, i);
      if (i >= t.size() || t[i].kind != Token::Op) {
        throw std::invalid_argument("constraint " + name + " has no sense");
      }
      Sense s = t[i].text == "<=" ? Sense::LessEqual
              : t[i].text == ">=" ? Sense::GreaterEqual
                                  : Sense::Equal;
      ++i;
      double rhs = signed_number(t, i);
      model.add_row(name, std::move(terms), s, rhs);
    }
  }

  void bound(const std::vector<Token>& t) {
    std::size_t i = 0;
    auto lo_hi = [&](int j, double lo, double hi) {
      model.set_bounds(j, lo, hi);
      explicit_bounds.insert(j);
    };
    if (t.empty()) return;
    if (t[0].kind == Token::Name) {
      int j = column(t[0].text);
      if (t.size() == 2 && t[1].kind == Token::Name &&
          lower(t[1].text) == "free") {
        lo_hi(j, -kInf, kInf);
        return;
      }
      i = 1;
      if (i >= t.size() || t[i].kind != Token::Op) {
        throw std::invalid_argument("bad bound line");
      }
      std::string op = t[i++].text;
      double v = signed_number(t, i);
      const auto& var = model.variable(j);
      if (op == "=") lo_hi(j, v, v);
      else if (op == ">=") lo_hi(j, v, var.upper);
      else lo_hi(j, var.lower, v);
      return;
    }
    double lo = signed_number(t, i);
    if (i >= t.size() || t[i].text != "<=") {
      throw std::invalid_argument("bad bound line");
    }
    ++i;
    if (i >= t.size() || t[i].kind != Token::Name) {
      throw std::invalid_argument("bad bound line");
    }
    int j = column(t[i++].text);
    double hi = model.variable(j).upper;
    if (i < t.size()) {
      if (t[i].text != "<=") throw std::invalid_argument("bad bound line");
      ++i;
      hi = signed_number(t, i);
    }
    lo_hi(j, lo, hi);
  }

  void integers(const std::vector<Token>& t, VarType type) {
    for (const Token& tok : t) {
      if (tok.kind != Token::Name) throw std::invalid_argument("bad name");
      int j = column(tok.text);
      model.set_type(j, type);
      if (type == VarType::Binary && !explicit_bounds.count(j)) {
        model.set_bounds(j, 0.0, 1.0);
      }
    }
  }

  std::set<int> explicit_bounds;
};

}  // namespace

MilpModel import_lp(const std::string& text) {
  Reader reader;
  std::istringstream in(text);
  std::string line;
  Section section = Section::None;
  bool maximize = false;
  std::vector<Token> pending;
  std::string model_name;

  auto flush = [&] {
    if (section == Section::Objective) reader.objective(pending, maximize);
    if (section == Section::Constraints) reader.constraints(pending);
    pending.clear();
  };

  while (std::getline(in, line)) {
    if (auto c = line.find('\\'); c != std::string::npos) {
      const std::string tag = "\\ Problem name: ";
      if (line.rfind(tag, 0) == 0) model_name = line.substr(tag.size());
      line.erase(c);
    }
    std::string key = lower(line);
    key.erase(0, key.find_first_not_of(" \t\r"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    Section next = section;
    bool header = true;
    if (key == "minimize" || key == "minimum" || key == "min") {
      next = Section::Objective;
    } else if (key == "maximize" || key == "maximum" || key == "max") {
      next = Section::Objective;
      maximize = true;
    } else if (key == "subject to" || key == "such that" || key == "st" ||
               key == "s.t.") {
      next = Section::Constraints;
    } else if (key == "bounds" || key == "bound") {
      next = Section::Bounds;
    } else if (key == "binaries" || key == "binary" || key == "bin") {
      next = Section::Binaries;
    } else if (key == "generals" || key == "general" || key == "gen") {
      next = Section::Generals;
    } else if (key == "end") {
      next = Section::End;
    } else {
      header = false;
    }
    if (header) {
      flush();
      section = next;
      continue;
    }
    if (key.empty()) continue;
    auto toks = tokenize(line);
    switch (section) {
      case Section::Objective:
      case Section::Constraints:
        pending.insert(pending.end(), toks.begin(), toks.end());
        break;
      case Section::Bounds:
        reader.bound(toks);
        break;
      case Section::Binaries:
        reader.integers(toks, VarType::Binary);
        break;
      case Section::Generals:
        reader.integers(toks, VarType::Integer);
        break;
      case Section::None:
      case Section::End:
        throw std::invalid_argument("text outside of a section: " + line);
    }
  }
  flush();
  if (model_name.empty()) return std::move(reader.model);
  MilpModel named(model_name);
  for (const Variable& v : reader.model.variables()) {
    named.add_variable(v.name, v.type, v.lower, v.upper, v.cost);
  }
  for (const Row& r : reader.model.rows()) {
    named.add_row(r.name, r.terms, r.sense, r.rhs);
  }
  return named;
}

}  // namespace qroute::milp
