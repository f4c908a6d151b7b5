#pragma once

// Text export/import of linear 0-1 models in LP format. The dialect is
// deliberately narrow: an objective section, "Subject To" with one constraint
// per line, a "Binary" listing, "End", and comment lines prefixed by '\'.
// Variable names are sanitized to x<i> in the body; the original names are
// appended as a comment table so parsing restores them.

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fairsched/ilp.hpp"

namespace fairsched {

namespace lp_detail {

inline void write_expr(std::ostream& os, const IpModel& model, const LinExpr& e, bool with_constant) {
  (void)model;
  bool first = true;
  for (const Term& t : e.terms) {
    const long long c = t.coeff;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << " ";
    os << "x" << t.var;
    first = false;
  }
  if (with_constant && (e.constant != 0 || first)) {
    if (first)
      os << e.constant;
    else
      os << (e.constant < 0 ? " - " : " + ") << (e.constant < 0 ? -e.constant : e.constant);
  }
}

}  // namespace lp_detail

inline void export_lp(const IpModel& model, std::ostream& os) {
  if (!model.is_linear())
    throw PreconditionError("model contains implication or reified constraints; linearize() it first");

  os << "\\ 0-1 model, " << model.var_count() << " variables, " << model.constraints().size()
     << " constraints\n";
  os << (model.sense() == Sense::Maximize ? "Maximize" : "Minimize") << "\n";
  os << " obj: ";
  lp_detail::write_expr(os, model, model.objective(), /*with_constant=*/true);
  os << "\n";
  os << "Subject To\n";
  int idx = 0;
  for (const Constraint& c : model.constraints()) {
    os << " c" << idx++ << ": ";
    lp_detail::write_expr(os, model, c.body.expr, /*with_constant=*/false);
    if (c.body.expr.terms.empty()) os << "0";
    os << " " << to_string(c.body.rel) << " " << c.body.bound << "\n";
  }
  os << "Binary\n";
  for (Var v = 0; v < model.var_count(); ++v) os << " x" << v << "\n";
  os << "End\n";
  os << "\\ name-map begin\n";
  for (Var v = 0; v < model.var_count(); ++v) os << "\\ x" << v << " := " << model.name(v) << "\n";
  os << "\\ name-map end\n";
  if (!os) throw IoError("failed writing LP document");
}

inline std::string export_lp(const IpModel& model) {
  std::ostringstream os;
  export_lp(model, os);
  return os.str();
}

namespace lp_detail {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' || c == ']' ||
         c == ',' || c == '(' || c == ')';
}

inline std::vector<Token> tokenize_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (ident_start(c)) {
      size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), line_no, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
      out.push_back({line.substr(i, j - i), line_no, col});
      i = j;
    } else if (c == '<' || c == '>' || c == '=') {
      size_t j = i + 1;
      if (j < line.size() && (line[j] == '=' || line[j] == '<' || line[j] == '>')) ++j;
      out.push_back({line.substr(i, j - i), line_no, col});
      i = j;
    } else if (c == '+' || c == '-' || c == ':') {
      out.push_back({std::string(1, c), line_no, col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, col);
    }
  }
  return out;
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct ParsedExpr {
  std::vector<std::pair<long long, std::string>> terms;
  long long constant = 0;
};

// [sign] [integer] [ident], repeated
inline ParsedExpr parse_expr(const std::vector<Token>& toks, size_t begin, size_t end) {
  ParsedExpr e;
  size_t i = begin;
  bool first = true;
  while (i < end) {
    long long sign = 1;
    if (toks[i].text == "+" || toks[i].text == "-") {
      sign = toks[i].text == "-" ? -1 : 1;
      ++i;
      if (i >= end) throw ParseError("dangling sign", toks[i - 1].line, toks[i - 1].col);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", toks[i].line, toks[i].col);
    }
    long long coeff = 1;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(toks[i].text[0]))) {
      if (toks[i].text.find('.') != std::string::npos)
        throw ParseError("integer coefficients only", toks[i].line, toks[i].col);
      coeff = std::stoll(toks[i].text);
      saw_number = true;
      ++i;
    }
    if (i < end && ident_start(toks[i].text[0])) {
      e.terms.emplace_back(sign * coeff, toks[i].text);
      ++i;
    } else if (saw_number) {
      e.constant += sign * coeff;
    } else {
      throw ParseError("expected a term", toks[i < end ? i : end - 1].line, toks[i < end ? i : end - 1].col);
    }
    first = false;
  }
  return e;
}

struct ParsedCon {
  ParsedExpr lhs;
  Rel rel = Rel::Le;
  long long rhs = 0;
};

}  // namespace lp_detail

inline IpModel parse_lp(std::string_view text) {
  using namespace lp_detail;

  // Split into lines; gather comment lines (name map) separately.
  std::vector<std::pair<int, std::string>> lines;
  std::vector<std::pair<std::string, std::string>> name_map;
  {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string line(text.substr(pos, nl - pos));
      ++line_no;
      size_t k = line.find_first_not_of(" \t\r");
      if (k != std::string::npos && line[k] == '\\') {
        // comment; pick up "\ xN := original-name" rows
        std::istringstream is(line.substr(k + 1));
        std::string a, b;
        if (is >> a >> b && b == ":=") {
          std::string rest;
          std::getline(is, rest);
          size_t s = rest.find_first_not_of(' ');
          if (s != std::string::npos) name_map.emplace_back(a, rest.substr(s));
        }
      } else if (k != std::string::npos) {
        lines.emplace_back(line_no, line);
      }
      if (nl == text.size()) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError("empty document", 1, 1);

  enum class Section { ExpectSense, Objective, Constraints, Binary, Done };
  Section section = Section::ExpectSense;
  Sense sense = Sense::Maximize;
  std::vector<Token> objective_toks;
  std::vector<ParsedCon> cons;
  std::vector<std::string> binary_names;

  for (const auto& [line_no, raw] : lines) {
    std::vector<Token> toks = tokenize_line(raw, line_no);
    if (toks.empty()) continue;
    const std::string head = lower(toks[0].text);

    // section headers
    if (head == "maximize" || head == "max" || head == "minimize" || head == "min") {
      if (section != Section::ExpectSense) throw ParseError("unexpected objective section", line_no, toks[0].col);
      sense = (head[0] == 'm' && head[1] == 'a') ? Sense::Maximize : Sense::Minimize;
      section = Section::Objective;
      continue;
    }
    if ((head == "subject" && toks.size() >= 2 && lower(toks[1].text) == "to") || head == "st" ||
        head == "s.t.") {
      if (section != Section::Objective) throw ParseError("unexpected 'Subject To'", line_no, toks[0].col);
      section = Section::Constraints;
      continue;
    }
    if (head == "binary" || head == "binaries" || head == "bin") {
      if (section != Section::Objective && section != Section::Constraints)
        throw ParseError("unexpected 'Binary'", line_no, toks[0].col);
      section = Section::Binary;
      continue;
    }
    if (head == "end") {
      section = Section::Done;
      continue;
    }

    switch (section) {
      case Section::ExpectSense:
        throw ParseError("expected 'Maximize' or 'Minimize'", line_no, toks[0].col);
      case Section::Objective: {
        size_t begin = 0;
        if (toks.size() >= 2 && toks[1].text == ":") begin = 2;
        for (size_t i = begin; i < toks.size(); ++i) objective_toks.push_back(toks[i]);
        break;
      }
      case Section::Constraints: {
        size_t begin = 0;
        if (toks.size() >= 2 && toks[1].text == ":") begin = 2;
        // find relation token
        size_t rel_at = toks.size();
        Rel rel = Rel::Le;
        for (size_t i = begin; i < toks.size(); ++i) {
          const std::string& s = toks[i].text;
          if (s == "<=" || s == "=<") {
            rel = Rel::Le;
            rel_at = i;
          } else if (s == ">=" || s == "=>") {
            rel = Rel::Ge;
            rel_at = i;
          } else if (s == "=") {
            rel = Rel::Eq;
            rel_at = i;
          } else if (s == "<" || s == ">" || (s.size() > 1 && (s[0] == '<' || s[0] == '>' || s[0] == '='))) {
            throw ParseError("unknown relation symbol '" + s + "'", toks[i].line, toks[i].col);
          } else {
            continue;
          }
          break;
        }
        if (rel_at == toks.size())
          throw ParseError("constraint without relation", line_no, toks[begin < toks.size() ? begin : 0].col);
        ParsedCon pc;
        pc.lhs = parse_expr(toks, begin, rel_at);
        ParsedExpr rhs = parse_expr(toks, rel_at + 1, toks.size());
        if (!rhs.terms.empty())
          throw ParseError("variables on the right-hand side are not supported", toks[rel_at].line,
                           toks[rel_at].col);
        pc.rel = rel;
        pc.rhs = rhs.constant;
        cons.push_back(std::move(pc));
        break;
      }
      case Section::Binary:
        for (const Token& t : toks) {
          if (!ident_start(t.text[0])) throw ParseError("expected variable name", t.line, t.col);
          binary_names.push_back(t.text);
        }
        break;
      case Section::Done:
        throw ParseError("content after 'End'", line_no, toks[0].col);
    }
  }
  if (section == Section::ExpectSense) throw ParseError("missing objective section", 1, 1);
  if (binary_names.empty()) throw ParseError("missing 'Binary' section", 1, 1);

  // The Binary listing fixes the variable order; the name map (when present)
  // restores original names.
  IpModel model;
  std::unordered_map<std::string, std::string> renamed(name_map.begin(), name_map.end());
  std::unordered_map<std::string, Var> of_lp_name;
  for (const std::string& n : binary_names) {
    auto it = renamed.find(n);
    of_lp_name.emplace(n, model.add_var(it == renamed.end() ? n : it->second));
  }
  auto to_expr = [&](const ParsedExpr& pe) {
    LinExpr e;
    for (const auto& [coeff, name] : pe.terms) {
      auto it = of_lp_name.find(name);
      if (it == of_lp_name.end()) throw ParseError("variable '" + name + "' is not listed as Binary", 1, 1);
      e.add(coeff, it->second);
    }
    e.constant = pe.constant;
    return e;
  };
  for (const ParsedCon& pc : cons) model.add_linear(to_expr(pc.lhs), pc.rel, pc.rhs);
  ParsedExpr obj = parse_expr(objective_toks, 0, objective_toks.size());
  model.set_objective(sense, to_expr(obj));
  return model;
}

}  // namespace fairsched
