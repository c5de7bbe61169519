#include "confex/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace confex {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::IDENTITY: return "I";
    case PatternKind::TRIANGULAR: return "T";
    case PatternKind::IDENTITY_REVERSED: return "IR";
    case PatternKind::TRIANGULAR_REVERSED: return "TR";
    case PatternKind::LITERAL: return "L";
  }
  return "?";
}

PatternSpec PatternSpec::generator(PatternKind kind, unsigned ell, Symbol a,
                                   Symbol b, unsigned t) {
  if (kind == PatternKind::LITERAL)
    throw ArgumentError("PatternSpec::generator: use literal_of");
  if (a == b) throw ArgumentError("PatternSpec: a must differ from b");
  if (ell < 1 || t < 1) throw ArgumentError("PatternSpec: ell, t must be >= 1");
  PatternSpec s;
  s.kind = kind;
  s.ell = ell;
  s.a = a;
  s.b = b;
  s.t = t;
  return s;
}

PatternSpec PatternSpec::literal_of(AlphMatrix M, unsigned t) {
  if (t < 1) throw ArgumentError("PatternSpec: t must be >= 1");
  PatternSpec s;
  s.kind = PatternKind::LITERAL;
  s.literal = std::move(M);
  s.t = t;
  return s;
}

AlphMatrix identity_pattern(unsigned ell, Symbol a, Symbol b) {
  if (a == b) throw ArgumentError("identity_pattern: a == b");
  if (ell < 1) throw ArgumentError("identity_pattern: ell must be >= 1");
  std::vector<Column> cols(ell, Column(ell, b));
  for (unsigned j = 0; j < ell; ++j) cols[j][j] = a;
  return AlphMatrix(static_cast<unsigned>(std::max(a, b)) + 1, ell,
                    std::move(cols));
}

AlphMatrix triangular_pattern(unsigned ell, Symbol a, Symbol b) {
  if (a == b) throw ArgumentError("triangular_pattern: a == b");
  if (ell < 1) throw ArgumentError("triangular_pattern: ell must be >= 1");
  std::vector<Column> cols(ell, Column(ell));
  for (unsigned j = 0; j < ell; ++j)
    for (unsigned i = 0; i < ell; ++i) cols[j][i] = (i > j) ? a : b;
  return AlphMatrix(static_cast<unsigned>(std::max(a, b)) + 1, ell,
                    std::move(cols));
}

AlphMatrix reverse_columns(const AlphMatrix& M) {
  std::vector<Column> cols(M.columns().rbegin(), M.columns().rend());
  return AlphMatrix(M.alphabet(), M.rows(), std::move(cols));
}

ForbiddenFamily family_T(unsigned ell, unsigned r) {
  if (r < 2) throw ArgumentError("family_T: r must be >= 2");
  if (ell < 1) throw ArgumentError("family_T: ell must be >= 1");
  ForbiddenFamily fam;
  fam.alphabet = r;
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = 0; b < r; ++b)
      if (a != b)
        fam.members.push_back(
            PatternSpec::generator(PatternKind::IDENTITY, ell, a, b));
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = 0; b < r; ++b)
      if (a != b)
        fam.members.push_back(
            PatternSpec::generator(PatternKind::TRIANGULAR, ell, a, b));
  return fam;
}

ForbiddenFamily family_T_prime(unsigned ell, unsigned r) {
  if (r < 2) throw ArgumentError("family_T_prime: r must be >= 2");
  if (ell < 1) throw ArgumentError("family_T_prime: ell must be >= 1");
  ForbiddenFamily fam;
  fam.alphabet = r;
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = 0; b < r; ++b)
      if (a != b)
        fam.members.push_back(
            PatternSpec::generator(PatternKind::IDENTITY, ell, a, b));
  for (Symbol a = 0; a < r; ++a)
    for (Symbol b = static_cast<Symbol>(a + 1); b < r; ++b)
      fam.members.push_back(
          PatternSpec::generator(PatternKind::TRIANGULAR, ell, a, b));
  return fam;
}

AlphMatrix realize(const PatternSpec& spec) {
  AlphMatrix base = [&] {
    switch (spec.kind) {
      case PatternKind::IDENTITY:
        return identity_pattern(spec.ell, spec.a, spec.b);
      case PatternKind::TRIANGULAR:
        return triangular_pattern(spec.ell, spec.a, spec.b);
      case PatternKind::IDENTITY_REVERSED:
        return reverse_columns(identity_pattern(spec.ell, spec.a, spec.b));
      case PatternKind::TRIANGULAR_REVERSED:
        return reverse_columns(triangular_pattern(spec.ell, spec.a, spec.b));
      case PatternKind::LITERAL:
        if (!spec.literal) throw ArgumentError("realize: missing literal");
        return *spec.literal;
    }
    throw ArgumentError("realize: bad kind");
  }();
  return spec.t == 1 ? base : t_copies(spec.t, base);
}

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

unsigned parse_uint(const std::string& s) {
  if (s.empty() ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ArgumentError("pattern: expected number, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

// Split "x,y" or "x;y,z" style argument lists.
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct ParsedCall {
  std::string name;  // uppercased
  std::vector<std::string> args;
};

ParsedCall parse_call(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw ArgumentError("pattern: expected NAME(...): '" + text + "'");
  ParsedCall call;
  call.name = upper(text.substr(0, open));
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  for (auto& part : split(inner, ';'))
    for (auto& arg : split(part, ',')) call.args.push_back(arg);
  return call;
}

}  // namespace

PatternSpec parse_pattern(const std::string& raw) {
  std::string text = strip_ws(raw);
  unsigned t = 1;
  auto star = text.find('*');
  if (star != std::string::npos) {
    t = parse_uint(text.substr(0, star));
    if (t < 1) throw ArgumentError("pattern: multiplier must be >= 1");
    text = text.substr(star + 1);
  }
  if (!text.empty() && text[0] == '@')
    return PatternSpec::literal_of(read_amat_file(text.substr(1)), t);
  ParsedCall call = parse_call(text);
  PatternKind kind;
  if (call.name == "I") kind = PatternKind::IDENTITY;
  else if (call.name == "T") kind = PatternKind::TRIANGULAR;
  else if (call.name == "IR") kind = PatternKind::IDENTITY_REVERSED;
  else if (call.name == "TR") kind = PatternKind::TRIANGULAR_REVERSED;
  else throw ArgumentError("pattern: unknown kind '" + call.name + "'");
  if (call.args.size() != 3)
    throw ArgumentError("pattern: " + call.name + " needs (ell;a,b)");
  unsigned ell = parse_uint(call.args[0]);
  unsigned a = parse_uint(call.args[1]);
  unsigned b = parse_uint(call.args[2]);
  if (a > 255 || b > 255) throw ArgumentError("pattern: symbol too large");
  return PatternSpec::generator(kind, ell, static_cast<Symbol>(a),
                                static_cast<Symbol>(b), t);
}

std::vector<PatternSpec> parse_pattern_list(const std::string& raw) {
  std::string text = strip_ws(raw);
  unsigned t = 1;
  auto star = text.find('*');
  std::string rest = text;
  if (star != std::string::npos) {
    t = parse_uint(text.substr(0, star));
    rest = text.substr(star + 1);
  }
  if (!rest.empty() && rest[0] != '@') {
    ParsedCall call = parse_call(rest);
    if (call.name == "TFAM" || call.name == "TPRIME") {
      if (call.args.size() != 2)
        throw ArgumentError("pattern: " + call.name + " needs (ell,r)");
      unsigned ell = parse_uint(call.args[0]);
      unsigned r = parse_uint(call.args[1]);
      ForbiddenFamily fam = call.name == "TFAM" ? family_T(ell, r)
                                                : family_T_prime(ell, r);
      for (auto& m : fam.members) m.t = t;
      return fam.members;
    }
  }
  return {parse_pattern(raw)};
}

std::string pattern_to_string(const PatternSpec& spec) {
  std::ostringstream oss;
  if (spec.t != 1) oss << spec.t << "*";
  if (spec.kind == PatternKind::LITERAL) {
    oss << "L[" << spec.literal->rows() << "x" << spec.literal->cols() << "]";
  } else {
    oss << to_string(spec.kind) << "(" << spec.ell << ";"
        << static_cast<unsigned>(spec.a) << ","
        << static_cast<unsigned>(spec.b) << ")";
  }
  return oss.str();
}

}  // namespace confex
