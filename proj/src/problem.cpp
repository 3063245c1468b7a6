#include "landau/problem.hpp"

#include <cctype>
#include <sstream>

namespace landau {

namespace {

// ------------------------------------------------------------------- lexer

struct Token {
  enum Kind { Ident, Integer, Punct, End } kind = End;
  std::string text;
  int line = 0, col = 0;
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ", column " << col << ": " << msg;
  throw ValidationError(os.str());
}

[[noreturn]] void fail(const Token& t, const std::string& msg) { fail(t.line, t.col, msg); }

// Split the text into logical statements: '#' starts a comment, a physical
// line that begins with blank space continues the statement above it. Every
// statement ends with a sentinel End token carrying a usable position.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> stmts;
  std::istringstream in(text);
  std::string phys;
  int line = 0;
  while (std::getline(in, phys)) {
    ++line;
    if (size_t hash = phys.find('#'); hash != std::string::npos) phys.erase(hash);
    bool continuation = !phys.empty() && (phys[0] == ' ' || phys[0] == '\t');
    std::vector<Token> toks;
    size_t i = 0;
    while (i < phys.size()) {
      char ch = phys[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      int col = static_cast<int>(i) + 1;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t j = i;
        while (j < phys.size() &&
               (std::isalnum(static_cast<unsigned char>(phys[j])) || phys[j] == '_'))
          ++j;
        toks.push_back({Token::Ident, phys.substr(i, j - i), line, col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t j = i;
        while (j < phys.size() && std::isdigit(static_cast<unsigned char>(phys[j]))) ++j;
        toks.push_back({Token::Integer, phys.substr(i, j - i), line, col});
        i = j;
      } else if (std::string("+-*^/()[],=").find(ch) != std::string::npos) {
        toks.push_back({Token::Punct, std::string(1, ch), line, col});
        ++i;
      } else {
        fail(line, col, std::string("unexpected character '") + ch + "'");
      }
    }
    if (toks.empty()) continue;  // blank or comment-only line
    if (continuation) {
      if (stmts.empty()) fail(line, 1, "continuation line without a statement to continue");
      stmts.back().insert(stmts.back().end(), toks.begin(), toks.end());
    } else {
      stmts.push_back(std::move(toks));
    }
  }
  for (auto& s : stmts) {
    const Token& last = s.back();
    s.push_back({Token::End, "", last.line, last.col + static_cast<int>(last.text.size())});
  }
  return stmts;
}

struct Cursor {
  const std::vector<Token>* toks;
  size_t i = 0;

  const Token& peek() const { return (*toks)[i]; }
  const Token& get() {
    const Token& t = (*toks)[i];
    if (t.kind != Token::End) ++i;
    return t;
  }
  bool at_punct(char p) const {
    return peek().kind == Token::Punct && peek().text[0] == p;
  }
  bool eat_punct(char p) {
    if (!at_punct(p)) return false;
    ++i;
    return true;
  }
  void expect_punct(char p, const std::string& where) {
    if (!eat_punct(p))
      fail(peek(), std::string("expected '") + p + "' " + where +
                       (peek().kind == Token::End ? " before the end of the statement"
                                                  : ", found '" + peek().text + "'"));
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident)
      fail(peek(), "expected " + what +
                       (peek().kind == Token::End ? "" : ", found '" + peek().text + "'"));
    return get();
  }
  void expect_end() {
    if (peek().kind != Token::End)
      fail(peek(), "unexpected '" + peek().text + "' after a complete statement");
  }
};

long expect_small_int(Cursor& c, const std::string& what, long maxval) {
  if (c.peek().kind != Token::Integer)
    fail(c.peek(), "expected " + what +
                       (c.peek().kind == Token::End ? "" : ", found '" + c.peek().text + "'"));
  const Token& t = c.get();
  if (t.text.size() > 9) fail(t, what + " is out of range");
  long v = std::stol(t.text);
  if (v > maxval) fail(t, what + " is out of range (maximum " + std::to_string(maxval) + ")");
  return v;
}

// -------------------------------------------------------- name environment

enum class NameKind { Variable, Parameter, Extension, Invariant };

struct NameEnv {
  SymTabPtr table;
  VSpacePtr param_space;  // zero-variable space for parameter-only contexts
  std::map<std::string, std::pair<NameKind, int>> names;

  const std::pair<NameKind, int>* find(const std::string& n) const {
    auto it = names.find(n);
    return it == names.end() ? nullptr : &it->second;
  }
};

// What an identifier may resolve to inside an expression.
enum class Ctx { XSpace, JSpace, Params };

const char* ctx_noun(Ctx ctx) {
  switch (ctx) {
    case Ctx::XSpace: return "a variable or parameter";
    case Ctx::JSpace: return "an invariant name or parameter";
    default: return "a parameter";
  }
}

// ------------------------------------------------------- expression parser

VPoly parse_sum(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx);

VPoly parse_primary(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx) {
  const Token& t = c.peek();
  if (c.eat_punct('(')) {
    VPoly inner = parse_sum(c, space, env, ctx);
    c.expect_punct(')', "to close the parenthesis");
    return inner;
  }
  if (t.kind == Token::Integer) {
    c.get();
    Rat num(Int(t.text));
    if (c.eat_punct('/')) {
      if (c.peek().kind != Token::Integer)
        fail(c.peek(), "the '/' of a rational literal must be followed by an integer");
      const Token& d = c.get();
      Int den(d.text);
      if (den == 0) fail(d, "zero denominator in rational literal");
      num /= Rat(den);
      num.canonicalize();
    }
    return VPoly::constant(space, RatFunc(env.table, num));
  }
  if (t.kind == Token::Ident) {
    c.get();
    const auto* hit = env.find(t.text);
    if (!hit) fail(t, "unknown identifier '" + t.text + "'");
    switch (hit->first) {
      case NameKind::Variable:
        if (ctx == Ctx::XSpace) return VPoly::var(space, hit->second);
        fail(t, "order-parameter variable '" + t.text + "' cannot appear here (expected " +
                    ctx_noun(ctx) + ")");
      case NameKind::Invariant:
        if (ctx == Ctx::JSpace) return VPoly::var(space, hit->second);
        fail(t, "invariant name '" + t.text + "' cannot appear here (expected " +
                    ctx_noun(ctx) + ")");
      case NameKind::Parameter:
      case NameKind::Extension:
        return VPoly::constant(space, RatFunc::symbol(env.table, hit->second));
    }
  }
  fail(t, std::string("expected an expression") +
              (t.kind == Token::End ? "" : ", found '" + t.text + "'"));
}

VPoly parse_power(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx) {
  VPoly base = parse_primary(c, space, env, ctx);
  if (!c.eat_punct('^')) return base;
  long e = expect_small_int(c, "an exponent", 64);
  VPoly out = VPoly::constant(space, RatFunc(env.table, Rat(1)));
  for (long n = 0; n < e; ++n) out = out * base;
  return out;
}

VPoly parse_factor(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx) {
  if (c.eat_punct('-')) return -parse_factor(c, space, env, ctx);
  return parse_power(c, space, env, ctx);
}

VPoly parse_term(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx) {
  VPoly prod = parse_factor(c, space, env, ctx);
  while (c.eat_punct('*')) prod = prod * parse_factor(c, space, env, ctx);
  return prod;
}

VPoly parse_sum(Cursor& c, const VSpacePtr& space, const NameEnv& env, Ctx ctx) {
  VPoly acc = parse_term(c, space, env, ctx);
  while (true) {
    if (c.eat_punct('+'))
      acc = acc + parse_term(c, space, env, ctx);
    else if (c.eat_punct('-'))
      acc = acc - parse_term(c, space, env, ctx);
    else
      return acc;
  }
}

RatFunc parse_param_expr(Cursor& c, const NameEnv& env) {
  VPoly p = parse_sum(c, env.param_space, env, Ctx::Params);
  if (p.is_zero()) return RatFunc(env.table, Rat(0));
  return p.coeff(VMono{});
}

Matrix parse_matrix(Cursor& c, const NameEnv& env) {
  c.expect_punct('[', "to open the matrix");
  std::vector<std::vector<RatFunc>> rows;
  while (true) {
    c.expect_punct('[', "to open a matrix row");
    std::vector<RatFunc> row;
    while (true) {
      row.push_back(parse_param_expr(c, env));
      if (!c.eat_punct(',')) break;
    }
    c.expect_punct(']', "to close the matrix row");
    if (!rows.empty() && rows.front().size() != row.size())
      fail(c.peek(), "matrix rows have different lengths");
    rows.push_back(std::move(row));
    if (!c.eat_punct(',')) break;
  }
  c.expect_punct(']', "to close the matrix");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), env.table);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// ----------------------------------------------------------------- parsing

struct RawStatement {
  std::string keyword;
  Cursor cur;  // positioned after the keyword
  Token head;
};

SymbolKind param_kind_from(const Token& t) {
  if (t.text == "quadratic") return SymbolKind::QuadraticCoefficient;
  if (t.text == "higher") return SymbolKind::HigherCoefficient;
  if (t.text == "auxiliary") return SymbolKind::Auxiliary;
  fail(t, "expected a parameter kind: quadratic, higher, or auxiliary");
}

ProblemFile parse_any(const std::string& text, bool map_file) {
  auto stmts = tokenize(text);

  ProblemFile out;
  auto table = std::make_shared<SymbolTable>();
  NameEnv env;
  env.names.clear();

  auto declare = [&](const Token& t, NameKind kind, int index) {
    if (env.names.count(t.text)) fail(t, "duplicate identifier '" + t.text + "'");
    env.names[t.text] = {kind, index};
  };

  std::vector<std::string> inv_names;
  std::vector<int> inv_degrees;
  std::vector<RawStatement> raw;

  // Pass 1: declarations only, so the symbol table is complete (and its
  // exponent-vector width fixed) before any expression is built over it.
  for (const auto& stmt : stmts) {
    Cursor c{&stmt, 0};
    const Token& head = c.expect_ident("a statement keyword");
    if (head.text == "variables") {
      if (!out.variables.empty()) fail(head, "duplicate 'variables' statement");
      while (true) {
        const Token& v = c.expect_ident("a variable name");
        declare(v, NameKind::Variable, static_cast<int>(out.variables.size()));
        out.variables.push_back(v.text);
        if (!c.eat_punct(',')) break;
      }
      c.expect_end();
      continue;
    }
    if (head.text == "parameters") {
      SymbolKind kind = param_kind_from(c.expect_ident("a parameter kind"));
      while (true) {
        const Token& p = c.expect_ident("a parameter name");
        int idx = table->add(p.text, kind);
        declare(p, NameKind::Parameter, idx);
        if (kind == SymbolKind::QuadraticCoefficient) out.quadratic_params.push_back(idx);
        else if (kind == SymbolKind::HigherCoefficient) out.higher_params.push_back(idx);
        else out.auxiliary_params.push_back(idx);
        if (!c.eat_punct(',')) break;
      }
      c.expect_end();
      continue;
    }
    if (head.text == "extension") {
      const Token& s = c.expect_ident("the extension symbol");
      int idx = table->add(s.text, SymbolKind::Extension);
      declare(s, NameKind::Extension, idx);
      ExtensionDecl decl;
      decl.symbol = s.text;
      decl.index = idx;
      out.extensions.push_back(decl);
      raw.push_back({head.text, c, head});  // relation parsed in pass 2
      continue;
    }
    if (head.text == "invariant") {
      const Token& n = c.expect_ident("the invariant name");
      declare(n, NameKind::Invariant, static_cast<int>(inv_names.size()));
      inv_names.push_back(n.text);
      inv_degrees.push_back(0);  // filled in pass 2
      raw.push_back({head.text, c, head});
      continue;
    }
    raw.push_back({head.text, c, head});
  }

  if (out.variables.empty()) {
    if (stmts.empty()) fail(1, 1, "empty problem file: a 'variables' statement is required");
    fail(stmts.front().front(), "a 'variables' statement is required");
  }

  out.table = table;
  env.table = out.table;
  env.param_space = std::make_shared<VarSpace>(
      VarSpace{{}, {}, env.table});

  auto xspace = std::make_shared<VarSpace>(VarSpace{
      out.variables, std::vector<int>(out.variables.size(), 1), env.table});
  out.xspace = xspace;

  // Pass 2a: extension relations, in declaration order, before any other
  // expression is evaluated (their rewrite rules act inside all arithmetic).
  size_t ext_seen = 0;
  for (auto& rs : raw) {
    if (rs.keyword != "extension") continue;
    ExtensionDecl& decl = out.extensions[ext_seen++];
    Cursor c = rs.cur;  // positioned just after the symbol name
    c.expect_punct('^', "after the extension symbol (the relation is monic: beta^2 = ...)");
    long deg = expect_small_int(c, "the relation degree", 16);
    if (deg < 2) fail(rs.head, "extension relation degree must be at least 2");
    c.expect_punct('=', "between the monic power and the relation right-hand side");
    RatFunc rhs = parse_param_expr(c, env);
    c.expect_end();
    if (!rhs.is_polynomial())
      fail(rs.head, "extension relation right-hand side must be polynomial");
    PPoly rhs_p = rhs.num() * rhs.coef();
    if (rhs_p.is_zero()) fail(rs.head, "extension relation right-hand side must be nonzero");
    for (const auto& [m, coefv] : rhs_p.terms())
      for (int s = decl.index; s < table->size(); ++s)
        if (s < static_cast<int>(m.size()) && m[s] > 0)
          fail(rs.head, "the relation for '" + decl.symbol +
                            "' may only use symbols declared before it");
    decl.degree = static_cast<int>(deg);
    decl.rhs = rhs_p;
    std::vector<std::pair<std::vector<int>, Rat>> terms(rhs_p.terms().begin(),
                                                        rhs_p.terms().end());
    table->set_extension_rhs(decl.index, decl.degree, std::move(terms));
  }

  // Invariant degrees are needed to build the orbit-space variables, and the
  // potential/syzygies may textually precede the invariant statements, so
  // collect the trailing `degree <n>` of every invariant statement first.
  size_t inv_seen = 0;
  for (auto& rs : raw) {
    if (rs.keyword != "invariant") continue;
    const auto& toks = *rs.cur.toks;
    size_t n = toks.size();  // [... , degree, INT, End]
    if (n < 3 || toks[n - 2].kind != Token::Integer || toks[n - 3].kind != Token::Ident ||
        toks[n - 3].text != "degree")
      fail(toks[n - 1], "an invariant statement ends with 'degree <n>'");
    inv_degrees[inv_seen++] = static_cast<int>(std::stol(toks[n - 2].text));
  }

  auto jspace = std::make_shared<VarSpace>(VarSpace{inv_names, inv_degrees, env.table});
  out.jspace = jspace;

  // Pass 2b: everything else, in file order.
  bool saw_degree = false, saw_top = false, saw_seed = false, saw_adapt = false;
  Token degree_tok;
  inv_seen = 0;
  for (auto& rs : raw) {
    Cursor c = rs.cur;
    if (rs.keyword == "extension") continue;
    if (rs.keyword == "invariant") {
      InvariantDecl decl;
      decl.name = inv_names[inv_seen];
      decl.degree = inv_degrees[inv_seen];
      ++inv_seen;
      // cursor is positioned just after the invariant name
      c.expect_punct('=', "after the invariant name");
      VPoly expr = parse_sum(c, out.xspace, env, Ctx::XSpace);
      const Token& kw = c.expect_ident("'degree'");
      if (kw.text != "degree") fail(kw, "expected 'degree <n>' to end the invariant statement");
      expect_small_int(c, "the invariant degree", 1000000);
      c.expect_end();
      if (expr.is_zero()) fail(rs.head, "invariant '" + decl.name + "' is the zero polynomial");
      if (!expr.is_homogeneous())
        fail(rs.head,
             "invariant '" + decl.name + " = " + expr_str(expr) + "' is not homogeneous");
      if (expr.degree() != decl.degree)
        fail(rs.head, "invariant '" + decl.name + "' has degree " +
                          std::to_string(expr.degree()) + " but declares degree " +
                          std::to_string(decl.degree));
      decl.expansion = expr;
      out.invariants.push_back(std::move(decl));
      continue;
    }
    if (rs.keyword == "group") {
      Matrix g = parse_matrix(c, env);
      c.expect_end();
      int n = static_cast<int>(out.variables.size());
      if (g.rows != n || g.cols != n)
        fail(rs.head, "group generator must be " + std::to_string(n) + "x" + std::to_string(n) +
                          " (got " + std::to_string(g.rows) + "x" + std::to_string(g.cols) + ")");
      out.group.push_back(std::move(g));
      continue;
    }
    if (rs.keyword == "syzygy") {
      VPoly lhs = parse_sum(c, out.jspace, env, Ctx::JSpace);
      c.expect_punct('=', "between the two sides of the syzygy");
      VPoly rhs = parse_sum(c, out.jspace, env, Ctx::JSpace);
      c.expect_end();
      out.syzygies.emplace_back(std::move(lhs), std::move(rhs));
      continue;
    }
    if (rs.keyword == "potential") {
      if (out.potential) fail(rs.head, "duplicate 'potential' statement");
      out.potential = parse_sum(c, out.jspace, env, Ctx::JSpace);
      c.expect_end();
      continue;
    }
    if (rs.keyword == "degree") {
      if (saw_degree) fail(rs.head, "duplicate 'degree' statement");
      saw_degree = true;
      degree_tok = c.peek();
      out.truncation_degree = static_cast<int>(expect_small_int(c, "the truncation degree", 64));
      c.expect_end();
      continue;
    }
    if (rs.keyword == "top_order") {
      if (saw_top) fail(rs.head, "duplicate 'top_order' statement");
      saw_top = true;
      const Token& t = c.expect_ident("'rho' or 'none'");
      if (t.text != "rho" && t.text != "none") fail(t, "top_order must be 'rho' or 'none'");
      out.options.top_order_target = t.text;
      c.expect_end();
      continue;
    }
    if (rs.keyword == "adapt_matrix") {
      if (saw_adapt) fail(rs.head, "duplicate 'adapt_matrix' statement");
      saw_adapt = true;
      out.options.adapt_matrix = parse_matrix(c, env);
      c.expect_end();
      continue;
    }
    if (rs.keyword == "numeric_params") {
      while (true) {
        const Token& n = c.expect_ident("a parameter name");
        const auto* hit = env.find(n.text);
        if (!hit) fail(n, "unknown identifier '" + n.text + "'");
        if (hit->first == NameKind::Extension)
          fail(n, "extension symbol '" + n.text + "' takes its value from its relation");
        if (hit->first != NameKind::Parameter)
          fail(n, "'" + n.text + "' is not a parameter");
        c.expect_punct('=', "after the parameter name");
        RatFunc v = parse_param_expr(c, env);
        if (!v.is_constant())
          fail(n, "numeric parameter values must be rational constants");
        if (out.options.numeric_params.count(hit->second))
          fail(n, "duplicate numeric value for '" + n.text + "'");
        out.options.numeric_params[hit->second] = v.constant_value();
        if (!c.eat_punct(',')) break;
      }
      c.expect_end();
      continue;
    }
    if (rs.keyword == "seed") {
      if (saw_seed) fail(rs.head, "duplicate 'seed' statement");
      saw_seed = true;
      if (c.peek().kind != Token::Integer) fail(c.peek(), "expected the seed value");
      const Token& t = c.get();
      if (t.text.size() > 19) fail(t, "seed is out of range");
      out.options.seed = std::stoull(t.text);
      c.expect_end();
      continue;
    }
    if (rs.keyword == "map") {
      const Token& v = c.expect_ident("a variable name");
      const auto* hit = env.find(v.text);
      if (!hit) fail(v, "unknown identifier '" + v.text + "'");
      if (hit->first != NameKind::Variable) fail(v, "'" + v.text + "' is not a variable");
      c.expect_punct('=', "after the map component name");
      VPoly expr = parse_sum(c, out.xspace, env, Ctx::XSpace);
      c.expect_end();
      if (out.map_components.empty())
        out.map_components.assign(out.variables.size(), VPoly(out.xspace));
      if (!out.map_components[hit->second].is_zero())
        fail(v, "duplicate map component for '" + v.text + "'");
      out.map_components[hit->second] = std::move(expr);
      continue;
    }
    fail(rs.head, "unknown statement '" + rs.keyword + "'");
  }

  // ------------------------------------------------------- end validation
  const Token& head0 = stmts.front().front();
  if (map_file) {
    if (out.map_components.empty())
      fail(head0, "a map file needs one 'map <variable> = ...' per variable");
    for (size_t i = 0; i < out.variables.size(); ++i)
      if (out.map_components[i].is_zero())
        fail(head0, "the map has no component for variable '" + out.variables[i] + "'");
    if (!saw_degree) fail(head0, "a 'degree' statement is required");
    return out;
  }

  if (!out.map_components.empty())
    fail(head0, "'map' statements belong to map files, not problem files");
  if (out.invariants.empty())
    fail(head0, "at least one 'invariant' statement is required");
  if (!out.potential) fail(head0, "a 'potential' statement is required");
  if (!saw_degree) fail(head0, "a 'degree' statement is required");
  if (out.truncation_degree <= 0 || out.truncation_degree % 2 != 0)
    fail(degree_tok, "truncation degree must be a positive even integer (got " +
                         std::to_string(out.truncation_degree) + ")");
  if (out.potential->coeff(VMono(out.invariants.size(), 0)) != RatFunc(env.table))
    fail(head0, "the potential must not have a constant term");
  if (out.potential->degree() > out.truncation_degree)
    fail(degree_tok, "the potential has induced degree " +
                         std::to_string(out.potential->degree()) +
                         " above the truncation degree " +
                         std::to_string(out.truncation_degree));
  if (out.options.adapt_matrix) {
    int r = static_cast<int>(out.invariants.size());
    const Matrix& a = *out.options.adapt_matrix;
    if (a.rows != a.cols)
      fail(head0, "adapt_matrix must be square");
    if (a.rows > r)
      fail(head0,
           "adapt_matrix is " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
               " but there are only " + std::to_string(r) + " invariants");
  }
  return out;
}

// ---------------------------------------------------------------- printing

// One additive piece: sign, then "coef*sym1^e1*..." with unit coefficients
// elided. `mono_str` may be empty (pure constant term).
struct Piece {
  bool negative = false;
  std::string body;
};

std::string join_pieces(const std::vector<Piece>& ps) {
  std::string s;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i == 0)
      s += ps[i].negative ? "-" : "";
    else
      s += ps[i].negative ? " - " : " + ";
    s += ps[i].body;
  }
  return s.empty() ? "0" : s;
}

// Body of |c| * mono with 1-elision; mono may be "".
std::string scaled_body(const Rat& c, const std::string& mono) {
  Rat a(abs(c));
  if (mono.empty()) return rat_str(a);
  if (a == 1) return mono;
  return rat_str(a) + "*" + mono;
}

std::string pmono_str(const SymTabPtr& tab, const PMono& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += tab->name(static_cast<int>(i));
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

// Polynomial-in-parameters rendering (no enclosing parentheses).
std::string ppoly_expr(const SymTabPtr& tab, const PPoly& p, const Rat& scale) {
  if (p.is_zero() || scale == 0) return "0";
  std::vector<Piece> ps;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rat c = it->second * scale;
    ps.push_back({c < 0, scaled_body(c, pmono_str(tab, it->first))});
  }
  return join_pieces(ps);
}

std::string vmono_str(const VSpacePtr& space, const VMono& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += space->names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string param_expr_str(const RatFunc& c) {
  if (c.is_zero()) return "0";
  if (!c.is_polynomial())
    return c.str();  // display fallback; parsed problems are polynomial
  return ppoly_expr(c.table(), c.num(), c.coef());
}

std::string expr_str(const VPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<Piece> ps;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const RatFunc& c = it->second;
    std::string mono = vmono_str(p.space(), it->first);
    if (!c.is_polynomial()) {  // display fallback, not re-parseable
      ps.push_back({false, "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono)});
      continue;
    }
    const PPoly& num = c.num();
    if (num.is_constant()) {
      Rat v = c.coef() * num.constant_value();
      ps.push_back({v < 0, scaled_body(v, mono)});
    } else if (num.num_terms() == 1) {
      Rat v = c.coef() * num.terms().begin()->second;
      std::string pm = pmono_str(c.table(), num.terms().begin()->first);
      std::string body = mono.empty() ? pm : pm + "*" + mono;
      ps.push_back({v < 0, scaled_body(v, body)});
    } else {
      std::string inner = "(" + ppoly_expr(c.table(), num, c.coef()) + ")";
      ps.push_back({false, mono.empty() ? inner : inner + "*" + mono});
    }
  }
  return join_pieces(ps);
}

namespace {

std::string matrix_str(const Matrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ", ";
      s += param_expr_str(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

void print_params(std::ostream& os, const ProblemFile& p, const char* kindname,
                  const std::vector<int>& idxs) {
  if (idxs.empty()) return;
  os << "parameters " << kindname << " ";
  for (size_t i = 0; i < idxs.size(); ++i) os << (i ? ", " : "") << p.table->name(idxs[i]);
  os << "\n";
}

}  // namespace

std::string print_problem(const ProblemFile& p) {
  std::ostringstream os;
  os << "variables ";
  for (size_t i = 0; i < p.variables.size(); ++i) os << (i ? ", " : "") << p.variables[i];
  os << "\n";
  print_params(os, p, "quadratic", p.quadratic_params);
  print_params(os, p, "higher", p.higher_params);
  print_params(os, p, "auxiliary", p.auxiliary_params);
  for (const auto& e : p.extensions)
    os << "extension " << e.symbol << "^" << e.degree << " = "
       << ppoly_expr(p.table, e.rhs, Rat(1)) << "\n";
  for (const auto& g : p.group) os << "group " << matrix_str(g) << "\n";
  for (const auto& inv : p.invariants)
    os << "invariant " << inv.name << " = " << expr_str(inv.expansion) << " degree "
       << inv.degree << "\n";
  for (const auto& [lhs, rhs] : p.syzygies)
    os << "syzygy " << expr_str(lhs) << " = " << expr_str(rhs) << "\n";
  if (p.potential) os << "potential " << expr_str(*p.potential) << "\n";
  if (p.truncation_degree > 0) os << "degree " << p.truncation_degree << "\n";
  for (size_t i = 0; i < p.map_components.size(); ++i)
    os << "map " << p.variables[i] << " = " << expr_str(p.map_components[i]) << "\n";
  os << "top_order " << p.options.top_order_target << "\n";
  if (p.options.adapt_matrix)
    os << "adapt_matrix " << matrix_str(*p.options.adapt_matrix) << "\n";
  if (!p.options.numeric_params.empty()) {
    os << "numeric_params ";
    bool first = true;
    for (const auto& [idx, v] : p.options.numeric_params) {
      os << (first ? "" : ", ") << p.table->name(idx) << " = " << rat_str(v);
      first = false;
    }
    os << "\n";
  }
  os << "seed " << p.options.seed << "\n";
  return os.str();
}

ProblemFile parse_problem(const std::string& text) { return parse_any(text, false); }

ProblemFile parse_map_file(const std::string& text) { return parse_any(text, true); }

std::shared_ptr<InvariantRing> ProblemFile::make_ring() const {
  std::vector<VPoly> exps;
  exps.reserve(invariants.size());
  for (const auto& d : invariants) exps.push_back(d.expansion);
  return std::make_shared<InvariantRing>(xspace, jspace, exps, syzygies, group);
}

LandauProblem ProblemFile::make_problem(const std::shared_ptr<InvariantRing>& ring) const {
  if (!potential) throw ValidationError("the problem file declares no potential");
  return {ring, *potential, truncation_degree, options.top_order_target == "rho"};
}

}  // namespace landau
