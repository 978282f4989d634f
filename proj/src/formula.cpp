#include "fuzzitop/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fuzzitop/covers.hpp"
#include "fuzzitop/maps.hpp"

namespace fuzzitop::dsl {

namespace {

enum class Tok {
  End, Ident, Number, LParen, RParen, LBrace, RBrace, Comma, Dot, Colon,
  Arrow, DArrow, Or, And, Tensor, Not, Compl, Plus, Amp
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    const char c = text_[pos_];
    auto two = [&](size_t k) { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; };
    auto emit = [&](Tok kind, size_t len) {
      tok_ = {kind, std::string(text_.substr(pos_, len)), line_, col_};
      pos_ += len;
      col_ += static_cast<int>(len);
    };
    if (c == '(') {
      if (two(1) == '*' && two(2) == ')') return emit(Tok::Tensor, 3);
      return emit(Tok::LParen, 1);
    }
    switch (c) {
      case ')': return emit(Tok::RParen, 1);
      case '{': return emit(Tok::LBrace, 1);
      case '}': return emit(Tok::RBrace, 1);
      case ',': return emit(Tok::Comma, 1);
      case '.': return emit(Tok::Dot, 1);
      case ':': return emit(Tok::Colon, 1);
      case '~': return emit(Tok::Not, 1);
      case '+': return emit(Tok::Plus, 1);
      case '&': return emit(Tok::Amp, 1);
      case '^':
        if (two(1) == 'c') return emit(Tok::Compl, 2);
        throw FormulaError("expected '^c'", line_, col_);
      case '-':
        if (two(1) == '>') return emit(Tok::Arrow, 2);
        throw FormulaError("expected '->'", line_, col_);
      case '<':
        if (two(1) == '-' && two(2) == '>') return emit(Tok::DArrow, 3);
        throw FormulaError("expected '<->'", line_, col_);
      case '\\':
        if (two(1) == '/') return emit(Tok::Or, 2);
        throw FormulaError("expected '\\/'", line_, col_);
      case '/':
        if (two(1) == '\\') return emit(Tok::And, 2);
        throw FormulaError("expected '/\\'", line_, col_);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t len = 0;
      while (pos_ + len < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + len])))
        ++len;
      if (pos_ + len < text_.size() && (text_[pos_ + len] == '/' || text_[pos_ + len] == '.')) {
        size_t tail = len + 1;
        while (pos_ + tail < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + tail])))
          ++tail;
        if (tail > len + 1) len = tail;
      }
      return emit(Tok::Number, len);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t len = 0;
      while (pos_ + len < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_ + len])) ||
              text_[pos_ + len] == '_'))
        ++len;
      return emit(Tok::Ident, len);
    }
    throw FormulaError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

const std::set<std::string, std::less<>> kBuiltins = {
    "gamma", "gamma_p", "lc", "lpc", "t2p", "t3p", "t4p", "ptop"};
const std::set<std::string, std::less<>> kPointSetAtoms = {"in", "pnbhd"};
const std::set<std::string, std::less<>> kSetSetAtoms = {"subset", "disjoint", "eq"};
const std::set<std::string, std::less<>> kSetAtoms = {"open", "preopen", "pclosed"};
const std::set<std::string, std::less<>> kReserved = {"forall", "exists", "point", "pcl"};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& bound) : lex_(text) {
    scope_.insert(bound.begin(), bound.end());
  }

  FormulaPtr run() {
    FormulaPtr f = quantified();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw FormulaError(msg, lex_.peek().line, lex_.peek().col);
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail("expected " + what);
    return lex_.take();
  }

  bool accept(Tok kind) {
    if (lex_.peek().kind != kind) return false;
    lex_.take();
    return true;
  }

  FormulaPtr quantified() {
    if (lex_.peek().kind == Tok::Ident &&
        (lex_.peek().text == "forall" || lex_.peek().text == "exists")) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Quantifier;
      f->quant = lex_.take().text == "forall" ? Quant::Forall : Quant::Exists;
      f->var = expect(Tok::Ident, "variable name").text;
      if (kReserved.count(f->var) || kBuiltins.count(f->var) ||
          kPointSetAtoms.count(f->var) || kSetSetAtoms.count(f->var) ||
          kSetAtoms.count(f->var) || f->var == "subset")
        fail("reserved word '" + f->var + "' used as a variable");
      expect(Tok::Colon, "':'");
      const std::string sort = expect(Tok::Ident, "'point' or 'subset'").text;
      if (sort == "point")
        f->sort = VarSort::Point;
      else if (sort == "subset")
        f->sort = VarSort::SubsetVar;
      else
        fail("expected 'point' or 'subset'");
      expect(Tok::Dot, "'.'");
      const bool fresh = scope_.insert(f->var).second;
      f->kids.push_back(quantified());
      if (fresh) scope_.erase(f->var);
      return f;
    }
    return implication();
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::Arrow)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::Implies;
      f->kids = {lhs, implication()};
      return f;
    }
    if (accept(Tok::DArrow)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::Iff;
      f->kids = {lhs, disjunction()};
      return f;
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (accept(Tok::Or)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::Or;
      f->kids = {lhs, conjunction()};
      lhs = f;
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = tensor();
    while (accept(Tok::And)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::And;
      f->kids = {lhs, tensor()};
      lhs = f;
    }
    return lhs;
  }

  FormulaPtr tensor() {
    FormulaPtr lhs = unary();
    while (accept(Tok::Tensor)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::Tensor;
      f->kids = {lhs, unary()};
      lhs = f;
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Connective;
      f->conn = Conn::Not;
      f->kids = {unary()};
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      FormulaPtr inner = quantified();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Number) {
      auto f = std::make_shared<Formula>();
      f->node = Node::Const;
      try {
        f->value = Degree::parse(lex_.take().text);
      } catch (const DegreeError& e) {
        fail(e.what());
      }
      return f;
    }
    if (t.kind != Tok::Ident) fail("expected an atom");
    const Token name = lex_.take();
    if (kBuiltins.count(name.text)) {
      expect(Tok::LParen, "'('");
      expect(Tok::RParen, "')'");
      auto f = std::make_shared<Formula>();
      f->node = Node::Builtin;
      f->builtin = name.text;
      return f;
    }
    auto f = std::make_shared<Formula>();
    f->node = Node::Atom;
    f->atom = name.text;
    if (kPointSetAtoms.count(name.text)) {
      expect(Tok::LParen, "'('");
      f->point_args.push_back(point_arg());
      expect(Tok::Comma, "','");
      f->set_args.push_back(set_expr());
      expect(Tok::RParen, "')'");
      return f;
    }
    if (name.text == "pcl") {
      expect(Tok::LParen, "'('");
      f->set_args.push_back(set_expr());
      expect(Tok::Comma, "','");
      f->point_args.push_back(point_arg());
      expect(Tok::RParen, "')'");
      return f;
    }
    if (kSetSetAtoms.count(name.text)) {
      expect(Tok::LParen, "'('");
      f->set_args.push_back(set_expr());
      expect(Tok::Comma, "','");
      f->set_args.push_back(set_expr());
      expect(Tok::RParen, "')'");
      return f;
    }
    if (kSetAtoms.count(name.text)) {
      expect(Tok::LParen, "'('");
      f->set_args.push_back(set_expr());
      expect(Tok::RParen, "')'");
      return f;
    }
    fail("unknown atom '" + name.text + "'");
  }

  std::string point_arg() {
    const Token t = expect(Tok::Ident, "point variable");
    if (!scope_.count(t.text))
      throw FormulaError("unbound identifier '" + t.text + "'", t.line, t.col);
    return t.text;
  }

  SetExpr set_expr() {
    SetExpr lhs = set_inter();
    while (accept(Tok::Plus)) {
      SetExpr u{SetOp::Union, {}, "", {lhs, set_inter()}};
      lhs = std::move(u);
    }
    return lhs;
  }

  SetExpr set_inter() {
    SetExpr lhs = set_post();
    while (accept(Tok::Amp)) {
      SetExpr i{SetOp::Intersection, {}, "", {lhs, set_post()}};
      lhs = std::move(i);
    }
    return lhs;
  }

  SetExpr set_post() {
    SetExpr base = set_atom();
    while (accept(Tok::Compl)) {
      SetExpr c{SetOp::Complement, {}, "", {base}};
      base = std::move(c);
    }
    return base;
  }

  SetExpr set_atom() {
    if (accept(Tok::LBrace)) {
      SetExpr lit{SetOp::Literal, {}, "", {}};
      if (lex_.peek().kind != Tok::RBrace) {
        lit.labels.push_back(expect(Tok::Ident, "point label").text);
        while (accept(Tok::Comma))
          lit.labels.push_back(expect(Tok::Ident, "point label").text);
      }
      expect(Tok::RBrace, "'}'");
      std::sort(lit.labels.begin(), lit.labels.end());
      lit.labels.erase(std::unique(lit.labels.begin(), lit.labels.end()), lit.labels.end());
      return lit;
    }
    if (accept(Tok::LParen)) {
      SetExpr inner = set_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token t = expect(Tok::Ident, "set expression");
    if (!scope_.count(t.text))
      throw FormulaError("unbound identifier '" + t.text + "'", t.line, t.col);
    return SetExpr{SetOp::Var, {}, t.text, {}};
  }

  Lexer lex_;
  std::set<std::string, std::less<>> scope_;
};

}  // namespace

FormulaPtr parse(std::string_view text, const std::vector<std::string>& bound) {
  return Parser(text, bound).run();
}

bool ast_equal(const Formula& a, const Formula& b) {
  if (a.node != b.node) return false;
  switch (a.node) {
    case Node::Const: return a.value == b.value;
    case Node::Builtin: return a.builtin == b.builtin;
    case Node::Atom:
      return a.atom == b.atom && a.point_args == b.point_args && a.set_args == b.set_args;
    case Node::Connective:
      if (a.conn != b.conn || a.kids.size() != b.kids.size()) return false;
      break;
    case Node::Quantifier:
      if (a.quant != b.quant || a.sort != b.sort || a.var != b.var) return false;
      break;
  }
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!ast_equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

namespace {

std::string print_set(const SetExpr& s) {
  switch (s.op) {
    case SetOp::Literal: {
      std::string out = "{";
      for (size_t i = 0; i < s.labels.size(); ++i) {
        if (i) out += ",";
        out += s.labels[i];
      }
      return out + "}";
    }
    case SetOp::Var: return s.var;
    case SetOp::Complement: {
      const SetExpr& k = s.kids[0];
      if (k.op == SetOp::Literal || k.op == SetOp::Var || k.op == SetOp::Complement)
        return print_set(k) + "^c";
      return "(" + print_set(k) + ")^c";
    }
    case SetOp::Union: return "(" + print_set(s.kids[0]) + " + " + print_set(s.kids[1]) + ")";
    case SetOp::Intersection:
      return "(" + print_set(s.kids[0]) + " & " + print_set(s.kids[1]) + ")";
  }
  return "";
}

std::string conn_token(Conn c) {
  switch (c) {
    case Conn::And: return "/\\";
    case Conn::Or: return "\\/";
    case Conn::Tensor: return "(*)";
    case Conn::Implies: return "->";
    case Conn::Iff: return "<->";
    case Conn::Not: return "~";
  }
  return "";
}

}  // namespace

std::string print(const Formula& f) {
  switch (f.node) {
    case Node::Const: return f.value.str();
    case Node::Builtin: return f.builtin + "()";
    case Node::Atom: {
      std::string out = f.atom + "(";
      if (f.atom == "pcl") {
        out += print_set(f.set_args[0]) + ", " + f.point_args[0];
      } else if (!f.point_args.empty()) {
        out += f.point_args[0] + ", " + print_set(f.set_args[0]);
      } else {
        for (size_t i = 0; i < f.set_args.size(); ++i) {
          if (i) out += ", ";
          out += print_set(f.set_args[i]);
        }
      }
      return out + ")";
    }
    case Node::Connective: {
      if (f.conn == Conn::Not) {
        const Formula& k = *f.kids[0];
        const bool atomic = k.node == Node::Const || k.node == Node::Atom ||
                            k.node == Node::Builtin ||
                            (k.node == Node::Connective && k.conn == Conn::Not);
        return atomic ? "~" + print(k) : "~(" + print(k) + ")";
      }
      return "(" + print(*f.kids[0]) + " " + conn_token(f.conn) + " " +
             print(*f.kids[1]) + ")";
    }
    case Node::Quantifier:
      return std::string(f.quant == Quant::Forall ? "forall " : "exists ") + f.var +
             (f.sort == VarSort::Point ? ":point. " : ":subset. ") + print(*f.kids[0]);
  }
  return "";
}

namespace {

int subset_quantifier_depth(const Formula& f) {
  int inner = 0;
  for (const auto& k : f.kids) inner = std::max(inner, subset_quantifier_depth(*k));
  if (f.node == Node::Quantifier && f.sort == VarSort::SubsetVar) return inner + 1;
  return inner;
}

struct EvalContext {
  const Preopen& pre;
  std::map<std::string, Degree> builtin_cache;
};

Subset eval_set(const SetExpr& s, const EvalContext& ctx, const Env& env) {
  const Carrier& c = ctx.pre.carrier();
  switch (s.op) {
    case SetOp::Literal: return c.from_labels(s.labels);
    case SetOp::Var: {
      const auto it = env.find(s.var);
      if (it == env.end()) throw StructuralError("unbound identifier '" + s.var + "'");
      if (it->second.is_point) return Subset{1u << it->second.point};
      return it->second.set;
    }
    case SetOp::Complement: return c.complement(eval_set(s.kids[0], ctx, env));
    case SetOp::Union:
      return unite(eval_set(s.kids[0], ctx, env), eval_set(s.kids[1], ctx, env));
    case SetOp::Intersection:
      return intersect(eval_set(s.kids[0], ctx, env), eval_set(s.kids[1], ctx, env));
  }
  return {};
}

int eval_point(const std::string& name, const EvalContext&, const Env& env) {
  const auto it = env.find(name);
  if (it == env.end()) throw StructuralError("unbound identifier '" + name + "'");
  if (!it->second.is_point)
    throw StructuralError("'" + name + "' is bound to a subset, not a point");
  return it->second.point;
}

Degree crisp(bool b) { return b ? Degree::one() : Degree::zero(); }

Degree eval_node(const Formula& f, EvalContext& ctx, const Env& env) {
  const Preopen& pre = ctx.pre;
  switch (f.node) {
    case Node::Const: return f.value;
    case Node::Builtin: {
      auto it = ctx.builtin_cache.find(f.builtin);
      if (it != ctx.builtin_cache.end()) return it->second;
      Degree d;
      if (f.builtin == "gamma") d = gamma(pre);
      else if (f.builtin == "gamma_p") d = gamma_p(pre);
      else if (f.builtin == "lc") d = lc_degree(pre.space());
      else if (f.builtin == "lpc") d = lpc_degree(pre);
      else if (f.builtin == "t2p") d = t2p(pre);
      else if (f.builtin == "t3p") d = t3p(pre);
      else if (f.builtin == "t4p") d = t4p(pre);
      else if (f.builtin == "ptop") d = pre.p_topological_degree();
      else throw StructuralError("unknown builtin '" + f.builtin + "'");
      ctx.builtin_cache.emplace(f.builtin, d);
      return d;
    }
    case Node::Atom: {
      if (f.atom == "in")
        return crisp(eval_set(f.set_args[0], ctx, env).contains(eval_point(f.point_args[0], ctx, env)));
      if (f.atom == "subset")
        return crisp(is_subset(eval_set(f.set_args[0], ctx, env), eval_set(f.set_args[1], ctx, env)));
      if (f.atom == "disjoint")
        return crisp(are_disjoint(eval_set(f.set_args[0], ctx, env), eval_set(f.set_args[1], ctx, env)));
      if (f.atom == "eq")
        return crisp(eval_set(f.set_args[0], ctx, env) == eval_set(f.set_args[1], ctx, env));
      if (f.atom == "open") return pre.space().tau().at(eval_set(f.set_args[0], ctx, env));
      if (f.atom == "preopen") return pre.tau_p(eval_set(f.set_args[0], ctx, env));
      if (f.atom == "pclosed") return pre.f_p(eval_set(f.set_args[0], ctx, env));
      if (f.atom == "pnbhd")
        return pre.nbhd_p(eval_point(f.point_args[0], ctx, env), eval_set(f.set_args[0], ctx, env));
      if (f.atom == "pcl")
        return pre.cl_p(eval_set(f.set_args[0], ctx, env), eval_point(f.point_args[0], ctx, env));
      throw StructuralError("unknown atom '" + f.atom + "'");
    }
    case Node::Connective: {
      if (f.conn == Conn::Not) return neg(eval_node(*f.kids[0], ctx, env));
      const Degree a = eval_node(*f.kids[0], ctx, env);
      const Degree b = eval_node(*f.kids[1], ctx, env);
      switch (f.conn) {
        case Conn::And: return meet(a, b);
        case Conn::Or: return join(a, b);
        case Conn::Tensor: return tnorm(a, b);
        case Conn::Implies: return implies(a, b);
        case Conn::Iff: return iff(a, b);
        case Conn::Not: break;
      }
      return Degree::zero();
    }
    case Node::Quantifier: {
      const Carrier& c = pre.carrier();
      Env inner = env;
      Degree acc = f.quant == Quant::Forall ? Degree::one() : Degree::zero();
      if (f.sort == VarSort::Point) {
        for (int x = 0; x < c.size(); ++x) {
          inner[f.var] = Binding{true, x, {}};
          const Degree d = eval_node(*f.kids[0], ctx, inner);
          acc = f.quant == Quant::Forall ? meet(acc, d) : join(acc, d);
        }
      } else {
        for (std::uint32_t m = 0; m < c.subset_count(); ++m) {
          inner[f.var] = Binding{false, 0, Subset{m}};
          const Degree d = eval_node(*f.kids[0], ctx, inner);
          acc = f.quant == Quant::Forall ? meet(acc, d) : join(acc, d);
        }
      }
      return acc;
    }
  }
  return Degree::zero();
}

}  // namespace

Degree eval(const Formula& f, const Preopen& pre, const Env& env) {
  if (subset_quantifier_depth(f) >= 3)
    require_family_cap(pre.carrier().size(), "formula with nested subset quantifiers");
  EvalContext ctx{pre, {}};
  return eval_node(f, ctx, env);
}

}  // namespace fuzzitop::dsl
