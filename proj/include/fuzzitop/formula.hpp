#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzitop/preopen.hpp"

namespace fuzzitop::dsl {

// Set-valued expressions: brace literals of point labels, bound variables
// (a point variable in set position denotes its singleton), complement
// (postfix ^c), intersection (&, binds tighter) and union (+).
enum class SetOp { Literal, Var, Complement, Union, Intersection };

struct SetExpr {
  SetOp op = SetOp::Literal;
  std::vector<std::string> labels;  // Literal
  std::string var;                  // Var
  std::vector<SetExpr> kids;
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

enum class Conn { Not, And, Or, Tensor, Implies, Iff };
enum class Quant { Forall, Exists };
enum class VarSort { Point, SubsetVar };
enum class Node { Const, Atom, Builtin, Connective, Quantifier };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Node node = Node::Const;

  Degree value;                         // Const
  std::string atom;                     // Atom name
  std::vector<std::string> point_args;  // Atom point arguments (variables)
  std::vector<SetExpr> set_args;        // Atom set arguments
  std::string builtin;                  // Builtin name
  Conn conn = Conn::Not;                // Connective
  Quant quant = Quant::Forall;          // Quantifier
  VarSort sort = VarSort::Point;
  std::string var;
  std::vector<FormulaPtr> kids;
};

bool ast_equal(const Formula& a, const Formula& b);

// Grammar (precedence low to high, "->"/"<->" at the same level,
// "->" right-associative):
//   quant  := ("forall"|"exists") ident ":" ("point"|"subset") "." quant | impl
//   impl   := or ("->" impl | "<->" or)?
//   or     := and ("\/" and)*
//   and    := tensor ("/\" tensor)*
//   tensor := unary ("(*)" unary)*
//   unary  := "~" unary | atom | "(" quant ")"
// Atoms: degree literals; in(x,A), subset(A,B), disjoint(A,B), eq(A,B);
// open(A), preopen(A), pclosed(A), pnbhd(x,A), pcl(A,x); zero-argument
// builtins gamma(), gamma_p(), lc(), lpc(), t2p(), t3p(), t4p(), ptop().
// Free identifiers must appear in `bound` (the CLI passes its --bind names).
FormulaPtr parse(std::string_view text, const std::vector<std::string>& bound = {});

std::string print(const Formula& f);

struct Binding {
  bool is_point = false;
  int point = 0;
  Subset set;
};
using Env = std::map<std::string, Binding, std::less<>>;

// Crisp atoms evaluate to 0/1; fuzzy atoms dispatch to the space's degree
// operations; quantifiers fold inf/sup over points or the powerset. A
// formula nesting three or more subset quantifiers refuses carriers above
// the family-quantifier cap.
Degree eval(const Formula& f, const Preopen& pre, const Env& env = {});

}  // namespace fuzzitop::dsl
