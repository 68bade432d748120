#pragma once

#include "sgs/extension.hpp"
#include "sgs/models.hpp"
#include "sgs/region.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgs {

// Surface syntax of the calculator, lowest precedence first:
//   expr    := term (('+' | '-') term)*
//   term    := '-' term | product
//   product := postfix ('*' postfix)*
//   postfix := atom ('|' interval)*          restriction binds tightest
//   atom    := rational | 'x' ('^' nat)? | 'abs' ('(' rational ')')?
//            | 'saw' '(' nat ')'
//            | 'pw' '[' interval ':' expr (';' interval ':' expr)* ']'
//            | 'D' '^' nat '(' expr ')' | 'embed' '(' expr ')'
//            | 'glue' '{' interval ':' expr (';' interval ':' expr)* '}'
//            | 'F' nat '(' integer ')' | '(' expr ')'
// Products stay at the function level; a lone integer may also scale a class
// by repeated addition. abs(c) is |x - c|; saw(k) is the triangle wave with k
// interior kinks, slopes +-1, value 0 at the left end.
struct ExprAST {
  enum class Kind {
    number,   // num
    var_x,    // x^arg (arg >= 1)
    abs,      // |x - num|
    saw,      // arg kinks
    pw,       // parts: (interval, expr) table
    add, sub, neg, mul,
    deriv,    // arg = order, kids[0]
    restrict_to,  // iv, kids[0]
    embed_fn,     // kids[0]
    glue,         // parts
    fclass,       // [f_arg, m]
  };
  Kind kind{};
  Rational num;
  int arg = 0;
  Int m;
  Interval iv{};
  std::vector<std::unique_ptr<ExprAST>> kids;
  std::vector<std::pair<Interval, std::unique_ptr<ExprAST>>> parts;
};

using ExprPtr = std::unique_ptr<ExprAST>;

// Throws std::invalid_argument with a position note on syntax errors.
ExprPtr parse_expr(std::string_view src);

// Minimal-order form of a piecewise-polynomial class: while the label has
// positive order and the representative is C^1, trade one derivative for one
// order. Each step stays inside the class, so the result is equivalent and
// its order is the least over all representatives.
ExtElement pp_order_reduce(const ExtElement&);

// A calculator result: either a bare function literal or a class over a
// region of the ambient domain.
struct CalcValue {
  enum class Kind { fn, cls };
  Kind kind = Kind::fn;
  Region region;
  PPFunction fn;   // kind fn
  ExtElement cls;  // kind cls
};

// Evaluates expressions against one model, building the enlargement of each
// restricted region on demand. Type errors (class products, derivatives in a
// model without them) throw std::invalid_argument; a glue whose patches
// disagree on an overlap throws EvalFailure instead, since the expression is
// well formed but names no element.
struct EvalFailure {
  std::string what;
};

class Evaluator {
 public:
  Evaluator(std::string model, Interval domain);

  CalcValue eval(const ExprAST&);
  const ExtSGroup& ext_at(const Region&);
  const SGroup& group_of(const Region&);
  // Classes meeting the base collapse onto their value; integer classes
  // additionally print as the fraction they reconstruct.
  std::string render(const CalcValue&);
  ExtElement as_class(const CalcValue&);  // embeds function literals

  const std::string& model() const { return model_; }
  const Interval& domain() const { return domain_; }

 private:
  struct Node {
    SGroup sg;
    ExtSGroup ext;
  };
  const Node& at(const Region&);
  CalcValue eval_in(const ExprAST&, const Region&);
  PPFunction eval_fn(const ExprAST&, const Region&);

  std::string model_;
  Interval domain_;
  std::map<Region, std::unique_ptr<Node>, RegionLess> cache_;
};

}  // namespace sgs
