#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/nc_series.hpp"
#include "combalg/species.hpp"
#include "combalg/super_series.hpp"
#include "combalg/weyl.hpp"

namespace combalg {

// Parse or evaluation failure carrying the byte offset into the source text.
class ExprError : public std::runtime_error {
 public:
  ExprError(size_t offset, const std::string& msg)
      : std::runtime_error("error at offset " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// AST over rational literals, indexed variables, + - * ^ and function calls.
struct ExprNode {
  enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow, Call };

  Kind kind;
  size_t offset = 0;         // source position, for diagnostics
  Rational value;            // Number
  std::string name;          // Variable base (lowercase) or call name
  int index = 0;             // variable or D_i index; 0 when absent
  int exponent = 0;          // Pow
  std::vector<ExprPtr> args;
};

// Mode-independent grammar: expr := term (('+'|'-') term)*, term := unary
// ('*' unary)*, unary := '-' unary | power, power := atom ('^' nat)?, atom
// := rational | identifier | call | '(' expr ')'.  Identifiers are
// case-insensitive.
ExprPtr parse_expr(const std::string& src);

struct EvalContext {
  int dim = 1;
  int odd = 0;
  int trunc = 8;
};

CommSeries eval_comm(const ExprPtr& e, const EvalContext& ctx);
NCSeries eval_nc(const ExprPtr& e, const EvalContext& ctx);
WeylElement eval_weyl(const ExprPtr& e, const EvalContext& ctx);
SuperSeries eval_super(const ExprPtr& e, const EvalContext& ctx);

// Builtin-species expressions: identifiers name builtins (E, M, par, ADN,
// One, X1..; NE in the ordered flavor).
CommSpecies eval_comm_species(const ExprPtr& e, const EvalContext& ctx);
NCSpecies eval_nc_species(const ExprPtr& e, const EvalContext& ctx);

}  // namespace combalg
