#include "combalg/expr.hpp"

#include <cctype>

namespace combalg {

namespace {

struct Token {
  enum class T { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };
  T t;
  size_t off = 0;
  Rational num;
  std::string text;  // lowercase identifier
  int index = 0;     // trailing digits of the identifier, 0 when absent
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  auto digits = [&](size_t& p) {
    std::string s;
    while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) s += src[p++];
    return s;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = digits(i);
      std::string d;
      // A slash glued between digit runs is a rational literal; there is no
      // division operator.
      if (i < src.size() && src[i] == '/' && i + 1 < src.size() &&
          std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        ++i;
        d = digits(i);
      }
      Token t;
      t.t = Token::T::Number;
      t.off = start;
      if (d.empty())
        t.num = Rational(Integer(n));
      else {
        if (Integer(d) == 0) throw ExprError(start, "zero denominator in rational literal");
        t.num = rational_from_strings(n, d);
      }
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i])))
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(src[i++])));
      std::string idx = digits(i);
      Token t;
      t.t = Token::T::Ident;
      t.off = start;
      t.text = name;
      t.index = idx.empty() ? 0 : std::stoi(idx);
      out.push_back(t);
      continue;
    }
    Token t;
    t.off = start;
    switch (c) {
      case '+': t.t = Token::T::Plus; break;
      case '-': t.t = Token::T::Minus; break;
      case '*': t.t = Token::T::Star; break;
      case '^': t.t = Token::T::Caret; break;
      case '(': t.t = Token::T::LParen; break;
      case ')': t.t = Token::T::RParen; break;
      case ',': t.t = Token::T::Comma; break;
      default:
        throw ExprError(start, std::string("unexpected character '") + c + "'");
    }
    ++i;
    out.push_back(t);
  }
  Token end;
  end.t = Token::T::End;
  end.off = src.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().t != Token::T::End) throw ExprError(peek().off, "unexpected trailing input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

  ExprPtr expr() {
    ExprPtr left = term();
    while (peek().t == Token::T::Plus || peek().t == Token::T::Minus) {
      Token op = take();
      ExprPtr right = term();
      ExprNode n;
      n.kind = op.t == Token::T::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      n.offset = op.off;
      n.args = {left, right};
      left = node(std::move(n));
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = unary();
    while (peek().t == Token::T::Star) {
      Token op = take();
      ExprPtr right = unary();
      ExprNode n;
      n.kind = ExprNode::Kind::Mul;
      n.offset = op.off;
      n.args = {left, right};
      left = node(std::move(n));
    }
    return left;
  }

  ExprPtr unary() {
    if (peek().t == Token::T::Minus) {
      Token op = take();
      ExprNode n;
      n.kind = ExprNode::Kind::Neg;
      n.offset = op.off;
      n.args = {unary()};
      return node(std::move(n));
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().t == Token::T::Caret) {
      Token op = take();
      if (peek().t != Token::T::Number)
        throw ExprError(peek().off, "expected a nonnegative integer exponent");
      Token e = take();
      if (rat_den(e.num) != 1 || e.num < 0)
        throw ExprError(e.off, "expected a nonnegative integer exponent");
      ExprNode n;
      n.kind = ExprNode::Kind::Pow;
      n.offset = op.off;
      n.exponent = static_cast<int>(rat_num(e.num).convert_to<long long>());
      n.args = {base};
      return node(std::move(n));
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.t) {
      case Token::T::Number: {
        Token tok = take();
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.offset = tok.off;
        n.value = tok.num;
        return node(std::move(n));
      }
      case Token::T::Ident: {
        Token tok = take();
        if (peek().t == Token::T::LParen) {
          take();
          std::vector<ExprPtr> args;
          if (peek().t != Token::T::RParen) {
            args.push_back(expr());
            while (peek().t == Token::T::Comma) {
              take();
              args.push_back(expr());
            }
          }
          if (peek().t != Token::T::RParen) throw ExprError(peek().off, "expected ')'");
          take();
          ExprNode n;
          n.kind = ExprNode::Kind::Call;
          n.offset = tok.off;
          n.name = tok.text;
          n.index = tok.index;
          n.args = std::move(args);
          return node(std::move(n));
        }
        ExprNode n;
        n.kind = ExprNode::Kind::Variable;
        n.offset = tok.off;
        n.name = tok.text;
        n.index = tok.index;
        return node(std::move(n));
      }
      case Token::T::LParen: {
        take();
        ExprPtr e = expr();
        if (peek().t != Token::T::RParen) throw ExprError(peek().off, "expected ')'");
        take();
        return e;
      }
      default:
        throw ExprError(t.off, "expected an operand");
    }
  }
};

template <class A>
typename A::Value eval_node(const ExprPtr& e, const A& alg) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::Number:
      return alg.number(e->value, e->offset);
    case K::Variable:
      return alg.variable(e->name, e->index, e->offset);
    case K::Add:
      return alg.add(eval_node(e->args[0], alg), eval_node(e->args[1], alg));
    case K::Sub:
      return alg.sub(eval_node(e->args[0], alg), eval_node(e->args[1], alg));
    case K::Neg:
      return alg.neg(eval_node(e->args[0], alg));
    case K::Mul:
      return alg.mul(eval_node(e->args[0], alg), eval_node(e->args[1], alg));
    case K::Pow:
      return alg.pow(eval_node(e->args[0], alg), e->exponent);
    case K::Call: {
      std::vector<typename A::Value> vals;
      for (const auto& a : e->args) vals.push_back(eval_node(a, alg));
      return alg.call(e->name, e->index, vals, e->offset);
    }
  }
  throw std::logic_error("expr: unhandled node kind");
}

[[noreturn]] void unknown_variable(const std::string& name, int index, size_t off) {
  std::string full = name + (index > 0 ? std::to_string(index) : "");
  throw ExprError(off, "unknown variable '" + full + "'");
}

int resolved_index(int index, int dim, size_t off, const std::string& name) {
  int i = index == 0 ? 1 : index;
  if (i < 1 || i > dim)
    throw ExprError(off, "variable index out of range in '" + name + std::to_string(index) + "'");
  return i;
}

struct CommAlgebra {
  using Value = CommSeries;
  EvalContext ctx;

  Value number(const Rational& q, size_t) const {
    return CommSeries::constant(ctx.dim, ctx.trunc, q);
  }
  Value variable(const std::string& name, int index, size_t off) const {
    if (name != "x") unknown_variable(name, index, off);
    return CommSeries::variable(ctx.dim, ctx.trunc, resolved_index(index, ctx.dim, off, name));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int n) const { return a.pow(n); }
  Value call(const std::string& name, int index, const std::vector<Value>& args,
             size_t off) const {
    if (name == "inv" && args.size() == 1) return args[0].mul_inverse();
    if (name == "cinv" && args.size() == 1) {
      if (ctx.dim != 1)
        throw ExprError(off, "cinv takes one series per dimension; use the invert subcommand");
      return CommSeries::comp_inverse({args[0]})[0];
    }
    if (name == "d" && index > 0 && args.size() == 1) return args[0].derivative(index);
    if (name == "compose" && args.size() == static_cast<size_t>(ctx.dim) + 1) {
      std::vector<Value> inner(args.begin() + 1, args.end());
      return args[0].compose(inner);
    }
    if (name == "star") throw ExprError(off, "star is only available in weyl mode");
    throw ExprError(off, "unknown function or wrong arity: '" + name + "'");
  }
};

struct NCAlgebra {
  using Value = NCSeries;
  EvalContext ctx;

  Value number(const Rational& q, size_t) const {
    return NCSeries::constant(ctx.dim, ctx.trunc, q);
  }
  Value variable(const std::string& name, int index, size_t off) const {
    if (name != "x") unknown_variable(name, index, off);
    return NCSeries::variable(ctx.dim, ctx.trunc, resolved_index(index, ctx.dim, off, name));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int n) const { return a.pow(n); }
  Value call(const std::string& name, int index, const std::vector<Value>& args,
             size_t off) const {
    if (name == "inv" && args.size() == 1) return args[0].mul_inverse();
    if (name == "cinv" && args.size() == 1) {
      if (ctx.dim != 1)
        throw ExprError(off, "cinv takes one series per dimension; use the invert subcommand");
      return NCSeries::comp_inverse({args[0]})[0];
    }
    if (name == "d" && index > 0 && args.size() == 1) return args[0].derivative(index);
    if (name == "compose" && args.size() == static_cast<size_t>(ctx.dim) + 1) {
      std::vector<Value> inner(args.begin() + 1, args.end());
      return args[0].compose(inner);
    }
    if (name == "star") throw ExprError(off, "star is only available in weyl mode");
    throw ExprError(off, "unknown function or wrong arity: '" + name + "'");
  }
};

struct WeylAlgebra {
  using Value = WeylElement;
  EvalContext ctx;

  Value number(const Rational& q, size_t) const {
    return WeylElement::constant(ctx.dim, ctx.trunc, q);
  }
  Value variable(const std::string& name, int index, size_t off) const {
    if (name == "h") {
      if (index != 0) unknown_variable(name, index, off);
      return WeylElement::hbar(ctx.dim, ctx.trunc);
    }
    if (name == "x")
      return WeylElement::x_var(ctx.dim, ctx.trunc, resolved_index(index, ctx.dim, off, name));
    if (name == "y")
      return WeylElement::y_var(ctx.dim, ctx.trunc, resolved_index(index, ctx.dim, off, name));
    unknown_variable(name, index, off);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a.star(b); }
  Value pow(const Value& a, int n) const { return a.star_pow(n); }
  Value call(const std::string& name, int, const std::vector<Value>& args, size_t off) const {
    if (name == "star" && args.size() == 2) return args[0].star(args[1]);
    throw ExprError(off, "unknown function in weyl mode: '" + name + "'");
  }
};

struct SuperAlgebra {
  using Value = SuperSeries;
  EvalContext ctx;

  Value number(const Rational& q, size_t) const {
    return SuperSeries::constant(ctx.dim, ctx.odd, ctx.trunc, q);
  }
  Value variable(const std::string& name, int index, size_t off) const {
    if (name == "x")
      return SuperSeries::variable(ctx.dim, ctx.odd, ctx.trunc,
                                   resolved_index(index, ctx.dim, off, name));
    if (name == "t")
      return SuperSeries::theta(ctx.dim, ctx.odd, ctx.trunc,
                                resolved_index(index, ctx.odd, off, name));
    unknown_variable(name, index, off);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int n) const { return a.pow(n); }
  Value call(const std::string& name, int, const std::vector<Value>& args, size_t off) const {
    if (name == "inv" && args.size() == 1) return args[0].mul_inverse();
    throw ExprError(off, "unknown function in super mode: '" + name + "'");
  }
};

struct CommSpeciesAlgebra {
  using Value = CommSpecies;
  EvalContext ctx;

  static Value scale(const Value& f, const Integer& n) {
    return Value(f.dim(), [f, n](const MultiIndex& a) { return n * f.count(a); });
  }
  Value number(const Rational& q, size_t off) const {
    if (rat_den(q) != 1 || q < 0)
      throw ExprError(off, "species coefficients must be nonnegative integers");
    return scale(CommSpecies::one(ctx.dim), rat_num(q));
  }
  Value variable(const std::string& name, int index, size_t off) const {
    std::string canonical;
    if (name == "x") canonical = "X" + std::to_string(index == 0 ? 1 : index);
    else if (name == "e") canonical = "E";
    else if (name == "m") canonical = "M";
    else if (name == "par") canonical = "par";
    else if (name == "adn") canonical = "ADN";
    else if (name == "one") canonical = "One";
    else throw ExprError(off, "unknown species builtin '" + name + "'");
    return CommSpecies::builtin(canonical, ctx.dim);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value&, const Value&) const {
    throw std::invalid_argument("species: subtraction needs virtual species");
  }
  Value neg(const Value&) const {
    throw std::invalid_argument("species: negation needs virtual species");
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int n) const {
    Value r = CommSpecies::one(a.dim());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
  }
  Value call(const std::string& name, int index, const std::vector<Value>& args,
             size_t off) const {
    if (name == "d" && index > 0 && args.size() == 1) return args[0].derivative(index);
    if (name == "compose" && args.size() == static_cast<size_t>(ctx.dim) + 1) {
      std::vector<Value> inner(args.begin() + 1, args.end());
      return args[0].compose(inner);
    }
    throw ExprError(off, "unknown function for species: '" + name + "'");
  }
};

struct NCSpeciesAlgebra {
  using Value = NCSpecies;
  EvalContext ctx;

  static Value scale(const Value& f, const Integer& n) {
    return Value(f.dim(), [f, n](const Word& w) { return n * f.count(w); });
  }
  Value number(const Rational& q, size_t off) const {
    if (rat_den(q) != 1 || q < 0)
      throw ExprError(off, "species coefficients must be nonnegative integers");
    return scale(NCSpecies::one(ctx.dim), rat_num(q));
  }
  Value variable(const std::string& name, int index, size_t off) const {
    std::string canonical;
    if (name == "x") canonical = "X" + std::to_string(index == 0 ? 1 : index);
    else if (name == "ne") canonical = "NE";
    else if (name == "one") canonical = "One";
    else throw ExprError(off, "unknown species builtin '" + name + "'");
    return NCSpecies::builtin(canonical, ctx.dim);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value&, const Value&) const {
    throw std::invalid_argument("species: subtraction needs virtual species");
  }
  Value neg(const Value&) const {
    throw std::invalid_argument("species: negation needs virtual species");
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, int n) const {
    Value r = NCSpecies::one(a.dim());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
  }
  Value call(const std::string& name, int index, const std::vector<Value>& args,
             size_t off) const {
    if (name == "d" && index > 0 && args.size() == 1) return args[0].derivative(index);
    if (name == "compose" && args.size() == static_cast<size_t>(ctx.dim) + 1) {
      std::vector<Value> inner(args.begin() + 1, args.end());
      return args[0].compose(inner);
    }
    throw ExprError(off, "unknown function for species: '" + name + "'");
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

CommSeries eval_comm(const ExprPtr& e, const EvalContext& ctx) {
  return eval_node(e, CommAlgebra{ctx});
}

NCSeries eval_nc(const ExprPtr& e, const EvalContext& ctx) { return eval_node(e, NCAlgebra{ctx}); }

WeylElement eval_weyl(const ExprPtr& e, const EvalContext& ctx) {
  return eval_node(e, WeylAlgebra{ctx});
}

SuperSeries eval_super(const ExprPtr& e, const EvalContext& ctx) {
  return eval_node(e, SuperAlgebra{ctx});
}

CommSpecies eval_comm_species(const ExprPtr& e, const EvalContext& ctx) {
  return eval_node(e, CommSpeciesAlgebra{ctx});
}

NCSpecies eval_nc_species(const ExprPtr& e, const EvalContext& ctx) {
  return eval_node(e, NCSpeciesAlgebra{ctx});
}

}  // namespace combalg
