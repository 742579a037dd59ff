#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"
#include "../group.hpp"

namespace flca::frontend {

enum class Func : std::uint8_t {
  Dual, Hom, Tensor, Rhom, Dtensor, Ext, K0, K0mul, Ranks, Filt, Pcomp, ResI, ResP, Is,
};

struct FuncInfo {
  Func func;
  std::string_view name;
  std::size_t arity;
  bool allows_shift;  // arguments may carry [n]
};

inline constexpr FuncInfo kFunctions[] = {
    {Func::Dual, "dual", 1, false},     {Func::Hom, "hom", 2, false},
    {Func::Tensor, "tensor", 2, false}, {Func::Rhom, "rhom", 2, true},
    {Func::Dtensor, "dtensor", 2, true}, {Func::Ext, "ext", 3, true},
    {Func::K0, "k0", 1, true},          {Func::K0mul, "k0mul", 2, true},
    {Func::Ranks, "ranks", 1, false},   {Func::Filt, "filt", 1, false},
    {Func::Pcomp, "pcomp", 2, false},   {Func::ResI, "resI", 1, false},
    {Func::ResP, "resP", 1, false},     {Func::Is, "is", 2, false},
};

inline const FuncInfo& info(Func f) {
  for (const auto& i : kFunctions)
    if (i.func == f) return i;
  throw InvariantViolation("unknown function id");
}

inline std::optional<Func> lookup_function(std::string_view name) {
  for (const auto& i : kFunctions)
    if (i.name == name) return i.func;
  return std::nullopt;
}

inline constexpr std::string_view kProperties[] = {
    "compact",     "discrete", "connected", "typeZ", "typeS1",  "typeA",  "divisible",
    "strictly_divisible", "codivisible", "in_I", "in_P", "toptors", "pgroup",
};

struct Expr {
  enum class Kind : std::uint8_t { Literal, Integer, Property, Sum, Repeat, Shift, Apply };

  Kind kind = Kind::Literal;
  std::size_t pos = 0;
  FlcaGroup literal;          // Literal
  std::int64_t integer = 0;   // Integer, Repeat count, Shift amount
  std::string name;           // Property
  Func func = Func::Dual;     // Apply
  std::vector<Expr> children; // Sum terms, Repeat/Shift operand, Apply arguments
};

// Recursive-descent parser for
//   expr    := term ('+' term)*
//   term    := primary ('^' nat)? ('[' int ']')?
//   primary := atom | '(' expr ')' | func '(' args ')'
class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr(true);
    skip_ws();
    if (i_ != src_.size()) fail("unexpected '" + std::string(1, src_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos, msg); }

  void skip_ws() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip_ws();
    if (i_ < src_.size() && src_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (i_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "' but found '" + src_[i_] + "'");
    }
  }

  bool peek_digit() {
    skip_ws();
    return i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]));
  }

  std::uint64_t nat() {
    skip_ws();
    if (!peek_digit()) fail(i_ < src_.size() ? "expected a number" : "expected a number but input ended");
    std::uint64_t v = 0;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(src_[i_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    const auto v = static_cast<std::int64_t>(nat());
    return neg ? -v : v;
  }

  Prime prime_at(std::size_t pos, std::uint64_t v) const {
    if (!is_prime(v)) fail_at(pos, std::to_string(v) + " is not prime");
    return Prime(v);
  }

  std::string identifier(bool allow_underscore) {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (std::isalnum(static_cast<unsigned char>(c)) || (allow_underscore && c == '_')) ++i_;
      else break;
    }
    return std::string(src_.substr(start, i_ - start));
  }

  Expr expr(bool shift_ok) {
    skip_ws();
    const std::size_t start = i_;
    std::vector<Expr> terms;
    terms.push_back(term(shift_ok));
    while (accept('+')) terms.push_back(term(shift_ok));
    if (terms.size() == 1) return std::move(terms.front());
    Expr e;
    e.kind = Expr::Kind::Sum;
    e.pos = start;
    e.children = std::move(terms);
    return e;
  }

  Expr term(bool shift_ok) {
    skip_ws();
    const std::size_t start = i_;
    Expr e = primary(shift_ok);
    if (accept('^')) {
      Expr r;
      r.kind = Expr::Kind::Repeat;
      r.pos = start;
      r.integer = static_cast<std::int64_t>(nat());
      r.children.push_back(std::move(e));
      e = std::move(r);
    }
    skip_ws();
    const std::size_t bracket = i_;
    if (accept('[')) {
      if (!shift_ok)
        fail_at(bracket, "a shift [n] is only allowed at top level or in arguments of rhom, dtensor, ext, k0, k0mul");
      Expr s;
      s.kind = Expr::Kind::Shift;
      s.pos = start;
      s.integer = integer();
      expect(']');
      s.children.push_back(std::move(e));
      e = std::move(s);
    }
    return e;
  }

  Expr literal(std::size_t pos, FlcaGroup g) {
    Expr e;
    e.kind = Expr::Kind::Literal;
    e.pos = pos;
    e.literal = std::move(g);
    return e;
  }

  Expr primary(bool shift_ok) {
    skip_ws();
    const std::size_t start = i_;
    if (i_ >= src_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Expr e = expr(shift_ok);
      expect(')');
      return e;
    }
    if (peek_digit()) {
      const std::uint64_t v = nat();
      if (v != 0) fail_at(start, "a bare number is not a group (did you mean Z/" + std::to_string(v) + "?)");
      return literal(start, FlcaGroup());
    }
    const std::string id = identifier(false);
    if (id.empty()) fail("unexpected '" + std::string(1, src_[i_]) + "'");

    if (auto f = lookup_function(id)) {
      skip_ws();
      if (i_ < src_.size() && src_[i_] == '(') return application(start, *f);
      fail_at(start, "function " + id + " needs an argument list");
    }
    return atom(start, id);
  }

  Expr atom(std::size_t start, const std::string& id) {
    if (id == "E") fail_at(start, "E and E* are output-only and cannot be used as input");
    if (id == "Q" || id == "Z") {
      if (accept('_')) {
        const std::size_t at = i_;
        const Prime p = prime_at(at, nat());
        if (id == "Z") return literal(start, Atom::p_adic_integers(p));
        if (accept('/')) {
          const std::size_t zpos = i_;
          if (identifier(false) != "Z" || !accept('_')) fail_at(zpos, "expected Z_" + std::to_string(p.value()));
          const std::size_t qat = i_;
          const std::uint64_t q = nat();
          if (q != p.value()) fail_at(qat, "Q_p/Z_q needs p = q");
          return literal(start, Atom::pruefer(p));
        }
        return literal(start, Atom::p_adic_numbers(p));
      }
      if (id == "Z" && accept('/')) {
        const std::size_t at = i_;
        const std::uint64_t m = nat();
        if (m == 0) fail_at(at, "Z/0 is not a finite cyclic group");
        return literal(start, decompose_cyclic(m));
      }
      return literal(start, id == "Z" ? Atom::integers() : Atom::rationals());
    }
    if (id == "R") return literal(start, Atom::reals());
    if (id == "T") return literal(start, Atom::circle());
    if (id == "Sol") return literal(start, Atom::solenoid());
    if (id == "A") return literal(start, Atom::adeles());
    if (id == "Afin") return literal(start, Atom::finite_adeles());
    fail_at(start, "unknown symbol '" + id + "'");
  }

  Expr application(std::size_t start, Func f) {
    const FuncInfo& fi = info(f);
    expect('(');
    Expr e;
    e.kind = Expr::Kind::Apply;
    e.pos = start;
    e.func = f;
    if (!accept(')')) {
      do {
        e.children.push_back(argument(f, e.children.size()));
      } while (accept(','));
      expect(')');
    }
    if (e.children.size() != fi.arity)
      fail_at(start, std::string(fi.name) + " expects " + std::to_string(fi.arity) + " argument" +
                         (fi.arity == 1 ? "" : "s") + ", got " + std::to_string(e.children.size()));
    return e;
  }

  Expr argument(Func f, std::size_t index) {
    skip_ws();
    const std::size_t start = i_;
    Expr e;
    e.pos = start;
    if (f == Func::Ext && index == 0) {
      e.kind = Expr::Kind::Integer;
      e.integer = integer();
      return e;
    }
    if (f == Func::Pcomp && index == 1) {
      e.kind = Expr::Kind::Integer;
      e.integer = static_cast<std::int64_t>(prime_at(start, nat()).value());
      return e;
    }
    if (f == Func::Is && index == 0) {
      e.kind = Expr::Kind::Property;
      e.name = identifier(true);
      for (auto p : kProperties)
        if (p == e.name) return e;
      std::string known;
      for (auto p : kProperties) known += (known.empty() ? "" : ", ") + std::string(p);
      fail_at(start, "unknown property '" + e.name + "' (expected one of " + known + ")");
    }
    return expr(info(f).allows_shift);
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

inline Expr parse(std::string_view input) { return Parser(input).parse(); }

}  // namespace flca::frontend
