#include "ybfox/relations.hpp"

#include <cctype>

#include "ybfox/errors.hpp"
#include "ybfox/fox.hpp"

namespace ybfox {

namespace {

struct TemplateLexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("template: expected '") + c + "'", pos);
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("template: expected identifier", pos);
    return text.substr(start, pos - start);
  }
};

WordExpr parse_word_expr_at(TemplateLexer& lex) {
  const std::size_t at = lex.pos;
  const std::string id = lex.ident();
  if (id == "x" || id == "y" || id == "z") {
    WordExpr e;
    e.kind = WordExpr::Kind::Gen;
    e.gen = id == "x" ? 0 : id == "y" ? 1 : 2;
    return e;
  }
  if (id == "u" || id == "v") {
    WordExpr e;
    e.kind = id == "u" ? WordExpr::Kind::U : WordExpr::Kind::V;
    lex.expect('(');
    e.left = std::make_shared<WordExpr>(parse_word_expr_at(lex));
    lex.expect(',');
    e.right = std::make_shared<WordExpr>(parse_word_expr_at(lex));
    lex.expect(')');
    return e;
  }
  throw ParseError("template: unknown word token '" + id + "'", at);
}

CoefFactor::Coef coef_of(const std::string& id, std::size_t at) {
  if (id == "u1") return CoefFactor::Coef::U1;
  if (id == "u2") return CoefFactor::Coef::U2;
  if (id == "v1") return CoefFactor::Coef::V1;
  if (id == "v2") return CoefFactor::Coef::V2;
  throw ParseError("template: unknown coefficient token '" + id + "'", at);
}

}  // namespace

WordExpr parse_word_expr(const std::string& text) {
  TemplateLexer lex{text};
  WordExpr e = parse_word_expr_at(lex);
  if (!lex.done()) throw ParseError("template: trailing text", lex.pos);
  return e;
}

RingSum parse_ring_expr(const std::string& text) {
  TemplateLexer lex{text};
  RingSum sum;
  for (;;) {
    RingProduct product;
    for (;;) {
      const std::size_t at = lex.pos;
      CoefFactor f;
      f.coef = coef_of(lex.ident(), at);
      lex.expect('(');
      f.left = parse_word_expr_at(lex);
      lex.expect(',');
      f.right = parse_word_expr_at(lex);
      lex.expect(')');
      product.push_back(std::move(f));
      if (lex.done() || lex.peek() == '+') break;
    }
    sum.push_back(std::move(product));
    if (lex.done()) break;
    lex.expect('+');
  }
  return sum;
}

PairSymbols make_pair_symbols(const FreeWord& u, const FreeWord& v) {
  return PairSymbols{u, v, fox_derivative(u, 0), fox_derivative(u, 1),
                     fox_derivative(v, 0), fox_derivative(v, 1)};
}

FreeWord eval_word_expr(const WordExpr& e, const PairSymbols& s) {
  if (e.kind == WordExpr::Kind::Gen) return FreeWord::generator(Alphabet::rank3(), e.gen);
  const FreeWord a = eval_word_expr(*e.left, s);
  const FreeWord b = eval_word_expr(*e.right, s);
  return substitute(e.kind == WordExpr::Kind::U ? s.u : s.v, {a, b});
}

GroupRingElement eval_ring_expr(const RingSum& e, const PairSymbols& s) {
  GroupRingElement sum(Alphabet::rank3());
  for (const RingProduct& product : e) {
    GroupRingElement acc = GroupRingElement::one(Alphabet::rank3());
    for (const CoefFactor& f : product) {
      const GroupRingElement* coef = nullptr;
      switch (f.coef) {
        case CoefFactor::Coef::U1: coef = &s.u1; break;
        case CoefFactor::Coef::U2: coef = &s.u2; break;
        case CoefFactor::Coef::V1: coef = &s.v1; break;
        case CoefFactor::Coef::V2: coef = &s.v2; break;
      }
      const FreeWord a = eval_word_expr(f.left, s);
      const FreeWord b = eval_word_expr(f.right, s);
      acc = ring_multiply(acc, substitute_ring(*coef, {a, b}));
    }
    sum = add(sum, acc);
  }
  return sum;
}

const std::vector<IdentityTemplate>& braid_equation_templates() {
  static const std::vector<IdentityTemplate> table = {
      {"eq-1", "u(u(x,y), u(v(x,y), z))", "u(x, u(y,z))", false},
      {"eq-2", "v(u(x,y), u(v(x,y), z))", "u(v(x, u(y,z)), v(y,z))", false},
      {"eq-3", "v(v(x,y), z)", "v(v(x, u(y,z)), v(y,z))", false},
  };
  return table;
}

const std::vector<IdentityTemplate>& lemma1_templates() {
  static const std::vector<IdentityTemplate> table = {
      {"L1-1",
       "u1(u(x,y), u(v(x,y), z)) u1(x,y) + u2(u(x,y), u(v(x,y), z)) u1(v(x,y), z) v1(x,y)",
       "u1(x, u(y,z))", true},
      {"L1-2",
       "u1(u(x,y), u(v(x,y), z)) u2(x,y) + u2(u(x,y), u(v(x,y), z)) u1(v(x,y), z) v2(x,y)",
       "u2(x, u(y,z)) u1(y,z)", true},
      {"L1-3",
       "u2(u(x,y), u(v(x,y), z)) u2(v(x,y), z)",
       "u2(x, u(y,z)) u2(y,z)", true},
      {"L1-4",
       "v1(u(x,y), u(v(x,y), z)) u1(x,y) + v2(u(x,y), u(v(x,y), z)) u1(v(x,y), z) v1(x,y)",
       "u1(v(x, u(y,z)), v(y,z)) v1(x, u(y,z))", true},
      {"L1-5",
       "v1(u(x,y), u(v(x,y), z)) u2(x,y) + v2(u(x,y), u(v(x,y), z)) u1(v(x,y), z) v2(x,y)",
       "u1(v(x, u(y,z)), v(y,z)) v2(x, u(y,z)) u1(y,z) + u2(v(x, u(y,z)), v(y,z)) v1(y,z)", true},
      {"L1-6",
       "v2(u(x,y), u(v(x,y), z)) u2(v(x,y), z)",
       "u1(v(x, u(y,z)), v(y,z)) v2(x, u(y,z)) u2(y,z) + u2(v(x, u(y,z)), v(y,z)) v2(y,z)", true},
      {"L1-7",
       "v1(v(x,y), z) v1(x,y)",
       "v1(v(x, u(y,z)), v(y,z)) v1(x, u(y,z))", true},
      {"L1-8",
       "v1(v(x,y), z) v2(x,y)",
       "v1(v(x, u(y,z)), v(y,z)) v2(x, u(y,z)) u1(y,z) + v2(v(x, u(y,z)), v(y,z)) v1(y,z)", true},
      {"L1-9",
       "v2(v(x,y), z)",
       "v1(v(x, u(y,z)), v(y,z)) v2(x, u(y,z)) u2(y,z) + v2(v(x, u(y,z)), v(y,z)) v2(y,z)", true},
  };
  return table;
}

const IdentityTemplate& rack_self_distributivity_template() {
  static const IdentityTemplate row = {"rack-sd", "v(v(x,y), z)", "v(v(x,z), v(y,z))", false};
  return row;
}

const std::vector<IdentityTemplate>& rack_algebra_templates() {
  static const std::vector<IdentityTemplate> table = {
      {"rack-alg-1", "v1(v(x,y), z) v1(x,y)", "v1(v(x,z), v(y,z)) v1(x,z)", true},
      {"rack-alg-2", "v1(v(x,y), z) v2(x,y)", "v2(v(x,z), v(y,z)) v1(y,z)", true},
      {"rack-alg-3", "v2(v(x,y), z)",
       "v1(v(x,z), v(y,z)) v2(x,z) + v2(v(x,z), v(y,z)) v2(y,z)", true},
  };
  return table;
}

}  // namespace ybfox
