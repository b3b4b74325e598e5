#include "sl2loc/weyl_text.hpp"

#include <cctype>
#include <optional>

namespace sl2loc {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw Error(std::string("parse: expected '") + c + "' in '" + s + "'");
  }

  // digits[/digits]
  Rational number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("parse: expected number in '" + s + "'");
    std::string text = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) throw Error("parse: expected denominator in '" + s + "'");
      text += "/" + s.substr(dstart, pos - dstart);
    }
    return Rational::from_string(text);
  }

  int exponent() {
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("parse: expected exponent in '" + s + "'");
    long e = 0;
    for (size_t i = start; i < pos; ++i) {
      e = e * 10 + (s[i] - '0');
      if (e > 1000000) throw Error("parse: exponent out of range in '" + s + "'");
    }
    return static_cast<int>(neg ? -e : e);
  }

  // z | w | d | k | t | eta, or empty string if none
  std::string ident() {
    skip_ws();
    if (pos + 3 <= s.size() && s.compare(pos, 3, "eta") == 0) {
      pos += 3;
      return "eta";
    }
    char c = peek();
    if (c == 'z' || c == 'w' || c == 'd' || c == 'k' || c == 't') {
      ++pos;
      return std::string(1, c);
    }
    return "";
  }
};

struct Term {
  IndexPoly coeff = IndexPoly(1);
  int coord_exp = 0;
  int del_order = 0;
  bool saw_coord = false;
  bool saw_del = false;
};

struct Parser {
  Lexer lex;
  std::optional<Chart> chart;

  explicit Parser(const std::string& text) : lex{text} {}

  void note_chart(char coord) {
    Chart c = coord == 'z' ? Chart::Zero : Chart::Infinity;
    if (chart && *chart != c)
      throw Error("parse: both z and w appear in '" + lex.s + "'");
    chart = c;
  }

  // factor into an accumulating term
  void factor(Term& term) {
    char c = lex.peek();
    if (c == '(') {
      lex.expect('(');
      IndexPoly sub = sum_scalar();
      lex.expect(')');
      term.coeff *= sub;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      term.coeff = term.coeff * IndexPoly(lex.number());
      return;
    }
    std::string id = lex.ident();
    if (id.empty()) throw Error("parse: unexpected character in '" + lex.s + "'");
    int e = 1;
    if (lex.accept('^')) e = lex.exponent();
    if (id == "z" || id == "w") {
      if (term.saw_del)
        throw Error("parse: coordinate after d (not normal form) in '" + lex.s + "'");
      note_chart(id[0]);
      term.coord_exp += e;
      term.saw_coord = true;
    } else if (id == "d") {
      if (e < 0) throw Error("parse: negative d power in '" + lex.s + "'");
      term.del_order += e;
      term.saw_del = true;
    } else {
      if (e < 0) throw Error("parse: negative symbol power in '" + lex.s + "'");
      IndexPoly sym = id == "k" ? IndexPoly::k() : id == "t" ? IndexPoly::t() : IndexPoly::eta();
      for (int i = 0; i < e; ++i) term.coeff *= sym;
    }
  }

  Term term() {
    Term t;
    factor(t);
    while (lex.accept('*')) factor(t);
    return t;
  }

  // sequence of signed terms, generic over the consumer
  template <typename F>
  void sum(F&& consume) {
    bool neg = false;
    if (lex.accept('-'))
      neg = true;
    else
      lex.accept('+');
    while (true) {
      Term t = term();
      if (neg) t.coeff = -t.coeff;
      consume(t);
      if (lex.accept('+'))
        neg = false;
      else if (lex.accept('-'))
        neg = true;
      else
        break;
    }
  }

  // parenthesized sub-expressions must be pure scalars
  IndexPoly sum_scalar() {
    IndexPoly acc;
    sum([&](const Term& t) {
      if (t.saw_coord || t.saw_del)
        throw Error("parse: coordinate or d inside coefficient parens in '" + lex.s + "'");
      acc += t.coeff;
    });
    return acc;
  }

  WeylOp<IndexPoly> run(Chart fallback) {
    std::vector<Term> terms;
    sum([&](const Term& t) { terms.push_back(t); });
    if (!lex.eof()) throw Error("parse: trailing input in '" + lex.s + "'");
    Chart c = chart.value_or(fallback);
    WeylOp<IndexPoly> op(c);
    for (const auto& t : terms) {
      auto mono = WeylOp<IndexPoly>::monomial(c, t.coord_exp, t.del_order, t.coeff);
      op += mono;
    }
    return op;
  }
};

}  // namespace

WeylOp<IndexPoly> parse_weyl(const std::string& text, Chart fallback_chart) {
  Parser p(text);
  return p.run(fallback_chart);
}

WeylOp<Rational> narrow_to_rational(const WeylOp<IndexPoly>& op) {
  WeylOp<Rational> r(op.chart());
  for (const auto& [i, poly] : op.coeffs()) {
    LaurentPoly<Rational> q(op.chart());
    for (const auto& [e, c] : poly.terms()) {
      if (!c.is_constant())
        throw Error("narrow_to_rational: symbolic coefficient " + c.to_string());
      q.set(e, c.constant_value());
    }
    r.set(i, q);
  }
  return r;
}

WeylOp<Rational> parse_weyl_rational(const std::string& text, Chart fallback_chart) {
  return narrow_to_rational(parse_weyl(text, fallback_chart));
}

IndexPoly parse_indexpoly(const std::string& text) {
  Parser p(text);
  IndexPoly acc;
  p.sum([&](const auto& t) {
    if (t.saw_coord || t.saw_del)
      throw Error("parse_indexpoly: coordinate or d in '" + text + "'");
    acc += t.coeff;
  });
  if (!p.lex.eof()) throw Error("parse_indexpoly: trailing input in '" + text + "'");
  return acc;
}

}  // namespace sl2loc
