#include "hopfcalc/expr.hpp"

#include <cctype>
#include <functional>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

namespace {

struct Token {
  enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
              LBrack, RBrack, Comma, End } kind = End;
  std::string text;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) throw ParseError(std::string("expected ") + what);
    advance();
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, ""};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_ = {Token::Num, text_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_ = {Token::Ident, text_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = {Token::Plus, "+"}; return;
      case '-': tok_ = {Token::Minus, "-"}; return;
      case '*': tok_ = {Token::Star, "*"}; return;
      case '/': tok_ = {Token::Slash, "/"}; return;
      case '^': tok_ = {Token::Caret, "^"}; return;
      case '(': tok_ = {Token::LParen, "("}; return;
      case ')': tok_ = {Token::RParen, ")"}; return;
      case '[': tok_ = {Token::LBrack, "["}; return;
      case ']': tok_ = {Token::RBrack, "]"}; return;
      case ',': tok_ = {Token::Comma, ","}; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

Rational parse_rational_tokens(Lexer& lx) {
  Token n = lx.take();
  if (n.kind != Token::Num) throw ParseError("expected number");
  if (lx.peek().kind == Token::Slash) {
    lx.take();
    Token d = lx.take();
    if (d.kind != Token::Num) throw ParseError("expected denominator");
    return Rational(BigInt(n.text), BigInt(d.text));
  }
  return Rational(BigInt(n.text));
}

LabelledDiagram parse_matrix_tokens(Lexer& lx) {
  lx.expect(Token::LBrack, "'['");
  std::vector<std::vector<int>> rows;
  while (true) {
    lx.expect(Token::LBrack, "'['");
    std::vector<int> row;
    while (true) {
      Token n = lx.take();
      if (n.kind != Token::Num) throw ParseError("expected matrix entry");
      row.push_back(std::stoi(n.text));
      if (lx.peek().kind == Token::Comma) {
        lx.take();
        continue;
      }
      break;
    }
    lx.expect(Token::RBrack, "']'");
    rows.push_back(std::move(row));
    if (lx.peek().kind == Token::Comma) {
      lx.take();
      continue;
    }
    break;
  }
  lx.expect(Token::RBrack, "']'");
  return LabelledDiagram::from_rows(rows);
}

// Sum layer shared by every kind:  expr := ['-'] term (('+'|'-') term)*.
template <class B>
LinComb<B> parse_sum(const std::string& text,
                     const std::function<LinComb<B>(Lexer&, int)>& term) {
  Lexer lx(text);
  LinComb<B> out;
  int sign = 1;
  if (lx.peek().kind == Token::Minus) {
    lx.take();
    sign = -1;
  }
  out = out + term(lx, sign);
  while (lx.peek().kind == Token::Plus || lx.peek().kind == Token::Minus) {
    sign = lx.take().kind == Token::Plus ? 1 : -1;
    out = out + term(lx, sign);
  }
  if (lx.peek().kind != Token::End) throw ParseError("trailing input");
  return out;
}

// term := rational | rational '*' elem | elem, for kinds whose elements
// never start with a digit; "1" after '*' (or as a bare term) is the unit.
template <class B>
LinComb<B> parse_scalar_lc(const std::string& text, const B& unit,
                           const std::function<B(Lexer&)>& elem) {
  return parse_sum<B>(text, [&](Lexer& lx, int sign) {
    Rational coef(sign);
    if (lx.peek().kind == Token::Num) {
      coef = coef * parse_rational_tokens(lx);
      if (lx.peek().kind != Token::Star) return LinComb<B>(unit, coef);
      lx.take();
      if (lx.peek().kind == Token::Num) {
        Token one = lx.take();
        if (one.text != "1") throw ParseError("expected basis element after '*'");
        return LinComb<B>(unit, coef);
      }
      return LinComb<B>(elem(lx), coef);
    }
    return LinComb<B>(elem(lx), coef);
  });
}

Word word_elem(Lexer& lx, const Alphabet& a) {
  Token t = lx.take();
  if (t.kind != Token::Ident) throw ParseError("expected a word");
  for (char c : t.text) {
    if (!std::islower(static_cast<unsigned char>(c)))
      throw ParseError("words use lowercase letters only: " + t.text);
    a.require(c);
  }
  return Word(t.text);
}

Monomial monomial_elem(Lexer& lx, const Alphabet& a) {
  Monomial m;
  bool any = false;
  while (lx.peek().kind == Token::Ident) {
    Token t = lx.take();
    for (char c : t.text) {
      if (!std::islower(static_cast<unsigned char>(c)))
        throw ParseError("monomial letters are lowercase: " + t.text);
      a.require(c);
    }
    any = true;
    // An exponent binds to the last letter of the run: "ab^2" = a b^2.
    int last_exp = 1;
    if (lx.peek().kind == Token::Caret) {
      lx.take();
      Token n = lx.take();
      if (n.kind != Token::Num) throw ParseError("expected exponent");
      last_exp = std::stoi(n.text);
    }
    for (std::size_t i = 0; i + 1 < t.text.size(); ++i) m.mul_var(Var{t.text[i], 0}, 1);
    m.mul_var(Var{t.text.back(), 0}, last_exp);
  }
  if (!any) throw ParseError("expected a monomial");
  return m;
}

// A tensor leg: a word or "1".
Word tensor_leg(Lexer& lx, const Alphabet& a) {
  if (lx.peek().kind == Token::Num) {
    Token n = lx.take();
    if (n.text != "1") throw ParseError("expected word or 1");
    return Word::empty();
  }
  return word_elem(lx, a);
}

void expect_tensor_op(Lexer& lx) {
  if (lx.peek().kind == Token::LParen) {
    lx.take();
    Token x = lx.take();
    if (x.kind != Token::Ident || x.text != "x") throw ParseError("expected (x)");
    lx.expect(Token::RParen, "')'");
    return;
  }
  if (lx.peek().kind == Token::Ident && lx.peek().text == "ox") {
    lx.take();
    return;
  }
  throw ParseError("expected tensor operator (x) or ox");
}

}  // namespace

LinComb<Word> parse_word_expr(const std::string& text, const Alphabet& a) {
  return parse_scalar_lc<Word>(text, Word::empty(),
                               [&](Lexer& lx) { return word_elem(lx, a); });
}

LinComb<Monomial> parse_monomial_expr(const std::string& text, const Alphabet& a) {
  return parse_scalar_lc<Monomial>(text, Monomial::one(),
                                   [&](Lexer& lx) { return monomial_elem(lx, a); });
}

LinComb<TraceWord> parse_trace_expr(const std::string& text, const Alphabet& a,
                                    const CommutationGraph& theta) {
  return parse_scalar_lc<TraceWord>(text, TraceWord{Word::empty()}, [&](Lexer& lx) {
    return trace_normal_form(word_elem(lx, a), theta);
  });
}

LinComb<GroupElem> parse_group_expr(const std::string& text, const FiniteGroup::Ptr& g) {
  return parse_scalar_lc<GroupElem>(
      text, GroupElem{g, FiniteGroup::identity()}, [&](Lexer& lx) {
        Token t = lx.take();
        if (t.kind != Token::Ident) throw ParseError("expected a group element name");
        int idx = g->index_of(t.text);
        if (idx < 0)
          throw ParseError("unknown element of " + g->name() + ": " + t.text);
        return GroupElem{g, idx};
      });
}

LinComb<LabelledDiagram> parse_ldiag_expr(const std::string& text) {
  return parse_scalar_lc<LabelledDiagram>(
      text, LabelledDiagram::empty(),
      [](Lexer& lx) { return parse_matrix_tokens(lx); });
}

LinComb<Diagram> parse_diag_expr(const std::string& text) {
  return parse_scalar_lc<Diagram>(
      text, Diagram{LabelledDiagram::empty()},
      [](Lexer& lx) { return diag_canonical(parse_matrix_tokens(lx)); });
}

LinComb<TensorBasis<Word, Word>> parse_word_tensor_expr(const std::string& text,
                                                        const Alphabet& a) {
  using TB = TensorBasis<Word, Word>;
  // term := [rational '*'] leg (x) leg; a leading "1" is either the whole
  // coefficient (followed by '*') or the left leg (followed by the tensor
  // operator), so look one token ahead after the number.
  return parse_sum<TB>(text, [&](Lexer& lx, int sign) {
    Rational coef(sign);
    Word left;
    bool have_left = false;
    if (lx.peek().kind == Token::Num) {
      Rational r = parse_rational_tokens(lx);
      if (lx.peek().kind == Token::Star) {
        lx.take();
        coef = coef * r;
      } else if (r == Rational(1)) {
        left = Word::empty();
        have_left = true;
      } else {
        throw ParseError("expected '*' or tensor operator after coefficient");
      }
    }
    if (!have_left) left = tensor_leg(lx, a);
    expect_tensor_op(lx);
    Word right = tensor_leg(lx, a);
    return LinComb<TB>(TB{left, right}, coef);
  });
}

Word parse_single_word(const std::string& text, const Alphabet& a) {
  Lexer lx(text);
  if (lx.peek().kind == Token::End) return Word::empty();
  if (lx.peek().kind == Token::Num) {
    Token n = lx.take();
    if (n.text != "1") throw ParseError("expected a word");
    if (lx.peek().kind != Token::End) throw ParseError("trailing input");
    return Word::empty();
  }
  Word w = word_elem(lx, a);
  if (lx.peek().kind != Token::End) throw ParseError("trailing input");
  return w;
}

LabelledDiagram parse_matrix_literal(const std::string& text) {
  Lexer lx(text);
  if (lx.peek().kind == Token::Num) {
    Token n = lx.take();
    if (n.text == "1" && lx.peek().kind == Token::End) return LabelledDiagram::empty();
    throw ParseError("expected a matrix literal");
  }
  LabelledDiagram d = parse_matrix_tokens(lx);
  if (lx.peek().kind != Token::End) throw ParseError("trailing input");
  return d;
}

}  // namespace hopfcalc
