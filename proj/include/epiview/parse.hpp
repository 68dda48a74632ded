#ifndef EPIVIEW_PARSE_HPP
#define EPIVIEW_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epiview/core.hpp"
#include "epiview/formula.hpp"
#include "epiview/program.hpp"

namespace epiview {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { lexical, syntax, fragment };

  ParseError(Kind kind, int line, int col, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        kind(kind),
        line(line),
        col(col) {}

  Kind kind;
  int line;
  int col;
};

namespace detail {

struct Token {
  enum class Type {
    ident,   // lowercase-initial word
    kw_not,
    kw_modal,  // K
    pipe,
    comma,
    amp,
    arrow,
    rule_if,  // :-
    dot,
    lparen,
    rparen,
    kw_bot,  // #bot
    kw_top,  // #top
    eof
  };
  Type type;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws_and_comments();
      int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Type::eof, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (c == '%') continue;
      if (std::islower(static_cast<unsigned char>(c))) {
        std::string word = read_word();
        if (word == "not")
          out.push_back({Token::Type::kw_not, word, line, col});
        else
          out.push_back({Token::Type::ident, word, line, col});
        continue;
      }
      if (c == 'K') {
        advance();
        if (pos_ < text_.size() && is_word_char(text_[pos_]))
          throw ParseError(ParseError::Kind::lexical, line, col,
                           "unknown token starting with 'K" +
                               std::string(1, text_[pos_]) + "'");
        out.push_back({Token::Type::kw_modal, "K", line, col});
        continue;
      }
      if (c == '#') {
        advance();
        std::string word = read_word();
        if (word == "bot")
          out.push_back({Token::Type::kw_bot, "#bot", line, col});
        else if (word == "top")
          out.push_back({Token::Type::kw_top, "#top", line, col});
        else
          throw ParseError(ParseError::Kind::lexical, line, col,
                           "unknown token '#" + word + "'");
        continue;
      }
      switch (c) {
        case '|': advance(); out.push_back({Token::Type::pipe, "|", line, col}); continue;
        case ',': advance(); out.push_back({Token::Type::comma, ",", line, col}); continue;
        case '&': advance(); out.push_back({Token::Type::amp, "&", line, col}); continue;
        case '.': advance(); out.push_back({Token::Type::dot, ".", line, col}); continue;
        case '(': advance(); out.push_back({Token::Type::lparen, "(", line, col}); continue;
        case ')': advance(); out.push_back({Token::Type::rparen, ")", line, col}); continue;
        case ':':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '-') {
            advance();
            out.push_back({Token::Type::rule_if, ":-", line, col});
            continue;
          }
          throw ParseError(ParseError::Kind::lexical, line, col, "expected ':-'");
        case '-':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '>') {
            advance();
            out.push_back({Token::Type::arrow, "->", line, col});
            continue;
          }
          throw ParseError(ParseError::Kind::lexical, line, col, "expected '->'");
        default:
          throw ParseError(ParseError::Kind::lexical, line, col,
                           "unknown token '" + std::string(1, c) + "'");
      }
    }
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string read_word() {
    std::string w;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) {
      w += text_[pos_];
      advance();
    }
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at(Token::Type t) const { return peek().type == t; }
  bool accept(Token::Type t) {
    if (!at(t)) return false;
    next();
    return true;
  }
  const Token& expect(Token::Type t, const std::string& what) {
    if (!at(t))
      throw ParseError(ParseError::Kind::syntax, peek().line, peek().col,
                       "expected " + what + ", found '" +
                           (peek().type == Token::Type::eof ? "end of input"
                                                            : peek().text) +
                           "'");
    return next();
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

[[noreturn]] inline void fragment_error(const Token& t, const std::string& msg) {
  throw ParseError(ParseError::Kind::fragment, t.line, t.col, msg);
}

// Theory-mode grammar: implication (right-assoc, lowest), disjunction,
// conjunction, prefix not/K (tightest), primaries.
class TheoryParser {
 public:
  TheoryParser(TokenStream& ts, Signature& sig) : ts_(ts), sig_(sig) {}

  Formula formula() { return implication(); }

 private:
  Formula implication() {
    Formula l = disjunction();
    if (ts_.accept(Token::Type::arrow)) return Formula::impl(std::move(l), implication());
    return l;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (ts_.accept(Token::Type::pipe)) f = Formula::disj(std::move(f), conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (ts_.accept(Token::Type::amp)) f = Formula::conj(std::move(f), unary());
    return f;
  }
  Formula unary() {
    if (ts_.accept(Token::Type::kw_not)) return Formula::neg(unary());
    if (ts_.accept(Token::Type::kw_modal)) return Formula::modal(unary());
    return primary();
  }
  Formula primary() {
    if (ts_.accept(Token::Type::kw_bot)) return Formula::bottom();
    if (ts_.accept(Token::Type::kw_top)) return Formula::top();
    if (ts_.accept(Token::Type::lparen)) {
      Formula f = formula();
      ts_.expect(Token::Type::rparen, "')'");
      return f;
    }
    const Token& t = ts_.expect(Token::Type::ident, "an atom, '(', '#bot' or '#top'");
    return Formula::atom(sig_.add(t.text));
  }

  TokenStream& ts_;
  Signature& sig_;
};

// Program-mode grammar:
//   statement ::= ( head [ ":-" body ] | ":-" body ) "." ;
//   literal   ::= [ "not" [ "not" ] ] ( "K" objlit | objlit ) ;
//   objlit    ::= [ "not" [ "not" ] ] atom ;
// Negation depths beyond two, modal heads and non-literal modal arguments
// fall outside the rule fragment and are reported as fragment violations.
class ProgramParser {
 public:
  ProgramParser(TokenStream& ts, Signature& sig) : ts_(ts), sig_(sig) {}

  Rule rule() {
    Rule r;
    if (!ts_.at(Token::Type::rule_if)) {
      r.head.push_back(head_atom());
      while (ts_.accept(Token::Type::pipe)) {
        int a = head_atom();
        bool dup = false;
        for (int b : r.head) dup |= (b == a);
        if (!dup) r.head.push_back(a);
      }
    }
    if (ts_.accept(Token::Type::rule_if)) {
      r.body.push_back(literal());
      while (ts_.accept(Token::Type::comma)) r.body.push_back(literal());
    }
    const Token& dot = ts_.peek();
    if (dot.type == Token::Type::arrow || dot.type == Token::Type::amp ||
        dot.type == Token::Type::lparen)
      fragment_error(dot, "statement is not a rule of the program fragment");
    ts_.expect(Token::Type::dot, "'.'");
    if (r.head.empty() && r.body.empty())
      throw ParseError(ParseError::Kind::syntax, dot.line, dot.col,
                       "a rule needs a head or a body");
    return r;
  }

 private:
  int head_atom() {
    const Token& t = ts_.peek();
    if (t.type == Token::Type::kw_modal || t.type == Token::Type::kw_not)
      fragment_error(t, "rule heads are plain disjunctions of atoms");
    if (t.type == Token::Type::arrow || t.type == Token::Type::lparen)
      fragment_error(t, "rule heads are plain disjunctions of atoms");
    const Token& a = ts_.expect(Token::Type::ident, "an atom");
    return sig_.add(a.text);
  }

  int negations() {
    int n = 0;
    while (ts_.at(Token::Type::kw_not)) {
      ts_.next();
      ++n;
    }
    return n;
  }

  BodyLiteral literal() {
    const Token& start = ts_.peek();
    int outer = negations();
    BodyLiteral l;
    if (ts_.accept(Token::Type::kw_modal)) {
      l.subjective = true;
      l.outer_negation_depth = outer;
      if (l.outer_negation_depth > 2)
        fragment_error(start, "at most two negations in front of 'K'");
      const Token& arg = ts_.peek();
      int inner = negations();
      if (inner > 2)
        fragment_error(arg, "at most two negations inside a subjective literal");
      if (!ts_.at(Token::Type::ident))
        fragment_error(ts_.peek(),
                       "'K' must be applied to an objective literal");
      l.inner.atom = sig_.add(ts_.next().text);
      l.inner.negation_depth = inner;
      if (ts_.at(Token::Type::arrow) || ts_.at(Token::Type::amp) ||
          ts_.at(Token::Type::lparen))
        fragment_error(ts_.peek(), "'K' must be applied to an objective literal");
      return l;
    }
    int inner = negations();
    int depth = outer + inner;
    if (depth > 2)
      fragment_error(start, "at most two negations on an objective literal");
    if (ts_.at(Token::Type::arrow) || ts_.at(Token::Type::lparen) ||
        ts_.at(Token::Type::amp))
      fragment_error(ts_.peek(), "rule bodies are comma-separated literals");
    l.subjective = false;
    l.inner.atom = sig_.add(ts_.expect(Token::Type::ident, "an atom").text);
    l.inner.negation_depth = depth;
    return l;
  }

  TokenStream& ts_;
  Signature& sig_;
};

}  // namespace detail

/// Parses theory-mode input: `formula "."`, comments with '%'. The
/// signature starts from `sig_hint` (when given) and grows in
/// first-mention order.
inline Theory parse_theory(std::string_view text,
                           const Signature* sig_hint = nullptr) {
  Theory g;
  if (sig_hint) g.signature = *sig_hint;
  detail::TokenStream ts(detail::Lexer(text).run());
  detail::TheoryParser parser(ts, g.signature);
  while (!ts.at(detail::Token::Type::eof)) {
    Formula f = parser.formula();
    ts.expect(detail::Token::Type::dot, "'.'");
    g.add(std::move(f));
  }
  return g;
}

/// Parses program-mode input (the rule fragment). Statements that are
/// theory formulas outside the fragment raise ParseError with
/// Kind::fragment.
inline Program parse_program(std::string_view text,
                             const Signature* sig_hint = nullptr) {
  Program p;
  if (sig_hint) p.signature = *sig_hint;
  detail::TokenStream ts(detail::Lexer(text).run());
  detail::ProgramParser parser(ts, p.signature);
  while (!ts.at(detail::Token::Type::eof)) p.add(parser.rule());
  return p;
}

/// Parses a world-view literal like "[{a,b},{}]" against an existing
/// signature. Unknown atoms are an error.
inline std::vector<Mask> parse_view_argument(std::string_view text,
                                             const Signature& sig) {
  std::vector<Mask> worlds;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(ParseError::Kind::syntax, 1, static_cast<int>(i) + 1, msg);
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    fail("a world view holds at least one belief set");
  }
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] != '{') fail("expected '{'");
    ++i;
    Mask m = 0;
    skip_ws();
    while (i < text.size() && text[i] != '}') {
      std::string word;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_')) {
        word += text[i];
        ++i;
      }
      if (word.empty()) fail("expected an atom name");
      int idx = sig.find(word);
      if (idx < 0) fail("unknown atom '" + word + "'");
      m |= Mask{1} << idx;
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail("expected '}'");
    ++i;  // '}'
    worlds.push_back(m);
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip_ws();
  if (i >= text.size() || text[i] != ']') fail("expected ']'");
  ++i;
  skip_ws();
  if (i != text.size()) fail("trailing input after ']'");
  canonicalize(worlds);
  return worlds;
}

}  // namespace epiview

#endif  // EPIVIEW_PARSE_HPP
