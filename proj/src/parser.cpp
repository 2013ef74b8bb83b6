#include "rla/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "rla/error.hpp"

namespace rla {

namespace {

enum class TokenKind {
  Name,
  Integer,
  Text,
  True,
  False,
  Ampersand,
  Pipe,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Arrow,
  RelOpTok,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::int64_t number = 0;
  RelOp op = RelOp::Eq;
  int line = 1;
  int column = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "project", "select", "rename", "minus", "minus_literal",
      "tc",      "tensor", "dee",    "dum",   "empty",
      "rel",     "true",   "false"};
  return kw;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      Token t = next_token();
      const bool end = t.kind == TokenKind::End;
      tokens.push_back(std::move(t));
      if (end) break;
    }
    return tokens;
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token next_token() {
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = TokenKind::End;
      return t;
    }
    const char c = text_[pos_];

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word += text_[pos_];
        advance();
      }
      if (word == "true") {
        t.kind = TokenKind::True;
      } else if (word == "false") {
        t.kind = TokenKind::False;
      } else {
        t.kind = TokenKind::Name;
      }
      t.text = std::move(word);
      return t;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::string digits;
      if (c == '-') {
        digits += '-';
        advance();
      }
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      t.kind = TokenKind::Integer;
      t.number = std::stoll(digits);
      t.text = std::move(digits);
      return t;
    }

    if (c == '"') {
      advance();
      std::string value;
      while (true) {
        if (pos_ >= text_.size())
          throw ParseError("unterminated string literal", t.line, t.column);
        const char d = text_[pos_];
        advance();
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size())
            throw ParseError("unterminated escape", line_, column_);
          value += text_[pos_];
          advance();
          continue;
        }
        value += d;
      }
      t.kind = TokenKind::Text;
      t.text = std::move(value);
      return t;
    }

    const auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
    };

    if (two('-', '>')) {
      advance();
      advance();
      t.kind = TokenKind::Arrow;
      return t;
    }
    if (two('<', '=')) {
      advance();
      advance();
      t.kind = TokenKind::RelOpTok;
      t.op = RelOp::Le;
      return t;
    }
    if (two('>', '=')) {
      advance();
      advance();
      t.kind = TokenKind::RelOpTok;
      t.op = RelOp::Ge;
      return t;
    }
    if (two('!', '=')) {
      advance();
      advance();
      t.kind = TokenKind::RelOpTok;
      t.op = RelOp::Ne;
      return t;
    }

    advance();
    switch (c) {
      case '&': t.kind = TokenKind::Ampersand; return t;
      case '|': t.kind = TokenKind::Pipe; return t;
      case '(': t.kind = TokenKind::LParen; return t;
      case ')': t.kind = TokenKind::RParen; return t;
      case '[': t.kind = TokenKind::LBracket; return t;
      case ']': t.kind = TokenKind::RBracket; return t;
      case '{': t.kind = TokenKind::LBrace; return t;
      case '}': t.kind = TokenKind::RBrace; return t;
      case ',': t.kind = TokenKind::Comma; return t;
      case '<': t.kind = TokenKind::RelOpTok; t.op = RelOp::Lt; return t;
      case '>': t.kind = TokenKind::RelOpTok; t.op = RelOp::Gt; return t;
      case '=': t.kind = TokenKind::RelOpTok; t.op = RelOp::Eq; return t;
      default:
        throw ParseError(std::string("unexpected character `") + c + "`",
                         t.line, t.column);
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr run() {
    ExprPtr e = parse_union();
    expect(TokenKind::End, "end of input");
    return *e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what, peek().line, peek().column);
    return take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  ExprPtr parse_union() {
    ExprPtr left = parse_join();
    while (accept(TokenKind::Pipe))
      left = make_expr(UnionExpr{left, parse_join()});
    return left;
  }

  ExprPtr parse_join() {
    ExprPtr left = parse_atom();
    while (accept(TokenKind::Ampersand))
      left = make_expr(JoinExpr{left, parse_atom()});
    return left;
  }

  ExprPtr parse_atom() {
    if (accept(TokenKind::LParen)) {
      ExprPtr inner = parse_union();
      expect(TokenKind::RParen, "`)`");
      return inner;
    }
    if (peek().kind != TokenKind::Name) fail("expected a relation expression");
    const Token name = take();
    if (!keywords().count(name.text)) return make_expr(NameExpr{name.text});

    if (name.text == "dee") return make_expr(DeeExpr{});
    if (name.text == "dum") return make_expr(DumExpr{});
    if (name.text == "empty") return make_expr(EmptyExpr{bracket_attrs()});
    if (name.text == "project") {
      auto attrs = bracket_attrs();
      return make_expr(ProjectExpr{paren_expr(), std::move(attrs)});
    }
    if (name.text == "select") {
      auto preds = bracket_preds();
      return make_expr(SelectExpr{paren_expr(), std::move(preds)});
    }
    if (name.text == "rename") {
      auto spec = bracket_renames();
      return make_expr(RenameExpr{paren_expr(), std::move(spec)});
    }
    if (name.text == "tc") {
      expect(TokenKind::LBracket, "`[`");
      AttributeName x = attr_name();
      expect(TokenKind::Comma, "`,`");
      AttributeName y = attr_name();
      expect(TokenKind::RBracket, "`]`");
      return make_expr(TcExpr{paren_expr(), std::move(x), std::move(y)});
    }
    if (name.text == "minus" || name.text == "minus_literal" ||
        name.text == "tensor") {
      expect(TokenKind::LParen, "`(`");
      ExprPtr left = parse_union();
      expect(TokenKind::Comma, "`,`");
      ExprPtr right = parse_union();
      expect(TokenKind::RParen, "`)`");
      if (name.text == "minus") return make_expr(MinusExpr{left, right});
      if (name.text == "minus_literal")
        return make_expr(MinusLiteralExpr{left, right});
      return make_expr(TensorExpr{left, right});
    }
    if (name.text == "rel") return parse_relation_literal();
    fail("`" + name.text + "` cannot start an expression");
  }

  AttributeName attr_name() {
    const Token t = expect(TokenKind::Name, "attribute name");
    if (keywords().count(t.text))
      throw ParseError("`" + t.text + "` is reserved", t.line, t.column);
    return t.text;
  }

  std::vector<AttributeName> bracket_attrs() {
    expect(TokenKind::LBracket, "`[`");
    std::vector<AttributeName> attrs;
    std::set<AttributeName> seen;
    if (peek().kind != TokenKind::RBracket) {
      do {
        const Token t = peek();
        AttributeName a = attr_name();
        if (!seen.insert(a).second)
          throw ParseError("duplicate attribute `" + a + "`", t.line, t.column);
        attrs.push_back(std::move(a));
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RBracket, "`]`");
    return attrs;
  }

  std::vector<PredicateAtom> bracket_preds() {
    expect(TokenKind::LBracket, "`[`");
    std::vector<PredicateAtom> preds;
    do {
      PredicateAtom p;
      p.lhs = attr_name();
      const Token op = expect(TokenKind::RelOpTok, "comparison operator");
      p.op = op.op;
      switch (peek().kind) {
        case TokenKind::Name: p.rhs = attr_name(); break;
        case TokenKind::Integer: p.rhs = Value(take().number); break;
        case TokenKind::True: take(); p.rhs = Value(true); break;
        case TokenKind::False: take(); p.rhs = Value(false); break;
        case TokenKind::Text: p.rhs = Value(take().text); break;
        default: fail("expected attribute or literal");
      }
      preds.push_back(std::move(p));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBracket, "`]`");
    return preds;
  }

  RenameSpec bracket_renames() {
    expect(TokenKind::LBracket, "`[`");
    RenameSpec spec;
    do {
      RenamePair pair;
      pair.from = attr_name();
      expect(TokenKind::Arrow, "`->`");
      pair.to = attr_name();
      spec.pairs.push_back(std::move(pair));
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBracket, "`]`");
    return spec;
  }

  ExprPtr paren_expr() {
    expect(TokenKind::LParen, "`(`");
    ExprPtr e = parse_union();
    expect(TokenKind::RParen, "`)`");
    return e;
  }

  ExprPtr parse_relation_literal() {
    const Token opening = peek();
    auto attrs = bracket_attrs();
    Header header(attrs.begin(), attrs.end());
    for (const auto& a : attrs) validate_user_attribute_name(a);

    expect(TokenKind::LBrace, "`{`");
    std::vector<Tuple> rows;
    if (peek().kind != TokenKind::RBrace) {
      do {
        const Token row_tok = expect(TokenKind::LParen, "`(`");
        std::vector<Value> values;
        if (peek().kind != TokenKind::RParen) {
          do {
            switch (peek().kind) {
              case TokenKind::Integer: values.emplace_back(take().number); break;
              case TokenKind::True: take(); values.emplace_back(true); break;
              case TokenKind::False: take(); values.emplace_back(false); break;
              case TokenKind::Text: values.emplace_back(take().text); break;
              default: fail("expected literal value");
            }
          } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RParen, "`)`");
        if (values.size() != attrs.size())
          throw ParseError("row has " + std::to_string(values.size()) +
                               " values for " + std::to_string(attrs.size()) +
                               " attributes",
                           row_tok.line, row_tok.column);
        Tuple row;
        for (std::size_t i = 0; i < attrs.size(); ++i)
          row.emplace(attrs[i], values[i]);
        rows.push_back(std::move(row));
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RBrace, "`}`");
    (void)opening;
    return make_expr(LiteralExpr{Relation::make(std::move(header), rows)});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace rla
