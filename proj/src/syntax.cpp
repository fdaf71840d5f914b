#include "lj/syntax.hpp"

#include <cctype>
#include <vector>

namespace lj {

namespace {

enum class Tok { Name, Lambda, Dot, LParen, RParen, LBracket, RBracket, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg, int l, int c) const {
    throw ParseError(msg + " at " + std::to_string(l) + ":" + std::to_string(c));
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance();
    if (pos >= src.size()) return {Tok::End, "", line, col};
    int l = line, c = col;
    char ch = src[pos];
    switch (ch) {
      case '\\': advance(); return {Tok::Lambda, "\\", l, c};
      case '.': advance(); return {Tok::Dot, ".", l, c};
      case '(': advance(); return {Tok::LParen, "(", l, c};
      case ')': advance(); return {Tok::RParen, ")", l, c};
      case '[': advance(); return {Tok::LBracket, "[", l, c};
      case ']': advance(); return {Tok::RBracket, "]", l, c};
      case '/': advance(); return {Tok::Slash, "/", l, c};
      default: break;
    }
    if (ch == '_') {
      advance();
      return {Tok::Name, "_", l, c};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (pos < src.size()) {
        char k = src[pos];
        if (std::isalnum(static_cast<unsigned char>(k)) || k == '\'') {
          name += k;
          advance();
        } else {
          break;
        }
      }
      return {Tok::Name, name, l, c};
    }
    fail(std::string("unexpected character '") + ch + "'", l, c);
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  bool allow_anonymous;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + where + " at " + std::to_string(t.line) + ":" +
                     std::to_string(t.col));
  }

  std::string expect_name(const char* what, bool anonymous_ok) {
    const Token& t = peek();
    if (t.kind != Tok::Name) fail(std::string("expected ") + what, t);
    if (t.text == "_" && !(anonymous_ok && allow_anonymous))
      fail(std::string("expected ") + what + " ('_' not allowed here)", t);
    return take().text;
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    take();
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::Name || k == Tok::Lambda || k == Tok::LParen;
  }

  // atom with its bracket suffixes
  TermPtr atom() {
    TermPtr t;
    const Token& head = peek();
    switch (head.kind) {
      case Tok::Name: {
        if (head.text == "_") fail("expected a term", head);
        t = var(take().text);
        break;
      }
      case Tok::Lambda: {
        take();
        std::string binder = expect_name("a binder after '\\'", false);
        expect(Tok::Dot, "'.' after the binder");
        // The body extends maximally, so bracket suffixes belong to the body.
        return lam(binder, term());
      }
      case Tok::LParen: {
        take();
        t = term();
        expect(Tok::RParen, "')'");
        break;
      }
      default:
        fail("expected a term", head);
    }
    return suffixes(t);
  }

  TermPtr suffixes(TermPtr t) {
    while (peek().kind == Tok::LBracket) {
      take();
      std::string binder = expect_name("a binder", true);
      expect(Tok::Slash, "'/' after the binder");
      TermPtr content = term();
      expect(Tok::RBracket, "']'");
      t = jump(t, binder, content);
    }
    return t;
  }

  TermPtr term() {
    if (!starts_atom()) fail("expected a term", peek());
    TermPtr t = atom();
    // A lambda atom consumes the rest of the term, so the loop then stops.
    while (starts_atom()) t = app(t, atom());
    return t;
  }
};

enum class Ctx { Top, Fun, Arg, JumpBody };

void print_walk(const TermPtr& t, Ctx ctx, std::string& out) {
  switch (t->tag) {
    case Tag::Var:
      out += t->name;
      return;
    case Tag::Lam: {
      bool parens = ctx != Ctx::Top;
      if (parens) out += '(';
      out += '\\';
      out += t->name;
      out += '.';
      print_walk(t->a, Ctx::Top, out);
      if (parens) out += ')';
      return;
    }
    case Tag::App: {
      bool parens = ctx == Ctx::Arg || ctx == Ctx::JumpBody;
      if (parens) out += '(';
      print_walk(t->a, Ctx::Fun, out);
      out += ' ';
      print_walk(t->b, Ctx::Arg, out);
      if (parens) out += ')';
      return;
    }
    case Tag::Jump: {
      print_walk(t->a, Ctx::JumpBody, out);
      out += '[';
      out += t->name;
      out += '/';
      print_walk(t->b, Ctx::Top, out);
      out += ']';
      return;
    }
  }
}

}  // namespace

TermPtr parse_term(const std::string& src, bool allow_anonymous) {
  Lexer lex(src);
  Parser p;
  p.allow_anonymous = allow_anonymous;
  for (;;) {
    Token t = lex.next();
    bool end = t.kind == Tok::End;
    p.toks.push_back(std::move(t));
    if (end) break;
  }
  TermPtr t = p.term();
  if (p.peek().kind != Tok::End) p.fail("expected end of input", p.peek());
  return t;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  out.reserve(static_cast<size_t>(t->sz) * 3);
  print_walk(t, Ctx::Top, out);
  return out;
}

}  // namespace lj
