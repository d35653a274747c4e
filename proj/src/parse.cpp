#include "hb/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hb {

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Dot, Tilde, Or, And, Turnstile, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

[[noreturn]] void fail(const std::string& code, std::size_t line, std::size_t col,
                       const std::string& msg) {
  std::ostringstream out;
  out << "line " << line << ", column " << col << ": " << msg;
  throw Error(code, out.str());
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& text, std::size_t start_line) {
  std::vector<Token> out;
  std::size_t line = start_line;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, std::size_t c) {
    out.push_back({k, std::move(t), line, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t at = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Token::Kind::Ident, text.substr(i, j - i), at);
      col += j - i;
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::Kind::LParen, "(", at); break;
      case ')': push(Token::Kind::RParen, ")", at); break;
      case ',': push(Token::Kind::Comma, ",", at); break;
      case '.': push(Token::Kind::Dot, ".", at); break;
      case '~': push(Token::Kind::Tilde, "~", at); break;
      case '\\':
        if (i + 1 < text.size() && text[i + 1] == '/') {
          push(Token::Kind::Or, "\\/", at);
          ++col;
          ++i;
          break;
        }
        fail("syntax-error", line, at, "expected '\\/'");
      case '/':
        if (i + 1 < text.size() && text[i + 1] == '\\') {
          push(Token::Kind::And, "/\\", at);
          ++col;
          ++i;
          break;
        }
        fail("syntax-error", line, at, "expected '/\\'");
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          push(Token::Kind::Turnstile, "|-", at);
          ++col;
          ++i;
          break;
        }
        fail("syntax-error", line, at, "expected '|-'");
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>')
          fail("syntax-error", line, at,
               "'->' is not part of the language; write the formula in negation "
               "normal form");
        fail("syntax-error", line, at, "unexpected character '-'");
      default: {
        fail("syntax-error", line, at, std::string("unexpected character '") + c + "'");
      }
    }
    ++col;
    ++i;
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

bool is_quant_keyword(const Token& t) {
  return t.kind == Token::Kind::Ident && (t.text == "forall" || t.text == "exists");
}

struct Parser {
  const Signature& sig;
  std::vector<Token> toks;
  std::size_t pos = 0;

  Parser(const Signature& s, const std::string& text, std::size_t start_line)
      : sig(s), toks(lex(text, start_line)) {}

  const Token& peek() const { return toks[pos]; }
  Token advance() { return toks[pos++]; }

  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      fail("syntax-error", peek().line, peek().col,
           "expected " + what + ", found " +
               (peek().kind == Token::Kind::End ? "end of input" : "'" + peek().text + "'"));
    return advance();
  }

  void expect_end() {
    if (peek().kind != Token::Kind::End)
      fail("syntax-error", peek().line, peek().col,
           "unexpected '" + peek().text + "' after a complete input");
  }

  TermPtr term() {
    Token name = expect(Token::Kind::Ident, "a term");
    if (is_quant_keyword(name))
      fail("syntax-error", name.line, name.col, "'" + name.text + "' cannot name a term");
    if (peek().kind == Token::Kind::LParen) {
      advance();
      std::vector<TermPtr> args;
      args.push_back(term());
      while (peek().kind == Token::Kind::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Token::Kind::RParen, "')'");
      auto arity = sig.function_arity(name.text);
      if (!arity)
        fail("undeclared-symbol", name.line, name.col,
             "'" + name.text + "' is not a declared function symbol");
      if (*arity != args.size())
        fail("arity-mismatch", name.line, name.col,
             "'" + name.text + "' expects " + std::to_string(*arity) + " arguments, got " +
                 std::to_string(args.size()));
      return Term::app(name.text, std::move(args));
    }
    if (auto arity = sig.function_arity(name.text)) {
      if (*arity != 0)
        fail("arity-mismatch", name.line, name.col,
             "'" + name.text + "' expects " + std::to_string(*arity) +
                 " arguments, got none");
      return Term::app(name.text, {});
    }
    if (sig.relation_arity(name.text))
      fail("undeclared-symbol", name.line, name.col,
           "'" + name.text + "' is a relation and cannot appear in a term");
    return Term::var(name.text);
  }

  FormulaPtr atom(bool negated) {
    Token name = expect(Token::Kind::Ident, "an atom");
    if (is_quant_keyword(name))
      fail(negated ? "negation-not-atomic" : "syntax-error", name.line, name.col,
           negated ? "'~' applies to atoms only" : "misplaced quantifier");
    std::vector<TermPtr> args;
    if (peek().kind == Token::Kind::LParen) {
      advance();
      args.push_back(term());
      while (peek().kind == Token::Kind::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Token::Kind::RParen, "')'");
    }
    auto arity = sig.relation_arity(name.text);
    if (!arity)
      fail("undeclared-symbol", name.line, name.col,
           "'" + name.text + "' is not a declared relation");
    if (*arity != args.size())
      fail("arity-mismatch", name.line, name.col,
           "'" + name.text + "' expects " + std::to_string(*arity) + " arguments, got " +
               std::to_string(args.size()));
    return negated ? Formula::natom(name.text, std::move(args))
                   : Formula::atom(name.text, std::move(args));
  }

  FormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Tilde: {
        Token tilde = advance();
        if (peek().kind == Token::Kind::LParen)
          fail("negation-not-atomic", tilde.line, tilde.col,
               "'~' applies to atoms only; push the negation inward");
        return atom(true);
      }
      case Token::Kind::LParen: {
        advance();
        FormulaPtr f = formula();
        expect(Token::Kind::RParen, "')'");
        return f;
      }
      case Token::Kind::Ident:
        if (is_quant_keyword(t))
          fail("syntax-error", t.line, t.col,
               "a quantifier used as an operand must be parenthesized");
        return atom(false);
      default:
        fail("syntax-error", t.line, t.col,
             std::string("expected a formula, found ") +
                 (t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"));
    }
  }

  FormulaPtr and_chain() {
    FormulaPtr f = unary();
    while (peek().kind == Token::Kind::And) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  FormulaPtr or_chain() {
    FormulaPtr f = and_chain();
    while (peek().kind == Token::Kind::Or) {
      advance();
      f = Formula::disj(std::move(f), and_chain());
    }
    return f;
  }

  FormulaPtr formula() {
    if (is_quant_keyword(peek())) {
      Token q = advance();
      Token var = expect(Token::Kind::Ident, "a variable name");
      if (is_quant_keyword(var))
        fail("syntax-error", var.line, var.col, "'" + var.text + "' cannot name a variable");
      if (sig.relation_arity(var.text) || sig.function_arity(var.text))
        fail("syntax-error", var.line, var.col,
             "quantified variable '" + var.text + "' collides with a declared symbol");
      expect(Token::Kind::Dot, "'.'");
      FormulaPtr body = formula();
      return q.text == "forall" ? Formula::forall(var.text, std::move(body))
                                : Formula::exists(var.text, std::move(body));
    }
    return or_chain();
  }

  Sequent sequent() {
    if (peek().kind == Token::Kind::Turnstile) advance();
    Sequent s;
    if (peek().kind == Token::Kind::End) return s;
    s.push_back(formula());
    while (peek().kind == Token::Kind::Comma) {
      advance();
      s.push_back(formula());
    }
    return s;
  }
};

// Trims ASCII whitespace from both ends.
std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses "NAME/ARITY" from a declaration line.
void parse_decl(const std::string& body, std::size_t line, std::string& name,
                std::size_t& arity) {
  std::size_t slash = body.find('/');
  if (slash == std::string::npos)
    fail("syntax-error", line, 1, "expected NAME/ARITY in declaration");
  name = trim(body.substr(0, slash));
  std::string digits = trim(body.substr(slash + 1));
  if (name.empty() || !ident_start(name[0]))
    fail("syntax-error", line, 1, "invalid symbol name '" + name + "'");
  for (char c : name)
    if (!ident_char(c)) fail("syntax-error", line, 1, "invalid symbol name '" + name + "'");
  if (digits.empty())
    fail("syntax-error", line, 1, "missing arity in declaration of '" + name + "'");
  arity = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail("syntax-error", line, 1, "invalid arity '" + digits + "'");
    arity = arity * 10 + static_cast<std::size_t>(c - '0');
  }
}

}  // namespace

TermPtr parse_term(const std::string& text, const Signature& sig) {
  Parser p(sig, text, 1);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  Parser p(sig, text, 1);
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

Sequent parse_sequent(const std::string& text, const Signature& sig) {
  Parser p(sig, text, 1);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

SequentFile parse_sequent_document(const std::string& text) {
  SequentFile doc;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_seq = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string head = sp == std::string::npos ? line : line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
    if (head == "rel" || head == "fun") {
      std::string name;
      std::size_t arity = 0;
      parse_decl(rest, line_no, name, arity);
      try {
        if (head == "rel")
          doc.signature.add_relation(name, arity);
        else
          doc.signature.add_function(name, arity);
      } catch (const Error& e) {
        fail(e.code, line_no, 1, e.what());
      }
    } else if (head == "seq") {
      if (have_seq) fail("syntax-error", line_no, 1, "duplicate 'seq' line");
      have_seq = true;
      Parser p(doc.signature, rest, line_no);
      doc.sequent = p.sequent();
      p.expect_end();
    } else {
      fail("syntax-error", line_no, 1,
           "expected 'rel', 'fun', 'seq' or a '#' comment, found '" + head + "'");
    }
  }
  if (!have_seq) throw Error("syntax-error", "the document contains no 'seq' line");
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw Error("io-error", "failed while reading '" + path + "'");
  return out.str();
}

SequentFile load_sequent_file(const std::string& path) {
  return parse_sequent_document(read_text_file(path));
}

}  // namespace hb
