#include "klab/logic/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "klab/error.hpp"

namespace klab {
namespace {

struct Token {
  enum class Kind { end, lparen, rparen, comma, amp, bar, bang, eq, neq, relation, term, constant };
  Kind kind;
  std::size_t column;  // 1-based
  std::string text;
  Term term{};
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Token::Kind::lparen, col, "("}); ++i; continue;
      case ')': out.push_back({Token::Kind::rparen, col, ")"}); ++i; continue;
      case ',': out.push_back({Token::Kind::comma, col, ","}); ++i; continue;
      case '&': out.push_back({Token::Kind::amp, col, "&"}); ++i; continue;
      case '|': out.push_back({Token::Kind::bar, col, "|"}); ++i; continue;
      case '=': out.push_back({Token::Kind::eq, col, "="}); ++i; continue;
      case '!':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          out.push_back({Token::Kind::neq, col, "!="});
          i += 2;
        } else {
          out.push_back({Token::Kind::bang, col, "!"});
          ++i;
        }
        continue;
      default:
        break;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw parse_error(col, {}, "unexpected character '" + std::string(1, c) + "' at column " + std::to_string(col));
    }
    std::size_t j = i;
    while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
    const std::string word(s.substr(i, j - i));
    if (word == "E" || word == "R") {
      out.push_back({Token::Kind::relation, col, word});
    } else if (word == "true" || word == "false") {
      out.push_back({Token::Kind::constant, col, word});
    } else if ((word[0] == 'x' || word[0] == 'y') && word.size() > 1 &&
               word.find_first_not_of("0123456789", 1) == std::string::npos) {
      const auto digits = word.substr(1);
      if (digits.size() > 6 || std::stoi(digits) < 1) {
        throw parse_error(col, {}, "variable index must be a positive integer at column " + std::to_string(col));
      }
      Token t{Token::Kind::term, col, word};
      t.term = word[0] == 'x' ? Term::x(std::stoi(digits)) : Term::y(std::stoi(digits));
      out.push_back(std::move(t));
    } else {
      throw parse_error(col, {"E", "R", "x<INT>", "y<INT>"},
                        "unknown identifier '" + word + "' at column " + std::to_string(col));
    }
    i = j;
  }
  out.push_back({Token::Kind::end, s.size() + 1, "end of input"});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = disjunction();
    if (peek().kind != Token::Kind::end) fail({"&", "|", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "parse error at column " + std::to_string(t.column) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    msg += ", found '" + t.text + "'";
    throw parse_error(t.column, std::move(expected), msg);
  }

  void expect(Token::Kind kind, const char* text) {
    if (peek().kind != kind) fail({text});
    ++pos_;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (peek().kind == Token::Kind::bar) {
      ++pos_;
      parts.push_back(conjunction());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{literal()};
    while (peek().kind == Token::Kind::amp) {
      ++pos_;
      parts.push_back(literal());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula literal() {
    switch (peek().kind) {
      case Token::Kind::bang:
        ++pos_;
        return Formula::negation(literal());
      case Token::Kind::lparen: {
        ++pos_;
        Formula inner = disjunction();
        expect(Token::Kind::rparen, ")");
        return inner;
      }
      case Token::Kind::constant:
        return take().text == "true" ? Formula::top() : Formula::bottom();
      case Token::Kind::relation:
        return relation_atom();
      case Token::Kind::term:
        return equality_atom();
      default:
        fail({"!", "(", "E", "R", "x<INT>", "y<INT>", "true", "false"});
    }
  }

  Term term() {
    if (peek().kind != Token::Kind::term) fail({"x<INT>", "y<INT>"});
    return take().term;
  }

  Formula relation_atom() {
    const std::string name = take().text;
    expect(Token::Kind::lparen, "(");
    std::vector<Term> terms{term()};
    while (peek().kind == Token::Kind::comma) {
      ++pos_;
      terms.push_back(term());
    }
    if (peek().kind != Token::Kind::rparen) fail({",", ")"});
    ++pos_;
    return Formula::atom(Atom::rel(name, std::move(terms)));
  }

  Formula equality_atom() {
    const Term lhs = take().term;
    const auto op = peek().kind;
    if (op != Token::Kind::eq && op != Token::Kind::neq) fail({"=", "!="});
    ++pos_;
    const Term rhs = term();
    Formula eq = Formula::atom(Atom::eq(lhs, rhs));
    return op == Token::Kind::eq ? eq : Formula::negation(std::move(eq));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace klab
