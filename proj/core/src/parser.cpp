#include "lcdk/parser.hpp"

#include <cctype>
#include <vector>

#include "lcdk/errors.hpp"

namespace lcdk {

namespace {

enum class Tok {
  Ident, LParen, RParen, LBrack, RBrack, Lt, Gt,
  Tilde, Amp, Pipe, Arrow, Iff, Star, Plus, Bang, Dot, End
};

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", pos}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", pos}); ++i; break;
      case '[': out.push_back({Tok::LBrack, "[", pos}); ++i; break;
      case ']': out.push_back({Tok::RBrack, "]", pos}); ++i; break;
      case '~': out.push_back({Tok::Tilde, "~", pos}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", pos}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", pos}); ++i; break;
      case '*': out.push_back({Tok::Star, "*", pos}); ++i; break;
      case '+': out.push_back({Tok::Plus, "+", pos}); ++i; break;
      case '!': out.push_back({Tok::Bang, "!", pos}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", pos}); ++i; break;
      case '>': out.push_back({Tok::Gt, ">", pos}); ++i; break;
      case '<':
        if (text.substr(i, 3) == "<->") {
          out.push_back({Tok::Iff, "<->", pos});
          i += 3;
        } else {
          out.push_back({Tok::Lt, "<", pos});
          ++i;
        }
        break;
      case '-':
        if (text.substr(i, 2) == "->") {
          out.push_back({Tok::Arrow, "->", pos});
          i += 2;
        } else {
          throw ParseError("unexpected character '-'", pos);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
public:
  Parser(std::string_view text, const Environment& env) : tokens_(lex(text)), env_(env) {}

  Formula formula() {
    Formula f = parse_iff();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

  Term term() {
    Term t = parse_term_join();
    expect(Tok::End, "trailing input after term");
    return t;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect(Tok type, const char* what) {
    if (peek().type != type) throw ParseError(what, peek().pos);
    take();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (peek().type == Tok::Iff) {
      take();
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (peek().type == Tok::Arrow) {
      take();
      return Formula::implies(f, parse_imp());  // right associative
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().type == Tok::Pipe) {
      take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().type == Tok::Amp) {
      take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& tok = peek();
    switch (tok.type) {
      case Tok::Tilde:
        take();
        return Formula::neg(parse_unary());
      case Tok::Lt: {
        take();
        Term t = parse_term_join();
        expect(Tok::Gt, "expected '>' closing the diamond term");
        return Formula::diamond(std::move(t), parse_unary());
      }
      case Tok::LBrack:
        return parse_box_like();
      case Tok::Ident:
        take();
        return Formula::prop(tok.text);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", tok.pos);
    }
  }

  Formula parse_box_like() {
    expect(Tok::LBrack, "expected '['");
    if (peek().type == Tok::Bang) {
      take();
      Token name = takeIdent("expected a reading-map name after '!'");
      expect(Tok::RBrack, "expected ']'");
      auto it = env_.reading_maps.find(name.text);
      if (it == env_.reading_maps.end())
        throw ParseError("unknown reading map '" + name.text + "'", name.pos);
      return Formula::bang(it->second, parse_unary());
    }
    if (peek().type == Tok::Ident && peek(1).type == Tok::Dot) {
      Token model = take();
      take();  // '.'
      Token ev = takeIdent("expected an event name after '.'");
      expect(Tok::RBrack, "expected ']'");
      auto it = env_.event_models.find(model.text);
      if (it == env_.event_models.end())
        throw ParseError("unknown event model '" + model.text + "'", model.pos);
      if (!it->second->event_index(ev.text))
        throw ParseError("event model '" + model.text + "' has no event '" + ev.text + "'",
                         ev.pos);
      return Formula::event(it->second, ev.text, parse_unary());
    }
    Term t = parse_term_join();
    expect(Tok::RBrack, "expected ']' closing the box term");
    return Formula::box(std::move(t), parse_unary());
  }

  Token takeIdent(const char* what) {
    if (peek().type != Tok::Ident) throw ParseError(what, peek().pos);
    return take();
  }

  Term parse_term_join() {
    Term t = parse_term_meet();
    while (peek().type == Tok::Plus) {
      take();
      t = Term::join(std::move(t), parse_term_meet());
    }
    return t;
  }

  Term parse_term_meet() {
    Term t = parse_term_primary();
    while (peek().type == Tok::Star) {
      take();
      t = Term::meet(std::move(t), parse_term_primary());
    }
    return t;
  }

  Term parse_term_primary() {
    const Token& tok = peek();
    if (tok.type == Tok::Ident) {
      take();
      return Term::atom(tok.text);
    }
    if (tok.type == Tok::LParen) {
      take();
      Term t = parse_term_join();
      expect(Tok::RParen, "expected ')'");
      return t;
    }
    throw ParseError("expected a term", tok.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Environment& env_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Environment& env) {
  return Parser(text, env).formula();
}

Term parse_term(std::string_view text) {
  static const Environment kEmpty;
  return Parser(text, kEmpty).term();
}

}  // namespace lcdk
