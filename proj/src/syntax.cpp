#include "onlyknow/syntax.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace onlyknow {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("syntax error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

enum class Tok { End, Not, And, Or, Implies, Iff, LParen, RParen, Modal, Val, Con, Atom, True, False };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
  char modal = 0;  // 'L', 'N' or 'O'
  int agent = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = at_;
      if (at_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[at_];
      if (c == '~') {
        t.kind = Tok::Not;
        ++at_;
      } else if (c == '&') {
        t.kind = Tok::And;
        ++at_;
      } else if (c == '|') {
        t.kind = Tok::Or;
        ++at_;
      } else if (c == '(') {
        t.kind = Tok::LParen;
        ++at_;
      } else if (c == ')') {
        t.kind = Tok::RParen;
        ++at_;
      } else if (text_.substr(at_, 2) == "->") {
        t.kind = Tok::Implies;
        at_ += 2;
      } else if (text_.substr(at_, 3) == "<->") {
        t.kind = Tok::Iff;
        at_ += 3;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        lex_upper(t);
      } else if (std::islower(static_cast<unsigned char>(c))) {
        std::size_t end = at_ + 1;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        t.text = std::string(text_.substr(at_, end - at_));
        t.kind = t.text == "true" ? Tok::True : t.text == "false" ? Tok::False : Tok::Atom;
        at_ = end;
      } else {
        throw ParseError(at_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void skip_space() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  void lex_upper(Token& t) {
    const char c = text_[at_];
    std::size_t end = at_ + 1;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      throw ParseError(at_, "unknown operator '" + std::string(text_.substr(at_, end + 1 - at_)) + "'");
    }
    const std::string_view digits = text_.substr(at_ + 1, end - at_ - 1);
    if (c == 'L' || c == 'N' || c == 'O') {
      if (digits.empty()) throw ParseError(at_, std::string("modal operator '") + c + "' needs an agent index");
      if (digits.size() > 6) throw ParseError(at_ + 1, "agent index too large");
      t.kind = Tok::Modal;
      t.modal = c;
      t.agent = std::stoi(std::string(digits));
    } else if ((c == 'V' || c == 'C') && digits.empty()) {
      t.kind = c == 'V' ? Tok::Val : Tok::Con;
    } else {
      throw ParseError(at_, "unknown operator '" + std::string(text_.substr(at_, end - at_)) + "'");
    }
    at_ = end;
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::optional<int> agents) : toks_(std::move(tokens)), agents_(agents) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  Formula iff() {
    Formula f = imp();
    while (accept(Tok::Iff)) f = make_iff(f, imp());
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (accept(Tok::Implies)) return make_implies(f, imp());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = make_or(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept(Tok::And)) f = make_and(f, unary());
    return f;
  }

  Formula unary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Not:
        return make_not(unary());
      case Tok::Val:
        return make_val(unary());
      case Tok::Con:
        return make_con(unary());
      case Tok::Modal: {
        if (t.agent < 1 || (agents_ && t.agent > *agents_)) {
          throw ParseError(t.pos + 1, "agent index " + std::to_string(t.agent) + " out of range" +
                                          (agents_ ? " 1.." + std::to_string(*agents_) : std::string()));
        }
        const char modal = t.modal;
        const int agent = t.agent;
        Formula body = unary();
        if (modal == 'L') return make_L(agent, body);
        if (modal == 'N') return make_N(agent, body);
        return make_O(agent, body);
      }
      case Tok::LParen: {
        Formula f = iff();
        if (!accept(Tok::RParen)) throw ParseError(peek().pos, "expected ')'");
        return f;
      }
      case Tok::Atom:
        return Formula::atom(t.text);
      case Tok::True:
        return Formula::top();
      case Tok::False:
        return Formula::bottom();
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "expected a formula");
    }
  }

  std::vector<Token> toks_;
  std::optional<int> agents_;
  std::size_t at_ = 0;
};

// Binding strength, loosest first.
constexpr int kIff = 1;
constexpr int kImp = 2;
constexpr int kOr = 3;
constexpr int kAnd = 4;
constexpr int kUnary = 5;

bool is_only_knowing(const Formula& f) {
  if (!f.is(Op::And)) return false;
  const Formula& l = f.lhs();
  const Formula& n = f.rhs();
  return l.is(Op::L) && n.is(Op::N) && l.agent() == n.agent() && n.lhs().is(Op::Not) && n.lhs().lhs() == l.lhs();
}

bool is_con(const Formula& f) { return f.is(Op::Not) && f.lhs().is(Op::Val) && f.lhs().lhs().is(Op::Not); }

void emit(const Formula& f, int context, std::string& out);

void emit_prefix(const std::string& op, const Formula& body, std::string& out) {
  out += op;
  // "~~p" stays compact; named operators need a separator.
  if (op != "~") out += ' ';
  emit(body, kUnary, out);
}

void emit_binary(const Formula& f, const char* op, int level, int left, int right, int context, std::string& out) {
  if (level < context) out += '(';
  emit(f.lhs(), left, out);
  out += op;
  emit(f.rhs(), right, out);
  if (level < context) out += ')';
}

void emit(const Formula& f, int context, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.name();
      return;
    case Op::True:
      out += "true";
      return;
    case Op::False:
      out += "false";
      return;
    case Op::Not:
      if (is_con(f)) return emit_prefix("C", f.lhs().lhs().lhs(), out);
      return emit_prefix("~", f.lhs(), out);
    case Op::L:
      return emit_prefix("L" + std::to_string(f.agent()), f.lhs(), out);
    case Op::N:
      return emit_prefix("N" + std::to_string(f.agent()), f.lhs(), out);
    case Op::Val:
      return emit_prefix("V", f.lhs(), out);
    case Op::And:
      if (is_only_knowing(f)) return emit_prefix("O" + std::to_string(f.lhs().agent()), f.lhs().lhs(), out);
      return emit_binary(f, " & ", kAnd, kAnd, kUnary, context, out);
    case Op::Or:
      return emit_binary(f, " | ", kOr, kOr, kAnd, context, out);
    case Op::Implies:
      return emit_binary(f, " -> ", kImp, kOr, kImp, context, out);
    case Op::Iff:
      return emit_binary(f, " <-> ", kIff, kIff, kImp, context, out);
  }
}

}  // namespace

Formula parse(std::string_view text, std::optional<int> agents) {
  Lexer lexer(text);
  Parser parser(lexer.run(), agents);
  return parser.run();
}

std::string print(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

}  // namespace onlyknow
