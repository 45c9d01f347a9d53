#include "teamlogic/text.hpp"

#include <cctype>
#include <vector>

#include "teamlogic/translate.hpp"

namespace teamlogic {

namespace {

enum class Tok {
  kLParen,
  kRParen,
  kSemi,
  kComma,
  kTilde,
  kDash,
  kConj,       // /\ .
  kBoolOr,     // (v)
  kLaxOr,      // \/
  kStrictOr,   // \./
  kLaxCoOr,    // (^)
  kStrictCoOr, // (.^)
  kIdent,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t pos = i_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::kEnd, "", pos});
        return out;
      }
      const char c = s_[i_];
      if (c == '(') {
        // The multi-character operator tokens start with '(' and must match
        // exactly; "( v )" is an ordinary parenthesized identifier.
        if (s_.compare(i_, 3, "(v)") == 0) {
          out.push_back({Tok::kBoolOr, "(v)", pos});
          i_ += 3;
        } else if (s_.compare(i_, 3, "(^)") == 0) {
          out.push_back({Tok::kLaxCoOr, "(^)", pos});
          i_ += 3;
        } else if (s_.compare(i_, 4, "(.^)") == 0) {
          out.push_back({Tok::kStrictCoOr, "(.^)", pos});
          i_ += 4;
        } else {
          out.push_back({Tok::kLParen, "(", pos});
          ++i_;
        }
      } else if (c == ')') {
        out.push_back({Tok::kRParen, ")", pos});
        ++i_;
      } else if (c == ';') {
        out.push_back({Tok::kSemi, ";", pos});
        ++i_;
      } else if (c == ',') {
        out.push_back({Tok::kComma, ",", pos});
        ++i_;
      } else if (c == '~') {
        out.push_back({Tok::kTilde, "~", pos});
        ++i_;
      } else if (c == '-') {
        out.push_back({Tok::kDash, "-", pos});
        ++i_;
      } else if (c == '\\') {
        if (s_.compare(i_, 2, "\\/") == 0) {
          out.push_back({Tok::kLaxOr, "\\/", pos});
          i_ += 2;
        } else if (s_.compare(i_, 3, "\\./") == 0) {
          out.push_back({Tok::kStrictOr, "\\./", pos});
          i_ += 3;
        } else {
          fail(pos, "expected \\/ or \\./");
        }
      } else if (c == '/') {
        if (s_.compare(i_, 2, "/\\") == 0) {
          out.push_back({Tok::kConj, "/\\", pos});
          i_ += 2;
        } else {
          fail(pos, "expected /\\");
        }
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
          ++j;
        }
        out.push_back({Tok::kIdent, s_.substr(i_, j - i_), pos});
        i_ = j;
      } else {
        fail(pos, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
    }
  }
  [[noreturn]] void fail(std::size_t pos, const std::string& msg) {
    throw SyntaxError("at offset " + std::to_string(pos) + ": " + msg);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_bool_or();
    expect(Tok::kEnd, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) {
      fail("expected " + what);
    }
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError("at offset " + std::to_string(peek().pos) + ": " + msg +
                      (peek().kind == Tok::kEnd
                           ? " (got end of input)"
                           : " (got '" + peek().text + "')"));
  }

  // One level per connective, loosest first; right recursion gives right
  // associativity.
  FormulaPtr parse_bool_or() {
    FormulaPtr f = parse_lax_co_or();
    if (accept(Tok::kBoolOr)) return bool_or(f, parse_bool_or());
    return f;
  }
  FormulaPtr parse_lax_co_or() {
    FormulaPtr f = parse_strict_co_or();
    if (accept(Tok::kLaxCoOr)) return lax_co_or(f, parse_lax_co_or());
    return f;
  }
  FormulaPtr parse_strict_co_or() {
    FormulaPtr f = parse_lax_or();
    if (accept(Tok::kStrictCoOr)) return strict_co_or(f, parse_strict_co_or());
    return f;
  }
  FormulaPtr parse_lax_or() {
    FormulaPtr f = parse_strict_or();
    if (accept(Tok::kLaxOr)) return lax_or(f, parse_lax_or());
    return f;
  }
  FormulaPtr parse_strict_or() {
    FormulaPtr f = parse_conj();
    if (accept(Tok::kStrictOr)) return strict_or(f, parse_strict_or());
    return f;
  }
  FormulaPtr parse_conj() {
    FormulaPtr f = parse_unary();
    if (accept(Tok::kConj)) return conj(f, parse_conj());
    return f;
  }

  FormulaPtr parse_unary() {
    if (accept(Tok::kTilde)) return strong_neg(parse_unary());
    if (accept(Tok::kDash)) return dual_neg(parse_unary());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (accept(Tok::kLParen)) {
      FormulaPtr f = parse_bool_or();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (peek().kind != Tok::kIdent) fail("expected a formula");
    const Token name = take();
    if (name.text == "top") return top();
    if (name.text == "bot") return bot();
    if (name.text == "NE") return sugar_NE();
    if (name.text == "E") {
      expect(Tok::kLParen, "'(' after E");
      FormulaPtr a = parse_bool_or();
      expect(Tok::kRParen, "')'");
      return sugar_E(a);
    }
    if (name.text == "hook") {
      expect(Tok::kLParen, "'(' after hook");
      FormulaPtr a = parse_bool_or();
      expect(Tok::kComma, "','");
      FormulaPtr f = parse_bool_or();
      expect(Tok::kRParen, "')'");
      return sugar_hook(a, f);
    }
    if (name.text == "iff") {
      expect(Tok::kLParen, "'(' after iff");
      Tuple a = parse_tuple();
      expect(Tok::kSemi, "';'");
      Tuple b = parse_tuple();
      expect(Tok::kRParen, "')'");
      return sugar_iff(a, b);
    }
    if (name.text == "dep" || name.text == "perp" || name.text == "perpc" ||
        name.text == "inc" || name.text == "excl" || name.text == "ups") {
      return parse_atom(name.text);
    }
    if (!valid_prop_name(name.text)) {
      fail("'" + name.text + "' is not a valid proposition name");
    }
    return prop(name.text);
  }

  FormulaPtr parse_atom(const std::string& name) {
    expect(Tok::kLParen, "'(' after " + name);
    std::vector<Tuple> tuples;
    tuples.push_back(parse_tuple());
    while (accept(Tok::kSemi)) tuples.push_back(parse_tuple());
    expect(Tok::kRParen, "')'");
    AtomKind kind;
    if (name == "dep") kind = AtomKind::kDep;
    else if (name == "perp") kind = AtomKind::kIndep;
    else if (name == "perpc") kind = AtomKind::kCondIndep;
    else if (name == "inc") kind = AtomKind::kIncl;
    else if (name == "excl") kind = AtomKind::kExcl;
    else kind = AtomKind::kAnon;
    return make_atom(kind, std::move(tuples));
  }

  // Atom/iff arguments: zero or more purely propositional primaries, each
  // optionally dual-negated, separated by spaces or single commas.  The
  // canonical printer uses spaces.
  Tuple parse_tuple() {
    Tuple args;
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::kIdent || k == Tok::kLParen || k == Tok::kDash) {
        if (accept(Tok::kDash)) {
          args.push_back(dual_neg(parse_primary()));
        } else {
          args.push_back(parse_primary());
        }
        if (accept(Tok::kComma)) {
          const Tok next = peek().kind;
          if (next != Tok::kIdent && next != Tok::kLParen &&
              next != Tok::kDash) {
            fail("expected a tuple element after ','");
          }
        }
      } else {
        return args;
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

const char* op_text(NodeKind k) {
  switch (k) {
    case NodeKind::kConj: return "/\\";
    case NodeKind::kBoolOr: return "(v)";
    case NodeKind::kLaxOr: return "\\/";
    case NodeKind::kStrictOr: return "\\./";
    case NodeKind::kLaxCoOr: return "(^)";
    case NodeKind::kStrictCoOr: return "(.^)";
    default: return "?";
  }
}

void print_rec(const FormulaPtr& f, std::string& out) {
  switch (f->kind()) {
    case NodeKind::kLiteral:
      if (f->lit_strong()) out += '~';
      switch (f->lit_base()) {
        case LitBase::kTop: out += "top"; break;
        case LitBase::kBot: out += "bot"; break;
        case LitBase::kProp: out += f->prop(); break;
        case LitBase::kNegProp: out += '-'; out += f->prop(); break;
      }
      return;
    case NodeKind::kStrongNeg:
      out += '~';
      print_rec(f->left(), out);
      return;
    case NodeKind::kAtom: {
      out += atom_name(f->atom_kind());
      out += '(';
      for (std::size_t t = 0; t < f->tuples().size(); ++t) {
        if (t) out += ';';
        const Tuple& tup = f->tuples()[t];
        for (std::size_t j = 0; j < tup.size(); ++j) {
          if (j) out += ' ';
          print_rec(tup[j], out);
        }
      }
      out += ')';
      return;
    }
    default:
      out += '(';
      print_rec(f->left(), out);
      out += ' ';
      out += op_text(f->kind());
      out += ' ';
      print_rec(f->right(), out);
      out += ')';
      return;
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Lexer lx(text);
  Parser p(lx.run());
  return p.parse();
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

}  // namespace teamlogic
