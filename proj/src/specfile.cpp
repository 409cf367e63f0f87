#include "bog/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "bog/errors.hpp"

namespace bog {

const Representation& SpecFile::find(const std::string& name) const {
  for (const auto& r : reps) {
    if (r.name() == name) return r;
  }
  throw Error(ErrorCode::UnknownRepresentation, "unknown representation '" + name + "'");
}

const char* grammar_excerpt() {
  return "spec grammar:\n"
         "  symbol NAME\n"
         "  rep NAME { STATEMENT ... }\n"
         "  STATEMENT := atom ANGLE mult (INT|inf)\n"
         "             | wm KIND [mult INT] [flags FLAG[,FLAG...]]\n"
         "  KIND      := left_regular | singular_closed | atomless\n"
         "  FLAG      := mixing | mildly_mixing | rigid\n"
         "  ANGLE     := p/q | sym:NAME | p/q+2*sym:NAME | 1 | -1\n"
         "statements end at newline or ';', '#' starts a comment\n";
}

namespace {

enum class Tok { Word, Open, Close, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      out.push_back({Tok::Sep, std::string(1, c), line, column});
      advance(1);
    } else if (c == '{' || c == '}') {
      out.push_back({c == '{' ? Tok::Open : Tok::Close, std::string(1, c), line, column});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else {
      std::size_t start = i, l = line, col = column;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             std::string_view("{};#").find(text[i]) == std::string_view::npos) {
        advance(1);
      }
      out.push_back({Tok::Word, std::string(text.substr(start, i - start)), l, col});
    }
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

class Parser {
 public:
  Parser(std::string_view text, bool implicit_symbols)
      : tokens_(tokenize(text)), implicit_symbols_(implicit_symbols) {}

  SpecFile parse_file() {
    SpecFile spec;
    while (true) {
      skip_separators();
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Word) fail(t, "expected 'symbol' or 'rep'");
      if (t.text == "symbol") {
        next();
        const Token& name = expect_word("symbol name");
        if (name.text.find(':') != std::string::npos ||
            !is_identifier(name.text) || name.text.find('-') != std::string::npos ||
            name.text.find('.') != std::string::npos) {
          fail(name, "invalid symbol name '" + name.text + "'");
        }
        symbols_.insert(name.text);
        end_statement();
      } else if (t.text == "rep") {
        next();
        const Token& name = expect_word("representation name");
        if (!is_identifier(name.text)) fail(name, "invalid representation name '" + name.text + "'");
        for (const auto& r : spec.reps) {
          if (r.name() == name.text) fail(name, "duplicate representation '" + name.text + "'");
        }
        skip_separators();
        if (peek().kind != Tok::Open) fail(peek(), "expected '{'");
        next();
        spec.reps.push_back(parse_body(name.text, true));
      } else {
        fail(t, "expected 'symbol' or 'rep', found '" + t.text + "'");
      }
    }
    spec.symbols.assign(symbols_.begin(), symbols_.end());
    return spec;
  }

  Representation parse_bare() { return parse_body("_", false); }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& message,
                         ErrorCode code = ErrorCode::ParseError) const {
    throw ParseError(code, t.line, t.column, message);
  }

  void skip_separators() {
    while (peek().kind == Tok::Sep) next();
  }

  const Token& expect_word(const std::string& what) {
    if (peek().kind != Tok::Word) fail(peek(), "expected " + what);
    return next();
  }

  void end_statement() {
    Tok k = peek().kind;
    if (k == Tok::Sep) {
      next();
    } else if (k != Tok::End && k != Tok::Close) {
      fail(peek(), "unexpected '" + peek().text + "'");
    }
  }

  Representation parse_body(const std::string& name, bool braced) {
    std::vector<Atom> atoms;
    std::vector<WmPart> wm;
    while (true) {
      skip_separators();
      const Token& t = peek();
      if (t.kind == Tok::Close) {
        if (!braced) fail(t, "unexpected '}'");
        next();
        end_statement();
        break;
      }
      if (t.kind == Tok::End) {
        if (braced) fail(t, "missing '}' for representation '" + name + "'");
        break;
      }
      if (t.kind != Tok::Word) fail(t, "expected 'atom' or 'wm'");
      if (t.text == "atom") {
        next();
        atoms.push_back(parse_atom());
      } else if (t.text == "wm") {
        next();
        wm.push_back(parse_wm());
      } else {
        fail(t, "expected 'atom' or 'wm', found '" + t.text + "'");
      }
      end_statement();
    }
    return Representation(name, std::move(atoms), std::move(wm));
  }

  CirclePoint parse_eigenvalue(const Token& t) {
    if (t.text == "1") return CirclePoint();
    if (t.text == "-1") return CirclePoint::turn(Rational(1, 2));
    CirclePoint p;
    try {
      p = parse_angle(t.text);
    } catch (const Error& e) {
      fail(t, e.what());
    }
    for (const auto& kv : p.symbolic()) {
      if (symbols_.count(kv.first) == 0) {
        if (implicit_symbols_) {
          symbols_.insert(kv.first);
        } else {
          fail(t, "undeclared symbol '" + kv.first + "'", ErrorCode::UndeclaredSymbol);
        }
      }
    }
    return p;
  }

  Count parse_count(const Token& t, bool allow_infinity) {
    if (allow_infinity && t.text == "inf") return Count::infinity();
    if (t.text.empty() || t.text.size() > 18 ||
        !std::all_of(t.text.begin(), t.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(t, "expected a multiplicity, found '" + t.text + "'", ErrorCode::InvalidMultiplicity);
    }
    Count c(std::stoull(t.text));
    if (c == Count(0)) fail(t, "multiplicity must be at least 1", ErrorCode::InvalidMultiplicity);
    return c;
  }

  Atom parse_atom() {
    const Token& angle = expect_word("an eigenvalue angle");
    CirclePoint e = parse_eigenvalue(angle);
    const Token& kw = expect_word("'mult'");
    if (kw.text != "mult") fail(kw, "expected 'mult', found '" + kw.text + "'");
    const Token& m = expect_word("a multiplicity");
    return Atom{e, parse_count(m, true)};
  }

  WmPart parse_wm() {
    const Token& kind_tok = expect_word("a weakly mixing kind");
    WmKind kind;
    if (kind_tok.text == "left_regular") {
      kind = WmKind::LeftRegular;
    } else if (kind_tok.text == "singular_closed") {
      kind = WmKind::SingularClosed;
    } else if (kind_tok.text == "atomless") {
      kind = WmKind::AtomlessGeneric;
    } else {
      fail(kind_tok, "unknown weakly mixing kind '" + kind_tok.text + "'");
    }
    Count mult(1);
    bool mixing = false, mildly = false, rigid = false;
    bool seen_mult = false, seen_flags = false;
    while (peek().kind == Tok::Word) {
      const Token& kw = next();
      if (kw.text == "mult" && !seen_mult && !seen_flags) {
        seen_mult = true;
        mult = parse_count(expect_word("a multiplicity"), false);
      } else if (kw.text == "flags" && !seen_flags) {
        seen_flags = true;
        const Token& list = expect_word("a flag list");
        std::size_t start = 0;
        while (true) {
          std::size_t comma = list.text.find(',', start);
          std::string flag = list.text.substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start);
          if (flag == "mixing") {
            mixing = true;
          } else if (flag == "mildly_mixing") {
            mildly = true;
          } else if (flag == "rigid") {
            rigid = true;
          } else {
            fail(list, "unknown flag '" + flag + "'");
          }
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        fail(kw, "unexpected '" + kw.text + "'");
      }
    }
    try {
      return make_wm_part(kind, mult, mixing, mildly, rigid);
    } catch (const Error& e) {
      fail(kind_tok, e.what(), e.code());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> symbols_;
  bool implicit_symbols_;
};

}  // namespace

SpecFile parse_specfile(std::string_view text) { return Parser(text, false).parse_file(); }

Representation parse_rep(std::string_view text) {
  bool has_block = false;
  for (const Token& t : tokenize(text)) {
    if (t.kind == Tok::Word && (t.text == "rep" || t.text == "symbol")) {
      has_block = true;
      break;
    }
  }
  if (!has_block) return Parser(text, true).parse_bare();
  SpecFile spec = parse_specfile(text);
  if (spec.reps.size() != 1) {
    throw ParseError(ErrorCode::ParseError, 1, 1, "expected exactly one representation");
  }
  return spec.reps.front();
}

}  // namespace bog
