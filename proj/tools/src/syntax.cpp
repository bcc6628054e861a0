#include "idealforge/cli/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "idealforge/errors.hpp"

namespace idealforge::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Word, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Nat value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, t.value);
      if (ec != std::errc()) throw ParseError(line, col, "integer out of range");
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '-')) ++j;
      t.kind = Tok::Word;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view(":{},()|&!=;").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  IdealArgument document() {
    if (peek_word("level")) return symbolic_document();
    if (peek_word("sum")) return sum_document();
    if (peek_word("certified")) return certified_document();
    fail("expected 'level N:', 'sum:' or 'certified family F:'");
  }

  SymbolicSet symbolic_document() {
    SymbolicSet s = level_expression();
    finish();
    return s;
  }

  SumSymbolicSet sum_document() {
    expect_word("sum");
    expect_punct(":");
    SumSymbolicSet m = SumSymbolicSet::empty();
    for (;;) {
      if (peek_word("summand")) {
        const Token at = next();
        const std::size_t j = integer();
        if (j == 0) fail_at(at, "summands are numbered from 1");
        expect_punct("=");
        m = sum_unite(m, SumSymbolicSet::single_summand(j, expression(j)));
      } else if (peek_word("tail")) {
        const Token at = next();
        expect_punct("(");
        expect_word("head");
        expect_punct("=");
        const SymbolicSet head = level_expression();
        expect_punct(";");
        expect_word("last");
        expect_punct("=");
        const SymbolicSet tail = level_expression();
        expect_punct(";");
        expect_word("from");
        expect_punct("=");
        const std::size_t from = integer();
        expect_punct(")");
        if (from == 0 || from < head.level() + tail.level()) {
          fail_at(at, "tail must start at a summand of level >= head + last widths");
        }
        m = sum_unite(m, SumSymbolicSet::from_template(head, tail, from));
      } else {
        break;
      }
    }
    finish();
    return m;
  }

  CertifiedSet certified_document() {
    expect_word("certified");
    expect_word("family");
    const Token fam = next();
    Family f = Family::A;
    if (fam.kind == Tok::Word && fam.text == "A") {
      f = Family::A;
    } else if (fam.kind == Tok::Word && fam.text == "B") {
      f = Family::B;
    } else {
      fail_at(fam, "expected family A or B");
    }
    expect_punct(":");
    CertifiedSet a = CertifiedSet::finite(f, {});
    for (;;) {
      if (peek_word("finite")) {
        next();
        a.finite_part = a.finite_part.unite(value_set());
      } else if (peek_word("bundle")) {
        next();
        const std::size_t l = integer();
        expect_punct(":");
        SymbolicSet b = expression(l + 1);
        auto it = a.bundles.find(l);
        if (it != a.bundles.end()) b = unite(it->second, b);
        a.bundles.insert_or_assign(l, std::move(b));
      } else if (peek_word("cell")) {
        const Token at = next();
        std::map<std::size_t, Point> cells;
        while (peek().kind == Tok::Int) {
          const Token lt = peek();
          const std::size_t l = integer();
          expect_punct("=");
          Point t = tuple();
          if (t.size() != l + 1) fail_at(lt, "level-" + std::to_string(l) + " cells take " + std::to_string(l + 1) + " indices");
          if (!cells.emplace(l, std::move(t)).second) fail_at(lt, "level listed twice");
        }
        if (cells.empty()) fail_at(at, "a cell needs at least one level");
        a.multicells.push_back(std::move(cells));
      } else {
        break;
      }
    }
    finish();
    std::sort(a.multicells.begin(), a.multicells.end());
    a.multicells.erase(std::unique(a.multicells.begin(), a.multicells.end()), a.multicells.end());
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool peek_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }
  bool peek_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }

  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    fail_at(t, msg + (t.kind == Tok::End ? " at end of input" : ", found '" + t.text + "'"));
  }

  void expect_word(std::string_view w) {
    if (!peek_word(w)) fail("expected '" + std::string(w) + "'");
    next();
  }
  void expect_punct(std::string_view p) {
    if (!peek_punct(p)) fail("expected '" + std::string(p) + "'");
    next();
  }
  void finish() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }

  std::size_t integer() {
    if (peek().kind != Tok::Int) fail("expected an integer");
    return static_cast<std::size_t>(next().value);
  }

  FiniteSet value_set() {
    expect_punct("{");
    std::vector<Nat> vs;
    if (!peek_punct("}")) {
      vs.push_back(integer());
      while (peek_punct(",")) {
        next();
        vs.push_back(integer());
      }
    }
    expect_punct("}");
    return FiniteSet(std::move(vs));
  }

  Point tuple() {
    expect_punct("(");
    Point p;
    p.push_back(integer());
    while (peek_punct(",")) {
      next();
      p.push_back(integer());
    }
    expect_punct(")");
    return p;
  }

  SymbolicSet level_expression() {
    expect_word("level");
    const std::size_t n = integer();
    expect_punct(":");
    return expression(n);
  }

  SymbolicSet expression(std::size_t level) {
    SymbolicSet s = term(level);
    while (peek_punct("|")) {
      next();
      s = unite(s, term(level));
    }
    return s;
  }

  SymbolicSet term(std::size_t level) {
    SymbolicSet s = factor(level);
    while (peek_punct("&")) {
      next();
      s = intersect(s, factor(level));
    }
    return s;
  }

  SymbolicSet factor(std::size_t level) {
    if (peek_punct("!")) {
      next();
      return complement(factor(level));
    }
    if (peek_punct("(")) {
      next();
      SymbolicSet s = expression(level);
      expect_punct(")");
      return s;
    }
    if (peek_word("all")) {
      next();
      return SymbolicSet::full(level);
    }
    if (peek_word("none")) {
      next();
      return SymbolicSet::empty(level);
    }
    const Token at = peek();
    if (at.kind != Tok::Word || at.text.size() < 2 || at.text[0] != 'x' ||
        at.text.find_first_not_of("0123456789", 1) != std::string::npos) {
      fail("expected a coordinate atom like 'x0 in {1}'");
    }
    next();
    const std::size_t coord = std::stoul(at.text.substr(1));
    if (coord >= level) {
      fail_at(at, "coordinate x" + std::to_string(coord) + " out of range at level " + std::to_string(level));
    }
    bool in = true;
    if (peek_word("in")) {
      next();
    } else if (peek_word("notin")) {
      next();
      in = false;
    } else {
      fail("expected 'in' or 'notin'");
    }
    FiniteSet vs = value_set();
    return SymbolicSet::atom(level, coord, in ? Predicate::in(std::move(vs)) : Predicate::not_in(std::move(vs)));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string values_text(const FiniteSet& f) {
  std::string out = "{";
  bool first = true;
  for (Nat v : f) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

IdealArgument parse(std::string_view text) { return Parser(text).document(); }
SymbolicSet parse_symbolic(std::string_view text) { return Parser(text).symbolic_document(); }
SumSymbolicSet parse_sum(std::string_view text) { return Parser(text).sum_document(); }
CertifiedSet parse_certified(std::string_view text) { return Parser(text).certified_document(); }

std::string print_expression(const SymbolicSet& s) {
  if (s.is_empty()) return "none";
  if (s.is_full()) return "all";
  std::string out;
  for (std::size_t k = 0; k < s.conjuncts().size(); ++k) {
    if (k > 0) out += " | ";
    const Conjunct& c = s.conjuncts()[k];
    if (c.empty()) {
      out += "all";
      continue;
    }
    bool first = true;
    for (const auto& [coord, pred] : c) {
      if (!first) out += " & ";
      first = false;
      out += "x" + std::to_string(coord) + (pred.is_in() ? " in " : " notin ") + values_text(pred.values);
    }
  }
  return out;
}

std::string print(const SymbolicSet& s) { return "level " + std::to_string(s.level()) + ": " + print_expression(s); }

std::string print(const SumSymbolicSet& m) {
  std::string out = "sum:\n";
  for (const auto& [j, s] : m.exceptional()) {
    if (j < m.threshold() && !s.is_empty()) out += "  summand " + std::to_string(j) + " = " + print_expression(s) + "\n";
  }
  for (const auto& tc : m.template_conjuncts()) {
    out += "  tail(head=" + print(tc.head) + "; last=" + print(tc.tail) + "; from=" + std::to_string(m.threshold()) + ")\n";
  }
  return out;
}

std::string print(const CertifiedSet& a) {
  std::string out = "certified family " + family_name(a.family) + ":\n";
  if (!a.finite_part.empty()) out += "  finite " + values_text(a.finite_part) + "\n";
  for (const auto& [l, b] : a.bundles) out += "  bundle " + std::to_string(l) + ": " + print_expression(b) + "\n";
  for (const auto& mc : a.multicells) {
    out += "  cell";
    for (const auto& [l, t] : mc) {
      out += " " + std::to_string(l) + "=(";
      for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
      out += ")";
    }
    out += "\n";
  }
  return out;
}

std::string print(const IdealArgument& x) {
  return std::visit([](const auto& v) { return print(v); }, x);
}

}  // namespace idealforge::cli
