#include "vcount/input.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "vcount/error.hpp"

namespace vcount {

namespace {

enum class Tok { ident, integer, string, lbrace, rbrace, equals, comma, colon, plus, minus, star, caret, eof };

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg, const Token& at) const {
    fail(Errc::parse_error,
         "line " + std::to_string(at.line) + ", col " + std::to_string(at.col) + ": " + msg);
  }

 private:
  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::eof;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '{': one(Tok::lbrace); return;
      case '}': one(Tok::rbrace); return;
      case '=': one(Tok::equals); return;
      case ',': one(Tok::comma); return;
      case ':': one(Tok::colon); return;
      case '+': one(Tok::plus); return;
      case '-': one(Tok::minus); return;
      case '*': one(Tok::star); return;
      case '^': one(Tok::caret); return;
      case '"': {
        bump();
        std::string s;
        while (pos_ < src_.size() && src_[pos_] != '"') {
          if (src_[pos_] == '\n') fail_here("unterminated string literal");
          s += src_[pos_];
          bump();
        }
        if (pos_ >= src_.size()) fail_here("unterminated string literal");
        bump();
        tok_.kind = Tok::string;
        tok_.text = std::move(s);
        return;
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        if (v > (INT64_MAX - 9) / 10) fail_here("integer literal too large");
        v = v * 10 + (src_[pos_] - '0');
        text += src_[pos_];
        bump();
      }
      tok_.kind = Tok::integer;
      tok_.value = v;
      tok_.text = std::move(text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        bump();
      }
      tok_.kind = Tok::ident;
      tok_.text = std::move(text);
      return;
    }
    fail_here(std::string("unexpected character '") + c + "'");
  }

  void one(Tok k) {
    tok_.kind = k;
    tok_.text = src_[pos_];
    bump();
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail_here(const std::string& msg) const {
    fail(Errc::parse_error,
         "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class DocParser {
 public:
  explicit DocParser(std::string_view src) : lex_(src) {}

  InputDocument parse() {
    InputDocument doc;
    bool saw_format = false, saw_field = false, saw_options = false;
    while (lex_.peek().kind != Tok::eof) {
      Token head = expect(Tok::ident, "'format', 'field', 'eq' or 'options'");
      if (head.text == "format") {
        if (saw_format) lex_.error("duplicate format key", head);
        expect(Tok::equals, "'='");
        Token v = expect(Tok::integer, "format version");
        if (v.value != 1) lex_.error("unsupported format version " + v.text, v);
        doc.format = 1;
        saw_format = true;
      } else if (head.text == "field") {
        if (saw_field) lex_.error("duplicate field block", head);
        doc.field = parse_field_block();
        saw_field = true;
      } else if (head.text == "eq") {
        expect(Tok::colon, "':' after eq");
        doc.equations.push_back(parse_equation());
      } else if (head.text == "options") {
        if (saw_options) lex_.error("duplicate options block", head);
        doc.options = parse_options_block();
        saw_options = true;
      } else {
        lex_.error("expected 'format', 'field', 'eq' or 'options', got '" + head.text + "'", head);
      }
    }
    if (!saw_field) fail(Errc::parse_error, "missing field block");
    if (doc.equations.empty()) fail(Errc::parse_error, "missing equations (need 'eq:' lines)");
    return doc;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) lex_.error("expected " + what + ", got '" + t.text + "'", t);
    return t;
  }

  FieldSpec parse_field_block() {
    FieldSpec spec;
    bool saw_p = false, saw_n = false;
    expect(Tok::lbrace, "'{'");
    while (true) {
      Token key = expect(Tok::ident, "field key (p, n, modulus)");
      expect(Tok::equals, "'='");
      if (key.text == "p") {
        Token v = expect(Tok::integer, "prime");
        spec.p = static_cast<std::uint64_t>(v.value);
        saw_p = true;
      } else if (key.text == "n") {
        Token v = expect(Tok::integer, "extension degree");
        spec.degree = static_cast<unsigned>(v.value);
        saw_n = true;
      } else if (key.text == "modulus") {
        Token v = expect(Tok::string, "quoted modulus polynomial");
        spec.modulus = parse_poly_literal(v);
      } else {
        lex_.error("unknown field key '" + key.text + "'", key);
      }
      Token sep = lex_.take();
      if (sep.kind == Tok::rbrace) break;
      if (sep.kind != Tok::comma) lex_.error("expected ',' or '}' in field block", sep);
    }
    if (!saw_p) fail(Errc::parse_error, "field block missing p");
    if (!saw_n) spec.degree = 1;
    return spec;
  }

  OptionsBlock parse_options_block() {
    OptionsBlock opts;
    expect(Tok::lbrace, "'{'");
    if (lex_.peek().kind == Tok::rbrace) {
      lex_.take();
      return opts;
    }
    while (true) {
      Token key = expect(Tok::ident, "option key (method, alpha, format)");
      expect(Tok::equals, "'='");
      if (key.text == "method") {
        Token v = expect(Tok::ident, "method name");
        if (v.text != "formula" && v.text != "bruteforce" && v.text != "both")
          lex_.error("method must be formula, bruteforce or both", v);
        opts.method = v.text;
      } else if (key.text == "format") {
        Token v = expect(Tok::ident, "output format");
        if (v.text != "text" && v.text != "json") lex_.error("format must be text or json", v);
        opts.output_format = v.text;
      } else if (key.text == "alpha") {
        opts.alpha = parse_literal("primitive element");
      } else {
        lex_.error("unknown option '" + key.text + "'", key);
      }
      Token sep = lex_.take();
      if (sep.kind == Tok::rbrace) break;
      if (sep.kind != Tok::comma) lex_.error("expected ',' or '}' in options block", sep);
    }
    return opts;
  }

  std::vector<std::int64_t> parse_poly_literal(const Token& tok) {
    try {
      return parse_poly_text(tok.text);
    } catch (const Error& e) {
      lex_.error(e.what(), tok);
    }
  }

  ElementLiteral parse_literal(const std::string& what) {
    ElementLiteral lit;
    Token t = lex_.take();
    bool negative = false;
    if (t.kind == Tok::minus) {
      negative = true;
      t = lex_.take();
    }
    if (t.kind == Tok::integer) {
      lit.is_poly = false;
      lit.value = negative ? -t.value : t.value;
    } else if (t.kind == Tok::string && !negative) {
      lit.is_poly = true;
      lit.poly = parse_poly_literal(t);
    } else {
      lex_.error("expected " + what + " (integer or quoted element)", t);
    }
    return lit;
  }

  EquationExpr parse_equation() {
    EquationExpr eq;
    bool negative = false;
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      negative = true;
    }
    while (true) {
      eq.terms.push_back(parse_term(negative));
      Token sep = lex_.peek();
      if (sep.kind == Tok::plus || sep.kind == Tok::minus) {
        lex_.take();
        negative = sep.kind == Tok::minus;
        continue;
      }
      if (sep.kind == Tok::equals) {
        lex_.take();
        break;
      }
      lex_.error("expected '+', '-' or '=' after a term (explicit '*' between factors?)", sep);
    }
    eq.rhs = parse_literal("right-hand side");
    return eq;
  }

  TermExpr parse_term(bool negative) {
    TermExpr term;
    term.coef.is_poly = false;
    while (lex_.peek().kind == Tok::minus) {  // sign attached to the coefficient
      lex_.take();
      negative = !negative;
    }
    term.coef.value = negative ? -1 : 1;
    Token first = lex_.peek();
    bool have_coef = false;
    if (first.kind == Tok::integer) {
      lex_.take();
      term.coef.value = negative ? -first.value : first.value;
      have_coef = true;
    } else if (first.kind == Tok::string) {
      lex_.take();
      term.coef.is_poly = true;
      term.coef.poly = parse_poly_literal(first);
      if (negative)
        for (auto& c : term.coef.poly) c = -c;
      have_coef = true;
    }
    if (have_coef) {
      Token star = lex_.peek();
      if (star.kind != Tok::star)
        lex_.error("expected '*' after the coefficient (terms need at least one variable)", star);
      lex_.take();
    }
    while (true) {
      term.powers.push_back(parse_power());
      if (lex_.peek().kind != Tok::star) break;
      lex_.take();
    }
    return term;
  }

  std::pair<std::uint32_t, std::uint32_t> parse_power() {
    Token v = expect(Tok::ident, "variable x<i>");
    if (v.text.size() < 2 || v.text[0] != 'x' ||
        !std::all_of(v.text.begin() + 1, v.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      lex_.error("expected a variable like x1, got '" + v.text + "'", v);
    std::uint64_t idx = std::stoull(v.text.substr(1));
    if (idx < 1 || idx > 64) lex_.error("variable index out of range: " + v.text, v);
    std::uint32_t exp = 1;
    if (lex_.peek().kind == Tok::caret) {
      lex_.take();
      Token e = expect(Tok::integer, "exponent");
      if (e.value < 0 || e.value > 1'000'000) lex_.error("exponent out of range", e);
      exp = static_cast<std::uint32_t>(e.value);
    }
    return {static_cast<std::uint32_t>(idx), exp};
  }

  Lexer lex_;
};

std::string render_literal(const ElementLiteral& lit) {
  if (lit.is_poly) return "\"" + render_poly_text(lit.poly, 't') + "\"";
  return std::to_string(lit.value);
}

// Shared document semantics: ambient width and the contiguity invariant.
std::uint32_t ambient_width(const InputDocument& doc) {
  std::uint32_t n = 0;
  std::set<std::uint32_t> used;
  for (const auto& eq : doc.equations) {
    for (const auto& term : eq.terms) {
      for (auto [idx, exp] : term.powers) {
        n = std::max(n, idx);
        if (exp > 0) used.insert(idx);
      }
    }
  }
  if (n == 0) fail(Errc::bad_argument, "equations reference no variables");
  for (std::uint32_t i = 1; i <= n; ++i)
    if (!used.count(i))
      fail(Errc::bad_argument,
           "variables must be contiguous from x1: x" + std::to_string(i) + " is unused");
  return n;
}

}  // namespace

InputDocument parse_document(std::string_view text) { return DocParser(text).parse(); }

std::string render_document(const InputDocument& doc) {
  std::ostringstream out;
  out << "format = " << doc.format << "\n";
  out << "field { p = " << doc.field.p << ", n = " << doc.field.degree;
  if (doc.field.modulus) out << ", modulus = \"" << render_poly_text(*doc.field.modulus, 'x') << "\"";
  out << " }\n";
  for (const auto& eq : doc.equations) {
    out << "eq: ";
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      const TermExpr& term = eq.terms[t];
      std::string sep = "+", body;
      if (term.coef.is_poly) {
        body = render_literal(term.coef) + "*";
      } else {
        std::int64_t c = term.coef.value;
        if (c < 0) {
          sep = "-";
          c = -c;
        }
        if (c != 1) body = std::to_string(c) + "*";
      }
      for (std::size_t i = 0; i < term.powers.size(); ++i) {
        if (i) body += "*";
        body += "x" + std::to_string(term.powers[i].first);
        if (term.powers[i].second != 1) body += "^" + std::to_string(term.powers[i].second);
      }
      if (t == 0) {
        if (sep == "-") out << "-";
      } else {
        out << " " << sep << " ";
      }
      out << body;
    }
    out << " = " << render_literal(eq.rhs) << "\n";
  }
  const OptionsBlock& o = doc.options;
  if (o.method || o.alpha || o.output_format) {
    out << "options { ";
    bool first = true;
    auto emit = [&](const std::string& key, const std::string& value) {
      if (!first) out << ", ";
      out << key << " = " << value;
      first = false;
    };
    if (o.method) emit("method", *o.method);
    if (o.alpha) emit("alpha", render_literal(*o.alpha));
    if (o.output_format) emit("format", *o.output_format);
    out << " }\n";
  }
  return out.str();
}

FiniteField make_document_field(const FieldSpec& spec) {
  return FiniteField::make(spec.p, spec.degree, spec.modulus);
}

Fq element_from_literal(const FiniteField& field, const ElementLiteral& lit) {
  if (!lit.is_poly) return field.from_integer(lit.value);
  if (lit.poly.size() > field.degree())
    fail(Errc::degree_mismatch, "element literal degree exceeds the field degree");
  std::uint64_t code = 0;
  for (std::size_t d = lit.poly.size(); d-- > 0;)
    code = code * field.p() + field.from_integer(lit.poly[d]).v;
  return Fq{static_cast<std::uint32_t>(code)};
}

PolySystem document_poly_system(const InputDocument& doc, const FiniteField& field) {
  PolySystem ps;
  ps.field = field;
  ps.nvars = ambient_width(doc);
  for (const auto& eq : doc.equations) {
    Polynomial poly;
    for (const auto& term : eq.terms) {
      PolyTerm pt;
      pt.coef = element_from_literal(field, term.coef);
      pt.exponents.assign(ps.nvars, 0);
      for (auto [idx, exp] : term.powers) pt.exponents[idx - 1] += exp;
      poly.terms.push_back(std::move(pt));
    }
    Fq b = element_from_literal(field, eq.rhs);
    if (!(b == fq_zero)) {
      PolyTerm constant;
      constant.coef = field.neg(b);
      constant.exponents.assign(ps.nvars, 0);
      poly.terms.push_back(std::move(constant));
    }
    ps.polys.push_back(std::move(poly));
  }
  return ps;
}

StaircaseSystem document_staircase(const InputDocument& doc, const FiniteField& field) {
  if (doc.equations.size() != 2)
    fail(Errc::bad_argument, "the staircase count needs exactly two equations, got " +
                                 std::to_string(doc.equations.size()));
  const std::uint32_t nvars = ambient_width(doc);
  StaircaseSystem sys;
  sys.field = field;
  auto fill = [&](const EquationExpr& eq, std::vector<Fq>& coeffs, IntMat& exps, Fq& b) {
    exps = IntMat::Zero(static_cast<Eigen::Index>(eq.terms.size()), nvars);
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      coeffs.push_back(element_from_literal(field, eq.terms[t].coef));
      for (auto [idx, exp] : eq.terms[t].powers)
        exps(static_cast<Eigen::Index>(t), idx - 1) += exp;
    }
    b = element_from_literal(field, eq.rhs);
  };
  fill(doc.equations[0], sys.coeffs1, sys.exps1, sys.b1);
  fill(doc.equations[1], sys.coeffs2, sys.exps2, sys.b2);
  return sys;
}

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  auto push = [&] {
    std::size_t hash = cur.find('#');
    if (hash != std::string::npos) cur.erase(hash);
    std::size_t a = cur.find_first_not_of(" \t\r");
    if (a != std::string::npos) {
      std::size_t b = cur.find_last_not_of(" \t\r");
      lines.push_back(cur.substr(a, b - a + 1));
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n')
      push();
    else
      cur += c;
  }
  push();
  return lines;
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<Int> split_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<Int> out;
  std::string word;
  while (in >> word) {
    if (!is_integer_token(word))
      fail(Errc::parse_error, "expected an integer, got '" + word + "'");
    out.emplace_back(word);
  }
  return out;
}

bool is_format_line(const std::string& line) {
  std::istringstream in(line);
  std::string a, b, c;
  in >> a >> b >> c;
  return a == "format" && b == "=" && c == "1";
}

}  // namespace

IntMat parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  for (const std::string& line : content_lines(text)) {
    if (is_format_line(line)) continue;
    rows.push_back(split_ints(line));
    if (rows.back().empty()) rows.pop_back();
  }
  if (rows.empty()) fail(Errc::parse_error, "matrix file has no rows");
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) fail(Errc::parse_error, "matrix rows have differing lengths");
  IntMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

std::string render_matrix_text(const IntMat& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

CongruenceFile parse_congruence_text(std::string_view text) {
  CongruenceFile file;
  bool have_m = false;
  std::vector<std::vector<Int>> h_rows;
  std::vector<Int> b_vals;
  enum { top, in_h, in_b } state = top;
  for (const std::string& line : content_lines(text)) {
    if (is_format_line(line)) continue;
    if (line == "H:") {
      state = in_h;
      continue;
    }
    if (line == "B:") {
      state = in_b;
      continue;
    }
    if (state == top) {
      std::istringstream in(line);
      std::string key, eq, val;
      in >> key >> eq >> val;
      if (key == "m" && eq == "=" && is_integer_token(val)) {
        file.modulus = Int(val);
        have_m = true;
        continue;
      }
      fail(Errc::parse_error, "expected 'm = <int>', 'H:' or 'B:', got '" + line + "'");
    }
    if (state == in_h) {
      h_rows.push_back(split_ints(line));
      continue;
    }
    for (Int& v : split_ints(line)) b_vals.push_back(v);
  }
  if (!have_m) fail(Errc::parse_error, "congruence file missing 'm = <int>'");
  if (h_rows.empty()) fail(Errc::parse_error, "congruence file missing H rows");
  const std::size_t cols = h_rows[0].size();
  for (const auto& r : h_rows)
    if (r.size() != cols) fail(Errc::parse_error, "H rows have differing lengths");
  if (b_vals.size() != h_rows.size())
    fail(Errc::parse_error, "B must have one entry per H row");
  file.h = IntMat(static_cast<Eigen::Index>(h_rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < h_rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      file.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h_rows[i][j];
  file.b = IntVec(static_cast<Eigen::Index>(b_vals.size()));
  for (std::size_t i = 0; i < b_vals.size(); ++i) file.b(static_cast<Eigen::Index>(i)) = b_vals[i];
  if (file.modulus < 2) fail(Errc::parse_error, "modulus must be >= 2");
  return file;
}

}  // namespace vcount
