#include "filtralab/instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "filtralab/errors.hpp"

namespace filtralab {

namespace {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::end;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '-')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      size_t start = pos_;
      ++pos_;
      ++col_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::integer;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = std::stoll(tok_.text);
      return;
    }
    // multi-char symbol: ".."
    if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
      tok_.kind = Token::Kind::symbol;
      tok_.text = "..";
      pos_ += 2;
      col_ += 2;
      return;
    }
    tok_.kind = Token::Kind::symbol;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw parse_error(msg + " at line " + std::to_string(t.line) + ", column " +
                        std::to_string(t.col),
                    t.line, t.col);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  InstanceFile parse() {
    while (lex_.peek().kind != Token::Kind::end) {
      Token head = expect_ident("declaration keyword");
      if (head.text == "ring")
        ring_decl();
      else if (head.text == "ideal")
        ideal_decl();
      else if (head.text == "filtration")
        filtration_decl();
      else if (head.text == "candidates")
        candidates_decl();
      else if (head.text == "task")
        task_stmt();
      else
        fail(head, "unknown declaration '" + head.text + "'");
    }
    return std::move(file_);
  }

 private:
  Token expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::ident) fail(t, "expected " + what);
    return t;
  }
  Token expect_symbol(const std::string& s) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::symbol || t.text != s)
      fail(t, "expected '" + s + "'");
    return t;
  }
  Token expect_integer() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::integer) fail(t, "expected an integer");
    return t;
  }
  bool peek_symbol(const std::string& s) {
    return lex_.peek().kind == Token::Kind::symbol && lex_.peek().text == s;
  }
  bool peek_ident(const std::string& s) {
    return lex_.peek().kind == Token::Kind::ident && lex_.peek().text == s;
  }

  void check_fresh(const Token& name) {
    if (file_.find_ideal(name.text) || file_.find_filtration(name.text) ||
        file_.find_candidates(name.text))
      fail(name, "identifier '" + name.text + "' already declared");
    for (const auto& [rn, _] : file_.rings)
      if (rn == name.text)
        fail(name, "identifier '" + name.text + "' already declared");
  }

  // ring R = poly(x, y) / [x^3] cm;
  void ring_decl() {
    Token name = expect_ident("ring name");
    check_fresh(name);
    expect_symbol("=");
    Token kw = expect_ident("'poly'");
    if (kw.text != "poly") fail(kw, "expected 'poly'");
    expect_symbol("(");
    std::vector<std::string> vars;
    while (true) {
      Token v = expect_ident("variable name");
      if (peek_symbol("..")) {
        lex_.take();
        Token w = expect_ident("range end");
        expand_range(v, w, vars);
      } else {
        vars.push_back(v.text);
      }
      if (peek_symbol(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_symbol(")");
    std::vector<ExponentVector> quotient;
    if (peek_symbol("/")) {
      lex_.take();
      quotient = monomial_list(vars);
    }
    bool cm = false;
    if (peek_ident("cm")) {
      lex_.take();
      cm = true;
    }
    expect_symbol(";");
    file_.rings.emplace_back(name.text, make_ring(vars, quotient, cm));
    current_ring_ = file_.rings.back().second;
  }

  // x1..x4 -> x1, x2, x3, x4 (shared alphabetic prefix, numeric suffix)
  void expand_range(const Token& from, const Token& to,
                    std::vector<std::string>& vars) {
    auto split = [&](const Token& t) -> std::pair<std::string, long long> {
      size_t i = t.text.size();
      while (i > 0 && std::isdigit(static_cast<unsigned char>(t.text[i - 1])))
        --i;
      if (i == t.text.size()) fail(t, "range endpoint needs a numeric suffix");
      return {t.text.substr(0, i), std::stoll(t.text.substr(i))};
    };
    auto [p1, a] = split(from);
    auto [p2, b] = split(to);
    if (p1 != p2) fail(to, "range endpoints have different prefixes");
    if (b < a) fail(to, "empty variable range");
    for (long long k = a; k <= b; ++k)
      vars.push_back(p1 + std::to_string(k));
  }

  // [x^2, x*y, y^2]
  std::vector<ExponentVector> monomial_list(
      const std::vector<std::string>& vars) {
    expect_symbol("[");
    std::vector<ExponentVector> out;
    if (peek_symbol("]")) {
      lex_.take();
      return out;
    }
    while (true) {
      out.push_back(monomial(vars));
      if (peek_symbol(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_symbol("]");
    return out;
  }

  ExponentVector monomial(const std::vector<std::string>& vars) {
    ExponentVector e(vars.size(), 0);
    if (lex_.peek().kind == Token::Kind::integer) {
      Token one = lex_.take();
      if (one.value != 1) fail(one, "only the constant monomial 1 is allowed");
      return e;
    }
    while (true) {
      Token v = expect_ident("variable");
      auto it = std::find(vars.begin(), vars.end(), v.text);
      if (it == vars.end()) fail(v, "undeclared variable '" + v.text + "'");
      int exp = 1;
      if (peek_symbol("^")) {
        lex_.take();
        Token p = expect_integer();
        if (p.value <= 0) fail(p, "exponent must be positive");
        exp = static_cast<int>(p.value);
      }
      e[it - vars.begin()] += exp;
      if (peek_symbol("*")) {
        lex_.take();
        continue;
      }
      break;
    }
    return e;
  }

  void ideal_decl() {
    Token name = expect_ident("ideal name");
    check_fresh(name);
    if (!current_ring_) fail(name, "declare a ring before ideals");
    expect_symbol("=");
    auto gens = monomial_list(current_ring_->variables());
    expect_symbol(";");
    file_.ideals.emplace_back(
        name.text, minimal_generators(std::move(gens), current_ring_));
  }

  FiltrationExpr filtration_expr() {
    Token head = expect_ident("filtration expression");
    FiltrationExpr e;
    if (head.text == "adic" || head.text == "normal") {
      e.kind = head.text == "adic" ? FiltrationExpr::Kind::adic
                                   : FiltrationExpr::Kind::normal;
      expect_symbol("(");
      while (true) {
        Token id = expect_ident("ideal name");
        if (!file_.find_ideal(id.text))
          fail(id, "undeclared ideal '" + id.text + "'");
        e.ideal_args.push_back(id.text);
        if (peek_symbol(",")) {
          lex_.take();
          continue;
        }
        break;
      }
      expect_symbol(")");
      return e;
    }
    if (head.text == "rr") {
      e.kind = FiltrationExpr::Kind::rr;
      expect_symbol("(");
      Token id = expect_ident("ideal or filtration name");
      if (file_.find_filtration(id.text))
        e.name_arg = id.text;
      else if (file_.find_ideal(id.text))
        e.ideal_args.push_back(id.text);
      else
        fail(id, "undeclared name '" + id.text + "'");
      expect_symbol(")");
      return e;
    }
    if (head.text == "product") {
      e.kind = FiltrationExpr::Kind::product;
      expect_symbol("(");
      while (true) {
        if (lex_.peek().kind == Token::Kind::ident &&
            (lex_.peek().text == "adic" || lex_.peek().text == "normal" ||
             lex_.peek().text == "rr" || lex_.peek().text == "product")) {
          e.sub.push_back(filtration_expr());
        } else {
          Token id = expect_ident("filtration name");
          if (!file_.find_filtration(id.text))
            fail(id, "undeclared filtration '" + id.text + "'");
          FiltrationExpr ref;
          ref.kind = FiltrationExpr::Kind::ref;
          ref.name_arg = id.text;
          e.sub.push_back(std::move(ref));
        }
        if (peek_symbol(",")) {
          lex_.take();
          continue;
        }
        break;
      }
      expect_symbol(")");
      return e;
    }
    fail(head, "unknown filtration constructor '" + head.text + "'");
  }

  void filtration_decl() {
    Token name = expect_ident("filtration name");
    check_fresh(name);
    expect_symbol("=");
    FiltrationExpr e = filtration_expr();
    expect_symbol(";");
    file_.filtrations.emplace_back(name.text, std::move(e));
  }

  void candidates_decl() {
    Token name = expect_ident("candidate-set name");
    check_fresh(name);
    expect_symbol("=");
    expect_symbol("[");
    std::vector<std::string> ids;
    while (true) {
      Token id = expect_ident("ideal name");
      if (!file_.find_ideal(id.text))
        fail(id, "undeclared ideal '" + id.text + "'");
      ids.push_back(id.text);
      if (peek_symbol(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expect_symbol("]");
    expect_symbol(";");
    file_.candidate_sets.emplace_back(name.text, std::move(ids));
  }

  std::string require_filtration_or_ideal(const Token& id) {
    if (!file_.find_filtration(id.text) && !file_.find_ideal(id.text))
      fail(id, "undeclared name '" + id.text + "'");
    return id.text;
  }

  void task_options(TaskSpec& t) {
    while (lex_.peek().kind == Token::Kind::ident) {
      if (peek_ident("window")) {
        lex_.take();
        expect_symbol("=");
        t.window = expect_integer().value;
      } else if (peek_ident("kmax")) {
        lex_.take();
        expect_symbol("=");
        t.kmax = static_cast<int>(expect_integer().value);
      } else if (peek_ident("axis")) {
        lex_.take();
        expect_symbol("=");
        t.axis = static_cast<int>(expect_integer().value);
      } else if (peek_ident("n")) {
        lex_.take();
        expect_symbol("=");
        if (peek_symbol("(")) {
          lex_.take();
          MultiIndex idx;
          while (true) {
            idx.push_back(static_cast<int>(expect_integer().value));
            if (peek_symbol(",")) {
              lex_.take();
              continue;
            }
            break;
          }
          expect_symbol(")");
          t.index = std::move(idx);
        } else {
          t.index = MultiIndex{static_cast<int>(expect_integer().value)};
        }
      } else {
        break;
      }
    }
  }

  void expectation(TaskSpec& t) {
    if (!peek_ident("expect")) return;
    lex_.take();
    Expectation& e = t.expect;
    e.ring = current_ring_;
    if (peek_symbol("[")) {
      // Integer list or monomial list, decided by the first entry.
      lex_.take();
      if (lex_.peek().kind == Token::Kind::integer &&
          !(t.kind == TaskSpec::Kind::rr ||
            t.kind == TaskSpec::Kind::intclosure)) {
        e.kind = Expectation::Kind::ints;
        while (true) {
          e.ints.push_back(Int(expect_integer().text));
          if (peek_symbol(",")) {
            lex_.take();
            continue;
          }
          break;
        }
        expect_symbol("]");
      } else {
        e.kind = Expectation::Kind::monomials;
        if (!current_ring_) fail(lex_.peek(), "no ring in scope");
        if (peek_symbol("]")) {
          lex_.take();
          return;
        }
        while (true) {
          e.monomials.push_back(monomial(current_ring_->variables()));
          if (peek_symbol(",")) {
            lex_.take();
            continue;
          }
          break;
        }
        expect_symbol("]");
      }
      return;
    }
    if (lex_.peek().kind == Token::Kind::integer) {
      e.kind = Expectation::Kind::integer;
      e.integer = expect_integer().value;
      return;
    }
    Token word = expect_ident("expectation");
    if (word.text == "r") {
      expect_symbol("=");
      e.kind = Expectation::Kind::r_value;
      e.integer = expect_integer().value;
      return;
    }
    if (word.text == "verified" || word.text == "violated" ||
        word.text == "conditional" || word.text == "inapplicable") {
      e.kind = Expectation::Kind::verdict;
      e.verdict = word.text;
      return;
    }
    fail(word, "unknown expectation");
  }

  void task_stmt() {
    TaskSpec t;
    Token head = expect_ident("task kind");
    const std::string& k = head.text;
    if (k == "coeffs" || k == "mixed" || k == "defect" || k == "postulation" ||
        k == "cohomology" || k == "gtorsion") {
      t.kind = k == "coeffs"        ? TaskSpec::Kind::coeffs
               : k == "mixed"       ? TaskSpec::Kind::mixed
               : k == "defect"      ? TaskSpec::Kind::defect
               : k == "postulation" ? TaskSpec::Kind::postulation
               : k == "cohomology"  ? TaskSpec::Kind::cohomology
                                    : TaskSpec::Kind::gtorsion;
      Token id = expect_ident("filtration name");
      t.target = require_filtration_or_ideal(id);
    } else if (k == "rr" || k == "intclosure") {
      t.kind = k == "rr" ? TaskSpec::Kind::rr : TaskSpec::Kind::intclosure;
      Token id = expect_ident("ideal or filtration name");
      t.target = require_filtration_or_ideal(id);
    } else if (k == "reduction") {
      t.kind = TaskSpec::Kind::reduction;
      Token f = expect_ident("filtration name");
      t.target = require_filtration_or_ideal(f);
      Token j = expect_ident("candidate ideal name");
      if (!file_.find_ideal(j.text))
        fail(j, "undeclared ideal '" + j.text + "'");
      t.second = j.text;
    } else if (k == "verify") {
      t.kind = TaskSpec::Kind::verify;
      Token thm = expect_ident("theorem name");
      static const char* known[] = {
          "northcott", "huneke-ooishi",  "sally",        "nonneg",
          "itoh-e2",   "dim2-cohomology", "mgho",         "e2zero-multi",
          "itoh-e3"};
      bool ok = false;
      for (const char* s : known)
        if (thm.text == s) ok = true;
      if (!ok) fail(thm, "unknown theorem '" + thm.text + "'");
      t.verify_name = thm.text;
      Token id = expect_ident("target name");
      t.target = require_filtration_or_ideal(id);
      if (thm.text == "sally") {
        Token j = expect_ident("reduction candidate name");
        if (!file_.find_ideal(j.text))
          fail(j, "undeclared ideal '" + j.text + "'");
        t.second = j.text;
      }
      if (peek_ident("with")) {
        lex_.take();
        Token c = expect_ident("candidate-set name");
        if (!file_.find_candidates(c.text))
          fail(c, "undeclared candidate set '" + c.text + "'");
        t.with_set = c.text;
      }
    } else {
      fail(head, "unknown task kind '" + k + "'");
    }
    task_options(t);
    expectation(t);
    expect_symbol(";");
    file_.tasks.push_back(std::move(t));
  }

  Lexer lex_;
  InstanceFile file_;
  RingPtr current_ring_;
};

} // namespace

const MonomialIdeal* InstanceFile::find_ideal(const std::string& name) const {
  for (const auto& [n, v] : ideals)
    if (n == name) return &v;
  return nullptr;
}

const FiltrationExpr* InstanceFile::find_filtration(
    const std::string& name) const {
  for (const auto& [n, v] : filtrations)
    if (n == name) return &v;
  return nullptr;
}

const std::vector<std::string>* InstanceFile::find_candidates(
    const std::string& name) const {
  for (const auto& [n, v] : candidate_sets)
    if (n == name) return &v;
  return nullptr;
}

namespace {

std::string filtration_expr_text(const FiltrationExpr& e) {
  std::ostringstream os;
  switch (e.kind) {
    case FiltrationExpr::Kind::adic:
    case FiltrationExpr::Kind::normal: {
      os << (e.kind == FiltrationExpr::Kind::adic ? "adic(" : "normal(");
      for (size_t i = 0; i < e.ideal_args.size(); ++i)
        os << (i ? ", " : "") << e.ideal_args[i];
      os << ")";
      break;
    }
    case FiltrationExpr::Kind::rr:
      os << "rr("
         << (e.name_arg.empty() ? e.ideal_args.at(0) : e.name_arg) << ")";
      break;
    case FiltrationExpr::Kind::product: {
      os << "product(";
      for (size_t i = 0; i < e.sub.size(); ++i)
        os << (i ? ", " : "") << filtration_expr_text(e.sub[i]);
      os << ")";
      break;
    }
    case FiltrationExpr::Kind::ref:
      os << e.name_arg;
      break;
  }
  return os.str();
}

std::string task_kind_text(const TaskSpec& t) {
  switch (t.kind) {
    case TaskSpec::Kind::coeffs: return "coeffs";
    case TaskSpec::Kind::mixed: return "mixed";
    case TaskSpec::Kind::defect: return "defect";
    case TaskSpec::Kind::postulation: return "postulation";
    case TaskSpec::Kind::rr: return "rr";
    case TaskSpec::Kind::intclosure: return "intclosure";
    case TaskSpec::Kind::cohomology: return "cohomology";
    case TaskSpec::Kind::gtorsion: return "gtorsion";
    case TaskSpec::Kind::reduction: return "reduction";
    case TaskSpec::Kind::verify: return "verify";
  }
  return "?";
}

} // namespace

std::string task_text(const TaskSpec& t) {
  std::ostringstream os;
  os << task_kind_text(t);
  if (t.kind == TaskSpec::Kind::verify) os << " " << t.verify_name;
  os << " " << t.target;
  if (!t.second.empty()) os << " " << t.second;
  if (!t.with_set.empty()) os << " with " << t.with_set;
  if (t.index) {
    os << " n=";
    if (t.index->size() == 1) {
      os << (*t.index)[0];
    } else {
      os << "(";
      for (size_t i = 0; i < t.index->size(); ++i)
        os << (i ? "," : "") << (*t.index)[i];
      os << ")";
    }
  }
  if (t.axis) os << " axis=" << *t.axis;
  if (t.window) os << " window=" << *t.window;
  if (t.kmax) os << " kmax=" << *t.kmax;
  const Expectation& e = t.expect;
  switch (e.kind) {
    case Expectation::Kind::none:
      break;
    case Expectation::Kind::ints: {
      os << " expect [";
      for (size_t i = 0; i < e.ints.size(); ++i)
        os << (i ? ", " : "") << e.ints[i];
      os << "]";
      break;
    }
    case Expectation::Kind::monomials: {
      os << " expect [";
      for (size_t i = 0; i < e.monomials.size(); ++i)
        os << (i ? ", " : "") << e.ring->monomial_string(e.monomials[i]);
      os << "]";
      break;
    }
    case Expectation::Kind::integer:
      os << " expect " << e.integer;
      break;
    case Expectation::Kind::verdict:
      os << " expect " << e.verdict;
      break;
    case Expectation::Kind::r_value:
      os << " expect r=" << e.integer;
      break;
  }
  return os.str();
}

std::string InstanceFile::to_text() const {
  std::ostringstream os;
  for (const auto& [name, ring] : rings) {
    os << "ring " << name << " = poly(";
    for (size_t i = 0; i < ring->variables().size(); ++i)
      os << (i ? ", " : "") << ring->variables()[i];
    os << ")";
    if (!ring->is_polynomial()) {
      os << " / [";
      const auto& q = ring->quotient_generators();
      for (size_t i = 0; i < q.size(); ++i)
        os << (i ? ", " : "") << ring->monomial_string(q[i]);
      os << "]";
    }
    if (ring->asserted_cohen_macaulay()) os << " cm";
    os << ";\n";
  }
  for (const auto& [name, ideal] : ideals) {
    os << "ideal " << name << " = [";
    const auto& gens = ideal.generators();
    for (size_t i = 0; i < gens.size(); ++i)
      os << (i ? ", " : "") << ideal.ring()->monomial_string(gens[i]);
    os << "];\n";
  }
  for (const auto& [name, expr] : filtrations)
    os << "filtration " << name << " = " << filtration_expr_text(expr)
       << ";\n";
  for (const auto& [name, ids] : candidate_sets) {
    os << "candidates " << name << " = [";
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << ids[i];
    os << "];\n";
  }
  for (const auto& t : tasks) os << "task " << task_text(t) << ";\n";
  return os.str();
}

InstanceFile parse_instance(const std::string& text) {
  return Parser(text).parse();
}

std::string fnv1a_digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return "fnv1a64:" + os.str();
}

} // namespace filtralab
