// Copyright 2026 The cacheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cac/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>

#include "cac/error.hpp"
#include "cac/general_schema.hpp"

namespace cac {

std::vector<const Directive*> Document::directives() const {
  std::vector<const Directive*> out;
  for (const Item& it : items)
    if (auto* d = std::get_if<Directive>(&it)) out.push_back(d);
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident, LParen, CallParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, Colon,
  Dot, Arrow, FatArrow, Assign, Equal, Bar, Greater, Slash, Star, Box, And, Or, End
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LParen:
    case Tok::CallParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Assign: return "':='";
    case Tok::Equal: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::Greater: return "'>'";
    case Tok::Slash: return "'/'";
    case Tok::Star: return "'*'";
    case Tok::Box: return "'□'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool glued = false;  // previous token was an identifier with no gap
    for (;;) {
      bool gap = skip_space();
      if (gap) glued = false;
      SourceLocation loc{line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", loc});
        return out;
      }
      char c = src_[pos_];
      if (is_ident_char(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance(1);
        out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), loc});
        glued = true;
        continue;
      }
      Tok kind;
      std::string text;
      if (auto u = unicode()) {
        kind = u->first;
        text = u->second;
      } else if (c == '(') {
        kind = glued ? Tok::CallParen : Tok::LParen;
        advance(1);
      } else if (lit("->")) {
        kind = Tok::Arrow;
      } else if (lit("=>")) {
        kind = Tok::FatArrow;
      } else if (lit(":=")) {
        kind = Tok::Assign;
      } else if (lit("/\\")) {
        kind = Tok::And;
      } else if (lit("\\/")) {
        kind = Tok::Or;
      } else {
        switch (c) {
          case ')': kind = Tok::RParen; break;
          case '[': kind = Tok::LBracket; break;
          case ']': kind = Tok::RBracket; break;
          case '{': kind = Tok::LBrace; break;
          case '}': kind = Tok::RBrace; break;
          case ',': kind = Tok::Comma; break;
          case ':': kind = Tok::Colon; break;
          case '.': kind = Tok::Dot; break;
          case '=': kind = Tok::Equal; break;
          case '|': kind = Tok::Bar; break;
          case '>': kind = Tok::Greater; break;
          case '/': kind = Tok::Slash; break;
          case '*': kind = Tok::Star; break;
          default: {
            std::string shown(1, c);
            if (static_cast<unsigned char>(c) < 0x20) shown = "\\x" + std::to_string(int(c));
            throw Error(ErrorKind::Parse, file_ + ":" + std::to_string(loc.line) + ":" +
                                              std::to_string(loc.column) +
                                              ": unexpected character '" + shown + "'");
          }
        }
        advance(1);
      }
      if (kind == Tok::Ident) {
        out.push_back({kind, text, loc});
        glued = true;
      } else {
        out.push_back({kind, "", loc});
        glued = false;
      }
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  bool lit(std::string_view s) {
    if (src_.substr(pos_, s.size()) != s) return false;
    advance(s.size());
    return true;
  }

  bool skip_space() {
    bool any = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else {
        break;
      }
      any = true;
    }
    return any;
  }

  std::optional<std::pair<Tok, std::string>> unicode() {
    static const std::pair<std::string_view, std::pair<Tok, const char*>> table[] = {
        {"★", {Tok::Star, ""}},    {"□", {Tok::Box, ""}},      {"→", {Tok::Arrow, ""}},
        {"⇒", {Tok::FatArrow, ""}}, {"∧", {Tok::And, ""}},      {"∨", {Tok::Or, ""}},
        {"¬", {Tok::Ident, "not"}}, {"⊤", {Tok::Ident, "top"}}, {"⊥", {Tok::Ident, "bot"}},
        {"λ", {Tok::Ident, "fun"}},
    };
    for (const auto& [s, v] : table)
      if (lit(s)) return std::make_pair(v.first, std::string(v.second));
    return std::nullopt;
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Raw syntax

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct AstBinder {
  std::string name;
  AstPtr type;
};

struct Ast {
  enum class Kind { Name, Sort, Call, Spine, Fun, Pi, Arrow, Infix };
  Kind kind;
  SourceLocation loc;
  std::string name;          // Name, Call, Infix (symbol)
  Sort sort = Sort::Star;
  std::vector<AstPtr> args;  // Call args; Spine [head, args...]; Arrow/Infix [a, b]
  std::vector<AstBinder> binders;
  AstPtr body;
};

AstPtr make(Ast a) { return std::make_shared<const Ast>(std::move(a)); }

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"symbol", "rule",      "inductive", "pragma", "check",
                                       "normalize", "convert", "with",      "fun"};
  return k;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::string& file) : t_(std::move(toks)), file_(file) {}

  const Token& peek(std::size_t k = 0) const {
    return t_[std::min(i_ + k, t_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
  Token next() {
    Token tok = peek();
    if (i_ < t_.size() - 1) ++i_;
    return tok;
  }

  [[noreturn]] void fail(const SourceLocation& loc, const std::string& msg) const {
    throw Error(ErrorKind::Parse, file_ + ":" + std::to_string(loc.line) + ":" +
                                      std::to_string(loc.column) + ": " + msg);
  }
  [[noreturn]] void unexpected(const std::string& wanted) const {
    const Token& tok = peek();
    std::string found = tok.kind == Tok::Ident ? "'" + tok.text + "'" : describe(tok.kind);
    fail(tok.loc, "expected " + wanted + ", found " + found);
  }

  Token expect(Tok k) {
    if (!at(k)) unexpected(describe(k));
    return next();
  }
  Token expect_word(std::string_view w) {
    if (!at_word(w)) unexpected("'" + std::string(w) + "'");
    return next();
  }
  std::string ident() {
    if (!at(Tok::Ident)) unexpected("identifier");
    if (keywords().count(peek().text)) unexpected("identifier");
    return next().text;
  }
  unsigned number() {
    SourceLocation loc = peek().loc;
    std::string s = ident();
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(loc, "expected a number, found '" + s + "'");
    return v;
  }

  // term := fun | pi | arrow
  AstPtr term() {
    if (at_word("fun")) {
      SourceLocation loc = next().loc;
      std::vector<AstBinder> bs;
      while (at(Tok::LParen)) binder_group(bs);
      if (bs.empty()) unexpected("'(' starting a binder");
      expect(Tok::FatArrow);
      AstPtr body = term();
      return make({Ast::Kind::Fun, loc, "", Sort::Star, {}, std::move(bs), body});
    }
    if (at(Tok::LParen) && starts_binder()) {
      SourceLocation loc = peek().loc;
      std::vector<AstBinder> bs;
      while (at(Tok::LParen) && starts_binder()) binder_group(bs);
      expect(Tok::Arrow);
      AstPtr body = term();
      return make({Ast::Kind::Pi, loc, "", Sort::Star, {}, std::move(bs), body});
    }
    AstPtr a = or_term();
    if (at(Tok::Arrow)) {
      SourceLocation loc = next().loc;
      AstPtr b = term();
      return make({Ast::Kind::Arrow, loc, "", Sort::Star, {a, b}, {}, nullptr});
    }
    return a;
  }

  // Left-hand sides stop before '->'.
  AstPtr or_term() {
    AstPtr a = and_term();
    if (at(Tok::Or)) {
      SourceLocation loc = next().loc;
      AstPtr b = or_term();
      return make({Ast::Kind::Infix, loc, "or", Sort::Star, {a, b}, {}, nullptr});
    }
    return a;
  }

  AstPtr and_term() {
    AstPtr a = app_term();
    if (at(Tok::And)) {
      SourceLocation loc = next().loc;
      AstPtr b = and_term();
      return make({Ast::Kind::Infix, loc, "and", Sort::Star, {a, b}, {}, nullptr});
    }
    return a;
  }

  AstPtr app_term() {
    SourceLocation loc = peek().loc;
    std::vector<AstPtr> items;
    while (starts_atom()) items.push_back(atom());
    if (items.empty()) unexpected("a term");
    if (items.size() == 1) return items.front();
    return make({Ast::Kind::Spine, loc, "", Sort::Star, std::move(items), {}, nullptr});
  }

 private:
  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Ident: return !keywords().count(peek().text) || peek().text == "fun";
      case Tok::LParen:
      case Tok::Star:
      case Tok::Box: return true;
      default: return false;
    }
  }

  // '(' ident+ ':'
  bool starts_binder() const {
    std::size_t k = 1;
    while (peek(k).kind == Tok::Ident) ++k;
    return k > 1 && peek(k).kind == Tok::Colon;
  }

  void binder_group(std::vector<AstBinder>& out) {
    expect(Tok::LParen);
    std::vector<std::string> names;
    while (at(Tok::Ident)) names.push_back(ident());
    if (names.empty()) unexpected("identifier");
    expect(Tok::Colon);
    AstPtr ty = term();
    expect(Tok::RParen);
    for (auto& n : names) out.push_back({n, ty});
  }

  AstPtr atom() {
    const Token& tok = peek();
    SourceLocation loc = tok.loc;
    switch (tok.kind) {
      case Tok::Star:
        next();
        return make({Ast::Kind::Sort, loc, "", Sort::Star, {}, {}, nullptr});
      case Tok::Box:
        next();
        return make({Ast::Kind::Sort, loc, "", Sort::Box, {}, {}, nullptr});
      case Tok::LParen: {
        next();
        AstPtr inner = term();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        if (tok.text == "fun") {
          // A lambda inside a spine extends to the right, like in the head position.
          return term();
        }
        std::string name = ident();
        if (!at(Tok::CallParen)) return make({Ast::Kind::Name, loc, name, Sort::Star, {}, {}, nullptr});
        next();
        std::vector<AstPtr> args;
        if (!at(Tok::RParen)) {
          args.push_back(term());
          while (at(Tok::Comma)) {
            next();
            args.push_back(term());
          }
        }
        expect(Tok::RParen);
        return make({Ast::Kind::Call, loc, name, Sort::Star, std::move(args), {}, nullptr});
      }
      default: unexpected("a term");
    }
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  const std::string& file_;
};

// ---------------------------------------------------------------------------
// Elaboration

class Elaborator {
 public:
  Elaborator(const Theory& theory, const std::string& file) : theory_(theory), file_(file) {}

  // Names resolved as variables, innermost last.
  std::vector<std::pair<std::string, Variable>> scope;
  // When set, unknown identifiers become fresh pattern variables.
  std::vector<std::pair<std::string, Variable>>* patterns = nullptr;

  [[noreturn]] void fail(const SourceLocation& loc, ErrorKind kind, const std::string& msg) const {
    throw Error(kind, file_ + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                          ": " + msg);
  }

  Term run(const AstPtr& a) {
    switch (a->kind) {
      case Ast::Kind::Sort: return Term::sort(a->sort);
      case Ast::Kind::Name:
      case Ast::Kind::Call:
      case Ast::Kind::Infix: return spine(a, {});
      case Ast::Kind::Spine:
        return spine(a->args.front(), std::span<const AstPtr>(a->args).subspan(1));
      case Ast::Kind::Arrow: {
        Term dom = run(a->args[0]);
        Term cod = run(a->args[1]);
        return Term::arrow(dom, cod);
      }
      case Ast::Kind::Fun:
      case Ast::Kind::Pi: return binders(a, 0);
    }
    return {};
  }

  const SymbolDecl* symbol(const std::string& name) const {
    if (const SymbolDecl* d = theory_.signature().find(name)) return d;
    if (auto it = theory_.aliases.find(name); it != theory_.aliases.end())
      return theory_.signature().find(it->second);
    return nullptr;
  }

 private:
  std::optional<Variable> lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    if (patterns)
      for (const auto& [n, v] : *patterns)
        if (n == name) return v;
    return std::nullopt;
  }

  Term binders(const AstPtr& a, std::size_t i) {
    if (i == a->binders.size()) return run(a->body);
    const AstBinder& b = a->binders[i];
    Term dom = run(b.type);
    Variable x = Variable::fresh(b.name, sort_class_of_type(dom));
    scope.emplace_back(b.name, x);
    Term body = binders(a, i + 1);
    scope.pop_back();
    return a->kind == Ast::Kind::Fun ? Term::lambda(x, dom, body) : Term::pi(x, dom, body);
  }

  Term spine(const AstPtr& head, std::span<const AstPtr> rest) {
    std::vector<AstPtr> args;
    std::string name;
    bool named = false;
    if (head->kind == Ast::Kind::Name || head->kind == Ast::Kind::Call ||
        head->kind == Ast::Kind::Infix) {
      name = head->name;
      named = true;
      args = head->args;
    }
    args.insert(args.end(), rest.begin(), rest.end());

    Term h;
    std::size_t used = 0;
    if (!named) {
      h = run(head);
    } else if (head->kind != Ast::Kind::Infix && lookup(name)) {
      h = Term::var(*lookup(name));
    } else if (const SymbolDecl* d = symbol(name)) {
      if (args.size() < d->arity)
        fail(head->loc, ErrorKind::ArityMismatch,
             "symbol " + name + " expects " + std::to_string(d->arity) + " argument" +
                 (d->arity == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
      std::vector<Term> sargs;
      for (std::size_t k = 0; k < d->arity; ++k) sargs.push_back(run(args[k]));
      h = Term::symbol(d->name, std::move(sargs));
      used = d->arity;
    } else if (head->kind == Ast::Kind::Infix) {
      fail(head->loc, ErrorKind::UnknownSymbol,
           "connective needs a declared symbol '" + name + "'");
    } else if (patterns) {
      Variable x = Variable::fresh(name, Sort::Star);
      patterns->emplace_back(name, x);
      h = Term::var(x);
    } else {
      fail(head->loc, ErrorKind::UnknownSymbol, "unknown identifier '" + name + "'");
    }
    for (std::size_t k = used; k < args.size(); ++k) h = Term::app(h, run(args[k]));
    return h;
  }

  const Theory& theory_;
  const std::string& file_;
};

// ---------------------------------------------------------------------------
// Items

struct RawBinding {
  std::string name;
  AstPtr type;
  SourceLocation loc;
};

class DocumentBuilder {
 public:
  DocumentBuilder(std::string_view source, std::string file)
      : file_(std::move(file)), parser_(Lexer(source, file_).run(), file_) {
    doc_.file = file_;
    doc_.theory = std::make_unique<Theory>();
  }

  Document run() {
    while (!parser_.at(Tok::End)) item();
    doc_.theory->seal();
    return std::move(doc_);
  }

 private:
  Theory& theory() { return *doc_.theory; }

  // Kernel errors raised while elaborating an item get the item location.
  template <class F>
  void located(const SourceLocation& loc, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      std::string msg = e.what();
      if (msg.rfind(file_ + ":", 0) == 0) throw;
      throw Error(e.kind(), file_ + ":" + std::to_string(loc.line) + ":" +
                                std::to_string(loc.column) + ": " + msg);
    }
  }

  void item() {
    const Token& tok = parser_.peek();
    SourceLocation loc = tok.loc;
    if (tok.kind != Tok::Ident) parser_.unexpected("a declaration");
    const std::string w = tok.text;
    parser_.next();
    if (w == "symbol") symbol_item(loc);
    else if (w == "rule") rule_item(loc);
    else if (w == "inductive") inductive_item(loc);
    else if (w == "pragma") pragma_item(loc);
    else if (w == "check") directive_item(loc, Directive::Kind::Check);
    else if (w == "normalize") directive_item(loc, Directive::Kind::Normalize);
    else if (w == "convert") directive_item(loc, Directive::Kind::Convert);
    else parser_.fail(loc, "expected a declaration, found '" + w + "'");
    parser_.expect(Tok::Dot);
  }

  void symbol_item(const SourceLocation& loc) {
    SymbolItem it;
    it.decl.name = parser_.ident();
    std::optional<std::size_t> arity;
    if (parser_.at(Tok::Slash)) {
      parser_.next();
      arity = parser_.number();
      it.explicit_arity = true;
    }
    parser_.expect(Tok::Colon);
    AstPtr ty = parser_.term();
    located(loc, [&] {
      Elaborator el(theory(), file_);
      it.decl.type = el.run(ty);
      it.decl.arity = arity ? *arity : product_count(it.decl.type);
      it.decl = declare_symbol(theory(), it.decl);
    });
    doc_.items.emplace_back(std::move(it));
  }

  std::vector<RawBinding> raw_env() {
    std::vector<RawBinding> out;
    parser_.expect(Tok::LBracket);
    while (!parser_.at(Tok::RBracket)) {
      std::vector<std::pair<std::string, SourceLocation>> names;
      while (parser_.at(Tok::Ident)) {
        SourceLocation l = parser_.peek().loc;
        names.emplace_back(parser_.ident(), l);
      }
      if (names.empty()) parser_.unexpected("identifier");
      parser_.expect(Tok::Colon);
      AstPtr ty = parser_.term();
      for (auto& [n, l] : names) out.push_back({n, ty, l});
      if (!parser_.at(Tok::Comma)) break;
      parser_.next();
    }
    parser_.expect(Tok::RBracket);
    return out;
  }

  Environment elaborate_env(Elaborator& el, const std::vector<RawBinding>& raw) {
    Environment env;
    for (const auto& b : raw) {
      for (const auto& [n, v] : el.scope)
        if (n == b.name) el.fail(b.loc, ErrorKind::InvalidArgument, "variable " + b.name + " bound twice");
      Term ty = el.run(b.type);
      Variable x = Variable::fresh(b.name, sort_class_of_type(ty));
      env.push(x, ty);
      el.scope.emplace_back(b.name, x);
    }
    return env;
  }

  void rule_item(const SourceLocation& loc) {
    RuleItem it;
    if (parser_.at(Tok::Ident) && parser_.peek(1).kind == Tok::Colon) {
      it.rule.name = parser_.ident();
      it.explicit_name = true;
      parser_.next();
    }
    AstPtr lhs = parser_.or_term();
    parser_.expect(Tok::Arrow);
    AstPtr rhs = parser_.term();
    std::optional<std::vector<RawBinding>> env;
    std::vector<std::tuple<std::string, AstPtr, SourceLocation>> rho;
    if (parser_.at_word("with")) {
      parser_.next();
      bool any = false;
      if (parser_.at_word("env")) {
        parser_.next();
        env = raw_env();
        any = true;
      }
      if (parser_.at_word("rho")) {
        parser_.next();
        parser_.expect(Tok::LBrace);
        while (!parser_.at(Tok::RBrace)) {
          SourceLocation l = parser_.peek().loc;
          std::string x = parser_.ident();
          parser_.expect(Tok::Assign);
          rho.emplace_back(x, parser_.term(), l);
          if (!parser_.at(Tok::Comma)) break;
          parser_.next();
        }
        parser_.expect(Tok::RBrace);
        any = true;
      }
      if (!any) parser_.unexpected("'env' or 'rho'");
    }

    located(loc, [&] {
      Elaborator el(theory(), file_);
      Environment gamma;
      if (env) gamma = elaborate_env(el, *env);
      std::vector<std::pair<std::string, Variable>> pats;
      el.patterns = &pats;
      Term l = el.run(lhs);
      if (!l.is(TermKind::Symbol))
        el.fail(lhs->loc, ErrorKind::IllFormedRule, "left-hand side must be headed by a symbol");
      if (!it.explicit_name) it.rule.name = auto_name(l.symbol_name());

      // Pattern variables get the sort class of their derived type.
      Substitution fix;
      for (auto& [n, x] : pats) {
        auto ps = positions_of(l, x);
        if (ps.empty()) continue;
        Sort s = Sort::Star;
        try {
          s = sort_class_of_type(derived_type(theory(), l, ps.front()));
        } catch (const Error&) {
        }
        if (s != x.sort_class()) {
          Variable y = x.with_sort(s);
          fix.bind(x, Term::var(y));
          x = y;
        }
      }
      if (!fix.empty()) l = subst_apply(l, fix);

      Substitution rh;
      for (const auto& [x, t, xl] : rho) {
        auto p = std::find_if(pats.begin(), pats.end(), [&](auto& e) { return e.first == x; });
        std::optional<Variable> v;
        if (p != pats.end()) v = p->second;
        for (const auto& b : gamma.bindings())
          if (b.var.name() == x) v = b.var;
        if (!v) el.fail(xl, ErrorKind::UnboundVariable, "rho binds " + x + ", which is not a rule variable");
        if (rh.contains(*v)) el.fail(xl, ErrorKind::InvalidArgument, "rho binds " + x + " twice");
        el.patterns = nullptr;
        el.scope.insert(el.scope.end(), pats.begin(), pats.end());
        Term value = el.run(t);
        el.scope.resize(el.scope.size() - pats.size());
        rh.bind(*v, value);
      }

      el.patterns = nullptr;
      el.scope.insert(el.scope.end(), pats.begin(), pats.end());
      Term r = el.run(rhs);

      it.rule.lhs = l;
      it.rule.rhs = r;
      it.rule.rho = rh;
      it.rule.annotated = env.has_value();
      it.rule.env = env ? gamma : default_env(l, rh);
      theory().add_rule(it.rule);
    });
    doc_.items.emplace_back(std::move(it));
  }

  std::string auto_name(const std::string& head) {
    std::size_t k = theory().rules_for(head).size() + 1;
    for (;; ++k) {
      std::string n = head + "_" + std::to_string(k);
      if (!theory().find_rule(n)) return n;
    }
  }

  // Derived types at first occurrence, rho applied, ordered so that every
  // type only mentions earlier variables when possible.
  Environment default_env(const Term& lhs, const Substitution& rho) {
    std::vector<std::pair<Variable, Term>> todo;
    for (const Variable& x : free_vars_ordered(lhs)) {
      if (rho.contains(x)) continue;
      Term ty = derived_type(theory(), lhs, positions_of(lhs, x).front());
      todo.emplace_back(x, subst_apply(ty, rho));
    }
    Environment env;
    while (!todo.empty()) {
      auto ready = std::find_if(todo.begin(), todo.end(), [&](const auto& e) {
        for (const Variable& y : free_vars_ordered(e.second))
          if (!env.contains(y) &&
              std::any_of(todo.begin(), todo.end(), [&](const auto& o) { return o.first == y; }))
            return false;
        return true;
      });
      if (ready == todo.end()) ready = todo.begin();
      env.push(ready->first, ready->second);
      todo.erase(ready);
    }
    return env;
  }

  void inductive_item(const SourceLocation& loc) {
    InductiveItem it;
    it.decl.name = parser_.ident();
    parser_.expect(Tok::Colon);
    AstPtr arity = parser_.term();
    parser_.expect(Tok::Assign);
    std::vector<std::pair<std::string, AstPtr>> ctors;
    if (!parser_.at(Tok::Dot)) {
      for (;;) {
        std::string c = parser_.ident();
        parser_.expect(Tok::Colon);
        ctors.emplace_back(c, parser_.term());
        if (!parser_.at(Tok::Bar)) break;
        parser_.next();
      }
    }
    located(loc, [&] {
      Elaborator el(theory(), file_);
      it.decl.arity_type = el.run(arity);
      it.decl.self = Variable::fresh(it.decl.name, Sort::Box);
      el.scope.emplace_back(it.decl.name, it.decl.self);
      for (const auto& [c, ty] : ctors) it.decl.constructors.emplace_back(c, el.run(ty));
      doc_.bundles.push_back(translate_inductive(theory(), it.decl));
    });
    doc_.items.emplace_back(std::move(it));
  }

  std::string declared(const SourceLocation& loc, const std::string& n) {
    Elaborator el(theory(), file_);
    const SymbolDecl* d = el.symbol(n);
    if (!d) parser_.fail(loc, "unknown symbol '" + n + "'");
    return d->name;
  }

  std::set<unsigned> position_set() {
    std::set<unsigned> out;
    parser_.expect(Tok::LBrace);
    while (!parser_.at(Tok::RBrace)) {
      SourceLocation l = parser_.peek().loc;
      unsigned k = parser_.number();
      if (k == 0) parser_.fail(l, "positions start at 1");
      out.insert(k);
      if (!parser_.at(Tok::Comma)) break;
      parser_.next();
    }
    parser_.expect(Tok::RBrace);
    return out;
  }

  std::string paren_name() {
    parser_.expect(parser_.at(Tok::CallParen) ? Tok::CallParen : Tok::LParen);
    SourceLocation l = parser_.peek().loc;
    std::string n = declared(l, parser_.ident());
    parser_.expect(Tok::RParen);
    return n;
  }

  void pragma_item(const SourceLocation& loc) {
    using K = PragmaItem::Kind;
    PragmaItem it;
    std::string w = parser_.ident();
    Signature& sig = theory().signature();
    if (w == "ind" || w == "acc") {
      it.kind = w == "ind" ? K::Ind : K::Acc;
      it.names.push_back(paren_name());
      parser_.expect(Tok::Equal);
      it.positions = position_set();
      auto& m = w == "ind" ? sig.structure().ind : sig.structure().acc;
      m[it.names.front()] = it.positions;
    } else if (w == "prec") {
      auto name = [&] {
        SourceLocation l = parser_.peek().loc;
        return declared(l, parser_.ident());
      };
      it.names.push_back(name());
      if (parser_.at(Tok::Equal)) {
        parser_.next();
        it.kind = K::PrecEqual;
        it.names.push_back(name());
        sig.precedence().declare_equivalent(it.names[0], it.names[1]);
      } else {
        it.kind = K::PrecGreater;
        parser_.expect(Tok::Greater);
        it.names.push_back(name());
        while (parser_.at(Tok::Greater)) {
          parser_.next();
          it.names.push_back(name());
        }
        for (std::size_t i = 0; i + 1 < it.names.size(); ++i)
          sig.precedence().declare_greater(it.names[i], it.names[i + 1]);
      }
    } else if (w == "assume_confluent") {
      it.kind = K::AssumeConfluent;
      theory().assume_confluent = true;
    } else if (w == "assume_terminating") {
      it.kind = K::AssumeTerminating;
      theory().assume_terminating = true;
    } else if (w == "algebraic" || w == "nonalgebraic") {
      it.kind = w == "algebraic" ? K::Algebraic : K::NonAlgebraic;
      SourceLocation l = parser_.peek().loc;
      it.names.push_back(declared(l, parser_.ident()));
      (w == "algebraic" ? theory().force_algebraic : theory().force_nonalgebraic)
          .insert(it.names.front());
    } else if (w == "selim") {
      it.kind = K::Selim;
      parser_.expect(parser_.at(Tok::CallParen) ? Tok::CallParen : Tok::LParen);
      SourceLocation l = parser_.peek().loc;
      std::string ind = parser_.ident();
      parser_.expect(Tok::RParen);
      auto b = std::find_if(doc_.bundles.begin(), doc_.bundles.end(),
                            [&](const GeneratedBundle& g) { return g.inductive == ind; });
      if (b == doc_.bundles.end()) parser_.fail(l, "'" + ind + "' is not an inductive type");
      it.names.push_back(ind);
      it.eliminator = parser_.ident();
      parser_.expect(Tok::Assign);
      AstPtr motive = parser_.term();
      located(loc, [&] {
        Elaborator el(theory(), file_);
        it.motive = el.run(motive);
        add_strong_elimination(theory(), *b, it.eliminator, it.motive);
      });
    } else {
      parser_.fail(loc, "unknown pragma '" + w + "'");
    }
    doc_.items.emplace_back(std::move(it));
  }

  void directive_item(const SourceLocation& loc, Directive::Kind kind) {
    Directive d;
    d.kind = kind;
    d.where = loc;
    std::optional<std::vector<RawBinding>> env;
    if (parser_.at(Tok::LBracket)) env = raw_env();
    AstPtr a = parser_.term();
    AstPtr b;
    if (kind == Directive::Kind::Check) {
      parser_.expect(Tok::Colon);
      b = parser_.term();
    } else if (kind == Directive::Kind::Convert) {
      parser_.expect(Tok::Equal);
      b = parser_.term();
    }
    located(loc, [&] {
      Elaborator el(theory(), file_);
      if (env) d.env = elaborate_env(el, *env);
      d.subject = el.run(a);
      if (b) d.other = el.run(b);
    });
    doc_.items.emplace_back(std::move(d));
  }

  std::string file_;
  Parser parser_;
  Document doc_;
};

// ---------------------------------------------------------------------------
// Printing

std::string print_env(const Environment& env) {
  std::string s = "[";
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) s += ", ";
    s += env[i].var.name() + " : " + to_string(env[i].type);
  }
  return s + "]";
}

std::string join_positions(const std::set<unsigned>& ps) {
  std::string s = "{";
  bool first = true;
  for (unsigned p : ps) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(p);
  }
  return s + "}";
}

}  // namespace

Document parse_document(std::string_view source, std::string file) {
  return DocumentBuilder(source, std::move(file)).run();
}

Term parse_term(const Theory& theory, std::string_view source, const Environment& scope) {
  static const std::string file = "<term>";
  Parser p(Lexer(source, file).run(), file);
  AstPtr a = p.term();
  if (!p.at(Tok::End)) p.unexpected("end of term");
  Elaborator el(theory, file);
  for (const auto& b : scope.bindings()) el.scope.emplace_back(b.var.name(), b.var);
  return el.run(a);
}

std::string print_item(const Item& item) {
  using K = PragmaItem::Kind;
  struct Visitor {
    std::string operator()(const SymbolItem& s) const {
      std::string out = "symbol " + s.decl.name;
      if (s.explicit_arity || s.decl.arity != product_count(s.decl.type))
        out += "/" + std::to_string(s.decl.arity);
      return out + " : " + to_string(s.decl.type) + " .";
    }
    std::string operator()(const RuleItem& r) const {
      std::string out = "rule " + r.rule.name + " : " + to_string(r.rule.lhs) + " -> " +
                        to_string(r.rule.rhs);
      bool with = r.rule.annotated || !r.rule.rho.empty();
      if (with) out += " with";
      if (r.rule.annotated) out += " env " + print_env(r.rule.env);
      if (!r.rule.rho.empty()) {
        out += " rho {";
        bool first = true;
        // Stable order: by position of first occurrence in the lhs.
        for (const Variable& x : free_vars_ordered(r.rule.lhs)) {
          const Term* t = r.rule.rho.find(x);
          if (!t) continue;
          if (!first) out += ", ";
          first = false;
          out += x.name() + " := " + to_string(*t);
        }
        out += "}";
      }
      return out + " .";
    }
    std::string operator()(const InductiveItem& i) const {
      std::string out = "inductive " + i.decl.name + " : " + to_string(i.decl.arity_type) + " :=";
      for (std::size_t k = 0; k < i.decl.constructors.size(); ++k) {
        out += k ? "\n  | " : "\n    ";
        out += i.decl.constructors[k].first + " : " + to_string(i.decl.constructors[k].second);
      }
      return out + " .";
    }
    std::string operator()(const PragmaItem& p) const {
      switch (p.kind) {
        case K::Ind: return "pragma ind(" + p.names[0] + ") = " + join_positions(p.positions) + " .";
        case K::Acc: return "pragma acc(" + p.names[0] + ") = " + join_positions(p.positions) + " .";
        case K::PrecGreater: {
          std::string out = "pragma prec " + p.names[0];
          for (std::size_t i = 1; i < p.names.size(); ++i) out += " > " + p.names[i];
          return out + " .";
        }
        case K::PrecEqual: return "pragma prec " + p.names[0] + " = " + p.names[1] + " .";
        case K::AssumeConfluent: return "pragma assume_confluent .";
        case K::AssumeTerminating: return "pragma assume_terminating .";
        case K::Algebraic: return "pragma algebraic " + p.names[0] + " .";
        case K::NonAlgebraic: return "pragma nonalgebraic " + p.names[0] + " .";
        case K::Selim:
          return "pragma selim(" + p.names[0] + ") " + p.eliminator + " := " +
                 to_string(p.motive) + " .";
      }
      return "";
    }
    std::string operator()(const Directive& d) const {
      std::string env = d.env.empty() ? "" : print_env(d.env) + " ";
      switch (d.kind) {
        case Directive::Kind::Check:
          return "check " + env + to_string(d.subject) + " : " + to_string(d.other) + " .";
        case Directive::Kind::Normalize: return "normalize " + env + to_string(d.subject) + " .";
        case Directive::Kind::Convert:
          return "convert " + env + to_string(d.subject) + " = " + to_string(d.other) + " .";
      }
      return "";
    }
  };
  return std::visit(Visitor{}, item);
}

std::string print_items(const std::vector<Item>& items) {
  std::string out;
  for (const Item& it : items) out += print_item(it) + "\n";
  return out;
}

}  // namespace cac
