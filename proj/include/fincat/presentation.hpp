#pragma once

// Text format for categories (full composition tables or generators and
// relations), functors and natural transformations: lexer, parser with
// line/column diagnostics, table elaboration, bounded saturation of
// presented categories, and a canonical printer with a parse round-trip
// contract.

#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "fincat/functor.hpp"

namespace fincat {

struct ParseError : CatError {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : CatError("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct ElaborationError : CatError {
  LawReport report;
  ElaborationError(const std::string& msg, LawReport r)
      : CatError(msg + "\n" + r.summary()), report(std::move(r)) {}
};

struct SaturationError : CatError {
  using CatError::CatError;
};

struct ArrowDecl {
  std::string name, src, dst;
  bool operator==(const ArrowDecl&) const = default;
};

struct ComposeDecl {
  std::string g, f, result;  // g.f = result
  bool operator==(const ComposeDecl&) const = default;
};

struct RelationDecl {
  // words outermost-first: "g.f" is [g, f]; object names denote identities
  std::vector<std::string> lhs, rhs;
  bool operator==(const RelationDecl&) const = default;
};

struct Presentation {
  enum class Mode { table, presented };
  std::string name;
  Mode mode = Mode::table;
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;  // arrows (table) or generators (presented)
  std::vector<std::pair<std::string, std::string>> ids;  // object -> arrow name
  std::vector<ComposeDecl> compose;
  std::vector<std::pair<std::string, std::string>> equivs;  // arrow ~ arrow
  std::vector<RelationDecl> relations;

  bool operator==(const Presentation&) const = default;
};

struct FunctorDecl {
  std::string name, source, target;
  bool diagram = false;  // declared with the "diagram" keyword
  std::vector<std::pair<std::string, std::string>> obj_map;  // source object -> target object
  std::vector<std::pair<std::string, std::string>> arr_map;  // source arrow -> target arrow

  bool operator==(const FunctorDecl&) const = default;
};

struct NatDecl {
  std::string name, source, target;  // functor names
  std::vector<std::pair<std::string, std::string>> at;  // object -> component arrow

  bool operator==(const NatDecl&) const = default;
};

struct Document {
  std::vector<Presentation> categories;
  std::vector<FunctorDecl> functors;
  std::vector<NatDecl> nats;

  bool operator==(const Document&) const = default;
};

struct SaturationConfig {
  int max_arrows = 512;
  int max_word_length = 8;
};

namespace detail {

struct Token {
  enum class Kind { name, colon, arrow, darrow, dot, equals, tilde, end };
  Kind kind;
  std::string text;
  int line, col;
};

inline const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::name: return "a name";
    case Token::Kind::colon: return "':'";
    case Token::Kind::arrow: return "'->'";
    case Token::Kind::darrow: return "'=>'";
    case Token::Kind::dot: return "'.'";
    case Token::Kind::equals: return "'='";
    case Token::Kind::tilde: return "'~'";
    case Token::Kind::end: return "end of input";
  }
  return "?";
}

inline bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    if (name_start(c) || c == '*') {
      std::string name(1, c);
      advance(1);
      if (c != '*')
        while (i < text.size() && name_char(text[i])) {
          name += text[i];
          advance(1);
        }
      out.push_back({Token::Kind::name, name, l, cl});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      out.push_back({Token::Kind::arrow, "->", l, cl});
      continue;
    }
    if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      out.push_back({Token::Kind::darrow, "=>", l, cl});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case ':': k = Token::Kind::colon; break;
      case '.': k = Token::Kind::dot; break;
      case '=': k = Token::Kind::equals; break;
      case '~': k = Token::Kind::tilde; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    advance(1);
    out.push_back({k, std::string(1, c), l, cl});
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

inline const std::vector<std::string>& reserved_words() {
  static const std::vector<std::string> words = {
      "category", "functor", "nat",   "diagram",   "table", "presented", "objects", "arrows",
      "generators", "id",    "compose", "equiv", "relations", "obj",   "arr",       "at"};
  return words;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::name ? "'" + t.text + "'" : token_name(t.kind);
    throw ParseError("expected " + expected + ", got " + got, t.line, t.col);
  }

  Token expect(Token::Kind k) {
    if (peek().kind != k) fail(token_name(k));
    return next();
  }

  bool at_keyword(const std::string& w) const {
    return peek().kind == Token::Kind::name && peek().text == w;
  }

  bool at_reserved() const {
    if (peek().kind != Token::Kind::name) return false;
    const auto& ws = reserved_words();
    return std::find(ws.begin(), ws.end(), peek().text) != ws.end();
  }

  void expect_keyword(const std::string& w) {
    if (!at_keyword(w)) fail("'" + w + "'");
    next();
  }

  std::string expect_name() {
    if (peek().kind != Token::Kind::name) fail("a name");
    if (at_reserved()) fail("a name (got the reserved word '" + peek().text + "')");
    return next().text;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out;
    while (peek().kind == Token::Kind::name && !at_reserved()) out.push_back(next().text);
    return out;
  }

  std::vector<std::string> word() {
    std::vector<std::string> w{expect_name()};
    while (peek().kind == Token::Kind::dot) {
      next();
      w.push_back(expect_name());
    }
    return w;
  }
};

// declaration-order name table with duplicate/undeclared checks
struct NameScope {
  std::map<std::string, int> ix;
  void declare(Parser& p, const std::string& kind, const std::string& name, const Token& at) {
    if (!ix.emplace(name, static_cast<int>(ix.size())).second)
      throw ParseError("duplicate " + kind + " '" + name + "'", at.line, at.col);
    (void)p;
  }
  int resolve(const std::string& kind, const std::string& name, const Token& at) const {
    auto it = ix.find(name);
    if (it == ix.end())
      throw ParseError("undeclared " + kind + " '" + name + "'", at.line, at.col);
    return it->second;
  }
};

}  // namespace detail

inline Document parse(const std::string& text) {
  detail::Parser p{detail::lex(text)};
  Document doc;
  std::vector<std::string> functor_names;
  while (p.peek().kind != detail::Token::Kind::end) {
    if (p.at_keyword("category")) {
      p.next();
      Presentation c;
      c.name = p.expect_name();
      if (p.at_keyword("table")) {
        c.mode = Presentation::Mode::table;
      } else if (p.at_keyword("presented")) {
        c.mode = Presentation::Mode::presented;
      } else {
        p.fail("'table' or 'presented'");
      }
      p.next();
      detail::NameScope objs, arrs;
      p.expect_keyword("objects");
      p.expect(detail::Token::Kind::colon);
      for (const std::string& o : p.name_list()) {
        objs.declare(p, "object", o, p.peek());
        c.objects.push_back(o);
      }
      auto arrow_decls = [&](const char* section) {
        p.expect_keyword(section);
        p.expect(detail::Token::Kind::colon);
        while (p.peek().kind == detail::Token::Kind::name && !p.at_reserved()) {
          detail::Token at = p.peek();
          ArrowDecl a;
          a.name = p.expect_name();
          p.expect(detail::Token::Kind::colon);
          a.src = c.objects[objs.resolve("object", p.expect_name(), at)];
          p.expect(detail::Token::Kind::arrow);
          a.dst = c.objects[objs.resolve("object", p.expect_name(), at)];
          if (objs.ix.count(a.name))
            throw ParseError("name '" + a.name + "' already names an object", at.line, at.col);
          arrs.declare(p, "arrow", a.name, at);
          c.arrows.push_back(a);
        }
      };
      if (c.mode == Presentation::Mode::table) {
        arrow_decls("arrows");
        while (p.at_keyword("id")) {
          p.next();
          detail::Token at = p.peek();
          std::string o = p.expect_name();
          objs.resolve("object", o, at);
          p.expect(detail::Token::Kind::colon);
          std::string a = p.expect_name();
          arrs.resolve("arrow", a, at);
          c.ids.push_back({o, a});
        }
        p.expect_keyword("compose");
        p.expect(detail::Token::Kind::colon);
        while (p.peek().kind == detail::Token::Kind::name && !p.at_reserved()) {
          detail::Token at = p.peek();
          ComposeDecl e;
          e.g = p.expect_name();
          arrs.resolve("arrow", e.g, at);
          p.expect(detail::Token::Kind::dot);
          e.f = p.expect_name();
          arrs.resolve("arrow", e.f, at);
          p.expect(detail::Token::Kind::equals);
          e.result = p.expect_name();
          arrs.resolve("arrow", e.result, at);
          c.compose.push_back(e);
        }
        if (p.at_keyword("equiv")) {
          p.next();
          p.expect(detail::Token::Kind::colon);
          while (p.peek().kind == detail::Token::Kind::name && !p.at_reserved()) {
            detail::Token at = p.peek();
            std::string a = p.expect_name();
            arrs.resolve("arrow", a, at);
            p.expect(detail::Token::Kind::tilde);
            std::string b = p.expect_name();
            arrs.resolve("arrow", b, at);
            c.equivs.push_back({a, b});
          }
        }
      } else {
        arrow_decls("generators");
        p.expect_keyword("relations");
        p.expect(detail::Token::Kind::colon);
        // typing of a word: each letter is a generator or an object
        // (its identity); adjacent letters must be composable
        auto word_type = [&](const std::vector<std::string>& w,
                             const detail::Token& at) -> std::pair<std::string, std::string> {
          auto ends = [&](const std::string& n) -> std::pair<std::string, std::string> {
            if (objs.ix.count(n)) return {n, n};
            int a = arrs.resolve("generator or object", n, at);
            return {c.arrows[a].src, c.arrows[a].dst};
          };
          auto [src, dst] = ends(w.back());
          for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) {
            auto [s2, d2] = ends(w[i]);
            if (s2 != dst)
              throw ParseError("word is not composable at '" + w[i] + "'", at.line, at.col);
            dst = d2;
          }
          return {src, dst};
        };
        while (p.peek().kind == detail::Token::Kind::name && !p.at_reserved()) {
          detail::Token at = p.peek();
          RelationDecl rel;
          rel.lhs = p.word();
          p.expect(detail::Token::Kind::equals);
          rel.rhs = p.word();
          if (word_type(rel.lhs, at) != word_type(rel.rhs, at))
            throw ParseError("relation equates non-parallel words", at.line, at.col);
          c.relations.push_back(rel);
        }
      }
      doc.categories.push_back(std::move(c));
    } else if (p.at_keyword("functor") || p.at_keyword("diagram")) {
      FunctorDecl f;
      f.diagram = p.at_keyword("diagram");
      p.next();
      f.name = p.expect_name();
      p.expect(detail::Token::Kind::colon);
      f.source = p.expect_name();
      p.expect(detail::Token::Kind::arrow);
      f.target = p.expect_name();
      while (p.at_keyword("obj") || p.at_keyword("arr")) {
        bool is_obj = p.at_keyword("obj");
        p.next();
        std::string a = p.expect_name();
        p.expect(detail::Token::Kind::colon);
        std::string b = p.expect_name();
        (is_obj ? f.obj_map : f.arr_map).push_back({a, b});
      }
      functor_names.push_back(f.name);
      doc.functors.push_back(std::move(f));
    } else if (p.at_keyword("nat")) {
      p.next();
      NatDecl n;
      n.name = p.expect_name();
      p.expect(detail::Token::Kind::colon);
      detail::Token at = p.peek();
      n.source = p.expect_name();
      p.expect(detail::Token::Kind::darrow);
      n.target = p.expect_name();
      for (const std::string& fn : {n.source, n.target})
        if (std::find(functor_names.begin(), functor_names.end(), fn) == functor_names.end())
          throw ParseError("undeclared functor '" + fn + "'", at.line, at.col);
      while (p.at_keyword("at")) {
        p.next();
        std::string o = p.expect_name();
        p.expect(detail::Token::Kind::colon);
        std::string a = p.expect_name();
        n.at.push_back({o, a});
      }
      doc.nats.push_back(std::move(n));
    } else {
      p.fail("'category', 'functor', 'diagram' or 'nat'");
    }
  }
  return doc;
}

// Transcribe a full table into a FinCategory. The equivalence is the
// reflexive-symmetric-transitive closure of the declared ~ pairs; the
// category laws must hold or elaboration fails with the report.
inline FinCategory elaborate_table(const Presentation& p) {
  if (p.mode != Presentation::Mode::table)
    throw StructuralError("elaborate_table: presentation is not in table mode");
  FinCategory C;
  std::map<std::string, int> oix, aix;
  for (const std::string& o : p.objects) {
    oix[o] = C.num_objects();
    C.objects.push_back(o);
  }
  for (const ArrowDecl& a : p.arrows) {
    aix[a.name] = C.num_arrows();
    C.arrows.push_back({oix.at(a.src), oix.at(a.dst), a.name});
  }
  // union-find closure of the declared pairs
  std::vector<int> parent(C.num_arrows());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : p.equivs) {
    ArrIx f = aix.at(a), g = aix.at(b);
    if (!C.parallel(f, g)) {
      LawReport r;
      r.add("structure/class-typing", {f, g}, "declared equivalence between non-parallel arrows");
      throw ElaborationError("elaborate_table: '" + a + " ~ " + b + "' is ill-typed", r);
    }
    parent[find(f)] = find(g);
  }
  std::map<int, int> dense;
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    auto [it, fresh] = dense.emplace(find(f), static_cast<int>(dense.size()));
    (void)fresh;
    C.eq_class.push_back(it->second);
  }
  C.identities.assign(C.num_objects(), -1);
  for (const auto& [o, a] : p.ids) C.identities[oix.at(o)] = aix.at(a);
  for (const ComposeDecl& e : p.compose) C.comp[{aix.at(e.g), aix.at(e.f)}] = aix.at(e.result);
  LawReport r = check_category_laws(C);
  if (!r.passed) throw ElaborationError("elaborate_table: '" + p.name + "' fails the laws", r);
  return C;
}

namespace detail {

// typed generator word, letters outermost-first; empty = identity at src
struct GenWord {
  ObjIx src = 0, dst = 0;
  std::vector<int> letters;

  bool operator==(const GenWord&) const = default;
  bool operator<(const GenWord& o) const {  // length-lex, then source
    if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
    if (letters != o.letters) return letters < o.letters;
    return src < o.src;
  }
};

}  // namespace detail

// Quotient the typed generator words of length <= max_word_length by the
// congruence the relations generate. Succeeds only when every class has
// a representative short enough that one more generator stays within the
// bound and the resulting table passes the category laws; otherwise it
// fails loudly. Representatives are the length-lex least words.
inline FinCategory saturate(const Presentation& p, const SaturationConfig& cfg = {}) {
  if (p.mode != Presentation::Mode::presented)
    throw StructuralError("saturate: presentation is not in presented mode");
  if (cfg.max_arrows <= 0 || cfg.max_word_length <= 0)
    throw StructuralError("saturate: bounds must be positive");
  const int L = cfg.max_word_length;
  std::map<std::string, int> oix, gix;
  for (const std::string& o : p.objects) oix[o] = static_cast<int>(oix.size());
  std::vector<ObjIx> gsrc, gdst;
  for (const ArrowDecl& a : p.arrows) {
    gix[a.name] = static_cast<int>(gix.size());
    gsrc.push_back(oix.at(a.src));
    gdst.push_back(oix.at(a.dst));
  }
  const int no = static_cast<int>(p.objects.size());

  // relation sides as generator words; object letters elaborate to
  // nothing (identities are strict in the free category)
  auto elab_word = [&](const std::vector<std::string>& w) {
    detail::GenWord g;
    bool typed = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (oix.count(*it)) {
        if (!typed) {
          g.src = g.dst = oix.at(*it);
          typed = true;
        }
        continue;
      }
      int gi = gix.at(*it);
      if (!typed) g.src = gsrc[gi];
      typed = true;
      g.dst = gdst[gi];
      g.letters.insert(g.letters.begin(), gi);
    }
    return g;
  };
  std::vector<std::pair<detail::GenWord, detail::GenWord>> rels;
  for (const RelationDecl& r : p.relations) {
    auto l = elab_word(r.lhs), rr = elab_word(r.rhs);
    if (static_cast<int>(l.letters.size()) > L || static_cast<int>(rr.letters.size()) > L)
      throw SaturationError("saturation exceeded: a relation word is longer than the bound");
    rels.push_back({l, rr});
  }

  // enumerate all typed words of length <= L, by length
  const std::size_t word_budget = 200000;
  std::vector<detail::GenWord> words;
  std::map<detail::GenWord, int> windex;
  auto add_word = [&](const detail::GenWord& w) {
    if (windex.emplace(w, static_cast<int>(words.size())).second) words.push_back(w);
  };
  for (ObjIx o = 0; o < no; ++o) add_word({o, o, {}});
  std::size_t lo = 0;
  for (int len = 1; len <= L; ++len) {
    std::size_t hi = words.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int g = 0; g < static_cast<int>(gsrc.size()); ++g) {
        if (gsrc[g] != words[i].dst) continue;
        detail::GenWord w = words[i];
        w.dst = gdst[g];
        w.letters.insert(w.letters.begin(), g);
        add_word(w);
        if (words.size() > word_budget)
          throw SaturationError("saturation exceeded: word budget overflowed");
      }
    lo = hi;
  }

  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // fixpoint: union every word with each one-step rewrite (both
  // orientations of each relation, any position) staying within bounds
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const detail::GenWord& w = words[i];
      for (const auto& [l0, r0] : rels)
        for (int orient = 0; orient < 2; ++orient) {
          const detail::GenWord& l = orient ? r0 : l0;
          const detail::GenWord& r = orient ? l0 : r0;
          if (l.letters.empty() && r.letters.empty()) continue;
          if (l.letters.empty()) continue;  // growth covered by the other orientation
          if (w.letters.size() < l.letters.size()) continue;
          if (w.letters.size() - l.letters.size() + r.letters.size() >
              static_cast<std::size_t>(L))
            continue;
          for (std::size_t pos = 0; pos + l.letters.size() <= w.letters.size(); ++pos) {
            if (!std::equal(l.letters.begin(), l.letters.end(), w.letters.begin() + pos)) continue;
            detail::GenWord w2 = w;
            w2.letters.erase(w2.letters.begin() + pos,
                             w2.letters.begin() + pos + l.letters.size());
            w2.letters.insert(w2.letters.begin() + pos, r.letters.begin(), r.letters.end());
            int a = find(static_cast<int>(i)), b = find(windex.at(w2));
            if (a != b) {
              parent[a] = b;
              changed = true;
            }
          }
        }
    }
  }

  // classes, represented by their length-lex least member
  std::map<int, detail::GenWord> rep;
  for (std::size_t i = 0; i < words.size(); ++i) {
    int c = find(static_cast<int>(i));
    auto it = rep.find(c);
    if (it == rep.end() || words[i] < it->second) rep[c] = words[i];
  }
  std::vector<detail::GenWord> reps;
  for (const auto& [c, w] : rep) reps.push_back(w);
  std::sort(reps.begin(), reps.end());
  if (static_cast<int>(reps.size()) > cfg.max_arrows)
    throw SaturationError("saturation exceeded: more than max_arrows classes");
  for (const detail::GenWord& w : reps)
    if (static_cast<int>(w.letters.size()) == L)
      for (std::size_t g = 0; g < gsrc.size(); ++g)
        if (gsrc[g] == w.dst || gdst[g] == w.src)
          throw SaturationError(
              "saturation exceeded: a class representative at the word bound is still "
              "extendable");

  auto class_of = [&](const detail::GenWord& w) {
    const detail::GenWord& r = rep.at(find(windex.at(w)));
    return static_cast<int>(std::find(reps.begin(), reps.end(), r) - reps.begin());
  };
  FinCategory C;
  for (const std::string& o : p.objects) C.objects.push_back(o);
  for (const detail::GenWord& w : reps) {
    std::string label;
    if (w.letters.empty()) {
      label = "id_" + p.objects[w.src];
    } else {
      for (int g : w.letters) label += (label.empty() ? "" : ".") + p.arrows[g].name;
    }
    C.arrows.push_back({w.src, w.dst, label});
    C.eq_class.push_back(static_cast<int>(C.eq_class.size()));
  }
  C.identities.assign(no, -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i].letters.empty()) C.identities[reps[i].src] = static_cast<int>(i);
  // composition by repeated generator action on representatives
  for (std::size_t c2 = 0; c2 < reps.size(); ++c2)
    for (std::size_t c1 = 0; c1 < reps.size(); ++c1) {
      if (reps[c1].dst != reps[c2].src) continue;
      detail::GenWord acc = reps[c1];
      for (auto it = reps[c2].letters.rbegin(); it != reps[c2].letters.rend(); ++it) {
        detail::GenWord w = acc;
        w.dst = gdst[*it];
        w.letters.insert(w.letters.begin(), *it);
        acc = rep.at(find(windex.at(w)));
      }
      C.comp[{static_cast<int>(c2), static_cast<int>(c1)}] = class_of(acc);
    }
  LawReport r = check_category_laws(C);
  if (!r.passed)
    throw SaturationError(
        "saturation exceeded: classes are inconsistent within the bound\n" + r.summary());
  return C;
}

inline FinCategory elaborate_category(const Presentation& p, const SaturationConfig& cfg = {}) {
  return p.mode == Presentation::Mode::table ? elaborate_table(p) : saturate(p, cfg);
}

inline std::string print(const Presentation& p) {
  std::ostringstream os;
  bool table = p.mode == Presentation::Mode::table;
  os << "category " << p.name << (table ? " table" : " presented") << "\n";
  os << "  objects:";
  for (const std::string& o : p.objects) os << " " << o;
  os << "\n  " << (table ? "arrows" : "generators") << ":\n";
  for (const ArrowDecl& a : p.arrows)
    os << "    " << a.name << " : " << a.src << " -> " << a.dst << "\n";
  if (table) {
    for (const auto& [o, a] : p.ids) os << "  id " << o << ": " << a << "\n";
    os << "  compose:\n";
    for (const ComposeDecl& e : p.compose)
      os << "    " << e.g << "." << e.f << " = " << e.result << "\n";
    if (!p.equivs.empty()) {
      os << "  equiv:\n";
      for (const auto& [a, b] : p.equivs) os << "    " << a << " ~ " << b << "\n";
    }
  } else {
    os << "  relations:\n";
    for (const RelationDecl& r : p.relations) {
      os << "    ";
      for (std::size_t i = 0; i < r.lhs.size(); ++i) os << (i ? "." : "") << r.lhs[i];
      os << " = ";
      for (std::size_t i = 0; i < r.rhs.size(); ++i) os << (i ? "." : "") << r.rhs[i];
      os << "\n";
    }
  }
  return os.str();
}

inline std::string print(const FunctorDecl& f) {
  std::ostringstream os;
  os << (f.diagram ? "diagram " : "functor ") << f.name << " : " << f.source << " -> " << f.target
     << "\n";
  for (const auto& [a, b] : f.obj_map) os << "  obj " << a << " : " << b << "\n";
  for (const auto& [a, b] : f.arr_map) os << "  arr " << a << " : " << b << "\n";
  return os.str();
}

inline std::string print(const NatDecl& n) {
  std::ostringstream os;
  os << "nat " << n.name << " : " << n.source << " => " << n.target << "\n";
  for (const auto& [o, a] : n.at) os << "  at " << o << " : " << a << "\n";
  return os.str();
}

inline std::string print(const Document& d) {
  std::string out;
  for (const Presentation& c : d.categories) out += print(c) + "\n";
  for (const FunctorDecl& f : d.functors) out += print(f) + "\n";
  for (const NatDecl& n : d.nats) out += print(n) + "\n";
  return out;
}

// Express a FinCategory as a table presentation. Labels are reused when
// they are valid distinct names; otherwise stable fallback names are
// generated.
inline Presentation presentation_of(const FinCategory& C, const std::string& name) {
  auto valid = [](const std::string& s) {
    if (s == "*") return true;
    if (s.empty() || !detail::name_start(s[0])) return false;
    for (char c : s)
      if (!detail::name_char(c)) return false;
    const auto& ws = detail::reserved_words();
    return std::find(ws.begin(), ws.end(), s) == ws.end();
  };
  Presentation p;
  p.name = name;
  p.mode = Presentation::Mode::table;
  std::set<std::string> used;
  auto pick = [&](const std::string& suggested, const std::string& stem, int i) {
    std::string n = suggested;
    if (!valid(n) || used.count(n)) n = stem + std::to_string(i);
    while (used.count(n)) n += "'";
    used.insert(n);
    return n;
  };
  for (ObjIx x = 0; x < C.num_objects(); ++x) p.objects.push_back(pick(C.objects[x], "o", x));
  std::vector<std::string> anames;
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    anames.push_back(pick(C.arrows[f].label, "a", f));
    p.arrows.push_back({anames.back(), p.objects[C.src(f)], p.objects[C.dst(f)]});
  }
  for (ObjIx x = 0; x < C.num_objects(); ++x) p.ids.push_back({p.objects[x], anames[C.id(x)]});
  for (const auto& [gf, v] : C.comp)
    p.compose.push_back({anames[gf.first], anames[gf.second], anames[v]});
  // minimal spanning equivalences: link each arrow to the least member
  // of its class
  std::map<int, ArrIx> least;
  for (ArrIx f = 0; f < C.num_arrows(); ++f) {
    auto [it, fresh] = least.emplace(C.eq_class[f], f);
    if (!fresh) p.equivs.push_back({anames[it->second], anames[f]});
  }
  return p;
}

// A whole document resolved to engine values. Functor and natural
// transformation declarations refer to categories/functors by name and
// to their objects/arrows by label.
struct ElaboratedDoc {
  std::vector<std::pair<std::string, FinCategory>> categories;
  std::vector<std::pair<std::string, FinFunctor>> functors;
  std::vector<std::pair<std::string, NatTrans>> nats;

  const FinCategory& category(const std::string& name) const {
    for (const auto& [n, c] : categories)
      if (n == name) return c;
    throw StructuralError("unknown category '" + name + "'");
  }
  const FinFunctor& functor_named(const std::string& name) const {
    for (const auto& [n, f] : functors)
      if (n == name) return f;
    throw StructuralError("unknown functor '" + name + "'");
  }
};

namespace detail {

inline int label_ix(const std::vector<std::string>& labels, const std::string& name,
                    const std::string& what) {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw StructuralError("unknown " + what + " '" + name + "'");
  return static_cast<int>(it - labels.begin());
}

}  // namespace detail

inline ElaboratedDoc elaborate_document(const Document& d, const SaturationConfig& cfg = {}) {
  ElaboratedDoc out;
  for (const Presentation& p : d.categories)
    out.categories.push_back({p.name, elaborate_category(p, cfg)});
  for (const FunctorDecl& fd : d.functors) {
    FinFunctor F;
    F.source = out.category(fd.source);
    F.target = out.category(fd.target);
    std::vector<std::string> src_arrs, dst_arrs;
    for (const Arrow& a : F.source.arrows) src_arrs.push_back(a.label);
    for (const Arrow& a : F.target.arrows) dst_arrs.push_back(a.label);
    F.obj_map.assign(F.source.num_objects(), -1);
    F.arr_map.assign(F.source.num_arrows(), -1);
    for (const auto& [a, b] : fd.obj_map)
      F.obj_map[detail::label_ix(F.source.objects, a, "object")] =
          detail::label_ix(F.target.objects, b, "object");
    for (const auto& [a, b] : fd.arr_map)
      F.arr_map[detail::label_ix(src_arrs, a, "arrow")] = detail::label_ix(dst_arrs, b, "arrow");
    for (ObjIx x = 0; x < F.source.num_objects(); ++x)
      if (F.obj_map[x] < 0)
        throw StructuralError("functor " + fd.name + ": no image for object '" +
                              F.source.objects[x] + "'");
    for (ArrIx f = 0; f < F.source.num_arrows(); ++f)
      if (F.arr_map[f] < 0)
        throw StructuralError("functor " + fd.name + ": no image for arrow '" + src_arrs[f] + "'");
    out.functors.push_back({fd.name, std::move(F)});
  }
  for (const NatDecl& nd : d.nats) {
    NatTrans t;
    t.F = out.functor_named(nd.source);
    t.G = out.functor_named(nd.target);
    std::vector<std::string> dst_arrs;
    for (const Arrow& a : t.F.target.arrows) dst_arrs.push_back(a.label);
    t.components.assign(t.F.source.num_objects(), -1);
    for (const auto& [o, a] : nd.at)
      t.components[detail::label_ix(t.F.source.objects, o, "object")] =
          detail::label_ix(dst_arrs, a, "arrow");
    for (ObjIx x = 0; x < t.F.source.num_objects(); ++x)
      if (t.components[x] < 0)
        throw StructuralError("nat " + nd.name + ": no component at object '" +
                              t.F.source.objects[x] + "'");
    out.nats.push_back({nd.name, std::move(t)});
  }
  return out;
}

}  // namespace fincat
