#include <cctype>
#include <set>
#include <sstream>

#include "svar/fda.hpp"

namespace svar {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& expected)
    : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(expected) {}

namespace {

enum class Tok { Word, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t col = 0;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'; }

class Line {
 public:
  Line(std::string_view s, std::size_t lineno) : lineno_(lineno) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Token t;
      t.col = i + 1;
      if (word_char(c)) {
        std::size_t j = i;
        while (j < s.size() && word_char(s[j])) ++j;
        t.text = std::string(s.substr(i, j - i));
        bool digits = true;
        for (char d : t.text) digits = digits && std::isdigit(static_cast<unsigned char>(d));
        t.kind = digits ? Tok::Int : Tok::Word;
        i = j;
      } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
        t = {Tok::Punct, "->", i + 1};
        i += 2;
      } else if (std::string_view("=:*+-[],").find(c) != std::string_view::npos) {
        t = {Tok::Punct, std::string(1, c), i + 1};
        ++i;
      } else {
        throw ParseError(lineno_, i + 1, "a name, number or one of = : -> * + - [ ] ,");
      }
      toks_.push_back(std::move(t));
    }
    end_col_ = std::min(s.size(), s.find('#')) + 1;
  }

  bool empty() const { return toks_.empty(); }
  const Token& peek() const {
    static const Token end;
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  std::size_t col() const { return pos_ < toks_.size() ? toks_[pos_].col : end_col_; }
  bool at_end() const { return pos_ >= toks_.size(); }
  bool accept(const std::string& punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) fail("'" + punct + "'");
  }
  std::string word(const std::string& what) {
    if (peek().kind != Tok::Word && peek().kind != Tok::Int) fail(what);
    return toks_[pos_++].text;
  }
  long long integer(bool allow_sign = true) {
    bool neg = allow_sign && accept("-");
    if (peek().kind != Tok::Int) fail("an integer");
    const std::string& s = toks_[pos_].text;
    if (s.size() > 18) fail("an integer of at most 18 digits");
    ++pos_;
    long long v = std::stoll(s);
    return neg ? -v : v;
  }
  void finish() {
    if (!at_end()) fail("end of line");
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(lineno_, col(), expected); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0, lineno_, end_col_ = 1;
};

IntMatrix parse_matrix(Line& L) {
  IntMatrix M;
  L.expect("[");
  if (L.accept("]")) return M;
  do {
    L.expect("[");
    std::vector<long long> row;
    if (!L.accept("]")) {
      do row.push_back(L.integer());
      while (L.accept(","));
      L.expect("]");
    }
    M.push_back(std::move(row));
  } while (L.accept(","));
  L.expect("]");
  return M;
}

std::vector<FdaDocument::Term> parse_relation(Line& L) {
  std::vector<FdaDocument::Term> terms;
  bool first = true;
  while (!L.at_end()) {
    long long sign = 1;
    if (L.accept("-"))
      sign = -1;
    else if (!L.accept("+") && !first)
      L.fail("'+' or '-'");
    FdaDocument::Term t;
    t.coeff = sign;
    if (L.peek().kind == Tok::Int) {
      t.coeff = sign * L.integer(false);
      L.expect("*");
    }
    if (L.peek().kind != Tok::Word) L.fail("an arrow name");
    t.word.push_back(L.word("an arrow name"));
    while (L.accept("*")) {
      if (L.peek().kind != Tok::Word) L.fail("an arrow name");
      t.word.push_back(L.word("an arrow name"));
    }
    terms.push_back(std::move(t));
    first = false;
  }
  if (terms.empty()) L.fail("a relation");
  return terms;
}

enum class Section { None, Quiver, Relations, Module, Complex };

}  // namespace

FdaDocument parse_fda(std::string_view text) {
  FdaDocument doc;
  Section sec = Section::None;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = stop + 1;
    ++lineno;
    Line L(raw, lineno);
    if (L.empty()) continue;

    const Token head = L.peek();
    if (head.kind == Tok::Word && head.text == "field") {
      L.word("field");
      const std::size_t kc = L.col();
      if (L.word("'p'") != "p") throw ParseError(lineno, kc, "'p'");
      L.expect("=");
      const std::size_t pc = L.col();
      const long long p = L.integer(false);
      if (p < 2 || p > 2147483647) throw ParseError(lineno, pc, "a prime below 2^31");
      doc.p = static_cast<std::uint32_t>(p);
      L.finish();
      sec = Section::None;
      continue;
    }
    if (head.kind == Tok::Word && (head.text == "quiver" || head.text == "relations")) {
      L.word("");
      L.finish();
      sec = head.text == "quiver" ? Section::Quiver : Section::Relations;
      continue;
    }
    if (head.kind == Tok::Word && (head.text == "module" || head.text == "complex")) {
      L.word("");
      const std::string name = L.word("a name");
      L.finish();
      if (head.text == "module") {
        doc.modules.push_back({name, {}, {}});
        sec = Section::Module;
      } else {
        doc.complexes.push_back({name, {}, {}});
        sec = Section::Complex;
      }
      continue;
    }

    switch (sec) {
      case Section::None:
        L.fail("'field', 'quiver', 'relations', 'module' or 'complex'");
      case Section::Quiver: {
        const std::string kw = L.word("'vertex' or 'arrow'");
        if (kw == "vertex") {
          doc.vertices.push_back(L.word("a vertex name"));
        } else if (kw == "arrow") {
          FdaDocument::Arrow a;
          if (L.peek().kind != Tok::Word) L.fail("an arrow name starting with a letter");
          a.name = L.word("an arrow name");
          L.expect(":");
          a.source = L.word("a vertex name");
          L.expect("->");
          a.target = L.word("a vertex name");
          doc.arrows.push_back(std::move(a));
        } else {
          throw ParseError(lineno, head.col, "'vertex' or 'arrow'");
        }
        L.finish();
        break;
      }
      case Section::Relations:
        doc.relations.push_back(parse_relation(L));
        break;
      case Section::Module: {
        auto& M = doc.modules.back();
        const std::string kw = L.word("'dim' or 'map'");
        if (kw == "dim") {
          const std::string v = L.word("a vertex name");
          L.expect("=");
          M.dims[v] = static_cast<std::size_t>(L.integer(false));
        } else if (kw == "map") {
          const std::string a = L.word("an arrow name");
          L.expect("=");
          M.maps[a] = parse_matrix(L);
        } else {
          throw ParseError(lineno, head.col, "'dim' or 'map'");
        }
        L.finish();
        break;
      }
      case Section::Complex: {
        auto& C = doc.complexes.back();
        const std::string kw = L.word("'term' or 'diff'");
        if (kw == "term") {
          const int i = static_cast<int>(L.integer());
          L.expect("=");
          C.terms[i] = L.word("a module name");
        } else if (kw == "diff") {
          const int i = static_cast<int>(L.integer());
          L.expect("=");
          C.diffs[i] = parse_matrix(L);
        } else {
          throw ParseError(lineno, head.col, "'term' or 'diff'");
        }
        L.finish();
        break;
      }
    }
  }
  return doc;
}

namespace {

std::string matrix_string(const IntMatrix& M) {
  std::string s = "[";
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < M[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(M[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

std::string relation_string(const std::vector<FdaDocument::Term>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    long long c = t.coeff;
    if (c < 0) {
      s += i ? " - " : "-";
      c = -c;
    } else if (i) {
      s += " + ";
    }
    if (c != 1) s += std::to_string(c) + "*";
    for (std::size_t k = 0; k < t.word.size(); ++k) s += (k ? "*" : "") + t.word[k];
  }
  return s;
}

}  // namespace

std::string serialize_fda(const FdaDocument& doc) {
  std::ostringstream out;
  out << "field p=" << doc.p << "\n";
  out << "quiver\n";
  for (const auto& v : doc.vertices) out << "  vertex " << v << "\n";
  for (const auto& a : doc.arrows) out << "  arrow " << a.name << " : " << a.source << " -> " << a.target << "\n";
  if (!doc.relations.empty()) {
    out << "relations\n";
    for (const auto& r : doc.relations) out << "  " << relation_string(r) << "\n";
  }
  for (const auto& M : doc.modules) {
    out << "module " << M.name << "\n";
    for (const auto& [v, d] : M.dims) out << "  dim " << v << " = " << d << "\n";
    for (const auto& [a, m] : M.maps) out << "  map " << a << " = " << matrix_string(m) << "\n";
  }
  for (const auto& C : doc.complexes) {
    out << "complex " << C.name << "\n";
    for (const auto& [i, t] : C.terms) out << "  term " << i << " = " << t << "\n";
    for (const auto& [i, m] : C.diffs) out << "  diff " << i << " = " << matrix_string(m) << "\n";
  }
  return out.str();
}

// --- instantiation ------------------------------------------------------------------

namespace {

Matrix to_matrix(const PrimeField& F, const IntMatrix& M, std::size_t rows, std::size_t cols, const std::string& what) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (M.size() != rows && !(rows == 0 && M.empty())) throw UsageError(what + " must be " + shape + " (has " +
                                                                       std::to_string(M.size()) + " rows)");
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (M[r].size() != cols)
      throw UsageError(what + " must be " + shape + " (row " + std::to_string(r + 1) + " has " +
                       std::to_string(M[r].size()) + " entries)");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = F.from_int(M[r][c]);
  }
  return out;
}

}  // namespace

FdaSession instantiate(const FdaDocument& doc) {
  if (doc.p == 0) throw UsageError("missing 'field p=<prime>' line");
  QuiverPresentation Q;
  Q.p = doc.p;
  std::set<std::string> seen;
  for (const auto& v : doc.vertices) {
    if (!seen.insert(v).second) throw UsageError("vertex '" + v + "' declared twice");
    Q.vertices.push_back(v);
  }
  seen.clear();
  for (const auto& a : doc.arrows) {
    if (!seen.insert(a.name).second) throw UsageError("arrow '" + a.name + "' declared twice");
    const int s = Q.vertex_index(a.source), t = Q.vertex_index(a.target);
    if (s < 0) throw UsageError("arrow '" + a.name + "': unknown vertex '" + a.source + "'");
    if (t < 0) throw UsageError("arrow '" + a.name + "': unknown vertex '" + a.target + "'");
    Q.arrows.push_back({a.name, s, t});
  }
  for (std::size_t r = 0; r < doc.relations.size(); ++r) {
    std::vector<PathTerm> rel;
    for (const auto& t : doc.relations[r]) {
      PathTerm pt;
      pt.coeff = t.coeff;
      for (const auto& w : t.word) {
        const int a = Q.arrow_index(w);
        if (a < 0) throw UsageError("relation " + std::to_string(r + 1) + ": unknown arrow '" + w + "'");
        pt.arrows.push_back(a);
      }
      rel.push_back(std::move(pt));
    }
    Q.relations.push_back(std::move(rel));
  }

  FdaSession S;
  S.algebra = build_algebra(Q);
  const auto& A = S.algebra;
  const auto& F = A->field();

  for (const auto& M : doc.modules) {
    if (S.modules.count(M.name)) throw UsageError("module '" + M.name + "' declared twice");
    std::vector<std::size_t> dims(Q.vertices.size(), 0);
    for (const auto& [v, d] : M.dims) {
      const int i = Q.vertex_index(v);
      if (i < 0) throw UsageError("module '" + M.name + "': unknown vertex '" + v + "'");
      dims[static_cast<std::size_t>(i)] = d;
    }
    std::vector<Matrix> blocks;
    for (const auto& a : Q.arrows) blocks.emplace_back(dims[a.target], dims[a.source]);
    for (const auto& [name, m] : M.maps) {
      const int a = Q.arrow_index(name);
      if (a < 0) throw UsageError("module '" + M.name + "': unknown arrow '" + name + "'");
      const auto& arr = Q.arrows[static_cast<std::size_t>(a)];
      blocks[static_cast<std::size_t>(a)] = to_matrix(F, m, dims[arr.target], dims[arr.source],
                                                      "module '" + M.name + "': map '" + name + "'");
    }
    auto rep = Representation::from_blocks(A, dims, blocks);
    if (!rep.satisfies_relations()) throw UsageError("module '" + M.name + "' does not satisfy the relations");
    S.modules[M.name] = std::make_shared<const Representation>(std::move(rep));
  }

  for (const auto& C : doc.complexes) {
    if (S.complexes.count(C.name)) throw UsageError("complex '" + C.name + "' declared twice");
    const std::string who = "complex '" + C.name + "'";
    if (C.terms.empty()) {
      if (!C.diffs.empty()) throw UsageError(who + ": differential without terms");
      S.complexes.emplace(C.name, BoundedComplex::zero(A));
      continue;
    }
    const int lo = C.terms.begin()->first, hi = C.terms.rbegin()->first;
    std::vector<Representation> terms;
    for (int i = lo; i <= hi; ++i) {
      auto it = C.terms.find(i);
      if (it == C.terms.end()) {
        terms.push_back(zero_module(A));
        continue;
      }
      auto m = S.modules.find(it->second);
      if (m == S.modules.end()) throw UsageError(who + ": unknown module '" + it->second + "'");
      terms.push_back(*m->second);
    }
    std::vector<Matrix> diffs;
    for (int i = lo; i < hi; ++i) {
      const auto& src = terms[static_cast<std::size_t>(i - lo)];
      const auto& dst = terms[static_cast<std::size_t>(i - lo + 1)];
      auto it = C.diffs.find(i);
      diffs.push_back(it == C.diffs.end()
                          ? Matrix(dst.dim(), src.dim())
                          : to_matrix(F, it->second, dst.dim(), src.dim(), who + ": diff " + std::to_string(i)));
    }
    for (const auto& [i, m] : C.diffs)
      if (i < lo || i >= hi) throw UsageError(who + ": diff " + std::to_string(i) + " is outside the terms");
    try {
      S.complexes.emplace(C.name, BoundedComplex(A, lo, std::move(terms), std::move(diffs)));
    } catch (const NotAChainMap& e) {
      throw UsageError(who + ": " + e.what());
    } catch (const UsageError& e) {
      throw UsageError(who + ": " + e.what());
    }
  }
  return S;
}

}  // namespace svar
