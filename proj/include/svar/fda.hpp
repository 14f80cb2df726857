#pragma once
// The .fda text format: an algebra given by a quiver with relations, named
// modules and named bounded complexes.
//
//   field p=2
//   quiver
//     vertex 1
//     arrow x : 1 -> 1
//   relations
//     x*x
//   module k
//     dim 1 = 1
//     map x = [[0]]
//   complex C
//     term 0 = k
//     diff 0 = [[...]]
//
// '#' starts a comment. Relation lines are sums of terms [sign][int*]word
// where a word is arrows joined by '*', traversed left to right. Missing
// maps and differentials are zero.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "svar/complex.hpp"
#include "svar/error.hpp"

namespace svar {

/// Syntax error with a position; line and column are 1-based.
class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_, column_;
  std::string expected_;
};

using IntMatrix = std::vector<std::vector<long long>>;

struct FdaModule {
  std::string name;
  std::map<std::string, std::size_t> dims;  // by vertex name
  std::map<std::string, IntMatrix> maps;    // by arrow name
  bool operator==(const FdaModule&) const = default;
};

struct FdaComplex {
  std::string name;
  std::map<int, std::string> terms;  // degree -> module name
  std::map<int, IntMatrix> diffs;    // d^i: X^i -> X^{i+1}
  bool operator==(const FdaComplex&) const = default;
};

struct FdaDocument {
  std::uint32_t p = 0;
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name, source, target;
    bool operator==(const Arrow&) const = default;
  };
  std::vector<Arrow> arrows;
  struct Term {
    long long coeff = 1;
    std::vector<std::string> word;
    bool operator==(const Term&) const = default;
  };
  std::vector<std::vector<Term>> relations;
  std::vector<FdaModule> modules;
  std::vector<FdaComplex> complexes;

  bool operator==(const FdaDocument&) const = default;
};

FdaDocument parse_fda(std::string_view text);
std::string serialize_fda(const FdaDocument& doc);

/// The algebra, modules and complexes of a document. Semantic errors
/// (unknown names, non-parallel relations, shape mismatches, d² != 0) are
/// UsageErrors naming the offending object.
struct FdaSession {
  AlgebraPtr algebra;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, BoundedComplex> complexes;
};

FdaSession instantiate(const FdaDocument& doc);

}  // namespace svar
