#include <fstream>
#include <sstream>

#include "doctest.h"
#include "svar/fda.hpp"

using namespace svar;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SVAR_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError(0, 0, "");
}

std::string usage_message(const std::string& text) {
  try {
    instantiate(parse_fda(text));
  } catch (const UsageError& e) {
    return e.what();
  } catch (const MalformedPresentation& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("bundled fixtures parse") {
  for (const char* f : {"kz2.fda", "kz3.fda", "v4.fda", "rsz2.fda"}) {
    CAPTURE(f);
    auto S = instantiate(parse_fda(slurp(f)));
    CHECK(S.modules.count("k") == 1);
  }
  auto v4 = instantiate(parse_fda(slurp("v4.fda")));
  CHECK(v4.algebra->dim() == 4);
  CHECK(v4.modules.size() >= 2);
  CHECK(v4.modules.at("L")->dim() == 2);
  const auto& K = v4.complexes.at("Kxy");
  CHECK(K.lo() == -2);
  CHECK(K.hi() == 0);

  auto kz2 = instantiate(parse_fda(slurp("kz2.fda")));
  CHECK(kz2.algebra->dim() == 2);
  CHECK(homology_dims(kz2.complexes.at("C_proj"), 0, 1) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("round trip") {
  for (const char* f : {"kz2.fda", "kz3.fda", "v4.fda", "rsz2.fda"}) {
    CAPTURE(f);
    auto doc = parse_fda(slurp(f));
    auto text = serialize_fda(doc);
    CHECK(parse_fda(text) == doc);
    CHECK(serialize_fda(parse_fda(text)) == text);
  }
  auto doc = parse_fda("field p=5\nquiver\n vertex a\n vertex b\n arrow f : a -> b\n arrow g : b -> a\nrelations\n"
                       " 2*f*g - 3*f*g + f*g\n -g*f\n");
  CHECK(doc.relations[0].size() == 3);
  CHECK(doc.relations[0][1].coeff == -3);
  CHECK(doc.relations[1][0].coeff == -1);
  CHECK(parse_fda(serialize_fda(doc)) == doc);
}

TEST_CASE("small documents") {
  auto S = instantiate(parse_fda("field p=3\nquiver\n  vertex v\n"));
  CHECK(S.algebra->dim() == 1);
  // comments and blank lines are ignored
  auto T = instantiate(parse_fda("# header\n\nfield p=2 # two\nquiver\n vertex 1\n arrow x : 1 -> 1\nrelations\n"
                                 " x*x\nmodule M\n dim 1 = 2\n map x = [[0,0],[1,0]]\n"));
  CHECK(T.modules.at("M")->dim() == 2);
}

TEST_CASE("positioned syntax errors") {
  auto e = parse_error([] { parse_fda("field p=2\nquiver\n  arrow x 1 -> 1\n"); });
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  CHECK(e.expected() == "':'");

  e = parse_error([] { parse_fda("field q=2\n"); });
  CHECK(e.line() == 1);
  CHECK(e.column() == 7);

  e = parse_error([] { parse_fda("field p=2\nquiver\n vertex 1\nmodule M\n map x = [[0,1],[1 0]]\n"); });
  CHECK(e.line() == 5);
  CHECK(e.column() == 20);

  e = parse_error([] { parse_fda("vertex 1\n"); });
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);

  e = parse_error([] { parse_fda("field p=2\nrelations\n x*x y\n"); });
  CHECK(e.column() == 6);
  CHECK(std::string(e.what()).find("line 3, column 6") != std::string::npos);

  e = parse_error([] { parse_fda("field p=2\nquiver\n vertex 1 $\n"); });
  CHECK(e.column() == 11);
}

TEST_CASE("semantic errors name the culprit") {
  const std::string head = "field p=2\nquiver\n vertex 1\n vertex 2\n arrow a : 1 -> 2\n arrow b : 2 -> 1\n";
  const std::string rels = "relations\n a*b\n b*a\n";
  CHECK(usage_message(head + rels + "module M\n dim 1 = 1\n dim 2 = 1\n map a = [[1,0]]\n").find("map 'a'") !=
        std::string::npos);
  CHECK(usage_message(head + "relations\n a*b + b*a\n").find("relation 1") != std::string::npos);
  CHECK(usage_message(head + "relations\n a*c\n").find("'c'") != std::string::npos);
  CHECK(usage_message(head + rels + "module M\n dim 3 = 1\n").find("'3'") != std::string::npos);
  CHECK(usage_message("quiver\n vertex 1\n").find("field") != std::string::npos);
  CHECK(usage_message("field p=4\nquiver\n vertex 1\n").find("prime") != std::string::npos);
  // a relation the module violates
  CHECK(usage_message("field p=2\nquiver\n vertex 1\n arrow x : 1 -> 1\nrelations\n x*x\nmodule M\n dim 1 = 2\n"
                      " map x = [[1,0],[0,1]]\n")
            .find("module 'M'") != std::string::npos);
  // d∘d != 0
  CHECK(usage_message("field p=2\nquiver\n vertex 1\nmodule k\n dim 1 = 1\ncomplex C\n term 0 = k\n term 1 = k\n"
                      " term 2 = k\n diff 0 = [[1]]\n diff 1 = [[1]]\n")
            .find("complex 'C'") != std::string::npos);
  CHECK(usage_message("field p=2\nquiver\n vertex 1\ncomplex C\n term 0 = nope\n").find("'nope'") !=
        std::string::npos);
}
