#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lpwr/cli.hpp"

using namespace lpwr;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::pair<int, std::string> run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpwr");
  std::ostringstream out;
  int code = run_cli(args, out);
  return {code, out.str()};
}

} // namespace

TEST_CASE("graph and hsat subcommands") {
  TempFile loop("loop.graph", "vertex v\nedge c v v\n");
  TempFile toeplitz("toeplitz.graph",
                    "vertex u\nvertex v\nedge c u u\nedge f u v\n");

  auto [c0, out0] = run({"graph", "check", loop.path});
  CHECK(c0 == 0);
  CHECK(out0 == "graph OK: 1 vertices, 1 edges\nsinks: (none)\n");

  auto [c1, out1] = run({"hsat", "enumerate", toeplitz.path});
  CHECK(c1 == 0);
  CHECK(out1 == "{}\n{v}\n{u,v}\n");

  auto [c2, out2] = run({"hsat", "check", toeplitz.path, "--set", "v"});
  CHECK(c2 == 0);
  CHECK(out2 == "hereditary: yes\nsaturated: yes\n");

  auto [c3, out3] = run({"hsat", "closure", toeplitz.path, "--set", "u"});
  CHECK(c3 == 0);
  CHECK(out3 == "{u,v}\n");
}

TEST_CASE("algebra subcommands") {
  TempFile loop("loop2.graph", "vertex v\nedge c v v\n");
  TempFile ext("loop2.ext", "idem 1\nbridge e v 1\n");

  auto [c0, out0] = run({"lpa", "nf", loop.path, "--expr", "c.c^*"});
  CHECK(c0 == 0);
  CHECK(out0 == "v\n");

  auto [c1, out1] = run({"cohn", "nf", loop.path, "--expr", "c.c^*"});
  CHECK(c1 == 0);
  CHECK(out1 == "c.c^*\n"); // no CK relation in the Cohn algebra

  auto [c2, out2] = run({"cohn", "mul", loop.path, "--lhs", "v - c.c^*", "--rhs", "c"});
  CHECK(c2 == 0);
  CHECK(out2 == "0\n");

  auto [c3, out3] = run({"lpa", "graded", loop.path, "--expr", "c + v", "--deg", "1"});
  CHECK(c3 == 0);
  CHECK(out3 == "c\n");

  auto [c4, out4] =
      run({"wreath", "nf", loop.path, "--ext", ext.path, "--expr", "c.c^*"});
  CHECK(c4 == 0);
  CHECK(out4 == "v + [-1 @ e, e]\n");

  auto [c5, out5] = run({"wreath", "mul", loop.path, "--ext", ext.path, "--lhs", "c",
                         "--rhs", "[1 @ e, e]"});
  CHECK(c5 == 0);
  CHECK(out5 == "[1 @ c.e, e]\n");

  auto [c6, out6] = run({"lpa", "nf", loop.path, "--field", "gf5", "--expr",
                         "3*c + 3*c"});
  CHECK(c6 == 0);
  CHECK(out6 == "c\n");
}

TEST_CASE("probe subcommands and exit codes") {
  TempFile toeplitz("t2.graph", "vertex u\nvertex v\nedge c u u\nedge f u v\n");
  TempFile twocyc("cyc.graph", "vertex u\nvertex v\nedge a u v\nedge b v u\n");

  auto [c0, out0] = run({"prop2", "verify", toeplitz.path, "--set", "v", "--maxlen",
                         "3", "--samples", "20", "--seed", "7"});
  CHECK(c0 == 0);
  CHECK(out0.find("PASS") != std::string::npos);

  auto [c1, out1] = run({"balloon", "check", twocyc.path, "--vertex", "u",
                         "--samples", "5"});
  CHECK(c1 == 1); // property failure
  CHECK(out1.find("FAIL") != std::string::npos);

  auto [c2, out2] = run({"balloon", "check", toeplitz.path, "--vertex", "u",
                         "--samples", "10"});
  CHECK(c2 == 0);

  // usage errors exit with 2
  auto [c3, out3] = run({"nonsense"});
  CHECK(c3 == 2);
  auto [c4, out4] = run({"graph", "check", "no_such_file.graph"});
  CHECK(c4 == 2);
  CHECK(out4.find("cannot open") != std::string::npos);
  auto [c5, out5] = run({"lemma", "probe", "bogus"});
  CHECK(c5 == 2);
  auto [c6, out6] = run({"lpa", "nf", toeplitz.path, "--expr", "c.."});
  CHECK(c6 == 2);
  CHECK(out6.find("error") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  TempFile toeplitz("t3.graph", "vertex u\nvertex v\nedge c u u\nedge f u v\n");
  std::vector<std::string> argsets[] = {
      {"hsat", "enumerate", toeplitz.path},
      {"lpa", "nf", toeplitz.path, "--expr", "c.c^* + f.f^*"},
      {"prop2", "verify", toeplitz.path, "--set", "v", "--samples", "15",
       "--seed", "3"},
      {"lemma", "probe", "ck", "--maxlen", "2"},
  };
  for (auto& args : argsets) {
    auto [c1, out1] = run(args);
    auto [c2, out2] = run(args);
    CHECK(c1 == c2);
    CHECK(out1 == out2);
  }
}
