#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

  struct Run {
    int         status;
    std::string out;
  };

  Run run(std::string const& args, std::string const& env = "") {
    std::string const command
        = env + " " + AGTK_CLI + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string             out;
    std::array<char, 4096>  buffer{};
    while (auto n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
      out.append(buffer.data(), n);
    }
    int const raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
  }

  using Catch::Matchers::ContainsSubstring;

}  // namespace

TEST_CASE("check") {
  auto r = run("check \"3:0,0,0,0,1,0,0,0,2\" --props cyclic_associative");
  CHECK(r.status == 0);
  CHECK(r.out == "cyclic_associative: true\n");

  r = run("check \"1:0\" --props ag");
  CHECK(r.status == 0);
  CHECK(r.out == "ag: true\n");

  r = run("check \"3:0,0,0,0,0,0,0,1,0\" --props cyclic_associative");
  CHECK(r.status == 1);
  CHECK_THAT(r.out, ContainsSubstring("false"));
  CHECK_THAT(r.out, ContainsSubstring("(2,1,2)"));

  r = run("check \"4:1,2,2,2,3,2,2,2,2,2,2,2,2,2,2,2\" "
          "--props \"cyclic_associative & !associative\"");
  CHECK(r.status == 0);

  r = run("check \"3:0,0,0,0,1,0,0,0,2\"");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, ContainsSubstring("semilattice: true"));
}

TEST_CASE("check errors") {
  auto r = run("check \"3:0,0,9,0,0,0,0,0,0\"");
  CHECK(r.status == 2);
  CHECK_THAT(r.out, ContainsSubstring("position 3"));

  r = run("check \"3:0,0,0,0,1,0,0,0,2\" --props nope");
  CHECK(r.status == 2);
  CHECK_THAT(r.out, ContainsSubstring("unknown property 'nope'"));

  r = run("check /nonexistent/file");
  CHECK(r.status == 2);

  r = run("check");
  CHECK(r.status == 2);

  r = run("frobnicate");
  CHECK(r.status == 2);
}

TEST_CASE("input from file and stdin") {
  std::string const path = "cli_input_tables.txt";
  {
    std::ofstream f(path);
    f << "# tables 1 and 4\n3:0,0,0,0,1,0,0,0,2\n3:0,0,0,0,0,0,0,1,0\n";
  }
  auto r = run("ca-test " + path);
  CHECK(r.status == 1);
  CHECK_THAT(r.out, ContainsSubstring("cyclic associative: true"));
  CHECK_THAT(r.out, ContainsSubstring("cyclic associative: false"));

  r = run("canon -", "echo 3:0,0,0,0,0,0,0,1,0 |");
  CHECK(r.status == 0);
  CHECK(r.out == "3:0,0,0,0,0,0,0,1,0\n");
}

TEST_CASE("ca-test") {
  auto r = run("ca-test \"3:0,0,0,0,0,0,0,1,0\" --render");
  CHECK(r.status == 1);
  CHECK_THAT(r.out, ContainsSubstring("first mismatch (1-based): x=2 a=3 b=3"));
  CHECK_THAT(r.out, ContainsSubstring("[2]"));

  r = run("ca-test \"4:0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,2\"");
  CHECK(r.status == 0);

  // Not left invertive: warned, still decided.
  r = run("ca-test \"2:0,1,0,0\"");
  CHECK_THAT(r.out, ContainsSubstring("warning"));

  r = run("ca-test \"3:0,0,0,0,0,0,0,1,0\" --json");
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j[0]["cyclic_associative"] == false);
  CHECK(j[0]["first_mismatch"]["x"] == 2);
}

TEST_CASE("canon") {
  auto r = run("canon \"2:1,1,1,1\"");
  CHECK(r.status == 0);
  CHECK(r.out == "2:0,0,0,0\n");
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --order 3 --count-only");
  CHECK(r.status == 0);
  CHECK(r.out == "20\n");

  r = run("enumerate --order 4 --class \"cyclic_associative & !associative\" "
          "--count-only");
  CHECK(r.out == "2\n");

  r = run("enumerate --order 2");
  CHECK(r.status == 0);
  CHECK(r.out == "2:0,0,0,0\n2:0,0,0,1\n2:0,1,1,0\n# 3 of 3 AG-groupoids of order 2\n");

  std::string const path = "cli_enumerate_out.txt";
  r = run("enumerate --order 3 --out " + path);
  CHECK(r.status == 0);
  std::ifstream in(path);
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    lines += line.front() != '#';
  }
  CHECK(lines == 20);

  r = run("enumerate --order 6 --count-only");
  CHECK(r.status == 2);
  CHECK_THAT(r.out, ContainsSubstring("--allow-large"));

  r = run("enumerate --order 5 --count-only --budget 0.000001");
  CHECK(r.status == 3);
  CHECK_THAT(r.out, ContainsSubstring("partial"));

  r = run("enumerate --order 4 --count-only --first-rows 0:1");
  CHECK(r.status == 0);

  r = run("enumerate --order 4 --count-only --jobs 3");
  CHECK(r.out == "331\n");
  r = run("enumerate --order 4 --count-only", "AGTK_JOBS=2");
  CHECK(r.out == "331\n");
  r = run("enumerate --order 4 --count-only", "AGTK_JOBS=zero");
  CHECK(r.status == 2);
}

TEST_CASE("classify") {
  auto r = run("classify --order 3 --report table2");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, ContainsSubstring("AG "));
  CHECK_THAT(r.out, ContainsSubstring("20"));
  CHECK_THAT(r.out, ContainsSubstring("PASS"));
  CHECK_THAT(r.out, !ContainsSubstring("FAIL"));

  r = run("classify --order 2 --report table2");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, ContainsSubstring("inconsistent"));

  r = run("classify --order 2 --report table2 --json");
  auto const j = nlohmann::json::parse(r.out);
  bool flagged = false;
  for (auto const& row : j["rows"]) {
    CHECK(row["status"] == "PASS");
    if (row.contains("discrepancy")) {
      flagged = true;
      CHECK(row["key"] == "CA & associative");
      CHECK(row["computed"] == 3);
      CHECK(row["published"] == 0);
    }
  }
  CHECK(flagged);

  r = run("classify --order 3 --report table9");
  CHECK(r.status == 2);

  // Deterministic byte-identical output.
  CHECK(run("classify --order 4 --report table2").out
        == run("classify --order 4 --report table2").out);
}

TEST_CASE("verify") {
  auto r = run("verify --claims C1,C2");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, ContainsSubstring("C1   verified"));
  CHECK_THAT(r.out, ContainsSubstring("C2   witness-found"));

  r = run("verify --claims C9 --json");
  CHECK(r.status == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j[0]["id"] == "C9");
  CHECK(j[0]["status"] == "witness-found");
  CHECK(j[0]["legs"][3]["evidence"]["fixture"] == "table11");
  CHECK(j[0]["legs"][3]["evidence"]["magma"]
        == "5:0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,1,0,0,0,2,3");

  r = run("verify --claims C5");
  CHECK_THAT(r.out, ContainsSubstring("external-premise"));

  r = run("verify --max-order 6");
  CHECK(r.status == 3);
  CHECK_THAT(r.out, ContainsSubstring("claim C1"));

  r = run("verify --claims C99");
  CHECK(r.status == 2);
}
