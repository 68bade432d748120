// End-to-end checks of the distcalc binary: exit codes, printed lines, and
// file output. Each case shells out to the real executable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "distcalc_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out = temp_dir() / "stdout.txt";
  fs::path err = temp_dir() / "stderr.txt";
  std::string cmd = std::string(DISTCALC_BIN) + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_spec(const std::string& name, const std::string& body) {
  fs::path p = temp_dir() / name;
  std::ofstream(p) << body;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("calc evaluates the walkthrough expressions") {
  RunResult kink = run("calc \"D^1(abs)\" --domain \"(-1,1)\"");
  CHECK(kink.code == 0);
  CHECK(contains(kink.out, "D^1[pw[(-1,0): -x; (0,1): x]] (not a continuous function)"));

  RunResult zero = run("calc \"D^1(x*abs) - 2*abs\" --domain \"(-1,1)\"");
  CHECK(zero.code == 0);
  CHECK(contains(zero.out, "0 (a continuous function)"));

  RunResult frac = run("calc \"F2(1) + F3(1)\" --model int");
  CHECK(frac.code == 0);
  CHECK(contains(frac.out, "5/6 = [f_6, 5]"));
}

TEST_CASE("calc writes JSON when asked") {
  fs::path out = temp_dir() / "value.json";
  fs::remove(out);
  RunResult r = run("calc \"D^2(abs(1))\" --domain \"(0,2)\" --out " + out.string());
  CHECK(r.code == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(j["result"] == "class");
  CHECK(j["region"] == "(0,2)");
}

TEST_CASE("malformed input exits 2") {
  CHECK(run("calc \"D^(x)\" --domain \"(0,1)\"").code == 2);
  CHECK(run("calc \"x\" --no-such-flag").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("audit --spec /nonexistent/spec.json").code == 2);
  RunResult r = run("calc \"x + \" --domain \"(0,1)\"");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error:"));
}

TEST_CASE("audit accepts the honest structures") {
  fs::path spec = write_spec("int.json", R"({"model": "int"})");
  RunResult r = run("audit --spec " + spec.string() + " --samples 60 --seed 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "=> accepted"));
  CHECK(!contains(r.out, "FAIL"));

  fs::path pspec = write_spec("pp.json", R"js({"model": "pp", "domain": "(0,3)"})js");
  CHECK(run("audit --spec " + pspec.string() + " --level sgroup --samples 40 --seed 5").code ==
        0);
  CHECK(run("audit --spec " + pspec.string() + " --level sspace --samples 30 --seed 5").code ==
        0);
  CHECK(run("audit --spec " + pspec.string() + " --level tess1 --samples 25 --seed 5").code == 0);
}

TEST_CASE("audit names the damaged axiom and exits 1") {
  fs::path spec = write_spec("mut.json", R"({"model": "int", "structure": "extension"})");
  RunResult full = run("audit --spec " + spec.string() +
                       " --samples 80 --seed 5 --mutate strictness");
  CHECK(full.code == 1);
  CHECK(contains(full.out, "FAIL  strictness"));

  RunResult simple = run("audit --spec " + spec.string() +
                         " --samples 80 --seed 5 --mutate strictness --variant simplified");
  CHECK(simple.code == 1);
  CHECK(contains(simple.out, "FAIL  kernel-difference"));

  // Region mutations do not fit a plain enlargement: the spec is malformed.
  CHECK(run("audit --spec " + spec.string() + " --samples 20 --seed 5 --mutate glue-uniqueness")
            .code == 2);
  CHECK(run("audit --spec " + spec.string() + " --samples 20 --seed 5 --mutate no-such-kind")
            .code == 2);
  // Mutations only make sense against the axiom checker.
  CHECK(run("audit --spec " + spec.string() +
            " --level sgroup --samples 20 --seed 5 --mutate strictness")
            .code == 2);
}

TEST_CASE("audit report lands in the out file") {
  fs::path spec = write_spec("rep.json", R"({"model": "int", "structure": "extension"})");
  fs::path out = temp_dir() / "report.json";
  fs::remove(out);
  RunResult r = run("audit --spec " + spec.string() + " --samples 40 --seed 5 --out " +
                    out.string());
  CHECK(r.code == 0);
  auto j = nlohmann::ordered_json::parse(slurp(out));
  CHECK(contains(j["system"].get<std::string>(), "sgroup-full"));
  CHECK(j["seed"] == 5);
  for (const auto& v : j["verdicts"]) CHECK(v["pass"] == true);
}

TEST_CASE("demos run their pinned transcripts") {
  RunResult zq = run("demo zq");
  CHECK(zq.code == 0);
  CHECK(contains(zq.out, "185"));
  CHECK(contains(zq.out, "isomorphism verified"));

  RunResult delta = run("demo delta");
  CHECK(delta.code == 0);
  CHECK(contains(delta.out, "not a continuous function"));

  RunResult glue = run("demo glue");
  CHECK(glue.code == 0);
  CHECK(contains(glue.out, "glued"));
}

TEST_CASE("glue joins agreeing patches and refuses a mismatch") {
  RunResult ok = run("glue --domain \"(0,3)\" --part \"(0,2): D^2(abs(1)|(0,2))\""
                     " --part \"(1,3): D^2(abs(1)|(1,3))\"");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "(0,3)"));

  RunResult bad = run("glue --domain \"(0,3)\" --part \"(0,2): D^2(abs(1)|(0,2))\""
                      " --part \"(1,3): 1|(1,3)\"");
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "refused:"));
}

TEST_CASE("extend builds and audits an enlargement") {
  RunResult r = run("extend --model int --samples 60 --seed 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sample classes:"));
  CHECK(contains(r.out, "=> accepted"));
  CHECK(!contains(r.out, "=> rejected"));
}
