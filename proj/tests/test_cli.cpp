#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef PV_BINARY
#error "PV_BINARY must name the pv executable"
#endif

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// args is pasted into a shell command line; quote JSON with single quotes.
Run pv(const std::string& args, const std::string& env = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("pv_cli_out_" + std::to_string(::getpid()));
  const auto err = dir / ("pv_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = env + " '" PV_BINARY "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "' </dev/null";
  const int status = std::system(cmd.c_str());
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace

TEST_CASE("det prints a complex pair") {
  const Run r = pv("det '[1,1,1,0,0,0,0,0]'");
  CHECK(r.code == 0);
  CHECK(r.out == "[-1,2]\n");
  CHECK(r.err.empty());
}

TEST_CASE("singular inverse is a domain error") {
  const Run r = pv("inv '[1,0,1,0,0,0,0,0]'");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("singular paravector") != std::string::npos);
}

TEST_CASE("improper module is a domain error") {
  const Run r = pv("module '[1,0,2,0,0,0,0,0]'");
  CHECK(r.code == 1);
  CHECK(r.err.find("improper") != std::string::npos);
  CHECK(pv("module '[2,0,1,0,0,0,0,0]'").out == "1.7320508075688772\n");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(pv("det '[1,0,0]'").code == 2);
  CHECK(pv("det '[1,0,0,0,0,0,0,'").code == 2);
  CHECK(pv("nosuch").code == 2);
  CHECK(pv("").code == 2);
  CHECK(pv("mul '[1,0,0,0,0,0,0,0]'").code == 2);
  CHECK(pv("fuzz --trials 0").code == 2);
  CHECK(pv("angle --left --right '[1,0,0,0,0,0,0,0]' '[1,0,0,0,0,0,0,0]'").code == 2);
  const Run r = pv("det '[1,0,0]'");
  CHECK(r.out.empty());
  CHECK(r.err.find("arity") != std::string::npos);
}

TEST_CASE("arithmetic subcommands") {
  CHECK(pv("add '[1,0,1,0,0,0,0,0]' '[2,0,0,0,0,0,1,0]'").out == "[3,0,1,0,0,0,1,0]\n");
  CHECK(pv("mul '[1,0,1,0,0,0,0,0]' '[0,0,0,1,0,0,0,0]'").out == "[0,0,0,1,0,0,0,1]\n");
  CHECK(pv("mul '[0,0,0,1,0,0,0,0]' '[1,0,1,0,0,0,0,0]'").out == "[0,0,0,1,0,0,0,-1]\n");
  CHECK(pv("rev '[1,1,1,0,0,0,1,0]'").out == "[1,1,-1,-0,-0,-0,-1,-0]\n");
  CHECK(pv("conj '[0,1,0,0,0,0,1,0]'").out == "[0,-1,0,0,0,-0,-1,-0]\n");
  CHECK(pv("vig '[1,0,1,0,0,0,1,0]'").out == "[3,0,2,0,2,0,0,0]\n");
  CHECK(pv("inv '[2,0,1,0,0,0,0,0]'").out ==
        "[0.6666666666666666,0,-0.3333333333333333,-0,-0,0,0,0]\n");
  CHECK(pv("normalize '[2,0,0,0,0,0,0,0]'").out == "[1,0,0,0,0,0,0,0]\n");
}

TEST_CASE("classification output") {
  const Run text = pv("classify '[1,0,1,0,0,0,0,0]'");
  CHECK(text.code == 0);
  CHECK(text.out.find("singular    true") != std::string::npos);
  const Run json = pv("classify --json '[1,0,1,0,0,0,0,0]'");
  CHECK(json.out.find("\"singular\":true") != std::string::npos);
  CHECK(json.out.find("\"tol\":{\"abs\":1e-09,\"rel\":1e-09}") != std::string::npos);
}

TEST_CASE("tolerance from flag and environment") {
  // det = 1e-6: singular only under a loose tolerance
  const std::string g = "'[1,0,0.9999995,0,0,0,0,0]'";
  CHECK(pv("classify --json " + g).out.find("\"singular\":false") != std::string::npos);
  CHECK(pv("classify --json --tol 1e-5 " + g).out.find("\"singular\":true") != std::string::npos);
  CHECK(pv("classify --json " + g, "PV_TOL=1e-5").out.find("\"singular\":true") != std::string::npos);
  CHECK(pv("classify --json --tol 1e-9 " + g, "PV_TOL=1e-5").out.find("\"singular\":false") !=
        std::string::npos);
  CHECK(pv("det " + g, "PV_TOL=abc").code == 0);
  CHECK(pv("inv " + g, "PV_TOL=abc").code == 2);
}

TEST_CASE("products and angles honour orientation flags") {
  const std::string a = "'[1,0,1,0,0,0,0,0]'", b = "'[1,0,0,1,0,0,0,0]'";
  CHECK(pv("sprod " + a + " " + b).out == "[1,0]\n");
  CHECK(pv("vprod " + a + " " + b).out == "[1,-1,0,0,0,-1]\n");
  CHECK(pv("vprod --left " + a + " " + b).out == "[-1,1,0,0,0,-1]\n");
  CHECK(pv("angle '[2,0,1,0,0,0,0,0]' '[2,0,0,1,0,0,0,0]'").out.rfind("[1.333333333333333", 0) == 0);
  CHECK(pv("compose-angle '[1,0,0,0,0,0,0,0]' '[1,0,0,0,0,0,0,0]'").out == "[1,0,0,0,0,0,0,0]\n");
  CHECK(pv("compose-angle '[2,0,0,0,0,0,0,0]' '[1,0,0,0,0,0,0,0]'").code == 1);
}

TEST_CASE("transform subcommands") {
  const std::string axis = "'[0.7071067811865476,0,0,0,0,0,0,0.7071067811865476]'";
  const Run r = pv("rotate '[0,0,1,0,0,0,0,0]' " + axis);
  CHECK(r.code == 0);
  CHECK(r.out.find("[0,0,") == 0);
  CHECK(pv("mirror '[0,0,0,0,0,1,2,3]' '[0,0,0,0,0,1]'").out == "[0,0,0,0,0,1,2,-3]\n");
  CHECK(pv("axial '[0.5,0,1,2,3,0,0,0]' '[0,0,1,0,0,0]'").out == "[0.5,0,-1,-2,3,0,0,0]\n");
  CHECK(pv("mirror '[1,0,0,0,0,0,0,0]' '[1,0,0,0,1,0]'").code == 1);
  const Run e = pv("euler '[0,0,1,0.7853981633974483]' '[0,0,1,0.7853981633974483]'");
  CHECK(e.out.rfind("{\"n\":[0,0,1],\"phi\":1.57079632679489", 0) == 0);
  CHECK(e.out.find("\"axis_defined\":true}") != std::string::npos);
  CHECK(pv("euler '[1,1,0,0.5]' '[0,0,1,0.5]'").code == 2);
}

TEST_CASE("matrix subcommands") {
  CHECK(pv("pauli '[0,0,0,1,0,0,0,0]'").out == "0+0i  0-1i\n0+1i  0+0i\n");
  const Run m = pv("matrep '[1,0,0,0,0,0,0,0]'");
  CHECK(m.code == 0);
  CHECK(std::count(m.out.begin(), m.out.end(), '\n') == 4);
  CHECK(m.out.rfind(" 1+0i   0+0i   0+0i   0+0i\n", 0) == 0);
}

TEST_CASE("stdin supplies a dash argument") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = dir / ("pv_cli_in_" + std::to_string(::getpid()));
  std::ofstream(in) << "[1,1,1,0,0,0,0,0]\n";
  const auto out = dir / ("pv_cli_stdin_out_" + std::to_string(::getpid()));
  const std::string cmd = "'" PV_BINARY "' det - <'" + in.string() + "' >'" + out.string() + "'";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out) == "[-1,2]\n");
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("fuzz subcommand") {
  const Run a = pv("fuzz --seed 42 --trials 200 --json");
  const Run b = pv("fuzz --seed 42 --trials 200 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"failing_properties\":0") != std::string::npos);
  CHECK(a.err.empty());
  const Run text = pv("fuzz --trials 20");
  CHECK(text.out.find("summary:") != std::string::npos);
}
