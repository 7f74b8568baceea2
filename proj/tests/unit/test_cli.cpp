#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "helpers.hpp"
#include "tabcompare/cli.hpp"
#include "tabcompare/document.hpp"

using namespace tabcompare;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tabcompare_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("analyze writes a document") {
  const std::string a = tabtest::fixture_path("corpus/02_riff_pm.tabtxt");
  const fs::path out = scratch("cmp.json");
  fs::remove(out);
  const Run r = cli({"analyze", a, a, "--track", "0,0", "--out", out.string()});
  CHECK(r.code == kExitOk);
  REQUIRE(fs::exists(out));
  CHECK(validate_document_text(tabtest::read_text(out.string())).empty());
}

TEST_CASE("analyze reproduces the golden document") {
  const Run r = cli({"analyze", tabtest::fixture_path("threeway/v0.tabtxt"), tabtest::fixture_path("threeway/v1.tabtxt"),
                     tabtest::fixture_path("threeway/v2.tabtxt")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == tabtest::read_fixture("threeway/golden.json"));
}

TEST_CASE("analyze errors") {
  const fs::path bad = scratch("bad.tabtxt");
  {
    std::ofstream f(bad);
    f << "\\track \"g\"\n3.7.4 r.2.\n";
  }
  const std::string good = tabtest::fixture_path("corpus/02_riff_pm.tabtxt");
  const Run parse = cli({"analyze", good, bad.string()});
  CHECK(parse.code == kExitInputError);
  CHECK(parse.err.find("bad.tabtxt:2:1: string 7 exceeds tuning") != std::string::npos);

  const Run one = cli({"analyze", good});
  CHECK(one.code == kExitInputError);
  CHECK(one.err.find("need at least 2 versions") != std::string::npos);

  const Run track = cli({"analyze", good, good, "--track", "0,3"});
  CHECK(track.code == kExitInputError);
  CHECK(track.err.find("out of range") != std::string::npos);

  CHECK(cli({"analyze", good, good, "--track", "0"}).code == kExitInputError);
  CHECK(cli({"analyze", good, good, "--gap-cost", "-1"}).code == kExitInputError);
  CHECK(cli({"analyze", good, "/nonexistent/x.tabtxt"}).code == kExitInputError);
  CHECK(cli({"bogus"}).code == kExitInputError);
  CHECK(cli({}).code == kExitInputError);
}

TEST_CASE("tracks lists tab-separated summaries") {
  const Run two = cli({"tracks", tabtest::fixture_path("corpus/04_two_tracks.tabtxt")});
  CHECK(two.code == kExitOk);
  CHECK(two.out == "0\tLead\t6\t2\n1\tBass\t4\t2\n");
  const Run twin = cli({"tracks", tabtest::fixture_path("canonical/04_two_tracks.json")});
  CHECK(twin.code == kExitOk);
  CHECK(twin.out == two.out);
  const fs::path bad = scratch("junk.tabtxt");
  {
    std::ofstream f(bad);
    f << "junk";
  }
  CHECK(cli({"tracks", bad.string()}).code == kExitInputError);
}

TEST_CASE("the canonical twin parses to the same score") {
  CHECK(parse_any(tabtest::read_fixture("canonical/04_two_tracks.json")) ==
        parse_tabtext(tabtest::read_fixture("corpus/04_two_tracks.tabtxt")));
}

TEST_CASE("the installed binary reports exit codes") {
  auto status = [](const std::string& args) {
    const std::string command = std::string(TABCOMPARE_CLI) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const std::string good = tabtest::fixture_path("corpus/02_riff_pm.tabtxt");
  CHECK(status("tracks " + good) == 0);
  CHECK(status("analyze " + good) == 1);
  CHECK(status("analyze " + good + " " + good) == 0);
}
