#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = loopforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(char const* name) { return std::string(LOOPFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("validate") {
  Run const ok = run({"validate", data("z4.loop")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid loop, order 4, associative\n");

  Run const sch = run({"validate", "--format", "data", data("e_z4.sch")});
  CHECK(sch.code == 0);
  CHECK(sch.out == "valid Schreier data, |K| = 2, |G| = 2\n");

  Run const bad = run({"validate", data("not_latin.loop")});
  CHECK(bad.code == 1);
  CHECK(bad.err.starts_with("error: NotLatin:"));

  Run const missing = run({"validate", data("absent.loop")});
  CHECK(missing.code == 1);
  CHECK(missing.err.starts_with("error: ParseError:"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", "--format", "yaml", data("z4.loop")}).code == 2);
  Run const help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("normal and decompose") {
  Run const normal = run({"normal", data("z4.loop")});
  CHECK(normal.code == 0);
  CHECK(normal.out.find("0,2 order 2 decomposable nuclear") != std::string::npos);

  Run const dec = run({"decompose", data("z4.loop"), "--subgroup", "0,2", "--transversal", "0,1"});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("f:\n0 0\n0 1\niso:\n0 2 1 3\n") != std::string::npos);

  Run const pair = run({"decompose", data("z4.loop"), "--subgroup", "0,2", "--pair", data("z4_sigma03.pair")});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("iso:\n0 2 3 1\n") != std::string::npos);

  Run const invalid = run({"decompose", data("z4.loop"), "--subgroup", "0,2", "--transversal", "0,2"});
  CHECK(invalid.code == 1);
  CHECK(invalid.err.starts_with("error: InvalidPair:"));

  CHECK(run({"decompose", data("z4.loop"), "--subgroup", "0,1"}).code == 1);
}

TEST_CASE("equiv") {
  Run const none = run({"equiv", data("e_z4.sch"), data("direct.sch")});
  CHECK(none.code == 0);
  CHECK(none.out == "NONE\n");
  CHECK(run({"equiv", "--wide", data("e_z4.sch"), data("direct.sch")}).out == "NONE\n");
  Run const self = run({"equiv", data("e_z4.sch"), data("e_z4.sch")});
  CHECK(self.out == "n: 0 0\n");
}

TEST_CASE("extend, shift and gallery") {
  Run const ext = run({"extend", data("e_z4.sch")});
  CHECK(ext.code == 0);
  CHECK(ext.out.find("0 1 2 3\n1 0 3 2\n2 3 1 0\n3 2 0 1\n") != std::string::npos);

  Run const cls = run({"extend", "--classify", data("e_z4.sch")});
  CHECK(cls.out.find("\nnuclear: true") != std::string::npos);

  Run const sh = run({"shift", data("e_z4.sch"), "--n", "0,1"});
  CHECK(sh.code == 0);
  CHECK(sh.out.find("f:\n0 0\n0 1\n") != std::string::npos);
  CHECK(run({"shift", data("e_z4.sch"), "--n", "1,1"}).code == 1);

  Run const fx = run({"gallery", "fixture", "--k", "E-V4"});
  CHECK(fx.code == 0);
  CHECK(fx.out.find("Theta:\n0 1 2 3\n0 2 1 3\n") != std::string::npos);

  Run const homs = run({"gallery", "conjugation", "--k", "Z2", "--g", "S3", "--list-homs"});
  CHECK(homs.code == 0);
  CHECK(homs.out.find("0: 0 0\n") != std::string::npos);
}

TEST_CASE("enumerate") {
  Run const count = run({"enumerate", "--order", "5", "--count"});
  CHECK(count.code == 0);
  CHECK(count.out == "6\n");
  CHECK(run({"enumerate", "--order", "7"}).code == 1);
  CHECK(run({"enumerate", "--order", "4", "--filter", "nonsense"}).code == 1);
}
