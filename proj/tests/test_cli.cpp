#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dgrep/commands.hpp"
#include "dgrep/io.hpp"

using namespace dgrep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("dgrep_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  TempDir(TempDir&& other) noexcept : path(std::move(other.path)) { other.path.clear(); }
  TempDir(const TempDir&) = delete;
  ~TempDir() {
    if (!path.empty()) fs::remove_all(path);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out, err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

TempDir bundle(const std::string& tag, const Options& opt = {}) {
  TempDir dir(tag);
  Run r = run([&](auto& o, auto& e) { return cmd_example("nonsplit", dir.path.string(), opt, o, e); });
  REQUIRE(r.code == 0);
  return dir;
}

}  // namespace

TEST_CASE("example bundle loads and checks") {
  TempDir dir = bundle("check");
  for (const char* f : {"digroup.json", "V.json", "W.json", "Q.json", "ses.json"}) CHECK(fs::exists(dir.file(f)));
  Options opt;
  for (const char* f : {"digroup.json", "V.json", "W.json", "Q.json", "ses.json"}) {
    Run r = run([&](auto& o, auto& e) { return cmd_check(dir.file(f), opt, o, e); });
    CHECK_MESSAGE(r.code == 0, f << ": " << r.out << r.err);
  }
  Representation v = representation_from_json(read_json_file(dir.file("V.json")));
  CHECK(v == nonsplit_example());
  Run alias = run([&](auto& o, auto& e) { return cmd_example("sec5", dir.path.string(), opt, o, e); });
  CHECK(alias.code == 0);
  Run unknown = run([&](auto& o, auto& e) { return cmd_example("nope", dir.path.string(), opt, o, e); });
  CHECK(unknown.code != 0);
}

TEST_CASE("corrupted and malformed inputs") {
  TempDir dir = bundle("corrupt");
  Json j = read_json_file(dir.file("V.json"));
  j["lambda"]["0,1"][0][1] = "1";
  write(dir.file("bad.json"), dump(j));
  Options opt;
  Run bad = run([&](auto& o, auto& e) { return cmd_check(dir.file("bad.json"), opt, o, e); });
  CHECK(bad.code == 1);
  CHECK(bad.out.find("R1") != std::string::npos);

  write(dir.file("broken.json"), "{\"lambda\": [1, 2");
  Run broken = run([&](auto& o, auto& e) { return cmd_check(dir.file("broken.json"), opt, o, e); });
  CHECK(broken.code == 2);
  Run missing = run([&](auto& o, auto& e) { return cmd_check(dir.file("absent.json"), opt, o, e); });
  CHECK(missing.code == 2);
  Json scalar = read_json_file(dir.file("V.json"));
  scalar["rho"]["0,0"][0][0] = "1/x";
  write(dir.file("scalar.json"), dump(scalar));
  Run s = run([&](auto& o, auto& e) { return cmd_check(dir.file("scalar.json"), opt, o, e); });
  CHECK(s.code == 2);
}

TEST_CASE("split, ext1, collapse and probe on the example") {
  TempDir dir = bundle("ext");
  Options opt;
  Run split = run([&](auto& o, auto& e) { return cmd_split(dir.file("ses.json"), opt, o, e); });
  CHECK(split.code == 0);
  CHECK(split.out.find("nonsplit") != std::string::npos);
  CHECK(split.out.find("dim_ext: 1") != std::string::npos);

  Options js;
  js.json = true;
  Run ext = run([&](auto& o, auto& e) { return cmd_ext1(dir.file("Q.json"), dir.file("W.json"), js, o, e); });
  CHECK(ext.code == 0);
  Json r = Json::parse(ext.out);
  CHECK(r["dim_ext"] == 1);
  CHECK(r["derivation_ext1"] == 1);
  CHECK(r["ext1_BE_invariant_dim"] == 1);
  CHECK(r["collapse_ok"] == true);

  Run col = run([&](auto& o, auto& e) { return cmd_collapse(dir.file("Q.json"), dir.file("W.json"), js, o, e); });
  CHECK(col.code == 0);
  Json c = Json::parse(col.out);
  CHECK(c["collapse_ok"] == true);
  CHECK(c["hom_BE_dim"] == 0);

  Run probe = run([&](auto& o, auto& e) {
    return cmd_probe({dir.file("W.json"), dir.file("Q.json")}, opt, o, e);
  });
  CHECK(probe.code == 0);
  CHECK(probe.out.find("dim 1") != std::string::npos);

  Run mismatch = run([&](auto& o, auto& e) { return cmd_ext1(dir.file("V.json"), dir.file("digroup.json"), opt, o, e); });
  CHECK(mismatch.code != 0);
}

TEST_CASE("zero W gives (0,0,0)") {
  TempDir dir = bundle("zero");
  write(dir.file("zero.json"), dump(representation_to_json(Representation::zero(nonsplit_example().digroup()))));
  Options js;
  js.json = true;
  Run ext = run([&](auto& o, auto& e) { return cmd_ext1(dir.file("Q.json"), dir.file("zero.json"), js, o, e); });
  CHECK(ext.code == 0);
  Json r = Json::parse(ext.out);
  CHECK(r["dim_ext"] == 0);
  CHECK(r["derivation_ext1"] == 0);
  CHECK(r["ext1_BE_invariant_dim"] == 0);
}

TEST_CASE("F_2 violates the Maschke hypothesis") {
  TempDir dir = bundle("f2");
  Options opt;
  opt.field = Field::prime(2);
  Run split = run([&](auto& o, auto& e) { return cmd_split(dir.file("ses.json"), opt, o, e); });
  CHECK(split.code == 1);
  Options f3;
  f3.field = Field::prime(3);
  Run ok = run([&](auto& o, auto& e) { return cmd_split(dir.file("ses.json"), f3, o, e); });
  CHECK(ok.code == 0);
  CHECK(ok.out.find("nonsplit") != std::string::npos);
}

TEST_CASE("generate is deterministic, valid and capped") {
  Options opt;
  GenerateSpec spec;
  spec.seed = 0;
  Run a = run([&](auto& o, auto& e) { return cmd_generate(spec, opt, o, e); });
  Run b = run([&](auto& o, auto& e) { return cmd_generate(spec, opt, o, e); });
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(check_representation(representation_from_json(Json::parse(a.out))).ok());

  for (std::uint64_t seed = 1; seed < 15; ++seed) {
    GenerateSpec s{seed, 1 + seed % 6, 1 + seed % 3, seed % 5, 2, ""};
    TempDir dir("gen" + std::to_string(seed));
    s.out_dir = dir.path.string();
    Run g = run([&](auto& o, auto& e) { return cmd_generate(s, opt, o, e); });
    REQUIRE(g.code == 0);
    for (const char* f : {"rep0.json", "rep1.json"}) {
      Run c = run([&](auto& o, auto& e) { return cmd_check(dir.file(f), opt, o, e); });
      CHECK_MESSAGE(c.code == 0, "seed " << seed << " " << f);
    }
    std::string first = slurp(dir.file("rep0.json"));
    Run again = run([&](auto& o, auto& e) { return cmd_generate(s, opt, o, e); });
    CHECK(slurp(dir.file("rep0.json")) == first);
  }

  GenerateSpec big;
  big.group_order = 7;
  CHECK(run([&](auto& o, auto& e) { return cmd_generate(big, opt, o, e); }).code == 2);
  big = GenerateSpec{};
  big.halo_size = 4;
  CHECK(run([&](auto& o, auto& e) { return cmd_generate(big, opt, o, e); }).code == 2);
  big = GenerateSpec{};
  big.dim = 5;
  CHECK(run([&](auto& o, auto& e) { return cmd_generate(big, opt, o, e); }).code == 2);
}

TEST_CASE("json round trips") {
  Representation v = nonsplit_example();
  CHECK(representation_from_json(representation_to_json(v)) == v);
  CHECK(digroup_from_json(digroup_to_json(v.digroup())) == v.digroup());
  Digroup s3(all_actions(FiniteGroup::symmetric(3), 3).back());
  CHECK(digroup_from_json(digroup_to_json(s3)) == s3);
  CHECK(parse_field("rational") == Field{});
  CHECK(parse_field("7") == Field::prime(7));
  CHECK_THROWS_AS(parse_field("8"), Error);
  CHECK(dump(representation_to_json(v)) == dump(representation_to_json(v)));
}
