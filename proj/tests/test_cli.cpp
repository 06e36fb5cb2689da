#include "homhopf/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace homhopf;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return (fs::path(HOMHOPF_DATA_DIR) / (name + ".json")).string(); }

struct Outcome {
  int code;
  std::string out, err;
};

template <class F>
Outcome run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "homhopf_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Check, ValidFilesExitZero) {
  for (const char* name : {"kZ2", "H4-twisted", "trivial-H4", "relative-kZ2", "yd-kZ2"}) {
    const Outcome r = run([&](auto& o, auto& e) { return cmd_check(data(name), "", {}, o, e); });
    EXPECT_EQ(r.code, kExitOk) << name << r.out << r.err;
    EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
  }
}

TEST(Check, ViolationsExitOneWithLocation) {
  const Outcome r = run([](auto& o, auto& e) { return cmd_check(data("H4-bad-antipode"), "H", {}, o, e); });
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("H (hopf_algebra): FAILED"), std::string::npos);
  EXPECT_NE(r.out.find("violation \"S*I=eta.eps\" at basis x: residual [0, 0, 0, 2]"), std::string::npos) << r.out;
  for (const char* name : {"kZ2-bad-mult", "kZ2-bad-comult", "H4-twisted-bad-antipode"}) {
    EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_check(data(name), "", {}, o, e); }).code, kExitCheckFailed) << name;
  }
}

TEST(Check, UsageErrorsExitTwo) {
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_check("/nonexistent.json", "", {}, o, e); }).code, kExitUsage);
  const Outcome r = run([](auto& o, auto& e) { return cmd_check(data("kZ2"), "missing", {}, o, e); });
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(FindIntegral, TrivialGroupDatum) {
  const Outcome r = run([](auto& o, auto& e) { return cmd_find_integral(data("trivial-kZ2"), "D", {}, o, e); });
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("theta(e@e) = 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("theta(e@g) = 0"), std::string::npos);
  EXPECT_NE(r.out.find("theta(g@g) = 1"), std::string::npos);
}

TEST(FindIntegral, SweedlerIsInfeasible) {
  const Outcome r = run([](auto& o, auto& e) { return cmd_find_integral(data("trivial-H4"), "D", {}, o, e); });
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.out.find("colinear"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("normalized"), std::string::npos);
}

TEST(FindIntegral, OutputFileContainsVerifiedIntegral) {
  CommandOptions opt;
  opt.out = scratch("integral.json").string();
  ASSERT_EQ(run([&](auto& o, auto& e) { return cmd_find_integral(data("relative-kZ2"), "D", opt, o, e); }).code, kExitOk);
  const StructureFile sf = StructureFile::load(opt.out);
  EXPECT_TRUE(verify_integral(sf.integral("D_integral"), sf.datum("D")).passed());
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_check(opt.out, "D_integral", {}, o, e); }).code, kExitOk);
}

TEST(FieldOverride, PrimeFieldRuns) {
  CommandOptions opt;
  opt.field = Field::prime(7);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_check(data("H4-twisted"), "", opt, o, e); }).code, kExitOk);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_find_integral(data("trivial-kZ3"), "D", opt, o, e); }).code, kExitOk);
}

TEST(Certify, ModulesOverTheDatum) {
  CommandOptions opt;
  opt.out = scratch("certificate.json").string();
  const Outcome r = run([&](auto& o, auto& e) { return cmd_certify(data("trivial-kZ2"), "D", {"regular", "sum"}, opt, o, e); });
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const StructureFile sf = StructureFile::load(opt.out);
  EXPECT_EQ(sf.kind("D_certificate"), "separability_certificate");
  EXPECT_EQ(sf.object("D_certificate").at("modules").at("sum").at("passed"), true);
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_certify(data("trivial-H4"), "D", {"regular"}, {}, o, e); }).code,
            kExitInfeasible);
}

TEST(Split, SectionAndRetraction) {
  CommandOptions opt;
  opt.out = scratch("split.json").string();
  Outcome r = run([&](auto& o, auto& e) { return cmd_split(data("trivial-kZ2"), "D", "proj", "section", "", opt, o, e); });
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("section of proj found with twist powers j=0 k=0"), std::string::npos) << r.out;
  {
    const StructureFile sf = StructureFile::load(opt.out);
    const Matrix s = sf.linear_map("section_split");
    EXPECT_EQ(compose(sf.linear_map("proj"), s), Matrix::identity(sf.field(), 2));
    EXPECT_TRUE(morphism_flags(s, sf.doi_module("regular"), sf.doi_module("sum")).is_doi_morphism());
  }
  r = run([&](auto& o, auto& e) { return cmd_split(data("trivial-kZ2"), "D", "incl", "retract", "", opt, o, e); });
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("retraction of incl"), std::string::npos);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_check(opt.out, "retract_split", {}, o, e); }).code, kExitOk);
  // the A-linear input is not colinear
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_check(opt.out, "retract", {}, o, e); }).code, kExitCheckFailed);
}

TEST(Twist, ProducesAHomHopfAlgebra) {
  const Outcome r = run([](auto& o, auto& e) { return cmd_twist(data("kZ4"), "H", "inverse", {}, o, e); });
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const StructureFile sf = StructureFile::parse(r.out);
  EXPECT_TRUE(check_hom_hopf(sf.hopf("H_twisted")).passed());
  EXPECT_EQ(sf.hopf("H_twisted").alpha(), sf.linear_map("inverse"));
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_twist(data("H4"), "H", "H", {}, o, e); }).code, kExitUsage);
}

TEST(Twist, NonAutomorphismExitsOne) {
  StructureFile sf = builtin_example("kZ4");
  sf.put("square", encode_linear_map(catalog::group_power_map(Field::rationals(), 4, 2), "H", "H"));
  const fs::path p = scratch("square.json");
  sf.save(p.string());
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_twist(p.string(), "H", "square", {}, o, e); }).code, kExitCheckFailed);
}

TEST(Examples, ListAndEmit) {
  Outcome r = run([](auto& o, auto& e) { return cmd_examples("list", {}, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("trivial-H4\n"), std::string::npos);
  r = run([](auto& o, auto& e) { return cmd_examples("kZ3", {}, o, e); });
  EXPECT_EQ(r.out, builtin_example("kZ3").serialize());
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_examples("nonsense", {}, o, e); }).code, kExitUsage);
}
