#include "homhopf/golden.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homhopf;
namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kMinimal = R"({
  "field": "Q",
  "objects": {
    "f": {"kind": "linear_map", "matrix": [["1", "2/4"], ["0", "-3"]]}
  }
})";

}  // namespace

TEST(GoldenFiles, RoundTripByteForByte) {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(HOMHOPF_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = read(entry.path());
    EXPECT_EQ(StructureFile::parse(text).serialize(), text) << entry.path();
    ++seen;
  }
  EXPECT_EQ(seen, builtin_example_names().size());
}

TEST(GoldenFiles, MatchBuiltinExamples) {
  for (const auto& name : builtin_example_names()) {
    const fs::path p = fs::path(HOMHOPF_DATA_DIR) / (name + ".json");
    ASSERT_TRUE(fs::exists(p)) << p;
    EXPECT_EQ(builtin_example(name).serialize(), read(p)) << name;
  }
}

TEST(Parse, CoefficientsAreCanonicalized) {
  const StructureFile sf = StructureFile::parse(kMinimal);
  EXPECT_EQ(sf.object("f").at("matrix")[0][1], "1/2");
  EXPECT_EQ(sf.linear_map("f")(1, 1), Scalar(Field::rationals(), -3));
  EXPECT_EQ(StructureFile::parse(sf.serialize()).serialize(), sf.serialize());
}

TEST(Parse, FieldOverrideReinterpretsCoefficients) {
  const StructureFile sf = StructureFile::parse(kMinimal, Field::prime(7));
  EXPECT_EQ(sf.field(), Field::prime(7));
  EXPECT_EQ(sf.object("f").at("matrix")[0][1], "4");
  EXPECT_EQ(sf.object("f").at("matrix")[1][1], "4");
  EXPECT_NE(sf.serialize().find("\"GF\": 7"), std::string::npos);
  EXPECT_THROW(StructureFile::parse(kMinimal, Field::prime(2)), ParseError);
}

TEST(Parse, PrimeFieldHeader) {
  const StructureFile sf = StructureFile::parse(R"({"field": {"GF": 5}, "objects": {}})");
  EXPECT_EQ(sf.field(), Field::prime(5));
  EXPECT_EQ(StructureFile::parse(R"j({"field": "GF(5)", "objects": {}})j").field(), Field::prime(5));
  EXPECT_THROW(StructureFile::parse(R"({"field": {"GF": 6}, "objects": {}})"), ParseError);
  EXPECT_THROW(StructureFile::parse(R"({"field": "R", "objects": {}})"), ParseError);
}

TEST(Parse, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"objects": {}})",
      R"({"field": "Q"})",
      R"({"field": "Q", "objects": {}, "extra": 1})",
      R"({"field": "Q", "objects": {"f": {"matrix": [["1"]]}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "tensor", "matrix": [["1"]]}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map"}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map", "matrix": [["1"]], "colour": "red"}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map", "matrix": [[1]]}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map", "matrix": [["1.5"]]}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map", "matrix": [["1/0"]]}}})",
      R"({"field": "Q", "objects": {"f": {"kind": "linear_map", "matrix": [["1", "0"], ["0"]]}}})",
  };
  for (const char* text : bad) EXPECT_THROW(StructureFile::parse(text), ParseError) << text;
}

TEST(Parse, DimensionMismatchIsReportedAtLoad) {
  Json doc = Json::parse(read(fs::path(HOMHOPF_DATA_DIR) / "kZ2.json"));
  doc["objects"]["H"]["unit"] = Json::array({"1"});
  EXPECT_THROW(StructureFile::parse(doc.dump()), ParseError);
}

TEST(Parse, MissingReferenceIsReported) {
  Json doc = Json::parse(read(fs::path(HOMHOPF_DATA_DIR) / "trivial-kZ2.json"));
  doc["objects"]["D"]["hopf"] = "nowhere";
  EXPECT_THROW(StructureFile::parse(doc.dump()), ParseError);
  doc = Json::parse(read(fs::path(HOMHOPF_DATA_DIR) / "trivial-kZ2.json"));
  doc["objects"]["D"]["algebra"] = "C";
  EXPECT_THROW(StructureFile::parse(doc.dump()), ParseError);
}

TEST(Parse, TypedAccessorsCheckKinds) {
  const StructureFile sf = builtin_example("trivial-kZ2");
  EXPECT_NO_THROW(sf.datum("D"));
  EXPECT_THROW(sf.datum("H"), ParseError);
  EXPECT_THROW(sf.hopf("nowhere"), ParseError);
  EXPECT_EQ(sf.basis("H"), (std::vector<std::string>{"e", "g"}));
}

TEST(Serialize, PutValidatesAndSaveWrites) {
  StructureFile sf = StructureFile::parse(kMinimal);
  EXPECT_THROW(sf.put("g", Json{{"kind", "linear_map"}}), ParseError);
  sf.put("g", encode_linear_map(Matrix::identity(Field::rationals(), 2)));
  EXPECT_EQ(sf.names(), (std::vector<std::string>{"f", "g"}));
  const fs::path p = fs::temp_directory_path() / "homhopf_structure_file_test.json";
  sf.save(p.string());
  EXPECT_EQ(read(p), sf.serialize());
  EXPECT_EQ(StructureFile::load(p.string()).serialize(), sf.serialize());
  fs::remove(p);
  EXPECT_THROW(StructureFile::load("/nonexistent/file.json"), ParseError);
}

TEST(Serialize, CanonicalLayout) {
  const Json j = {{"b", Json::array({"1", "0"})}, {"a", Json::object()}, {"c", Json::array()}};
  EXPECT_EQ(canonical_json(j), "{\n  \"a\": {},\n  \"b\": [\"1\", \"0\"],\n  \"c\": []\n}\n");
}
