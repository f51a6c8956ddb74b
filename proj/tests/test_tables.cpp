#include "doctest.h"

#include "fcrs/errors.hpp"
#include "fcrs/tables.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fcrs;

namespace {

std::string render(const Table& t, TableFormat f) {
  std::ostringstream out;
  write_table(t, f, out);
  return out.str();
}

}  // namespace

TEST_CASE("empty table is header only") {
  const Table t{{"a", "b"}, {}};
  CHECK(render(t, TableFormat::kCsv) == "a,b\n");
  const auto j = nlohmann::json::parse(render(t, TableFormat::kJson));
  CHECK(j["columns"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["rows"].empty());
}

TEST_CASE("rows in column order") {
  const Table t{{"x", "y", "z"}, {{"1", "0.5", ""}, {"2", "1/3", "q"}}};
  CHECK(render(t, TableFormat::kCsv) == "x,y,z\n1,0.5,\n2,1/3,q\n");
  const std::string json = render(t, TableFormat::kJson);
  CHECK(json.find("\"x\": \"1\",\n      \"y\": \"0.5\"") != std::string::npos);
  const auto j = nlohmann::json::parse(json);
  CHECK(j["rows"][1]["y"] == "1/3");
  CHECK(render(t, TableFormat::kCsv) == render(t, TableFormat::kCsv));
  CHECK(json == render(t, TableFormat::kJson));
}

TEST_CASE("malformed rows and formats") {
  const Table t{{"x", "y"}, {{"1"}}};
  std::ostringstream out;
  CHECK_THROWS_AS(write_table(t, TableFormat::kCsv, out), ParameterError);
  CHECK(parse_table_format("json") == TableFormat::kJson);
  CHECK_THROWS_AS(parse_table_format("xml"), ParameterError);
}

TEST_CASE("file destination") {
  const Table t{{"k"}, {{"v"}}};
  const auto path = std::filesystem::temp_directory_path() / "fcrs_table.csv";
  std::ostringstream fallback;
  write_table(t, TableFormat::kCsv, path.string(), fallback);
  CHECK(fallback.str().empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "k\nv\n");
  std::filesystem::remove(path);

  write_table(t, TableFormat::kCsv, "", fallback);
  CHECK(fallback.str() == "k\nv\n");
  CHECK_THROWS_AS(write_table(t, TableFormat::kCsv, "/nonexistent-dir/x.csv", fallback), Error);
}
