#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "logmod/commands.hpp"
#include "logmod/error.hpp"
#include "logmod/io.hpp"
#include "support.hpp"

using namespace logmod;
using namespace logmod::io;
using namespace logmod::test;

namespace {

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every document in the corpus, one string each (batch files contribute one per line).
std::vector<std::pair<std::string, std::string>> corpus()
{
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(FIXTURE_DIR)) {
    if (e.path().extension() == ".json") {
      out.emplace_back(e.path().string(), slurp(e.path()));
    } else if (e.path().extension() == ".jsonl") {
      std::istringstream lines(slurp(e.path()));
      std::string line;
      for (int i = 1; std::getline(lines, line); ++i)
        if (!line.empty())
          out.emplace_back(e.path().string() + ":" + std::to_string(i), line);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode parse_failure(const std::string& text)
{
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

std::string parse_message(const std::string& text)
{
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t n)
{
  Matrix m;
  std::uniform_int_distribution<int> big(0, 5);
  for (std::size_t i = 0; i < rows; ++i) {
    Vec v = random_vec(rng, n, -9, 9);
    if (big(rng) == 0)
      v[0] = (Int(1) << 70) * v[0] + 1;
    m.push_back(v);
  }
  return m;
}

MonoidDoc random_monoid(std::mt19937_64& rng)
{
  std::size_t n = 1 + rng() % 3;
  return MonoidDoc{n, random_matrix(rng, rng() % 4, n)};
}

ConeSpec random_cone_spec(std::mt19937_64& rng, std::size_t n)
{
  ConeSpec c;
  if (rng() % 2)
    c.rays = random_matrix(rng, 1 + rng() % 3, n);
  else {
    c.inequalities = random_matrix(rng, rng() % 3, n);
    if (rng() % 2)
      c.equations = random_matrix(rng, 1, n);
  }
  return c;
}

Document random_document(std::mt19937_64& rng, std::size_t kind)
{
  std::size_t n = 1 + rng() % 3;
  switch (kind) {
  case 0:
    return random_monoid(rng);
  case 1: {
    ConeDoc c{n, random_matrix(rng, 2, n), std::nullopt};
    if (rng() % 2)
      c.lattice = random_matrix(rng, n, n);
    return c;
  }
  case 2:
    return LocalizationDoc{random_monoid(rng), random_matrix(rng, 1, n)};
  case 3:
    return IntersectionDoc{random_monoid(rng), random_matrix(rng, 2, n)};
  case 4:
    return HomDoc{random_monoid(rng), random_monoid(rng), random_matrix(rng, 2, 3)};
  case 5:
    return IdealDoc{random_monoid(rng), random_matrix(rng, 2, n)};
  case 6:
    return ExtensionDoc{random_monoid(rng), random_monoid(rng)};
  case 7:
    return LiftDoc{random_monoid(rng), random_matrix(rng, 2, n), random_vec(rng, n, -5, 5)};
  case 8:
    return FamilyDoc{random_monoid(rng), random_matrix(rng, rng() % 4, n)};
  case 9:
    return CoverDoc{n, random_matrix(rng, 2, n), {random_cone_spec(rng, n), random_cone_spec(rng, n)}};
  case 10: {
    TowerDoc t{random_monoid(rng), {}};
    for (std::size_t i = 0; i < rng() % 3; ++i)
      t.stages.push_back({random_matrix(rng, 2, n), rng() % 2 ? std::optional<std::size_t>(rng() % 4) : std::nullopt});
    return t;
  }
  case 11:
    return FanDoc{n, random_cone_spec(rng, n), {random_cone_spec(rng, n)}};
  default: {
    StratificationDoc s;
    for (std::size_t i = 0; i < rng() % 3; ++i)
      s.strata.push_back({"s" + std::to_string(i), rng() % 4, random_monoid(rng)});
    return s;
  }
  }
}

} // namespace

TEST_CASE("fixture corpus round-trips")
{
  auto docs = corpus();
  std::size_t valid = 0;
  for (const auto& [name, text] : docs) {
    INFO(name);
    // The batch corpus carries one deliberately malformed line.
    if (name.ends_with("batch/qccheck.jsonl:7")) {
      CHECK(parse_failure(text) == ErrorCode::ParseError);
      continue;
    }
    ++valid;
    Document d = parse_document(text);
    std::string s = serialize(d);
    Document again = parse_document(s);
    CHECK(again == d);
    CHECK(serialize(again) == s);
  }
  CHECK(valid >= 50);
}

TEST_CASE("random documents round-trip")
{
  std::mt19937_64 rng(4242);
  for (std::size_t kind = 0; kind < std::variant_size_v<Document>; ++kind)
    for (int trial = 0; trial < 25; ++trial) {
      Document d = random_document(rng, kind);
      REQUIRE(d.index() == kind);
      std::string s = serialize(d);
      INFO(s);
      CHECK(parse_document(s) == d);
    }
}

TEST_CASE("canonical monoid document")
{
  Document d = parse_document(R"({"type":"monoid","ambient_rank":2,"generators":[[1,0],[0,1]]})");
  REQUIRE(std::holds_alternative<MonoidDoc>(d));
  CHECK(std::get<MonoidDoc>(d) == MonoidDoc{2, M({{1, 0}, {0, 1}})});
  CHECK(serialize(d) == R"({"type":"monoid","ambient_rank":2,"generators":[[1,0],[0,1]]})");
}

TEST_CASE("large integers travel as decimal strings")
{
  Int big = (Int(1) << 53) + 1;
  MonoidDoc m{1, {Vec{big}, Vec{Int(1) << 53}}};
  std::string s = serialize(m);
  CHECK(s.find("\"9007199254740993\"") != std::string::npos);
  CHECK(s.find("9007199254740992") != std::string::npos);
  CHECK(s.find("\"9007199254740992\"") == std::string::npos);
  CHECK(std::get<MonoidDoc>(parse_document(s)) == m);

  auto d = parse_document(R"({"type":"monoid","ambient_rank":1,"generators":[["-123456789012345678901234567890"]]})");
  CHECK(std::get<MonoidDoc>(d).generators[0][0] == Int("-123456789012345678901234567890"));
}

TEST_CASE("strict parsing")
{
  CHECK(parse_failure(R"({"type":"monoid","ambient_rank":2,"generators":[],"note":1})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"hom","source":{"ambient_rank":1,"generators":[],"x":0},
    "target":{"ambient_rank":1,"generators":[]},"matrix":[]})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"monoid","ambient_rank":2,"generators":[[1.5,0]]})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"monoid","ambient_rank":2,"generators":[["1e3",0]]})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"monoid","generators":[]})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"sheaf"})") == ErrorCode::ParseError);
  CHECK(parse_failure(R"([1,2])") == ErrorCode::ParseError);
  CHECK(parse_failure(R"({"type":"cover","ambient_rank":1,"sigma_rays":[[1]],
    "subcones":[{"rays":[[1]],"inequalities":[[1]]}]})") == ErrorCode::ParseError);

  CHECK(parse_message("{\"type\":\"monoid\",\n\"generators\":[[1,0]").rfind("line 2, column", 0) == 0);
  CHECK(parse_message(R"({"type":"monoid","ambient_rank":2,"generators":[[1,0],[0,true]]})")
            .rfind("/generators/1/1", 0) == 0);
}

TEST_CASE("command examples")
{
  auto hom = run_command("classify", std::string_view(R"({"type":"hom",
    "source":{"ambient_rank":1,"generators":[[1]]},
    "target":{"ambient_rank":1,"generators":[[1]]},"matrix":[[-1]]})"));
  CHECK(hom.exit_code == 2);
  CHECK(hom.output["error"] == "ValidationError");

  auto lp = run_command("logdim", std::string_view(slurp(FIXTURE_DIR "/logdim/standard_log_point.json")));
  CHECK(lp.exit_code == 0);
  CHECK(lp.output.dump() == R"({"log_dim":0})");

  auto qc = run_command("qccheck", std::string_view(R"({"type":"monoid","ambient_rank":2,"generators":[[1,0],[0,1]]})"));
  CHECK(qc.output.dump() == R"({"quasi_compact_shadow":false})");

  auto fx = run_command("factorize", std::string_view(slurp(FIXTURE_DIR "/factorize/not_an_extension.json")));
  CHECK(fx.exit_code == 1);
  CHECK(fx.output["error"] == "NotAnExtension");

  auto unknown = run_command("frobnicate", std::string_view("{}"));
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output["error"] == "UnknownCommand");

  auto wrong = run_command("saturate", std::string_view(slurp(FIXTURE_DIR "/blowup/nakayama.json")));
  CHECK(wrong.exit_code == 2);
  CHECK(wrong.output["error"] == "ValidationError");

  auto big = run_command("saturate", std::string_view(R"({"type":"monoid","ambient_rank":9,"generators":[]})"));
  CHECK(big.exit_code == 2);
  CHECK(big.output["error"] == "ValidationError");
}

TEST_CASE("nakayama fixture parses as a blow-up request")
{
  Document d = parse_document(slurp(FIXTURE_DIR "/blowup/nakayama.json"));
  REQUIRE(std::holds_alternative<IdealDoc>(d));
  const auto& i = std::get<IdealDoc>(d);
  CHECK(i.base == MonoidDoc{2, M({{1, 0}, {0, 1}})});
  CHECK(i.generators == M({{1, 0}, {0, 1}}));
}

TEST_CASE("oracle mode agrees on every fixture")
{
  for (const auto& [name, text] : corpus()) {
    auto slash = name.rfind('/');
    auto dir = name.substr(0, slash);
    std::string cmd = dir.substr(dir.rfind('/') + 1);
    if (cmd == "batch")
      cmd = name.substr(slash + 1, name.find('.', slash) - slash - 1);
    INFO(name);
    auto plain = run_command(cmd, std::string_view(text));
    auto checked = run_command(cmd, std::string_view(text), CommandOptions{true, false, true});
    CHECK(checked.output == plain.output);
    CHECK(checked.exit_code == plain.exit_code);
  }
}

TEST_CASE("batch keeps order and matches the serial run")
{
  std::string input;
  for (const auto& [name, text] : corpus())
    if (name.find("/qccheck/") != std::string::npos || name.find("/saturate/") != std::string::npos)
      input += text;
  input += "not json\n";
  CommandOptions par{false, false, true};
  CommandOptions ser{false, false, false};
  auto a = run_batch("qccheck", input, par);
  auto b = run_batch("qccheck", input, ser);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].output == b[i].output);
    CHECK(a[i].exit_code == b[i].exit_code);
  }
  CHECK(a.back().output["error"] == "ParseError");
}
