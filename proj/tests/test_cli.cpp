#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqpat/cli.hpp"
#include "test_util.hpp"

using nlohmann::json;

namespace {

struct cli_run {
  int code = 0;
  std::string out;
  std::string err;
};

cli_run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli_run result;
  result.code = seqpat::run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<json> records_of(const std::string& text) {
  std::vector<json> records;
  for (const auto& line : lines_of(text)) records.push_back(json::parse(line));
  return records;
}

const std::string& abc_file() {
  static const std::string path =
      testutil::write_scratch("abc.txt", "a b c a b c a b c\n");
  return path;
}

const std::string& skewed_file() {
  static const std::string path =
      testutil::write_scratch("skewed.txt", std::string(testutil::skewed_tokens()) + "\n");
  return path;
}

const std::string& matrix_file() {
  static const std::string path =
      testutil::write_scratch("matrix.csv", testutil::noisy_matrix_csv());
  return path;
}

const std::string& i123_file() {
  static const std::string path = testutil::write_scratch("i123.txt", "I1 I2 I3\n");
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("periodic emits one json record per pattern in canonical order") {
  const auto r = run({"periodic", "--input", abc_file(), "--min-rep", "3", "--max-period", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const auto records = records_of(r.out);
  REQUIRE(records.size() == 7);
  const std::vector<std::string> expected{"* * c", "* b *", "a * *", "* b c",
                                          "a * c", "a b *", "a b c"};
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i]["pattern"] == expected[i]);
    CHECK(records[i]["period"] == 3);
    CHECK(records[i]["total_reps"] == 3);
    CHECK(records[i]["segments"] == json::array({json::array({0, 3})}));
  }
}

TEST_CASE("periodic tsv uses one tab-separated row per pattern") {
  const auto r = run({"periodic", "--input", abc_file(), "--min-rep", "3", "--max-period", "3",
                      "--format", "tsv"});
  CHECK(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "* * c\t3\t3\t0:3");
  CHECK(lines[6] == "a b c\t3\t3\t0:3");
}

TEST_CASE("surprise ranks by gain and rounds to six places") {
  const auto r = run({"surprise", "--input", skewed_file(), "--max-len", "1"});
  CHECK(r.code == 0);
  const auto records = records_of(r.out);
  REQUIRE(records.size() == 4);
  CHECK(records[0]["pattern"] == "I1");
  CHECK(records[0]["support"] == 10);
  CHECK(records[0]["info"].get<double>() == doctest::Approx(0.5));
  CHECK(records[0]["gain"].get<double>() == doctest::Approx(5.0));
  CHECK(records[1]["pattern"] == "I2");
  CHECK(records[1]["info"].get<double>() == doctest::Approx(1.160964));
  CHECK(records[1]["gain"].get<double>() == doctest::Approx(4.643856));
  CHECK(records[2]["pattern"] == "I3");
  CHECK(records[3]["pattern"] == "I4");
}

TEST_CASE("surprise threshold and top-k modes") {
  const auto thresh = run({"surprise", "--input", skewed_file(), "--min-gain", "4.2"});
  CHECK(thresh.code == 0);
  CHECK(records_of(thresh.out).size() == 2);

  const auto top = run({"surprise", "--input", skewed_file(), "--top-k", "2"});
  CHECK(top.code == 0);
  CHECK(records_of(top.out).size() == 2);

  const auto both =
      run({"surprise", "--input", skewed_file(), "--min-gain", "4.2", "--top-k", "2"});
  CHECK(both.code == 1);
  CHECK(!both.err.empty());
}

TEST_CASE("approx mines ranked patterns against the matrix") {
  const auto r = run({"approx", "--input", i123_file(), "--matrix", matrix_file(),
                      "--min-match", "0.6", "--max-len", "3"});
  CHECK(r.code == 0);
  const auto records = records_of(r.out);
  REQUIRE(records.size() == 5);
  const std::vector<std::string> expected{"I3", "I1", "I1 I3", "I2", "I2 I3"};
  const std::vector<double> values{0.9, 0.8, 0.72, 0.7, 0.63};
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i]["pattern"] == expected[i]);
    CHECK(records[i]["match"].get<double>() == doctest::Approx(values[i]));
  }
}

TEST_CASE("approx report aggregates across several inputs") {
  const std::string second = testutil::write_scratch("i333.txt", "I3 I3 I3\n");
  const auto r = run({"approx", "--input", i123_file(), "--input", second, "--matrix",
                      matrix_file(), "--min-match", "0.6", "--report", "I2,I3"});
  CHECK(r.code == 0);
  const auto records = records_of(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["pattern"] == "I2 I3");
  CHECK(records[0]["match"].get<double>() == doctest::Approx(0.36));
  CHECK(records[0]["exact_support"] == 1);
  REQUIRE(records[0]["per_sequence"].size() == 2);
  CHECK(records[0]["per_sequence"][0].get<double>() == doctest::Approx(0.63));
  CHECK(records[0]["per_sequence"][1].get<double>() == doctest::Approx(0.09));
}

TEST_CASE("oracle subcommands expose the reference implementations") {
  const auto match = run({"oracle", "match", "--input", i123_file(), "--matrix", matrix_file(),
                          "--pattern", "I2,I3"});
  CHECK(match.code == 0);
  const auto match_records = records_of(match.out);
  REQUIRE(match_records.size() == 1);
  CHECK(match_records[0]["pattern"] == "I2 I3");
  CHECK(match_records[0]["match"].get<double>() == doctest::Approx(0.63));
  CHECK(match_records[0]["values"] == json::array({0.0, 0.09, 0.63}));

  const std::string aaa = testutil::write_scratch("aaa.txt", "a a a\n");
  const auto periodic = run({"oracle", "periodic", "--input", aaa, "--min-rep", "3"});
  CHECK(periodic.code == 0);
  const auto periodic_records = records_of(periodic.out);
  REQUIRE(periodic_records.size() == 1);
  CHECK(periodic_records[0]["pattern"] == "a");
  CHECK(periodic_records[0]["total_reps"] == 3);

  const std::string ab = testutil::write_scratch("ab.txt", "a b\n");
  const auto surprise = run({"oracle", "surprise", "--input", ab, "--max-len", "1"});
  CHECK(surprise.code == 0);
  const auto surprise_records = records_of(surprise.out);
  REQUIRE(surprise_records.size() == 2);
  CHECK(surprise_records[0]["support"] == 1);
  CHECK(surprise_records[0]["gain"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("gen output is deterministic and honors plants") {
  const std::vector<std::string> args{"gen",    "--alphabet-size", "3",  "--length", "30",
                                      "--seed", "7",               "--plant", "I1,I2@3@12@5@0"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  REQUIRE(!first.out.empty());
  CHECK(first.out.back() == '\n');

  std::istringstream tokens(first.out);
  std::vector<std::string> symbols;
  std::string tok;
  while (tokens >> tok) symbols.push_back(tok);
  REQUIRE(symbols.size() == 30);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(symbols[12 + 3 * k] == "I1");
    CHECK(symbols[13 + 3 * k] == "I2");
  }

  const auto bad = run({"gen", "--alphabet-size", "3", "--length", "30", "--plant", "I1@3@12"});
  CHECK(bad.code == 1);
}

TEST_CASE("the output flag redirects result lines to a file") {
  const std::string path = (testutil::scratch_dir() / "redirected.jsonl").string();
  const auto direct = run({"surprise", "--input", skewed_file(), "--max-len", "1"});
  const auto redirected =
      run({"surprise", "--input", skewed_file(), "--max-len", "1", "--output", path});
  CHECK(redirected.code == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
}

TEST_CASE("exit codes separate usage errors from data errors") {
  const auto bad_config = run({"periodic", "--input", abc_file(), "--min-rep", "0"});
  CHECK(bad_config.code == 1);
  CHECK(bad_config.err.find("min_rep") != std::string::npos);

  const auto missing = run({"periodic", "--input", "/nonexistent/path.txt"});
  CHECK(missing.code == 2);

  const auto unknown_sub = run({"frobnicate"});
  CHECK(unknown_sub.code == 1);

  const auto no_sub = run({});
  CHECK(no_sub.code == 1);

  const auto bad_format =
      run({"periodic", "--input", abc_file(), "--format", "xml"});
  CHECK(bad_format.code == 1);

  const std::string bad_matrix = testutil::write_scratch(
      "bad_matrix.csv", "true\\observed,a,b\na,0.5,0.4\nb,0.5,0.5\n");
  const std::string ab_seq = testutil::write_scratch("ab_seq.txt", "a b\n");
  const auto unbalanced = run({"approx", "--input", ab_seq, "--matrix", bad_matrix,
                               "--min-match", "0.5"});
  CHECK(unbalanced.code == 2);

  const std::string empty_file = testutil::write_scratch("empty.txt", "# nothing here\n");
  const auto empty = run({"periodic", "--input", empty_file});
  CHECK(empty.code == 2);

  const auto bad_pattern = run({"approx", "--input", i123_file(), "--matrix", matrix_file(),
                                "--min-match", "0.5", "--report", "I9"});
  CHECK(bad_pattern.code == 2);
}

}  // TEST_SUITE
