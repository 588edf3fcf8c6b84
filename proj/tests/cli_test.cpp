#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kohnert/cli.hpp"

using kohnert::run_cli;

namespace {

struct CliOutcome {
  int exit_code;
  std::string out;
  std::string err;
};

CliOutcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::istringstream is(text);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  return last;
}

std::string golden_file(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("enumerate counts") {
  CHECK(last_line(run({"enumerate", "--family", "km", "--input", "0,3,2"}).out) == "count: 9");
  CHECK(last_line(run({"enumerate", "--family", "sct", "--input", "2,3,2"}).out) == "count: 7");
  CHECK(last_line(run({"enumerate", "--family", "kt", "--input", ""}).out) == "count: 1");
  CHECK(last_line(run({"enumerate", "--family", "qkt", "--input", "0,3,2"}).out) == "count: 4");
  CHECK(last_line(run({"enumerate", "--family", "ssyt", "--input", "3,2", "--n", "3"}).out) ==
        "count: 15");
  CHECK(last_line(run({"enumerate", "--family", "threads", "--input", "0,3,2"}).out) ==
        "count: 9");
}

TEST_CASE("expand output") {
  const auto r = run({"expand", "--target", "key-monomial", "--input", "0,0,0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "+ 1 x^{0,0,0}\n");
  const auto slides = run({"expand", "--target", "key-slide", "--input", "0,3,2"});
  CHECK(slides.out == "+ 1 F_{0,3,2}\n+ 1 F_{1,3,1}\n+ 1 F_{2,2,1}\n+ 1 F_{2,3,0}\n");
  const auto qkeys = run({"expand", "--target", "key-qkey", "--input", "0,2,3,2"});
  CHECK(qkeys.out == "+ 1 Q_{0,2,3,2}\n+ 1 Q_{0,3,2,2}\n+ 1 Q_{2,2,3,0}\n");
}

TEST_CASE("stats output") {
  const auto r = run({"stats", "--input", "3,2", "--m-max", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sigma: 1") != std::string::npos);
  CHECK(r.out.find("eta: 2") != std::string::npos);
  CHECK(r.out.find("profile: 1 4 5 5") != std::string::npos);
  const auto absent = run({"stats", "--input", "0,3,0,2,2"});
  CHECK(absent.out.find("lsort: (absent)") != std::string::npos);
  CHECK(absent.out.find("sigma: 1") != std::string::npos);
  CHECK(absent.out.find("eta: 3") != std::string::npos);
  CHECK(absent.out.find("profile") == std::string::npos);
  CHECK(run({"stats", "--input", "3,2", "--m-max", "1"}).exit_code == 2);
}

TEST_CASE("verify golden passes") {
  const auto r = run({"verify", "--suite", "golden"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
}

TEST_CASE("verify suites at reduced bounds pass") {
  CHECK(run({"verify", "--suite", "identities", "--max-weight", "4", "--max-length", "3"})
            .exit_code == 0);
  CHECK(run({"verify", "--suite", "bijections", "--max-weight", "4", "--max-length", "3"})
            .exit_code == 0);
  CHECK(run({"verify", "--suite", "stability", "--max-weight", "3", "--max-length", "2"})
            .exit_code == 0);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"enumerate", "--family", "nope", "--input", "1"}).exit_code == 2);
  CHECK(run({"enumerate", "--family", "ssyt", "--input", "3,2"}).exit_code == 2);  // missing --n
  CHECK(run({"enumerate", "--family", "ssyt", "--input", "2,3", "--n", "3"}).exit_code == 2);
  CHECK(run({"expand", "--target", "key-monomial", "--input", "1,-2"}).exit_code == 2);
  CHECK(run({"expand", "--badflag", "x"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  const auto r = run({"enumerate", "--family", "nope", "--input", "1"});
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--family", "km", "--input", "0,3,2"},
           {"enumerate", "--family", "kt", "--input", "0,2,3", "--format", "structured"},
           {"expand", "--target", "qkey-slide", "--input", "0,0,2,3,2"},
           {"verify", "--suite", "stability", "--max-weight", "3", "--max-length", "2",
            "--format", "structured"}}) {
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("text and structured renderings agree") {
  // Expansion: parse "+ c F_{i,j,...}" lines and compare with the JSON terms.
  const auto text = run({"expand", "--target", "key-slide", "--input", "0,2,3,2"});
  const auto structured =
      run({"expand", "--target", "key-slide", "--input", "0,2,3,2", "--format", "structured"});
  std::multiset<std::pair<std::vector<int>, long long>> from_text, from_json;
  {
    std::istringstream is(text.out);
    std::string line;
    while (std::getline(is, line)) {
      REQUIRE(line.rfind("+ ", 0) == 0);
      std::istringstream ls(line.substr(2));
      long long coeff = 0;
      std::string tag;
      ls >> coeff >> tag;
      const auto open = tag.find('{');
      const auto close = tag.find('}');
      REQUIRE(open != std::string::npos);
      REQUIRE(close != std::string::npos);
      const auto index =
          kohnert::WeakComposition::parse(tag.substr(open + 1, close - open - 1)).parts();
      from_text.insert({index, coeff});
    }
  }
  {
    std::istringstream is(structured.out);
    std::string line;
    while (std::getline(is, line)) {
      const auto record = nlohmann::json::parse(line);
      from_json.insert({record["index"].get<std::vector<int>>(), record["coeff"].get<long long>()});
    }
  }
  CHECK(from_text == from_json);

  // Enumeration: structured cell lists must match the library's own output.
  const auto km = run({"enumerate", "--family", "km", "--input", "0,3,2", "--format", "structured"});
  std::istringstream is(km.out);
  std::string line;
  std::size_t records = 0;
  std::optional<nlohmann::json> count_record;
  while (std::getline(is, line)) {
    const auto record = nlohmann::json::parse(line);
    if (record.contains("count")) {
      count_record = record;
      continue;
    }
    ++records;
    CHECK(record.contains("cells"));
  }
  REQUIRE(count_record.has_value());
  CHECK((*count_record)["count"].get<std::size_t>() == records);
  CHECK(records == 9);
}

TEST_CASE("golden files") {
  CHECK(run({"enumerate", "--family", "km", "--input", "0,3,2"}).out ==
        golden_file("enumerate_km_032.txt"));
  CHECK(run({"enumerate", "--family", "sct", "--input", "2,3,2"}).out ==
        golden_file("enumerate_sct_232.txt"));
  CHECK(run({"expand", "--target", "key-monomial", "--input", "0,3,2"}).out ==
        golden_file("expand_key_monomial_032.txt"));
  CHECK(run({"enumerate", "--family", "qkt", "--input", "0,0,3,2"}).out ==
        golden_file("enumerate_qkt_0032.txt"));
}
