// End-to-end checks of the installed binary: documented example outputs,
// JSON envelope round-trips, and exit codes. The binary path arrives in
// CYCLOZETA_BIN (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("CYCLOZETA_BIN");
  REQUIRE(bin != nullptr);
  const std::string command = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("published example outputs") {
  CHECK(strip(run("series --n 5 --terms 6 --format text").out) ==
        "1 + 1/5^s + 4/11^s + 1/16^s + 1/25^s + 4/31^s + 4/41^s");
  CHECK(strip(run("residue --n 4 --digits 6").out) == "0.785398");
  const auto euler = run("euler --n 20 --prime 2 --method both");
  CHECK(euler.exit_code == 0);
  CHECK(euler.out.find("m=1") != std::string::npos);
  CHECK(euler.out.find("methods agree") != std::string::npos);
}

TEST_CASE("json envelopes parse and round-trip") {
  for (const std::string args :
       {std::string("series --n 5 --limit 200 --format json"),
        std::string("residue --n 12 --with-factors --format json"),
        std::string("tables --which ramified --n 12 --format json"),
        std::string("characters --n 20 --format json"),
        std::string("euler --n 20 --prime 5 --method both --format json"),
        std::string("oracle --n 3 --k 7 --format json"),
        std::string("oracle-sweep --n 4 --max-k 10 --compare --format json"),
        std::string("rate --n 3 --x 1000 --format json"),
        std::string("verify-paper --format json")}) {
    CAPTURE(args);
    const auto result = run(args);
    REQUIRE(result.exit_code == 0);
    const json envelope = json::parse(result.out);
    CHECK(envelope.contains("command"));
    CHECK(envelope["version"] == "1.0.0");
    CHECK(envelope.contains("payload"));
    // Round-trip: parse(emit(x)) == x.
    CHECK(json::parse(envelope.dump()) == envelope);
  }
}

TEST_CASE("series json payload matches the documented shape") {
  const json envelope =
      json::parse(run("series --n 11 --limit 30 --format json").out);
  const json& payload = envelope["payload"];
  CHECK(payload["n"] == 11);
  CHECK(payload["interpretation"] == "colour-counts");
  CHECK(payload["limit"] == 30);
  const json expected = json::array({json::array({1, 1}), json::array({11, 1}),
                                     json::array({23, 10})});
  CHECK(payload["nonzero"] == expected);
}

TEST_CASE("fan-out over the full list") {
  const json envelope =
      json::parse(run("tables --which basic --n all --format json").out);
  CHECK(envelope["payload"]["rows"].size() == 29);
  const json residues =
      json::parse(run("residue --n all --format json").out);
  CHECK(residues["payload"]["rows"].size() == 29);
}

TEST_CASE("exit codes") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("series").exit_code == 2);                      // missing --n
  CHECK(run("series --n 39 --limit 10").exit_code == 2);    // needs allow-any
  CHECK(run("series --n 10 --limit 10").exit_code == 2);    // 2 mod 4
  CHECK(run("series --n 3 --limit 200000000").exit_code == 3);
  CHECK(run("oracle --n 5 --k 60 --max-nodes 5").exit_code == 3);
  CHECK(run("verify-paper").exit_code == 0);
  CHECK(run("series --n 39 --limit 10 --allow-any").exit_code == 0);
}

TEST_CASE("CYCLOZETA_MAX_NODES overrides the oracle budget") {
  const char* bin = std::getenv("CYCLOZETA_BIN");
  REQUIRE(bin != nullptr);
  const std::string command = std::string("CYCLOZETA_MAX_NODES=5 ") + bin +
                              " oracle --n 5 --k 60 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buffer;
  while (fread(buffer.data(), 1, buffer.size(), pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 3);
  // An explicit flag wins over the environment.
  const std::string flagged = std::string("CYCLOZETA_MAX_NODES=5 ") + bin +
                              " oracle --n 5 --k 11 --max-nodes 100000";
  FILE* pipe2 = popen(flagged.c_str(), "r");
  REQUIRE(pipe2 != nullptr);
  std::string out;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe2)) > 0) {
    out.append(buffer.data(), got);
  }
  CHECK(WEXITSTATUS(pclose(pipe2)) == 0);
  CHECK(out.find("a_5(11) = 4") != std::string::npos);
}

TEST_CASE("oracle vs series disagreement is impossible on the sweep") {
  const json envelope = json::parse(
      run("oracle-sweep --n 8 --max-k 20 --compare --format json").out);
  CHECK(envelope["payload"]["all_agree"] == true);
}

TEST_CASE("shipped schema file exists and is valid json") {
  const char* path = std::getenv("CYCLOZETA_SCHEMA");
  REQUIRE(path != nullptr);
  std::ifstream in(path);
  REQUIRE(in.good());
  const json schema = json::parse(in);
  CHECK(schema.contains("definitions"));
  CHECK(schema["properties"]["version"].is_object());
}
