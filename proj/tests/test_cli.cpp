#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::string kCli = MINPSC_CLI;
const std::string kData = MINPSC_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "\"" + kCli + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "minpsc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("solve fig1") {
  const Run text = run("solve " + kData + "/fig1.gr --algo exact");
  CHECK(text.code == 0);
  CHECK(text.out.find("total    26") != std::string::npos);

  const Run j = run("--format json solve " + kData + "/fig1.gr --algo exact");
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["total"] == 26);
  CHECK(doc["margin"] == 7);
  CHECK(doc["per_vertex_cost"] == json::array({5, 6, 6, 5, 1, 3}));

  for (const char* algo : {"auto", "brute-tree", "connector", "kernel+exact"}) {
    const Run r = run(std::string("--format json solve ") + kData + "/fig1.gr --algo " + algo);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["total"] == 26);
  }
  const Run cc = run("--format json solve " + kData + "/fig1.gr --algo cc --deterministic");
  CHECK(json::parse(cc.out)["total"] == 26);
  const Run mst = run("--format json solve " + kData + "/fig1.gr --algo mst");
  CHECK(json::parse(mst.out)["total"] == 27);
}

TEST_CASE("solution files round-trip through verify") {
  const fs::path sol = scratch("fig1_out.sol");
  CHECK(run("-q solve " + kData + "/fig1.gr --algo exact --out " + sol.string()).code == 0);
  const Run v = run("verify " + kData + "/fig1.gr " + sol.string());
  CHECK(v.code == 0);
  CHECK(v.out == "OK total 26 margin 7\n");
}

TEST_CASE("verify") {
  CHECK(run("verify " + kData + "/fig1.gr " + kData + "/fig1_opt.sol").out ==
        "OK total 26 margin 7\n");
  CHECK(run("verify " + kData + "/fig1.gr " + kData + "/fig1_mst.sol").out ==
        "OK total 27 margin 8\n");
  const Run bad = run("verify " + kData + "/fig1.gr " + kData + "/fig1_single.sol");
  CHECK(bad.code == 4);
  CHECK(bad.out.find("INFEASIBLE") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("solve").code == 2);
  CHECK(run("solve " + kData + "/fig1.gr --algo greedy").code == 2);
  CHECK(run("solve /nonexistent.gr").code == 2);

  const fs::path zero = scratch("zero.gr");
  write(zero, "p minpsc 2 1\ne 0 1 0\n");
  CHECK(run("solve " + zero.string()).code == 2);

  std::string path = "p minpsc 12 11\n";
  for (int v = 0; v + 1 < 12; ++v) path += "e " + std::to_string(v) + " " + std::to_string(v + 1) + " 1\n";
  const fs::path p12 = scratch("p12.gr");
  write(p12, path);
  CHECK(run("-q solve " + p12.string() + " --algo brute-tree").code == 3);
  CHECK(run("-q solve " + p12.string() + " --algo kernel+exact").code == 0);

  const fs::path broken = scratch("broken.json");
  write(broken, "{ not json");
  CHECK(run("bench " + broken.string()).code == 2);
}

TEST_CASE("annotated instances feed their floors as lower bounds") {
  const Run r = run("--format json solve " + kData + "/fig2_path.gr --algo connector");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["total"] == 1 + 4 + 5 + 5 + 4);
}

TEST_CASE("generate is deterministic") {
  const Run a = run("--seed 5 generate tree-plus-g --n 40 --g 3 --wmax 7");
  const Run b = run("--seed 5 generate tree-plus-g --n 40 --g 3 --wmax 7");
  const Run c = run("--seed 6 generate tree-plus-g --n 40 --g 3 --wmax 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.find("p minpsc 40 42") != std::string::npos);

  const fs::path out = scratch("grid.gr");
  CHECK(run("generate --out " + out.string() + " grid --rows 4 --cols 4").code == 0);
  CHECK(read(out).find("p minpsc 16 24") != std::string::npos);

  const Run sc = run("generate setcover --universe 3 --sets \"0,1;1,2\"");
  CHECK(sc.code == 0);
  CHECK(sc.out.find("p minpsc 6 6") != std::string::npos);
  CHECK(run("generate setcover --universe 3 --sets \"0,1\"").code == 1);
}

TEST_CASE("kernelize") {
  const fs::path inst = scratch("tp.gr");
  CHECK(run("--seed 3 generate --out " + inst.string() + " tree-plus-g --n 14 --g 2").code == 0);
  const fs::path reduced = scratch("tp_kernel.gr");
  const Run k = run("kernelize " + inst.string() + " --stats --out " + reduced.string());
  CHECK(k.code == 0);
  CHECK(k.out.find("offset ") == 0);
  CHECK(k.out.find("rules rr1=") != std::string::npos);
  const long offset = std::stol(k.out.substr(7));

  const Run full = run("--format json solve " + inst.string() + " --algo kernel+exact");
  const Run small = run("--format json solve " + reduced.string() + " --algo exact");
  REQUIRE(full.code == 0);
  REQUIRE(small.code == 0);
  CHECK(json::parse(full.out)["total"].get<long>() ==
        json::parse(small.out)["total"].get<long>() + offset);

  // A tree reduces to a single vertex and every algorithm returns all edges.
  const fs::path tree = scratch("tree.gr");
  CHECK(run("--seed 9 generate --out " + tree.string() + " tree-plus-g --n 10 --g 0").code == 0);
  long expected = -1;
  for (const char* algo : {"exact", "brute-tree", "connector", "kernel+exact", "mst", "auto"}) {
    const Run r = run(std::string("--format json solve ") + tree.string() + " --algo " + algo);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["edges"].size() == 9);
    if (expected < 0) expected = doc["total"].get<long>();
    CHECK(doc["total"].get<long>() == expected);
  }
}

TEST_CASE("bench") {
  const fs::path suite = scratch("suite.json");
  write(suite, json{{"instances",
                     json::array({json{{"kind", "tree-plus-g"}, {"n", 12}, {"g", 3}, {"seeds", {1, 2}}},
                                  json{{"kind", "file"}, {"path", kData + "/fig1.gr"}}})},
                    {"algos", {"exact", "cc"}},
                    {"deterministic", true}}
                   .dump());
  const fs::path csv = scratch("bench.csv");
  const Run r = run("bench " + suite.string() + " --out " + csv.string());
  CHECK(r.code == 0);
  const std::string text = read(csv);
  CHECK(count_lines(text) == 7);
  CHECK(text.rfind("instance,n,m,g,c,algo,cost,margin,time_ms,seed\n", 0) == 0);

  // Rows come in (instance, seed) pairs of exact then cc.
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> costs;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() == 10);
    costs.push_back(fields[6]);
  }
  REQUIRE(costs.size() == 6);
  for (std::size_t k = 0; k < 6; k += 2) CHECK(costs[k] == costs[k + 1]);
  CHECK(costs[4] == "26");
}

TEST_CASE("cc in deterministic mode matches tree enumeration") {
  for (int seed = 1; seed <= 5; ++seed) {
    const fs::path inst = scratch("cc" + std::to_string(seed) + ".gr");
    CHECK(run("--seed " + std::to_string(seed) + " generate --out " + inst.string() +
              " tree-plus-g --n 10 --g 4 --wmax 6")
              .code == 0);
    const Run cc = run("--format json solve " + inst.string() + " --algo cc --deterministic");
    const Run bt = run("--format json solve " + inst.string() + " --algo brute-tree");
    REQUIRE(cc.code == 0);
    REQUIRE(bt.code == 0);
    CHECK(json::parse(cc.out)["total"] == json::parse(bt.out)["total"]);
  }
}
