// End-to-end checks of the command line tool. Takes the binary path as the
// single argument, writes geometry configs to a scratch directory, and
// checks outputs, determinism, and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ++g_failures;                                                       \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << ": " #cond   \
                << "\n";                                                  \
    }                                                                     \
  } while (0)

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: test_cli <path-to-loglocal>\n";
    return 2;
  }
  const std::string bin = argv[1];
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "loglocal_cli_test";
  std::filesystem::create_directories(dir);

  write_file(dir / "p2.json", R"({"factors":[{"weights":[1,1,1]}]})");
  write_file(dir / "p112.json", R"({"factors":[{"weights":[1,1,2]}]})");
  write_file(dir / "p1xp1.json",
             R"({"factors":[{"weights":[1,1]},{"weights":[1,1]}]})");
  write_file(dir / "fake_p2.json",
             R"({"factors":[{"weights":[1,1,1],
                 "rays":[[3,-2],[0,1],[-3,1]],"group_order":3}]})");
  write_file(dir / "broken.json", R"({"factors":[{"weights":[1,1,)");
  write_file(dir / "invalid.json",
             R"({"factors":[{"weights":[1,1,1],
                 "rays":[[3,-2],[0,1],[-3,1]],"group_order":2}]})");

  // describe: derived quantities and validation
  {
    RunResult r = run(bin + " describe --geometry " + (dir / "p112.json").string());
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.find("\"total_dim\": 2") != std::string::npos);
    EXPECT(r.output.find("\"r\": 1") != std::string::npos);
    EXPECT(r.output.find("\"num_divisors\": 3") != std::string::npos);
    EXPECT(r.output.find("\"point_constant\": \"2\"") != std::string::npos);
    EXPECT(r.output.find("\"group_orders_recomputed\": [\n      \"1\"\n    ]") !=
           std::string::npos);
    EXPECT(r.output.find("\"ok\": true") != std::string::npos);
  }
  {
    RunResult r = run(bin + " describe --geometry " + (dir / "fake_p2.json").string());
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.find("\"3\"") != std::string::npos);  // recomputed |G|
  }

  // malformed JSON: exit 2 with a parse diagnostic
  {
    RunResult r = run(bin + " describe --geometry " + (dir / "broken.json").string());
    EXPECT(r.exit_code == 2);
    EXPECT(r.output.find("parse error") != std::string::npos);
  }

  // declared group order contradicts the rays: describe exits 2, verify too
  {
    RunResult r = run(bin + " describe --geometry " + (dir / "invalid.json").string());
    EXPECT(r.exit_code == 2);
    EXPECT(r.output.find("\"ok\": false") != std::string::npos);
    EXPECT(r.output.find("group.index") != std::string::npos);
    RunResult v =
        run(bin + " verify --geometry " + (dir / "invalid.json").string() + " --dmax 2");
    EXPECT(v.exit_code == 2);
  }

  // verify: all matches, exit 0
  {
    RunResult r = run(bin + " verify --geometry " + (dir / "p2.json").string() +
                      " --dmax 4");
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.find("\"mismatches\": 0") != std::string::npos);
    EXPECT(r.output.find("\"match\": true") != std::string::npos);
    EXPECT(r.output.find("\"match\": false") == std::string::npos);
  }

  // log: degenerate row carries zeros
  {
    RunResult r = run(bin + " log --geometry " + (dir / "p1xp1.json").string() +
                      " --dmax 2 --format json");
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.find("\"d\": [\n        \"1\",\n        \"0\"\n      ]") !=
           std::string::npos);
    EXPECT(r.output.find("\"Rp\": \"0\"") != std::string::npos);
    EXPECT(r.output.find("\"Rq\": \"0\"") != std::string::npos);
  }

  // local csv: fixed header, rational strings
  {
    RunResult r = run(bin + " local --geometry " + (dir / "p2.json").string() +
                      " --dmax 2 --format csv");
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.rfind("d,e,N,p,q\n", 0) == 0);
    EXPECT(r.output.find("-1/8") != std::string::npos);
  }

  // per-factor dmax and --out
  {
    std::string out_file = (dir / "table.csv").string();
    RunResult r = run(bin + " verify --geometry " + (dir / "p1xp1.json").string() +
                      " --dmax 2,1 --format csv --out " + out_file);
    EXPECT(r.exit_code == 0);
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    int rows = 0;
    for (char ch : text)
      if (ch == '\n') ++rows;
    EXPECT(rows == 6);  // header + 5 degrees
    RunResult bad = run(bin + " verify --geometry " + (dir / "p1xp1.json").string() +
                        " --dmax 2,2,2");
    EXPECT(bad.exit_code == 2);
  }

  // byte determinism of a full verify run
  {
    std::string cmd = bin + " verify --geometry " + (dir / "p112.json").string() +
                      " --dmax 4";
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    EXPECT(a.exit_code == 0);
    EXPECT(a.output == b.output);
  }

  // selftest
  {
    RunResult r = run(bin + " selftest");
    EXPECT(r.exit_code == 0);
    EXPECT(r.output.find("selftest passed") != std::string::npos);
  }

  // unknown subcommand / missing options are config errors
  {
    EXPECT(run(bin + " frobnicate").exit_code == 2);
    EXPECT(run(bin + " log --dmax 2").exit_code == 2);
    EXPECT(run(bin + " log --geometry " + (dir / "p2.json").string()).exit_code == 2);
  }

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << g_failures << " failures\n";
  return 1;
}
