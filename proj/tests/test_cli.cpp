#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _WIN32
#error "the CLI tests assume a POSIX std::system"
#endif
#include <sys/wait.h>

namespace {

const std::string kCli = RECON_CLI_PATH;
const std::filesystem::path kDataDir = RECON_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const auto capture = std::filesystem::temp_directory_path() /
                         ("recon_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        kCli + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.out = buf.str();
    std::filesystem::remove(capture);
    return result;
}

// last non-empty line of the captured output
std::string last_line(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    return last;
}

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("capacity").exit_code == 2);            // missing required options
    CHECK(run("capacity --channel bec --param 0.1").exit_code == 2);
    CHECK(run("crossover --sn 1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("capacity subcommand prints reference values") {
    auto res = run("capacity --channel biawgn --param 0.17");
    CHECK(res.exit_code == 0);
    CHECK(std::stod(last_line(res.out)) == doctest::Approx(0.113196951318452).epsilon(1e-9));

    res = run("capacity --channel bsc --param 0.48");
    CHECK(res.exit_code == 0);
    CHECK(std::stod(last_line(res.out)) ==
          doctest::Approx(1.15446400479819e-3).epsilon(1e-9));

    res = run("capacity --channel awgn --param 1.0");
    CHECK(res.exit_code == 0);
    CHECK(std::stod(last_line(res.out)) == doctest::Approx(0.5).epsilon(1e-12));

    // domain error surfaces as a runtime failure
    CHECK(run("capacity --channel bsc --param 1.5").exit_code == 1);
}

TEST_CASE("crossover subcommand, exact and approximate") {
    auto res = run("crossover --snr 0.001");
    CHECK(res.exit_code == 0);
    CHECK(std::stod(last_line(res.out)) ==
          doctest::Approx(0.487386439684980).epsilon(1e-9));

    res = run("crossover --snr 0.001 --approx");
    CHECK(res.exit_code == 0);
    CHECK(std::stod(last_line(res.out)) ==
          doctest::Approx(0.487384337389899).epsilon(1e-9));

    CHECK(run("crossover --snr 0").exit_code == 1);
}

TEST_CASE("simulate: JSON output, determinism, file output") {
    const auto code = (kDataDir / "hamming_7_4.alist").string();
    const auto json_path =
        (std::filesystem::temp_directory_path() / "recon_cli_stats.json").string();
    const std::string args = "simulate --strategy sd --code " + code +
                             " --snr 2.0 --frames 50 --seed 7 --out " + json_path;
    const auto r1 = run(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("# strategy=sd") != std::string::npos);
    CHECK(r1.out.find("\"code_id\": \"hamming_7_4.alist\"") != std::string::npos);
    CHECK(r1.out.find("\"frames\": 50") != std::string::npos);
    CHECK(r1.out.find("\"fer\"") != std::string::npos);

    const auto r2 = run(args);
    CHECK(last_line(r2.out) == last_line(r1.out));

    std::ifstream saved(json_path);
    std::ostringstream buf;
    buf << saved.rdbuf();
    CHECK(r1.out.find(buf.str().substr(0, buf.str().find('\n'))) != std::string::npos);
    std::filesystem::remove(json_path);

    // different seed changes the stream
    const auto r3 = run("simulate --strategy sd --code " + code +
                        " --snr 2.0 --frames 50 --seed 8");
    CHECK(r3.exit_code == 0);
}

TEST_CASE("simulate: hopeless hd channel reports fer near 1") {
    const auto code = (kDataDir / "hamming_7_4.alist").string();
    const auto res = run("simulate --strategy hd --code " + code +
                         " --snr 0.0025 --frames 200 --seed 3");
    CHECK(res.exit_code == 0);
    const auto pos = res.out.find("\"fer\": ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(res.out.substr(pos + 7)) > 0.5);
}

TEST_CASE("simulate: missing code file fails with exit 1") {
    CHECK(run("simulate --strategy sd --code /no/such/file.alist --snr 1").exit_code == 1);
    const auto bad =
        std::filesystem::temp_directory_path() / "recon_cli_bad.alist";
    std::ofstream(bad) << "3 2\n1 1\nnot-a-number\n";
    CHECK(run("simulate --strategy sd --code " + bad.string() + " --snr 1").exit_code == 1);
    std::filesystem::remove(bad);
}

TEST_CASE("RECON_SEED environment fallback") {
    const auto code = (kDataDir / "hamming_7_4.alist").string();
    const std::string base = "simulate --strategy sd --code " + code +
                             " --snr 2.0 --frames 20";
    ::setenv("RECON_SEED", "123", 1);
    const auto env_run = run(base);
    ::unsetenv("RECON_SEED");
    const auto flag_run = run(base + " --seed 123");
    CHECK(env_run.exit_code == 0);
    CHECK(last_line(env_run.out) == last_line(flag_run.out));
}

TEST_CASE("figure1 writes the CSV grid") {
    const auto csv =
        (std::filesystem::temp_directory_path() / "recon_cli_fig1.csv").string();
    auto res = run("figure1 --out " + csv + " --m 3 11 --grid 10");
    CHECK(res.exit_code == 0);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "m,p,ratio");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2 * 10);
    std::filesystem::remove(csv);

    CHECK(run("figure1 --out " + csv + " --grid 0").exit_code == 2);
    CHECK(run("figure1 --out /no/such/dir/f.csv").exit_code == 1);
}

TEST_CASE("report recomputes reference rows and flags the even-m outlier") {
    const auto res = run("report");
    // the m = 440 row fails by design: its quoted value assumes odd m
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("p(0.001)") != std::string::npos);
    CHECK(res.out.find("ratio(0.48, 440)") != std::string::npos);
    CHECK(res.out.find("FAIL") != std::string::npos);
    // exactly one failing row
    std::size_t fails = 0;
    for (std::size_t pos = 0; (pos = res.out.find("FAIL", pos)) != std::string::npos;
         ++pos)
        ++fails;
    CHECK(fails == 1);

    const auto json = run("report --json");
    CHECK(json.exit_code == 1);
    CHECK(json.out.find("\"name\": \"beta(0.17)\"") != std::string::npos);
    CHECK(json.out.find("\"pass\": false") != std::string::npos);

    CHECK(run("report --tolerance-scale 1e-9").exit_code == 1);
    CHECK(run("report --tolerance-scale 0").exit_code == 1);
}

TEST_CASE("config file supplies subcommand options; flags win") {
    const auto cfg =
        std::filesystem::temp_directory_path() / "recon_cli_cfg.ini";
    std::ofstream(cfg) << "[crossover]\nsnr=2.0\n";
    const auto from_cfg = run("--config " + cfg.string() + " crossover");
    CHECK(from_cfg.exit_code == 0);
    CHECK(std::stod(last_line(from_cfg.out)) ==
          doctest::Approx(0.0786496035251426).epsilon(1e-9));

    const auto overridden =
        run("--config " + cfg.string() + " crossover --snr 0.001");
    CHECK(overridden.exit_code == 0);
    CHECK(std::stod(last_line(overridden.out)) ==
          doctest::Approx(0.487386439684980).epsilon(1e-9));
    std::filesystem::remove(cfg);
}
