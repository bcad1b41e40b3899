#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#ifndef FRACDIFF_BIN
#error "FRACDIFF_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(FRACDIFF_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    RunResult r;
    r.out = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> data_lines(const std::string& out)
{
    std::vector<std::string> lines;
    std::stringstream ss(out);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<double> split_csv(const std::string& line)
{
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(std::stod(item));
        } catch (...) {
            vals.push_back(std::nan(""));
        }
    }
    return vals;
}

}  // namespace

TEST_CASE("eval: row counts and header")
{
    auto r = run("eval mwright --nu 0.25 --x 0:4:0.1");
    CHECK(r.exit_code == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 42);  // header + 41 rows
    CHECK(lines[0] == "x,value,err_estimate,method");
}

TEST_CASE("eval: exponential values")
{
    auto r = run("eval ml --nu 1 --x 0:1:0.5");
    CHECK(r.exit_code == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(split_csv(lines[1])[1] == doctest::Approx(1.0));
    CHECK(split_csv(lines[2])[1] == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(split_csv(lines[3])[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("eval: invalid order exits 2")
{
    CHECK(run("eval mwright --nu 1.5 --x 0:1:0.5").exit_code == 2);
    CHECK(run("eval nosuchfn --nu 0.5 --x 0:1:0.5").exit_code == 2);
    CHECK(run("eval ml --nu 0.5 --x 5:1:0.5").exit_code == 2);
}

TEST_CASE("solve: row count matches the grid")
{
    auto r = run("solve plane-source --beta 0.5 --D 1 --ntot 1 --x -5:5:0.1 --t 0.5,1,2");
    CHECK(r.exit_code == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 304);  // header + 101 x 3
    CHECK(lines[0] == "x,t,c");
    // metadata present
    CHECK(r.out.find("# problem: plane_source") != std::string::npos);
    CHECK(r.out.find("# truncation_error_estimate:") != std::string::npos);
}

TEST_CASE("solve: signaling boundary row")
{
    auto r = run("solve signaling --beta 1 --D 1 --c0 1 --x 0:5:0.1 --t 1");
    CHECK(r.exit_code == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() >= 2);
    auto first = split_csv(lines[1]);
    CHECK(first[0] == 0.0);
    CHECK(first[2] == doctest::Approx(1.0));
}

TEST_CASE("solve: finite sheet stays within the steady bound")
{
    auto r = run("solve finite-equal --beta 0.75 --L 1 --c0 1 --D 1 --x -1:1:0.05 --t 10");
    CHECK(r.exit_code == 0);
    for (const auto& line : data_lines(r.out)) {
        if (line[0] == 'x')
            continue;
        auto v = split_csv(line);
        CHECK(v[2] >= -1e-9);
        CHECK(v[2] <= 1.0 + 1e-9);
    }
}

TEST_CASE("solve: invalid parameters exit 2")
{
    CHECK(run("solve plane-source --beta 2.5 --x -1:1:0.5 --t 1").exit_code == 2);
    CHECK(run("solve nosuch --x -1:1:0.5 --t 1").exit_code == 2);
}

TEST_CASE("verify: selection and exit codes")
{
    auto good = run("verify --only invlap_roundtrip");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("PASS") != std::string::npos);

    CHECK(run("verify --only nosuchcheck").exit_code == 2);
    CHECK(run("verify").exit_code == 2);

    // an impossible tolerance forces a failing exit
    CHECK(run("verify --only invlap_roundtrip --tol invlap_roundtrip=1e-30").exit_code == 1);
}

TEST_CASE("verify: json report is written")
{
    const std::string path = "/tmp/fracdiff_cli_report.json";
    std::remove(path.c_str());
    auto r = run("verify --only caputo_rules --json " + path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    fclose(f);
    std::remove(path.c_str());
}

TEST_CASE("figure: known ids emit labeled CSV, unknown ids exit 2")
{
    auto r = run("figure fig6");
    CHECK(r.exit_code == 0);
    auto lines = data_lines(r.out);
    CHECK(lines[0] == "beta,x,t,c");
    CHECK(lines.size() > 100);
    CHECK(r.out.find("c1=1") != std::string::npos);

    CHECK(run("figure fig9").exit_code == 2);
}

TEST_CASE("CSV output is locale independent and reparsable")
{
    auto r = run("eval fracerfc --nu 0.5 --x -2:2:0.5");
    CHECK(r.exit_code == 0);
    for (const auto& line : data_lines(r.out)) {
        if (line[0] == 'x')
            continue;
        CHECK(line.find(';') == std::string::npos);
        auto v = split_csv(line);
        REQUIRE(v.size() == 4);
        CHECK(std::isfinite(v[0]));
        CHECK(std::isfinite(v[1]));
    }
}
