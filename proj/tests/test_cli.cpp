#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FADCAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = ::pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// value printed on the "name value" line of the capacity report
std::string field(const std::string& out, const std::string& name) {
    std::istringstream ss(out);
    std::string line;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string key, value;
        if ((ls >> key >> value) && key == name) return value;
    }
    return {};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("version and help exit cleanly") {
    auto v = run("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out == "fadcap 1.0.0\n");
    CHECK(run("--help").exit_code == 0);
    CHECK(run("capacity --help").exit_code == 0);
}

TEST_CASE("capacity reports twelve significant digits") {
    auto r = run("capacity --model gm-discrete --rho 0.9 --P 1");
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "c_p") == "0.638215207555");
    CHECK(field(r.out, "i_of_p") == "0.361784792445");
    CHECK(field(r.out, "u_p") == "4.76315789474");
    CHECK(field(r.out, "coherent") == "1");

    auto c = run("capacity --model clarke --P 1");
    CHECK(c.exit_code == 0);
    CHECK(field(c.out, "c_p") == "0.122350853765");
    CHECK(field(c.out, "u_p") == "inf");

    auto b = run("capacity --model block --T 1 --P 1");
    CHECK(b.exit_code == 0);
    CHECK(field(b.out, "c_p") == "0.30685281944");

    // limit conventions surface in the report
    auto z = run("capacity --model gm-discrete --rho 0.9 --P 0");
    CHECK(z.exit_code == 0);
    CHECK(field(z.out, "c_p") == "0");
    CHECK(field(z.out, "limit") == "exact");
}

TEST_CASE("tabulated spectra load from files") {
    auto r = run(std::string("capacity --model table-continuous --table ") +
                 FADCAP_TEST_DATA_DIR + "/triangle.csv --P 2");
    CHECK(r.exit_code == 0);
    CHECK(!field(r.out, "c_p").empty());
    auto bad = run("capacity --model table-continuous --table /no/such/file.csv --P 2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("flag errors exit with 2") {
    CHECK(run("capacity --model gm-discrete --P 1").exit_code == 2);       // missing --rho
    CHECK(run("capacity --model gm-discrete --rho 2 --P 1").exit_code == 2); // rho out of range
    CHECK(run("capacity --model nosuch --P 1").exit_code == 2);
    CHECK(run("capacity --model white").exit_code == 2); // missing --P
    CHECK(run("nosub").exit_code == 2);
    CHECK(run("sweep --model white --param Q --min 1 --max 2 --count 3").exit_code == 2);
    CHECK(run("sweep --model white --param P --min 2 --max 1 --count 3").exit_code == 2);
    CHECK(run("sweep --model white --param P --min 0 --max 1 --count 3 --scale log").exit_code == 2);
    CHECK(run("bounds --model white --p-avg 1 --beta 0.5").exit_code == 2);
}

TEST_CASE("unreachable quadrature tolerance exits with 3") {
    auto r = run("capacity --model gm-continuous --rho 0.9 --P 1 --quad-tol 1e-30");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify exits 0 on pass and 1 on a failed check") {
    auto ok = run("verify coherent --trials 10");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("# summary:") != std::string::npos);
    CHECK(ok.out.find(" 0 failed") != std::string::npos);
    CHECK(ok.out.find("pass") != std::string::npos);
    // n = 2 is far outside the asymptotic regime, so the limit check must
    // report an honest failure
    auto fail = run("verify szego --n 2");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("fail") != std::string::npos);
}

TEST_CASE("sweeps are deterministic and carry their metadata") {
    const std::string base = "sweep --model gm-discrete --rho 0.9 --param P "
                             "--min 0.01 --max 100 --count 7 --scale log";
    auto a = run(base + " -o /tmp/fadcap_cli_a.csv");
    auto b = run(base + " -o /tmp/fadcap_cli_b.csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    const std::string ta = slurp("/tmp/fadcap_cli_a.csv");
    CHECK(ta == slurp("/tmp/fadcap_cli_b.csv"));
    CHECK(ta.find("# fadcap 1.0.0\n") == 0);
    CHECK(ta.find("# model: gm-discrete rho=0.9") != std::string::npos);
    CHECK(ta.find("# sweep: param=P scale=log min=0.01 max=100 count=7") != std::string::npos);
    CHECK(ta.find("P,c_p,i_of_p,u_p,coherent") != std::string::npos);
    CHECK(ta.find("1,0.638215207555,0.361784792445,4.76315789474,1") != std::string::npos);
    std::remove("/tmp/fadcap_cli_a.csv");
    std::remove("/tmp/fadcap_cli_b.csv");

    // stdout route matches the file route
    auto s = run(base);
    CHECK(s.exit_code == 0);
    CHECK(s.out == ta);
}

TEST_CASE("rho and block sweeps swap the swept parameter") {
    auto r = run("sweep --model gm-discrete --param rho --min 0 --max 0.9 "
                 "--count 4 --scale linear --P 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rho,c_p,i_of_p,u_p,coherent") != std::string::npos);
    CHECK(r.out.find("# fixed: P=2") != std::string::npos);

    auto t = run("sweep --model block --param T --min 1 --max 1000 --count 4 --scale log --P 1");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("T,c_p") != std::string::npos);

    auto p = run("sweep --model gm-discrete --rho 0.9 --param p_avg --min 0.1 --max 10 "
                 "--count 4 --scale log --beta 2");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("p_avg,coherent_bound,energy_bound,fourthegy_bound") != std::string::npos);
}

TEST_CASE("bounds subcommand composes the three bounds") {
    auto r = run("bounds --model gm-discrete --rho 0.9 --p-avg 2 --beta 3");
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "coherent") == "2");
    CHECK(field(r.out, "peak") == "6");
    CHECK(!field(r.out, "energy").empty());
    CHECK(!field(r.out, "fourthegy").empty());
}
