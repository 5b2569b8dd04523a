#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        std::random_device rd;
        auto p = fs::temp_directory_path() / ("arbor-cli-" + std::to_string(rd()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path &p, const std::string &text)
{
    std::ofstream(p) << text;
}

Run arbor(const std::string &args)
{
    const auto out = scratch() / "stdout", err = scratch() / "stderr";
    std::string cmd = std::string("\"") + ARBOR_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                      err.string() + "\"";
    int raw = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string file(const std::string &name)
{
    return "\"" + (scratch() / name).string() + "\"";
}

} // namespace

TEST_CASE("gen writes the graph format")
{
    auto r = arbor("gen double-wheel 5");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("p 7 15\n", 0) == 0);
    CHECK(arbor("gen complete 4 -o " + file("k4.g")).code == 0);
    CHECK(slurp(scratch() / "k4.g").rfind("p 4 6\n", 0) == 0);
    auto roles = arbor("gen double-wheel 4 --roles " + file("dw4.roles"));
    CHECK(roles.code == 0);
    CHECK_FALSE(slurp(scratch() / "dw4.roles").empty());
    CHECK(arbor("gen random 9 0.3 --seed 4").out == arbor("gen random 9 0.3 --seed 4").out);
}

TEST_CASE("param prints the optimum")
{
    arbor("gen complete 4 -o " + file("k4.g"));
    auto r = arbor("param " + file("k4.g") + " -c induced-forest");
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
    CHECK(arbor("param " + file("k4.g") + " -c if").out == "6\n");
    CHECK(arbor("param " + file("k4.g") + " -c forest -m partition").out == "2\n");
    auto with_cert = arbor("param " + file("k4.g") + " -c wif --cert " + file("k4.cert"));
    CHECK(with_cert.code == 0);
    CHECK(slurp(scratch() / "k4.cert").rfind("c cover wif 3\n", 0) == 0);
    CHECK(arbor("certify " + file("k4.g") + " " + file("k4.cert")).code == 0);
}

TEST_CASE("decide exit codes")
{
    arbor("gen double-wheel 5 -o " + file("dw5.g"));
    auto yes = arbor("decide " + file("dw5.g") + " -c if -k 7");
    CHECK(yes.code == 0);
    CHECK(yes.out.rfind("c cover if", 0) == 0);
    CHECK(arbor("decide " + file("dw5.g") + " -c if -k 6").code == 1);
    arbor("gen complete 7 -o " + file("k7.g"));
    CHECK(arbor("--budget-nodes 20 param " + file("k7.g") + " -c if").code == 2);
    CHECK(arbor("decide " + file("dw5.g") + " -c if -k 7 --load-cap 1:1 --load-cap 2:1").code == 1);
}

TEST_CASE("usage and format errors")
{
    CHECK(arbor("").code == 64);
    CHECK(arbor("frobnicate").code == 64);
    CHECK(arbor("gen no-such-family 3").code == 64);
    arbor("gen complete 3 -o " + file("k3.g"));
    CHECK(arbor("param " + file("k3.g") + " -c not-a-class").code == 64);
    spit(scratch() / "broken.g", "p 3 2\ne 1 2\ne 2 9\n");
    CHECK(arbor("param " + file("broken.g")).code == 65);
    spit(scratch() / "garbage.g", "hello\n");
    CHECK(arbor("param " + file("garbage.g")).code == 65);
    CHECK(arbor("param " + file("absent.g")).code == 65);
}

TEST_CASE("certify reports what is wrong")
{
    arbor("gen complete 3 -o " + file("k3.g"));
    spit(scratch() / "short.cert", "c cover forest 1\nf 1 1-2 2-3\n");
    auto r = arbor("certify " + file("k3.g") + " " + file("short.cert"));
    CHECK(r.code == 1);
    CHECK(r.out.find("edge 1-3 is not covered") != std::string::npos);
    spit(scratch() / "cyclic.cert", "c cover forest 1\nf 1 1-2 2-3 1-3\n");
    auto c = arbor("certify " + file("k3.g") + " " + file("cyclic.cert"));
    CHECK(c.code == 1);
    CHECK(c.out.find("part 1 violates its class") != std::string::npos);
}

TEST_CASE("build commands verify their output")
{
    arbor("gen complete-bipartite 3 4 -o " + file("k34.g"));
    CHECK(arbor("param " + file("k34.g") + " -c if --cert " + file("k34.if")).code == 0);
    auto layers = arbor("build layers " + file("k34.g") + " --cert " + file("k34.if") + " --modulus 3 -o " +
                        file("k34.isf"));
    CHECK(layers.code == 0);
    CHECK(layers.err.find("verified") != std::string::npos);
    CHECK(arbor("certify " + file("k34.g") + " " + file("k34.isf")).code == 0);
    for (const char *method : {"degen", "acyclic-pairs", "acyclic-matchings", "minor-coloring"})
        CHECK_MESSAGE(arbor(std::string("build ") + method + " " + file("k34.g")).code == 0, method);
    CHECK(arbor("build layers " + file("k34.g")).code == 64);
}

TEST_CASE("dot output")
{
    arbor("gen path 4 -o " + file("p4.g"));
    auto r = arbor("dot " + file("p4.g"));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph G {", 0) == 0);
    CHECK(r.out.find("1 -- 2") != std::string::npos);
    CHECK(r.out.find("3 -- 4") != std::string::npos);
}

TEST_CASE("chain lists every parameter")
{
    arbor("gen cycle 5 -o " + file("c5.g"));
    auto r = arbor("chain " + file("c5.g"));
    CHECK(r.code == 0);
    for (const char *p : {"a ", "wia ", "ia ", "sa ", "wisa ", "isa ", "chi' ", "chi'_s ", "chi_acyc "})
        CHECK_MESSAGE(("\n" + r.out).find(std::string("\n") + p) != std::string::npos, p);
    CHECK(r.out.find("violation") == std::string::npos);
}
