// End-to-end tests of the command-line binary. Invoked as:
//   test_cli <path-to-cli-binary> <source-dir>
// Runs the binary against the fixture files and checks exit codes, key
// output lines, and byte-identical reruns.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void check(const std::string& what, bool ok) {
    std::cout << (ok ? "pass: " : "FAIL: ") << what << "\n";
    if (!ok) ++failures;
}

struct Result {
    int exit_code;
    std::string output;
};

Result run(const std::string& cmd) {
    const std::string tmp = "cli_out.tmp";
    const int status = std::system((cmd + " > " + tmp + " 2>&1").c_str());
    std::ifstream in(tmp, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
#ifdef _WIN32
    const int code = status;
#else
    const int code = WEXITSTATUS(status);
#endif
    return {code, ss.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <cli-binary> <source-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string src = argv[2];
    const std::string fx = src + "/tests/fixtures";

    // Enumeration counts.
    Result r = run(cli + " stt " + fx + "/a3.quiver");
    check("stt a3 exits 0", r.exit_code == 0);
    check("stt a3 reports 14 pairs", contains(r.output, "total: 14"));
    Result r1 = run(cli + " stt " + fx + "/one_arrow.quiver");
    check("stt one-arrow reports 5 pairs", contains(r1.output, "total: 5"));

    // Determinism: byte-identical rerun.
    Result r2 = run(cli + " stt " + fx + "/a3.quiver");
    check("stt output is byte-identical across runs", r.output == r2.output);

    // CSV format.
    Result rc = run(cli + " --format csv stt " + fx + "/a3.quiver");
    check("stt csv has a header row", contains(rc.output, "module,excluded,torsion_class"));

    // Hasse DOT: 14 nodes, 21 edges.
    Result rh = run(cli + " --format dot hasse " + fx + "/a3.quiver");
    check("hasse dot exits 0", rh.exit_code == 0);
    int nodes = 0, edges = 0;
    {
        std::istringstream in(rh.output);
        std::string line;
        while (std::getline(in, line)) {
            if (contains(line, "->"))
                ++edges;
            else if (contains(line, "\"") && contains(line, ";"))
                ++nodes;
        }
    }
    check("hasse dot has 14 nodes", nodes == 14);
    check("hasse dot has 21 edges", edges == 21);
    check("hasse dot is well-formed", contains(rh.output, "digraph hasse {") &&
                                          contains(rh.output, "}\n"));

    // Gluing report.
    Result rg = run(cli + " --format csv glue " + fx + "/a3.glued");
    check("glue exits 0", rg.exit_code == 0);
    check("glue reports the named approximation", contains(rg.output, "3/1/2 -> 3/1"));
    check("glue reports ten rows",
          std::count(rg.output.begin(), rg.output.end(), '\n') >= 11);

    // Reduction, Bongartz, endomorphism quotient.
    Result rr = run(cli + " reduce " + fx + "/a3.glued " + fx + "/x_tilting.module");
    check("reduce exits 0", rr.exit_code == 0);
    check("reduce shows the two-element interval",
          contains(rr.output, "1⊕1/2⊕3/1/2") && contains(rr.output, "1⊕1/2"));
    Result rb = run(cli + " bongartz " + fx + "/a3.glued " + fx + "/x_tilting.module");
    check("bongartz completion", contains(rb.output, "completion: 1⊕1/2⊕3/1/2"));
    Result rq = run(cli + " cprime " + fx + "/a3.glued " + fx + "/x_tilting.module");
    check("cprime matches", rq.exit_code == 0 && contains(rq.output, "match"));
    Result re = run(cli + " bongartz " + fx + "/a3.glued " + fx + "/x_explicit.module");
    check("explicit-matrix module literal parses to the same module",
          contains(re.output, "completion: 1⊕1/2⊕3/1/2"));

    // Maximal green sequences.
    Result rm = run(cli + " mgs " + fx + "/one_arrow.quiver");
    check("mgs reports both sequences",
          contains(rm.output, "1 2") && contains(rm.output, "2 2/1 1") &&
              contains(rm.output, "total: 2"));

    // verify_paper.
    Result rv = run(cli + " verify_paper");
    check("verify_paper exits 0", rv.exit_code == 0);
    check("verify_paper reports success", contains(rv.output, "all checks passed"));
    Result rv3 = run(cli + " --field 3 verify_paper");
    check("verify_paper passes over F_3", rv3.exit_code == 0);

    // Error exit codes.
    {
        std::ofstream f("cyclic.quiver");
        f << "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n";
    }
    check("cyclic quiver exits 2", run(cli + " stt cyclic.quiver").exit_code == 2);
    std::remove("cyclic.quiver");
    {
        std::ofstream f("kron.quiver");
        f << "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n";
    }
    check("representation-infinite exits 3",
          run(cli + " --cap 8 stt kron.quiver").exit_code == 3);
    std::remove("kron.quiver");
    {
        std::ofstream f("bad.quiver");
        f << "nonsense\n";
    }
    Result rbad = run(cli + " stt bad.quiver");
    check("malformed file exits 2 with a line diagnostic",
          rbad.exit_code == 2 && contains(rbad.output, "line 1"));
    std::remove("bad.quiver");
    {
        std::ofstream f("wrongdir.glued");
        f << "[B]\nvertices: 1\n[C]\nvertices: 2\n[M]\narrow m: 1 -> 2\n";
    }
    check("wrong-direction connecting arrow exits 2",
          run(cli + " glue wrongdir.glued").exit_code == 2);
    std::remove("wrongdir.glued");
    check("missing file exits 2", run(cli + " stt does_not_exist.quiver").exit_code == 2);

    std::cout << (failures == 0 ? "test_cli: all passed\n"
                                : "test_cli: " + std::to_string(failures) + " failures\n");
    return failures == 0 ? 0 : 1;
}
