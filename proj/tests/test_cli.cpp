#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "oracles.hpp"

// End-to-end checks driving the installed binary through a shell. The binary
// path comes in as a compile definition from the build.

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string shell_quote(const std::string& text) { return "'" + text + "'"; }

CliResult run_cli(const testutil::TempDir& tmp, const std::string& args) {
    static int serial = 0;
    const auto out_path = tmp.file("stdout_" + std::to_string(serial));
    const auto err_path = tmp.file("stderr_" + std::to_string(serial));
    ++serial;
    const std::string command = std::string(KNOWPATH_CLI_PATH) + " " + args + " >" +
                                shell_quote(out_path.string()) + " 2>" +
                                shell_quote(err_path.string());
    const int status = std::system(command.c_str());
    CliResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = testutil::read_file(out_path);
    result.err = testutil::read_file(err_path);
    return result;
}

// Writes the five-field route fixture and returns the shared global flags.
std::string route_inputs(const testutil::TempDir& tmp) {
    testutil::write_taxonomy_csv(tmp.file("taxonomy.csv"), testutil::route_fixture_fields());
    testutil::write_counts_csv(tmp.file("citations.csv"), testutil::route_fixture_counts(),
                               testutil::route_fixture_fields());
    return "--taxonomy " + shell_quote(tmp.file("taxonomy.csv").string()) + " --citations " +
           shell_quote(tmp.file("citations.csv").string());
}

std::string out_flag(const testutil::TempDir& tmp, const std::string& name) {
    return " --out " + shell_quote(tmp.file(name).string());
}

} // namespace

TEST_CASE("indicators subcommand writes the three tables") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);
    CliResult result = run_cli(tmp, inputs + out_flag(tmp, "run") + " indicators");
    CHECK(result.code == 0);
    CHECK(result.err.empty()); // the fixture is fully connected, no warning
    const std::string dir = tmp.file("run").string();
    CHECK(result.out == "wrote " + dir + "/aspl.csv\nwrote " + dir + "/aspw.csv\nwrote " + dir +
                            "/oisp.csv\n");
    const std::string aspl = testutil::read_file(tmp.file("run/aspl.csv"));
    CHECK(aspl.find("field,class,division,aspl_source,aspl_dest,spl_sd_source,spl_max_source\n") !=
          std::string::npos);
    CHECK(aspl.find("Field A,Class One,science,") != std::string::npos);
    CHECK(testutil::read_file(tmp.file("run/oisp.csv")).find("Field C,Class Two,science,") !=
          std::string::npos);
}

TEST_CASE("every subcommand is byte-deterministic across runs") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);
    const char* commands[] = {
        "indicators",
        "heatmap --level class --metric spw",
        "heatmap --level division --metric spl",
        "classify",
        "backbone --top-k 2",
        "distribution",
    };
    const char* files[] = {
        "aspl.csv",       "aspw.csv",        "oisp.csv",         "heatmap_class_spw.csv",
        "heatmap_division_spl.csv", "path_types.csv", "backbone.dot", "backbone.graphml",
        "distribution.csv",
    };
    for (const char* command : commands) {
        CHECK(run_cli(tmp, inputs + out_flag(tmp, "a") + " " + command).code == 0);
        CHECK(run_cli(tmp, inputs + out_flag(tmp, "b") + " " + command).code == 0);
    }
    for (const char* file : files) {
        CAPTURE(file);
        const std::string first = testutil::read_file(tmp.file(std::string("a/") + file));
        CHECK(!first.empty());
        CHECK(first == testutil::read_file(tmp.file(std::string("b/") + file)));
    }
}

TEST_CASE("heatmap picks its grid file from level and metric") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);
    CliResult result =
        run_cli(tmp, inputs + out_flag(tmp, "hm") + " heatmap --level division --metric spw");
    CHECK(result.code == 0);
    const std::string grid = testutil::read_file(tmp.file("hm/heatmap_division_spw.csv"));
    CHECK(grid.substr(0, grid.find('\n')) == ",science,social_science");
}

TEST_CASE("classify emits the census with its unreachable footer") {
    testutil::TempDir tmp;
    CliResult result =
        run_cli(tmp, route_inputs(tmp) + out_flag(tmp, "cls") + " classify");
    CHECK(result.code == 0);
    const std::string census = testutil::read_file(tmp.file("cls/path_types.csv"));
    CHECK(census.find("type,count,percent_of_all,percent_of_block\n") == 0);
    CHECK(census.find("\nunreachable,0,,\n") != std::string::npos);
}

TEST_CASE("backbone writes both graph formats and honors its flags") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);
    CliResult result = run_cli(tmp, inputs + out_flag(tmp, "bb") + " backbone --top-k 2");
    CHECK(result.code == 0);
    CHECK(testutil::read_file(tmp.file("bb/backbone.dot")).find("digraph backbone {") == 0);
    CHECK(testutil::read_file(tmp.file("bb/backbone.graphml")).find("<?xml") == 0);

    CliResult science = run_cli(
        tmp, inputs + out_flag(tmp, "bbs") + " backbone --division science --min-width 4");
    CHECK(science.code == 0);
    const std::string dot = testutil::read_file(tmp.file("bbs/backbone.dot"));
    CHECK(dot.find("Field A") != std::string::npos);
    CHECK(dot.find("Field D") == std::string::npos); // social field filtered out
}

TEST_CASE("distribution reports the histogram with summary metadata") {
    testutil::TempDir tmp;
    CliResult result =
        run_cli(tmp, route_inputs(tmp) + out_flag(tmp, "dist") + " distribution");
    CHECK(result.code == 0);
    const std::string csv = testutil::read_file(tmp.file("dist/distribution.csv"));
    CHECK(csv.find("# median: ") == 0);
    CHECK(csv.find("spl,count\n") != std::string::npos);
    CHECK(csv.find("1,5\n") != std::string::npos); // five self paths
}

TEST_CASE("full precision changes the emitted reals") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);
    CHECK(run_cli(tmp, inputs + out_flag(tmp, "fixed") + " indicators").code == 0);
    CHECK(run_cli(tmp, inputs + " --full-precision" + out_flag(tmp, "full") + " indicators").code ==
          0);
    const std::string fixed = testutil::read_file(tmp.file("fixed/aspw.csv"));
    const std::string full = testutil::read_file(tmp.file("full/aspw.csv"));
    CHECK(fixed != full);
}

TEST_CASE("an unreachable network warns on stderr but still succeeds") {
    testutil::TempDir tmp;
    // chain: 0 -> 1 -> 2, nothing returns
    testutil::CountGrid counts(3, std::vector<int>(3, 0));
    counts[1][0] = 2;
    counts[2][1] = 2;
    testutil::write_taxonomy_csv(tmp.file("t.csv"), testutil::make_fields(3));
    testutil::write_counts_csv(tmp.file("c.csv"), counts, testutil::make_fields(3));
    CliResult result = run_cli(tmp, "--taxonomy " + shell_quote(tmp.file("t.csv").string()) +
                                        " --citations " + shell_quote(tmp.file("c.csv").string()) +
                                        out_flag(tmp, "w") + " indicators");
    CHECK(result.code == 0);
    CHECK(result.err ==
          "warning: 3 ordered field pairs are unreachable and excluded from averages\n");
    CHECK(result.out.find("wrote ") == 0);
}

TEST_CASE("journal citations collapse onto categories end to end") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("t.csv"),
                         "category,class,division\n"
                         "A,K0,science\n"
                         "B,K0,science\n"
                         "C,K1,social_science\n");
    testutil::write_file(tmp.file("map.csv"),
                         "journal,category\n"
                         "J1,A\n"
                         "J1,B\n"
                         "J2,C\n");
    testutil::write_file(tmp.file("jc.csv"),
                         "citing_journal,cited_journal,count\n"
                         "J1,J1,6\n"
                         "J2,J1,4\n");
    const std::string inputs = "--taxonomy " + shell_quote(tmp.file("t.csv").string()) +
                               " --journal-cites " + shell_quote(tmp.file("jc.csv").string()) +
                               " --journal-map " + shell_quote(tmp.file("map.csv").string());

    CliResult keep = run_cli(tmp, inputs + out_flag(tmp, "keep") + " indicators");
    CHECK(keep.code == 0);
    // J1 cites itself across A and B, so A and B stay mutually reachable;
    // only C -> A and C -> B are missing.
    CHECK(keep.err ==
          "warning: 2 ordered field pairs are unreachable and excluded from averages\n");

    CliResult drop = run_cli(tmp, inputs + " --drop-self" + out_flag(tmp, "drop") + " indicators");
    CHECK(drop.code == 0);
    // Dropping the J1 -> J1 record removes the A <-> B flows entirely: only
    // A -> C and B -> C remain, so four ordered pairs lose their route.
    CHECK(drop.err ==
          "warning: 4 ordered field pairs are unreachable and excluded from averages\n");
    CHECK(testutil::read_file(tmp.file("keep/aspl.csv")) !=
          testutil::read_file(tmp.file("drop/aspl.csv")));
}

TEST_CASE("configuration mistakes exit with code three") {
    testutil::TempDir tmp;
    const std::string inputs = route_inputs(tmp);

    SUBCASE("no subcommand") { CHECK(run_cli(tmp, inputs).code == 3); }
    SUBCASE("unknown subcommand") { CHECK(run_cli(tmp, inputs + " frobnicate").code == 3); }
    SUBCASE("missing taxonomy option") {
        CHECK(run_cli(tmp, "--citations " + shell_quote(tmp.file("citations.csv").string()) +
                               " indicators")
                  .code == 3);
    }
    SUBCASE("taxonomy file does not exist") {
        CHECK(run_cli(tmp, "--taxonomy " + shell_quote(tmp.file("missing.csv").string()) +
                               " --citations " + shell_quote(tmp.file("citations.csv").string()) +
                               " indicators")
                  .code == 3);
    }
    SUBCASE("no citation input at all") {
        CliResult result =
            run_cli(tmp, "--taxonomy " + shell_quote(tmp.file("taxonomy.csv").string()) +
                             " indicators");
        CHECK(result.code == 3);
        CHECK(result.err ==
              "error: provide --citations or --journal-cites with --journal-map\n");
    }
    SUBCASE("both citation modes at once") {
        CHECK(run_cli(tmp, inputs + " --journal-cites " +
                               shell_quote(tmp.file("citations.csv").string()) +
                               " --journal-map " +
                               shell_quote(tmp.file("citations.csv").string()) + " indicators")
                  .code == 3);
    }
    SUBCASE("journal cites without the map") {
        CHECK(run_cli(tmp, "--taxonomy " + shell_quote(tmp.file("taxonomy.csv").string()) +
                               " --journal-cites " +
                               shell_quote(tmp.file("citations.csv").string()) + " indicators")
                  .code == 3);
    }
    SUBCASE("bad heatmap level") {
        CHECK(run_cli(tmp, inputs + " heatmap --level kingdom").code == 3);
    }
    SUBCASE("bad backbone values") {
        CHECK(run_cli(tmp, inputs + " backbone --top-k -1").code == 3);
        CHECK(run_cli(tmp, inputs + " backbone --min-width 0").code == 3);
        CHECK(run_cli(tmp, inputs + " backbone --asymmetry-threshold 1.5").code == 3);
        CHECK(run_cli(tmp, inputs + " backbone --division plasma").code == 3);
    }
}

TEST_CASE("malformed input files exit with code two") {
    testutil::TempDir tmp;
    testutil::write_taxonomy_csv(tmp.file("taxonomy.csv"), testutil::route_fixture_fields());
    const std::string taxonomy = "--taxonomy " + shell_quote(tmp.file("taxonomy.csv").string());

    SUBCASE("unknown field in the citations") {
        testutil::write_file(tmp.file("bad.csv"), "citing,cited,count\nNobody,Field A,3\n");
        CliResult result = run_cli(
            tmp, taxonomy + " --citations " + shell_quote(tmp.file("bad.csv").string()) +
                     out_flag(tmp, "o") + " indicators");
        CHECK(result.code == 2);
        CHECK(result.err.find("unknown field `Nobody`") != std::string::npos);
    }
    SUBCASE("negative count") {
        testutil::write_file(tmp.file("bad.csv"), "citing,cited,count\nField A,Field B,-1\n");
        CHECK(run_cli(tmp, taxonomy + " --citations " +
                               shell_quote(tmp.file("bad.csv").string()) + " indicators")
                  .code == 2);
    }
    SUBCASE("broken taxonomy division") {
        testutil::write_file(tmp.file("t.csv"), "category,class,division\nA,K0,humanities\n");
        testutil::write_file(tmp.file("c.csv"), "citing,cited,count\nA,A,3\n");
        CliResult result = run_cli(
            tmp, "--taxonomy " + shell_quote(tmp.file("t.csv").string()) + " --citations " +
                     shell_quote(tmp.file("c.csv").string()) + " indicators");
        CHECK(result.code == 2);
        CHECK(result.err.find("t.csv:2:") != std::string::npos);
    }
    SUBCASE("citations without a single flow edge") {
        testutil::write_file(tmp.file("empty.csv"), "citing,cited,count\n");
        CliResult result = run_cli(
            tmp, taxonomy + " --citations " + shell_quote(tmp.file("empty.csv").string()) +
                     " indicators");
        CHECK(result.code == 2);
        CHECK(result.err.find("no flow edges") != std::string::npos);
    }
}

TEST_CASE("help requests succeed") {
    testutil::TempDir tmp;
    CliResult result = run_cli(tmp, "--help");
    CHECK(result.code == 0);
    CHECK(result.out.find("--taxonomy") != std::string::npos);
}
