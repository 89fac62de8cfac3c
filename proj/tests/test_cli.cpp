#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "collapsar/complex.hpp"
#include "testutil.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI with stdout captured; stderr goes to a scratch file.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_file =
        (fs::temp_directory_path() / ("collapsar_cli_" + std::to_string(::getpid()) + "_" +
                                      std::to_string(counter++) + ".out"))
            .string();
    const std::string cmd = std::string(COLLAPSAR_CLI_PATH) + " " + args + " > " + out_file +
                            " 2> " + out_file + ".err";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = testutil::read_file(out_file);
    std::remove(out_file.c_str());
    std::remove((out_file + ".err").c_str());
    return r;
}

std::string fixture(const std::string& name) { return testutil::fixture_path(name); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("collapsar_test_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("estimate: minimal sphere, manifest written") {
    TempDir tmp;
    const std::string out = (tmp.path / "est.json").string();
    const RunResult r = run_cli("estimate --input " + fixture("boundary4simplex.facets") +
                                " --samples 2000 --seed 7 --out " + out);
    CHECK(r.exit_code == 0);
    const std::string json = testutil::read_file(out);
    CHECK(json.find("\"p_hat\":1") != std::string::npos);
    CHECK(json.find("\"successes\":2000") != std::string::npos);
    const std::string manifest = testutil::read_file(out + ".manifest.json");
    CHECK(manifest.find("\"tool_version\"") != std::string::npos);
    CHECK(manifest.find("\"input_checksum\"") != std::string::npos);
    CHECK(manifest.find("\"seed\":7") != std::string::npos);
}

TEST_CASE("estimate: bad usage and bad input exit 2") {
    CHECK(run_cli("estimate --input " + fixture("boundary4simplex.facets") +
                  " --samples 0 --seed 1")
              .exit_code == 2);
    CHECK(run_cli("estimate --samples 10").exit_code == 2);  // missing input
    CHECK(run_cli("estimate --input /nonexistent.facets --samples 10").exit_code == 2);
    CHECK(run_cli("estimate --input " + fixture("boundary4simplex.facets") +
                  " --samples 10 --bogus-flag 1")
              .exit_code == 2);

    TempDir tmp;
    const std::string bad = (tmp.path / "bad.facets").string();
    std::ofstream(bad) << "1 2 3\n";
    const RunResult r = run_cli("estimate --input " + bad + " --samples 10");
    CHECK(r.exit_code == 2);
}

TEST_CASE("estimate: byte-identical output across worker counts") {
    TempDir tmp;
    std::vector<std::string> outputs;
    for (int workers : {1, 2, 4}) {
        const std::string out = (tmp.path / ("w" + std::to_string(workers))).string();
        const RunResult r = run_cli("estimate --input " +
                                    fixture("complicated_sphere_15.facets") +
                                    " --samples 3000 --seed 11 --workers " +
                                    std::to_string(workers) + " --out " + out);
        REQUIRE(r.exit_code == 0);
        outputs.push_back(testutil::read_file(out));
    }
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
}

TEST_CASE("estimate: certificate replay artifact") {
    TempDir tmp;
    const std::string cert = (tmp.path / "cert.jsonl").string();
    const RunResult r = run_cli("estimate --input " + fixture("boundary4simplex.facets") +
                                " --samples 10 --seed 3 --remove-facet 2 --certificate-out " +
                                cert + " --out " + (tmp.path / "e.json").string());
    CHECK(r.exit_code == 0);
    const std::string lines = testutil::read_file(cert);
    CHECK(lines.find("\"free\":[") != std::string::npos);
    CHECK(lines.find("\"coface\":[") != std::string::npos);
}

TEST_CASE("exact: fraction output and tree-limit refusal") {
    const RunResult ok = run_cli("exact --input " + fixture("boundary4simplex.facets"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"fraction\":\"125/125\"") != std::string::npos);
    CHECK(ok.out.find("\"decimal\":1.00000") != std::string::npos);

    const RunResult refused =
        run_cli("exact --input " + fixture("complicated_sphere_15.facets"));
    CHECK(refused.exit_code == 3);

    CHECK(run_cli("exact --input /nonexistent").exit_code == 2);
}

TEST_CASE("variance") {
    const RunResult r = run_cli("variance --input " + fixture("boundary4simplex.facets"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"variance\":{\"num\":0,\"den\":1") != std::string::npos);
}

TEST_CASE("edge-stats CSV") {
    TempDir tmp;
    const std::string out = (tmp.path / "edges.csv").string();
    const RunResult r = run_cli("edge-stats --input " + fixture("boundary4simplex.facets") +
                                " --samples 2000 --seed 1 --out " + out);
    CHECK(r.exit_code == 0);
    std::istringstream csv(testutil::read_file(out));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "edge_id,v1,v2,degree,free_count,samples,frequency,theorem_bound");
    int rows = 0;
    std::string line;
    while (std::getline(csv, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 10);
}

TEST_CASE("catalog verify exits zero") {
    const RunResult r = run_cli("catalog verify --greedy-seeds 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] sawblade-I-1") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("catalog scan on the minimal sphere") {
    const RunResult r = run_cli("catalog scan --input " + fixture("boundary4simplex.facets"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"certified_extendably_collapsible\":true") != std::string::npos);
}

TEST_CASE("catalog export writes one file per entry") {
    TempDir tmp;
    const std::string dir = (tmp.path / "cat").string();
    const RunResult r = run_cli("catalog export --out-dir " + dir);
    CHECK(r.exit_code == 0);
    int facet_files = 0, manifests = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.ends_with(".facets")) ++facet_files;
        if (name.ends_with(".manifest.json")) ++manifests;
    }
    CHECK(facet_files == 81);  // 80 entries + the 15-vertex sphere
    CHECK(manifests == 1);
    const std::string first = testutil::read_file(dir + "/sawblade-I-1.facets");
    CHECK(first.rfind("1 2 3\n", 0) == 0);
}

TEST_CASE("convert round trip") {
    TempDir tmp;
    const std::string json_path = (tmp.path / "c.json").string();
    const std::string text_path = (tmp.path / "c.facets").string();
    CHECK(run_cli("convert --input " + fixture("complicated_sphere_15.facets") +
                  " --to json --out " + json_path)
              .exit_code == 0);
    CHECK(run_cli("convert --input " + json_path + " --to text --out " + text_path)
              .exit_code == 0);
    const collapsar::Complex3 a = testutil::load_fixture("complicated_sphere_15.facets");
    const collapsar::Complex3 b = collapsar::Complex3::parse(testutil::read_file(text_path));
    CHECK(collapsar::f_vector(a) == collapsar::f_vector(b));
}

TEST_CASE("anneal command writes its artifacts") {
    TempDir tmp;
    const std::string prefix = (tmp.path / "run").string();
    const RunResult r = run_cli("anneal --input " + fixture("boundary4simplex.facets") +
                                " --direction maximize --max-moves 60 --seed 4 --out-prefix " +
                                prefix);
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(prefix + ".facets"));
    CHECK(fs::exists(prefix + ".moves.csv"));
    CHECK(fs::exists(prefix + ".trace.csv"));
    CHECK(fs::exists(prefix + ".facets.manifest.json"));
    const std::string trace = testutil::read_file(prefix + ".trace.csv");
    CHECK(trace.rfind("step,variance_num,variance_den\n", 0) == 0);
}

TEST_CASE("help and version exit zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("estimate --help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
}
