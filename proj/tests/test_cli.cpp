#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cykummer/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace cykummer;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string golden_path(const std::string& name) {
    return std::string(CYK_SOURCE_DIR) + "/tests/golden/" + name;
}

RunConfig make_config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    if (command == "ellkummer census") cfg.prime = 5, cfg.n = 2;
    return cfg;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    std::vector<std::string> argv = {"cykummer"};
    argv.insert(argv.end(), args.begin(), args.end());
    int code = run_cli(argv, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("full battery: record set, statuses, and byte-level determinism") {
    RunConfig cfg = make_config("verify-all");
    cfg.seed = 7;

    VerificationReport first = run_checks(cfg);
    const std::vector<std::string> expected_ids = {
        "invariant-dims-char0",      "invariant-dims-modp",
        "standard-rep-certificates", "three-torsion-fixed-locus",
        "burnside-orbit-consistency", "dual-sextic-census",
        "tangency-counts",           "divisor-coincidences",
        "surface-node-resolution",   "threefold-local-resolution",
        "crepancy-ledger",           "modulus-wording-probe",
        "ledger-sign-probe"};
    REQUIRE(first.records.size() == expected_ids.size());
    for (std::size_t i = 0; i < expected_ids.size(); ++i) {
        CHECK(first.records[i].id == expected_ids[i]);
    }
    CHECK(first.passed_count() == 11);
    CHECK(first.expected_fail_count() == 2);
    CHECK(first.failed_count() == 0);
    CHECK(first.all_ok());
    for (const CheckRecord& rec : first.records) {
        bool probe = rec.id == "modulus-wording-probe" || rec.id == "ledger-sign-probe";
        if (probe) {
            CHECK(rec.status.rfind("expected-fail", 0) == 0);
        } else {
            CHECK(rec.status == "pass");
        }
    }

    VerificationReport second = run_checks(cfg);
    CHECK(render_report(first) == render_report(second));
}

TEST_CASE("reports never leak timing or presentation settings") {
    RunConfig a = make_config("resolver ledger");
    a.seed = 3;
    a.out_path = "somewhere.json";
    RunConfig b = a;
    b.out_path = "elsewhere.json";
    VerificationReport ra = run_checks(a);
    VerificationReport rb = run_checks(b);
    CHECK(render_report(ra) == render_report(rb));
    CHECK(render_report(ra).find("seconds") == std::string::npos);

    a.format = "text";
    VerificationReport rt = run_checks(a);
    std::string text = render_report(rt);
    CHECK(text.find("cykummer report") == 0);
    CHECK(text.find("crepancy-ledger: pass") != std::string::npos);
    CHECK(text.find("seconds") == std::string::npos);
}

TEST_CASE("golden report for the representation table") {
    RunConfig cfg = make_config("repthy table");
    cfg.n = 4;
    VerificationReport rep = run_checks(cfg);
    CHECK(render_report(rep) == slurp(golden_path("repthy_table_n4.json")));
}

TEST_CASE("record counts are frozen in the manifest") {
    std::ifstream manifest(golden_path("check_manifest.txt"));
    REQUIRE(manifest.good());
    std::map<std::string, std::size_t> expected;
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t sep = line.rfind(' ');
        REQUIRE(sep != std::string::npos);
        expected[line.substr(0, sep)] =
            static_cast<std::size_t>(std::stoul(line.substr(sep + 1)));
    }
    REQUIRE(expected.size() == 8);
    for (const auto& [command, count] : expected) {
        if (command == "verify-all") continue; // covered by the battery case
        VerificationReport rep = run_checks(make_config(command));
        CHECK_MESSAGE(rep.records.size() == count, command);
        CHECK(rep.all_ok());
    }
    CHECK(expected.at("verify-all") == 13);
}

TEST_CASE("ledger subcommand: both signs, probe semantics") {
    RunConfig cfg = make_config("resolver ledger");
    cfg.sign = "minus";
    VerificationReport minus = run_checks(cfg);
    REQUIRE(minus.records.size() == 1);
    CHECK(minus.records[0].id == "crepancy-ledger");
    CHECK(minus.records[0].status == "pass");
    CHECK(minus.records[0].computed["k_cover"] == "0");

    cfg.sign = "plus";
    VerificationReport plus = run_checks(cfg);
    REQUIRE(plus.records.size() == 1);
    CHECK(plus.records[0].id == "ledger-sign-probe");
    CHECK(plus.records[0].status == "expected-fail (sign convention question)");
    CHECK(plus.records[0].computed["k_cover"] == "2*B");
    CHECK(plus.all_ok()); // an expected failure is not a hard failure
}

TEST_CASE("scenario offsets: completion, files, and rejections") {
    RunConfig cfg = make_config("resolver n3");
    cfg.h_text = "1*x0^3";
    VerificationReport completed = run_checks(cfg);
    REQUIRE(completed.records.size() == 1);
    CHECK(completed.records[0].status == "pass");
    CHECK(completed.records[0].computed["offsets"]["hprime"] ==
          "1*x0^3 + 1*x0^2");

    cfg.h_text = "1*x0^3";
    cfg.hprime_text = "1*x0^4";
    CHECK_THROWS_AS(run_checks(cfg), ConfigError);

    cfg.h_text = "1*x0";
    cfg.hprime_text.clear();
    CHECK_THROWS_AS(run_checks(cfg), ConfigError);

    RunConfig file_cfg = make_config("resolver n3");
    std::string path = "cli_scenarios_tmp.txt";
    {
        std::ofstream out(path);
        out << "# two offset pairs\n";
        out << "0\n1*x0^2\n";
        out << "1*x0^3\n1*x0^3 + 1*x0^2\n";
    }
    file_cfg.scenarios_path = path;
    VerificationReport from_file = run_checks(file_cfg);
    REQUIRE(from_file.records.size() == 2);
    CHECK(from_file.records[0].id == "threefold-local-resolution-1");
    CHECK(from_file.records[1].id == "threefold-local-resolution-2");
    CHECK(from_file.all_ok());
    std::remove(path.c_str());
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(run_checks(make_config("no such command")), ConfigError);

    RunConfig bad_prime = make_config("dualgeom n2");
    bad_prime.prime = 9;
    CHECK_THROWS_AS(run_checks(bad_prime), ConfigError);
    bad_prime.prime = 3; // prime, but divides 6
    CHECK_THROWS_AS(run_checks(bad_prime), ConfigError);

    RunConfig singular = make_config("dualgeom n2");
    singular.curve_a = 0;
    singular.curve_b = 0;
    CHECK_THROWS_AS(run_checks(singular), ConfigError);

    RunConfig rational_census = make_config("ellkummer census");
    rational_census.prime = 0;
    CHECK_THROWS_AS(run_checks(rational_census), ConfigError);

    RunConfig big_n = make_config("repthy table");
    big_n.n = 9;
    CHECK_THROWS_AS(run_checks(big_n), ConfigError);

    RunConfig bad_format = make_config("repthy table");
    bad_format.format = "xml";
    CHECK_THROWS_AS(run_checks(bad_format), ConfigError);
}

TEST_CASE("command line end to end") {
    std::string out, err;

    std::string path = "cli_report_tmp.json";
    int code = run({"repthy", "table", "--n", "4", "--seed", "1", "--out", path},
                   &out, &err);
    CHECK(code == 0);
    CHECK(out.find("dims (m = 0..4): 1 0 0 0 1") != std::string::npos);
    CHECK(out.find("report written to " + path) != std::string::npos);
    CHECK(slurp(path) == slurp(golden_path("repthy_table_n4.json")));
    std::remove(path.c_str());

    CHECK(run({"--help"}, &out, &err) == 0);
    CHECK(out.find("verify-all") != std::string::npos);

    CHECK(run({}, &out, &err) == 2);
    CHECK(run({"ellkummer", "census", "--prime", "9"}, &out, &err) == 2);
    CHECK(err.find("error:") != std::string::npos);
    CHECK(run({"resolver", "ledger", "--sign", "up"}, &out, &err) == 2);
    CHECK(run({"dualgeom", "n2", "--curve", "0,0"}, &out, &err) == 2);
    CHECK(run({"dualgeom", "n2", "--curve", "zero,one"}, &out, &err) == 2);
    CHECK(run({"nonsense"}, &out, &err) == 2);

    std::string probe_path = "cli_probe_tmp.json";
    code = run({"resolver", "ledger", "--sign", "plus", "--out", probe_path},
               &out, &err);
    CHECK(code == 0);
    CHECK(out.find("expected-fail (sign convention question)") != std::string::npos);
    CHECK(slurp(probe_path).find("\"k_cover\": \"2*B\"") != std::string::npos);
    std::remove(probe_path.c_str());
}
