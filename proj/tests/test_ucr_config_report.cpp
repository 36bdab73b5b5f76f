#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "uncertts/config.hpp"
#include "uncertts/report.hpp"
#include "uncertts/ucr.hpp"

using namespace uncertts;

namespace {

std::string tmp_path(const std::string& stem) {
    return "ucr_config_report_" + stem;  // relative to the ctest working dir
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

}  // namespace

TEST_CASE("archive rows parse with comma or whitespace delimiters") {
    const std::string commas = tmp_path("commas.txt");
    const std::string spaces = tmp_path("spaces.txt");
    write_file(commas, "1,0.5,1.5,-2\n2, 0.25 ,0.75, 1\n");
    write_file(spaces, "1 0.5 1.5 -2\n2\t0.25\t0.75\t1\n");

    Dataset a = load_ucr_file(commas, "ds");
    Dataset b = load_ucr_file(spaces, "ds");
    REQUIRE(a.size() == 2);
    CHECK(a.labels == std::vector<double>{1.0, 2.0});
    CHECK(a.series[0].values == std::vector<double>{0.5, 1.5, -2.0});
    CHECK(a.series[1].values == b.series[1].values);
    CHECK(a.labels == b.labels);
    std::remove(commas.c_str());
    std::remove(spaces.c_str());
}

TEST_CASE("blank lines and CR line endings are tolerated") {
    const std::string path = tmp_path("crlf.txt");
    write_file(path, "1,0.5,1.5\r\n\n  \n2,0.25,0.75\r\n");
    Dataset ds = load_ucr_file(path, "ds");
    CHECK(ds.size() == 2);
    CHECK(ds.length() == 2);
    std::remove(path.c_str());
}

TEST_CASE("malformed rows report their coordinates") {
    const std::string path = tmp_path("bad.txt");

    write_file(path, "1,0.5,1.5\n2,0.25\n");
    CHECK_THROWS_WITH_AS(load_ucr_file(path, "ds"),
                         doctest::Contains("row 2"), std::runtime_error);

    write_file(path, "1,0.5,1.5\n2,x,0.75\n");
    try {
        load_ucr_file(path, "ds");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 2") != std::string::npos);
        CHECK(msg.find("column 2") != std::string::npos);
        CHECK(msg.find("'x'") != std::string::npos);
    }

    write_file(path, "\n\n");
    CHECK_THROWS_WITH_AS(load_ucr_file(path, "ds"),
                         doctest::Contains("no data rows"), std::runtime_error);
    CHECK_THROWS_AS(load_ucr_file(tmp_path("missing.txt"), "ds"), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("train and test halves join when lengths agree") {
    const std::string train = tmp_path("train.txt"), test = tmp_path("test.txt");
    write_file(train, "1 0.5 1.5\n");
    write_file(test, "2 0.25 0.75\n3 0.1 0.9\n");
    Dataset ds = load_ucr(train, test, "joined");
    CHECK(ds.size() == 3);
    CHECK(ds.labels == std::vector<double>{1.0, 2.0, 3.0});

    write_file(test, "2 0.25 0.75 0.5\n");
    CHECK_THROWS_WITH_AS(load_ucr(train, test, "joined"),
                         doctest::Contains("lengths differ"), std::runtime_error);
    std::remove(train.c_str());
    std::remove(test.c_str());
}

TEST_CASE("writing and reloading a dataset round-trips values exactly") {
    Dataset ds;
    ds.name = "rt";
    ds.labels = {1.0, 2.0};
    ds.series = {TimeSeries({0.1234567890123, -7.5e-17, 3.0}),
                 TimeSeries({1e100, 2.5, -0.0025})};
    const std::string path = tmp_path("rt.txt");
    write_ucr_file(ds, path);
    Dataset back = load_ucr_file(path, "rt");
    CHECK(back.labels == ds.labels);
    for (std::size_t i = 0; i < 2; ++i) CHECK(back.series[i].values == ds.series[i].values);
    std::remove(path.c_str());
}

TEST_CASE("key-value text parses sections and comments") {
    KeyValueFile kv = KeyValueFile::parse_text(
        "# header comment\n"
        "alpha = 3\n"
        "name = hello world \n"
        "\n"
        "[filters]\n"
        "w = 2\n"
        "normalized = true\n"
        "[munich]\n"
        "bins = 128\n");
    CHECK(kv.get_u64("alpha", 0) == 3);
    CHECK(kv.get_str("name", "") == "hello world");
    CHECK(kv.get_size("filters.w", 0) == 2);
    CHECK(kv.get_bool("filters.normalized", false));
    CHECK(kv.get_u64("munich.bins", 0) == 128);
    CHECK(kv.get_real("absent", 1.5) == 1.5);
}

TEST_CASE("list and real-list accessors split on commas") {
    KeyValueFile kv;
    kv.set("datasets", "cbf, contours ,transients");
    kv.set("sigmas", "0.2, 1.0, 2");
    auto names = kv.get_list("datasets");
    REQUIRE(names.size() == 3);
    CHECK(names[1] == "contours");
    auto reals = kv.get_reals("sigmas");
    CHECK(reals == std::vector<double>{0.2, 1.0, 2.0});
}

TEST_CASE("serialized text is stable under reparsing") {
    KeyValueFile kv;
    kv.set("b", "2");
    kv.set("a", "1");
    kv.set("zeta.k", "x");
    kv.set("alpha.k", "y");
    const std::string text = kv.to_text();
    KeyValueFile back = KeyValueFile::parse_text(text);
    CHECK(back.entries == kv.entries);
    CHECK(back.to_text() == text);
    // plain keys precede sectioned ones, sections are grouped
    CHECK(text.find("a = 1") < text.find("b = 2"));
    CHECK(text.find("[alpha]") < text.find("[zeta]"));
}

TEST_CASE("save and load round-trip through a file") {
    KeyValueFile kv;
    kv.set("seed", "11");
    kv.set("perturb.mixed", "true");
    const std::string path = tmp_path("cfg.cfg");
    kv.save(path);
    KeyValueFile back = KeyValueFile::load(path);
    CHECK(back.entries == kv.entries);
    CHECK_THROWS_AS(KeyValueFile::load(tmp_path("nope.cfg")), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("shortest round-trip formatting of reals") {
    CHECK(format_real(0.2) == "0.2");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(1e-9) == "1e-09");
    for (double v : {0.1 + 0.2, 1.0 / 3.0, 6.02214076e23}) {
        CHECK(std::stod(format_real(v)) == v);
    }
}

TEST_CASE("report emits the golden CSV bytes") {
    EvalReport rep;
    ReportCell a;
    a.dataset = "zeta";
    a.technique = "euclid";
    a.error_kind = "normal";
    a.sigma = 0.2;
    a.param = 0.0;
    a.precision = 0.5;
    a.precision_ci = 0.0123456789;
    a.recall = 1.0 / 3.0;
    a.recall_ci = 0.02;
    a.f1 = 0.4;
    a.f1_ci = 0.025;
    a.mean_query_ms = 1.25;
    a.queries = 50;
    a.skipped = 2;
    ReportCell b = a;
    b.dataset = "alpha";
    b.sigma = 1.0;
    ReportCell c = a;
    c.technique = "dust";
    rep.cells = {a, b, c};  // deliberately unsorted

    const std::string expect =
        "dataset,technique,error_kind,sigma,param,precision,precision_ci,recall,recall_ci,"
        "f1,f1_ci,mean_query_ms,queries,skipped\n"
        "alpha,euclid,normal,1.000000,0.000000,0.500000,0.012346,0.333333,0.020000,0.400000,"
        "0.025000,1.250000,50,2\n"
        "zeta,dust,normal,0.200000,0.000000,0.500000,0.012346,0.333333,0.020000,0.400000,"
        "0.025000,1.250000,50,2\n"
        "zeta,euclid,normal,0.200000,0.000000,0.500000,0.012346,0.333333,0.020000,0.400000,"
        "0.025000,1.250000,50,2\n";
    CHECK(report_csv(rep) == expect);

    const std::string path = tmp_path("rep.csv");
    write_report(rep, path);
    CHECK(read_file(path) == expect);
    std::remove(path.c_str());
}

TEST_CASE("rows sort by dataset, technique, sigma, then param") {
    EvalReport rep;
    for (double param : {2.0, 0.0, 1.0}) {
        ReportCell c;
        c.dataset = "d";
        c.technique = "uma";
        c.error_kind = "normal";
        c.sigma = 0.2;
        c.param = param;
        rep.cells.push_back(c);
    }
    const std::string csv = report_csv(rep);
    CHECK(csv.find(",0.200000,0.000000,") < csv.find(",0.200000,1.000000,"));
    CHECK(csv.find(",0.200000,1.000000,") < csv.find(",0.200000,2.000000,"));
}
