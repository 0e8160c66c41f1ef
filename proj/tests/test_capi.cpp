#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "twopow.h"

using nlohmann::json;

namespace {

json call(twopow_status (*fn)(int, char**), int k) {
    char* out = nullptr;
    REQUIRE(fn(k, &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    return j;
}

}  // namespace

TEST_CASE("exponent table crosses the boundary as exact strings") {
    json j = call(twopow_exponent_table, 3);
    CHECK(j["sigma"] == "1/2");
    CHECK(j["theta"] == "7/18");
    CHECK(j["phi"] == "4/9");
    CHECK(j.contains("meta"));

    char* out = nullptr;
    CHECK(twopow_exponent_table(2, &out) == TWOPOW_ERR_DOMAIN);
    CHECK(std::strlen(twopow_last_error()) > 0);
}

TEST_CASE("circle parameters") {
    char* out = nullptr;
    REQUIRE(twopow_circle_parameters(3, 3000, 15, &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["x_range"]["lo"] == "11");
    CHECK(j["x_range"]["hi"] == "20");
    CHECK(j["y_range"]["lo"] == "7");
    CHECK(j["y_range"]["hi"] == "13");
    CHECK(j["z_flag"] == "admissible");
}

TEST_CASE("stream lifecycle over the C boundary") {
    twopow_stream* s = nullptr;
    REQUIRE(twopow_stream_open(3, "2", "100", &s) == TWOPOW_OK);
    std::vector<std::string> values;
    char value[48], x[48], y[48];
    long long reps = 0;
    int rc;
    while ((rc = twopow_stream_next(s, value, &reps, x, y)) == 1) {
        values.push_back(value);
        CHECK(reps >= 1);
    }
    CHECK(rc == 0);
    std::vector<std::string> expected = {"2", "9", "16", "28", "35", "54",
                                         "65", "72", "91"};
    CHECK(values == expected);

    char* cp = nullptr;
    REQUIRE(twopow_stream_checkpoint(s, &cp) == TWOPOW_OK);
    std::string cp_text = cp;
    twopow_free_string(cp);
    twopow_stream_close(s);

    twopow_stream* r = nullptr;
    REQUIRE(twopow_stream_resume(cp_text.c_str(), "100", &r) == TWOPOW_OK);
    CHECK(twopow_stream_next(r, value, &reps, x, y) == 0);  // already done
    twopow_stream_close(r);
}

TEST_CASE("stream input errors map to status codes") {
    twopow_stream* s = nullptr;
    CHECK(twopow_stream_open(2, "2", "100", &s) == TWOPOW_ERR_DOMAIN);
    CHECK(twopow_stream_open(3, "2", "1x0", &s) == TWOPOW_ERR_FORMAT);
    CHECK(twopow_stream_resume("{not json", "100", &s) == TWOPOW_ERR_FORMAT);
}

TEST_CASE("nu and is_sum") {
    char* out = nullptr;
    REQUIRE(twopow_nu(3, "10000", &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["distinct"] == "202");
    CHECK(j["pairs"] == "204");

    REQUIRE(twopow_is_sum(3, "1729", &out) == TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["representable"] == true);
    CHECK(j["x"] == "1");
    CHECK(j["y"] == "12");

    double main = 0;
    REQUIRE(twopow_nu_main_term(3, 10000, &main) == TWOPOW_OK);
    CHECK(main == doctest::Approx(205.000267).epsilon(1e-6));
}

TEST_CASE("gap statistics and exceptional counts") {
    char* out = nullptr;
    REQUIRE(twopow_gap_statistics(3, "100", "200", 1, &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["sum_sq_gaps"] == "2543");
    CHECK(j["count"] == "5");

    REQUIRE(twopow_exceptional_count(3, "100", "10", &out) == TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["count"] == "63");
}

TEST_CASE("classification honors rational alpha exactly") {
    char* out = nullptr;
    REQUIRE(twopow_classify("m", 3, 3000, 15, 0, 0, "1/5", &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["label"] == "M_dagger");
    CHECK(j["q"] == 5);
    CHECK(j["a"] == 1);

    REQUIRE(twopow_classify("n", 3, 3000, 15, 0, 0, "0.4999999", &out) ==
            TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["kind"] == "n");

    CHECK(twopow_classify("x", 3, 3000, 15, 0, 0, "1/5", &out) ==
          TWOPOW_ERR_DOMAIN);
}

TEST_CASE("oracle counters and the verification suite") {
    char* out = nullptr;
    REQUIRE(twopow_oracle("i1", 3, 3000, 15, 0, &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["count"] == "105");

    REQUIRE(twopow_oracle("annihilate", 3, 3000, 15, 0, &out) == TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["count"] == "0");
    CHECK(j["inequality_holds"] == true);

    CHECK(twopow_oracle("bogus", 3, 3000, 15, 0, &out) == TWOPOW_ERR_DOMAIN);

    REQUIRE(twopow_verify_identities(3, 3000, 15, &out) == TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 6);
}

TEST_CASE("f_sum and spectrum through the boundary") {
    char* out = nullptr;
    REQUIRE(twopow_f_sum("1/3", 3, 3000, 15, &out) == TWOPOW_OK);
    json j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["x_count"] == "10");
    CHECK(j["f"]["im"] == 0.0);

    REQUIRE(twopow_spectrum(3, 3000, 15, "", "", 64, &out) == TWOPOW_OK);
    j = json::parse(out);
    twopow_free_string(out);
    CHECK(j["total"] == "1050");
    long long sum = 0;
    for (const auto& v : j["r"]) sum += v.get<long long>();
    CHECK(sum == 1050);
}

TEST_CASE("reproduce renders the criteria table") {
    char* out = nullptr;
    twopow_status st = twopow_reproduce("small", 1, 1, &out);
    std::string report = out ? out : "";
    twopow_free_string(out);
    CHECK(st == TWOPOW_OK);
    CHECK(report.find("[PASS] C1") != std::string::npos);
    CHECK(report.find("# ALL PASS") != std::string::npos);

    CHECK(twopow_reproduce("gigantic", 1, 1, &out) == TWOPOW_ERR_FORMAT);
}
