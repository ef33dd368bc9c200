#include <doctest.h>

#include "hachow/hachow.h"

#include <json.hpp>

#include <cstring>
#include <memory>
#include <string>

using json = nlohmann::json;

namespace {

struct Owned {
    char* s = nullptr;
    ~Owned() { hachow_string_free(s); }
    json parsed() const { return json::parse(s); }
};

std::unique_ptr<hachow_config, decltype(&hachow_config_free)> config() {
    return {hachow_config_new(), hachow_config_free};
}

}  // namespace

TEST_CASE("config setters validate") {
    auto cfg = config();
    REQUIRE(cfg);
    CHECK(hachow_config_set_precision(cfg.get(), 8) == HACHOW_E_INVALID_ARGUMENT);
    CHECK(std::strlen(hachow_last_error()) > 0);
    CHECK(hachow_config_set_precision(cfg.get(), 128) == HACHOW_OK);
    CHECK(std::strlen(hachow_last_error()) == 0);
    CHECK(hachow_config_set_tolerance(cfg.get(), -1) == HACHOW_E_INVALID_ARGUMENT);
    CHECK(hachow_config_set_field(cfg.get(), "Q(sqrt(-4))") == HACHOW_E_INVALID_ARGUMENT);
    CHECK(hachow_config_set_primes(cfg.get(), "1+i, 3") == HACHOW_OK);
    CHECK(hachow_config_set_primes(cfg.get(), "5") == HACHOW_E_INVALID_ARGUMENT);
    CHECK(hachow_config_set_height(cfg.get(), 0) == HACHOW_E_INVALID_ARGUMENT);
    CHECK(hachow_config_set_denom_bound(nullptr, 3) == HACHOW_E_INVALID_ARGUMENT);
}

TEST_CASE("cycle handles") {
    auto cfg = config();
    hachow_cycle* z = nullptr;
    REQUIRE(hachow_cycle_parse(cfg.get(), "(z; 1 - (2+3*i)*(z)^-1; 1 - z)", &z) == HACHOW_OK);
    CHECK(hachow_cycle_dimension(z) == 3);
    hachow_cycle* dz = nullptr;
    REQUIRE(hachow_cycle_boundary(z, &dz) == HACHOW_OK);
    Owned text;
    REQUIRE(hachow_cycle_to_string(dz, &text.s) == HACHOW_OK);
    // face oracle: z = 2 + 3i gives 1 - z = -1 - 3i
    CHECK(std::string(text.s) == "(2 + 3*i; -1 - 3*i)");
    hachow_cycle* ddz = nullptr;
    REQUIRE(hachow_cycle_boundary(dz, &ddz) == HACHOW_OK);
    CHECK(hachow_cycle_is_zero(ddz));
    hachow_cycle_free(ddz);
    hachow_cycle_free(dz);
    hachow_cycle_free(z);

    hachow_cycle* bad = nullptr;
    CHECK(hachow_cycle_parse(cfg.get(), "(z; 1 - z", &bad) == HACHOW_E_PARSE);
    CHECK(bad == nullptr);
    CHECK(hachow_last_error_position() >= 0);
}

TEST_CASE("reports are deterministic JSON") {
    auto cfg = config();
    Owned a, b;
    REQUIRE(hachow_report_pair(cfg.get(), 1, 1, "2+3*i", "1-2*i", &a.s) == HACHOW_OK);
    REQUIRE(hachow_report_pair(cfg.get(), 1, 1, "2+3*i", "1-2*i", &b.s) == HACHOW_OK);
    CHECK(std::string(a.s) == b.s);
    json r = a.parsed();
    CHECK(r["inputs"]["alpha"] == "2 + 3*i");
    CHECK(r["result"]["decomposition"]["N"] == "3");
    CHECK(r["result"]["decomposition"]["verified"] == true);
    CHECK(r["result"]["raw"].contains("error"));
    CHECK(r["result"]["reduction"]["multiples"].size() == 1);
    // keys come out sorted
    std::string prev;
    for (auto it = r.begin(); it != r.end(); ++it) {
        CHECK(prev < it.key());
        prev = it.key();
    }
}

TEST_CASE("report statuses") {
    auto cfg = config();
    Owned out;
    CHECK(hachow_config_set_primes(cfg.get(), "1+i") == HACHOW_OK);
    CHECK(hachow_config_set_height(cfg.get(), 2) == HACHOW_OK);
    CHECK(hachow_report_decompose(cfg.get(), "2+3*i", "1-2*i", &out.s) == HACHOW_E_NO_DECOMPOSITION);
    CHECK(out.s == nullptr);
    CHECK(hachow_report_pair(cfg.get(), 2, 2, nullptr, nullptr, &out.s) == HACHOW_E_UNSUPPORTED_SHAPE);
    CHECK(hachow_report_verify(cfg.get(), "nonsense", "", &out.s) == HACHOW_E_INVALID_ARGUMENT);
    CHECK(hachow_report_polylog(cfg.get(), "li", 5, "1/2", &out.s) != HACHOW_OK);

    Owned ranks;
    REQUIRE(hachow_report_ranks(cfg.get(), 2, 3, &ranks.s) == HACHOW_OK);
    CHECK(ranks.parsed()["result"]["chow_rank"] == 1);
    CHECK(ranks.parsed()["result"]["exact"] == true);

    Owned l19;
    REQUIRE(hachow_report_verify(cfg.get(), "lemma19", "(z; (z-i)^4*(z-1)^-4)", &l19.s) == HACHOW_OK);
    CHECK(l19.parsed()["result"]["total"].get<double>() <= 1e-6);

    // a curve in box^2: its boundary is a sum of points
    Owned sq;
    CHECK(hachow_report_verify(cfg.get(), "boundary-squared", "(z; 1 - z)", &sq.s) == HACHOW_OK);
}
