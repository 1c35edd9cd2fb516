#include <doctest.h>

#include "pmns/generate.hpp"

#include <algorithm>

using namespace pmns;

namespace {

GenerationRequest small_request() {
    GenerationRequest req;
    req.p = 23;
    req.n = 3;
    req.classes = {"binomial"};
    req.seed = 1;
    return req;
}

bool has_system(const std::vector<PmnsRecord>& recs,
                const std::vector<std::string>& e_coeffs,
                const std::string& gamma) {
    return std::any_of(recs.begin(), recs.end(), [&](const PmnsRecord& r) {
        return r.E_coeffs == e_coeffs && r.gamma == gamma;
    });
}

}  // namespace

TEST_CASE("generate finds the textbook system") {
    auto recs = generate_serial(small_request());
    CHECK(!recs.empty());
    CHECK(has_system(recs, {"2", "0", "0", "1"}, "7"));  // E = X^3+2, gamma = 7
    for (const PmnsRecord& r : recs) {
        CHECK(r.p == "23");
        CHECK(r.n == 3);
        CHECK(r.class_tag == "binomial");
    }
}

TEST_CASE("generate output is sorted and deterministic") {
    GenerationRequest req;
    req.p = 40993;
    req.n = 4;
    req.seed = 5;
    auto a = generate_serial(req);
    auto b = generate_serial(req);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(record_to_json(a[i]) == record_to_json(b[i]));
    // sorted by (rho, E, gamma)
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(Int(a[i - 1].rho, 10) <= Int(a[i].rho, 10));
    CHECK(a.size() >= 5);  // several classes hit at this size
}

TEST_CASE("serial and parallel sweeps produce identical bytes") {
    GenerationRequest req;
    req.p = 40993;
    req.n = 4;
    req.seed = 99;
    auto serial = generate_serial(req);
    for (int jobs : {2, 4}) {
        req.jobs = jobs;
        auto parallel = generate_parallel(req);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(record_to_json(serial[i]) == record_to_json(parallel[i]));
    }
}

TEST_CASE("record JSON round trip is byte identical") {
    auto recs = generate_serial(small_request());
    REQUIRE(!recs.empty());
    for (const PmnsRecord& r : recs) {
        std::string line = record_to_json(r);
        PmnsRecord back = record_from_json(line);
        CHECK(record_to_json(back) == line);
    }
}

TEST_CASE("rho_max_bits filters") {
    GenerationRequest req;
    req.p = 40993;
    req.n = 4;
    req.seed = 5;
    auto all = generate_serial(req);
    req.rho_max_bits = 4;
    auto filtered = generate_serial(req);
    CHECK(filtered.size() <= all.size());
    for (const PmnsRecord& r : filtered) CHECK(r.rho_bits <= 4);
}

TEST_CASE("sweep class enumerates and screens candidates") {
    GenerationRequest req;
    req.p = 23;
    req.n = 4;
    req.classes = {"sweep"};
    req.coeff_cap = 2;
    req.inner_cap = 1;
    auto cands = enumerate_candidates(req);
    CHECK(!cands.empty());
    // X^4 - 1 is reducible and matches no class: must be screened out
    for (const auto& [e, tag] : cands) CHECK(!(e == IntPoly{-1, 0, 0, 0, 1}));
    // X^4 + 2 (Eisenstein/binomial) must be present
    bool found = false;
    for (const auto& [e, tag] : cands)
        if (e == IntPoly{2, 0, 0, 0, 1}) found = true;
    CHECK(found);
}

TEST_CASE("check_record validates generated records") {
    auto recs = generate_serial(small_request());
    REQUIRE(!recs.empty());
    for (const PmnsRecord& r : recs) {
        CheckReport rep = check_record(r, 20, 7);
        CAPTURE(rep.first_failure);
        CHECK(rep.ok);
    }
}

TEST_CASE("check_record rejects tampered records") {
    auto recs = generate_serial(small_request());
    REQUIRE(!recs.empty());
    auto it = std::find_if(recs.begin(), recs.end(), [](const PmnsRecord& r) {
        return r.E_coeffs == std::vector<std::string>{"2", "0", "0", "1"} &&
               r.gamma == "7";
    });
    REQUIRE(it != recs.end());
    PmnsRecord good = *it;

    PmnsRecord bad_gamma = good;
    bad_gamma.gamma = "8";
    CheckReport r1 = check_record(bad_gamma, 5, 7);
    CHECK_FALSE(r1.ok);
    CHECK(r1.first_failure == "NotARoot");

    PmnsRecord bad_rho = good;
    bad_rho.rho = "1";
    CheckReport r2 = check_record(bad_rho, 5, 7);
    CHECK_FALSE(r2.ok);
    CHECK(r2.first_failure == "RhoBound");

    PmnsRecord bad_p = good;
    bad_p.p = "24";
    CHECK_FALSE(check_record(bad_p, 5, 7).ok);

    PmnsRecord bad_row = good;
    bad_row.basis_rows[0][0] = "1";
    CheckReport r4 = check_record(bad_row, 5, 7);
    CHECK_FALSE(r4.ok);
    CHECK(r4.first_failure == "RowNotInLattice");
}

TEST_CASE("unknown class tag is rejected") {
    GenerationRequest req;
    req.p = 23;
    req.n = 3;
    req.classes = {"nonsense"};
    CHECK_THROWS_AS(generate_serial(req), Error);
    GenerationRequest comp;
    comp.p = 24;
    comp.n = 3;
    CHECK_THROWS_AS(generate_serial(comp), NotPrime);
}
