#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qnichols/errors.hpp"
#include "qnichols/rootdata.hpp"

using namespace qnichols;

namespace {

std::string fx(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

void check_equal(const SubRootDatum& a, const SubRootDatum& b) {
    CHECK(a.ambient() == b.ambient());
    CHECK(a.sub() == b.sub());
    CHECK(a.iota() == b.iota());
    CHECK(a.s_y() == b.s_y());
    CHECK(a.s_x() == b.s_x());
    CHECK(a.xpp() == b.xpp());
}

} // namespace

TEST_CASE("datum files load back to the builtin data") {
    CHECK(load_root_datum(fx("a1.json")) == builtin_datum("A", 1));
    CHECK(load_root_datum(fx("a2.json")) == builtin_datum("A", 2));
    CHECK(load_root_datum(fx("a3.json")) == builtin_datum("A", 3));
    CHECK(load_root_datum(fx("a1a1.json")) ==
          direct_sum(builtin_datum("A", 1), builtin_datum("A", 1)));
    CHECK(load_root_datum(fx("a2a1.json")) ==
          direct_sum(builtin_datum("A", 2), builtin_datum("A", 1)));
}

TEST_CASE("sub-datum files match their programmatic constructions") {
    const RootDatum a3 = builtin_datum("A", 3);
    check_equal(load_sub_root_datum(fx("sub_a2_in_a3.json")),
                levi_subdatum(a3, {0, 1}));
    check_equal(load_sub_root_datum(fx("sub_identity_a3.json")),
                levi_subdatum(a3, {0, 1, 2}));
    check_equal(load_sub_root_datum(fx("sub_jempty_a1.json")),
                levi_subdatum(builtin_datum("A", 1), {}));
    check_equal(load_sub_root_datum(fx("sub_jempty_a2.json")),
                levi_subdatum(builtin_datum("A", 2), {}));
    check_equal(load_sub_root_datum(fx("sub_a1_in_a1a1.json")),
                left_summand_subdatum(builtin_datum("A", 1), builtin_datum("A", 1)));
    check_equal(load_sub_root_datum(fx("sub_a2_in_a2a1.json")),
                left_summand_subdatum(builtin_datum("A", 2), builtin_datum("A", 1)));
}

TEST_CASE("bundled sub-datum files validate cleanly") {
    for (const char* name :
         {"sub_a2_in_a3.json", "sub_identity_a3.json", "sub_jempty_a1.json",
          "sub_jempty_a2.json", "sub_a1_in_a1a1.json", "sub_a2_in_a2a1.json",
          "sub_affine.json"}) {
        const SubRootDatum s = load_sub_root_datum(fx(name));
        CHECK(s.validate().all_ok());
    }
}

TEST_CASE("each invalid fixture fails its named condition") {
    struct Case {
        const char* file;
        const char* cond;
        bool exactly_one;
    };
    const std::vector<Case> cases = {
        {"invalid_i.json", "i", false},   {"invalid_ii.json", "ii", true},
        {"invalid_iii.json", "iii", false}, {"invalid_iv.json", "iv", true},
        {"invalid_v.json", "v", true},    {"invalid_vi.json", "vi", true},
    };
    for (const auto& c : cases) {
        INFO(c.file);
        const SubRootDatum s = load_sub_root_datum(fx(c.file));
        const ValidationReport rep = s.validate();
        CHECK(!rep.find(c.cond).ok);
        CHECK(!rep.find(c.cond).detail.empty());
        if (c.exactly_one) {
            int failed = 0;
            for (const auto& r : rep.conditions) failed += r.ok ? 0 : 1;
            CHECK(failed == 1);
        }
        CHECK_THROWS_AS(s.require_valid(), InputError);
    }
}

TEST_CASE("malformed files are rejected") {
    CHECK_THROWS_AS(load_root_datum(fx("broken.json")), InputError);
    CHECK_THROWS_AS(load_root_datum(fx("unknown_field.json")), InputError);
    CHECK_THROWS_AS(load_root_datum(fx("no_such_file.json")), InputError);
    // a datum file is not a sub-datum file
    CHECK_THROWS_AS(load_sub_root_datum(fx("a3.json")), InputError);
}

TEST_CASE("save and reload round-trips") {
    const RootDatum wild = load_root_datum(fx("affine.json"));
    save_root_datum(wild, "/tmp/qn_roundtrip_datum.json");
    CHECK(load_root_datum("/tmp/qn_roundtrip_datum.json") == wild);

    const SubRootDatum s = load_sub_root_datum(fx("sub_affine.json"));
    save_root_datum(s.ambient(), "/tmp/qn_amb.json");
    save_root_datum(s.sub(), "/tmp/qn_sub.json");
    save_sub_root_datum(s, "/tmp/qn_subdatum.json", "qn_amb.json",
                        "qn_sub.json");
    check_equal(load_sub_root_datum("/tmp/qn_subdatum.json"), s);
}
