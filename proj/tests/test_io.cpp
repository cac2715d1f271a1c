#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "gptk/classify.hpp"
#include "gptk/io.hpp"

using namespace gptk;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("gptk-test-" + std::to_string(::getpid()) + "-" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string operator/(const std::string& name) const {
        return (dir / name).string();
    }
};

Module simple_over_truncated(const AlgebraPtr& a) {
    Module s;
    s.algebra = a;
    s.dim = 1;
    s.actions.assign(a->dim, Matrix(a->field, 1, 1));
    s.actions[0].set(0, 0, 1);
    return s;
}

} // namespace

TEST_CASE("digest is stable and content sensitive") {
    CHECK(fnv1a_digest("") == fnv1a_digest(""));
    CHECK(fnv1a_digest("a") != fnv1a_digest("b"));
    CHECK(fnv1a_digest("abc").size() == 16);
}

TEST_CASE("algebra round trip in structure form") {
    TempDir tmp;
    auto l2 = truncated_polynomial(2, 2);
    save_algebra(tmp / "l2.json", l2);
    auto back = load_algebra(tmp / "l2.json");
    CHECK(back->dim == 2);
    CHECK(back->left_mult == l2->left_mult);
    CHECK(back->unit == l2->unit);
}

TEST_CASE("algebra files in truncated and quiver form") {
    TempDir tmp;
    atomic_write(tmp / "t.json",
                 R"({"kind":"algebra","p":3,"truncated":{"t":6}})");
    auto lt = load_algebra(tmp / "t.json");
    CHECK(lt->dim == 6);
    CHECK(lt->field.p == 3);

    atomic_write(tmp / "q.json", R"({"kind":"algebra","p":2,"quiver":{
        "vertices":2,"arrows":[[0,1]],"truncation":2}})");
    auto a2 = load_algebra(tmp / "q.json");
    CHECK(a2->dim == 3);

    atomic_write(tmp / "bad.json", R"({"kind":"module"})");
    CHECK_THROWS(load_algebra(tmp / "bad.json"));
    atomic_write(tmp / "garbage.json", "not json");
    CHECK_THROWS(load_algebra(tmp / "garbage.json"));
}

TEST_CASE("module round trip with digest checking") {
    TempDir tmp;
    auto l2 = truncated_polynomial(2, 2);
    save_algebra(tmp / "l2.json", l2);
    Module s = simple_over_truncated(l2);
    save_module(tmp / "s.json", s, tmp / "l2.json");
    Module back = load_module(tmp / "s.json");
    CHECK(back.dim == 1);
    CHECK(back.actions == s.actions);

    // tampering with the referenced algebra is caught by the digest
    atomic_write(tmp / "l2.json",
                 read_file(tmp / "l2.json") + "\n");
    CHECK_THROWS_WITH_AS(load_module(tmp / "s.json"),
                         doctest::Contains("digest"), std::invalid_argument);
}

TEST_CASE("bimodule, triangular, and triple files") {
    TempDir tmp;
    auto l2 = truncated_polynomial(2, 2);
    save_algebra(tmp / "l2.json", l2);
    save_bimodule(tmp / "m.json", regular_bimodule(l2), tmp / "l2.json",
                  tmp / "l2.json");
    Bimodule m = load_bimodule(tmp / "m.json");
    CHECK(m.dim == 2);
    CHECK(validate_bimodule(m).ok);

    atomic_write(tmp / "g.json",
                 R"({"kind":"triangular","t2_of":{"path":"l2.json"}})");
    auto g = load_triangular(tmp / "g.json");
    CHECK(g->gamma->dim == 6);

    Module s = simple_over_truncated(g->r);
    save_module(tmp / "s.json", s, tmp / "l2.json");
    Module r = regular_module(g->s);
    save_module(tmp / "r.json", r, tmp / "l2.json");

    Matrix phi(2, 2, 1, {0, 1});
    auto t = make_triple(g, s, r, phi);
    save_triple(tmp / "t.json", t, tmp / "g.json", tmp / "s.json",
                tmp / "r.json");
    auto back = load_triple(tmp / "t.json");
    CHECK(back.x.dim == 1);
    CHECK(back.y.dim == 2);
    CHECK(back.phi == phi);

    // a non-S-linear phi ([[1],[0]] maps into the top) is rejected
    Matrix bad(2, 2, 1, {1, 0});
    auto wrong = t;
    wrong.phi = bad;
    save_triple(tmp / "t-bad.json", wrong, tmp / "g.json", tmp / "s.json",
                tmp / "r.json");
    CHECK_THROWS_WITH_AS(load_triple(tmp / "t-bad.json"),
                         doctest::Contains("S-linear"), std::invalid_argument);
}

TEST_CASE("census files are self-contained and bit-stable") {
    TempDir tmp;
    auto l2 = truncated_polynomial(2, 2);
    auto g = t2_extension(l2);
    auto base = gp_base_list(l2, 4, GPStrategy::SelfInjective);
    auto census = enumerate_gp_gamma(g, base, base, 4,
                                     check_condition1(g->m, base),
                                     check_condition2(g->m, base));
    save_census(tmp / "c1.json", census, 0xC0FFEE);
    save_census(tmp / "c2.json", census, 0xC0FFEE);
    CHECK(read_file(tmp / "c1.json") == read_file(tmp / "c2.json"));

    auto back = load_census(tmp / "c1.json");
    CHECK(back.bound == 4);
    CHECK(back.complete);
    CHECK(back.reps.size() == census.reps.size());
    for (std::size_t i = 0; i < back.reps.size(); ++i)
        CHECK(is_isomorphic(back.reps[i].flat, census.reps[i].flat).has_value());

    auto table = census_table(census);
    CHECK(table.find("count=5 bound=4 complete=yes") != std::string::npos);
}

TEST_CASE("atomic write leaves no temporary behind") {
    TempDir tmp;
    atomic_write(tmp / "x.txt", "hello");
    CHECK(read_file(tmp / "x.txt") == "hello");
    CHECK(!fs::exists(tmp / "x.txt.tmp"));
}
