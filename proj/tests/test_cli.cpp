#include "oracles/alexander_oracle.hpp"
#include "oracles/dense_grid.hpp"
#include "oracles/f2_factor.hpp"
#include "schema_check.hpp"

#include "rimfloer/cli/cli.hpp"
#include "rimfloer/polyalg/text.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rimfloer::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char *name) { return std::string(RIMFLOER_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Compares against tests/golden/<name>; RIMFLOER_UPDATE_GOLDEN=1 rewrites it.
// Paths under the data directory are written as @DATA@.
void check_golden(const std::string &name, std::string actual) {
    const std::string dir = RIMFLOER_TEST_DATA;
    for (std::size_t at; (at = actual.find(dir)) != std::string::npos;) actual.replace(at, dir.size(), "@DATA@");
    const fs::path path = fs::path(RIMFLOER_GOLDEN_DIR) / name;
    if (std::getenv("RIMFLOER_UPDATE_GOLDEN")) {
        std::ofstream(path) << actual;
        return;
    }
    REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << name);
    CHECK(slurp(path) == actual);
}

const json &report_schema() {
    static const json s = json::parse(slurp(RIMFLOER_SCHEMA_PATH));
    return s;
}

json checked_json(const Outcome &o) {
    const json j = json::parse(o.out);
    const auto errors = schema::validate(j, report_schema());
    for (const auto &e : errors) FAIL_CHECK(e);
    CHECK(j.at("version") == rimfloer::cli::version());
    return j;
}

oracle::Poly poly_of(const std::string &text) {
    const auto p = rimfloer::polyalg::parse_poly(text, rimfloer::polyalg::Ring::Int);
    oracle::Poly out;
    for (const auto &[e, c] : p.terms()) out.c[static_cast<int>(e[0])] = c.get_num().get_si();
    return out;
}

std::uint64_t f2_mask(const oracle::Poly &p) {
    const int lo = p.c.begin()->first;
    std::uint64_t m = 0;
    for (auto [e, v] : p.c)
        if (v % 2 != 0) m |= std::uint64_t{1} << (e - lo);
    return m;
}

oracle::Poly power(const oracle::Poly &p, int n) {
    oracle::Poly r = oracle::Poly::constant(1);
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

// Knot Floer ranks from the tilde ranks: divide the Poincare polynomial by
// (1 + q^-1 a^-1)^(n-1), keys (M, 2A).
std::map<std::pair<int, int>, long> oracle_hfk(const oracle::DenseGrid &g) {
    auto tilde = oracle::homology(g);
    for (int k = 1; k < g.n(); ++k) {
        std::map<std::pair<int, int>, long> q;
        while (!tilde.empty()) {
            auto top = std::prev(tilde.end());
            const auto key = top->first;
            const long v = top->second;
            q[key] += v;
            tilde.erase(top);
            const std::pair<int, int> low{key.first - 1, key.second - 2};
            if ((tilde[low] -= v) == 0) tilde.erase(low);
        }
        tilde = q;
    }
    return tilde;
}

}  // namespace

TEST_CASE("cli: version flag and usage errors") {
    const Outcome v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == std::string("rimfloer ") + rimfloer::cli::version() + "\n");
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"alex"}).code == 2);
    CHECK(run({"alex", "--braid", "2: 1", "--ring", "z"}).code == 2);
    CHECK(run({"rim-family", "--curve", "1,0"}).code == 2);
    CHECK(run({"rim-family", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--pattern-poly", "t"}).code == 2);
    CHECK(run({"rim-family", "--curve", "1,0", "--pattern-poly", "1", "--base-omega", "1", "--base-qp", "2: [|1]"}).code == 2);
}

TEST_CASE("cli: alex on the trefoil") {
    const Outcome o = run({"alex", "--braid", "2: 1 1 1"});
    CHECK(o.code == 0);
    CHECK(o.out.find("t^-1 + -1 + t") != std::string::npos);
    check_golden("alex_trefoil.txt", o.out);

    const Outcome j = run({"alex", "--braid", "2: 1 1 1", "--json"});
    const json r = checked_json(j);
    CHECK(poly_of(r["alexander"]) == oracle::alexander_unreduced_burau(2, {1, 1, 1}));
    check_golden("alex_trefoil.json", j.out);
}

TEST_CASE("cli: alex with factor counts") {
    const std::vector<std::pair<std::string, std::pair<int, std::vector<int>>>> cases = {
        {"3: 1 -2 1 -2", {3, {1, -2, 1, -2}}},
        {"3: 1 1 1 2 2 2", {3, {1, 1, 1, 2, 2, 2}}},
        {"4: 1 1 2 -1 -3 2 -3", {4, {1, 1, 2, -1, -3, 2, -3}}},
    };
    int index = 0;
    for (const auto &[word, letters] : cases) {
        CAPTURE(word);
        const Outcome o = run({"alex", "--braid", word, "--irr", "--ring", "f2", "--json"});
        REQUIRE(o.code == 0);
        const json r = checked_json(o);
        const oracle::Poly delta = oracle::alexander_unreduced_burau(letters.first, letters.second);
        CHECK(poly_of(r["alexander"]) == delta);
        CHECK(r["irr"]["f2"] == std::to_string(oracle::f2_factor_count(f2_mask(delta))));
        check_golden("alex_irr_" + std::to_string(index++) + ".json", o.out);
    }
}

TEST_CASE("cli: factor over GF(2) and Q") {
    const Outcome f2 = run({"factor", "--poly", "t^6 + 1", "--ring", "f2", "--json"});
    REQUIRE(f2.code == 0);
    const json r2 = checked_json(f2);
    CHECK(r2["irreducible_count"] == oracle::f2_factor_count(0b1000001));
    for (const auto &fac : r2["factors"]) CHECK(oracle::f2_factor_count(f2_mask(poly_of(fac["poly"]))) == 1);
    check_golden("factor_f2.json", f2.out);

    const Outcome q = run({"factor", "--poly", "t^4 - 1", "--ring", "q", "--json"});
    REQUIRE(q.code == 0);
    const json rq = checked_json(q);
    oracle::Poly product = poly_of(rq["unit"]);
    for (const auto &fac : rq["factors"]) product = product * power(poly_of(fac["poly"]), fac["multiplicity"]);
    CHECK(product == poly_of("t^4 - 1"));
    CHECK(rq["irreducible_count"] == 3);
    check_golden("factor_q.json", q.out);

    const Outcome text = run({"factor", "--poly", "t^6 + 1", "--ring", "f2"});
    CHECK(text.code == 0);
    check_golden("factor_f2.txt", text.out);
}

TEST_CASE("cli: omega") {
    const Outcome o = run({"omega", "--poly", "t^4 + t^3 + t^2 + t + 1", "--ring", "f2", "--json"});
    REQUIRE(o.code == 0);
    CHECK(checked_json(o)["omega"] == std::to_string(oracle::f2_factor_count(0b11111)));
    check_golden("omega_f2.json", o.out);

    const Outcome s = run({"omega", "--poly", "t^-1 + 1 + t", "--ring", "f2", "--vector", "2,3", "--json"});
    REQUIRE(s.code == 0);
    const json rs = checked_json(s);
    CHECK(rs["omega"] == "1");
    CHECK(rs["reduced"] == "z1^-1 + 1 + z1");
    check_golden("omega_vector.json", s.out);

    const Outcome zero = run({"omega", "--poly", "0", "--ring", "q"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "omega  -inf\n");

    const Outcome bad = run({"omega", "--poly", "t^-1 + 1 + t", "--ring", "q", "--vector", "2,4", "--json"});
    CHECK(bad.code == 1);
    CHECK(checked_json(bad)["error"]["code"] == "NonPrimitiveVector");
}

TEST_CASE("cli: grid-hfk matches the dense oracle") {
    const std::vector<std::pair<const char *, oracle::DenseGrid>> grids = {
        {"unknot.grid", {{0, 1}, {1, 0}}},
        {"trefoil.grid", {{2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}}},
        {"figure8.grid", {{3, 1, 2, 5, 0, 4}, {5, 4, 0, 1, 3, 2}}},
        {"five_two.grid", {{1, 5, 4, 3, 0, 6, 2}, {3, 2, 6, 5, 4, 1, 0}}},
    };
    for (const auto &[file, g] : grids) {
        CAPTURE(file);
        const Outcome o = run({"grid-hfk", "--grid", data(file), "--json"});
        REQUIRE(o.code == 0);
        const json r = checked_json(o);
        std::map<std::pair<int, int>, long> got;
        for (const auto &e : r["hfk"]) got[{e["maslov"], 2 * e["alexander"].get<int>()}] = e["rank"];
        CHECK(got == oracle_hfk(g));
        check_golden(std::string("grid_") + file + ".json", o.out);
    }
    const Outcome text = run({"grid-hfk", "--grid", data("figure8.grid"), "--threads", "2"});
    CHECK(text.code == 0);
    check_golden("grid_figure8.txt", text.out);
    const Outcome ref = run({"grid-hfk", "--grid", data("figure8.grid"), "--reference"});
    CHECK(ref.out == text.out);
}

TEST_CASE("cli: grid-hfk errors") {
    const Outcome missing = run({"grid-hfk", "--grid", "missing.txt"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("file not found") != std::string::npos);
    const Outcome j = run({"grid-hfk", "--grid", "missing.txt", "--json"});
    CHECK(j.code == 1);
    CHECK(checked_json(j)["error"]["code"] == "FileNotFound");
    check_golden("grid_missing.json", j.out);
    CHECK(run({"grid-hfk", "--grid", data("five_two.grid"), "--max-size", "6"}).code == 1);
    CHECK(run({"grid-hfk", "--grid", data("five_two.grid"), "--max-size", "99"}).code == 2);
}

TEST_CASE("cli: transverse invariant") {
    struct Case {
        std::string word;
        int strands;
        std::vector<int> letters;
    };
    const std::vector<Case> cases = {{"2: 1 1 1", 2, {1, 1, 1}}, {"3: 1 -2 1 -2", 3, {1, -2, 1, -2}},
                                     {"2: -1 -1 -1", 2, {-1, -1, -1}}};
    int index = 0;
    for (const auto &c : cases) {
        CAPTURE(c.word);
        const Outcome o = run({"transverse", "--braid", c.word, "--json"});
        REQUIRE(o.code == 0);
        const json r = checked_json(o);
        const int sl = static_cast<int>(c.letters.size()) - 2 * static_cast<int>(std::count_if(
                           c.letters.begin(), c.letters.end(), [](int g) { return g < 0; })) - c.strands;
        CHECK(r["self_linking"] == sl);
        // x+ on the reported grid: northeast corner of each X.
        oracle::DenseGrid g{r["grid"]["X"].get<std::vector<int>>(), r["grid"]["O"].get<std::vector<int>>()};
        const int n = g.n();
        oracle::Perm xplus(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) xplus[static_cast<std::size_t>((i + 1) % n)] = (g.x[static_cast<std::size_t>(i)] + 1) % n;
        const auto [m, twice_a] = oracle::grading(xplus, g);
        CHECK(r["maslov"] == m);
        CHECK(2 * r["alexander"].get<int>() == twice_a);
        CHECK(m == sl + 1);
        CHECK(oracle::differential(xplus, g).empty());
        check_golden("transverse_" + std::to_string(index++) + ".json", o.out);
    }
    const Outcome text = run({"transverse", "--braid", "2: 1 1 1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("nonzero        yes") != std::string::npos);
    check_golden("transverse_trefoil.txt", text.out);
    CHECK(run({"transverse", "--braid", "2: 1 1"}).code == 1);
}

TEST_CASE("cli: rim-family certificate") {
    const Outcome o = run({"rim-family", "--genus", "1", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--n", "1..3"});
    REQUIRE(o.code == 0);
    check_golden("rim_family_trefoil.txt", o.out);

    const fs::path file = fs::temp_directory_path() / "rimfloer_cli_certificate.json";
    const Outcome j = run({"rim-family", "--genus", "1", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--n",
                           "1..3", "--ring", "f2", "--json", file.string()});
    REQUIRE(j.code == 0);
    const Outcome again = run({"rim-family", "--genus", "1", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--n",
                               "1..3", "--ring", "f2", "--json"});
    CHECK(slurp(file) == again.out);
    fs::remove(file);
    const json r = checked_json(again);
    const oracle::Poly delta = oracle::alexander_unreduced_burau(2, {1, 1, 1});
    const int irr = oracle::f2_factor_count(f2_mask(delta));
    REQUIRE(r["rows"].size() == 3);
    for (int n = 1; n <= 3; ++n) {
        const json &row = r["rows"][static_cast<std::size_t>(n - 1)];
        CHECK(row["n"] == n);
        CHECK(row["omega_f2"] == std::to_string(n * irr));
        CHECK(poly_of(row["lef_poly"]) == power(delta, n));
    }
    CHECK(r["verdict"] == true);
    check_golden("rim_family_trefoil.json", again.out);

    const Outcome list = run({"rim-family", "--curve", "2,3", "--pattern-poly", "t^-1 - 1 + t", "--n", "2,5", "--base-omega",
                              "4", "--json"});
    REQUIRE(list.code == 0);
    const json rl = checked_json(list);
    CHECK(rl["rows"][0]["omega_f2"] == "6");
    CHECK(rl["rows"][1]["omega_f2"] == "9");
    CHECK(rl["spec"]["base_provenance"] == "user-asserted");
    check_golden("rim_family_list.json", list.out);

    const Outcome qp = run({"rim-family", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--n", "1..2", "--base-qp",
                            "2: [|1][|1][|1]", "--json"});
    REQUIRE(qp.code == 0);
    const json rq = checked_json(qp);
    CHECK(rq["spec"]["base_omega"] == "0");
    check_golden("rim_family_qp.json", qp.out);
}

TEST_CASE("cli: rim-family domain errors") {
    const Outcome bad_curve = run({"rim-family", "--curve", "2,4", "--pattern-braid", "2: 1 1 1", "--json"});
    CHECK(bad_curve.code == 1);
    CHECK(checked_json(bad_curve)["error"]["code"] == "NonPrimitiveCurve");
    CHECK(run({"rim-family", "--curve", "1,0,0", "--pattern-braid", "2: 1 1 1"}).code == 1);
    CHECK(run({"rim-family", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--base-omega", "-inf"}).code == 1);
    CHECK(run({"rim-family", "--curve", "1,0", "--pattern-braid", "2: 1 1 1", "--n", "3,2"}).code == 1);
    CHECK(run({"rim-family", "--curve", "1,x", "--pattern-braid", "2: 1 1 1"}).code == 2);
    CHECK(run({"rim-family", "--curve", "1,0", "--pattern-braid", "2: 1 1"}).code == 1);
}

TEST_CASE("cli: parse errors exit 2") {
    const Outcome o = run({"alex", "--braid", "2: x"});
    CHECK(o.code == 2);
    CHECK(o.err.find("ParseError") != std::string::npos);
    CHECK(run({"factor", "--poly", "t^^2"}).code == 2);
    CHECK(run({"grid-hfk", "--grid", data("trefoil.grid"), "--threads", "-1"}).code == 2);
}
