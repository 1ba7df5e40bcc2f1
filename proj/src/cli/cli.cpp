#include "rimfloer/cli/cli.hpp"

#include "rimfloer/alexander/alexander.hpp"
#include "rimfloer/braid/braid.hpp"
#include "rimfloer/error.hpp"
#include "rimfloer/grid/hfk.hpp"
#include "rimfloer/polyalg/factor.hpp"
#include "rimfloer/polyalg/omega.hpp"
#include "rimfloer/polyalg/text.hpp"
#include "rimfloer/rimcalc/rimcalc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace rimfloer::cli {

using nlohmann::json;
using polyalg::LaurentPoly;
using polyalg::Ring;

const char *version() noexcept { return RIMFLOER_VERSION; }

namespace {

constexpr int kSchemaVersion = 1;

/// Destination of the machine report: none, stdout ("-") or a file.
struct JsonTarget {
    bool requested = false;
    std::string path;

    [[nodiscard]] bool to_stdout() const { return requested && (path.empty() || path == "-"); }
};

class Table {
  public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream &out) const {
        std::vector<std::size_t> width;
        for (const auto &row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto &row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) line += "  ";
                line += row[i];
                if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
            }
            out << line << '\n';
        }
    }

  private:
    std::vector<std::vector<std::string>> rows_;
};

std::string ring_text(Ring r) { return std::string(polyalg::ring_name(r)); }

std::vector<std::int64_t> parse_int_list(const std::string &text, const char *what) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        const std::size_t end = std::min(text.find(',', i), text.size());
        const std::string item = text.substr(i, end - i);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw ParseError(std::string("expected a comma separated list of integers for ") + what, i);
        }
        out.push_back(v);
        i = end + 1;
    }
    return out;
}

/// "a..b", "a" or "a,b,c".
std::vector<int> parse_indices(const std::string &text) {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = parse_int_list(text.substr(0, dots), "--n");
        const auto hi = parse_int_list(text.substr(dots + 2), "--n");
        if (lo.size() != 1 || hi.size() != 1) throw ParseError("expected a range a..b for --n", dots);
        if (hi[0] - lo[0] > 10000) throw Error(ErrorCode::InvalidArgument, "index range too long");
        std::vector<int> out;
        for (auto n = lo[0]; n <= hi[0]; ++n) out.push_back(static_cast<int>(n));
        return out;
    }
    std::vector<int> out;
    for (auto v : parse_int_list(text, "--n")) out.push_back(static_cast<int>(v));
    return out;
}

void emit_json(const JsonTarget &target, json report, std::ostream &out) {
    report["version"] = version();
    report["schema_version"] = kSchemaVersion;
    if (target.to_stdout()) {
        out << report.dump(2) << '\n';
        return;
    }
    std::ofstream file(target.path);
    if (!file) throw Error(ErrorCode::FileNotFound, "cannot write " + target.path);
    file << report.dump(2) << '\n';
}

/// Human text goes to stdout unless the JSON report does.
struct Reporter {
    const JsonTarget &json_target;
    std::ostream &out;

    [[nodiscard]] bool human() const { return !json_target.to_stdout(); }
    void finish(const json &report) const {
        if (json_target.requested) emit_json(json_target, report, out);
    }
};

std::vector<Ring> rings_for(const std::string &ring) {
    if (ring.empty()) return {Ring::GF2, Ring::Rat};
    return {polyalg::parse_ring(ring)};
}

// alex

struct AlexArgs {
    std::string braid;
    std::string ring;
    bool irr = false;
};

void cmd_alex(const AlexArgs &a, const Reporter &r) {
    const braid::BraidWord b = braid::parse_braid(a.braid);
    const LaurentPoly delta = alexander::alexander_from_braid(b);
    json report = {{"command", "alex"},
                   {"input", {{"braid", a.braid}}},
                   {"alexander", polyalg::format_poly(delta)},
                   {"normalization", "symmetric, value 1 at t = 1"}};
    if (r.human()) {
        r.out << "braid      " << braid::format_braid(b) << '\n';
        r.out << "alexander  " << polyalg::format_poly(delta) << '\n';
    }
    if (a.irr) {
        json irr = json::object();
        for (const Ring ring : rings_for(a.ring)) {
            const auto v = alexander::irr_count(delta, ring);
            irr[ring_text(ring)] = v.to_string();
            if (r.human()) r.out << "irr(" << ring_text(ring) << ")" << std::string(ring == Ring::GF2 ? 3 : 4, ' ') << v.to_string() << '\n';
        }
        report["irr"] = irr;
    }
    r.finish(report);
}

// factor

struct PolyArgs {
    std::string poly;
    std::string ring = "q";
    std::size_t dim = 0;
    std::string vector;
};

void cmd_factor(const PolyArgs &a, const Reporter &r) {
    const Ring ring = polyalg::parse_ring(a.ring);
    const LaurentPoly p = polyalg::parse_poly(a.poly, ring);
    const polyalg::Factorization f = polyalg::factor(p);
    json factors = json::array();
    Table table({"factor", "multiplicity"});
    for (const auto &fac : f.factors) {
        factors.push_back({{"poly", polyalg::format_poly(fac.poly)}, {"multiplicity", fac.multiplicity}});
        table.add({polyalg::format_poly(fac.poly), std::to_string(fac.multiplicity)});
    }
    const std::string reported = ring_text(f.unit.ring());
    if (r.human()) {
        r.out << "poly   " << a.poly << '\n';
        r.out << "ring   " << reported << '\n';
        r.out << "unit   " << polyalg::format_poly(f.unit) << '\n';
        table.print(r.out);
        r.out << "irreducible factors: " << f.irreducible_count() << '\n';
    }
    r.finish({{"command", "factor"},
              {"input", {{"poly", a.poly}, {"ring", a.ring}}},
              {"ring", reported},
              {"unit", polyalg::format_poly(f.unit)},
              {"factors", factors},
              {"irreducible_count", f.irreducible_count()}});
}

// omega

void cmd_omega(const PolyArgs &a, const Reporter &r) {
    const Ring ring = polyalg::parse_ring(a.ring);
    const LaurentPoly p = polyalg::parse_poly(a.poly, ring, a.dim);
    json report = {{"command", "omega"}, {"input", {{"poly", a.poly}, {"ring", a.ring}}}};
    if (!a.vector.empty()) {
        const polyalg::Exponent v = parse_int_list(a.vector, "--vector");
        const auto cert = polyalg::omega_substituted(p, v);
        report["input"]["vector"] = v;
        report["substituted"] = polyalg::format_poly(cert.substituted);
        report["basis_change"] = cert.basis_change.rows();
        report["reduced"] = polyalg::format_poly(cert.reduced);
        report["omega"] = cert.value.to_string();
        if (r.human()) {
            r.out << "substituted  " << polyalg::format_poly(cert.substituted) << '\n';
            r.out << "reduced      " << polyalg::format_poly(cert.reduced) << '\n';
            r.out << "omega        " << cert.value.to_string() << '\n';
        }
    } else {
        const auto v = polyalg::omega_ring(p);
        report["omega"] = v.to_string();
        if (r.human()) r.out << "omega  " << v.to_string() << '\n';
    }
    r.finish(report);
}

// grid-hfk

struct GridArgs {
    std::string file;
    int max_size = 0;
    int threads = 0;
    bool reference = false;
};

json ranks_json(const grid::BigradedRanks &ranks) {
    json out = json::array();
    for (const auto &[key, v] : ranks) out.push_back({{"maslov", key.first}, {"alexander", key.second}, {"rank", v}});
    return out;
}

void cmd_grid_hfk(const GridArgs &a, const Reporter &r) {
    const grid::GridDiagram g = grid::load_grid(a.file);
    grid::HomologyOptions options;
    if (a.max_size > 0) options.max_size = std::min(a.max_size, grid::kMaxGridSize);
    options.threads = a.threads;
    const grid::BigradedRanks full = a.reference ? grid::homology_reference(g, options) : grid::homology(g, options);
    const grid::BigradedRanks hfk = grid::deconvolve(full, g.size());
    const LaurentPoly chi = grid::euler_characteristic(hfk);
    if (r.human()) {
        r.out << "grid size  " << g.size() << '\n';
        Table table({"maslov", "alexander", "rank"});
        for (auto it = hfk.rbegin(); it != hfk.rend(); ++it) {
            table.add({std::to_string(it->first.first), std::to_string(it->first.second), std::to_string(it->second)});
        }
        table.print(r.out);
        r.out << "total rank " << grid::total_rank(hfk) << '\n';
        r.out << "euler      " << polyalg::format_poly(chi) << '\n';
    }
    r.finish({{"command", "grid-hfk"},
              {"input", {{"grid", a.file}}},
              {"size", g.size()},
              {"hfk", ranks_json(hfk)},
              {"total_rank", grid::total_rank(hfk)},
              {"tilde_total_rank", grid::total_rank(full)},
              {"euler_characteristic", polyalg::format_poly(chi)}});
}

// transverse

struct TransverseArgs {
    std::string braid;
    bool minus = false;
    int max_size = 0;
};

void cmd_transverse(const TransverseArgs &a, const Reporter &r) {
    const braid::BraidWord b = braid::parse_braid(a.braid);
    const long sl = braid::self_linking(b);
    const grid::GridDiagram g = braid::transverse_grid(b);
    const grid::CycleClass c = grid::transverse_state(g, a.minus);
    grid::HomologyOptions options;
    if (a.max_size > 0) options.max_size = std::min(a.max_size, grid::kMaxGridSize);
    const bool nonzero = grid::is_nonzero_class(c, g, options);
    const std::string name = a.minus ? "x-" : "x+";
    std::string state;
    for (int v : c.states.front()) state += (state.empty() ? "" : " ") + std::to_string(v + 1);
    if (r.human()) {
        r.out << "braid          " << braid::format_braid(b) << '\n';
        r.out << "self-linking   " << sl << '\n';
        r.out << "grid size      " << g.size() << '\n';
        r.out << "state " << name << "       " << state << '\n';
        r.out << "maslov         " << c.grading.maslov << '\n';
        r.out << "alexander      " << c.grading.alexander() << '\n';
        r.out << "nonzero        " << (nonzero ? "yes" : "no") << '\n';
    }
    r.finish({{"command", "transverse"},
              {"input", {{"braid", a.braid}, {"minus", a.minus}}},
              {"self_linking", sl},
              {"grid", {{"X", g.x()}, {"O", g.o()}}},
              {"state", name},
              {"maslov", c.grading.maslov},
              {"alexander", c.grading.alexander()},
              {"nonzero", nonzero},
              {"convention", "grid of the mirror braid; x+ at northeast corners of X cells"}});
}

// rim-family

struct FamilyArgs {
    int genus = 1;
    std::string curve;
    std::string pattern_braid;
    std::string pattern_poly;
    std::string n = "1..10";
    std::string ring = "f2";
    std::string base_omega;
    std::string base_qp;
};

void cmd_rim_family(const FamilyArgs &a, const Reporter &r) {
    rimcalc::FamilySpec spec;
    spec.genus = a.genus;
    spec.curve = parse_int_list(a.curve, "--curve");
    if (!a.pattern_braid.empty()) {
        spec.pattern = alexander::alexander_from_braid(braid::parse_braid(a.pattern_braid));
        spec.pattern_source = "braid " + a.pattern_braid;
    } else {
        spec.pattern = polyalg::parse_poly(a.pattern_poly, Ring::Int);
        spec.pattern_source = "poly " + a.pattern_poly;
    }
    spec.indices = parse_indices(a.n);
    spec.ring = polyalg::parse_ring(a.ring);
    std::vector<std::string> base_log;
    if (!a.base_qp.empty()) {
        const auto word = braid::parse_quasipositive(a.base_qp);
        const auto qp = rimcalc::omega_quasipositive(word);
        spec.base = qp.value;
        spec.base_provenance = qp.provenance + ", genus " + std::to_string(qp.genus);
        const auto check = rimcalc::check_nonvanishing(word);
        base_log.push_back("transverse class nonvanishing: " + check.note);
    } else if (!a.base_omega.empty()) {
        if (a.base_omega == "-inf") {
            spec.base = polyalg::OmegaValue::neg_infinity();
        } else {
            const auto v = parse_int_list(a.base_omega, "--base-omega");
            if (v.size() != 1) throw ParseError("expected one integer for --base-omega", 0);
            spec.base = polyalg::OmegaValue(v[0]);
        }
        spec.base_provenance = "user-asserted";
    }
    rimcalc::Certificate cert = rimcalc::certify_family(spec);
    cert.hypothesis_log.insert(cert.hypothesis_log.end(), base_log.begin(), base_log.end());
    if (r.human()) {
        r.out << "pattern  " << polyalg::format_poly(spec.pattern) << '\n';
        r.out << "curve    " << a.curve << '\n';
        Table table({"n", "omega_f2", "omega_q", "lef_poly"});
        for (const auto &row : cert.rows) {
            table.add({std::to_string(row.n), row.omega_f2.to_string(), row.omega_q.to_string(),
                       polyalg::format_poly(row.lefschetz)});
        }
        table.print(r.out);
        for (const auto &line : cert.hypothesis_log) r.out << "- " << line << '\n';
        r.out << "verdict  " << (cert.verdict ? "pairwise distinct" : "not certified") << '\n';
    }
    json report = rimcalc::to_json(cert);
    report["command"] = "rim-family";
    r.finish(report);
}

json error_json(const Error &e) {
    return {{"error", {{"code", std::string(error_code_name(e.code())), }, {"message", e.what()}}}};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Knot Floer and surface invariant calculator", "rimfloer"};
    app.set_version_flag("--version", std::string("rimfloer ") + version());
    app.require_subcommand(1);

    JsonTarget json_target;
    std::vector<CLI::Option *> json_options;
    auto add_json = [&](CLI::App *cmd) {
        json_options.push_back(
            cmd->add_option("--json", json_target.path, "Write the JSON report to PATH (stdout when omitted or -)")
                ->expected(0, 1));
    };
    const auto rings = CLI::IsMember({"f2", "q"});

    AlexArgs alex;
    auto *c_alex = app.add_subcommand("alex", "Alexander polynomial of a braid closure");
    c_alex->add_option("--braid", alex.braid, "Braid word \"n: g1 g2 ...\"")->required();
    c_alex->add_option("--ring", alex.ring, "Ring for factor counts")->check(rings);
    c_alex->add_flag("--irr", alex.irr, "Report irreducible factor counts");
    add_json(c_alex);

    PolyArgs fac;
    auto *c_factor = app.add_subcommand("factor", "Factor a univariate Laurent polynomial");
    c_factor->add_option("--poly", fac.poly, "Polynomial in t")->required();
    c_factor->add_option("--ring", fac.ring, "Coefficient ring")->check(CLI::IsMember({"f2", "q", "z"}));
    add_json(c_factor);

    PolyArgs om;
    auto *c_omega = app.add_subcommand("omega", "Irreducible factor count Omega");
    c_omega->add_option("--poly", om.poly, "Polynomial in t or z1..zn")->required();
    c_omega->add_option("--ring", om.ring, "Coefficient ring")->check(rings);
    c_omega->add_option("--dim", om.dim, "Number of variables (default: inferred)");
    c_omega->add_option("--vector", om.vector, "Substitute t -> z^v for a primitive v, e.g. 1,0");
    add_json(c_omega);

    GridArgs gh;
    auto *c_grid = app.add_subcommand("grid-hfk", "Knot Floer homology of a grid diagram");
    c_grid->add_option("--grid", gh.file, "Grid file with X: and O: lines")->required();
    c_grid->add_option("--max-size", gh.max_size, "Grid size cap (default 8)")->check(CLI::Range(2, grid::kMaxGridSize));
    c_grid->add_option("--threads", gh.threads, "Worker threads")->check(CLI::NonNegativeNumber);
    c_grid->add_flag("--reference", gh.reference, "Use the serial reference implementation");
    add_json(c_grid);

    TransverseArgs tr;
    auto *c_tr = app.add_subcommand("transverse", "Transverse invariant of a braid closure");
    c_tr->add_option("--braid", tr.braid, "Braid word \"n: g1 g2 ...\"")->required();
    c_tr->add_flag("--minus", tr.minus, "Use the southwest-corner state x-");
    c_tr->add_option("--max-size", tr.max_size, "Grid size cap (default 8)")->check(CLI::Range(2, grid::kMaxGridSize));
    add_json(c_tr);

    FamilyArgs fam;
    auto *c_fam = app.add_subcommand("rim-family", "Certificate for a family of 1-twist rim surgeries");
    c_fam->add_option("--genus", fam.genus, "Surface genus")->default_val(1);
    c_fam->add_option("--curve", fam.curve, "Curve class, comma separated, length 2g")->required();
    auto *pb = c_fam->add_option("--pattern-braid", fam.pattern_braid, "Pattern knot as a braid word");
    auto *pp = c_fam->add_option("--pattern-poly", fam.pattern_poly, "Pattern Alexander polynomial");
    pb->excludes(pp);
    c_fam->add_option("--n", fam.n, "Indices: a..b or a,b,c")->default_val("1..10");
    c_fam->add_option("--ring", fam.ring, "Ring deciding the verdict")->check(rings);
    auto *bo = c_fam->add_option("--base-omega", fam.base_omega, "Omega of the base surface (user-asserted)");
    auto *bq = c_fam->add_option("--base-qp", fam.base_qp, "Quasipositive word whose surface is the base");
    bo->excludes(bq);
    add_json(c_fam);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }
    for (const auto *opt : json_options) json_target.requested |= opt->count() > 0;
    if (c_fam->parsed() && fam.pattern_braid.empty() && fam.pattern_poly.empty()) {
        err << "rim-family: one of --pattern-braid or --pattern-poly is required\n";
        return 2;
    }

    const Reporter reporter{json_target, out};
    try {
        if (c_alex->parsed()) cmd_alex(alex, reporter);
        else if (c_factor->parsed()) cmd_factor(fac, reporter);
        else if (c_omega->parsed()) cmd_omega(om, reporter);
        else if (c_grid->parsed()) cmd_grid_hfk(gh, reporter);
        else if (c_tr->parsed()) cmd_transverse(tr, reporter);
        else if (c_fam->parsed()) cmd_rim_family(fam, reporter);
    } catch (const Error &e) {
        if (json_target.requested) {
            json report = error_json(e);
            report["version"] = version();
            report["schema_version"] = kSchemaVersion;
            out << report.dump(2) << '\n';
        }
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    }
    return 0;
}

}  // namespace rimfloer::cli
