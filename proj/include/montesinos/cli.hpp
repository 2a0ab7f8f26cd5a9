#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error, 3 combination cap exceeded.

#include "montesinos/crosscheck.hpp"
#include "montesinos/family.hpp"
#include "montesinos/report_io.hpp"
#include "montesinos/surface.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace montesinos::cli {

enum class Format { text, json, csv };

struct RunConfig {
    std::string knot_spec;
    Format output_format = Format::text;
    bool include_one = true;
    bool include_two = false;
    bool include_three = true;
    bool dedupe_by_slope = false;
    std::uint64_t combination_cap = 10'000'000;
    bool cross_check = false;
};

struct KnotReports {
    EdgepathSystem reference;
    std::vector<SurfaceReport> reports;
    std::vector<Diagnostic> diagnostics;
};

inline int type_rank(PathType t) { return static_cast<int>(t); }

/// Enumerates, analyzes against the Seifert reference, filters by type, and
/// sorts by slope then type. Type III systems are always enumerated because
/// the reference lives among them.
inline KnotReports analyze_knot(const MontesinosKnot& knot, const RunConfig& cfg) {
    EnumerationOptions opts;
    opts.type_one = cfg.include_one;
    opts.type_two = cfg.include_two;
    opts.type_three = true;
    opts.combination_cap = cfg.combination_cap;
    Enumeration e = enumerate_systems(knot, opts);

    KnotReports out;
    out.reference = find_seifert_system(e.systems);
    out.diagnostics = std::move(e.diagnostics);
    for (const auto& sys : e.systems) {
        if (sys.system_type == PathType::III && !cfg.include_three) continue;
        out.reports.push_back(analyze_surface(sys, out.reference));
    }
    std::stable_sort(out.reports.begin(), out.reports.end(), [](const SurfaceReport& a, const SurfaceReport& b) {
        if (!(a.slope == b.slope)) return a.slope < b.slope;
        return type_rank(a.system.system_type) < type_rank(b.system.system_type);
    });
    if (cfg.dedupe_by_slope) {
        auto last = std::unique(out.reports.begin(), out.reports.end(),
                                [](const SurfaceReport& a, const SurfaceReport& b) { return a.slope == b.slope; });
        out.reports.erase(last, out.reports.end());
    }
    return out;
}

inline std::vector<ReportRecord> records_for(const MontesinosKnot& knot, const std::vector<SurfaceReport>& reports) {
    std::vector<ReportRecord> rows;
    const auto member = family::member_index(knot);
    for (const auto& r : reports) {
        ReportRecord rec = to_record(r);
        if (member && r.system.system_type == PathType::I && r.slope == family::slope_prime(*member) &&
            r.boundary_components == 2)
            rec.note = family::boundary_discrepancy_note(*member);
        rows.push_back(std::move(rec));
    }
    return rows;
}

inline int run_cross_check(const MontesinosKnot& knot, std::ostream& out, std::ostream& err) {
    const CrossCheckReport cc = cross_check_type_one(knot, 64);
    out << "cross-check: " << cc.combinations << " combinations, " << cc.solved << " solved, " << cc.degenerate
        << " degenerate, " << cc.mismatches.size() << " mismatches\n";
    for (const auto& m : cc.mismatches) err << "mismatch: " << m << '\n';
    return cc.mismatches.empty() ? 0 : 1;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MontesinosKnot knot = MontesinosKnot::parse(cfg.knot_spec);
    int cross_check_status = 0;
    if (cfg.cross_check) cross_check_status = run_cross_check(knot, out, err);
    const KnotReports kr = analyze_knot(knot, cfg);
    const auto rows = records_for(knot, kr.reports);
    switch (cfg.output_format) {
        case Format::json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << csv_header() << '\n';
            for (const auto& r : rows) out << to_csv_row(r) << '\n';
            break;
        case Format::text:
            out << "knot M(" << knot.str() << "), reference twist " << system_twist(kr.reference).str() << '\n';
            out << to_text_table(rows);
            for (const auto& r : rows)
                if (r.note) out << "note: slope " << r.slope << ": " << *r.note << '\n';
            break;
    }
    for (const auto& d : kr.diagnostics) err << d.kind << ": " << d.detail << '\n';
    return cross_check_status;
}

inline int cmd_seifert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const MontesinosKnot knot = MontesinosKnot::parse(cfg.knot_spec);
    EnumerationOptions opts;
    opts.type_one = false;
    opts.type_two = false;
    opts.combination_cap = cfg.combination_cap;
    const EdgepathSystem ref = find_seifert_system(enumerate_systems(knot, opts).systems);
    if (cfg.output_format == Format::json) {
        nlohmann::ordered_json j = to_json(ref);
        j["twist"] = system_twist(ref).str();
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "twist " << system_twist(ref).str() << '\n';
    for (const auto& p : ref.paths) out << "  " << p.str() << '\n';
    return 0;
}

struct GapResult {
    std::vector<Fraction> slopes;  // distinct, increasing
    std::optional<Fraction> gap;
    Fraction lower;
    Fraction upper;
};

inline GapResult minimal_gap(const std::vector<SurfaceReport>& reports) {
    GapResult g;
    for (const auto& r : reports) g.slopes.push_back(r.slope);
    std::sort(g.slopes.begin(), g.slopes.end());
    g.slopes.erase(std::unique(g.slopes.begin(), g.slopes.end()), g.slopes.end());
    for (std::size_t i = 0; i + 1 < g.slopes.size(); ++i) {
        Fraction d = g.slopes[i + 1] - g.slopes[i];
        if (!g.gap || d < *g.gap) {
            g.gap = d;
            g.lower = g.slopes[i];
            g.upper = g.slopes[i + 1];
        }
    }
    return g;
}

inline int cmd_pair_gap(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const MontesinosKnot knot = MontesinosKnot::parse(cfg.knot_spec);
    const GapResult g = minimal_gap(analyze_knot(knot, cfg).reports);
    if (cfg.output_format == Format::json) {
        nlohmann::ordered_json j;
        j["knot"] = knot.str();
        j["distinct_slopes"] = g.slopes.size();
        if (g.gap) {
            j["gap"] = g.gap->str();
            j["gap_decimal"] = to_decimal(*g.gap);
            j["pair"] = {g.lower.str(), g.upper.str()};
        } else {
            j["gap"] = nullptr;
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    if (!g.gap) {
        out << "no pair\n";
        return 0;
    }
    out << "knot M(" << knot.str() << "): " << g.slopes.size() << " distinct slopes\n";
    out << "minimal gap " << g.gap->str() << " (" << to_decimal(*g.gap) << ") between " << g.lower.str() << " and "
        << g.upper.str() << '\n';
    return 0;
}

/// One verified member of the K_n family.
struct FamilyRow {
    long long n = 0;
    Fraction slope, slope_prime, gap, reference_twist;
    Integer sheets = 0, sheets_prime = 0;
    Integer euler = 0, euler_prime = 0;
    Integer components = 0, components_prime = 0;
    std::vector<std::string> failures;
    std::string note;

    bool passed() const { return failures.empty(); }
};

inline FamilyRow verify_member(long long n, std::uint64_t cap = 10'000'000) {
    FamilyRow row;
    row.n = n;
    RunConfig cfg;
    cfg.combination_cap = cap;
    const KnotReports kr = analyze_knot(family::knot(n), cfg);
    row.reference_twist = system_twist(kr.reference);
    auto fail = [&](std::string what) { row.failures.push_back(std::move(what)); };
    if (!(row.reference_twist == family::seifert_twist(n))) fail("reference twist " + row.reference_twist.str());

    auto find = [&](const Fraction& slope) -> const SurfaceReport* {
        for (const auto& r : kr.reports)
            if (r.slope == slope && r.system.system_type == PathType::I && r.essential == Essentiality::proven)
                return &r;
        return nullptr;
    };
    const SurfaceReport* f = find(family::slope(n));
    const SurfaceReport* fp = find(family::slope_prime(n));
    if (!f) fail("no proven surface with slope " + family::slope(n).str());
    if (!fp) fail("no proven surface with slope " + family::slope_prime(n).str());
    if (!f || !fp) return row;

    row.slope = f->slope;
    row.slope_prime = fp->slope;
    row.gap = row.slope_prime - row.slope;
    row.sheets = f->sheets;
    row.sheets_prime = fp->sheets;
    row.euler = f->euler.value_or(0);
    row.euler_prime = fp->euler.value_or(0);
    row.components = f->boundary_components;
    row.components_prime = fp->boundary_components;

    if (!(row.gap == family::gap(n))) fail("gap " + row.gap.str());
    if (row.sheets != n) fail("sheets " + row.sheets.str());
    if (row.sheets_prime != n - 7) fail("sheets' " + row.sheets_prime.str());
    if (!(euler_per_sheet_type_one(f->system) == Fraction(1))) fail("-chi/#s of F");
    if (!(euler_per_sheet_type_one(fp->system) == Fraction(1))) fail("-chi/#s of F'");
    if (row.euler != -n) fail("euler " + row.euler.str());
    if (row.euler_prime != -(n - 7)) fail("euler' " + row.euler_prime.str());
    if (row.components != 1) fail("boundary components " + row.components.str());
    if (row.sheets_prime != row.components_prime * row.slope_prime.den()) fail("sheets' product identity");
    if (row.components_prime != 1) row.note = family::boundary_discrepancy_note(n);
    return row;
}

inline int cmd_verify_family(long long from, long long to, Format fmt, std::ostream& out, std::ostream& err) {
    if (from < 11 || from % 2 == 0 || to % 2 == 0 || to < from) {
        err << "verify-family needs odd 11 <= from <= to\n";
        return 2;
    }
    std::vector<FamilyRow> rows;
    for (long long n = from; n <= to; n += 2) rows.push_back(verify_member(n));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].passed() && rows[i - 1].passed() && !(rows[i].gap < rows[i - 1].gap))
            rows[i].failures.push_back("gap not decreasing");
    }
    bool ok = std::all_of(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.passed(); });

    if (fmt == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["n"] = r.n;
            j["slope"] = r.slope.str();
            j["slope_prime"] = r.slope_prime.str();
            j["gap"] = r.gap.str();
            j["reference_twist"] = r.reference_twist.str();
            j["sheets"] = {to_int64(r.sheets), to_int64(r.sheets_prime)};
            j["euler"] = {to_int64(r.euler), to_int64(r.euler_prime)};
            j["boundary_components"] = {to_int64(r.components), to_int64(r.components_prime)};
            j["result"] = r.passed() ? "PASS" : "FAIL";
            if (!r.failures.empty()) j["failures"] = r.failures;
            if (!r.note.empty()) j["note"] = r.note;
            arr.push_back(j);
        }
        out << arr.dump(2) << '\n';
    } else if (fmt == Format::csv) {
        out << "n,slope,slope_prime,gap,reference_twist,sheets,sheets_prime,euler,euler_prime,"
               "boundary_components,boundary_components_prime,result\n";
        for (const auto& r : rows)
            out << r.n << ',' << r.slope << ',' << r.slope_prime << ',' << r.gap << ',' << r.reference_twist << ','
                << r.sheets << ',' << r.sheets_prime << ',' << r.euler << ',' << r.euler_prime << ','
                << r.components << ',' << r.components_prime << ',' << (r.passed() ? "PASS" : "FAIL") << '\n';
    } else {
        for (const auto& r : rows) {
            out << "n=" << r.n << "  slopes " << r.slope << ", " << r.slope_prime << "  gap " << r.gap << " ("
                << to_decimal(r.gap) << ")  twist_ref " << r.reference_twist << "  sheets " << r.sheets << ", "
                << r.sheets_prime << "  euler " << r.euler << ", " << r.euler_prime << "  boundary "
                << r.components << ", " << r.components_prime << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
            for (const auto& f : r.failures) out << "  failed: " << f << '\n';
        }
        for (const auto& r : rows)
            if (!r.note.empty()) out << "note n=" << r.n << ": " << r.note << '\n';
    }
    return ok ? 0 : 1;
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary slopes of Montesinos knots from edgepath systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool json = false, csv = false, all_types = false;
    long long from = 0, to = 0;

    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", json, "JSON output");
        auto* c = sub->add_flag("--csv", csv, "CSV output");
        j->excludes(c);
    };
    auto add_knot = [&](CLI::App* sub) {
        sub->add_option("spec", cfg.knot_spec, "tangles, e.g. -1/2,2/5,1/11")->required();
        sub->add_option("--cap", cfg.combination_cap, "maximum skeleton combinations")
            ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
        sub->add_flag("--all-types", all_types, "include type II systems");
        sub->add_flag("--dedupe", cfg.dedupe_by_slope, "one report per slope");
        add_format(sub);
    };

    auto* enumerate = app.add_subcommand("enumerate", "report every candidate surface");
    add_knot(enumerate);
    enumerate->add_flag("--cross-check", cfg.cross_check)->group("");
    auto* pair_gap = app.add_subcommand("pair-gap", "smallest difference between two slopes");
    add_knot(pair_gap);
    auto* seifert = app.add_subcommand("seifert", "the Seifert reference system");
    add_knot(seifert);
    auto* verify = app.add_subcommand("verify-family", "check the slope pairs of M(-1/2, 2/5, 1/n)");
    verify->add_option("--from", from, "first odd n >= 11")->required();
    verify->add_option("--to", to, "last odd n")->required();
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    cfg.output_format = json ? Format::json : (csv ? Format::csv : Format::text);
    cfg.include_two = all_types;

    try {
        if (*enumerate) return cmd_enumerate(cfg, out, err);
        if (*pair_gap) return cmd_pair_gap(cfg, out, err);
        if (*seifert) return cmd_seifert(cfg, out, err);
        if (*verify) return cmd_verify_family(from, to, cfg.output_format, out, err);
    } catch (const KnotParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const SeifertError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace montesinos::cli
