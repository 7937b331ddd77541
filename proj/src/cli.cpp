#include "colsum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "colsum/group_oracle.hpp"
#include "colsum/partition.hpp"
#include "colsum/root_counts.hpp"
#include "colsum/sequence_cache.hpp"
#include "colsum/sequences.hpp"
#include "colsum/series.hpp"
#include "colsum/text_format.hpp"
#include "colsum/verify.hpp"

namespace colsum {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { table, json, csv };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int order = 30;
    double budget = static_cast<double>(kDefaultBudget);
    int jobs = 0;
    std::string format = "table";
    std::string cache_dir;

    Format fmt() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::table;
    }

    std::uint64_t element_budget() const {
        if (!(budget >= 1) || budget != std::floor(budget) || budget > 1e18)
            throw UsageError("--budget must be a positive integer");
        return static_cast<std::uint64_t>(budget);
    }

    std::optional<SequenceCache> cache() const {
        std::string dir = cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv(kCacheDirEnv)) dir = env;
        if (dir.empty()) return std::nullopt;
        return SequenceCache(dir);
    }
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render(const Table& t, Format fmt, std::ostream& out) {
    if (fmt == Format::json) {
        Json rows = Json::array();
        for (const auto& r : t.rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = r[i];
            rows.push_back(obj);
        }
        Json doc;
        doc["rows"] = rows;
        if (!t.summary.empty()) {
            Json s = Json::object();
            for (const auto& [k, v] : t.summary) s[k] = v;
            doc["summary"] = s;
        }
        out << doc.dump(2) << "\n";
        return;
    }
    if (fmt == Format::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
            out << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        for (const auto& [k, v] : t.summary) out << "# " << k << ": " << v << "\n";
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += "  ";
            s += cells[i];
            if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        out << s << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    for (const auto& [k, v] : t.summary) out << k << ": " << v << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- seq -------------------------------------------------------------------

struct SeqArgs {
    std::string family;
    int r = 1;
    std::string method = "direct";
    std::string quantity = "total";
    int max_n = 0;
};

int cmd_seq(const RunConfig& cfg, const SeqArgs& a, std::ostream& out) {
    Family family = parse_family(a.family);
    Method method = parse_method(a.method);
    auto cache = cfg.cache();
    const SequenceCache* cp = cache ? &*cache : nullptr;
    SequenceReport rep;
    if (a.quantity == "total") {
        if (method == Method::convolution && family != Family::A && family != Family::B)
            throw UsageError("the convolution route exists for families A and B only");
        rep = cached_table_sum(cp, family, a.r, a.max_n, method);
    } else if (a.quantity == "involutions" || a.quantity == "derangement") {
        if (method != Method::direct) throw UsageError("--quantity " + a.quantity + " supports --method direct only");
        if (a.quantity == "involutions") {
            rep = cached_involutions(cp, family, a.r, a.max_n);
        } else {
            if (family != Family::A && family != Family::B)
                throw UsageError("--quantity derangement is defined for families A and B");
            rep = cached_g(cp, family, a.max_n);
        }
    } else {
        throw UsageError("--quantity must be total, involutions or derangement");
    }

    switch (cfg.fmt()) {
        case Format::json: {
            Json j;
            j["family"] = to_string(rep.family);
            j["params"] = {{"r", rep.r}, {"n_from", 1}, {"max_n", rep.max_n()}};
            j["method"] = to_string(rep.method);
            j["quantity"] = rep.quantity;
            Json values = Json::array();
            for (int n = 1; n <= rep.max_n(); ++n) values.push_back(to_decimal(rep.values[n]));
            j["values"] = values;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            out << "n,value\n";
            for (int n = 1; n <= rep.max_n(); ++n) out << n << "," << to_decimal(rep.values[n]) << "\n";
            break;
        case Format::table:
            for (int n = 1; n <= rep.max_n(); ++n) out << (n > 1 ? "," : "") << to_decimal(rep.values[n]);
            out << "\n";
            break;
    }
    return kExitOk;
}

// ---- gamma -----------------------------------------------------------------

struct GammaArgs {
    std::string family;
    int r = 0;
    std::string type;
    int n = -1;
    bool all = false;
};

// (printed type, count) for one class.
std::pair<std::string, ExactInt> gamma_one(Family family, int r, const std::string& text, int n) {
    auto check_size = [&](int size) {
        if (n >= 0 && size != n)
            throw UsageError("type \"" + text + "\" has size " + std::to_string(size) + ", not " + std::to_string(n));
    };
    switch (family) {
        case Family::A: {
            auto p = parse_partition(text);
            check_size(p.size());
            return {format_partition(p), gamma_A(p)};
        }
        case Family::B: {
            auto b = parse_bipartition(text);
            check_size(b.size());
            return {format_bipartition(b), gamma_B(b)};
        }
        case Family::D: {
            auto c = parse_dn_class(text);
            check_size(c.size());
            return {format_dn_class(c), gamma_D(c)};
        }
        case Family::G:
        case Family::Gsq: {
            auto t = parse_r_partite(text, r);
            check_size(t.size());
            return {format_r_partite(t), family == Family::G ? gamma_abs_Grn(t) : gamma_sqrt_Grn(t)};
        }
    }
    throw UsageError("unknown family");
}

int cmd_gamma(const RunConfig& cfg, const GammaArgs& a, std::ostream& out) {
    Family family = parse_family(a.family);
    int r = family_r(family, a.r);
    if ((family == Family::G || family == Family::Gsq) && a.r < 1) throw UsageError("--r is required for G and Gsq");
    if (a.all == !a.type.empty()) throw UsageError("give exactly one of --type and --all");
    if (!a.all) {
        out << to_decimal(gamma_one(family, r, a.type, a.n).second) << "\n";
        return kExitOk;
    }
    if (a.n < 0) throw UsageError("--all needs --n");
    Table t;
    t.header = {"type", "count"};
    auto add = [&](std::string s, const ExactInt& v) { t.rows.push_back({std::move(s), to_decimal(v)}); };
    switch (family) {
        case Family::A:
            for (const auto& p : partitions_of(a.n)) add(format_partition(p), gamma_A(p));
            break;
        case Family::B:
            for (const auto& b : bipartitions_of(a.n)) add(format_bipartition(b), gamma_B(b));
            break;
        case Family::D:
            for (const auto& c : dn_classes(a.n)) add(format_dn_class(c), gamma_D(c));
            break;
        case Family::G:
        case Family::Gsq:
            for (const auto& ty : r_partite_types(r, a.n))
                add(format_r_partite(ty), family == Family::G ? gamma_abs_Grn(ty) : gamma_sqrt_Grn(ty));
            break;
    }
    render(t, cfg.fmt() == Format::json ? Format::json : Format::csv, out);
    return kExitOk;
}

// ---- series ----------------------------------------------------------------

struct SeriesArgs {
    std::string name;
    std::string scale = "1";
    std::string r = "1";
    std::string family;
    std::string kind = "total";
};

int cmd_series(const RunConfig& cfg, const SeriesArgs& a, std::ostream& out) {
    if (a.name.empty() == a.family.empty()) throw UsageError("give exactly one of --name and --family");
    auto build = [&]() -> Series {
        if (!a.name.empty())
            return named_series(parse_named_series(a.name), parse_exact_int(a.scale), parse_rational(a.r), cfg.order);
        Family family = parse_family(a.family);
        int r = static_cast<int>(to_integer(parse_rational(a.r), "--r").get_si());
        if (a.kind == "total") return total_sum_gf(family, r, cfg.order);
        if (a.kind == "nonzero") return nonzero_columns_gf(family, r, cfg.order);
        throw UsageError("--kind must be total or nonzero");
    };
    auto coeffs = to_decimal_strings(build());
    switch (cfg.fmt()) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& c : coeffs) arr.push_back(c);
            out << arr.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "n,coefficient\n";
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << "," << coeffs[i] << "\n";
            break;
        case Format::table:
            for (const auto& c : coeffs) out << c << "\n";
            break;
    }
    return kExitOk;
}

// ---- zero-columns ----------------------------------------------------------

struct ZeroArgs {
    std::string family;
    int r = 0;
    int n = -1;
    int max_n = -1;
};

ExactInt partitions_with_part_2_mod_4(int n) {
    ExactInt count = 0;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        for (const auto& b : p->blocks())
            if (b.part % 4 == 2) {
                ++count;
                break;
            }
    }
    return count;
}

int cmd_zero(const RunConfig& cfg, const ZeroArgs& a, std::ostream& out) {
    Family family = parse_family(a.family);
    int r = family_r(family, a.r);
    if ((family == Family::G || family == Family::Gsq) && a.r < 1) throw UsageError("--r is required for G and Gsq");
    if ((a.n < 0) == (a.max_n < 0)) throw UsageError("give exactly one of --n and --max-n");
    int lo = a.n >= 0 ? a.n : 1;
    int hi = a.n >= 0 ? a.n : a.max_n;
    Table t;
    t.header = {"n", "classes", "zero", "zero_gf", "consistent"};
    if (family == Family::A) t.header.push_back("part_2_mod_4");
    bool ok = true;
    for (int n = lo; n <= hi; ++n) {
        auto z = zero_column_count(family, r, n, true);
        bool row_ok = z.consistent();
        std::vector<std::string> row{std::to_string(n), to_decimal(z.classes), to_decimal(z.zero),
                                     z.zero_gf ? to_decimal(*z.zero_gf) : "-", yes_no(row_ok)};
        if (family == Family::A) {
            ExactInt m4 = partitions_with_part_2_mod_4(n);
            row.push_back(to_decimal(m4));
            row_ok = row_ok && m4 == z.zero;
        }
        ok = ok && row_ok;
        t.rows.push_back(std::move(row));
    }
    render(t, cfg.fmt(), out);
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string family;
    int n = -1;
    int r = 0;
    int q = 1;
    std::string kind;
    bool compare = false;
};

RootKind parse_kind(const std::string& s) {
    if (s == "square") return RootKind::square;
    if (s == "absolute") return RootKind::absolute;
    throw UsageError("--kind must be square or absolute");
}

std::string format_type_for(GroupFamily fam, const RPartiteType& t) {
    if (fam == GroupFamily::SymA) return format_partition(t.component(0));
    if (fam == GroupFamily::HyperB) return format_bipartition(Bipartition(t.component(0), t.component(1)));
    return format_r_partite(t);
}

int cmd_oracle(const RunConfig& cfg, const OracleArgs& a, std::ostream& out) {
    if (a.n < 0 && a.family != "dih") throw UsageError("--n is required");
    const std::uint64_t budget = cfg.element_budget();
    GroupSpec spec;
    if (a.family == "A") {
        spec = GroupSpec::symmetric(a.n);
    } else if (a.family == "B") {
        spec = GroupSpec::hyperoctahedral(a.n);
    } else if (a.family == "D") {
        spec = GroupSpec::demihyperoctahedral(a.n);
    } else if (a.family == "G") {
        if (a.r < 1) throw UsageError("--r is required for G");
        spec = GroupSpec::general(a.r, a.q, a.n);
    } else if (a.family == "dih") {
        if (a.n < 3) throw UsageError("dih needs --n >= 3");
        spec = GroupSpec::dihedral(a.n);
    } else {
        throw UsageError("--family must be A, B, D, G or dih");
    }
    spec.validate();
    RootKind kind = !a.kind.empty() ? parse_kind(a.kind)
                    : spec.family == GroupFamily::GeneralG ? RootKind::absolute
                                                           : RootKind::square;
    const bool character = column_sum_semantics(spec, kind);
    const std::string semantics = character ? "character sums" : "root statistics, not character sums";

    Table t;
    bool ok = true;
    ExactInt s = 0, gamma_e = 0;
    std::size_t classes = 0;

    if (spec.family == GroupFamily::DemiD) {
        t.header = {"class", "roots"};
        if (a.compare) t.header.insert(t.header.end(), {"formula", "match"});
        for (const auto& [cls, roots] : dn_census(a.n, budget)) {
            std::vector<std::string> row{format_dn_class(cls), to_decimal(roots)};
            if (a.compare) {
                ExactInt f = gamma_D(cls);
                row.push_back(to_decimal(f));
                row.push_back(f == roots ? "pass" : "FAIL");
                ok = ok && f == roots;
            }
            s += roots;
            ++classes;
            if (cls.bip().mu().empty() && cls.bip().lambda().multiplicity(1) == a.n && cls.sign() != DnSign::minus)
                gamma_e = roots;
            t.rows.push_back(std::move(row));
        }
    } else if (spec.family == GroupFamily::Dihedral || spec.q > 1) {
        if (a.compare && spec.family != GroupFamily::Dihedral)
            throw UsageError("--compare needs a group with a class formula (A, B, D, G with q = 1, dih)");
        ColoredGroupModel model(spec, budget);
        auto table = class_table(model, kind, budget);
        t.header = {"representative", "cycle_type", "class_size", "roots"};
        for (const auto& c : table) {
            auto x = model.unrank(c.representative);
            t.rows.push_back({x.to_string(), format_r_partite(x.cycle_type()), to_decimal(c.size), to_decimal(c.roots)});
        }
        auto sums = summarize(model, table);
        s = sums.s;
        gamma_e = sums.gamma_e;
        classes = sums.classes;
        if (a.compare) {
            auto f = dihedral_table(a.n);
            bool match = f.s == s && f.gamma_e == gamma_e;
            t.summary.push_back({"formula", "Gamma_e=" + to_decimal(f.gamma_e) + " s=" + to_decimal(f.s)});
            t.summary.push_back({"match", match ? "pass" : "FAIL"});
            ok = ok && match;
        }
    } else {
        if (kind == RootKind::absolute && spec.family == GroupFamily::SymA) kind = RootKind::square;
        auto census = kind == RootKind::square ? square_census(spec, budget) : abs_square_census(spec, budget);
        t.header = {"type", "class_size", "roots"};
        if (a.compare) t.header.insert(t.header.end(), {"formula", "match"});
        for (const auto& [type, tc] : census) {
            std::vector<std::string> row{format_type_for(spec.family, type), to_decimal(tc.class_size),
                                         to_decimal(tc.roots)};
            if (a.compare) {
                ExactInt f = kind == RootKind::square ? gamma_sqrt_Grn(type) : gamma_abs_Grn(type);
                row.push_back(to_decimal(f));
                row.push_back(f == tc.roots ? "pass" : "FAIL");
                ok = ok && f == tc.roots;
            }
            s += tc.roots;
            ++classes;
            if (type.component(0).multiplicity(1) == spec.n) gamma_e = tc.roots;
            t.rows.push_back(std::move(row));
        }
    }
    t.summary.insert(t.summary.begin(), {{"group", spec.name()},
                                         {"order", to_decimal(spec.order())},
                                         {"classes", std::to_string(classes)},
                                         {"Gamma_e", to_decimal(gamma_e)},
                                         {"s", to_decimal(s)},
                                         {"roots", kind == RootKind::square ? "square" : "absolute"},
                                         {"semantics", semantics}});
    render(t, cfg.fmt(), out);
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a, std::ostream& out) {
    auto cache = cfg.cache();
    const SequenceCache* cp = cache ? &*cache : nullptr;
    VerificationReport rep;
    rep.suite = a.suite;
    std::vector<AsymptoticReport> asym;
    if (a.suite == "identities" || a.suite == "all") {
        IdentityRanges rg;
        rg.lower_bound_budget = std::min<std::uint64_t>(rg.lower_bound_budget, cfg.element_budget());
        rep.append(verify_identities(rg, cp));
    }
    if (a.suite == "oracle" || a.suite == "all") rep.append(verify_oracle_equivalence());
    if (a.suite == "asymptotics" || a.suite == "all") {
        rep.append(verify_asymptotics(25, 20, 60, cp));
        if (cfg.fmt() == Format::table) {
            asym.push_back(asymptotic_report(Family::A, 25, cp));
            asym.push_back(asymptotic_report(Family::B, 20, cp));
            asym.push_back(asymptotic_report_dihedral(60));
        }
    }
    if (rep.checks.empty()) throw UsageError("--suite must be identities, oracle, asymptotics or all");

    if (cfg.fmt() == Format::json) {
        Json j;
        j["suite"] = rep.suite;
        j["passed"] = rep.passed();
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"id", c.id},
                              {"statement", c.statement},
                              {"n_from", c.n_from},
                              {"n_to", c.n_to},
                              {"passed", c.passed},
                              {"informational", c.informational},
                              {"witness", c.witness}});
        j["checks"] = checks;
        out << j.dump(2) << "\n";
    } else {
        Table t;
        t.header = {"check", "range", "result", "witness"};
        for (const auto& c : rep.checks) {
            std::string result = c.passed ? "pass" : (c.informational ? "fail (informational)" : "FAIL");
            std::string range = c.n_from < 0 ? "-" : std::to_string(c.n_from) + ".." + std::to_string(c.n_to);
            t.rows.push_back({c.id, range, result, c.witness});
        }
        t.summary.push_back({"suite", rep.suite});
        t.summary.push_back({"result", rep.passed() ? "pass" : "FAIL"});
        render(t, cfg.fmt(), out);
        for (const auto& ar : asym) {
            out << "\n" << ar.bound << " (ratios to 6 places, display only)\n";
            Table rows;
            rows.header = {"n", "ratio", "bound", "ok"};
            for (const auto& row : ar.rows) {
                std::ostringstream ratio, bound;
                ratio.precision(6);
                bound.precision(6);
                ratio << std::fixed << row.approx;
                bound << std::fixed << row.reference;
                rows.rows.push_back({std::to_string(row.n), ratio.str(), bound.str(),
                                     yes_no(row.lower_ok && row.upper_ok)});
            }
            render(rows, Format::table, out);
        }
    }
    return rep.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact character-table column sums of colored permutation groups via square-root counting."};
    app.name("colsum");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--order", cfg.order, "series truncation order")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "element budget for brute-force enumeration")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--cache-dir", cfg.cache_dir,
                   std::string("sequence cache directory (default: $") + kCacheDirEnv + ")");

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "exact sequences: total sums, involutions, derangement-type sums");
    seq_cmd->add_option("--family", seq.family, "A, B, D, G or Gsq")->required();
    seq_cmd->add_option("--r", seq.r, "colour count for G and Gsq")->capture_default_str();
    seq_cmd->add_option("--method", seq.method, "direct, gf, convolution or oracle")->capture_default_str();
    seq_cmd->add_option("--quantity", seq.quantity, "total, involutions or derangement")->capture_default_str();
    seq_cmd->add_option("--max-n", seq.max_n, "largest n")->required()->check(CLI::NonNegativeNumber);

    GammaArgs gamma;
    auto* gamma_cmd = app.add_subcommand("gamma", "root count of one class, or of every class of size n");
    gamma_cmd->add_option("--family", gamma.family, "A, B, D, G (absolute roots) or Gsq (square roots)")->required();
    gamma_cmd->add_option("--r", gamma.r, "colour count for G and Gsq");
    gamma_cmd->add_option("--type", gamma.type, "class in text grammar, e.g. \"2,1\", \"1,1|-\", \"r=3: 2|1|-\"");
    gamma_cmd->add_option("--n", gamma.n, "size of the class (checked against --type)")->check(CLI::NonNegativeNumber);
    gamma_cmd->add_flag("--all", gamma.all, "every class of size --n as type,count CSV");

    SeriesArgs series;
    auto* series_cmd = app.add_subcommand("series", "truncated power series coefficients");
    series_cmd->add_option("--name", series.name, "D, F, I or R");
    series_cmd->add_option("--scale", series.scale, "integer argument scale")->capture_default_str();
    series_cmd->add_option("--r", series.r, "R parameter (rational) or colour count with --family")
        ->capture_default_str();
    series_cmd->add_option("--family", series.family, "generating function of a family instead of a named series");
    series_cmd->add_option("--kind", series.kind, "total or nonzero (with --family)")->capture_default_str();

    ZeroArgs zero;
    auto* zero_cmd = app.add_subcommand("zero-columns", "classes with a zero column sum, by scan and by gf");
    zero_cmd->add_option("--family", zero.family, "A, B, D, G or Gsq")->required();
    zero_cmd->add_option("--r", zero.r, "colour count for G and Gsq");
    zero_cmd->add_option("--n", zero.n, "single n")->check(CLI::NonNegativeNumber);
    zero_cmd->add_option("--max-n", zero.max_n, "every n from 1")->check(CLI::NonNegativeNumber);

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force root counts per conjugacy class");
    oracle_cmd->add_option("--family", oracle.family, "A, B, D, G or dih")->required();
    oracle_cmd->add_option("--n", oracle.n, "rank (polygon size for dih)")->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--r", oracle.r, "colour count for G");
    oracle_cmd->add_option("--q", oracle.q, "colour-sum modulus for G")->capture_default_str();
    oracle_cmd->add_option("--kind", oracle.kind, "square or absolute (default: absolute for G, else square)");
    oracle_cmd->add_flag("--compare", oracle.compare, "re-derive each count from the formulas");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "identity, oracle and asymptotic suites");
    verify_cmd->add_option("--suite", verify.suite, "identities, oracle, asymptotics or all")->capture_default_str();

    std::ostringstream buffer;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
        int code = kExitOk;
        if (*seq_cmd)
            code = cmd_seq(cfg, seq, buffer);
        else if (*gamma_cmd)
            code = cmd_gamma(cfg, gamma, buffer);
        else if (*series_cmd)
            code = cmd_series(cfg, series, buffer);
        else if (*zero_cmd)
            code = cmd_zero(cfg, zero, buffer);
        else if (*oracle_cmd)
            code = cmd_oracle(cfg, oracle, buffer);
        else if (*verify_cmd)
            code = cmd_verify(cfg, verify, buffer);
        out << buffer.str();
        out.flush();
        return code;
    } catch (const UsageError& e) {
        err << "colsum: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "colsum: " << e.what() << " (raise --budget)\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "colsum: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "colsum: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "colsum: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace colsum
