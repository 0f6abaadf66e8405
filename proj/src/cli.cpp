#include "bellcheck/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bellcheck/born.hpp"
#include "bellcheck/counterfactual.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/parallel.hpp"
#include "bellcheck/quasiprob.hpp"
#include "bellcheck/realworld.hpp"
#include "bellcheck/toperator.hpp"

#ifndef BELLCHECK_VERSION
#define BELLCHECK_VERSION "0.0.0"
#endif

namespace bellcheck::cli {
namespace {

using nlohmann::json;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footer;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string csv() const {
        std::string s;
        auto line = [&s](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) s += ',';
                s += cells[i];
            }
            s += '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        for (const auto& f : footer) s += f + '\n';
        return s;
    }
};

std::string num(double v) { return format_number(v); }
std::string num(int v) { return std::to_string(v); }

struct Emitted {
    json params;
    json doc;
    std::optional<Table> table;
};

struct CfgArgs {
    double a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    AngleConfig config() const { return AngleConfig::from_degrees(a1, a2, b1, b2); }
    json params() const { return {{"alpha1_deg", a1}, {"alpha2_deg", a2}, {"beta1_deg", b1}, {"beta2_deg", b2}}; }
    std::vector<std::string> cells() const { return {num(a1), num(a2), num(b1), num(b2)}; }
};

void add_cfg(CLI::App* sub, CfgArgs& cfg) {
    sub->add_option("alpha1", cfg.a1, "Alice setting 1 (degrees)")->required();
    sub->add_option("alpha2", cfg.a2, "Alice setting 2 (degrees)")->required();
    sub->add_option("beta1", cfg.b1, "Bob setting 1 (degrees)")->required();
    sub->add_option("beta2", cfg.b2, "Bob setting 2 (degrees)")->required();
}

json pmf_json(const JointPmf2x2& p) { return json::array({{p(0, 0), p(0, 1)}, {p(1, 0), p(1, 1)}}); }

json estimate_json(const EstimatorResult& r, double closed_form) {
    return {{"mean", r.mean}, {"std_error", r.std_error}, {"n", r.n}, {"closed_form", closed_form}};
}

// --- commands --------------------------------------------------------------

Emitted cmd_correlate(double alpha_deg, double beta_deg) {
    const auto pmf = joint_pmf(singlet_state(), Angle::from_degrees(alpha_deg), Angle::from_degrees(beta_deg));
    Emitted e;
    e.params = {{"alpha_deg", alpha_deg}, {"beta_deg", beta_deg}};
    e.doc = {{"alpha_deg", alpha_deg}, {"beta_deg", beta_deg}, {"correlation", pmf.correlation()}, {"pmf", pmf_json(pmf)}};
    Table t{{"alpha_deg", "beta_deg", "correlation", "p_pp", "p_pm", "p_mp", "p_mm"}, {}, {}};
    t.add({num(alpha_deg), num(beta_deg), num(pmf.correlation()), num(pmf(0, 0)), num(pmf(0, 1)), num(pmf(1, 0)),
           num(pmf(1, 1))});
    e.table = std::move(t);
    return e;
}

struct ChshRow {
    CfgArgs cfg;
    double e_qm = 0.0;
    TSpectrum spectrum;
};

ChshRow chsh_row(const CfgArgs& args) {
    const auto cfg = args.config();
    return {args, e_qm(cfg), t_spectrum(cfg)};
}

Emitted cmd_chsh(const CfgArgs& base, std::optional<double> sweep_step) {
    std::vector<CfgArgs> points;
    if (!sweep_step) {
        points.push_back(base);
    } else {
        const double step = *sweep_step;
        if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("sweep step must be a positive number of degrees");
        const auto count = static_cast<std::size_t>(std::ceil(180.0 / step - 1e-9));
        for (std::size_t i = 0; i < count; ++i) {
            CfgArgs p = base;
            p.b2 = static_cast<double>(i) * step;
            if (same_setting(Angle::from_degrees(p.b1), Angle::from_degrees(p.b2))) continue;
            points.push_back(p);
        }
        if (points.empty()) throw ValidationError("sweep has no valid configurations");
    }

    std::vector<std::optional<ChshRow>> rows(points.size());
    for_each_shard(points.size(), worker_cap_from_env(), [&](std::size_t i) { rows[i] = chsh_row(points[i]); });

    Emitted e;
    e.params = base.params();
    if (sweep_step) e.params["sweep_step_deg"] = *sweep_step;
    Table t{{"alpha1", "alpha2", "beta1", "beta2", "e_qm", "t0", "t1", "w_plus", "w_minus"}, {}, {}};
    json list = json::array();
    double max_abs = 0.0;
    for (const auto& r : rows) {
        auto cells = r->cfg.cells();
        for (double v : {r->e_qm, r->spectrum.t0, r->spectrum.t1, r->spectrum.w_plus, r->spectrum.w_minus}) cells.push_back(num(v));
        t.add(cells);
        json row = r->cfg.params();
        row.update({{"e_qm", r->e_qm}, {"t0", r->spectrum.t0}, {"t1", r->spectrum.t1}, {"w_plus", r->spectrum.w_plus},
                    {"w_minus", r->spectrum.w_minus}});
        list.push_back(row);
        max_abs = std::max(max_abs, std::abs(r->e_qm));
    }
    e.doc = {{"rows", list}, {"max_abs_e_qm", max_abs}};
    e.table = std::move(t);
    return e;
}

Emitted cmd_t_spectrum(const CfgArgs& args) {
    const auto spectrum = t_spectrum(args.config());
    Emitted e;
    e.params = args.params();
    e.doc = args.params();
    e.doc.update({{"t0", spectrum.t0},
                  {"t1", spectrum.t1},
                  {"w_plus", spectrum.w_plus},
                  {"w_minus", spectrum.w_minus},
                  {"e", spectrum.e},
                  {"eigenvalues", spectrum.eigenvalues},
                  {"t1_weight", spectrum.t1_weight},
                  {"numeric_w_plus", spectrum.numeric_w_plus},
                  {"numeric_w_minus", spectrum.numeric_w_minus},
                  {"degenerate", spectrum.degenerate}});
    Table t{{"alpha1", "alpha2", "beta1", "beta2", "t0", "t1", "w_plus", "w_minus", "e", "t1_weight", "lambda1",
             "lambda2", "lambda3", "lambda4"},
            {},
            {}};
    auto cells = args.cells();
    for (double v : {spectrum.t0, spectrum.t1, spectrum.w_plus, spectrum.w_minus, spectrum.e, spectrum.t1_weight}) cells.push_back(num(v));
    for (double v : spectrum.eigenvalues) cells.push_back(num(v));
    t.add(cells);
    e.table = std::move(t);
    return e;
}

Emitted cmd_simulate(const CfgArgs& args, std::uint64_t n, std::uint64_t seed, std::size_t shards) {
    if (n == 0) throw ValidationError("--n must be at least 1");
    if (shards == 0) throw ValidationError("--shards must be at least 1");
    const auto cfg = args.config();
    const auto result = run_experiments(cfg, n, seed, shards, worker_cap_from_env());
    const auto settings = experiment_settings(cfg);
    const double bound = 2.0 * std::numbers::sqrt2;
    const double magnitude = std::abs(result.e_rw.mean);
    if (magnitude > 4.0) throw InternalError("real-world estimate exceeds 4");

    Emitted e;
    e.params = args.params();
    e.params.update({{"n", n}, {"seed", seed}, {"shards", shards}});
    e.doc = args.params();
    e.doc.update({{"n", n}, {"seed", seed}});
    Table t{{"quantity", "mean", "std_error", "n", "closed_form"}, {}, {}};
    for (std::size_t i = 0; i < 4; ++i) {
        const double closed = correlation(settings[i].alice, settings[i].bob);
        const std::string key = "c" + std::to_string(i + 1);
        e.doc[key] = estimate_json(result.correlations[i], closed);
        t.add({key, num(result.correlations[i].mean), num(result.correlations[i].std_error),
               std::to_string(result.correlations[i].n), num(closed)});
    }
    const double eq = e_qm(cfg);
    e.doc["e_rw"] = estimate_json(result.e_rw, eq);
    e.doc.update({{"exceeds_2", magnitude > 2.0}, {"exceeds_2sqrt2", magnitude > bound}, {"exceeds_4", false}});
    t.add({"e_rw", num(result.e_rw.mean), num(result.e_rw.std_error), std::to_string(result.e_rw.n), num(eq)});
    e.table = std::move(t);
    return e;
}

Emitted cmd_enumerate(const std::string& which) {
    Emitted e;
    e.params = {{"target", which}};
    if (which == "realworld") {
        Table t{{"index", "x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4", "statistic"}, {}, {}};
        std::map<int, int> histogram;
        json list = json::array();
        const auto runs = enumerate_total_sample_space();
        for (std::size_t i = 0; i < runs.size(); ++i) {
            std::vector<std::string> cells{std::to_string(i)};
            json xy = json::array();
            for (const auto& o : runs[i].outcomes) {
                cells.push_back(num(o.x));
                cells.push_back(num(o.y));
                xy.push_back(o.x);
                xy.push_back(o.y);
            }
            const int s = runs[i].statistic();
            cells.push_back(num(s));
            t.add(cells);
            list.push_back({{"index", i}, {"outcomes", xy}, {"statistic", s}});
            ++histogram[s];
        }
        std::string footer = "# histogram";
        json hist = json::object();
        for (const auto& [value, count] : histogram) {
            footer += " " + std::to_string(value) + ":" + std::to_string(count);
            hist[std::to_string(value)] = count;
        }
        t.footer.push_back(footer);
        e.doc = {{"rows", list}, {"histogram", hist}};
        e.table = std::move(t);
    } else if (which == "counterfactual") {
        Table t{{"k", "l", "m", "n", "a1", "a2", "b1", "b2", "statistic"}, {}, {}};
        json list = json::array();
        for (const auto& w : cf_sample_space()) {
            const auto v = cf_values(w);
            const int s = cf_statistic(w);
            t.add({num(w.k), num(w.l), num(w.m), num(w.n), num(v.a1), num(v.a2), num(v.b1), num(v.b2), num(s)});
            list.push_back({{"k", w.k},
                            {"l", w.l},
                            {"m", w.m},
                            {"n", w.n},
                            {"a1", v.a1},
                            {"a2", v.a2},
                            {"b1", v.b1},
                            {"b2", v.b2},
                            {"statistic", s}});
        }
        e.doc = {{"rows", list}};
        e.table = std::move(t);
    } else {
        throw ValidationError("unknown enumeration target '" + which + "' (expected realworld or counterfactual)");
    }
    return e;
}

Emitted cmd_fine(const CfgArgs& args) {
    const auto marginals = quantum_marginals(args.config());
    const auto verdict = fine_feasibility(marginals);
    Emitted e;
    e.params = args.params();
    e.doc = args.params();
    json pairs = json::array();
    for (const auto& p : marginals.pairs()) pairs.push_back(pmf_json(p));
    e.doc.update({{"feasible", verdict.feasible},
                  {"chsh_variants", verdict.chsh_variants},
                  {"infeasibility", verdict.infeasibility},
                  {"correlations", marginals.correlations()},
                  {"pair_marginals", pairs},
                  {"witness", verdict.witness ? json(verdict.witness->values()) : json(nullptr)},
                  {"witness_residual", verdict.witness_residual}});
    Table t{{"alpha1", "alpha2", "beta1", "beta2", "feasible", "chsh_variants", "infeasibility", "witness_residual"},
            {},
            {}};
    auto cells = args.cells();
    cells.push_back(verdict.feasible ? "1" : "0");
    for (double v : {verdict.chsh_variants, verdict.infeasibility, verdict.witness_residual}) cells.push_back(num(v));
    t.add(cells);
    e.table = std::move(t);
    return e;
}

// Outcome labels follow the 1-based port numbering (1 for +1, 2 for -1).
Emitted cmd_quasiprob_point(double a, double ap, double b) {
    const Angle alpha = Angle::from_degrees(a);
    const Angle alpha_prime = Angle::from_degrees(ap);
    const Angle beta = Angle::from_degrees(b);
    const auto f = f_jkl(alpha, alpha_prime, beta);
    const auto residuals = marginal_residuals(f);
    const auto f2 = f_jk(alpha, alpha_prime);

    Emitted e;
    e.params = {{"alpha_deg", a}, {"alpha_prime_deg", ap}, {"beta_deg", b}};
    Table t{{"j", "k", "l", "f"}, {}, {}};
    json cells = json::array();
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
                cells.push_back({{"j", j + 1}, {"k", k + 1}, {"l", l + 1}, {"value", f(j, k, l)}});
                t.add({num(j + 1), num(k + 1), num(l + 1), num(f(j, k, l))});
            }
        }
    }
    e.doc = e.params;
    e.doc.update({{"f_jkl", cells},
                  {"min_f_jkl", f.min_value()},
                  {"negative", f.min_value() < -1e-12},
                  {"residuals",
                   {{"total", residuals.total}, {"sum_over_j", residuals.sum_over_j}, {"sum_over_k", residuals.sum_over_k}}},
                  {"q_value", q_value(alpha, alpha_prime, beta)},
                  {"q_reconstruct", q_reconstruct(alpha, alpha_prime, beta)},
                  {"f_jk", json::array({{f2(0, 0), f2(0, 1)}, {f2(1, 0), f2(1, 1)}})},
                  {"min_f_jk", f2.min_value()}});
    e.table = std::move(t);
    return e;
}

Emitted cmd_quasiprob_scan(double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("scan step must be a positive number of degrees");
    const auto found = find_negativity(Angle::from_degrees(step), worker_cap_from_env());
    Emitted e;
    e.params = {{"scan_step_deg", step}};
    Table t{{"alpha_deg", "alpha_prime_deg", "beta_deg", "j", "k", "l", "f"}, {}, {}};
    json list = json::array();
    for (const auto& w : found) {
        list.push_back({{"alpha_deg", w.alpha_deg},
                        {"alpha_prime_deg", w.alpha_prime_deg},
                        {"beta_deg", w.beta_deg},
                        {"j", w.j + 1},
                        {"k", w.k + 1},
                        {"l", w.l + 1},
                        {"value", w.value}});
        t.add({num(w.alpha_deg), num(w.alpha_prime_deg), num(w.beta_deg), num(w.j + 1), num(w.k + 1), num(w.l + 1),
               num(w.value)});
    }
    e.doc = {{"scan_step_deg", step}, {"count", found.size()}, {"witnesses", list}};
    e.table = std::move(t);
    return e;
}

// --- driver ----------------------------------------------------------------

struct Invocation {
    std::string command;
    std::string format;
    std::string out_path;
    std::string manifest_path;
    Emitted emitted;
};

struct HelpRequested {
    std::string text;
};

std::string default_format(const std::string& command) {
    return command == "chsh" || command == "enumerate" ? "csv" : "json";
}

// Parses `args` and runs the selected data command. Returns std::nullopt
// for replay, whose manifest path is stored in `replay_path`.
std::optional<Invocation> dispatch(const std::vector<std::string>& args, std::string& replay_path) {
    CLI::App app{"Bell/CHSH correlation toolkit for the polarization singlet", "bellcheck"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BELLCHECK_VERSION);

    std::string out_path;
    std::string format;
    app.add_option("--out", out_path, "Write data to this file (manifest goes to <file>.manifest.json)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.fallthrough();

    double corr_a = 0, corr_b = 0;
    auto* correlate = app.add_subcommand("correlate", "Singlet correlation and joint PMF at (alpha, beta)");
    correlate->add_option("alpha", corr_a, "Alice setting (degrees)")->required();
    correlate->add_option("beta", corr_b, "Bob setting (degrees)")->required();

    CfgArgs chsh_cfg;
    std::optional<double> sweep;
    auto* chsh = app.add_subcommand("chsh", "CHSH value, T spectrum and outcome weights");
    add_cfg(chsh, chsh_cfg);
    chsh->add_option("--sweep", sweep, "Iterate beta2 over [0, 180) with this step (degrees)");

    CfgArgs spec_cfg;
    auto* spectrum = app.add_subcommand("t-spectrum", "Eigenvalues of the CHSH operator and singlet weights");
    add_cfg(spectrum, spec_cfg);

    CfgArgs sim_cfg;
    std::uint64_t n = 100000;
    std::uint64_t seed = 0;
    std::size_t shards = 1;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo of the four real-world experiments");
    add_cfg(simulate, sim_cfg);
    simulate->add_option("--n", n, "Pairs per experiment")->capture_default_str();
    simulate->add_option("--seed", seed, "Master seed")->required();
    simulate->add_option("--shards", shards, "Index-range shards")->capture_default_str();

    std::string target;
    auto* enumerate = app.add_subcommand("enumerate", "List a sample space with its statistic");
    enumerate->add_option("target", target, "realworld or counterfactual")->required();

    CfgArgs fine_cfg;
    auto* fine = app.add_subcommand("fine", "Joint-distribution feasibility of the quantum pair marginals");
    add_cfg(fine, fine_cfg);

    std::vector<double> q_angles;
    std::optional<double> scan;
    auto* quasi = app.add_subcommand("quasiprob", "Quasi-probabilities F_jkl and their negativity");
    auto* q_pos = quasi->add_option("angles", q_angles, "alpha alpha' beta (degrees)")->expected(3);
    auto* q_scan = quasi->add_option("--scan", scan, "Grid step (degrees) for a negativity scan");
    q_pos->excludes(q_scan);

    auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare checksums");
    replay->add_option("manifest", replay_path, "Manifest file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{std::string(BELLCHECK_VERSION) + "\n"};
    } catch (const CLI::ParseError& e) {
        throw ValidationError(e.what());
    }

    if (replay->parsed()) return std::nullopt;

    Invocation inv;
    inv.out_path = out_path;
    if (correlate->parsed()) {
        inv.command = "correlate";
        inv.emitted = cmd_correlate(corr_a, corr_b);
    } else if (chsh->parsed()) {
        inv.command = "chsh";
        inv.emitted = cmd_chsh(chsh_cfg, sweep);
    } else if (spectrum->parsed()) {
        inv.command = "t-spectrum";
        inv.emitted = cmd_t_spectrum(spec_cfg);
    } else if (simulate->parsed()) {
        inv.command = "simulate";
        inv.emitted = cmd_simulate(sim_cfg, n, seed, shards);
    } else if (enumerate->parsed()) {
        inv.command = "enumerate";
        inv.emitted = cmd_enumerate(target);
    } else if (fine->parsed()) {
        inv.command = "fine";
        inv.emitted = cmd_fine(fine_cfg);
    } else {
        inv.command = "quasiprob";
        if (scan) {
            inv.emitted = cmd_quasiprob_scan(*scan);
        } else if (q_angles.size() == 3) {
            inv.emitted = cmd_quasiprob_point(q_angles[0], q_angles[1], q_angles[2]);
        } else {
            throw ValidationError("quasiprob needs three angles or --scan <step>");
        }
    }
    inv.format = format.empty() ? default_format(inv.command) : format;
    return inv;
}

std::string render(const Invocation& inv) {
    if (inv.format == "json") return to_json_text(inv.emitted.doc);
    if (!inv.emitted.table) throw ValidationError(inv.command + " has no CSV form");
    return inv.emitted.table->csv();
}

std::vector<std::string> strip_out(const std::vector<std::string>& args) {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            ++i;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0) continue;
        kept.push_back(args[i]);
    }
    return kept;
}

json manifest(const Invocation& inv, const std::vector<std::string>& args, const std::string& data) {
    return {{"artifact_version", BELLCHECK_VERSION},
            {"command", inv.command},
            {"args", args},
            {"params", inv.emitted.params},
            {"format", inv.format},
            {"output", inv.out_path.empty() ? json(nullptr) : json(inv.out_path)},
            {"checksum", {{"algorithm", "sha256"}, {"value", sha256_hex(data)}}}};
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot open '" + path + "' for writing");
    f << data;
    if (!f) throw ValidationError("failed writing '" + path + "'");
}

int replay_manifest(const std::string& path, std::ostream& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot read manifest '" + path + "'");
    json m;
    try {
        m = json::parse(f);
    } catch (const json::exception& e) {
        throw ValidationError("manifest '" + path + "' is not valid JSON: " + e.what());
    }
    if (!m.contains("args") || !m["args"].is_array() || !m.contains("checksum")) {
        throw ValidationError("manifest '" + path + "' lacks args or checksum");
    }
    const auto args = strip_out(m["args"].get<std::vector<std::string>>());
    if (std::find(args.begin(), args.end(), "replay") != args.end()) {
        throw ValidationError("a manifest cannot describe a replay");
    }
    std::string nested;
    const auto inv = dispatch(args, nested);
    if (!inv) throw ValidationError("manifest does not describe a data command");
    const std::string expected = m["checksum"].value("value", "");
    const std::string actual = sha256_hex(render(*inv));
    const bool match = expected == actual;
    out << to_json_text({{"manifest", path}, {"expected", expected}, {"actual", actual}, {"match", match}});
    return match ? 0 : 3;
}

}  // namespace

double round_significant(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", round_significant(v));
    return buf;
}

std::string to_json_text(json doc) {
    auto normalize = [](auto& self, json& node) -> void {
        if (node.is_number_float()) {
            node = round_significant(node.get<double>());
        } else if (node.is_structured()) {
            for (auto& child : node) self(self, child);
        }
    };
    normalize(normalize, doc);
    return doc.dump() + "\n";
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < length; ++i) {
        hex += kHex[digest[i] >> 4];
        hex += kHex[digest[i] & 0xf];
    }
    return hex;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        std::string replay_path;
        auto inv = dispatch(args, replay_path);
        if (!inv) return replay_manifest(replay_path, out);

        const std::string data = render(*inv);
        const std::string manifest_text = to_json_text(manifest(*inv, args, data));
        if (inv->out_path.empty()) {
            out << data;
            err << manifest_text;
        } else {
            write_file(inv->out_path, data);
            write_file(inv->out_path + ".manifest.json", manifest_text);
        }
        return 0;
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace bellcheck::cli
