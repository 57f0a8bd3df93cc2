// SPDX-License-Identifier: Apache-2.0
//
// atma — aliased time-modulated array OFDM simulation library
// Copyright (C) 2026 the atma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Experiment runner: sweep construction, worker pool, CSV + sidecar output,
// golden checks. Sweep points are dispatched to threads but always written
// in sorted-tuple order, so reruns with the same config and seed are
// byte-identical regardless of --jobs.

#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <fftw3.h>
#include <json.hpp>

#include <atma/atma.hpp>

#include "config.hpp"
#include "output.hpp"

namespace atma_cli
{

namespace
{

using atma::AliasedSpectrum;
using atma::ArrayConfig;
using atma::cdouble;
using atma::ModConfig;
using atma::Precoder;

// ------------------------------------------------------------------ sweeps

struct Point
{
    int n = 0, a = 0, o = 1, d = 0;
};

std::vector<int> sorted_axis(const Config &cfg, const std::string &key,
                             const std::vector<int> &fallback, bool required)
{
    if (required && !cfg.has(key))
        throw ConfigError("missing required key '" + key + "'");
    std::vector<int> v = cfg.int_list(key, fallback);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Cartesian product of the four sweep axes in ascending (n, a, o_tau, d)
/// order. Each point's geometry is validated up front: an impossible tuple is
/// a configuration error, not a data row.
std::vector<Point> build_points(const Config &cfg, double sample_rate)
{
    const auto ns = sorted_axis(cfg, "n", {}, true);
    const auto as = sorted_axis(cfg, "a", {}, true);
    const auto os = sorted_axis(cfg, "o_tau", {1}, false);
    const auto ds = sorted_axis(cfg, "d", {0}, false);

    std::vector<Point> pts;
    for (int n : ns)
        for (int a : as)
            for (int o : os)
                for (int d : ds)
                {
                    const ModConfig mc{n, a, o, sample_rate};
                    try
                    {
                        mc.validate();
                    }
                    catch (const std::exception &e)
                    {
                        std::ostringstream msg;
                        msg << "invalid sweep point (n=" << n << " a=" << a << " o_tau=" << o
                            << " d=" << d << "): " << e.what();
                        throw ConfigError(msg.str());
                    }
                    if (d < 0 || d >= mc.delay_count())
                    {
                        std::ostringstream msg;
                        msg << "invalid sweep point: d=" << d << " outside [0, " << mc.delay_count()
                            << ") for n=" << n << " o_tau=" << o;
                        throw ConfigError(msg.str());
                    }
                    pts.push_back({n, a, o, d});
                }
    return pts;
}

const char *violation_name(atma::metrics::ConstraintViolation::Kind k)
{
    using Kind = atma::metrics::ConstraintViolation::Kind;
    switch (k)
    {
    case Kind::delay_phase_alignment:
        return "delay_phase_alignment";
    case Kind::delay_phase_gcd:
        return "delay_phase_gcd";
    case Kind::block_size_multiple:
        return "block_size_multiple";
    case Kind::degenerate_states:
        return "degenerate_states";
    }
    return "unknown";
}

/// Design-rule annotation for one sweep point: "kind@index;..." or "".
std::string violations_string(const ModConfig &mc, int block_size)
{
    const int effective = block_size > 0 ? block_size : mc.n_states;
    std::string out;
    for (const auto &v : atma::metrics::check_constraints(mc, effective))
    {
        if (!out.empty())
            out.push_back(';');
        out += violation_name(v.kind);
        out.push_back('@');
        out += std::to_string(v.index);
    }
    return out;
}

Precoder make_precoder(const Config &cfg, int alias_factor)
{
    const std::string name = cfg.scalar_or("precoder", "alternating");
    if (name == "alternating")
        return atma::alternating_precoder(alias_factor);
    if (name == "identity")
        return atma::identity_precoder(alias_factor);
    throw ConfigError("key 'precoder': expected 'alternating' or 'identity', got '" + name + "'");
}

// ------------------------------------------------------------- worker pool

/// Runs fn(0..count) on `jobs` threads; results land at their own index, so
/// output order is independent of scheduling.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, int jobs, F fn)
{
    std::vector<R> out(count);
    if (count == 0)
        return out;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : hw;
    workers = std::min(workers, count);

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&]() {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try
            {
                out[i] = fn(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (std::thread &t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

// ------------------------------------------------------------ golden checks

struct Golden
{
    std::string rule; // raw config value, echoed in diagnostics
    std::vector<std::pair<std::string, double>> selectors;
    std::string column;
    enum class Op
    {
        within,
        ge,
        le
    } op = Op::within;
    double expected = 0.0;
    double tolerance = 0.0;
};

struct GoldenResult
{
    const Golden *check = nullptr;
    bool pass = false;
    std::size_t matched = 0;
    double value = 0.0; // worst matched value under the rule's ordering
    std::string detail;
};

std::vector<Golden> parse_goldens(const Config &cfg)
{
    std::vector<Golden> out;
    for (const std::string &rule : cfg.list("golden"))
    {
        std::istringstream in(rule);
        std::vector<std::string> tok;
        for (std::string t; in >> t;)
            tok.push_back(t);

        Golden g;
        g.rule = rule;
        std::size_t k = 0;
        for (; k < tok.size() && tok[k].find('=') != std::string::npos; ++k)
        {
            const auto eq = tok[k].find('=');
            const std::string key = tok[k].substr(0, eq);
            const std::string val = tok[k].substr(eq + 1);
            try
            {
                g.selectors.emplace_back(key, std::stod(val));
            }
            catch (const std::exception &)
            {
                throw ConfigError("golden rule '" + rule + "': bad selector '" + tok[k] + "'");
            }
        }
        auto need = [&](const char *what) -> const std::string & {
            if (k >= tok.size())
                throw ConfigError("golden rule '" + rule + "': missing " + std::string(what));
            return tok[k++];
        };
        g.column = need("column name");
        const std::string &first = need("expected value");
        try
        {
            if (first == ">=" || first == "<=")
            {
                g.op = first == ">=" ? Golden::Op::ge : Golden::Op::le;
                g.expected = std::stod(need("bound"));
            }
            else
            {
                g.op = Golden::Op::within;
                g.expected = std::stod(first);
                g.tolerance = std::stod(need("tolerance"));
            }
        }
        catch (const ConfigError &)
        {
            throw;
        }
        catch (const std::exception &)
        {
            throw ConfigError("golden rule '" + rule + "': bad numeric literal");
        }
        if (k != tok.size())
            throw ConfigError("golden rule '" + rule + "': trailing tokens");
        out.push_back(std::move(g));
    }
    return out;
}

bool selector_match(double row_value, double wanted)
{
    return std::abs(row_value - wanted) <= 1e-9 * std::max(1.0, std::abs(wanted));
}

std::vector<GoldenResult> apply_goldens(const std::vector<Golden> &checks, const Table &table)
{
    std::vector<GoldenResult> results;
    for (const Golden &g : checks)
    {
        GoldenResult r;
        r.check = &g;

        const auto col = table.column(g.column);
        if (!col)
            throw ConfigError("golden rule '" + g.rule + "': no column '" + g.column + "'");
        std::vector<std::size_t> sel_cols;
        for (const auto &[key, value] : g.selectors)
        {
            const auto c = table.column(key);
            if (!c)
                throw ConfigError("golden rule '" + g.rule + "': no selector column '" + key + "'");
            sel_cols.push_back(*c);
        }

        bool first = true;
        bool pass = true;
        for (const auto &row : table.rows())
        {
            bool match = true;
            for (std::size_t s = 0; s < sel_cols.size(); ++s)
                match = match && row[sel_cols[s]].numeric &&
                        selector_match(row[sel_cols[s]].num, g.selectors[s].second);
            if (!match)
                continue;
            const Cell &cell = row[*col];
            if (!cell.numeric)
                throw ConfigError("golden rule '" + g.rule + "': column '" + g.column +
                                  "' is not numeric");
            ++r.matched;
            const double v = cell.num;
            switch (g.op)
            {
            case Golden::Op::within:
                if (first || std::abs(v - g.expected) > std::abs(r.value - g.expected))
                    r.value = v;
                pass = pass && std::abs(v - g.expected) <= g.tolerance;
                break;
            case Golden::Op::ge:
                if (first || v < r.value)
                    r.value = v;
                pass = pass && v >= g.expected;
                break;
            case Golden::Op::le:
                if (first || v > r.value)
                    r.value = v;
                pass = pass && v <= g.expected;
                break;
            }
            first = false;
        }
        if (r.matched == 0)
        {
            r.pass = false;
            r.detail = "no row matches the selectors";
        }
        else
        {
            r.pass = pass;
            if (!pass)
            {
                std::ostringstream d;
                d << "worst " << g.column << " = " << r.value << " vs expected ";
                if (g.op == Golden::Op::within)
                    d << g.expected << " +- " << g.tolerance;
                else
                    d << (g.op == Golden::Op::ge ? ">= " : "<= ") << g.expected;
                r.detail = d.str();
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

// ------------------------------------------------------------- experiments

struct RunContext
{
    const Config &cfg;
    const CliArgs &args;
    std::string name;     // subcommand, e.g. "aclr-sweep"
    std::uint64_t seed;   // resolved seed (CLI override applied)
    double sample_rate;
    int k_b;
    int n_cp;
};

std::vector<Cell> tuple_cells(const RunContext &ctx, const Point &p)
{
    return {cell_int(p.n),     cell_int(p.a),      cell_int(p.o),
            cell_int(p.d),     cell_int(ctx.k_b),  cell_int(ctx.n_cp)};
}

const std::vector<std::string> kTupleHeader = {"n", "a", "o_tau", "d", "k_b", "n_cp"};

std::vector<std::string> with_tuple(std::initializer_list<std::string> extra)
{
    std::vector<std::string> h = kTupleHeader;
    h.insert(h.end(), extra);
    return h;
}

// Shared keys every experiment accepts.
const std::vector<std::string> kCommonKeys = {"experiment", "seed", "golden", "sample_rate",
                                              "n",          "a",    "o_tau",  "d",
                                              "k_b",        "n_cp", "precoder"};

std::vector<std::string> with_keys(std::initializer_list<std::string> extra)
{
    std::vector<std::string> k = kCommonKeys;
    k.insert(k.end(), extra);
    return k;
}

double power_db(double mag)
{
    return 20.0 * std::log10(mag + 1e-300);
}

Table run_spectrum(const RunContext &ctx)
{
    ctx.cfg.allow_only(with_keys({"window"}));
    const int window = static_cast<int>(ctx.cfg.get_int("window", -1));
    const auto pts = build_points(ctx.cfg, ctx.sample_rate);

    Table table(with_tuple({"i", "re", "im", "mag_db", "in_band", "violations"}));
    auto rows = parallel_map<std::vector<std::vector<Cell>>>(
        pts.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Point &p = pts[idx];
            const ModConfig mc{p.n, p.a, p.o, ctx.sample_rate};
            const AliasedSpectrum s =
                atma::alias::block_spectrum(mc, p.d, make_precoder(ctx.cfg, p.a), window);
            const std::string viol = violations_string(mc, ctx.k_b);
            std::vector<std::vector<Cell>> out;
            for (int i = s.coef.i_min; i <= s.coef.i_max(); ++i)
            {
                const cdouble c = s.coef.at(i);
                auto row = tuple_cells(ctx, p);
                row.push_back(cell_int(i));
                row.push_back(cell_num(c.real()));
                row.push_back(cell_num(c.imag()));
                row.push_back(cell_db(power_db(std::abs(c))));
                row.push_back(cell_int(i >= s.passband_first() && i <= s.passband_last()));
                row.push_back(cell_text(viol));
                out.push_back(std::move(row));
            }
            return out;
        });
    for (auto &r : rows)
        for (auto &row : r)
            table.add_row(std::move(row));
    return table;
}

/// One scalar metric per sweep point; shared by the aclr/ripple/evm sweeps.
template <typename F>
Table run_scalar_sweep(const RunContext &ctx, const std::string &column,
                       const std::vector<std::string> &extra_keys, F metric)
{
    auto keys = with_keys({"window"});
    keys.insert(keys.end(), extra_keys.begin(), extra_keys.end());
    ctx.cfg.allow_only(keys);
    const int window = static_cast<int>(ctx.cfg.get_int("window", -1));
    const auto pts = build_points(ctx.cfg, ctx.sample_rate);

    Table table(with_tuple({column, "violations"}));
    auto rows =
        parallel_map<std::vector<Cell>>(pts.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Point &p = pts[idx];
            const ModConfig mc{p.n, p.a, p.o, ctx.sample_rate};
            const AliasedSpectrum s =
                atma::alias::block_spectrum(mc, p.d, make_precoder(ctx.cfg, p.a), window);
            auto row = tuple_cells(ctx, p);
            row.push_back(metric(s));
            row.push_back(cell_text(violations_string(mc, ctx.k_b)));
            return row;
        });
    for (auto &row : rows)
        table.add_row(std::move(row));
    return table;
}

Table run_aclr_sweep(const RunContext &ctx)
{
    const std::string side = ctx.cfg.scalar_or("adjacent", "lower");
    if (side != "lower" && side != "both")
        throw ConfigError("key 'adjacent': expected 'lower' or 'both', got '" + side + "'");
    const auto mode = side == "lower" ? atma::metrics::AdjacentChannel::lower
                                      : atma::metrics::AdjacentChannel::both;
    return run_scalar_sweep(ctx, "aclr_db", {"adjacent"}, [mode](const AliasedSpectrum &s) {
        return cell_db(atma::metrics::aclr_db(s, mode));
    });
}

Table run_ripple_sweep(const RunContext &ctx)
{
    return run_scalar_sweep(ctx, "ripple_db", {}, [](const AliasedSpectrum &s) {
        return cell_db(atma::metrics::passband_ripple_db(s));
    });
}

Table run_evm_sweep(const RunContext &ctx)
{
    return run_scalar_sweep(ctx, "evm", {}, [](const AliasedSpectrum &s) {
        return cell_num(atma::metrics::evm(s));
    });
}

Table run_capacity_sweep(const RunContext &ctx)
{
    ctx.cfg.allow_only(with_keys({"window", "snr_db"}));
    const int window = static_cast<int>(ctx.cfg.get_int("window", -1));
    std::vector<double> snrs = ctx.cfg.double_list("snr_db", {10.0});
    std::sort(snrs.begin(), snrs.end());
    snrs.erase(std::unique(snrs.begin(), snrs.end()), snrs.end());
    const auto pts = build_points(ctx.cfg, ctx.sample_rate);

    struct Task
    {
        Point p;
        double snr;
    };
    std::vector<Task> tasks;
    for (const Point &p : pts)
        for (double snr : snrs)
            tasks.push_back({p, snr});

    Table table(with_tuple({"snr_db", "capacity", "violations"}));
    auto rows =
        parallel_map<std::vector<Cell>>(tasks.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Task &t = tasks[idx];
            const ModConfig mc{t.p.n, t.p.a, t.p.o, ctx.sample_rate};
            const AliasedSpectrum s =
                atma::alias::block_spectrum(mc, t.p.d, make_precoder(ctx.cfg, t.p.a), window);
            auto row = tuple_cells(ctx, t.p);
            row.push_back(cell_db(t.snr));
            row.push_back(cell_num(atma::metrics::normalized_capacity(s, t.snr)));
            row.push_back(cell_text(violations_string(mc, ctx.k_b)));
            return row;
        });
    for (auto &row : rows)
        table.add_row(std::move(row));
    return table;
}

Table run_beampattern(const RunContext &ctx)
{
    ctx.cfg.allow_only(with_keys(
        {"m", "spacing", "carrier", "simplified", "i", "theta_min_deg", "theta_max_deg",
         "theta_step_deg"}));
    const ArrayConfig acfg{static_cast<int>(ctx.cfg.get_int("m", 8)),
                           ctx.cfg.get_double("spacing", 0.5),
                           ctx.cfg.get_double("carrier", 1.0e9)};
    acfg.validate();
    const bool simplified = ctx.cfg.get_bool("simplified", true);
    std::vector<int> is = ctx.cfg.int_list("i", {0});
    std::sort(is.begin(), is.end());
    is.erase(std::unique(is.begin(), is.end()), is.end());

    const double tmin = ctx.cfg.get_double("theta_min_deg", -90.0);
    const double tmax = ctx.cfg.get_double("theta_max_deg", 90.0);
    const double tstep = ctx.cfg.get_double("theta_step_deg", 0.1);
    if (tstep <= 0.0 || tmax < tmin)
        throw ConfigError("beampattern: need theta_step_deg > 0 and theta_max_deg >= theta_min_deg");
    std::vector<double> grid_deg, grid_rad;
    const auto steps = static_cast<long long>(std::floor((tmax - tmin) / tstep + 1e-9));
    for (long long k = 0; k <= steps; ++k)
    {
        grid_deg.push_back(tmin + static_cast<double>(k) * tstep);
        grid_rad.push_back(grid_deg.back() * atma::pi / 180.0);
    }

    const auto pts = build_points(ctx.cfg, ctx.sample_rate);
    struct Task
    {
        Point p;
        int i;
    };
    std::vector<Task> tasks;
    for (const Point &p : pts)
        for (int i : is)
            tasks.push_back({p, i});

    Table table(with_tuple({"i", "theta_deg", "af_db", "steer_deg", "violations"}));
    auto rows = parallel_map<std::vector<std::vector<Cell>>>(
        tasks.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Task &t = tasks[idx];
            const ModConfig mc{t.p.n, t.p.a, t.p.o, ctx.sample_rate};
            const auto af = atma::beam::array_factor(grid_rad, t.i, t.p.d, acfg, mc, simplified);
            const auto steer = atma::beam::beam_angle(t.i, t.p.d, mc, acfg.spacing);
            const std::string viol = violations_string(mc, ctx.k_b);
            std::vector<std::vector<Cell>> out;
            for (std::size_t k = 0; k < grid_rad.size(); ++k)
            {
                auto row = tuple_cells(ctx, t.p);
                row.push_back(cell_int(t.i));
                row.push_back(cell_db(grid_deg[k]));
                row.push_back(cell_db(power_db(std::abs(af[k]))));
                row.push_back(steer ? cell_db(*steer * 180.0 / atma::pi) : cell_empty());
                row.push_back(cell_text(viol));
                out.push_back(std::move(row));
            }
            return out;
        });
    for (auto &r : rows)
        for (auto &row : r)
            table.add_row(std::move(row));
    return table;
}

Table run_link_sim(const RunContext &ctx)
{
    ctx.cfg.allow_only(with_keys({"upsample", "snr_db", "equalize", "undo_precoder",
                                  "gain_imbalance_db", "phase_error_deg", "spectrum_bins"}));
    if (ctx.k_b <= 0)
        throw ConfigError("link-sim: missing required key 'k_b' (subcarriers per block)");
    const int upsample = static_cast<int>(ctx.cfg.get_int("upsample", 8));
    const bool has_noise = ctx.cfg.has("snr_db");
    const double snr_db = ctx.cfg.get_double("snr_db", 0.0);

    atma::link::Impairments imp;
    imp.gain_imbalance_db = ctx.cfg.get_double("gain_imbalance_db", 0.0);
    imp.phase_error_deg = ctx.cfg.get_double("phase_error_deg", 0.0);

    atma::link::ReceiveOptions opt;
    opt.equalize_amplitude = ctx.cfg.get_bool("equalize", false);
    opt.undo_precoder = ctx.cfg.get_bool("undo_precoder", true);
    opt.spectrum_bins = static_cast<int>(ctx.cfg.get_int("spectrum_bins", 0));

    const auto pts = build_points(ctx.cfg, ctx.sample_rate);
    Table table(with_tuple({"upsample", "snr_db", "evm", "evm_model", "violations"}));
    auto rows =
        parallel_map<std::vector<Cell>>(pts.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Point &p = pts[idx];
            const ModConfig mc{p.n, p.a, p.o, ctx.sample_rate};
            const Precoder pre = make_precoder(ctx.cfg, p.a);

            // Per-point derived seeds keep points independent of each other
            // and of the sweep size.
            const auto payload =
                atma::link::random_qpsk(ctx.k_b, ctx.seed + 2 * static_cast<std::uint64_t>(idx));
            const auto frame = atma::link::build_frame(payload, mc, p.d, pre, ctx.n_cp);
            auto samples = atma::link::modulate_frame(frame, upsample, imp);
            if (has_noise)
                samples = atma::link::add_awgn(samples, snr_db,
                                               ctx.seed + 2 * static_cast<std::uint64_t>(idx) + 1);
            const auto result = atma::link::receive(samples, frame, upsample, opt);
            const double model =
                atma::metrics::evm(atma::alias::block_spectrum(mc, p.d, pre));

            auto row = tuple_cells(ctx, p);
            row.push_back(cell_int(upsample));
            row.push_back(has_noise ? cell_db(snr_db) : cell_empty());
            row.push_back(cell_num(result.measured_evm));
            row.push_back(cell_num(model));
            row.push_back(cell_text(violations_string(mc, ctx.k_b)));
            return row;
        });
    for (auto &row : rows)
        table.add_row(std::move(row));
    return table;
}

Table run_oracle_check(const RunContext &ctx, bool &all_ok)
{
    ctx.cfg.allow_only(with_keys({"upsample", "tolerance"}));
    const int upsample = static_cast<int>(ctx.cfg.get_int("upsample", 8));
    const double tolerance = ctx.cfg.get_double("tolerance", 1e-10);
    const auto pts = build_points(ctx.cfg, ctx.sample_rate);

    Table table(with_tuple({"upsample", "i_max", "max_rel_err", "ok", "violations"}));
    auto rows =
        parallel_map<std::vector<Cell>>(pts.size(), ctx.args.jobs, [&](std::size_t idx) {
            const Point &p = pts[idx];
            const ModConfig mc{p.n, p.a, p.o, ctx.sample_rate};
            const int period = p.n * p.a * upsample;
            const int imax = period / (2 * p.n) - 1;
            const atma::HarmonicSpectrum oracle =
                atma::link::dft_oracle(mc, p.d, upsample, imax);
            double worst = 0.0;
            for (int i = -imax; i <= imax; ++i)
            {
                const cdouble want = atma::modwave::delayed_coef(i, p.d, mc);
                const double rel =
                    std::abs(oracle.at(i) - want) / std::max(std::abs(want), 1e-300);
                worst = std::max(worst, rel);
            }
            auto row = tuple_cells(ctx, p);
            row.push_back(cell_int(upsample));
            row.push_back(cell_int(imax));
            row.push_back(cell_num(worst));
            row.push_back(cell_int(worst <= tolerance));
            row.push_back(cell_text(violations_string(mc, ctx.k_b)));
            return row;
        });
    for (auto &row : rows)
        table.add_row(std::move(row));

    const auto ok_col = *table.column("ok");
    all_ok = std::all_of(table.rows().begin(), table.rows().end(),
                         [&](const auto &row) { return row[ok_col].num != 0.0; });
    return table;
}

// ------------------------------------------------------------------ output

std::string experiment_basename(const std::string &name)
{
    std::string base = name;
    std::replace(base.begin(), base.end(), '-', '_');
    return base;
}

nlohmann::ordered_json make_sidecar(const RunContext &ctx)
{
    nlohmann::ordered_json j;
    j["experiment"] = ctx.name;
    j["config_file"] = std::filesystem::path(ctx.args.config_path).filename().string();
    j["config_sha256"] = sha256_hex(ctx.cfg.raw());
    j["seed"] = ctx.seed;
    j["versions"] = {{"atma", atma::version_string},
                     {"fftw", std::string(fftw_version)},
                     {"compiler", std::string(__VERSION__)}};
    j["outputs"] = nlohmann::ordered_json::array();
    return j;
}

void add_output(nlohmann::ordered_json &sidecar, const std::string &file,
                const std::string &bytes, std::optional<std::size_t> rows)
{
    nlohmann::ordered_json o;
    o["file"] = file;
    o["sha256"] = sha256_hex(bytes);
    o["bytes"] = bytes.size();
    if (rows)
        o["rows"] = *rows;
    sidecar["outputs"].push_back(std::move(o));
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_export_waveform(const RunContext &ctx)
{
    ctx.cfg.allow_only({"experiment", "seed", "sample_rate", "n", "a", "o_tau", "d", "k_b",
                        "n_cp", "upsample", "count"});
    const ModConfig mc{static_cast<int>(ctx.cfg.get_int("n", 0)),
                       static_cast<int>(ctx.cfg.get_int("a", 0)),
                       static_cast<int>(ctx.cfg.get_int("o_tau", 1)), ctx.sample_rate};
    mc.validate();
    const int d = static_cast<int>(ctx.cfg.get_int("d", 0));
    const int upsample = static_cast<int>(ctx.cfg.get_int("upsample", 8));
    const long long count =
        ctx.cfg.get_int("count", static_cast<long long>(mc.n_states) * mc.alias_factor * upsample);

    if (count <= 0)
        throw ConfigError("key 'count': must be positive");
    atma::wave_io::Waveform w;
    w.sample_rate = mc.sample_rate * upsample;
    w.samples =
        atma::modwave::waveform_samples(mc, d, static_cast<std::size_t>(count), upsample);

    const std::filesystem::path out_dir(ctx.args.out_dir);
    const auto bin_path = out_dir / "waveform.bin";
    std::filesystem::create_directories(out_dir);
    atma::wave_io::write_waveform(bin_path, w);

    auto sidecar = make_sidecar(ctx);
    add_output(sidecar, "waveform.bin", read_file(bin_path.string()), std::nullopt);
    sidecar["status"] = "ok";
    write_file((out_dir / (experiment_basename(ctx.name) + ".json")).string(),
               sidecar.dump(2) + "\n");
    return 0;
}

} // namespace

int run_experiment(const std::string &name, const CliArgs &args)
{
    const Config cfg = Config::parse_file(args.config_path);

    // A config written for one experiment must not silently run as another.
    if (cfg.has("experiment") && cfg.scalar("experiment") != name)
        throw ConfigError("config declares experiment '" + cfg.scalar("experiment") +
                          "' but subcommand is '" + name + "'");

    RunContext ctx{cfg,
                   args,
                   name,
                   args.seed ? *args.seed : cfg.get_u64("seed", 0),
                   cfg.get_double("sample_rate", 1.0),
                   static_cast<int>(cfg.get_int("k_b", 0)),
                   static_cast<int>(cfg.get_int("n_cp", 0))};
    if (ctx.sample_rate <= 0.0)
        throw ConfigError("key 'sample_rate': must be positive");

    if (name == "export-waveform")
        return run_export_waveform(ctx);

    bool checks_ok = true;
    Table table({});
    if (name == "spectrum")
        table = run_spectrum(ctx);
    else if (name == "aclr-sweep")
        table = run_aclr_sweep(ctx);
    else if (name == "ripple-sweep")
        table = run_ripple_sweep(ctx);
    else if (name == "evm-sweep")
        table = run_evm_sweep(ctx);
    else if (name == "capacity-sweep")
        table = run_capacity_sweep(ctx);
    else if (name == "beampattern")
        table = run_beampattern(ctx);
    else if (name == "link-sim")
        table = run_link_sim(ctx);
    else if (name == "oracle-check")
        table = run_oracle_check(ctx, checks_ok);
    else
        throw ConfigError("unknown experiment '" + name + "'");

    const std::string base = experiment_basename(name);
    const std::string csv = table.to_csv();
    const std::filesystem::path out_dir(args.out_dir);
    write_file((out_dir / (base + ".csv")).string(), csv);

    auto sidecar = make_sidecar(ctx);
    add_output(sidecar, base + ".csv", csv, table.rows().size());

    const auto goldens = parse_goldens(cfg);
    const auto results = apply_goldens(goldens, table);
    bool goldens_ok = true;
    sidecar["golden"] = nlohmann::ordered_json::array();
    for (const GoldenResult &r : results)
    {
        goldens_ok = goldens_ok && r.pass;
        nlohmann::ordered_json g;
        g["rule"] = r.check->rule;
        g["matched_rows"] = r.matched;
        if (r.matched > 0)
            g["value"] = r.value;
        g["pass"] = r.pass;
        if (!r.pass)
        {
            g["detail"] = r.detail;
            std::fprintf(stderr, "golden check failed: %s (%s)\n", r.check->rule.c_str(),
                         r.detail.c_str());
        }
        sidecar["golden"].push_back(std::move(g));
    }
    if (!checks_ok)
        std::fprintf(stderr, "oracle check failed: see '%s.csv' column 'ok'\n", base.c_str());

    const bool ok = goldens_ok && checks_ok;
    sidecar["status"] = ok ? "ok" : "check-failure";
    write_file((out_dir / (base + ".json")).string(), sidecar.dump(2) + "\n");
    return ok ? 0 : 1;
}

} // namespace atma_cli
