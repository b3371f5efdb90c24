#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lonely/lonely.hpp"

using namespace lonely;
using nlohmann::json;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_failure = 3;
constexpr std::size_t table_limit = 12;

struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> split_items(const std::vector<std::string>& args) {
    std::vector<std::string> items;
    for (const auto& a : args) {
        std::string cur;
        for (char c : a + ",") {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) items.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    return items;
}

VelocityVector parse_velocities(const std::vector<std::string>& args) {
    std::vector<long> v;
    for (const auto& item : split_items(args)) {
        BigInt x = parse_bigint(item);
        if (x <= 0 || !fits_long(x)) throw UsageError("velocities must be positive integers: '" + item + "'");
        v.push_back(x.get_si());
    }
    if (v.empty()) throw UsageError("no velocities given");
    return VelocityVector(std::move(v));
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& args) {
    std::vector<Rational> out;
    for (const auto& item : split_items(args)) out.push_back(Rational::parse(item));
    return out;
}

BigInt parse_cap(const std::string& s) {
    if (s.empty()) return 0;
    BigInt c = parse_bigint(s);
    if (c < 2) throw UsageError("--max-denominator must be at least 2");
    return c;
}

std::string shift_line(const ShiftVector& s) { return s.str(" "); }

int cmd_gap(const std::vector<std::string>& raw, bool unshifted, bool witness, const std::string& cap) {
    VelocityVector v = parse_velocities(raw);
    if (unshifted) {
        Rational g = gamma_at(v, ShiftVector::zero(v.size()));
        std::cout << g << "\n" << "reciprocal " << (Rational(1) / g).decimal(15) << "\n";
        return 0;
    }
    GapReport r = shifted_gap_report(v, parse_cap(cap));
    if (const auto* g = std::get_if<Rational>(&r.gap)) {
        std::cout << *g << "\n" << "reciprocal " << (Rational(1) / *g).decimal(15) << "\n";
    } else {
        const auto& iv = std::get<Interval>(r.gap);
        std::cout << "between " << iv.lo << " " << iv.hi << "\n";
    }
    if (witness) {
        if (r.witness)
            std::cout << "witness " << shift_line(*r.witness) << "\n";
        else
            std::cout << "witness unavailable\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& vel, const std::vector<std::string>& shifts, const std::string& gamma_text) {
    VelocityVector v = parse_velocities(vel);
    std::vector<Rational> s = parse_rationals(shifts);
    Rational gamma = Rational::parse(gamma_text);
    if (s.size() != v.size()) throw UsageError("expected " + std::to_string(v.size()) + " shifts, got " + std::to_string(s.size()));
    if (gamma < Rational(0)) throw UsageError("gamma must be nonnegative");
    auto lanes = danger_intervals(v, ShiftVector(s), gamma);
    std::vector<ClosedInterval> all;
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        std::cout << "runner " << i + 1 << " (v=" << v[i] << "):";
        for (const auto& iv : lanes[i]) {
            std::cout << " [" << iv.lo << "," << iv.hi << "]";
            all.push_back(iv);
        }
        std::cout << "\n";
    }
    CoverResult c = greedy_interval_cover(all, {Rational(0), Rational(1)});
    if (c.covered) {
        std::cout << "covered: every time in [0,1] has a runner within " << gamma << " of an integer\n";
        return 0;
    }
    std::cout << "not covered: gap [" << c.longest_gap->lo << "," << c.longest_gap->hi << "]\n";
    return 1;
}

int cmd_sweep(std::size_t n, long max_sum, unsigned jobs, const std::string& output, const std::string& format,
              const std::string& cap, bool quiet) {
    if (n < 2) throw UsageError("--n must be at least 2");
    OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    auto vectors = sorted_primitive_vectors(n, max_sum);
    SweepOptions opt;
    opt.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    opt.max_denominator = parse_cap(cap);
    if (!quiet)
        opt.progress = [](std::size_t done, std::size_t total) {
            if (done == total || done % 100 == 0) std::cerr << "\r" << done << "/" << total << std::flush;
        };
    auto records = run_sweep(vectors, opt);
    if (!quiet && !vectors.empty()) std::cerr << "\n";
    if (output.empty() || output == "-") {
        if (fmt == OutputFormat::Csv)
            write_csv(std::cout, records);
        else
            write_json(std::cout, records);
    } else {
        write_sweep_file(output, records, fmt);
        SweepSummary s = summarize(records);
        std::cout << "wrote " << s.total << " records to " << output << " (below_bound=" << s.below << ", at_bound=" << s.at
                  << ")\n";
    }
    return 0;
}

int cmd_table(std::size_t max_n, const std::string& cap) {
    if (max_n < 2 || max_n > table_limit) throw UsageError("--max-n must lie in [2, " + std::to_string(table_limit) + "]");
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::vector<long> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(i + 1);
        GapReport r = shifted_gap_report(VelocityVector(v), parse_cap(cap));
        std::cout << n << " " << gap_string(r.gap);
        if (const auto* g = std::get_if<Rational>(&r.gap)) std::cout << " " << (Rational(1) / *g).decimal(15);
        std::cout << std::endl;
    }
    return 0;
}

// zonolab inputs: a configuration as JSON text or @file
json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json lattice_body_json(const zono::LatticeBody& lb) {
    return {{"body", zono::to_json(lb.body)}, {"lattice", zono::to_json(lb.lattice)}, {"generators", zono::to_json(lb.generators)}};
}

json width_json(const zono::LatticeWidth& w) {
    json j = {{"kind", w.kind == zono::LatticeWidth::Exactly ? "Exactly" : "GreaterThan"}, {"value", zono::integer_json(w.value)}};
    if (w.kind == zono::LatticeWidth::Exactly) j["functional"] = zono::to_json(w.functional);
    return j;
}

struct ZonoArgs {
    std::string op;
    std::vector<std::string> rest;
    std::optional<long> cusick, almost;
    std::vector<long> rectangle;
    std::string lattice;
    long bound = 3;
    bool lr = false;
};

zono::LatticeBody pick_construction(const ZonoArgs& a) {
    if (a.cusick) return zono::cusick_parallelepiped(*a.cusick);
    if (a.almost) return zono::almost_coloopless_zonotope(*a.almost);
    throw UsageError("expected --cusick Q or --almost-coloopless D");
}

zono::VectorConfiguration config_arg(const ZonoArgs& a) {
    if (a.rectangle.size() == 2) return zono::rectangle_config(a.rectangle[0], a.rectangle[1]);
    if (a.rest.size() != 1) throw UsageError("expected one configuration (JSON text or @file)");
    return zono::configuration_from_json(read_json_arg(a.rest[0]));
}

int cmd_zonolab(const ZonoArgs& a) {
    json out;
    const std::string& op = a.op;
    if (op == "gale") {
        out = zono::to_json(zono::gale_dual(config_arg(a)));
    } else if (op == "cosimple") {
        auto u = config_arg(a);
        out = {{"coloopless", zono::is_coloopless(u)}, {"cosimple", zono::is_cosimple(u)}};
    } else if (op == "lvp") {
        out = zono::has_lvp(config_arg(a));
    } else if (op == "rectangle") {
        if (a.rest.size() != 2) throw UsageError("rectangle needs two side lengths");
        out = zono::to_json(zono::rectangle_config(std::stol(a.rest[0]), std::stol(a.rest[1])));
    } else if (op == "cusick") {
        if (a.rest.size() != 1) throw UsageError("cusick needs q");
        out = lattice_body_json(zono::cusick_parallelepiped(std::stol(a.rest[0])));
    } else if (op == "almost-coloopless") {
        if (a.rest.size() != 1) throw UsageError("almost-coloopless needs d");
        out = lattice_body_json(zono::almost_coloopless_zonotope(std::stol(a.rest[0])));
    } else if (op == "kappa") {
        if (a.lr) {
            auto z = zono::lr_zonotope(parse_velocities(a.rest));
            out = zono::first_c_minimum(z.body, zono::LatticeDescription::integer(z.body.dim())).str();
        } else {
            auto lb = pick_construction(a);
            out = zono::first_c_minimum(lb.body, lb.lattice).str();
        }
    } else if (op == "width") {
        if (a.cusick || a.almost) {
            auto lb = pick_construction(a);
            out = width_json(zono::lattice_width_upto(lb.generators, lb.lattice, a.bound));
        } else {
            auto u = config_arg(a);
            auto lat = a.lattice.empty() ? zono::LatticeDescription::integer(u.dim()) : zono::lattice_from_json(read_json_arg(a.lattice));
            out = width_json(zono::lattice_width_upto(u, lat, a.bound));
        }
    } else if (op == "count") {
        VelocityVector v = parse_velocities(a.rest);
        BigInt f = zono::lattice_point_count_formula(v), e = zono::lattice_point_count_enumerated(v);
        if (f != e) throw Error("lattice point count mismatch: formula " + f.get_str() + ", enumeration " + e.get_str());
        out = zono::integer_json(f);
    } else {
        throw UsageError("unknown zonolab operation '" + op + "'");
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact loneliness gaps of velocity vectors, and zonotope utilities"};
    app.require_subcommand(1);

    std::string cap;
    std::vector<std::string> gap_v;
    bool unshifted = false, witness = false;
    auto* gap = app.add_subcommand("gap", "smallest loneliness gap over all starting shifts");
    gap->add_option("velocities", gap_v, "positive integer velocities")->required();
    gap->add_flag("--unshifted", unshifted, "gap with every runner starting at 0");
    gap->add_flag("--witness", witness, "also print a shift attaining the gap");
    gap->add_option("--max-denominator", cap, "denominator cap for the rational search");

    std::string ver_v, ver_s, ver_g;
    auto* verify = app.add_subcommand("verify", "check that no time is lonely for the given shifts at gap gamma");
    verify->add_option("velocities", ver_v, "comma or space separated velocities")->required();
    verify->add_option("shifts", ver_s, "comma or space separated starting positions p/q")->required();
    verify->add_option("gamma", ver_g, "gap bound p/q")->required();

    std::size_t sweep_n = 0;
    long sweep_max = 0;
    unsigned jobs = 0;
    std::string output, format = "csv";
    bool quiet = false;
    auto* sweep = app.add_subcommand("sweep", "gaps of all sorted primitive vectors up to a sum bound");
    sweep->add_option("--n", sweep_n, "vector length")->required();
    sweep->add_option("--max-sum", sweep_max, "largest sum of velocities")->required();
    sweep->add_option("--jobs", jobs, "worker threads (0: one per core)");
    sweep->add_option("--output", output, "output file ('-' for stdout)");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--max-denominator", cap, "denominator cap for the rational search");
    sweep->add_flag("--quiet", quiet, "no progress on stderr");

    std::size_t max_n = 7;
    auto* table = app.add_subcommand("table", "gaps of (1, 2, ..., n)");
    table->add_option("--max-n", max_n, "largest n");
    table->add_option("--max-denominator", cap, "denominator cap for the rational search");

    ZonoArgs za;
    auto* zl = app.add_subcommand("zonolab", "vector configurations, lattice constructions and the lonely vector property");
    zl->add_option("operation", za.op,
                   "gale | cosimple | lvp | rectangle | cusick | almost-coloopless | kappa | width | count")
        ->required();
    zl->add_option("args", za.rest, "operation arguments");
    zl->add_option("--cusick", za.cusick, "use the Cusick parallelepiped for q");
    zl->add_option("--almost-coloopless", za.almost, "use the almost coloopless zonotope in dimension d");
    zl->add_option("--rectangle", za.rectangle, "use the lattice points of [-a,a]x[-b,b]")->expected(2);
    zl->add_flag("--lr", za.lr, "kappa of the zonotope of the given velocities");
    zl->add_option("--lattice", za.lattice, "lattice as JSON {\"q\":..,\"w\":[..]}");
    zl->add_option("--bound", za.bound, "largest width searched");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gap) return cmd_gap(gap_v, unshifted, witness, cap);
        if (*verify) return cmd_verify({ver_v}, {ver_s}, ver_g);
        if (*sweep) return cmd_sweep(sweep_n, sweep_max, jobs, output, format, cap, quiet);
        if (*table) return cmd_table(max_n, cap);
        if (*zl) {
            try {
                return cmd_zonolab(za);
            } catch (const Error& e) {
                // constructions reject out-of-range parameters with domain errors
                std::cerr << "invalid input: " << e.what() << "\n";
                return exit_usage;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid number (" << e.what() << ")\n";
        return exit_usage;
    } catch (const std::exception& e) {
        // 1 is reserved for a verify that fails to cover
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return 0;
}
