#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tridom/generators.hpp"
#include "tridom/io.hpp"
#include "tridom/oracle.hpp"
#include "tridom/pipeline.hpp"

namespace {

using namespace tridom;

constexpr int EXIT_VERIFY = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_BUDGET = 3;

uint64_t effective_seed(uint64_t cli_seed) {
    if (const char* env = std::getenv("TRIDOM_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

GenSpec::Kind parse_kind(const std::string& s) {
    if (s == "named") return GenSpec::Kind::Named;
    if (s == "stacked") return GenSpec::Kind::Stacked;
    if (s == "flipmix") return GenSpec::Kind::Flipmix;
    if (s == "gadget") return GenSpec::Kind::Gadget;
    fail(Errc::ParseError, "unknown generator kind '" + s + "'");
}

// one spec per line, "key=value" tokens: kind=..., n=, seed=, flips=, name=
std::vector<GenSpec> read_spec_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<GenSpec> specs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        GenSpec spec;
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                fail(Errc::ParseError, path + ":" + std::to_string(lineno) + ": expected key=value");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "kind")
                spec.kind = parse_kind(val);
            else if (key == "n")
                spec.n = std::stoi(val);
            else if (key == "seed")
                spec.seed = std::stoull(val);
            else if (key == "flips")
                spec.flips = std::stoi(val);
            else if (key == "name")
                spec.name = val;
            else
                fail(Errc::ParseError, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::string join_path(const std::vector<std::string>& tags) {
    std::string out;
    for (auto& t : tags) {
        if (!out.empty()) out += '>';
        out += t;
    }
    return out;
}

struct BenchRow {
    std::string text;
    bool ok = false;
    int exit_code = 0;
};

BenchRow bench_one(int id, const GenSpec& spec, uint64_t seed_override) {
    BenchRow row;
    std::ostringstream out;
    try {
        GenSpec s = spec;
        if (std::getenv("TRIDOM_SEED")) s.seed = seed_override;
        Triangulation g = generate(s);
        const int n = g.vertex_count(), m = g.edge_count();
        SolveOptions opts;
        opts.coloring.seed = s.seed;
        auto start = std::chrono::steady_clock::now();
        IdomCertificate cert = solve(g, opts);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::string iota;
        if (n <= 11) iota = std::to_string(iota_exact(g).value);
        out << id << ',' << n << ',' << m << ',' << join_path(cert.path) << ','
            << (cert.uncolored < 0 ? "" : std::to_string(cert.uncolored)) << ','
            << (cert.cover < 0 ? "" : std::to_string(cert.cover)) << ',' << cert.D.size() << ','
            << cert.bound << ',' << iota << ',' << ms;
        row.ok = true;
    } catch (const Error& e) {
        out << id << ",,,error:" << errc_name(e.code()) << ",,,,,,";
        row.exit_code = e.code() == Errc::BudgetExhausted ? EXIT_BUDGET : EXIT_VERIFY;
    }
    row.text = out.str();
    return row;
}

int run(int argc, char** argv) {
    CLI::App app{"certified independent dominating sets in planar triangulations"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a triangulation");
    std::string gen_kind = "stacked", gen_name, gen_out;
    int gen_n = 10, gen_flips = 0;
    uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "named|stacked|flipmix|gadget");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--flips", gen_flips, "diagonal flip attempts (flipmix)");
    gen->add_option("--name", gen_name, "graph name (named/gadget)");
    gen->add_option("-o,--output", gen_out, "output file (.plc or .rot)")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "find a certified set of size <= n/3");
    std::string solve_in, solve_cert;
    bool solve_trace = false;
    uint64_t solve_seed = 0;
    solve_cmd->add_option("input", solve_in, "graph file")->required();
    solve_cmd->add_option("--cert", solve_cert, "write the certificate here");
    solve_cmd->add_option("--seed", solve_seed, "coloring seed");
    solve_cmd->add_flag("--trace", solve_trace, "print the per-level trace");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    std::string verify_in, verify_cert;
    verify_cmd->add_option("input", verify_in, "graph file")->required();
    verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact small-instance computations");
    std::string oracle_in, oracle_param = "iota";
    oracle_cmd->add_option("input", oracle_in, "graph file")->required();
    oracle_cmd->add_option("--param", oracle_param, "iota|gamma|alpha|obs1");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "batch runs to CSV");
    std::string bench_spec, bench_csv;
    int bench_jobs = 1;
    bench_cmd->add_option("--spec", bench_spec, "generator spec file")->required();
    bench_cmd->add_option("--csv", bench_csv, "output CSV")->required();
    bench_cmd->add_option("--jobs", bench_jobs, "parallel workers");

    // convert
    auto* convert_cmd = app.add_subcommand("convert", "translate between .plc and .rot");
    std::string convert_in, convert_out;
    convert_cmd->add_option("input", convert_in)->required();
    convert_cmd->add_option("output", convert_out)->required();

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        GenSpec spec;
        spec.kind = parse_kind(gen_kind);
        spec.n = gen_n;
        spec.seed = effective_seed(gen_seed);
        spec.flips = gen_flips;
        spec.name = gen_name;
        save_graphs(gen_out, {generate(spec)});
        return 0;
    }

    if (solve_cmd->parsed()) {
        auto graphs = load_graphs(solve_in);
        SolveOptions opts;
        opts.coloring.seed = effective_seed(solve_seed);
        for (size_t i = 0; i < graphs.size(); ++i) {
            IdomCertificate cert = solve(graphs[i], opts);
            std::cout << "n=" << graphs[i].vertex_count() << " |D|=" << cert.D.size()
                      << " bound=" << cert.bound << " ok\n";
            if (solve_trace)
                for (auto& line : cert.trace) std::cout << "  " << line << "\n";
            if (!solve_cert.empty() && i == 0) {
                CertificateFile cf;
                cf.graph_hash = graph_digest(graphs[i]);
                cf.n = graphs[i].vertex_count();
                cf.claimed_bound = cert.bound;
                cf.D = cert.D;
                cf.trace = cert.trace;
                write_file(solve_cert, write_certificate(cf));
            }
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        auto graphs = load_graphs(verify_in);
        if (graphs.empty()) fail(Errc::ParseError, "no graph in " + verify_in);
        CertificateFile cf = read_certificate(read_file(verify_cert));
        check_certificate_graph(cf, graphs.front());
        VerifyResult r = verify(graphs.front(), cf.D);
        bool ok = r.ok() && cf.claimed_bound == graphs.front().vertex_count() / 3;
        std::cout << (ok ? "valid" : "invalid") << " |D|=" << cf.D.size() << " bound="
                  << cf.claimed_bound << "\n";
        return ok ? 0 : EXIT_VERIFY;
    }

    if (oracle_cmd->parsed()) {
        auto graphs = load_graphs(oracle_in);
        for (auto& g : graphs) {
            if (oracle_param == "obs1") {
                Obs1Report rep = check_obs1(g);
                std::cout << "obs1=" << (rep.ok ? "true" : "false") << " max=" << rep.max_size
                          << " f3=" << rep.f3 << " f6p=" << rep.f6p << "\n";
                if (!rep.ok) return EXIT_VERIFY;
                continue;
            }
            OracleResult r;
            if (oracle_param == "iota")
                r = iota_exact(g);
            else if (oracle_param == "gamma")
                r = gamma_exact(g);
            else if (oracle_param == "alpha")
                r = alpha_exact(g);
            else
                fail(Errc::ParseError, "unknown oracle parameter '" + oracle_param + "'");
            std::cout << oracle_param << "=" << r.value << " witness=";
            for (size_t i = 0; i < r.witness.size(); ++i)
                std::cout << (i ? "," : "") << r.witness[i];
            std::cout << "\n";
        }
        return 0;
    }

    if (bench_cmd->parsed()) {
        auto specs = read_spec_file(bench_spec);
        uint64_t seed_override = effective_seed(0);
        std::vector<BenchRow> rows(specs.size());
        if (bench_jobs <= 1) {
            for (size_t i = 0; i < specs.size(); ++i)
                rows[i] = bench_one(static_cast<int>(i + 1), specs[i], seed_override);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < bench_jobs; ++t)
                pool.emplace_back([&] {
                    for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
                        rows[i] = bench_one(static_cast<int>(i + 1), specs[i], seed_override);
                });
            for (auto& th : pool) th.join();
        }
        std::ostringstream csv;
        csv << "id,n,m,path,uncolored,cover,dsize,bound,iota,ms\n";
        int rc = 0;
        for (auto& row : rows) {
            csv << row.text << "\n";
            if (!row.ok && rc == 0) rc = row.exit_code;
        }
        write_file(bench_csv, csv.str());
        std::cout << rows.size() << " rows -> " << bench_csv << "\n";
        return rc;
    }

    if (convert_cmd->parsed()) {
        save_graphs(convert_out, load_graphs(convert_in));
        return 0;
    }

    return EXIT_INPUT;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tridom::Error& e) {
        std::cerr << "error: " << e.what() << " [" << tridom::errc_name(e.code()) << "]\n";
        switch (e.code()) {
            case tridom::Errc::BudgetExhausted:
                return EXIT_BUDGET;
            case tridom::Errc::ParseError:
            case tridom::Errc::BadHeader:
            case tridom::Errc::TruncatedStream:
            case tridom::Errc::UnknownName:
            case tridom::Errc::VertexCountTooLarge:
                return EXIT_INPUT;
            default:
                return EXIT_VERIFY;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    }
}
