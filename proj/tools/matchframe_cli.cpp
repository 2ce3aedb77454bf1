// Command-line front end: exact / approx / decide solvers, instance
// generators and a benchmark harness. Results are printed as one JSON object
// per run; bench prints CSV. Exit codes: 0 a frame exists, 1 none, 2 input
// error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchframe/approx.hpp"
#include "matchframe/exact.hpp"
#include "matchframe/io.hpp"
#include "matchframe/oracle.hpp"

using json = nlohmann::json;
using namespace mframe;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

MatrixFormat parse_format(const std::string& s) {
    if (s == "raw") return MatrixFormat::kRaw;
    if (s == "tokens") return MatrixFormat::kTokens;
    throw ParseError("unknown format: " + s);
}

int emit_result(const std::optional<Frame>& f, const std::string& mode, double elapsed_ms,
                std::optional<double> epsilon = std::nullopt) {
    json out;
    if (f) {
        out["frame"] = {{"u", f->u}, {"d", f->d}, {"l", f->l}, {"r", f->r}};
        out["perimeter"] = f->perimeter();
    } else {
        out["frame"] = nullptr;
    }
    out["mode"] = mode;
    if (epsilon) out["epsilon"] = *epsilon;
    out["elapsed_ms"] = elapsed_ms;
    std::cout << out.dump() << '\n';
    return f ? 0 : 1;
}

// Printable pool used as raw byte codes so generated files round-trip to the
// identical code matrix.
const std::string kRawPool =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    "!#$%&'()*+,-./:;<=>?@[]^_`{|}~";

Matrix gen_matrix(const std::string& kind, int n, int m, int alphabet, std::uint64_t seed,
                  bool raw_codes, const std::optional<Frame>& planted) {
    if (n < 1 || m < 1) throw ParseError("gen: dimensions must be >= 1");
    if (alphabet < 1) throw ParseError("gen: alphabet must be >= 1");
    if (raw_codes && alphabet > static_cast<int>(kRawPool.size()))
        throw ParseError("gen: alphabet too large for raw output; use --format tokens");
    auto code = [&](int c) -> Symbol {
        return raw_codes ? static_cast<Symbol>(static_cast<unsigned char>(kRawPool[c]))
                         : static_cast<Symbol>(c);
    };
    Symbol amax = 0;
    for (int c = 0; c < alphabet; ++c) amax = std::max(amax, code(c));

    Matrix out(n, m, amax);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    if (kind == "all-equal") {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) out.set(i, j, code(0));
    } else if (kind == "alternating") {
        if (alphabet < 2) throw ParseError("gen: alternating needs alphabet >= 2");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) out.set(i, j, code((i + j) % 2));
    } else if (kind == "random" || kind == "planted") {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) out.set(i, j, code(dist(rng)));
        if (kind == "planted") {
            Frame f = planted.value_or(Frame(1 + n / 4, n - n / 4, 1 + m / 4, m - m / 4));
            if (f.d > n || f.r > m) throw ParseError("gen: planted frame exceeds matrix");
            // Make the border matching: right column := left column, then
            // bottom row := top row (the corners stay consistent).
            for (int i = f.u; i <= f.d; ++i) out.set(i, f.r, out.at(i, f.l));
            for (int j = f.l; j <= f.r; ++j) out.set(f.d, j, out.at(f.u, j));
        }
    } else {
        throw ParseError("gen: unknown kind: " + kind);
    }
    return out;
}

std::optional<Frame> parse_planted(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int u, d, l, r;
    char c1, c2, c3;
    std::istringstream in(s);
    if (!(in >> u >> c1 >> d >> c2 >> l >> c3 >> r) || c1 != ',' || c2 != ',' || c3 != ',')
        throw ParseError("gen: --frame expects u,d,l,r");
    return Frame(u, d, l, r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum matching frame search in 2D strings"};
    app.require_subcommand(1);

    std::string path, format_name = "raw";
    double epsilon = 0.5;
    int threads = 1;
    bool use_oracle = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "matrix file")->required();
        cmd->add_option("--format", format_name, "raw|tokens (default raw)");
        cmd->add_option("--threads", threads, "worker threads (default 1)");
    };

    CLI::App* exact = app.add_subcommand("exact", "exact maximum matching frame");
    add_input(exact);
    exact->add_flag("--oracle", use_oracle, "brute-force reference (small inputs only)");

    CLI::App* approx = app.add_subcommand("approx", "(1-epsilon)-approximate maximum frame");
    add_input(approx);
    approx->add_option("--epsilon", epsilon, "approximation parameter in (0,1)")->required();

    CLI::App* decide = app.add_subcommand("decide", "does any matching frame exist?");
    add_input(decide);

    std::string gen_kind;
    int gen_n = 8, gen_m = 8, gen_alphabet = 2;
    std::uint64_t gen_seed = 1;
    std::string gen_frame;
    CLI::App* gen = app.add_subcommand("gen", "write a matrix to stdout");
    gen->add_option("kind", gen_kind, "random|alternating|all-equal|planted")->required();
    gen->add_option("-n", gen_n, "rows")->required();
    gen->add_option("-m", gen_m, "columns")->required();
    gen->add_option("--alphabet", gen_alphabet, "alphabet size (default 2)");
    gen->add_option("--seed", gen_seed, "RNG seed (default 1)");
    gen->add_option("--frame", gen_frame, "planted frame as u,d,l,r");
    gen->add_option("--format", format_name, "raw|tokens (default raw)");

    std::string bench_sizes = "64,128", bench_mode = "exact";
    int bench_reps = 3;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "time solvers on random square matrices (CSV)");
    bench->add_option("--sizes", bench_sizes, "comma-separated sizes (default 64,128)");
    bench->add_option("--mode", bench_mode, "exact|approx (default exact)");
    bench->add_option("--epsilon", epsilon, "epsilon for approx mode (default 0.5)");
    bench->add_option("--reps", bench_reps, "repetitions per size (default 3)");
    bench->add_option("--seed", bench_seed, "RNG seed (default 1)");
    bench->add_option("--threads", threads, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            auto planted = parse_planted(gen_frame);
            const MatrixFormat fmt = parse_format(format_name);
            Matrix m = gen_matrix(gen_kind, gen_n, gen_m, gen_alphabet, gen_seed,
                                  fmt == MatrixFormat::kRaw, planted);
            if (fmt == MatrixFormat::kTokens) m = canonicalize_codes(m);
            write_matrix(std::cout, m, fmt);
            return 0;
        }
        if (*bench) {
            std::vector<int> sizes;
            std::stringstream ss(bench_sizes);
            for (std::string item; std::getline(ss, item, ',');) sizes.push_back(std::stoi(item));
            if (bench_mode != "exact" && bench_mode != "approx")
                throw ParseError("bench: mode must be exact or approx");
            std::cout << "size,mode,median_ms\n";
            for (int s : sizes) {
                Matrix m = gen_matrix("random", s, s, 2, bench_seed, true, std::nullopt);
                std::vector<double> times;
                for (int rep = 0; rep < std::max(1, bench_reps); ++rep) {
                    const auto t0 = std::chrono::steady_clock::now();
                    if (bench_mode == "exact")
                        max_matching_frame(m, {threads});
                    else
                        approx_max_frame(m, epsilon, {threads});
                    times.push_back(ms_since(t0));
                }
                std::sort(times.begin(), times.end());
                std::cout << s << ',' << bench_mode << ',' << times[times.size() / 2] << '\n';
            }
            return 0;
        }

        const MatrixFormat fmt = parse_format(format_name);
        const ParsedMatrix parsed = read_matrix_file(path, fmt);
        const Matrix& m = parsed.matrix;
        const auto t0 = std::chrono::steady_clock::now();
        if (*exact) {
            if (use_oracle) {
                auto f = oracle::brute_max_frame(m);
                return emit_result(f, "oracle", ms_since(t0));
            }
            auto res = max_matching_frame(m, {threads});
            return emit_result(res.frame, "exact", ms_since(t0));
        }
        if (*approx) {
            auto f = approx_max_frame(m, epsilon, {threads});
            return emit_result(f, "approx", ms_since(t0), epsilon);
        }
        if (*decide) {
            auto f = approx_max_frame(m, 0.5, {threads});
            return emit_result(f, "decide", ms_since(t0), 0.5);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
