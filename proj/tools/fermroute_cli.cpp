// Copyright 2026 The fermroute Authors
// SPDX-License-Identifier: Apache-2.0

// fermroute: compile, verify and benchmark fermionic routing circuits.
// Exit codes: 0 ok, 2 bad flags or missing inputs, 3 failed verification.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "fermroute/circuit_io.hpp"
#include "fermroute/encodings.hpp"
#include "fermroute/fperm.hpp"
#include "fermroute/gamma.hpp"
#include "fermroute/planner.hpp"
#include "fermroute/simd.hpp"
#include "fermroute/workloads.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fermroute;

namespace {

constexpr const char *kVersion = "0.1.0";
constexpr const char *kCsvHeader =
    "method,L,N,instance,cnot_depth,gates,idle,qubits,spacetime,fidelity_p1e3,fidelity_p1e4,fidelity_p1e5";

struct Exit {
    int code;
    std::string message;
};

[[noreturn]] void bad_input(const std::string &msg) { throw Exit{2, msg}; }

[[noreturn]] void verify_failed(const std::string &invariant, const std::string &detail) {
    json d = {{"verify", "fail"}, {"invariant", invariant}, {"detail", detail}};
    throw Exit{3, d.dump()};
}

uint64_t default_seed() {
    const char *env = std::getenv("FERMROUTE_SEED");
    if (!env || !*env) return 1;
    try {
        size_t used = 0;
        uint64_t s = std::stoull(env, &used, 0);
        if (env[used] != '\0') throw std::invalid_argument("trailing characters");
        return s;
    } catch (const std::exception &) {
        bad_input(std::string("FERMROUTE_SEED is not an unsigned integer: ") + env);
    }
}

std::string timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json manifest(const std::string &command, const json &params, uint64_t seed) {
    return {{"command", command}, {"parameters", params}, {"seed", seed}, {"tool_version", kVersion},
            {"timestamp", timestamp()}, {"kernels", simd::active_kernels().name}};
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// Writes into --out when given; otherwise tables go to stdout and circuits are dropped.
class Sink {
   public:
    explicit Sink(std::string dir) : dir_(std::move(dir)) {
        if (!dir_.empty()) fs::create_directories(dir_);
    }
    bool has_dir() const { return !dir_.empty(); }
    void write(const std::string &name, const std::string &text) const {
        if (dir_.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(fs::path(dir_) / name, std::ios::binary);
        if (!f) bad_input("cannot write " + (fs::path(dir_) / name).string());
        f << text;
    }
    void write_circuit(const std::string &name, Circuit c, const json &man) const {
        if (dir_.empty()) return;
        json j = json::parse(circuit_to_json(c));
        j["manifest"] = man;
        std::ofstream f(fs::path(dir_) / name, std::ios::binary);
        f << j.dump() << "\n";
    }

   private:
    std::string dir_;
};

std::string csv_with_manifest(const json &man, const std::vector<std::string> &rows,
                              const std::string &header = kCsvHeader) {
    std::string out = "# manifest " + man.dump() + "\n" + header + "\n";
    for (const auto &r : rows) out += r + "\n";
    return out;
}

std::string metrics_row(const std::string &method, int L, int N, int instance, const Metrics &m) {
    std::ostringstream s;
    s << method << ',' << L << ',' << N << ',' << instance << ',' << m.cnot_depth << ',' << m.gates << ',' << m.idle
      << ',' << m.qubits << ',' << m.spacetime << ',' << fmt(estimate_fidelity(m, 1e-3)) << ','
      << fmt(estimate_fidelity(m, 1e-4)) << ',' << fmt(estimate_fidelity(m, 1e-5));
    return s.str();
}

template <class F>
auto parallel_map(size_t n, F f) {
    using R = decltype(f(size_t{0}));
    std::vector<std::future<R>> jobs;
    std::vector<R> out;
    size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (size_t start = 0; start < n; start += width) {
        jobs.clear();
        for (size_t i = start; i < std::min(n, start + width); i++) jobs.push_back(std::async(std::launch::async, f, i));
        for (auto &j : jobs) out.push_back(j.get());
    }
    return out;
}

// ---- fperm ---------------------------------------------------------------------------------------

struct FpermOpts {
    int L = 4;
    std::string perm = "random";
    int count = 20;
    std::string method = "ours";
    uint64_t seed = 1;
    std::string out;
    bool verify = false;
    bool circuits = true;
};

int run_fperm(const FpermOpts &o) {
    std::vector<NamedPermutation> inst;
    for (auto &np : benchmark_ensemble(o.L, o.perm == "reversal" || o.perm == "transpose" ? 0 : o.count, o.seed)) {
        if (o.perm == "all" || np.family == o.perm) inst.push_back(std::move(np));
    }
    std::vector<FpermMethod> methods;
    if (o.method == "ours" || o.method == "both") methods.push_back(FpermMethod::Ours);
    if (o.method == "oned_fswap" || o.method == "both") methods.push_back(FpermMethod::OneD);
    json params = {{"L", o.L}, {"perm", o.perm}, {"count", o.count}, {"method", o.method}, {"verify", o.verify}};
    json man = manifest("fperm", params, o.seed);
    Sink sink(o.out);
    int N = o.L * o.L;

    struct Job {
        FpermMethod m;
        size_t i;
    };
    std::vector<Job> jobs;
    for (FpermMethod m : methods) {
        for (size_t i = 0; i < inst.size(); i++) jobs.push_back({m, i});
    }
    struct Result {
        std::string row;
        Circuit circuit;
        std::string failure_invariant, failure;
    };
    auto results = parallel_map(jobs.size(), [&](size_t j) {
        const auto &np = inst[jobs[j].i];
        FpermMethod m = jobs[j].m;
        GateList g = compile_gates(m, np.pi, o.L);
        Result r;
        Metrics met = metrics(g, o.L, o.L);
        r.row = metrics_row(method_name(m), o.L, N, static_cast<int>(jobs[j].i), met);
        if (o.circuits && sink.has_dir()) r.circuit = schedule_greedy(g, o.L, o.L);
        if (o.verify) {
            int64_t bound = m == FpermMethod::Ours ? cost_ours(o.L) : cost_oned(o.L);
            std::string tag = std::string(method_name(m)) + " " + np.family + " " + std::to_string(np.instance);
            if (met.cnot_depth > bound) {
                r.failure_invariant = "depth_bound";
                r.failure = tag + ": depth " + std::to_string(met.cnot_depth) + " > " + std::to_string(bound);
            } else if (o.L <= 4) {
                MajoranaReport rep = check_fperm_basis_states(g, np.pi, o.L, 10000, derive_seed(o.seed, 1000 + j));
                if (!rep.pass()) {
                    r.failure_invariant = "fperm_oracle";
                    r.failure = tag + ": " + rep.first_failure;
                }
            }
            if (r.failure.empty() && o.L <= 16) {
                MajoranaReport rep = check_majorana_permutation(g, np.pi, o.L);
                if (!rep.pass()) {
                    r.failure_invariant = "majorana_permutation";
                    r.failure = tag + ": " + rep.first_failure;
                }
            }
        }
        return r;
    });
    std::vector<std::string> rows;
    for (size_t j = 0; j < results.size(); j++) {
        if (!results[j].failure.empty()) verify_failed(results[j].failure_invariant, results[j].failure);
        rows.push_back(results[j].row);
        if (o.circuits && sink.has_dir()) {
            const auto &np = inst[jobs[j].i];
            results[j].circuit.metadata["method"] = method_name(jobs[j].m);
            results[j].circuit.metadata["family"] = np.family;
            sink.write_circuit("fperm_L" + std::to_string(o.L) + "_" + method_name(jobs[j].m) + "_" + np.family +
                                   std::to_string(np.instance) + ".json",
                               results[j].circuit, man);
        }
    }
    sink.write("fperm_L" + std::to_string(o.L) + "_" + o.perm + "_" + o.method + ".csv", csv_with_manifest(man, rows));
    if (o.verify) std::cerr << "verify: pass (" << rows.size() << " circuits)\n";
    return 0;
}

// ---- gamma-check ---------------------------------------------------------------------------------

int run_gamma_check(int L_min, int L_max, const std::string &out) {
    json man = manifest("gamma-check", {{"L_min", L_min}, {"L_max", L_max}}, 0);
    json per_L = json::array();
    std::string fail;
    for (int L = L_min; L <= L_max; L++) {
        auto res = check_parity_encoding(L);
        int bad = 0;
        for (const auto &r : res) bad += !r.pass;
        int depth = metrics(gamma_gates(L), L, L).cnot_depth;
        bool depth_ok = depth <= 8 * L + 10;
        per_L.push_back({{"L", L}, {"pairs", res.size()}, {"failed", bad}, {"gamma_depth", depth}, {"depth_ok", depth_ok}});
        if (fail.empty() && bad) fail = "L=" + std::to_string(L) + ": " + std::to_string(bad) + " vertical pairs fail";
        if (fail.empty() && !depth_ok) fail = "L=" + std::to_string(L) + ": gamma depth " + std::to_string(depth);
    }
    json report = {{"manifest", man}, {"results", per_L}, {"pass", fail.empty()}};
    Sink(out).write("gamma_check.json", report.dump(2) + "\n");
    if (!fail.empty()) verify_failed(fail.find("depth") != std::string::npos ? "gamma_depth" : "parity_encoding", fail);
    return 0;
}

// ---- encode --------------------------------------------------------------------------------------

int run_encode(const std::string &from, int k, bool verify, const std::string &out) {
    Encoding src = encoding_from_name(from);
    EncodedLayout lay = hilbert_layout(k);
    GateList g = convert_encoding_circuit(src, k);
    json man = manifest("encode", {{"from", from}, {"k", k}, {"verify", verify}}, 0);
    Sink sink(out);
    Circuit c = schedule_greedy(g, lay.rows, lay.cols);
    c.metadata["from"] = from;
    c.metadata["to"] = "jw";
    sink.write_circuit("encode_" + from + "_k" + std::to_string(k) + ".json", c, man);
    Metrics m = metrics(g, lay.rows, lay.cols);
    int n = (1 << k) - 1;
    double bound = (src == Encoding::Parity ? kParityTotalDepthConstant : kTotalDepthConstant) * std::pow(2.0, k / 2.0);
    json report = {{"manifest", man}, {"N", n}, {"rows", lay.rows}, {"cols", lay.cols}, {"cnot_depth", m.cnot_depth},
                   {"gates", m.gates}, {"depth_bound", bound}};
    if (verify) {
        int nq = lay.rows * lay.cols;
        auto want = majorana_strings(TernaryTree::of(Encoding::JW, n), lay.qubit_of_mode, nq);
        auto have = majorana_strings(TernaryTree::of(src, n), lay.qubit_of_mode, nq);
        MajoranaReport rep = check_string_map(g, lay.cols, have, want);
        report["strings_checked"] = rep.checked;
        report["strings_failed"] = rep.failed;
        if (!rep.pass()) verify_failed("encoding_conversion", rep.first_failure);
        if (m.cnot_depth > bound) verify_failed("conversion_depth", "depth " + std::to_string(m.cnot_depth));
    }
    sink.write("encode_" + from + "_k" + std::to_string(k) + ".report.json", report.dump(2) + "\n");
    return 0;
}

// ---- ffft ----------------------------------------------------------------------------------------

int run_ffft(int L, const std::string &variant, bool verify, const std::string &out) {
    std::vector<FfftVariant> vs;
    if (variant == "all") {
        vs = {FfftVariant::GammaSandwich, FfftVariant::FpSandwich, FfftVariant::FswapBaseline};
    } else {
        vs = {variant_from_name(variant)};
    }
    if (verify && L > 16) bad_input("ffft --verify supports L <= 16");
    json man = manifest("ffft", {{"L", L}, {"variant", variant}, {"verify", verify}}, 0);
    Sink sink(out);
    std::vector<std::string> rows;
    json checks = json::array();
    for (FfftVariant v : vs) {
        GateList g = build_ffft_2d({L, v});
        rows.push_back(metrics_row(variant_name(v), L, L * L, 0, metrics(g, L, L)));
        Circuit c = schedule_greedy(g, L, L);
        c.metadata["variant"] = variant_name(v);
        sink.write_circuit("ffft_L" + std::to_string(L) + "_" + variant_name(v) + ".json", c, man);
        if (verify) {
            OracleCheck chk = verify_ffft({L, v});
            checks.push_back({{"variant", variant_name(v)}, {"check", chk.what}, {"checked", chk.checked},
                              {"max_error", chk.max_error}});
            if (!chk.pass(1e-10)) {
                verify_failed("ffft_oracle", std::string(variant_name(v)) + " " + chk.what + " error " + fmt(chk.max_error));
            }
        }
    }
    sink.write("ffft_L" + std::to_string(L) + "_" + variant + ".csv", csv_with_manifest(man, rows));
    if (verify) {
        json report = {{"manifest", man}, {"checks", checks}, {"pass", true}};
        if (sink.has_dir()) {
            sink.write("ffft_L" + std::to_string(L) + ".report.json", report.dump(2) + "\n");
        } else {
            std::cerr << report.dump() << "\n";
        }
    }
    return 0;
}

// ---- syk -----------------------------------------------------------------------------------------

int run_syk(int N, double k, uint64_t seed, double dt, bool verify, const std::string &out) {
    SykInstance inst = sample_syk_terms(N, k, seed, dt);
    json man = manifest("syk", {{"N", N}, {"k", k}, {"dt", dt}, {"verify", verify}}, seed);
    json terms = json::array();
    for (const auto &t : inst.terms) terms.push_back({{"q", t.q}, {"J", t.J}});
    json instance = {{"N", N}, {"k", k}, {"seed", seed}, {"dt", dt}, {"terms", terms}, {"manifest", man}};
    Sink sink(out);
    std::string stem = "syk_N" + std::to_string(N) + "_seed" + std::to_string(seed);
    if (sink.has_dir()) sink.write(stem + ".instance.json", instance.dump() + "\n");
    int L = static_cast<int>(std::lround(std::sqrt(N)));
    if (L * L != N) {
        if (verify) bad_input("circuit-level SYK runs need a square N");
        std::cerr << "syk: N is not a perfect square, wrote the instance only\n";
        if (!sink.has_dir()) std::cout << instance.dump() << "\n";
        return 0;
    }
    if (verify && N > 16) bad_input("syk --verify supports N <= 16");
    TrotterStep st = build_trotter_step(inst);
    Metrics m = metrics(st.gates, L, L);
    Circuit c = schedule_greedy(st.gates, L, L);
    sink.write_circuit(stem + ".json", c, man);
    json report = {{"manifest", man},
                   {"terms", inst.terms.size()},
                   {"groups", st.groups},
                   {"fp_depth", st.fp_depth},
                   {"rotation_depth", st.rotation_depth},
                   {"rotation_fraction", st.fp_depth ? double(st.rotation_depth) / st.fp_depth : 0.0}};
    if (verify) {
        OracleCheck chk = verify_trotter_step(inst, N <= 9 ? 100 : 5, derive_seed(seed, 7));
        report["check"] = chk.what;
        report["max_error"] = chk.max_error;
        if (!(chk.max_error <= 1e-10)) verify_failed("syk_oracle", chk.what + " error " + fmt(chk.max_error));
    }
    sink.write(stem + ".csv", csv_with_manifest(man, {metrics_row("syk_trotter", L, N, 0, m)}));
    if (sink.has_dir()) {
        sink.write(stem + ".report.json", report.dump(2) + "\n");
    } else {
        std::cerr << report.dump() << "\n";
    }
    return 0;
}

// ---- report --------------------------------------------------------------------------------------

struct CsvRow {
    std::string method;
    int L = 0, N = 0, instance = 0;
    Metrics m;
};

std::vector<CsvRow> read_csvs(const std::vector<std::string> &paths) {
    std::vector<CsvRow> out;
    for (const auto &p : paths) {
        std::ifstream f(p);
        if (!f) bad_input("missing input: " + p);
        std::string line;
        bool header = false;
        while (std::getline(f, line)) {
            if (line.empty() || line[0] == '#') continue;
            if (!header) {
                if (line != kCsvHeader) bad_input("unexpected CSV header in " + p);
                header = true;
                continue;
            }
            std::vector<std::string> c;
            std::stringstream ss(line);
            for (std::string cell; std::getline(ss, cell, ',');) c.push_back(cell);
            if (c.size() != 12) bad_input("malformed row in " + p + ": " + line);
            CsvRow r;
            r.method = c[0];
            r.L = std::stoi(c[1]);
            r.N = std::stoi(c[2]);
            r.instance = std::stoi(c[3]);
            r.m.cnot_depth = std::stoi(c[4]);
            r.m.gates = std::stoll(c[5]);
            r.m.idle = std::stoll(c[6]);
            r.m.qubits = std::stoi(c[7]);
            r.m.spacetime = std::stoll(c[8]);
            out.push_back(r);
        }
        if (!header) bad_input("no CSV header in " + p);
    }
    return out;
}

// Published mean CNOT depths over the 22-instance ensemble.
const std::map<std::pair<std::string, int>, double> kReferenceMeans = {
    {{"ours", 6}, 144.8},        {{"ours", 12}, 274.9},        {{"ours", 18}, 405.3},
    {{"ours", 24}, 534.9},       {{"ours", 30}, 667.0},        {{"oned_fswap", 6}, 64.1},
    {{"oned_fswap", 12}, 268.4}, {{"oned_fswap", 18}, 620.5},  {{"oned_fswap", 24}, 1116.8},
    {{"oned_fswap", 30}, 1759.9}};

std::string p2q_tag(double p) {
    int e = static_cast<int>(std::lround(-std::log10(p)));
    if (std::abs(p - std::pow(10.0, -e)) < 1e-12 * p) return "p1e" + std::to_string(e);
    return "p" + fmt(p);
}

int run_report(const std::string &table, const std::vector<std::string> &inputs, std::vector<int> Ls,
               const std::vector<double> &p2qs, uint64_t seed, const std::string &out) {
    json man = manifest("report", {{"table", table}, {"inputs", inputs}, {"L", Ls}, {"p2q", p2qs}}, seed);
    Sink sink(out);
    std::vector<std::string> rows;
    if (table == "I") {
        if (Ls.empty()) Ls = {4, 8, 16, 32};
        for (int L : Ls) {
            if (L < 2) bad_input("report: L must be at least 2");
            std::mt19937_64 rng(derive_seed(seed, L));
            RcrPlan plan = hall_rcr_plan(random_permutation(L * L, rng), L);
            int rowA = metrics(row_stage_gates(plan.rowA, L), L, L).cnot_depth;
            int gam = metrics(gamma_gates(L), L, L).cnot_depth;
            int col = metrics(column_stage_gates(plan.col, L), L, L).cnot_depth;
            int rowB = metrics(row_stage_gates(plan.rowB, L), L, L).cnot_depth;
            std::string Ls_ = std::to_string(L);
            rows.push_back(Ls_ + ",row_a," + std::to_string(2 * L) + "," + std::to_string(rowA));
            rows.push_back(Ls_ + ",gamma_first," + std::to_string(8 * L + 10) + "," + std::to_string(gam));
            rows.push_back(Ls_ + ",bare_column_sort," + std::to_string(2 * L) + "," + std::to_string(col));
            rows.push_back(Ls_ + ",gamma_second," + std::to_string(8 * L + 10) + "," + std::to_string(gam));
            rows.push_back(Ls_ + ",row_b," + std::to_string(2 * L) + "," + std::to_string(rowB));
            rows.push_back(Ls_ + ",total," + std::to_string(cost_ours(L)) + "," +
                           std::to_string(rowA + 2 * gam + col + rowB));
        }
        sink.write("table_I.csv", csv_with_manifest(man, rows, "L,component,formula_depth,stage_depth"));
    } else if (table == "II") {
        if (Ls.empty()) Ls = {4, 8, 16, 32};
        for (int L : Ls) {
            if (L < 1) bad_input("report: L must be positive");
            for (const auto &r : cost_table(L)) {
                rows.push_back(std::to_string(L) + "," + std::to_string(L * L) + "," + r.method + "," +
                               (r.depth ? std::to_string(*r.depth) : "") + "," + std::to_string(r.ancillas) + "," +
                               std::to_string(r.qubits));
            }
        }
        sink.write("table_II.csv", csv_with_manifest(man, rows, "L,N,method,depth,ancillas,qubits"));
    } else if (table == "III") {
        if (inputs.empty()) bad_input("report --table III needs --inputs");
        std::map<std::pair<std::string, int>, std::pair<double, int>> acc;
        for (const auto &r : read_csvs(inputs)) {
            auto &a = acc[{r.method, r.L}];
            a.first += r.m.cnot_depth;
            a.second++;
        }
        for (const auto &[key, a] : acc) {
            double mean = a.first / a.second;
            auto it = kReferenceMeans.find(key);
            std::string ref = it == kReferenceMeans.end() ? "" : fmt(it->second);
            std::string dev = it == kReferenceMeans.end() ? "" : fmt((mean - it->second) / it->second);
            rows.push_back(key.first + "," + std::to_string(key.second) + "," + std::to_string(a.second) + "," +
                           fmt(mean) + "," + ref + "," + dev);
        }
        sink.write("table_III.csv",
                   csv_with_manifest(man, rows, "method,L,instances,mean_cnot_depth,reference_mean,relative_deviation"));
    } else if (table == "IV") {
        std::vector<CsvRow> data;
        if (!inputs.empty()) {
            data = read_csvs(inputs);
        } else {
            if (Ls.empty()) Ls = {4, 8, 16};
            for (int L : Ls) {
                for (FfftVariant v : {FfftVariant::GammaSandwich, FfftVariant::FpSandwich, FfftVariant::FswapBaseline}) {
                    data.push_back({variant_name(v), L, L * L, 0, metrics(build_ffft_2d({L, v}), L, L)});
                }
            }
        }
        for (const auto &r : data) {
            rows.push_back(r.method + "," + std::to_string(r.L) + "," + std::to_string(r.N) + "," +
                           std::to_string(r.m.cnot_depth) + "," + std::to_string(r.m.gates) + ",0");
        }
        sink.write("table_IV.csv", csv_with_manifest(man, rows, "variant,L,N,cnot_depth,gates,ancillas"));
    } else {
        if (inputs.empty()) bad_input("report --table fidelity needs --inputs");
        auto data = read_csvs(inputs);
        for (double p : p2qs) {
            if (!(p >= 0 && p < 1)) bad_input("report: p2q must lie in [0,1)");
            std::map<std::pair<std::string, int>, std::pair<double, int>> acc;
            for (const auto &r : data) {
                auto &a = acc[{r.method, r.L}];
                a.first += estimate_fidelity(r.m, p);
                a.second++;
            }
            std::vector<std::string> rp;
            for (const auto &[key, a] : acc) {
                rp.push_back(key.first + "," + std::to_string(key.second) + "," + std::to_string(key.second * key.second) +
                             "," + std::to_string(a.second) + "," + fmt(a.first / a.second));
            }
            json m2 = man;
            m2["parameters"]["p2q"] = p;
            sink.write("fidelity_" + p2q_tag(p) + ".csv", csv_with_manifest(m2, rp, "method,L,N,instances,mean_fidelity"));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"fermroute: fermionic permutation and workload circuits on 2D grids"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    uint64_t seed_default = 1;
    try {
        seed_default = default_seed();
    } catch (const Exit &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }

    FpermOpts fp;
    fp.seed = seed_default;
    auto *c_fperm = app.add_subcommand("fperm", "compile fermionic permutations and write metrics");
    c_fperm->add_option("--L", fp.L, "grid side")->required()->check(CLI::Range(2, 64));
    c_fperm->add_option("--perm", fp.perm, "permutation family")
        ->check(CLI::IsMember({"reversal", "transpose", "random", "all"}));
    c_fperm->add_option("--count", fp.count, "random instances")->check(CLI::Range(0, 100000));
    c_fperm->add_option("--method", fp.method)->check(CLI::IsMember({"ours", "oned_fswap", "both"}));
    c_fperm->add_option("--seed", fp.seed, "base seed (default $FERMROUTE_SEED or 1)");
    c_fperm->add_option("--out", fp.out, "output directory");
    c_fperm->add_flag("--verify", fp.verify, "oracle, Majorana and depth checks");
    c_fperm->add_flag("!--no-circuits", fp.circuits, "skip circuit JSON files");

    int g_min = 2, g_max = 32;
    std::string g_out;
    auto *c_gamma = app.add_subcommand("gamma-check", "symbolic parity-encoding check of Gamma");
    c_gamma->add_option("--L-min", g_min)->check(CLI::Range(2, 256));
    c_gamma->add_option("--L-max", g_max)->check(CLI::Range(2, 256));
    c_gamma->add_option("--out", g_out);

    std::string e_from = "bk", e_out;
    int e_k = 4;
    bool e_verify = false;
    auto *c_enc = app.add_subcommand("encode", "BK or Parity to JW conversion on the Hilbert layout");
    c_enc->add_option("--from", e_from)->check(CLI::IsMember({"jw", "bk", "parity"}));
    c_enc->add_option("--k", e_k, "N = 2^k - 1")->required()->check(CLI::Range(2, 24));
    c_enc->add_flag("--verify", e_verify);
    c_enc->add_option("--out", e_out);

    int f_L = 2;
    std::string f_variant = "gamma_sandwich", f_out;
    bool f_verify = false;
    auto *c_ffft = app.add_subcommand("ffft", "2D fermionic Fourier transform");
    c_ffft->add_option("--L", f_L)->required()->check(CLI::Range(1, 1 << 12));
    c_ffft->add_option("--variant", f_variant)
        ->check(CLI::IsMember({"gamma_sandwich", "fp_sandwich", "fswap_baseline", "all"}));
    c_ffft->add_flag("--verify", f_verify);
    c_ffft->add_option("--out", f_out);

    int s_N = 16;
    double s_k = 1.0, s_dt = 0.1;
    uint64_t s_seed = seed_default;
    bool s_verify = false;
    std::string s_out;
    auto *c_syk = app.add_subcommand("syk", "sparse SYK instance and one Trotter step");
    c_syk->add_option("--N", s_N, "fermionic modes")->required()->check(CLI::Range(2, 1 << 16));
    c_syk->add_option("--k", s_k, "sparsity")->check(CLI::NonNegativeNumber);
    c_syk->add_option("--seed", s_seed);
    c_syk->add_option("--dt", s_dt);
    c_syk->add_flag("--verify", s_verify);
    c_syk->add_option("--out", s_out);

    std::string r_table = "II", r_out;
    std::vector<std::string> r_inputs;
    std::vector<int> r_L;
    std::vector<double> r_p2q = {1e-3, 1e-4, 1e-5};
    uint64_t r_seed = seed_default;
    auto *c_rep = app.add_subcommand("report", "tables and fidelity curves as CSV");
    c_rep->add_option("--table", r_table)->check(CLI::IsMember({"I", "II", "III", "IV", "fidelity"}));
    c_rep->add_option("--inputs", r_inputs, "metrics CSV files");
    c_rep->add_option("--L", r_L, "grid sides for computed tables");
    c_rep->add_option("--p2q", r_p2q);
    c_rep->add_option("--seed", r_seed);
    c_rep->add_option("--out", r_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_fperm) return run_fperm(fp);
        if (*c_gamma) {
            if (g_min > g_max) bad_input("--L-min exceeds --L-max");
            return run_gamma_check(g_min, g_max, g_out);
        }
        if (*c_enc) return run_encode(e_from, e_k, e_verify, e_out);
        if (*c_ffft) return run_ffft(f_L, f_variant, f_verify, f_out);
        if (*c_syk) return run_syk(s_N, s_k, s_seed, s_dt, s_verify, s_out);
        if (*c_rep) return run_report(r_table, r_inputs, r_L, r_p2q, r_seed, r_out);
    } catch (const Exit &e) {
        std::cerr << (e.code == 3 ? "" : "error: ") << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error &e) {
        json d = {{"verify", "fail"}, {"invariant", "internal"}, {"detail", e.what()}};
        std::cerr << d.dump() << "\n";
        return 3;
    }
    return 0;
}
