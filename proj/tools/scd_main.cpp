#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "scd/engine.hpp"
#include "scd/eval.hpp"
#include "scd/trace_gen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct ReplayArgs {
    scd::EngineConfig cfg;
    std::string mode = "scp";
    std::string input = "-";
    std::string output = "-";
    std::string stopwords_path;
    std::string config_path;
    bool parallel_ec = false;
};

// Config file mirrors the flags; explicitly passed flags win.
bool load_config_file(const std::string& path, scd::EngineConfig& cfg, std::string& mode,
                      std::string& stopwords) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return false;
    cfg.quantum_size = j.value("quantum", cfg.quantum_size);
    cfg.window_quanta = j.value("window", cfg.window_quanta);
    cfg.gamma = j.value("gamma", cfg.gamma);
    cfg.lambda = j.value("lambda", cfg.lambda);
    cfg.sketch_size = j.value("minhash-p", cfg.sketch_size);
    cfg.tau = j.value("tau", cfg.tau);
    cfg.hash_seed = j.value("seed", cfg.hash_seed);
    mode = j.value("mode", mode);
    stopwords = j.value("stopwords", stopwords);
    return true;
}

int run_replay_cmd(const ReplayArgs& args) {
    if (auto err = args.cfg.validate()) {
        std::cerr << "config error: " << *err << "\n";
        return kExitConfig;
    }
    if (args.mode != "scp" && args.mode != "bc") {
        std::cerr << "config error: mode must be scp or bc\n";
        return kExitConfig;
    }

    scd::Stopwords stop;
    if (!args.stopwords_path.empty()) {
        auto loaded = scd::Stopwords::load(args.stopwords_path);
        if (!loaded) {
            std::cerr << "cannot read stopwords file: " << args.stopwords_path << "\n";
            return kExitIo;
        }
        stop = std::move(*loaded);
    }

    std::ifstream fin;
    std::istream* in = &std::cin;
    if (args.input != "-") {
        fin.open(args.input);
        if (!fin) {
            std::cerr << "cannot open input: " << args.input << "\n";
            return kExitIo;
        }
        in = &fin;
    }
    std::ofstream fout;
    std::ostream* out = &std::cout;
    if (args.output != "-") {
        fout.open(args.output);
        if (!fout) {
            std::cerr << "cannot open output: " << args.output << "\n";
            return kExitIo;
        }
        out = &fout;
    }

    const auto mode = args.mode == "bc" ? scd::DetectorMode::Bc : scd::DetectorMode::Scp;
    scd::RunMetrics m = scd::run_replay(args.cfg, mode, stop, *in, *out, args.parallel_ec);
    m.write_json(std::cerr);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming keyword-event detection via short-cycle clusters"};
    app.require_subcommand(1);

    // replay
    ReplayArgs ra;
    auto* replay = app.add_subcommand("replay", "Replay a JSON-lines message trace");
    replay->add_option("--config", ra.config_path, "JSON config file (flags win)");
    auto* oq = replay->add_option("--quantum", ra.cfg.quantum_size, "messages per quantum");
    auto* ow = replay->add_option("--window", ra.cfg.window_quanta, "window length in quanta");
    auto* og = replay->add_option("--gamma", ra.cfg.gamma, "high-state threshold");
    auto* ol = replay->add_option("--lambda", ra.cfg.lambda, "edge-correlation threshold");
    auto* op = replay->add_option("--minhash-p", ra.cfg.sketch_size, "sketch size (0 = auto)");
    auto* ot = replay->add_option("--tau", ra.cfg.tau, "rank-threshold multiplier");
    auto* os_ = replay->add_option("--seed", ra.cfg.hash_seed, "hash seed");
    auto* osw = replay->add_option("--stopwords", ra.stopwords_path, "stop-word file");
    auto* om = replay->add_option("--mode", ra.mode, "detector: scp or bc");
    replay->add_option("--input", ra.input, "input trace ('-' = stdin)");
    replay->add_option("--output", ra.output, "event stream ('-' = stdout)");
    replay->add_flag("--parallel-ec", ra.parallel_ec, "OpenMP edge-correlation kernel");

    // gen
    std::string gen_spec_path, gen_output = "-";
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic trace");
    gen->add_option("--spec", gen_spec_path, "trace spec JSON")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--output", gen_output, "output trace ('-' = stdout)");

    // eval
    std::string eval_events, eval_labels;
    auto* ev = app.add_subcommand("eval", "Precision/recall against labels");
    ev->add_option("--events", eval_events, "emitted event stream")->required();
    ev->add_option("--labels", eval_labels, "ground-truth labels")->required();

    CLI11_PARSE(app, argc, argv);

    if (replay->parsed()) {
        if (!ra.config_path.empty()) {
            scd::EngineConfig file_cfg = ra.cfg;
            std::string file_mode = ra.mode, file_stop = ra.stopwords_path;
            if (!load_config_file(ra.config_path, file_cfg, file_mode, file_stop)) {
                std::cerr << "cannot read config file: " << ra.config_path << "\n";
                return kExitConfig;
            }
            // File values apply only where the flag was not given.
            if (oq->count() == 0) ra.cfg.quantum_size = file_cfg.quantum_size;
            if (ow->count() == 0) ra.cfg.window_quanta = file_cfg.window_quanta;
            if (og->count() == 0) ra.cfg.gamma = file_cfg.gamma;
            if (ol->count() == 0) ra.cfg.lambda = file_cfg.lambda;
            if (op->count() == 0) ra.cfg.sketch_size = file_cfg.sketch_size;
            if (ot->count() == 0) ra.cfg.tau = file_cfg.tau;
            if (os_->count() == 0) ra.cfg.hash_seed = file_cfg.hash_seed;
            if (om->count() == 0) ra.mode = file_mode;
            if (osw->count() == 0) ra.stopwords_path = file_stop;
        }
        return run_replay_cmd(ra);
    }

    if (gen->parsed()) {
        std::ifstream sin(gen_spec_path);
        if (!sin) {
            std::cerr << "cannot open spec: " << gen_spec_path << "\n";
            return kExitIo;
        }
        std::string err;
        auto spec = scd::TraceSpec::parse(sin, &err);
        if (!spec) {
            std::cerr << "invalid trace spec: " << err << "\n";
            return kExitConfig;
        }
        std::ofstream fout;
        std::ostream* out = &std::cout;
        if (gen_output != "-") {
            fout.open(gen_output);
            if (!fout) {
                std::cerr << "cannot open output: " << gen_output << "\n";
                return kExitIo;
            }
            out = &fout;
        }
        scd::gen_trace(*spec, gen_seed, *out);
        return kExitOk;
    }

    if (ev->parsed()) {
        std::ifstream fe(eval_events), fl(eval_labels);
        if (!fe || !fl) {
            std::cerr << "cannot open events or labels file\n";
            return kExitIo;
        }
        std::string err;
        auto r = scd::eval_pr(fe, fl, &err);
        if (!r) {
            std::cerr << "eval error: " << err << "\n";
            return kExitIo;
        }
        r->write_json(std::cout);
        return kExitOk;
    }

    return kExitConfig;
}
