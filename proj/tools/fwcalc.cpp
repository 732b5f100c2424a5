#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fw/checks.hpp"
#include "fw/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fw::System example(const std::string& name) {
    if (name == "key") return fw::key_example();
    if (name == "standard") return fw::standard_system(1);
    if (name == "padded") return fw::embed_in_eye(fw::key_example(), 2, 3);
    throw std::runtime_error("unknown example '" + name + "' (key, standard, padded)");
}

int cmd_classify(const std::string& file) {
    fw::System sys = fw::load_system(file);
    auto pos = fw::classify_position(sys);
    for (int e = 1; e <= sys.eye_count(); ++e) {
        auto dec = fw::cycle_decomposition(sys, e);
        const auto c = dec.cycles.size();
        std::cout << "eye " << e << " n " << sys.n(e) << " " << fw::to_string(pos[static_cast<std::size_t>(e - 1)])
                  << ", " << c << (c == 1 ? " cycle" : " cycles") << "\n";
    }
    return 0;
}

int cmd_invariant(const std::string& file, const std::string& ex, const std::vector<std::string>& order, bool emit) {
    fw::System sys = ex.empty() ? fw::load_system(file) : example(ex);
    fw::Orders orders;
    for (const auto& o : order) orders.push_back(fw::split_list(o));
    std::cout << fw::report(sys, fw::compute_I(sys, orders), emit);
    return 0;
}

int cmd_apply(const std::string& file, const std::string& script_file, const std::string& out, bool check) {
    fw::System sys = fw::load_system(file);
    fw::Script script = fw::parse_script(read_file(script_file));
    fw::System res = sys;
    for (std::size_t i = 0; i < script.size(); ++i) {
        try {
            res = fw::apply(res, script[i]);
        } catch (const std::exception& e) {
            throw std::runtime_error("script line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (out.empty())
        std::cout << fw::serialize(res);
    else
        fw::save_system(res, out);
    std::cerr << "applied " << script.size() << " moves; discs " << sys.size() << " -> " << res.size() << "\n";
    if (!check) return 0;
    auto a = fw::compute_I(sys), b = fw::compute_I(res);
    if (a.bits == b.bits) {
        std::cerr << "I preserved " << a.bits_string() << "\n";
        return 0;
    }
    std::cerr << "failure check=invariant before=" << a.bits_string() << " after=" << b.bits_string() << "\n";
    return 1;
}

int cmd_fuzz(const fw::oracle::FuzzParams& p) {
    auto sum = fw::oracle::fuzz(p);
    std::cout << "seed " << p.seed << "\n" << sum.text();
    return sum.violations == 0 ? 0 : 1;
}

int cmd_check(const std::string& lemma, const fw::check::CheckParams& p) {
    if (lemma == "all") {
        bool ok = true;
        for (const auto& name : fw::check::lemma_names()) {
            auto r = fw::check::run(name, p);
            std::cout << r.text();
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    }
    auto r = fw::check::run(lemma, p);
    std::cout << r.text();
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fwcalc: finger and Whitney systems, moves and the invariant I"};
    app.require_subcommand(1);

    std::string file, ex, script_file, out, lemma;
    std::vector<std::string> order;
    bool emit = false, check_inv = false;

    auto* classify = app.add_subcommand("classify", "Report the position and cycle structure of each eye");
    classify->add_option("file", file, "fwsys file")->required();

    auto* inv = app.add_subcommand("invariant", "Compute I");
    inv->add_option("file", file, "fwsys file");
    inv->add_option("--example", ex, "built-in system: key, standard, padded");
    inv->add_option("--order", order, "Whitney order for the next eye, comma separated");
    inv->add_flag("--emit-script", emit, "print the normalizing move script");

    auto* ap = app.add_subcommand("apply", "Apply a move script");
    ap->add_option("file", file, "fwsys file")->required();
    ap->add_option("script", script_file, "script file")->required();
    ap->add_option("--out", out, "write the result here instead of stdout");
    ap->add_flag("--check-invariant", check_inv, "recompute I before and after");

    fw::oracle::FuzzParams fp;
    auto* fz = app.add_subcommand("fuzz", "Random move sequences checked against I");
    fz->add_option("--seed", fp.seed);
    fz->add_option("--trials", fp.trials);
    fz->add_option("--max-eyes", fp.max_eyes);
    fz->add_option("--max-discs", fp.max_discs);
    fz->add_option("--moves-per-trial", fp.moves_per_trial);
    fz->add_option("--corpus-dir", fp.corpus_dir);
    fz->add_option("--threads", fp.threads);

    fw::check::CheckParams cp;
    auto* ck = app.add_subcommand("check", "Run a lemma suite");
    std::vector<std::string> names = fw::check::lemma_names();
    names.push_back("all");
    ck->add_option("lemma", lemma)->required()->check(CLI::IsMember(names));
    ck->add_option("--seed", cp.seed);
    ck->add_option("--trials", cp.trials);
    ck->add_option("--depth", cp.depth);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return cmd_classify(file);
        if (*inv) {
            if (file.empty() == ex.empty()) throw std::runtime_error("give a file or --example");
            return cmd_invariant(file, ex, order, emit);
        }
        if (*ap) return cmd_apply(file, script_file, out, check_inv);
        if (*fz) return cmd_fuzz(fp);
        if (*ck) return cmd_check(lemma, cp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
