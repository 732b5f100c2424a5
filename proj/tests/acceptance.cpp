// One line per acceptance criterion: PASS|FAIL <name> <seconds>s <detail>.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fw/checks.hpp"
#include "fw/oracle.hpp"

#ifndef FWCALC_PATH
#define FWCALC_PATH "fwcalc"
#endif

using namespace fw;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        o.pass = false;
        o.detail += " over time limit " + std::to_string(static_cast<int>(limit_s)) + "s";
    }
    if (!o.pass) ++failures;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (o.pass ? "PASS " : "FAIL ") << name << " " << secs << "s " << o.detail;
    std::cout << os.str() << std::endl;
}

std::string run_cli(const std::string& args, int* status = nullptr) {
    const std::string cmd = std::string(FWCALC_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int rc = pclose(pipe);
    if (status) *status = rc;
    return out;
}

Outcome from_check(const std::string& lemma, const check::CheckParams& p = {}) {
    auto r = check::run(lemma, p);
    std::string text = r.text();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    const auto cut = text.find('\n');
    std::string head = text.substr(0, cut);
    std::string rest = cut == std::string::npos ? "" : text.substr(cut + 1);
    if (rest.size() > 600) rest = rest.substr(0, 600) + "...";
    return {r.pass, head + (rest.empty() ? "" : "\n" + rest)};
}

std::string bits(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

int main() {
    criterion("key-example", 1.0, [] {
        const std::string key = run_cli("invariant --example key");
        const std::string std1 = run_cli("invariant --example standard");
        const bool ok = key.find("I = (1)") != std::string::npos && std1.find("I = (0)") != std::string::npos;
        return Outcome{ok, "key -> (1), standard -> (0)"};
    });

    criterion("surjectivity-padding", 1.0, [] {
        int cases = 0, bad = 0;
        std::string last;
        for (int k = 1; k <= 3; ++k)
            for (int j = 1; j <= k; ++j) {
                std::vector<int> want(static_cast<std::size_t>(k), 0);
                want[static_cast<std::size_t>(j - 1)] = 1;
                System s = embed_in_eye(key_example(), j, k);
                for (int extra = 0; extra <= 2; ++extra) {
                    auto w = want;
                    w.resize(w.size() + static_cast<std::size_t>(extra), 0);
                    auto got = compute_I(pad_with_trivial_eyes(s, 0, extra)).bits;
                    ++cases;
                    if (got != w) {
                        ++bad;
                        last = "k=" + std::to_string(k) + " j=" + std::to_string(j) + " got " + bits(got);
                    }
                }
            }
        return Outcome{bad == 0, "cases=" + std::to_string(cases) + " failures=" + std::to_string(bad) + " " + last};
    });

    criterion("homomorphism", 60.0, [] { return from_check("homomorphism"); });

    criterion("move-invariance-fuzz", 600.0, [] {
        oracle::FuzzParams p;
        p.trials = 10000;
        p.max_eyes = 2;
        p.max_discs = 4;
        p.moves_per_trial = 5;
        auto s = oracle::fuzz(p);
        std::ostringstream os;
        os << "trials=" << s.trials << " moves=" << s.moves << " violations=" << s.violations;
        for (std::size_t i = 0; i < s.failures.size() && i < 3; ++i)
            os << "\n  " << s.failures[i].category << " " << s.failures[i].note;
        return Outcome{s.violations == 0 && s.trials == 10000, os.str()};
    });

    criterion("slide-sequence-independence", 300.0, [] { return from_check("slide-scripts"); });
    criterion("ordering-independence", 300.0, [] { return from_check("orderings"); });
    criterion("symmetry", 0, [] { return from_check("symmetry"); });

    criterion("clifford", 0, [] {
        auto a = from_check("clifford-commutation");
        auto b = from_check("clifford-trace-flip");
        return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
    });

    criterion("tables-n5", 0, [] { return from_check("tables-n5"); });
    criterion("cross-layer", 300.0, [] { return from_check("cross-layer"); });

    criterion("determinism", 0, [] {
        std::vector<std::string> cmds{"invariant --example key --emit-script", "invariant --example padded",
                                      "fuzz --seed 5 --trials 300", "fuzz --seed 5 --trials 300 --threads 1",
                                      "check all --seed 3 --trials 10 --depth 3"};
        std::string bad;
        for (const auto& c : cmds)
            if (run_cli(c) != run_cli(c)) bad += " [" + c + "]";
        if (run_cli(cmds[2]) != run_cli(cmds[3])) bad += " [thread count changes fuzz output]";
        int trips = 0;
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            System s = gen::random_system(seed);
            const std::string text = serialize(s);
            System back = parse_system(text);
            if (!(back == s) || serialize(back) != text) bad += " [roundtrip seed " + std::to_string(seed) + "]";
            ++trips;
        }
        return Outcome{bad.empty(), "commands=" + std::to_string(cmds.size()) + " roundtrips=" + std::to_string(trips) +
                                        (bad.empty() ? "" : " differing:" + bad)};
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
