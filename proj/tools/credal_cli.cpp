#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <tuple>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credal/conditioning.hpp"
#include "credal/core.hpp"
#include "credal/integrals.hpp"
#include "credal/model_io.hpp"
#include "credal/oracle.hpp"

namespace {

using namespace credal;

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw malformed_document("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<std::string> kMethods = {"dempster",       "robust",
                                           "choquet-extreme", "choquet-full",
                                           "sugeno-extreme",  "sugeno-full"};

UncertaintyInterval run_method(const CredalSet& credal, const Event& a,
                               const Event& b, const std::string& method) {
    if (method == "dempster") {
        CredalSet cond = dempster_condition(credal, b);
        return make_interval(lower_probability(cond, a), upper_probability(cond, a));
    }
    if (method == "robust")
        return robust_interval(credal, a, b);
    WeightedConditionalSet w = possibility_condition(credal, b);
    if (method == "choquet-extreme")
        return choquet_extreme_interval(w, a);
    if (method == "choquet-full")
        return choquet_full_interval(w, a);
    if (method == "sugeno-extreme")
        return sugeno_extreme_interval(w, a);
    if (method == "sugeno-full")
        return sugeno_full_interval(w, a);
    throw malformed_document("unknown method: " + method);
}

void print_interval(const UncertaintyInterval& iv, const std::string& method,
                    const std::string& output) {
    if (output == "json") {
        std::cout << "{\"lower\": " << fmt10(iv.lower) << ", \"upper\": "
                  << fmt10(iv.upper) << ", \"method\": \"" << method << "\"}\n";
    } else if (output == "csv") {
        std::cout << "method,lower,upper\n"
                  << method << ',' << fmt10(iv.lower) << ',' << fmt10(iv.upper) << '\n';
    } else {
        std::printf("%-18s %14s %14s\n", "method", "lower", "upper");
        std::printf("%-18s %14s %14s\n", method.c_str(), fmt10(iv.lower).c_str(),
                    fmt10(iv.upper).c_str());
    }
}

int cmd_intervals(const std::string& model_path, const std::string& event_csv,
                  const std::string& given_csv, const std::string& method,
                  const std::string& output) {
    ModelDocument doc = parse_model(read_file(model_path));
    CredalSet credal = model_credal(doc);
    Event a = parse_event(doc.frame, event_csv);
    Event b = parse_event(doc.frame, given_csv);
    print_interval(run_method(credal, a, b, method), method, output);
    return 0;
}

int cmd_condition(const std::string& model_path, const std::string& given_csv,
                  const std::string& method) {
    ModelDocument doc = parse_model(read_file(model_path));
    CredalSet credal = model_credal(doc);
    Event b = parse_event(doc.frame, given_csv);

    auto vec_json = [](const std::vector<double>& w) {
        std::string s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                s += ", ";
            s += fmt10(w[i]);
        }
        return s + "]";
    };

    if (method == "possibility") {
        WeightedConditionalSet w = possibility_condition(credal, b);
        std::cout << "{\"method\": \"possibility\", \"generators\": [";
        for (std::size_t i = 0; i < w.generators().size(); ++i)
            std::cout << (i ? ", " : "") << vec_json(w.generators()[i].weights());
        std::cout << "], \"totals\": [";
        for (std::size_t i = 0; i < w.generators().size(); ++i)
            std::cout << (i ? ", " : "") << fmt10(w.generators()[i].total());
        std::cout << "], \"possibilities\": [";
        auto pis = w.possibilities();
        for (std::size_t i = 0; i < pis.size(); ++i)
            std::cout << (i ? ", " : "") << fmt10(pis[i]);
        std::cout << "]}\n";
        return 0;
    }
    CredalSet cond = method == "dempster" ? dempster_condition(credal, b)
                     : method == "robust"
                         ? robust_condition(credal, b)
                         : throw malformed_document("unknown method: " + method);
    std::cout << "{\"method\": \"" << method << "\", \"generators\": [";
    for (std::size_t i = 0; i < cond.generators().size(); ++i)
        std::cout << (i ? ", " : "") << vec_json(cond.generators()[i].weights());
    std::cout << "]}\n";
    return 0;
}

int cmd_profile(const std::string& model_path, const std::string& event_csv,
                const std::string& given_csv, std::size_t resolution,
                const std::string& output) {
    ModelDocument doc = parse_model(read_file(model_path));
    CredalSet credal = model_credal(doc);
    Event a = parse_event(doc.frame, event_csv);
    Event b = parse_event(doc.frame, given_csv);
    WeightedConditionalSet w = possibility_condition(credal, b);
    PossibilityProfile profile = event_profile(w, a, resolution);

    // Merge samples and anchors, ascending in x, anchors after samples at ties.
    std::vector<std::tuple<double, int, double>> rows; // (x, anchor flag, pi)
    for (const auto& [x, pi] : profile.samples)
        rows.emplace_back(x, 0, pi);
    for (const auto& [x, pi] : profile.anchors)
        rows.emplace_back(x, 1, pi);
    std::sort(rows.begin(), rows.end());

    if (output == "json") {
        std::cout << "{\"rows\": [";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [x, anchor, pi] = rows[i];
            std::cout << (i ? ", " : "") << "[" << fmt10(x) << ", " << fmt10(pi)
                      << ", " << anchor << "]";
        }
        std::cout << "]}\n";
    } else {
        std::cout << "x,pi,anchor\n";
        for (const auto& [x, anchor, pi] : rows)
            std::cout << fmt10(x) << ',' << fmt10(pi) << ',' << anchor << '\n';
    }
    return 0;
}

int cmd_compare(const std::string& model_path, const std::string& event_csv,
                const std::string& given_csv, const std::string& output) {
    ModelDocument doc = parse_model(read_file(model_path));
    CredalSet credal = model_credal(doc);
    Event a = parse_event(doc.frame, event_csv);
    Event b = parse_event(doc.frame, given_csv);

    std::vector<std::pair<std::string, UncertaintyInterval>> rows;
    for (const auto& method : kMethods) {
        rows.push_back({method, run_method(credal, a, b, method)});
        if (method == "dempster" && doc.kind == ModelDocument::Kind::mass)
            rows.push_back(
                {"dempster-closed-form", dempster_interval(model_mass(doc), a, b)});
    }

    if (output == "json") {
        std::cout << "{\"rows\": [";
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << (i ? ", " : "") << "{\"method\": \"" << rows[i].first
                      << "\", \"lower\": " << fmt10(rows[i].second.lower)
                      << ", \"upper\": " << fmt10(rows[i].second.upper) << "}";
        std::cout << "]}\n";
    } else if (output == "csv") {
        std::cout << "method,lower,upper\n";
        for (const auto& [m, iv] : rows)
            std::cout << m << ',' << fmt10(iv.lower) << ',' << fmt10(iv.upper) << '\n';
    } else {
        std::printf("%-22s %14s %14s\n", "method", "lower", "upper");
        for (const auto& [m, iv] : rows)
            std::printf("%-22s %14s %14s\n", m.c_str(), fmt10(iv.lower).c_str(),
                        fmt10(iv.upper).c_str());
    }
    return 0;
}

int cmd_check(const std::string& model_path, const std::string& event_csv,
              const std::string& given_csv, std::size_t resolution) {
    ModelDocument doc = parse_model(read_file(model_path));
    CredalSet credal = model_credal(doc);
    Event a = parse_event(doc.frame, event_csv);
    Event b = parse_event(doc.frame, given_csv);
    WeightedConditionalSet w = possibility_condition(credal, b);

    const double bound = 2.0 / static_cast<double>(resolution) + 1e-9;
    bool ok = true;
    auto report = [&](const std::string& name, double closed, double sampled) {
        double diff = std::abs(closed - sampled);
        ok = ok && diff < bound;
        std::printf("%-20s closed=%-16s oracle=%-16s diff=%s\n", name.c_str(),
                    fmt10(closed).c_str(), fmt10(sampled).c_str(),
                    fmt10(diff).c_str());
    };

    UncertaintyInterval cf = choquet_full_interval(w, a);
    report("choquet-full upper", cf.upper, oracle_upper_choquet(w, a, resolution));
    report("choquet-full lower", cf.lower,
           1.0 - oracle_upper_choquet(w, a.complement(), resolution));
    UncertaintyInterval sf = sugeno_full_interval(w, a);
    report("sugeno-full upper", sf.upper, oracle_upper_sugeno(w, a, resolution));
    report("sugeno-full lower", sf.lower,
           1.0 - oracle_upper_sugeno(w, a.complement(), resolution));

    double worst = 0.0;
    for (const auto& [x, pi] : oracle_profile(w, a, resolution).samples)
        worst = std::max(worst, std::abs(profile_possibility(w, a, x) - pi));
    report("profile", worst, 0.0);

    std::printf("%s (tolerance %s)\n", ok ? "PASS" : "FAIL", fmt10(bound).c_str());
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Credal-set conditioning and uncertainty intervals"};
    app.require_subcommand(1);

    std::string model, event_csv, given_csv;
    std::string method = "robust";
    std::string intervals_output = "json";
    std::string profile_output = "csv";
    std::string compare_output = "table";
    std::size_t profile_resolution = 1000;
    std::size_t check_resolution = 10000;

    auto add_common = [&](CLI::App* sub, bool with_event) {
        sub->add_option("model", model, "model JSON file")->required();
        if (with_event)
            sub->add_option("--event", event_csv, "target event labels")->required();
        sub->add_option("--given", given_csv, "conditioning event labels")->required();
    };

    CLI::App* intervals = app.add_subcommand("intervals", "uncertainty interval");
    add_common(intervals, true);
    intervals->add_option("--method", method)->required()->check(CLI::IsMember(kMethods));
    intervals->add_option("--output", intervals_output)
        ->check(CLI::IsMember({"json", "table", "csv"}));

    CLI::App* condition = app.add_subcommand("condition", "conditioned generators");
    add_common(condition, false);
    condition->add_option("--method", method)->required()
        ->check(CLI::IsMember({"dempster", "robust", "possibility"}));

    CLI::App* profile = app.add_subcommand("profile", "possibility profile");
    add_common(profile, true);
    profile->add_option("--resolution", profile_resolution);
    profile->add_option("--output", profile_output)
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* compare = app.add_subcommand("compare", "all methods side by side");
    add_common(compare, true);
    compare->add_option("--output", compare_output)
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI::App* check = app.add_subcommand("check", "closed forms vs sampling oracle");
    add_common(check, true);
    check->add_option("--resolution", check_resolution);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(intervals))
            return cmd_intervals(model, event_csv, given_csv, method, intervals_output);
        if (app.got_subcommand(condition))
            return cmd_condition(model, given_csv, method);
        if (app.got_subcommand(profile))
            return cmd_profile(model, event_csv, given_csv, profile_resolution,
                               profile_output);
        if (app.got_subcommand(compare))
            return cmd_compare(model, event_csv, given_csv, compare_output);
        if (app.got_subcommand(check))
            return cmd_check(model, event_csv, given_csv, check_resolution);
    } catch (const credal::conditioning_impossible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const credal::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
