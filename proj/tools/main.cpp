#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "twistseq/cli/commands.hpp"

using namespace twistseq::cli;

int main(int argc, char** argv) {
    CLI::App app{"Twisted bimodules over finite A-infinity categories"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string spheres, pair, at, format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("category", cfg.category_path, "category file")->required();
        sub->add_option("--max-order", cfg.max_order, "A-infinity relation order bound");
        sub->add_option("--out", cfg.out, "write the report to this file");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_twist = [&](CLI::App* sub) {
        sub->add_option("--spheres", spheres, "comma separated sphere objects")->required();
        sub->add_option("--bound", cfg.bound, "input length bound for relation checks");
    };

    auto* validate = app.add_subcommand("validate", "check the A-infinity relations");
    add_common(validate);
    auto* build = app.add_subcommand("build", "dimensions of the twisted bimodules");
    add_common(build);
    add_twist(build);
    build->add_option("--at", at, "object pair A,B");
    auto* check = app.add_subcommand("check", "closedness, cone and relation checks");
    add_common(check);
    add_twist(check);
    auto* les = app.add_subcommand("les", "long exact sequence at an object pair");
    add_common(les);
    add_twist(les);
    les->add_option("--pair", pair, "object pair N,N'")->required();
    auto* hh = app.add_subcommand("hochschild", "capped self-hom complexes of the diagonal and of E");
    add_common(hh);
    add_twist(hh);
    hh->add_option("--cap", cfg.cap, "bound on r + s");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : input_error;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::json : Format::text;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= s.size()) {
            const auto comma = s.find(',', start);
            out.push_back(s.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return out;
    };
    if (!spheres.empty()) cfg.spheres = split(spheres);
    auto to_pair = [&](const std::string& s) -> std::optional<std::pair<std::string, std::string>> {
        const auto parts = split(s);
        if (parts.size() != 2) return std::nullopt;
        return std::make_pair(parts[0], parts[1]);
    };
    for (auto [flag, text, target] : {std::tuple{"--pair", &pair, &cfg.pair}, std::tuple{"--at", &at, &cfg.at}}) {
        if (text->empty()) continue;
        *target = to_pair(*text);
        if (!*target) {
            std::cerr << flag << ": expected A,B\n";
            return input_error;
        }
    }

    const RunResult result = run(cfg);
    const std::string text = render(result, cfg.format);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write '" << cfg.out << "'\n";
            return input_error;
        }
        f << text;
    }
    if (result.status == input_error) std::cerr << result.report.value("error", "input error") << "\n";
    return result.status;
}
