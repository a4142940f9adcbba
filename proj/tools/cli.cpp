/*
   Copyright 2026 The camols Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "camols/designs.hpp"
#include "camols/io.hpp"
#include "camols/sss.hpp"

namespace camols::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot write '" + path + "'");
    f << text;
}

std::vector<std::uint32_t> parse_symbols(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            throw Error(Errc::Parse, "bad symbol '" + item + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw Error(Errc::Parse, "empty symbol list");
    return out;
}

std::string join(std::span<const Element> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i].index());
    return s;
}

std::vector<LatinSquare> read_squares(const std::vector<std::string>& paths) {
    std::vector<LatinSquare> squares;
    for (const auto& p : paths) squares.push_back(io::read_square(read_file(p)));
    return squares;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::Singular:
        case Errc::SamePlayer:
        case Errc::NotMols:
            return kNegative;
        default:
            return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Latin squares, orthogonal arrays and threshold secret sharing from cellular automata", "camols"};
    app.require_subcommand(1);

    // square
    std::string rule_text, out_path, format = "json";
    std::size_t m = 0;
    auto* square_cmd = app.add_subcommand("square", "Latin square of a bipermutive CA");
    square_cmd->add_option("--rule", rule_text, "wolfram:<n>:r<radius> or linear:<q>:<c0,c1,...>")->required();
    square_cmd->add_option("--m", m, "block length, a multiple of 2r")->required();
    square_cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    square_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // check
    std::vector<std::string> square_paths;
    auto* check_cmd = app.add_subcommand("check", "pairwise orthogonality of Latin squares");
    check_cmd->add_option("--squares", square_paths, "square files (JSON or text grid)")->required();

    // oa
    auto* oa_cmd = app.add_subcommand("oa", "orthogonal array from mutually orthogonal Latin squares");
    oa_cmd->add_option("--squares", square_paths, "square files")->required();
    oa_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    // setup
    std::uint32_t q = 2;
    std::size_t r = 1, t = 1, players = 2;
    std::string source = "coprime-set";
    std::uint64_t seed = 0;
    auto* setup_cmd = app.add_subcommand("setup", "draw a scheme descriptor");
    setup_cmd->add_option("--q", q, "field order")->required();
    setup_cmd->add_option("--r", r, "radius")->required();
    setup_cmd->add_option("--t", t, "steps; secrets have length 2rt")->required();
    setup_cmd->add_option("--n", players, "number of players")->required();
    setup_cmd->add_option("--source", source, "irreducible or coprime-set")
        ->check(CLI::IsMember({"irreducible", "coprime-set"}));
    setup_cmd->add_option("--seed", seed, "generator seed");
    setup_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    // share
    std::string descriptor_path, secret_text, outdir;
    auto* share_cmd = app.add_subcommand("share", "split a secret into one share per player");
    share_cmd->add_option("--descriptor", descriptor_path, "scheme descriptor file")->required();
    share_cmd->add_option("--secret", secret_text, "comma-separated symbols, m of them")->required();
    share_cmd->add_option("--seed", seed, "seed for the random half of the configuration");
    share_cmd->add_option("--outdir", outdir, "directory for share_<i>.json")->required();

    // recover
    std::vector<std::string> share_paths;
    auto* recover_cmd = app.add_subcommand("recover", "recover the secret from two shares");
    recover_cmd->add_option("--descriptor", descriptor_path, "scheme descriptor file")->required();
    recover_cmd->add_option("--share", share_paths, "share file (give exactly two)")->required();

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "exhaustive single-share uniformity check");
    audit_cmd->add_option("--descriptor", descriptor_path, "scheme descriptor file")->required();

    // search
    std::string cls = "bipermutive-linear";
    auto* search_cmd = app.add_subcommand("search", "census of rule pairs inducing orthogonal squares");
    search_cmd->add_option("--q", q, "field order")->required();
    search_cmd->add_option("--r", r, "radius")->required();
    search_cmd->add_option("--m", m, "block length")->required();
    search_cmd->add_option("--class", cls, "bipermutive-all or bipermutive-linear")
        ->check(CLI::IsMember({"bipermutive-all", "bipermutive-linear"}));
    search_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

    // count
    std::size_t degree = 1;
    std::uint32_t a = 1, b = 1;
    auto* count_cmd = app.add_subcommand("count", "coprime pairs of monic polynomials with fixed constant terms");
    count_cmd->add_option("--q", q, "field order")->required();
    count_cmd->add_option("--n", degree, "degree")->required();
    count_cmd->add_option("--a", a, "constant term of f")->required();
    count_cmd->add_option("--b", b, "constant term of g")->required();

    std::vector<std::string> argv_storage{"camols"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (square_cmd->parsed()) {
            const LocalRule rule = io::parse_rule(rule_text);
            if (!is_bipermutive(rule).bipermutive()) {
                err << "error: rule " << rule_text << " is not bipermutive\n";
                return kUsage;
            }
            const LatinSquare square = square_from_ca(rule, m);
            write_output(out_path, format == "text" ? io::square_to_text(square) : io::square_to_json(square).dump() + "\n",
                         out);
            return kOk;
        }

        if (check_cmd->parsed()) {
            if (square_paths.size() < 2) {
                err << "error: check needs at least two squares\n";
                return kUsage;
            }
            const auto squares = read_squares(square_paths);
            for (const auto& s : squares) {
                if (s.order() != squares.front().order()) {
                    err << "error: squares have different orders\n";
                    return kUsage;
                }
            }
            bool all = true;
            for (std::size_t i = 0; i < squares.size(); ++i) {
                for (std::size_t j = i + 1; j < squares.size(); ++j) {
                    const bool ok = are_orthogonal(squares[i], squares[j]);
                    all = all && ok;
                    out << "squares " << i + 1 << " and " << j + 1 << ": " << (ok ? "orthogonal" : "not orthogonal")
                        << '\n';
                }
            }
            out << "MOLS: " << (all ? "yes" : "no") << '\n';
            return all ? kOk : kNegative;
        }

        if (oa_cmd->parsed()) {
            const auto squares = read_squares(square_paths);
            const auto oa = oa_from_mols(squares);
            if (!oa_validate(oa)) throw Error(Errc::NotMols, "constructed array failed validation");
            write_output(out_path, io::oa_to_json(oa).dump() + "\n", out);
            return kOk;
        }

        if (setup_cmd->parsed()) {
            const auto d = setup(FieldSpec::of_order(q), r, t, players, parse_poly_source(source), seed);
            write_output(out_path, io::descriptor_to_json(d).dump() + "\n", out);
            return kOk;
        }

        if (share_cmd->parsed()) {
            const auto d = io::descriptor_from_json(io::parse(read_file(descriptor_path)));
            const auto input = make_input(d, d.field().elements(parse_symbols(secret_text)), seed);
            const auto shares = share(d, input);
            fs::create_directories(outdir);
            for (const auto& s : shares) {
                const auto path = (fs::path(outdir) / ("share_" + std::to_string(s.player) + ".json")).string();
                write_output(path, io::share_to_json(s, d).dump() + "\n", out);
                out << path << '\n';
            }
            return kOk;
        }

        if (recover_cmd->parsed()) {
            if (share_paths.size() != 2) {
                err << "error: recover needs exactly two --share files\n";
                return kUsage;
            }
            const auto d = io::descriptor_from_json(io::parse(read_file(descriptor_path)));
            const auto s1 = io::share_from_json(io::parse(read_file(share_paths[0])), d);
            const auto s2 = io::share_from_json(io::parse(read_file(share_paths[1])), d);
            out << join(recover(d, s1, s2)) << '\n';
            return kOk;
        }

        if (audit_cmd->parsed()) {
            const auto d = io::descriptor_from_json(io::parse(read_file(descriptor_path)));
            const auto report = security_audit(d);
            out << "configurations: " << report.configurations << '\n'
                << "violations: " << report.violations.size() << '\n'
                << "uniform: " << (report.uniform ? "yes" : "no") << '\n';
            return report.uniform ? kOk : kNegative;
        }

        if (search_cmd->parsed()) {
            const auto census = search_orthogonal_pairs(FieldSpec::of_order(q), r, m, parse_rule_class(cls));
            write_output(out_path, io::census_to_json(census).dump() + "\n", out);
            if (!out_path.empty()) {
                out << "rules: " << census.rules.size() << ", orthogonal pairs: " << census.pair_count() << '\n';
            }
            return kOk;
        }

        if (count_cmd->parsed()) {
            const FieldSpec field = FieldSpec::of_order(q);
            out << count_coprime_pairs(field, degree, field.element(a), field.element(b)) << '\n';
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace camols::cli
