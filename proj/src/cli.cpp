/**
 * @file cli.cpp
 */

#include "nilwave/cli.hpp"

#include <CLI11.hpp>

#include "nilwave/error.hpp"
#include "nilwave/io.hpp"

namespace nilwave::cli {

namespace {

enum class Format { Json, Markdown };

struct Options {
    std::string format = "json";
    bool pretty = false;
    std::string family;
    std::string kind;
    std::string partition;
    std::string twist = "all";
    int n = 0;
    int n_max = 0;
    int a = 0;
    int b = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GroupFamily family_arg(const std::string& text) {
    auto f = parse_family(text);
    if (!f) throw UsageError("unknown family '" + text + "'");
    return *f;
}

ClassicalKind kind_arg(const std::string& text) {
    auto k = parse_kind(text);
    if (!k) throw UsageError("unknown kind '" + text + "'");
    return *k;
}

// "all" yields the empty list, which means every twist.
std::vector<InnerTwist> twists_arg(const std::string& text) {
    std::vector<InnerTwist> out;
    if (text == "all") return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto w = parse_twist(token);
        if (!w) throw UsageError("unknown twist '" + token + "'");
        out.push_back(*w);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

InnerTwist single_twist_arg(const std::string& text) {
    auto list = twists_arg(text);
    if (list.size() != 1) throw UsageError("exactly one twist expected, got '" + text + "'");
    return list.front();
}

class Printer {
public:
    Printer(std::ostream& out, Format format, bool pretty)
        : out_(out), format_(format), pretty_(pretty) {}

    Format format() const { return format_; }

    void json(const Json& j) { out_ << (pretty_ ? j.dump(2) : j.dump()) << '\n'; }
    std::ostream& stream() { return out_; }

private:
    std::ostream& out_;
    Format format_;
    bool pretty_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nilpotent-orbit duality and wavefront-set verification for unipotent supercuspidals",
                 "nilwave"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    app.add_flag("--pretty", opt.pretty, "indent JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "list cuspidal supports of a classical group");
    enumerate->add_option("--family", opt.family, "pgl, so-odd, psp, pso")->required();
    enumerate->add_option("--n", opt.n, "rank parameter")->required();
    enumerate->add_option("--twist", opt.twist, "inner twist or 'all'");

    auto* dual = app.add_subcommand("dual", "Barbasch-Vogan dual of a classical orbit");
    dual->add_option("--kind", opt.kind, "A, B, C or D")->required();
    dual->add_option("--n", opt.n, "rank")->required();
    dual->add_option("--partition", opt.partition, "comma-separated parts")->required();

    auto* collapse_cmd = app.add_subcommand("collapse", "B/C/D collapse of a partition");
    collapse_cmd->add_option("--kind", opt.kind, "A, B, C or D")->required();
    collapse_cmd->add_option("--partition", opt.partition, "comma-separated parts")->required();

    auto* transpose_cmd = app.add_subcommand("transpose", "transpose of a partition");
    transpose_cmd->add_option("--partition", opt.partition, "comma-separated parts")->required();

    auto* lift_cmd = app.add_subcommand("lift", "lift of the wavefront set of one support");
    lift_cmd->add_option("--family", opt.family, "pgl, so-odd, psp, pso")->required();
    lift_cmd->add_option("--n", opt.n, "rank parameter")->required();
    lift_cmd->add_option("--twist", opt.twist, "inner twist")->required();
    lift_cmd->add_option("--a", opt.a, "parameter a");
    lift_cmd->add_option("--b", opt.b, "parameter b");

    auto* verify = app.add_subcommand("verify", "verify all supports up to a rank bound");
    verify->add_option("--family", opt.family, "all, pgl, so-odd, psp, pso")->required();
    verify->add_option("--n-max", opt.n_max, "largest rank")->required()->check(CLI::PositiveNumber);
    verify->add_option("--twist", opt.twist, "comma-separated twists or 'all'");

    auto* verify_exc = app.add_subcommand("verify-exceptional", "verify the exceptional groups");
    auto* export_tables = app.add_subcommand("export-tables", "dump the exceptional dataset");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Printer print(out, opt.format == "markdown" ? Format::Markdown : Format::Json, opt.pretty);
    try {
        if (enumerate->parsed()) {
            const GroupFamily family = family_arg(opt.family);
            auto twists = twists_arg(opt.twist);
            if (twists.empty()) twists = twists_of(family, opt.n);
            Json all = Json::array();
            for (const auto& w : twists) {
                for (const auto& f : enumerate_supports(GroupSpec{family, opt.n, w})) {
                    all.push_back(to_json(f));
                }
            }
            if (print.format() == Format::Markdown) {
                print.stream() << "| twist | a | b | J | lambda |\n|---|---|---|---|---|\n";
                for (const auto& f : all) {
                    print.stream() << "| " << f["twist"].get<std::string>() << " | " << f["a"]
                                   << " | " << f["b"] << " | " << f["j_label"].get<std::string>()
                                   << " | " << f["lambda"]["partition"].dump() << " |\n";
                }
            } else {
                print.json(all);
            }
            return 0;
        }
        if (dual->parsed()) {
            const TypedOrbit o(kind_arg(opt.kind), opt.n, Partition::parse(opt.partition));
            const TypedOrbit d = bv_dual(o);
            if (print.format() == Format::Markdown) {
                print.stream() << "d(" << o << ") = " << d << '\n';
            } else {
                print.json(to_json(d));
            }
            return 0;
        }
        if (collapse_cmd->parsed()) {
            const Partition p = collapse(Partition::parse(opt.partition), kind_arg(opt.kind));
            if (print.format() == Format::Markdown) {
                print.stream() << p << '\n';
            } else {
                print.json(to_json(p));
            }
            return 0;
        }
        if (transpose_cmd->parsed()) {
            const Partition p = transpose(Partition::parse(opt.partition));
            if (print.format() == Format::Markdown) {
                print.stream() << p << '\n';
            } else {
                print.json(to_json(p));
            }
            return 0;
        }
        if (lift_cmd->parsed()) {
            const GroupSpec group{family_arg(opt.family), opt.n, single_twist_arg(opt.twist)};
            for (const auto& f : enumerate_supports(group)) {
                if (group.family != GroupFamily::PGL && (f.params.a != opt.a || f.params.b != opt.b)) {
                    continue;
                }
                const LiftResult r = lift(f);
                if (print.format() == Format::Markdown) {
                    print.stream() << f.id() << ": " << r.underlying << " <" << r.marking_reduced
                                   << ">\n";
                } else {
                    Json j;
                    j["family"] = to_json(f);
                    j["lift"] = to_json(r);
                    print.json(j);
                }
                return 0;
            }
            err << "error: " << group.to_string() << " has no support with a=" << opt.a
                << " b=" << opt.b << '\n';
            return 1;
        }
        if (verify->parsed()) {
            std::vector<GroupFamily> families;
            if (opt.family == "all") {
                families = {GroupFamily::PGL, GroupFamily::SO_odd, GroupFamily::PSp,
                            GroupFamily::PSO_even};
            } else {
                families = {family_arg(opt.family)};
                if (!is_classical(families.front())) {
                    throw UsageError("verify takes a classical family; use verify-exceptional");
                }
            }
            const auto twists = twists_arg(opt.twist);
            AggregateReport total;
            for (auto family : families) {
                auto part = verify_range(family, opt.n_max, twists);
                std::move(part.reports.begin(), part.reports.end(),
                          std::back_inserter(total.reports));
            }
            if (print.format() == Format::Markdown) {
                write_markdown(print.stream(), total);
            } else {
                print.json(to_json(total));
            }
            return total.ok() ? 0 : 1;
        }
        if (verify_exc->parsed()) {
            const auto reports = verify_exceptional();
            bool ok = true;
            Json all = Json::array();
            for (const auto& r : reports) {
                ok = ok && r.binding_passed();
                all.push_back(to_json(r));
            }
            if (print.format() == Format::Markdown) {
                write_markdown(print.stream(), reports);
            } else {
                print.json(all);
            }
            return ok ? 0 : 1;
        }
        if (export_tables->parsed()) {
            Json all = Json::array();
            for (const auto& row : exceptional_rows()) all.push_back(to_json(row));
            print.json(all);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace nilwave::cli
