// qasym: expand q-product generating functions, build and combine their
// asymptotic forms, and check predictions against exact coefficients.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qasym/qasym.hpp"

namespace {

using nlohmann::json;

std::int64_t max_order() {
    if (const char* env = std::getenv("QASYM_MAX_ORDER")) return std::atoll(env);
    return 100000;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qasym::FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --spec accepts the DSL inline or @file
qasym::ProductSpec load_spec(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') text = slurp(arg.substr(1));
    return qasym::parse(text);
}

// form arguments accept a JSON file path or inline JSON
qasym::AsymptoticForm load_form(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        text = slurp(arg.substr(1));
    } else if (arg.find('{') == std::string::npos) {
        text = slurp(arg);
    }
    return qasym::form_from_json(json::parse(text));
}

qasym::Params parse_params(const std::string& text) {
    qasym::Params out;
    if (text.empty()) return out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw qasym::ParamError("expected key=value in --params, got '" + item + "'");
        out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
    return out;
}

std::vector<std::int64_t> parse_checkpoints(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

void check_order(std::int64_t n) {
    if (n > max_order())
        throw qasym::OrderViolation("order " + std::to_string(n) +
                                    " exceeds QASYM_MAX_ORDER=" +
                                    std::to_string(max_order()));
}

void print_report_text(std::ostream& os, const qasym::VerificationReport& rep) {
    for (const auto& c : rep.checkpoints)
        os << "n=" << c.n << "  ln|a_n|=" << static_cast<double>(c.log_coeff)
           << "  ln f(n)=" << static_cast<double>(c.log_asym)
           << "  delta=" << static_cast<double>(c.delta)
           << "  ratio=" << static_cast<double>(c.ratio) << "\n";
    os << "trend_slope=" << static_cast<double>(rep.trend_slope)
       << "  verdict=" << qasym::to_string(rep.verdict) << "\n";
}

void print_report_csv(std::ostream& os, const qasym::VerificationReport& rep) {
    os << "n,log_coeff,log_asym,delta,ratio\n";
    for (const auto& c : rep.checkpoints)
        os << c.n << "," << static_cast<double>(c.log_coeff) << ","
           << static_cast<double>(c.log_asym) << "," << static_cast<double>(c.delta)
           << "," << static_cast<double>(c.ratio) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotics of q-series via convolution of generating functions"};
    app.require_subcommand(1);

    std::string spec_arg, form_arg, form_arg2, family, params_text, out_mode = "coeffs.json";
    std::string checkpoints_text, format = "text", filter = "*", file_path, power_h;
    std::int64_t order = 100, max_n = 5000;
    bool use_derive = false;

    auto* cmd_expand = app.add_subcommand("expand", "expand a product to exact coefficients");
    cmd_expand->add_option("--spec", spec_arg, "product DSL, or @file")->required();
    cmd_expand->add_option("--order", order, "truncation order N")->required();
    cmd_expand->add_option("--out", out_mode, "coeffs.json or bfile");

    auto* cmd_form = app.add_subcommand("form", "print the asymptotic form of a catalog family");
    cmd_form->add_option("--family", family)->required();
    cmd_form->add_option("--params", params_text, "comma-separated k=v pairs");
    cmd_form->add_flag("--derive", use_derive, "use the composition path instead of the closed form");

    auto* cmd_conv = app.add_subcommand("conv", "convolve two forms");
    cmd_conv->add_option("a", form_arg, "form JSON (file or inline)")->required();
    cmd_conv->add_option("b", form_arg2, "form JSON (file or inline)")->required();

    auto* cmd_power = app.add_subcommand("power", "h-fold convolution power of a form");
    cmd_power->add_option("a", form_arg)->required();
    cmd_power->add_option("--exponent", power_h, "exponent h (integer or rational like 3/2)")->required();

    auto* cmd_solve = app.add_subcommand("solve", "deconvolve: solve x (*) known = target");
    cmd_solve->add_option("target", form_arg)->required();
    cmd_solve->add_option("known", form_arg2)->required();

    auto* cmd_convmixed = app.add_subcommand("convmixed", "convolve two-term forms (p = 1/3, 2/3)");
    cmd_convmixed->add_option("a", form_arg)->required();
    cmd_convmixed->add_option("b", form_arg2)->required();

    auto* cmd_verify = app.add_subcommand("verify", "compare exact coefficients to a predicted form");
    cmd_verify->add_option("--spec", spec_arg)->required();
    cmd_verify->add_option("--form", form_arg)->required();
    cmd_verify->add_option("--checkpoints", checkpoints_text, "comma-separated n values");
    cmd_verify->add_option("--format", format, "json, csv, or text");

    auto* cmd_suite = app.add_subcommand("suite", "verify every catalog family at its smallest parameters");
    cmd_suite->add_option("--filter", filter, "glob over family ids");
    cmd_suite->add_option("--max-n", max_n, "largest checkpoint");

    auto* cmd_bfile = app.add_subcommand("bfile", "b-file utilities");
    auto* cmd_bfile_check = cmd_bfile->add_subcommand("check", "compare expansion against an OEIS b-file");
    cmd_bfile_check->add_option("--family", family)->required();
    cmd_bfile_check->add_option("--params", params_text);
    cmd_bfile_check->add_option("--file", file_path)->required();

    auto* cmd_catalog = app.add_subcommand("catalog", "dump the family catalog as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_expand) {
            check_order(order);
            qasym::ProductSpec spec = load_spec(spec_arg);
            qasym::SeriesPoly p = qasym::expand(spec, order);
            if (out_mode == "bfile") {
                qasym::write_bfile(std::cout, qasym::to_bfile(p));
            } else {
                json j;
                j["product"] = qasym::render(spec);
                j["order"] = order;
                j["coeffs"] = json::array();
                for (const auto& a : p.coeffs) j["coeffs"].push_back(a.get_str());
                std::cout << j.dump(2) << "\n";
            }
        } else if (*cmd_form) {
            qasym::Params params = parse_params(params_text);
            qasym::AsymptoticForm f = use_derive ? qasym::derive(family, params)
                                                 : qasym::instantiate(family, params).second;
            std::cout << qasym::to_json(f).dump(2) << "\n";
        } else if (*cmd_conv) {
            std::cout << qasym::to_json(qasym::convolve(load_form(form_arg),
                                                        load_form(form_arg2)))
                             .dump(2)
                      << "\n";
        } else if (*cmd_power) {
            std::cout << qasym::to_json(qasym::power(load_form(form_arg),
                                                     qasym::Rational::parse(power_h)))
                             .dump(2)
                      << "\n";
        } else if (*cmd_solve) {
            std::cout << qasym::to_json(qasym::deconvolve(load_form(form_arg),
                                                          load_form(form_arg2)))
                             .dump(2)
                      << "\n";
        } else if (*cmd_convmixed) {
            std::cout << qasym::to_json(qasym::convolve_mixed(load_form(form_arg),
                                                              load_form(form_arg2)))
                             .dump(2)
                      << "\n";
        } else if (*cmd_verify) {
            std::vector<std::int64_t> ns = checkpoints_text.empty()
                                               ? qasym::default_checkpoints()
                                               : parse_checkpoints(checkpoints_text);
            for (std::int64_t n : ns) check_order(n);
            qasym::VerificationReport rep =
                qasym::verify(load_spec(spec_arg), load_form(form_arg), ns);
            if (format == "json")
                std::cout << qasym::report_to_json(rep).dump(2) << "\n";
            else if (format == "csv")
                print_report_csv(std::cout, rep);
            else
                print_report_text(std::cout, rep);
            if (rep.verdict == qasym::Verdict::diverging) return 1;
        } else if (*cmd_suite) {
            check_order(max_n);
            bool all_ok = true;
            for (const auto& res : qasym::run_suite(filter, max_n)) {
                std::cout << res.id;
                for (const auto& [k, v] : res.params) std::cout << " " << k << "=" << v;
                std::cout << ": " << qasym::to_string(res.report.verdict)
                          << " (last delta="
                          << static_cast<double>(res.report.checkpoints.back().delta)
                          << ")\n";
                if (res.report.verdict == qasym::Verdict::diverging) all_ok = false;
            }
            if (!all_ok) return 1;
        } else if (*cmd_bfile_check) {
            auto [spec, form] = qasym::instantiate(family, parse_params(params_text));
            (void)form;
            std::ifstream in(file_path);
            if (!in) throw qasym::FormatError("cannot open '" + file_path + "'");
            qasym::BFile bf = qasym::read_bfile(in);
            check_order(bf.last_index());
            qasym::SeriesPoly p = qasym::expand(spec, bf.last_index());
            std::int64_t checked = qasym::cross_check(p, bf);
            std::cout << "ok: " << checked << " terms match\n";
        } else if (*cmd_catalog) {
            std::cout << qasym::catalog_json().dump(2) << "\n";
        }
    } catch (const qasym::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qasym::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qasym::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qasym::MismatchError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const qasym::SignMismatch& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const qasym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
