#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stacky/artin.hpp"
#include "stacky/chow.hpp"
#include "stacky/class_expr.hpp"
#include "stacky/errors.hpp"
#include "stacky/fan_io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stacky;

constexpr int kExitParse = 1;   // file/expression parse or fan validation failure
constexpr int kExitMath = 2;    // mathematical precondition violated
constexpr int kExitIo = 3;      // filesystem failure

std::string cone_str(const IndexSet& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

IndexSet parse_cone_selector(const std::string& text) {
    IndexSet cone;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (current.empty()) throw ParseError("malformed cone selector '" + text + "'");
            cone.push_back(std::stoi(current));
            current.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            current += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError("malformed cone selector '" + text + "'");
        }
    }
    if (current.empty()) throw ParseError("malformed cone selector '" + text + "'");
    cone.push_back(std::stoi(current));
    return cone;
}

std::string linear_relation_str(const IntMatrix& relations, int row) {
    std::string out;
    bool first = true;
    for (int rho = 0; rho < relations.cols(); ++rho) {
        const Int& c = relations(row, rho);
        if (c == 0) continue;
        const Int mag = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + "*";
        out += "x" + std::to_string(rho);
    }
    return first ? "0" : out;
}

struct Settings {
    bool json = false;
    long max_steps = 4000000;
    ReductionOptions reduction() const {
        ReductionOptions o;
        o.max_steps = max_steps;
        return o;
    }
};

void emit(const ordered_json& doc) { std::cout << pretty_json(doc) << "\n"; }

int run_validate(const std::string& path, const Settings& settings) {
    FanDocument doc = read_fan_file(path);
    const ValidationReport& report = doc.fan.validate();
    if (settings.json) {
        ordered_json out;
        out["valid"] = report.ok;
        if (!report.ok) {
            out["axiom"] = report.axiom;
            out["witness"] = report.message;
        }
        emit(out);
    } else if (report.ok) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid (" << report.axiom << "): " << report.message << "\n";
    }
    return report.ok ? 0 : kExitParse;
}

int run_info(const std::string& path, const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const StackyFan& fan = doc.fan;
    const auto [simplicial, nonsimplicial] = fan.is_simplicial();
    const bool complete = fan.is_complete();

    if (settings.json) {
        ordered_json out;
        out["rank"] = fan.rank();
        out["rays"] = fan.num_rays();
        out["complete"] = complete;
        out["simplicial"] = simplicial;
        out["nonsimplicial_cones"] = nonsimplicial;
        out["multiplicities"] = ordered_json::array();
        for (const IndexSet& c : fan.max_cones()) {
            ordered_json row;
            row["cone"] = c;
            if (fan.cone(c).is_simplicial())
                row["D"] = fan.stacky_multiplicity(c).str();
            else
                row["D"] = nullptr;
            out["multiplicities"].push_back(std::move(row));
        }
        emit(out);
        return 0;
    }

    std::cout << "rank: " << fan.rank() << "\n";
    std::cout << "rays: " << fan.num_rays() << "\n";
    std::cout << "complete: " << (complete ? "yes" : "no") << "\n";
    std::cout << "simplicial: " << (simplicial ? "yes" : "no") << "\n";
    if (!simplicial) {
        std::cout << "nonsimplicial cones:";
        for (const IndexSet& c : nonsimplicial) std::cout << " " << cone_str(c);
        std::cout << "\n";
    }
    std::cout << "multiplicity table:\n";
    for (const IndexSet& c : fan.max_cones()) {
        std::cout << "  " << cone_str(c) << ": ";
        if (fan.cone(c).is_simplicial())
            std::cout << fan.stacky_multiplicity(c).str() << "\n";
        else
            std::cout << "n/a (nonsimplicial)\n";
    }
    return 0;
}

std::vector<std::string> extend_labels(const std::vector<std::string>& labels, int old_rays,
                                       const std::vector<SubdivisionStep>& steps) {
    if (labels.empty()) return {};
    std::vector<std::string> out = labels;
    out.resize(static_cast<std::size_t>(old_rays));
    for (const SubdivisionStep& step : steps)
        out.push_back("exc" + std::to_string(step.new_ray_index));
    return out;
}

int run_subdivide(const std::string& path, const std::string& selector,
                  const std::optional<std::string>& output, const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const IndexSet sigma = parse_cone_selector(selector);
    auto [subdivided, map, step] = star_subdivide(doc.fan, sigma);

    std::vector<SubdivisionStep> history = doc.history;
    history.push_back(step);
    const std::vector<std::string> labels =
        extend_labels(doc.labels, doc.fan.num_rays(), {step});

    ordered_json out = fan_to_json(subdivided, labels, history);
    if (output) {
        write_text_file(*output, pretty_json(out) + "\n");
        if (settings.json) {
            ordered_json note;
            note["written"] = *output;
            note["new_ray_index"] = step.new_ray_index;
            emit(note);
        } else {
            std::cout << "wrote " << *output << " (new ray index " << step.new_ray_index
                      << ")\n";
        }
    } else {
        emit(out);
    }
    return 0;
}

int run_simplicialize(const std::string& path, const std::optional<std::string>& output,
                      const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const SimplicializationResult result = simplicialize(doc.fan);

    std::vector<SubdivisionStep> history = doc.history;
    history.insert(history.end(), result.steps.begin(), result.steps.end());
    const std::vector<std::string> labels =
        extend_labels(doc.labels, doc.fan.num_rays(), result.steps);

    ordered_json fan_doc = fan_to_json(result.fan, labels, history);
    ordered_json report;
    report["steps"] = steps_to_json(result.steps);
    report["pullback"] = pullback_to_json(result.map);

    if (output) {
        write_text_file(*output, pretty_json(fan_doc) + "\n");
        if (settings.json) {
            report["written"] = *output;
            emit(report);
        } else {
            std::cout << "wrote " << *output << " after " << result.steps.size()
                      << " subdivision step(s)\n";
            for (const SubdivisionStep& step : result.steps)
                std::cout << "  subdivided " << cone_str(step.cone) << " -> new ray index "
                          << step.new_ray_index << "\n";
            std::cout << "pullback images:\n";
            for (std::size_t rho = 0; rho < result.map.images.size(); ++rho) {
                ChowClass generator = ChowClass::generator(result.map.source_rays,
                                                           static_cast<int>(rho));
                std::cout << "  x" << rho << " -> "
                          << format_class(pullback(result.map, generator)) << "\n";
            }
        }
    } else if (settings.json) {
        ordered_json out;
        out["fan"] = fan_doc;
        out["steps"] = report["steps"];
        out["pullback"] = report["pullback"];
        emit(out);
    } else {
        emit(fan_doc);
    }
    return 0;
}

int run_sr(const std::string& path, const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const SRPresentation p = sr_presentation(doc.fan);

    if (settings.json) {
        ordered_json out;
        out["linear_relations"] = ordered_json::array();
        for (int row = 0; row < p.linear_relations.rows(); ++row) {
            ordered_json coeffs = ordered_json::array();
            for (int rho = 0; rho < p.linear_relations.cols(); ++rho)
                coeffs.push_back(p.linear_relations(row, rho).convert_to<long long>());
            out["linear_relations"].push_back(std::move(coeffs));
        }
        out["minimal_nonfaces"] = p.minimal_nonfaces;
        emit(out);
        return 0;
    }

    std::cout << "linear relations:\n";
    for (int row = 0; row < p.linear_relations.rows(); ++row)
        std::cout << "  " << linear_relation_str(p.linear_relations, row) << " = 0\n";
    std::cout << "minimal nonfaces:\n";
    for (const IndexSet& nonface : p.minimal_nonfaces) {
        std::cout << "  ";
        for (std::size_t i = 0; i < nonface.size(); ++i) {
            if (i) std::cout << "*";
            std::cout << "x" << nonface[i];
        }
        std::cout << " = 0\n";
    }
    return 0;
}

int run_reduce(const std::string& path, const std::string& class_text,
               const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const ChowClass cls = parse_class(class_text, doc.fan.num_rays());
    const ChowClass reduced = reduce_squarefree(doc.fan, cls, settings.reduction());
    if (settings.json) {
        ordered_json out;
        out["class"] = format_class(reduced);
        emit(out);
    } else {
        std::cout << format_class(reduced) << "\n";
    }
    return 0;
}

int run_integrate(const std::string& path, const std::string& class_text,
                  const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const ChowClass cls = parse_class(class_text, doc.fan.num_rays());
    const Rational value = integrate_artin(doc.fan, cls, settings.reduction());
    if (settings.json) {
        ordered_json out;
        out["value"] = to_string(value);
        emit(out);
    } else {
        std::cout << to_string(value) << "\n";
    }
    return 0;
}

int run_euler(const std::string& path, const std::string& method, const Settings& settings) {
    FanDocument doc = load_fan_file(path);
    const StackyFan& fan = doc.fan;

    std::string chosen = method;
    if (chosen == "auto")
        chosen = fan.is_simplicial().first ? "simplicial" : "pullback";

    if (chosen == "simplicial") {
        const Rational value = euler_simplicial(fan);
        if (settings.json) {
            ordered_json out;
            out["method"] = "simplicial";
            out["value"] = to_string(value);
            emit(out);
        } else {
            std::cout << to_string(value) << "\n";
        }
        return 0;
    }
    if (chosen == "pullback") {
        const Rational value = euler_artin(fan, settings.reduction());
        if (settings.json) {
            ordered_json out;
            out["method"] = "pullback";
            out["value"] = to_string(value);
            emit(out);
        } else {
            std::cout << to_string(value) << "\n";
        }
        return 0;
    }
    if (chosen == "formula3d") {
        const Euler3dResult result = euler_artin_3d(fan);
        if (settings.json) {
            ordered_json out;
            out["method"] = "formula3d";
            out["chi_simplicialization"] = to_string(result.chi_simplicialization);
            out["terms"] = ordered_json::array();
            for (const Euler3dTerm& term : result.terms) {
                ordered_json row;
                row["sigma"] = term.sigma;
                if (term.new_cone_term)
                    row["new_cone"] = term.tau;
                else
                    row["ray"] = term.ray;
                row["value"] = to_string(term.value);
                out["terms"].push_back(std::move(row));
            }
            out["correction"] = to_string(result.correction);
            out["value"] = to_string(result.chi);
            emit(out);
        } else {
            std::cout << "chi(simplicialization) = " << to_string(result.chi_simplicialization)
                      << "\n";
            for (const Euler3dTerm& term : result.terms) {
                if (term.new_cone_term)
                    std::cout << "cone " << cone_str(term.sigma) << ", new cone "
                              << cone_str(term.tau) << ": " << to_string(term.value) << "\n";
                else
                    std::cout << "cone " << cone_str(term.sigma) << ", ray " << term.ray << ": "
                              << to_string(term.value) << "\n";
            }
            std::cout << "correction = " << to_string(result.correction) << "\n";
            std::cout << to_string(result.chi) << "\n";
        }
        return 0;
    }
    throw ParseError("unknown euler method '" + method + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection theory on toric Artin stacks from stacky-fan data"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_flag("--json", settings.json, "emit machine-readable JSON instead of text");
    app.add_option("--max-steps", settings.max_steps,
                   "cap on monomial reductions before aborting with a diagnostic");

    std::string fan_path, class_text, cone_selector;
    std::string euler_method = "auto";
    std::optional<std::string> output_path;

    CLI::App* validate = app.add_subcommand("validate", "check the fan axioms");
    validate->add_option("fan", fan_path, "fan file")->required();

    CLI::App* info = app.add_subcommand("info", "rank, completeness, multiplicity table");
    info->add_option("fan", fan_path, "fan file")->required();

    CLI::App* subdivide = app.add_subcommand("subdivide", "stacky star subdivision at a cone");
    subdivide->add_option("fan", fan_path, "fan file")->required();
    subdivide->add_option("--cone", cone_selector, "ray indices of the cone, e.g. 0,1,2,3")
        ->required();
    subdivide->add_option("-o,--output", output_path, "write the subdivided fan here");

    CLI::App* simplicialize_cmd =
        app.add_subcommand("simplicialize", "iterated subdivision until simplicial");
    simplicialize_cmd->add_option("fan", fan_path, "fan file")->required();
    simplicialize_cmd->add_option("-o,--output", output_path, "write the target fan here");

    CLI::App* sr = app.add_subcommand("sr", "Stanley-Reisner presentation of the Chow ring");
    sr->add_option("fan", fan_path, "fan file")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "rewrite a class in square-free form");
    reduce->add_option("fan", fan_path, "fan file")->required();
    reduce->add_option("class", class_text, "class expression, e.g. \"x5^2\"")->required();

    CLI::App* integrate = app.add_subcommand("integrate", "degree of a top-degree class");
    integrate->add_option("fan", fan_path, "fan file")->required();
    integrate->add_option("class", class_text, "class expression, e.g. \"x5^3\"")->required();

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("fan", fan_path, "fan file")->required();
    euler
        ->add_option("--method", euler_method,
                     "auto (default), simplicial, pullback, or formula3d")
        ->check(CLI::IsMember({"auto", "simplicial", "pullback", "formula3d"}));

    try {
        app.parse(argc, argv);

        if (validate->parsed()) return run_validate(fan_path, settings);
        if (info->parsed()) return run_info(fan_path, settings);
        if (subdivide->parsed())
            return run_subdivide(fan_path, cone_selector, output_path, settings);
        if (simplicialize_cmd->parsed())
            return run_simplicialize(fan_path, output_path, settings);
        if (sr->parsed()) return run_sr(fan_path, settings);
        if (reduce->parsed()) return run_reduce(fan_path, class_text, settings);
        if (integrate->parsed()) return run_integrate(fan_path, class_text, settings);
        if (euler->parsed()) return run_euler(fan_path, euler_method, settings);
        return kExitParse;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitMath;
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return kExitMath;
    } catch (const DimensionError& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return kExitMath;
    } catch (const SingularityError& e) {
        std::cerr << "singular system: " << e.what() << "\n";
        return kExitMath;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
