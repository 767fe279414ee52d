// Command-line front end for the fourstab library: classification of forms
// and connected-sum expressions, Bauer-Furuta invariants and their stable
// localisations, and a small demo of the category localisation machinery.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fourstab/fourstab.hpp"

namespace {

using namespace fourstab;
using io::json;

struct Options {
    std::string output = "text";
    std::string form_file;
    std::string expr;
    std::string direction;
    std::string flavor;
    std::string spinc;
    std::string instance = "finset";
    std::string obj_a;
    std::string obj_b;
    Int stage = 0;
};

bool json_mode(const Options& opt) { return opt.output == "json"; }

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (json_mode(opt)) {
        json out = doc;
        out["schema"] = 1;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string class_text(const lattice::StableClass& cls) {
    std::ostringstream os;
    os << "class: " << lattice::stable_kind_name(cls.kind) << "\n";
    if (cls.kind == lattice::StableKind::EvenClass) os << "k3_count: " << cls.k3_count << "\n";
    if (cls.kind == lattice::StableKind::OddClass) os << "class_signature: " << cls.odd_signature << "\n";
    os << "representative: " << render(cls.representative) << "\n";
    return os.str();
}

std::string invariants_text(const lattice::FormInvariants& inv) {
    std::ostringstream os;
    os << "rank: " << inv.rank << "\n"
       << "b_plus: " << inv.b_plus << "\n"
       << "b_minus: " << inv.b_minus << "\n"
       << "signature: " << inv.signature << "\n"
       << "parity: " << lattice::parity_name(inv.parity) << "\n"
       << "definiteness: " << lattice::definiteness_name(inv.definiteness) << "\n";
    return os.str();
}

void run_classify(const Options& opt) {
    std::ifstream in(opt.form_file);
    if (!in) throw ParseError("cannot open form file '" + opt.form_file + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + opt.form_file + "': " + e.what());
    }
    const auto form = io::form_from_json(doc);
    const auto inv = lattice::invariants(form);
    const auto cls = lattice::stable_class(form);
    emit(opt, json{{"invariants", io::to_json(inv)}, {"stable_class", io::to_json(cls)}},
         invariants_text(inv) + class_text(cls));
}

void run_stable_class(const Options& opt) {
    const auto expr = parse_expr(opt.expr);
    const auto m = mfd::realize(expr);
    lattice::StableClass cls;
    if (opt.direction == "s2xs2")
        cls = mfd::stable_class_s2xs2(m);
    else if (opt.direction == "cp2cp2bar")
        cls = mfd::stable_class_cp2cp2bar(m);
    else
        throw ParseError("direction must be s2xs2 or cp2cp2bar, got '" + opt.direction + "'");
    emit(opt, json{{"stable_class", io::to_json(cls)}}, class_text(cls));
}

std::vector<Int> parse_spinc(const std::string& text) {
    std::vector<Int> v;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("invalid spin-c entry '" + item + "'");
        }
    }
    return v;
}

void run_bf(const Options& opt) {
    const auto expr = parse_expr(opt.expr);
    mfd::IndexFlavor flavor;
    if (opt.flavor == "P")
        flavor = mfd::IndexFlavor::P;
    else if (opt.flavor == "T")
        flavor = mfd::IndexFlavor::T;
    else
        throw ParseError("flavor must be P or T, got '" + opt.flavor + "'");
    if (!opt.spinc.empty() && flavor != mfd::IndexFlavor::T)
        throw ParseError("--spinc applies to the T flavor only");
    const auto mono = pin2::bf(expr, flavor);
    json doc{{"invariant", io::to_json(mono)}};
    std::ostringstream text;
    text << "invariant: " << pin2::render(mono) << "\n"
         << "source: " << pin2::render(pin2::source_degree(mono)) << "\n"
         << "target: " << pin2::render(pin2::target_degree(mono)) << "\n";
    if (!opt.spinc.empty()) {
        const auto m = mfd::realize(expr);
        const auto idx = mfd::lambda_T(m, mfd::SpinCStructure{parse_spinc(opt.spinc)});
        doc["lambda_T"] = io::to_json(idx);
        text << "lambda_T_index: " << idx.index_part << "\n"
             << "lambda_T_bplus: " << idx.bplus_part << "\n";
    }
    emit(opt, doc, text.str());
}

void run_stable_bf(const Options& opt) {
    const auto expr = parse_expr(opt.expr);
    Generator y;
    if (opt.direction == "K3")
        y = Generator::K3;
    else if (opt.direction == "S2xS2")
        y = Generator::S2xS2;
    else
        throw ParseError("direction must be K3 or S2xS2, got '" + opt.direction + "'");
    const auto stable = pin2::stable_bf(expr, y);
    std::ostringstream text;
    text << "invariant: " << pin2::render(stable) << "\n"
         << "localisation: " << pin2::den_gen_name(stable.den_gen) << "\n";
    emit(opt, json{{"stable_invariant", io::to_json(stable)}}, text.str());
}

void run_transport(const Options& opt) {
    const auto expr = parse_expr(opt.expr);
    const auto k3_stable = pin2::stable_bf(expr, Generator::K3);
    const auto s2_stable = pin2::stable_bf(expr, Generator::S2xS2);
    const auto moved = pin2::transport_eta_to_eD(k3_stable);
    const bool equal = pin2::eq_localized(moved, s2_stable);
    std::ostringstream text;
    text << "k3_stable: " << pin2::render(k3_stable) << "\n"
         << "transported: " << pin2::render(moved) << "\n"
         << "s2xs2_stable: " << pin2::render(s2_stable) << "\n"
         << "equal: " << (equal ? "true" : "false") << "\n";
    emit(opt,
         json{{"k3_stable", io::to_json(k3_stable)},
              {"transported", io::to_json(moved)},
              {"s2xs2_stable", io::to_json(s2_stable)},
              {"equal", equal}},
         text.str());
}

void run_noether(const Options& opt) {
    const auto m = mfd::realize(parse_expr(opt.expr));
    const bool ok = mfd::noether_check(m);
    std::ostringstream text;
    text << "noether: " << (ok ? "true" : "false") << "\n"
         << "chi: " << m.euler << "\n"
         << "signature: " << m.inv.signature << "\n";
    emit(opt, json{{"noether", ok}, {"chi", m.euler}, {"signature", m.inv.signature}}, text.str());
}

std::pair<Int, Int> parse_localized_object(const std::string& text) {
    // "(base,shift)" with optional whitespace
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError("expected an object of the form \"(base,shift)\", got '" + text + "'");
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected an object of the form \"(base,shift)\", got '" + text + "'");
    try {
        const Int base = std::stoll(s.substr(1, comma - 1));
        const Int shift = std::stoll(s.substr(comma + 1, s.size() - comma - 2));
        if (base < 0) throw ParseError("finite pointed sets need a non-negative size");
        return {base, shift};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected integers in \"(base,shift)\", got '" + text + "'");
    }
}

void run_localize_demo(const Options& opt) {
    if (opt.instance != "finset")
        throw ParseError("the only hom-enumerable demo instance is 'finset'");
    const auto [abase, ashift] = parse_localized_object(opt.obj_a);
    const auto [bbase, bshift] = parse_localized_object(opt.obj_b);
    if (opt.stage < 0) throw ParseError("--stage must be non-negative");
    cat::FinSetInstance inst;
    const cat::LocalizedObject<cat::FinSetInstance> a{abase, ashift};
    const cat::LocalizedObject<cat::FinSetInstance> b{bbase, bshift};
    json table = json::array();
    std::ostringstream text;
    for (Int s = 0; s <= opt.stage; ++s) {
        const auto homs = cat::hom_localized(inst, a, b, s);
        table.push_back(json{{"stage", s}, {"size", static_cast<Int>(homs.size())}});
        text << "stage " << s << ": " << homs.size() << "\n";
    }
    emit(opt, json{{"hom_sizes", table}}, text.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable classification of simply-connected 4-manifolds and "
                 "Pin(2)-equivariant Bauer-Furuta calculus"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--output", opt.output, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Invariants and stable class of a JSON form");
    classify->add_option("--form", opt.form_file, "Path to a JSON file {\"matrix\": [[...]]}")
        ->required();

    auto* stable_class = app.add_subcommand("stable-class", "Stable class of an expression");
    stable_class->add_option("--expr", opt.expr, "Connected-sum expression")->required();
    stable_class->add_option("--direction", opt.direction, "s2xs2 or cp2cp2bar")->required();

    auto* bf = app.add_subcommand("bf", "Bauer-Furuta invariant of an expression");
    bf->add_option("--expr", opt.expr, "Connected-sum expression")->required();
    bf->add_option("--flavor", opt.flavor, "P or T")->required();
    bf->add_option("--spinc", opt.spinc, "Characteristic vector, comma-separated (T flavor)");

    auto* stable_bf = app.add_subcommand("stable-bf", "Y-stable Bauer-Furuta invariant");
    stable_bf->add_option("--expr", opt.expr, "Connected-sum expression")->required();
    stable_bf->add_option("--direction", opt.direction, "K3 or S2xS2")->required();

    auto* transport = app.add_subcommand(
        "transport", "Transport the K3-stable invariant to the S2xS2-stable one and compare");
    transport->add_option("--expr", opt.expr, "Connected-sum expression")->required();

    auto* noether = app.add_subcommand("noether", "Noether divisibility check");
    noether->add_option("--expr", opt.expr, "Connected-sum expression")->required();

    auto* demo = app.add_subcommand("localize-demo", "Localised hom-set sizes by stage");
    demo->add_option("--instance", opt.instance, "Instance name (finset)")->capture_default_str();
    demo->add_option("--a", opt.obj_a, "Localised object \"(base,shift)\"")->required();
    demo->add_option("--b", opt.obj_b, "Localised object \"(base,shift)\"")->required();
    demo->add_option("--stage", opt.stage, "Largest stage to tabulate")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) run_classify(opt);
        if (stable_class->parsed()) run_stable_class(opt);
        if (bf->parsed()) run_bf(opt);
        if (stable_bf->parsed()) run_stable_bf(opt);
        if (transport->parsed()) run_transport(opt);
        if (noether->parsed()) run_noether(opt);
        if (demo->parsed()) run_localize_demo(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
