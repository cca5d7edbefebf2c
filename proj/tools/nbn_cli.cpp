#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbn/quadratic_algebra.hpp"
#include "nbn/verify.hpp"

using nlohmann::json;
using namespace nbn;

namespace {

constexpr int kUsageError = 3;

struct Settings {
    std::string config_path;
    std::string output;
    std::string format = "json";
    bool include_runtime = false;

    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;
    std::uint64_t step_budget = 50'000'000;
    std::uint64_t group_cap = kDefaultGroupCap;
    int degree_cap = 0;  // 0: default_degree_cap(n)
    int max_degree = 5;
    std::uint64_t row_budget = 500000;
    std::size_t exact_block_cap = 1500;
    bool force_modp = false;
    std::vector<std::uint64_t> primes;
};

/// Keys of the versioned config file and the flags that override them.
const std::vector<std::pair<std::string, std::string>> kConfigKeys{
    {"seed", "--seed"},
    {"samples", "--samples"},
    {"step_budget", "--step-budget"},
    {"group_cap", "--group-cap"},
    {"degree_cap", "--cap"},
    {"max_degree", "--max-degree"},
    {"row_budget", "--row-budget"},
    {"exact_block_cap", "--exact-block-cap"},
    {"force_modp", "--force-modp"},
    {"primes", "--primes"},
};

bool flag_given(const CLI::App* sub, const std::string& flag) {
    try {
        return sub->get_option(flag)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
        return false;
    }
}

void apply_config(Settings& s, const CLI::App* sub) {
    if (s.config_path.empty()) return;
    std::ifstream in(s.config_path);
    if (!in) throw std::invalid_argument("cannot read config file " + s.config_path);
    const json j = json::parse(in);
    if (!j.is_object() || j.value("version", 0) != 1) throw std::invalid_argument("config file needs \"version\": 1");
    for (const auto& [key, value] : j.items()) {
        if (key == "version") continue;
        const auto it = std::find_if(kConfigKeys.begin(), kConfigKeys.end(), [&](const auto& k) { return k.first == key; });
        if (it == kConfigKeys.end()) throw std::invalid_argument("unknown config key: " + key);
        if (flag_given(sub, it->second)) continue;
        if (key == "seed") s.seed = value.get<std::uint64_t>();
        else if (key == "samples") s.samples = value.get<std::uint64_t>();
        else if (key == "step_budget") s.step_budget = value.get<std::uint64_t>();
        else if (key == "group_cap") s.group_cap = value.get<std::uint64_t>();
        else if (key == "degree_cap") s.degree_cap = value.get<int>();
        else if (key == "max_degree") s.max_degree = value.get<int>();
        else if (key == "row_budget") s.row_budget = value.get<std::uint64_t>();
        else if (key == "exact_block_cap") s.exact_block_cap = value.get<std::size_t>();
        else if (key == "force_modp") s.force_modp = value.get<bool>();
        else if (key == "primes") s.primes = value.get<std::vector<std::uint64_t>>();
    }
}

void emit(const Settings& s, const std::string& text) {
    if (s.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(s.output);
    if (!out) throw std::runtime_error("cannot write " + s.output);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + s.output);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Group parse_group(const std::string& name, int n_hint) {
    if (!name.empty()) return Group::parse(name);
    if (n_hint > 0) return Group::signed_group(n_hint);
    throw std::invalid_argument("--group is required");
}

SignedPermutation parse_element(const Group& g, const std::string& text) {
    const auto x = g.parse_element(text);
    if (x.degree() != g.n || !g.contains(x)) throw std::invalid_argument("element " + text + " is not in " + g.name());
    return x;
}

Cyclo parse_scalar(const std::string& t) {
    const auto caret = t.find('^');
    if (!t.empty() && t[0] == 'z' && caret != std::string::npos)
        return Cyclo::root(std::stoi(t.substr(1, caret - 1)), std::stoi(t.substr(caret + 1)));
    return Cyclo(std::stol(t));
}

/// trivial | sign | swap:i,j | signs:<bits> | chars:v1,v2,... with values n or zN^k on the centralizer generators.
MatrixRep parse_rep(const std::string& text, std::shared_ptr<const Centralizer> cent) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        for (std::string t; std::getline(ss, t, ',');) out.push_back(t);
        return out;
    };
    if (kind == "trivial") return trivial_rep(cent);
    if (kind == "sign") return sign_rep(cent);
    if (kind == "swap") {
        const auto v = split(arg);
        if (v.size() != 2) throw std::invalid_argument("swap needs two points");
        return swap_character(cent, std::stoi(v[0]) - 1, std::stoi(v[1]) - 1);
    }
    if (kind == "signs") {
        std::vector<int> bits;
        for (char c : arg) bits.push_back(c == '1');
        return sign_vector_character(cent, SignVector::from_bits(bits));
    }
    if (kind == "chars") {
        std::vector<Cyclo> values;
        for (const auto& t : split(arg)) values.push_back(parse_scalar(t));
        return char_rep(cent, values);
    }
    throw std::invalid_argument("unknown representation: " + text);
}

struct ModuleArgs {
    std::string group;
    std::string element;
    std::string rep = "sign";
    std::string cosets = "least";
};

void add_module_options(CLI::App* sub, ModuleArgs& m) {
    sub->add_option("--group", m.group, "Ambient group, e.g. B4 or S4")->required();
    sub->add_option("--class", m.element, "Class representative, e.g. \"(1 2)\" or \"0000;(1 2)\"")->required();
    sub->add_option("--rep", m.rep, "trivial | sign | swap:i,j | signs:<bits> | chars:v1,v2,...")
        ->capture_default_str();
    sub->add_option("--cosets", m.cosets, "least | transposition")->capture_default_str();
}

YDModule build_module(const ModuleArgs& m, const Settings& s) {
    const Group g = Group::parse(m.group);
    const auto x = parse_element(g, m.element);
    if (m.cosets == "transposition") {
        if (g.kind != GroupKind::Symmetric || !(x == lift_unsigned(Permutation::cycle(g.n, {0, 1}))))
            throw std::invalid_argument("transposition cosets need --group Sn --class \"(1 2)\"");
        const auto preset = transposition_preset(g.n);
        auto cls = std::make_shared<const ConjugacyClass>(preset.cls);
        auto cent = std::make_shared<const Centralizer>(preset.cent);
        return build_yd_module(cls, preset.cosets, parse_rep(m.rep, cent));
    }
    if (m.cosets != "least") throw std::invalid_argument("unknown coset choice: " + m.cosets);
    auto cls = std::make_shared<const ConjugacyClass>(conjugacy_class(g, x, EnumerationBudget{s.group_cap}));
    auto cent = std::make_shared<const Centralizer>(centralizer(g, x, EnumerationBudget{s.group_cap}));
    return build_yd_module(cls, coset_system(*cls, *cent), parse_rep(m.rep, cent));
}

SignTables read_sign_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read sign table file " + path);
    const json j = json::parse(in);
    const int n = j.at("n").get<int>();
    auto constant = [&](const char* key, int fallback) {
        return j.contains(key) && j.at(key).is_number() ? j.at(key).get<int>() : fallback;
    };
    // Missing keys and entries take the Fomin-Kirillov values alpha = beta = lambda = 1, gamma = -1.
    SignTables t = SignTables::constant(n, constant("alpha", 1), constant("beta", 1), constant("gamma", -1),
                                        constant("lambda", 1));
    auto entries = [&](const char* key, auto& table) {
        if (!j.contains(key) || j.at(key).is_number()) return;
        for (const auto& e : j.at(key)) {
            using Key = typename std::decay_t<decltype(table)>::key_type;
            Key k{};
            if (e.size() != k.size() + 1) throw std::invalid_argument(std::string("malformed entry in ") + key);
            for (std::size_t q = 0; q < k.size(); ++q) k[q] = e[q].template get<int>();
            if (!table.count(k)) throw std::invalid_argument(std::string("index out of range in ") + key);
            table[k] = e[k.size()].template get<int>();
        }
    };
    entries("alpha", t.alpha);
    entries("beta", t.beta);
    entries("gamma", t.gamma);
    entries("lambda", t.lambda);
    return t;
}

json hilbert_json(const HilbertData& h, const NCPresentation& p, int cap) {
    return {{"dims", h.dims},
            {"terminated", h.terminated},
            {"basis_size", h.basis_size},
            {"total", h.total()},
            {"whole_algebra", h.whole_algebra},
            {"generator_symbols", p.generators.size()},
            {"cap", cap},
            {"notes", p.notes}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Racks, Yetter-Drinfeld braidings and Nichols algebras over B_n = Z_2^n x| S_n"};
    app.require_subcommand(1);
    Settings s;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", s.config_path, "Versioned JSON config file; flags win");
        sub->add_option("-o,--output", s.output, "Write to a file instead of stdout");
    };
    auto search_opts = [&](CLI::App* sub) {
        sub->add_option("--seed", s.seed, "RNG seed")->capture_default_str();
        sub->add_option("--step-budget", s.step_budget, "Step budget of the randomized search")->capture_default_str();
        sub->add_option("--group-cap", s.group_cap, "Largest group enumerated")->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify-lemmas", "Run the verification reports");
    std::vector<std::string> ids;
    bool inject = false;
    bool list = false;
    common(verify);
    search_opts(verify);
    verify->add_option("--id", ids, "Report ids to run (default all)");
    verify->add_option("--samples", s.samples, "Random samples for the closed forms")->capture_default_str();
    verify->add_option("--format", s.format, "json | csv | md")->capture_default_str();
    verify->add_flag("--include-runtime", s.include_runtime, "Add wall-clock runtimes to the report");
    verify->add_flag("--inject-fault", inject, "Drop one summand of the commuting closed form");
    verify->add_flag("--list", list, "Print the report ids");

    auto* scan = app.add_subcommand("scan-classes", "Classify every class of B_n with tau != 1");
    int scan_n = 5;
    common(scan);
    search_opts(scan);
    scan->add_option("--n", scan_n, "Degree")->required();
    scan->add_option("--format", s.format, "json | csv | md")->capture_default_str();

    auto* typed = app.add_subcommand("type-d", "Search a type-D certificate for a class");
    std::string td_group, td_element;
    common(typed);
    search_opts(typed);
    typed->add_option("--group", td_group, "Bn or Sn")->required();
    typed->add_option("--element", td_element, "Class representative")->required();

    auto* braid = app.add_subcommand("braiding", "Braiding matrix of M(O, rho) as sparse triplets");
    ModuleArgs braid_args;
    common(braid);
    braid->add_option("--group-cap", s.group_cap, "Largest group enumerated")->capture_default_str();
    add_module_options(braid, braid_args);

    auto* nichols = app.add_subcommand("nichols-dim", "Graded dimensions of the Nichols algebra");
    ModuleArgs nichols_args;
    common(nichols);
    add_module_options(nichols, nichols_args);
    nichols->add_option("--group-cap", s.group_cap, "Largest group enumerated")->capture_default_str();
    nichols->add_option("--max-degree", s.max_degree, "Largest degree")->capture_default_str();
    nichols->add_option("--row-budget", s.row_budget, "Largest D^k attempted")->capture_default_str();
    nichols->add_option("--exact-block-cap", s.exact_block_cap, "Largest block ranked exactly")->capture_default_str();
    nichols->add_flag("--force-modp", s.force_modp, "Rank every block modulo two primes");
    nichols->add_option("--primes", s.primes, "Two primes p = 1 mod N for the mod-p path")->expected(2);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert data of a quadratic algebra");
    std::string algebra = "fk", form = "ordered", signs_path;
    int h_n = 0, alpha = 1, beta = 1, gamma = -1, lambda = 1;
    common(hilbert);
    hilbert->add_option("--algebra", algebra, "fk | A")->capture_default_str();
    hilbert->add_option("--n", h_n, "Number of points");
    hilbert->add_option("--cap", s.degree_cap, "Degree cap (default 12, 8 or 6 by n)");
    hilbert->add_option("--form", form, "ordered | all (fk only)")->capture_default_str();
    hilbert->add_option("--signs", signs_path, "JSON sign tables for A");
    hilbert->add_option("--alpha", alpha, "Constant alpha for A without --signs")->capture_default_str();
    hilbert->add_option("--beta", beta, "Constant beta for A without --signs")->capture_default_str();
    hilbert->add_option("--gamma", gamma, "Constant gamma for A without --signs")->capture_default_str();
    hilbert->add_option("--lambda", lambda, "Constant lambda for A without --signs")->capture_default_str();

    auto* info = app.add_subcommand("class-info", "Class and centralizer data of an element");
    std::string ci_group, ci_element;
    common(info);
    info->add_option("--group", ci_group, "Bn or Sn")->required();
    info->add_option("--element", ci_element, "Element")->required();
    info->add_option("--group-cap", s.group_cap, "Largest group enumerated")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        apply_config(s, active);

        if (active == verify) {
            if (list) {
                for (const auto& id : lemma_ids()) std::cout << id << "\n";
                return 0;
            }
            VerifyConfig cfg;
            cfg.seed = s.seed;
            cfg.samples = s.samples;
            cfg.step_budget = s.step_budget;
            cfg.group_cap = s.group_cap;
            cfg.inject_fault = inject;
            const auto reports = verify_lemmas(ids, cfg);
            emit(s, render_reports(reports, parse_format(s.format), s.include_runtime));
            std::vector<Status> st;
            for (const auto& r : reports) st.push_back(r.status);
            return exit_code(st);
        }
        if (active == scan) {
            ScanConfig cfg{s.seed, s.step_budget, s.group_cap};
            const auto rows = scan_classes(scan_n, cfg);
            emit(s, render_scan(rows, parse_format(s.format)));
            std::vector<Status> st;
            for (const auto& r : rows) st.push_back(r.outcome == ScanOutcome::Inconclusive ? Status::Inconclusive : Status::Pass);
            return exit_code(st);
        }
        if (active == typed) {
            const Group g = parse_group(td_group, 0);
            const auto x = parse_element(g, td_element);
            const FiniteRack rack = FiniteRack::from_class(conjugacy_class(g, x, EnumerationBudget{s.group_cap}));
            SearchConfig cfg;
            cfg.seed = s.seed;
            cfg.step_budget = s.step_budget;
            cfg.budget = EnumerationBudget{s.group_cap};
            const auto res = find_type_d_certificate(rack, cfg);
            json out{{"group", g.name()},
                     {"class", g.format(x)},
                     {"class_size", rack.size()},
                     {"strategy", res.strategy},
                     {"attempted", res.attempted},
                     {"steps", res.steps},
                     {"notes", res.notes},
                     {"seed", s.seed},
                     {"step_budget", s.step_budget}};
            const bool ok = res.certificate && verify_certificate(rack, *res.certificate).ok;
            out["status"] = ok ? "certificate" : res.status == SearchStatus::Exhausted ? "no-witness-found" : "budget-exhausted";
            if (ok) out["certificate"] = to_json(rack, *res.certificate);
            emit(s, dump(out));
            return ok ? 0 : 2;
        }
        if (active == braid) {
            const auto m = build_module(braid_args, s);
            const auto c = braiding(m);
            json entries = json::array();
            for (std::size_t col = 0; col < c.cols.size(); ++col)
                for (const auto& [row, v] : c.cols[col]) entries.push_back({row, col, v.to_string()});
            const auto be = check_braid_equation(c);
            json basis = json::array();
            for (std::size_t i = 0; i < m.classes(); ++i) basis.push_back(m.cls->group.format(m.cls->elements[i]));
            emit(s, dump({{"dim", c.dim},
                          {"class", basis},
                          {"rep_degree", m.rep_degree()},
                          {"conductor", c.conductor()},
                          {"integral", c.integral()},
                          {"braid_equation", be.ok},
                          {"entries", entries}}));
            return be.ok ? 0 : 1;
        }
        if (active == nichols) {
            const auto m = build_module(nichols_args, s);
            NicholsOptions opt;
            opt.row_budget = s.row_budget;
            opt.exact_block_cap = s.exact_block_cap;
            opt.force_modp = s.force_modp;
            opt.primes = s.primes;
            const auto d = nichols_graded_dim(braiding(m), s.max_degree, opt);
            emit(s, dump({{"dims", d.dims},
                          {"total", d.total()},
                          {"semantics", d.semantics == DimSemantics::Exact ? "exact" : "mod-p"},
                          {"primes", d.primes},
                          {"budget_stop", d.budget_stop},
                          {"max_degree", s.max_degree}}));
            return 0;
        }
        if (active == hilbert) {
            NCPresentation p;
            if (algebra == "fk") {
                if (h_n < 2) throw std::invalid_argument("--n must be at least 2");
                if (form != "ordered" && form != "all") throw std::invalid_argument("unknown form: " + form);
                p = fk_presentation(h_n, form == "ordered" ? FkForm::Ordered : FkForm::AllPairs);
            } else if (algebra == "A") {
                SignTables t = signs_path.empty() ? SignTables::constant(h_n, alpha, beta, gamma, lambda)
                                                  : read_sign_tables(signs_path);
                if (!signs_path.empty() && h_n != 0 && h_n != t.n) throw std::invalid_argument("--n disagrees with the sign file");
                h_n = t.n;
                if (h_n < 2) throw std::invalid_argument("--n must be at least 2");
                p = a_algebra_presentation(t);
            } else {
                throw std::invalid_argument("unknown algebra: " + algebra);
            }
            const int cap = s.degree_cap > 0 ? s.degree_cap : default_degree_cap(h_n);
            const auto h = hilbert_series(p, cap);
            emit(s, dump(hilbert_json(h, p, cap)));
            return h.terminated ? 0 : 2;
        }
        if (active == info) {
            const Group g = parse_group(ci_group, 0);
            const auto x = parse_element(g, ci_element);
            const auto cls = conjugacy_class(g, x, EnumerationBudget{s.group_cap});
            const auto cent = centralizer(g, x, EnumerationBudget{s.group_cap});
            json gens = json::array();
            for (const auto& h : cent.generators) gens.push_back(g.format(h));
            emit(s, dump({{"group", g.name()},
                          {"element", g.format(x)},
                          {"signed_type", signed_cycle_type(x).to_string()},
                          {"cycle_type", cycle_type_label(x.perm())},
                          {"order", x.order()},
                          {"class_size", cls.size()},
                          {"centralizer_order", cent.order()},
                          {"group_order", g.order_exact()},
                          {"orbit_stabilizer", cls.size() * cent.order() == g.order_exact()},
                          {"class_representative", g.format(cls.elements.front())},
                          {"centralizer_generators", gens}}));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
