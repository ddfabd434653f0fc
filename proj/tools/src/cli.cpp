#include "cli.hpp"

#include "report.hpp"

#include <coordctl/errors.hpp>
#include <coordctl/io.hpp>
#include <coordctl/supervisory.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace coordctl::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
    std::size_t cap = kDefaultDeterminizationCap;
    std::size_t bound = 6;
    unsigned threads = 1;
    bool json = false;

    std::string spec;
    std::string plant;
    std::string gen;
    std::string alphabets;
    std::string problem;
    std::string instance;
    std::string out;
    std::string report;
    std::string dot;
    std::vector<std::string> inputs;
    std::vector<std::string> plants;
    std::vector<std::string> supervisors;
    std::vector<std::string> coordinator_events;
    std::vector<std::string> target;
    std::vector<std::string> uncontrollable;
    bool uncontrollable_given = false;
    bool closed = false;
    std::size_t pool_limit = kDefaultPoolLimit;

    Limits limits() const {
        Limits l;
        l.determinization_cap = cap;
        l.threads = threads;
        return l;
    }
};

struct Context {
    Options& opt;
    std::ostream& out;

    void emit(const Json& j, const std::string& text) const {
        if (opt.json) {
            out << j.dump(2) << "\n";
        } else {
            out << text;
        }
    }
};

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

std::string quoted(const std::optional<Word>& w) {
    return w ? "'" + to_string(*w) + "'" : std::string("none");
}

EventSet resolve(const std::vector<std::string>& names, const EventSet& known, const std::string& what) {
    EventSet out;
    for (const auto& n : names) {
        const Event* e = known.find(n);
        if (e == nullptr) {
            throw InputError(what + " event '" + n + "' is unknown");
        }
        out.add(*e);
    }
    return out;
}

// Σu from --uncontrollable when given, otherwise from the event flags.
EventSet uncontrollable_of(const Options& opt, const EventSet& known) {
    if (!opt.uncontrollable_given) {
        return known.uncontrollable();
    }
    EventSet out;
    for (const auto& n : opt.uncontrollable) {
        out.add({n, false});
    }
    return out;
}

std::vector<Generator> read_all(const std::vector<std::string>& paths) {
    std::vector<Generator> out;
    for (const auto& p : paths) {
        out.push_back(read_generator(p));
    }
    return out;
}

EventSet union_of(const std::vector<Generator>& gs) {
    EventSet out;
    for (const auto& g : gs) {
        out = out.unite(g.alphabet());
    }
    return out;
}

void output_generator(const Context& ctx, const Generator& g) {
    if (ctx.opt.out.empty()) {
        ctx.out << serialize_generator(g);
        return;
    }
    write_generator(ctx.opt.out, g);
    Json j = generator_summary(g);
    ctx.emit(j, "wrote " + ctx.opt.out + " (" + std::to_string(g.num_states()) + " states, " +
                    std::to_string(g.num_transitions()) + " transitions)\n");
}

// Coordinator for a problem file: the explicit one, or one built by
// projection over the listed events plus the shared ones.
struct ProblemSetup {
    CoordinationProblem problem;
    EventSet all;
    EventSet sigma_k;
    Generator spec;
    Generator coordinator;
};

ProblemSetup setup_problem(const Options& opt) {
    ProblemSetup s;
    s.problem = read_problem(opt.problem);
    s.all = union_of(s.problem.plants);
    s.sigma_k = s.problem.coordinator_events;
    std::vector<EventSet> alphabets;
    for (const auto& p : s.problem.plants) {
        alphabets.push_back(p.alphabet());
    }
    s.sigma_k = s.sigma_k.unite(shared_events(alphabets));
    if (!s.problem.spec.alphabet().is_subset_of(s.all)) {
        throw InputError("specification events " + to_string(s.problem.spec.alphabet().minus(s.all)) +
                         " belong to no plant");
    }
    s.spec = with_alphabet(s.problem.spec, s.problem.spec.alphabet().unite(s.all));
    if (s.problem.coordinator) {
        s.coordinator = *s.problem.coordinator;
        s.sigma_k = s.coordinator.alphabet();
    } else {
        s.coordinator = build_coordinator(s.problem.plants, s.sigma_k, opt.limits());
    }
    return s;
}

// ---- check -----------------------------------------------------------------

int check_cd(const Context& ctx) {
    const Options& opt = ctx.opt;
    Generator k = read_generator(opt.spec);
    auto sigma = resolve_alphabets(read_alphabet_names(opt.alphabets), k.alphabet());
    EventSet sigma_k = resolve(opt.coordinator_events, unite_all(sigma), "coordinator");
    auto mode = opt.closed ? LanguageMode::Closed : LanguageMode::Marked;
    auto r = is_conditionally_decomposable(k, sigma, sigma_k, mode, opt.limits());
    Json j;
    j["cd"] = r.holds;
    j["mode"] = opt.closed ? "closed" : "marked";
    j["coordinator_events"] = names_json(sigma_k);
    j["counterexample"] = word_json(r.counterexample);
    j["counterexample_in_composition"] = !r.holds && r.counterexample_in_composition;
    std::string text = "cd: " + yes_no(r.holds);
    if (!r.holds) {
        text += " (counterexample " + quoted(r.counterexample) +
                (r.counterexample_in_composition ? ", in the composition only" : ", in K only") + ")";
    }
    ctx.emit(j, text + "\n");
    return kComputed;
}

int check_controllable(const Context& ctx) {
    const Options& opt = ctx.opt;
    Generator k = read_generator(opt.spec);
    Generator l = read_generator(opt.plant);
    EventSet all = k.alphabet().unite(l.alphabet());
    auto v = is_controllable(with_alphabet(k, all), with_alphabet(l, all), uncontrollable_of(opt, all),
                             opt.limits());
    std::string text = "controllable: " + yes_no(v.controllable);
    if (v.witness) {
        text += " (after '" + to_string(v.witness->prefix) + "' the plant allows " + v.witness->event + ")";
    }
    ctx.emit(to_json(v), text + "\n");
    return kComputed;
}

int check_cc(const Context& ctx) {
    auto s = setup_problem(ctx.opt);
    auto r = is_conditionally_controllable(s.spec, s.problem.plants, s.coordinator,
                                           uncontrollable_of(ctx.opt, s.all), ctx.opt.limits());
    Json j = to_json(r);
    j = Json{{"cc", r.holds}, {"coordinator_events", names_json(s.sigma_k)}, {"coordinator", j["coordinator"]},
             {"local", j["local"]}};
    std::ostringstream text;
    text << "cc: " << yes_no(r.holds) << "\n";
    text << "  coordinator level: " << yes_no(r.coordinator.controllable) << "\n";
    for (std::size_t i = 0; i < r.local.size(); ++i) {
        text << "  plant " << i + 1 << ": " << yes_no(r.local[i].controllable) << "\n";
    }
    ctx.emit(j, text.str());
    return kComputed;
}

int check_closed(const Context& ctx) {
    auto s = setup_problem(ctx.opt);
    auto r = is_conditionally_closed(s.spec, s.problem.plants, s.coordinator, ctx.opt.limits());
    Json j = to_json(r);
    j = Json{{"closed", r.holds}, {"coordinator_events", names_json(s.sigma_k)}, {"coordinator", j["coordinator"]},
             {"local", j["local"]}};
    std::ostringstream text;
    text << "closed: " << yes_no(r.holds) << "\n";
    text << "  coordinator level: " << yes_no(r.coordinator.closed);
    if (!r.coordinator.closed) {
        text << " (witness " << quoted(r.coordinator.witness) << ")";
    }
    text << "\n";
    for (std::size_t i = 0; i < r.local.size(); ++i) {
        text << "  plant " << i + 1 << ": " << yes_no(r.local[i].closed) << "\n";
    }
    ctx.emit(j, text.str());
    return kComputed;
}

int check_independent(const Context& ctx) {
    auto s = setup_problem(ctx.opt);
    auto r = conditionally_independent(s.problem.plants, s.coordinator);
    Json j{{"independent", r.holds}, {"offending", names_json(r.offending)}};
    ctx.emit(j, "independent: " + yes_no(r.holds) + (r.holds ? "" : " (offending " + to_string(r.offending) + ")") +
                    "\n");
    return kComputed;
}

int check_observer(const Context& ctx) {
    const Options& opt = ctx.opt;
    Generator g = read_generator(opt.gen);
    auto p = projection_of(g, resolve(opt.target, g.alphabet(), "target"));
    auto mode = opt.closed ? LanguageMode::Closed : LanguageMode::Marked;
    auto v = is_observer(g, p, mode, opt.limits());
    Json j = to_json(v);
    j["target"] = names_json(p.target);
    std::string text = "observer: " + yes_no(v.holds);
    if (!v.holds) {
        text += " (s " + quoted(v.s) + ", t " + quoted(v.t) + ")";
    }
    ctx.emit(j, text + "\n");
    return kComputed;
}

int check_lcc(const Context& ctx) {
    const Options& opt = ctx.opt;
    Generator g = read_generator(opt.gen);
    auto p = projection_of(g, resolve(opt.target, g.alphabet(), "target"));
    auto v = is_lcc(g, p, uncontrollable_of(opt, g.alphabet()), opt.limits());
    Json j = to_json(v);
    j["target"] = names_json(p.target);
    std::string text = "lcc: " + yes_no(v.holds);
    if (v.witness) {
        text += " (after '" + to_string(v.witness->s) + "', " + v.witness->event + " is reachable only via '" +
                to_string(v.witness->bypass) + "')";
    }
    ctx.emit(j, text + "\n");
    return kComputed;
}

int check_nonblocking(const Context& ctx) {
    Generator g = read_generator(ctx.opt.gen);
    auto w = blocking_witness(g);
    Json j{{"nonblocking", !w.has_value()}, {"witness", word_json(w)}};
    ctx.emit(j, "nonblocking: " + yes_no(!w) + (w ? " (blocks after " + quoted(w) + ")" : "") + "\n");
    return kComputed;
}

// ---- op --------------------------------------------------------------------

Generator single_input(const Options& opt) {
    if (opt.inputs.size() != 1) {
        throw InputError("expected exactly one --in generator");
    }
    return read_generator(opt.inputs.front());
}

int op_product(const Context& ctx) {
    auto gs = read_all(ctx.opt.inputs);
    if (gs.empty()) {
        throw InputError("op product needs at least one --in generator");
    }
    output_generator(ctx, sync_product(gs));
    return kComputed;
}

int op_project(const Context& ctx) {
    Generator g = single_input(ctx.opt);
    EventSet target = resolve(ctx.opt.target, g.alphabet(), "target");
    output_generator(ctx, project(g, {g.alphabet(), target}, ctx.opt.limits()));
    return kComputed;
}

int op_invproject(const Context& ctx) {
    Generator g = single_input(ctx.opt);
    EventSet full = g.alphabet();
    EventSet unc = uncontrollable_of(ctx.opt, full);
    for (const auto& n : ctx.opt.target) {
        if (!full.contains(n)) {
            full.add({n, !unc.contains(n)});
        }
    }
    output_generator(ctx, inverse_project(g, full));
    return kComputed;
}

int op_closure(const Context& ctx) {
    output_generator(ctx, prefix_closure(single_input(ctx.opt)));
    return kComputed;
}

int op_trim(const Context& ctx) {
    output_generator(ctx, trim(single_input(ctx.opt)));
    return kComputed;
}

int op_supc(const Context& ctx) {
    Generator k = read_generator(ctx.opt.spec);
    Generator l = read_generator(ctx.opt.plant);
    EventSet all = k.alphabet().unite(l.alphabet());
    output_generator(ctx, sup_c(with_alphabet(k, all), with_alphabet(l, all), uncontrollable_of(ctx.opt, all),
                                ctx.opt.limits()));
    return kComputed;
}

int op_words(const Context& ctx) {
    if (ctx.opt.bound > kMaxEnumerationBound) {
        throw InputError("--bound must not exceed " + std::to_string(kMaxEnumerationBound));
    }
    Generator g = single_input(ctx.opt);
    auto sample = enumerate_words(g, ctx.opt.bound, ctx.opt.limits());
    Json generated = Json::array();
    Json marked = Json::array();
    std::ostringstream text;
    text << "bound " << ctx.opt.bound << "\n";
    for (const auto& w : sample.generated) {
        generated.push_back(to_string(w));
    }
    for (const auto& w : sample.marked) {
        marked.push_back(to_string(w));
        text << (w.empty() ? "ε" : to_string(w)) << "\n";
    }
    Json j{{"bound", ctx.opt.bound}, {"generated", generated}, {"marked", marked}};
    ctx.emit(j, text.str());
    return kComputed;
}

// ---- coordinator -----------------------------------------------------------

int coordinator_build(const Context& ctx) {
    auto s = setup_problem(ctx.opt);
    output_generator(ctx, s.coordinator);
    return kComputed;
}

int coordinator_nonblocking(const Context& ctx) {
    const Options& opt = ctx.opt;
    auto sups = read_all(opt.supervisors);
    if (sups.size() < 2) {
        throw InputError("coordinator nonblocking needs at least two --supervisors");
    }
    EventSet all = union_of(sups);
    EventSet sigma_k = resolve(opt.coordinator_events, all, "coordinator");
    EventSet unc = uncontrollable_of(opt, all);
    auto r = nonblocking_coordinator(sups, sigma_k, unc, opt.limits());
    Json j = to_json(r);
    std::ostringstream text;
    text << "Σ0: " << to_string(r.sigma0) << "\n";
    text << "coordinator: " << r.coordinator.num_states() << " states\n";
    text << "composed nonblocking: " << yes_no(r.composed_nonblocking) << "\n";
    text << "composed controllable: " << yes_no(r.composed_controllable) << "\n";
    if (!opt.plants.empty()) {
        auto plants = read_all(opt.plants);
        auto thm = verify_nonblocking_theorem(sups, r, plants, unc, opt.limits());
        j["verification"] = to_json(thm);
        text << "nonconflicting: " << yes_no(thm.nonconflicting) << "\n";
        text << "controllable w.r.t. plant: " << yes_no(thm.controllable) << "\n";
    }
    if (!opt.out.empty()) {
        write_generator(opt.out, r.coordinator);
    }
    ctx.emit(j, text.str());
    return kComputed;
}

// ---- synth -----------------------------------------------------------------

std::vector<std::pair<std::string, const Generator*>> outputs_of(const SynthesisReport& r) {
    std::vector<std::pair<std::string, const Generator*>> out;
    out.emplace_back("Gk", &r.coordinator);
    out.emplace_back("supCk", &r.sup_ck);
    for (std::size_t i = 0; i < r.sup_cik.size(); ++i) {
        out.emplace_back("supC" + std::to_string(i + 1) + "k", &r.sup_cik[i]);
    }
    if (!r.refinement.empty()) {
        out.emplace_back("supCk_refined", &r.final_sup_ck());
        const auto& fin = r.final_sup_cik();
        for (std::size_t i = 0; i < fin.size(); ++i) {
            out.emplace_back("supC" + std::to_string(i + 1) + "k_refined", &fin[i]);
        }
    }
    if (r.composed) {
        out.emplace_back("composed", &*r.composed);
    }
    return out;
}

std::string synthesis_text(const SynthesisReport& r) {
    std::ostringstream os;
    os << "coordinator events: " << to_string(r.coordinator_events) << "\n";
    os << "cd: " << yes_no(r.cd.holds);
    if (r.cd_of_closure) {
        os << ", cd of closure: " << yes_no(r.cd_of_closure->holds);
    }
    os << "\nindependent: " << yes_no(r.independence.holds) << "\n";
    os << "supCk: " << r.sup_ck.num_states() << " states\n";
    for (std::size_t i = 0; i < r.sup_cik.size(); ++i) {
        os << "supC" << i + 1 << "k: " << r.sup_cik[i].num_states() << " states, P_k inclusion "
           << yes_no(r.coordinator_inclusion[i].holds) << "\n";
    }
    if (!r.refinement.empty()) {
        os << "refinement: " << r.refinement.size() << " pass(es), converged " << yes_no(r.refinement_converged)
           << "\n";
    }
    if (r.cond_controllable) {
        os << "conditionally controllable: " << yes_no(r.cond_controllable->holds) << "\n";
    }
    if (r.cond_closed) {
        os << "conditionally closed: " << yes_no(r.cond_closed->holds) << "\n";
    }
    if (r.composed) {
        os << "composed: " << r.composed->num_states() << " states, nonblocking " << yes_no(r.composed_nonblocking)
           << "\n";
    }
    for (const auto& n : r.notes) {
        os << "note: " << n << "\n";
    }
    return os.str();
}

int synth(const Context& ctx, const std::string& mode) {
    const Options& opt = ctx.opt;
    CoordinationProblem problem = read_problem(opt.problem);
    SynthesisReport r;
    if (mode == "solve") {
        r = solve(problem, opt.limits());
    } else {
        r = synthesize_star(problem, opt.limits());
        if (mode == "refine") {
            r = refine_doublestar(problem, std::move(r), problem.options.refine_limit, opt.limits());
        }
    }
    Json j = to_json(r);
    if (!opt.report.empty()) {
        write_text_file(opt.report, j.dump(2) + "\n");
    }
    for (const auto& [name, g] : outputs_of(r)) {
        if (!opt.dot.empty()) {
            write_text_file(fs::path(opt.dot) / (name + ".dot"), export_dot(*g));
        }
        if (!opt.out.empty()) {
            write_generator(fs::path(opt.out) / (name + ".json"), *g);
        }
    }
    ctx.emit(j, synthesis_text(r));
    return kComputed;
}

// ---- minext / gen ----------------------------------------------------------

int minext(const Context& ctx, bool exact) {
    const Options& opt = ctx.opt;
    Generator k = read_generator(opt.spec);
    auto sigma = resolve_alphabets(read_alphabet_names(opt.alphabets), k.alphabet());
    auto r = exact ? exact_min_extension(k, sigma, opt.limits(), opt.pool_limit)
                   : greedy_min_extension(k, sigma, opt.limits());
    std::ostringstream text;
    text << "extension: " << to_string(r.extension) << " (cardinality " << r.cardinality
         << (r.certified_minimal ? ", certified minimal" : "") << ")\n";
    ctx.emit(to_json(r), text.str());
    return kComputed;
}

int gen_setcover(const Context& ctx) {
    const Options& opt = ctx.opt;
    auto inst = read_setcover(opt.instance);
    auto reduced = setcover_to_cd(inst);
    fs::path dir(opt.out);
    write_generator(dir / "K.json", reduced.spec);
    Json alph = Json::array();
    for (const auto& a : reduced.alphabets) {
        alph.push_back(names_json(a));
    }
    write_text_file(dir / "alphabets.json", Json{{"alphabets", alph}}.dump(2) + "\n");
    Json j{{"spec", "K.json"},
           {"alphabets", "alphabets.json"},
           {"states", reduced.spec.num_states()},
           {"shared", names_json(shared_events(reduced.alphabets))},
           {"budget", inst.budget}};
    ctx.emit(j, "wrote K.json (" + std::to_string(reduced.spec.num_states()) + " states) and alphabets.json to " +
                    opt.out + "\n");
    return kComputed;
}

// ---- wiring ----------------------------------------------------------------

using Action = std::function<int(const Context&)>;

struct Leaf {
    CLI::App* app;
    Action action;
};

void add_common(CLI::App* app, Options& opt) {
    app->add_option("--cap", opt.cap, "Determinization cap (subset states)")->check(CLI::PositiveNumber);
    app->add_option("--bound", opt.bound, "Word length bound for enumeration");
    app->add_option("--threads", opt.threads, "Worker threads for independent sub-computations")
        ->check(CLI::Range(1u, 64u));
    app->add_flag("--json", opt.json, "Machine-readable JSON report");
}

CLI::Option* add_events(CLI::App* app, const std::string& flag, std::vector<std::string>& into,
                        const std::string& help) {
    return app->add_option(flag, into, help)->delimiter(',');
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Coordination supervisory control of discrete-event systems", "coordctl"};
    app.require_subcommand(1);
    std::vector<Leaf> leaves;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Action action) {
        CLI::App* sub = parent->add_subcommand(name, help);
        add_common(sub, opt);
        leaves.push_back({sub, std::move(action)});
        return sub;
    };
    auto unc = [&](CLI::App* sub) {
        add_events(sub, "--uncontrollable", opt.uncontrollable, "Uncontrollable events (default: event flags)")
            ->each([&](const std::string&) { opt.uncontrollable_given = true; });
    };

    CLI::App* check = app.add_subcommand("check", "Evaluate a property")->require_subcommand(1);
    {
        auto* s = leaf(check, "cd", "Conditional decomposability", check_cd);
        s->add_option("--spec", opt.spec, "Specification generator")->required();
        s->add_option("--alphabets", opt.alphabets, "Alphabet file")->required();
        add_events(s, "--coordinator-events", opt.coordinator_events, "Σk")->required();
        s->add_flag("--closed", opt.closed, "Check the prefix closure");

        s = leaf(check, "controllable", "Controllability of a specification", check_controllable);
        s->add_option("--spec", opt.spec)->required();
        s->add_option("--plant", opt.plant)->required();
        unc(s);

        for (auto [name, help, action] :
             std::vector<std::tuple<std::string, std::string, Action>>{
                 {"cc", "Conditional controllability", check_cc},
                 {"closed", "Conditional closedness", check_closed},
                 {"independent", "Conditional independence", check_independent}}) {
            s = leaf(check, name, help, action);
            s->add_option("--problem", opt.problem, "Problem file")->required();
            if (name == "cc") {
                unc(s);
            }
        }

        s = leaf(check, "observer", "Observer property of a projection", check_observer);
        s->add_option("--gen", opt.gen)->required();
        add_events(s, "--target", opt.target, "Observable events")->required();
        s->add_flag("--closed", opt.closed, "Use the generated language");

        s = leaf(check, "lcc", "Local control consistency of a projection", check_lcc);
        s->add_option("--gen", opt.gen)->required();
        add_events(s, "--target", opt.target, "Observable events")->required();
        unc(s);

        s = leaf(check, "nonblocking", "Nonblockingness", check_nonblocking);
        s->add_option("--gen", opt.gen)->required();
    }

    CLI::App* op = app.add_subcommand("op", "Generator operations")->require_subcommand(1);
    {
        auto* s = leaf(op, "product", "Synchronous product", op_product);
        s->add_option("--in", opt.inputs)->required();
        s->add_option("--out", opt.out);

        s = leaf(op, "project", "Natural projection", op_project);
        s->add_option("--in", opt.inputs)->required();
        add_events(s, "--target", opt.target, "Kept events")->required();
        s->add_option("--out", opt.out);

        s = leaf(op, "invproject", "Inverse projection", op_invproject);
        s->add_option("--in", opt.inputs)->required();
        add_events(s, "--events", opt.target, "Events to add")->required();
        unc(s);
        s->add_option("--out", opt.out);

        s = leaf(op, "closure", "Prefix closure", op_closure);
        s->add_option("--in", opt.inputs)->required();
        s->add_option("--out", opt.out);

        s = leaf(op, "trim", "Trim", op_trim);
        s->add_option("--in", opt.inputs)->required();
        s->add_option("--out", opt.out);

        s = leaf(op, "supc", "Supremal controllable sublanguage", op_supc);
        s->add_option("--spec", opt.spec)->required();
        s->add_option("--plant", opt.plant)->required();
        unc(s);
        s->add_option("--out", opt.out);

        s = leaf(op, "words", "Enumerate words up to --bound", op_words);
        s->add_option("--in", opt.inputs)->required();
    }

    CLI::App* coord = app.add_subcommand("coordinator", "Coordinator construction")->require_subcommand(1);
    {
        auto* s = leaf(coord, "build", "Coordinator for safety", coordinator_build);
        s->add_option("--problem", opt.problem)->required();
        s->add_option("--out", opt.out);

        s = leaf(coord, "nonblocking", "Coordinator for nonblockingness", coordinator_nonblocking);
        s->add_option("--supervisors", opt.supervisors)->required();
        add_events(s, "--coordinator-events", opt.coordinator_events, "Initial Σ0")->required();
        s->add_option("--plants", opt.plants, "Plants, to verify the theorem conclusions");
        unc(s);
        s->add_option("--out", opt.out);
    }

    CLI::App* sy = app.add_subcommand("synth", "Coordination control synthesis")->require_subcommand(1);
    for (const std::string mode : {"solve", "star", "refine"}) {
        auto* s = leaf(sy, mode, "Synthesis: " + mode, [mode](const Context& c) { return synth(c, mode); });
        s->add_option("--problem", opt.problem)->required();
        s->add_option("--report", opt.report, "Write the JSON report here");
        s->add_option("--dot", opt.dot, "Write DOT files into this directory");
        s->add_option("--out", opt.out, "Write generator JSON files into this directory");
    }

    CLI::App* mx = app.add_subcommand("minext", "Minimal coordinator alphabet extension")->require_subcommand(1);
    for (bool exact : {true, false}) {
        auto* s = leaf(mx, exact ? "exact" : "greedy", exact ? "Exhaustive by cardinality" : "Greedy heuristic",
                       [exact](const Context& c) { return minext(c, exact); });
        s->add_option("--spec", opt.spec)->required();
        s->add_option("--alphabets", opt.alphabets)->required();
        if (exact) {
            s->add_option("--pool-limit", opt.pool_limit, "Largest candidate pool searched");
        }
    }

    CLI::App* gen = app.add_subcommand("gen", "Instance generators")->require_subcommand(1);
    {
        auto* s = leaf(gen, "setcover", "Reduce a set cover instance", gen_setcover);
        s->add_option("--instance", opt.instance)->required();
        s->add_option("--out", opt.out)->required();
    }

    std::vector<const char*> argv{"coordctl"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kComputed : kInputError;
    }

    Context ctx{opt, out};
    try {
        for (const auto& l : leaves) {
            if (l.app->parsed()) {
                return l.action(ctx);
            }
        }
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const CancelledError& e) {
        err << "error: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no command\n";
    return kInputError;
}

} // namespace coordctl::cli
