#include "distill/cli.hpp"

#include "distill/app_estimator.hpp"
#include "distill/errors.hpp"
#include "distill/format.hpp"
#include "distill/json_io.hpp"
#include "distill/pipeline_sim.hpp"
#include "distill/reference_data.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace distill
{

namespace
{

struct SchemaError : std::runtime_error
{
    std::string field;

    SchemaError(std::string f, const std::string& msg)
        : std::runtime_error(msg), field(std::move(f))
    {
    }
};

// Strict view of one JSON object: every key must be consumed.
class Fields
{
public:
    Fields(const Json& j, std::string path)
        : j_(j), path_(std::move(path))
    {
        if (!j_.is_object())
            throw SchemaError(path_.empty() ? "$" : path_, "expected an object");
    }

    std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return j_.contains(key); }

    const Json& raw(const std::string& key)
    {
        if (!j_.contains(key))
            throw SchemaError(at(key), "required field missing");
        used_.insert(key);
        return j_.at(key);
    }

    int integer(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_number_integer())
            throw SchemaError(at(key), "expected an integer");
        return v.get<int>();
    }

    std::int64_t big_integer(const std::string& key)
    {
        const auto& v = raw(key);
        if (v.is_number_integer())
            return v.get<std::int64_t>();
        if (v.is_number_float() && v.get<double>() >= 1.0 && v.get<double>() <= 9e15 &&
            v.get<double>() == static_cast<double>(static_cast<std::int64_t>(v.get<double>())))
            return static_cast<std::int64_t>(v.get<double>());
        throw SchemaError(at(key), "expected an integer");
    }

    double number(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_number())
            throw SchemaError(at(key), "expected a number");
        return v.get<double>();
    }

    bool boolean(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_boolean())
            throw SchemaError(at(key), "expected true or false");
        return v.get<bool>();
    }

    std::string text(const std::string& key)
    {
        const auto& v = raw(key);
        if (!v.is_string())
            throw SchemaError(at(key), "expected a string");
        return v.get<std::string>();
    }

    IntRange range(const std::string& key)
    {
        const auto& v = raw(key);
        if (v.is_number_integer())
            return {v.get<int>(), v.get<int>()};
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw SchemaError(at(key), "expected an integer or [lo, hi]");
        IntRange r{v[0].get<int>(), v[1].get<int>()};
        if (r.lo > r.hi)
            throw SchemaError(at(key), "range is empty (lo > hi)");
        if (r.lo < 1)
            throw SchemaError(at(key), "distances must be >= 1");
        return r;
    }

    void finish() const
    {
        for (const auto& [k, _] : j_.items())
            if (!used_.count(k))
                throw SchemaError(at(k), "unknown field");
    }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> used_;
};

template <class Fn>
auto
guarded(const std::string& field, Fn fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(field, e.what());
    }
}

ErrorModelOptions
read_options(Fields& f)
{
    ErrorModelOptions o;
    if (f.has("clifford_faults"))
        o.clifford_faults = f.boolean("clifford_faults");
    return o;
}

double
read_p_phys(Fields& f)
{
    const double p = f.number("p_phys");
    guarded(f.at("p_phys"), [&] { return PhysicalErrorRate(p).value(); });
    return p;
}

Protocol
read_protocol(Fields& f)
{
    const auto name = f.text("protocol");
    return guarded(f.at("protocol"), [&] { return parse_protocol(name); });
}

FactoryConfig
read_factory_config(Fields& f)
{
    const auto proto = read_protocol(f);
    const int dx = f.integer("d_x");
    const int dz = f.integer("d_z");
    std::optional<int> h;
    if (f.has("h")) {
        if (proto != Protocol::zero_plus_one)
            throw SchemaError(f.at("h"), "h is pinned to d_x for " + to_string(proto));
        h = f.integer("h");
    }
    FactoryConfig c{proto, make_params(proto, dx, dz, h), std::nullopt};
    if (f.has("first_level")) {
        Fields fl(f.raw("first_level"), f.at("first_level"));
        c.first_level = make_params(Protocol::fifteen_to_one, fl.integer("d_x"), fl.integer("d_z"));
        fl.finish();
    }
    guarded(f.at("protocol"), [&] {
        validate_config(c);
        return 0;
    });
    return c;
}

ProtocolSweep
read_protocol_sweep(Fields& f)
{
    ProtocolSweep ps;
    ps.protocol = read_protocol(f);
    ps.d_x = f.range("d_x");
    ps.d_z = f.range("d_z");
    if (ps.protocol == Protocol::zero_plus_one)
        ps.h = f.range("h");
    else if (f.has("h"))
        throw SchemaError(f.at("h"), "h is pinned to d_x for " + to_string(ps.protocol));
    if (ps.protocol == Protocol::fifteen_squared) {
        ps.first_d_x = f.range("first_d_x");
        ps.first_d_z = f.range("first_d_z");
    } else if (f.has("first_d_x") || f.has("first_d_z")) {
        throw SchemaError(f.at("first_d_x"), "first-level ranges only apply to 15to1x15to1");
    }
    return ps;
}

const ReferenceRow&
read_reference(Fields& f, const std::string& key)
{
    const auto id = f.text(key);
    return guarded(f.at(key), [&]() -> const ReferenceRow& { return reference_row(id); });
}

SweepConfig
read_sweep_config(Fields& top, std::vector<const ReferenceRow*>& refs)
{
    SweepConfig sc;
    sc.p_phys = read_p_phys(top);
    sc.options = read_options(top);
    const auto& list = top.raw("protocols");
    if (!list.is_array() || list.empty())
        throw SchemaError(top.at("protocols"), "expected a non-empty array");
    for (std::size_t i = 0; i < list.size(); i++) {
        Fields f(list[i], top.at("protocols") + "[" + std::to_string(i) + "]");
        sc.protocols.push_back(read_protocol_sweep(f));
        f.finish();
    }
    if (top.has("references")) {
        const auto& r = top.raw("references");
        if (!r.is_array())
            throw SchemaError(top.at("references"), "expected an array of row ids");
        for (std::size_t i = 0; i < r.size(); i++) {
            const std::string where = top.at("references") + "[" + std::to_string(i) + "]";
            if (!r[i].is_string())
                throw SchemaError(where, "expected a row id");
            refs.push_back(guarded(where, [&] { return &reference_row(r[i].get<std::string>()); }));
        }
    }
    return sc;
}

std::string
dump(const Json& j)
{
    return j.dump(2) + "\n";
}

////////////////////////////////////////////////////////////

std::string
cmd_factory(const Json& root, const RunConfig& rc)
{
    Fields f(root, "");
    const double p = read_p_phys(f);
    const auto opts = read_options(f);
    const auto cfg = read_factory_config(f);
    f.finish();

    const auto a = assess_factory(cfg, PhysicalErrorRate(p), opts);
    if (rc.format == "csv")
        return csv_header() + "\n" + csv_row(make_point(cfg, a.performance)) + "\n";

    const double first_accept = a.first_level ? a.first_level->p_accept : 1.0;
    const auto sched = build_schedule(cfg.protocol);
    Json j;
    j["command"] = "factory";
    j["p_phys"] = round_sig6(p);
    j["clifford_faults"] = opts.clifford_faults;
    j["assessment"] = to_json(a);
    j["layout"] = to_json(build_layout(cfg, first_accept));
    j["schedule"] = to_json(sched);
    j["schedule_violations"] = Json::array();
    for (const auto& v : validate_schedule(sched))
        j["schedule_violations"].push_back(Json{{"round", v.round}, {"constraint", v.constraint}, {"detail", v.detail}});
    return dump(j);
}

std::string
points_csv(const std::vector<ParetoPoint>& pts)
{
    std::string s = csv_header() + "\n";
    for (const auto& p : pts)
        s += csv_row(p) + "\n";
    return s;
}

Json
points_json(const std::vector<ParetoPoint>& pts)
{
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(to_json(p));
    return a;
}

std::string
cmd_sweep(const Json& root, const RunConfig& rc, std::ostream& err, unsigned workers, bool frontier_only)
{
    Fields f(root, "");
    std::vector<const ReferenceRow*> refs;
    const auto sc = read_sweep_config(f, refs);
    f.finish();

    auto res = guarded("protocols", [&] { return sweep(sc, workers); });
    for (const auto* r : refs)
        res.points.push_back(make_point(*r));

    if (!frontier_only) {
        err << "sweep: " << res.points.size() << " points, " << res.invalid.size() << " invalid combinations\n";
        if (rc.format == "csv")
            return points_csv(res.points);
        Json j;
        j["command"] = "sweep";
        j["p_phys"] = round_sig6(sc.p_phys);
        j["clifford_faults"] = sc.options.clifford_faults;
        j["points"] = points_json(res.points);
        j["invalid_count"] = res.invalid.size();
        j["invalid"] = Json::array();
        for (const auto& inv : res.invalid)
            j["invalid"].push_back(Json{{"provenance", provenance(inv.config)}, {"reason", inv.reason}});
        return dump(j);
    }

    // one frontier per protocol, references grouped by their protocol name
    std::vector<std::pair<std::string, std::vector<ParetoPoint>>> groups;
    for (auto& p : res.points) {
        const std::string key = p.config ? to_string(p.config->protocol) : "reference " + reference_row(p.reference_id).protocol;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end())
            groups.push_back({key, {std::move(p)}});
        else
            it->second.push_back(std::move(p));
    }
    std::vector<ParetoPoint> all;
    Json fronts = Json::array();
    for (auto& [key, pts] : groups) {
        auto front = pareto_front(std::move(pts));
        fronts.push_back(Json{{"group", key}, {"points", points_json(front)}});
        all.insert(all.end(), front.begin(), front.end());
    }
    if (rc.format == "csv")
        return points_csv(all);
    Json j;
    j["command"] = "pareto";
    j["p_phys"] = round_sig6(sc.p_phys);
    j["clifford_faults"] = sc.options.clifford_faults;
    j["fronts"] = fronts;
    return dump(j);
}

std::string
cmd_compare(const Json& root, const RunConfig& rc, unsigned workers)
{
    Fields f(root, "");
    const double p = read_p_phys(f);
    const auto opts = read_options(f);
    const auto& w = f.raw("window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number() ||
        !(w[0].get<double>() > 0.0) || !(w[0].get<double>() <= w[1].get<double>()))
        throw SchemaError(f.at("window"), "expected [lo, hi] with 0 < lo <= hi");
    const double lo = w[0].get<double>();
    const double hi = w[1].get<double>();

    auto front_of = [&](Fields& sf) -> std::pair<std::string, std::vector<ParetoPoint>> {
        if (sf.has("reference")) {
            const auto& row = read_reference(sf, "reference");
            return {"reference " + row.id, {make_point(row)}};
        }
        SweepConfig sc;
        sc.p_phys = p;
        sc.options = opts;
        sc.protocols.push_back(read_protocol_sweep(sf));
        auto res = guarded(sf.at("protocol"), [&] { return sweep(sc, workers); });
        return {to_string(sc.protocols[0].protocol), pareto_front(std::move(res.points))};
    };

    Fields sf(f.raw("subject"), "subject");
    const auto subject = front_of(sf);
    sf.finish();

    const auto& bl = f.raw("baselines");
    if (!bl.is_array() || bl.empty())
        throw SchemaError(f.at("baselines"), "expected a non-empty array");
    std::vector<std::pair<std::string, std::vector<ParetoPoint>>> baselines;
    for (std::size_t i = 0; i < bl.size(); i++) {
        Fields bf(bl[i], "baselines[" + std::to_string(i) + "]");
        baselines.push_back(front_of(bf));
        bf.finish();
    }
    f.finish();

    std::vector<std::pair<std::string, Reduction>> out;
    for (const auto& [name, front] : baselines)
        out.push_back({name, reduction_between(subject.second, front, lo, hi)});

    if (rc.format == "csv") {
        std::string s = "subject,baseline,reduction,level,cost_subject,cost_baseline,levels_compared\n";
        for (const auto& [name, r] : out)
            s += subject.first + "," + name + "," + format_sci(r.value) + "," + format_sci(r.level) + "," +
                 format_sci(r.cost_a) + "," + format_sci(r.cost_b) + "," + std::to_string(r.levels_compared) + "\n";
        return s;
    }
    Json j;
    j["command"] = "compare";
    j["p_phys"] = round_sig6(p);
    j["clifford_faults"] = opts.clifford_faults;
    j["window"] = Json::array({round_sig6(lo), round_sig6(hi)});
    j["subject"] = subject.first;
    j["comparisons"] = Json::array();
    for (const auto& [name, r] : out) {
        Json c{{"baseline", name}};
        c.update(to_json(r));
        j["comparisons"].push_back(c);
    }
    return dump(j);
}

std::string
cmd_pipeline(const Json& root, const RunConfig& rc, unsigned workers)
{
    Fields f(root, "");
    double p_fail;
    if (f.has("p_fail") == f.has("p_phys"))
        throw SchemaError("p_fail", "give exactly one of p_fail or p_phys");
    if (f.has("p_fail")) {
        p_fail = f.number("p_fail");
        if (!(p_fail >= 0.0 && p_fail < 1.0))
            throw SchemaError(f.at("p_fail"), "p_fail must lie in [0, 1)");
    } else {
        p_fail = zero_level_failure_rate(PhysicalErrorRate(read_p_phys(f)));
    }
    const std::int64_t trials = f.big_integer("trials");
    if (trials < 1)
        throw SchemaError(f.at("trials"), "trials must be >= 1");
    TrialPolicy policy;
    if (f.has("round_cycles")) {
        policy.round_cycles = f.integer("round_cycles");
        if (policy.round_cycles < 0)
            throw SchemaError(f.at("round_cycles"), "round_cycles must be >= 0");
    }
    std::optional<std::uint64_t> seed = rc.seed;
    if (f.has("seed")) {
        const auto& s = f.raw("seed");
        if (!s.is_number_unsigned())
            throw SchemaError(f.at("seed"), "expected a non-negative integer");
        if (!seed)
            seed = s.get<std::uint64_t>();
    }
    f.finish();
    if (!seed)
        throw SchemaError("seed", "pipeline requires a seed (--seed or \"seed\")");

    const auto rep = simulate(policy, p_fail, static_cast<std::uint64_t>(trials), *seed, workers);
    if (rc.format == "csv") {
        return "generator,seed,trials,p_fail,retries,retry_rate,retry_rate_se,mean_extra_cycles,mean_extra_cycles_se\n" +
               rep.generator + "," + std::to_string(rep.seed) + "," + std::to_string(rep.trials) + "," +
               format_sci(rep.p_fail) + "," + std::to_string(rep.retries) + "," + format_sci(rep.retry_rate) + "," +
               format_sci(rep.retry_rate_se) + "," + format_sci(rep.mean_extra_cycles) + "," +
               format_sci(rep.mean_extra_cycles_se) + "\n";
    }
    Json j;
    j["command"] = "pipeline";
    j["round_cycles"] = policy.round_cycles;
    j["report"] = to_json(rep);
    j["joint_failure_4"] = round_sig6(joint_failure_probability(p_fail, 4));
    return dump(j);
}

Scenario
read_scenario(const Json& v)
{
    if (v.is_string()) {
        const auto name = v.get<std::string>();
        if (name == "low-noise")
            return scenario_low_noise();
        if (name == "high-noise")
            return scenario_high_noise();
        throw SchemaError("scenario", "unknown preset '" + name + "' (low-noise, high-noise)");
    }
    Fields f(v, "scenario");
    Scenario s;
    if (f.has("preset"))
        s = read_scenario(f.raw("preset"));
    if (f.has("M"))
        s.M = f.number("M");
    if (f.has("delta"))
        s.delta = f.number("delta");
    if (f.has("p_phys"))
        s.p_phys = f.number("p_phys");
    auto pair = [&](const std::string& key, int& a, int& b) {
        const auto& x = f.raw(key);
        if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() || !x[1].is_number_integer())
            throw SchemaError(f.at(key), "expected [w, h]");
        a = x[0].get<int>();
        b = x[1].get<int>();
    };
    if (f.has("sites"))
        pair("sites", s.sites_x, s.sites_y);
    if (f.has("arena"))
        pair("arena", s.arena_width, s.arena_height);
    if (f.has("pauli_terms"))
        s.pauli_terms = f.integer("pauli_terms");
    if (f.has("parallel_rotations"))
        s.parallel_rotations = f.integer("parallel_rotations");
    if (f.has("budget_clifford"))
        s.budget_clifford = f.number("budget_clifford");
    if (f.has("budget_magic"))
        s.budget_magic = f.number("budget_magic");
    if (f.has("feed_sides"))
        s.feed_sides = f.integer("feed_sides");
    f.finish();
    guarded("scenario", [&] {
        validate_scenario(s);
        return 0;
    });
    return s;
}

std::string
breakdown_table(const std::vector<AppEstimate>& es)
{
    std::ostringstream t;
    char line[256];
    std::snprintf(line, sizeof line, "%-48s %6s %10s %10s %12s %12s\n", "factory", "d", "factories", "p_out",
                  "factory_qb", "total_qb");
    t << line;
    for (const auto& e : es) {
        std::snprintf(line, sizeof line, "%-48s %6d %10d %10s %12lld %12lld\n", e.factory.label.c_str(), e.d,
                      e.n_factories, format_sci(e.factory.performance.p_out).c_str(),
                      static_cast<long long>(e.factory_qubits), static_cast<long long>(e.total_qubits));
        t << line;
    }
    return t.str();
}

std::string
cmd_app(const Json& root, const RunConfig& rc, std::ostream& err, unsigned workers)
{
    Fields f(root, "");
    const Scenario s = read_scenario(f.raw("scenario"));
    std::vector<DemandMode> modes;
    if (f.has("injection_variant")) {
        const auto m = f.text("injection_variant");
        if (m == "both")
            modes = {DemandMode::expected, DemandMode::deterministic};
        else
            modes = {guarded(f.at("injection_variant"), [&] { return parse_demand_mode(m); })};
    }

    const auto& list = f.raw("factories");
    if (!list.is_array() || list.empty())
        throw SchemaError(f.at("factories"), "expected a non-empty array");

    struct Entry
    {
        std::string kind;
        AppEstimate standard;
        std::vector<std::pair<DemandMode, AppEstimate>> variant;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < list.size(); i++) {
        Fields ff(list[i], "factories[" + std::to_string(i) + "]");
        std::optional<int> storage;
        if (ff.has("storage_patches")) {
            storage = ff.integer("storage_patches");
            if (*storage < 0)
                throw SchemaError(ff.at("storage_patches"), "must be >= 0");
        }
        const int kinds = ff.has("reference") + ff.has("modeled") + ff.has("config");
        if (kinds != 1)
            throw SchemaError(ff.at("reference"), "give exactly one of reference, modeled or config");

        Entry e;
        FactoryChoice choice;
        if (ff.has("reference")) {
            const auto& row = read_reference(ff, "reference");
            choice = {"reference " + row.id, reference_factory(row), storage.value_or(row.outputs_per_run)};
            e.kind = "reference";
            e.standard = estimate(s, choice);
        } else if (ff.has("config")) {
            Fields cf(ff.raw("config"), ff.at("config"));
            const auto opts = read_options(cf);
            const auto cfg = read_factory_config(cf);
            cf.finish();
            choice = {provenance(cfg), factory_performance(cfg, PhysicalErrorRate(s.p_phys), opts), storage.value_or(1)};
            e.kind = "config";
            e.standard = estimate(s, choice);
        } else {
            Fields mf(ff.raw("modeled"), ff.at("modeled"));
            SweepConfig sc;
            sc.p_phys = s.p_phys;
            sc.options = read_options(mf);
            sc.protocols.push_back(read_protocol_sweep(mf));
            mf.finish();
            auto res = guarded(ff.at("modeled"), [&] { return sweep(sc, workers); });
            e.kind = "modeled";
            e.standard = best_modeled_estimate(s, pareto_front(std::move(res.points)), storage.value_or(1));
            choice = e.standard.factory;
        }
        ff.finish();
        for (auto m : modes)
            e.variant.push_back({m, estimate_injection_variant(s, choice, m)});
        entries.push_back(std::move(e));
    }
    f.finish();

    std::vector<AppEstimate> table;
    for (const auto& e : entries)
        table.push_back(e.standard);
    err << breakdown_table(table);

    if (rc.format == "csv") {
        std::string out = "factory,kind,d,n_factories,storage_patches,p_out,qubits,cycles,p_accept,factory_qubits,total_qubits\n";
        for (const auto& e : entries) {
            const auto& a = e.standard;
            const auto& p = a.factory.performance;
            out += a.factory.label + "," + e.kind + "," + std::to_string(a.d) + "," + std::to_string(a.n_factories) + "," +
                   std::to_string(a.factory.storage_patches) + "," + format_sci(p.p_out) + "," +
                   std::to_string(p.physical_qubits) + "," + std::to_string(p.cycles_per_output) + "," +
                   format_sci(p.p_accept) + "," + std::to_string(a.factory_qubits) + "," +
                   std::to_string(a.total_qubits) + "\n";
        }
        return out;
    }

    Json j;
    j["command"] = "app";
    j["scenario"] = to_json(s);
    j["d"] = entries.front().standard.d;
    j["t_count"] = round_sig6(entries.front().standard.t_count);
    j["magic_budget"] = round_sig6(entries.front().standard.magic_budget);
    j["total_cycles"] = round_sig6(entries.front().standard.total_cycles);
    j["estimates"] = Json::array();
    for (const auto& e : entries) {
        Json x{{"kind", e.kind}};
        x.update(to_json(e.standard));
        if (!e.variant.empty()) {
            x["injection_variant"] = Json::array();
            for (const auto& [m, v] : e.variant) {
                Json y{{"demand_mode", to_string(m)}};
                y.update(to_json(v));
                x["injection_variant"].push_back(y);
            }
        }
        j["estimates"].push_back(x);
    }
    return dump(j);
}

std::string
dispatch(const RunConfig& rc, const Json& root, std::ostream& err, unsigned workers)
{
    if (rc.command == "factory")
        return cmd_factory(root, rc);
    if (rc.command == "sweep")
        return cmd_sweep(root, rc, err, workers, false);
    if (rc.command == "pareto")
        return cmd_sweep(root, rc, err, workers, true);
    if (rc.command == "compare")
        return cmd_compare(root, rc, workers);
    if (rc.command == "pipeline")
        return cmd_pipeline(root, rc, workers);
    if (rc.command == "app")
        return cmd_app(root, rc, err, workers);
    throw SchemaError("command", "unknown command '" + rc.command + "'");
}

int
report(std::ostream& err, int code, const std::string& kind, const std::string& field, const std::string& msg)
{
    Json j;
    j["error"] = kind;
    j["exit_code"] = code;
    if (!field.empty())
        j["field"] = field;
    j["message"] = msg;
    err << j.dump() << "\n";
    return code;
}

}  // namespace

int
run_text(const RunConfig& rc, const std::string& text, std::ostream& out, std::ostream& err, unsigned workers)
{
    std::string artifact;
    try {
        if (rc.format != "json" && rc.format != "csv")
            throw SchemaError("format", "expected json or csv");
        Json root;
        try {
            root = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw SchemaError("$", std::string("config is not valid JSON: ") + e.what());
        }
        artifact = dispatch(rc, root, err, workers);
    } catch (const SchemaError& e) {
        return report(err, EXIT_SCHEMA, "schema", e.field, e.what());
    } catch (const InfeasibleError& e) {
        return report(err, EXIT_INFEASIBLE, "infeasible", "", e.what());
    } catch (const std::invalid_argument& e) {
        return report(err, EXIT_SCHEMA, "schema", "", e.what());
    } catch (const Json::exception& e) {
        return report(err, EXIT_SCHEMA, "schema", "", e.what());
    }

    if (rc.output.empty() || rc.output == "-") {
        out << artifact;
        out.flush();
        return EXIT_OK;
    }
    std::ofstream f(rc.output, std::ios::binary | std::ios::trunc);
    if (!(f << artifact) || !f.flush())
        return report(err, EXIT_IO, "io", "output", "cannot write " + rc.output);
    return EXIT_OK;
}

int
run(const RunConfig& rc, std::ostream& out, std::ostream& err, unsigned workers)
{
    std::ifstream in(rc.input, std::ios::binary);
    if (!in)
        return report(err, EXIT_IO, "io", "input", "cannot read config file '" + rc.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return run_text(rc, ss.str(), out, err, workers);
}

}  // namespace distill
