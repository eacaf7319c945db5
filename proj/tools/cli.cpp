#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jacobi/average.hpp"
#include "jacobi/designs.hpp"
#include "jacobi/enumerators.hpp"
#include "jacobi/error.hpp"
#include "jacobi/polynomial_io.hpp"
#include "repro.hpp"

namespace jfenum {

namespace {

using namespace jacobi;
using nlohmann::json;

constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

struct Job {
    std::string c_path;
    std::string d_path;
    std::string w;
    std::optional<unsigned> w_weight;
    std::string format = "text";
    unsigned digits = 12;
    unsigned genus = 1;
    std::string side = "second";
    bool expand = false;
    std::string value_at;
    std::string method = "closed";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned weight = 0;
    unsigned t = 0;
    bool conjecture = false;
    std::string fixtures;
    unsigned spot_checks = 5;
    double tolerance = 0.12;
};

bool json_format(const Job& job) { return job.format == "json"; }

LinearCode resolve_code(const std::string& spec, const std::string& fixture_dir) {
    namespace fs = std::filesystem;
    if (fs::exists(spec)) return load_code(spec);
    for (const auto& candidate : {fs::path(fixture_dir) / spec, fs::path(fixture_dir) / (spec + ".json")})
        if (fs::exists(candidate)) return load_code(candidate.string());
    fail(ErrorKind::InvalidArgument, "code file not found: " + spec);
}

// "0110" (one symbol per character, q <= 10) or "0,1,10,3".
Word parse_word(const std::string& text, const LinearCode& code) {
    Word w;
    auto push = [&](long v) {
        if (v < 0 || v >= static_cast<long>(code.ring().order()))
            fail(ErrorKind::InvalidArgument, "w symbol " + std::to_string(v) + " outside " + code.ring().name());
        w.push_back(static_cast<Symbol>(v));
    };
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                fail(ErrorKind::InvalidArgument, "malformed w entry '" + item + "'");
            push(std::stol(item));
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') fail(ErrorKind::InvalidArgument, "malformed w '" + text + "'");
            push(ch - '0');
        }
    }
    if (w.size() != code.length())
        fail(ErrorKind::Mismatch, "w has length " + std::to_string(w.size()) + ", code has length " +
                                      std::to_string(code.length()));
    return w;
}

Word resolve_w(const Job& job, const LinearCode& code) {
    if (job.w_weight) {
        if (!job.w.empty()) fail(ErrorKind::InvalidArgument, "give either --w or --w-weight, not both");
        if (*job.w_weight > code.length()) fail(ErrorKind::InvalidArgument, "--w-weight exceeds the code length");
        return weight_mask(code.length(), *job.w_weight);
    }
    if (job.w.empty()) fail(ErrorKind::InvalidArgument, "this command needs --w or --w-weight");
    return parse_word(job.w, code);
}

std::string word_string(std::span<const Symbol> w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && w.size() > 0 && std::any_of(w.begin(), w.end(), [](Symbol x) { return x > 9; })) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string fmt_double(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

void emit_polynomial(const Job& job, std::ostream& out, const std::string& command, const RationalPolynomial& p) {
    if (json_format(job)) {
        json j;
        j["command"] = command;
        j["ring"] = p.ring().name();
        j["arity"] = p.arity();
        j["polynomial"] = to_json(p);
        out << j.dump(2) << '\n';
    } else {
        out << to_text(p) << '\n';
    }
}

struct Context {
    Job job;
    std::string fixture_dir;
    LinearCode c() const { return resolve_code(job.c_path, fixture_dir); }
    LinearCode d() const { return resolve_code(job.d_path, fixture_dir); }
};

int cmd_macwilliams(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    const LinearCode c = ctx.c();
    const Word w = resolve_w(job, c);
    RationalPolynomial transformed(c.ring(), 2);
    std::optional<RationalPolynomial> direct;
    std::string skipped;
    try {
        if (job.side == "single") {
            transformed = macwilliams_single(jacobi_polynomial(c, w, budget), c.size(budget));
            direct = jacobi_polynomial(dual(c, budget), w, budget);
        } else {
            if (job.d_path.empty()) fail(ErrorKind::InvalidArgument, "side " + job.side + " needs a second code");
            const LinearCode d = ctx.d();
            const RationalPolynomial p = joint_jacobi(c, d, w, budget);
            if (job.side == "second") {
                transformed = macwilliams_second(p, d.size(budget));
                direct = joint_jacobi(c, dual(d, budget), w, budget);
            } else if (job.side == "first") {
                transformed = macwilliams_first(p, c.size(budget));
                direct = joint_jacobi(dual(c, budget), d, w, budget);
            } else {
                transformed = macwilliams_both(p, saturating_mul(c.size(budget), d.size(budget)));
                direct = joint_jacobi(dual(c, budget), dual(d, budget), w, budget);
            }
        }
    } catch (const Error& e) {
        // The transform itself must succeed; only the cross-check may be skipped.
        if (e.kind() != ErrorKind::Budget || transformed.is_zero()) throw;
        skipped = e.what();
    }
    const char* verdict = !direct ? "UNCHECKED" : (*direct == transformed ? "EQUAL" : "UNEQUAL");
    if (json_format(job)) {
        json j;
        j["command"] = "macwilliams";
        j["side"] = job.side;
        j["w"] = word_string(w);
        j["transform"] = to_json(transformed);
        j["direct"] = direct ? to_json(*direct) : json(nullptr);
        j["verdict"] = verdict;
        if (!skipped.empty()) j["skipped"] = skipped;
        out << j.dump(2) << '\n';
    } else {
        out << "transform:\n" << to_text(transformed) << '\n';
        if (direct)
            out << "direct:\n" << to_text(*direct) << '\n';
        else
            out << "direct: skipped (" << skipped << ")\n";
        out << verdict << '\n';
    }
    return direct && *direct != transformed ? kVerdictFailed : 0;
}

int cmd_avg_joint_jacobi(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    const LinearCode c = ctx.c();
    const LinearCode d = ctx.d();
    const Word w = resolve_w(job, c);
    if (job.expand && !job.value_at.empty()) fail(ErrorKind::InvalidArgument, "--expand and --value-at are exclusive");
    if (job.value_at.empty()) {
        emit_polynomial(job, out, "avg-joint-jacobi", avg_joint_jacobi(c, d, w, budget));
        return 0;
    }
    EvaluationPoint<Rational> point;
    if (job.value_at == "remark51")
        point = intersection_point(c.ring());
    else if (job.value_at == "ones")
        point = constant_point(c.ring(), 3, Rational(1));
    else
        fail(ErrorKind::InvalidArgument, "--value-at takes remark51 or ones, got '" + job.value_at + "'");
    const Rational v = evaluate_avg_joint_jacobi(c, d, w, point, budget);
    if (json_format(job)) {
        json j{{"command", "avg-joint-jacobi"}, {"point", job.value_at}, {"value", v.to_string()},
               {"decimal", to_decimal(v, job.digits)}};
        out << j.dump(2) << '\n';
    } else {
        out << v.to_string() << "  " << to_decimal(v, job.digits) << '\n';
    }
    return 0;
}

int cmd_delta(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    const LinearCode c = ctx.c();
    const LinearCode d = ctx.d();
    const Word w = resolve_w(job, c);
    const PaperRow* paper = c.ring().order() == 2 ? find_paper_row(c.name(), d.name(), weight(w)) : nullptr;

    AverageResult r;
    if (job.method == "closed") {
        r.value = avg_jacobi_intersection(c, d, w, budget);
    } else if (job.method == "brute") {
        r.value = brute_average_intersection(c, d, w, budget);
        r.provenance = Provenance::Brute;
    } else {
        r = monte_carlo_delta(c, d, w, job.samples, job.seed, budget);
    }

    bool match = true;
    if (paper) {
        if (r.monte_carlo) {
            const double diff = std::abs(r.monte_carlo->mean - parse_decimal(paper->printed).to_double());
            match = diff <= 3 * r.monte_carlo->standard_error();
        } else {
            match = printed_match(r.value, paper->printed);
        }
    }
    const char* verdict = match ? "MATCH" : "MISMATCH";

    if (json_format(job)) {
        json j;
        j["command"] = "delta";
        j["C"] = c.name();
        j["D"] = d.name();
        j["w"] = word_string(w);
        j["weight"] = weight(w);
        j["method"] = job.method;
        j["decimal"] = to_decimal(r.value, job.digits);
        if (r.monte_carlo) {
            j["mean"] = r.monte_carlo->mean;
            j["standard_error"] = r.monte_carlo->standard_error();
            j["samples"] = r.monte_carlo->samples;
            j["seed"] = r.monte_carlo->seed;
        } else {
            j["value"] = r.value.to_string();
        }
        j["paper"] = paper ? json(paper->printed) : json(nullptr);
        if (paper) j["verdict"] = verdict;
        out << j.dump(2) << '\n';
    } else {
        if (r.monte_carlo)
            out << to_decimal(r.value, job.digits) << "  se:" << fmt_double(r.monte_carlo->standard_error(), 6)
                << "  samples:" << r.monte_carlo->samples << "  seed:" << r.monte_carlo->seed;
        else
            out << r.value.to_string() << "  " << to_decimal(r.value, job.digits);
        if (paper) out << "  paper:" << paper->printed << "  " << verdict;
        out << '\n';
    }
    return match ? 0 : kVerdictFailed;
}

json design_json(unsigned weight_class, const DesignReport& r) {
    return json{{"weight", weight_class},
                {"t", r.t},
                {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
                {"min", r.min_cover},
                {"max", r.max_cover},
                {"blocks", r.blocks}};
}

std::string design_text(unsigned weight_class, const DesignReport& r) {
    std::ostringstream s;
    s << "weight " << weight_class << "  t " << r.t << "  blocks " << r.blocks << "  lambda "
      << (r.lambda ? std::to_string(*r.lambda) : std::string("none")) << "  min " << r.min_cover << "  max "
      << r.max_cover;
    return s.str();
}

int cmd_design_check(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    const LinearCode c = ctx.c();
    const DesignReport r = check_design(supports(c, job.weight, budget), job.t, budget);
    if (json_format(job))
        out << design_json(job.weight, r).dump(2) << '\n';
    else
        out << design_text(job.weight, r) << '\n';
    return 0;
}

int cmd_homogeneous(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const HomogeneityReport h = check_homogeneous(ctx.c(), job.t, Budget::from_env());
    if (json_format(job)) {
        json classes = json::array();
        for (const auto& c : h.classes) classes.push_back(design_json(c.weight, c.report));
        out << json{{"t", job.t}, {"homogeneous", h.homogeneous}, {"classes", classes}}.dump(2) << '\n';
    } else {
        for (const auto& c : h.classes) out << design_text(c.weight, c.report) << '\n';
        out << "homogeneous: " << (h.homogeneous ? "true" : "false") << '\n';
    }
    return 0;
}

std::uint64_t spot_seed(std::size_t row) { return 0x5eed0000u + row; }

int cmd_repro(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    FixtureSet fixtures(job.fixtures.empty() ? ctx.fixture_dir : job.fixtures);
    json rows = json::array();
    bool all_match = true;
    if (!json_format(job))
        out << pad("pair", 14) << pad("wt", 4) << pad("exact", 22) << pad("decimal", 20) << pad("paper", 16)
            << pad("match", 10) << "class-check\n";
    const auto& table = paper_rows();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const PaperRow& row = table[i];
        const LinearCode& c = fixtures.get(row.c_fixture);
        const LinearCode& d = fixtures.get(row.d_fixture);
        const Rational v = avg_jacobi_intersection(c, d, weight_mask(c.length(), row.weight), budget);
        const bool match = printed_match(v, row.printed);
        all_match = all_match && match;
        unsigned agree = 0;
        const auto masks = random_masks(c.length(), row.weight, job.spot_checks, spot_seed(i));
        for (const auto& m : masks) agree += avg_jacobi_intersection(c, d, m, budget) == v;
        const std::string pair = row.c_label + "," + row.d_label;
        const std::string check = std::to_string(agree) + "/" + std::to_string(masks.size());
        if (json_format(job)) {
            rows.push_back(json{{"C", row.c_label},
                                {"D", row.d_label},
                                {"C_fixture", row.c_fixture},
                                {"D_fixture", row.d_fixture},
                                {"weight", row.weight},
                                {"value", v.to_string()},
                                {"decimal", to_decimal(v, job.digits)},
                                {"paper", row.printed},
                                {"match", match},
                                {"class_check", check}});
        } else {
            out << pad(pair, 14) << pad(std::to_string(row.weight), 4) << pad(v.to_string(), 22)
                << pad(to_decimal(v, job.digits), 20) << pad(row.printed, 16) << pad(match ? "MATCH" : "MISMATCH", 10)
                << check << '\n';
        }
    }
    if (json_format(job)) out << rows.dump(2) << '\n';
    return all_match ? 0 : kVerdictFailed;
}

int cmd_conjecture(const Context& ctx, std::ostream& out) {
    const Job& job = ctx.job;
    const Budget budget = Budget::from_env();
    FixtureSet fixtures(job.fixtures.empty() ? ctx.fixture_dir : job.fixtures);
    struct Pair {
        const char* c_label;
        const char* d_label;
        const char* c;
        const char* d;
    };
    const Pair pairs[] = {
        {"e8", "e8", "e8", "e8"},
        {"e8^2", "e8^2", "e8x2", "e8x2"},
        {"d16+", "d16+", "d16plus", "d16plus"},
        {"d16+", "e8^2", "d16plus", "e8x2"},
        {"g24", "g24", "g24", "g24"},
        {"d24+", "d24+", "d12x2plus", "d12x2plus"},
        {"g24", "d24+", "g24", "d12x2plus"},
    };
    const long targets[] = {6, 6, 8, 12, 20, 36};
    json rows = json::array();
    if (!json_format(job))
        out << pad("pair", 14) << pad("n", 4) << pad("wt", 4) << pad("exact", 24) << pad("decimal", 20)
            << pad("target", 8) << pad("distance", 18) << "near\n";
    for (const auto& pr : pairs) {
        const LinearCode& c = fixtures.get(pr.c);
        const LinearCode& d = fixtures.get(pr.d);
        for (unsigned wt = 0; wt <= 5; ++wt) {
            const Rational v = avg_jacobi_intersection(c, d, weight_mask(c.length(), wt), budget);
            const Rational dist = abs(v - Rational(targets[wt]));
            const bool near = dist.to_double() <= job.tolerance;
            const std::string pair = std::string(pr.c_label) + "," + pr.d_label;
            if (json_format(job)) {
                rows.push_back(json{{"C", pr.c_label},
                                    {"D", pr.d_label},
                                    {"n", c.length()},
                                    {"weight", wt},
                                    {"value", v.to_string()},
                                    {"decimal", to_decimal(v, job.digits)},
                                    {"target", targets[wt]},
                                    {"distance", to_decimal(dist, job.digits)},
                                    {"near", near}});
            } else {
                out << pad(pair, 14) << pad(std::to_string(c.length()), 4) << pad(std::to_string(wt), 4)
                    << pad(v.to_string(), 24) << pad(to_decimal(v, job.digits), 20)
                    << pad(std::to_string(targets[wt]), 8) << pad(to_decimal(dist, job.digits), 18)
                    << (near ? "yes" : "no") << '\n';
            }
        }
    }
    if (json_format(job)) out << rows.dump(2) << '\n';
    return 0;
}

void add_common(CLI::App* sub, Job& job) {
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--digits", job.digits, "Fractional digits in decimal output")->check(CLI::Range(0u, 100u));
}

void add_w(CLI::App* sub, Job& job) {
    sub->add_option("--w", job.w, "Reference word, e.g. 0110 or 0,1,1,0");
    sub->add_option("--w-weight", job.w_weight, "Use (1,...,1,0,...,0) of this weight as w");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    Job& job = ctx.job;
    ctx.fixture_dir = default_fixture_dir();

    CLI::App app{"Weight enumerators, MacWilliams transforms and permutation averages of linear codes", "jfenum"};
    app.require_subcommand(1);

    auto one_code = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("code", job.c_path, "Code file or fixture name")->required();
        add_common(sub, job);
        return sub;
    };
    auto two_codes = [&](const char* name, const char* help, bool d_required = true) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("C", job.c_path, "First code")->required();
        sub->add_option("D", job.d_path, "Second code")->required(d_required);
        add_common(sub, job);
        return sub;
    };

    auto* cwe_cmd = one_code("cwe", "Complete weight enumerator");
    auto* cweg_cmd = one_code("cwe-g", "Genus-g complete weight enumerator");
    cweg_cmd->add_option("-g,--genus", job.genus, "Genus")->required()->check(CLI::Range(1u, 8u));
    auto* jac_cmd = one_code("jacobi", "Complete Jacobi polynomial");
    add_w(jac_cmd, job);
    auto* jcwe_cmd = two_codes("joint-cwe", "Complete joint weight enumerator");
    auto* jjac_cmd = two_codes("joint-jacobi", "Complete joint Jacobi polynomial");
    add_w(jjac_cmd, job);
    auto* mw_cmd = two_codes("macwilliams", "MacWilliams transform with a direct cross-check", false);
    add_w(mw_cmd, job);
    mw_cmd->add_option("--side", job.side, "Which code to dualise")
        ->check(CLI::IsMember({"first", "second", "both", "single"}));
    auto* avj_cmd = one_code("avg-jacobi", "Average Jacobi polynomial over S_n");
    add_w(avj_cmd, job);
    auto* avjj_cmd = two_codes("avg-joint-jacobi", "Average complete joint Jacobi polynomial over S_n");
    add_w(avjj_cmd, job);
    avjj_cmd->add_flag("--expand", job.expand, "Print the expanded polynomial (default)");
    avjj_cmd->add_option("--value-at", job.value_at, "Evaluate at remark51 or ones instead of expanding");
    auto* delta_cmd = two_codes("delta", "Average Jacobi intersection number");
    add_w(delta_cmd, job);
    delta_cmd->add_option("--method", job.method, "closed, brute or mc")
        ->check(CLI::IsMember({"closed", "brute", "mc"}));
    delta_cmd->add_option("--samples", job.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    delta_cmd->add_option("--seed", job.seed, "Monte Carlo seed");
    auto* dc_cmd = one_code("design-check", "Test whether a weight class supports a t-design");
    dc_cmd->add_option("--weight", job.weight, "Weight class")->required();
    dc_cmd->add_option("--t", job.t, "Design strength")->required();
    auto* hom_cmd = one_code("homogeneous", "Test t-homogeneity");
    hom_cmd->add_option("--t", job.t, "Design strength")->required();
    auto* repro_cmd = app.add_subcommand("repro-paper", "Reproduce the published intersection numbers");
    add_common(repro_cmd, job);
    repro_cmd->add_flag("--conjecture", job.conjecture, "Print the conjecture-evidence table instead");
    repro_cmd->add_option("--fixtures", job.fixtures, "Fixture directory");
    repro_cmd->add_option("--spot-checks", job.spot_checks, "Random same-weight masks per row");
    repro_cmd->add_option("--tolerance", job.tolerance, "Proximity threshold for the conjecture table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
        return kUsage;
    }

    try {
        const Budget budget = Budget::from_env();
        if (cwe_cmd->parsed()) {
            emit_polynomial(job, out, "cwe", cwe(ctx.c(), budget));
        } else if (cweg_cmd->parsed()) {
            emit_polynomial(job, out, "cwe-g", cwe_genus(ctx.c(), job.genus, budget));
        } else if (jac_cmd->parsed()) {
            const LinearCode c = ctx.c();
            emit_polynomial(job, out, "jacobi", jacobi_polynomial(c, resolve_w(job, c), budget));
        } else if (jcwe_cmd->parsed()) {
            emit_polynomial(job, out, "joint-cwe", joint_cwe(ctx.c(), ctx.d(), budget));
        } else if (jjac_cmd->parsed()) {
            const LinearCode c = ctx.c();
            emit_polynomial(job, out, "joint-jacobi", joint_jacobi(c, ctx.d(), resolve_w(job, c), budget));
        } else if (mw_cmd->parsed()) {
            return cmd_macwilliams(ctx, out);
        } else if (avj_cmd->parsed()) {
            const LinearCode c = ctx.c();
            emit_polynomial(job, out, "avg-jacobi", avg_jacobi(c, resolve_w(job, c), budget));
        } else if (avjj_cmd->parsed()) {
            return cmd_avg_joint_jacobi(ctx, out);
        } else if (delta_cmd->parsed()) {
            return cmd_delta(ctx, out);
        } else if (dc_cmd->parsed()) {
            return cmd_design_check(ctx, out);
        } else if (hom_cmd->parsed()) {
            return cmd_homogeneous(ctx, out);
        } else if (repro_cmd->parsed()) {
            return job.conjecture ? cmd_conjecture(ctx, out) : cmd_repro(ctx, out);
        }
    } catch (const Error& e) {
        err << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return kComputation;
    } catch (const std::exception& e) {
        err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
        return kComputation;
    }
    return 0;
}

}  // namespace jfenum
