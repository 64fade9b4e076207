#include "braidkit/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkit/errors.hpp"
#include "braidkit/maps.hpp"
#include "braidkit/parser.hpp"
#include "braidkit/verifier.hpp"

namespace braidkit {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Globals {
    std::string n_text;
    std::uint64_t seed = 0;
    std::size_t max_free_len = OracleLimits{}.max_free_len;
    std::size_t max_steps = OracleLimits{}.max_steps;
    std::string format = "text";

    OracleLimits limits() const { return OracleLimits{max_free_len, max_steps}; }

    SamplerParams params() const {
        SamplerParams p;
        p.seed = seed;
        return p;
    }
};

// Accepts "k" or "lo..hi".
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("--n expects an integer or a range lo..hi, got '" + text +
                                    "'");
    }
}

int single_n(const Globals& g) {
    const auto [lo, hi] = parse_range(g.n_text);
    if (lo != hi)
        throw std::invalid_argument("this subcommand needs a single strand count, got '" +
                                    g.n_text + "'");
    if (lo < 2) throw std::invalid_argument("strand count must be at least 2");
    return lo;
}

void print_result(const Globals& g, const nlohmann::json& machine, const std::string& human) {
    if (g.format == "json")
        std::cout << machine.dump() << '\n';
    else
        std::cout << human << '\n';
}

int print_bool(const Globals& g, bool value) {
    print_result(g, nlohmann::json{{"result", value}}, value ? "true" : "false");
    return value ? kExitTrue : kExitFalse;
}

int print_word(const Globals& g, const std::string& text) {
    print_result(g, nlohmann::json{{"result", text}}, text);
    return kExitTrue;
}

int run_eval(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    return print_word(g, to_text(free_cancel(eval(parse(expr_text, n), n))));
}

int run_equal(const Globals& g, const std::string& lhs_text, const std::string& rhs_text) {
    const int n = single_n(g);
    const BraidWord lhs = eval(parse(lhs_text, n), n);
    const BraidWord rhs = eval(parse(rhs_text, n), n);
    return print_bool(g, equal(lhs, rhs, g.limits()));
}

int run_trivial(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    return print_bool(g, is_trivial(eval(parse(expr_text, n), n), g.limits()));
}

int run_perm(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    const Permutation p = perm(eval(parse(expr_text, n), n));
    std::ostringstream os;
    nlohmann::json images = nlohmann::json::array();
    for (int k = 1; k <= p.size(); ++k) {
        if (k > 1) os << ' ';
        os << k << "->" << p.image(k);
        images.push_back(p.image(k));
    }
    print_result(g, nlohmann::json{{"result", images}}, os.str());
    return kExitTrue;
}

int run_brunnian(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    return print_bool(g, is_brunnian(eval(parse(expr_text, n), n), g.limits()));
}

int run_in_z(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    return print_bool(g, in_Z(eval(parse(expr_text, n), n), g.limits()));
}

int run_comb(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    return print_word(g, to_text(comb(eval(parse(expr_text, n), n), g.limits())));
}

int run_abelianize(const Globals& g, const std::string& expr_text) {
    const int n = single_n(g);
    const AbelianVector v = linking_vector(eval(parse(expr_text, n), n));
    nlohmann::json entries = nlohmann::json::array();
    for (const std::int64_t e : v.entries()) entries.push_back(e);
    print_result(g, nlohmann::json{{"result", entries}}, to_text(v));
    return kExitTrue;
}

int run_apply(const Globals& g, const std::string& map_arg, const std::string& expr_text) {
    const int n = single_n(g);
    const Expression e = parse(expr_text, n);
    if (map_arg == "theta")
        return print_word(g, to_text(theta(eval_pure(e, n, g.limits()))));
    if (map_arg == "theta-inv")
        return print_word(g, to_text(theta_inv(eval_pure(e, n, g.limits()))));
    if (map_arg == "w")
        return print_word(g, to_text(w_map(eval_pure(e, n, g.limits()))));
    if (map_arg == "chi") return print_word(g, to_text(free_cancel(reflect(eval(e, n)))));
    if (map_arg == "del")
        return print_word(g, to_text(free_cancel(del(eval_pure(e, n, g.limits())))));
    if (map_arg.rfind("d:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(map_arg.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("--map d:<k> expects an integer strand, got '" +
                                        map_arg + "'");
        }
        return print_word(g, to_text(free_cancel(delete_strand(eval(e, n), k))));
    }
    if (map_arg.rfind("conj:", 0) == 0) {
        const BraidWord beta = eval(parse(map_arg.substr(5), n), n);
        return print_word(g, to_text(free_cancel(conjugate(eval(e, n), beta))));
    }
    throw std::invalid_argument("unknown map '" + map_arg +
                                "' (expected theta|theta-inv|w|chi|del|d:<k>|conj:<expr>)");
}

int run_sample(const Globals& g, const std::string& set_arg) {
    const int n = single_n(g);
    if (set_arg == "brun")
        return print_word(g, to_text(free_cancel(sample_brun(n, g.params()))));
    if (set_arg == "bd")
        return print_word(g, to_text(sample_bd(n, g.params(), 0, g.limits())));
    if (set_arg.rfind("closure:", 0) == 0) {
        const PureWord gen =
            eval_pure(parse(set_arg.substr(8), n), n, g.limits());
        return print_word(g, to_text(free_cancel(sample_closure(gen, n, g.params()))));
    }
    throw std::invalid_argument("unknown sample set '" + set_arg +
                                "' (expected brun|bd|closure:<letter>)");
}

int run_checks(const Globals& g, const std::vector<std::string>& ids, bool all) {
    const auto [lo, hi] = parse_range(g.n_text);
    if (lo < 2 || hi < lo)
        throw std::invalid_argument("--n expects a strand count or increasing range, got '" +
                                    g.n_text + "'");
    std::vector<CheckReport> reports;
    if (all) {
        reports = run_all(lo, hi, g.params(), g.limits());
    } else {
        if (ids.empty())
            throw std::invalid_argument("check needs catalog ids or --all");
        for (const std::string& id : ids)
            for (int n = lo; n <= hi; ++n)
                reports.push_back(run_check(id, n, g.params(), g.limits()));
    }
    if (g.format == "json") {
        if (reports.size() == 1)
            std::cout << report_to_json(reports.front()).dump(2) << '\n';
        else
            std::cout << reports_to_json(reports).dump(2) << '\n';
    } else {
        int passed = 0;
        int failed = 0;
        int skipped = 0;
        for (const CheckReport& r : reports) {
            std::cout << report_to_text(r) << '\n';
            if (r.status == "pass") ++passed;
            else if (r.status == "fail") ++failed;
            else ++skipped;
        }
        std::cout << "total " << reports.size() << ": " << passed << " passed, " << failed
                  << " failed, " << skipped << " skipped\n";
    }
    const bool any_fail =
        std::any_of(reports.begin(), reports.end(),
                    [](const CheckReport& r) { return r.status == "fail"; });
    return any_fail ? kExitFalse : kExitTrue;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"braid words, pure-braid calculus, and the identity-check catalog"};
    app.require_subcommand(1);
    app.fallthrough(); // inherited: lets global flags appear after the subcommand

    Globals g;
    app.add_option("--n", g.n_text, "strand count (checks also accept a range lo..hi)")
        ->required();
    app.add_option("--seed", g.seed, "sampler seed");
    app.add_option("--max-free-len", g.max_free_len, "cap on intermediate free-word length");
    app.add_option("--max-steps", g.max_steps, "cap on handle-reduction steps");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string expr_a;
    std::string expr_b;
    std::string map_arg;
    std::string set_arg;
    std::vector<std::string> check_ids;
    bool check_all = false;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression to a braid word");
    eval_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* equal_cmd = app.add_subcommand("equal", "decide equality of two expressions");
    equal_cmd->add_option("lhs", expr_a, "left expression")->required();
    equal_cmd->add_option("rhs", expr_b, "right expression")->required();

    CLI::App* trivial_cmd = app.add_subcommand("trivial", "decide triviality");
    trivial_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* perm_cmd = app.add_subcommand("perm", "strand permutation of a word");
    perm_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* brunnian_cmd =
        app.add_subcommand("brunnian", "decide whether a pure braid is brunnian");
    brunnian_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* inz_cmd =
        app.add_subcommand("in-z", "decide brunnian-and-killed-by-twisted-deletion");
    inz_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* comb_cmd =
        app.add_subcommand("comb", "rewrite a pure word over the standard letters");
    comb_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* abel_cmd = app.add_subcommand("abelianize", "pairwise exponent sums");
    abel_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply a homomorphism to an expression");
    apply_cmd->add_option("--map", map_arg, "theta|theta-inv|w|chi|del|d:<k>|conj:<expr>")
        ->required();
    apply_cmd->add_option("expr", expr_a, "braid expression")->required();

    CLI::App* sample_cmd = app.add_subcommand("sample", "draw a deterministic sample");
    sample_cmd->add_option("--set", set_arg, "brun|bd|closure:<letter>")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "run catalog checks");
    check_cmd->add_option("ids", check_ids, "catalog ids (e.g. C10 C15)");
    check_cmd->add_flag("--all", check_all, "run every non-control catalog entry");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage error
        return code == 0 ? kExitTrue : kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(g, expr_a);
        if (equal_cmd->parsed()) return run_equal(g, expr_a, expr_b);
        if (trivial_cmd->parsed()) return run_trivial(g, expr_a);
        if (perm_cmd->parsed()) return run_perm(g, expr_a);
        if (brunnian_cmd->parsed()) return run_brunnian(g, expr_a);
        if (inz_cmd->parsed()) return run_in_z(g, expr_a);
        if (comb_cmd->parsed()) return run_comb(g, expr_a);
        if (abel_cmd->parsed()) return run_abelianize(g, expr_a);
        if (apply_cmd->parsed()) return run_apply(g, map_arg, expr_a);
        if (sample_cmd->parsed()) return run_sample(g, set_arg);
        if (check_cmd->parsed()) return run_checks(g, check_ids, check_all);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace braidkit
