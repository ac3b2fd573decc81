// Command-line front end: products, verification suites, action tables and
// the relator list of the presentation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl2ext/grammar.hpp"
#include "sl2ext/presentation.hpp"
#include "sl2ext/verify.hpp"

using namespace sl2ext;
using nlohmann::json;

namespace {

struct Options {
    std::uint32_t p = 5;
    std::optional<std::uint32_t> root;
    std::uint32_t max_length = 8;
    std::uint32_t samples = 1000;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string epsilon = "group";
};

json terms_json(const Graded& x) {
    json arr = json::array();
    for (const auto& [s, c] : x)
        arr.push_back({{"symbol", render(s)}, {"coefficient", c.value()}});
    return arr;
}

int cmd_mul(const Options& o, const std::string& a, const std::string& b) {
    const Graded x = parse_element(a);
    const Graded y = parse_element(b);
    const Graded r = mul(x, y);
    if (o.format == "json")
        std::cout << json{{"p", o.p}, {"result", render(r)}, {"terms", terms_json(r)}}.dump(2) << "\n";
    else
        std::cout << render(r) << "\n";
    return 0;
}

int cmd_word(const Options& o, const std::string& a) {
    const Graded x = parse_element(a);
    const FreeElement f = word_for(x);
    if (o.format == "json")
        std::cout << json{{"element", render(x)}, {"word", render(f)}}.dump(2) << "\n";
    else
        std::cout << render(f) << "\n";
    return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
    VerifyConfig cfg;
    cfg.max_length = o.max_length;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.epsilon = o.epsilon == "literal" ? EpsilonBound::literal : EpsilonBound::group;
    const Report rep = run_suite(suite, cfg);
    if (o.format == "json") {
        json checks = json::array();
        for (const Check& c : rep.checks) {
            json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"cases", c.cases}};
            if (!c.pass) j["counterexample"] = c.counterexample;
            checks.push_back(j);
        }
        std::cout << json{{"suite", rep.suite}, {"p", o.p}, {"checks", checks}}.dump(2) << "\n";
    } else {
        for (const Check& c : rep.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
            if (!c.pass) std::cout << "\n     " << c.counterexample;
            std::cout << "\n";
        }
        std::cout << rep.suite << " at p = " << o.p << ": " << rep.checks.size() - rep.failures() << "/"
                  << rep.checks.size() << " checks pass\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_table(const Options& o, int degree, std::uint32_t L) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("table degree must be 1, 2 or 3");
    const std::vector<std::pair<std::string, Hecke>> ops{
        {"tau(w(1;))", tau(Weyl::omega(1))}, {"tau(w(0;s0))", tau(Weyl::s(0))}, {"tau(w(0;s1))", tau(Weyl::s(1))}};
    json rows = json::array();
    const std::uint32_t n = field().torus_order();
    for (std::uint32_t len = 0; len <= L; ++len)
        for (std::uint32_t e = 0; e < n; ++e)
            for (int first = 0; first <= (len ? 1 : 0); ++first) {
                const Weyl w = Weyl::make(e, len, first);
                for (int sign = -1; sign <= 1; ++sign) {
                    if (degree == 3 && sign != 0) continue;
                    if (degree != 3 && len == 0 && sign == 0) continue;
                    const Sym s{static_cast<std::uint8_t>(degree), w, static_cast<std::int8_t>(sign)};
                    for (const auto& [name, h] : ops) {
                        const std::string left = render(act_left(h, g(s)));
                        const std::string right = render(act_right(g(s), h));
                        if (o.format == "json") {
                            rows.push_back({{"symbol", render(s)}, {"operator", name}, {"left", left}, {"right", right}});
                        } else {
                            std::cout << name << " * " << render(s) << " = " << left << "\n";
                            std::cout << render(s) << " * " << name << " = " << right << "\n";
                        }
                    }
                }
            }
    if (o.format == "json") std::cout << json{{"degree", degree}, {"max_length", L}, {"rows", rows}}.dump(2) << "\n";
    return 0;
}

int cmd_relators(const Options& o) {
    const RelatorLists lists = relators(o.epsilon == "literal" ? EpsilonBound::literal : EpsilonBound::group);
    if (o.format == "json") {
        json arr = json::array();
        for (const Relator& r : lists.all()) {
            json terms = json::array();
            for (const auto& [word, c] : r.f) {
                json letters = json::array();
                for (Letter l : word) letters.push_back(letter_name(l));
                terms.push_back({{"coefficient", c.value()}, {"word", letters}});
            }
            arr.push_back({{"name", r.name}, {"terms", terms}});
        }
        std::cout << json{{"p", o.p}, {"generators", {"Tw0", "Ts0", "Ts1", "Bm", "Bp", "Bz0", "Bz1"}}, {"relators", arr}}
                         .dump(2)
                  << "\n";
    } else {
        for (const Relator& r : lists.all()) std::cout << r.name << ": " << render(r.f) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Products and identity checks in the mod-p Ext algebra of SL2(Qp)"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--p", o.p, "Prime p >= 5")->capture_default_str();
    app.add_option("--root", o.root, "Generator u0 of F_p^x (default: smallest primitive root)");
    app.add_option("--max-length", o.max_length, "Largest support length L")->capture_default_str()->check(
        CLI::Range(1U, 64U));
    app.add_option("--samples", o.samples, "Random samples per randomized check")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed of the random generator")->capture_default_str();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--epsilon-bound", o.epsilon, "Upper summation index in epsilon: group (p-2) or literal (p-1)")
        ->check(CLI::IsMember({"group", "literal"}))
        ->capture_default_str();
    app.fallthrough();

    std::string lhs, rhs, suite = "all";
    int degree = 1;
    std::optional<std::uint32_t> table_len;

    auto* mul_cmd = app.add_subcommand("mul", "Multiply two elements");
    mul_cmd->add_option("x", lhs, "Left factor")->required();
    mul_cmd->add_option("y", rhs, "Right factor")->required();

    auto* word_cmd = app.add_subcommand("word", "Write an element in the seven generators");
    word_cmd->add_option("x", lhs, "Element")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    verify_cmd->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suites));

    auto* table_cmd = app.add_subcommand("table", "Print the left and right action of tau(w(1;)), tau(s0), tau(s1)");
    table_cmd->add_option("degree", degree, "Degree 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    table_cmd->add_option("L", table_len, "Largest support length (default: --max-length)");

    auto* rel_cmd = app.add_subcommand("relators", "List the relators of the presentation");

    CLI11_PARSE(app, argc, argv);

    try {
        const Field f(o.p, o.root);
        FieldScope scope(f);
        if (*mul_cmd) return cmd_mul(o, lhs, rhs);
        if (*word_cmd) return cmd_word(o, lhs);
        if (*verify_cmd) return cmd_verify(o, suite);
        if (*table_cmd) return cmd_table(o, degree, table_len.value_or(o.max_length));
        if (*rel_cmd) return cmd_relators(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
