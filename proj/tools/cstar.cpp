#include "cstar/classify.hpp"
#include "cstar/dpd.hpp"
#include "cstar/error.hpp"
#include "cstar/io.hpp"
#include "cstar/zigzag.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

using namespace cstar;

namespace {

std::string read_input(const std::string& arg)
{
    if (arg == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }
    return arg;
}

std::string trimmed(std::string s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

bool looks_like_json(const std::string& s)
{
    return !s.empty() && s.front() == '{';
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

struct Options {
    std::string format = "text";
    std::string input;
    bool semistandard = false;
    bool sweep = false;
    int max_length = 5;
    int max_weight = 4;
    int random = 0;
    unsigned seed = 1;
    int k = 1;
    std::string point;
    bool verbatim = false;
};

void emit_graph(const WeightedGraph& g, const Options& o, const std::optional<Zigzag>& z)
{
    if (o.format == "json") {
        Json j = to_json(g);
        if (z)
            j["zigzag"] = to_string(*z);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "dot") {
        std::cout << to_dot(g);
    } else if (o.format == "ascii") {
        std::cout << (z ? to_ascii(*z) : to_ascii(g));
    } else if (z) {
        std::cout << to_string(*z) << "\n";
    } else {
        std::cout << shape_name(g.shape()) << " graph, " << g.size() << " vertices\n";
        for (const auto& v : g.vertices())
            std::cout << "  " << v.id << " " << v.weight.str() << "\n";
        for (const auto& [a, b] : g.edges())
            std::cout << "  " << a << " -- " << b << "\n";
    }
}

void emit_zigzag(const Zigzag& z, const Options& o, Json extra = Json::object())
{
    if (o.format == "json") {
        Json j = to_json(z);
        for (auto it = extra.begin(); it != extra.end(); ++it)
            j[it.key()] = it.value();
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "dot") {
        std::cout << to_dot(z);
    } else if (o.format == "ascii") {
        std::cout << to_ascii(z);
    } else {
        std::cout << to_string(z) << "\n";
    }
}

Json classify_pair(const DpdPair& p)
{
    Json j;
    bool giz = is_gizatullin(p);
    j["gizatullin"] = giz;
    j["toric"] = p.base.affine_line() ? Json(is_toric_pair(p)) : Json(nullptr);
    Json pts = Json::array();
    for (const auto& sp : classify_points(p))
        pts.push_back(to_json(sp));
    j["points"] = pts;
    auto z = boundary_zigzag(p);
    if (z && !z->circular) {
        Zigzag st = standardize(*z).zigzag;
        j["standard_zigzag"] = to_string(st);
        j["smooth_zigzag"] = to_json(smooth_hyperbolic_zigzag_test(st));
    } else {
        j["smooth_zigzag"] = nullptr;
    }
    if (giz) {
        auto ext = extended_graph(p);
        try {
            j["picard_rank"] = picard_rank(ext, exceptional_count(p));
        } catch (const Error& e) {
            j["picard_rank"] = errc_name(e.code());
        }
    }
    return j;
}

void print_classification(const Json& j, const Options& o)
{
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "points" || it.key() == "smooth_zigzag")
            continue;
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
    if (j.contains("smooth_zigzag")) {
        const auto& s = j["smooth_zigzag"];
        if (s.is_null())
            std::cout << "smooth_zigzag: n/a\n";
        else
            std::cout << "smooth_zigzag: " << (s["verdict"].get<bool>() ? "true" : "false") << " "
                      << s["form"].get<std::string>() << "\n";
    }
}

int sweep(const Options& o)
{
    Json rows = Json::array();
    std::size_t agree = 0, total = 0;
    for (int len = 0; len <= o.max_length - 2; ++len) {
        std::vector<std::int64_t> w(static_cast<std::size_t>(len), -2);
        for (;;) {
            Zigzag z = Zigzag::linear({0, 0});
            for (auto x : w)
                z.w.emplace_back(x);
            auto a = smooth_hyperbolic_zigzag_test(z);
            auto b = smooth_zigzag_contractibility_test(z);
            ++total;
            agree += a.verdict == b.verdict;
            if (o.format == "json")
                rows.push_back({{"zigzag", to_string(z)}, {"arithmetic", a.verdict}, {"contraction", b.verdict}});
            else
                std::cout << to_string(z) << " " << (a.verdict ? "smooth" : "-") << " "
                          << (a.verdict == b.verdict ? "" : "DISAGREE") << "\n";
            std::size_t i = 0;
            while (i < w.size() && w[i] == -o.max_weight)
                w[i++] = -2;
            if (i == w.size())
                break;
            --w[i];
        }
    }
    if (o.format == "json")
        std::cout << Json{{"total", total}, {"agree", agree}, {"rows", rows}}.dump(2) << "\n";
    else
        std::cout << "total " << total << " agree " << agree << "\n";
    return agree == total ? 0 : 1;
}

DpdPair random_pair(std::mt19937& g)
{
    auto coef = [&] {
        std::int64_t m = 1 + g() % 12;
        std::int64_t e = static_cast<std::int64_t>(g() % (3 * m)) - 2 * m;
        return Rational(e, m);
    };
    DpdPair p;
    int pts = 1 + static_cast<int>(g() % 3);
    for (int i = 0; i < pts; ++i) {
        std::string l = "a" + std::to_string(i);
        Rational a = coef(), b = coef();
        if (a + b > Rational(0))
            b = -a - Rational(static_cast<long long>(g() % 3));
        p.plus.set(l, a);
        p.minus.set(l, b);
    }
    return p;
}

int random_corpus(const Options& o)
{
    std::mt19937 g(o.seed);
    Json rows = Json::array();
    for (int i = 0; i < o.random; ++i) {
        DpdPair p = random_pair(g);
        Json j = classify_pair(p);
        j["pair"] = to_json(p);
        rows.push_back(j);
    }
    if (o.format == "json") {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << r["pair"].dump() << " gizatullin=" << r["gizatullin"].dump() << " toric=" << r["toric"].dump()
                      << "\n";
    }
    return 0;
}

int run(const std::string& verb, const Options& o)
{
    std::string text = trimmed(read_input(o.input));
    if (verb == "resolve") {
        DpdPair p = parse_pair(text);
        emit_graph(resolved_boundary(p), o, boundary_zigzag(p));
    } else if (verb == "standardize") {
        Zigzag z;
        if (looks_like_json(text)) {
            auto bz = boundary_zigzag(parse_pair(text));
            if (!bz)
                fail(Errc::not_linear, "the boundary of this pair is neither a chain nor a cycle");
            z = *bz;
        } else {
            z = parse_zigzag(text);
        }
        auto s = standardize(z, o.semistandard ? StandardMode::semistandard : StandardMode::full);
        emit_zigzag(s.zigzag, o, {{"input", to_string(z)}, {"log", to_json(s.log)}});
    } else if (verb == "classify") {
        if (o.sweep)
            return sweep(o);
        if (o.random > 0)
            return random_corpus(o);
        if (looks_like_json(text)) {
            print_classification(classify_pair(parse_pair(text)), o);
        } else {
            Zigzag z = parse_zigzag(text);
            Json j{{"zigzag", to_string(z)},
                   {"smooth_zigzag", to_json(smooth_hyperbolic_zigzag_test(z))},
                   {"contractibility", to_json(smooth_zigzag_contractibility_test(z))}};
            if (o.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "smooth_zigzag: " << j["smooth_zigzag"]["verdict"].dump() << " "
                          << j["smooth_zigzag"]["form"].get<std::string>() << "\ncontractibility: "
                          << j["contractibility"]["verdict"].dump() << " "
                          << j["contractibility"]["form"].get<std::string>() << "\n";
        }
    } else if (verb == "extended") {
        DpdPair p = parse_pair(text);
        ExtendedGraph e = extended_graph(p);
        if (o.format == "json") {
            Json j = to_json(e);
            try {
                j["picard_rank"] = picard_rank(e, exceptional_count(p));
            } catch (const Error& err) {
                j["picard_rank"] = errc_name(err.code());
            }
            std::cout << j.dump(2) << "\n";
        } else if (o.format == "dot") {
            std::cout << to_dot(e.to_graph());
        } else if (o.format == "ascii") {
            std::cout << to_ascii(e.to_graph());
        } else {
            std::cout << to_string(e.zigzag) << "\n";
            for (const auto& [i, fs] : e.feathers)
                for (const auto& f : fs) {
                    auto w = f.weights();
                    std::cout << "feather at C" << i << ": "
                              << to_string(Zigzag(std::vector<Rational>(w.begin(), w.end()))) << " (" << f.label
                              << ")\n";
                }
            if (e.tail_feather) {
                auto w = e.tail_feather->weights();
                std::cout << "tail feather: " << to_string(Zigzag(std::vector<Rational>(w.begin(), w.end())))
                          << " (" << e.tail_feather->label << ")\n";
            }
            if (e.closing_fiber)
                std::cout << "closing fiber\n";
        }
    } else if (verb == "dg") {
        auto acts = dg_actions(o.k, o.verbatim ? RulingReading::verbatim : RulingReading::computed);
        Json rows = Json::array();
        for (const auto& a : acts) {
            Zigzag st = standardize(*boundary_zigzag(a.pair)).zigzag;
            Json vp = Json::object(), vm = Json::object();
            for (const auto& [p, m] : a.ruling.v_plus)
                vp[p] = m.str();
            for (const auto& [p, m] : a.ruling.v_minus)
                vm[p] = m.str();
            rows.push_back({{"r", a.r}, {"pair", to_json(a.pair)}, {"boundary", to_string(st)},
                            {"div_v_plus", vp}, {"div_v_minus", vm}});
        }
        if (o.format == "json") {
            std::cout << rows.dump(2) << "\n";
        } else {
            for (const auto& r : rows)
                std::cout << "r=" << r["r"].dump() << " d_plus=" << r["pair"]["d_plus"].dump()
                          << " d_minus=" << r["pair"]["d_minus"].dump() << " boundary="
                          << r["boundary"].get<std::string>() << "\n";
        }
    } else if (verb == "fiber") {
        DpdPair p = parse_pair(text);
        Fiber f = resolve_fiber(p, o.point);
        Json roles = f.roles;
        emit_zigzag(f.chain, o, {{"point", o.point}, {"roles", roles}});
    } else if (verb == "parabolic" || verb == "elliptic") {
        Json j = parse_json(text);
        if (!j.is_object() || !j.contains("d"))
            fail(Errc::parse_error, "expected {\"d\": {...}}");
        QDivisor d = divisor_from_json(j["d"]);
        WeightedGraph g;
        if (verb == "parabolic") {
            int s = 1;
            if (j.contains("points_at_infinity")) {
                if (!j["points_at_infinity"].is_number_integer())
                    fail(Errc::parse_error, "points_at_infinity is an integer");
                s = j["points_at_infinity"].get<int>();
            }
            g = parabolic_boundary(d, s);
        } else {
            g = elliptic_boundary(d);
        }
        std::optional<Zigzag> z;
        if (g.shape() == Shape::linear)
            z = g.as_zigzag();
        emit_graph(g, o, z);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorics of C*-surfaces: boundaries, zigzags, feathers"};
    app.require_subcommand(1, 1);
    Options o;
    auto common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot", "ascii"}));
        auto* in = sub->add_option("input", o.input, "inline value, file path, or - for stdin");
        if (needs_input)
            in->required();
    };
    auto* resolve = app.add_subcommand("resolve", "resolved boundary of a pair");
    common(resolve, true);
    auto* standardize_cmd = app.add_subcommand("standardize", "standard form of a zigzag or pair boundary");
    common(standardize_cmd, true);
    standardize_cmd->add_flag("--semistandard", o.semistandard, "stop at a semistandard form");
    auto* classify = app.add_subcommand("classify", "classification verdicts");
    common(classify, false);
    classify->add_flag("--sweep", o.sweep, "compare both smoothness tests on all small standard zigzags");
    classify->add_option("--max-length", o.max_length, "longest zigzag in the sweep");
    classify->add_option("--max-weight", o.max_weight, "largest |w| in the sweep");
    classify->add_option("--random", o.random, "classify this many random pairs");
    classify->add_option("--seed", o.seed, "seed for --random");
    auto* extended = app.add_subcommand("extended", "extended graph with feathers");
    common(extended, true);
    auto* dg = app.add_subcommand("dg", "the k C*-actions on a Danilov-Gizatullin surface");
    common(dg, false);
    dg->add_option("--k", o.k, "k >= 1")->required();
    dg->add_flag("--verbatim-ruling", o.verbatim, "use k+r-1 for the div(v-) coefficient");
    auto* fiber = app.add_subcommand("fiber", "resolved fiber over a point");
    common(fiber, true);
    fiber->add_option("--point", o.point, "point label")->required();
    auto* parabolic = app.add_subcommand("parabolic", "boundary of a parabolic surface {\"d\":...}");
    common(parabolic, true);
    auto* elliptic = app.add_subcommand("elliptic", "boundary of an elliptic surface {\"d\":...}");
    common(elliptic, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (o.input.empty() && (classify->parsed() && !o.sweep && o.random == 0)) {
        std::cerr << "classify needs an input, --sweep or --random\n";
        return 2;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == Errc::parse_error ? 2 : 1;
    }
}
