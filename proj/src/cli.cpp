#include "bimono/cli.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"
#include "bimono/json_io.hpp"
#include "bimono/limits.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace bimono::cli {

namespace {

using io::Json;

constexpr std::size_t max_order = 16;

struct Context {
    std::istream& in;
    std::ostream& out;
};

Json read_json(const std::string& path, Context& ctx) {
    try {
        if (path == "-") return Json::parse(ctx.in);
        std::ifstream file(path);
        if (!file) fail(ErrorKind::invalid_input, "cannot open '" + path + "'");
        return Json::parse(file);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::invalid_input, "malformed JSON in '" + path + "': " + e.what());
    }
}

void write_text(const std::string& text, const std::string& path, Context& ctx) {
    if (path.empty() || path == "-") {
        ctx.out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) fail(ErrorKind::invalid_input, "cannot write '" + path + "'");
    file << text;
}

void write_json(const Json& j, const std::string& path, Context& ctx) { write_text(j.dump(2) + "\n", path, ctx); }

void report_error(std::ostream& out, ErrorKind kind, const std::string& message) {
    Json j = io::document("error");
    j["error"] = {{"kind", to_string(kind)}, {"message", message}};
    out << j.dump(2) << '\n';
}

/// Rejects flag values that are not rational literals at parse time (usage error).
const CLI::Validator rational_literal(
    [](std::string& value) -> std::string {
        try {
            parse_rational(value);
            return {};
        } catch (const Error&) {
            return "not a rational literal: " + value;
        }
    },
    "RATIONAL", "rational");

std::string series_table(const Series2Q& s) {
    std::vector<std::vector<std::string>> cells(s.order() + 1, std::vector<std::string>(s.order() + 1));
    std::size_t width = 1;
    for (std::size_t i = 0; i <= s.order(); ++i)
        for (std::size_t j = 0; j <= s.order(); ++j) {
            cells[i][j] = to_string(s(i, j));
            width = std::max(width, cells[i][j].size());
        }
    std::ostringstream os;
    os << std::setw(6) << "u\\v";
    for (std::size_t j = 0; j <= s.order(); ++j) os << ' ' << std::setw(static_cast<int>(width)) << j;
    os << '\n';
    for (std::size_t i = 0; i <= s.order(); ++i) {
        os << std::setw(6) << i;
        for (std::size_t j = 0; j <= s.order(); ++j) os << ' ' << std::setw(static_cast<int>(width)) << cells[i][j];
        os << '\n';
    }
    return os.str();
}

// -- verbs -------------------------------------------------------------------

struct PartitionsArgs {
    std::string chi;
    std::string omega;
    bool bm = false;
    std::size_t bound = 0;
};

int partitions(const PartitionsArgs& a, Context& ctx) {
    const ChiWord chi = ChiWord::parse(a.chi);
    if (!a.omega.empty()) {
        Json blocks = Json::array();
        for (const auto& b : pi_chi_omega(chi, OmegaWord::parse(a.omega))) blocks.push_back(b);
        ctx.out << Json{{"blocks", std::move(blocks)}}.dump() << '\n';
        return exit_ok;
    }
    if (a.bm) {
        for (const auto& p : enumerate_bm(chi, a.bound ? a.bound : default_ordered_enumeration_bound))
            ctx.out << io::to_json(p).dump() << '\n';
    } else {
        for (const auto& p : enumerate_bnc(chi, a.bound ? a.bound : default_enumeration_bound))
            ctx.out << io::to_json(p).dump() << '\n';
    }
    return exit_ok;
}

struct IoArgs {
    std::vector<std::string> inputs;
    std::string output;
};

int cumulants_to_moments(const IoArgs& a, Context& ctx) {
    const Json doc = read_json(a.inputs.at(0), ctx);
    const std::string kind = io::kind_of(doc);
    if (kind == "cumulants") {
        write_json(io::to_json(moments_from_cumulants(io::cumulant_table_from_json(doc))), a.output, ctx);
    } else if (kind == "cumulant-grid") {
        write_json(io::to_json(moments_from_cumulants(io::cumulant_grid_from_json(doc))), a.output, ctx);
    } else {
        fail(ErrorKind::invalid_input, "expected 'cumulants' or 'cumulant-grid', got '" + kind + "'");
    }
    return exit_ok;
}

int moments_to_cumulants(const IoArgs& a, Context& ctx) {
    const Json doc = read_json(a.inputs.at(0), ctx);
    const std::string kind = io::kind_of(doc);
    if (kind == "word") {
        write_json(io::to_json(cumulants_from_moments(io::word_distribution_from_json(doc))), a.output, ctx);
    } else if (kind == "grid") {
        write_json(io::to_json(cumulants_from_moments(io::grid_from_json(doc))), a.output, ctx);
    } else {
        fail(ErrorKind::invalid_input, "expected 'word' or 'grid', got '" + kind + "'");
    }
    return exit_ok;
}

int convolve_verb(const IoArgs& a, Context& ctx) {
    if (a.inputs.size() != 2) fail(ErrorKind::invalid_input, "convolve takes exactly two inputs");
    if (a.inputs[0] == "-" && a.inputs[1] == "-") fail(ErrorKind::invalid_input, "only one input may come from stdin");
    const Json first = read_json(a.inputs[0], ctx);
    const Json second = read_json(a.inputs[1], ctx);
    const std::string kind = io::kind_of(first);
    if (kind != io::kind_of(second)) fail(ErrorKind::invalid_input, "convolve inputs must have the same kind");
    if (kind == "word") {
        write_json(io::to_json(convolve(io::word_distribution_from_json(first), io::word_distribution_from_json(second))),
                   a.output, ctx);
    } else if (kind == "grid") {
        write_json(io::to_json(grid_convolve(io::grid_from_json(first), io::grid_from_json(second))), a.output, ctx);
    } else {
        fail(ErrorKind::invalid_input, "convolve expects 'word' or 'grid' documents, got '" + kind + "'");
    }
    return exit_ok;
}

struct TransformArgs {
    IoArgs io;
    std::string t = "1";
    std::string format = "json";
};

int transform(const TransformArgs& a, Context& ctx) {
    const Json doc = read_json(a.io.inputs.at(0), ctx);
    const std::string kind = io::kind_of(doc);
    Json result = io::document("transform");
    Series2Q main;
    if (kind == "grid") {
        const GridDistribution g = io::grid_from_json(doc);
        if (g.order() > max_order) fail(ErrorKind::resource_limit, "grid order above " + std::to_string(max_order));
        main = cauchy_from_grid(g);
        result["G"] = io::to_json(main);
        result["F_left_multiplier"] = io::to_json(f_transform(left_marginal(main)));
        result["F_right_multiplier"] = io::to_json(f_transform(right_marginal(main)));
    } else if (kind == "cumulant-grid") {
        const CumulantGrid k = io::cumulant_grid_from_json(doc);
        if (k.order() > max_order) fail(ErrorKind::resource_limit, "grid order above " + std::to_string(max_order));
        const GeneratingFunctions gf = generating_functions(k);
        const Series2T g_t = evolve_joint(k);
        const Rational t = parse_rational(a.t);
        main = evaluate(g_t, t);
        result["A1"] = io::to_json(gf.a1);
        result["A2"] = io::to_json(gf.a2);
        result["A"] = io::to_json(gf.a);
        result["Atilde"] = io::to_json(gf.atilde);
        result["G_t"] = io::to_json(g_t);
        result["t"] = io::to_json(t);
        result["G"] = io::to_json(main);
    } else {
        fail(ErrorKind::invalid_input, "transform expects 'grid' or 'cumulant-grid', got '" + kind + "'");
    }
    if (a.format == "table")
        write_text(series_table(main), a.io.output, ctx);
    else
        write_json(result, a.io.output, ctx);
    return exit_ok;
}

struct Type2Args {
    std::string spaces;
    std::string word;
    std::size_t max_len = 0;
};

int type2(const Type2Args& a, Context& ctx) {
    const auto spaces = io::spaces_from_json(read_json(a.spaces, ctx));
    const auto word = io::type2_word_from_json(read_json(a.word, ctx));
    Json result = io::document("type2-moment");
    result["moment"] = io::to_json(type2_moment(spaces, word, a.max_len));
    write_json(result, "", ctx);
    return exit_ok;
}

struct PsdArgs {
    IoArgs io;
    std::size_t n = 0;
    bool has_n = false;
};

int psd(const PsdArgs& a, Context& ctx) {
    const Json doc = read_json(a.io.inputs.at(0), ctx);
    const std::string kind = io::kind_of(doc);
    RationalMatrix x;
    if (kind == "matrix") {
        x = io::matrix_from_json(doc);
    } else if (kind == "grid") {
        const GridDistribution g = io::grid_from_json(doc);
        x = moment_matrix(g, a.has_n ? a.n : g.order() / 2);
    } else {
        fail(ErrorKind::invalid_input, "psd-check expects 'matrix' or 'grid', got '" + kind + "'");
    }
    const PsdVerdict verdict = psd_check(x);
    Json result = io::document("psd-verdict");
    result["size"] = x.size();
    result["determinant"] = io::to_json(det_exact(x));
    const Json fields = io::to_json(verdict);
    for (const auto& [k, v] : fields.items()) result[k] = v;
    write_json(result, a.io.output, ctx);
    return exit_ok;
}

struct LimitArgs {
    std::string kind;
    std::string alpha = "1", beta = "1", gamma = "0", lambda = "1";
    std::string tau;
    std::size_t order = 6;
    unsigned check_n = 0;
    std::string output;
};

int limit(const LimitArgs& a, Context& ctx) {
    LimitSpec spec;
    switch (parse_limit_kind(a.kind)) {
    case LimitKind::clt:
        spec = LimitSpec::clt(parse_rational(a.alpha), parse_rational(a.beta), parse_rational(a.gamma));
        break;
    case LimitKind::poisson:
        spec = LimitSpec::poisson(parse_rational(a.lambda), parse_rational(a.alpha), parse_rational(a.beta));
        break;
    case LimitKind::compound:
        if (a.tau.empty()) fail(ErrorKind::invalid_input, "compound limit needs --tau");
        spec = LimitSpec::compound(parse_rational(a.lambda), io::measure_from_json(read_json(a.tau, ctx)));
        break;
    }
    const LimitPipeline p = limit_pipeline(spec, a.order);
    Json result = io::document("limit");
    result["limit_kind"] = to_string(spec.kind);
    if (spec.kind == LimitKind::clt) result["correlation_admissible"] = spec.clt_correlation_admissible();
    result["cumulants"] = io::to_json(p.cumulants);
    result["moments"] = io::to_json(p.moments);
    result["matrix"] = io::to_json(p.matrix);
    result["determinant"] = io::to_json(p.determinant);
    result["verdict"] = io::to_json(p.verdict);
    if (a.check_n > 0) {
        const ConvergenceReport r = limit_convergence_check(spec, a.check_n, a.order);
        Json c;
        c["N"] = r.n;
        c["extensive"] = r.extensive;
        c["rate_ok"] = r.rate_ok;
        c["generator_cumulants"] = io::to_json(r.generator);
        c["deviation"] = io::to_json(r.deviation);
        result["convergence"] = std::move(c);
    }
    write_json(result, a.output, ctx);
    return exit_ok;
}

// -- reproduce-paper -----------------------------------------------------------

struct Fixture {
    std::string name;
    Json expected;
    Json actual;
};

Json rows_json(const RationalMatrix& x) { return io::to_json(x)["rows"]; }

std::vector<Fixture> reference_fixtures() {
    std::vector<Fixture> out;

    {
        const ChiWord chi = ChiWord::parse("LRLRLRLLRRLR");
        const OmegaWord omega = OmegaWord::parse("1,1,1,1,2,1,2,1,2,2,1,1");
        auto blocks = pi_chi_omega(chi, omega);
        std::sort(blocks.begin(), blocks.end());
        out.push_back({"pi_chi_omega", Json::parse("[[1,3],[2,4,6],[5,7],[8,11,12],[9,10]]"), blocks});
    }

    const Rational half(1, 2);
    const GridDistribution coin =
        grid_from_measure(AtomicPlanarMeasure({{Rational(0), Rational(1), half}, {Rational(1), Rational(0), half}}), 2);
    const RationalMatrix x1 = moment_matrix(grid_convolve(coin, coin), 1);
    out.push_back({"X1", Json::parse(R"([["1","1","1","1/2"],["1","3/2","1/2","5/8"],["1","1/2","3/2","5/8"],["1/2","5/8","5/8","3/4"]])"),
                   rows_json(x1)});
    out.push_back({"det X1", "-1/32", io::to_json(det_exact(x1))});
    out.push_back({"X1 psd", false, psd_check(x1).is_psd});

    const AtomicPlanarMeasure tau({{Rational(1), Rational(1), Rational(15)},
                                   {Rational(-1), Rational(1), Rational(15)},
                                   {Rational(1), Rational(-1), Rational(15)}});
    const LimitPipeline compound = limit_pipeline(LimitSpec::compound(Rational(1), tau), 2);
    out.push_back({"compound moments", Json::parse(R"([["1","15","270"],["15","210","7455/2"],["270","7455/2","131715/2"]])"),
                   io::to_json(compound.moments)["M"]});
    out.push_back({"compound det", "-857250", io::to_json(compound.determinant)});
    out.push_back({"compound psd", false, compound.verdict.is_psd});

    const MarginalFlow flow = evolve_marginal(generating_functions(limit_cumulants(LimitSpec::compound(Rational(1), tau), 2)).a1);
    out.push_back({"compound marginal G_1,t", Json::array({"1", "15t", "45t + 225t^2"}),
                   Json::array({flow.cauchy[1].str(), flow.cauchy[2].str(), flow.cauchy[3].str()})});

    {
        // a in the left algebra of family 1, b in the right algebra of family 2.
        const std::vector<PointedSpace> spaces{{2}, {2}};
        const LocalOperator a{1, {{Rational(2), Rational(3)}, {Rational(5), Rational(7)}}};
        const LocalOperator b{2, {{Rational(-1), Rational(4)}, {Rational(6), Rational(1, 3)}}};
        const Type2Letter la{Side::left, a};
        const Type2Letter rb{Side::right, b};
        // phi(a) = 2 and phi(b) = -1, so phi(abab) = phi(a)^2 phi(b)^2 = 4, while
        // phi(a^2 b^2) = phi(a^2) phi(b^2) = 19 * 25.
        out.push_back({"type II abab", "4", io::to_json(type2_moment(spaces, {la, rb, la, rb}))});
        out.push_back({"type II aabb", "475", io::to_json(type2_moment(spaces, {la, la, rb, rb}))});
    }
    return out;
}

int reproduce_paper(Context& ctx) {
    Json result = io::document("reproduce-paper");
    Json fixtures = Json::array();
    bool all = true;
    for (auto& f : reference_fixtures()) {
        const bool match = f.expected == f.actual;
        all = all && match;
        fixtures.push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"match", match}});
    }
    result["fixtures"] = std::move(fixtures);
    result["all_match"] = all;
    write_json(result, "", ctx);
    return all ? exit_ok : exit_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out};
    CLI::App app{"Bi-monotonic moments, cumulants, transforms and positivity checks"};
    app.require_subcommand(1);

    PartitionsArgs part;
    auto* partitions_cmd = app.add_subcommand("partitions", "enumerate BNC(chi), BM(chi) or pi_{chi,omega}");
    partitions_cmd->add_option("--chi", part.chi, "word over {L, R}")->required();
    partitions_cmd->add_option("--omega", part.omega, "comma-separated family labels; prints pi_{chi,omega}");
    partitions_cmd->add_flag("--bm", part.bm, "list bi-monotonic (ordered) partitions");
    partitions_cmd->add_flag("--bnc", "list bi-non-crossing partitions (default)");
    partitions_cmd->add_option("--bound", part.bound, "largest word length to enumerate")->check(CLI::Range(1, 12));

    IoArgs c2m, m2c, conv;
    auto* c2m_cmd = app.add_subcommand("cumulants-to-moments", "moments from a cumulant table or grid");
    c2m_cmd->add_option("--in", c2m.inputs, "input document ('-' for stdin)")->required()->expected(1);
    c2m_cmd->add_option("--out", c2m.output, "output path (default stdout)");
    auto* m2c_cmd = app.add_subcommand("moments-to-cumulants", "cumulants from a word distribution or grid");
    m2c_cmd->add_option("--in", m2c.inputs, "input document ('-' for stdin)")->required()->expected(1);
    m2c_cmd->add_option("--out", m2c.output, "output path (default stdout)");
    auto* conv_cmd = app.add_subcommand("convolve", "bi-monotonic convolution of two distributions");
    conv_cmd->add_option("--in", conv.inputs, "two input documents ('-' for stdin)")->required()->expected(2);
    conv_cmd->add_option("--out", conv.output, "output path (default stdout)");

    TransformArgs tr;
    auto* tr_cmd = app.add_subcommand("transform", "Cauchy/F transforms of a grid, or the evolved G_t of a cumulant grid");
    tr_cmd->add_option("--in", tr.io.inputs, "input document ('-' for stdin)")->required()->expected(1);
    tr_cmd->add_option("--out", tr.io.output, "output path (default stdout)");
    tr_cmd->add_option("--t", tr.t, "time at which G_t is evaluated")->check(rational_literal);
    tr_cmd->add_option("--format", tr.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    Type2Args t2;
    auto* t2_cmd = app.add_subcommand("type2", "moment of a word in the type II product representation");
    t2_cmd->add_option("--spaces", t2.spaces, "pointed spaces document")->required();
    t2_cmd->add_option("--word", t2.word, "word document")->required();
    t2_cmd->add_option("--max-len", t2.max_len, "tensor word length limit (default: word length)");

    PsdArgs ps;
    auto* ps_cmd = app.add_subcommand("psd-check", "exact positive-semidefiniteness verdict");
    ps_cmd->add_option("--in", ps.io.inputs, "matrix or grid document ('-' for stdin)")->required()->expected(1);
    ps_cmd->add_option("--out", ps.io.output, "output path (default stdout)");
    auto* n_opt = ps_cmd->add_option("--n", ps.n, "moment matrix size parameter for grid input");

    LimitArgs lim;
    auto* lim_cmd = app.add_subcommand("limit", "limit-theorem cumulants, moments and positivity");
    lim_cmd->add_option("--kind", lim.kind, "clt, poisson or compound")->required()->check(CLI::IsMember({"clt", "poisson", "compound"}));
    lim_cmd->add_option("--alpha", lim.alpha)->check(rational_literal);
    lim_cmd->add_option("--beta", lim.beta)->check(rational_literal);
    lim_cmd->add_option("--gamma", lim.gamma)->check(rational_literal);
    lim_cmd->add_option("--lambda", lim.lambda)->check(rational_literal);
    lim_cmd->add_option("--tau", lim.tau, "jump measure document (compound)");
    lim_cmd->add_option("--order", lim.order, "grid order")->check(CLI::Range(std::size_t{1}, max_order));
    lim_cmd->add_option("--check-n", lim.check_n, "also run the finite-N convergence check");
    lim_cmd->add_option("--out", lim.output, "output path (default stdout)");

    auto* repro_cmd = app.add_subcommand("reproduce-paper", "recompute the reference fixtures; nonzero exit on mismatch");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*partitions_cmd) return partitions(part, ctx);
        if (*c2m_cmd) return cumulants_to_moments(c2m, ctx);
        if (*m2c_cmd) return moments_to_cumulants(m2c, ctx);
        if (*conv_cmd) return convolve_verb(conv, ctx);
        if (*tr_cmd) return transform(tr, ctx);
        if (*t2_cmd) return type2(t2, ctx);
        if (*ps_cmd) {
            ps.has_n = n_opt->count() > 0;
            return psd(ps, ctx);
        }
        if (*lim_cmd) return limit(lim, ctx);
        if (*repro_cmd) return reproduce_paper(ctx);
    } catch (const Error& e) {
        report_error(out, e.kind(), e.what());
        return exit_failure;
    } catch (const Json::exception& e) {
        // Missing keys or wrong value types in an input document.
        report_error(out, ErrorKind::invalid_input, e.what());
        return exit_failure;
    }
    return exit_usage;
}

} // namespace bimono::cli
