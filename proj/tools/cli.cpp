#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wdist/expsums.hpp"
#include "wdist/gf.hpp"
#include "wdist/predict.hpp"
#include "wdist/serialize.hpp"
#include "wdist/structure.hpp"

namespace wdist::cli {

namespace {

using serialize::json;

std::optional<std::string> modulus_path(const RunConfig& cfg) {
    if (cfg.modulus_file) return cfg.modulus_file;
    if (const char* env = std::getenv("WDIST_MODULUS_PATH"); env && *env) return std::string(env);
    return std::nullopt;
}

gf::FieldCtx open_field(const RunConfig& cfg) {
    return gf::build_field(cfg.p, cfg.m, gf::resolve_modulus(cfg.p, cfg.m, modulus_path(cfg)));
}

void require_k(unsigned k) {
    if (k == 0) throw Error(ErrorCode::InvalidParameters, "--k must be >= 1");
}

std::string render_value(const cyclo::CycInt& v) {
    if (auto r = v.as_rational_integer()) return to_string(*r);
    std::string s = "[";
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) s += (i ? ", " : "") + to_string(v.coeffs()[i]);
    return s + "]";
}

void text_distribution(std::ostream& os, const codes::WeightDistribution& dist) {
    os << std::left << std::setw(10) << "weight" << "frequency\n";
    for (const auto& [w, a] : dist.entries) os << std::left << std::setw(10) << w << a << "\n";
    os << "enumerator: " << codes::weight_enumerator(dist) << "\n";
}

std::string modulus_line(const std::vector<std::uint32_t>& modulus) {
    return "modulus: " + (modulus.empty() ? std::string("(none)") : gf::render_poly(modulus)) + "\n";
}

std::string spec_line(const serialize::DistributionRecord& r) {
    std::ostringstream os;
    os << "p=" << r.p << " m=" << r.m << " t=" << r.t;
    if (r.k) {
        os << " k=" << *r.k << " tau=" << *r.tau << " case=" << structure::to_string(*r.case_tag);
    } else {
        os << " (no family match)";
    }
    return os.str();
}

std::string cmd_predict(const RunConfig& cfg) {
    const auto dist = predict::predicted_distribution(cfg.p, cfg.m, cfg.k);
    const auto info = predict::classify(cfg.p, cfg.m, cfg.k);
    std::vector<std::uint32_t> modulus;
    try {
        modulus = gf::resolve_modulus(cfg.p, cfg.m, modulus_path(cfg));
    } catch (const Error&) {
        // The tables need no field; echo an empty modulus when none is known.
    }
    const serialize::DistributionRecord rec{cfg.p,         cfg.m, structure::half_pk_plus_1(cfg.p, cfg.m, cfg.k),
                                            cfg.k,         0u,    info.case_tag,
                                            modulus,       dist};
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv: return serialize::to_csv(dist);
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "p=" << cfg.p << " m=" << cfg.m << " k=" << cfg.k << " case=" << structure::to_string(info.case_tag)
       << " d=" << info.d << " s=" << info.s << "\n"
       << modulus_line(modulus);
    text_distribution(os, dist);
    return os.str();
}

serialize::DistributionRecord spec_record(const gf::FieldCtx& ctx, std::uint64_t t) {
    serialize::DistributionRecord rec;
    rec.p = ctx.p();
    rec.m = ctx.m();
    rec.t = t % ctx.group_order();
    rec.modulus = ctx.modulus();
    try {
        const auto spec = structure::make_code_spec(ctx.p(), ctx.m(), t);
        rec.k = spec.k;
        rec.tau = spec.tau;
        rec.case_tag = spec.case_tag;
    } catch (const Error& e) {
        // Enumeration outside the family is allowed; only prediction is refused.
        if (e.code() != ErrorCode::NoMatch) throw;
    }
    return rec;
}

std::string cmd_enumerate(const RunConfig& cfg) {
    const auto ctx = open_field(cfg);
    auto rec = spec_record(ctx, cfg.t);
    const auto used = codes::resolve_method(ctx, rec.t, cfg.method);
    rec.dist = codes::weight_distribution(ctx, rec.t, used, cfg.workers);
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv: return serialize::to_csv(rec.dist);
        case Format::Text: break;
    }
    std::ostringstream os;
    os << spec_line(rec) << " method=" << codes::to_string(used) << "\n" << modulus_line(rec.modulus);
    text_distribution(os, rec.dist);
    if (!rec.dist.entries.empty() && rec.dist.entries.rbegin()->first > 0) {
        os << "minimum distance: " << codes::minimum_distance(rec.dist) << "\n";
    }
    return os.str();
}

std::string cmd_verify(const RunConfig& cfg, bool& pass) {
    const auto ctx = open_field(cfg);
    const auto report = predict::verify(ctx, cfg.t, cfg.method, cfg.workers);
    pass = report.pass;
    const auto rec = serialize::make_report_record(report, ctx.modulus());
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv: {
            std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows;
            for (const auto& [w, a] : report.predicted.entries) rows[w].first = a;
            for (const auto& [w, a] : report.computed.entries) rows[w].second = a;
            std::string out = "weight,predicted,computed\n";
            for (const auto& [w, pc] : rows) {
                out += std::to_string(w) + "," + std::to_string(pc.first) + "," + std::to_string(pc.second) + "\n";
            }
            return out;
        }
        case Format::Text: break;
    }
    std::ostringstream os;
    os << (report.pass ? "PASS" : "FAIL") << " " << spec_line(rec.computed)
       << " method=" << codes::to_string(report.method) << "\n"
       << modulus_line(ctx.modulus());
    os << std::left << std::setw(10) << "weight" << std::setw(14) << "predicted" << "computed\n";
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto& [w, a] : report.predicted.entries) rows[w].first = a;
    for (const auto& [w, a] : report.computed.entries) rows[w].second = a;
    for (const auto& [w, pc] : rows) {
        os << std::left << std::setw(10) << w << std::setw(14) << pc.first << pc.second
           << (pc.first == pc.second ? "" : "  <-- differs") << "\n";
    }
    return os.str();
}

expsums::SumDistribution t_ab_sums(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    const auto spec = structure::make_code_spec(ctx.p(), ctx.m(), structure::half_pk_plus_1(ctx.p(), ctx.m(), k));
    if (structure::is_even_s(spec.case_tag)) return expsums::t_distribution(ctx, spec, workers);
    if (ctx.order() > codes::kPairDeltaLimit) {
        throw Error(ErrorCode::TooLarge, "odd s: T(a,b) needs per-pair sums, limited to p^m <= " +
                                             std::to_string(codes::kPairDeltaLimit));
    }
    return expsums::delta_distribution(ctx, spec.t, workers);
}

std::string cmd_expsum(const RunConfig& cfg) {
    require_k(cfg.k);
    const auto ctx = open_field(cfg);
    serialize::SumRecord rec{cfg.p, cfg.m, cfg.k, cfg.which, ctx.modulus(), {}};
    if (cfg.which == "t_alpha") {
        rec.sums = expsums::t_alpha_distribution(ctx, cfg.k, cfg.workers);
    } else if (cfg.which == "r_alpha") {
        rec.sums = expsums::make_r_table(ctx, cfg.k, cfg.workers).distribution();
    } else {
        rec.sums = t_ab_sums(ctx, cfg.k, cfg.workers);
    }
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv: return serialize::to_csv(rec.sums);
        case Format::Text: break;
    }
    std::ostringstream os;
    os << "p=" << cfg.p << " m=" << cfg.m << " k=" << cfg.k << " which=" << cfg.which << " total=" << rec.sums.total
       << "\n"
       << modulus_line(rec.modulus);
    os << std::left << std::setw(24) << "value" << "count\n";
    for (const auto& [value, count] : rec.sums.entries) os << std::left << std::setw(24) << render_value(value) << count << "\n";
    return os.str();
}

std::string cmd_coset(const RunConfig& cfg) {
    const std::uint64_t n = structure::group_order(cfg.p, cfg.m);
    if (cfg.i >= n) throw Error(ErrorCode::InvalidParameters, "--i must be below p^m - 1");
    const serialize::CosetRecord rec{cfg.p, cfg.m, cfg.i, structure::cyclotomic_coset(cfg.p, cfg.m, cfg.i)};
    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv:
            os << "element\n";
            for (auto c : rec.coset) os << c << "\n";
            return os.str();
        case Format::Text: break;
    }
    for (std::size_t j = 0; j < rec.coset.size(); ++j) os << (j ? " " : "") << rec.coset[j];
    os << "\n";
    return os.str();
}

std::string cmd_minpoly(const RunConfig& cfg) {
    const auto ctx = open_field(cfg);
    const std::uint64_t n = ctx.group_order();
    const auto beta = ctx.exp((n - cfg.t % n) % n);
    const serialize::MinpolyRecord rec{cfg.p,
                                       cfg.m,
                                       cfg.t % n,
                                       ctx.modulus(),
                                       structure::minimal_polynomial(ctx, beta),
                                       structure::minimal_polynomial(ctx, ctx.neg(beta))};
    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: return serialize::to_json(rec).dump(2) + "\n";
        case Format::Csv:
            os << "name,degree,coefficients\n";
            for (const auto& [name, h] : {std::pair{"h1", &rec.h1}, std::pair{"h2", &rec.h2}}) {
                os << name << "," << h->size() - 1 << ",";
                for (std::size_t j = 0; j < h->size(); ++j) os << (j ? " " : "") << (*h)[j];
                os << "\n";
            }
            return os.str();
        case Format::Text: break;
    }
    os << modulus_line(rec.modulus);
    os << "h1 = minpoly(pi^-" << rec.t << "), degree " << rec.h1.size() - 1 << ": " << gf::render_poly(rec.h1, 'X') << "\n";
    os << "h2 = minpoly(-pi^-" << rec.t << "), degree " << rec.h2.size() - 1 << ": " << gf::render_poly(rec.h2, 'X')
       << "\n";
    return os.str();
}

}  // namespace

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooLarge:
        case ErrorCode::Overflow: return kExitTooLarge;
        case ErrorCode::InadmissibleT: return kExitInadmissible;
        case ErrorCode::NoMatch: return kExitNoMatch;
        case ErrorCode::LemmaViolation:
        case ErrorCode::IdentityViolation:
        case ErrorCode::NonRationalSum: return kExitFail;
        default: return kExitBadParameters;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string method = "auto", format = "text";

    CLI::App app{"Weight distributions of two-zero cyclic codes over F_p"};
    app.name("wdist");
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool field) {
        sub->add_option("--p", cfg.p, "odd prime")->required();
        sub->add_option("--m", cfg.m, "extension degree")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--output", cfg.output, "write the result to this file");
        if (field) sub->add_option("--modulus-file", cfg.modulus_file, "lines of 'p m c_0 ... c_m'");
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--method", method, "enumeration method")->check(CLI::IsMember({"direct", "fast", "auto"}));
        sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    };

    auto* predict_cmd = app.add_subcommand("predict", "closed-form weight distribution for (p, m, k)");
    add_common(predict_cmd, true);
    predict_cmd->add_option("--k", cfg.k, "exponent k of (p^k+1)/2")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the weight distribution of C_t");
    add_common(enumerate_cmd, true);
    add_run(enumerate_cmd);
    enumerate_cmd->add_option("--t", cfg.t, "exponent t")->required();

    auto* verify_cmd = app.add_subcommand("verify", "compare the enumerated and predicted distributions of C_t");
    add_common(verify_cmd, true);
    add_run(verify_cmd);
    verify_cmd->add_option("--t", cfg.t, "exponent t")->required();

    auto* expsum_cmd = app.add_subcommand("expsum", "value distribution of an exponential sum");
    add_common(expsum_cmd, true);
    expsum_cmd->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    expsum_cmd->add_option("--k", cfg.k, "exponent k")->required();
    expsum_cmd->add_option("--which", cfg.which, "which sum")->check(CLI::IsMember({"t_alpha", "r_alpha", "t_ab"}));

    auto* coset_cmd = app.add_subcommand("coset", "p-cyclotomic coset of i modulo p^m - 1");
    add_common(coset_cmd, false);
    coset_cmd->add_option("--i", cfg.i, "coset representative")->required();

    auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomials of pi^-t and -pi^-t");
    add_common(minpoly_cmd, true);
    minpoly_cmd->add_option("--t", cfg.t, "exponent t")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadParameters;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.method = *codes::method_from_string(method);
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

    try {
        std::string result;
        int code = kExitOk;
        if (cfg.subcommand == "predict") {
            result = cmd_predict(cfg);
        } else if (cfg.subcommand == "enumerate") {
            result = cmd_enumerate(cfg);
        } else if (cfg.subcommand == "verify") {
            bool pass = false;
            result = cmd_verify(cfg, pass);
            code = pass ? kExitOk : kExitFail;
        } else if (cfg.subcommand == "expsum") {
            result = cmd_expsum(cfg);
        } else if (cfg.subcommand == "coset") {
            result = cmd_coset(cfg);
        } else {
            result = cmd_minpoly(cfg);
        }
        if (cfg.output) {
            std::ofstream file(*cfg.output, std::ios::binary);
            if (!file) throw Error(ErrorCode::InvalidParameters, "cannot write " + *cfg.output);
            file << result;
        } else {
            out << result;
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

}  // namespace wdist::cli
