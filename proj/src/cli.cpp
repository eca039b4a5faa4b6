#include "liechar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liechar/cache.hpp"

namespace liechar {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string algebra;
    int max = 2;
    int through = 12;
    std::vector<int> direction;
    std::size_t axis = 1;
    std::string format = "json";
    std::string out_path;
    std::string file;
    bool no_cache = false;
    bool timings = false;
    std::size_t rank_cap = 6;
};

std::string weight_label(const Weight& w) {
    std::string s;
    for (int v : w.coords) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

class Session {
public:
    explicit Session(const Options& opt) : opt_(opt) {
        if (!opt.no_cache) cache_.emplace(ResultCache::default_dir());
    }

    AlgebraData algebra() const {
        AlgebraData alg = parse_algebra(opt_.algebra);
        if (alg.rank > opt_.rank_cap)
            throw UsageError("rank " + std::to_string(alg.rank) + " exceeds the cap of " + std::to_string(opt_.rank_cap) +
                             " (raise it with --rank-cap)");
        return alg;
    }

    std::optional<std::vector<int>> direction(const AlgebraData& alg) const {
        if (opt_.direction.empty()) return std::nullopt;
        if (opt_.direction.size() != alg.rank) throw UsageError("--direction needs " + std::to_string(alg.rank) + " entries");
        bool any = false;
        for (int c : opt_.direction) {
            if (c != 0 && c != 1) throw UsageError("--direction entries must be 0 or 1");
            any = any || c == 1;
        }
        if (!any) throw UsageError("--direction must contain a 1");
        return opt_.direction;
    }

    // Returns the payload for `key`, computing and storing it on a miss.
    std::string cached(const json& key, const std::function<std::string()>& compute) const {
        if (cache_) {
            if (auto hit = cache_->load(key)) return *hit;
        }
        std::string payload = compute();
        if (cache_) cache_->store(key, payload);
        return payload;
    }

    const CSOperator& cs_operator(const AlgebraData& alg) {
        if (!table_) {
            const auto payload = cached(ResultCache::make_key(alg.name(), "operator", json::object()),
                                        [&] { return operator_to_json(build_cs_operator(alg)).dump(); });
            table_.emplace(operator_from_json(json::parse(payload)));
        }
        return table_->op();
    }

    CharacterTable& table(const AlgebraData& alg) {
        cs_operator(alg);
        return *table_;
    }

    ZPoly character(const AlgebraData& alg, const Weight& m) {
        const auto payload = cached(ResultCache::make_key(alg.name(), "char", {{"m", m.coords}}),
                                    [&] { return to_json(table(alg).get(m)).dump(); });
        return zpoly_from_json(json::parse(payload), alg.rank);
    }

private:
    const Options& opt_;
    std::optional<ResultCache> cache_;
    std::optional<CharacterTable> table_;
};

json header(const AlgebraData& alg) { return {{"schema_version", kSchemaVersion}, {"algebra", alg.name()}}; }

int cmd_chars(const Options& opt, std::ostream& out) {
    Session s(opt);
    const AlgebraData alg = s.algebra();
    if (opt.max < 0) throw UsageError("--max must be non-negative");
    json rows = json::array();
    std::ostringstream text;
    for (const auto& m : dominant_box(alg.rank, opt.max)) {
        const ZPoly chi = s.character(alg, m);
        rows.push_back({{"weight", weight_to_json(m)}, {"poly", to_json(chi)}});
        text << "chi(" << weight_label(m) << ") = " << to_string(chi) << '\n';
    }
    if (opt.format == "text") {
        out << text.str();
    } else {
        json doc = header(alg);
        doc["max"] = opt.max;
        doc["characters"] = rows;
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

void render_genfun_text(const GenFunResult& r, std::ostream& out) {
    out << "algebra: " << r.algebra << '\n';
    if (r.direction) out << "direction: " << join(*r.direction) << '\n';
    out << "numerator: " << to_string(r.gf.numerator()) << '\n';
    for (std::size_t j = 0; j < r.denominator_factors.size(); ++j)
        out << "D" << j + 1 << ": " << to_string(r.denominator_factors[j]) << '\n';
    out << "dim P: " << to_string(r.dim_gf.P) << '\n';
    out << "dim Q: " << to_string(r.dim_gf.Q) << '\n';
    out << "fallback: " << (r.used_fallback ? "true" : "false") << '\n';
    out << "verified: " << (r.verified ? "true" : "false") << '\n';
    for (const auto& [step, ms] : r.timings) out << "time " << step << ": " << ms << " ms\n";
}

int cmd_genfun(const Options& opt, std::ostream& out) {
    Session s(opt);
    const AlgebraData alg = s.algebra();
    const auto dir = s.direction(alg);
    auto compute = [&] {
        CharacterTable& table = s.table(alg);
        return dir ? ray_genfun(table, *dir) : generating_function(table);
    };
    GenFunResult r;
    if (opt.timings) {
        r = compute();
    } else {
        const json key = ResultCache::make_key(alg.name(), "genfun", {{"direction", dir ? json(*dir) : json(nullptr)}});
        r = genfun_from_json(json::parse(s.cached(key, [&] { return genfun_to_json(compute()).dump(); })));
    }
    if (opt.format == "text")
        render_genfun_text(r, out);
    else
        out << genfun_to_json(r, opt.timings).dump(2) << '\n';
    return r.verified ? kExitOk : kExitUnverified;
}

int cmd_operator(const Options& opt, std::ostream& out) {
    Session s(opt);
    const AlgebraData alg = s.algebra();
    const CSOperator& cs = s.cs_operator(alg);
    if (opt.format != "text") {
        out << operator_to_json(cs).dump(2) << '\n';
        return kExitOk;
    }
    for (std::size_t j = 0; j < alg.rank; ++j)
        for (std::size_t k = j; k < alg.rank; ++k)
            out << "a" << j + 1 << k + 1 << " = " << to_string(cs.op.second_coeff(j, k)) << '\n';
    for (std::size_t j = 0; j < alg.rank; ++j) out << "b" << j + 1 << " = " << to_string(cs.op.first_coeff(j)) << '\n';
    out << "eigenvalue quadratic form:";
    for (const auto& row : cs.eigen.quadratic) {
        out << " [";
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k].get_str();
        out << "]";
    }
    out << "\neigenvalue linear part:";
    for (const auto& v : cs.eigen.linear) out << ' ' << v.get_str();
    out << '\n';
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    std::ifstream in(opt.file);
    if (!in) throw UsageError("cannot read " + opt.file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(opt.file + ": " + e.what());
    }
    GenFunResult r;
    try {
        r = genfun_from_json(doc);
    } catch (const json::exception& e) {
        throw SchemaMismatch(opt.file + ": " + e.what());
    }
    Options inner = opt;
    inner.algebra = r.algebra;
    Session s(inner);
    const AlgebraData alg = s.algebra();
    const bool ok = verify_pde(s.cs_operator(alg), r.gf, r.direction);
    if (opt.format == "text")
        out << "verified: " << (ok ? "true" : "false") << '\n';
    else
        out << json{{"algebra", r.algebra}, {"verified", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitUnverified;
}

int cmd_dims(const Options& opt, std::ostream& out) {
    Session s(opt);
    const AlgebraData alg = s.algebra();
    const auto dir = s.direction(alg);
    if (opt.max < 0) throw UsageError("--max must be non-negative");
    const DimGenFun f = dir ? dim_genfun_ray(alg, *dir) : dim_genfun(alg);
    std::vector<Weight> weights;
    if (dir) {
        for (int k = 0; k <= opt.max; ++k) weights.push_back(k * Weight(Exponents(dir->begin(), dir->end())));
    } else {
        weights = dominant_box(alg.rank, opt.max);
    }
    if (opt.format == "text") {
        out << "P: " << to_string(f.P) << "\nQ: " << to_string(f.Q) << '\n';
        for (const auto& m : weights) out << "dim(" << weight_label(m) << ") = " << dimension(alg, m).get_str() << '\n';
        return kExitOk;
    }
    json doc = header(alg);
    doc["direction"] = dir ? json(*dir) : json(nullptr);
    doc["P"] = int_tpoly_to_json(f.P);
    doc["Q"] = int_tpoly_to_json(f.Q);
    json rows = json::array();
    for (const auto& m : weights) rows.push_back({{"weight", weight_to_json(m)}, {"dim", dimension(alg, m).get_str()}});
    doc["dimensions"] = rows;
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_recurrence(const Options& opt, std::ostream& out) {
    Session s(opt);
    const AlgebraData alg = s.algebra();
    if (opt.axis < 1 || opt.axis > alg.rank) throw UsageError("--axis must lie in 1.." + std::to_string(alg.rank));
    const std::size_t j = opt.axis - 1;
    const Recurrence rec = recurrence_from_denominator(s.table(alg), j);
    const int last = std::max(opt.through, rec.threshold);

    // residual(m) = sum_k d_k chi_{(m-k) e_j}, checked against the solver.
    auto residual = [&](int m) {
        ZPoly acc(alg.rank);
        for (std::size_t k = 0; k < rec.coefficients.size() && static_cast<int>(k) <= m; ++k) {
            Weight w = Weight::zero(alg.rank);
            w.coords[j] = m - static_cast<int>(k);
            acc += rec.coefficients[k] * s.character(alg, w);
        }
        return acc;
    };
    std::vector<bool> holds(last + 1);
    for (int m = 0; m <= last; ++m) holds[m] = residual(m).is_zero();
    int onset = last + 1;
    while (onset > 0 && holds[onset - 1]) --onset;
    const bool ok = onset <= rec.threshold;

    if (opt.format == "text") {
        out << "algebra: " << alg.name() << "\naxis: " << opt.axis << '\n';
        for (std::size_t k = 0; k < rec.coefficients.size(); ++k)
            out << "d" << k << " = " << to_string(rec.coefficients[k]) << '\n';
        out << "numerator: " << to_string(rec.numerator) << '\n';
        out << "threshold: " << rec.threshold << "\nonset: " << onset << "\nchecked through: " << last << '\n';
        out << "holds: " << (ok ? "true" : "false") << '\n';
    } else {
        json doc = header(alg);
        doc["axis"] = opt.axis;
        json coeffs = json::array();
        for (const auto& c : rec.coefficients) coeffs.push_back(to_json(c));
        doc["coefficients"] = coeffs;
        doc["numerator"] = to_json(rec.numerator);
        doc["threshold"] = rec.threshold;
        doc["onset"] = onset;
        doc["checked_through"] = last;
        doc["holds"] = ok;
        out << doc.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitUnverified;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characters of simple Lie algebras as polynomials in the fundamental characters"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out_path, "Write output to this file instead of stdout");
    app.add_flag("--no-cache", opt.no_cache, "Bypass the result cache");
    app.add_option("--rank-cap", opt.rank_cap, "Refuse algebras above this rank");

    auto algebra_opt = [&](CLI::App* sub) {
        sub->add_option("--algebra", opt.algebra, "Algebra such as A2 or C2")->required();
    };
    auto* chars = app.add_subcommand("chars", "Characters for all dominant weights with coordinates <= --max");
    algebra_opt(chars);
    chars->add_option("--max", opt.max, "Largest coordinate");

    auto* genfun = app.add_subcommand("genfun", "Generating function, verified against the differential equation");
    algebra_opt(genfun);
    genfun->add_option("--direction", opt.direction, "0/1 entries selecting a ray, e.g. 1,1")->delimiter(',');
    genfun->add_flag("--timings", opt.timings, "Report per-step timings (bypasses the cache)");

    auto* op = app.add_subcommand("operator", "Coefficients of the second-order operator");
    algebra_opt(op);

    auto* verify = app.add_subcommand("verify", "Re-check a generating function JSON file");
    verify->add_option("file", opt.file, "Output of the genfun command")->required();

    auto* dims = app.add_subcommand("dims", "Dimension generating function and dimensions up to --max");
    algebra_opt(dims);
    dims->add_option("--max", opt.max, "Largest coordinate");
    dims->add_option("--direction", opt.direction, "0/1 entries selecting a ray")->delimiter(',');

    auto* rec = app.add_subcommand("recurrence", "Recurrence along one axis from the denominator factor");
    algebra_opt(rec);
    rec->add_option("--axis", opt.axis, "1-based axis");
    rec->add_option("--max", opt.through, "Check the recurrence through this index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buffer;
    int status = kExitOk;
    try {
        if (*chars) status = cmd_chars(opt, buffer);
        else if (*genfun) status = cmd_genfun(opt, buffer);
        else if (*op) status = cmd_operator(opt, buffer);
        else if (*verify) status = cmd_verify(opt, buffer);
        else if (*dims) status = cmd_dims(opt, buffer);
        else if (*rec) status = cmd_recurrence(opt, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedAlgebra& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (opt.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        file << buffer.str();
        if (!file) {
            err << "error: cannot write " << opt.out_path << '\n';
            return kExitUsage;
        }
    }
    return status;
}

} // namespace liechar
