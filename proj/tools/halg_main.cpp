#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "halg/conjectures.hpp"
#include "halg/generic.hpp"
#include "halg/hilbert.hpp"
#include "halg/koszul.hpp"
#include "halg/parser.hpp"
#include "halg/series.hpp"

using ojson = nlohmann::ordered_json;
using namespace halg;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation load_presentation(const std::string& path) {
    try {
        return parse_presentation(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

AlgebraType parse_type_arg(std::string spec) {
    std::erase_if(spec, [](char c) { return c == ' ' || c == '(' || c == ')'; });
    auto semi = spec.find(';');
    std::string npart = spec.substr(0, semi);
    std::uint32_t n = static_cast<std::uint32_t>(std::stoul(npart));
    std::vector<std::uint32_t> degs;
    if (semi != std::string::npos && semi + 1 < spec.size()) {
        std::istringstream rest(spec.substr(semi + 1));
        std::string tok;
        while (std::getline(rest, tok, ','))
            if (!tok.empty()) degs.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return AlgebraType(n, std::move(degs));
}

PowerSeries parse_coeffs_arg(const std::string& spec) {
    std::vector<mpq_class> coeffs;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::erase(tok, ' ');
        if (tok.empty()) continue;
        coeffs.emplace_back(tok);
    }
    if (coeffs.empty()) throw std::runtime_error("empty coefficient list");
    return PowerSeries(std::move(coeffs));
}

ojson type_json(const AlgebraType& t) {
    ojson j;
    j["n"] = t.n;
    j["degrees"] = t.degrees;
    return j;
}

ojson series_json(const PowerSeries& s) { return series_strings(s); }

std::string series_text(const PowerSeries& s) {
    std::string out;
    for (const auto& c : series_strings(s)) {
        if (!out.empty()) out += ",";
        out += c;
    }
    return out;
}

ojson slice_json(const std::vector<mpz_class>& dims) {
    ojson arr = ojson::array();
    for (const auto& d : dims) {
        if (d.fits_ulong_p())
            arr.push_back(d.get_ui());
        else
            arr.push_back(d.get_str());
    }
    return arr;
}

void emit(const ojson& j, bool json_flag, const std::string& text,
          const std::string& out_path) {
    std::string payload = json_flag ? j.dump(2) + "\n" : text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << payload;
    } else {
        std::cout << payload;
    }
}

struct CommonOpts {
    std::uint32_t degree = 0;
    std::uint32_t prime = kDefaultPrime;
    std::uint32_t samples = 3;
    std::uint64_t seed = 1;
    bool json = false;
    bool strict = false;
    std::string out;
};

std::string verdict_text(const ConjectureVerdict& v) {
    std::ostringstream os;
    os << "conjecture " << v.id << "  type (" << v.t.n << "," << v.t.r() << ")"
       << "  degree " << v.trunc << "  samples " << v.samples << "\n";
    os << "expected  " << series_text(v.expected) << "\n";
    os << "observed  " << series_text(v.observed) << "\n";
    os << (v.proven_regime ? "regime: proven" : "regime: conjectural comparison")
       << "\n";
    if (v.expected_koszul)
        os << "koszul expected " << (*v.expected_koszul ? "yes" : "no")
           << ", numerical test " << ((*v.agrees) == *v.expected_koszul
                                          ? ""
                                          : "(disagrees) ")
           << (std::all_of(v.sample_pass.begin(), v.sample_pass.end(),
                           [](bool b) { return b; })
                   ? "passes"
                   : "fails")
           << " on all samples\n";
    os << (v.overall_match ? "match: all degrees" : "match: MISMATCH") << "\n";
    return os.str();
}

ojson verdict_json(const ConjectureVerdict& v) {
    ojson j;
    j["id"] = v.id;
    ojson params;
    params["flavor"] = flavor_name(v.flavor);
    params["type"] = type_json(v.t);
    params["degree"] = v.trunc;
    params["samples"] = v.samples;
    params["seed"] = v.seed;
    params["prime"] = v.prime;
    j["parameters"] = params;
    j["expected"] = series_json(v.expected);
    j["observed"] = series_json(v.observed);
    j["match"] = v.match;
    j["proven_regime"] = v.proven_regime;
    j["overall_match"] = v.overall_match;
    if (v.expected_koszul) {
        j["expected_koszul"] = *v.expected_koszul;
        j["sample_pass"] = v.sample_pass;
        j["agrees"] = *v.agrees;
    }
    return j;
}

// exit code 2 when --strict and the verdict violates a proven claim
int verdict_rc(const ConjectureVerdict& v, bool strict) {
    if (!strict) return 0;
    if (v.agrees) return *v.agrees ? 0 : 2;
    return v.proven_regime && !v.overall_match ? 2 : 0;
}

ojson hilbert_json(const Presentation& p, const HilbertResult& h) {
    ojson j;
    j["series"] = series_json(h.series);
    j["slice_dims"] = slice_json(h.slice_dims);
    j["type"] = type_json(type_of_presentation(p));
    if (p.flavor == Flavor::lie)
        j["lie_series"] = series_json(lie_series(p, h.trunc));
    return j;
}

std::string hilbert_text(const Presentation& p, const HilbertResult& h) {
    std::ostringstream os;
    os << "series " << series_text(h.series) << "\n";
    os << "slice_dims ";
    for (std::size_t i = 0; i < h.slice_dims.size(); ++i)
        os << (i ? "," : "") << h.slice_dims[i].get_str();
    os << "\n";
    if (p.flavor == Flavor::lie)
        os << "lie_series " << series_text(lie_series(p, h.trunc)) << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "halg: Hilbert series, generic estimates and Koszul duals of finitely "
        "presented graded algebras over prime fields"};
    app.require_subcommand(1);
    int rc = 0;

    CommonOpts o;
    std::string file, type_spec, coeffs_spec, flavor_spec = "noncommutative";
    std::uint32_t nn = 2, rr = 1;

    auto add_out = [&](CLI::App* c) {
        c->add_flag("--json", o.json, "emit a JSON report");
        c->add_option("--out", o.out, "write the report to a file");
    };

    // hilbert <file> --degree D
    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series of a presentation file");
    c_hilbert->add_option("file", file)->required();
    c_hilbert->add_option("--degree", o.degree, "truncation degree")->required();
    add_out(c_hilbert);
    c_hilbert->callback([&] {
        Presentation p = load_presentation(file);
        HilbertResult h = hilbert_series(p, o.degree);
        emit(hilbert_json(p, h), o.json, hilbert_text(p, h), o.out);
    });

    // type <file> [--degree D]
    auto* c_type = app.add_subcommand("type", "algebra type with dropped redundant relations");
    c_type->add_option("file", file)->required();
    c_type->add_option("--degree", o.degree, "degree bound (default: max relation degree)");
    add_out(c_type);
    c_type->callback([&] {
        Presentation p = load_presentation(file);
        std::uint32_t d = std::max(o.degree, p.max_relation_degree());
        TypeAnalysis a = algebra_type(p, d);
        ojson j;
        j["type"] = type_json(a.type);
        j["minimal"] = a.minimal;
        j["dropped"] = a.dropped;
        std::ostringstream os;
        os << "type (" << a.type.n << ";";
        for (std::size_t i = 0; i < a.type.degrees.size(); ++i)
            os << (i ? "," : "") << a.type.degrees[i];
        os << ")\nminimal " << (a.minimal ? "yes" : "no") << "\ndropped";
        for (auto i : a.dropped) os << " " << i;
        os << "\n";
        emit(j, o.json, os.str(), o.out);
    });

    // dual <file>
    auto* c_dual = app.add_subcommand("dual", "Koszul dual of a quadratic presentation");
    c_dual->add_option("file", file)->required();
    add_out(c_dual);
    c_dual->callback([&] {
        Presentation p = load_presentation(file);
        Presentation d = koszul_dual(p);
        std::string text = serialize_presentation(d);
        ojson j;
        j["flavor"] = flavor_name(d.flavor);
        j["type"] = type_json(type_of_presentation(d));
        j["presentation"] = text;
        emit(j, o.json, text, o.out);
    });

    // strongfree <file> --degree D
    auto* c_sf = app.add_subcommand("strongfree", "bounded strong-freeness certificate");
    c_sf->add_option("file", file)->required();
    c_sf->add_option("--degree", o.degree)->required();
    add_out(c_sf);
    c_sf->callback([&] {
        Presentation p = load_presentation(file);
        bool ok = strongly_free_test(p, o.degree);
        ojson j;
        j["strongly_free_upto"] = o.degree;
        j["verdict"] = ok;
        std::ostringstream os;
        os << (ok ? "strongly free" : "not strongly free") << " up to degree "
           << o.degree << "\n";
        emit(j, o.json, os.str(), o.out);
    });

    // span3 <file>
    auto* c_span = app.add_subcommand("span3", "degree-3 independence/spanning of quadratic multiples");
    c_span->add_option("file", file)->required();
    add_out(c_span);
    c_span->callback([&] {
        Presentation p = load_presentation(file);
        Degree3Report rep = degree3_span_test(p);
        ojson j;
        j["rank"] = rep.rank;
        j["independent"] = rep.independent;
        j["spanning"] = rep.spanning;
        std::ostringstream os;
        os << "rank " << rep.rank << "\nindependent "
           << (rep.independent ? "yes" : "no") << "\nspanning "
           << (rep.spanning ? "yes" : "no") << "\n";
        emit(j, o.json, os.str(), o.out);
    });

    // generic --flavor f --type t --degree D
    auto* c_gen = app.add_subcommand("generic", "random-sampling estimate of the generic series");
    c_gen->add_option("--flavor", flavor_spec, "commutative|noncommutative|lie");
    c_gen->add_option("--type", type_spec, "type, e.g. \"3;2,2,3\"")->required();
    c_gen->add_option("--degree", o.degree)->required();
    c_gen->add_option("--samples", o.samples);
    c_gen->add_option("--seed", o.seed);
    c_gen->add_option("--prime", o.prime);
    add_out(c_gen);
    c_gen->callback([&] {
        Flavor fl = flavor_from_name(flavor_spec);
        AlgebraType t = parse_type_arg(type_spec);
        PrimeField field(o.prime);
        GenericReport rep = generic_estimate(fl, t, o.degree, o.samples, o.seed, field);
        ojson j;
        j["flavor"] = flavor_name(fl);
        j["type"] = type_json(t);
        j["prime"] = rep.prime;
        j["seeds"] = rep.seeds;
        ojson samples = ojson::array();
        for (const auto& s : rep.per_sample_series) samples.push_back(series_json(s));
        j["samples"] = samples;
        j["estimate"] = series_json(rep.estimate);
        j["unanimous"] = rep.unanimous;
        ojson sample_types = ojson::array();
        if (o.degree >= (t.degrees.empty() ? 0 : t.degrees.back())) {
            for (std::uint64_t seed : rep.seeds) {
                Presentation p = sample_presentation(fl, t, field, seed);
                TypeAnalysis a = algebra_type(p, o.degree);
                ojson st;
                st["type"] = type_json(a.type);
                st["minimal"] = a.minimal;
                st["dropped"] = a.dropped;
                sample_types.push_back(st);
            }
        }
        j["sample_types"] = sample_types;
        std::ostringstream os;
        os << "estimate " << series_text(rep.estimate) << "\nunanimous";
        bool all = std::all_of(rep.unanimous.begin(), rep.unanimous.end(),
                               [](bool b) { return b; });
        os << (all ? " at every degree" : ":");
        if (!all) {
            for (std::size_t d = 0; d < rep.unanimous.size(); ++d)
                if (!rep.unanimous[d]) os << " !" << d;
            os << "  (samples disagree; consider more samples or a new seed)";
        }
        os << "\n";
        emit(j, o.json, os.str(), o.out);
    });

    // conjecture {froberg|anick|lie|koszul}
    auto* c_conj = app.add_subcommand("conjecture", "compare sampled series with the closed forms");
    c_conj->require_subcommand(1);
    auto add_conj_common = [&](CLI::App* c, bool with_type) {
        if (with_type)
            c->add_option("--type", type_spec)->required();
        else {
            c->add_option("--n", nn)->required();
            c->add_option("--r", rr)->required();
        }
        c->add_option("--degree", o.degree)->required();
        c->add_option("--samples", o.samples);
        c->add_option("--seed", o.seed);
        c->add_option("--prime", o.prime);
        c->add_flag("--strict", o.strict, "exit 2 on a proven-regime violation");
        add_out(c);
    };
    auto conj_finish = [&](const ConjectureVerdict& v) {
        emit(verdict_json(v), o.json, verdict_text(v), o.out);
        rc = std::max(rc, verdict_rc(v, o.strict));
    };
    auto* c_fro = c_conj->add_subcommand("froberg", "commutative closed form");
    add_conj_common(c_fro, true);
    c_fro->callback([&] {
        conj_finish(check_froberg(parse_type_arg(type_spec), o.degree, o.samples,
                                  o.seed, PrimeField(o.prime)));
    });
    auto* c_ani = c_conj->add_subcommand("anick", "NC quadratic closed form");
    add_conj_common(c_ani, false);
    c_ani->callback([&] {
        conj_finish(check_anick_quadratic(nn, rr, o.degree, o.samples, o.seed,
                                          PrimeField(o.prime)));
    });
    auto* c_lie = c_conj->add_subcommand("lie", "Lie quadratic closed form");
    add_conj_common(c_lie, false);
    c_lie->callback([&] {
        conj_finish(
            check_lie(nn, rr, o.degree, o.samples, o.seed, PrimeField(o.prime)));
    });
    auto* c_kos = c_conj->add_subcommand("koszul", "Koszulness threshold");
    add_conj_common(c_kos, false);
    c_kos->callback([&] {
        conj_finish(
            check_genkos(nn, rr, o.degree, o.samples, o.seed, PrimeField(o.prime)));
    });

    // series {froberg|anick-inv|exp|log|bracket}
    auto* c_ser = app.add_subcommand("series", "series operators");
    c_ser->require_subcommand(1);
    bool got_degree = false;
    auto emit_series = [&](const PowerSeries& s) {
        ojson j;
        j["series"] = series_json(s);
        emit(j, o.json, "series " + series_text(s) + "\n", o.out);
    };
    auto* s_fro = c_ser->add_subcommand("froberg", "[prod(1-z^di)/(1-z)^n]");
    s_fro->add_option("--type", type_spec)->required();
    s_fro->add_option("--degree", o.degree)->required();
    add_out(s_fro);
    s_fro->callback(
        [&] { emit_series(froberg_series(parse_type_arg(type_spec), o.degree)); });
    auto* s_ani = c_ser->add_subcommand("anick-inv", "1/p_t(z), unbracketed");
    s_ani->add_option("--type", type_spec)->required();
    s_ani->add_option("--degree", o.degree)->required();
    add_out(s_ani);
    s_ani->callback([&] {
        AlgebraType t = parse_type_arg(type_spec);
        emit_series(inverse(anick_polynomial(t).extended(o.degree)));
    });
    auto* s_exp = c_ser->add_subcommand("exp", "enveloping-algebra series of a dimension series");
    s_exp->add_option("--coeffs", coeffs_spec, "comma list, constant term first")->required();
    s_exp->add_option("--degree", o.degree)->each([&](const std::string&) { got_degree = true; });
    add_out(s_exp);
    s_exp->callback([&] {
        PowerSeries L = parse_coeffs_arg(coeffs_spec);
        if (got_degree) L = L.extended(o.degree);
        emit_series(exp_op(L));
    });
    auto* s_log = c_ser->add_subcommand("log", "dimension series of an enveloping-algebra series");
    s_log->add_option("--coeffs", coeffs_spec)->required();
    s_log->add_option("--degree", o.degree)->each([&](const std::string&) { got_degree = true; });
    add_out(s_log);
    s_log->callback([&] {
        PowerSeries V = parse_coeffs_arg(coeffs_spec);
        if (got_degree) V = V.extended(o.degree);
        emit_series(log_op(V));
    });
    auto* s_br = c_ser->add_subcommand("bracket", "truncate at the first nonpositive coefficient");
    s_br->add_option("--coeffs", coeffs_spec)->required();
    add_out(s_br);
    s_br->callback([&] { emit_series(bracket(parse_coeffs_arg(coeffs_spec))); });

    // corpus {list|run <name>}
    auto* c_corp = app.add_subcommand("corpus", "named example presentations");
    c_corp->require_subcommand(1);
    auto* corp_list = c_corp->add_subcommand("list", "list entry names");
    corp_list->add_flag("--json", o.json);
    corp_list->callback([&] {
        ojson names = ojson::array();
        for (const auto& e : corpus()) names.push_back(e.name);
        if (o.json) {
            ojson j;
            j["names"] = names;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& e : corpus()) std::cout << e.name << "\n";
        }
    });
    std::string corpus_name;
    auto* corp_run = c_corp->add_subcommand("run", "series of a corpus entry");
    corp_run->add_option("name", corpus_name)->required();
    corp_run->add_option("--degree", o.degree)->required();
    add_out(corp_run);
    corp_run->callback([&] {
        const Presentation& p = corpus_entry(corpus_name);
        HilbertResult h = hilbert_series(p, o.degree);
        ojson j = hilbert_json(p, h);
        j["name"] = corpus_name;
        emit(j, o.json, hilbert_text(p, h), o.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
