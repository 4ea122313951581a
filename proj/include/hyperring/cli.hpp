#pragma once

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/catalog.hpp"
#include "hyperring/io.hpp"
#include "hyperring/oracle.hpp"
#include "hyperring/parts.hpp"

namespace hyperring::cli {

inline constexpr const char* kUsage = R"(usage: hyperring <command> [flags] [input.hr]

commands:
  validate   check the hyperring axioms (exit 1 on violation, with witness)
  relation   generate a bounded relation (--kind, optional --e, --bounds, --expr)
  closure    fundamental partition for a starred kind (--kind, optional --e)
  quotient   quotient ring tables, classification and kernel fibers
  parts      test whether --subset is a lambda_e-part (--e required)
  strong     lambda_e-strong classification and its transitivity consequence
  complete   n-completeness and splice-completeness report (--n, optional --e)
  oracle     cross-validate engine, oracle scan and saturated generators
  demo       run the whole catalog through oracle cross-validation

flags:
  --catalog <name:params>   use a built-in structure instead of a file; families:
                            ring-as-hyperring:{zN|noncomm4|ut8},
                            coset-hyperring:<ring>:<ideal csv>, total:<q>,
                            b-hypergroup-ring:<q>
  --kind <name>             relation: beta|gamma|alpha-plus|alpha-times|alpha|
                            alpha-union|lambda-times-e|lambda-e|Lambda-e
                            closure/quotient: gamma-star|alpha-star|
                            lambda-star-e|Lambda-star-e
  --e <idx>                 distinguished element for the lambda/Lambda kinds
  --bounds n=<m>,k=<f>,run=<r>  expression bounds (default n=2,k=2,run=1)
  --subset <csv>            subset M for the parts command
  --n <int>                 term count for the complete command
  --expr <literal>          expression like 1*2+0 (relation command)
  --format <json|text>      report format (default json)
  --wall-time               include wall-clock milliseconds in the report
)";

struct ParsedArgs {
    std::string command;
    std::optional<std::string> catalog;
    std::optional<std::string> input_file;
    std::optional<std::string> kind;
    std::optional<ElementId> e;
    std::optional<Bounds> bounds;
    std::optional<std::string> subset;
    std::optional<int> n;
    std::optional<std::string> expr;
    std::string format = "json";
    bool wall_time = false;
};

namespace detail {

inline Bounds parse_bounds(const std::string& text) {
    Bounds b{2, 2, 1};
    for (const std::string& item : hyperring::detail::split(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--bounds expects n=..,k=..,run=..");
        const std::string key = item.substr(0, eq);
        const int value = hyperring::detail::parse_int(item.substr(eq + 1), "bounds value");
        if (key == "n")
            b.max_terms = value;
        else if (key == "k")
            b.max_factors = value;
        else if (key == "run")
            b.max_insert_run = value;
        else
            throw InputError("unknown bounds key '" + key + "'");
    }
    if (!b.valid()) throw InputError("bounds must all be >= 1");
    return b;
}

inline SubsetMask parse_subset(const std::string& csv, int q) {
    SubsetMask m = SubsetMask::empty_set(q);
    for (const std::string& tok : hyperring::detail::split(csv, ',')) {
        const int v = hyperring::detail::parse_int(tok, "subset element");
        if (v < 0 || v >= q) throw InputError("subset element " + std::to_string(v) + " out of range");
        m.set(v);
    }
    if (m.empty()) throw InputError("subset must be non-empty");
    return m;
}

inline ParsedArgs parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw InputError("missing command");
    ParsedArgs out;
    out.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&]() -> const std::string& {
            if (i + 1 >= args.size()) throw InputError("flag " + a + " needs a value");
            return args[++i];
        };
        if (a == "--catalog")
            out.catalog = value();
        else if (a == "--kind")
            out.kind = value();
        else if (a == "--e")
            out.e = hyperring::detail::parse_int(value(), "--e");
        else if (a == "--bounds")
            out.bounds = parse_bounds(value());
        else if (a == "--subset")
            out.subset = value();
        else if (a == "--n")
            out.n = hyperring::detail::parse_int(value(), "--n");
        else if (a == "--expr")
            out.expr = value();
        else if (a == "--format") {
            out.format = value();
            if (out.format != "json" && out.format != "text")
                throw InputError("--format must be json or text");
        } else if (a == "--wall-time")
            out.wall_time = true;
        else if (!a.empty() && a[0] == '-')
            throw InputError("unknown flag '" + a + "'");
        else if (!out.input_file)
            out.input_file = a;
        else
            throw InputError("unexpected extra argument '" + a + "'");
    }
    return out;
}

struct Input {
    Hyperring structure;
    std::string digest;
    Json source;
};

inline Input resolve_input(const ParsedArgs& args) {
    Input in;
    if (args.catalog && args.input_file)
        throw InputError("give either --catalog or an input file, not both");
    if (args.catalog) {
        in.structure = make_catalog(*args.catalog);
        in.source = Json{{"catalog", *args.catalog}};
    } else if (args.input_file) {
        in.structure = load_document(*args.input_file).structure;
        in.source = Json{{"file", *args.input_file}};
    } else {
        throw InputError("no input: give --catalog <spec> or an input file");
    }
    in.digest = fnv1a_digest(serialize_document({in.structure, {}}));
    return in;
}

inline ElementId require_e(const ParsedArgs& args, int q) {
    if (!args.e) throw InputError("this command requires --e");
    if (*args.e < 0 || *args.e >= q) throw InputError("--e out of range");
    return *args.e;
}

inline Json bounds_json(const Bounds& b) {
    return Json{{"maxTerms", b.max_terms}, {"maxFactors", b.max_factors}, {"maxInsertRun", b.max_insert_run}};
}

}  // namespace detail

// Exit codes: 0 computed, 1 property violated (witness in report), 2 input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ParsedArgs parsed;
    try {
        parsed = detail::parse_args(args);
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << "\n" << kUsage;
        return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Json report;
    int exit_code = 0;
    try {
        const std::string& cmd = parsed.command;
        Json params = Json::object();
        Json result = Json::object();
        Json witnesses = Json::array();
        Json timings = Json::object();

        if (cmd == "validate") {
            detail::Input in = detail::resolve_input(parsed);
            params["input"] = in.source;
            const ValidationReport rep = validate(in.structure);
            result = validation_to_json(rep);
            if (const AxiomCheck* f = rep.failure()) {
                witnesses.push_back(Json{{"axiom", axiom_name(f->axiom)},
                                         {"witness", f->witness},
                                         {"detail", f->detail}});
                exit_code = 1;
            }
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "relation") {
            detail::Input in = detail::resolve_input(parsed);
            if (!parsed.kind) throw InputError("relation requires --kind");
            const auto kind = kind_from_string(*parsed.kind);
            if (!kind) throw InputError("unknown relation kind '" + *parsed.kind + "'");
            std::optional<ElementId> e;
            if (kind_needs_e(*kind)) e = detail::require_e(parsed, in.structure.q);
            const Bounds b = parsed.bounds.value_or(Bounds{2, 2, 1});
            params = Json{{"input", in.source}, {"kind", kind_name(*kind)}, {"bounds", detail::bounds_json(b)}};
            if (e) params["e"] = *e;

            const Relation rel = generate(in.structure, *kind, b, e);
            const Relation closed = transitive_closure(rel);
            result["relation"] = relation_to_json(rel);
            result["reflexive"] = rel.reflexive();
            result["symmetric"] = rel.symmetric();
            result["transitive"] = rel.transitive();
            result["closureClasses"] = partition_to_json(Partition::from_relation(closed))["classes"];
            if (parsed.expr) {
                const SumOfProducts expr = parse_expr(*parsed.expr, in.structure.q);
                params["expr"] = format_expr(expr);
                result["exprValue"] = mask_to_json(evaluate(in.structure, expr));
                if (e) {
                    Json partners = Json::array();
                    for_each_pe_partner(expr, *e, b, [&](const PeWitness& w) {
                        partners.push_back(Json{{"left", format_expr(w.left)},
                                                {"right", format_expr(w.right)}});
                    });
                    result["splicePartners"] = std::move(partners);
                }
            }
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "closure" || cmd == "quotient") {
            detail::Input in = detail::resolve_input(parsed);
            if (!parsed.kind) throw InputError(cmd + " requires --kind");
            const auto kind = starred_from_string(*parsed.kind);
            if (!kind) throw InputError("unknown starred kind '" + *parsed.kind + "'");
            std::optional<ElementId> e;
            if (starred_needs_e(*kind)) e = detail::require_e(parsed, in.structure.q);
            params = Json{{"input", in.source}, {"kind", starred_name(*kind)}};
            if (e) params["e"] = *e;

            const Partition p = starred(in.structure, *kind, e);
            const QuotientRing qr = build_quotient(in.structure, p);
            result["partition"] = partition_to_json(p);
            result["quotient"] = quotient_to_json(qr);
            if (cmd == "quotient") {
                const KernelFibers f = kernel_fibers(in.structure, p);
                result["zeroFiber"] = mask_to_json(f.zero_fiber);
                result["unitFiber"] = f.unit_fiber ? mask_to_json(*f.unit_fiber) : Json(nullptr);
            }
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "parts") {
            detail::Input in = detail::resolve_input(parsed);
            const ElementId e = detail::require_e(parsed, in.structure.q);
            if (!parsed.subset) throw InputError("parts requires --subset");
            const SubsetMask M = detail::parse_subset(*parsed.subset, in.structure.q);
            params = Json{{"input", in.source}, {"e", e}, {"subset", mask_to_json(M)}};

            SaturationResult sat;
            Bounds b;
            if (parsed.bounds) {
                b = *parsed.bounds;
            } else {
                sat = saturated_generate(in.structure, RelationKind::Lambda, e);
                b = sat.bounds;
                timings["saturationRounds"] = sat.rounds;
            }
            params["bounds"] = detail::bounds_json(b);
            const Relation gen = generate(in.structure, RelationKind::Lambda, b, e);
            const Partition lam = starred(in.structure, StarredKind::LambdaStar, e);
            const auto bounded = part_escape(gen, M);
            const auto exact = part_escape_exact(lam, M);
            result["boundedPart"] = !bounded.has_value();
            result["exactPart"] = !exact.has_value();
            result["lambdaStarClasses"] = partition_to_json(lam)["classes"];
            if (bounded || exact) {
                const PartEscape esc = bounded ? *bounded : *exact;
                witnesses.push_back(Json{{"inside", esc.inside}, {"outside", esc.outside}});
                exit_code = 1;
            }
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "strong") {
            detail::Input in = detail::resolve_input(parsed);
            const ElementId e = detail::require_e(parsed, in.structure.q);
            params = Json{{"input", in.source}, {"e", e}};
            const StrongTransitivityReport rep = strong_implies_transitive(in.structure, e);
            result["strong"] = rep.strong.strong;
            result["translatesOverlap"] = rep.strong.translates_overlap;
            result["eInvertible"] = rep.strong.e_invertible;
            if (rep.applicable) {
                result["lambdaTransitive"] = rep.transitivity.generator_transitive;
                result["triadAgrees"] = rep.transitivity.agree;
                result["consequenceHolds"] = rep.pass;
            }
            if (!rep.strong.strong) {
                witnesses.push_back(Json{{"detail", rep.strong.witness}});
                exit_code = 1;
            } else if (!rep.pass) {
                witnesses.push_back(Json{{"detail", rep.transitivity.discrepancy}});
                exit_code = 1;
            }
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "complete") {
            detail::Input in = detail::resolve_input(parsed);
            if (!parsed.n) throw InputError("complete requires --n");
            const Bounds b = parsed.bounds.value_or(Bounds{std::max(3, *parsed.n), 2, 2});
            if (parsed.e && (*parsed.e < 0 || *parsed.e >= in.structure.q))
                throw InputError("--e out of range");
            params = Json{{"input", in.source}, {"n", *parsed.n}, {"bounds", detail::bounds_json(b)}};
            const CompletenessReport rep = completeness(in.structure, *parsed.n, parsed.e, b);
            result["nComplete"] = rep.n_complete;
            result["unitary"] = rep.unit.has_value();
            if (rep.unit) result["unit"] = *rep.unit;
            if (rep.e_used) {
                result["e"] = *rep.e_used;
                result["spliceNComplete"] = *rep.splice_n_complete;
            }
            if (rep.corollary_agrees) result["corollaryAgrees"] = *rep.corollary_agrees;
            if (rep.gamma_equals_big_lambda) result["gammaEqualsLambda"] = *rep.gamma_equals_big_lambda;
            if (rep.level_collapse) result["levelCollapse"] = *rep.level_collapse;
            if (!rep.n_witness.empty()) witnesses.push_back(Json{{"detail", rep.n_witness}});
            if (!rep.splice_witness.empty()) witnesses.push_back(Json{{"detail", rep.splice_witness}});
            const bool property = rep.n_complete && (!rep.splice_n_complete || *rep.splice_n_complete) &&
                                  (!rep.corollary_agrees || *rep.corollary_agrees) &&
                                  (!rep.gamma_equals_big_lambda || *rep.gamma_equals_big_lambda) &&
                                  (!rep.level_collapse || *rep.level_collapse);
            if (!property) exit_code = 1;
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "oracle") {
            detail::Input in = detail::resolve_input(parsed);
            params = Json{{"input", in.source}};
            const CrossValidationReport rep = cross_validate(in.structure);
            result["allAgree"] = rep.all_agree;
            Json entries = Json::array();
            for (const CrossValidationEntry& en : rep.entries) {
                Json je{{"kind", starred_name(en.kind)},
                        {"oracleMatchesEngine", en.oracle_matches_engine},
                        {"generatorMatchesEngine", en.generator_matches_engine},
                        {"generatorStabilized", en.generator_stabilized}};
                if (en.e) je["e"] = *en.e;
                if (!en.detail.empty()) {
                    je["detail"] = en.detail;
                    witnesses.push_back(Json{{"kind", starred_name(en.kind)}, {"detail", en.detail}});
                }
                entries.push_back(std::move(je));
            }
            result["entries"] = std::move(entries);
            if (!rep.all_agree) exit_code = 1;
            report = make_report(cmd, in.digest, params, result, witnesses, timings);
        } else if (cmd == "demo") {
            Json entries = Json::array();
            bool all_green = true;
            std::string digest_input;
            for (const CatalogEntry& entry : standard_catalog()) {
                Json je{{"catalog", entry.spec}, {"q", entry.structure.q}};
                digest_input += serialize_document({entry.structure, {}});
                const ValidationReport vr = validate(entry.structure);
                je["axiomsPass"] = vr.all_pass;
                const CrossValidationReport cv = cross_validate(entry.structure);
                je["crossValidationAgrees"] = cv.all_agree;
                Json kinds = Json::object();
                kinds["gamma-star"] = partition_to_json(starred(entry.structure, StarredKind::GammaStar))["classes"];
                kinds["alpha-star"] = partition_to_json(starred(entry.structure, StarredKind::AlphaStar))["classes"];
                Json lambda = Json::array(), big = Json::array();
                for (ElementId e = 0; e < entry.structure.q; ++e) {
                    lambda.push_back(partition_to_json(starred(entry.structure, StarredKind::LambdaStar, e))["classes"]);
                    big.push_back(partition_to_json(starred(entry.structure, StarredKind::BigLambdaStar, e))["classes"]);
                }
                kinds["lambda-star-e"] = std::move(lambda);
                kinds["Lambda-star-e"] = std::move(big);
                je["fundamentalPartitions"] = std::move(kinds);
                all_green = all_green && vr.all_pass && cv.all_agree;
                entries.push_back(std::move(je));
            }
            params = Json{{"catalogSize", entries.size()}};
            result["allGreen"] = all_green;
            result["entries"] = std::move(entries);
            if (!all_green) exit_code = 1;
            report = make_report(cmd, fnv1a_digest(digest_input), params, result, witnesses, timings);
        } else {
            err << "error: unknown command '" << cmd << "'\n" << kUsage;
            return 2;
        }
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }

    if (parsed.wall_time) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        report["timings"]["wall_ms"] = static_cast<std::int64_t>(ms);
    }
    if (parsed.format == "text")
        out << to_text(report);
    else
        out << report.dump(2) << "\n";
    return exit_code;
}

}  // namespace hyperring::cli
