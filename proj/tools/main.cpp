// Command-line workbench: cohomology, structure checks, sections onto twisted
// complexes, obstruction/lift searches, gauge searches and the verification
// suites, all driven by JSON problem documents.

#include "embrace/brace.hpp"
#include "embrace/document.hpp"
#include "embrace/signs.hpp"
#include "embrace/suites.hpp"
#include "embrace/twisted.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using json = nlohmann::json;

struct Options {
    std::string input;
    int degree = 2;
    int arity_max = 4;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool parallel = false;
    std::string suite = "all";
    std::string deformation;
    std::string complex_filter;
};

struct OpReport {
    bool pass = true;
    std::vector<json> records;
};

const embrace::StructuredCategory& need_structure(const embrace::ProblemDocument& doc) {
    if (!doc.structure)
        throw embrace::DocumentError("/structure", "this operation needs a structure section");
    return *doc.structure;
}

bool degree_zero_base(const embrace::GradedQuiver& q) {
    for (embrace::ArrowId a = 0; a < q.arrow_count(); ++a)
        if (q.arrow(a).degree != 0) return false;
    return true;
}

constexpr int kWindowLengthBound = 6;

// All document windows plus one base copy per quiver object, bundled as a
// window category; windows keep their document names as quiver objects.
struct DocWindows {
    embrace::WindowCategory wc;
    std::vector<std::pair<std::string, embrace::ObjId>> windows;
    std::map<std::string, bool> square_zero;
};

DocWindows build_windows(const embrace::ProblemDocument& doc) {
    const embrace::StructuredCategory& cat = need_structure(doc);
    const embrace::QuiverPtr& q = cat.quiver;
    if (doc.complexes.empty())
        throw embrace::DocumentError("/complexes", "this operation needs at least one window");

    std::vector<embrace::TwistedObject> objs;
    for (embrace::ObjId o = 0; o < q->object_count(); ++o)
        objs.push_back(embrace::base_copy(*q, o, "base:" + q->object_name(o)));
    for (const auto& [name, w] : doc.complexes) {
        if (w.hi - w.lo + 1 > kWindowLengthBound)
            throw embrace::DocumentError("/complexes/" + name,
                                         "window longer than the supported bound of " +
                                             std::to_string(kWindowLengthBound));
        objs.push_back(embrace::window_object(*q, w));
    }

    DocWindows dw{embrace::build_pcom(cat, objs), {}, {}};
    const embrace::Cochain* curv = dw.wc.category.mu.part(0);
    for (const auto& [name, w] : doc.complexes) {
        embrace::ObjId obj = *dw.wc.category.quiver->find_object(name);
        dw.windows.emplace_back(name, obj);
        bool sq = true;
        if (curv) sq = embrace::lincomb_is_zero(embrace::curvature_at(*curv, obj));
        dw.square_zero[name] = sq;
    }
    return dw;
}

// ---------------------------------------------------------------------------
// Operation handlers (shared between subcommands and document task lists)
// ---------------------------------------------------------------------------

OpReport run_hh(const embrace::ProblemDocument& doc, int degree, int arity_max) {
    OpReport rep;
    const embrace::StructuredCategory& cat = need_structure(doc);
    embrace::CohomologyResult res = embrace::hochschild_cohomology(cat, degree, arity_max);
    json reps = json::array();
    for (const auto& c : res.representatives) reps.push_back(c.str());
    rep.records.push_back(json{{"kind", "hh"},
                               {"degree", degree},
                               {"dimension", res.dimension},
                               {"cocycles", res.cocycle_dim},
                               {"coboundaries", res.coboundary_dim},
                               {"representatives", reps}});
    return rep;
}

OpReport run_check(const embrace::ProblemDocument& doc) {
    OpReport rep;
    const embrace::StructuredCategory& cat = need_structure(doc);

    embrace::StructureReport sr = embrace::check_structure(cat);
    rep.pass = rep.pass && sr.pass;
    rep.records.push_back(json{{"kind", "structure"},
                               {"category_kind", embrace::kind_name(cat.kind)},
                               {"pass", sr.pass},
                               {"failures", sr.failures}});

    for (const auto& [name, c] : doc.cochains) {
        bool closed = embrace::hochschild_differential(cat.b, c).is_zero();
        rep.records.push_back(json{{"kind", "cocycle"}, {"name", name}, {"closed", closed}});
    }

    for (const auto& [dname, cname] : doc.deformations) {
        const embrace::MixedCochain& c = doc.cochains.at(cname);
        bool ok = c.hochschild_degree() == 2 && embrace::hochschild_differential(cat.b, c).is_zero();
        rep.pass = rep.pass && ok;
        rep.records.push_back(
            json{{"kind", "deformation"}, {"name", dname}, {"cocycle", cname}, {"valid", ok}});
    }

    const embrace::Cochain* m = cat.mu.part(2);
    for (const auto& [name, w] : doc.complexes) {
        embrace::TwistedObject obj = embrace::window_object(*cat.quiver, w);
        embrace::IlnReport iln =
            embrace::is_iln(obj.delta, static_cast<int>(obj.carrier.summands.size()));
        json r{{"kind", "complex"},
               {"name", name},
               {"summands", static_cast<int>(obj.carrier.summands.size())},
               {"iln", iln.iln},
               {"nilpotence", iln.nilpotence}};
        if (m && degree_zero_base(*cat.quiver))
            r["square_zero"] = embrace::compose_free(*m, obj.delta, obj.delta).is_zero();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

OpReport run_embr(const embrace::ProblemDocument& doc) {
    OpReport rep;
    const embrace::StructuredCategory& cat = need_structure(doc);
    DocWindows dw = build_windows(doc);
    const embrace::TwCollection& tw = dw.wc.collection;

    bool closed_ok = embrace::closed_form_structure(tw, cat) == dw.wc.category.mu;
    rep.pass = rep.pass && closed_ok;
    rep.records.push_back(json{{"kind", "closed_form"}, {"match", closed_ok}});

    const bool flat = degree_zero_base(*cat.quiver);
    for (const auto& [name, c] : doc.cochains) {
        embrace::MixedCochain lifted = embrace::embr_delta(tw, c);
        bool roundtrip = embrace::project_base(tw, lifted) == c;
        rep.pass = rep.pass && roundtrip;
        json r{{"kind", "embr"},
               {"name", name},
               {"roundtrip", roundtrip},
               {"lifted", lifted.str()}};
        if (flat) {
            bool zero_part = embrace::zero_part_oracle(tw, c) == lifted.part_or_zero(0);
            rep.pass = rep.pass && zero_part;
            r["zero_part_match"] = zero_part;
        }
        rep.records.push_back(std::move(r));
    }
    return rep;
}

OpReport run_obstruct(const embrace::ProblemDocument& doc, const Options& o, bool with_witness) {
    OpReport rep;
    const embrace::StructuredCategory& cat = need_structure(doc);
    if (!o.deformation.empty() && !doc.deformations.count(o.deformation))
        throw embrace::DocumentError("/deformations/" + o.deformation, "unknown deformation name");
    if (!o.complex_filter.empty() && !doc.complexes.count(o.complex_filter))
        throw embrace::DocumentError("/complexes/" + o.complex_filter, "unknown complex name");
    DocWindows dw = build_windows(doc);

    for (const auto& [dname, cname] : doc.deformations) {
        if (!o.deformation.empty() && dname != o.deformation) continue;
        embrace::FirstOrderDeformation def =
            embrace::make_deformation(cat, doc.cochains.at(cname));
        for (const auto& [wname, obj] : dw.windows) {
            if (!o.complex_filter.empty() && wname != o.complex_filter) continue;
            const char* kind = with_witness ? "lift" : "obstruct";
            if (!dw.square_zero.at(wname)) {
                rep.records.push_back(json{{"kind", kind},
                                           {"deformation", dname},
                                           {"complex", wname},
                                           {"outcome", "skipped: window is not a complex"}});
                continue;
            }
            embrace::ObstructionReport ob = embrace::obstruction_and_lift(dw.wc, def, obj);
            rep.pass = rep.pass && ob.theorem_holds;
            json r{{"kind", kind},
                   {"deformation", dname},
                   {"complex", wname},
                   {"outcome", ob.vanishes ? "lifts" : "obstructed"},
                   {"class", embrace::lincomb_str(*dw.wc.category.quiver, ob.representative)},
                   {"system_rank", ob.system_rank},
                   {"augmented_rank", ob.augmented_rank},
                   {"consistent", ob.theorem_holds}};
            if (ob.vanishes) r["lift_space_dim"] = ob.lift_space_dim;
            if (with_witness) {
                if (ob.witness) {
                    json entries = json::array();
                    for (const auto& [pq, val] : ob.witness->entries)
                        entries.push_back(json{{"from", pq.first},
                                               {"to", pq.second},
                                               {"value", embrace::lincomb_str(*cat.quiver, val)}});
                    r["witness"] = entries;
                } else {
                    r["witness"] = nullptr;
                }
            }
            rep.records.push_back(std::move(r));
        }
    }
    return rep;
}

OpReport run_gauge(const embrace::ProblemDocument& doc, const Options& o) {
    OpReport rep;
    const embrace::StructuredCategory& cat = need_structure(doc);
    std::vector<std::pair<std::string, embrace::FirstOrderDeformation>> defs;
    for (const auto& [dname, cname] : doc.deformations)
        defs.emplace_back(dname, embrace::make_deformation(cat, doc.cochains.at(cname)));
    if (defs.size() < 2) {
        rep.records.push_back(
            json{{"kind", "gauge"}, {"note", "fewer than two deformations in the document"}});
        return rep;
    }
    for (std::size_t i = 0; i < defs.size(); ++i)
        for (std::size_t j = 0; j < defs.size(); ++j) {
            if (i == j) continue;
            auto h = embrace::find_gauge(defs[i].second, defs[j].second, o.arity_max);
            json r{{"kind", "gauge"},
                   {"from", defs[i].first},
                   {"to", defs[j].first},
                   {"found", h.has_value()}};
            if (h) {
                embrace::GaugeOutcome out = embrace::gauge_apply(defs[i].second, defs[j].second, *h);
                rep.pass = rep.pass && out.success;
                r["verified"] = out.success;
                r["gauge"] = h->str();
            }
            rep.records.push_back(std::move(r));
        }
    return rep;
}

OpReport dispatch_task(const embrace::ProblemDocument& doc, const embrace::TaskSpec& t,
                       const Options& base, std::size_t idx) {
    const std::string where = "/tasks/" + std::to_string(idx);
    Options o = base;
    auto get_int = [&](const char* key, int dflt) {
        auto it = t.args.find(key);
        if (it == t.args.end()) return dflt;
        try {
            std::size_t used = 0;
            int v = std::stoi(it->second, &used);
            if (used != it->second.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw embrace::DocumentError(where + "/args/" + key, "expected an integer");
        }
    };
    auto get_str = [&](const char* key) {
        auto it = t.args.find(key);
        return it == t.args.end() ? std::string() : it->second;
    };
    o.degree = get_int("degree", o.degree);
    o.arity_max = get_int("arity-max", o.arity_max);
    o.deformation = get_str("deformation");
    o.complex_filter = get_str("complex");

    if (t.op == "hh") return run_hh(doc, o.degree, o.arity_max);
    if (t.op == "check") return run_check(doc);
    if (t.op == "embr") return run_embr(doc);
    if (t.op == "obstruct") return run_obstruct(doc, o, false);
    if (t.op == "lift") return run_obstruct(doc, o, true);
    if (t.op == "gauge") return run_gauge(doc, o);
    throw embrace::DocumentError(where + "/op", "unsupported operation '" + t.op + "'");
}

OpReport run_verify(const std::optional<embrace::ProblemDocument>& doc, const Options& o) {
    OpReport rep;

    std::vector<embrace::SuiteResult> results;
    if (o.parallel && o.suite == "all") {
        std::vector<std::future<embrace::SuiteResult>> futs;
        for (const std::string& n : embrace::suite_names())
            futs.push_back(std::async(std::launch::async, [n, seed = o.seed] {
                return embrace::run_suites(n, seed).front();
            }));
        for (auto& f : futs) results.push_back(f.get());
    } else {
        results = embrace::run_suites(o.suite, o.seed);
    }
    for (const auto& s : results) {
        rep.pass = rep.pass && s.pass;
        rep.records.push_back(json{{"kind", "suite"},
                                   {"name", s.name},
                                   {"pass", s.pass},
                                   {"checks", s.checks},
                                   {"counterexamples", s.failures}});
    }

    if (doc && !doc->tasks.empty()) {
        std::vector<OpReport> task_reports(doc->tasks.size());
        if (o.parallel) {
            std::vector<std::future<OpReport>> futs;
            for (std::size_t i = 0; i < doc->tasks.size(); ++i)
                futs.push_back(std::async(std::launch::async, [&doc, &o, i] {
                    return dispatch_task(*doc, doc->tasks[i], o, i);
                }));
            for (std::size_t i = 0; i < futs.size(); ++i) task_reports[i] = futs[i].get();
        } else {
            for (std::size_t i = 0; i < doc->tasks.size(); ++i)
                task_reports[i] = dispatch_task(*doc, doc->tasks[i], o, i);
        }
        for (std::size_t i = 0; i < task_reports.size(); ++i) {
            rep.pass = rep.pass && task_reports[i].pass;
            rep.records.push_back(json{{"kind", "task"},
                                       {"index", static_cast<int>(i)},
                                       {"op", doc->tasks[i].op},
                                       {"pass", task_reports[i].pass}});
            for (const auto& r : task_reports[i].records) rep.records.push_back(r);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string render_text(const json& r) {
    std::ostringstream os;
    os << r.value("kind", "?");
    for (const auto& [k, v] : r.items()) {
        if (k == "kind" || v.is_array()) continue;
        os << " " << k << "=";
        if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
    }
    for (const auto& [k, v] : r.items())
        if (v.is_array())
            for (const auto& item : v) {
                os << "\n  " << k << ": ";
                if (item.is_string())
                    os << item.get<std::string>();
                else
                    os << item.dump();
            }
    return os.str();
}

void print_report(const OpReport& rep, const std::string& format) {
    if (format == "records") {
        for (const auto& r : rep.records) std::cout << r.dump() << "\n";
        std::cout << json{{"kind", "result"}, {"pass", rep.pass}}.dump() << "\n";
        return;
    }
    for (const auto& r : rep.records) std::cout << render_text(r) << "\n";
    std::cout << (rep.pass ? "RESULT pass" : "RESULT FAIL") << "\n";
}

// ---------------------------------------------------------------------------
// CLI wiring
// ---------------------------------------------------------------------------

int run_cli(int argc, char** argv) {
    Options o;
    int exit_code = 0;

    CLI::App app{"exact computational homological algebra on graded quivers and twisted complexes"};
    app.require_subcommand(1);

    auto finish = [&](const OpReport& rep) {
        print_report(rep, o.format);
        exit_code = rep.pass ? 0 : 1;
    };
    auto load = [&]() { return embrace::load_document(o.input); };
    auto add_common = [&](CLI::App* sub, bool input_required) {
        auto* in = sub->add_option("--input", o.input, "problem document (JSON)");
        if (input_required) in->required();
        sub->add_option("--arity-max", o.arity_max, "largest cochain arity used in searches")
            ->check(CLI::Range(0, 8));
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
        sub->add_flag("--parallel", o.parallel, "run independent work concurrently");
    };

    auto* hh = app.add_subcommand("hh", "cohomology dimension and representatives of one degree");
    add_common(hh, true);
    hh->add_option("--degree", o.degree, "Hochschild degree")->check(CLI::Range(0, 8));
    hh->callback([&] { finish(run_hh(load(), o.degree, o.arity_max)); });

    auto* check = app.add_subcommand("check", "structure equation and document invariants");
    add_common(check, true);
    check->callback([&] { finish(run_check(load())); });

    auto* embr = app.add_subcommand("embr", "section onto the document's twisted complexes");
    add_common(embr, true);
    embr->callback([&] { finish(run_embr(load())); });

    auto* obstruct =
        app.add_subcommand("obstruct", "characteristic classes of deformations on windows");
    add_common(obstruct, true);
    obstruct->add_option("--deformation", o.deformation, "restrict to one named deformation");
    obstruct->add_option("--complex", o.complex_filter, "restrict to one named window");
    obstruct->callback([&] { finish(run_obstruct(load(), o, false)); });

    auto* lift = app.add_subcommand("lift", "first-order lift witnesses (or rank certificates)");
    add_common(lift, true);
    lift->add_option("--deformation", o.deformation, "restrict to one named deformation");
    lift->add_option("--complex", o.complex_filter, "restrict to one named window");
    lift->callback([&] { finish(run_obstruct(load(), o, true)); });

    auto* gauge = app.add_subcommand("gauge", "gauge searches between document deformations");
    add_common(gauge, true);
    gauge->callback([&] { finish(run_gauge(load(), o)); });

    auto* verify = app.add_subcommand("verify", "run the named verification suite");
    add_common(verify, false);
    std::vector<std::string> names = embrace::suite_names();
    names.push_back("all");
    verify->add_option("--suite", o.suite, "which suite to run")->check(CLI::IsMember(names));
    verify->callback([&] {
        std::optional<embrace::ProblemDocument> doc;
        if (!o.input.empty()) doc = embrace::load_document(o.input);
        finish(run_verify(doc, o));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    if (const char* s = std::getenv("EMBRACE_SIGN_FAULT"); s && std::string(s) == "1")
        embrace::fault::corrupt_koszul_signs(true);
    try {
        return run_cli(argc, argv);
    } catch (const embrace::DocumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
