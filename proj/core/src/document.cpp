#include "embrace/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace embrace {

namespace {

using nlohmann::json;

std::string at(const std::string& parent, const std::string& key) { return parent + "/" + key; }
std::string at(const std::string& parent, size_t idx) {
    return parent + "/" + std::to_string(idx);
}

const json& need(const json& obj, const std::string& loc, const std::string& key) {
    if (!obj.is_object()) throw DocumentError(loc, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw DocumentError(loc, "missing required key '" + key + "'");
    return *it;
}

std::string need_string(const json& obj, const std::string& loc, const std::string& key) {
    const json& v = need(obj, loc, key);
    if (!v.is_string()) throw DocumentError(at(loc, key), "expected a string");
    return v.get<std::string>();
}

int need_int(const json& obj, const std::string& loc, const std::string& key) {
    const json& v = need(obj, loc, key);
    if (!v.is_number_integer()) throw DocumentError(at(loc, key), "expected an integer");
    return v.get<int>();
}

void reject_unknown_keys(const json& obj, const std::string& loc,
                         const std::vector<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw DocumentError(at(loc, it.key()), "unknown key");
    }
}

FieldSpec parse_field(const json& v, const std::string& loc) {
    if (!v.is_string()) throw DocumentError(loc, "expected a field name string");
    std::string s = v.get<std::string>();
    if (s == "Q") return FieldSpec::rational();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        try {
            unsigned long p = std::stoul(s.substr(3, s.size() - 4));
            return FieldSpec::prime(static_cast<std::uint32_t>(p));
        } catch (const std::exception& e) {
            throw DocumentError(loc, std::string("bad prime field: ") + e.what());
        }
    }
    throw DocumentError(loc, "field must be \"Q\" or \"GF(p)\"");
}

Scalar parse_coeff(const FieldSpec& f, const json& v, const std::string& loc) {
    if (!v.is_string()) throw DocumentError(loc, "coefficients are strings");
    try {
        return Scalar::parse(f, v.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError(loc, e.what());
    }
}

ObjId resolve_object(const GradedQuiver& q, const json& v, const std::string& loc) {
    if (!v.is_string()) throw DocumentError(loc, "expected an object name");
    auto o = q.find_object(v.get<std::string>());
    if (!o) throw DocumentError(loc, "unknown object '" + v.get<std::string>() + "'");
    return *o;
}

LinComb parse_lincomb(const GradedQuiver& q, ObjId src, ObjId tgt, const json& v,
                      const std::string& loc) {
    if (!v.is_array()) throw DocumentError(loc, "expected an array of {arrow, coeff}");
    LinComb out;
    for (size_t i = 0; i < v.size(); ++i) {
        const json& term = v[i];
        std::string tloc = at(loc, i);
        reject_unknown_keys(term, tloc, {"arrow", "coeff"});
        std::string name = need_string(term, tloc, "arrow");
        auto a = q.find_arrow(src, tgt, name);
        if (!a)
            throw DocumentError(at(tloc, "arrow"), "no arrow '" + name + "' from '" +
                                                       q.object_name(src) + "' to '" +
                                                       q.object_name(tgt) + "'");
        lincomb_add(out, *a, parse_coeff(q.field(), need(term, tloc, "coeff"), at(tloc, "coeff")));
    }
    return out;
}

Cochain parse_component(QuiverPtr qp, int arity, int internal, const json& v,
                        const std::string& loc) {
    const GradedQuiver& q = *qp;
    Cochain out(qp, Level::Base, arity, internal);
    if (!v.is_array()) throw DocumentError(loc, "expected an array of entries");
    for (size_t i = 0; i < v.size(); ++i) {
        const json& entry = v[i];
        std::string eloc = at(loc, i);
        reject_unknown_keys(entry, eloc, {"path", "args", "value"});
        const json& path_json = need(entry, eloc, "path");
        if (!path_json.is_array() || static_cast<int>(path_json.size()) != arity + 1)
            throw DocumentError(at(eloc, "path"),
                                "path must list " + std::to_string(arity + 1) + " objects");
        std::vector<ObjId> path;
        for (size_t j = 0; j < path_json.size(); ++j)
            path.push_back(resolve_object(q, path_json[j], at(at(eloc, "path"), j)));
        const json& args_json = need(entry, eloc, "args");
        if (!args_json.is_array() || static_cast<int>(args_json.size()) != arity)
            throw DocumentError(at(eloc, "args"),
                                "args must list " + std::to_string(arity) + " arrows");
        std::vector<ArrowId> args;
        for (size_t j = 0; j < args_json.size(); ++j) {
            const json& aj = args_json[j];
            std::string aloc = at(at(eloc, "args"), j);
            if (!aj.is_string()) throw DocumentError(aloc, "expected an arrow name");
            auto a = q.find_arrow(path[j], path[j + 1], aj.get<std::string>());
            if (!a)
                throw DocumentError(aloc, "no arrow '" + aj.get<std::string>() + "' from '" +
                                              q.object_name(path[j]) + "' to '" +
                                              q.object_name(path[j + 1]) + "'");
            args.push_back(*a);
        }
        LinComb value = parse_lincomb(q, path.front(), path.back(), need(entry, eloc, "value"),
                                      at(eloc, "value"));
        try {
            out.add(CochainKey{std::move(path), std::move(args)}, value, Scalar::one(q.field()));
        } catch (const std::exception& e) {
            throw DocumentError(eloc, e.what());
        }
    }
    return out;
}

MixedCochain parse_mixed(QuiverPtr qp, int hoch_degree, const json& v, const std::string& loc) {
    MixedCochain out(qp, Level::Base, hoch_degree);
    const json& comps = need(v, loc, "components");
    if (!comps.is_array()) throw DocumentError(at(loc, "components"), "expected an array");
    for (size_t i = 0; i < comps.size(); ++i) {
        const json& comp = comps[i];
        std::string cloc = at(at(loc, "components"), i);
        reject_unknown_keys(comp, cloc, {"arity", "entries"});
        int arity = need_int(comp, cloc, "arity");
        if (arity < 0) throw DocumentError(at(cloc, "arity"), "arity must be nonnegative");
        Cochain part = parse_component(qp, arity, hoch_degree - arity,
                                       need(comp, cloc, "entries"), at(cloc, "entries"));
        try {
            out.add_part(part);
        } catch (const std::exception& e) {
            throw DocumentError(cloc, e.what());
        }
    }
    return out;
}

json lincomb_json(const GradedQuiver& q, const LinComb& l) {
    json out = json::array();
    for (const auto& [a, c] : l)
        out.push_back(json{{"arrow", q.arrow(a).name}, {"coeff", c.str()}});
    return out;
}

json mixed_json(const GradedQuiver& q, const MixedCochain& m) {
    json comps = json::array();
    for (const auto& [arity, part] : m.parts()) {
        if (part.is_zero()) continue;
        json entries = json::array();
        for (const auto& [key, value] : part.table()) {
            json path = json::array();
            for (ObjId o : key.path) path.push_back(q.object_name(o));
            json args = json::array();
            for (ArrowId a : key.args) args.push_back(q.arrow(a).name);
            entries.push_back(json{{"path", std::move(path)},
                                   {"args", std::move(args)},
                                   {"value", lincomb_json(q, value)}});
        }
        comps.push_back(json{{"arity", arity}, {"entries", std::move(entries)}});
    }
    return json{{"degree", m.degree()}, {"components", std::move(comps)}};
}

}  // namespace

ProblemDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("/", e.what());
    }
    if (!root.is_object()) throw DocumentError("/", "document must be a JSON object");
    reject_unknown_keys(root, "",
                        {"field", "quiver", "structure", "cochains", "complexes", "deformations",
                         "tasks"});

    ProblemDocument doc;
    doc.field = parse_field(need(root, "", "field"), "/field");

    const json& qj = need(root, "", "quiver");
    reject_unknown_keys(qj, "/quiver", {"window", "objects", "arrows"});
    const json& wj = need(qj, "/quiver", "window");
    if (!wj.is_array() || wj.size() != 2 || !wj[0].is_number_integer() ||
        !wj[1].is_number_integer())
        throw DocumentError("/quiver/window", "expected [lo, hi]");
    std::shared_ptr<GradedQuiver> quiver;
    try {
        quiver = std::make_shared<GradedQuiver>(doc.field, wj[0].get<int>(), wj[1].get<int>());
    } catch (const std::exception& e) {
        throw DocumentError("/quiver/window", e.what());
    }
    const json& objs = need(qj, "/quiver", "objects");
    if (!objs.is_array()) throw DocumentError("/quiver/objects", "expected an array of names");
    for (size_t i = 0; i < objs.size(); ++i) {
        if (!objs[i].is_string())
            throw DocumentError(at("/quiver/objects", i), "expected an object name");
        try {
            quiver->add_object(objs[i].get<std::string>());
        } catch (const std::exception& e) {
            throw DocumentError(at("/quiver/objects", i), e.what());
        }
    }
    const json& arrows = need(qj, "/quiver", "arrows");
    if (!arrows.is_array()) throw DocumentError("/quiver/arrows", "expected an array");
    for (size_t i = 0; i < arrows.size(); ++i) {
        const json& aj = arrows[i];
        std::string aloc = at("/quiver/arrows", i);
        reject_unknown_keys(aj, aloc, {"name", "src", "tgt", "degree"});
        ObjId src = resolve_object(*quiver, need(aj, aloc, "src"), at(aloc, "src"));
        ObjId tgt = resolve_object(*quiver, need(aj, aloc, "tgt"), at(aloc, "tgt"));
        try {
            quiver->add_arrow(need_string(aj, aloc, "name"), src, tgt,
                              need_int(aj, aloc, "degree"));
        } catch (const std::exception& e) {
            throw DocumentError(aloc, e.what());
        }
    }
    doc.quiver = quiver;

    if (root.contains("structure")) {
        const json& sj = root["structure"];
        reject_unknown_keys(sj, "/structure", {"kind", "components"});
        auto kind = parse_kind(need_string(sj, "/structure", "kind"));
        if (!kind) throw DocumentError("/structure/kind", "unknown structure kind");
        MixedCochain mu = parse_mixed(doc.quiver, 2, sj, "/structure");
        try {
            doc.structure.emplace(doc.quiver, *kind, std::move(mu));
        } catch (const std::exception& e) {
            throw DocumentError("/structure", e.what());
        }
    }

    if (root.contains("cochains")) {
        const json& cj = root["cochains"];
        if (!cj.is_object()) throw DocumentError("/cochains", "expected an object");
        for (auto it = cj.begin(); it != cj.end(); ++it) {
            std::string cloc = at("/cochains", it.key());
            reject_unknown_keys(*it, cloc, {"degree", "components"});
            int degree = need_int(*it, cloc, "degree");
            doc.cochains.emplace(it.key(), parse_mixed(doc.quiver, degree, *it, cloc));
        }
    }

    if (root.contains("complexes")) {
        const json& xj = root["complexes"];
        if (!xj.is_object()) throw DocumentError("/complexes", "expected an object");
        for (auto it = xj.begin(); it != xj.end(); ++it) {
            std::string xloc = at("/complexes", it.key());
            reject_unknown_keys(*it, xloc, {"lo", "hi", "at", "delta"});
            ComplexWindow w;
            w.name = it.key();
            w.lo = need_int(*it, xloc, "lo");
            w.hi = need_int(*it, xloc, "hi");
            const json& atj = need(*it, xloc, "at");
            if (!atj.is_array()) throw DocumentError(at(xloc, "at"), "expected an array");
            for (size_t i = 0; i < atj.size(); ++i) {
                const json& pj = atj[i];
                std::string ploc = at(at(xloc, "at"), i);
                reject_unknown_keys(pj, ploc, {"pos", "object"});
                int pos = need_int(pj, ploc, "pos");
                if (w.at.count(pos)) throw DocumentError(ploc, "duplicate position");
                w.at[pos] = resolve_object(*doc.quiver, need(pj, ploc, "object"),
                                           at(ploc, "object"));
            }
            if (it->contains("delta")) {
                const json& dj = (*it)["delta"];
                if (!dj.is_array()) throw DocumentError(at(xloc, "delta"), "expected an array");
                for (size_t i = 0; i < dj.size(); ++i) {
                    const json& ej = dj[i];
                    std::string eloc = at(at(xloc, "delta"), i);
                    reject_unknown_keys(ej, eloc, {"from", "to", "value"});
                    int from = need_int(ej, eloc, "from");
                    int to = need_int(ej, eloc, "to");
                    auto fo = w.at.find(from);
                    auto to_it = w.at.find(to);
                    if (fo == w.at.end() || to_it == w.at.end())
                        throw DocumentError(eloc, "differential endpoints must carry objects");
                    w.delta[{from, to}] = parse_lincomb(*doc.quiver, fo->second, to_it->second,
                                                        need(ej, eloc, "value"),
                                                        at(eloc, "value"));
                }
            }
            try {
                window_object(*doc.quiver, w);  // full validation
            } catch (const std::exception& e) {
                throw DocumentError(xloc, e.what());
            }
            doc.complexes.emplace(it.key(), std::move(w));
        }
    }

    if (root.contains("deformations")) {
        const json& dj = root["deformations"];
        if (!dj.is_object()) throw DocumentError("/deformations", "expected an object");
        for (auto it = dj.begin(); it != dj.end(); ++it) {
            std::string dloc = at("/deformations", it.key());
            reject_unknown_keys(*it, dloc, {"cocycle"});
            std::string ref = need_string(*it, dloc, "cocycle");
            if (!doc.cochains.count(ref))
                throw DocumentError(at(dloc, "cocycle"), "unknown cochain '" + ref + "'");
            doc.deformations.emplace(it.key(), ref);
        }
    }

    if (root.contains("tasks")) {
        const json& tj = root["tasks"];
        if (!tj.is_array()) throw DocumentError("/tasks", "expected an array");
        for (size_t i = 0; i < tj.size(); ++i) {
            const json& task = tj[i];
            std::string tloc = at("/tasks", i);
            if (!task.is_object()) throw DocumentError(tloc, "expected an object");
            TaskSpec spec;
            spec.op = need_string(task, tloc, "op");
            for (auto it = task.begin(); it != task.end(); ++it) {
                if (it.key() == "op") continue;
                if (it->is_string())
                    spec.args[it.key()] = it->get<std::string>();
                else if (it->is_number_integer())
                    spec.args[it.key()] = std::to_string(it->get<long long>());
                else
                    throw DocumentError(at(tloc, it.key()),
                                        "task arguments must be strings or integers");
            }
            doc.tasks.push_back(std::move(spec));
        }
    }
    return doc;
}

ProblemDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("/", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string serialize_document(const ProblemDocument& doc) {
    const GradedQuiver& q = *doc.quiver;
    json root;
    root["field"] = doc.field.str();

    json objs = json::array();
    for (ObjId o = 0; o < q.object_count(); ++o) objs.push_back(q.object_name(o));
    json arrows = json::array();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        arrows.push_back(json{{"name", arr.name},
                              {"src", q.object_name(arr.src)},
                              {"tgt", q.object_name(arr.tgt)},
                              {"degree", arr.degree}});
    }
    auto [lo, hi] = q.degree_window();
    root["quiver"] = json{{"window", json::array({lo, hi})},
                          {"objects", std::move(objs)},
                          {"arrows", std::move(arrows)}};

    if (doc.structure) {
        json sj = mixed_json(q, doc.structure->mu);
        sj.erase("degree");
        sj["kind"] = kind_name(doc.structure->kind);
        root["structure"] = std::move(sj);
    }
    if (!doc.cochains.empty()) {
        json cj = json::object();
        for (const auto& [name, m] : doc.cochains) cj[name] = mixed_json(q, m);
        root["cochains"] = std::move(cj);
    }
    if (!doc.complexes.empty()) {
        json xj = json::object();
        for (const auto& [name, w] : doc.complexes) {
            json atj = json::array();
            for (const auto& [pos, obj] : w.at)
                atj.push_back(json{{"pos", pos}, {"object", q.object_name(obj)}});
            json dj = json::array();
            for (const auto& [pos_pair, cell] : w.delta) {
                if (lincomb_is_zero(cell)) continue;
                dj.push_back(json{{"from", pos_pair.first},
                                  {"to", pos_pair.second},
                                  {"value", lincomb_json(q, cell)}});
            }
            json wj = json{{"lo", w.lo}, {"hi", w.hi}, {"at", std::move(atj)}};
            if (!dj.empty()) wj["delta"] = std::move(dj);
            xj[name] = std::move(wj);
        }
        root["complexes"] = std::move(xj);
    }
    if (!doc.deformations.empty()) {
        json dj = json::object();
        for (const auto& [name, ref] : doc.deformations) dj[name] = json{{"cocycle", ref}};
        root["deformations"] = std::move(dj);
    }
    if (!doc.tasks.empty()) {
        json tj = json::array();
        for (const auto& task : doc.tasks) {
            json t = json::object();
            t["op"] = task.op;
            for (const auto& [k, v] : task.args) t[k] = v;
            tj.push_back(std::move(t));
        }
        root["tasks"] = std::move(tj);
    }
    return root.dump(2) + "\n";
}

}  // namespace embrace
