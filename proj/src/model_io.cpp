#include "crsym/model_io.hpp"

#include "crsym/expr.hpp"

#include <fstream>
#include <sstream>

namespace crsym {

using json = nlohmann::ordered_json;

namespace {

std::string degeneracy_name(ModelRecord::Degeneracy d) {
    switch (d) {
        case ModelRecord::Degeneracy::Nowhere: return "nowhere";
        case ModelRecord::Degeneracy::ExactlyOnW0: return "exactly-on-w0";
        default: return "unchecked";
    }
}

ModelRecord::Degeneracy parse_degeneracy(const std::string& s) {
    if (s == "nowhere") return ModelRecord::Degeneracy::Nowhere;
    if (s == "exactly-on-w0") return ModelRecord::Degeneracy::ExactlyOnW0;
    if (s == "unchecked") return ModelRecord::Degeneracy::Unchecked;
    throw ModelFormatError("unknown degeneracy: " + s);
}

template <class T>
T get(const json& j, const char* key) {
    if (!j.contains(key)) throw ModelFormatError(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ModelFormatError(std::string("bad field: ") + key);
    }
}

GaussRational number(const json& j) {
    if (!j.is_string()) throw ModelFormatError("numbers must be strings");
    return GaussRational::parse(j.get<std::string>());
}

json relations_json(const StructureConstants& sc) {
    json out = json::array();
    for (int i = 0; i < sc.dim(); ++i)
        for (int j = i + 1; j < sc.dim(); ++j)
            for (const auto& [k, c] : sc.bracket(i, j)) out.push_back(json{i, j, k, rational_str(c)});
    return out;
}

}  // namespace

json model_to_json(const ModelRecord& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = r.name;
    j["n"] = r.n;
    j["signature"] = r.sig.entries();
    j["defining"] = r.rho ? json(r.rho->rho().str()) : json(nullptr);
    json gens = json::array();
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        json g;
        if (i < r.generator_names.size()) g["name"] = r.generator_names[i];
        g["field"] = r.generators[i].str();
        gens.push_back(g);
    }
    j["generators"] = gens;
    j["expected_dim"] = r.expected_dim;
    j["expected_algebra"] = r.expected_algebra;
    j["mode"] = mode_name(r.mode);
    json wits = json::array();
    for (const auto& w : r.witnesses) {
        json x;
        json pt = json::array();
        for (const auto& c : w.point) pt.push_back(c.str());
        x["point"] = pt;
        if (w.levi)
            x["levi"] = json{{"nondegenerate", w.levi->nondegenerate},
                             {"pbar", w.levi->pbar},
                             {"qbar", w.levi->qbar},
                             {"rank", w.levi->rank}};
        wits.push_back(x);
    }
    j["witnesses"] = wits;
    if (r.source) j["source"] = json{{"map", r.source->map}, {"base", r.source->base.rho().str()}};
    j["note"] = r.note;
    if (r.solver_degree >= 0) j["solver_degree"] = r.solver_degree;
    if (r.symmetry_dim) j["symmetry_dim"] = *r.symmetry_dim;
    if (r.vanishing_order) j["vanishing_order"] = *r.vanishing_order;
    if (r.w0_vanishing_dim) j["w0_vanishing_dim"] = *r.w0_vanishing_dim;
    j["degeneracy"] = degeneracy_name(r.degeneracy);
    if (r.relations) j["relations"] = relations_json(*r.relations);
    return j;
}

ModelRecord model_from_json(const json& j) {
    if (!j.is_object()) throw ModelFormatError("model must be a JSON object");
    int version = get<int>(j, "schema_version");
    if (version != kSchemaVersion) throw ModelFormatError("unsupported schema_version " + std::to_string(version));
    ModelRecord r;
    r.name = get<std::string>(j, "name");
    r.n = get<int>(j, "n");
    if (r.n < 1) throw ModelFormatError("n must be positive");
    r.sig = SignatureVector(get<std::vector<int>>(j, "signature"));
    if (r.sig.n() != r.n) throw ModelFormatError("signature length differs from n");
    try {
        if (j.contains("defining") && !j["defining"].is_null())
            r.rho = parse_defining(get<std::string>(j, "defining"), r.n);
        if (j.contains("generators"))
            for (const auto& g : j["generators"]) {
                std::string src = g.is_string() ? g.get<std::string>() : get<std::string>(g, "field");
                r.generators.push_back(parse_field(src, r.n));
                if (g.is_object() && g.contains("name")) r.generator_names.push_back(g["name"].get<std::string>());
            }
        if (!r.generator_names.empty() && r.generator_names.size() != r.generators.size())
            throw ModelFormatError("either all generators are named or none");
        if (j.contains("witnesses"))
            for (const auto& x : j["witnesses"]) {
                Witness w;
                const json& pt = x.is_object() ? x.at("point") : x;
                if (pt.is_string()) w.point = parse_point(pt.get<std::string>(), r.n);
                else
                    for (const auto& c : pt) w.point.push_back(number(c));
                if (int(w.point.size()) != r.n + 1) throw ModelFormatError("witness point needs n+1 coordinates");
                if (x.is_object() && x.contains("levi")) {
                    const json& l = x["levi"];
                    LeviVerdict v;
                    v.nondegenerate = get<bool>(l, "nondegenerate");
                    v.pbar = l.value("pbar", 0);
                    v.qbar = l.value("qbar", 0);
                    v.rank = get<int>(l, "rank");
                    w.levi = v;
                }
                r.witnesses.push_back(std::move(w));
            }
        if (j.contains("source") && !j["source"].is_null()) {
            const json& s = j["source"];
            r.source = ModelSource{parse_defining(get<std::string>(s, "base"), r.n), get<std::string>(s, "map")};
        }
    } catch (const ParseError& e) {
        throw ModelFormatError(std::string(e.what()));
    }
    r.expected_dim = get<int>(j, "expected_dim");
    r.expected_algebra = j.value("expected_algebra", std::string("none"));
    r.mode = parse_mode(j.value("mode", std::string("full")));
    r.note = j.value("note", std::string());
    r.solver_degree = j.value("solver_degree", -1);
    if (j.contains("symmetry_dim")) r.symmetry_dim = get<int>(j, "symmetry_dim");
    if (j.contains("vanishing_order")) r.vanishing_order = get<int>(j, "vanishing_order");
    if (j.contains("w0_vanishing_dim")) r.w0_vanishing_dim = get<int>(j, "w0_vanishing_dim");
    r.degeneracy = parse_degeneracy(j.value("degeneracy", std::string("unchecked")));
    if (j.contains("relations")) {
        StructureConstants sc(r.expected_dim);
        std::map<std::pair<int, int>, SparseVec> table;
        for (const auto& e : j["relations"]) {
            if (!e.is_array() || e.size() != 4) throw ModelFormatError("relations entries are [i, j, k, \"c\"]");
            int a = e[0].get<int>(), b = e[1].get<int>(), k = e[2].get<int>();
            if (a < 0 || b < 0 || k < 0 || a >= r.expected_dim || b >= r.expected_dim || k >= r.expected_dim || a == b)
                throw ModelFormatError("relations index out of range");
            if (!e[3].is_string()) throw ModelFormatError("numbers must be strings");
            mpq_class c = parse_rational(e[3].get<std::string>());
            if (a > b) {
                std::swap(a, b);
                c = -c;
            }
            table[{a, b}][k] += c;
        }
        for (const auto& [ij, v] : table) sc.set_bracket(ij.first, ij.second, v);
        r.relations = sc;
    }
    if (r.mode != VerifyMode::BracketOnly && !r.rho) throw ModelFormatError("defining function required in mode " + mode_name(r.mode));
    return r;
}

ModelRecord load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelFormatError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelFormatError(path + ": " + e.what());
    }
    return model_from_json(j);
}

void save_model_file(const ModelRecord& rec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ModelFormatError("cannot write " + path);
    out << model_to_json(rec).dump(2) << "\n";
}

json fingerprint_to_json(const Fingerprint& fp) {
    return json{{"dim", fp.dim},
                {"derived", fp.derived},
                {"lower_central", fp.lower_central},
                {"center", fp.center},
                {"killing_rank", fp.killing_rank},
                {"killing_pos", fp.killing_pos},
                {"killing_neg", fp.killing_neg}};
}

json fields_to_json(const std::vector<HoloField>& fields) {
    json out = json::array();
    for (const auto& f : fields) out.push_back(f.str());
    return out;
}

json report_to_json(const VerificationReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] = rep.model;
    j["mode"] = rep.mode;
    j["pass"] = rep.pass();
    j["dim"] = rep.dim;
    j["fingerprint"] = rep.fingerprint ? fingerprint_to_json(*rep.fingerprint) : json(nullptr);
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

}  // namespace crsym
