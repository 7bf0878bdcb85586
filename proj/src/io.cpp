#include "su2ab/io.hpp"

#include <fstream>
#include <sstream>

namespace su2ab {

namespace {

std::int64_t integer_at(const json& j, const std::string& pointer) {
    if (!j.is_number_integer()) throw InputError(pointer, "expected an integer");
    return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key, const std::string& pointer) {
    if (!j.is_object()) throw InputError(pointer.empty() ? "/" : pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(pointer + "/" + key, "missing field");
    return *it;
}

std::pair<std::int64_t, std::int64_t> pair_at(const json& j, const std::string& pointer) {
    if (!j.is_array() || j.size() != 2) throw InputError(pointer, "expected an array of two integers");
    return {integer_at(j[0], pointer + "/0"), integer_at(j[1], pointer + "/1")};
}

}  // namespace

SeifertPiece piece_from_json(const json& j, const std::string& pointer) {
    auto [p1, p2] = pair_at(field(j, "p", pointer), pointer + "/p");
    auto [q1, q2] = pair_at(field(j, "q", pointer), pointer + "/q");
    SeifertPiece s{p1, q1, p2, q2};
    try {
        validate(s);
    } catch (const InvalidPiece& e) {
        throw InputError(pointer.empty() ? "/" : pointer, e.what());
    }
    return s;
}

GraphManifold manifold_from_json(const json& j) {
    GraphManifold M;
    M.m1 = piece_from_json(field(j, "m1", ""), "/m1");
    M.m2 = piece_from_json(field(j, "m2", ""), "/m2");
    const json& phi = field(j, "phi", "");
    if (!phi.is_array() || phi.size() != 2) throw InputError("/phi", "expected a 2x2 integer matrix");
    auto [a, b] = pair_at(phi[0], "/phi/0");
    auto [c, d] = pair_at(phi[1], "/phi/1");
    M.phi = {a, b, c, d};
    try {
        validate(M);
    } catch (const InvalidGluing& e) {
        throw InputError("/phi", e.what());
    }
    return M;
}

GraphManifold manifold_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("/", std::string("malformed JSON: ") + e.what());
    }
    return manifold_from_json(j);
}

GraphManifold read_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("/", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return manifold_from_text(ss.str());
}

json to_json(const SeifertPiece& s) { return {{"p", {s.p1, s.p2}}, {"q", {s.q1, s.q2}}}; }

json to_json(const GluingMatrix& m) { return json::array({{m.alpha, m.beta}, {m.gamma, m.delta}}); }

json to_json(const GraphManifold& M) { return {{"m1", to_json(M.m1)}, {"m2", to_json(M.m2)}, {"phi", to_json(M.phi)}}; }

json to_json(const TorusPoint& e) { return {{"theta", e.theta.str()}, {"psi", e.psi.str()}}; }

json to_json(const KeyDeltas& k) {
    return {{"h1_h2", k.h1h2},         {"lambda1_h2", k.l1h2},     {"lambda2_h1", k.l2h1},
            {"lambda1_lambda2", k.l1l2}, {"lambda2_mu1", k.l2mu1}, {"lambda1_mu2", k.l1mu2}};
}

json to_json(const CosIntervalSet& s) {
    json arr = json::array();
    for (const auto& iv : s.intervals())
        arr.push_back({{"lo", {{"turn", to_string(iv.lo.turn())}, {"value", iv.lo.value()}}},
                       {"hi", {{"turn", to_string(iv.hi.turn())}, {"value", iv.hi.value()}}}});
    return {{"text", s.str()}, {"intervals", arr}};
}

json to_json(const RepWitness& w, const Presentation& p) {
    json imgs = json::object();
    for (std::size_t i = 0; i < w.images.size() && i < p.generators.size(); ++i) {
        const Quat& q = w.images[i];
        imgs[p.generators[i]] = {double(q.w), double(q.x), double(q.y), double(q.z)};
    }
    return {{"images", imgs}, {"residual", w.residual}, {"irreducibility", w.irreducibility}};
}

json verdict_json(const GraphManifold& M, const Verdict& v, const std::optional<ClassId>& c) {
    json j;
    j["manifold"] = to_json(M);
    j["su2_abelian"] = v.su2_abelian;
    j["reason"] = to_string(v.reason);
    j["deltas"] = to_json(v.deltas);
    j["swapped"] = v.swapped;
    j["h1h2_lemma_exception"] = v.h1h2_lemma_exception;
    if (c) {
        j["class"] = c->id;
        j["class_bindings"] = c->bindings;
    } else {
        j["class"] = nullptr;
    }
    if (v.nonempty) {
        j["nonempty"] = {to_string(v.nonempty->first), to_string(v.nonempty->second)};
        j["witness"] = to_json(*v.witness);
    } else {
        j["nonempty"] = nullptr;
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace su2ab
