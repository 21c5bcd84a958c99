#include "kodaira_cli/report.hpp"

#include <sstream>

namespace kodaira::cli {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const NormalWord& w) { return Json{{"b", w.b}, {"a", w.a}, {"l", w.l}, {"t", w.t}}; }

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::GeneratorG1: return "generator-g1";
        case MoveKind::GeneratorG3: return "generator-g3";
        case MoveKind::GeneratorG4: return "generator-g4";
        case MoveKind::LiftingChange: return "lifting-change";
        case MoveKind::TranslationConj: return "translation-conjugation";
    }
    return "unknown";
}

Json to_json(const Move& mv) {
    return Json{{"kind", move_kind_name(mv.kind)}, {"x", mv.x}, {"y", mv.y}, {"shift", to_json(mv.shift)},
                {"text", mv.str()}};
}

namespace {

Json vec(const Vec4<Rat>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

}  // namespace

Json to_json(const Plane& p) {
    Json dirs = Json::array();
    for (const auto& d : p.directions()) dirs.push_back(vec(d));
    return Json{{"basepoint", vec(p.basepoint())}, {"directions", dirs}};
}

Json to_json(const KodairaParams& p) {
    return Json{{"m", p.m},
                {"delta1", to_json(p.delta1)},
                {"eps1", to_json(p.eps1)},
                {"eps2", to_json(p.eps2())},
                {"delta3", to_json(p.delta3)},
                {"eps3", to_json(p.eps3)},
                {"delta4", to_json(p.delta4)},
                {"eps4", to_json(p.eps4)}};
}

Json to_json(const Lifting& l) {
    return Json{{"case", to_string(l.kind)}, {"f1", to_json(l.f1)}, {"f2", to_json(l.f2)},
                {"d1", to_json(l.d1)},       {"d2", to_json(l.d2)}, {"gamma1", to_json(l.gamma1)},
                {"gamma2", to_json(l.gamma2)}};
}

Json to_json(const Extension& e) {
    Json images = Json::array();
    for (const auto& w : e.conj.images) images.push_back(to_json(w));
    return Json{{"conjugation", images}, {"square", to_json(e.square)}, {"elliptic", to_string(e.elliptic)},
                {"mu", e.mu()}};
}

Json to_json(const RealPartReport& r) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        Json gens = Json::array();
        for (const auto& g : c.stabilizer.generators) gens.push_back(to_json(g));
        comps.push_back(Json{{"g", to_json(c.g)},
                             {"plane", to_json(c.plane)},
                             {"stabilizer", Json{{"generators", gens},
                                                 {"rank", c.stabilizer.rank},
                                                 {"abelian", c.stabilizer.abelian}}},
                             {"topology", to_string(r.topology[i])}});
    }
    return Json{{"label", label_name(r.label)}, {"m", r.m},        {"count", r.count},
                {"summary", r.summary()},       {"components", comps}, {"klein_tripwire", r.klein_tripwire}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const ClassifyReport& r) {
    Json log = Json::array();
    for (const auto& mv : r.reduction.log) log.push_back(to_json(mv));
    Json out{{"label", label_name(r.label)},
             {"input", to_json(r.input)},
             {"normal_form", to_json(r.reduction.normal)},
             {"reduction", log},
             {"splits", r.witness.has_value()}};
    out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return out;
}

std::string human(const ClassifyReport& r) {
    std::ostringstream os;
    os << "label:    " << label_name(r.label) << "\n";
    os << "elliptic: " << to_string(r.input.elliptic) << "\n";
    os << "input:    psi = [";
    for (std::size_t i = 0; i < 4; ++i) os << (i ? ", " : "") << r.input.conj.images[i].str();
    os << "], square = " << r.input.square.str() << "\n";
    os << "reduction (" << r.reduction.log.size() << " moves):\n";
    for (const auto& mv : r.reduction.log) os << "  " << mv.str() << "\n";
    os << "normal:   psi = [";
    for (std::size_t i = 0; i < 4; ++i) os << (i ? ", " : "") << r.reduction.normal.conj.images[i].str();
    os << "], square = " << r.reduction.normal.square.str() << "\n";
    os << "splits:   " << (r.witness ? "true" : "false");
    if (r.witness) os << " (witness " << r.witness->str() << ")";
    os << "\n";
    return os.str();
}

Json to_json(const SplittingReport& r) {
    Json out{{"source", r.source}, {"splits", r.splits}, {"bound", r.bound}, {"agree", r.agree()}};
    out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    out["brute_force_witness"] = r.brute_force ? to_json(*r.brute_force) : Json(nullptr);
    return out;
}

std::string human(const SplittingReport& r) {
    std::ostringstream os;
    os << r.source << ": " << (r.splits ? "splits" : "does not split");
    if (r.witness) os << ", witness " << r.witness->str();
    os << "; brute force |exp| <= " << r.bound << ": "
       << (r.brute_force ? "found " + r.brute_force->str() : std::string("none"))
       << (r.agree() ? "" : "  DISAGREE") << "\n";
    return os.str();
}

}  // namespace kodaira::cli
