#include "algdeg/json_io.hpp"

namespace algdeg {

namespace {

const Json& field_of(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key, const char* where) {
    const Json& v = field_of(j, key, where);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError(std::string(where) + ": field \"" + key +
                         "\" must be a positive integer");
    const long long raw = v.get<long long>();
    if (raw < 1)
        throw ParseError(std::string(where) + ": field \"" + key +
                         "\" must be a positive integer");
    return static_cast<std::size_t>(raw);
}

std::string string_field(const Json& j, const char* key, const char* where) {
    const Json& v = field_of(j, key, where);
    if (!v.is_string())
        throw ParseError(std::string(where) + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

} // namespace

Json json_of(const FieldSpec& fs) {
    if (fs.is_rationals()) return Json{{"type", "Q"}};
    return Json{{"type", "Fp"}, {"p", fs.prime()}};
}

FieldSpec field_from_json(const Json& j) {
    const std::string type = string_field(j, "type", "field");
    if (type == "Q") return FieldSpec::rationals();
    if (type == "Fp") {
        const Json& p = field_of(j, "p", "field");
        if ((!p.is_number_integer() && !p.is_number_unsigned()) || p.get<long long>() < 2)
            throw ParseError("field: \"p\" must be a positive integer");
        return FieldSpec::prime_field(static_cast<std::uint32_t>(p.get<long long>()));
    }
    throw ParseError("field: unknown \"type\" \"" + type + "\"");
}

Json json_of(const StructureVector& v) {
    Json entries = Json::array();
    for (std::size_t m = 1; m <= v.size(); ++m) {
        const FieldScalar& e = v.at_flat(m);
        if (e.is_zero()) continue;
        const Triple t = triple_of(m, v.n());
        entries.push_back(Json{{"i", t.i}, {"j", t.j}, {"k", t.k}, {"value", e.str()}});
    }
    return Json{{"n", v.n()}, {"field", json_of(v.spec())}, {"entries", std::move(entries)}};
}

StructureVector structure_vector_from_json(const Json& j) {
    const std::size_t n = size_field(j, "n", "structure vector");
    const FieldSpec fs = field_from_json(field_of(j, "field", "structure vector"));
    StructureVector out(n, fs);
    const Json& entries = field_of(j, "entries", "structure vector");
    if (!entries.is_array())
        throw ParseError("structure vector: \"entries\" must be an array");
    for (const Json& e : entries) {
        const std::size_t i = size_field(e, "i", "entry");
        const std::size_t jj = size_field(e, "j", "entry");
        const std::size_t k = size_field(e, "k", "entry");
        if (i > n || jj > n || k > n)
            throw ParseError("entry: index out of range for n=" + std::to_string(n));
        out.set(i, jj, k, FieldScalar::parse(fs, string_field(e, "value", "entry")));
    }
    return out;
}

Json json_of(const BasisChange& g) {
    Json rows = Json::array();
    for (std::size_t r = 1; r <= g.n(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 1; c <= g.n(); ++c) row.push_back(g.matrix().at(r, c).str());
        rows.push_back(std::move(row));
    }
    return Json{{"n", g.n()}, {"field", json_of(g.spec())}, {"rows", std::move(rows)}};
}

BasisChange basis_change_from_json(const Json& j) {
    const std::size_t n = size_field(j, "n", "basis change");
    const FieldSpec fs = field_from_json(field_of(j, "field", "basis change"));
    const Json& rows = field_of(j, "rows", "basis change");
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("basis change: \"rows\" must be an array of n rows");
    FlatMatrix m(n, n, fs);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = rows.at(r);
        if (!row.is_array() || row.size() != n)
            throw ParseError("basis change: row " + std::to_string(r + 1) +
                             " must have n entries");
        for (std::size_t c = 0; c < n; ++c) {
            if (!row.at(c).is_string())
                throw ParseError("basis change: entries must be scalar strings");
            m.set(r + 1, c + 1, FieldScalar::parse(fs, row.at(c).get<std::string>()));
        }
    }
    return BasisChange(std::move(m));
}

Json json_of(const WeightVector& q) {
    Json out = Json::array();
    for (long long w : q.weights()) out.push_back(w);
    return out;
}

WeightVector weight_vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("weights: expected a nonempty integer array");
    std::vector<long long> w;
    for (const Json& e : j) {
        if (!e.is_number_integer() && !e.is_number_unsigned())
            throw ParseError("weights: entries must be integers");
        w.push_back(e.get<long long>());
    }
    return WeightVector(std::move(w));
}

Json json_of(const DegenerationVerdict& v) {
    Json out;
    switch (v.kind) {
        case DegenerationVerdict::Kind::WitnessGrading: out["kind"] = "witness_grading"; break;
        case DegenerationVerdict::Kind::WitnessIdeal: out["kind"] = "witness_ideal"; break;
        case DegenerationVerdict::Kind::Blocked: out["kind"] = "blocked"; break;
        case DegenerationVerdict::Kind::Inconclusive: out["kind"] = "inconclusive"; break;
    }
    out["from"] = json_of(v.from);
    out["to"] = json_of(v.to);
    if (v.weights) out["q"] = json_of(*v.weights);
    if (v.basis) out["basis"] = json_of(*v.basis);
    if (v.kind == DegenerationVerdict::Kind::WitnessIdeal) out["ideal_dim"] = v.ideal_dim;
    if (v.kind == DegenerationVerdict::Kind::Blocked) {
        out["condition"] = v.blocked_condition;
        out["from_value"] = v.blocked_from_value;
        out["to_value"] = v.blocked_to_value;
    }
    return out;
}

Json json_of(const ClassificationLabel& l) {
    Json out{{"label", label_name(l.kind)}};
    if (l.alpha) out["alpha"] = l.alpha->str();
    if (l.witness) out["witness"] = json_of(*l.witness);
    if (!l.note.empty()) out["note"] = l.note;
    return out;
}

Json json_of(const SubspaceBasis& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(json_of(v));
    return Json{{"n", s.n()},
                {"field", json_of(s.spec())},
                {"dimension", s.dim()},
                {"basis", std::move(basis)}};
}

Json json_of(const CompositionReport& r) {
    return Json{{"n", r.n},
                {"field", json_of(r.spec)},
                {"char_divides_n_minus_1", r.char_divides_n_minus_1},
                {"dim_rho_span", r.dim_rho_span},
                {"dim_eta_span", r.dim_eta_span},
                {"dim_sk", r.dim_sk},
                {"intersection_dim", r.intersection_dim},
                {"rho_in_eta_span", r.rho_in_eta_span},
                {"rho_span_inside_eta_span", r.rho_span_inside_eta_span},
                {"case", r.char_divides_n_minus_1 ? "chain" : "direct_sum"},
                {"verified", r.verified()}};
}

Json json_of(const InvariantProfile& p, const StructureVector& v) {
    Json traces = Json::array();
    for (std::size_t i = 1; i <= v.n(); ++i) traces.push_back(ad_trace(v, i).str());
    Json out{{"n", v.n()},
             {"field", json_of(v.spec())},
             {"rank_a", p.rank_a},
             {"rank_b", p.rank_b},
             {"ann_left", p.ann.left},
             {"ann_right", p.ann.right},
             {"ann", p.ann.two_sided},
             {"square_dim", p.square},
             {"skew", p.skew},
             {"lie", p.lie},
             {"metabelian", p.metabelian},
             {"commutative", p.commutative},
             {"unimodular", p.unimodular},
             {"star_star", p.star_star},
             {"ad_traces", std::move(traces)},
             {"in_P", in_P(v)},
             {"in_U", in_U(v)}};
    if (p.star)
        out["star"] = *p.star;
    else
        out["star"] = nullptr;
    return out;
}

} // namespace algdeg
