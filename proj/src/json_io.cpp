#include "rmtheta/json_io.hpp"

namespace rmtheta {

void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
    if (!j.is_object()) throw SchemaError("expected a JSON object");
    for (const std::string& k : required)
        if (!j.contains(k)) throw SchemaError("missing key \"" + k + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = false;
        for (const std::string& r : required) known = known || r == k;
        for (const std::string& o : optional) known = known || o == k;
        if (!known) throw SchemaError("unknown key \"" + k + "\"");
    }
}

json field_to_json(const LocalFieldDesc& F) {
    json j{{"p", F.p}, {"precision", F.precision}};
    switch (F.kind) {
        case ExtensionKind::base: j["kind"] = "base"; break;
        case ExtensionKind::unram2: j["kind"] = "unram2"; j["d"] = F.d; break;
        case ExtensionKind::ram2: j["kind"] = "ram2"; j["d"] = F.d; break;
    }
    return j;
}

LocalFieldDesc field_from_json(const json& j) {
    require_keys(j, {"p", "kind", "precision"}, {"d"});
    const std::string kind = j.at("kind").get<std::string>();
    ExtensionKind k;
    if (kind == "base") k = ExtensionKind::base;
    else if (kind == "unram2") k = ExtensionKind::unram2;
    else if (kind == "ram2") k = ExtensionKind::ram2;
    else throw SchemaError("unknown field kind \"" + kind + "\"");
    i64 d = j.value("d", i64{0});
    if (k != ExtensionKind::base && !j.contains("d"))
        throw SchemaError("quadratic extension requires \"d\"");
    return make_field(j.at("p").get<i64>(), k, j.at("precision").get<int>(), d);
}

json unit_complex_to_json(const UnitComplex& u) {
    if (u.is_exact()) return json::array({u.order(), u.exponent()});
    cdouble z = u.to_complex();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

UnitComplex unit_complex_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw SchemaError("root of unity must be [m, k]");
        return UnitComplex::root_of_unity(j[0].get<i64>(), j[1].get<i64>());
    }
    require_keys(j, {"re", "im"}, {});
    return UnitComplex::from_complex({j.at("re").get<double>(), j.at("im").get<double>()});
}

json character_to_json(const MultiplicativeCharacter& chi) {
    json exps = json::array();
    for (const UnitComplex& v : chi.generator_values())
        exps.push_back(json::array({v.order(), v.exponent()}));
    return json{{"field", field_to_json(chi.field())},
                {"c", chi.conductor()},
                {"unit_exponents", exps},
                {"pi_value", unit_complex_to_json(chi.uniformizer_value())}};
}

MultiplicativeCharacter character_from_json(const json& j) {
    require_keys(j, {"field", "c"}, {"unit_exponents", "pi_value"});
    LocalFieldDesc F = field_from_json(j.at("field"));
    UnitComplex pi = j.contains("pi_value") ? unit_complex_from_json(j.at("pi_value"))
                                            : UnitComplex::one();
    const int c = j.at("c").get<int>();
    if (c == 0) return MultiplicativeCharacter::unramified(F, pi);
    if (!j.contains("unit_exponents"))
        throw SchemaError("ramified character requires \"unit_exponents\"");
    std::vector<std::pair<i64, i64>> exps;
    for (const json& e : j.at("unit_exponents")) {
        if (!e.is_array() || e.size() != 2) throw SchemaError("unit exponent must be [m, k]");
        exps.emplace_back(e[0].get<i64>(), e[1].get<i64>());
    }
    MultiplicativeCharacter chi = MultiplicativeCharacter::from_unit_exponents(F, c, exps, pi);
    return chi;
}

json adapted_lattice_to_json(const AdaptedLattice& L) {
    return json{{"field", field_to_json(L.field())}, {"shape", L.shape()}};
}

AdaptedLattice adapted_lattice_from_json(const json& j) {
    require_keys(j, {"field", "shape"}, {});
    return AdaptedLattice(field_from_json(j.at("field")),
                          j.at("shape").get<std::vector<i64>>());
}

json global_lattice_to_json(const GlobalLattice& L) {
    return json{{"rank", L.rank()}, {"basis", L.basis()}, {"gram", L.gram()}};
}

GlobalLattice global_lattice_from_json(const json& j) {
    require_keys(j, {"rank", "basis"}, {"gram"});
    auto basis = j.at("basis").get<std::vector<std::vector<i64>>>();
    GlobalLattice L(std::move(basis));
    if (L.rank() != j.at("rank").get<int>()) throw SchemaError("rank does not match basis");
    if (j.contains("gram") && j.at("gram").get<std::vector<std::vector<i64>>>() != L.gram())
        throw SchemaError("provided gram does not equal basis^T basis");
    return L;
}

json curve_to_json(const HyperellipticCurve& C) {
    json j{{"f", C.f_coeffs}};
    if (C.rm_disc) j["rm_disc"] = *C.rm_disc;
    if (!C.label.empty()) j["label"] = C.label;
    return j;
}

HyperellipticCurve curve_from_json(const json& j) {
    require_keys(j, {"f"}, {"rm_disc", "label"});
    std::optional<i64> disc;
    if (j.contains("rm_disc")) disc = j.at("rm_disc").get<i64>();
    return HyperellipticCurve::make(j.at("f").get<std::vector<i64>>(), disc,
                                    j.value("label", std::string{}));
}

json hecke_to_json(const HeckeDataset& data) {
    json recs = json::array();
    for (const HeckeRecord& r : data.records) {
        json jr{{"p", r.p}};
        if (r.splitting == PrimeSplitting::ramified) {
            jr["ramified"] = true;
        } else {
            jr["split"] = (r.splitting == PrimeSplitting::split);
            json a = json::array();
            for (const QuadraticInteger& q : r.eigenvalues)
                a.push_back(json::array({q.u, q.v}));
            jr["a"] = a;
        }
        recs.push_back(jr);
    }
    return json{{"rm_disc", data.rm_disc}, {"records", recs}};
}

HeckeDataset hecke_from_json(const json& j) {
    require_keys(j, {"rm_disc", "records"}, {});
    HeckeDataset data;
    data.rm_disc = j.at("rm_disc").get<i64>();
    for (const json& jr : j.at("records")) {
        require_keys(jr, {"p"}, {"split", "ramified", "a"});
        HeckeRecord r;
        r.p = jr.at("p").get<i64>();
        if (jr.value("ramified", false)) {
            r.splitting = PrimeSplitting::ramified;
        } else {
            if (!jr.contains("split") || !jr.contains("a"))
                throw SchemaError("unramified record requires \"split\" and \"a\"");
            r.splitting = jr.at("split").get<bool>() ? PrimeSplitting::split
                                                     : PrimeSplitting::inert;
            for (const json& ja : jr.at("a")) {
                if (!ja.is_array() || ja.size() != 2)
                    throw SchemaError("eigenvalue must be [u, v]");
                QuadraticInteger q{ja[0].get<i64>(), ja[1].get<i64>(), data.rm_disc};
                if (((q.u - q.v * q.disc) % 2 + 2) % 2 != 0)
                    throw SchemaError("eigenvalue (u + v sqrt(disc))/2 needs u = v*disc mod 2");
                r.eigenvalues.push_back(q);
            }
        }
        data.records.push_back(r);
    }
    return data;
}

json euler_factor_to_json(const EulerFactor& E) {
    return json{{"p", E.p}, {"coeffs", E.coeffs()}};
}

json rm_witness_to_json(const RMSplitWitness& w) {
    switch (w.kind) {
        case RMSplitWitness::Kind::none:
            return json{{"kind", "none"}};
        case RMSplitWitness::Kind::inert:
            return json{{"kind", "inert"}, {"a0", w.a0}};
        case RMSplitWitness::Kind::split:
            return json{{"kind", "split"},
                        {"a", json::array({w.a.u, w.a.v})},
                        {"a_conj", json::array({w.a_conj.u, w.a_conj.v})},
                        {"disc", w.a.disc}};
    }
    return {};
}

json theta_table_to_json(const ThetaCoefficientTable& t) {
    json entries = json::array();
    for (const auto& [T, v] : t.entries)
        entries.push_back(json{{"a", T.a}, {"b", T.b}, {"c", T.c}, {"value", v}});
    return json{{"bound", t.bound},
                {"weight", t.weight == HarmonicWeight::constant_one ? "one" : "det"},
                {"entries", entries}};
}

json match_report_to_json(const MatchReport& r) {
    json recs = json::array();
    for (const MatchRecord& m : r.records) {
        json jm{{"p", m.p}};
        if (m.skipped) {
            jm["skipped"] = m.skip_reason;
        } else {
            jm["curve_factor"] = euler_factor_to_json(*m.curve_factor);
            jm["automorphic_factor"] = euler_factor_to_json(*m.automorphic_factor);
            jm["equal"] = m.equal;
            jm["witness"] = m.witness;
        }
        recs.push_back(jm);
    }
    return json{{"records", recs},
                {"num_equal", r.num_equal()},
                {"num_unequal", r.num_unequal()}};
}

json complex_to_json(cdouble z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace rmtheta
