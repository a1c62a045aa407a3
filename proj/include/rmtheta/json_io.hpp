#pragma once

#include <json.hpp>

#include "rmtheta/characters.hpp"
#include "rmtheta/concordance.hpp"
#include "rmtheta/curves.hpp"
#include "rmtheta/lattice.hpp"
#include "rmtheta/theta.hpp"

namespace rmtheta {

using json = nlohmann::json;

// Input validation failures raise SchemaError; the CLI maps it to exit 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// {"p": int, "kind": "base"|"unram2"|"ram2", "d": int?, "precision": int}
json field_to_json(const LocalFieldDesc& F);
LocalFieldDesc field_from_json(const json& j);

// {"field": ..., "c": int, "unit_exponents": [[m,k],...],
//  "pi_value": [m,k] | {"re": f, "im": f}}
json character_to_json(const MultiplicativeCharacter& chi);
MultiplicativeCharacter character_from_json(const json& j);

json unit_complex_to_json(const UnitComplex& u);
UnitComplex unit_complex_from_json(const json& j);

// {"field": ..., "shape": [ints]}
json adapted_lattice_to_json(const AdaptedLattice& L);
AdaptedLattice adapted_lattice_from_json(const json& j);

// {"rank": int, "basis": [[int]]} (basis given as columns)
json global_lattice_to_json(const GlobalLattice& L);
GlobalLattice global_lattice_from_json(const json& j);

// {"f": [c0..], "rm_disc": int?, "label": string?}
json curve_to_json(const HyperellipticCurve& C);
HyperellipticCurve curve_from_json(const json& j);

// {"rm_disc": int, "records": [{"p": int, "split": bool | "ramified": true,
//   "a": [[u, v], ...]}]}
json hecke_to_json(const HeckeDataset& data);
HeckeDataset hecke_from_json(const json& j);

json euler_factor_to_json(const EulerFactor& E);
json rm_witness_to_json(const RMSplitWitness& w);
json theta_table_to_json(const ThetaCoefficientTable& t);
json match_report_to_json(const MatchReport& r);
json complex_to_json(cdouble z);

void require_keys(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional);

}  // namespace rmtheta
