#include "distcat/json_io.hpp"

namespace distcat {

Json to_json(const DiagramReport& r) {
  return Json{{"diagram", r.diagram},
              {"instance", r.instance},
              {"discrepancy", r.discrepancy},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

namespace {

const char* kind_name(Gate::Kind k) {
  switch (k) {
    case Gate::Kind::CtrlPower: return "ctrlpower";
    case Gate::Kind::Swap: return "swap";
    case Gate::Kind::Hadamard: return "hadamard";
    case Gate::Kind::QftBlock: return "qft";
    case Gate::Kind::DenseBlock: return "denseblock";
  }
  return "?";
}

}  // namespace

Json to_json(const Circuit& c) {
  Json bases = Json::array();
  for (const auto& b : c.bases) {
    if (const auto* dense = std::get_if<DenseBase>(&b)) {
      bases.push_back(Json{{"label", dense->label},
                           {"kind", "dense"},
                           {"matrix", to_json(dense->mat)}});
    } else {
      const auto& mm = std::get<ModMulBase>(b);
      bases.push_back(Json{{"label", mm.label},
                           {"kind", "modmul"},
                           {"modulus", mm.modulus}});
    }
  }
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    Json jg{{"kind", kind_name(g.kind)}, {"qubits", g.qubits}};
    switch (g.kind) {
      case Gate::Kind::CtrlPower: {
        jg["value"] = g.value;
        jg["power"] = g.power;
        const auto& base = c.bases[g.base_index];
        jg["matrix_ref"] = std::holds_alternative<DenseBase>(base)
                               ? std::get<DenseBase>(base).label
                               : std::get<ModMulBase>(base).label;
        break;
      }
      case Gate::Kind::QftBlock:
        jg["inverse"] = g.inverse;
        break;
      case Gate::Kind::DenseBlock:
        jg["matrix_ref"] = std::get<DenseBase>(c.bases[g.base_index]).label;
        break;
      default:
        break;
    }
    gates.push_back(std::move(jg));
  }
  return Json{{"n_controls", c.n_controls},
              {"target_dim", c.target_dim},
              {"bases", std::move(bases)},
              {"gates", std::move(gates)}};
}

Json to_json(const shor::FactorRun& run) {
  Json counts = Json::object();
  for (const auto& [outcome, count] : run.counts)
    counts[std::to_string(outcome)] = count;
  Json j{{"modulus", run.modulus},
         {"base", run.base},
         {"controls", run.controls},
         {"shots", run.shots},
         {"seed", run.seed},
         {"attempts", run.attempts},
         {"counts", std::move(counts)},
         {"convergents_examined", run.convergents_examined}};
  j["period"] = run.period ? Json(*run.period) : Json(nullptr);
  if (run.factors)
    j["factors"] = Json::array({run.factors->first, run.factors->second});
  else
    j["factors"] = Json(nullptr);
  j["note"] = run.note;
  return j;
}

}  // namespace distcat
