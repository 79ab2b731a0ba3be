#ifndef LSV_MODELS_HPP
#define LSV_MODELS_HPP

#include <optional>
#include <string>

#include "lsv/derivation.hpp"
#include "lsv/morphism.hpp"
#include "lsv/series.hpp"

namespace lsv {

struct CheckFailure {
  std::string location;  // offending word or index tuple, canonical order
  std::string expected;
  std::string actual;
};

struct CheckOutcome {
  bool pass = true;
  std::optional<CheckFailure> first_failure;

  static CheckOutcome ok() { return {}; }
  static CheckOutcome fail(CheckFailure f) { return {false, std::move(f)}; }
};

// Records the first (canonical-order) nonzero term of `residual` as a
// failure against `where`; returns pass when the residual vanishes.
CheckOutcome residual_outcome(const std::string& where, const Series& residual);

// A graded alphabet together with a degree -1 differential materialized
// through a fixed truncation order. Every generator image must be
// homogeneous of degree deg(g) - 1 (checked on construction). The kind tag
// is documentation only ("lie" or "associative").
struct DifferentialModel {
  std::string name;
  std::string kind;
  AlphabetPtr alphabet;
  int order;
  Derivation differential;

  DifferentialModel(std::string name, std::string kind, AlphabetPtr alphabet,
                    int order, Derivation differential);

  Series generator(std::string_view gen_name) const {
    return Series::generator(alphabet, order, gen_name);
  }
};

// Shared alphabet instances. a, b have degree -1 and z degree 0; u has
// degree -1. Alphabet equality is structural, so locally built copies
// remain compatible with these.
AlphabetPtr s0_alphabet();
AlphabetPtr ls_alphabet();
AlphabetPtr interval_alphabet();

// One generator u of degree -1 with du = -u⊗u (the tensor model whose
// completion the cylinders thicken).
DifferentialModel model_s0(int order);

// The complete free Lie model on a, b (flat, degree -1) and z (degree 0):
//
//   dz = [z,b] + sum_{i>=0} B_i/i! ad_z^i(b - a)
//
// materialized through the truncation order (the i-th summand has word
// length i+1, so i < order suffices).
DifferentialModel model_ls(int order);

// The interval model on a (flat) and z: dz = -sum_{i>=0} B_i/i! ad_z^i(a).
DifferentialModel model_interval(int order);

// The operator form dz = ad_z(b) + (ad_z / (e^{ad_z} - id))(b - a); must
// agree with model_ls's materialized dz through the order.
Series dz_alternative(int order);

// The quotient by the free Lie algebra on b: a |-> a, b |-> 0, z |-> z.
AlgebraMorphism ls_to_interval_quotient(int order);

// Per-generator residual d(d(g)); passes iff every residual vanishes
// through the model's order. Checking generators suffices: d² is itself a
// derivation, so vanishing on generators forces vanishing on all words.
CheckOutcome d_squared_report(const DifferentialModel& model);

// For each source generator g: f(d_src(g)) - d_tgt(f(g)) must vanish
// through the common order.
CheckOutcome chain_map_check(const AlgebraMorphism& f,
                             const DifferentialModel& src,
                             const DifferentialModel& tgt);

}  // namespace lsv

#endif
