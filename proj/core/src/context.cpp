#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qlab/hermite.hpp"
#include "qlab/oscillator.hpp"

namespace qlab {

void QContext::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw ConfigError("q must lie in (0, 1)");
  if (!(alpha > -1.0)) throw ConfigError("alpha must exceed -1");
  if (!(series_tol > 0.0)) throw ConfigError("series_tol must be positive");
  if (max_terms < 1) throw ConfigError("max_terms must be at least 1");
  if (!(lattice_lo < 0 && lattice_hi > 0)) throw ConfigError("need lattice_lo < 0 < lattice_hi");
}

QContext QContext::make(double q, double alpha) {
  QContext c;
  c.q = q;
  c.alpha = alpha;
  c.validate();
  return c;
}

namespace {

template <class E, std::size_t N>
std::string name_of(E v, const std::array<std::pair<E, const char*>, N>& table) {
  for (auto& [e, s] : table)
    if (e == v) return s;
  return "?";
}

template <class E, std::size_t N>
E parse_of(const std::string& s, const std::array<std::pair<E, const char*>, N>& table,
           const char* what) {
  for (auto& [e, n] : table)
    if (s == n) return e;
  throw ArgumentError(std::string("unknown ") + what + ": " + s);
}

const std::array<std::pair<DerivVariant, const char*>, 6> kDeriv{{
    {DerivVariant::backward, "backward"},
    {DerivVariant::forward, "forward"},
    {DerivVariant::backward_alpha, "backward_alpha"},
    {DerivVariant::forward_alpha, "forward_alpha"},
    {DerivVariant::delta_alpha, "delta_alpha"},
    {DerivVariant::delta_alpha_plus, "delta_alpha_plus"},
}};

const std::array<std::pair<BesselKind, const char*>, 3> kBessel{{
    {BesselKind::second_jackson, "second_jackson"},
    {BesselKind::hahn_exton, "hahn_exton"},
    {BesselKind::modified, "modified"},
}};

const std::array<std::pair<RelationKind, const char*>, 6> kRelation{{
    {RelationKind::generating, "generating"},
    {RelationKind::inversion, "inversion"},
    {RelationKind::forward_shift, "forward_shift"},
    {RelationKind::backward_shift, "backward_shift"},
    {RelationKind::qdiff, "qdiff"},
    {RelationKind::rodrigues, "rodrigues"},
}};

const std::array<std::pair<Ladder, const char*>, 3> kLadder{{
    {Ladder::a, "a"},
    {Ladder::a_plus, "a_plus"},
    {Ladder::H, "H"},
}};

const std::array<std::pair<MatrixKind, const char*>, 11> kMatrix{{
    {MatrixKind::a, "a"},
    {MatrixKind::a_plus, "a_plus"},
    {MatrixKind::N, "N"},
    {MatrixKind::parity_K, "parity_K"},
    {MatrixKind::H, "H"},
    {MatrixKind::b, "b"},
    {MatrixKind::b_plus, "b_plus"},
    {MatrixKind::K0, "K0"},
    {MatrixKind::K_plus, "K_plus"},
    {MatrixKind::K_minus, "K_minus"},
    {MatrixKind::casimir, "casimir"},
}};

const std::array<std::pair<AlgebraRelation, const char*>, 11> kAlgebra{{
    {AlgebraRelation::N_a, "N_a"},
    {AlgebraRelation::N_a_plus, "N_a_plus"},
    {AlgebraRelation::K0_K_plus, "K0_K_plus"},
    {AlgebraRelation::K0_K_minus, "K0_K_minus"},
    {AlgebraRelation::Kminus_Kplus, "Kminus_Kplus"},
    {AlgebraRelation::casimir_even, "casimir_even"},
    {AlgebraRelation::casimir_odd, "casimir_odd"},
    {AlgebraRelation::deformed_commut_plus, "deformed_commut_plus"},
    {AlgebraRelation::deformed_commut_minus, "deformed_commut_minus"},
    {AlgebraRelation::number_recovery, "number_recovery"},
    {AlgebraRelation::H_factorization, "H_factorization"},
}};

}  // namespace

std::string to_string(DerivVariant v) { return name_of(v, kDeriv); }
DerivVariant parse_deriv_variant(const std::string& s) { return parse_of(s, kDeriv, "variant"); }
std::string to_string(BesselKind k) { return name_of(k, kBessel); }
BesselKind parse_bessel_kind(const std::string& s) { return parse_of(s, kBessel, "kind"); }
std::string to_string(RelationKind k) { return name_of(k, kRelation); }
RelationKind parse_relation_kind(const std::string& s) { return parse_of(s, kRelation, "relation"); }
std::string to_string(Ladder l) { return name_of(l, kLadder); }
Ladder parse_ladder(const std::string& s) { return parse_of(s, kLadder, "ladder operator"); }
std::string to_string(MatrixKind k) { return name_of(k, kMatrix); }
MatrixKind parse_matrix_kind(const std::string& s) { return parse_of(s, kMatrix, "matrix"); }
std::string to_string(AlgebraRelation r) { return name_of(r, kAlgebra); }
AlgebraRelation parse_algebra_relation(const std::string& s) {
  return parse_of(s, kAlgebra, "algebra relation");
}

const std::vector<AlgebraRelation>& all_algebra_relations() {
  static const std::vector<AlgebraRelation> all = [] {
    std::vector<AlgebraRelation> v;
    for (auto& [e, s] : kAlgebra) v.push_back(e);
    return v;
  }();
  return all;
}

}  // namespace qlab
