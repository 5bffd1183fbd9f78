#pragma once

#include "loopforge/form.hpp"
#include "loopforge/report.hpp"
#include "loopforge/rng.hpp"

namespace loopforge {

// Arithmetic progression in Z: mod * Z + res.
struct Prog {
  int mod = 1;
  int res = 0;

  static Prog Z() { return {1, 0}; }
  static Prog twoZ() { return {2, 0}; }
  static Prog twoZplus1() { return {2, 1}; }

  bool contains(int x) const { return ((x - res) % mod) == 0; }
  friend Prog operator+(const Prog& a, const Prog& b) {
    int m = std::gcd(a.mod, b.mod);
    return {m, ((a.res + b.res) % m + m) % m};
  }
  Prog scaled(int k) const {  // k != 0
    int m = std::abs(k) * mod;
    return {m, ((k * res) % m + m) % m};
  }
  bool subset_of(const Prog& o) const {
    return mod % o.mod == 0 && ((res - o.res) % o.mod) == 0;
  }
  bool disjoint(const Prog& o) const {
    int g = std::gcd(mod, o.mod);
    return ((res - o.res) % g) != 0;
  }
  int generated() const { return std::gcd(mod, res); }  // <res + mod Z> = gZ
  std::string str() const;
  friend bool operator==(const Prog& a, const Prog& b) {
    return a.mod == b.mod && a.res == b.res;
  }
};

// Root system extended by Z, encoded per length class.
struct RootDatum {
  RootSystem delta;
  int rank = 2;
  std::map<LengthClass, Prog> S;
  Prog S0;

  const Prog& at(LengthClass c) const {
    auto it = S.find(c);
    if (it == S.end()) throw DomainError("root datum: missing length class");
    return it->second;
  }
};

RootDatum builtin_datum(LoopTag tag, int rank);
VerificationReport check_root_datum(const RootDatum& rd);

// Deliberate corruptions used by tests and the CLI fault fixture.
enum class FaultInjection { None, GradingBreak };

// Axioms (LT1)-(LT5), checked exhaustively on the windowed core.
VerificationReport check_lie_torus(const AlgebraSpec& spec, bool extended,
                                   const FormSpec& form,
                                   FaultInjection fault = FaultInjection::None);

// Exhaustive interior Jacobi for the extended (star) bracket; covers the
// plain loop bracket in the body coordinates and the cocycle identity in
// the central coordinate.
VerificationReport jacobi_suite(const AlgebraSpec& spec, const FormSpec& form,
                                FaultInjection fault = FaultInjection::None);

// Symmetry, gradedness, invariance, d0-skewness, the 2-cocycle identity,
// FPAT over every root pair, t_delta = c, and (for A1) the radical claim.
VerificationReport forms_suite(const AlgebraSpec& spec, const FormSpec& form,
                               uint64_t seed, int triples);

// Bracket-closure span of a generator set; reports per-degree dimensions
// against the windowed core.
VerificationReport generation_check(const AlgebraSpec& spec,
                                    const std::vector<GradedElement>& gens);
std::vector<GradedElement> default_generators(const AlgebraSpec& spec,
                                              bool drop_degree_one = false);

// Basis of the centralizer of the windowed algebra inside its degree-0
// slice (plus Fc when extended).
std::vector<GradedElement> compute_center(const AlgebraSpec& spec,
                                          bool extended, const FormSpec& form);
VerificationReport center_suite(const AlgebraSpec& spec, const FormSpec& form);

// Graded dimensions of the fixed algebra of each hatted automorphism
// against the directly built twisted algebra.
VerificationReport twist_suite(int rank, int window);

// Rank n -> n+1 embeddings commute with brackets, preserve traces and
// restrict the form, on full basis images.
VerificationReport embedding_suite(LoopTag tag, int rank, int window,
                                   const FormSpec& form);

// Coroot of mu inside the algebra's Cartan (handles the BC datum).
DiagExt coroot_in(const AlgebraSpec& spec, const Weight& mu);

}  // namespace loopforge
