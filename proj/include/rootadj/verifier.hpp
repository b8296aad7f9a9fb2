#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootadj/root_adjunction.hpp"

namespace rootadj {

// A word letter is (generator index, exponent); consecutive letters never share a generator.
using Letter = std::pair<int, int>;

struct WordWitness {
  std::vector<Letter> word;
  IsometryMatrix matrix;
  double defect = 0;  // distance to +-I, or the irrationality residual of the rotation angle
};

IsometryMatrix evaluate_word(const std::vector<IsometryMatrix>& generators, const std::vector<Letter>& word);
std::string word_string(const std::vector<Letter>& word);  // e.g. "g0 g1^-1 g0^2"

// Region bounded by three half-turn lines, each oriented with the region on its right.
struct RegionCertificate {
  Outcome outcome = Outcome::DiscreteFree;  // DiscreteFree or DiscreteNotFree
  std::array<ProperGeodesic, 3> lines;
  std::vector<long> orders;  // rotation orders at crossing corners
};

std::optional<RegionCertificate> certify_region_free(const ProperGeodesic& g1, const ProperGeodesic& g2,
                                                     const ProperGeodesic& g3, const Tolerances& tol = {});

inline constexpr double kWordBudget = 1e7;

// Freely reduced words in length-then-lexicographic order (g0, g0^-1, g1, g1^-1, ...).
std::optional<WordWitness> near_identity_search(const std::vector<IsometryMatrix>& generators, int max_len,
                                                double delta);
std::optional<WordWitness> infinite_order_elliptic_witness(const std::vector<IsometryMatrix>& generators,
                                                           int max_len, const Tolerances& tol = {});

// A move replaces one element of the pair by a product with the other, inverts one, or swaps the pair.
struct NielsenMove {
  enum Kind { ReplaceFirst, ReplaceSecond, Swap, InvertFirst, InvertSecond } kind = Swap;
  bool other_on_left = false;  // new = other^e * old, else old * other^e
  int exponent = 1;
};

struct FSequence {
  std::vector<NielsenMove> moves;
  std::vector<long> runs;  // lengths of maximal runs of identical moves
};

std::pair<IsometryMatrix, IsometryMatrix> replay(const std::pair<IsometryMatrix, IsometryMatrix>& pair,
                                                 const std::vector<NielsenMove>& moves);

enum class ReduceStatus { Stopped, NeedsElliptic, NotFreeEvidence, Inconclusive };
std::string to_string(ReduceStatus s);

struct ReduceResult {
  std::pair<IsometryMatrix, IsometryMatrix> pair;
  FSequence fsequence;
  ReduceStatus status = ReduceStatus::Inconclusive;
  std::optional<WordWitness> witness;  // in the input generators
  std::vector<double> max_traces;      // max |trace| before each iteration and at the end
};

ReduceResult nielsen_trace_reduce(const IsometryMatrix& a, const IsometryMatrix& b, int max_iter,
                                  const Tolerances& tol = {});

enum class CheckStatus { Agreement, Disagreement, Inconclusive };
std::string to_string(CheckStatus s);

struct CrossCheckReport {
  CheckStatus status = CheckStatus::Inconclusive;
  std::optional<WordWitness> witness;
  std::optional<RegionCertificate> certificate;
  std::vector<std::string> evidence;
};

// Checks a verdict for adjoining X^{s/n} (X the generator named by role) to the pair of h.
CrossCheckReport cross_check(const Verdict& v, const HexagonConfig& h, Role role, long s, long n,
                             const Tolerances& tol = {});

}  // namespace rootadj
