#ifndef LOGTEV_GAMMA_HPP
#define LOGTEV_GAMMA_HPP

#include <string>
#include <vector>

#include "logtev/errors.hpp"

namespace logtev {

/// Tangency profile along one boundary divisor: an ordered list of
/// positive contact orders. The empty partition (no contact) is allowed.
struct Partition {
  std::vector<long> parts;

  int size() const { return static_cast<int>(parts.size()); }
  long sum() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
};

/// Tangency data for maps to the P^s-bundle over P^r twisted by a.
/// mu has r+s+2 entries indexed j = 0..r+s+1: mu[0] pairs with the
/// twisted summand (degree c-ab), mu[1..r+1] with the base coordinates
/// (degree b), mu[r+2..r+s+1] with the fiber coordinates (degree c).
struct GammaXrsa {
  int r = 1;
  int s = 1;
  long a = 0;
  long b = 0;
  long c = 0;
  std::vector<Partition> mu;
};

/// Quantities derived from a validated GammaXrsa.
struct DerivedXrsa {
  std::vector<int> m;       // m_j = number of parts of mu_j
  std::vector<int> offset;  // first global generator index for each j
  int m_total = 0;          // m = sum of m_j; also the ring context M
  int n = 0;                // m/(r+s) + 1
  long k0 = 0;              // s(n-1) - sum_{j>=r+2} m_j
  bool degenerate = false;  // n < 3: integrals defined, geometry is not
};

/// Checks every structural invariant of the data and returns the derived
/// quantities. Throws DegreeMismatchError, IndivisibleError,
/// NegativeTwistError, NonPositivePartError, or ValidationError.
DerivedXrsa validate_xrsa(const GammaXrsa& g);

/// Tangency data for maps to the blow-up of P^2 at two torus-fixed
/// points. mu has 5 entries stored at indices 0..4 for the boundary
/// divisors j = 1..5 of the fan; d is the degree against O_{P^2}(1).
struct GammaBlp2 {
  long d = 1;
  std::vector<Partition> mu;
};

struct DerivedBlp2 {
  std::vector<int> m;       // m_j for j = 1..5, stored at indices 0..4
  std::vector<int> offset;  // first global generator index per divisor
  int m_total = 0;
  int n = 0;  // (m+2)/2
  bool degenerate = false;
};

DerivedBlp2 validate_blp2(const GammaBlp2& g);

/// One parsed canonical input document: either target.
struct GammaDocument {
  enum class Target { xrsa, blp2 };
  Target target = Target::xrsa;
  GammaXrsa xrsa;
  GammaBlp2 blp2;
};

/// Parses the canonical serialized form:
///   {"target": "xrsa", "r": .., "s": .., "a": .., "b": .., "c": ..,
///    "mu": [[..], ..]}
///   {"target": "blp2", "d": .., "mu": [[..], ..]}
/// Field order is irrelevant; unknown fields are rejected.
GammaDocument parse_gamma_document(const std::string& json_text);

std::string gamma_document_to_json(const GammaDocument& doc);

}  // namespace logtev

#endif
