#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfl/mpoly.hpp"

namespace qfl {

enum class FamilyKind {
  Fib,
  Lucas,
  MonicFib,
  MonicLucas,
  ChebU,
  ChebT,
  QFib,
  QLucas,
  QFibInv,
  QLucasInv,
  RFib,
  RLucas,
  SU,
  ST,
  LittleQJacobi,
};

/// Lower-case CLI name ("fib", "qlucas", "su", "lqjacobi", ...).
std::string_view family_name(FamilyKind kind);
/// Inverse of family_name; throws ParseError for unknown names.
FamilyKind parse_family(std::string_view name);
std::span<const FamilyKind> all_families();

/// Which sum a coefficient law belongs to.
enum class CoeffKind { F, L };

/// A deliberate additive error on one Fibonacci coefficient c_{n,k}^(F).
/// Only used to prove that the verification suites detect corruption.
struct CoeffPerturbation {
  int n = 0;
  int k = 0;
  Rational delta{1};
};

/// c_{n,k}^(F) = q^{k(k+1)/2} [n-k choose k]_q: coefficient of s^k x^{n-2k}
/// in F_{n+1}(x,s|q).
MPoly coeff_law_f(int n, int k, const CoeffPerturbation* perturb = nullptr);

/// c_{n,k}^(L) = q^{k(k-1)/2} ([n]_q/[n-k]_q) [n-k choose k]_q: coefficient
/// of s^k x^{n-2k} in L_n(x,s|q). The q-integer ratio is divided exactly.
MPoly coeff_law_l(int n, int k);

/// Coefficient law value with its identity.
struct CoeffLaw {
  CoeffKind kind;
  int n;
  int k;
  MPoly value;
};
CoeffLaw coeff_law(CoeffKind kind, int n, int k);

// Classical families. Fib and Lucas are bivariate in (x, s); the monic and
// Chebyshev families are univariate in x. Index conventions: Fib n -> F_n
// (degree n-1), all other kinds -> degree n.
MPoly classical_recurrence(FamilyKind kind, int n);
MPoly classical_explicit(FamilyKind kind, int n);

// q-deformed families. QFib n -> F_n(x,s|q), QLucas n -> L_n(x,s|q).
MPoly q_family_recurrence(FamilyKind kind, int n);
MPoly q_family_explicit(FamilyKind kind, int n, const CoeffPerturbation* perturb = nullptr);

/// QFibInv / QLucasInv: the family at base 1/q, built from the coefficient
/// laws times q^{k(k-m-1)} (Fibonacci, m = n-1) or q^{k(k-n)} (Lucas).
MPoly q_family_inverted(FamilyKind kind, int n);

/// RFib, RLucas, SU, ST at a fixed rational base q0. Result is a polynomial
/// in x only. Throws DegenerateBase if a denominator factor vanishes.
MPoly r_s_family(FamilyKind kind, int n, const Rational& q0);

/// Little q-Jacobi p_n(x; a, b | base) = 2phi1(base^-n, ab base^{n+1}; a base | base; base x).
MPoly little_q_jacobi(int n, const Rational& a, const Rational& b, const Rational& base);

/// x^e -> x^{power * e}; composes a polynomial in x with x^power.
MPoly compose_x_power(const MPoly& p, int power);

/// L_n = F_{n+1} + s F_{n-1} for the q-families, exact.
bool check_interrelation(int n);

/// Coefficient-level form of the imaginary-argument Chebyshev connection:
/// p_n^(F) against U_n, or p_n^(L) against T_n, with i-powers resolved into
/// sign laws. Also checks the rescaling F_{n+1}(x,s) <-> p_n^(F) (and the
/// Lucas analogue) coefficient by coefficient.
bool check_chebyshev_connection(FamilyKind kind, int n);

/// Three-term recurrence probe for the monic r-families.
struct RecurrenceProbeRow {
  int n;
  bool printed_holds;  ///< coefficient q^{n-1}/((1+q^n)(1+q^{n+1}))
  bool shifted_holds;  ///< coefficient q^{n-1}/((1+q^{n-1})(1+q^n))
};

struct RecurrenceKindReport {
  FamilyKind kind;
  std::vector<Rational> samples;
  std::vector<RecurrenceProbeRow> rows;  ///< status over all samples, per n
  bool printed_holds_all = false;
  bool shifted_holds_all = false;
  std::optional<int> printed_first_failure;
  std::optional<int> shifted_first_failure;
  /// Smallest n0 such that the shifted law holds for all n0 <= n < n_max.
  std::optional<int> shifted_holds_from;
};

struct RecurrenceReport {
  int n_max = 0;
  std::vector<RecurrenceKindReport> kinds;  ///< empty when no samples were given
};

RecurrenceReport probe_r_recurrence(int n_max, std::span<const Rational> q_samples);

/// The four factorizations of s^(U)_{2n}, s^(U)_{2n+1}, s^(T)_{2n},
/// s^(T)_{2n+1} through little q-Jacobi polynomials in x^2 at base q^2.
/// Requires at least three distinct samples.
bool check_little_qjacobi_relations(int n, std::span<const Rational> q_samples);

/// Per-relation detail for one sample, in the order even-U, odd-U, even-T, odd-T.
std::array<bool, 4> little_qjacobi_relation_status(int n, const Rational& q0);

/// Parameters for the generic constructor below.
struct FamilyParams {
  std::optional<Rational> q;  ///< required by the fixed-base families
  Rational a{1};              ///< little q-Jacobi parameters
  Rational b{1};
};

/// Normative member of any family (explicit sums where both exist).
MPoly family_member(FamilyKind kind, int n, const FamilyParams& params = {});

}  // namespace qfl
