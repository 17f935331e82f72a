#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hofa/linalg.hpp"
#include "hofa/rational.hpp"

namespace hofa {

/// One additive term of a bracket-polynomial phase, a function of n taken
/// mod 1. Kinds:
///   Poly      p(n)
///   NBracket  a * (alpha n) * [beta n]
///   FracProd  a * {alpha n + off1} * {beta n + off2}
///   FracLin   a * {alpha n + off1}
///   Deg3NFF   a * n * {beta n} * {gamma n}
///   Deg3N2F   a * n^2 * {beta n}
/// {x} is the signed fractional part in (-1/2, 1/2] and [x] = x - {x}.
struct BracketTerm {
    enum class Kind { Poly, NBracket, FracProd, FracLin, Deg3NFF, Deg3N2F };

    Kind kind = Kind::Poly;
    Poly poly;                 // Poly
    Rat a;                     // coefficient for all non-Poly kinds
    Rat alpha, beta, gamma;    // phases; meaning depends on kind
    Rat off1, off2;            // offsets inside fractional parts

    static BracketTerm poly_term(Poly p);
    static BracketTerm nbracket(const Rat& a, const Rat& alpha, const Rat& beta);
    static BracketTerm frac_prod(const Rat& a, const Rat& alpha, const Rat& beta,
                                 const Rat& off1 = Rat(), const Rat& off2 = Rat());
    static BracketTerm frac_lin(const Rat& a, const Rat& alpha, const Rat& off1 = Rat());
    static BracketTerm deg3_nff(const Rat& a, const Rat& beta, const Rat& gamma);
    static BracketTerm deg3_n2f(const Rat& a, const Rat& beta);

    Rat eval_raw(const BigInt& n) const;  // value before reduction mod 1
    bool operator==(const BracketTerm& o) const;
};

/// A bracket polynomial phase of degree <= 3: the sum of its terms, taken
/// mod 1. If modulus_n is set, every fractional-part phase must have
/// denominator dividing modulus_n (polynomial coefficients are exempt: the
/// periodicity lemma only constrains their combination, which
/// is_periodic_phase checks exactly).
class BracketExpr {
  public:
    BracketExpr() = default;
    explicit BracketExpr(std::vector<BracketTerm> terms,
                         std::optional<BigInt> modulus_n = std::nullopt);

    const std::vector<BracketTerm>& terms() const { return terms_; }
    const std::optional<BigInt>& modulus_n() const { return mod_; }

    BracketExpr concat(const BracketExpr& o) const;
    bool operator==(const BracketExpr& o) const;

  private:
    std::vector<BracketTerm> terms_;
    std::optional<BigInt> mod_;
};

/// Exact value of the phase at n, reduced mod 1.
Mod1 eval_mod1(const BracketExpr& e, const BigInt& n);

/// True iff the phase is N-periodic: eval_mod1(e, n + N) == eval_mod1(e, n)
/// for every n in [0, N), checked exhaustively. When the expression has the
/// elementary-bracket-quadratic shape (NBracket terms with unit coefficient
/// and a single polynomial of degree <= 2) and its coordinate sequence is
/// N-periodic as well, the denominator conclusions of the periodicity lemma
/// are asserted: all bracket phases have denominator dividing N, and the
/// centered quadratic coefficient a2 - sum(alpha_i beta_i)/2 has denominator
/// dividing 2N.
bool is_periodic_phase(const BracketExpr& e, const BigInt& N);

/// Exact decomposition of the difference alpha(n+h)[beta(n+h)] - alpha n [beta n]:
///   difference(n) == top(n) + sum(lower)(n)   (mod 1) for all integers n.
/// top carries the polynomial part alpha*beta*h*n and the commutator-type
/// linear part (beta{alpha h} - alpha{beta h}) n; lower holds fractional-part
/// products, fractional linears and constants only.
struct VdcExpansion {
    BracketExpr top;
    std::vector<BracketTerm> lower;
};
VdcExpansion vdc_expand(const Rat& alpha, const Rat& beta, const BigInt& h);

/// The trilinear bracket form
///   T(x,y,z) = sum_j {a_j x}(b_j/6) y {c_j z} + {a_j x}(b_j/6) z {c_j y}
///            + sum_j (ap_j/3) {bp_j x} y z.
struct TrilinearT {
    int d = 0;
    std::vector<Rat> alpha, beta, gamma;    // a_j, b_j, c_j
    std::vector<Rat> alpha_p, beta_p;       // ap_j, bp_j
};

Mod1 eval_T(const TrilinearT& t, const BigInt& x, const BigInt& y, const BigInt& z);

struct TrilinearityReport {
    bool ok = true;
    // witness when !ok: slot (0,1,2) and the violating triple + increment
    int slot = -1;
    BigInt x, y, z, step;
};

/// Checks T(x+x',y,z) = T(x,y,z) + T(x',y,z) mod 1 (and the same in y and z)
/// for triples drawn from B; exhaustive when |B|^3 <= sample_cap, otherwise
/// sampled with the given generator seed. Members of B are used through
/// their signed representatives in (-N/2, N/2].
TrilinearityReport local_trilinearity_check(const TrilinearT& t,
                                            const std::vector<long>& bohr_members,
                                            const BigInt& N,
                                            long sample_cap = 200000,
                                            std::uint64_t seed = 1);

}  // namespace hofa
