#pragma once

#include <cstddef>
#include <vector>

#include "degen/cyclotomic.hpp"

namespace degen {

/// One cyclic factor (Z/q^e Z)^* of the unit group modulo an odd d.
struct CyclicFactor {
  unsigned prime;
  unsigned exponent;
  unsigned prime_power;  // q^e
  unsigned generator;    // smallest primitive root mod q^e
  unsigned order;        // phi(q^e)
  std::vector<unsigned> discrete_log;  // index by residue mod q^e; units only
};

struct UnitGroupStructure {
  unsigned modulus;
  std::vector<CyclicFactor> factors;
};

/// Factorization of (Z/dZ)^* into cyclic factors with verified generators.
/// Throws std::invalid_argument when d is even or zero.
UnitGroupStructure unit_group(unsigned d);

/// Dirichlet character modulo an odd d with exact values in Q(zeta_order).
///
/// Characters are addressed by exponent vectors (one per cyclic factor,
/// relative to the fixed generators) and by their position in enumeration
/// order. The character mod 1 is identically 1, including at 0.
class DirichletCharacter {
 public:
  DirichletCharacter(const UnitGroupStructure& group, std::vector<unsigned> exponents, std::size_t index);

  unsigned modulus() const { return modulus_; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  std::size_t index() const { return index_; }
  /// Least m with chi^m trivial.
  unsigned order() const { return order_; }

  /// chi(n mod d) for any integer n.
  const Cyclotomic& operator()(long n) const;
  const std::vector<Cyclotomic>& values() const { return values_; }

  bool is_trivial() const { return order_ == 1; }

 private:
  unsigned modulus_;
  std::vector<unsigned> exponents_;
  std::size_t index_;
  unsigned order_;
  std::vector<Cyclotomic> values_;
};

/// All phi(d) characters mod d; the trivial character first, then exponent
/// vectors in mixed-radix order with the last (largest prime) factor fastest.
std::vector<DirichletCharacter> enumerate_characters(unsigned d);

/// Cached enumerate_characters(d); references stay valid for the program's life.
const std::vector<DirichletCharacter>& characters_mod(unsigned d);

/// Throws std::out_of_range for a bad index.
const DirichletCharacter& character(unsigned d, std::size_t index);

inline const Cyclotomic& char_value(const DirichletCharacter& chi, long n) { return chi(n); }

unsigned conductor(const DirichletCharacter& chi);
inline bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.modulus(); }

inline unsigned char_order(const DirichletCharacter& chi) { return chi.order(); }
/// chi(-1) as +1 or -1 (1 for the modulus-1 character).
int parity(const DirichletCharacter& chi);

}  // namespace degen
