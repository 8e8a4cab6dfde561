// Walks through the d=4 fiber of six transpositions multiplying to the
// identity: every generating word lies in one Hurwitz orbit.

#include <iostream>

#include "hurwitz/hurwitz.hpp"

int main() {
  using namespace hurwitz;

  FiberSpec spec;
  spec.d = 4;
  spec.type = parse_type(4, "2,1,1:6");
  spec.product = Perm::identity(4);
  spec.constraint = SubgroupConstraint::full_group;

  const FiberOrbits fo = count_orbits_in_fiber(spec);
  std::cout << "words: " << fo.fiber_size << "\norbits: " << fo.orbit_count << "\n";
  for (std::size_t i = 0; i < fo.representatives.size(); ++i)
    std::cout << "  " << format_word(fo.representatives[i]) << "  (" << fo.orbit_sizes[i] << " words)\n";

  // any two members are connected by an explicit sequence of moves
  const Factorization a = parse_word("(1,2) (1,2) (2,3) (2,3) (3,4) (3,4)", 4);
  const Factorization b = fo.representatives.front();
  const Equivalence e = are_equivalent(a, b);
  std::cout << format_word(a) << "  ~  " << format_word(b) << ": " << to_string(e.verdict) << " in "
            << e.certificate.size() << " moves\n ";
  for (const auto& m : e.certificate) std::cout << ' ' << m.to_string();
  std::cout << "\n";
}
