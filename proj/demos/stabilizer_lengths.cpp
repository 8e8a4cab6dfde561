// Prints the stabilizing words for transpositions and a 4-cycle-like class
// next to their closed-form lengths.

#include <iostream>

#include "hurwitz/hurwitz.hpp"

int main() {
  using namespace hurwitz;

  for (int d = 2; d <= 6; ++d) std::cout << "h, d=" << d << ": " << format_word(build_h(d)) << "\n";

  for (const auto& [d, cls] : {std::pair{4, "2"}, {5, "2"}, {6, "4"}}) {
    const ClassLabel c = parse_class(d, cls);
    const ConstructionContext ctx = ConstructionContext::make(d, c);
    const Factorization hc = build_h_C(ctx);
    std::cout << "\nd=" << d << " class " << c.to_string() << "\n"
              << "  witness  " << format_word(ctx.witness()) << "\n"
              << "  z(1,2)   length " << build_z(ctx, 1, 2).length() << " = " << y_length(d, d, ctx.m()) << "\n"
              << "  h_C      length " << hc.length() << " = " << h_C_length(d, ctx.m()) << "\n";
    const ClassMetrics m = compute_class_metrics(d, c);
    std::cout << "  N_C bound " << bound_N_C(m) << "\n";
  }
}
