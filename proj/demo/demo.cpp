// Builds a labeling of C_{6,(2)}, checks it, and develops a cyclic
// decomposition of K_33 from it.
#include <iostream>

#include "rhodesign/rhodesign.hpp"

int main() {
  using namespace rhodesign;

  const ConstructionResult c = label_cycle_one_pendant(6, 2);
  std::cout << "labels:";
  for (Label x : c.labeling.values()) std::cout << ' ' << x;
  std::cout << "  (mod " << c.modulus << ")\n";

  const auto uo = check_uniformly_ordered(c.graph, c.labeling, c.bipartition, c.labeling.bound());
  std::cout << "uniformly ordered: " << std::boolalpha << uo.pass << ", lambda = " << *uo.lambda
            << '\n';

  const ShiftWindow w = uniform_shift_windows(c.graph, c.labeling, c.bipartition, c.labeling.bound());
  std::cout << "shifts keeping (A,B) order:";
  for (const auto& [lo, hi] : as_intervals(w.for_ab)) std::cout << " [" << lo << ',' << hi << ']';
  std::cout << '\n';

  const DecompositionCertificate cert = develop(base_blocks(c.graph, c.labeling, c.bipartition, 2));
  std::cout << "K_" << cert.v << ": " << cert.developed.size() << " blocks, " << cert.edge_count
            << " edges, " << (cert.pass ? "exact cover" : *cert.violation) << '\n';
  return cert.pass ? 0 : 1;
}
