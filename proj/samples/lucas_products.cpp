// Prints the closed form for L_n L_{2n+1} with symbolic p, q, expands it at
// p = q = 1 and checks the result against direct products of Lucas numbers.
#include <iostream>

#include "pqgf/pqgf.hpp"

int main() {
  using namespace pqgf;

  const CatalogEntry entry = product_gf(FamilyId::Lucas, FamilyId::Lucas, ParitySelector::odd_2n_plus_1);
  std::cout << entry.id << "  " << entry.label << " = " << to_string(entry.gf) << "\n\n";

  const CatalogEntry classic = instantiate(entry, 1, 1);
  std::cout << "p = q = 1: " << to_string(classic.gf) << '\n';
  std::cout << "series:    " << to_string(expand(classic.gf, 6)) << '\n';

  const SequenceSpec lucas(FamilyId::Lucas, 1, 1);
  const auto direct = product_terms(lucas, lucas, ParitySelector::odd_2n_plus_1, 7);
  std::cout << "direct:    ";
  for (std::size_t i = 0; i < direct.size(); ++i) std::cout << (i ? ", " : "") << direct[i];
  std::cout << '\n';

  const auto report = verify_entry(entry, kProductOrder);
  std::cout << "\nsymbolic check to z^" << report.order << ": " << (report.passed() ? "ok" : "mismatch") << '\n';
  return report.passed() ? 0 : 1;
}
