// IG(1,4) = P^3: build the presentation, reduce a few classes, and push the
// first character generator through xi.

#include <iostream>

#include "isogr/polynomial_io.hpp"
#include "isogr/presentations.hpp"
#include "isogr/xi.hpp"

using namespace isogr;

int main() {
  const QQuotient q(finite_c_presentation(2, 1), 8);
  const auto& g = q.grading();

  std::cout << q.presentation().describe() << "\n";
  for (std::size_t i = 0; i < q.presentation().relations.size(); ++i)
    std::cout << "  " << q.presentation().relation_names[i] << ": " << to_string(q.presentation().relations[i]) << "\n";

  for (const auto& [d, r] : q.ranks()) std::cout << "rank H^" << d << " = " << r << "\n";

  for (const char* s : {"c2", "c3", "c1^3", "c1^4", "c1*c2 - c3"}) {
    const auto nf = q.normal_form(parse_polynomial<mpz_class>(s, g));
    std::cout << s << " = " << to_string(nf.to_polynomial()) << "\n";
  }

  const XiMap xi(LieType::C, 1, q);
  std::cout << "xi(e1) = " << to_string(xi.image_polynomial(1)) << " = " << to_string(xi.generator_image(1).to_polynomial())
            << "\n";
  return 0;
}
