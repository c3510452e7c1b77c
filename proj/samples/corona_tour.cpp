// Builds C4^- *s (K2,+) and prints its adjacency spectrum three ways.
#include <sncorona/sncorona.hpp>

#include <iostream>

int main() {
    using namespace sncorona;
    const SignedGraph s1 = families::unbalanced_c4();
    const SignedGraph s2 = families::complete(2);
    const SignedGraph c = s_neighbourhood_corona(s1, s2);

    std::cout << "corona: " << c.order() << " vertices, " << c.size() << " edges\n";
    std::cout << "charpoly: " << to_string(char_poly_exact(adjacency_matrix(c))) << '\n';
    std::cout << "numeric:  " << format_spectrum(numeric_spectrum(c, MatrixKind::Adjacency)) << '\n';

    const ClosedFormSpectrum cf = closed_form_adjacency(s1, s2);
    std::cout << "closed form (" << cf.theorem << "): " << format_spectrum(realize(cf)) << '\n';
}
