// Tour of the representation side: build a 2x2 representation from chosen
// eigenvalues, check its relations, move it with the two flows, and walk the
// path that flattens it onto the abelian locus.
#include <charvar/charvar.hpp>

#include <iostream>

namespace ex = charvar::exact;
namespace gr = charvar::groups;
namespace rl = charvar::replab;

int main() {
    // det = 1 eigenvalue pairs: {i, -i} for the order-4 generator and a
    // conjugate pair of fifth roots for the order-5 one
    rl::EigenConfig config{
        gr::GroupSpec({4, 5}),
        {{ex::RootOfUnity::from_fraction(1, 4), ex::RootOfUnity::from_fraction(3, 4)},
         {ex::RootOfUnity::from_fraction(1, 5), ex::RootOfUnity::from_fraction(4, 5)}},
        1,
        std::nullopt};

    rl::Representation rep = rl::build_representation(config, 7);
    rl::RelationCheck check = rl::verify_relations(rep);
    std::cout << "built 2x2 representation of the (4,5) group\n";
    std::cout << "  relation residual " << check.max_residual << ", omega = "
              << check.omega->real() << (check.omega->imag() < 0 ? " - " : " + ")
              << std::abs(check.omega->imag()) << "i\n";
    std::cout << "  irreducible: " << (rl::is_irreducible_sl2(rep) ? "yes" : "no") << "\n";

    // push the charge off the unit circle, then retract it back with sdr
    rl::Representation scaled = rep;
    for (std::size_t i = 0; i < scaled.matrices.size(); ++i)
        scaled.matrices[i] *= std::pow(2.0, 1.0 / static_cast<double>(scaled.spec.exponents[i]));
    rl::RelationCheck off = rl::verify_relations(scaled);
    rl::Representation back = rl::sdr_step(scaled, 1.0);
    rl::RelationCheck on = rl::verify_relations(back);
    std::cout << "scaled copy has |omega| = " << std::abs(*off.omega)
              << "; after a full sdr step |omega| = " << std::abs(*on.omega) << "\n";

    // the integer flow multiplies generator i by a primitive n_i-th root power
    rl::Representation turned = rl::z_flow(rep, 1);
    rl::RelationCheck turned_check = rl::verify_relations(turned);
    std::cout << "z-flow by k = 1 keeps the relations, residual "
              << turned_check.max_residual << "\n";

    // straight-line path in eigenvector coordinates onto the abelian locus
    std::vector<rl::Representation> path = rl::path_to_abelian(rep, 16);
    const rl::Representation& end = path.back();
    double commutator = (end.matrices[0] * end.matrices[1] -
                         end.matrices[1] * end.matrices[0])
                            .cwiseAbs()
                            .maxCoeff();
    std::cout << "path to the abelian locus: " << path.size()
              << " samples, endpoint commutator " << commutator << "\n";

    // double coset invariant of a unit determinant matrix survives torus moves
    rl::Rng rng(11);
    rl::ComplexMatrix g = rl::random_invertible(rng, 2);
    rl::ComplexMatrix a = g / std::sqrt(g.determinant());
    rl::Complex x = rl::double_coset_invariant(a);
    rl::Complex lambda(1.25, 0.5);
    rl::ComplexMatrix moved(2, 2);
    moved << a(0, 0) * lambda, a(0, 1) * lambda, a(1, 0) / lambda, a(1, 1) / lambda;
    rl::Complex y = rl::double_coset_invariant(moved);
    std::cout << "double coset invariant before " << x << " and after " << y
              << " a torus move\n";
    return 0;
}
