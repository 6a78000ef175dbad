#include <iostream>

#include "hopfv/algebras.hpp"

using namespace hopfv;

int main() {
    const int N = 4;
    PresentationPtr U = build_uzp31(N);
    TensorSpace sp = TensorSpace::plain(U);
    using namespace gen::uzp31;

    NCPolynomial k3 = NCPolynomial::generator(0, K3, N);
    NCPolynomial pp = NCPolynomial::generator(0, Pp, N);
    NCPolynomial prod = nc_multiply(k3, pp, sp);
    std::cout << "K3*P+ = " << poly_to_string(prod, sp) << "\n";

    NCPolynomial comm = nc_commutator(k3, pp, sp);
    std::cout << "[K3,P+] = " << poly_to_string(comm, sp) << "\n";

    // one Jacobi triple by hand
    NCPolynomial e1 = NCPolynomial::generator(0, E1, N);
    NCPolynomial f1 = NCPolynomial::generator(0, F1, N);
    NCPolynomial p1 = NCPolynomial::generator(0, P1, N);
    NCPolynomial jac = nc_commutator(e1, nc_commutator(f1, p1, sp), sp) +
                       nc_commutator(f1, nc_commutator(p1, e1, sp), sp) +
                       nc_commutator(p1, nc_commutator(e1, f1, sp), sp);
    std::cout << "jacobi(E1,F1,P1) zero: " << jac.is_zero() << "\n";

    HopfCheckConfig cfg;
    cfg.order = N;
    cfg.sample_monomials = 2;
    Report rep = check_hopf_axioms(U, cfg);
    std::cout << "hopf checks: " << rep.checks.size() << " failed: " << rep.failed_count() << "\n";
    for (const auto& c : rep.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << " terms=" << c.residual_terms << "\n";

    Report cas = check_casimir(N);
    std::cout << "casimir failed: " << cas.failed_count() << "\n";
    Report cy = check_classical_yang_baxter(2);
    std::cout << "cybe failed: " << cy.failed_count() << "\n";
    Report phi = check_phi_morphism(3);
    std::cout << "phi failed: " << phi.failed_count() << "\n";
    for (const auto& c : phi.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << "\n";
    Report cls = check_subalgebra_closure(3);
    std::cout << "closure failed: " << cls.failed_count() << "\n";

    PresentationPtr Fg = build_funzg_grouplike(N);
    HopfCheckConfig fcfg;
    fcfg.order = N;
    fcfg.sample_monomials = 2;
    Report frep = check_hopf_axioms(Fg, fcfg);
    std::cout << "grouplike hopf failed: " << frep.failed_count() << "\n";
    for (const auto& c : frep.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << " terms=" << c.residual_terms << "\n";

    PresentationPtr Fd = build_funzg(N, 3 + N);
    HopfCheckConfig dcfg;
    dcfg.order = N;
    dcfg.sample_monomials = 2;
    dcfg.compare_degree = 3;
    Report drep = check_hopf_axioms(Fd, dcfg);
    std::cout << "funzg hopf failed: " << drep.failed_count() << "\n";
    for (const auto& c : drep.checks)
        if (!c.pass) std::cout << "  FAIL " << c.id << " terms=" << c.residual_terms << "\n";
    return 0;
}
