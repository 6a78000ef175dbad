#include <hopfv/dsl.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopfv;

static std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 5;
    int bad = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "pass " : "FAIL ") << what << "\n";
        if (!ok) ++bad;
    };

    {
        PresentationPtr p = parse_presentation(slurp("data/uzp31.alg"), N);
        PresentationPtr b = build_uzp31(N);
        check(presentations_equal(p, b), "uzp31 golden");
        PresentationPtr rt = parse_presentation(serialize_presentation(p), N);
        check(presentations_equal(rt, p), "uzp31 round-trip");
        // the parsed table must literally match where builders store the
        // defining form (spot check: the [K3,P+] series word by word)
        const NCPolynomial* c = p->commutator(gen::uzp31::K3, gen::uzp31::Pp);
        const NCPolynomial* cb = b->commutator(gen::uzp31::K3, gen::uzp31::Pp);
        check(c && cb && *c == *cb, "uzp31 [K3,P+] literal");
    }
    {
        PresentationPtr p = parse_presentation(slurp("data/uzg.alg"), N);
        check(presentations_equal(p, build_uzg(N)), "uzg golden");
        PresentationPtr rt = parse_presentation(serialize_presentation(p), N);
        check(presentations_equal(rt, p), "uzg round-trip");
    }
    {
        PresentationPtr p = parse_presentation(slurp("data/funzg.alg"), N, N);
        check(presentations_equal(p, build_funzg(N, N)), "funzg golden");
        PresentationPtr rt = parse_presentation(serialize_presentation(p), N, N);
        check(presentations_equal(rt, p), "funzg round-trip");
    }
    {
        // grouplike dual round-trips through the serializer (pair rules)
        PresentationPtr b = build_funzg_grouplike(N);
        PresentationPtr rt = parse_presentation(serialize_presentation(b), N);
        check(presentations_equal(rt, b), "funzg-grouplike round-trip");
    }
    {
        bool threw = false;
        try {
            parse_presentation("gen A order 0;\ncomm A B = 1;\n", N);
        } catch (const algebra_error& e) {
            threw = e.code() == errc::unknown_generator;
        }
        check(threw, "undeclared generator rejected");
        threw = false;
        try {
            parse_presentation("gen A order 0;\ngen B order 1;\ncomm B A = 1;\ncomm B A = z;\n", N);
        } catch (const algebra_error& e) {
            threw = e.code() == errc::duplicate_rule;
        }
        check(threw, "duplicate rule rejected");
        threw = false;
        try {
            parse_presentation("gen A order 0;\ncomm A = ;\n", N);
        } catch (const algebra_error& e) {
            threw = e.code() == errc::parse_error;
        }
        check(threw, "malformed statement rejected");
        threw = false;
        try {
            parse_presentation("gen A order 0;\ngen B order 1;\ncomm B A = exp(A);\n", N);
        } catch (const algebra_error& e) {
            threw = e.code() == errc::parse_error;
        }
        check(threw, "exp of grading-order-zero argument rejected");
        // empty relation block: every pair commutes
        PresentationPtr p = parse_presentation("algebra ab;\ngen A order 0;\ngen B order 1;\n", N);
        check(p->commutes(0, 1), "empty relation block commutes");
    }
    std::cout << (bad ? "DSL: FAIL\n" : "DSL: ok\n");
    return bad ? 1 : 0;
}
