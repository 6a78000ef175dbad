#include <iostream>
#include "hopfv/duality.hpp"
using namespace hopfv;
int main(int argc, char** argv) {
    int D = argc > 1 ? std::atoi(argv[1]) : 4;
    int N = argc > 2 ? std::atoi(argv[2]) : 6;
    auto t0 = std::chrono::steady_clock::now();
    Report r = check_t_matrix(D, N);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    int bad = 0;
    for (const auto& c : r.checks) {
        if (!c.pass) { ++bad; std::cout << "FAIL " << c.id << "\n"; }
    }
    std::cout << "tmatrix D=" << D << " N=" << N << ": " << r.checks.size()
              << " checks, failed " << bad << ", " << ms << "ms\n";
    return bad != 0;
}
