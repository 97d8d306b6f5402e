#pragma once

// Two open branches of the failed proof of box p -> inv dia inv p, root in
// the non-strict form. Steps of the inv rule are written out. In branch A the
// box pair is instance 0; in branch B the box pair is instance 0 and the
// diamond pair instance 1.
namespace kgtab::testing {

inline const char* failed_proof_branch_a = R"(
w:1:box p -> inv dia inv p <= c
c < 1
w:1:box p > c1
c1 <= c
w:1:inv dia inv p >= c1
w:1:inv dia inv p <= c1
w:1:dia inv p >= 1-c1
w:1:dia inv p <= 1-c1
w:1:box p = 1
w:1:dia inv p = t1@w:1
w R+ u > t0@w:1
u:1:inv p > t0@w:1
u:1:p < 1-t0@w:1
w R+ u <= t1@w:1
u:1:p < 1
u:1:p >= w R+ u
)";

inline const char* failed_proof_branch_b = R"(
w:1:box p -> inv dia inv p <= c
c < 1
w:1:box p > c1
c1 <= c
w:1:inv dia inv p >= c1
w:1:inv dia inv p <= c1
w:1:dia inv p >= 1-c1
w:1:dia inv p <= 1-c1
w:1:box p = t0@w:1
c1 < t0@w:1
u:1:p < t1@w:1
u:1:p < w R+ u
w:1:dia inv p = t1.1@w:1
w R+ x > t0.1@w:1
x:1:inv p > t0.1@w:1
x:1:p < 1-t0.1@w:1
w R+ x > t1.1@w:1
x:1:inv p <= t1.1@w:1
x:1:p >= 1-t1.1@w:1
u:1:p >= t0@w:1
x:1:p < t0@w:1
x:1:p >= w R+ x
w R+ u > t1.1@w:1
u:1:inv p <= t1.1@w:1
u:1:p >= 1-t1.1@w:1
)";

}  // namespace kgtab::testing
