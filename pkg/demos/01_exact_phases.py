#!/usr/bin/env python3
# Exact arithmetic with roots of unity: the amplitude domain everything
# else in the package is built on.  No floating point is involved in any
# decision; a value is zero exactly when the d-th cyclotomic polynomial
# divides its coefficient polynomial.

from kuniform import CycInt, cyclotomic_polynomial, from_int, root_power, zero_test

# zeta_4 is the imaginary unit.  Powers wrap around mod 4.
i = root_power(4, 1)
print("zeta_4        ->", i.coeffs)
print("zeta_4^2      ->", (i * i).coeffs, "(this is -1)")
print("zeta_4 * conj ->", (i * i.conjugate()).coeffs)

# The representation is unreduced on purpose: (1 + zeta_2) keeps both
# coefficients, and only the zero test knows that it vanishes.
v = from_int(2, 1) + root_power(2, 1)
print("\n1 + zeta_2 stored as", v.coeffs, "-> zero?", zero_test(v))

# Cyclotomic polynomials are computed by exact division and cached.
for d in (1, 2, 3, 4, 6, 12):
    print(f"Phi_{d}(x) coefficients (ascending):", cyclotomic_polynomial(d))

# The cancellation that makes the whole construction work: summing
# zeta_d^(a*x) over all x in Z_d gives zero for every nonzero a.
d = 6
for a in range(1, d):
    total = from_int(d, 0)
    for x in range(d):
        total = total + root_power(d, (a * x) % d)
    assert zero_test(total)
print(f"\nsum_x zeta_{d}^(a x) = 0 for every a in 1..{d-1}: confirmed")

# Sums with unbalanced coefficients do not cancel, and the zero test says so.
w = CycInt(3, (2, 1, 0))  # 2 + zeta_3
print("2 + zeta_3 zero?", zero_test(w))
